import os, sys, argparse, logging, importlib.util

from plumb.app import Application, ApplicationError
from plumb.moves import MalformedMove
from plumb.utils import PlumbError


EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class ArgumentError(Exception): pass


class ConfAction(argparse.Action):
    """Load a Python settings module given by file name."""

    def __call__(self, parser, namespace, filename, option_string=None):
        if not os.path.exists(filename):
            raise ArgumentError('The file `%s` does not exist.' % filename)

        basename = os.path.basename(filename)
        modulename = basename.split('.')[0]

        spec = importlib.util.spec_from_file_location(modulename, filename)
        if spec is None:
            raise ArgumentError('The file `%s` is not a Python module.' % filename)
        module = importlib.util.module_from_spec(spec)
        try:
            spec.loader.exec_module(module)
        except Exception as e:
            raise ArgumentError('The file `%s` could not be loaded: %s' % (filename, e))
        namespace.conf_module = module


class GraphFileAction(argparse.Action):
    def __call__(self, parser, namespace, filename, option_string=None):
        if not os.path.isfile(filename):
            raise ArgumentError('The file `%s` does not exist.' % filename)
        namespace.file = filename


class ErrorRaisingParser(argparse.ArgumentParser):
    def error(self, message):
        raise ArgumentError(message)


def add_global_flags(parser, suppress=False):
    """Flags valid on both sides of the subcommand; `suppress` leaves unset ones out."""
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument('--json', action='store_true', default=default(False),
                        help="emit the report as JSON")
    parser.add_argument('--seed', type=int, default=default(None),
                        help="seed for randomized tie-breaking (none is used by default)")
    parser.add_argument('--quiet', action='store_true', default=default(False),
                        help="only log errors")
    parser.add_argument('--verbose', action='store_true', default=default(False),
                        help="log debugging output")
    parser.add_argument('--conf', action=ConfAction, default=default(None),
                        help="Python settings module with a PLUMB dict")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    add_global_flags(common, suppress=True)

    parser = ErrorRaisingParser(
        prog='plumb',
        description="Combinatorics of symplectic plumbings and their boundaries")
    add_global_flags(parser)
    parser.set_defaults(conf_module=None)
    commands = parser.add_subparsers(dest='command', parser_class=ErrorRaisingParser)
    commands.required = True

    def command(name, help):
        sub = commands.add_parser(name, help=help, parents=[common])
        sub.add_argument('file', action=GraphFileAction, help="divisor description (JSON)")
        return sub

    command('analyze', "sign class, intersection matrix, inertia, circularity")
    gs = command('gs', "GS criterion and the parameters of the construction")
    gs.add_argument('--mode', choices=['concave', 'convex'], default='concave')
    gs.add_argument('--half-edge', dest='half_edges', action='append', metavar='VERTEX',
                    help="vertex carrying a half edge (repeatable)")
    for name, help in (('blowup', "apply blow-ups"), ('blowdown', "apply blow-downs")):
        sub = command(name, help)
        sub.add_argument('--move', dest='moves', action='append', required=True,
                         metavar='SPEC', help="e.g. toric_up:e1:w=1/2 (repeatable)")
    command('minimal', "minimal models under blow-downs")
    ob = command('openbook', "supporting open book of the boundary")
    ob.add_argument('--side', choices=['concave', 'convex'], default='concave')
    command('word', "word, monodromy and rotation of a cycle of spheres")
    command('tight', "universal tightness of the boundary torus bundle")
    command('dot', "Graphviz rendering")
    return parser


def get_args(argv):
    parser = build_parser()
    return parser.parse_args(argv)


def configure_logging(args):
    level = logging.WARNING
    if args.verbose:
        level = logging.DEBUG
    if args.quiet:
        level = logging.ERROR
    logger = logging.getLogger('plumb')
    logger.setLevel(level)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(name)s: %(levelname)s: %(message)s'))
        logger.addHandler(handler)


def run(argv, out=None):
    """Run one invocation; returns the exit code."""
    out = out if out is not None else sys.stdout
    try:
        args = get_args(argv)
    except ArgumentError as e:
        sys.stderr.write("plumb: error: %s\n" % e)
        return EXIT_USAGE
    configure_logging(args)
    try:
        app = Application(args)
        report = app.run()
    except (ApplicationError, MalformedMove) as e:
        sys.stderr.write("plumb: error: %s\n" % e)
        return EXIT_USAGE
    except PlumbError as e:
        sys.stderr.write("plumb: error: %s: %s\n" % (e.__class__.__name__, e))
        return EXIT_DOMAIN
    if args.json:
        out.write(report.dumps() + '\n')
    else:
        out.write(app.render_text(report) + '\n')
    return EXIT_OK


def main():
    return run(sys.argv[1:])

if __name__ == '__main__':
    sys.exit(main())
