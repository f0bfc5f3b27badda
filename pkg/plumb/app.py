# -*- coding: utf-8 -*-

import hashlib
import json
import logging
from collections import namedtuple

from plumb.display import DotDisplay, TextDisplay
from plumb.graph import (AugmentedGraph, Mode, inertia, intersection_matrix,
                         is_circular_spherical, sign_class, validate_augmented,
                         validate_graph)
from plumb.gs import gs_edge_data, require_gs
from plumb.moves import (DEFAULT_MAX_STATES, apply_move, is_toric_minimal, minimal_models,
                         nonnegative_representative, parse_move)
from plumb.openbook import build_open_book, page_invariants
from plumb.policy import DEFAULT_NAMESPACE
from plumb.tight import NotCircular, classify_tightness
from plumb.torus import bundle_type, max_rotation, phi, twisting_floor, word_of_divisor
from plumb.utils import format_rational, format_vector


logger = logging.getLogger("plumb.app")


class ApplicationError(Exception): pass


DEFAULT_SETTINGS = {
    'namespace': DEFAULT_NAMESPACE,
    'gs_policy': 'floor',
    'openbook_policy': 'leading',
    'max_states': DEFAULT_MAX_STATES,
}


class Report(namedtuple('Report', 'command input_digest results warnings')):
    __slots__ = ()

    def to_json(self):
        return {
            'command': self.command,
            'input_digest': self.input_digest,
            'results': self.results,
            'warnings': list(self.warnings),
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=False)


def _end_key(key):
    vid, eid = key
    return '{0}/{1}'.format(vid, eid)


class Application(object):

    COMMANDS = ('analyze', 'gs', 'blowup', 'blowdown', 'minimal',
                'openbook', 'word', 'tight', 'dot')

    def __init__(self, args):
        self.args = args
        self.warnings = []
        self._initialize_settings()
        self._load_input()

    def _initialize_settings(self):
        self.settings = dict(DEFAULT_SETTINGS)
        module = getattr(self.args, 'conf_module', None)
        if module is None:
            return
        if not hasattr(module, 'PLUMB'):
            raise ApplicationError("conf contains no `PLUMB` settings")
        conf = getattr(module, 'PLUMB')
        if not isinstance(conf, dict):
            raise ApplicationError("PLUMB settings must be a dict")
        unknown = sorted(set(conf) - set(DEFAULT_SETTINGS))
        if unknown:
            raise ApplicationError("unknown PLUMB settings: {0}".format(', '.join(unknown)))
        self.settings.update(conf)
        if not isinstance(self.settings['max_states'], int) or self.settings['max_states'] < 1:
            raise ApplicationError("PLUMB['max_states'] must be a positive integer")
        logger.debug("settings: {0}".format(self.settings))

    def _load_input(self):
        try:
            with open(self.args.file, 'rb') as f:
                data = f.read()
        except (IOError, OSError) as e:
            raise ApplicationError("cannot read `{0}`: {1}".format(self.args.file, e))
        self.digest = hashlib.sha256(data).hexdigest()
        try:
            raw = json.loads(data.decode('utf-8'))
        except (ValueError, UnicodeDecodeError) as e:
            raise ApplicationError("`{0}` is not valid JSON: {1}".format(self.args.file, e))
        if isinstance(raw, dict) and 'areas' in raw:
            self.augmented = validate_augmented(raw)
            self.graph = self.augmented.graph
        else:
            self.augmented = None
            self.graph = validate_graph(raw)

    def echo(self):
        options = {}
        for name in ('mode', 'side', 'moves', 'half_edges', 'seed'):
            value = getattr(self.args, name, None)
            if value is not None:
                options[name] = value
        return {'name': self.args.command, 'options': options}

    def run(self):
        command = self.args.command
        if command not in self.COMMANDS:
            raise ApplicationError("unknown command `{0}`".format(command))
        results = getattr(self, 'do_' + command)()
        return Report(self.echo(), self.digest, results, tuple(self.warnings))

    # -- subcommands -- #

    def do_analyze(self):
        q = intersection_matrix(self.graph)
        b = inertia(q)
        cycle = is_circular_spherical(self.graph)
        results = {
            'graph': self.graph.to_raw(),
            'sign_class': sign_class(self.graph).value,
            'degree_sums': list(self.graph.degree_sums()),
            'intersection_matrix': q.as_lists(),
            'inertia': {'b_plus': b.b_plus, 'b_zero': b.b_zero, 'b_minus': b.b_minus},
            'first_betti': self.graph.first_betti(),
            'circular': None if cycle is None else [v.id for v in cycle],
        }
        if self.augmented is not None:
            results['areas'] = self.augmented.to_raw()['areas']
        return results

    def _half_edges(self):
        half_edges = list(getattr(self.args, 'half_edges', None) or [])
        for vid in self.graph.vertex_ids:
            if self.graph.valence(vid) == 0 and vid not in half_edges:
                half_edges.append(vid)
                self.warnings.append("half edge added at isolated vertex `{0}`".format(vid))
        return half_edges

    def do_gs(self):
        mode = Mode(self.args.mode)
        witness = require_gs(self.graph, mode)
        data = gs_edge_data(self.graph, witness.z, self.settings['gs_policy'],
                            self._half_edges(), self.settings['namespace'])
        return {
            'mode': mode.value,
            'z': format_vector(witness.z),
            'a': format_vector(witness.a),
            'z_prime': dict((vid, format_rational(x)) for vid, x in data.z_prime.items()),
            's_dist': dict((_end_key(k), v) for k, v in data.s_dist.items()),
            'x': dict((_end_key(k), format_rational(v)) for k, v in data.x.items()),
            'units': '1/pi',
        }

    def _moves(self, up):
        records = [parse_move(spec) for spec in (self.args.moves or [])]
        if not records:
            raise ApplicationError("no --move given")
        for record in records:
            if record.kind.is_up != up:
                raise ApplicationError("`{0}` is not a blow-{1}".format(
                    record, 'up' if up else 'down'))
        target = self.augmented if self.augmented is not None else self.graph
        for record in records:
            target = apply_move(target, record)
            logger.info("applied {0}".format(record))
        graph = target.graph if isinstance(target, AugmentedGraph) else target
        return {
            'moves': [str(record) for record in records],
            'graph': target.to_raw(),
            'sign_class': sign_class(graph).value,
            'inertia': dict(inertia(intersection_matrix(graph))._asdict()),
        }

    def do_blowup(self):
        return self._moves(True)

    def do_blowdown(self):
        return self._moves(False)

    def do_minimal(self):
        max_states = self.settings['max_states']
        models = minimal_models(self.graph, max_states)
        representative = nonnegative_representative(self.graph, max_states)
        return {
            'minimal_models': [{'graph': g.to_raw(), 'sign_class': sign_class(g).value,
                                'toric_minimal': is_toric_minimal(g)} for g in models],
            'nonnegative_representative':
                None if representative is None else representative.to_raw(),
        }

    def do_openbook(self):
        side = Mode(self.args.side)
        book = build_open_book(self.graph, side, self.settings['openbook_policy'],
                               self.settings['namespace'])
        results = book.to_json()
        results['euler_characteristic'] = page_invariants(book).euler_characteristic
        return results

    def do_word(self):
        cycle = is_circular_spherical(self.graph)
        if cycle is None:
            raise NotCircular("divisor is not a cycle of spheres")
        word = word_of_divisor([v.self_intersection for v in cycle])
        matrix = phi(word)
        shift, value = max_rotation(word)
        return {
            'order': [v.id for v in cycle],
            'word': str(word),
            'matrix': str(matrix),
            'trace': matrix.trace,
            'bundle_type': str(bundle_type(matrix)),
            'max_rotation': value.to_json(),
            'max_rotation_word': str(word.rotated(shift)),
            'twisting_floor': twisting_floor(value),
        }

    def do_tight(self):
        return classify_tightness(self.graph, self.settings['max_states']).to_json()

    def do_dot(self):
        areas = None
        if self.augmented is not None:
            areas = self.augmented.to_raw()['areas']
        return {'dot': DotDisplay().render(self.graph, areas)}

    def render_text(self, report):
        """Human readable output for `report`."""
        if report.command['name'] == 'dot':
            return report.results['dot'].rstrip('\n')
        text = TextDisplay()
        lines = ['{0} ({1})'.format(report.command['name'], report.input_digest[:12])]
        if report.command['name'] == 'analyze':
            lines.append(text.graph(self.graph))
            lines.append(text.intersection(self.graph))
        lines.append(text.record(report.results))
        return '\n'.join(lines)
