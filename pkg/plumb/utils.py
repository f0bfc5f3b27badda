from fractions import Fraction

from straight.plugin import load as load_plugins


class PlumbError(Exception):
    """Base class of every domain error raised by the package."""
    pass


def load_plugin(parent_class, namespace, name=None, fallback=False):
    """
    Find a plugin class below `namespace` subclassing `parent_class`.

    When `name` is given only classes whose `name` attribute matches are
    considered. With `fallback` the parent namespace is searched as well.
    """
    def pick(classes):
        for cls in classes:
            if name is None or getattr(cls, 'name', None) == name:
                return cls

    classes = load_plugins(namespace,
                           subclasses=parent_class,
                           recurse=True)
    found = pick(classes)
    if found is None and fallback and '.' in namespace:
        namespace = '.'.join(namespace.split('.')[:-1])
        classes = load_plugins(namespace,
                               subclasses=parent_class,
                               recurse=True)
        found = pick(classes)
    return found


def parse_rational(text):
    """Accept ints, Fractions or `"p/q"` text."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError("not a rational: %r" % (text,))
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise ValueError("not a rational: %r" % (text,))


def format_rational(value):
    return str(Fraction(value))


def format_vector(values):
    return [format_rational(v) for v in values]
