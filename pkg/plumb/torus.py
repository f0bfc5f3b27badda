# -*- coding: utf-8 -*-

"""
Word calculus for torus bundles.

Words are sequences over a, a⁻¹, b, b⁻¹ (stored as the characters
``a A b B``, capitals being inverses). Φ sends a to [[1,1],[0,1]] and b to
[[1,0],[-1,1]].

The total angle change c_w of (1,0)ᵀ, obtained by applying the letters from
last to first, is kept exactly: every letter turns a vector by strictly
less than π/2 (x² ± xy + y² > 0), so the path crosses at most one
quadrant boundary per letter and c_w = K·π/2 + (residual(end) -
residual(start)) with the residuals compared by a cross product.
"""

import enum
import logging
import math
import re
from collections import namedtuple

from plumb.utils import PlumbError
from plumb.vec2d import Vec2D


logger = logging.getLogger("plumb.torus")


class NotApplicable(PlumbError): pass
class ExponentNegative(PlumbError): pass
class TooShort(PlumbError): pass
class NotUnimodular(PlumbError): pass
class MalformedWord(PlumbError): pass


A, A_INV, B, B_INV = 'a', 'A', 'b', 'B'
LETTERS = (A, A_INV, B, B_INV)
INVERSE = {A: A_INV, A_INV: A, B: B_INV, B_INV: B}


class Word(tuple):
    """Immutable sequence of letters."""

    def __new__(cls, letters=()):
        letters = tuple(letters)
        for letter in letters:
            if letter not in INVERSE:
                raise MalformedWord("unknown letter {0!r}".format(letter))
        return super(Word, cls).__new__(cls, letters)

    @classmethod
    def parse(cls, text):
        """Read ``b^-3 a^-1 b^-2 a^-1``; plain ``a`` means exponent 1."""
        letters = []
        for token in text.split():
            match = re.match(r'^([ab])(?:\^(-?\d+))?$', token)
            if match is None:
                raise MalformedWord("bad token `{0}`".format(token))
            generator, exponent = match.group(1), int(match.group(2) or 1)
            letter = generator if exponent > 0 else INVERSE[generator]
            letters.extend([letter] * abs(exponent))
        return cls(letters)

    def runs(self):
        result = []
        for letter in self:
            if result and result[-1][0] == letter:
                result[-1][1] += 1
            else:
                result.append([letter, 1])
        return [(letter, count) for letter, count in result]

    def __str__(self):
        tokens = []
        for letter, count in self.runs():
            exponent = count if letter in (A, B) else -count
            generator = letter.lower()
            tokens.append(generator if exponent == 1 else '{0}^{1}'.format(generator, exponent))
        return ' '.join(tokens)

    def __add__(self, other):
        return Word(tuple(self) + tuple(other))

    def __getitem__(self, key):
        result = super(Word, self).__getitem__(key)
        if isinstance(key, slice):
            return Word(result)
        return result

    def rotated(self, k):
        if not self:
            return self
        k %= len(self)
        return self[k:] + self[:k]

    def is_negative(self):
        """Only a⁻¹ and b⁻¹ occur."""
        return all(letter in (A_INV, B_INV) for letter in self)

    def __repr__(self):
        return '<Word {0}>'.format(str(self) or '1')


class SL2Matrix(namedtuple('SL2Matrix', 'p q r s')):
    """[[p, q], [r, s]] with determinant 1."""

    __slots__ = ()

    def __new__(cls, p, q, r, s):
        if p * s - q * r != 1:
            raise NotUnimodular("[[{0},{1}],[{2},{3}]] has determinant {4}".format(
                p, q, r, s, p * s - q * r))
        return super(SL2Matrix, cls).__new__(cls, p, q, r, s)

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def __mul__(self, other):
        return SL2Matrix(self.p * other.p + self.q * other.r,
                         self.p * other.q + self.q * other.s,
                         self.r * other.p + self.s * other.r,
                         self.r * other.q + self.s * other.s)

    def __neg__(self):
        return SL2Matrix(-self.p, -self.q, -self.r, -self.s)

    def inverse(self):
        return SL2Matrix(self.s, -self.q, -self.r, self.p)

    @property
    def trace(self):
        return self.p + self.s

    def apply(self, v):
        return Vec2D(self.p * v.x + self.q * v.y, self.r * v.x + self.s * v.y)

    def __str__(self):
        return '[[{0},{1}],[{2},{3}]]'.format(*self)


GENERATORS = {
    A: SL2Matrix(1, 1, 0, 1),
    A_INV: SL2Matrix(1, -1, 0, 1),
    B: SL2Matrix(1, 0, -1, 1),
    B_INV: SL2Matrix(1, 0, 1, 1),
}


def phi(word):
    """Left-to-right product of the letter images; Φ(empty) = identity."""
    result = SL2Matrix.identity()
    for letter in word:
        result = result * GENERATORS[letter]
    return result


def word_of_divisor(s_values):
    """w(D) = b^(-2-s_1) a⁻¹ ... b^(-2-s_l) a⁻¹ for a cycle of spheres."""
    s_values = list(s_values)
    if len(s_values) < 2:
        raise TooShort("a circular divisor needs at least two spheres")
    letters = []
    for i, s in enumerate(s_values):
        if s < -2:
            raise ExponentNegative("s_{0} = {1} < -2".format(i + 1, s))
        letters.extend([B_INV] * (2 + s))
        letters.append(A_INV)
    return Word(letters)


# -- rewriting -- #

CancelPair = namedtuple('CancelPair', 'position')
InsertPair = namedtuple('InsertPair', 'position letter')
CyclicPermute = namedtuple('CyclicPermute', 'shift')
Braid = namedtuple('Braid', 'site')

BRAID_LEFT = Word((B_INV, A_INV, B_INV))
BRAID_RIGHT = Word((A_INV, B_INV, A_INV))


def rewrite(word, step):
    word = Word(word)
    if isinstance(step, CancelPair):
        i = step.position
        if not 0 <= i < len(word) - 1 or INVERSE[word[i]] != word[i + 1]:
            raise NotApplicable("no canceling pair at {0} in `{1}`".format(i, word))
        return word[:i] + word[i + 2:]
    if isinstance(step, InsertPair):
        i = step.position
        if not 0 <= i <= len(word) or step.letter not in INVERSE:
            raise NotApplicable("cannot insert at {0}".format(i))
        return word[:i] + Word((step.letter, INVERSE[step.letter])) + word[i:]
    if isinstance(step, CyclicPermute):
        return word.rotated(step.shift)
    if isinstance(step, Braid):
        i = step.site
        piece = word[i:i + 3]
        if i < 0 or len(piece) != 3:
            raise NotApplicable("no braid site at {0} in `{1}`".format(i, word))
        if piece == BRAID_LEFT:
            return word[:i] + BRAID_RIGHT + word[i + 3:]
        if piece == BRAID_RIGHT:
            return word[:i] + BRAID_LEFT + word[i + 3:]
        raise NotApplicable("no braid site at {0} in `{1}`".format(i, word))
    raise NotApplicable("unknown rewrite step {0!r}".format(step))


def braid_sites(word):
    return [i for i in range(len(word) - 2) if word[i:i + 3] in (BRAID_LEFT, BRAID_RIGHT)]


# -- rotation -- #

class RotationValue(namedtuple('RotationValue', 'quarter_crossings start end float_value')):
    """
    c_w = K·π/2 + ρ with ρ = residual(end) - residual(start) in (-π/2, π/2).

    `float_value` is a display approximation; comparisons never use it.
    """

    __slots__ = ()

    def _residual_order(self):
        """sign of ρ"""
        s = self.start.to_first_quadrant()
        e = self.end.to_first_quadrant()
        c = s.cross(e)
        return (c > 0) - (c < 0)

    def at_least(self, m):
        """c_w >= m·π/2"""
        k = self.quarter_crossings
        return k > m or (k == m and self._residual_order() >= 0)

    def exceeds(self, m):
        """c_w > m·π/2"""
        k = self.quarter_crossings
        return k > m or (k == m and self._residual_order() > 0)

    def equals(self, m):
        return self.at_least(m) and not self.exceeds(m)

    def quarter_floor(self):
        """largest n with n·π/2 <= c_w"""
        k = self.quarter_crossings
        return k if self._residual_order() >= 0 else k - 1

    def to_json(self):
        return {
            'quarter_crossings': self.quarter_crossings,
            'start': list(self.start.as_tuple()),
            'end': list(self.end.as_tuple()),
            'radians': round(self.float_value, 12),
        }


def rotation_path(word, start=None):
    """Vectors visited when applying the letters from last to first."""
    v = start if start is not None else Vec2D(1, 0)
    path = [v]
    for letter in reversed(word):
        v = GENERATORS[letter].apply(v)
        path.append(v)
    return path


def rotation(word):
    path = rotation_path(word)
    k = 0
    angle = 0.0
    for before, after in zip(path, path[1:]):
        step = (after.quadrant() - before.quadrant()) % 4
        assert step != 2, 'a letter turned a vector by more than a quarter'
        k += {0: 0, 1: 1, 3: -1}[step]
        angle += before.angle_to(after)
    value = RotationValue(k, path[0], path[-1], angle)
    logger.debug("rotation of `{0}`: K={1}, end={2}".format(word, k, path[-1].as_tuple()))
    return value


def twisting_floor(value):
    """n with nπ <= c_w < (n+1)π"""
    return value.quarter_floor() // 2


def max_rotation(word):
    """(shift, RotationValue) maximizing c_w over all cyclic permutations."""
    word = Word(word)
    best = None
    for shift in range(max(1, len(word))):
        value = rotation(word.rotated(shift))
        if best is None or _greater(value, best[1]):
            best = (shift, value)
    return best


def _greater(first, second):
    """c_first > c_second for two values starting at (1,0)."""
    assert first.start == second.start == Vec2D(1, 0)
    if first.quarter_floor() != second.quarter_floor():
        return first.quarter_floor() > second.quarter_floor()
    # same quarter: the residual is the angle of the end inside its quadrant
    return second.end.to_first_quadrant().cross(first.end.to_first_quadrant()) > 0


# -- bundle type -- #

class BundleKind(enum.Enum):
    IDENTITY = 'Identity'
    MINUS_IDENTITY = 'MinusIdentity'
    ELLIPTIC = 'Elliptic'
    PARABOLIC = 'Parabolic'
    NEGATIVE_PARABOLIC = 'NegativeParabolic'
    HYPERBOLIC = 'Hyperbolic'


class BundleType(namedtuple('BundleType', 'kind n')):
    __slots__ = ()

    def __str__(self):
        if self.n is None:
            return self.kind.value
        return '{0}({1})'.format(self.kind.value, self.n)


def _bezout(a, b):
    """(x, y) with a·x + b·y = gcd(a, b)"""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        t = a // b
        a, b = b, a - t * b
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    if a < 0:
        x0, y0 = -x0, -y0
    return x0, y0


def parabolic_invariant(matrix):
    """
    n with `matrix` conjugate to [[1,n],[0,1]]; needs trace 2.

    Takes a primitive fixed vector v, completes it to a basis (v, u) of
    determinant 1 and reads A u = u + n v.
    """
    assert matrix.trace == 2
    rows = [(matrix.p - 1, matrix.q), (matrix.r, matrix.s - 1)]
    alpha, beta = next((row for row in rows if row != (0, 0)), (0, 0))
    if (alpha, beta) == (0, 0):
        return 0
    g = math.gcd(alpha, beta)
    v = Vec2D(beta // g, -alpha // g)
    x, y = _bezout(v.x, v.y)
    u = Vec2D(-y, x)
    assert v.cross(u) == 1
    return matrix.apply(u).cross(u)


def bundle_type(matrix):
    if not isinstance(matrix, SL2Matrix):
        matrix = SL2Matrix(*matrix)
    t = matrix.trace
    if abs(t) > 2:
        return BundleType(BundleKind.HYPERBOLIC, None)
    if abs(t) < 2:
        return BundleType(BundleKind.ELLIPTIC, None)
    if matrix == SL2Matrix.identity():
        return BundleType(BundleKind.IDENTITY, None)
    if matrix == -SL2Matrix.identity():
        return BundleType(BundleKind.MINUS_IDENTITY, None)
    if t == 2:
        return BundleType(BundleKind.PARABOLIC, parabolic_invariant(matrix))
    return BundleType(BundleKind.NEGATIVE_PARABOLIC, parabolic_invariant(-matrix))


def parse_matrix(text):
    match = re.match(r'^\s*\[\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,'
                     r'\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\]\s*$', text)
    if match is None:
        raise MalformedWord("bad matrix `{0}`".format(text))
    return SL2Matrix(*(int(x) for x in match.groups()))
