# -*- coding: utf-8 -*-

"""
Open books on the boundary of a plumbing, as combinatorial data.

Each vertex v_i contributes a genus g_i surface S_i with |s_i + d_i|
boundary components; the page is the connected sum of the S_i along the
edges of the graph. Concave side (non-negative divisors): a negative twist
around every neck γ_e followed by a positive twist parallel to every
boundary component δ. Convex side (non-positive divisors): every twist is
positive.
"""

import logging
from collections import namedtuple

from plumb.graph import Mode, sign_class, SignClass
from plumb.policy import DEFAULT_NAMESPACE, distribute, load_policy
from plumb.utils import PlumbError


logger = logging.getLogger("plumb.openbook")


class SideMismatch(PlumbError): pass
class InconsistentPage(PlumbError): pass


Twist = namedtuple('Twist', 'curve sign')

PageInvariants = namedtuple('PageInvariants', 'genus boundary_count euler_characteristic')


class TwistDistribution(namedtuple('TwistDistribution', 'side values')):
    """s_{i,e} keyed by (vertex id, edge id) for one side."""

    __slots__ = ()

    def shifted(self):
        """q_{i,e} = s_{i,e} + 1 (concave) or p_{i,e} = -s_{i,e} - 1 (convex)."""
        if self.side is Mode.CONCAVE:
            return dict((key, s + 1) for key, s in self.values.items())
        return dict((key, -s - 1) for key, s in self.values.items())


class OpenBookDescription(namedtuple('OpenBookDescription',
                                     'side page_genus binding_count neck_curves '
                                     'boundary_curves monodromy pieces')):
    """
    Abstract page and monodromy.

    `pieces` holds (vertex id, genus, boundary components) for each S_i, kept
    for the Euler characteristic cross-check.
    """

    __slots__ = ()

    @property
    def neck_count(self):
        return len(self.neck_curves)

    def to_json(self):
        return {
            'side': self.side.value,
            'page': {'genus': self.page_genus, 'boundary': self.binding_count},
            'monodromy': [{'curve': t.curve, 'sign': t.sign} for t in self.monodromy],
        }


def _check_side(graph, side):
    cls = sign_class(graph)
    if side is Mode.CONCAVE:
        ok = cls.is_nonnegative
    else:
        ok = cls.is_nonpositive or cls is SignClass.ZERO
    if not ok:
        raise SideMismatch("a {0} divisor has no {1} open book".format(cls.value, side.value))
    return cls


def distribute_twists(graph, side, policy=None, namespace=DEFAULT_NAMESPACE):
    """
    Twist distribution for `side`; the default ``leading`` policy puts all
    boundary twists of a vertex on its first edge.
    """
    _check_side(graph, side)
    if policy is None or isinstance(policy, str):
        policy = load_policy(policy or 'leading', namespace)
    distribution = TwistDistribution(side, distribute(graph, policy))
    for key, value in distribution.shifted().items():
        if value < 0:
            raise SideMismatch("twist count {0} at {1} is negative on the {2} side".format(
                value, key, side.value))
    return distribution


def build_open_book(graph, side, policy=None, namespace=DEFAULT_NAMESPACE):
    distribution = distribute_twists(graph, side, policy, namespace)
    shifted = distribution.shifted()
    orientation = 1 if side is Mode.CONCAVE else -1
    sums = graph.degree_sums()

    necks = ['g:{0}'.format(eid) for eid in graph.edge_ids]
    boundary = []
    pieces = []
    for vertex, total in zip(graph.vertices, sums):
        count = orientation * total
        ends = [value for (vid, _), value in shifted.items() if vid == vertex.id]
        if ends and sum(ends) != count:
            raise InconsistentPage("twists at `{0}` sum to {1}, expected {2}".format(
                vertex.id, sum(ends), count))
        pieces.append((vertex.id, vertex.genus, count))
        boundary.extend('d:{0}:{1}'.format(vertex.id, n + 1) for n in range(count))

    neck_sign = -1 if side is Mode.CONCAVE else 1
    monodromy = [Twist(c, neck_sign) for c in necks] + [Twist(c, 1) for c in boundary]
    genus = sum(v.genus for v in graph.vertices) + graph.first_betti()
    book = OpenBookDescription(side, genus, len(boundary), tuple(necks), tuple(boundary),
                               tuple(monodromy), tuple(pieces))
    page_invariants(book)
    logger.info("{0} open book: page genus {1}, {2} binding components, {3} twists".format(
        side.value, genus, len(boundary), len(monodromy)))
    return book


def page_invariants(book):
    """(genus, boundary count, χ) after checking the Euler characteristic."""
    g, q = book.page_genus, book.binding_count
    chi = 2 - 2 * g - q
    l = book.neck_count
    expected = sum(2 - 2 * genus - count for _, genus, count in book.pieces) - 2 * l
    if chi != expected:
        raise InconsistentPage("page χ = {0} but the pieces give {1}".format(chi, expected))
    if q != sum(count for _, _, count in book.pieces):
        raise InconsistentPage("binding count {0} disagrees with the pieces".format(q))
    if len(book.monodromy) != l + q:
        raise InconsistentPage("monodromy has {0} twists, expected {1}".format(
            len(book.monodromy), l + q))
    return PageInvariants(g, q, chi)
