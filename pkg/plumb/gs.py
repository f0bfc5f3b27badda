# -*- coding: utf-8 -*-

"""
The positive and negative GS criterion.

A divisor is concave when Q z = a has a solution with z > 0, a > 0 and
convex when it has one with z <= 0, a > 0. Both are decided exactly: strict
inequalities are traded for ">= 1" (the solution set is a cone, so any
strict solution scales into it) and the resulting system goes through the
exact phase-1 simplex.

Quantities that carry the factor 1/2π of the GS construction (z', x_{i,e})
are stored as rationals in units of 1/π, so z' = -z/2 here.
"""

import logging
from collections import deque, namedtuple
from fractions import Fraction

from plumb.graph import Mode, intersection_matrix, sign_class
from plumb.policy import DEFAULT_NAMESPACE, distribute, load_policy
from plumb.simplex import find_feasible
from plumb.utils import PlumbError


logger = logging.getLogger("plumb.gs")


class NotNonNegative(PlumbError): pass
class InternalStall(PlumbError): pass
class IsolatedVertexWithoutHalfEdge(PlumbError): pass
class CriterionFails(PlumbError): pass


class GSWitness(namedtuple('GSWitness', 'z a mode')):
    """Vectors z and a = Q z, in vertex order, for the given mode."""

    __slots__ = ()

    def verify(self, matrix):
        if tuple(matrix.apply(self.z)) != tuple(self.a):
            return False
        if any(x <= 0 for x in self.a):
            return False
        if self.mode is Mode.CONCAVE:
            return all(x > 0 for x in self.z)
        return all(x <= 0 for x in self.z)

    def scaled(self, c):
        c = Fraction(c)
        return GSWitness(tuple(c * x for x in self.z), tuple(c * x for x in self.a), self.mode)


GSEdgeData = namedtuple('GSEdgeData', 's_dist z_prime x')


def check_gs(graph, mode):
    """Witness for the positive (concave) or negative (convex) criterion, or None."""
    q = intersection_matrix(graph)
    k = q.dimension
    rows = [list(row) for row in q.rows]
    if mode is Mode.CONCAVE:
        # z = 1 + y:  Q y >= 1 - Q 1
        ones = q.apply([1] * k)
        y = find_feasible(rows, [1 - x for x in ones])
        if y is None:
            logger.info("positive GS criterion fails")
            return None
        z = tuple(1 + x for x in y)
    else:
        # z = -y:  -Q y >= 1
        y = find_feasible([[-x for x in row] for row in rows], [1] * k)
        if y is None:
            logger.info("negative GS criterion fails")
            return None
        z = tuple(-x for x in y)
    witness = GSWitness(tuple(Fraction(x) for x in z),
                        tuple(Fraction(x) for x in q.apply(z)), mode)
    assert witness.verify(q)
    logger.info("{0} witness z = {1}".format(mode.value, [str(x) for x in z]))
    return witness


def require_gs(graph, mode):
    """Like check_gs but raises CriterionFails instead of returning None."""
    witness = check_gs(graph, mode)
    if witness is None:
        name = "positive" if mode is Mode.CONCAVE else "negative"
        raise CriterionFails("{0} GS criterion fails: no {1} witness".format(name, mode.value))
    return witness


def _distances_from(q, sources):
    """Breadth-first distance of every vertex from `sources` along Q_il > 0."""
    k = q.dimension
    dist = dict((i, 0) for i in sources)
    queue = deque(sources)
    while queue:
        i = queue.popleft()
        for l in range(k):
            if l not in dist and l != i and q[i, l] > 0:
                dist[l] = dist[i] + 1
                queue.append(l)
    return dist


def nonnegative_witness(graph):
    """
    Constructive concave witness for a non-negative divisor.

    Start from z = (1,...,1) and let I be the set where a_i > 0. The zero
    entries are visited breadth-first from I (by distance, then index); each
    still-zero a_l is fixed by raising z_i by ε at its first neighbour i with
    a_i > 0. No positive entry is lost on the way.
    """
    cls = sign_class(graph)
    if not cls.is_nonnegative:
        raise NotNonNegative("divisor is {0}, not non-negative".format(cls.value))
    q = intersection_matrix(graph)
    k = q.dimension
    z = [Fraction(1)] * k
    a = list(q.apply(z))
    dist = _distances_from(q, [i for i in range(k) if a[i] > 0])
    zeros = [l for l in range(k) if a[l] == 0]
    unreached = [l for l in zeros if l not in dist]
    if unreached:
        raise InternalStall("no positive neighbour for zero entries {0}".format(unreached))
    steps = 0
    for l in sorted(zeros, key=lambda l: (dist[l], l)):
        if a[l] != 0:
            continue
        i = next((i for i in range(k) if i != l and a[i] > 0 and q[i, l] > 0), None)
        if i is None:
            raise InternalStall("no positive neighbour for zero entry {0}".format(l))
        if q[i, i] < 0:
            eps = a[i] / (2 * max(1, -q[i, i]))
        else:
            eps = Fraction(1)
        z[i] += eps
        a = list(q.apply(z))
        steps += 1
        logger.debug("perturbed z[{0}] by {1} to reach a[{2}] = {3}".format(i, eps, l, a[l]))
    witness = GSWitness(tuple(z), tuple(a), Mode.CONCAVE)
    assert witness.verify(q)
    logger.info("constructive witness after {0} perturbations".format(steps))
    return witness


def gs_edge_data(graph, z, policy=None, half_edges=(), namespace=DEFAULT_NAMESPACE):
    """
    Combinatorial data of the GS construction for witness vector `z`.

    :Parameters:
        graph : DecoratedGraph
        z : sequence of rationals in vertex order
        policy : BaseTwistPolicy or policy name, default ``'floor'``
        half_edges : vertex ids carrying a half edge ẽ (keyed ``h:<id>``)

    :returns: GSEdgeData with s_dist and x keyed by (vertex id, edge id) and
        z' keyed by vertex id, in units of 1/π.
    """
    if policy is None or isinstance(policy, str):
        policy = load_policy(policy or 'floor', namespace)
    half_edges = set(half_edges)
    for vertex in graph.vertices:
        if graph.valence(vertex.id) == 0 and vertex.id not in half_edges:
            raise IsolatedVertexWithoutHalfEdge(
                "vertex `{0}` has no edges and no half edge".format(vertex.id))

    z_prime = dict((vid, -Fraction(zi) / 2) for vid, zi in zip(graph.vertex_ids, z))
    s_dist = distribute(graph, policy)
    for vid in sorted(half_edges):
        vertex = graph.vertex(vid)
        if graph.valence(vid) == 0:
            s_dist[(vid, 'h:' + vid)] = vertex.self_intersection
        else:
            s_dist[(vid, 'h:' + vid)] = 0

    x = {}
    for (vid, eid), s_ie in s_dist.items():
        if eid.startswith('h:'):
            x[(vid, eid)] = -s_ie * z_prime[vid]
            continue
        u, v = graph.edge(eid)
        other = v if u == vid else u
        x[(vid, eid)] = -s_ie * z_prime[vid] - z_prime[other]
    return GSEdgeData(s_dist, z_prime, x)
