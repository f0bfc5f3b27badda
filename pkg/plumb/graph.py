# -*- coding: utf-8 -*-

"""
Decorated divisor graphs.

A divisor D = C_1 ∪ ... ∪ C_k is recorded as a graph with one vertex per
component, decorated by its genus g_i and self-intersection s_i, and one
edge per transverse intersection point. Parallel edges are allowed, loops
are not.

The module provides the intersection matrix Q_D, its exact inertia and the
sign classification by D·C_i = s_i + d_i used throughout the package.
"""

import enum
import logging
from collections import namedtuple
from fractions import Fraction

import networkx as nx

from plumb.utils import PlumbError, parse_rational


logger = logging.getLogger("plumb.graph")


class MalformedGraph(PlumbError): pass
class DuplicateId(PlumbError): pass
class LoopEdge(PlumbError): pass
class Disconnected(PlumbError): pass
class UnknownVertexInEdge(PlumbError): pass
class NegativeGenus(PlumbError): pass
class UnknownVertex(PlumbError): pass
class UnknownEdge(PlumbError): pass
class NonPositiveArea(PlumbError): pass
class WitnessMismatch(PlumbError): pass


class Mode(enum.Enum):
    """Which GS criterion / which side of the plumbing."""
    CONCAVE = 'concave'
    CONVEX = 'convex'


class SignClass(enum.Enum):
    NON_NEGATIVE = 'NonNegative'
    NON_POSITIVE = 'NonPositive'
    POSITIVE = 'Positive'
    NEGATIVE = 'Negative'
    MIXED = 'Mixed'
    ZERO = 'Zero'

    @property
    def is_nonnegative(self):
        return self in (SignClass.NON_NEGATIVE, SignClass.POSITIVE)

    @property
    def is_nonpositive(self):
        return self in (SignClass.NON_POSITIVE, SignClass.NEGATIVE)


VertexData = namedtuple('VertexData', 'id genus self_intersection')

Inertia = namedtuple('Inertia', 'b_plus b_zero b_minus')


class DecoratedGraph(object):
    """
    Immutable decorated multigraph.

    :Parameters:
        vertices : sequence of VertexData
            ordered; the order fixes rows of the intersection matrix
        edges : sequence of (id, id) pairs
            edge k gets the identifier ``e{k+1}``
    """

    __slots__ = ('_vertices', '_edges', '_index')

    def __init__(self, vertices, edges):
        vertices = tuple(VertexData(*v) for v in vertices)
        edges = tuple((u, v) for u, v in edges)
        index = {}
        for position, vertex in enumerate(vertices):
            if vertex.id in index:
                raise DuplicateId("vertex id `{0}` used twice".format(vertex.id))
            if vertex.genus < 0:
                raise NegativeGenus("vertex `{0}` has genus {1}".format(vertex.id, vertex.genus))
            index[vertex.id] = position
        if not vertices:
            raise MalformedGraph("a divisor needs at least one component")
        for k, (u, v) in enumerate(edges):
            for end in (u, v):
                if end not in index:
                    raise UnknownVertexInEdge(
                        "edge e{0} refers to unknown vertex `{1}`".format(k + 1, end))
            if u == v:
                raise LoopEdge("edge e{0} joins `{1}` to itself".format(k + 1, u))
        self._vertices = vertices
        self._edges = edges
        self._index = index
        if not nx.is_connected(self.to_networkx()):
            raise Disconnected("the divisor graph is not connected")

    # -- access -- #
    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def vertex_ids(self):
        return tuple(v.id for v in self._vertices)

    @property
    def edge_ids(self):
        return tuple(edge_id(k) for k in range(len(self._edges)))

    def __len__(self):
        return len(self._vertices)

    def index_of(self, vid):
        try:
            return self._index[vid]
        except KeyError:
            raise UnknownVertex("no vertex `{0}`".format(vid))

    def vertex(self, vid):
        return self._vertices[self.index_of(vid)]

    def edge_index(self, eid):
        if isinstance(eid, str) and eid.startswith('e') and eid[1:].isdigit():
            k = int(eid[1:]) - 1
            if 0 <= k < len(self._edges):
                return k
        raise UnknownEdge("no edge `{0}`".format(eid))

    def edge(self, eid):
        return self._edges[self.edge_index(eid)]

    def incident_edges(self, vid):
        """(edge id, other endpoint) for each edge at `vid`, in edge order."""
        self.index_of(vid)
        incident = []
        for k, (u, v) in enumerate(self._edges):
            if u == vid:
                incident.append((edge_id(k), v))
            elif v == vid:
                incident.append((edge_id(k), u))
        return incident

    def valence(self, vid):
        return len(self.incident_edges(vid))

    def neighbors(self, vid):
        return [other for _, other in self.incident_edges(vid)]

    def degree_sums(self):
        """s_i + d_i = D·C_i for every vertex, in vertex order."""
        sums = [v.self_intersection for v in self._vertices]
        for u, v in self._edges:
            sums[self._index[u]] += 1
            sums[self._index[v]] += 1
        return tuple(sums)

    def first_betti(self):
        return len(self._edges) - len(self._vertices) + 1

    def with_self_intersections(self, changes):
        """Copy with s_i shifted by `changes[id]`."""
        vertices = [v._replace(self_intersection=v.self_intersection + changes.get(v.id, 0))
                    for v in self._vertices]
        return DecoratedGraph(vertices, self._edges)

    def fresh_vertex_id(self, prefix='E'):
        n = 1
        while '{0}{1}'.format(prefix, n) in self._index:
            n += 1
        return '{0}{1}'.format(prefix, n)

    def to_networkx(self):
        g = nx.MultiGraph()
        for v in self._vertices:
            g.add_node(v.id, genus=v.genus, self_intersection=v.self_intersection,
                       label='{0}/{1}'.format(v.genus, v.self_intersection))
        for k, (u, v) in enumerate(self._edges):
            g.add_edge(u, v, key=edge_id(k))
        return g

    def to_raw(self):
        return {
            'vertices': [{'id': v.id, 'genus': v.genus,
                          'self_intersection': v.self_intersection}
                         for v in self._vertices],
            'edges': [[u, v] for u, v in self._edges],
        }

    def __eq__(self, other):
        if isinstance(other, DecoratedGraph):
            return self._vertices == other._vertices and self._edges == other._edges
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        vs = ', '.join('{0}({1},{2})'.format(v.id, v.self_intersection, v.genus)
                       for v in self._vertices)
        es = ', '.join('{0}-{1}'.format(u, v) for u, v in self._edges)
        return '<DecoratedGraph [{0}] [{1}]>'.format(vs, es)


def edge_id(k):
    return 'e{0}'.format(k + 1)


def cycle_graph(s_values, prefix='v'):
    """
    Circular spherical divisor with the given self-intersections, in order.

    A length 2 cycle gets two parallel edges; a single vertex is returned
    without edges.
    """
    s_values = list(s_values)
    ids = ['{0}{1}'.format(prefix, i + 1) for i in range(len(s_values))]
    vertices = [VertexData(vid, 0, s) for vid, s in zip(ids, s_values)]
    if len(ids) == 1:
        edges = []
    elif len(ids) == 2:
        edges = [(ids[0], ids[1]), (ids[0], ids[1])]
    else:
        edges = [(ids[i], ids[(i + 1) % len(ids)]) for i in range(len(ids))]
    return DecoratedGraph(vertices, edges)


def chain_graph(s_values, prefix='v', genera=None):
    s_values = list(s_values)
    genera = list(genera) if genera is not None else [0] * len(s_values)
    ids = ['{0}{1}'.format(prefix, i + 1) for i in range(len(s_values))]
    vertices = [VertexData(vid, g, s) for vid, g, s in zip(ids, genera, s_values)]
    edges = [(ids[i], ids[i + 1]) for i in range(len(ids) - 1)]
    return DecoratedGraph(vertices, edges)


def validate_graph(raw):
    """Build a DecoratedGraph from the parsed JSON description."""
    if not isinstance(raw, dict):
        raise MalformedGraph("graph description must be an object")
    try:
        raw_vertices = raw['vertices']
    except KeyError:
        raise MalformedGraph("graph description has no `vertices`")
    raw_edges = raw.get('edges', [])
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise MalformedGraph("`vertices` and `edges` must be lists")

    vertices = []
    for item in raw_vertices:
        try:
            vid = item['id']
            genus = item.get('genus', 0)
            s = item['self_intersection']
        except (KeyError, TypeError, AttributeError):
            raise MalformedGraph("bad vertex entry {0!r}".format(item))
        if not isinstance(vid, str) or not _is_int(genus) or not _is_int(s):
            raise MalformedGraph("bad vertex entry {0!r}".format(item))
        vertices.append(VertexData(vid, genus, s))

    edges = []
    for item in raw_edges:
        if not isinstance(item, (list, tuple)) or len(item) != 2 \
                or not all(isinstance(end, str) for end in item):
            raise MalformedGraph("bad edge entry {0!r}".format(item))
        edges.append((item[0], item[1]))

    graph = DecoratedGraph(vertices, edges)
    logger.debug("validated graph with {0} vertices and {1} edges".format(
        len(vertices), len(edges)))
    return graph


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


class SymmetricIntMatrix(object):
    """Square symmetric integer matrix, stored as a tuple of row tuples."""

    __slots__ = ('_rows',)

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        k = len(rows)
        for i, row in enumerate(rows):
            if len(row) != k:
                raise ValueError("matrix is not square")
            for j in range(i):
                if row[j] != rows[j][i]:
                    raise ValueError("matrix is not symmetric at ({0},{1})".format(i, j))
        self._rows = rows

    @property
    def dimension(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, key):
        i, j = key
        return self._rows[i][j]

    def apply(self, vector):
        return tuple(sum(q * x for q, x in zip(row, vector)) for row in self._rows)

    def congruent(self, p):
        """P^T Q P for an integer square matrix `p` (rows)."""
        k = self.dimension
        qp = [[sum(self._rows[i][m] * p[m][j] for m in range(k)) for j in range(k)]
              for i in range(k)]
        return SymmetricIntMatrix(
            [[sum(p[m][i] * qp[m][j] for m in range(k)) for j in range(k)]
             for i in range(k)])

    def as_lists(self):
        return [list(row) for row in self._rows]

    def __eq__(self, other):
        if isinstance(other, SymmetricIntMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return '<SymmetricIntMatrix {0}>'.format(self.as_lists())


def intersection_matrix(graph):
    k = len(graph)
    rows = [[0] * k for _ in range(k)]
    for i, v in enumerate(graph.vertices):
        rows[i][i] = v.self_intersection
    for u, v in graph.edges:
        i, j = graph.index_of(u), graph.index_of(v)
        rows[i][j] += 1
        rows[j][i] += 1
    return SymmetricIntMatrix(rows)


def inertia(matrix):
    """
    Signs of an exact symmetric congruence diagonalization.

    Pivots on a nonzero diagonal entry. With a zero diagonal but a nonzero
    off-diagonal entry a_ij, row and column j are added into i first, which
    makes the new diagonal entry 2·a_ij.
    """
    m = [[Fraction(x) for x in row] for row in matrix.rows]
    plus = minus = 0
    while m:
        k = len(m)
        pivot = next((i for i in range(k) if m[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in range(k) for j in range(k)
                         if i != j and m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for c in range(k):
                m[i][c] += m[j][c]
            for r in range(k):
                m[r][i] += m[r][j]
            pivot = i
        d = m[pivot][pivot]
        if d > 0:
            plus += 1
        else:
            minus += 1
        rest = [r for r in range(k) if r != pivot]
        m = [[m[r][c] - m[r][pivot] * m[pivot][c] / d for c in rest] for r in rest]
    zero = matrix.dimension - plus - minus
    return Inertia(plus, zero, minus)


def sign_class(graph):
    sums = graph.degree_sums()
    if all(x == 0 for x in sums):
        return SignClass.ZERO
    if all(x > 0 for x in sums):
        return SignClass.POSITIVE
    if all(x < 0 for x in sums):
        return SignClass.NEGATIVE
    if all(x >= 0 for x in sums):
        return SignClass.NON_NEGATIVE
    if all(x <= 0 for x in sums):
        return SignClass.NON_POSITIVE
    return SignClass.MIXED


def is_circular_spherical(graph):
    """
    Cyclic vertex order of a cycle of spheres, or None.

    The walk starts at the first vertex and leaves it along its lowest
    numbered edge.
    """
    if any(v.genus != 0 for v in graph.vertices):
        return None
    k = len(graph)
    if k == 1:
        return None
    if k == 2:
        if len(graph.edges) != 2:
            return None
        return tuple(graph.vertices)
    if len(graph.edges) != k:
        return None
    if any(graph.valence(vid) != 2 for vid in graph.vertex_ids):
        return None
    if any(len(set(graph.neighbors(vid))) != 2 for vid in graph.vertex_ids):
        return None

    order = [graph.vertices[0].id]
    previous_edge = None
    current = order[0]
    while True:
        choices = [(eid, other) for eid, other in graph.incident_edges(current)
                   if eid != previous_edge]
        eid, nxt = choices[0]
        if nxt == order[0]:
            break
        order.append(nxt)
        previous_edge, current = eid, nxt
    if len(order) != k:
        return None
    return tuple(graph.vertex(vid) for vid in order)


class AugmentedGraph(object):
    """
    A decorated graph with a positive area vector and an optional witness z
    with Q·z = a.
    """

    __slots__ = ('_graph', '_area', '_witness')

    def __init__(self, graph, area, witness=None):
        area = dict((vid, parse_rational(area[vid])) for vid in _require(graph, area, 'area'))
        for vid, value in area.items():
            if value <= 0:
                raise NonPositiveArea("area of `{0}` is {1}".format(vid, value))
        if witness is not None:
            witness = dict((vid, parse_rational(witness[vid]))
                           for vid in _require(graph, witness, 'witness'))
            q = intersection_matrix(graph)
            z = [witness[vid] for vid in graph.vertex_ids]
            a = [area[vid] for vid in graph.vertex_ids]
            if list(q.apply(z)) != a:
                raise WitnessMismatch("Q·z does not equal the area vector")
        self._graph = graph
        self._area = area
        self._witness = witness

    @property
    def graph(self):
        return self._graph

    @property
    def area(self):
        return dict(self._area)

    @property
    def witness(self):
        return None if self._witness is None else dict(self._witness)

    def area_vector(self):
        return tuple(self._area[vid] for vid in self._graph.vertex_ids)

    def witness_vector(self):
        if self._witness is None:
            return None
        return tuple(self._witness[vid] for vid in self._graph.vertex_ids)

    def to_raw(self):
        raw = self._graph.to_raw()
        raw['areas'] = dict((vid, str(self._area[vid])) for vid in self._graph.vertex_ids)
        if self._witness is not None:
            raw['witness'] = dict((vid, str(self._witness[vid]))
                                  for vid in self._graph.vertex_ids)
        return raw

    def __repr__(self):
        return '<AugmentedGraph {0!r} a={1}>'.format(
            self._graph, [str(x) for x in self.area_vector()])


def _require(graph, mapping, what):
    if not isinstance(mapping, dict):
        raise MalformedGraph("{0} must map vertex ids to rationals".format(what))
    missing = [vid for vid in graph.vertex_ids if vid not in mapping]
    if missing:
        raise MalformedGraph("{0} missing for {1}".format(what, ', '.join(missing)))
    extra = [vid for vid in mapping if vid not in graph.vertex_ids]
    if extra:
        raise UnknownVertex("{0} given for unknown {1}".format(what, ', '.join(sorted(extra))))
    return graph.vertex_ids


def validate_augmented(raw):
    """Graph plus `areas` (and optional `witness`) from a JSON description."""
    graph = validate_graph(raw)
    if 'areas' not in raw:
        raise MalformedGraph("no `areas` in graph description")
    try:
        return AugmentedGraph(graph, raw['areas'], raw.get('witness'))
    except (ValueError, ZeroDivisionError) as e:
        raise MalformedGraph("bad rational: {0}".format(e))
