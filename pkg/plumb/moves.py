# -*- coding: utf-8 -*-

"""
Divisor moves.

Toric blow-up subdivides an edge by a (-1)-sphere and lowers both ends by
one; interior blow-up hangs a (-1)-sphere leaf on a vertex and lowers it by
one. Blow-downs undo them. The augmented versions carry the area vector a
and a GS witness z along, keeping Q z = a exact. Weights w are the area of
the new exceptional sphere, i.e. 2π a_0 with π factored out.
"""

import enum
import logging
from collections import deque, namedtuple

import networkx as nx

from plumb.graph import AugmentedGraph, DecoratedGraph, VertexData, sign_class
from plumb.utils import PlumbError, parse_rational


logger = logging.getLogger("plumb.moves")

DEFAULT_MAX_STATES = 5000


class NotExceptional(PlumbError): pass
class WrongValence(PlumbError): pass
class SameNeighbor(PlumbError): pass
class WeightTooLarge(PlumbError): pass
class InvalidWeight(PlumbError): pass
class NotAugmented(PlumbError): pass
class MalformedMove(PlumbError): pass


class MoveKind(enum.Enum):
    TORIC_UP = 'toric_up'
    TORIC_DOWN = 'toric_down'
    INTERIOR_UP = 'interior_up'
    INTERIOR_DOWN = 'interior_down'

    @property
    def is_up(self):
        return self in (MoveKind.TORIC_UP, MoveKind.INTERIOR_UP)


class MoveRecord(namedtuple('MoveRecord', 'kind site weight')):
    __slots__ = ()

    def __new__(cls, kind, site, weight=None):
        return super(MoveRecord, cls).__new__(cls, kind, site, weight)

    @property
    def augmented(self):
        return self.weight is not None

    def __str__(self):
        text = '{0}:{1}'.format(self.kind.value, self.site)
        if self.weight is not None:
            text += ':w={0}'.format(self.weight)
        return text


def parse_move(spec):
    """``toric_up:e3``, ``toric_up:e3:w=1/2``, ``interior_down:E1`` ..."""
    parts = spec.split(':')
    if len(parts) not in (2, 3) or not parts[1]:
        raise MalformedMove("bad move `{0}`".format(spec))
    try:
        kind = MoveKind(parts[0])
    except ValueError:
        raise MalformedMove("unknown move kind `{0}`".format(parts[0]))
    weight = None
    if len(parts) == 3:
        if not parts[2].startswith('w=') or not kind.is_up:
            raise MalformedMove("bad weight in `{0}`".format(spec))
        try:
            weight = parse_rational(parts[2][2:])
        except (ValueError, ZeroDivisionError):
            raise MalformedMove("bad weight in `{0}`".format(spec))
    return MoveRecord(kind, parts[1], weight)


# -- plain moves -- #

def toric_blowup(graph, eid):
    k = graph.edge_index(eid)
    u, v = graph.edges[k]
    new = graph.fresh_vertex_id()
    vertices = list(graph.with_self_intersections({u: -1, v: -1}).vertices)
    vertices.append(VertexData(new, 0, -1))
    edges = list(graph.edges)
    edges[k:k + 1] = [(u, new), (new, v)]
    logger.debug("toric blow-up of {0} ({1}-{2}) adds {3}".format(eid, u, v, new))
    return DecoratedGraph(vertices, edges)


def _check_exceptional(graph, vid):
    vertex = graph.vertex(vid)
    if vertex.genus != 0 or vertex.self_intersection != -1:
        raise NotExceptional("`{0}` is not a (-1)-sphere (s={1}, g={2})".format(
            vid, vertex.self_intersection, vertex.genus))


def toric_blowdown(graph, vid):
    _check_exceptional(graph, vid)
    incident = graph.incident_edges(vid)
    if len(incident) != 2:
        raise WrongValence("`{0}` has valence {1}, toric blow-down needs 2".format(
            vid, len(incident)))
    (e1, n1), (e2, n2) = incident
    if n1 == n2:
        raise SameNeighbor("both edges of `{0}` go to `{1}`".format(vid, n1))
    k1, k2 = graph.edge_index(e1), graph.edge_index(e2)
    edges = [edge for k, edge in enumerate(graph.edges) if k != k2]
    edges[k1] = (n1, n2)
    changed = graph.with_self_intersections({n1: 1, n2: 1})
    vertices = [v for v in changed.vertices if v.id != vid]
    return DecoratedGraph(vertices, edges)


def interior_blowup(graph, vid):
    graph.index_of(vid)
    new = graph.fresh_vertex_id()
    vertices = list(graph.with_self_intersections({vid: -1}).vertices)
    vertices.append(VertexData(new, 0, -1))
    edges = list(graph.edges) + [(vid, new)]
    return DecoratedGraph(vertices, edges)


def interior_blowdown(graph, vid):
    _check_exceptional(graph, vid)
    incident = graph.incident_edges(vid)
    if len(incident) != 1:
        raise WrongValence("`{0}` has valence {1}, interior blow-down needs 1".format(
            vid, len(incident)))
    eid, neighbor = incident[0]
    k = graph.edge_index(eid)
    edges = [edge for j, edge in enumerate(graph.edges) if j != k]
    changed = graph.with_self_intersections({neighbor: 1})
    vertices = [v for v in changed.vertices if v.id != vid]
    return DecoratedGraph(vertices, edges)


# -- augmented moves -- #

def _weight(w):
    w = parse_rational(w)
    if w <= 0:
        raise InvalidWeight("weight must be positive, got {0}".format(w))
    return w


def augmented_toric_blowup(augmented, eid, w):
    w = _weight(w)
    graph = augmented.graph
    u, v = graph.edge(eid)
    area = augmented.area
    for end in (u, v):
        if not w < area[end]:
            raise WeightTooLarge("weight {0} is not below the area {1} of `{2}`".format(
                w, area[end], end))
    witness = augmented.witness
    if witness is not None and not w < witness[u] + witness[v]:
        raise WeightTooLarge("weight {0} is not below z_{1} + z_{2} = {3}".format(
            w, u, v, witness[u] + witness[v]))
    blown = toric_blowup(graph, eid)
    new = blown.vertices[-1].id
    area[u] -= w
    area[v] -= w
    area[new] = w
    if witness is not None:
        witness[new] = witness[u] + witness[v] - w
    return AugmentedGraph(blown, area, witness)


def augmented_interior_blowup(augmented, vid, w):
    w = _weight(w)
    area = augmented.area
    if vid not in area:
        augmented.graph.index_of(vid)
    if not w < area[vid]:
        raise WeightTooLarge("weight {0} is not below the area {1} of `{2}`".format(
            w, area[vid], vid))
    blown = interior_blowup(augmented.graph, vid)
    new = blown.vertices[-1].id
    area[vid] -= w
    area[new] = w
    witness = augmented.witness
    if witness is not None:
        witness[new] = witness[vid] - w
    return AugmentedGraph(blown, area, witness)


def _augmented_blowdown(augmented, vid, move):
    graph = augmented.graph
    neighbors = graph.neighbors(vid) if vid in graph.vertex_ids else []
    down = move(graph, vid)
    area = augmented.area
    w = area.pop(vid)
    for n in neighbors:
        area[n] += w
    witness = augmented.witness
    if witness is not None:
        del witness[vid]
    return AugmentedGraph(down, area, witness)


def augmented_toric_blowdown(augmented, vid):
    return _augmented_blowdown(augmented, vid, toric_blowdown)


def augmented_interior_blowdown(augmented, vid):
    return _augmented_blowdown(augmented, vid, interior_blowdown)


def apply_move(target, record):
    """Apply a MoveRecord to a DecoratedGraph or an AugmentedGraph."""
    augmented = isinstance(target, AugmentedGraph)
    if record.augmented and not augmented:
        raise NotAugmented("move `{0}` needs areas in the input".format(record))
    if augmented and record.kind.is_up and not record.augmented:
        raise InvalidWeight("move `{0}` on an augmented graph needs a weight".format(record))
    if record.kind is MoveKind.TORIC_UP:
        if augmented:
            return augmented_toric_blowup(target, record.site, record.weight)
        return toric_blowup(target, record.site)
    if record.kind is MoveKind.INTERIOR_UP:
        if augmented:
            return augmented_interior_blowup(target, record.site, record.weight)
        return interior_blowup(target, record.site)
    if record.kind is MoveKind.TORIC_DOWN:
        if augmented:
            return augmented_toric_blowdown(target, record.site)
        return toric_blowdown(target, record.site)
    if augmented:
        return augmented_interior_blowdown(target, record.site)
    return interior_blowdown(target, record.site)


# -- searching blow-downs -- #

def blowdowns(graph):
    """Every applicable blow-down as (MoveRecord, result), in vertex order."""
    result = []
    for vertex in graph.vertices:
        if vertex.genus != 0 or vertex.self_intersection != -1:
            continue
        d = graph.valence(vertex.id)
        if d == 2 and len(set(graph.neighbors(vertex.id))) == 2:
            result.append((MoveRecord(MoveKind.TORIC_DOWN, vertex.id),
                           toric_blowdown(graph, vertex.id)))
        elif d == 1:
            result.append((MoveRecord(MoveKind.INTERIOR_DOWN, vertex.id),
                           interior_blowdown(graph, vertex.id)))
    return result


def is_toric_minimal(graph):
    return not any(v.genus == 0 and v.self_intersection == -1 for v in graph.vertices)


def invariant_key(graph):
    """Isomorphism invariant of a decorated multigraph."""
    g = graph.to_networkx()
    multiplicities = {}
    for u, v in graph.edges:
        pair = tuple(sorted((g.nodes[u]['label'], g.nodes[v]['label'])))
        multiplicities[pair] = multiplicities.get(pair, 0) + 1
    return (nx.weisfeiler_lehman_graph_hash(nx.Graph(g), node_attr='label'),
            tuple(sorted(multiplicities.items())))


def isomorphic(first, second):
    if len(first) != len(second) or len(first.edges) != len(second.edges):
        return False
    if invariant_key(first) != invariant_key(second):
        return False
    return nx.vf2pp_is_isomorphic(first.to_networkx(), second.to_networkx(),
                                  node_label='label')


class GraphRegistry(object):
    """Graphs kept up to decorated isomorphism, bucketed by invariant."""

    def __init__(self):
        self._buckets = {}
        self._items = []

    def add(self, graph):
        """Register `graph`; False when an isomorphic one is already known."""
        bucket = self._buckets.setdefault(invariant_key(graph), [])
        for known in bucket:
            if isomorphic(known, graph):
                return False
        bucket.append(graph)
        self._items.append(graph)
        return True

    def __len__(self):
        return len(self._items)

    def __iter__(self):
        return iter(self._items)


def explore_blowdowns(graph, max_states=DEFAULT_MAX_STATES):
    """
    Breadth-first walk over everything reachable by blow-downs.

    Yields (depth, graph, terminal) once per isomorphism class.
    """
    seen = GraphRegistry()
    seen.add(graph)
    queue = deque([(0, graph)])
    while queue:
        depth, current = queue.popleft()
        successors = blowdowns(current)
        yield depth, current, not successors
        for record, nxt in successors:
            if len(seen) >= max_states:
                logger.warning("blow-down search stopped at {0} states".format(max_states))
                return
            if seen.add(nxt):
                queue.append((depth + 1, nxt))


def minimal_models(graph, max_states=DEFAULT_MAX_STATES):
    """Distinct terminal graphs of all maximal blow-down sequences."""
    terminal = [g for _, g, done in explore_blowdowns(graph, max_states) if done]
    logger.info("{0} minimal model(s)".format(len(terminal)))
    return terminal


def nonnegative_representative(graph, max_states=DEFAULT_MAX_STATES, accept=None):
    """
    First graph reachable by blow-downs (the input itself first, then by
    increasing number of moves) whose sign class is non-negative.

    Only blow-downs are searched, so None does not prove that no
    non-negative divisor is toric equivalent to `graph`.
    """
    for depth, candidate, _ in explore_blowdowns(graph, max_states):
        if accept is not None and not accept(candidate):
            continue
        if sign_class(candidate).is_nonnegative:
            logger.info("non-negative representative after {0} blow-down(s)".format(depth))
            return candidate
    return None


def toric_minimal_model(graph):
    """Toric blow-downs at the first eligible vertex until none applies."""
    current = graph
    while True:
        site = next((v.id for v in current.vertices
                     if v.genus == 0 and v.self_intersection == -1
                     and current.valence(v.id) == 2
                     and len(set(current.neighbors(v.id))) == 2), None)
        if site is None:
            return current
        current = toric_blowdown(current, site)
