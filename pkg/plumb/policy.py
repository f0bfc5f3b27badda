"""
Twist distribution policies.

Every edge end (v_i, e) gets an integer s_{i,e} with the values at a vertex
summing to s_i. The choice is a convention; it changes the open book and the
GS parameters but not the contact structure, so it is pluggable. Concrete
policies live under ``plumb.plugins`` and are looked up by their `name`.
"""

import logging

from plumb.utils import PlumbError, load_plugin


logger = logging.getLogger("plumb.policy")

DEFAULT_NAMESPACE = 'plumb.plugins'


class UnknownPolicy(PlumbError): pass
class InvalidDistribution(PlumbError): pass


class BaseTwistPolicy(object):
    name = None

    def split(self, graph, vid):
        """Mapping edge id -> s_{i,e} over the edges incident to `vid`."""
        raise NotImplementedError


class ExplicitPolicy(BaseTwistPolicy):
    """
    Fixed values for some edge ends, delegating the rest to `fallback`.

    A vertex is either fully overridden or not at all.
    """
    name = 'explicit'

    def __init__(self, values, fallback=None):
        self.values = dict(values)
        self.fallback = fallback

    def split(self, graph, vid):
        incident = [eid for eid, _ in graph.incident_edges(vid)]
        given = [eid for eid in incident if (vid, eid) in self.values]
        if not given:
            if self.fallback is None:
                raise InvalidDistribution("no value given at vertex `{0}`".format(vid))
            return self.fallback.split(graph, vid)
        if len(given) != len(incident):
            raise InvalidDistribution(
                "values at vertex `{0}` only given for {1}".format(vid, ', '.join(given)))
        return dict((eid, self.values[(vid, eid)]) for eid in incident)


def load_policy(name, namespace=DEFAULT_NAMESPACE):
    cls = load_plugin(BaseTwistPolicy, namespace, name=name, fallback=True)
    if cls is None:
        raise UnknownPolicy("no twist policy named `{0}` in {1}".format(name, namespace))
    return cls()


def distribute(graph, policy):
    """
    s_{i,e} for every edge end of `graph`, keyed by (vertex id, edge id).

    Isolated vertices have no edge ends and contribute nothing.
    """
    values = {}
    for vertex in graph.vertices:
        if graph.valence(vertex.id) == 0:
            continue
        split = policy.split(graph, vertex.id)
        if sum(split.values()) != vertex.self_intersection:
            raise InvalidDistribution(
                "values at `{0}` sum to {1}, expected s = {2}".format(
                    vertex.id, sum(split.values()), vertex.self_intersection))
        for eid, value in split.items():
            values[(vertex.id, eid)] = value
    logger.debug("distributed twists over {0} edge ends with `{1}`".format(
        len(values), policy.name))
    return values


def toric_blowup_values(before, after, values, eid):
    """
    Explicit values on `after` (the toric blow-up of `before` at `eid`):
    s_{v0,e1} = 0, s_{v0,e2} = -1, s_{v1,e1} = s_{v1,e0} - 1,
    s_{v2,e2} = s_{v2,e0} - 1, everything else copied.
    """
    k = before.edge_index(eid)
    v1, v2 = before.edges[k]
    v0 = after.vertices[-1].id
    e1, e2 = 'e{0}'.format(k + 1), 'e{0}'.format(k + 2)

    def shifted(old):
        j = before.edge_index(old)
        return 'e{0}'.format(j + 1 if j < k else j + 2)

    result = {}
    for (vid, old), value in values.items():
        if old == eid:
            continue
        result[(vid, shifted(old))] = value
    result[(v0, e1)] = 0
    result[(v0, e2)] = -1
    result[(v1, e1)] = values[(v1, eid)] - 1
    result[(v2, e2)] = values[(v2, eid)] - 1
    return ExplicitPolicy(result)
