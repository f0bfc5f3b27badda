from plumb.policy import BaseTwistPolicy


class FloorPolicy(BaseTwistPolicy):
    """Even split: quotient rounded toward zero, remainder on the first edges."""
    name = 'floor'

    def split(self, graph, vid):
        s = graph.vertex(vid).self_intersection
        incident = [eid for eid, _ in graph.incident_edges(vid)]
        d = len(incident)
        quotient = abs(s) // d
        remainder = abs(s) - quotient * d
        sign = -1 if s < 0 else 1
        values = {}
        for k, eid in enumerate(incident):
            values[eid] = sign * (quotient + (1 if k < remainder else 0))
        return values


class LeadingPolicy(BaseTwistPolicy):
    """
    -1 on every edge but the first, which takes s + d - 1.

    Makes q_{i,e} = s_{i,e} + 1 (resp. p_{i,e} = -s_{i,e} - 1) vanish off
    the first edge, so all boundary twists sit on one neck.
    """
    name = 'leading'

    def split(self, graph, vid):
        s = graph.vertex(vid).self_intersection
        incident = [eid for eid, _ in graph.incident_edges(vid)]
        d = len(incident)
        values = dict((eid, -1) for eid in incident)
        values[incident[0]] = s + d - 1
        return values
