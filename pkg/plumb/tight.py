# -*- coding: utf-8 -*-

"""
Universal tightness of the contact torus bundle on the boundary of a
concave circular spherical plumbing.

The bundle is universally tight when the divisor is toric equivalent to a
non-negative cycle, except possibly for parabolic monodromy [[1,n],[0,1]]
with n > 0. Toric minimal representatives are decided by the rotation bound
c_w >= π of their word; (-1,-1) and (-1,-2) are settled by citation.
"""

import enum
import logging
from collections import namedtuple

from plumb.graph import DecoratedGraph, cycle_graph, is_circular_spherical
from plumb.moves import DEFAULT_MAX_STATES, nonnegative_representative, toric_minimal_model
from plumb.torus import (BundleKind, bundle_type, max_rotation, phi, twisting_floor,
                         word_of_divisor)
from plumb.utils import PlumbError


logger = logging.getLogger("plumb.tight")


class NotCircular(PlumbError): pass


class Outcome(enum.Enum):
    UNIVERSALLY_TIGHT = 'UniversallyTight'
    UNDETERMINED = 'Undetermined'
    NOT_APPLICABLE = 'NotApplicable'


CITED_CYCLES = ((-1, -1), (-2, -1))

CITATION_SMALL_CYCLE = 'small-cycle-filling'
CITATION_TWISTING = 'twisting-bound'
CITATION_PARABOLIC = 'parabolic-exception'


class TightnessVerdict(namedtuple('TightnessVerdict', 'outcome evidence')):

    __slots__ = ()

    def to_json(self):
        return {'outcome': self.outcome.value, 'evidence': self.evidence}


def _as_cycle(divisor):
    if isinstance(divisor, DecoratedGraph):
        graph = divisor
    else:
        s_values = list(divisor)
        if len(s_values) < 2:
            raise NotCircular("a cycle needs at least two spheres")
        graph = cycle_graph(s_values)
    if is_circular_spherical(graph) is None:
        raise NotCircular("divisor is not a cycle of spheres")
    return graph


def _circular(graph):
    return is_circular_spherical(graph) is not None


def classify_tightness(divisor, max_states=DEFAULT_MAX_STATES):
    """
    Verdict for a cycle of spheres, given as a graph or as the sequence of
    self-intersections in cyclic order.

    `evidence` records the representative, its word and monodromy, the
    bundle types of ±A^{±1} and the rotation comparison, enough to re-derive
    the outcome.
    """
    graph = _as_cycle(divisor)
    evidence = {'input': [v.self_intersection for v in is_circular_spherical(graph)]}

    representative = nonnegative_representative(graph, max_states, accept=_circular)
    if representative is None:
        evidence['reason'] = 'no non-negative cycle reachable by blow-downs'
        logger.info("tightness: not applicable")
        return TightnessVerdict(Outcome.NOT_APPLICABLE, evidence)

    minimal = toric_minimal_model(representative)
    s_values = [v.self_intersection for v in is_circular_spherical(minimal)]
    evidence['representative'] = s_values

    if tuple(sorted(s_values)) in CITED_CYCLES:
        evidence['citation'] = CITATION_SMALL_CYCLE
        logger.info("tightness: {0} settled by citation".format(s_values))
        return TightnessVerdict(Outcome.UNIVERSALLY_TIGHT, evidence)

    word = word_of_divisor(s_values)
    matrix = phi(word)
    kind = bundle_type(matrix)
    evidence.update({
        'word': str(word),
        'monodromy': str(matrix),
        'bundle_type': str(kind),
        'inverse_bundle_type': str(bundle_type(matrix.inverse())),
        'negative_bundle_type': str(bundle_type(-matrix)),
        'negative_inverse_bundle_type': str(bundle_type(-matrix.inverse())),
    })
    if kind.n is not None:
        evidence['parabolic_invariant'] = kind.n

    if kind.kind is BundleKind.PARABOLIC and kind.n > 0:
        evidence['citation'] = CITATION_PARABOLIC
        if kind.n == 1:
            evidence['note'] = 'n = 1 lies in the excluded family but admits no virtually overtwisted structure'
        logger.info("tightness: parabolic exception {0}".format(kind))
        return TightnessVerdict(Outcome.UNDETERMINED, evidence)

    shift, value = max_rotation(word)
    reached = value.at_least(2)
    evidence.update({
        'rotation_word': str(word.rotated(shift)),
        'rotation': value.to_json(),
        'rotation_at_least_pi': reached,
        'twisting_floor': twisting_floor(value),
    })
    if reached:
        evidence['citation'] = CITATION_TWISTING
        logger.info("tightness: universally tight, twisting floor {0}".format(
            evidence['twisting_floor']))
        return TightnessVerdict(Outcome.UNIVERSALLY_TIGHT, evidence)
    evidence['reason'] = 'maximal rotation is below pi'
    logger.info("tightness: undetermined, rotation below pi")
    return TightnessVerdict(Outcome.UNDETERMINED, evidence)
