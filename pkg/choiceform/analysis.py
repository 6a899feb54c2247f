""" Discrete set-valued analysis on grids.

Semicontinuity, the gluing construction, the local intersection property
and transfer open-valuedness, all evaluated on the bool value matrix of a
Correspondence with erosions and dilations. Predicates return a verdict and,
when it is False, a witness dict of profiles.

On abstract spaces the neighbourhoods are singletons, so every predicate in
this module holds trivially.
"""

# Standard library imports
import logging

# Third party imports
import numpy as np

# Local imports
from choiceform.correspondence import Correspondence
from choiceform.subset import ProductSubset
from choiceform.topology import GridTopology

logger = logging.getLogger(__name__)


def _topologies(correspondence, topo, codomain_topo):
    if not isinstance(correspondence, Correspondence):
        raise TypeError('correspondence should be Correspondence')
    if not isinstance(topo, GridTopology):
        raise TypeError('topo should be GridTopology')
    if topo.space() != correspondence.domain():
        topo = topo.with_space(correspondence.domain())
    if codomain_topo is None:
        codomain_topo = GridTopology(correspondence.codomain(), 1)
    return topo, codomain_topo


def _dilate_values(matrix, codomain_topo):
    """ Row x of the result is the closure of T(x) in the codomain. """
    return codomain_topo.dilate_columns(matrix.T).T


def _erode_values(matrix, codomain_topo):
    """ Row x of the result is the interior of T(x) in the codomain. """
    return codomain_topo.erode_columns(matrix.T).T


def is_h_lsc(correspondence, topo, codomain_topo=None, where=None):
    """ Discrete lower semicontinuity.

    T is h-lsc when for every x, every neighbour x' of x and every y in T(x),
    T(x') meets the neighbourhood of y.

    Args:
        correspondence (Correspondence): T.
        topo (GridTopology): the topology of the domain.
        codomain_topo (GridTopology): the codomain topology, radius 1 if
            None.
        where (ProductSubset): restrict T to this part of the domain; pairs
            with a point outside it are not checked.

    Returns:
        Tuple[bool, Union[dict, None]]: the verdict and, on failure, the
        witness {'x', 'x_prime', 'y'}.
    """
    topo, codomain_topo = _topologies(correspondence, topo, codomain_topo)
    values = correspondence.matrix()
    near = _dilate_values(values, codomain_topo)
    if where is not None:
        values = values & where.flat()[:, None]
        near = near | ~where.flat()[:, None]
    stable = topo.erode_columns(near)
    bad = values & ~stable
    if not bad.any():
        return True, None
    x, y = (int(v) for v in np.argwhere(bad)[0])
    for other in topo.neighborhood(x):
        if not near[other, y]:
            return False, _witness(correspondence, x, int(other), y)
    raise AssertionError('lsc failure without a witness neighbour')


def is_h_usc(correspondence, topo, codomain_topo=None):
    """ Discrete upper semicontinuity.

    T is h-usc when for every x and every neighbour x' of x, T(x') lies in
    the closure of T(x).

    Returns:
        Tuple[bool, Union[dict, None]]: the verdict and, on failure, the
        witness {'x', 'x_prime', 'y'} with y in T(x') far from T(x).
    """
    topo, codomain_topo = _topologies(correspondence, topo, codomain_topo)
    values = correspondence.matrix()
    near = _dilate_values(values, codomain_topo)
    reached = topo.dilate_columns(values)
    bad = reached & ~near
    if not bad.any():
        return True, None
    x, y = (int(v) for v in np.argwhere(bad)[0])
    for other in topo.neighborhood(x):
        if values[other, y]:
            return False, _witness(correspondence, x, int(other), y)
    raise AssertionError('usc failure without a witness neighbour')


def _witness(correspondence, x, x_prime, y):
    domain, codomain = correspondence.domain(), correspondence.codomain()
    return {
        'x': domain.profile(x),
        'x_prime': domain.profile(x_prime),
        'y': codomain.profile(y),
    }


def glue(first, second, where):
    """ The piecewise correspondence equal to second on W and first off W.

    Args:
        first (Correspondence): T1, used off W.
        second (Correspondence): T2, used on W.
        where (ProductSubset): W, a subset of the common domain.

    Returns:
        Correspondence: the glued correspondence.

    Raises:
        ValueError: if the spaces do not match.
    """
    if first.domain() != second.domain() or \
            first.codomain() != second.codomain():
        raise ValueError('glued correspondences should share their spaces')
    if not isinstance(where, ProductSubset) or \
            where.space() != first.domain():
        raise ValueError('W should be a subset of the common domain')
    rows = where.flat()[:, None]
    values = np.where(rows, second.matrix(), first.matrix())
    return Correspondence(first.domain(), first.codomain(), values)


def has_local_intersection_property(correspondence, topo):
    """ Check the local intersection property on radius-r neighbourhoods.

    Every x with T(x) nonempty needs a point common to T(z) for all z in
    N_r(x). The fixed ball under-approximates an arbitrary open
    neighbourhood; larger radii are stricter.

    Returns:
        Tuple[bool, Union[dict, None]]: the verdict and, on failure, the
        witness {'x'}.
    """
    topo, _ = _topologies(correspondence, topo, None)
    values = correspondence.matrix()
    common = topo.erode_columns(values)
    bad = values.any(axis=1) & ~common.any(axis=1)
    if not bad.any():
        return True, None
    x = int(np.flatnonzero(bad)[0])
    return False, {'x': correspondence.domain().profile(x)}


def is_transfer_open_valued(correspondence, codomain_topo):
    """ Check transfer open-valuedness.

    T is transfer open-valued when every y in some T(x) is in the interior
    of some T(x').

    Args:
        correspondence (Correspondence): T.
        codomain_topo (GridTopology): the topology of the codomain.

    Returns:
        Tuple[bool, Union[dict, None]]: the verdict and, on failure, the
        witness {'x', 'y'}.
    """
    if codomain_topo.space() != correspondence.codomain():
        codomain_topo = codomain_topo.with_space(correspondence.codomain())
    values = correspondence.matrix()
    interiors = _erode_values(values, codomain_topo)
    bad = values.any(axis=0) & ~interiors.any(axis=0)
    if not bad.any():
        return True, None
    y = int(np.flatnonzero(bad)[0])
    x = int(np.flatnonzero(values[:, y])[0])
    return False, {'x': correspondence.domain().profile(x),
                   'y': correspondence.codomain().profile(y)}


def inverse_interior_cover(correspondence, topo):
    """ Check that the interiors of the lower sections of T cover its domain.

    This holds exactly when T has nonempty values and T^{-1} is transfer
    open-valued.

    Args:
        correspondence (Correspondence): T.
        topo (GridTopology): the topology of the domain.

    Returns:
        Tuple[bool, Union[dict, None]]: the verdict and, on failure, the
        witness {'x'} of an uncovered domain point.
    """
    topo, _ = _topologies(correspondence, topo, None)
    interiors = topo.erode_columns(correspondence.matrix())
    uncovered = ~interiors.any(axis=1)
    if not uncovered.any():
        return True, None
    x = int(np.flatnonzero(uncovered)[0])
    return False, {'x': correspondence.domain().profile(x)}
