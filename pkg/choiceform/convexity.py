""" Grid convexity, grid-convex hulls and the weakly convex graph test. """

# Standard library imports
import functools
import itertools
import logging

# Third party imports
import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull

# Local imports
import choiceform.constants as const
from choiceform.correspondence import Correspondence
from choiceform.space import ProductSpace
from choiceform.subset import ProductSubset
import choiceform.utils as utils

logger = logging.getLogger(__name__)

##################################
# GRID CONVEXITY
##################################

def grid_convex_hull(subset):
    """ co(S) ∩ grid: the grid points inside the convex hull of S.

    Args:
        subset (ProductSubset): a subset of a grid space or grid product.

    Returns:
        ProductSubset: the grid-convex hull, empty if S is empty.

    Raises:
        UnsupportedSpaceError: if some factor of the space is abstract.
    """
    if not isinstance(subset, ProductSubset):
        raise TypeError('subset should be ProductSubset')
    space = subset.space()
    _require_grid(space)
    if subset.is_empty():
        return subset
    embedding = space.embedding()
    # The empty product is a single point
    if embedding.shape[1] == 0:
        return subset
    points = embedding[subset.flat()]
    return ProductSubset(space, _inside_hull(points, embedding))


def is_grid_convex(subset):
    """ True if S equals the grid points of its convex hull.

    In one dimension this means S is a run of consecutive grid points. The
    empty set is convex.

    Raises:
        UnsupportedSpaceError: if some factor of the space is abstract.
    """
    return grid_convex_hull(subset) == subset


def _require_grid(space):
    if not isinstance(space, ProductSpace):
        raise TypeError('space should be ProductSpace')
    if not space.is_grid():
        raise utils.UnsupportedSpaceError(
            'convexity is undefined on abstract spaces')


def _tolerance(points):
    return const.HULL_TOLERANCE * max(1.0, float(np.abs(points).max()))


def _inside_hull(points, candidates):
    """ Bool mask of the candidate rows lying in the convex hull of points. """
    tol = _tolerance(candidates)
    low, high = points.min(axis=0), points.max(axis=0)
    inside = np.all((candidates >= low - tol) & (candidates <= high + tol),
                    axis=1)
    dimension = points.shape[1]
    if dimension <= 1:
        return inside

    centered = points - points[0]
    rank = np.linalg.matrix_rank(centered, tol=tol) if len(points) > 1 else 0
    if rank == dimension:
        hull = ConvexHull(points)
        normals, offsets = hull.equations[:, :-1], hull.equations[:, -1]
        rows = np.flatnonzero(inside)
        values = candidates[rows] @ normals.T + offsets
        inside[rows] = np.all(values <= tol, axis=1)
        return inside

    # Lower-dimensional hull: test each box candidate with a feasibility LP.
    for row in np.flatnonzero(inside):
        inside[row] = _in_hull_lp(points, candidates[row])
    return inside


def _in_hull_lp(points, target):
    count = len(points)
    a_eq = np.vstack([points.T, np.ones(count)])
    b_eq = np.append(target, 1.0)
    result = linprog(np.zeros(count), A_eq=a_eq, b_eq=b_eq,
                     bounds=[(0, None)] * count, method='highs')
    return result.status == 0

##################################
# WEAKLY CONVEX GRAPH
##################################

def is_wcg(correspondence, k_max=const.DEFAULT_K_MAX, topo=None,
           where=None, budget=const.DEFAULT_WCG_BUDGET):
    """ Decide whether a correspondence has a weakly convex graph.

    Tier 1 accepts when Gr(T) is grid-convex or when all values share a
    point. Otherwise Tier 2 searches, for every set of at most k_max domain
    points, for values y_j in T(x_j) such that every sampled convex
    combination of the (x_j, y_j) rounds to a point of Gr(T). Combinations
    are sampled with barycentric step h/2 relative to the set's diameter and
    rounded to the nearest grid point, ties toward the lower point.

    Args:
        correspondence (Correspondence): T, between grid spaces.
        k_max (int): the largest subset size searched by Tier 2.
        topo (GridTopology): unused by the decision, accepted so callers can
            pass the hypothesis topology uniformly.
        where (ProductSubset): restrict the domain to these points.
        budget (int): the most partial selections Tier 2 may examine.

    Returns:
        Tuple[bool, str, Union[List[tuple], None]]: the verdict, the deciding
        tier, and on failure the domain points with no admissible selection.

    Raises:
        UnsupportedSpaceError: if a space is abstract.
        BudgetError: if Tier 2 exceeds its budget.
    """
    #pylint: disable=unused-argument
    if isinstance(k_max, bool) or not isinstance(k_max, int) or k_max < 1:
        raise ValueError(f'k_max {k_max} should be an int >= 1')
    domain, codomain = correspondence.domain(), correspondence.codomain()
    _require_grid(domain)
    _require_grid(codomain)
    rows = np.ones(domain.count(), dtype=bool) if where is None \
        else where.flat()

    values = correspondence.matrix() & rows[:, None]
    restricted = Correspondence(domain, codomain, values)
    if is_grid_convex(restricted.graph()):
        return True, const.TIER_CONVEX_GRAPH, None
    if values[rows].all(axis=0).any():
        return True, const.TIER_INTERSECTION, None

    search = _WcgSearch(restricted, rows, budget)
    witness = search.run(k_max)
    logger.debug('WCG tier 2 on %s: %d selections examined, witness %s',
                 correspondence, search.examined, witness)
    return witness is None, const.TIER_SEARCH, witness


@functools.lru_cache(maxsize=64)
def _simplex_weights(k, steps):
    """ All barycentric weight vectors of k points with denominator steps. """
    weights = []
    for bars in itertools.combinations(range(steps + k - 1), k - 1):
        edges = (-1,) + bars + (steps + k - 1,)
        weights.append([edges[j + 1] - edges[j] - 1 for j in range(k)])
    return np.array(weights, dtype=float) / steps


class _WcgSearch:
    """ Backtracking Tier 2 search over selections of small domain subsets. """

    def __init__(self, correspondence, rows, budget):
        domain, codomain = correspondence.domain(), correspondence.codomain()
        graph_space = ProductSpace(domain.spaces() + codomain.spaces())
        self._values = correspondence.matrix()
        self._graph = self._values.reshape(-1)
        self._domain_points = domain.embedding()
        self._codomain_points = codomain.embedding()
        self._origins = graph_space.axis_origins()
        self._meshes = graph_space.axis_meshes()
        self._shape = graph_space.lattice_shape()
        self._rows = [int(r) for r in np.flatnonzero(rows)]
        self._domain = domain
        self._budget = budget
        self.examined = 0


    def run(self, k_max):
        """ Return the first subset without a selection, or None. """
        for k in range(1, min(k_max, len(self._rows)) + 1):
            for subset in itertools.combinations(self._rows, k):
                if not self._select(subset, []):
                    return [self._domain.profile(r) for r in subset]
        return None


    def _select(self, subset, chosen):
        if len(chosen) == len(subset):
            return True
        row = subset[len(chosen)]
        for column in np.flatnonzero(self._values[row]):
            self.examined += 1
            if self.examined > self._budget:
                raise utils.BudgetError(
                    f'WCG search exceeded its budget of {self._budget} '
                    'selections', partial={'subset': list(subset),
                                           'examined': self.examined - 1})
            candidate = chosen + [int(column)]
            if self._hull_in_graph(subset[:len(candidate)], candidate) and \
                    self._select(subset, candidate):
                return True
        return False


    def _hull_in_graph(self, rows, columns):
        points = np.hstack([self._domain_points[list(rows)],
                            self._codomain_points[columns]])
        if len(points) == 1:
            return True
        spread = np.abs(points[:, None, :] - points[None, :, :]).max()
        steps = max(1, int(np.ceil(spread / (self._meshes.min() / 2)
                                   - const.HULL_TOLERANCE)))
        samples = _simplex_weights(len(points), steps) @ points
        lattice = np.ceil((samples - self._origins) / self._meshes - 0.5
                          - const.HULL_TOLERANCE).astype(np.int64)
        lattice = np.clip(lattice, 0, np.array(self._shape) - 1)
        flat = np.ravel_multi_index(tuple(lattice.T), self._shape)
        return bool(self._graph[flat].all())
