""" GridTopology class. """

# Standard library imports
import itertools

# Third party imports
import numpy as np
from scipy import ndimage

# Local imports
import choiceform.constants as const
from choiceform.space import ProductSpace, StrategySpace
from choiceform.subset import ProductSubset


class GridTopology:
    """ The discrete neighbourhood structure of a product space.

    The neighbourhood N_r(x) is the Chebyshev ball of r lattice steps around x
    on grid axes, clipped to the box, and {x_j} on abstract axes (discrete
    topology). Interior and closure are binary erosion and dilation by that
    ball; during erosion neighbours outside the box are ignored.
    """

    def __init__(self, space, radius=const.DEFAULT_RADIUS):
        """ Create the topology of a space.

        Args:
            space (Union[ProductSpace, StrategySpace]): the space.
            radius (int): neighbourhood radius in mesh steps, >= 0.

        Raises:
            TypeError: if incorrectly typed parameters are given.
            ValueError: if radius < 0.
        """
        if isinstance(space, StrategySpace):
            space = ProductSpace([space])
        if not isinstance(space, ProductSpace):
            raise TypeError('space should be ProductSpace or StrategySpace')
        if isinstance(radius, bool) or not isinstance(radius, int):
            raise TypeError('radius should be int')
        if radius < 0:
            raise ValueError(f'radius {radius} is < 0')

        self._space = space
        self._radius = radius
        self._lattice = space.lattice_shape()
        self._structure = np.ones(
            tuple(2 * radius + 1 if grid else 1 for grid in space.grid_axes()),
            dtype=bool)


    def __str__(self):
        return f'GridTopology r={self._radius} on {self._space}'


    def __repr__(self):
        return str(self)


    def space(self):
        """
        Returns:
            ProductSpace: the underlying space.
        """
        return self._space


    def radius(self):
        """
        Returns:
            int: the neighbourhood radius in mesh steps.
        """
        return self._radius


    def with_space(self, space):
        """
        Returns:
            GridTopology: a topology with the same radius on another space.
        """
        return GridTopology(space, self._radius)


    def interior(self, subset):
        """ interior_h(S): the points of S whose whole neighbourhood is in S.

        Args:
            subset (ProductSubset): a subset of this topology's space.

        Returns:
            ProductSubset: the eroded subset.
        """
        self._check(subset)
        return ProductSubset(self._space,
                             self.erode_columns(subset.flat()[:, None])[:, 0])


    def closure(self, subset):
        """ closure_h(S): the points with some neighbour in S. """
        self._check(subset)
        return ProductSubset(self._space,
                             self.dilate_columns(subset.flat()[:, None])[:, 0])


    def is_open(self, subset):
        """
        Returns:
            bool: True if subset equals its interior.
        """
        return self.interior(subset) == subset


    def is_closed(self, subset):
        """
        Returns:
            bool: True if the complement of subset is open.
        """
        return self.is_open(subset.complement())


    def erode_columns(self, matrix):
        """ Erode every column of a (|X|, m) bool matrix over this space.

        Row x of the result holds the columns y with matrix[z, y] true for
        every neighbour z of x.
        """
        return self._morph(ndimage.binary_erosion, matrix, border_value=1)


    def dilate_columns(self, matrix):
        """ Dilate every column of a (|X|, m) bool matrix over this space.

        Row x of the result holds the columns y with matrix[z, y] true for
        some neighbour z of x.
        """
        return self._morph(ndimage.binary_dilation, matrix, border_value=0)


    def neighborhood(self, index):
        """ The flat indices of N_r(x), ascending.

        Args:
            index (int): flat index of x.

        Returns:
            np.ndarray: int array of neighbour indices, x included.
        """
        if not self._lattice:
            return np.array([0])
        center = np.unravel_index(index, self._lattice)
        ranges = []
        for c, n, half in zip(center, self._lattice, self._half_widths()):
            ranges.append(range(max(0, c - half), min(n, c + half + 1)))
        cells = np.array(list(itertools.product(*ranges))).T
        return np.sort(np.ravel_multi_index(tuple(cells), self._lattice))


    def neighbor_pairs(self):
        """ Every ordered pair (x, x') with x' in N_r(x), x' != x.

        Returns:
            Tuple[np.ndarray, np.ndarray]: the two index columns.
        """
        sources, targets = [], []
        for index in range(self._space.count()):
            for other in self.neighborhood(index):
                if other != index:
                    sources.append(index)
                    targets.append(int(other))
        return np.array(sources, dtype=np.int64), \
            np.array(targets, dtype=np.int64)


    def _half_widths(self):
        return [(n - 1) // 2 for n in self._structure.shape]


    def _morph(self, operation, matrix, border_value):
        matrix = np.asarray(matrix, dtype=bool)
        if not self._lattice or self._radius == 0:
            return matrix.copy()
        columns = matrix.shape[1]
        shaped = matrix.reshape(self._lattice + (columns,))
        structure = self._structure[..., None]
        result = operation(shaped, structure=structure,
                           border_value=border_value)
        return result.reshape(matrix.shape)


    def _check(self, subset):
        if not isinstance(subset, ProductSubset):
            raise TypeError('subset should be ProductSubset')
        if subset.space() != self._space:
            raise ValueError('subset is not over this topology\'s space')


def interior_h(subset, topo):
    """ The grid interior of a subset; see :meth:`GridTopology.interior`. """
    return topo.interior(subset)


def closure_h(subset, topo):
    """ The grid closure of a subset; see :meth:`GridTopology.closure`. """
    return topo.closure(subset)


def is_h_open(subset, topo):
    """
    Returns:
        bool: True if subset equals its grid interior.
    """
    return topo.is_open(subset)


def is_h_closed(subset, topo):
    """
    Returns:
        bool: True if the complement of subset is h-open.
    """
    return topo.is_closed(subset)
