""" StrategySpace and ProductSpace classes. """

# Standard library imports
import itertools

# Third party imports
import numpy as np

# Local imports
import choiceform.constants as const
import choiceform.utils as utils


class StrategySpace:
    """ One player's finite set of strategies.

    A space is either abstract (a list of labels, discrete metric) or a grid:
    the lattice points lo + h*k of a closed box, in lexicographic order, with
    the sup norm of the embedding as metric.

    Use :meth:`StrategySpace.abstract` or :meth:`StrategySpace.grid` to build
    one.
    """

    def __init__(self, player_id, kind, labels=None, box=None, mesh=None):
        """ Create a strategy space. Prefer the abstract / grid factories.

        Args:
            player_id (int): identifier of the owning player.
            kind (str): const.ABSTRACT or const.GRID.
            labels (List[str]): point labels. Required for abstract spaces,
                optional display labels for grid spaces.
            box (List[Tuple[float, float]]): per-dimension closed interval
                bounds (grid only).
            mesh (float): the lattice step h > 0 (grid only).

        Raises:
            TypeError: if incorrectly typed parameters are given.
            ValueError: if parameters with illegal values are given.
        """
        if isinstance(player_id, bool) or not isinstance(player_id, int):
            raise TypeError('player_id should be int')
        if kind not in [const.ABSTRACT, const.GRID]:
            raise ValueError(f'space kind {kind} invalid')

        self._player_id = player_id
        self._kind = kind
        self._box = None
        self._mesh = None
        self._coords = None

        if kind == const.GRID:
            self._init_grid(box, mesh)
            size = len(self._coords)
        else:
            if labels is None or len(labels) == 0:
                raise ValueError('abstract space needs a nonempty label list')
            size = len(labels)

        if labels is not None:
            labels = [str(label) for label in labels]
            if len(labels) != size:
                raise ValueError(f'{len(labels)} labels for {size} points')
            if len(set(labels)) != len(labels):
                raise ValueError('labels should be unique')
        self._labels = labels
        self._size = size
        self._distances = None


    def _init_grid(self, box, mesh):
        """ Build the lattice box ∩ (h·Z^d + lower corner). """
        if box is None or mesh is None:
            raise ValueError('grid space needs box and mesh')
        if isinstance(mesh, bool) or not isinstance(mesh, (int, float)):
            raise TypeError('mesh should be a number')
        if mesh <= 0:
            raise ValueError(f'mesh {mesh} is <= 0')
        if len(box) == 0:
            raise ValueError('box should have at least one dimension')

        axes = []
        bounds = []
        for interval in box:
            low, high = (float(bound) for bound in interval)
            if low > high:
                raise ValueError(f'interval [{low}, {high}] is empty')
            count = int(np.floor((high - low) / mesh + const.HULL_TOLERANCE)) + 1
            axes.append(low + mesh * np.arange(count))
            bounds.append((low, high))

        grid = np.meshgrid(*axes, indexing='ij')
        self._coords = utils.readonly(
            np.stack(grid, axis=-1).reshape(-1, len(axes)))
        self._shape = tuple(len(axis) for axis in axes)
        self._box = bounds
        self._mesh = float(mesh)


    @classmethod
    def abstract(cls, player_id, labels):
        """ Create an abstract space over the given labels. """
        return cls(player_id, const.ABSTRACT, labels=labels)


    @classmethod
    def grid(cls, player_id, box, mesh, labels=None):
        """ Create a grid space on box with mesh h.

        Args:
            player_id (int): identifier of the owning player.
            box (List[Tuple[float, float]]): per-dimension bounds.
            mesh (float): lattice step.
            labels (List[str]): optional display labels, one per point.
        """
        return cls(player_id, const.GRID, labels=labels, box=box, mesh=mesh)


    def __str__(self):
        if self.is_grid():
            return f'StrategySpace {self._player_id} grid h={self._mesh:g} ' \
                f'box={self._box}'
        return f'StrategySpace {self._player_id} {self._labels}'


    def __repr__(self):
        return str(self) + f' with {self._size} points'


    def __eq__(self, other):
        """ Two spaces are equal if they have the same owner and points. """
        #pylint: disable=unidiomatic-typecheck
        if type(self) != type(other):
            return False
        return self._key() == other._key()


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash(self._key())


    def __len__(self):
        """
        Returns:
            int: the number of strategy points.
        """
        return self._size


    def _key(self):
        box = None if self._box is None else tuple(self._box)
        labels = None if self._labels is None else tuple(self._labels)
        return (self._player_id, self._kind, labels, box, self._mesh)


    def player_id(self):
        """
        Returns:
            int: the identifier of the player owning this space.
        """
        return self._player_id


    def kind(self):
        """
        Returns:
            str: const.ABSTRACT or const.GRID.
        """
        return self._kind


    def is_grid(self):
        """
        Returns:
            bool: True for grid spaces.
        """
        return self._kind == const.GRID


    def size(self):
        """
        Returns:
            int: the number of strategy points.
        """
        return self._size


    def mesh(self):
        """
        Returns:
            Union[float, None]: the lattice step, None for abstract spaces.
        """
        return self._mesh


    def box(self):
        """
        Returns:
            Union[List[Tuple[float, float]], None]: the box, None for
            abstract spaces.
        """
        return None if self._box is None else list(self._box)


    def dimension(self):
        """
        Returns:
            int: the embedding dimension d_i, 0 for abstract spaces.
        """
        return 0 if self._box is None else len(self._box)


    def shape(self):
        """
        Returns:
            Tuple[int]: the lattice shape (points per dimension), or (n,) for
            abstract spaces.
        """
        if self.is_grid():
            return self._shape
        return (self._size,)


    def has_labels(self):
        """
        Returns:
            bool: True if explicit labels were given.
        """
        return self._labels is not None


    def labels(self):
        """
        Returns:
            List[str]: the label of every point, in point order.
        """
        return [self.label(k) for k in range(self._size)]


    def label(self, k):
        """ Return the label of point k.

        Grid points without explicit labels are labelled by their coordinates,
        joined with ';' in more than one dimension.
        """
        self.check_index(k)
        if self._labels is not None:
            return self._labels[k]
        return ';'.join(format(float(v), 'g') for v in self._coords[k])


    def index_of(self, label):
        """ Return the index of the point with the given label.

        Raises:
            InvalidProfileError: if no point has that label.
        """
        labels = self.labels()
        if label not in labels:
            raise utils.InvalidProfileError(
                f'invalid profile: no point {label!r} for player '
                f'{self._player_id}')
        return labels.index(label)


    def check_index(self, k):
        """ Raise InvalidProfileError unless k is a valid point index. """
        if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
            raise TypeError('point index should be int')
        if not 0 <= k < self._size:
            raise utils.InvalidProfileError(
                f'invalid profile: index {k} not in [0, {self._size}) for '
                f'player {self._player_id}')


    def coords(self):
        """
        Returns:
            np.ndarray: (size, d) read-only array of embedded points.

        Raises:
            UnsupportedSpaceError: for abstract spaces.
        """
        if not self.is_grid():
            raise utils.UnsupportedSpaceError(
                f'player {self._player_id} has an abstract space')
        return self._coords


    def distance_matrix(self):
        """ Pairwise distances between points.

        Grid spaces use the sup norm of the embedding; abstract spaces use the
        discrete metric.

        Returns:
            np.ndarray: (size, size) read-only float array.
        """
        if self._distances is None:
            if self.is_grid():
                diff = self._coords[:, None, :] - self._coords[None, :, :]
                distances = np.abs(diff).max(axis=-1)
            else:
                distances = 1.0 - np.eye(self._size)
            self._distances = utils.readonly(distances)
        return self._distances


class ProductSpace:
    """ The product X = X_1 x ... x X_n of strategy spaces, or a sub-product
    such as X_{-i}.

    Profiles are tuples of point indices, one per factor. The flat index of a
    profile is its lexicographic rank (C order over the factor sizes); for grid
    factors it coincides with the C-order rank over the concatenated lattice
    shape, which is what the morphology in GridTopology relies on.
    """

    def __init__(self, spaces):
        """ Create a product space.

        Args:
            spaces (List[StrategySpace]): the factors, possibly empty (the
                one-point product, used as X_{-i} of a one-player game).
        """
        if not all(isinstance(space, StrategySpace) for space in spaces):
            raise TypeError('spaces should be StrategySpace')
        self._spaces = tuple(spaces)
        self._sizes = tuple(len(space) for space in self._spaces)


    def __str__(self):
        return 'ProductSpace ' + ' x '.join(str(len(s)) for s in self._spaces)


    def __repr__(self):
        return str(self)


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and self._spaces == other._spaces


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash(self._spaces)


    def __len__(self):
        """
        Returns:
            int: the number of profiles.
        """
        return self.count()


    def spaces(self):
        """
        Returns:
            List[StrategySpace]: the factors in player order.
        """
        return list(self._spaces)


    def space(self, j):
        """
        Returns:
            StrategySpace: the j-th factor.
        """
        return self._spaces[j]


    def num_players(self):
        """
        Returns:
            int: the number of factors.
        """
        return len(self._spaces)


    def sizes(self):
        """
        Returns:
            Tuple[int]: per-factor cardinalities.
        """
        return self._sizes


    def count(self):
        """
        Returns:
            int: the number of profiles (1 for the empty product).
        """
        return int(np.prod(self._sizes, dtype=np.int64))


    def check_profile(self, profile):
        """ Validate a profile.

        Raises:
            InvalidProfileError: if the profile has the wrong length or an
                index out of range.
        """
        if len(profile) != len(self._spaces):
            raise utils.InvalidProfileError(
                f'invalid profile: {len(profile)} coordinates for '
                f'{len(self._spaces)} players')
        for space, k in zip(self._spaces, profile):
            space.check_index(k)


    def index(self, profile):
        """ Return the flat (lexicographic) index of a profile. """
        profile = tuple(profile)
        self.check_profile(profile)
        if not self._sizes:
            return 0
        return int(np.ravel_multi_index(profile, self._sizes))


    def profile(self, index):
        """ Return the profile with the given flat index. """
        if not 0 <= index < self.count():
            raise utils.InvalidProfileError(
                f'invalid profile: flat index {index} not in '
                f'[0, {self.count()})')
        if not self._sizes:
            return ()
        return tuple(int(k) for k in np.unravel_index(index, self._sizes))


    def profiles(self):
        """ Iterate over all profiles in lexicographic order. """
        return itertools.product(*(range(n) for n in self._sizes))


    def without(self, i):
        """
        Returns:
            ProductSpace: X_{-i}, the product of every factor but i.
        """
        utils.check_player(i, len(self._spaces))
        return ProductSpace(self._spaces[:i] + self._spaces[i + 1:])


    def splice(self, i, x_minus_i, x_i):
        """ Join a profile of X_{-i} and a point of X_i into a profile of X. """
        x_minus_i = tuple(x_minus_i)
        return x_minus_i[:i] + (x_i,) + x_minus_i[i:]


    def is_grid(self):
        """
        Returns:
            bool: True if every factor is a grid space.
        """
        return all(space.is_grid() for space in self._spaces)


    def lattice_shape(self):
        """
        Returns:
            Tuple[int]: concatenated lattice shapes of the factors.
        """
        return tuple(n for space in self._spaces for n in space.shape())


    def grid_axes(self):
        """
        Returns:
            List[bool]: for each lattice axis, True if it belongs to a grid
            factor (abstract axes carry the discrete topology).
        """
        return [space.is_grid() for space in self._spaces
                for _ in space.shape()]


    def embedding(self):
        """ Embedded coordinates of every profile, in flat order.

        Returns:
            np.ndarray: (count, sum of d_i) float array.

        Raises:
            UnsupportedSpaceError: if some factor is abstract.
        """
        if not self._spaces:
            return np.zeros((1, 0))
        blocks = np.meshgrid(*(np.arange(n) for n in self._sizes),
                             indexing='ij')
        columns = [space.coords()[block.reshape(-1)]
                   for space, block in zip(self._spaces, blocks)]
        return np.hstack(columns)


    def axis_meshes(self):
        """
        Returns:
            np.ndarray: lattice step of every embedding axis (grid only).
        """
        return np.array([space.mesh() for space in self._spaces
                         for _ in range(space.dimension())])


    def axis_origins(self):
        """
        Returns:
            np.ndarray: lower box bound of every embedding axis (grid only).
        """
        return np.array([low for space in self._spaces
                         for low, _ in space.box()])


    def max_mesh(self):
        """
        Returns:
            float: the largest mesh over grid factors, 0.0 if there is none.
        """
        meshes = [space.mesh() for space in self._spaces if space.is_grid()]
        return max(meshes) if meshes else 0.0
