""" ProductSubset class. """

# Third party imports
import numpy as np

# Local imports
from choiceform.space import ProductSpace, StrategySpace
import choiceform.utils as utils


class ProductSubset:
    """ A set of profiles of a product space, stored densely.

    The membership array has one axis per factor (so its flattening in C order
    follows the lexicographic profile order). Instances are immutable.
    """

    def __init__(self, space, mask):
        """ Create a subset from a membership array.

        Args:
            space (Union[ProductSpace, StrategySpace]): the ambient space. A
                single StrategySpace is wrapped as a one-factor product.
            mask: bool array-like, flat or shaped, with one entry per profile.

        Raises:
            TypeError: if space has the wrong type.
            ValueError: if the mask length does not match the space.
        """
        if isinstance(space, StrategySpace):
            space = ProductSpace([space])
        if not isinstance(space, ProductSpace):
            raise TypeError('space should be ProductSpace or StrategySpace')
        mask = np.asarray(mask, dtype=bool)
        if mask.size != space.count():
            raise ValueError(f'mask has {mask.size} bits for '
                             f'{space.count()} profiles')
        self._space = space
        self._mask = utils.readonly(mask.reshape(space.sizes()))


    @classmethod
    def full(cls, space):
        """ The whole space. """
        return cls(space, np.ones(_count(space), dtype=bool))


    @classmethod
    def empty(cls, space):
        """ The empty subset. """
        return cls(space, np.zeros(_count(space), dtype=bool))


    @classmethod
    def from_profiles(cls, space, profiles):
        """ Build a subset from an iterable of profiles.

        Raises:
            InvalidProfileError: if a profile is not in the space.
        """
        if isinstance(space, StrategySpace):
            space = ProductSpace([space])
        mask = np.zeros(space.count(), dtype=bool)
        for profile in profiles:
            mask[space.index(profile)] = True
        return cls(space, mask)


    @classmethod
    def from_indices(cls, space, indices):
        """ Build a subset from flat profile indices. """
        mask = np.zeros(_count(space), dtype=bool)
        mask[np.asarray(list(indices), dtype=np.int64)] = True
        return cls(space, mask)


    def __str__(self):
        return f'ProductSubset {self.count()}/{self._space.count()}'


    def __repr__(self):
        return str(self) + f' of {self._space}'


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and self._space == other._space \
            and np.array_equal(self._mask, other._mask)


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash((self._space, self._mask.tobytes()))


    def __len__(self):
        return self.count()


    def __contains__(self, profile):
        return self.contains(profile)


    def __and__(self, other):
        self._check_same_space(other)
        return ProductSubset(self._space, self._mask & other._mask)


    def __or__(self, other):
        self._check_same_space(other)
        return ProductSubset(self._space, self._mask | other._mask)


    def __sub__(self, other):
        self._check_same_space(other)
        return ProductSubset(self._space, self._mask & ~other._mask)


    def __le__(self, other):
        """ Subset test. """
        self._check_same_space(other)
        return not np.any(self._mask & ~other._mask)


    def _check_same_space(self, other):
        if not isinstance(other, ProductSubset):
            raise TypeError('operand should be ProductSubset')
        if self._space != other._space:
            raise ValueError('subsets live in different spaces')


    def space(self):
        """
        Returns:
            ProductSpace: the ambient space.
        """
        return self._space


    def mask(self):
        """
        Returns:
            np.ndarray: read-only bool array with one axis per factor.
        """
        return self._mask


    def flat(self):
        """
        Returns:
            np.ndarray: read-only bool vector in lexicographic profile order.
        """
        return self._mask.reshape(-1)


    def contains(self, profile):
        """ Membership test.

        Raises:
            InvalidProfileError: if the profile is not in the space.
        """
        return bool(self.flat()[self._space.index(profile)])


    def is_empty(self):
        """
        Returns:
            bool: True if no profile is a member.
        """
        return not self._mask.any()


    def count(self):
        """
        Returns:
            int: the number of members.
        """
        return int(self._mask.sum())


    def indices(self):
        """
        Returns:
            List[int]: flat indices of the members, ascending.
        """
        return [int(k) for k in np.flatnonzero(self.flat())]


    def profiles(self):
        """
        Returns:
            List[tuple]: the members in lexicographic order.
        """
        return [self._space.profile(k) for k in self.indices()]


    def complement(self):
        """
        Returns:
            ProductSubset: the profiles not in this subset.
        """
        return ProductSubset(self._space, ~self._mask)


    def section_matrix(self, i):
        """ All upper sections through player i at once.

        Args:
            i (int): the player whose strategy varies.

        Returns:
            np.ndarray: bool array of shape (|X_{-i}|, |X_i|); row r is the
            upper section through the r-th profile of X_{-i}.
        """
        utils.check_player(i, self._space.num_players())
        size_i = self._space.sizes()[i]
        return np.moveaxis(self._mask, i, -1).reshape(-1, size_i)


    def section(self, i, x_minus_i):
        """ The upper section {y_i : (x_{-i}, y_i) in this subset}.

        Args:
            i (int): the player whose strategy varies.
            x_minus_i (tuple): a profile of X_{-i}.

        Returns:
            ProductSubset: a subset of X_i.

        Raises:
            InvalidProfileError: if x_minus_i is not a profile of X_{-i}.
        """
        others = self._space.without(i)
        row = others.index(x_minus_i)
        return ProductSubset(self._space.space(i),
                             self.section_matrix(i)[row])


    def nonempty_sections(self, i):
        """
        Returns:
            ProductSubset: W_i, the profiles of X_{-i} whose upper section is
            nonempty.
        """
        return ProductSubset(self._space.without(i),
                             self.section_matrix(i).any(axis=1))


def _count(space):
    if isinstance(space, StrategySpace):
        return len(space)
    return space.count()


def from_section_matrix(space, i, matrix):
    """ Inverse of ProductSubset.section_matrix.

    Args:
        space (ProductSpace): the product X.
        i (int): the player whose strategy indexes the columns.
        matrix: bool array of shape (|X_{-i}|, |X_i|).

    Returns:
        ProductSubset: the subset of X with those sections.
    """
    sizes = space.sizes()
    others = tuple(n for j, n in enumerate(sizes) if j != i)
    shaped = np.asarray(matrix, dtype=bool).reshape(others + (sizes[i],))
    return ProductSubset(space, np.moveaxis(shaped, -1, i))
