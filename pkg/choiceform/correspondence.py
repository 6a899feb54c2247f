""" Correspondence class. """

# Third party imports
import numpy as np

# Local imports
from choiceform.space import ProductSpace, StrategySpace
from choiceform.subset import ProductSubset
import choiceform.utils as utils


class Correspondence:
    """ A total set-valued map T from a product space to subsets of another.

    Values are stored as a dense bool matrix with one row per domain profile
    and one column per codomain profile, both in lexicographic order. Empty
    values are allowed. Instances are immutable.
    """

    def __init__(self, domain, codomain, values):
        """ Create a correspondence.

        Args:
            domain (Union[ProductSpace, StrategySpace]): the domain.
            codomain (Union[ProductSpace, StrategySpace]): the codomain.
            values: bool array-like of shape (|domain|, |codomain|).

        Raises:
            TypeError: if domain or codomain have the wrong type.
            ValueError: if values has the wrong shape.
        """
        domain = _as_product(domain)
        codomain = _as_product(codomain)
        values = np.asarray(values, dtype=bool)
        expected = (domain.count(), codomain.count())
        if values.shape != expected:
            raise ValueError(f'values shape {values.shape} != {expected}')
        self._domain = domain
        self._codomain = codomain
        self._values = utils.readonly(values)


    @classmethod
    def from_function(cls, domain, codomain, function):
        """ Tabulate a correspondence from a Python function.

        Args:
            domain: the domain space.
            codomain: the codomain space.
            function: callable mapping a domain profile to an iterable of
                codomain profiles.
        """
        domain = _as_product(domain)
        codomain = _as_product(codomain)
        values = np.zeros((domain.count(), codomain.count()), dtype=bool)
        for row, profile in enumerate(domain.profiles()):
            for target in function(profile):
                values[row, codomain.index(_as_tuple(target))] = True
        return cls(domain, codomain, values)


    @classmethod
    def constant(cls, domain, codomain, subset):
        """ The correspondence x -> subset for every x. """
        domain = _as_product(domain)
        if not isinstance(subset, ProductSubset):
            raise TypeError('subset should be ProductSubset')
        values = np.tile(subset.flat(), (domain.count(), 1))
        return cls(domain, subset.space() if codomain is None else codomain,
                   values)


    @classmethod
    def identity(cls, space):
        """ The correspondence x -> {x} on a space. """
        space = _as_product(space)
        return cls(space, space, np.eye(space.count(), dtype=bool))


    @classmethod
    def from_subset_sections(cls, subset, i):
        """ The section correspondence x_{-i} -> C(x_{-i}) of a subset C of X.

        Args:
            subset (ProductSubset): a subset of the product X.
            i (int): the player whose strategy is the value.
        """
        space = subset.space()
        return cls(space.without(i), space.space(i), subset.section_matrix(i))


    def __str__(self):
        return f'Correspondence {self._domain} -> {self._codomain}'


    def __repr__(self):
        return str(self) + f' with {int(self._values.sum())} graph points'


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and self._domain == other._domain \
            and self._codomain == other._codomain \
            and np.array_equal(self._values, other._values)


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash((self._domain, self._codomain, self._values.tobytes()))


    def domain(self):
        """
        Returns:
            ProductSpace: the domain.
        """
        return self._domain


    def codomain(self):
        """
        Returns:
            ProductSpace: the codomain.
        """
        return self._codomain


    def matrix(self):
        """
        Returns:
            np.ndarray: read-only (|domain|, |codomain|) bool matrix.
        """
        return self._values


    def value(self, x):
        """ The value T(x).

        Args:
            x (Union[tuple, int]): a domain profile or its flat index.

        Returns:
            ProductSubset: a subset of the codomain.
        """
        return ProductSubset(self._codomain, self._values[self._row(x)])


    def lower_inverse(self, y):
        """ The lower section T^{-1}(y) = {x : y in T(x)}.

        Args:
            y (Union[tuple, int]): a codomain profile or its flat index.

        Returns:
            ProductSubset: a subset of the domain.
        """
        return ProductSubset(self._domain, self._values[:, self._column(y)])


    def inverse(self):
        """
        Returns:
            Correspondence: the lower inverse T^{-1} as a correspondence from
            the codomain to the domain.
        """
        return Correspondence(self._codomain, self._domain, self._values.T)


    def graph(self):
        """
        Returns:
            ProductSubset: Gr(T) as a subset of domain x codomain.
        """
        space = ProductSpace(self._domain.spaces() + self._codomain.spaces())
        return ProductSubset(space, self._values.reshape(-1))


    def nonempty_domain(self):
        """
        Returns:
            ProductSubset: the domain points with a nonempty value.
        """
        return ProductSubset(self._domain, self._values.any(axis=1))


    def is_nonempty_valued(self):
        """
        Returns:
            bool: True if every value is nonempty.
        """
        return bool(self._values.any(axis=1).all())


    def common_points(self, where=None):
        """ The intersection of the values over a set of domain points.

        Args:
            where (ProductSubset): domain points to intersect over; all of the
                domain if None. An empty set gives the whole codomain.

        Returns:
            ProductSubset: a subset of the codomain.
        """
        rows = self._values if where is None else self._values[where.flat()]
        return ProductSubset(self._codomain, rows.all(axis=0))


    def intersect(self, other):
        """
        Returns:
            Correspondence: x -> T(x) ∩ other(x).
        """
        self._check_compatible(other)
        return Correspondence(self._domain, self._codomain,
                              self._values & other._values)


    def is_subcorrespondence(self, other, where=None):
        """ True if T(x) ⊆ other(x) for every x (in where, if given). """
        self._check_compatible(other)
        extra = self._values & ~other._values
        if where is not None:
            extra = extra[where.flat()]
        return not extra.any()


    def _check_compatible(self, other):
        if not isinstance(other, Correspondence):
            raise TypeError('operand should be Correspondence')
        if self._domain != other._domain or self._codomain != other._codomain:
            raise ValueError('correspondences have different spaces')


    def _row(self, x):
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            self._domain.profile(x)
            return int(x)
        return self._domain.index(x)


    def _column(self, y):
        if isinstance(y, (int, np.integer)) and not isinstance(y, bool):
            self._codomain.profile(y)
            return int(y)
        return self._codomain.index(_as_tuple(y))


def lower_inverse(correspondence, y):
    """ The lower inverse T^{-1}(y) = {x : y in T(x)} of a correspondence.

    Args:
        correspondence (Correspondence): T.
        y (Union[tuple, int]): a codomain point.

    Returns:
        ProductSubset: a subset of the domain of T.
    """
    return correspondence.lower_inverse(y)


def _as_product(space):
    if isinstance(space, StrategySpace):
        return ProductSpace([space])
    if not isinstance(space, ProductSpace):
        raise TypeError('space should be ProductSpace or StrategySpace')
    return space


def _as_tuple(point):
    if isinstance(point, tuple):
        return point
    if isinstance(point, list):
        return tuple(point)
    return (point,)
