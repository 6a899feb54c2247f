""" ChoiceFormGame class and the core operations on choice profiles. """

# Third party imports
import numpy as np

# Local imports
from choiceform.correspondence import Correspondence
from choiceform.space import ProductSpace, StrategySpace
from choiceform.subset import ProductSubset
import choiceform.utils as utils


class ChoiceFormGame:
    """ A game in choice form: strategy spaces X_i and a choice profile C_i.

    Each C_i is a subset of the product X. The constructor does not require
    the C_i to be nonempty; the existence theorems that need it check it
    themselves.
    """

    def __init__(self, spaces, choice):
        """ Create a game in choice form.

        Args:
            spaces (List[StrategySpace]): one space per player, in order.
            choice (List[ProductSubset]): C_i over the product X, one per
                player.

        Raises:
            TypeError: if incorrectly typed parameters are given.
            ValueError: if the choice sets are not all over X.
        """
        if not spaces:
            raise ValueError('a game needs at least one player')
        if not all(isinstance(space, StrategySpace) for space in spaces):
            raise TypeError('spaces should be StrategySpace')
        if len(choice) != len(spaces):
            raise ValueError(f'{len(choice)} choice sets for '
                             f'{len(spaces)} players')
        product = ProductSpace(spaces)
        for subset in choice:
            if not isinstance(subset, ProductSubset):
                raise TypeError('choice sets should be ProductSubset')
            if subset.space() != product:
                raise ValueError('every choice set should be over X')

        self._product = product
        self._choice = tuple(choice)


    def __str__(self):
        return f'ChoiceFormGame {self._product}'


    def __repr__(self):
        sizes = ', '.join(str(c.count()) for c in self._choice)
        return str(self) + f' with |C_i| = ({sizes})'


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and self._choice == other._choice


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash(self._choice)


    def num_players(self):
        """
        Returns:
            int: the number of players.
        """
        return self._product.num_players()


    def spaces(self):
        """
        Returns:
            List[StrategySpace]: the players' spaces.
        """
        return self._product.spaces()


    def product_space(self):
        """
        Returns:
            ProductSpace: X.
        """
        return self._product


    def choice(self, i):
        """
        Returns:
            ProductSubset: C_i.
        """
        utils.check_player(i, self.num_players())
        return self._choice[i]


    def upper_section(self, i, x_minus_i):
        """ C_i(x_{-i}); see :func:`upper_section`. """
        return upper_section(self.choice(i), x_minus_i, i)


    def sections(self, i):
        """
        Returns:
            Correspondence: x_{-i} -> C_i(x_{-i}) from X_{-i} to X_i.
        """
        return Correspondence.from_subset_sections(self.choice(i), i)


    def nonempty_sections(self, i):
        """
        Returns:
            ProductSubset: W_i = {x_{-i} : C_i(x_{-i}) != ∅}.
        """
        return self.choice(i).nonempty_sections(i)


def upper_section(choice_set, x_minus_i, i):
    """ The upper section through x_{-i} of C_i.

    Args:
        choice_set (ProductSubset): C_i over X.
        x_minus_i (tuple): a profile of X_{-i}.
        i (int): the player.

    Returns:
        ProductSubset: {y_i in X_i : (x_{-i}, y_i) in C_i}, possibly empty.

    Raises:
        InvalidProfileError: if x_minus_i is not a profile of X_{-i}.
    """
    if not isinstance(choice_set, ProductSubset):
        raise TypeError('choice_set should be ProductSubset')
    return choice_set.section(i, x_minus_i)


def check_assumption_a(game):
    """ Check that every profile has some player with a nonempty section.

    Args:
        game (ChoiceFormGame): the game.

    Returns:
        Tuple[bool, Union[tuple, None]]: (holds, violating profile or None).
    """
    product = game.product_space()
    covered = np.zeros(product.sizes(), dtype=bool)
    for i in range(game.num_players()):
        covered |= utils.lift(game.nonempty_sections(i).flat(), i,
                              product.sizes())
    missing = np.flatnonzero(~covered.reshape(-1))
    if missing.size:
        return False, product.profile(int(missing[0]))
    return True, None


def has_nonempty_sections(game):
    """ True if C_i(x_{-i}) != ∅ for every player i and every x_{-i}.

    Under this condition the equilibria in choice are strong.
    """
    return all(game.nonempty_sections(i).count() ==
               game.product_space().without(i).count()
               for i in range(game.num_players()))
