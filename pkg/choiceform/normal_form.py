""" NormalFormGame class and best replies. """

# Standard library imports
import logging

# Third party imports
import numpy as np

# Local imports
from choiceform.game import ChoiceFormGame
from choiceform.space import ProductSpace, StrategySpace
from choiceform.subset import ProductSubset, from_section_matrix
import choiceform.utils as utils

logger = logging.getLogger(__name__)


class NormalFormGame:
    """ A finite game in normal form (X_i, u_i).

    Each u_i is a real table over X, shaped by the per-player sizes. The
    optional feasibility mask of player i is a subset of X_{-i}; off the mask
    the best reply of i is empty. It is the only way best replies can be
    empty in a finite game.
    """

    def __init__(self, spaces, utilities, feasible=None):
        """ Create a normal-form game.

        Args:
            spaces (List[StrategySpace]): one space per player.
            utilities (List): per player a real array-like, flat in
                lexicographic profile order or shaped by the player sizes.
            feasible (List[Union[ProductSubset, None]]): optional per-player
                subsets of X_{-i}. None, or a None entry, means all of X_{-i}.

        Raises:
            TypeError: if incorrectly typed parameters are given.
            ValueError: if the tables or masks do not fit the spaces.
        """
        if not spaces:
            raise ValueError('a game needs at least one player')
        if not all(isinstance(space, StrategySpace) for space in spaces):
            raise TypeError('spaces should be StrategySpace')
        product = ProductSpace(spaces)
        n = product.num_players()
        if len(utilities) != n:
            raise ValueError(f'{len(utilities)} utility tables for {n} players')

        tables = []
        for i, table in enumerate(utilities):
            table = np.asarray(table, dtype=float)
            if table.size != product.count():
                raise ValueError(f'utility table of player {i} has '
                                 f'{table.size} entries for '
                                 f'{product.count()} profiles')
            if not np.all(np.isfinite(table)):
                raise ValueError(f'utility table of player {i} is not finite')
            tables.append(utils.readonly(table.reshape(product.sizes())))

        if feasible is None:
            feasible = [None] * n
        if len(feasible) != n:
            raise ValueError(f'{len(feasible)} feasibility masks for '
                             f'{n} players')
        masks = []
        for i, mask in enumerate(feasible):
            others = product.without(i)
            if mask is None:
                mask = ProductSubset.full(others)
            if not isinstance(mask, ProductSubset):
                raise TypeError('feasibility masks should be ProductSubset')
            if mask.space() != others:
                raise ValueError(f'feasibility mask of player {i} is not '
                                 'over X_{-i}')
            masks.append(mask)

        self._product = product
        self._utilities = tuple(tables)
        self._feasible = tuple(masks)


    def __str__(self):
        return f'NormalFormGame {self._product}'


    def __repr__(self):
        return str(self)


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) \
            and self._product == other._product \
            and self._feasible == other._feasible \
            and all(np.array_equal(a, b) for a, b in
                    zip(self._utilities, other._utilities))


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash((self._product, self._feasible,
                     tuple(u.tobytes() for u in self._utilities)))


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


    def utility(self, i):
        """
        Returns:
            np.ndarray: read-only table of u_i, one axis per player.
        """
        utils.check_player(i, self.num_players())
        return self._utilities[i]


    def payoff(self, i, profile):
        """
        Returns:
            float: u_i(profile).
        """
        self._product.check_profile(profile)
        return float(self.utility(i)[tuple(profile)])


    def feasible(self, i):
        """
        Returns:
            ProductSubset: the subset of X_{-i} where B_i is considered.
        """
        utils.check_player(i, self.num_players())
        return self._feasible[i]


    def has_default_feasibility(self):
        """
        Returns:
            bool: True if every feasibility mask is all of X_{-i}.
        """
        return all(mask.count() == mask.space().count()
                   for mask in self._feasible)


    def best_reply_matrix(self, i, masked=True):
        """ Every best reply of player i at once.

        Args:
            i (int): the player.
            masked (bool): whether to empty the rows off the feasibility
                mask.

        Returns:
            np.ndarray: bool array of shape (|X_{-i}|, |X_i|); row r is
            B_i at the r-th profile of X_{-i}. Ties are all kept.
        """
        table = self.utility(i)
        size_i = self._product.sizes()[i]
        rows = np.moveaxis(table, i, -1).reshape(-1, size_i)
        replies = rows == rows.max(axis=1, keepdims=True)
        if masked:
            replies &= self._feasible[i].flat()[:, None]
        return replies


def best_reply(game, i, x_minus_i):
    """ The best reply B_i(x_{-i}) of a normal-form game.

    Args:
        game (NormalFormGame): the game.
        i (int): the player.
        x_minus_i (tuple): a profile of X_{-i}.

    Returns:
        ProductSubset: the argmax of u_i(x_{-i}, .) over X_i, or the empty set
        if x_{-i} is outside player i's feasibility mask.

    Raises:
        InvalidProfileError: if x_minus_i is not a profile of X_{-i}.
    """
    utils.check_player(i, game.num_players())
    product = game.product_space()
    row = product.without(i).index(x_minus_i)
    return ProductSubset(product.space(i), game.best_reply_matrix(i)[row])


def to_choice_form_normal(game):
    """ The game in choice form whose C_i are the best-reply graphs Gr(B_i).

    Args:
        game (NormalFormGame): the game.

    Returns:
        ChoiceFormGame: the converted game.
    """
    product = game.product_space()
    choice = [from_section_matrix(product, i, game.best_reply_matrix(i))
              for i in range(game.num_players())]
    logger.debug('converted %s to choice form, |C_i| = %s', game,
                 [c.count() for c in choice])
    return ChoiceFormGame(product.spaces(), choice)
