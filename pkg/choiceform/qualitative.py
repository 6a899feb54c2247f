""" QualitativeGame class. """

# Standard library imports
import logging

# Third party imports
import numpy as np

# Local imports
from choiceform.game import ChoiceFormGame
from choiceform.space import ProductSpace, StrategySpace
from choiceform.subset import ProductSubset
import choiceform.utils as utils

logger = logging.getLogger(__name__)


class QualitativeGame:
    """ A qualitative game (X_i, P_i) with preference correspondences.

    P_i maps every profile of X to the subset of X_i that player i strictly
    prefers there. It is stored as a bool matrix with one row per profile of
    X (lexicographic) and one column per point of X_i.
    """

    def __init__(self, spaces, prefs):
        """ Create a qualitative game.

        Args:
            spaces (List[StrategySpace]): one space per player.
            prefs (List): per player a bool array-like of shape
                (|X|, |X_i|).

        Raises:
            TypeError: if incorrectly typed parameters are given.
            ValueError: if a preference table has the wrong shape.
        """
        if not spaces:
            raise ValueError('a game needs at least one player')
        if not all(isinstance(space, StrategySpace) for space in spaces):
            raise TypeError('spaces should be StrategySpace')
        product = ProductSpace(spaces)
        if len(prefs) != product.num_players():
            raise ValueError(f'{len(prefs)} preference tables for '
                             f'{product.num_players()} players')

        tables = []
        for i, table in enumerate(prefs):
            table = np.asarray(table, dtype=bool)
            expected = (product.count(), product.sizes()[i])
            if table.shape != expected:
                raise ValueError(f'preference table of player {i} has shape '
                                 f'{table.shape}, expected {expected}')
            tables.append(utils.readonly(table))

        self._product = product
        self._prefs = tuple(tables)


    @classmethod
    def from_pairs(cls, spaces, pairs):
        """ Build a qualitative game from (profile, preferred point) pairs.

        Args:
            spaces (List[StrategySpace]): one space per player.
            pairs (List[List[Tuple[tuple, int]]]): per player, the pairs
                (x, y_i) with y_i in P_i(x).

        Raises:
            InvalidProfileError: if a profile or point is out of range.
        """
        product = ProductSpace(spaces)
        tables = []
        for i, player_pairs in enumerate(pairs):
            table = np.zeros((product.count(), product.sizes()[i]), dtype=bool)
            for profile, point in player_pairs:
                product.space(i).check_index(point)
                table[product.index(profile), point] = True
            tables.append(table)
        return cls(spaces, tables)


    def __str__(self):
        return f'QualitativeGame {self._product}'


    def __repr__(self):
        return str(self)


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) \
            and self._product == other._product \
            and all(np.array_equal(a, b) for a, b in
                    zip(self._prefs, other._prefs))


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash((self._product, tuple(p.tobytes() for p in self._prefs)))


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


    def preference_matrix(self, i):
        """
        Returns:
            np.ndarray: read-only (|X|, |X_i|) bool table of P_i.
        """
        utils.check_player(i, self.num_players())
        return self._prefs[i]


    def preferred(self, i, profile):
        """
        Returns:
            ProductSubset: P_i(profile), a subset of X_i.
        """
        utils.check_player(i, self.num_players())
        row = self._product.index(profile)
        return ProductSubset(self._product.space(i), self._prefs[i][row])


    def satisfied(self, i):
        """
        Returns:
            ProductSubset: {x in X : P_i(x) = ∅}.
        """
        return ProductSubset(self._product, ~self.preference_matrix(i).any(axis=1))


    def pairs(self, i):
        """
        Returns:
            List[Tuple[tuple, int]]: the (profile, preferred point) pairs of
            P_i in lexicographic order.
        """
        rows, columns = np.nonzero(self.preference_matrix(i))
        return [(self._product.profile(int(r)), int(c))
                for r, c in zip(rows, columns)]


def to_choice_form_qualitative(game):
    """ The game in choice form with C_i = {x : P_i(x) = ∅}.

    Args:
        game (QualitativeGame): the game.

    Returns:
        ChoiceFormGame: the converted game.
    """
    choice = [game.satisfied(i) for i in range(game.num_players())]
    logger.debug('converted %s to choice form, |C_i| = %s', game,
                 [c.count() for c in choice])
    return ChoiceFormGame(game.spaces(), choice)
