""" Seeded random instances: games, correspondences and V4 grid games.

Every generator takes a seed (int) or a numpy Generator, so a seed always
reproduces the same instance.
"""

# Third party imports
import numpy as np

# Local imports
from choiceform.correspondence import Correspondence
from choiceform.game import ChoiceFormGame
from choiceform.normal_form import NormalFormGame
from choiceform.qualitative import QualitativeGame
from choiceform.space import ProductSpace, StrategySpace
from choiceform.subset import ProductSubset, from_section_matrix

MAX_UTILITY = 4 # small range so ties in best replies are common


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_spaces(seed, num_players=None, max_strategies=4, grid=False):
    """ Random strategy spaces.

    Args:
        seed: int or numpy Generator.
        num_players (int): 2 or 3 at random if None.
        max_strategies (int): the largest space size, >= 1.
        grid (bool): 1-D unit-mesh grids instead of abstract spaces.

    Returns:
        List[StrategySpace]: one space per player.
    """
    rng = _rng(seed)
    if num_players is None:
        num_players = int(rng.integers(2, 4))
    spaces = []
    for player in range(num_players):
        size = int(rng.integers(1, max_strategies + 1))
        if grid:
            spaces.append(StrategySpace.grid(player, [(0, size - 1)], 1))
        else:
            labels = [f's{k}' for k in range(size)]
            spaces.append(StrategySpace.abstract(player, labels))
    return spaces


def random_normal_form(seed, num_players=None, max_strategies=4,
                       feasible_density=None, grid=False):
    """ A random normal-form game with small integer utilities.

    Args:
        seed: int or numpy Generator.
        num_players (int): 2 or 3 at random if None.
        max_strategies (int): the largest space size.
        feasible_density (float): if given, each x_{-i} is feasible for
            player i with this probability; default feasibility otherwise.
        grid (bool): use 1-D grid spaces.

    Returns:
        NormalFormGame: the game.
    """
    rng = _rng(seed)
    spaces = random_spaces(rng, num_players, max_strategies, grid)
    product = ProductSpace(spaces)
    utilities = [rng.integers(0, MAX_UTILITY, size=product.sizes())
                 for _ in spaces]
    feasible = None
    if feasible_density is not None:
        feasible = [ProductSubset(product.without(i),
                                  rng.random(product.without(i).count())
                                  < feasible_density)
                    for i in range(len(spaces))]
    return NormalFormGame(spaces, utilities, feasible)


def random_choice_form(seed, num_players=None, max_strategies=4,
                       density=None, grid=False):
    """ A random game in choice form.

    Args:
        seed: int or numpy Generator.
        num_players (int): 2 or 3 at random if None.
        max_strategies (int): the largest space size.
        density (float): membership probability of each profile in each
            C_i; drawn per game if None.
        grid (bool): use 1-D grid spaces.

    Returns:
        ChoiceFormGame: the game.
    """
    rng = _rng(seed)
    spaces = random_spaces(rng, num_players, max_strategies, grid)
    product = ProductSpace(spaces)
    if density is None:
        density = float(rng.uniform(0.1, 0.9))
    choice = [ProductSubset(product, rng.random(product.count()) < density)
              for _ in spaces]
    return ChoiceFormGame(spaces, choice)


def random_qualitative(seed, num_players=None, max_strategies=4,
                       density=None, grid=False):
    """ A random qualitative game.

    Args:
        seed: int or numpy Generator.
        num_players (int): 2 or 3 at random if None.
        max_strategies (int): the largest space size.
        density (float): probability that y_i is in P_i(x); drawn per game
            if None.
        grid (bool): use 1-D grid spaces.

    Returns:
        QualitativeGame: the game.
    """
    rng = _rng(seed)
    spaces = random_spaces(rng, num_players, max_strategies, grid)
    product = ProductSpace(spaces)
    if density is None:
        density = float(rng.uniform(0.05, 0.6))
    prefs = [rng.random((product.count(), len(space))) < density
             for space in spaces]
    return QualitativeGame(spaces, prefs)


def random_correspondence(seed, domain, codomain, density=0.5):
    """ A correspondence with independently random values.

    Args:
        seed: int or numpy Generator.
        domain (Union[ProductSpace, StrategySpace]): the domain.
        codomain (Union[ProductSpace, StrategySpace]): the codomain.
        density (float): membership probability of each pair.

    Returns:
        Correspondence: the correspondence, possibly with empty values.
    """
    rng = _rng(seed)
    domain = _as_product(domain)
    codomain = _as_product(codomain)
    values = rng.random((domain.count(), codomain.count())) < density
    return Correspondence(domain, codomain, values)


def random_interval_correspondence(seed, domain, codomain, max_width=None):
    """ A correspondence between 1-D grids whose values are intervals.

    Both endpoints follow random walks with steps in {-1, 0, 1}, so values
    at neighbouring points differ by at most one mesh step at each end.

    Args:
        seed: int or numpy Generator.
        domain (StrategySpace): a 1-D grid.
        codomain (StrategySpace): a 1-D grid.
        max_width (int): the largest interval width in points; the codomain
            size if None.

    Returns:
        Correspondence: a nonempty interval-valued correspondence.
    """
    rng = _rng(seed)
    n, m = len(domain), len(codomain)
    max_width = m if max_width is None else min(max_width, m)
    low = int(rng.integers(0, m))
    high = min(m - 1, low + int(rng.integers(0, max_width)))
    values = np.zeros((n, m), dtype=bool)
    for x in range(n):
        values[x, low:high + 1] = True
        low = int(np.clip(low + rng.integers(-1, 2), 0, m - 1))
        high = int(np.clip(high + rng.integers(-1, 2), low,
                           min(m - 1, low + max_width - 1)))
    return Correspondence(domain, codomain, values)


def random_v4_grid_game(seed, num_players=2, num_points=None, min_width=2):
    """ A game on 1-D grids satisfying the V4 hypotheses at radius 1.

    C_i(x_{-i}) is the interval [a_i(x_j), a_i(x_j) + w_i] of X_i, driven
    by the coordinate of player j = i + 1 (mod n). The start a_i is a
    random walk with steps in {-1, 0, 1} and w_i >= 2, so neighbouring
    sections share a point and every lower section with its neighbourhood
    keeps a common reply.

    Args:
        seed: int or numpy Generator.
        num_players (int): the number of players.
        num_points (int): points per grid (>= 3); 3 to 7 at random if None.
        min_width (int): smallest interval width in mesh steps, >= 2.

    Returns:
        ChoiceFormGame: the game.
    """
    rng = _rng(seed)
    if min_width < 2:
        raise ValueError(f'min_width {min_width} is < 2')
    spaces = []
    for player in range(num_players):
        size = int(rng.integers(3, 8)) if num_points is None else num_points
        if size < min_width + 1:
            raise ValueError(f'{size} points cannot hold width {min_width}')
        spaces.append(StrategySpace.grid(player, [(0, size - 1)], 1))
    product = ProductSpace(spaces)

    choice = []
    for i, space in enumerate(spaces):
        n = len(space)
        width = int(rng.integers(min_width, n))
        driver = (i + 1) % num_players
        steps = len(spaces[driver]) if num_players > 1 else 1
        start = int(rng.integers(0, n - width))
        starts = []
        for _ in range(steps):
            starts.append(start)
            start = int(np.clip(start + rng.integers(-1, 2), 0, n - 1 - width))
        sections = np.zeros(product.sizes(), dtype=bool)
        sections = np.moveaxis(sections, i, -1)
        others = [j for j in range(num_players) if j != i]
        for x_minus_i in np.ndindex(*[len(spaces[j]) for j in others]):
            k = x_minus_i[others.index(driver)] if num_players > 1 else 0
            sections[x_minus_i][starts[k]:starts[k] + width + 1] = True
        choice.append(from_section_matrix(product, i,
                                          sections.reshape(-1, n)))
    return ChoiceFormGame(spaces, choice)


def _as_product(space):
    if isinstance(space, StrategySpace):
        return ProductSpace([space])
    return space
