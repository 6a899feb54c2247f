""" Exact checkers and enumerators for every equilibrium kind.

All kinds reduce to one pattern. Each player i has a reply matrix R_i of shape
(|X_{-i}|, |X_i|) (the sections of C_i, the best replies, or the replies
with P_i empty). The clause of player i at x holds when x_i is in the row of
x_{-i}; in the EC-like kinds it is also satisfied when that row is empty.
"""

# Standard library imports
import logging

# Third party imports
import numpy as np

# Local imports
from choiceform.certificate import Clause, make_certificate
import choiceform.constants as const
from choiceform.game import ChoiceFormGame
from choiceform.normal_form import NormalFormGame
from choiceform.qualitative import QualitativeGame
from choiceform.subset import from_section_matrix
import choiceform.utils as utils

logger = logging.getLogger(__name__)

GAME_KINDS = {
    ChoiceFormGame: [const.EC, const.SEC],
    NormalFormGame: [const.NASH, const.WEAK_NASH],
    QualitativeGame: [const.QUAL_EQ, const.QUAL_WEAK_EQ],
}

VACUOUS_KINDS = [const.EC, const.WEAK_NASH, const.QUAL_WEAK_EQ]


def game_class(game):
    """
    Returns:
        str: const.CHOICE, const.NORMAL or const.QUALITATIVE.

    Raises:
        TypeError: if game is not one of the three game classes.
    """
    if isinstance(game, ChoiceFormGame):
        return const.CHOICE
    if isinstance(game, NormalFormGame):
        return const.NORMAL
    if isinstance(game, QualitativeGame):
        return const.QUALITATIVE
    raise TypeError('game should be ChoiceFormGame, NormalFormGame or '
                    'QualitativeGame')


def check_kind(game, kind):
    """ Raise UsageError unless kind applies to the game's class. """
    if kind not in const.KINDS:
        raise utils.UsageError(f'unknown equilibrium kind {kind!r}; '
                               f'expected one of {const.KINDS}')
    game_class(game)
    allowed = GAME_KINDS[type(game)]
    if kind not in allowed:
        raise utils.UsageError(f'kind {kind} does not apply to '
                               f'{type(game).__name__}; use one of {allowed}')


def _reply_matrices(game, kind):
    """ The per-player reply matrices that define a kind. """
    n = game.num_players()
    if kind in [const.EC, const.SEC]:
        return [game.choice(i).section_matrix(i) for i in range(n)]
    if kind == const.NASH:
        return [game.best_reply_matrix(i, masked=False) for i in range(n)]
    if kind == const.WEAK_NASH:
        return [game.best_reply_matrix(i, masked=True) for i in range(n)]
    return [game.satisfied(i).section_matrix(i) for i in range(n)]


def _clauses(game, kind, profile):
    product = game.product_space()
    product.check_profile(profile)
    profile = tuple(profile)
    vacuous_allowed = kind in VACUOUS_KINDS
    clauses = []
    for i, replies in enumerate(_reply_matrices(game, kind)):
        x_minus_i = profile[:i] + profile[i + 1:]
        row = replies[product.without(i).index(x_minus_i)]
        reference = np.flatnonzero(row)
        vacuous = vacuous_allowed and reference.size == 0
        holds = vacuous or bool(row[profile[i]])
        clauses.append(Clause(i, reference, vacuous, holds))
    return clauses


def is_equilibrium_in_choice(game, profile):
    """ Check whether a profile is an equilibrium in choice (EC).

    The clause of player i holds when C_i(x_{-i}) is empty or contains x_i.
    A profile where every section is empty is therefore an EC.

    Args:
        game (ChoiceFormGame): the game.
        profile (tuple): the profile x.

    Returns:
        Tuple[bool, List[Clause]]: the verdict and one clause per player.

    Raises:
        InvalidProfileError: if the profile is not in X.
    """
    check_kind(game, const.EC)
    clauses = _clauses(game, const.EC, profile)
    return all(clause.holds() for clause in clauses), clauses


def is_strong_ec(game, profile):
    """
    Returns:
        bool: True if the profile lies in every C_i.
    """
    check_kind(game, const.SEC)
    return all(clause.holds() for clause in _clauses(game, const.SEC, profile))


def is_nash(game, profile):
    """ Check the Nash inequalities at a profile.

    Feasibility masks are ignored: the argmax is taken over X_i everywhere.

    Returns:
        bool: True if no player gains by a unilateral deviation.
    """
    check_kind(game, const.NASH)
    return all(clause.holds() for clause in _clauses(game, const.NASH, profile))


def is_weak_nash(game, profile):
    """
    Returns:
        bool: True if every player with a nonempty best reply at x_{-i}
        plays one.
    """
    check_kind(game, const.WEAK_NASH)
    return all(clause.holds()
               for clause in _clauses(game, const.WEAK_NASH, profile))


def qualitative_equilibrium(game, profile, weak=False):
    """ Check a qualitative game's equilibrium condition at a profile.

    Args:
        game (QualitativeGame): the game.
        profile (tuple): the profile x.
        weak (bool): if True, only players with some reply y_i satisfying
            P_i(x_{-i}, y_i) = ∅ need P_i(x) = ∅.

    Returns:
        bool: the verdict.
    """
    kind = const.QUAL_WEAK_EQ if weak else const.QUAL_EQ
    check_kind(game, kind)
    return all(clause.holds() for clause in _clauses(game, kind, profile))


def equilibrium_mask(game, kind):
    """ The set of profiles satisfying a kind, computed for all of X at once.

    Returns:
        np.ndarray: bool array shaped by the player sizes.

    Raises:
        UsageError: if kind does not apply to the game's class.
    """
    check_kind(game, kind)
    product = game.product_space()
    mask = np.ones(product.sizes(), dtype=bool)
    vacuous_allowed = kind in VACUOUS_KINDS
    for i, replies in enumerate(_reply_matrices(game, kind)):
        ok = from_section_matrix(product, i, replies).mask()
        if vacuous_allowed:
            empty = ~replies.any(axis=1)
            ok = ok | utils.lift(empty, i, product.sizes())
        mask &= ok
    return mask


def enumerate_equilibria(game, kind):
    """ Every profile of the given kind, with certificates.

    Args:
        game: a ChoiceFormGame, NormalFormGame or QualitativeGame.
        kind (str): an equilibrium kind compatible with the game class.

    Returns:
        List[EquilibriumCertificate]: in lexicographic profile order.

    Raises:
        UsageError: if kind does not apply to the game's class.
    """
    mask = equilibrium_mask(game, kind)
    product = game.product_space()
    indices = np.flatnonzero(mask.reshape(-1))
    logger.debug('%s: %d %s profiles out of %d', game, indices.size, kind,
                 product.count())
    result = []
    for index in indices:
        profile = product.profile(int(index))
        result.append(make_certificate(product, profile, kind,
                                       _clauses(game, kind, profile)))
    return result


def check(game, kind, profile):
    """ Check a single profile and return its certificate.

    The certificate is returned whether or not the profile qualifies; use
    :meth:`EquilibriumCertificate.holds`.

    Raises:
        UsageError: if kind does not apply to the game's class.
        InvalidProfileError: if the profile is not in X.
    """
    check_kind(game, kind)
    return make_certificate(game.product_space(), tuple(profile), kind,
                            _clauses(game, kind, profile))
