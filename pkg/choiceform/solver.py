""" Constructive search for equilibria in choice.

The pipeline follows the existence proofs at grid scale: check the
hypotheses of the chosen variant, build each player's piecewise proof
correspondence, take a discrete selection where the proof uses one, scan
the whole grid for the smallest fixed-point residual, and verify the
profile found with the exact checker. A profile that fails the exact check
is never returned.
"""

# Standard library imports
import logging

# Third party imports
import numpy as np

# Local imports
import choiceform.constants as const
from choiceform.convexity import grid_convex_hull
from choiceform.correspondence import Correspondence
from choiceform.equilibrium import (check, is_equilibrium_in_choice,
                                    is_strong_ec)
from choiceform.game import ChoiceFormGame, check_assumption_a
from choiceform.hypotheses import check_theorem_hypotheses
from choiceform.normal_form import NormalFormGame, to_choice_form_normal
from choiceform.qualitative import QualitativeGame, to_choice_form_qualitative
from choiceform.space import ProductSpace
from choiceform.subset import ProductSubset
from choiceform.topology import GridTopology
import choiceform.utils as utils

logger = logging.getLogger(__name__)

ROUTE_CORRESPONDENCE = 'correspondence'
ROUTE_SELECTION = 'selection'

SELECTION_VARIANTS = [const.V1, const.V2, const.V3]

##################################
# PROOF CORRESPONDENCES
##################################

class ProofCorrespondence:
    """ The piecewise correspondence T_i of an existence proof.

    On W the value comes from the variant's inner construction; off W it is
    the grid-convex hull of the union of the nonempty sections. Every value
    is nonempty.
    """

    def __init__(self, player, variant, inner, off_value, where, support=None):
        """
        Args:
            player (int): the player position i.
            variant (str): one of const.VARIANTS.
            inner (Correspondence): X_{-i} -> X_i, used on W.
            off_value (ProductSubset): the value off W, a subset of X_i.
            where (ProductSubset): W, a subset of X_{-i}.
            support (Correspondence): for V1, the correspondence of the
                upper sections of C_i, which contains this one. None
                otherwise.
        """
        self._player = player
        self._variant = variant
        self._inner = inner
        self._off_value = off_value
        self._where = where
        self._support = support
        rows = where.flat()[:, None]
        values = np.where(rows, inner.matrix(), off_value.flat()[None, :])
        self._correspondence = Correspondence(inner.domain(), inner.codomain(),
                                              values)


    def __str__(self):
        return f'ProofCorrespondence {self._variant} player {self._player}'


    def __repr__(self):
        return str(self) + f' with |W| = {self._where.count()}'


    def player(self):
        """
        Returns:
            int: the player position.
        """
        return self._player


    def variant(self):
        """
        Returns:
            str: the variant that built it.
        """
        return self._variant


    def inner(self):
        """
        Returns:
            Correspondence: the construction used on W.
        """
        return self._inner


    def off_w_value(self):
        """
        Returns:
            ProductSubset: the value off W.
        """
        return self._off_value


    def where(self):
        """
        Returns:
            ProductSubset: W, a subset of X_{-i}.
        """
        return self._where


    def support(self):
        """
        Returns:
            Union[Correspondence, None]: the V1 upper-section correspondence.
        """
        return self._support


    def correspondence(self):
        """
        Returns:
            Correspondence: the total correspondence X_{-i} -> X_i.
        """
        return self._correspondence


def _hull_or_union(subset):
    if subset.space().is_grid():
        return grid_convex_hull(subset)
    return subset


def build_proof_correspondence(game, i, variant, aux=None,
                               radius=const.DEFAULT_RADIUS):
    """ Build the proof correspondence of player i for a variant.

    V1 uses the subfamily D_i of aux['D'] (its own W and hull). V2 takes a
    selection of aux['S'][i] on W_i, and V3 a selection of C_i ∩ S_i on W_i;
    their values on W_i are singletons. V4 and V5 use the sections of C_i.

    Args:
        game (ChoiceFormGame): the game.
        i (int): the player.
        variant (str): one of const.VARIANTS.
        aux (dict): the variant's ingredients.
        radius (int): neighbourhood radius for the V2/V3 selections.

    Returns:
        ProofCorrespondence: the construction.

    Raises:
        ConstructionError: if C_i is empty or an ingredient has empty values
            where the construction needs it.
        UsageError: if an ingredient is missing.
    """
    if variant not in const.VARIANTS:
        raise utils.UsageError(f'unknown variant {variant!r}')
    aux = aux or {}
    product = game.product_space()
    others, own = product.without(i), product.space(i)
    choice = game.choice(i)
    if choice.is_empty():
        raise utils.ConstructionError(
            f'player {i}: condition a) "C_i is nonempty" fails',
            condition=const.COND_SPACE)

    sections = choice.section_matrix(i)
    where = game.nonempty_sections(i)
    union = ProductSubset(own, sections.any(axis=0))
    off_value = _hull_or_union(union)
    upper = Correspondence(others, own, sections)

    if variant in [const.V4, const.V5]:
        result = ProofCorrespondence(i, variant, upper, off_value, where)
    elif variant == const.V1:
        result = _build_v1(game, i, aux, upper, off_value, where)
    else:
        result = _build_selection_inner(game, i, variant, aux, off_value,
                                        where, radius)
    logger.debug('built %r', result)
    return result


def _ingredient(aux, key, i, variant, condition):
    if aux.get(key) is None:
        raise utils.UsageError(f'{variant} condition {condition} needs the '
                               f'ingredient aux[{key!r}]')
    return aux[key][i]


def _build_v1(game, i, aux, upper, off_value, where):
    subfamily = _ingredient(aux, 'D', i, const.V1, const.COND_SUBFAMILY)
    d_sections = subfamily.section_matrix(i)
    if not d_sections.any():
        raise utils.ConstructionError(
            f'player {i}: condition b) fails, D_i is empty',
            condition=const.COND_SUBFAMILY)
    product = game.product_space()
    own = product.space(i)
    d_where = ProductSubset(product.without(i), d_sections.any(axis=1))
    d_off = _hull_or_union(ProductSubset(own, d_sections.any(axis=0)))
    support = ProofCorrespondence(i, const.V4, upper, off_value, where)
    inner = Correspondence(product.without(i), own, d_sections)
    return ProofCorrespondence(i, const.V1, inner, d_off, d_where,
                               support=support.correspondence())


def _build_selection_inner(game, i, variant, aux, off_value, where, radius):
    condition = const.COND_WCG if variant == const.V2 else const.COND_INNER_LSC
    inner = _ingredient(aux, 'S', i, variant, condition)
    values = inner.matrix()
    if variant == const.V3:
        values = values & game.choice(i).section_matrix(i)
    rows = where.flat()
    empty = np.flatnonzero(rows & ~values.any(axis=1))
    if empty.size:
        others = game.product_space().without(i)
        raise utils.ConstructionError(
            f'player {i}: condition {condition}) fails, the value at '
            f'{others.profile(int(empty[0]))} is empty', condition=condition)
    restricted = Correspondence(inner.domain(), inner.codomain(), values)
    selection = construct_selection(
        restricted, GridTopology(inner.domain(), radius), where=where,
        player=i)
    return ProofCorrespondence(i, variant, selection.as_correspondence(),
                               off_value, where)

##################################
# SELECTIONS
##################################

class DiscreteSelection:
    """ A single-valued f_i with f_i(x) in T(x) on its domain.

    The modulus is the largest distance between the values at neighbouring
    domain points, the grid stand-in for continuity.
    """

    def __init__(self, player, values, modulus, domain, codomain, where=None):
        """
        Args:
            player (Union[int, None]): the player, if any.
            values (np.ndarray): codomain index per domain profile, -1 off
                the selection's domain.
            modulus (float): the realized modulus.
            domain (ProductSpace): X_{-i}.
            codomain (ProductSpace): X_i.
            where (ProductSubset): the selection's domain, None for all.
        """
        self._player = player
        self._values = utils.readonly(np.asarray(values, dtype=np.int64))
        self._modulus = float(modulus)
        self._domain = domain
        self._codomain = codomain
        self._where = where


    def __str__(self):
        return f'DiscreteSelection player {self._player} ' \
            f'modulus {self._modulus:g}'


    def __repr__(self):
        return str(self)


    def player(self):
        """
        Returns:
            Union[int, None]: the player.
        """
        return self._player


    def values(self):
        """
        Returns:
            np.ndarray: codomain index per domain profile, -1 where undefined.
        """
        return self._values


    def value(self, x):
        """
        Returns:
            int: the codomain index f(x).
        """
        return int(self._values[self._domain.index(x)])


    def modulus(self):
        """
        Returns:
            float: the largest step between neighbouring values.
        """
        return self._modulus


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


    def is_total(self):
        """
        Returns:
            bool: True if f is defined on the whole domain.
        """
        return bool((self._values >= 0).all())


    def as_correspondence(self):
        """
        Returns:
            Correspondence: x -> {f(x)}, empty where f is undefined.
        """
        matrix = np.zeros((self._domain.count(), self._codomain.count()),
                          dtype=bool)
        rows = np.flatnonzero(self._values >= 0)
        matrix[rows, self._values[rows]] = True
        return Correspondence(self._domain, self._codomain, matrix)


def construct_selection(target, topo=None, where=None, player=None):
    """ Greedy discrete selection of a nonempty-valued correspondence.

    Domain points are visited in lexicographic order. Each takes the point of
    T(x) that minimizes the largest distance to the values already chosen at
    its neighbours, the first such point on ties.

    Args:
        target (Union[ProofCorrespondence, Correspondence]): T.
        topo (GridTopology): neighbourhoods of the domain, radius 1 if None.
        where (ProductSubset): select only on these domain points.
        player (int): recorded on the selection; taken from a
            ProofCorrespondence when None.

    Returns:
        DiscreteSelection: f with f(x) in T(x) on the selected points.

    Raises:
        ValueError: if some selected point has an empty value.
    """
    if isinstance(target, ProofCorrespondence):
        player = target.player() if player is None else player
        target = target.correspondence()
    domain, codomain = target.domain(), target.codomain()
    topo = GridTopology(domain) if topo is None else topo.with_space(domain)
    values = target.matrix()
    distances = _distance_matrix(codomain)
    rows = np.ones(domain.count(), dtype=bool) if where is None \
        else where.flat()

    chosen = np.full(domain.count(), -1, dtype=np.int64)
    for x in np.flatnonzero(rows):
        candidates = np.flatnonzero(values[x])
        if candidates.size == 0:
            raise ValueError(f'value at {domain.profile(int(x))} is empty')
        neighbours = [z for z in topo.neighborhood(int(x)) if chosen[z] >= 0]
        if neighbours:
            cost = distances[np.ix_(candidates, chosen[neighbours])].max(axis=1)
            chosen[x] = candidates[int(np.argmin(cost))]
        else:
            chosen[x] = candidates[0]

    sources, targets = topo.neighbor_pairs()
    keep = rows[sources] & rows[targets]
    modulus = float(distances[chosen[sources[keep]],
                              chosen[targets[keep]]].max()) \
        if keep.any() else 0.0
    return DiscreteSelection(player, chosen, modulus, domain, codomain, where)


def _distance_matrix(product):
    """ Sup-norm distances between the profiles of a product space. """
    if product.num_players() == 1:
        return product.space(0).distance_matrix()
    result = np.zeros((product.count(), product.count()))
    blocks = np.meshgrid(*(np.arange(n) for n in product.sizes()),
                         indexing='ij')
    for space, block in zip(product.spaces(), blocks):
        index = block.reshape(-1)
        result = np.maximum(result,
                            space.distance_matrix()[np.ix_(index, index)])
    return result

##################################
# FIXED POINTS
##################################

class FixedPointResult:
    """ The lexicographically first minimizer of the fixed-point residual. """

    def __init__(self, point, residual, tol):
        """
        Args:
            point (tuple): the profile.
            residual (float): its residual.
            tol (float): the acceptance tolerance.
        """
        self._point = tuple(int(k) for k in point)
        self._residual = float(residual)
        self._tol = float(tol)


    def __str__(self):
        return f'FixedPointResult {self._point} residual {self._residual:g}'


    def __repr__(self):
        return str(self) + f' (tol {self._tol:g})'


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and self.to_dict() == other.to_dict()


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash((self._point, self._residual, self._tol))


    def point(self):
        """
        Returns:
            tuple: the profile.
        """
        return self._point


    def residual(self):
        """
        Returns:
            float: the sup-norm residual at the profile.
        """
        return self._residual


    def tol(self):
        """
        Returns:
            float: the tolerance used.
        """
        return self._tol


    def accepted(self):
        """
        Returns:
            bool: True if the residual is within tolerance.
        """
        return self._residual <= self._tol + const.HULL_TOLERANCE


    def to_dict(self):
        """
        Returns:
            dict: a JSON-ready view.
        """
        return {'point': list(self._point), 'residual': self._residual,
                'tol': self._tol}


def fixed_point_search(target, tol=None):
    """ Scan every profile for the smallest fixed-point residual.

    Three targets are accepted:

    - a list of DiscreteSelection f_i: X_{-i} -> X_i, residual
      max_i d(x_i, f_i(x_{-i}));
    - a list of per-player correspondences T_i: X_{-i} -> X_i (or
      ProofCorrespondence), residual max_i dist(x_i, T_i(x_{-i}));
    - a single Correspondence T: X -> X, residual dist(x, T(x)).

    Empty values give an infinite residual.

    Args:
        target: see above.
        tol (float): acceptance tolerance, >= 0. Defaults to the largest
            mesh, or 0 when every space is abstract.

    Returns:
        FixedPointResult: the lexicographically first argmin.

    Raises:
        ValueError: if tol < 0 or the maps do not fit together.
        NoFixedPointError: if the smallest residual exceeds tol; carries the
            argmin.
    """
    if isinstance(target, Correspondence):
        product = target.domain()
        if target.codomain() != product:
            raise ValueError('a single map should be X -> X')
        residual = np.diagonal(_correspondence_residual(
            target.matrix(), _distance_matrix(product)))
    else:
        pieces = list(target)
        if not pieces:
            raise ValueError('fixed_point_search needs at least one map')
        product = _product_of(pieces)
        residual = np.zeros(product.sizes())
        for i, piece in enumerate(pieces):
            residual = np.maximum(residual, _player_residual(product, i, piece))
        residual = residual.reshape(-1)

    if tol is None:
        tol = product.max_mesh()
    if tol < 0:
        raise ValueError(f'tol {tol} is < 0')

    index = int(np.argmin(residual))
    result = FixedPointResult(product.profile(index), residual[index], tol)
    logger.debug('fixed point scan over %d profiles: %s', product.count(),
                 repr(result))
    if not result.accepted():
        raise utils.NoFixedPointError(
            f'no fixed point within {tol:g}: smallest residual '
            f'{result.residual():g} at {result.point()}', result=result)
    return result


def _product_of(pieces):
    first = pieces[0]
    if isinstance(first, ProofCorrespondence):
        first = first.correspondence()
    spaces = list(first.domain().spaces())
    spaces.insert(0, first.codomain().space(0))
    return ProductSpace(spaces)


def _player_residual(product, i, piece):
    """ Residual of player i as an array over X. """
    own = product.space(i)
    distances = own.distance_matrix()
    if isinstance(piece, DiscreteSelection):
        selected = piece.values()
        rows = np.where(selected[:, None] >= 0,
                        distances.T[np.maximum(selected, 0)], np.inf)
    else:
        if isinstance(piece, ProofCorrespondence):
            piece = piece.correspondence()
        if piece.domain() != product.without(i) or \
                piece.codomain() != ProductSpace([own]):
            raise ValueError(f'map {i} is not X_-{i} -> X_{i}')
        rows = _correspondence_residual(piece.matrix(), distances)
    return _lift_rows(product, i, rows)


def _correspondence_residual(matrix, distances):
    """ dist(x, T(r)) for every row r of T and point x of the codomain. """
    result = np.full(matrix.shape, np.inf)
    for r in np.flatnonzero(matrix.any(axis=1)):
        result[r] = distances[:, matrix[r]].min(axis=1)
    return result


def _lift_rows(product, i, rows):
    """ Reshape a (|X_{-i}|, |X_i|) array of floats into an array over X. """
    sizes = product.sizes()
    others = tuple(n for j, n in enumerate(sizes) if j != i)
    return np.moveaxis(rows.reshape(others + (sizes[i],)), -1, i)

##################################
# PIPELINE
##################################

def solve_ec(game, variant, radius=const.DEFAULT_RADIUS, aux=None, tol=None,
             force=False, k_max=const.DEFAULT_K_MAX, selection=False):
    """ Find and certify an equilibrium in choice by following a proof.

    V1 to V3, and V4 with selection=True, take a discrete selection of every
    proof correspondence and scan for a fixed point of the product map. V4
    and V5 otherwise scan the product correspondence. V5 certifies a strong
    equilibrium in choice.

    Args:
        game (ChoiceFormGame): the game.
        variant (str): one of const.VARIANTS.
        radius (int): neighbourhood radius in mesh steps.
        aux (dict): the variant's ingredients.
        tol (float): fixed-point tolerance, one mesh step if None.
        force (bool): continue with a warning when hypotheses fail.
        k_max (int): the WCG subset bound.
        selection (bool): V4 only, use the selection route.

    Returns:
        EquilibriumCertificate: an EC (SEC for V5) with the pipeline trace.

    Raises:
        HypothesisError: if hypotheses fail and force is False.
        ConstructionError: if a proof correspondence cannot be built.
        NoFixedPointError: if no profile is within tol.
        VerificationError: if the profile found fails the exact check.
    """
    if not isinstance(game, ChoiceFormGame):
        raise TypeError('game should be ChoiceFormGame')
    report = check_theorem_hypotheses(game, variant, radius, aux, k_max,
                                      selection=selection)
    trace = {
        'variant': variant,
        'hypotheses': report.to_dict(),
        'assumption_a': check_assumption_a(game)[0],
        'forced': False,
    }
    if not report.passed():
        failed = ', '.join(f'{e.condition()} (player {e.player()})'
                           for e in report.failures())
        if not force:
            raise utils.HypothesisError(
                f'{variant} hypotheses fail: {failed}', report=report)
        logger.warning('%s hypotheses fail (%s); continuing because of force',
                       variant, failed)
        trace['forced'] = True

    proofs = [build_proof_correspondence(game, i, variant, aux, radius)
              for i in range(game.num_players())]
    route = ROUTE_SELECTION if variant in SELECTION_VARIANTS or \
        (variant == const.V4 and selection) else ROUTE_CORRESPONDENCE
    trace['route'] = route
    if route == ROUTE_SELECTION:
        selections = [construct_selection(proof, GridTopology(
            proof.correspondence().domain(), radius)) for proof in proofs]
        trace['moduli'] = [s.modulus() for s in selections]
        target = selections
    else:
        trace['moduli'] = None
        target = proofs

    try:
        result = fixed_point_search(target, tol)
    except utils.NoFixedPointError as error:
        trace['residual'] = error.result.residual()
        trace['tol'] = error.result.tol()
        raise
    trace['residual'] = result.residual()
    trace['tol'] = result.tol()
    profile = result.point()

    if variant == const.V5:
        verified = is_strong_ec(game, profile)
        kind = const.SEC
    else:
        verified = is_equilibrium_in_choice(game, profile)[0]
        kind = const.EC
    if not verified:
        raise utils.VerificationError(
            f'{variant} found {profile} with residual {result.residual():g} '
            f'but it is not an {kind}: the grid hypotheses do not carry '
            'over to this profile', profile=profile, trace=trace)

    logger.info('%s certified %s %s', variant, kind, profile)
    return check(game, kind, profile).with_trace(trace)


def solve_weak_nash(game, variant, **kwargs):
    """ Solve a normal-form game for a weak Nash equilibrium.

    The game is converted to its best-reply choice form, solved with
    :func:`solve_ec`, and the profile re-checked as a weak Nash equilibrium.

    Raises:
        VerificationError: if the profile is not a weak Nash equilibrium.
    """
    if not isinstance(game, NormalFormGame):
        raise TypeError('game should be NormalFormGame')
    certificate = solve_ec(to_choice_form_normal(game), variant, **kwargs)
    return _recheck(game, const.WEAK_NASH, certificate)


def solve_weak_equilibrium(game, variant, **kwargs):
    """ Solve a qualitative game for a weak equilibrium.

    Raises:
        VerificationError: if the profile is not a weak equilibrium.
    """
    if not isinstance(game, QualitativeGame):
        raise TypeError('game should be QualitativeGame')
    certificate = solve_ec(to_choice_form_qualitative(game), variant,
                           **kwargs)
    return _recheck(game, const.QUAL_WEAK_EQ, certificate)


def _recheck(game, kind, certificate):
    rechecked = check(game, kind, certificate.profile())
    if not rechecked.holds():
        raise utils.VerificationError(
            f'{certificate.profile()} is an equilibrium in choice but not '
            f'{kind}', profile=certificate.profile(),
            trace=certificate.trace())
    return rechecked.with_trace(certificate.trace())
