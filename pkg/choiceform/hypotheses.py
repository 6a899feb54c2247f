""" Grid versions of the hypotheses of the existence theorems.

:func:`check_theorem_hypotheses` evaluates every lettered condition of the
chosen variant, per player, and collects the verdicts in a HypothesisReport.

The ``aux`` mapping carries the existential ingredients of the theorems:

- ``'D'``: V1, per player a ProductSubset D_i of X.
- ``'S'``: V2 and V3, per player a Correspondence S_i from X_{-i} to X_i.
  Only its values on W_i are used.
- ``'O'``: V5, per player a list with one ProductSubset of X_{-i} (or None)
  per point of X_i. Without it the lower sections themselves are used.
- ``'simplex'``: V2, per player a list of vertex profiles of X_{-i}, or
  None to only require W_i grid-convex.
"""

# Standard library imports
import logging

# Third party imports
import numpy as np

# Local imports
from choiceform.analysis import (has_local_intersection_property,
                                 inverse_interior_cover, is_h_lsc)
import choiceform.constants as const
from choiceform.convexity import grid_convex_hull, is_grid_convex, is_wcg
from choiceform.correspondence import Correspondence
from choiceform.game import ChoiceFormGame, check_assumption_a
from choiceform.report import HypothesisReport
from choiceform.subset import ProductSubset
from choiceform.topology import GridTopology
import choiceform.utils as utils

logger = logging.getLogger(__name__)

ABSTRACT_WITNESS = 'abstract space'

AUX_REQUIREMENTS = {
    const.V1: ('D', const.COND_SUBFAMILY),
    const.V2: ('S', const.COND_WCG),
    const.V3: ('S', const.COND_INNER_LSC),
}


def check_theorem_hypotheses(game, variant, radius=const.DEFAULT_RADIUS,
                             aux=None, k_max=const.DEFAULT_K_MAX,
                             selection=False,
                             budget=const.DEFAULT_WCG_BUDGET):
    """ Evaluate the hypotheses of an existence theorem on a game.

    Args:
        game (ChoiceFormGame): the game.
        variant (str): one of const.VARIANTS.
        radius (int): neighbourhood radius in mesh steps.
        aux (dict): the variant's ingredients, see the module docstring.
        k_max (int): the WCG subset bound (V2).
        selection (bool): V4 only; gate on the open lower sections condition
            of the selection route instead of the cover condition.
        budget (int): the WCG search budget (V2).

    Returns:
        HypothesisReport: one entry per condition and player.

    Raises:
        UsageError: if the variant is unknown or an ingredient is missing.
    """
    if not isinstance(game, ChoiceFormGame):
        raise TypeError('game should be ChoiceFormGame')
    if variant not in const.VARIANTS:
        raise utils.UsageError(f'unknown variant {variant!r}; expected one '
                               f'of {const.VARIANTS}')
    aux = aux or {}
    if variant in AUX_REQUIREMENTS:
        key, condition = AUX_REQUIREMENTS[variant]
        if aux.get(key) is None:
            raise utils.UsageError(f'{variant} condition {condition} needs '
                                   f'the ingredient aux[{key!r}]')
        _check_ingredients(game, key, aux[key])

    report = HypothesisReport(variant, radius, k_max)
    holds, witness = check_assumption_a(game)
    report.add(None, 'assumption-A', holds, witness, gating=False,
               note='reported, not required')

    checker = {
        const.V1: _check_v1,
        const.V2: _check_v2,
        const.V3: _check_v3,
        const.V4: _check_v4,
        const.V5: _check_v5,
    }[variant]
    for i in range(game.num_players()):
        context = _PlayerContext(game, i, radius)
        checker(report, context, aux, k_max=k_max, selection=selection,
                budget=budget)
        _check_convexity(report, context, variant, aux)

    logger.debug('%s hypotheses on %s: %s', variant, game,
                 'hold' if report.passed() else 'fail')
    return report


class _PlayerContext:
    """ The sets and topologies every condition of player i looks at. """

    def __init__(self, game, i, radius):
        product = game.product_space()
        self.game = game
        self.i = i
        self.product = product
        self.others = product.without(i)
        self.own = product.space(i)
        self.choice = game.choice(i)
        self.sections = self.choice.section_matrix(i)
        self.w = game.nonempty_sections(i)
        self.topo = GridTopology(product, radius)
        self.topo_others = GridTopology(self.others, radius)


    def is_grid(self):
        return self.product.is_grid()


def _check_ingredients(game, key, ingredients):
    if len(ingredients) != game.num_players():
        raise utils.UsageError(f'aux[{key!r}] needs one entry per player')
    product = game.product_space()
    for i, item in enumerate(ingredients):
        if key == 'D' and not (isinstance(item, ProductSubset)
                               and item.space() == product):
            raise utils.UsageError(f'aux[\'D\'][{i}] should be a subset of X')
        if key == 'S' and not (isinstance(item, Correspondence)
                               and item.domain() == product.without(i)):
            raise utils.UsageError(f'aux[\'S\'][{i}] should be a '
                                   'correspondence from X_{-i} to X_i')

##################################
# SHARED CONDITIONS
##################################

def _check_space(report, context, with_choice):
    passed = context.is_grid()
    report.add(context.i, const.COND_SPACE, passed,
               None if passed else ABSTRACT_WITNESS,
               note='grid spaces are compact and convex at mesh scale')
    if with_choice:
        nonempty = not context.choice.is_empty()
        report.add(context.i, const.COND_CHOICE_NONEMPTY, nonempty,
                   None if nonempty else 'C_i is empty')


def _first_nonconvex_row(matrix, space):
    """ The index of the first nonempty, non-grid-convex row, or None. """
    seen = {}
    for row in np.flatnonzero(matrix.any(axis=1)):
        key = matrix[row].tobytes()
        if key not in seen:
            seen[key] = is_grid_convex(ProductSubset(space, matrix[row]))
        if not seen[key]:
            return int(row)
    return None


def _check_convexity(report, context, variant, aux):
    condition = const.CONVEXITY_CONDITION[variant]
    matrix = context.sections
    if variant == const.V1:
        matrix = aux['D'][context.i].section_matrix(context.i)
    if not context.own.is_grid():
        report.add(context.i, condition, False, ABSTRACT_WITNESS,
                   note='convexity is undefined on abstract spaces')
        return
    row = _first_nonconvex_row(matrix, context.own)
    report.add(context.i, condition, row is None,
               None if row is None else
               {'x_minus_i': context.others.profile(row)},
               note='sections are grid-convex or empty')

##################################
# VARIANTS
##################################

def _check_v1(report, context, aux, **_):
    """ Local intersection selection of a subfamily D_i of C_i. """
    _check_space(report, context, with_choice=False)
    i = context.i
    subfamily = aux['D'][i]
    d_sections = subfamily.section_matrix(i)
    d_w = d_sections.any(axis=1)

    outside = subfamily - context.choice
    if subfamily.is_empty():
        report.add(i, const.COND_SUBFAMILY, False, 'D_i is empty')
    elif not outside.is_empty():
        report.add(i, const.COND_SUBFAMILY, False,
                   {'x': outside.profiles()[0]}, note='D_i is not in C_i')
    else:
        mismatch = np.flatnonzero(d_w != context.w.flat())
        report.add(i, const.COND_SUBFAMILY, mismatch.size == 0,
                   None if mismatch.size == 0 else
                   {'x_minus_i': context.others.profile(int(mismatch[0]))},
                   note='D_i(x_{-i}) nonempty iff C_i(x_{-i}) nonempty')

    w_d = ProductSubset(context.others, d_w)
    closed = context.topo_others.is_closed(w_d)
    report.add(i, const.COND_W_CLOSED, closed,
               None if closed else _first_boundary(context, w_d))

    holds, witness = has_local_intersection_property(
        Correspondence(context.others, context.own, d_sections),
        context.topo_others)
    report.add(i, const.COND_LOCAL_INTERSECTION, holds, witness,
               note=f'neighbourhoods of radius {context.topo.radius()}')


def _check_v2(report, context, aux, k_max, budget, **_):
    """ WCG selection on W_i. """
    _check_space(report, context, with_choice=True)
    i = context.i
    simplices = aux.get('simplex')
    _check_simplex(report, context, simplices[i] if simplices else None)

    inner = aux['S'][i]
    values = inner.matrix()
    w_rows = context.w.flat()
    empty = np.flatnonzero(w_rows & ~values.any(axis=1))
    escapes = np.flatnonzero((values & ~context.sections)[w_rows].any(axis=1))
    if empty.size or escapes.size:
        row = int(empty[0]) if empty.size else \
            int(np.flatnonzero(w_rows)[escapes[0]])
        report.add(i, const.COND_WCG, False,
                   {'x_minus_i': context.others.profile(row)},
                   note='S_i(x_{-i}) should be nonempty and inside C_i(x_{-i})')
    elif not context.is_grid():
        report.add(i, const.COND_WCG, False, ABSTRACT_WITNESS)
    else:
        try:
            holds, tier, witness = is_wcg(inner, k_max, context.topo_others,
                                          where=context.w, budget=budget)
            report.add(i, const.COND_WCG, holds, witness,
                       note=f'decided by {tier}')
        except utils.BudgetError as error:
            report.add(i, const.COND_WCG, False,
                       {'budget': budget, 'partial': error.partial},
                       note='search budget exceeded')

    if context.is_grid():
        graph = Correspondence(context.others, context.own,
                               values & w_rows[:, None])
        convex = is_grid_convex(graph.graph())
        report.add(i, const.COND_CONVEX_GRAPH, convex,
                   None if convex else 'graph of S_i on W_i is not convex',
                   gating=False)
    common = inner.common_points(context.w)
    report.add(i, const.COND_COMMON_POINT, not common.is_empty(),
               None if not common.is_empty() else 'no common point on W_i',
               gating=False)


def _check_simplex(report, context, vertices):
    note = 'W_i is taken in X_{-i}, where it lives'
    if not context.others.is_grid():
        report.add(context.i, const.COND_W_SIMPLEX, False, ABSTRACT_WITNESS,
                   note=note)
        return
    if not vertices:
        convex = is_grid_convex(context.w)
        report.add(context.i, const.COND_W_SIMPLEX, convex,
                   None if convex else 'W_i is not grid-convex',
                   note=note + '; no simplex declared')
        return
    declared = ProductSubset.from_profiles(context.others, vertices)
    points = context.others.embedding()[declared.flat()]
    rank = np.linalg.matrix_rank(points[1:] - points[0]) \
        if len(points) > 1 else 0
    if rank != len(points) - 1:
        report.add(context.i, const.COND_W_SIMPLEX, False,
                   {'vertices': [list(v) for v in vertices]},
                   note=note + '; vertices are affinely dependent')
        return
    hull = grid_convex_hull(declared)
    difference = (hull - context.w) | (context.w - hull)
    report.add(context.i, const.COND_W_SIMPLEX, difference.is_empty(),
               None if difference.is_empty() else
               {'x_minus_i': difference.profiles()[0]},
               note=note + f'; declared dimension {len(points) - 1}')


def _check_v3(report, context, aux, **_):
    """ Lower semicontinuous S_i meeting C_i on an open W_i. """
    _check_space(report, context, with_choice=False)
    i = context.i
    nonempty = not context.choice.is_empty()
    is_open = context.topo.is_open(context.choice)
    report.add(i, const.COND_CHOICE_OPEN, nonempty and is_open,
               None if nonempty and is_open else
               ('C_i is empty' if not nonempty else
                _first_boundary_point(context.topo, context.choice)),
               note='C_i is nonempty and h-open')

    w_nonempty = not context.w.is_empty()
    w_open = context.topo_others.is_open(context.w)
    report.add(i, const.COND_W_OPEN, w_nonempty and w_open,
               None if w_nonempty and w_open else
               ('W_i is empty' if not w_nonempty else
                _first_boundary_point(context.topo_others, context.w)),
               note='W_i is nonempty and h-open')

    inner = aux['S'][i]
    holds, witness = is_h_lsc(inner, context.topo_others, where=context.w)
    if holds:
        witness = _inner_values_witness(context, inner)
        holds = witness is None
    report.add(i, const.COND_INNER_LSC, holds, witness,
               note='S_i is h-lsc on W_i with grid-convex values meeting C_i')


def _inner_values_witness(context, inner):
    values = inner.matrix()
    meets = (values & context.sections).any(axis=1)
    for row in np.flatnonzero(context.w.flat()):
        if not meets[row]:
            return {'x_minus_i': context.others.profile(int(row)),
                    'reason': 'C_i and S_i do not meet'}
    if not context.own.is_grid():
        return ABSTRACT_WITNESS
    on_w = values & context.w.flat()[:, None]
    row = _first_nonconvex_row(on_w, context.own)
    if row is not None:
        return {'x_minus_i': context.others.profile(row),
                'reason': 'S_i value is not grid-convex'}
    return None


def _lower_sets(context):
    """ Columns y_i: the lower section of y_i joined with the complement of
    W_i, i.e. the lower inverse of the proof correspondence. """
    return context.sections | ~context.w.flat()[:, None]


def _check_v4(report, context, aux, selection=False, **_):
    """ Transfer open-valued inverse (cover) or open lower sections. """
    _check_space(report, context, with_choice=True)
    i = context.i
    lower = _lower_sets(context)
    topo = context.topo_others

    # The interior of an intersection of cylinders is the intersection of
    # their interiors, so the cover of X splits into one cover per player.
    covered, witness = inverse_interior_cover(
        Correspondence(context.others, context.own, lower), topo)
    report.add(i, const.COND_COVER, covered, witness, gating=not selection,
               note='X is covered by interiors of lower inverses')

    eroded = topo.erode_columns(context.sections)
    holds = bool(eroded.any(axis=1)[context.w.flat()].all())
    w_closed = topo.is_closed(context.w)
    prime = holds and w_closed
    if prime:
        prime_witness = None
    elif not holds:
        row = np.flatnonzero(context.w.flat() & ~eroded.any(axis=1))[0]
        prime_witness = {'x_minus_i': context.others.profile(int(row))}
    else:
        prime_witness = _first_boundary(context, context.w)
    report.add(i, const.COND_COVER_PRIME, prime, prime_witness, gating=False,
               note='transferred interiors of lower sections, W_i closed')

    open_columns = topo.erode_columns(lower) == lower
    bad = np.flatnonzero(~open_columns.all(axis=0))
    report.add(i, const.COND_LOWER_OPEN, bad.size == 0,
               None if bad.size == 0 else {'x_i': int(bad[0])},
               gating=selection,
               note='lower section with the complement of W_i is h-open')

    sections_open = topo.erode_columns(context.sections) == context.sections
    bad = np.flatnonzero(~sections_open.all(axis=0))
    remark = bad.size == 0 and w_closed
    report.add(i, const.COND_LOWER_OPEN_W_CLOSED, remark,
               None if remark else
               ({'x_i': int(bad[0])} if bad.size else
                _first_boundary(context, context.w)),
               gating=False, note='lower sections h-open and W_i closed')


def _check_v5(report, context, aux, **_):
    """ Open families inside the lower sections covering X_{-i}. """
    _check_space(report, context, with_choice=True)
    i = context.i
    topo = context.topo_others
    lower = context.sections
    families = aux.get('O')
    if families is None:
        family = lower
        note = 'the lower sections themselves form the open cover'
    else:
        family = _family_matrix(context, families[i])
        note = 'declared open family inside the lower sections'

    outside = family & ~lower
    not_open = topo.erode_columns(family) != family
    uncovered = ~family.any(axis=1)
    if outside.any():
        row, column = (int(v) for v in np.argwhere(outside)[0])
        witness = {'x_i': column, 'x_minus_i': context.others.profile(row),
                   'reason': 'O_{x_i} leaves the lower section'}
    elif not_open.any():
        column = int(np.argwhere(not_open)[0][1])
        witness = {'x_i': column, 'reason': 'O_{x_i} is not h-open'}
    elif uncovered.any():
        row = int(np.flatnonzero(uncovered)[0])
        witness = {'x_minus_i': context.others.profile(row),
                   'reason': 'the family does not cover X_{-i}'}
    else:
        witness = None
    report.add(i, const.COND_OPEN_FAMILY, witness is None, witness, note=note)


def _family_matrix(context, family):
    if len(family) != len(context.own):
        raise utils.UsageError(f'{const.V5} condition {const.COND_OPEN_FAMILY} '
                               f'needs one set per point of X_{context.i}')
    columns = []
    for member in family:
        if member is None:
            columns.append(np.zeros(context.others.count(), dtype=bool))
        elif member.space() != context.others:
            raise utils.UsageError('open family members should be subsets '
                                   'of X_{-i}')
        else:
            columns.append(member.flat())
    return np.stack(columns, axis=1)


def _first_boundary_point(topo, subset):
    boundary = subset - topo.interior(subset)
    return {'x': boundary.profiles()[0]}


def _first_boundary(context, subset):
    """ A witness that a subset of X_{-i} is not h-closed. """
    complement = subset.complement()
    boundary = complement - context.topo_others.interior(complement)
    return {'x_minus_i': boundary.profiles()[0]}
