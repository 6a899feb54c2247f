''' Property and fixture based acceptance tests over seeded instances
'''
#pylint: disable=missing-class-docstring
#pylint: disable=missing-function-docstring

# Standard library imports
import unittest

# Third party imports
import numpy as np

# Local imports
from tests.help_lib import (SPLIT_HULL, SPLIT_HULL_HOLE, FIXTURES, MP, PD,
                            get_fixture, get_game, grid)
from tests.oracle import oracle_enumerate
from choiceform.analysis import glue, is_h_lsc, is_h_usc
import choiceform.constants as const
from choiceform.convexity import is_grid_convex, is_wcg
from choiceform.correspondence import Correspondence
from choiceform.equilibrium import (enumerate_equilibria,
                                    is_equilibrium_in_choice, is_strong_ec)
from choiceform.game import ChoiceFormGame, has_nonempty_sections
import choiceform.generators as generators
from choiceform.normal_form import NormalFormGame, to_choice_form_normal
from choiceform.qualitative import to_choice_form_qualitative
from choiceform.solver import solve_ec
from choiceform.space import ProductSpace
from choiceform.subset import ProductSubset
from choiceform.topology import GridTopology, is_h_closed, is_h_open
import choiceform.utils as utils

NEGATIVE_OUTCOMES = (utils.HypothesisError, utils.ConstructionError,
                     utils.NoFixedPointError, utils.VerificationError,
                     utils.UsageError, utils.UnsupportedSpaceError,
                     utils.BudgetError)


def profiles(game, kind):
    return [c.profile() for c in enumerate_equilibria(game, kind)]


class TestEquilibriumSets(unittest.TestCase):


    def test_ec_equals_nash(self):
        for seed in range(200):
            game = generators.random_normal_form(seed)
            self.assertEqual(profiles(to_choice_form_normal(game), const.EC),
                             profiles(game, const.NASH), msg=f'seed {seed}')


    def test_ec_equals_qualitative_weak(self):
        for seed in range(200):
            game = generators.random_qualitative(seed)
            self.assertEqual(
                profiles(to_choice_form_qualitative(game), const.EC),
                profiles(game, const.QUAL_WEAK_EQ), msg=f'seed {seed}')


    def test_sec_inside_ec(self):
        for seed in range(200):
            game = generators.random_choice_form(seed)
            self.assertLessEqual(game.product_space().count(), 4096)
            ec = set(profiles(game, const.EC))
            sec = set(profiles(game, const.SEC))
            self.assertLessEqual(sec, ec, msg=f'seed {seed}')
            if has_nonempty_sections(game):
                self.assertEqual(sec, ec, msg=f'seed {seed}')


    def test_fixtures(self):
        pd = get_game(PD)
        pd_choice = to_choice_form_normal(pd)
        self.assertEqual(profiles(pd_choice, const.EC), [(1, 1)])
        self.assertEqual(profiles(pd_choice, const.SEC), [(1, 1)])
        self.assertEqual(profiles(pd, const.NASH), [(1, 1)])

        mp = get_game(MP)
        mp_choice = to_choice_form_normal(mp)
        self.assertEqual(mp_choice.choice(0).profiles(), [(0, 0), (1, 1)])
        self.assertEqual(mp_choice.choice(1).profiles(), [(0, 1), (1, 0)])
        self.assertEqual(profiles(mp_choice, const.EC), [])
        self.assertEqual(profiles(mp, const.NASH), [])


    def test_oracle(self):
        for seed in range(100):
            family = seed % 3
            if family == 0:
                game = generators.random_choice_form(seed)
                kinds = [const.EC, const.SEC]
            elif family == 1:
                game = generators.random_normal_form(
                    seed, feasible_density=0.5 if seed % 2 else None)
                kinds = [const.NASH, const.WEAK_NASH]
            else:
                game = generators.random_qualitative(seed)
                kinds = [const.QUAL_EQ, const.QUAL_WEAK_EQ]
            for kind in kinds:
                self.assertEqual(profiles(game, kind),
                                 oracle_enumerate(game, kind),
                                 msg=f'seed {seed} kind {kind}')


class TestSplitHull(unittest.TestCase):


    def test_reproduction(self):
        document = get_fixture(SPLIT_HULL)
        correspondence = document.aux()['S'][0]
        common = correspondence.common_points()
        self.assertIn((0,), common)
        # [0, 0.5] at mesh 0.25
        self.assertEqual(common.indices(), [0, 1, 2])
        holds, tier, _ = is_wcg(correspondence)
        self.assertTrue(holds)
        self.assertEqual(tier, const.TIER_INTERSECTION)
        self.assertFalse(is_grid_convex(
            correspondence.value((SPLIT_HULL_HOLE,))))


class TestGluing(unittest.TestCase):


    def test_preserves_semicontinuity(self):
        premises = {'usc': 0, 'lsc': 0}
        for seed in range(100):
            rng = np.random.default_rng(seed)
            domain = grid(1, int(rng.integers(2, 33)))
            codomain = grid(2, int(rng.integers(2, 9)))
            topo = GridTopology(domain, 1)
            outer = generators.random_interval_correspondence(
                rng, domain, codomain)
            inner = generators.random_interval_correspondence(
                rng, domain, codomain, max_width=2)
            inner = inner.intersect(outer)
            # Open and closed at once: the only such sets of a connected grid
            for where in [ProductSubset.empty(domain),
                          ProductSubset.full(domain)]:
                self.assertTrue(is_h_open(where, topo))
                self.assertTrue(is_h_closed(where, topo))
                self.assertTrue(inner.is_subcorrespondence(outer, where))
                glued = glue(outer, inner, where)
                if is_h_usc(outer, topo)[0] and is_h_usc(inner, topo)[0]:
                    premises['usc'] += 1
                    self.assertTrue(is_h_usc(glued, topo)[0])
                if is_h_lsc(outer, topo)[0] and is_h_lsc(inner, topo)[0]:
                    premises['lsc'] += 1
                    self.assertTrue(is_h_lsc(glued, topo)[0])
        self.assertGreater(premises['usc'], 0)
        self.assertGreater(premises['lsc'], 0)


class TestSolverSoundness(unittest.TestCase):


    def assert_sound(self, game, certificate):
        if certificate.kind() == const.SEC:
            self.assertTrue(is_strong_ec(game, certificate.profile()))
        else:
            self.assertTrue(is_equilibrium_in_choice(
                game, certificate.profile())[0])


    def test_fixtures(self):
        certified = 0
        for name in FIXTURES:
            document = get_fixture(name)
            game = document.game()
            if isinstance(game, NormalFormGame):
                game = to_choice_form_normal(game)
            elif not isinstance(game, ChoiceFormGame):
                game = to_choice_form_qualitative(game)
            for variant in const.VARIANTS:
                try:
                    certificate = solve_ec(game, variant, aux=document.aux(),
                                           force=True)
                except NEGATIVE_OUTCOMES:
                    continue
                certified += 1
                self.assert_sound(game, certificate)
        self.assertGreater(certified, 0)


    def test_generated_v4_games(self):
        for seed in range(50):
            game = generators.random_v4_grid_game(seed,
                                                  num_players=2 + seed % 2)
            certificate = solve_ec(game, const.V4)
            self.assert_sound(game, certificate)


class TestAbstractTopology(unittest.TestCase):


    def test_everything_holds(self):
        for seed in range(50):
            rng = np.random.default_rng(seed)
            spaces = generators.random_spaces(rng)
            product = ProductSpace(spaces)
            topo = GridTopology(product, int(rng.integers(0, 3)))
            subset = ProductSubset(product,
                                   rng.random(product.count()) < 0.5)
            self.assertTrue(is_h_open(subset, topo))
            self.assertTrue(is_h_closed(subset, topo))

            codomain = generators.random_spaces(rng, num_players=1)[0]
            correspondence = generators.random_correspondence(
                rng, product, codomain, float(rng.uniform(0.1, 0.9)))
            self.assertIsInstance(correspondence, Correspondence)
            self.assertTrue(is_h_lsc(correspondence, topo)[0])
            self.assertTrue(is_h_usc(correspondence, topo)[0])


if __name__ == '__main__':
    unittest.main()
