''' Tests for proof correspondences, discrete selections, the fixed-point
scan and the solver pipeline
'''
#pylint: disable=missing-class-docstring
#pylint: disable=missing-function-docstring

# Standard library imports
import unittest

# Third party imports
import numpy as np

# Local imports
from tests.help_lib import (ALL_CHOICE, MP, PD, abstract, choice_game,
                            split_hull_values, get_game, grid)
import choiceform.constants as const
from choiceform.correspondence import Correspondence
from choiceform.equilibrium import is_equilibrium_in_choice
import choiceform.generators as generators
from choiceform.qualitative import QualitativeGame
from choiceform.solver import (DiscreteSelection, FixedPointResult,
                               ProofCorrespondence,
                               build_proof_correspondence,
                               construct_selection, fixed_point_search,
                               solve_ec, solve_weak_equilibrium,
                               solve_weak_nash)
from choiceform.subset import ProductSubset
from choiceform.topology import GridTopology
import choiceform.utils as utils

C, D = 0, 1


def from_values(domain, codomain, values):
    """ A correspondence from per-domain-point lists of codomain indices. """
    return Correspondence.from_function(domain, codomain,
                                        lambda x: [(y,) for y in values[x[0]]])


def section_aux(game):
    return [Correspondence.from_subset_sections(game.choice(i), i)
            for i in range(game.num_players())]


class TestProofCorrespondence(unittest.TestCase):


    def setUp(self):
        self.spaces = [grid(1, 3), grid(2, 3)]


    def test_off_w_value(self):
        # Sections {0} at x_2 = 0 and {2} at x_2 = 1, nothing at x_2 = 2
        game = choice_game(self.spaces, [[(0, 0), (2, 1)], 'all'])
        proof = build_proof_correspondence(game, 0, const.V4)
        self.assertIsInstance(proof, ProofCorrespondence)
        self.assertEqual(proof.where().indices(), [0, 1])
        self.assertEqual(proof.off_w_value().indices(), [0, 1, 2])
        correspondence = proof.correspondence()
        self.assertEqual(correspondence.value((0,)).indices(), [0])
        self.assertEqual(correspondence.value((1,)).indices(), [2])
        self.assertEqual(correspondence.value((2,)).indices(), [0, 1, 2])
        self.assertTrue(correspondence.is_nonempty_valued())
        self.assertIsNone(proof.support())

        # Without a grid, the union itself
        spaces = [abstract(1, 3), abstract(2, 3)]
        game = choice_game(spaces, [[(0, 0), (2, 1)], 'all'])
        proof = build_proof_correspondence(game, 0, const.V5)
        self.assertEqual(proof.off_w_value().indices(), [0, 2])


    def test_empty_choice(self):
        game = choice_game(self.spaces, [[], 'all'])
        with self.assertRaises(utils.ConstructionError) as context:
            build_proof_correspondence(game, 0, const.V4)
        self.assertEqual(context.exception.condition, const.COND_SPACE)
        self.assertIsInstance(build_proof_correspondence(game, 1, const.V4),
                              ProofCorrespondence)


    def test_ingredients(self):
        pd = get_game(PD, choice_form=True)
        self.assertRaises(utils.UsageError, build_proof_correspondence, pd, 0,
                          const.V1)
        self.assertRaises(utils.UsageError, build_proof_correspondence, pd, 0,
                          const.V2, {})
        self.assertRaises(utils.UsageError, build_proof_correspondence, pd, 0,
                          'V9')

        proof = build_proof_correspondence(
            pd, 0, const.V1, {'D': [pd.choice(0), pd.choice(1)]})
        self.assertEqual(proof.variant(), const.V1)
        self.assertIsNotNone(proof.support())
        self.assertTrue(proof.correspondence().is_subcorrespondence(
            proof.support()))

        # An S_i with an empty value on W_i
        product = pd.product_space()
        empty = Correspondence(product.without(0), product.space(0),
                               np.zeros((2, 2), dtype=bool))
        with self.assertRaises(utils.ConstructionError) as context:
            build_proof_correspondence(pd, 0, const.V2,
                                       {'S': [empty, empty]})
        self.assertEqual(context.exception.condition, const.COND_WCG)


class TestSelection(unittest.TestCase):


    def test_constant(self):
        domain, codomain = grid(1, 4), grid(2, 3)
        constant = Correspondence.constant(
            domain, codomain, ProductSubset.from_indices(codomain, [1]))
        selection = construct_selection(constant)
        self.assertIsInstance(selection, DiscreteSelection)
        np.testing.assert_array_equal(selection.values(), [1, 1, 1, 1])
        self.assertEqual(selection.modulus(), 0.0)
        self.assertTrue(selection.is_total())
        self.assertEqual(selection.as_correspondence(), constant)


    def test_first_point(self):
        domain, codomain = grid(1, 4), grid(2, 3)
        full = Correspondence.constant(domain, codomain,
                                       ProductSubset.full(codomain))
        selection = construct_selection(full, player=0)
        np.testing.assert_array_equal(selection.values(), [0, 0, 0, 0])
        self.assertEqual(selection.player(), 0)


    def test_split_hull(self):
        domain, codomain = grid(1, 9, mesh=0.25), grid(2, 9, mesh=0.25)
        correspondence = from_values(domain, codomain, split_hull_values())
        selection = construct_selection(correspondence,
                                        GridTopology(domain, 1))
        self.assertTrue(np.all(selection.values() == 0))
        self.assertEqual(selection.modulus(), 0.0)


    def test_follows_neighbours(self):
        # The staircase {x, x + 1} keeps steps of one mesh
        domain, codomain = grid(1, 5), grid(2, 6)
        band = from_values(domain, codomain, [[x, x + 1] for x in range(5)])
        selection = construct_selection(band)
        np.testing.assert_array_equal(selection.values(), [0, 1, 2, 3, 4])
        self.assertEqual(selection.modulus(), 1.0)
        self.assertEqual(selection.value((3,)), 3)


    def test_where(self):
        domain, codomain = grid(1, 4), grid(2, 3)
        values = from_values(domain, codomain, [[2], [], [], [1]])
        where = ProductSubset.from_indices(domain, [0, 3])
        selection = construct_selection(values, where=where)
        np.testing.assert_array_equal(selection.values(), [2, -1, -1, 1])
        self.assertFalse(selection.is_total())
        self.assertRaises(ValueError, construct_selection, values)


class TestFixedPointSearch(unittest.TestCase):


    def setUp(self):
        self.line = grid(1, 3)


    def test_identity(self):
        identity = Correspondence.identity(self.line)
        result = fixed_point_search(identity)
        self.assertIsInstance(result, FixedPointResult)
        self.assertEqual(result.point(), (0,))
        self.assertEqual(result.residual(), 0.0)
        self.assertTrue(result.accepted())
        self.assertEqual(result.to_dict(),
                         {'point': [0], 'residual': 0.0, 'tol': 1.0})


    def test_shift(self):
        # x -> x + 1 (mod 3): the best residual is one mesh step
        shift = from_values(self.line, self.line, [[1], [2], [0]])
        result = fixed_point_search(shift)
        self.assertEqual((result.point(), result.residual()), ((0,), 1.0))

        with self.assertRaises(utils.NoFixedPointError) as context:
            fixed_point_search(shift, tol=0)
        self.assertEqual(context.exception.result.point(), (0,))
        self.assertEqual(context.exception.result.residual(), 1.0)

        self.assertRaises(ValueError, fixed_point_search, shift, -1)


    def test_deterministic(self):
        def search(target, tol=None):
            try:
                return fixed_point_search(target, tol)
            except utils.NoFixedPointError as error:
                return error.result

        shift = from_values(self.line, self.line, [[1], [2], [0]])
        self.assertEqual(search(shift, 1), search(shift, 1))
        sections = section_aux(get_game(PD, choice_form=True))
        self.assertEqual(search(sections), search(section_aux(
            get_game(PD, choice_form=True))))

        line = grid(1, 6)
        for seed in range(20):
            first = generators.random_correspondence(seed, line, line, 0.3)
            again = generators.random_correspondence(seed, line, line, 0.3)
            self.assertEqual(first, again)
            self.assertEqual(search(first), search(again), msg=f'seed {seed}')
            self.assertEqual(search(first), search(first), msg=f'seed {seed}')


    def test_empty_values(self):
        empty = from_values(self.line, self.line, [[], [], []])
        with self.assertRaises(utils.NoFixedPointError) as context:
            fixed_point_search(empty)
        self.assertEqual(context.exception.result.residual(), np.inf)
        self.assertRaises(ValueError, fixed_point_search, [])


    def test_player_maps(self):
        pd = get_game(PD, choice_form=True)
        sections = section_aux(pd)
        result = fixed_point_search(sections)
        self.assertEqual(result.point(), (D, D))
        self.assertEqual(result.residual(), 0.0)

        selections = [construct_selection(s, player=i)
                      for i, s in enumerate(sections)]
        self.assertEqual(fixed_point_search(selections).point(), (D, D))

        # Mismatched maps
        self.assertRaises(ValueError, fixed_point_search,
                          [sections[0], sections[0]])


class TestSolveEC(unittest.TestCase):


    def setUp(self):
        self.pd = get_game(PD, choice_form=True)
        self.mp = get_game(MP, choice_form=True)
        self.full = get_game(ALL_CHOICE)


    def test_v4(self):
        certificate = solve_ec(self.pd, const.V4)
        self.assertEqual(certificate.profile(), (D, D))
        self.assertEqual(certificate.kind(), const.EC)
        self.assertTrue(certificate.holds())
        trace = certificate.trace()
        self.assertEqual(trace['variant'], const.V4)
        self.assertEqual(trace['route'], 'correspondence')
        self.assertEqual(trace['residual'], 0.0)
        self.assertFalse(trace['forced'])

        certificate = solve_ec(self.pd, const.V4, selection=True)
        self.assertEqual(certificate.profile(), (D, D))
        self.assertEqual(certificate.trace()['route'], 'selection')


    def test_v5(self):
        certificate = solve_ec(self.full, const.V5)
        self.assertEqual(certificate.kind(), const.SEC)
        self.assertEqual(certificate.profile(), (0, 0))


    def test_selection_variants(self):
        certificate = solve_ec(self.pd, const.V1,
                               aux={'D': [self.pd.choice(0),
                                          self.pd.choice(1)]})
        self.assertEqual(certificate.profile(), (D, D))
        self.assertEqual(certificate.trace()['moduli'], [0.0, 0.0])

        certificate = solve_ec(self.pd, const.V2,
                               aux={'S': section_aux(self.pd)})
        self.assertEqual(certificate.profile(), (D, D))

        product = self.full.product_space()
        full = [Correspondence.constant(product.without(i), product.space(i),
                                        ProductSubset.full(product.space(i)))
                for i in range(2)]
        certificate = solve_ec(self.full, const.V3, aux={'S': full})
        self.assertEqual(certificate.profile(), (0, 0))


    def test_matching_pennies(self):
        with self.assertRaises(utils.HypothesisError) as context:
            solve_ec(self.mp, const.V4)
        self.assertFalse(context.exception.report.passed())

        # Every profile is one step from its replies
        with self.assertLogs('choiceform.solver', level='WARNING'):
            with self.assertRaises(utils.VerificationError) as context:
                solve_ec(self.mp, const.V4, force=True)
        self.assertEqual(context.exception.profile, (0, 0))
        self.assertTrue(context.exception.trace['forced'])

        with self.assertLogs('choiceform.solver', level='WARNING'):
            with self.assertRaises(utils.NoFixedPointError) as context:
                solve_ec(self.mp, const.V4, force=True, tol=0)
        self.assertEqual(context.exception.result.residual(), 1.0)


    def test_random_grid_games(self):
        for seed in range(20):
            game = generators.random_v4_grid_game(seed,
                                                  num_players=2 + seed % 2)
            certificate = solve_ec(game, const.V4)
            self.assertTrue(is_equilibrium_in_choice(
                game, certificate.profile())[0])


    def test_type(self):
        self.assertRaises(TypeError, solve_ec, get_game(PD), const.V4)


class TestSolveOtherClasses(unittest.TestCase):


    def test_weak_nash(self):
        certificate = solve_weak_nash(get_game(PD), const.V4)
        self.assertEqual(certificate.kind(), const.WEAK_NASH)
        self.assertEqual(certificate.profile(), (D, D))
        self.assertEqual(certificate.trace()['variant'], const.V4)
        self.assertRaises(TypeError, solve_weak_nash, self, const.V4)


    def test_weak_equilibrium(self):
        spaces = [grid(1, 3), grid(2, 2)]
        # Nobody prefers anything: every profile is satisfied
        game = QualitativeGame(spaces, [np.zeros((6, 3)), np.zeros((6, 2))])
        certificate = solve_weak_equilibrium(game, const.V4)
        self.assertEqual(certificate.kind(), const.QUAL_WEAK_EQ)
        self.assertEqual(certificate.profile(), (0, 0))
        self.assertRaises(TypeError, solve_weak_equilibrium, get_game(PD),
                          const.V4)


if __name__ == '__main__':
    unittest.main()
