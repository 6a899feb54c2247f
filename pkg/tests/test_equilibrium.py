''' Tests for the equilibrium checkers and enumerators
'''
#pylint: disable=missing-class-docstring
#pylint: disable=missing-function-docstring

# Standard library imports
import unittest

# Third party imports
import numpy as np

# Local imports
from tests.help_lib import (ALL_CHOICE, MP, PD, QUALITATIVE_2X2, abstract,
                            choice_game, get_game)
import choiceform.constants as const
from choiceform.equilibrium import (check, enumerate_equilibria,
                                    equilibrium_mask,
                                    is_equilibrium_in_choice, is_nash,
                                    is_strong_ec, is_weak_nash,
                                    qualitative_equilibrium)
from choiceform.normal_form import NormalFormGame
from choiceform.qualitative import QualitativeGame
from choiceform.subset import ProductSubset
import choiceform.utils as utils

C, D = 0, 1
H, T = 0, 1


def profiles(certificates):
    return [certificate.profile() for certificate in certificates]


class TestChoiceForm(unittest.TestCase):


    def setUp(self):
        self.pd = get_game(PD, choice_form=True)
        self.mp = get_game(MP, choice_form=True)
        self.spaces = [abstract(1, 2), abstract(2, 2)]


    def test_is_equilibrium_in_choice(self):
        holds, clauses = is_equilibrium_in_choice(self.pd, (D, D))
        self.assertTrue(holds)
        self.assertEqual(len(clauses), 2)
        self.assertEqual(clauses[0].reference(), [D])
        self.assertFalse(is_equilibrium_in_choice(self.pd, (C, C))[0])

        for profile in self.mp.product_space().profiles():
            self.assertFalse(is_equilibrium_in_choice(self.mp, profile)[0])

        # Empty choice sets: every profile is an EC, vacuously
        empty = choice_game(self.spaces, [[], []])
        for profile in empty.product_space().profiles():
            holds, clauses = is_equilibrium_in_choice(empty, profile)
            self.assertTrue(holds)
            self.assertTrue(all(clause.vacuous() for clause in clauses))

        self.assertRaises(utils.InvalidProfileError,
                          is_equilibrium_in_choice, self.pd, (2, 0))


    def test_is_strong_ec(self):
        full = choice_game(self.spaces, ['all', 'all'])
        for profile in full.product_space().profiles():
            self.assertTrue(is_strong_ec(full, profile))

        one_empty = choice_game(self.spaces, ['all', []])
        for profile in one_empty.product_space().profiles():
            self.assertFalse(is_strong_ec(one_empty, profile))

        self.assertTrue(is_strong_ec(self.pd, (D, D)))
        self.assertFalse(is_strong_ec(self.pd, (C, D)))


    def test_enumerate(self):
        self.assertEqual(profiles(enumerate_equilibria(self.pd, const.EC)),
                         [(D, D)])
        self.assertEqual(enumerate_equilibria(self.mp, const.EC), [])

        full = get_game(ALL_CHOICE)
        self.assertEqual(profiles(enumerate_equilibria(full, const.SEC)),
                         list(full.product_space().profiles()))

        self.assertRaises(utils.UsageError, enumerate_equilibria, self.pd,
                          const.NASH)
        self.assertRaises(utils.UsageError, enumerate_equilibria, self.pd,
                          'Correlated')


    def test_check(self):
        certificate = check(self.pd, const.EC, (D, D))
        self.assertTrue(certificate.holds())
        self.assertEqual(certificate.kind(), const.EC)
        self.assertEqual(certificate.to_dict()['labels'], '(D, D)')

        certificate = check(self.pd, const.EC, (C, D))
        self.assertFalse(certificate.holds())
        self.assertFalse(certificate.clauses()[0].holds())
        self.assertTrue(certificate.clauses()[1].holds())


    def test_mask(self):
        mask = equilibrium_mask(self.pd, const.EC)
        self.assertEqual(mask.shape, (2, 2))
        np.testing.assert_array_equal(mask, [[False, False], [False, True]])


class TestNormalForm(unittest.TestCase):


    def setUp(self):
        self.pd = get_game(PD)
        self.mp = get_game(MP)


    def test_is_nash(self):
        self.assertTrue(is_nash(self.pd, (D, D)))
        for profile in [(C, C), (C, D), (D, C)]:
            self.assertFalse(is_nash(self.pd, profile))
        for profile in self.mp.product_space().profiles():
            self.assertFalse(is_nash(self.mp, profile))

        flat = NormalFormGame(self.pd.spaces(), [np.ones(4), np.ones(4)])
        self.assertEqual(len(enumerate_equilibria(flat, const.NASH)), 4)


    def test_is_weak_nash(self):
        # Default feasibility: weak Nash = Nash
        self.assertEqual(
            profiles(enumerate_equilibria(self.pd, const.WEAK_NASH)),
            profiles(enumerate_equilibria(self.pd, const.NASH)))
        self.assertTrue(is_weak_nash(self.pd, (D, D)))

        product = self.mp.product_space()
        spaces = self.mp.spaces()
        utilities = [self.mp.utility(0), self.mp.utility(1)]

        # No feasible x_{-i} at all: every profile is weak Nash
        nowhere = [ProductSubset.empty(product.without(i)) for i in range(2)]
        game = NormalFormGame(spaces, utilities, nowhere)
        self.assertEqual(len(enumerate_equilibria(game, const.WEAK_NASH)), 4)

        # Player 1 unconstrained only: player 2 must best-respond
        game = NormalFormGame(spaces, utilities, [nowhere[0], None])
        self.assertEqual(profiles(enumerate_equilibria(game,
                                                       const.WEAK_NASH)),
                         [(H, T), (T, H)])
        # Nash ignores the masks
        self.assertEqual(enumerate_equilibria(game, const.NASH), [])


class TestQualitative(unittest.TestCase):


    def setUp(self):
        self.spaces = [abstract(1, 2), abstract(2, 2)]


    def test_qualitative_equilibrium(self):
        nothing = QualitativeGame(self.spaces,
                                  [np.zeros((4, 2)), np.zeros((4, 2))])
        for profile in nothing.product_space().profiles():
            self.assertTrue(qualitative_equilibrium(nothing, profile))

        everything = QualitativeGame(self.spaces,
                                     [np.ones((4, 2)), np.ones((4, 2))])
        self.assertEqual(enumerate_equilibria(everything, const.QUAL_EQ), [])
        self.assertEqual(
            len(enumerate_equilibria(everything, const.QUAL_WEAK_EQ)), 4)
        self.assertTrue(qualitative_equilibrium(everything, (0, 0),
                                                weak=True))

        game = get_game(QUALITATIVE_2X2)
        self.assertEqual(profiles(enumerate_equilibria(game, const.QUAL_EQ)),
                         [(0, 0), (0, 1)])
        self.assertRaises(utils.UsageError, check, game, const.EC, (0, 0))


if __name__ == '__main__':
    unittest.main()
