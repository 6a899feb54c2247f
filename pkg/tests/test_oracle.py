''' Tests comparing the vectorized enumerators with the naive oracle
'''
#pylint: disable=missing-class-docstring
#pylint: disable=missing-function-docstring

# Standard library imports
import unittest

# Local imports
from tests.help_lib import PD, get_game
from tests.oracle import OracleScaleError, oracle_enumerate
import choiceform.constants as const
from choiceform.equilibrium import enumerate_equilibria
import choiceform.generators as generators
from choiceform.normal_form import to_choice_form_normal
import choiceform.utils as utils


def profiles(game, kind):
    return [c.profile() for c in enumerate_equilibria(game, kind)]


class TestOracle(unittest.TestCase):


    def test_choice_form(self):
        for seed in range(40):
            game = generators.random_choice_form(seed)
            for kind in [const.EC, const.SEC]:
                self.assertEqual(profiles(game, kind),
                                 oracle_enumerate(game, kind),
                                 msg=f'seed {seed} kind {kind}')


    def test_normal_form(self):
        for seed in range(40):
            density = None if seed % 2 else 0.6
            game = generators.random_normal_form(seed,
                                                 feasible_density=density)
            for kind in [const.NASH, const.WEAK_NASH]:
                self.assertEqual(profiles(game, kind),
                                 oracle_enumerate(game, kind),
                                 msg=f'seed {seed} kind {kind}')


    def test_qualitative(self):
        for seed in range(40):
            game = generators.random_qualitative(seed)
            for kind in [const.QUAL_EQ, const.QUAL_WEAK_EQ]:
                self.assertEqual(profiles(game, kind),
                                 oracle_enumerate(game, kind),
                                 msg=f'seed {seed} kind {kind}')


    def test_cap(self):
        pd = get_game(PD)
        self.assertEqual(oracle_enumerate(pd, const.NASH), [(1, 1)])
        self.assertRaises(OracleScaleError, oracle_enumerate, pd, const.NASH,
                          cap=3)


    def test_class_mismatch(self):
        pd = get_game(PD)
        pd_choice = to_choice_form_normal(pd)
        for game, kind in [(pd_choice, const.NASH), (pd_choice, const.QUAL_EQ),
                           (pd, const.EC), (pd, const.QUAL_WEAK_EQ),
                           (pd, 'Correlated')]:
            self.assertRaises(utils.UsageError, oracle_enumerate, game, kind)


if __name__ == '__main__':
    unittest.main()
