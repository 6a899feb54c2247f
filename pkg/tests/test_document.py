''' Tests for the GameDocument class, parse_game and serialize
'''
#pylint: disable=missing-class-docstring
#pylint: disable=missing-function-docstring

# Standard library imports
import json
import unittest

# Third party imports
import numpy as np

# Local imports
from tests.help_lib import (SPLIT_HULL, FIXTURES, MP, PD, QUALITATIVE_2X2,
                            get_fixture, get_fixture_text, get_game)
from tests.fixtures.generate import BUILDERS
import choiceform.constants as const
from choiceform.correspondence import Correspondence
from choiceform.document import GameDocument, parse_game, serialize
import choiceform.generators as generators
from choiceform.game import ChoiceFormGame
from choiceform.normal_form import NormalFormGame, to_choice_form_normal
from choiceform.qualitative import QualitativeGame
from choiceform.subset import ProductSubset
import choiceform.utils as utils


def pd_raw():
    return json.loads(get_fixture_text(PD))


def parse_raw(raw):
    return parse_game(json.dumps(raw))


class TestParse(unittest.TestCase):


    def test_fixtures(self):
        for name in FIXTURES:
            text = get_fixture_text(name)
            document = parse_game(text)
            self.assertEqual(serialize(document), text, msg=name)
            self.assertEqual(parse_game(document.serialize()), document)


    def test_builders(self):
        for name, builder in BUILDERS.items():
            self.assertEqual(builder().serialize(), get_fixture_text(name),
                             msg=name)


    def test_prisoners_dilemma(self):
        document = get_fixture(PD)
        self.assertEqual(document.format_version(), const.FORMAT_VERSION)
        self.assertEqual(document.game_class(), const.NORMAL)
        self.assertEqual(document.aux(), {})
        self.assertIsNone(document.raw_aux())
        game = document.game()
        self.assertIsInstance(game, NormalFormGame)
        np.testing.assert_array_equal(game.utility(0), [[3, 0], [5, 1]])
        np.testing.assert_array_equal(game.utility(1), [[3, 5], [0, 1]])
        self.assertEqual(game.spaces()[0].labels(), ['C', 'D'])
        self.assertTrue(game.spaces()[0].is_grid())


    def test_other_classes(self):
        self.assertIsInstance(get_game(QUALITATIVE_2X2), QualitativeGame)

        document = get_fixture(SPLIT_HULL)
        game = document.game()
        self.assertIsInstance(game, ChoiceFormGame)
        self.assertEqual(len(game.spaces()[0]), 9)
        self.assertEqual(game.choice(0).count(), 60)
        self.assertEqual(game.choice(1).count(), 81)
        inner = document.aux()['S']
        self.assertIsInstance(inner[0], Correspondence)
        self.assertEqual(inner[1].value((5,)).indices(), [0])
        self.assertEqual(document.raw_aux().keys(), {'S'})


    def test_invalid_profile(self):
        raw = pd_raw()
        raw['class'] = const.CHOICE
        del raw['utilities']
        raw['choice'] = [[[0, 2]], 'all']
        with self.assertRaises(utils.DocumentError) as context:
            parse_raw(raw)
        self.assertIn('invalid profile', str(context.exception))

        raw['choice'] = [[[0]], 'all']
        self.assertRaises(utils.DocumentError, parse_raw, raw)


    def test_syntax_error(self):
        text = get_fixture_text(PD).replace('"class":', '"class"')
        with self.assertRaises(utils.DocumentError) as context:
            parse_game(text)
        self.assertEqual(context.exception.line, 3)
        self.assertIsNotNone(context.exception.column)
        self.assertIn('line 3', str(context.exception))


    def test_structure(self):
        bad = []

        raw = pd_raw()
        raw['format'] = 'choiceform/2'
        bad.append(raw)

        raw = pd_raw()
        raw['class'] = 'extensive'
        bad.append(raw)

        raw = pd_raw()
        raw['colour'] = 'blue'
        bad.append(raw)

        raw = pd_raw()
        raw['choice'] = ['all', 'all']
        bad.append(raw)

        raw = pd_raw()
        raw['utilities'] = [[3, 0, 5, 1]]
        bad.append(raw)

        raw = pd_raw()
        raw['utilities'][0] = [3, 0, 5]
        bad.append(raw)

        raw = pd_raw()
        raw['players'][1]['id'] = 1
        bad.append(raw)

        raw = pd_raw()
        raw['aux'] = {'S': [[], []]}
        bad.append(raw)

        raw = json.loads(get_fixture_text(QUALITATIVE_2X2))
        raw['feasible'] = [None, None]
        bad.append(raw)

        for raw in bad:
            self.assertRaises(utils.DocumentError, parse_raw, raw)
        self.assertRaises(utils.DocumentError, parse_game, '[1, 2]')


class TestFromGame(unittest.TestCase):


    def test_normal(self):
        pd = get_game(PD)
        document = GameDocument.from_game(pd)
        self.assertEqual(document.game(), pd)
        self.assertEqual(document.serialize(), get_fixture_text(PD))
        self.assertNotIn('feasible', document.raw())

        product = pd.product_space()
        feasible = [ProductSubset.from_profiles(product.without(0), [(1,)]),
                    None]
        masked = NormalFormGame(pd.spaces(), [pd.utility(0), pd.utility(1)],
                                feasible)
        document = GameDocument.from_game(masked)
        self.assertEqual(document.raw()['feasible'], [[[1]], None])
        self.assertEqual(parse_game(document.serialize()).game(), masked)


    def test_choice(self):
        mp = to_choice_form_normal(get_game(MP))
        document = GameDocument.from_game(mp)
        self.assertEqual(document.game_class(), const.CHOICE)
        self.assertEqual(document.raw()['choice'][0], [[0, 0], [1, 1]])
        self.assertEqual(parse_game(serialize(document)).game(), mp)

        aux = {'D': ['all', [[0, 1]]]}
        document = GameDocument.from_game(mp, aux)
        self.assertEqual(document.aux()['D'][0],
                         ProductSubset.full(mp.product_space()))
        self.assertEqual(document.raw_aux(), aux)


    def test_generated(self):
        for seed in range(10):
            for game in [generators.random_choice_form(seed),
                         generators.random_normal_form(seed),
                         generators.random_qualitative(seed)]:
                document = GameDocument.from_game(game)
                self.assertEqual(parse_game(document.serialize()).game(),
                                 game)


    def test_dunder(self):
        first = get_fixture(PD)
        second = get_fixture(PD)
        self.assertEqual(first, second)
        self.assertEqual(hash(first), hash(second))
        self.assertNotEqual(first, get_fixture(MP))
        self.assertIsInstance(first.__str__(), str)
        self.assertIsInstance(first.__repr__(), str)
        self.assertRaises(TypeError, GameDocument.from_game, 'game')


if __name__ == '__main__':
    unittest.main()
