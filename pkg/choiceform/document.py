""" GameDocument class: the versioned JSON game description.

A document is a JSON object with the keys below, written one per line in
this order by :meth:`GameDocument.serialize`, so a serialized document
parses and re-serializes to the same bytes.

- ``format``: "choiceform/1".
- ``class``: "choice", "normal" or "qualitative".
- ``players``: per player {"id", "labels"} for an abstract space, or
  {"id", "box", "mesh"} with optional "labels" for a grid.
- ``choice``: per player a list of profiles of X, or "all".
- ``utilities``: per player the table of u_i, flat in lexicographic order.
- ``feasible``: optional, per player null or a list of profiles of X_{-i}.
- ``preferences``: per player a list of [profile, point] pairs.
- ``aux``: optional solver ingredients: "D" (per player profiles of X or
  "all"), "S" (per player [x_{-i}, y_i] pairs), "O" (per player, per point
  of X_i, null or profiles of X_{-i}), "simplex" (per player null or vertex
  profiles of X_{-i}).

Profiles are lists of 0-based point indices.
"""

# Standard library imports
import copy
import json
import logging

# Third party imports
import numpy as np

# Local imports
import choiceform.constants as const
from choiceform.correspondence import Correspondence
from choiceform.game import ChoiceFormGame
from choiceform.normal_form import NormalFormGame
from choiceform.qualitative import QualitativeGame
from choiceform.space import ProductSpace, StrategySpace
from choiceform.subset import ProductSubset
import choiceform.utils as utils

logger = logging.getLogger(__name__)

KEY_ORDER = ['format', 'class', 'players', 'choice', 'utilities', 'feasible',
             'preferences', 'aux']
PAYLOAD_KEYS = {
    const.CHOICE: 'choice',
    const.NORMAL: 'utilities',
    const.QUALITATIVE: 'preferences',
}
AUX_KEYS = ['D', 'S', 'O', 'simplex']


class GameDocument:
    """ A parsed and validated game description.

    Use :func:`parse_game` to read one and :meth:`GameDocument.from_game` to
    describe a game built in code.
    """

    def __init__(self, raw):
        """ Validate a decoded document and build its game.

        Args:
            raw (dict): the decoded JSON object.

        Raises:
            DocumentError: if an invariant of the format is violated.
        """
        if not isinstance(raw, dict):
            raise utils.DocumentError('document should be a JSON object')
        raw = copy.deepcopy(raw)
        unknown = [key for key in raw if key not in KEY_ORDER]
        if unknown:
            raise utils.DocumentError(f'unknown keys {unknown}')
        if raw.get('format') != const.FORMAT_VERSION:
            raise utils.DocumentError(
                f'format should be {const.FORMAT_VERSION!r}, got '
                f'{raw.get("format")!r}')
        game_class = raw.get('class')
        if game_class not in PAYLOAD_KEYS:
            raise utils.DocumentError(
                f'class should be one of {list(PAYLOAD_KEYS)}, got '
                f'{game_class!r}')
        present = [key for key in PAYLOAD_KEYS.values() if key in raw]
        if present != [PAYLOAD_KEYS[game_class]]:
            raise utils.DocumentError(
                f'a {game_class} document needs exactly the payload '
                f'{PAYLOAD_KEYS[game_class]!r}, found {present}')
        if 'feasible' in raw and game_class != const.NORMAL:
            raise utils.DocumentError('feasible applies to normal games only')

        self._raw = raw
        self._class = game_class
        try:
            self._spaces = _parse_players(raw.get('players'))
            self._product = ProductSpace(self._spaces)
            self._game = self._build_game()
            self._aux = self._build_aux(raw.get('aux'))
        except utils.InvalidProfileError as error:
            raise utils.DocumentError(str(error)) from error
        except (TypeError, ValueError, IndexError, KeyError) as error:
            raise utils.DocumentError(f'invalid document: {error}') from error


    @classmethod
    def from_game(cls, game, aux=None):
        """ Describe a game (and optional ingredients) as a document.

        Args:
            game: a ChoiceFormGame, NormalFormGame or QualitativeGame.
            aux (dict): optional ingredients in the document's raw form.

        Returns:
            GameDocument: the document.
        """
        if not isinstance(game, (ChoiceFormGame, NormalFormGame,
                                 QualitativeGame)):
            raise TypeError('game should be a choiceform game')
        raw = {'format': const.FORMAT_VERSION}
        raw['players'] = [_describe_space(space) for space in game.spaces()]
        if isinstance(game, ChoiceFormGame):
            raw['class'] = const.CHOICE
            raw['choice'] = [_describe_subset(game.choice(i))
                             for i in range(game.num_players())]
        elif isinstance(game, NormalFormGame):
            raw['class'] = const.NORMAL
            raw['utilities'] = [[_number(v) for v in
                                 game.utility(i).reshape(-1)]
                                for i in range(game.num_players())]
            if not game.has_default_feasibility():
                raw['feasible'] = [
                    None if mask.count() == mask.space().count()
                    else [list(p) for p in mask.profiles()]
                    for mask in (game.feasible(i)
                                 for i in range(game.num_players()))]
        else:
            raw['class'] = const.QUALITATIVE
            raw['preferences'] = [[[list(p), y] for p, y in game.pairs(i)]
                                  for i in range(game.num_players())]
        if aux:
            raw['aux'] = aux
        logger.debug('described %s over %d profiles', game,
                     game.product_space().count())
        return cls(raw)


    def __str__(self):
        return f'GameDocument {self._class} {self._product}'


    def __repr__(self):
        return str(self)


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and \
            self.serialize() == other.serialize()


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash(self.serialize())


    def format_version(self):
        """
        Returns:
            str: the format version.
        """
        return self._raw['format']


    def game_class(self):
        """
        Returns:
            str: const.CHOICE, const.NORMAL or const.QUALITATIVE.
        """
        return self._class


    def game(self):
        """
        Returns:
            the ChoiceFormGame, NormalFormGame or QualitativeGame described.
        """
        return self._game


    def aux(self):
        """
        Returns:
            dict: the solver ingredients, with sets and correspondences
            built ('D', 'S', 'O', 'simplex'); empty if none were given.
        """
        return dict(self._aux)


    def raw_aux(self):
        """
        Returns:
            Union[dict, None]: the ingredients as written in the document.
        """
        return copy.deepcopy(self._raw.get('aux'))


    def raw(self):
        """
        Returns:
            dict: a copy of the decoded document.
        """
        return copy.deepcopy(self._raw)


    def serialize(self):
        """ Write the document in its canonical text form.

        Returns:
            str: one top-level key per line, in the format's key order.
        """
        lines = [f'  {json.dumps(key)}: {json.dumps(self._raw[key])}'
                 for key in KEY_ORDER if key in self._raw]
        return '{\n' + ',\n'.join(lines) + '\n}\n'


    def _build_game(self):
        product = self._product
        n = product.num_players()
        payload = self._raw[PAYLOAD_KEYS[self._class]]
        _check_per_player(payload, n, PAYLOAD_KEYS[self._class])

        if self._class == const.CHOICE:
            choice = [_parse_subset(product, entry) for entry in payload]
            return ChoiceFormGame(self._spaces, choice)

        if self._class == const.NORMAL:
            feasible = self._raw.get('feasible')
            if feasible is not None:
                _check_per_player(feasible, n, 'feasible')
                feasible = [None if entry is None else
                            _parse_subset(product.without(i), entry)
                            for i, entry in enumerate(feasible)]
            return NormalFormGame(self._spaces, payload, feasible)

        pairs = [[(tuple(profile), point) for profile, point in entry]
                 for entry in payload]
        return QualitativeGame.from_pairs(self._spaces, pairs)


    def _build_aux(self, raw_aux):
        if raw_aux is None:
            return {}
        if not isinstance(raw_aux, dict):
            raise utils.DocumentError('aux should be an object')
        unknown = [key for key in raw_aux if key not in AUX_KEYS]
        if unknown:
            raise utils.DocumentError(f'unknown aux keys {unknown}')
        if raw_aux and self._class != const.CHOICE:
            raise utils.DocumentError('aux applies to choice documents; '
                                      'convert the game first')

        product = self._product
        n = product.num_players()
        aux = {}
        for key, entries in raw_aux.items():
            _check_per_player(entries, n, f'aux.{key}')
        if 'D' in raw_aux:
            aux['D'] = [_parse_subset(product, entry)
                        for entry in raw_aux['D']]
        if 'S' in raw_aux:
            aux['S'] = [_parse_pairs(product, i, entry)
                        for i, entry in enumerate(raw_aux['S'])]
        if 'O' in raw_aux:
            aux['O'] = [_parse_family(product, i, entry)
                        for i, entry in enumerate(raw_aux['O'])]
        if 'simplex' in raw_aux:
            aux['simplex'] = [None if entry is None else
                              [_profile(product.without(i), v) for v in entry]
                              for i, entry in enumerate(raw_aux['simplex'])]
        return aux


def parse_game(text):
    """ Parse and validate a game document.

    Args:
        text (str): the document text.

    Returns:
        GameDocument: the validated document.

    Raises:
        DocumentError: with line and column on a syntax error, or naming the
            violated invariant on a semantic error.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as error:
        raise utils.DocumentError(
            f'syntax error at line {error.lineno}, column {error.colno}: '
            f'{error.msg}', line=error.lineno, column=error.colno) from error
    return GameDocument(raw)


def serialize(document):
    """ The canonical text of a document; see :meth:`GameDocument.serialize`.
    """
    return document.serialize()

##################################
# HELPERS
##################################

def _check_per_player(entries, n, key):
    if not isinstance(entries, list) or len(entries) != n:
        raise utils.DocumentError(f'{key} should have one entry per player '
                                  f'({n})')


def _parse_players(players):
    if not isinstance(players, list) or not players:
        raise utils.DocumentError('players should be a nonempty list')
    spaces = []
    ids = set()
    for entry in players:
        if not isinstance(entry, dict) or 'id' not in entry:
            raise utils.DocumentError('every player needs an id')
        player_id = entry['id']
        if player_id in ids:
            raise utils.DocumentError(f'duplicate player id {player_id}')
        ids.add(player_id)
        if 'box' in entry or 'mesh' in entry:
            box = [tuple(interval) for interval in entry['box']]
            spaces.append(StrategySpace.grid(player_id, box, entry['mesh'],
                                             entry.get('labels')))
        else:
            spaces.append(StrategySpace.abstract(player_id,
                                                 entry.get('labels')))
    return spaces


def _describe_space(space):
    entry = {'id': space.player_id()}
    if space.is_grid():
        entry['box'] = [[_number(low), _number(high)]
                        for low, high in space.box()]
        entry['mesh'] = _number(space.mesh())
        if space.has_labels():
            entry['labels'] = space.labels()
    else:
        entry['labels'] = space.labels()
    return entry


def _profile(product, value):
    if not isinstance(value, list):
        raise utils.DocumentError(f'profile {value!r} should be a list')
    profile = tuple(value)
    product.check_profile(profile)
    return profile


def _parse_subset(product, entry):
    if entry == const.ALL_PROFILES:
        return ProductSubset.full(product)
    if not isinstance(entry, list):
        raise utils.DocumentError(f'expected a list of profiles or '
                                  f'{const.ALL_PROFILES!r}')
    return ProductSubset.from_profiles(
        product, [_profile(product, value) for value in entry])


def _describe_subset(subset):
    if subset.count() == subset.space().count():
        return const.ALL_PROFILES
    return [list(profile) for profile in subset.profiles()]


def _parse_pairs(product, i, entry):
    others, own = product.without(i), product.space(i)
    matrix = np.zeros((others.count(), len(own)), dtype=bool)
    for x_minus_i, y in entry:
        own.check_index(y)
        matrix[others.index(_profile(others, x_minus_i)), y] = True
    return Correspondence(others, own, matrix)


def _parse_family(product, i, entry):
    own = product.space(i)
    if not isinstance(entry, list) or len(entry) != len(own):
        raise utils.DocumentError(f'aux.O of player {i} needs one entry per '
                                  'point of its space')
    others = product.without(i)
    return [None if member is None else _parse_subset(others, member)
            for member in entry]


def _number(value):
    value = float(value)
    return int(value) if value.is_integer() else value
