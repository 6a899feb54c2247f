""" HypothesisReport and RunReport classes. """

# Standard library imports
import hashlib
import json

# Local imports
import choiceform.constants as const


class HypothesisEntry:
    """ The verdict on one lettered condition for one player.

    Informational entries (gating False) are reported but do not decide
    whether the theorem applies.
    """

    def __init__(self, player, condition, passed, witness=None, gating=True,
                 note=None):
        """
        Args:
            player (Union[int, None]): the player, None for game-wide
                conditions.
            condition (str): the condition name, e.g. 'b' or 'c-prime'.
            passed (bool): the verdict.
            witness: a JSON-ready violating point or pair; required when
                passed is False.
            gating (bool): whether the verdict counts towards the report.
            note (str): optional explanation.

        Raises:
            ValueError: if a failing entry has no witness.
        """
        if not passed and witness is None:
            raise ValueError(f'failing condition {condition} needs a witness')
        self._player = player
        self._condition = condition
        self._passed = bool(passed)
        self._witness = witness
        self._gating = bool(gating)
        self._note = note


    def __str__(self):
        who = 'game' if self._player is None else f'player {self._player}'
        verdict = 'pass' if self._passed else 'FAIL'
        text = f'{self._condition:<24} {who:<10} {verdict}'
        if not self._gating:
            text += ' (informational)'
        if self._witness is not None:
            text += f' witness={self._witness}'
        if self._note:
            text += f' [{self._note}]'
        return text


    def __repr__(self):
        return f'HypothesisEntry({self})'


    def player(self):
        """
        Returns:
            Union[int, None]: the player, None for game-wide conditions.
        """
        return self._player


    def condition(self):
        """
        Returns:
            str: the condition name.
        """
        return self._condition


    def passed(self):
        """
        Returns:
            bool: the verdict.
        """
        return self._passed


    def witness(self):
        """
        Returns:
            the violating point or pair, None when passed.
        """
        return self._witness


    def gating(self):
        """
        Returns:
            bool: whether the verdict counts towards the report.
        """
        return self._gating


    def note(self):
        """
        Returns:
            Union[str, None]: an explanation, if any.
        """
        return self._note


    def to_dict(self):
        """
        Returns:
            dict: a JSON-ready view.
        """
        return {
            'player': self._player,
            'condition': self._condition,
            'passed': self._passed,
            'witness': _jsonable(self._witness),
            'gating': self._gating,
            'note': self._note,
        }


class HypothesisReport:
    """ The per-condition verdicts of a theorem's hypotheses on a game. """

    def __init__(self, variant, radius, k_max, entries=None):
        """
        Args:
            variant (str): one of const.VARIANTS.
            radius (int): the neighbourhood radius used.
            k_max (int): the WCG subset bound used.
            entries (List[HypothesisEntry]): initial entries.
        """
        if variant not in const.VARIANTS:
            raise ValueError(f'variant {variant} invalid')
        self._variant = variant
        self._radius = radius
        self._k_max = k_max
        self._entries = list(entries) if entries else []


    def __str__(self):
        verdict = 'hold' if self.passed() else 'fail'
        return f'HypothesisReport {self._variant}: hypotheses {verdict}'


    def __repr__(self):
        return str(self) + f' ({len(self._entries)} entries)'


    def add(self, player, condition, passed, witness=None, gating=True,
            note=None):
        """ Append an entry; see :class:`HypothesisEntry`.

        Returns:
            HypothesisEntry: the new entry.
        """
        entry = HypothesisEntry(player, condition, passed, witness, gating,
                                note)
        self._entries.append(entry)
        return entry


    def variant(self):
        """
        Returns:
            str: the theorem variant.
        """
        return self._variant


    def radius(self):
        """
        Returns:
            int: the neighbourhood radius used.
        """
        return self._radius


    def k_max(self):
        """
        Returns:
            int: the WCG subset bound used.
        """
        return self._k_max


    def entries(self):
        """
        Returns:
            List[HypothesisEntry]: every entry, in evaluation order.
        """
        return list(self._entries)


    def failures(self):
        """
        Returns:
            List[HypothesisEntry]: the failing gating entries.
        """
        return [e for e in self._entries if e.gating() and not e.passed()]


    def passed(self):
        """
        Returns:
            bool: True if every gating entry passed.
        """
        return not self.failures()


    def to_dict(self):
        """
        Returns:
            dict: a JSON-ready view.
        """
        return {
            'variant': self._variant,
            'radius': self._radius,
            'k_max': self._k_max,
            'passed': self.passed(),
            'entries': [entry.to_dict() for entry in self._entries],
        }


    def to_text(self):
        """
        Returns:
            str: one line per entry, headed by the verdict.
        """
        lines = [f'{self} (radius={self._radius}, k_max={self._k_max})']
        lines.extend('  ' + str(entry) for entry in self._entries)
        return '\n'.join(lines)


class RunReport:
    """ The outcome of one CLI command.

    The text form is rendered from the same dict as the JSON form, so both
    carry every field.
    """

    def __init__(self, command, source_text, results, wall_time,
                 exit_code=const.EXIT_OK):
        """
        Args:
            command (str): the subcommand name.
            source_text (str): the input document text, digested with
                sha256. Empty for commands without input.
            results (dict): JSON-ready results.
            wall_time (float): seconds spent on the command.
            exit_code (int): the process exit code.
        """
        self._command = command
        self._digest = hashlib.sha256(source_text.encode('utf-8')).hexdigest()
        self._results = results
        self._wall_time = float(wall_time)
        self._exit_code = exit_code


    def __str__(self):
        return f'RunReport {self._command} exit={self._exit_code}'


    def __repr__(self):
        return str(self) + f' digest={self._digest[:12]}'


    def command(self):
        """
        Returns:
            str: the subcommand name.
        """
        return self._command


    def digest(self):
        """
        Returns:
            str: hex sha256 of the input document.
        """
        return self._digest


    def results(self):
        """
        Returns:
            dict: the JSON-ready results.
        """
        return self._results


    def wall_time(self):
        """
        Returns:
            float: seconds spent on the command.
        """
        return self._wall_time


    def exit_code(self):
        """
        Returns:
            int: the process exit code.
        """
        return self._exit_code


    def to_dict(self):
        """
        Returns:
            dict: a JSON-ready view.
        """
        return {
            'command': self._command,
            'digest': self._digest,
            'exit_code': self._exit_code,
            'wall_time': round(self._wall_time, 6),
            'results': _jsonable(self._results),
        }


    def to_json(self):
        """
        Returns:
            str: the indented JSON form.
        """
        return json.dumps(self.to_dict(), indent=2)


    def to_text(self):
        """
        Returns:
            str: a plain-text rendering of every field.
        """
        data = self.to_dict()
        lines = [
            f'command:   {data["command"]}',
            f'digest:    {data["digest"]}',
            f'exit code: {data["exit_code"]}',
            f'wall time: {data["wall_time"]:.6f}s',
        ]
        lines.extend(_text_lines(data['results'], 0))
        return '\n'.join(lines)


def _text_lines(value, depth):
    indent = '  ' * depth
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f'{indent}{key}:')
                lines.extend(_text_lines(item, depth + 1))
            else:
                lines.append(f'{indent}{key}: {json.dumps(item)}')
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                lines.append(f'{indent}-')
                lines.extend(_text_lines(item, depth + 1))
            else:
                lines.append(f'{indent}- {json.dumps(item)}')
        return lines
    return [f'{indent}{json.dumps(value)}']


def _jsonable(value):
    """ Convert tuples and numpy scalars to plain JSON values. """
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, 'item'):
        return value.item()
    return value
