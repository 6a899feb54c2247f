""" EquilibriumCertificate and Clause classes. """

# Local imports
import choiceform.constants as const
import choiceform.utils as utils


class Clause:
    """ The per-player evidence behind an equilibrium verdict.

    For EC and the weak kinds a clause is vacuous when the relevant set (the
    section C_i(x_{-i}), the best reply, or the satisfying replies) is empty;
    otherwise it holds when x_i belongs to it. For SEC, Nash and QualEq
    clauses are never vacuous.
    """

    def __init__(self, player, reference, vacuous, holds):
        """
        Args:
            player (int): the player position.
            reference (List[int]): the point indices of the set x_i was
                checked against.
            vacuous (bool): True if the clause is satisfied by emptiness.
            holds (bool): True if the clause is satisfied.
        """
        self._player = player
        self._reference = [int(k) for k in reference]
        self._vacuous = bool(vacuous)
        self._holds = bool(holds)


    def __str__(self):
        if self._vacuous:
            return f'player {self._player}: vacuous'
        verdict = 'holds' if self._holds else 'fails'
        return f'player {self._player}: {verdict} against {self._reference}'


    def __repr__(self):
        return f'Clause({self})'


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and self.to_dict() == other.to_dict()


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash((self._player, tuple(self._reference), self._vacuous,
                     self._holds))


    def player(self):
        """
        Returns:
            int: the player position.
        """
        return self._player


    def reference(self):
        """
        Returns:
            List[int]: the point indices the strategy was checked against.
        """
        return list(self._reference)


    def vacuous(self):
        """
        Returns:
            bool: True if the clause holds because its set is empty.
        """
        return self._vacuous


    def holds(self):
        """
        Returns:
            bool: True if the clause is satisfied.
        """
        return self._holds


    def to_dict(self):
        """
        Returns:
            dict: a JSON-ready view.
        """
        return {
            'player': self._player,
            'reference': list(self._reference),
            'vacuous': self._vacuous,
            'holds': self._holds,
        }


class EquilibriumCertificate:
    """ A profile with its equilibrium kind and per-player evidence.

    Certificates produced by the solver also carry a trace of the pipeline
    (variant, hypothesis report, moduli, residual, tolerance).
    """

    def __init__(self, profile, kind, clauses, trace=None, labels=None):
        """
        Args:
            profile (tuple): the profile.
            kind (str): one of const.KINDS.
            clauses (List[Clause]): one clause per player.
            trace (dict): optional solver provenance.
            labels (str): optional rendering of the profile with point
                labels, e.g. '(D, D)'.

        Raises:
            ValueError: if kind is unknown.
        """
        if kind not in const.KINDS:
            raise ValueError(f'equilibrium kind {kind} invalid')
        self._profile = tuple(int(k) for k in profile)
        self._kind = kind
        self._clauses = list(clauses)
        self._trace = trace
        self._labels = labels


    def __str__(self):
        shown = self._labels if self._labels else str(self._profile)
        return f'{self._kind} {shown}'


    def __repr__(self):
        status = 'verified' if self.holds() else 'rejected'
        return str(self) + f' ({status})'


    def __eq__(self, other):
        #pylint: disable=unidiomatic-typecheck
        return type(self) == type(other) and self._profile == other._profile \
            and self._kind == other._kind


    def __ne__(self, other):
        return not self.__eq__(other)


    def __hash__(self):
        return hash((self._profile, self._kind))


    def profile(self):
        """
        Returns:
            tuple: the certified profile.
        """
        return self._profile


    def kind(self):
        """
        Returns:
            str: the equilibrium kind.
        """
        return self._kind


    def clauses(self):
        """
        Returns:
            List[Clause]: one clause per player.
        """
        return list(self._clauses)


    def holds(self):
        """
        Returns:
            bool: True if every clause holds.
        """
        return all(clause.holds() for clause in self._clauses)


    def trace(self):
        """
        Returns:
            Union[dict, None]: the solver trace, None for checker output.
        """
        return self._trace


    def with_trace(self, trace):
        """
        Returns:
            EquilibriumCertificate: a copy carrying the given trace.
        """
        return EquilibriumCertificate(self._profile, self._kind,
                                      self._clauses, trace, self._labels)


    def with_kind(self, kind, clauses):
        """
        Returns:
            EquilibriumCertificate: a copy re-labelled with another kind and
            its clauses, keeping the trace.
        """
        return EquilibriumCertificate(self._profile, kind, clauses,
                                      self._trace, self._labels)


    def to_dict(self):
        """
        Returns:
            dict: a JSON-ready view including the trace, if any.
        """
        result = {
            'profile': list(self._profile),
            'kind': self._kind,
            'holds': self.holds(),
            'clauses': [clause.to_dict() for clause in self._clauses],
        }
        if self._labels is not None:
            result['labels'] = self._labels
        if self._trace is not None:
            result['trace'] = self._trace
        return result


def make_certificate(product, profile, kind, clauses, trace=None):
    """ Build a certificate whose profile is also rendered with labels. """
    return EquilibriumCertificate(profile, kind, clauses, trace,
                                  utils.format_profile(product, profile))
