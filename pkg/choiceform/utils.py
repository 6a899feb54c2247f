""" Helper methods for choiceform. These shouldn't be used by the client. """

# Third party imports
import numpy as np

##################################
# EXCEPTIONS
##################################

# Exceptions
#pylint: disable=unnecessary-pass
class ChoiceFormError(Exception):
    """ Base class of every error raised by choiceform. """
    pass

class InvalidProfileError(ChoiceFormError):
    """ Used when a profile or point index is out of range for its space. """
    pass

class UsageError(ChoiceFormError):
    """ Used when a request is incompatible with its inputs.

    For example an equilibrium kind that does not apply to the game class, or
    a hypothesis check that is missing a variant-specific ingredient.
    """
    pass

class UnsupportedSpaceError(ChoiceFormError):
    """ Used when a grid-only operation is given an abstract space. """
    pass

class BudgetError(ChoiceFormError):
    """ Used when a combinatorial search exceeds its budget.

    Attributes:
        partial: whatever the search had established before it stopped.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial

class ConstructionError(ChoiceFormError):
    """ Used when a proof correspondence cannot be built.

    Attributes:
        condition (str): the theorem condition whose failure blocks the
            construction.
    """

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition

class HypothesisError(ChoiceFormError):
    """ Used when a theorem's hypotheses fail and the caller did not force.

    Attributes:
        report (HypothesisReport): the failing report.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report

class NoFixedPointError(ChoiceFormError):
    """ Used when no profile is within tolerance of a fixed point.

    Attributes:
        result (FixedPointResult): the lexicographically first argmin of the
            residual, kept for diagnostics.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result

class VerificationError(ChoiceFormError):
    """ Used when a solver profile fails the exact checker.

    This signals a gap between the grid hypotheses and the discrete fixed point
    and is never silently passed.

    Attributes:
        profile (tuple): the profile that failed verification.
        trace (dict): the pipeline trace up to the failure.
    """

    def __init__(self, message, profile=None, trace=None):
        super().__init__(message)
        self.profile = profile
        self.trace = trace

class DocumentError(ChoiceFormError):
    """ Used when a game document cannot be parsed or validated.

    Attributes:
        line (int): line of a syntax error, else None.
        column (int): column of a syntax error, else None.
    """

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

##################################
# HELPERS
##################################

def check_player(i, num_players):
    """ Validate a 0-based player position.

    Args:
        i (int): the player position.
        num_players (int): how many players the game has.

    Raises:
        TypeError: if i is not an int.
        InvalidProfileError: if i is out of range.
    """
    if isinstance(i, bool) or not isinstance(i, (int, np.integer)):
        raise TypeError('player should be int')
    if not 0 <= i < num_players:
        raise InvalidProfileError(f'player {i} not in [0, {num_players})')


def readonly(array):
    """ Return a read-only copy of a numpy array. """
    result = np.array(array, copy=True)
    result.setflags(write=False)
    return result


def lift(mask_minus_i, i, sizes):
    """ Lift a mask over X_{-i} to a mask over X, constant along player i.

    Args:
        mask_minus_i: bool array, flat or shaped, over the profiles of X_{-i}
            in lexicographic order.
        i (int): the omitted player.
        sizes (tuple): per-player cardinalities of X.

    Returns:
        np.ndarray: bool array of shape sizes.
    """
    others = tuple(n for j, n in enumerate(sizes) if j != i)
    shaped = np.asarray(mask_minus_i).reshape(others)
    return np.broadcast_to(np.expand_dims(shaped, axis=i), sizes)


def format_profile(product, profile):
    """ Render a profile with its point labels, e.g. '(D, D)'. """
    labels = [product.space(j).label(k) for j, k in enumerate(profile)]
    return '(' + ', '.join(labels) + ')'
