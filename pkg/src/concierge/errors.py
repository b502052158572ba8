"""Exception types shared across the package."""


class ConciergeError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ConciergeError):
    """A document or value violates its schema or range.

    ``path`` locates the offending field, e.g. ``transitions[2].mu``.
    """

    def __init__(self, message, path=None):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class UnsupportedRuleTypeError(ConciergeError):
    """Requested a rule type the net compiler does not support."""


class ReasoningBudgetExceededError(ConciergeError):
    """The reasoner did not converge within its iteration budget."""


class NotFoundError(ConciergeError):
    """A referenced entity (proposition, session, item) does not exist."""


class EmptyUtteranceError(ConciergeError):
    """The utterance contained no usable tokens."""


class NoCandidatesError(ConciergeError):
    """A recommendation was requested against an empty candidate pool."""


class SessionIntegrityError(ConciergeError):
    """A persisted session snapshot is unreadable or corrupt."""


class BundleValidationError(ConciergeError):
    """One or more data files failed validation.

    ``problems`` is a list of (file, path, message) triples; the exception
    message aggregates all of them so a bad bundle is reported in one shot.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        lines = [f"{f}: {p}: {m}" if p else f"{f}: {m}" for f, p, m in self.problems]
        super().__init__("bundle validation failed:\n  " + "\n  ".join(lines))
