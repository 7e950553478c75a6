"""Exception types shared across the package."""


class TopolabError(Exception):
    """Base class for all library-specific errors."""


class NotATopology(TopolabError):
    """A family of subsets violates the topology axioms.

    The message names what is missing: the empty set, the full set, or
    one offending union/intersection of two members.
    """


class BadParams(TopolabError):
    """A parameter lies outside its documented domain."""


class ScopeTooLarge(TopolabError):
    """An enumeration or sweep request exceeds the hard size caps."""


class SpaceMismatch(TopolabError):
    """Composition was attempted across non-identical middle spaces."""


class ArityMismatch(TopolabError):
    """Claim bindings do not match the claim's space/map arity."""


class InternalCheckError(TopolabError):
    """A witness failed re-validation: a bug in the sweep, not bad input."""
