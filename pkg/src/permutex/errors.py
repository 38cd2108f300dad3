"""Exception types raised by permutex."""


class PermutexError(Exception):
    """Base class for all permutex errors."""


class NotProlongable(PermutexError):
    pass


class BadLiteral(PermutexError, ValueError):
    pass


class UnresolvedComparison(PermutexError):
    """No difference between two shifts was found within the depth budget.

    This reports an exhausted budget, never equality of the shifts.
    """

    def __init__(self, a, b, depth):
        super().__init__(f"shifts at {a} and {b} agree on the first {depth} letters")
        self.a = a
        self.b = b
        self.depth = depth


class InconsistentForm(PermutexError, ValueError):
    pass


class UnsupportedMorphism(PermutexError, ValueError):
    pass


class DomainTooSmall(PermutexError, ValueError):
    pass


class CensusViolation(PermutexError):
    """A same-form group contradicts the pair classification."""

    def __init__(self, form, message):
        super().__init__(f"form {form}: {message}")
        self.form = form


class NonStabilized(PermutexError):
    def __init__(self, n, scan_len):
        super().__init__(
            f"Perm({n}) still growing at scan length {scan_len}; raise PERMUTEX_MAX_SCAN"
        )
        self.n = n
        self.scan_len = scan_len
