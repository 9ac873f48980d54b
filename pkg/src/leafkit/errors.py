"""Exception types shared across the package."""


class LeafkitError(Exception):
    """Base class for every error raised by leafkit."""


class SignatureMismatch(LeafkitError, ValueError):
    """Two objects live over different rings."""


class NotDescending(LeafkitError, ValueError):
    """A derivation does not map the relation ideal into itself."""


class HasseSchmidtAxiomError(LeafkitError, ValueError):
    """A truncated Hasse-Schmidt family violates one of its axioms."""


class OrderExceeded(LeafkitError, ValueError):
    """An index or jet order goes past the declared truncation."""


class EmptyOpenSet(LeafkitError, ValueError):
    """A basic open set D(b) is empty because b is nilpotent modulo the relations."""


class IncompatibleSections(LeafkitError, ValueError):
    """Two fraction patches disagree on their overlap."""

    def __init__(self, i, j, detail=""):
        self.pair = (i, j)
        msg = f"patches {i} and {j} disagree on their overlap"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class CertificateFailure(LeafkitError, AssertionError):
    """A claimed identity or membership did not replay."""


class NotDifferentialMorphism(LeafkitError, ValueError):
    """A ring map does not intertwine the two derivations."""


class Inconclusive(LeafkitError):
    """A comparison needs Exact trajectories but got a bounded approximation."""


class PolySyntaxError(LeafkitError, ValueError):
    """Positioned parse error: 1-based line and column plus the expected tokens."""

    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        exp = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"line {line}, column {column}: {message}{exp}")


class RelationsNotContained(LeafkitError, ValueError):
    """A prime handed to a leaf test does not contain the scheme's relations."""
