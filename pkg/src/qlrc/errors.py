"""Exception hierarchy for the qlrc package.

Two broad families matter to callers: ``HypothesisViolated`` covers bad
inputs and unmet construction hypotheses (CLI exit 2), while
``CertificateMismatch`` covers internal consistency failures that always
indicate a bug (CLI exit 3).  Everything derives from ``QlrcError``.
"""

from __future__ import annotations


class QlrcError(Exception):
    """Base class for all qlrc errors."""


class HypothesisViolated(QlrcError):
    """An input violates a precondition or construction hypothesis."""


class NonPrimeCharacteristic(HypothesisViolated):
    """Field characteristic is not prime."""


class ReducibleModulus(HypothesisViolated):
    """Supplied modulus is not monic irreducible of the right degree."""


class FieldTooLarge(HypothesisViolated):
    """Field order exceeds the table cap (2^20)."""


class NonSquareFieldOrder(HypothesisViolated):
    """Operation needs GF(q^2) but the field order is not a square."""


class EmptyMatrix(HypothesisViolated):
    """Matrix with no rows or no columns where one is required."""


class RankDeficientGenerator(HypothesisViolated):
    """Generator rows are linearly dependent; input is rejected, not fixed."""


class EnumerationTooLarge(HypothesisViolated):
    """Requested exhaustive enumeration exceeds the cap."""


class WindowTooLarge(HypothesisViolated):
    """distance_at_most only supports windows w <= 4."""


class UncoveredCoordinate(QlrcError):
    """Some coordinate lies in no dual codeword's support; locality undefined."""


class LocalityExceedsDimension(HypothesisViolated):
    """Locality parameter r exceeds the code dimension it must not exceed."""


class ParityViolation(HypothesisViolated):
    """n + kappa must be even for bounds on Hermitian-construction codes."""


class DegenerateLength(HypothesisViolated):
    """Every term of a Plotkin-style minimum has nonpositive effective length."""


class DomainViolation(HypothesisViolated):
    """Real-valued argument outside the function's domain."""


class GcdConditionViolated(HypothesisViolated):
    """gcd hypothesis of the cyclic Hamming construction fails."""


class DegreeOutOfRange(HypothesisViolated):
    """Evaluation-code order v outside the admissible range."""


class InvalidSSParams(HypothesisViolated):
    """Block-deletion construction parameters unlicensed by any condition."""


class NotDualContaining(QlrcError):
    """Quantum construction requires a Hermitian dual-containing code."""


class DualDistanceTooSmall(QlrcError):
    """Quantum construction requires Hermitian dual distance >= 2."""


class CertificateMismatch(QlrcError):
    """A closed-form parameter disagrees with its measured value: a bug."""


class SelfOrthogonalityCheckFailed(CertificateMismatch):
    """A construction that must be Hermitian self-orthogonal is not."""


class DualContainmentCheckFailed(CertificateMismatch):
    """A construction that must be Hermitian dual-containing is not."""
