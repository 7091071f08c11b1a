"""
Error types raised by wittkit.

Every domain error carries a stable ``code`` and can be rendered as the
structured payload the CLI writes to stderr.
"""

from typing import Any, Dict, Optional


class WittKitError(Exception):
    """Base class for all domain errors."""

    code = "wittkit_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_payload(self) -> Dict[str, Any]:
        """
        Build the machine-readable error payload

        Returns:
            dict: ``{"error": code, "message": ..., "details": {...}}``
        """
        return {
            "error": self.code,
            "message": self.message,
            "details": {key: str(value) for key, value in self.details.items()},
        }


class ConfigurationError(WittKitError, ValueError):
    code = "configuration_error"


class ParseError(WittKitError, ValueError):
    code = "parse_error"


class InvalidDescriptorError(WittKitError, ValueError):
    code = "invalid_descriptor"


class NotPrimeError(WittKitError, ValueError):
    code = "not_prime"


class RingMismatchError(WittKitError, ValueError):
    code = "ring_mismatch"


class NonUnitError(WittKitError, ArithmeticError):
    code = "non_unit"


class ZeroPolynomialError(WittKitError, ValueError):
    code = "zero_polynomial"


class InexactDivisionError(WittKitError, ArithmeticError):
    code = "inexact_division"


class UnsupportedRingError(WittKitError, TypeError):
    code = "unsupported_ring"


class TruncationError(WittKitError, ValueError):
    code = "truncation_too_shallow"


class IntegralityError(WittKitError, AssertionError):
    code = "integrality_violation"


class CrossCheckError(WittKitError, AssertionError):
    code = "cross_check_failed"


class GroupMismatchError(WittKitError, ValueError):
    code = "group_mismatch"


class TorsionCompatibilityError(WittKitError, ValueError):
    code = "torsion_incompatible"


class DivisibilityError(WittKitError, ValueError):
    code = "divisibility_violation"


class InvalidActionError(WittKitError, ValueError):
    code = "invalid_action"


class IncompatibleModulesError(WittKitError, ValueError):
    code = "incompatible_modules"


class KummerError(WittKitError, ValueError):
    code = "kummer_error"


class ResolventExhaustedError(WittKitError, RuntimeError):
    code = "resolvent_exhausted"


class ConstantTermError(WittKitError, ValueError):
    code = "constant_term_not_one"


class ExcludedPrimeError(WittKitError, ValueError):
    code = "excluded_prime"


class CochainError(WittKitError, ValueError):
    code = "invalid_cochain"
