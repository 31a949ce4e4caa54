"""Exception hierarchy shared by the library and the CLI.

Every error carries the CLI exit code it maps to and the locale key of
its one-line diagnostic.
"""
from typing import Optional

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SINGULAR = 3
EXIT_BUDGET = 4
EXIT_INTERNAL = 5


class AbelTqftError(Exception):
    exit_code = EXIT_INTERNAL
    message_key = "error_internal"

    def __init__(self, message: str = "", **details):
        super().__init__(message)
        self.message = message
        self.details = details


class ParseError(AbelTqftError, ValueError):
    exit_code = EXIT_PARSE
    message_key = "error_parse"

    def __init__(self, message: str, position: Optional[int] = None, **details):
        super().__init__(message, position=position, **details)
        self.position = position

    def __str__(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} (at position {self.position})"


class NotCoprime(AbelTqftError, ValueError):
    exit_code = EXIT_PARSE
    message_key = "error_not_coprime"

    def __init__(self, p: int, q: int):
        super().__init__(f"L({p},{q}): gcd({p},{q}) != 1", p=p, q=q)
        self.p = p
        self.q = q


class InvalidManifold(AbelTqftError, ValueError):
    exit_code = EXIT_PARSE
    message_key = "error_invalid_manifold"


class NonSquare(AbelTqftError, ValueError):
    exit_code = EXIT_PARSE
    message_key = "error_non_square"


class NonSymmetric(AbelTqftError, ValueError):
    exit_code = EXIT_PARSE
    message_key = "error_non_symmetric"


class DimensionMismatch(AbelTqftError, ValueError):
    exit_code = EXIT_PARSE
    message_key = "error_dimension"


class ComplexInvalid(AbelTqftError, ValueError):
    exit_code = EXIT_PARSE
    message_key = "error_complex"


class NonIntegralLevel(AbelTqftError, ValueError):
    exit_code = EXIT_PARSE
    message_key = "error_level"


class SingularMatrix(AbelTqftError, ArithmeticError):
    exit_code = EXIT_SINGULAR
    message_key = "error_singular"


class BudgetExceeded(AbelTqftError):
    exit_code = EXIT_BUDGET
    message_key = "error_budget"

    def __init__(self, message: str, required: int, budget: int):
        super().__init__(message, required=required, budget=budget)
        self.required = required
        self.budget = budget


class OrderOverflow(AbelTqftError):
    exit_code = EXIT_BUDGET
    message_key = "error_order_overflow"

    def __init__(self, order: int, cap: int):
        super().__init__(f"root-of-unity order {order} exceeds cap {cap}", order=order, cap=cap)
        self.order = order
        self.cap = cap
