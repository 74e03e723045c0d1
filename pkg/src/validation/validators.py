"""Parameter validation utilities"""

import math
from typing import Type

from src.utils.exceptions import (
    DomainError,
    HilbertFormsError,
    PreconditionError,
    ResourceError,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


class ParameterValidator:
    """Validates numerical arguments before they reach an algorithm"""

    @staticmethod
    def validate_real(name: str, value: float) -> float:
        """
        Validate that a value is a finite real number

        Args:
            name: Parameter name used in the error message
            value: Value to check

        Returns:
            The value as float

        Raises:
            DomainError: If the value is not a finite real
        """
        try:
            value = float(value)
        except (TypeError, ValueError) as e:
            raise DomainError(f"{name} must be a real number, got {value!r}") from e
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value}")
        return value

    @staticmethod
    def validate_positive(name: str, value: float) -> float:
        """
        Validate a strictly positive finite real

        Raises:
            DomainError: If value <= 0 or not finite
        """
        value = ParameterValidator.validate_real(name, value)
        if value <= 0:
            raise DomainError(f"{name} must be > 0, got {value}")
        return value

    @staticmethod
    def validate_interval(
        name: str,
        value: float,
        lo: float,
        hi: float,
        lo_open: bool = False,
        hi_open: bool = False,
        error: Type[HilbertFormsError] = DomainError,
    ) -> float:
        """
        Validate that a value lies in an interval

        Args:
            name: Parameter name used in the error message
            value: Value to check
            lo: Lower end of the interval
            hi: Upper end of the interval
            lo_open: Exclude the lower end
            hi_open: Exclude the upper end
            error: Exception class raised on failure

        Returns:
            The value as float

        Raises:
            error: If the value lies outside the interval
        """
        try:
            value = ParameterValidator.validate_real(name, value)
        except DomainError as e:
            raise error(str(e)) from e
        below = value <= lo if lo_open else value < lo
        above = value >= hi if hi_open else value > hi
        if below or above:
            left = "(" if lo_open else "["
            right = ")" if hi_open else "]"
            raise error(f"{name}={value} outside {left}{lo}, {hi}{right}")
        return value

    @staticmethod
    def validate_integer(
        name: str,
        value: int,
        minimum: int = 1,
        error: Type[HilbertFormsError] = PreconditionError,
    ) -> int:
        """
        Validate an integer bounded from below

        Raises:
            error: If value is not an integer or is below the minimum
        """
        if isinstance(value, bool) or int(value) != value:
            raise error(f"{name} must be an integer, got {value!r}")
        value = int(value)
        if value < minimum:
            raise error(f"{name} must be >= {minimum}, got {value}")
        return value

    @staticmethod
    def validate_dimension(n: int, cap: int) -> int:
        """
        Validate a matrix dimension against the memory cap

        Raises:
            PreconditionError: If n < 1
            ResourceError: If n exceeds the cap
        """
        n = ParameterValidator.validate_integer("n", n, minimum=1)
        if n > cap:
            logger.warning(f"Rejected section of size {n} (cap {cap})")
            raise ResourceError(
                f"Dense section of size {n} exceeds cap {cap} "
                f"({8 * n * n / 1e9:.1f} GB at binary64)"
            )
        return n
