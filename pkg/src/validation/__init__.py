"""Parameter validation module"""

from .validators import ParameterValidator

__all__ = ["ParameterValidator"]
