"""Finite sections of the infinite kernel matrix"""

import math
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from src.config import get_settings
from src.kernel import AlphaParam, kernel_values
from src.utils.logger import get_logger
from src.validation import ParameterValidator

ROW_BLOCK = 1024


class KernelSection(ABC):
    """Base interface for N x N sections [K_alpha(m, k)], 1 <= m, k <= N"""

    def __init__(self, alpha: AlphaParam, n: int):
        self.alpha = AlphaParam.coerce(alpha)
        self.n = ParameterValidator.validate_integer("n", n, minimum=1)
        self.logger = get_logger(self.__class__.__name__)

    @property
    def indices(self) -> np.ndarray:
        """Integer points 1..N as floats"""
        return np.arange(1, self.n + 1, dtype=float)

    @abstractmethod
    def matvec(self, v: np.ndarray) -> np.ndarray:
        """
        Multiply the section with a vector

        Args:
            v: Vector of length N

        Returns:
            K v, length N
        """
        pass

    def quadratic_form(self, v: np.ndarray) -> float:
        """v^T K v with a correctly rounded final reduction"""
        v = np.asarray(v, dtype=float)
        return math.fsum(v * self.matvec(v))


class TruncatedKernelMatrix(KernelSection):
    """Dense symmetric section, filled in row blocks"""

    def __init__(self, alpha: AlphaParam, n: int, cap: Optional[int] = None):
        super().__init__(alpha, n)
        settings = get_settings()
        ParameterValidator.validate_dimension(
            self.n, cap if cap is not None else settings.matrix_cap
        )
        self.entries = self._build(settings.threads)

    def _build(self, threads: Optional[int]) -> np.ndarray:
        points = self.indices
        entries = np.empty((self.n, self.n), dtype=float)

        def fill(start: int) -> None:
            stop = min(start + ROW_BLOCK, self.n)
            entries[start:stop] = kernel_values(self.alpha, points[start:stop], points)

        starts = range(0, self.n, ROW_BLOCK)
        if len(starts) == 1:
            fill(0)
        else:
            with ThreadPoolExecutor(max_workers=threads) as executor:
                list(executor.map(fill, starts))
        self.logger.debug(f"Built dense section alpha={self.alpha.alpha}, n={self.n}")
        return entries

    def matvec(self, v: np.ndarray) -> np.ndarray:
        return self.entries @ np.asarray(v, dtype=float)


class MatrixFreeKernelSection(KernelSection):
    """
    O(N) multiply from prefix and suffix sums

    (K v)_m = m**(-alpha-1/2) sum_{k<=m} k**(alpha-1/2) v_k
              + m**(alpha-1/2) sum_{k>m} k**(-alpha-1/2) v_k
    """

    def __init__(self, alpha: AlphaParam, n: int):
        super().__init__(alpha, n)
        a = self.alpha.alpha
        points = self.indices
        self._rising = points ** (a - 0.5)
        self._falling = points ** (-a - 0.5)

    def matvec(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=float)
        prefix = np.cumsum(self._rising * v)
        weighted = self._falling * v
        suffix = np.cumsum(weighted[::-1])[::-1]
        after = np.append(suffix[1:], 0.0)
        return self._falling * prefix + self._rising * after


def build_truncated(alpha: AlphaParam, n: int, cap: Optional[int] = None) -> TruncatedKernelMatrix:
    """
    Dense N x N section with entries K_alpha(m, k)

    Raises:
        PreconditionError: If n < 1
        ResourceError: If n exceeds the matrix cap
    """
    return TruncatedKernelMatrix(alpha, n, cap)


def kernel_section(
    alpha: AlphaParam, n: int, dense_limit: Optional[int] = None
) -> KernelSection:
    """Dense section up to dense_limit (settings.dense_section_limit), matrix-free above"""
    limit = dense_limit if dense_limit is not None else get_settings().dense_section_limit
    if n <= limit:
        return build_truncated(alpha, n)
    return MatrixFreeKernelSection(alpha, n)
