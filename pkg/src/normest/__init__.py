"""Finite sections, power iteration and Rayleigh-quotient lower bounds"""

from .identities import DoubleSumResult, FailureCheck, failure_check, maxmax_double_sum
from .power import EigenResult, start_vector, top_eigen
from .rayleigh import TestVectorKind, TestVectorSpec, rayleigh_quotient
from .section import (
    KernelSection,
    MatrixFreeKernelSection,
    TruncatedKernelMatrix,
    build_truncated,
    kernel_section,
)

__all__ = [
    "DoubleSumResult",
    "EigenResult",
    "FailureCheck",
    "KernelSection",
    "MatrixFreeKernelSection",
    "TestVectorKind",
    "TestVectorSpec",
    "TruncatedKernelMatrix",
    "build_truncated",
    "failure_check",
    "kernel_section",
    "maxmax_double_sum",
    "rayleigh_quotient",
    "start_vector",
    "top_eigen",
]
