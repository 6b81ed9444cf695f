"""
Tolerance bundles for the shared kernels
"""
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class QuadratureSpec:
    """
    Quadrature Spec
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-10
    max_depth: int = 50

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("Quadrature tolerances must be positive.")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1.")


@dataclass(frozen=True)
class OdeSpec:
    """
    Ode Spec
    """

    initial_step: float = 1e-4
    min_step: float = 1e-12
    max_step: float = 0.1
    error_tol: float = 1e-10
    blowup_threshold: float = 1e8

    def __post_init__(self):
        values = (
            self.initial_step,
            self.min_step,
            self.max_step,
            self.error_tol,
            self.blowup_threshold,
        )
        if not all(math.isfinite(v) and v > 0 for v in values):
            raise ValueError("Ode spec values must be positive and finite.")
        if not self.min_step <= self.initial_step <= self.max_step:
            raise ValueError("Steps must satisfy min_step <= initial_step <= max_step.")
