"""
Floating point cross-checks of exact results

Nothing here feeds back into an exact decision: residuals are measured,
compared with their tolerance and recorded.
"""
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np


def svd_rank(matrix: np.ndarray, tolerance: float = 1e-8) -> int:
    """Numeric rank with singular values below tolerance * largest treated as zero"""
    if matrix.size == 0:
        return 0
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values.size == 0 or singular_values[0] == 0:
        return 0
    return int(np.sum(singular_values > tolerance * singular_values[0]))


@dataclass
class ResidualSummary:
    """Max residual per check and whether it is within tolerance"""

    kind: str
    residuals: Dict[str, float] = field(default_factory=dict)
    tolerance: float = 1e-8
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(value <= self.tolerance for value in self.residuals.values()) \
            and all(self.details.get(key, True) for key in ("rank_agrees",))

    def to_json(self):
        return {
            "kind": self.kind,
            "tolerance": self.tolerance,
            "residuals": {k: float(v) for k, v in self.residuals.items()},
            "details": self.details,
            "passed": self.passed,
        }


class NumericHarness:
    """Circle sampling, FFT Fourier coefficients and SVD ranks"""

    def __init__(self, tolerance: float = 1e-8, samples: int = 64, seed: int = 0,
                 fft_size: int = 1024, rank_points: int = 5, logger=None):
        self.tolerance = tolerance
        self.samples = samples
        self.seed = seed
        self.fft_size = fft_size
        self.rank_points = rank_points
        self.logger = logger or self._default_logger

    @staticmethod
    def _default_logger(message, level='INFO'):
        print(f"[{level}] {message}")

    def circle_points(self, count: int = None) -> np.ndarray:
        """Deterministic pseudo-random points on the unit circle"""
        rng = np.random.default_rng(self.seed)
        angles = rng.uniform(0.0, 2 * np.pi, count or self.samples)
        return np.exp(1j * angles)

    # -- individual checks --------------------------------------------------

    def inner_residual(self, theta) -> float:
        """max |Theta* Theta - I| over the sample points"""
        worst = 0.0
        for z in self.circle_points():
            value = theta.evaluate(z)
            gram = value.conj().T @ value
            worst = max(worst, float(np.max(np.abs(gram - np.eye(theta.cols)), initial=0.0)))
        return worst

    def blaschke_residual(self, product) -> float:
        values = product.evaluate(self.circle_points())
        return float(np.max(np.abs(np.abs(values) - 1.0)))

    def fourier_residual(self, function, low: int = -8, high: int = 8) -> float:
        """Exact Fourier coefficients against an FFT of fft_size samples"""
        from ..core.circle_analysis import fourier_coefficients

        grid = np.exp(2j * np.pi * np.arange(self.fft_size) / self.fft_size)
        spectrum = np.fft.fft(function.evaluate(grid)) / self.fft_size
        exact = fourier_coefficients(function, low, high)
        return max(abs(spectrum[k % self.fft_size] - complex(exact[k])) for k in range(low, high + 1))

    def rank_profile(self, mat) -> List[int]:
        """SVD rank at rank_points random circle points"""
        return [svd_rank(mat.evaluate(z), self.tolerance) for z in self.circle_points(self.rank_points)]

    def reassembly_residual(self, original, factorization) -> float:
        worst = 0.0
        for z in self.circle_points():
            product = factorization.theta.evaluate(z) @ factorization.outer.evaluate(z)
            worst = max(worst, float(np.max(np.abs(product - original.evaluate(z)), initial=0.0)))
        return worst

    def model_space_orthogonality(self, generators, theta, order: int = 8) -> float:
        """
        max |<z^k theta_j, S*^s f>| for k, s <= order

        Kernel elements of H_(zbar F*) are orthogonal to every backward
        shift of every generator.
        """
        from ..core.circle_analysis import fourier_coefficients

        span = 4 * order + 48
        worst = 0.0
        for generator in generators:
            f = [fourier_coefficients(e, 0, span + order) for e in generator.col(0)]
            for j in range(theta.cols):
                g = [fourier_coefficients(e, 0, span + order) for e in theta.mat.col(j)]
                for k in range(order + 1):
                    for s in range(order + 1):
                        total = 0j
                        for coordinate in range(len(f)):
                            for t in range(k, span):
                                total += complex(g[coordinate][t - k]) * np.conj(
                                    complex(f[coordinate][t + s]))
                        worst = max(worst, abs(total))
        return worst

    # -- dispatch -----------------------------------------------------------

    def numeric_crosscheck(self, obj, samples: int = None, seed: int = None) -> ResidualSummary:
        """
        Cross-check an exact object numerically

        Supports MatrixInner, BlaschkeProduct, RationalFunction, RatMat and
        InnerOuterResult (paired with its input as a tuple).
        """
        from ..core.circle_analysis import BlaschkeProduct
        from ..core.coefficients import RationalFunction
        from ..core.innerfact import MatrixInner
        from ..core.polymat import RatMat, generic_rank

        if samples is not None:
            self.samples = samples
        if seed is not None:
            self.seed = seed
        summary = ResidualSummary(type(obj).__name__, tolerance=self.tolerance)
        if isinstance(obj, MatrixInner):
            summary.residuals["inner_identity"] = self.inner_residual(obj)
        elif isinstance(obj, BlaschkeProduct):
            summary.residuals["unimodular"] = self.blaschke_residual(obj)
        elif isinstance(obj, RationalFunction):
            summary.residuals["fourier"] = self.fourier_residual(obj)
        elif isinstance(obj, RatMat):
            exact = generic_rank(obj)
            profile = self.rank_profile(obj)
            summary.details.update({"generic_rank": exact, "svd_ranks": profile,
                                    "rank_agrees": all(r == exact for r in profile)})
        elif isinstance(obj, tuple) and len(obj) == 2:
            original, factorization = obj
            summary.kind = "InnerOuterResult"
            summary.residuals["reassembly"] = self.reassembly_residual(original, factorization)
            summary.residuals["inner_identity"] = self.inner_residual(factorization.theta)
        else:
            raise TypeError(f"no numeric cross-check for {type(obj).__name__}")
        if not summary.passed:
            self.logger(f"Numeric cross-check of {summary.kind} failed: {summary.residuals}", 'ERROR')
        return summary
