"""
Kernels of block Hankel operators with rational symbols

f lies in ker H_Phi exactly when Phi f has no antianalytic part. Writing the
antianalytic part of Phi as B/p with p the lcm of its inner-disk
denominators turns the kernel into the polynomial module
{f : B f = 0 mod p}, whose square basis G has inner factor Theta with
ker H_Phi = Theta H^2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Tuple

import numpy as np

from .circle_analysis import BlaschkeProduct, fourier_coefficients, pole_split
from .coefficients import Polynomial, RationalFunction, Z, poly_lcm_all
from .errors import InvariantViolation, PreconditionError
from .innerfact import InnerFactorizer, MatrixInner
from .polymat import (
    PolyMat, RatMat, column_reduce, determinant, interpolation_codimension,
    interpolation_module_basis, verify_interpolation_basis,
)
from .roots import DISK_MARGIN
from ..utils.numeric_harness import svd_rank


@dataclass(frozen=True, eq=False)
class HankelSymbol:
    """Rational symbol with its entrywise analytic/antianalytic split"""

    mat: RatMat
    margin: float = DISK_MARGIN
    analytic: RatMat = field(init=False)
    antianalytic: RatMat = field(init=False)

    def __post_init__(self):
        analytic, antianalytic = [], []
        for row in self.mat.entries:
            parts = [pole_split(e, self.margin) for e in row]
            analytic.append(tuple(a for a, _ in parts))
            antianalytic.append(tuple(b for _, b in parts))
        object.__setattr__(self, 'analytic', RatMat(self.mat.rows, self.mat.cols, tuple(analytic)))
        object.__setattr__(self, 'antianalytic',
                           RatMat(self.mat.rows, self.mat.cols, tuple(antianalytic)))

    @property
    def denominator(self) -> Polynomial:
        """p: monic lcm of the antianalytic denominators"""
        return poly_lcm_all(e.den for row in self.antianalytic.entries for e in row)

    @property
    def numerator(self) -> PolyMat:
        """B = p * antianalytic part"""
        p = RationalFunction(self.denominator)
        return PolyMat.from_ratmat(self.antianalytic * p)

    @property
    def blaschke(self) -> BlaschkeProduct:
        return BlaschkeProduct(self.denominator)


@dataclass(frozen=True, eq=False)
class KernelResult:
    theta: MatrixInner
    defect_dim: int
    module_basis: PolyMat
    column_degrees: Tuple[int, ...]

    def predicted_section_dim(self, degree: int) -> int:
        """Dimension of the kernel's polynomials of degree <= d componentwise"""
        return sum(max(0, degree - delta + 1) for delta in self.column_degrees)


class HankelKernelEngine:
    """Exact kernels, membership tests and the finite-section oracle"""

    def __init__(self, factorizer: Optional[InnerFactorizer] = None,
                 tolerance: float = 1e-8, logger=None):
        self.logger = logger or self._default_logger
        self.factorizer = factorizer or InnerFactorizer(logger=self.logger)
        self.tolerance = tolerance

    @staticmethod
    def _default_logger(message: str, level: str = 'INFO'):
        print(f"[{level}] {message}")

    @staticmethod
    def _symbol(symbol) -> HankelSymbol:
        return symbol if isinstance(symbol, HankelSymbol) else HankelSymbol(symbol)

    def module_basis(self, symbol) -> PolyMat:
        """Square polynomial basis of {f : B f = 0 mod p}"""
        symbol = self._symbol(symbol)
        p = symbol.denominator
        if p.degree <= 0:
            return PolyMat.identity(symbol.mat.cols)
        return interpolation_module_basis(symbol.numerator, p)

    def kernel_rational(self, symbol) -> KernelResult:
        """
        Square inner Theta with ker H_Phi = Theta H^2

        Raises:
            CirclePoleError: If the symbol has a pole on the circle
            InvariantViolation: If a certificate fails
        """
        symbol = self._symbol(symbol)
        m = symbol.mat.cols
        self.logger(f"Kernel of a {symbol.mat.rows}x{m} rational symbol")
        basis = self.module_basis(symbol)
        p = symbol.denominator
        if p.degree > 0 and not verify_interpolation_basis(symbol.numerator, p, basis):
            raise InvariantViolation("interpolation basis certificate failed")
        factorization = self.factorizer.inner_outer(basis.to_ratmat())
        theta = factorization.theta
        defect = int(determinant(basis.to_ratmat()).num.degree)
        codimension = interpolation_codimension(symbol.numerator, p) if p.degree > 0 else 0
        if defect != codimension:
            raise InvariantViolation(f"defect {defect} differs from codimension {codimension}")
        if not self.factorizer.is_analytic(symbol.mat @ theta.mat):
            raise InvariantViolation("Phi Theta is not analytic")
        _, degrees = column_reduce(basis)
        self.logger(f"Kernel inner is {m}x{m} with defect {defect}", 'SUCCESS')
        return KernelResult(theta, defect, basis, degrees)

    def kernel_membership(self, symbol, vector: RatMat) -> bool:
        """
        True iff Phi f is analytic

        Raises:
            PreconditionError: If f is not analytic or not a column
        """
        symbol = self._symbol(symbol)
        if vector.cols != 1 or vector.rows != symbol.mat.cols:
            raise PreconditionError("membership needs a column matching the symbol width")
        if not self.factorizer.is_analytic(vector):
            raise PreconditionError("membership needs an analytic vector")
        result = symbol.mat @ vector
        return all(pole_split(e, symbol.margin)[1].is_zero for e in result.col(0))

    def section_matrix(self, symbol, degree: int) -> np.ndarray:
        """Stacked negative Fourier coefficients of Phi z^t e_j, t <= degree"""
        symbol = self._symbol(symbol)
        n, m = symbol.mat.rows, symbol.mat.cols
        depth = degree + max(int(symbol.denominator.degree), 1)
        tables = [[fourier_coefficients(symbol.mat[i, j], -(depth + degree), -1, symbol.margin)
                   for j in range(m)] for i in range(n)]
        matrix = np.zeros((n * depth, m * (degree + 1)), dtype=complex)
        for i, k in product(range(n), range(1, depth + 1)):
            for j, t in product(range(m), range(degree + 1)):
                matrix[i * depth + k - 1, j * (degree + 1) + t] = complex(tables[i][j][-k - t])
        return matrix

    def finite_section_kernel_dim(self, symbol, degree: int) -> int:
        """Numeric dimension of kernel polynomials of degree <= d (SVD rank)"""
        if degree < 0:
            raise PreconditionError("degree bound must be nonnegative")
        symbol = self._symbol(symbol)
        matrix = self.section_matrix(symbol, degree)
        return symbol.mat.cols * (degree + 1) - svd_rank(matrix, self.tolerance)

    def intertwine_check(self, symbol, degree: int) -> bool:
        """Check H S = S* H on monomial vectors up to the given degree"""
        symbol = self._symbol(symbol)
        depth = degree + max(int(symbol.denominator.degree), 1) + 1
        for i, l in product(range(symbol.mat.rows), range(symbol.mat.cols)):
            entry = symbol.mat[i, l]
            for t in range(degree + 1):
                shifted = fourier_coefficients(entry * Z ** (t + 1), -depth - 1, -1, symbol.margin)
                plain = fourier_coefficients(entry * Z ** t, -depth - 2, -1, symbol.margin)
                for j in range(depth):
                    if not self._same_coefficient(shifted[-j - 1], plain[-j - 2]):
                        return False
        return True

    def _same_coefficient(self, first, second) -> bool:
        if isinstance(first, complex) or isinstance(second, complex):
            return abs(complex(first) - complex(second)) <= self.tolerance
        return first == second
