"""Numeric matrices of the knot group representation.

Generators (meridians) for parameters s > 0, t > 1, writing u = sqrt(t) - 1/sqrt(t):

    X = [[sqrt(t), 0], [0, 1/sqrt(t)]]
    Y = [[(t-s-1)/u, s/u^2 - 1], [-s, (s+1-1/t)/u]]

The commutator word is w = x y^-1 x^-1 y; its reversal w_rev = y x^-1 y^-1 x.
Words are strings in SnapPy convention: lowercase is a generator, uppercase
its inverse, so w = "xYXy".  Powers of W = rho(w) come from the trace
recursion (u_11 = w_11 tau_n - tau_{n-1} and so on) rather than repeated
multiplication; repeated multiplication is kept only as the test oracle.

The longitude is rho(w_rev^n w^n).  rho(w_rev^n) is the sigma-conjugate
transform of rho(w^n), with sigma = s u^2 / (u^2 - s); at a solution of the
defining equation the longitude matrix is diagonal with positive (1,1) entry
B = (t-s-1)/((1+s)t - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from . import kernels
from .errors import DomainError, NumericsError, OffDiagonalTooLarge
from .solver import RepSolution


@dataclass(frozen=True)
class Mat2:
    """Real 2x2 matrix; every matrix in this module has determinant 1."""

    m11: float
    m12: float
    m21: float
    m22: float

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )

    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> float:
        return self.m11 + self.m22

    def inverse(self) -> "Mat2":
        # adjugate; exact inverse only because det = 1
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def maxabs(self) -> float:
        return max(abs(self.m11), abs(self.m12), abs(self.m21), abs(self.m22))


IDENTITY2 = Mat2(1.0, 0.0, 0.0, 1.0)


def max_abs_diff(a: Mat2, b: Mat2) -> float:
    return max(
        abs(a.m11 - b.m11),
        abs(a.m12 - b.m12),
        abs(a.m21 - b.m21),
        abs(a.m22 - b.m22),
    )


def _check_params(s: float, t: float) -> tuple[float, float]:
    s = float(s)
    t = float(t)
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    # u = sqrt(t) - 1/sqrt(t) vanishes at t = 1
    if not t > 1.0 or t - 1.0 < 1e-12:
        raise DomainError(f"t must exceed 1 by more than 1e-12, got {t}")
    return s, t


def gen_matrices(s: float, t: float) -> tuple[Mat2, Mat2]:
    """Meridian images (X, Y) at parameters (s, t)."""
    s, t = _check_params(s, t)
    rt = sqrt(t)
    u = rt - 1.0 / rt
    u2 = u * u
    gx = Mat2(rt, 0.0, 0.0, 1.0 / rt)
    gy = Mat2(
        (t - s - 1.0) / u,
        s / u2 - 1.0,
        -s,
        (s + 1.0 - 1.0 / t) / u,
    )
    return gx, gy


def w_matrix(s: float, t: float) -> Mat2:
    """Closed form of W = rho(x y^-1 x^-1 y)."""
    s, t = _check_params(s, t)
    rt = sqrt(t)
    u2 = t - 2.0 + 1.0 / t
    # 1 + s - s*t + s^2*t/(t-1), factored to keep the cancellation mild
    w11 = 1.0 + s + s * t * (s + 1.0 - t) / (t - 1.0)
    w12 = (t - 1.0 + s * t) / rt * (u2 - s) / u2
    w21 = s * (1.0 + s - t) / rt
    w22 = 1.0 + s - s * s / (t - 1.0) - s / t
    return Mat2(w11, w12, w21, w22)


def sigma_factor(s: float, t: float) -> float:
    """sigma = s u^2/(u^2 - s); poles where t + 1/t = s + 2 are rejected."""
    s, t = _check_params(s, t)
    u2 = t - 2.0 + 1.0 / t
    denom = u2 - s
    if denom == 0.0:
        raise DomainError(f"sigma has a pole at (s, t) = ({s}, {t})")
    return s * u2 / denom


def word_eval(word: str, gen_x: Mat2, gen_y: Mat2) -> Mat2:
    """Left-to-right product of a word in x, y; uppercase means inverse."""
    table = {
        "x": gen_x,
        "X": gen_x.inverse(),
        "y": gen_y,
        "Y": gen_y.inverse(),
    }
    acc = IDENTITY2
    for ch in word:
        if ch not in table:
            raise DomainError(f"unknown generator letter {ch!r}")
        acc = acc @ table[ch]
    return acc


def w_word(n: int) -> str:
    """Word for w^n; w = xY Xy, w^-1 = YxyX."""
    return ("xYXy" if n >= 0 else "YxyX") * abs(n)


def w_rev_word(n: int) -> str:
    """Word for w_rev^n; w_rev = yXYx (w with its letters reversed)."""
    return ("yXYx" if n >= 0 else "XyxY") * abs(n)


def longitude_word(n: int) -> str:
    return w_rev_word(n) + w_word(n)


def relator_word(n: int) -> str:
    """w^n x w^-n y^-1, trivial in the knot group."""
    return w_word(n) + "x" + w_word(-n) + "Y"


def w_power(n: int, s: float, t: float) -> Mat2:
    """W^n through the trace recursion; valid for every integer n."""
    if n == 0:
        return IDENTITY2
    w = w_matrix(s, t)
    tr = w.m11 + w.m22
    tn = kernels.cheb_ratio(n, tr)
    tnm = kernels.cheb_ratio(n - 1, tr)
    tnp = kernels.cheb_ratio(n + 1, tr)
    return Mat2(
        w.m11 * tn - tnm,
        w.m12 * tn,
        w.m21 * tn,
        tnp - w.m11 * tn,
    )


def w_rev_power(n: int, s: float, t: float) -> Mat2:
    """rho(w_rev^n): the sigma-conjugate transform of W^n."""
    u = w_power(n, s, t)
    sigma = sigma_factor(s, t)
    return Mat2(u.m11, u.m21 / sigma, u.m12 * sigma, u.m22)


def relation_residual(n: int, s: float, t: float, relative: bool = False) -> float:
    """Max-abs entrywise difference of rho(w^n x) and rho(y w^n).

    Zero exactly when (s, t) solves the defining equation.  With
    relative=True the difference is scaled by 1 + the larger entry norm,
    which is the meaningful reading once entries grow with s and t.
    """
    gx, gy = gen_matrices(s, t)
    wn = w_power(n, s, t)
    lhs = wn @ gx
    rhs = gy @ wn
    d = max_abs_diff(lhs, rhs)
    if relative:
        d /= 1.0 + max(lhs.maxabs(), rhs.maxabs())
    return d


@dataclass(frozen=True)
class HolonomyData:
    """Peripheral scalars at a solution: meridian stretch A = sqrt(t) > 1,
    longitude entry B > 0, the sigma factor, and the achieved off-diagonal
    residual of the longitude matrix (scaled by 1 + its entry norm)."""

    A: float
    B: float
    sigma: float
    offdiag_residual: float


def longitude_holonomy(s: float, t: float) -> float:
    """Closed form of the longitude's (1,1) entry, B = (t-s-1)/((1+s)t - 1)."""
    return (t - s - 1.0) / ((1.0 + s) * t - 1.0)


def longitude(
    n: int, sol: RepSolution, offdiag_tol: float = 1e-6
) -> tuple[Mat2, HolonomyData]:
    """rho(longitude) at a solution, with its peripheral scalars.

    The matrix is assembled from W^n and sigma; it must come out diagonal,
    and OffDiagonalTooLarge signals that sol does not actually satisfy the
    defining equation.  B is reported from the closed form; the matrix
    (1,1) entry is the cross-check, not the source.
    """
    s, t = sol.s, sol.t
    u = w_power(n, s, t)
    sigma = sigma_factor(s, t)
    ell = Mat2(
        u.m11 * u.m11 + u.m21 * u.m21 / sigma,
        u.m11 * u.m12 + u.m21 * u.m22 / sigma,
        u.m11 * u.m12 * sigma + u.m21 * u.m22,
        u.m12 * u.m12 * sigma + u.m22 * u.m22,
    )
    offdiag = max(abs(ell.m12), abs(ell.m21)) / (1.0 + ell.maxabs())
    if offdiag > offdiag_tol:
        raise OffDiagonalTooLarge(
            f"longitude off-diagonal residual {offdiag:.3e} at n={n}, "
            f"s={s}, t={t}; the pair does not solve the defining equation"
        )
    b = longitude_holonomy(s, t)
    if not b > 0:
        raise NumericsError(f"longitude entry B = {b} is not positive at s={s}, t={t}")
    return ell, HolonomyData(A=sqrt(t), B=b, sigma=sigma, offdiag_residual=offdiag)
