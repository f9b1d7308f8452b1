# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled kernels.  Mirrors kernels/pure.py statement for statement."""

from libc.math cimport acos, acosh, atan2, cos, sin, sinh, M_PI

CONVERGED = 0
FLOAT_LIMIT = 1
ITER_CAP = 2


cpdef double cheb_ratio(long m, double x):
    """(z^m - z^-m)/(z - z^-1) where z + z^-1 = x, for any real x, integer m."""
    cdef double ax = x if x >= 0.0 else -x
    cdef double theta, xi, r
    if ax <= 2.0:
        theta = acos(0.5 * x)
        if theta < 1e-8:
            return <double> m
        if M_PI - theta < 1e-8:
            return <double> m if (m - 1) % 2 == 0 else <double> (-m)
        return sin(m * theta) / sin(theta)
    xi = acosh(0.5 * ax)
    r = sinh(m * xi) / sinh(xi)
    if x < 0.0 and (m - 1) % 2 != 0:
        r = -r
    return r


cpdef double phi_delta(long n, double s, double delta):
    """Defining function at T = s + 2 + delta/s, evaluated through the trace."""
    cdef double x = 2.0 - delta
    return cheb_ratio(n + 1, x) - (1.0 + delta / s) * cheb_ratio(n, x)


cpdef tuple bisect_phi_delta(long n, double s, double lo, double hi,
                             double tol, long max_iter):
    """Bisect phi_delta's sign change on [lo, hi] in the delta coordinate."""
    cdef double f_lo = phi_delta(n, s, lo)
    if f_lo == 0.0:
        return lo, 0, CONVERGED
    cdef double f_hi = phi_delta(n, s, hi)
    if f_hi == 0.0:
        return hi, 0, CONVERGED
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise ValueError("endpoints do not bracket a sign change")
    cdef double target = 0.5 * tol
    cdef long iters = 0
    cdef double mid, f
    while hi - lo >= target:
        if iters >= max_iter:
            return 0.5 * (lo + hi), iters, ITER_CAP
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid, iters, FLOAT_LIMIT
        f = phi_delta(n, s, mid)
        iters += 1
        if f == 0.0:
            return mid, iters, CONVERGED
        if (f > 0.0) == (f_lo > 0.0):
            lo = mid
            f_lo = f
        else:
            hi = mid
    return 0.5 * (lo + hi), iters, CONVERGED


cpdef tuple cover_compose(double complex g1, double w1,
                          double complex g2, double w2):
    """Group law of the universal cover in the (gamma, omega) chart."""
    cdef double c = cos(-2.0 * w2)
    cdef double sn = sin(-2.0 * w2)
    cdef double complex ph = c + 1j * sn
    cdef double complex g2c = g2.real - 1j * g2.imag
    cdef double complex den = 1.0 + g1 * g2c * ph
    if den.real <= 0.0:
        raise ValueError("principal log branch violated; element outside the unit disk")
    cdef double complex g = (g2 + g1 * ph) / den
    cdef double w = w1 + w2 + atan2(den.imag, den.real)
    return g, w
