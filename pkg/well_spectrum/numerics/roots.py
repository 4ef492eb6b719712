import math

from scipy import optimize

from utils.errors import NoSignChange

DEFAULT_TOL = 1e-13
ABS_ZERO_TOL = 1e-300
MAX_BISECTIONS = 400
# brentq refuses relative tolerances below 4 * machine epsilon
_MIN_RTOL = 4 * 2.220446049250313e-16


def _bisect(f, lo, hi, f_lo, tol):
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol * max(1.0, abs(mid)) or mid in (lo, hi):
            return mid
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def bracketed_root(f, lo, hi, tol=DEFAULT_TOL, f_lo=None, f_hi=None, zero_tol=ABS_ZERO_TOL):
    """Root of ``f`` inside ``[lo, hi]``.

    Brent's method does the fast work; its answer is accepted only when ``f``
    still changes sign across an interval of width ``tol * max(1, |k|)`` around
    it, otherwise plain bisection on the original bracket decides. Exact endpoint
    values may be passed through ``f_lo`` / ``f_hi`` when the caller knows them.

    Raises:
        NoSignChange: when the endpoint values do not bracket a root.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise NoSignChange(f"invalid bracket [{lo!r}, {hi!r}]")
    f_lo = f(lo) if f_lo is None else f_lo
    f_hi = f(hi) if f_hi is None else f_hi
    if abs(f_lo) <= zero_tol:
        return lo
    if abs(f_hi) <= zero_tol:
        return hi
    if not f_lo * f_hi < 0.0:
        raise NoSignChange(
            f"f does not change sign on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )

    def g(x):
        # exact endpoint values are the ones used for bracketing
        if x == lo:
            return f_lo
        if x == hi:
            return f_hi
        return f(x)

    try:
        root = optimize.brentq(g, lo, hi, xtol=tol, rtol=max(tol, _MIN_RTOL), maxiter=200)
    except (RuntimeError, ValueError):
        return _bisect(g, lo, hi, f_lo, tol)

    if g(root) == 0.0:
        return root
    # Brent leaves the root within a few tolerances of its answer; the final
    # interval is closed by bisection so the bracket guarantee holds.
    width = 4.0 * tol * max(1.0, abs(root))
    left, right = max(lo, root - width), min(hi, root + width)
    g_left, g_right = g(left), g(right)
    if g_left == 0.0:
        return left
    if g_right == 0.0:
        return right
    if g_left * g_right < 0.0:
        return _bisect(g, left, right, g_left, tol)
    return _bisect(g, lo, hi, f_lo, tol)
