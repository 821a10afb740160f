"""Pure-Python arithmetic kernels.

These are the innermost operations of the whole package: extended gcd over
the integers, Gaussian-integer arithmetic (represented as (re, im) int
pairs) and exponent-vector operations (int tuples).  A Cython twin of this
module (``rightlcm._kernels``) is built when a compiler is available; both
implementations must stay behaviourally identical, which is enforced by
tests/test_kernels.py.
"""

IMPLEMENTATION = "python"


def xgcd(a, b):
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def gauss_norm(ar, ai):
    return ar * ar + ai * ai


def gauss_mul(ar, ai, br, bi):
    return ar * br - ai * bi, ar * bi + ai * br


def _round_div(n, d):
    # nearest integer to n/d for d > 0, ties rounded up
    return (2 * n + d) // (2 * d)


def gauss_divmod(ar, ai, br, bi):
    """Nearest-lattice-point division: a = q*b + r with N(r) <= N(b)/2."""
    n = gauss_norm(br, bi)
    # a * conj(b) = (ar*br + ai*bi) + (ai*br - ar*bi) i
    tr = ar * br + ai * bi
    ti = ai * br - ar * bi
    qr = _round_div(tr, n)
    qi = _round_div(ti, n)
    pr, pi = gauss_mul(qr, qi, br, bi)
    return qr, qi, ar - pr, ai - pi


def gauss_first_quadrant(ar, ai):
    """Return (cr, ci, ur, ui): the associate of a with re > 0, im >= 0
    (or 0 itself), together with the unit u such that c = a*u."""
    if ar == 0 and ai == 0:
        return 0, 0, 1, 0
    cr, ci, ur, ui = ar, ai, 1, 0
    while not (cr > 0 and ci >= 0):
        # multiply by i
        cr, ci = -ci, cr
        ur, ui = -ui, ur
    return cr, ci, ur, ui


def gauss_gcd(ar, ai, br, bi):
    """First-quadrant-normalized gcd in Z[i]."""
    while br != 0 or bi != 0:
        _, _, rr, ri = gauss_divmod(ar, ai, br, bi)
        ar, ai, br, bi = br, bi, rr, ri
    cr, ci, _, _ = gauss_first_quadrant(ar, ai)
    return cr, ci


def gauss_xgcd(ar, ai, br, bi):
    """Return (gr, gi, xr, xi, yr, yi) with a*x + b*y = g, g the
    first-quadrant gcd of a and b."""
    r0r, r0i, r1r, r1i = ar, ai, br, bi
    x0r, x0i, x1r, x1i = 1, 0, 0, 0
    y0r, y0i, y1r, y1i = 0, 0, 1, 0
    while r1r != 0 or r1i != 0:
        qr, qi, rr, ri = gauss_divmod(r0r, r0i, r1r, r1i)
        r0r, r0i, r1r, r1i = r1r, r1i, rr, ri
        pr, pi = gauss_mul(qr, qi, x1r, x1i)
        x0r, x0i, x1r, x1i = x1r, x1i, x0r - pr, x0i - pi
        pr, pi = gauss_mul(qr, qi, y1r, y1i)
        y0r, y0i, y1r, y1i = y1r, y1i, y0r - pr, y0i - pi
    gr, gi, ur, ui = gauss_first_quadrant(r0r, r0i)
    xr, xi = gauss_mul(x0r, x0i, ur, ui)
    yr, yi = gauss_mul(y0r, y0i, ur, ui)
    return gr, gi, xr, xi, yr, yi


def gauss_exactdiv(ar, ai, br, bi):
    """Return a/b as an (re, im) pair when b divides a exactly, else None."""
    if br == 0 and bi == 0:
        return None
    n = gauss_norm(br, bi)
    tr = ar * br + ai * bi
    ti = ai * br - ar * bi
    if tr % n or ti % n:
        return None
    return tr // n, ti // n


def vec_add(t, u):
    return tuple(a + b for a, b in zip(t, u))


def vec_max(t, u):
    return tuple(a if a >= b else b for a, b in zip(t, u))


def vec_leq(t, u):
    for a, b in zip(t, u):
        if a > b:
            return False
    return True


def vec_sub_if_leq(t, u):
    """u - t componentwise when t <= u, else None."""
    out = []
    for a, b in zip(t, u):
        if a > b:
            return None
        out.append(b - a)
    return tuple(out)
