# cython: language_level=3
"""Compiled arithmetic kernels.

Same contract as rightlcm._kernels_py; operands stay Python ints so
arbitrary precision is preserved, the win comes from C-level control flow
in the Euclidean loops and tuple scans.
"""

IMPLEMENTATION = "c"


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


cdef inline object _round_div(object n, object d):
    return (2 * n + d) // (2 * d)


cdef tuple _divmod4(object ar, object ai, object br, object bi):
    n = br * br + bi * bi
    tr = ar * br + ai * bi
    ti = ai * br - ar * bi
    qr = _round_div(tr, n)
    qi = _round_div(ti, n)
    pr = qr * br - qi * bi
    pi = qr * bi + qi * br
    return qr, qi, ar - pr, ai - pi


def gauss_divmod(ar, ai, br, bi):
    """Nearest-lattice-point division: a = q*b + r with N(r) <= N(b)/2."""
    return _divmod4(ar, ai, br, bi)


def gauss_first_quadrant(ar, ai):
    """Return (cr, ci, ur, ui): the associate of a with re > 0, im >= 0
    (or 0 itself), together with the unit u such that c = a*u."""
    if ar == 0 and ai == 0:
        return 0, 0, 1, 0
    cr, ci, ur, ui = ar, ai, 1, 0
    while not (cr > 0 and ci >= 0):
        cr, ci = -ci, cr
        ur, ui = -ui, ur
    return cr, ci, ur, ui


def gauss_gcd(ar, ai, br, bi):
    """First-quadrant-normalized gcd in Z[i]."""
    while br != 0 or bi != 0:
        _, _, rr, ri = _divmod4(ar, ai, br, bi)
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
        qr, qi, rr, ri = _divmod4(r0r, r0i, r1r, r1i)
        r0r, r0i, r1r, r1i = r1r, r1i, rr, ri
        pr = qr * x1r - qi * x1i
        pi = qr * x1i + qi * x1r
        x0r, x0i, x1r, x1i = x1r, x1i, x0r - pr, x0i - pi
        pr = qr * y1r - qi * y1i
        pi = qr * y1i + qi * y1r
        y0r, y0i, y1r, y1i = y1r, y1i, y0r - pr, y0i - pi
    gr, gi, ur, ui = gauss_first_quadrant(r0r, r0i)
    xr = x0r * ur - x0i * ui
    xi = x0r * ui + x0i * ur
    yr = y0r * ur - y0i * ui
    yi = y0r * ui + y0i * ur
    return gr, gi, xr, xi, yr, yi


def gauss_exactdiv(ar, ai, br, bi):
    """Return a/b as an (re, im) pair when b divides a exactly, else None."""
    if br == 0 and bi == 0:
        return None
    n = br * br + bi * bi
    tr = ar * br + ai * bi
    ti = ai * br - ar * bi
    if tr % n or ti % n:
        return None
    return tr // n, ti // n


def vec_add(tuple t, tuple u):
    cdef Py_ssize_t i, n = len(t)
    out = []
    for i in range(n):
        out.append(t[i] + u[i])
    return tuple(out)


def vec_max(tuple t, tuple u):
    cdef Py_ssize_t i, n = len(t)
    out = []
    for i in range(n):
        a = t[i]
        b = u[i]
        out.append(a if a >= b else b)
    return tuple(out)


def vec_leq(tuple t, tuple u):
    cdef Py_ssize_t i, n = len(t)
    for i in range(n):
        if t[i] > u[i]:
            return False
    return True


def vec_sub_if_leq(tuple t, tuple u):
    """u - t componentwise when t <= u, else None."""
    cdef Py_ssize_t i, n = len(t)
    out = []
    for i in range(n):
        a = t[i]
        b = u[i]
        if a > b:
            return None
        out.append(b - a)
    return tuple(out)
