"""Pure-Python term-dictionary kernels.

A polynomial's term data is a dict mapping exponent tuples to nonzero
integer coefficients.  Everything here is scale-free integer arithmetic;
rational scaling lives one level up in :mod:`cremona.rings`.

This module is the fallback backend; ``_poly_cy`` provides the same
functions compiled with Cython.
"""

from math import gcd as _int_gcd

IS_COMPILED = False


def mul_terms(a, b):
    """Convolution product of two term dicts."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    bitems = list(b.items())
    for ea, ca in a.items():
        for eb, cb in bitems:
            key = tuple(map(int.__add__, ea, eb))
            v = out.get(key)
            if v is None:
                out[key] = ca * cb
            else:
                v += ca * cb
                if v:
                    out[key] = v
                else:
                    del out[key]
    return out


def lincomb_terms(a, ca, b, cb):
    """ca*a + cb*b for integer multipliers."""
    out = {}
    if ca:
        for e, c in a.items():
            out[e] = ca * c
    if cb:
        for e, c in b.items():
            v = out.get(e)
            if v is None:
                out[e] = cb * c
            else:
                v += cb * c
                if v:
                    out[e] = v
                else:
                    del out[e]
    return out


def scale_terms(a, c):
    """c*a for a nonzero integer c."""
    return {e: c * v for e, v in a.items()}


def content_terms(a):
    """Positive gcd of all coefficients (0 for the empty dict)."""
    g = 0
    for v in a.values():
        g = _int_gcd(g, v)
        if g == 1:
            return 1
    return g


def max_key_grlex(a):
    """Greatest exponent tuple under graded lex.

    Ties in total degree are broken lexicographically reading exponents
    from the last variable down, i.e. higher-indexed variables are more
    significant (so x3*x4*x5 beats x0*x3^2).
    """
    best = None
    best_rev = None
    best_deg = -1
    for e in a:
        d = sum(e)
        if d > best_deg:
            best, best_rev, best_deg = e, e[::-1], d
        elif d == best_deg:
            r = e[::-1]
            if r > best_rev:
                best, best_rev = e, r
    return best


def min_exponents(a, nv):
    """Componentwise minimum exponent vector over all terms."""
    it = iter(a)
    first = next(it)
    mins = list(first)
    for e in it:
        for i in range(nv):
            if e[i] < mins[i]:
                mins[i] = e[i]
    return tuple(mins)


def divexact_terms(a, b):
    """Exact quotient a // b, or None when b does not divide a.

    Graded-lex leading-term elimination; every intermediate quotient term
    is a term of the true quotient, so coefficient divisions stay integral
    exactly when the quotient is.
    """
    if not a:
        return {}
    nv = len(next(iter(b)))
    eb = max_key_grlex(b)
    cb = b[eb]
    r = dict(a)
    q = {}
    while r:
        er = max_key_grlex(r)
        cr = r[er]
        eq = tuple(map(int.__sub__, er, eb))
        for x in eq:
            if x < 0:
                return None
        if cr % cb:
            return None
        cq = cr // cb
        q[eq] = cq
        # r -= cq * x^eq * b
        for e, c in b.items():
            key = tuple(map(int.__add__, e, eq))
            v = r.get(key)
            if v is None:
                r[key] = -cq * c
            else:
                v -= cq * c
                if v:
                    r[key] = v
                else:
                    del r[key]
    return q
