"""Trace polynomials of words in the free group on two generators.

The coordinate ring of the character variety of ``F2 = <a, b>`` is the
polynomial ring in ``x = tr a``, ``y = tr b`` and ``z = tr ab``.  Words are
reduced to polynomials with the trace identity
``tr(UV) + tr(UV^-1) = tr(U) tr(V)``.
"""
import threading

from .algebra import XYZ, MPoly, as_rat
from .errors import InputError
from .words import Word, parse_word, word_inv, word_mul

_X, _Y, _Z = MPoly.gens(XYZ)
_TWO = MPoly.const(XYZ, 2)

_cache = {}
_lock = threading.Lock()


def chebyshev(t, n):
    """``tr(M^n)`` as a polynomial in ``t = tr M`` for ``M`` in SL2."""
    n = abs(n)
    prev, cur = _TWO, t
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, t * cur - prev
    return cur


def _cyclic(letters):
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i][0] == letters[j - 1][0] and letters[i][1] != letters[j - 1][1]:
        i += 1
        j -= 1
    return letters[i:j]


def _least_rotation(letters):
    n = len(letters)
    return min(letters[k:] + letters[:k] for k in range(n)) if n else letters


def canonical_form(letters):
    """Least rotation of the cyclic reduction of ``w`` and of ``w^-1``."""
    letters = _cyclic(tuple(letters))
    inv = tuple((g, -s) for g, s in reversed(letters))
    return min(_least_rotation(letters), _least_rotation(inv))


def _reduce(letters):
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


def _tr(letters):
    key = canonical_form(letters)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    value = _compute(key)
    with _lock:
        return _cache.setdefault(key, value)


def _compute(w):
    if not w:
        return _TWO
    n = len(w)
    gens = {g for g, _ in w}
    if len(gens) == 1:
        g = next(iter(gens))
        return chebyshev(_X if g == 0 else _Y, n)
    # rotate so the word starts at a syllable boundary
    k = 0
    while w[k - 1][0] == w[k][0]:
        k += 1
    w = w[k:] + w[:k]
    # syllables of the cyclic word
    syl = []
    start = 0
    for i in range(1, n + 1):
        if i == n or w[i][0] != w[start][0]:
            syl.append((start, i))
            start = i
    for s0, s1 in syl:
        if s1 - s0 >= 2:
            # U g^m with m = s1 - s0 signed letters; peel one and two letters
            body = w[s1:] + w[:s0]
            g, s = w[s0]
            m = s1 - s0
            one = _X if g == 0 else _Y
            u1 = body + ((g, s),) * (m - 1)
            u2 = body + ((g, s),) * (m - 2)
            return _tr(u1) * one - _tr(u2)
    # every syllable is a single letter; look for a generator used with both signs
    for g in (0, 1):
        pos = [i for i, (h, s) in enumerate(w) if h == g]
        signs = {w[i][1] for i in pos}
        if len(signs) == 2:
            i = pos[0]
            j = next(p for p in pos if w[p][1] != w[i][1])
            rot = w[i:] + w[:i]
            j -= i
            U, V = rot[:j], rot[j:]
            vinv = tuple((h, -s) for h, s in reversed(V))
            return _tr(U) * _tr(V) - _tr(_reduce(U + vinv))
    # (a^e b^d)^m
    ea = w[0][1] if w[0][0] == 0 else w[1][1]
    eb = w[0][1] if w[0][0] == 1 else w[1][1]
    t = _Z if ea == eb else _X * _Y - _Z
    return chebyshev(t, n // 2)


def trace_polynomial(w, generators=("a", "b")):
    """Polynomial in ``x, y, z`` equal to ``tr rho(w)`` for every SL2 representation."""
    if isinstance(w, str):
        w = parse_word(w, generators)
    if len(w.generators) != 2:
        raise InputError("trace polynomials are defined for words in two generators")
    return _tr(w.letters)


def clear_cache():
    with _lock:
        _cache.clear()


def delta(alpha, beta, generators=("a", "b")):
    """The discriminant ``Y_a^2 + Y_b^2 + Y_ab^2 - Y_a Y_b Y_ab - 4`` of a pair of words."""
    if isinstance(alpha, str):
        alpha = parse_word(alpha, generators)
    if isinstance(beta, str):
        beta = parse_word(beta, alpha.generators)
    ta = trace_polynomial(alpha)
    tb = trace_polynomial(beta)
    tab = trace_polynomial(word_mul(alpha, beta))
    return ta * ta + tb * tb + tab * tab - ta * tb * tab - 4


def is_irreducible_at(point, pairs):
    """True when some pair has nonzero discriminant at ``point``."""
    for alpha, beta in pairs:
        if delta(alpha, beta).evaluate(point) != 0:
            return True
    return False


def reducible_character(psi_a, psi_b, w):
    """Character ``psi(w) + psi(w)^-1`` of the diagonal representation ``diag(psi, psi^-1)``."""
    psi_a, psi_b = as_rat(psi_a), as_rat(psi_b)
    if not psi_a or not psi_b:
        raise InputError("multiplicative characters must be nonzero")
    if isinstance(w, str):
        w = parse_word(w)
    v = psi_a ** w.exponent_sum(0) * psi_b ** w.exponent_sum(1)
    return v + 1 / v


def check_quadratic_tangent(psi, pairs):
    """Check ``psi(gd) + psi(g^-1 d) = 2 psi(g) + 2 psi(d)`` on each pair."""
    for g, d in pairs:
        lhs = psi(word_mul(g, d)) + psi(word_mul(word_inv(g), d))
        if lhs != 2 * psi(g) + 2 * psi(d):
            return False
    return True


def trace_relation_holds(u, v):
    """``tr(uv) + tr(uv^-1) = tr(u) tr(v)`` as polynomials."""
    lhs = trace_polynomial(word_mul(u, v)) + trace_polynomial(word_mul(u, word_inv(v)))
    return lhs == trace_polynomial(u) * trace_polynomial(v)


__all__ = [
    "Word", "canonical_form", "chebyshev", "check_quadratic_tangent", "clear_cache", "delta",
    "is_irreducible_at", "reducible_character", "trace_polynomial", "trace_relation_holds",
]
