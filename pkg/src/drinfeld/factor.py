"""Irreducibility, squarefree decomposition, factorization over F_q[theta].

Factorization is the classical pipeline: squarefree decomposition (with
p-th-root extraction for vanishing derivatives), distinct-degree splitting
by Frobenius powers, then seeded Cantor-Zassenhaus equal-degree splitting.
All outputs are monic and canonically ordered, so repeated runs agree
bit for bit.
"""
from __future__ import annotations

import hashlib
import random

from .errors import InternalCheckError
from .field import FqField
from .poly import Poly

EDF_RETRY_BUDGET = 64


def _stable_seed(*parts) -> int:
    h = hashlib.sha256()
    for part in parts:
        h.update(repr(part).encode())
        h.update(b"\x00")
    return int.from_bytes(h.digest()[:8], "big")


def _frobenius(h: Poly, f: Poly) -> Poly:
    """h**q mod f."""
    return pow(h, h.field.q, f)


def is_irreducible(f: Poly) -> bool:
    """Rabin's criterion.

    f (monic-normalized) of degree n is irreducible iff
    theta^(q^n) == theta mod f and gcd(theta^(q^(n/l)) - theta, f) = 1
    for every prime l dividing n.
    """
    n = f.degree
    if f.is_zero() or n < 1:
        raise ValueError("irreducibility is undefined for constants")
    f = f.monic()
    F = f.field
    theta = F.theta
    checkpoints = {n // ell for ell in _prime_divisors(n)}
    h = theta % f
    for k in range(1, n + 1):
        h = _frobenius(h, f)
        if k in checkpoints:
            d = _gcd(h - theta, f)
            if not d.is_one():
                return False
    return h == theta % f


def is_irreducible_ddf(f: Poly) -> bool:
    """Distinct-degree sweep with early exit at the least factor degree.

    Equivalent decision to is_irreducible; much faster on composites of
    large degree, since those are rejected as soon as a small-degree
    factor shows up instead of after deg(f) Frobenius steps.
    """
    n = f.degree
    if f.is_zero() or n < 1:
        raise ValueError("irreducibility is undefined for constants")
    f = f.monic()
    F = f.field
    theta = F.theta
    h = theta % f
    for k in range(1, n // 2 + 1):
        h = _frobenius(h, f)
        if not _gcd(h - theta, f).is_one():
            return False
    return True


def _gcd(f: Poly, g: Poly) -> Poly:
    K, ctx = f.field._kernel, f.field._ctx
    return Poly._raw(f.field, K.poly_gcd(ctx, f.coeffs, g.coeffs))


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; gcd(f, 0) = monic(f)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return _gcd(f, g)


def squarefree_decomposition(f: Poly):
    """[(g_i, e_i)] with f = lc * prod g_i^e_i, g_i monic squarefree coprime.

    Char-p complete version: when the derivative vanishes, f is a p-th
    power of a polynomial recovered by coefficientwise p-th roots.
    """
    if f.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    parts: dict[Poly, int] = {}
    _squarefree(f.monic(), 1, parts)
    return sorted(parts.items(), key=lambda kv: kv[0].sort_key())


def _squarefree(f: Poly, multiplier: int, parts: dict):
    p = f.field.p
    if f.degree < 1:
        return
    fp = f.derivative()
    if fp.is_zero():
        root = f.pth_root()
        if root is None:  # cannot happen: zero derivative forces p-stride support
            raise InternalCheckError("vanishing derivative without a p-th root")
        _squarefree(root, multiplier * p, parts)
        return
    t = _gcd(f, fp)
    w = f // t
    i = 1
    while not w.is_one():
        y = _gcd(w, t)
        fac = w // y
        if not fac.is_one():
            parts[fac] = parts.get(fac, 0) + i * multiplier
        w = y
        t = t // y
        i += 1
    if not t.is_one():
        root = t.pth_root()
        if root is None:
            raise InternalCheckError("residual part is not a p-th power")
        _squarefree(root, multiplier * p, parts)


def is_squarefree(f: Poly) -> bool:
    if f.is_zero():
        raise ValueError("squarefreeness is undefined for zero")
    if f.degree < 1:
        return True
    fp = f.derivative()
    if fp.is_zero():
        return False
    return _gcd(f, fp).is_one()


def radical(f: Poly) -> Poly:
    """Monic product of the distinct irreducible factors."""
    if f.is_zero():
        raise ValueError("radical of zero is undefined")
    out = f.field.one
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out


def _ddf(f: Poly):
    """Distinct-degree split of a monic squarefree f: [(product, degree)]."""
    F = f.field
    theta = F.theta
    out = []
    h = theta % f
    k = 1
    while f.degree >= 2 * k:
        h = _frobenius(h, f)
        d = _gcd(h - theta, f)
        if not d.is_one():
            out.append((d, k))
            f = f // d
            h = h % f
        k += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _edf(f: Poly, k: int, rng: random.Random):
    """Cantor-Zassenhaus split of monic squarefree f into degree-k factors."""
    F = f.field
    n = f.degree
    if n == k:
        return [f]
    for _ in range(EDF_RETRY_BUDGET):
        t = Poly(F, [rng.randrange(F.q) for _ in range(n)])
        if t.is_zero():
            continue
        d = _gcd(t, f)
        if d.is_one():
            if F.p == 2:
                # trace map over F_2: sum of t^(2^i), i < k*e'
                s = t % f
                acc = s
                for _ in range(k * _log2(F.q) - 1):
                    s = pow(s, 2, f)
                    acc = acc + s
                d = _gcd(acc, f)
            else:
                s = pow(t, (F.q ** k - 1) // 2, f)
                d = _gcd(s - F.one, f)
        if 0 < d.degree < n:
            return _edf(d, k, rng) + _edf(f // d, k, rng)
    raise InternalCheckError(
        f"equal-degree splitting exhausted its retry budget on {f!r}")


def _log2(q: int) -> int:
    return q.bit_length() - 1


def factor(f: Poly, seed: int = 0):
    """Complete monic factorization: [(irreducible, multiplicity)].

    Deterministic: the equal-degree stage derives its randomness from the
    seed and the input, and the output is canonically ordered.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    out: dict[Poly, int] = {}
    for part, mult in squarefree_decomposition(f):
        for block, k in _ddf(part):
            rng = random.Random(_stable_seed(seed, block.coeffs, k))
            for irr in _edf(block, k, rng):
                out[irr] = out.get(irr, 0) + mult
    return sorted(out.items(), key=lambda kv: kv[0].sort_key())


def valuation(f: Poly, P: Poly, check: bool = True) -> int:
    """Largest k with P^k | f; P must be irreducible."""
    if f.is_zero():
        raise ValueError("valuation of zero is undefined")
    if check and not is_irreducible(P):
        raise ValueError("valuation requires an irreducible P")
    P = P.monic()
    v = 0
    while True:
        qq, rr = divmod(f, P)
        if not rr.is_zero():
            return v
        v += 1
        f = qq
        if f.is_zero():  # cannot happen: exact division of nonzero keeps nonzero
            raise InternalCheckError("valuation loop reached zero")


def irreducibles(field: FqField, d: int, mode: str = "enumerate", seed=None):
    """Monic irreducibles of degree d.

    enumerate: each exactly once, canonical order.  random: an endless
    uniform stream (rejection sampling from monic degree-d polynomials).
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if mode == "enumerate":
        q = field.q
        for code in range(q ** d):
            coeffs = [0] * (d + 1)
            c, i = code, 0
            while c:
                coeffs[i] = c % q
                c //= q
                i += 1
            coeffs[d] = 1
            cand = Poly._raw(field, tuple(coeffs))
            if is_irreducible(cand):
                yield cand
        return
    if mode == "random":
        rng = random.Random(seed)
        while True:
            cand = Poly(field, [rng.randrange(field.q) for _ in range(d)] + [1])
            if is_irreducible(cand):
                yield cand
        return
    raise ValueError(f"unknown mode {mode!r}")


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
