"""Mason-Stothers checks, squarefull/squarefree value decomposition, and
squarefree statistics for Drinfeld module values.

The u/v split of f = phi_b(a)/a separates the primes hitting f exactly
once (u, squarefree) from the squarefull part v; every prime of u with
v_P(a) = 0 has v_P(phi_b(a)) = 1 and so cannot be Wieferich in base a.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import factor as _factor
from .dmodule import DEFAULT_DEGREE_GUARD, DrinfeldModule
from .errors import InternalCheckError
from .poly import Poly


def mason_stothers_check(x: Poly, y: Poly, z: Poly):
    """The polynomial abc inequality for a coprime additive triple.

    Preconditions (each violation raises by name): x + y = z, the three
    are nonzero and pairwise coprime, and at least one derivative is
    nonzero.  Returns (holds, slack) with
    slack = deg rad(xyz) - 1 - max(deg x, deg y, deg z); holds is always
    True (it is a theorem), but the verdict is computed, not assumed.
    """
    for name, v in (("x", x), ("y", y), ("z", z)):
        if v.is_zero():
            raise ValueError(f"zero polynomial: {name}")
    if x + y != z:
        raise ValueError("additive relation x + y = z fails")
    if not (_factor.gcd(x, y).is_one() and _factor.gcd(x, z).is_one()
            and _factor.gcd(y, z).is_one()):
        raise ValueError("inputs are not pairwise coprime")
    if x.derivative().is_zero() and y.derivative().is_zero() \
            and z.derivative().is_zero():
        raise ValueError("derivative condition: all three derivatives vanish")
    rad = _factor.radical(x * y * z)
    max_deg = max(x.degree, y.degree, z.degree)
    slack = rad.degree - 1 - max_deg
    return slack >= 0, slack


@dataclass(frozen=True)
class UVDecomposition:
    base: Poly  # a
    multiplier: Poly  # b
    quotient: Poly  # f = phi_b(a)/a
    u: Poly  # product of primes dividing f exactly once (monic)
    v: Poly  # product of P^{v_P(f)} over P with P^2 | f (monic)
    certified_non_wieferich: tuple  # primes of u with P not dividing a
    uncertified: tuple  # primes of u dividing a (finitely many per base)


def uv_decompose(phi: DrinfeldModule, a, b,
                 guard: int = DEFAULT_DEGREE_GUARD) -> UVDecomposition:
    """Split phi_b(a)/a into squarefree-part u and squarefull-part v.

    For each prime of u not dividing a, the full value phi_b(a) is
    certified not divisible by P^2 (so P is not Wieferich in base a).
    """
    a = phi._coerce(a)
    b = phi._coerce(b)
    if a.is_zero():
        raise ValueError("base a must be nonzero")
    value = phi.eval(b, a, guard=guard)
    f, rem = divmod(value, a)
    if not rem.is_zero():
        raise InternalCheckError("a does not divide phi_b(a)")
    if f.is_zero():
        raise ValueError("phi_b(a) is zero (torsion base and annihilating b)")
    F = phi.field
    u = F.one
    v = F.one
    certified = []
    uncertified = []
    for prime, mult in _factor.factor(f):
        if mult == 1:
            u = u * prime
            if (a % prime).is_zero():
                uncertified.append(prime)
            else:
                certified.append(prime)
        else:
            v = v * prime ** mult
    lc = f.leading
    if u * v * Poly(F, (lc,)) != f:
        raise InternalCheckError("u*v recomposition failed")
    return UVDecomposition(base=a, multiplier=b, quotient=f, u=u, v=v,
                           certified_non_wieferich=tuple(certified),
                           uncertified=tuple(uncertified))


def conjecture_a_stats(phi: DrinfeldModule, a, dmax: int,
                       guard: int = DEFAULT_DEGREE_GUARD):
    """Per-degree tallies of monic b for which phi_b(a)/a is squarefree
    with nonzero derivative: [(deg, total, passing)].

    Constants b always fail (constant quotient, zero derivative).
    """
    from .poly import monic_of_degree

    a = phi._coerce(a)
    if a.is_zero():
        raise ValueError("base a must be nonzero")
    rows = []
    for d in range(dmax + 1):
        total = passing = 0
        for b in monic_of_degree(phi.field, d):
            total += 1
            value = phi.eval(b, a, guard=guard)
            f = value // a
            if f.is_zero():
                continue
            fp = f.derivative()
            if fp.is_zero():
                continue
            if _factor.gcd(f, fp).is_one():
                passing += 1
        rows.append((d, total, passing))
    return rows
