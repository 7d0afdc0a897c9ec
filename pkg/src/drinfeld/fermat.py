"""The homogeneous Fermat equation for a Drinfeld module and prime P,
and the constructive Wieferich base attached to any of its solutions.

With phi_P = sum b_i tau^i of tau-degree m = r*deg(P), the equation for
(x, y, z) reads  sum_i b_i x^(q^i) y^(q^m - q^i) = z^(q^m).  Nontrivial
solutions prime to P are not expected at desk scale; the search certifies
emptiness exactly, and the base-extraction path is exercised through its
own congruence checker.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import factor as _factor
from .dmodule import DrinfeldModule
from .errors import InternalCheckError
from .poly import Poly, all_nonzero_up_to_degree, invmod


@dataclass(frozen=True)
class FermatInstance:
    P: Poly
    degree_bound: int
    solutions: tuple  # of (x, y, z) triples with P dividing none of them


def qth_power_root(f: Poly, steps: int):
    """Exact q^steps-th root of f, or None if f is not such a power."""
    e = f.field.e
    for _ in range(steps * e):
        f = f.pth_root()
        if f is None:
            return None
    return f


def _phi_p_coeffs(phi: DrinfeldModule, P: Poly):
    image = phi.image(P)
    m = phi.rank * P.degree
    if image.tau_degree != m:
        raise InternalCheckError("tau-degree of phi_P is not r*deg P")
    return [image[i] for i in range(m + 1)], m


def fermat_lhs(phi: DrinfeldModule, P: Poly, x: Poly, y: Poly) -> Poly:
    """sum_i b_i x^(q^i) y^(q^m - q^i), computed with exact q-power spreads."""
    coeffs, m = _phi_p_coeffs(phi, P)
    total = phi.field.zero
    for i, b_i in enumerate(coeffs):
        if b_i.is_zero():
            continue
        ypow = y.qpow(m - i) // y  # y^(q^(m-i) - 1)
        term = b_i * x.qpow(i) * ypow.qpow(i)
        total = total + term
    return total


def fermat_search(phi: DrinfeldModule, P, deg_bound: int,
                  check: bool = True) -> FermatInstance:
    """Exhaustive solution search over deg x, deg y <= deg_bound, P not
    dividing x*y*z.  An empty result is a result (and the expected one)."""
    P = phi._coerce(P)
    if check and (not P.is_monic() or not _factor.is_irreducible(P)):
        raise ValueError("P must be monic irreducible")
    if deg_bound < 0:
        raise ValueError("degree bound must be non-negative")
    m = phi.rank * P.degree
    solutions = []
    candidates = list(all_nonzero_up_to_degree(phi.field, deg_bound))
    for x in candidates:
        if (x % P).is_zero():
            continue
        for y in candidates:
            if (y % P).is_zero():
                continue
            lhs = fermat_lhs(phi, P, x, y)
            if lhs.is_zero():
                continue  # z would be 0, excluded by P not dividing z
            z = qth_power_root(lhs, m)
            if z is None or (z % P).is_zero():
                continue
            if z.qpow(m) != lhs:
                raise InternalCheckError("root extraction lost exactness")
            solutions.append((x, y, z))
    return FermatInstance(P=P, degree_bound=deg_bound, solutions=tuple(solutions))


def thakur_wieferich_congruence(phi: DrinfeldModule, P: Poly, a: Poly) -> bool:
    """phi_P(a) = phi_{P-g}(a)^(q^(r deg P)) mod P^2, the Fermat-quotient
    style Wieferich condition."""
    fit = phi.fitting(P, check=False)
    P2 = P * P
    lhs = phi.eval(P, a, mod=P2)
    rhs = pow(phi.eval(fit.r, a, mod=P2), phi.field.q ** (phi.rank * P.degree), P2)
    return lhs == rhs


def wieferich_base_from_fermat(phi: DrinfeldModule, P, x, y, z) -> Poly:
    """Extract from a verified Fermat solution a base a (prime to P, degree
    < 2 deg P) in which P is Wieferich in the Fermat-quotient sense.

    Follows the P-adic argument behind the construction: with x1 = x/z,
    y1 = y/z, write phi_{P-g}(x1/y1) = (x1/y1) c; the base is the
    canonical representative of 1/(c y1) mod P^2.  All divisions are
    modular inverses mod P^2, legitimate since P divides none of x, y, z.
    """
    P = phi._coerce(P)
    x, y, z = phi._coerce(x), phi._coerce(y), phi._coerce(z)
    if not P.is_monic() or not _factor.is_irreducible(P):
        raise ValueError("P must be monic irreducible")
    for name, v in (("x", x), ("y", y), ("z", z)):
        if (v % P).is_zero():
            raise ValueError(f"P divides {name}; the construction needs P coprime to xyz")
    m = phi.rank * P.degree
    if fermat_lhs(phi, P, x, y) != z.qpow(m):
        raise ValueError("(x, y, z) is not a solution of the Fermat equation for P")
    fit = phi.fitting(P, check=False)
    P2 = P * P
    try:
        w = (x * invmod(y, P2)) % P2  # x1/y1 = x/y mod P^2
        t = phi.eval(fit.r, w, mod=P2)
        c = (t * invmod(w, P2)) % P2
        y1 = (y * invmod(z, P2)) % P2
        a = invmod((c * y1) % P2, P2)
    except ZeroDivisionError as exc:
        raise ValueError(f"non-unit denominator mod P^2: {exc}") from exc
    if (a % P).is_zero():
        raise InternalCheckError("extracted base is divisible by P")
    if not thakur_wieferich_congruence(phi, P, a):
        raise InternalCheckError(
            f"extracted base fails the Wieferich congruence: P={P!r}, a={a!r}")
    return a
