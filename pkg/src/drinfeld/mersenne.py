"""Mersenne numbers for Drinfeld modules: values phi_P(a) with P prime.

Primality of phi_P(a) is tightly constrained: the base must be a unit or
a torsion prime, a prime value M forces M to be non-Wieferich in base a,
and for torsion bases (under the standing hypothesis) the value is never
prime.  Scans record each value together with that classification.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import factor as _factor
from .dmodule import DEFAULT_DEGREE_GUARD, DrinfeldModule
from .errors import DegreeGuardExceeded, InternalCheckError
from .poly import Poly
from .wieferich import annihilator_generator, hypothesis_ok, wieferich_status

# above this degree, primality switches from Rabin to the early-exit
# distinct-degree sweep (identical answer, far cheaper on composites)
DDF_DEGREE_CUTOFF = 48
# Fitting matrices are d x d; skip the Prop-3.4 side check beyond this
WIEFERICH_CHECK_LIMIT = 600

BASE_UNIT = "unit_base"
BASE_TORSION_PRIME = "torsion_prime_base"
BASE_OTHER = "other"


def _is_prime_poly(f: Poly) -> bool:
    if f.is_zero() or f.degree < 1:
        return False
    f = f.monic()
    if f.degree > DDF_DEGREE_CUTOFF:
        return _factor.is_irreducible_ddf(f)
    return _factor.is_irreducible(f)


@dataclass(frozen=True)
class MersenneRecord:
    P: Poly
    a: Poly
    value: Poly | None  # None when the degree guard was exceeded
    value_degree: int
    is_prime: bool | None  # None = unknown (value too large)
    base_class: str
    wieferich_of_value: bool | None
    flags: tuple

    @property
    def degenerate(self) -> bool:
        return "zero_value" in self.flags


def classify_base(phi: DrinfeldModule, a: Poly) -> str:
    if not a.is_zero() and a.degree == 0:
        return BASE_UNIT
    if a.degree >= 1 and _factor.is_irreducible(a) and phi.is_torsion(a):
        return BASE_TORSION_PRIME
    return BASE_OTHER


def mersenne_number(phi: DrinfeldModule, P, a,
                    guard: int = DEFAULT_DEGREE_GUARD,
                    check: bool = True) -> MersenneRecord:
    """One Mersenne value phi_P(a) with primality and base classification.

    When the value is prime and the base is non-torsion, the record also
    carries whether the value (monic-normalized) is phi-Wieferich in base
    a; it never is, and the scans assert that.
    """
    a = phi._coerce(a)
    P = phi._coerce(P)
    if check and not _factor.is_irreducible(P):
        raise ValueError("P must be irreducible")
    flags = []
    try:
        value = phi.eval(P, a, guard=guard)
    except DegreeGuardExceeded:
        value = None
        flags.append("too_large")
    if value is not None:
        vdeg = value.degree if not value.is_zero() else -1
        if value.is_zero():
            flags.append("zero_value")
            is_prime = False
        else:
            if not a.is_zero() and not (value % a).is_zero():
                raise InternalCheckError("a does not divide phi_P(a)")
            is_prime = _is_prime_poly(value)
    else:
        # degree known from the growth law even when too large to hold
        vdeg = _predicted_degree(phi, P, a)
        is_prime = None
        flags.append("primality_unknown")
    base_class = classify_base(phi, a)
    wieferich_of_value = None
    if is_prime and not phi.is_torsion(a):
        if value.degree <= WIEFERICH_CHECK_LIMIT:
            status = wieferich_status(phi, value.monic(), a, check=False)
            wieferich_of_value = status.is_wieferich
        else:
            flags.append("wieferich_check_skipped")
    return MersenneRecord(P=P, a=a, value=value,
                          value_degree=vdeg, is_prime=is_prime,
                          base_class=base_class,
                          wieferich_of_value=wieferich_of_value,
                          flags=tuple(flags))


def _predicted_degree(phi: DrinfeldModule, P: Poly, a: Poly) -> int:
    deg = a.degree
    F = phi.field
    for _ in range(P.degree):
        deg = max(1 + deg, max(c.degree + (F.q ** j) * deg
                               for j, c in enumerate(phi.coeffs, start=1)
                               if not c.is_zero()))
    return int(deg)


def _mersenne_worker(args):
    phi, a, P, guard = args
    return mersenne_number(phi, P, a, guard=guard, check=False)


def mersenne_scan(phi: DrinfeldModule, a, dmin: int, dmax: int,
                  guard: int = DEFAULT_DEGREE_GUARD, jobs: int = 1):
    """One record per monic irreducible P in the degree range, canonical
    order, plus summary counts {prime, composite, unknown}."""
    if not 1 <= dmin <= dmax:
        raise ValueError("need 1 <= dmin <= dmax")
    a = phi._coerce(a)
    primes = []
    for d in range(dmin, dmax + 1):
        primes.extend(_factor.irreducibles(phi.field, d))
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(
                _mersenne_worker, [(phi, a, P, guard) for P in primes],
                chunksize=max(1, len(primes) // (4 * jobs))))
    else:
        records = [mersenne_number(phi, P, a, guard=guard, check=False)
                   for P in primes]
    records.sort(key=lambda r: r.P.sort_key())
    summary = {"prime": 0, "composite": 0, "unknown": 0}
    for r in records:
        if r.is_prime is None:
            summary["unknown"] += 1
        elif r.is_prime:
            summary["prime"] += 1
        else:
            summary["composite"] += 1
    return records, summary


def annihilator_primality_check(phi: DrinfeldModule, Q, a, dmax: int):
    """Primality of the annihilator of a mod Q vs divisibility of Mersenne
    values: the annihilator is prime iff Q divides phi_P(a) for some
    irreducible P (namely the annihilator itself).

    Returns (is_prime, witness).  A composite annihilator is refuted by
    scanning all monic irreducibles P up to degree dmax and checking that
    none has Q | phi_P(a); the scan bound only limits that refutation.
    """
    a = phi._coerce(a)
    Q = phi._coerce(Q)
    if not _factor.is_irreducible(Q):
        raise ValueError("Q must be irreducible")
    if (a % Q).is_zero():
        raise ValueError("Q must not divide a")
    gen = annihilator_generator(phi, a, Q).generator
    if _factor.is_irreducible(gen):
        if not phi.eval(gen, a, mod=Q).is_zero():
            raise InternalCheckError("annihilator does not annihilate")
        return True, gen
    for d in range(1, dmax + 1):
        for P in _factor.irreducibles(phi.field, d):
            if phi.eval(P, a, mod=Q).is_zero():
                raise InternalCheckError(
                    f"composite annihilator {gen!r} yet Q | phi_P(a) for P={P!r}")
    return False, None


def koblitz_stats(phi: DrinfeldModule, dmin: int, dmax: int):
    """Per-degree counts of P whose Fitting generator is irreducible:
    [(degree, number of monic irreducibles, count with g prime)]."""
    if not 1 <= dmin <= dmax:
        raise ValueError("need 1 <= dmin <= dmax")
    rows = []
    for d in range(dmin, dmax + 1):
        total = 0
        prime_g = 0
        for P in _factor.irreducibles(phi.field, d):
            total += 1
            if _factor.is_irreducible(phi.fitting(P, check=False).g):
                prime_g += 1
        rows.append((d, total, prime_g))
    return rows


@dataclass(frozen=True)
class CompositeWitness:
    """A provably composite Mersenne value: P | phi_Q(1) with
    deg phi_Q(1) > deg Q, where Q = g_P is prime."""

    P: Poly
    Q: Poly
    value: Poly | None  # exact value when within the guard
    value_degree: int


def composite_mersenne_witnesses(phi: DrinfeldModule, dmin: int, dmax: int,
                                 guard: int = DEFAULT_DEGREE_GUARD):
    """Constructive composite Mersenne values in base 1.

    For P in range with g_P prime and deg P above the growth threshold,
    phi_{g_P}(1) = 0 mod P while its degree exceeds deg g_P, so it is a
    Mersenne number with the proper factor P.  Checked modularly here.
    """
    if not 1 <= dmin <= dmax:
        raise ValueError("need 1 <= dmin <= dmax")
    if phi.is_torsion(phi.field.one):
        raise ValueError("witness construction needs 1 to be non-torsion")
    c_phi = phi.degree_threshold()
    out = []
    for d in range(dmin, dmax + 1):
        if d <= c_phi:
            continue
        for P in _factor.irreducibles(phi.field, d):
            Q = phi.fitting(P, check=False).g
            if not _factor.is_irreducible(Q):
                continue
            if not phi.eval(Q, phi.field.one, mod=P).is_zero():
                raise InternalCheckError(f"P does not divide phi_Q(1) at P={P!r}")
            vdeg = phi.degree_of_image_of_one(Q.degree)
            if vdeg <= Q.degree:
                raise InternalCheckError(f"degree growth failed at P={P!r}")
            try:
                value = phi.eval(Q, phi.field.one, guard=guard)
            except DegreeGuardExceeded:
                value = None
            out.append(CompositeWitness(P=P, Q=Q, value=value, value_degree=vdeg))
    return out
