"""Annihilator ideals, pi-chains and Wieferich classification.

For a base a and modulus m, the annihilator ideal {b : phi_b(a) = 0 mod m}
is nonzero; its monic generator is the Drinfeld analogue of the
multiplicative order.  A monic prime P is phi-Wieferich in base a when
phi_g(a) = 0 mod P^2 for the Fitting generator g = g_{P}, super when mod
P^3; the Thakur-style variant instead compares phi_P(a) with
phi_{P-g}(a)^(q^(r deg P)) mod P^2.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from . import factor as _factor
from .dmodule import DrinfeldModule, FittingData
from .errors import ChainLawError, InternalCheckError
from .linalg import DependencyTracker
from .poly import Poly

VALUATION_CAP = 6


def hypothesis_ok(phi: DrinfeldModule, P: Poly) -> bool:
    """The standing hypothesis: if q = 2 then deg P > 1."""
    return not (phi.field.q == 2 and P.degree == 1)


@dataclass(frozen=True)
class AnnihilatorResult:
    generator: Poly  # monic
    modulus: Poly
    base: Poly


def annihilator_generator(phi: DrinfeldModule, a, m) -> AnnihilatorResult:
    """Monic generator of {b in A : phi_b(a) = 0 mod m}, any nonzero m.

    Incremental linear algebra on the residues phi_{theta^i}(a) mod m:
    the first F_q-linear dependency yields the minimal-degree monic kernel
    element, which generates because the kernel is a nonzero ideal.
    Terminates after at most deg(m) + 1 residues.
    """
    a = phi._coerce(a)
    m = phi._coerce(m)
    if m.is_zero():
        raise ZeroDivisionError("zero modulus")
    dim = max(m.degree, 0)
    tracker = DependencyTracker(phi.field)
    t = a % m
    while True:
        combo = tracker.update([t[i] for i in range(dim)])
        if combo is not None:
            return AnnihilatorResult(Poly(phi.field, combo), m, a)
        t = phi.apply_theta_mod(t, m)


@dataclass(frozen=True)
class PiChain:
    """Generators of the annihilator ideals mod P^k for k = 1..kmax."""

    generators: tuple
    constant_prefix: int  # largest k with gen_k == gen_1
    law_ok: bool


def pi_chain(phi: DrinfeldModule, a, P, kmax: int, check: bool = True) -> PiChain:
    """Annihilator generators mod P, P^2, ..., P^kmax with chain-law audit.

    Each step must keep the previous generator or multiply it by P, and
    once it multiplies it must keep multiplying.  A violation is raised as
    an internal failure under the standing hypothesis (where the law is a
    theorem) and recorded in law_ok otherwise.
    """
    a = phi._coerce(a)
    P = phi._coerce(P)
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    if check and (not P.is_monic() or not _factor.is_irreducible(P)):
        raise ValueError("P must be monic irreducible")
    gens = []
    Pk = phi.field.one
    for _ in range(kmax):
        Pk = Pk * P
        gens.append(annihilator_generator(phi, a, Pk).generator)
    law_ok = True
    grew = False
    for k in range(1, kmax):
        prev, cur = gens[k - 1], gens[k]
        if cur == prev:
            if grew:
                law_ok = False
        elif cur == P * prev:
            grew = True
        else:
            law_ok = False
    if not law_ok and hypothesis_ok(phi, P):
        raise ChainLawError(
            f"annihilator chain law violated for P={P!r}, a={a!r}: {gens!r}")
    prefix = 1
    while prefix < kmax and gens[prefix] == gens[0]:
        prefix += 1
    return PiChain(tuple(gens), prefix, law_ok)


@dataclass(frozen=True)
class WieferichStatus:
    P: Poly
    a: Poly
    g: Poly
    r: Poly
    annihilator: Poly
    valuation: int | None  # None = phi_g(a) is exactly 0
    valuation_capped: bool
    is_wieferich: bool
    is_super: bool
    thakur: bool
    chain_break: int | None  # largest k with pi(P^(k+1)) = pi(P); None = infinite
    chain_capped: bool
    hyp_ok: bool
    base_in_ideal: bool
    torsion_base: bool
    law_ok: bool

    @property
    def degenerate(self) -> bool:
        return self.base_in_ideal or self.torsion_base or not self.hyp_ok

    def flags(self) -> list:
        out = []
        if not self.hyp_ok:
            out.append("hyp_fails")
        if self.base_in_ideal:
            out.append("base_in_ideal")
        if self.torsion_base:
            out.append("torsion_base")
        if self.valuation is None:
            out.append("valuation_infinite")
        if self.valuation_capped:
            out.append("valuation_capped")
        if self.chain_capped:
            out.append("chain_capped")
        if not self.law_ok:
            out.append("chain_law_violated")
        return out


def wieferich_status(phi: DrinfeldModule, P, a, cap: int = VALUATION_CAP,
                     check: bool = True) -> WieferichStatus:
    """Full classification of one (phi, P, a) instance.

    The valuation v_P(phi_g(a)) is found with an expanding-modulus loop
    (never the exact value), capped at `cap`; a base whose exact
    annihilator divides g makes phi_g(a) = 0 identically, reported as a
    None valuation with both Wieferich flags set and a degenerate flag.
    """
    a = phi._coerce(a)
    P = phi._coerce(P)
    fit = phi.fitting(P, check=check)
    F = phi.field
    hyp = hypothesis_ok(phi, P)
    base_in_ideal = (a % P).is_zero()
    torsion = phi.is_torsion(a)

    exact_zero = False
    if torsion:
        ann0 = phi.exact_annihilator(a)
        exact_zero = (fit.g % ann0).is_zero()

    if exact_zero:
        valuation, capped = None, False
    else:
        valuation, capped = 1, True
        Pk = P
        if not phi.eval(fit.g, a, mod=Pk).is_zero():
            raise InternalCheckError(
                f"Fermat little theorem failed at P={P!r}, a={a!r}")
        for k in range(2, cap + 1):
            Pk = Pk * P
            if phi.eval(fit.g, a, mod=Pk).is_zero():
                valuation = k
            else:
                capped = False
                break

    rd = phi.rank * P.degree
    P2 = P * P
    lhs = phi.eval(P, a, mod=P2)
    rhs = pow(phi.eval(fit.r, a, mod=P2), F.q ** rd, P2)
    thakur = lhs == rhs

    chain = pi_chain(phi, a, P, kmax=cap + 1, check=False)
    if chain.constant_prefix < cap + 1:
        chain_break, chain_capped = chain.constant_prefix - 1, False
    elif exact_zero:
        chain_break, chain_capped = None, True
    else:
        chain_break, chain_capped = cap, True

    ann = annihilator_generator(phi, a, P).generator
    wief = True if valuation is None else valuation >= 2
    sup = True if valuation is None else valuation >= 3
    return WieferichStatus(
        P=P, a=a, g=fit.g, r=fit.r, annihilator=ann,
        valuation=valuation, valuation_capped=capped,
        is_wieferich=wief, is_super=sup, thakur=thakur,
        chain_break=chain_break, chain_capped=chain_capped,
        hyp_ok=hyp, base_in_ideal=base_in_ideal, torsion_base=torsion,
        law_ok=chain.law_ok)


def base_transfer_check(phi: DrinfeldModule, P, a, d) -> bool:
    """Wieferich classification agrees between base a and base phi_d(a)
    whenever d is coprime to both P and the annihilator of a mod P.

    P does not divide d is genuinely needed: with gcd(d, annihilator) = 1
    alone, the annihilators mod P agree but the mod P^2 ideals need not
    (Carlitz over F_3, P = theta+2 = d, base 1 -> base theta flips the
    classification).  Also asserts the stronger fact behind the
    equivalence: the two bases share the same annihilator mod P.
    """
    a = phi._coerce(a)
    P = phi._coerce(P)
    d = phi._coerce(d)
    if not hypothesis_ok(phi, P):
        raise ValueError("base transfer requires the hypothesis: q = 2 needs deg P > 1")
    if phi.is_torsion(a):
        raise ValueError("base transfer requires a non-torsion base")
    ann = annihilator_generator(phi, a, P).generator
    if not _factor.gcd(d, ann).is_one():
        raise ValueError("d must be coprime to the annihilator of a mod P")
    if (d % P).is_zero():
        raise ValueError("d must not be divisible by P")
    b = phi.eval(d, a)
    s_a = wieferich_status(phi, P, a, check=False)
    s_b = wieferich_status(phi, P, b, check=False)
    if s_a.annihilator != s_b.annihilator:
        raise InternalCheckError(
            f"annihilator changed under base transfer: {s_a.annihilator!r} "
            f"vs {s_b.annihilator!r} (P={P!r}, a={a!r}, d={d!r})")
    return s_a.is_wieferich == s_b.is_wieferich


def _status_worker(args):
    phi, a, P, cap = args
    return wieferich_status(phi, P, a, cap=cap, check=False)


def search_wieferich(phi: DrinfeldModule, a, dmin: int, dmax: int,
                     cap: int = VALUATION_CAP, jobs: int = 1):
    """Classify every monic irreducible P with dmin <= deg P <= dmax.

    Returns (statuses, histogram); statuses are in canonical P order
    regardless of worker scheduling, histogram counts primes by valuation
    stratum 1 / 2 / 3 / 4+ plus "inf" for identically-zero instances.
    """
    if not 1 <= dmin <= dmax:
        raise ValueError("need 1 <= dmin <= dmax")
    a = phi._coerce(a)
    primes = []
    for d in range(dmin, dmax + 1):
        primes.extend(_factor.irreducibles(phi.field, d))
    if jobs > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            statuses = list(pool.map(
                _status_worker, [(phi, a, P, cap) for P in primes],
                chunksize=max(1, len(primes) // (4 * jobs))))
    else:
        statuses = [wieferich_status(phi, P, a, cap=cap, check=False)
                    for P in primes]
    statuses.sort(key=lambda s: s.P.sort_key())
    histogram = {"1": 0, "2": 0, "3": 0, "4+": 0, "inf": 0}
    for s in statuses:
        if s.valuation is None:
            histogram["inf"] += 1
        elif s.valuation == 1:
            histogram["1"] += 1
        elif s.valuation == 2:
            histogram["2"] += 1
        elif s.valuation == 3:
            histogram["3"] += 1
        else:
            histogram["4+"] += 1
    return statuses, histogram
