"""Drinfeld modules over A = F_q[theta].

A module is given by the image of theta,
    phi_theta = theta*tau^0 + a_1*tau + ... + a_r*tau^r,  a_r != 0,
and extends to the F_q-algebra map b -> phi_b.  Evaluation phi_b(a) has a
modular path (used by every scan: iterate x -> phi_theta(x) mod m over the
theta-digits of b) and an exact path behind a degree guard, since exact
values grow like q^(r*deg b).
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from . import factor as _factor
from .errors import DegreeGuardExceeded, InternalCheckError
from .field import FqField
from .linalg import DependencyTracker, charpoly
from .poly import NEG_INF, Poly
from .twisted import TwistedPoly

DEFAULT_DEGREE_GUARD = 10 ** 6


@dataclass(frozen=True)
class FittingData:
    """Monic generator g of the Fitting ideal of phi(A/PA), with P = g + r."""

    P: Poly
    g: Poly
    r: Poly


class DrinfeldModule:
    def __init__(self, field: FqField, coeffs):
        polys = []
        for c in coeffs:
            polys.append(c if isinstance(c, Poly) else Poly(field, c))
        if not polys or polys[-1].is_zero():
            raise ValueError("top coefficient a_r must be nonzero")
        for c in polys:
            if c.field != field:
                raise ValueError("coefficient over a different field")
        self.field = field
        self.coeffs = tuple(polys)  # a_1 .. a_r
        self.rank = len(polys)

    @classmethod
    def carlitz(cls, field: FqField) -> "DrinfeldModule":
        """The Carlitz module: phi_theta = theta + tau."""
        return cls(field, (field.one,))

    def is_carlitz(self) -> bool:
        return self.rank == 1 and self.coeffs[0].is_one()

    @property
    def phi_theta(self) -> TwistedPoly:
        return TwistedPoly(self.field, (self.field.theta,) + self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, DrinfeldModule)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __reduce__(self):
        return (DrinfeldModule, (self.field, self.coeffs))

    def __repr__(self):
        return f"DrinfeldModule(q={self.field.q}, phi_theta=θ + {self.coeffs!r})"

    # -- the homomorphism -------------------------------------------------------

    def image(self, b: Poly) -> TwistedPoly:
        """phi_b as a twisted polynomial (Horner in phi_theta; F_q is central)."""
        b = self._coerce(b)
        F = self.field
        if b.is_zero():
            return TwistedPoly(F, ())
        phi_t = self.phi_theta
        acc = TwistedPoly.constant(F.poly((b.coeffs[-1],)))
        for i in range(len(b.coeffs) - 2, -1, -1):
            acc = acc * phi_t
            c = b.coeffs[i]
            if c:
                acc = acc + F.poly((c,))
        return acc

    def _coerce(self, b) -> Poly:
        if isinstance(b, Poly):
            if b.field != self.field:
                raise ValueError("operand over a different field")
            return b
        return Poly(self.field, b)

    def apply_theta_mod(self, x: Poly, m: Poly) -> Poly:
        """phi_theta(x) mod m."""
        s = (self.field.theta * x) % m
        w = x
        for a_j in self.coeffs:
            w = pow(w, self.field.q, m)
            if not a_j.is_zero():
                s = s + (a_j * w) % m
        return s % m

    def apply_theta(self, x: Poly, guard: int | None = DEFAULT_DEGREE_GUARD) -> Poly:
        """Exact phi_theta(x), guarded against degree blowup."""
        if guard is not None and x.degree is not NEG_INF:
            predicted = max(
                1 + x.degree,
                max((a.degree + (self.field.q ** j) * x.degree)
                    for j, a in enumerate(self.coeffs, start=1)
                    if not a.is_zero()),
            )
            if predicted > guard:
                raise DegreeGuardExceeded(
                    f"phi_theta would reach degree ~{predicted} > guard {guard}")
        s = self.field.theta * x
        w = x
        for a_j in self.coeffs:
            w = w.qpow(1)
            if not a_j.is_zero():
                s = s + a_j * w
        return s

    def eval(self, b, a, mod: Poly | None = None,
             guard: int | None = DEFAULT_DEGREE_GUARD) -> Poly:
        """phi_b(a), reduced mod `mod` when given.

        The modular path never materializes the exact value; the exact
        path raises DegreeGuardExceeded beyond the guard.
        """
        b = self._coerce(b)
        a = self._coerce(a)
        if mod is not None:
            if mod.is_zero():
                raise ZeroDivisionError("zero modulus")
            if mod.is_constant():
                return self.field.zero
            acc = self.field.zero
            t = a % mod
            for i, c in enumerate(b.coeffs):
                if i:
                    t = self.apply_theta_mod(t, mod)
                if c:
                    acc = acc + t.scale(c)
            return acc
        acc = self.field.zero
        t = a
        for i, c in enumerate(b.coeffs):
            if i:
                t = self.apply_theta(t, guard)
            if c:
                acc = acc + t.scale(c)
        return acc

    # -- Fitting ideal ------------------------------------------------------------

    def fitting(self, P: Poly, check: bool = True) -> FittingData:
        """Monic generator of Fitt_A(phi(A/PA)).

        Computed as the characteristic polynomial of the F_q-linear map
        m -> phi_theta(m) on A/PA in the basis 1, theta, ..., theta^(d-1),
        evaluated back at theta.  Degree-d monic; the Drinfeld analogue of
        the Fermat exponent, so phi_g(a) = 0 mod P for all a (spot-checked
        on three derived-seed bases before returning).
        """
        P = self._coerce(P)
        if not P.is_monic():
            raise ValueError("P must be monic")
        if check and not _factor.is_irreducible(P):
            raise ValueError("P must be irreducible")
        F = self.field
        d = P.degree
        theta = F.theta
        # theta^(q^j) mod P for j = 1..r
        frob = []
        w = theta % P
        for _ in range(self.rank):
            w = pow(w, F.q, P)
            frob.append(w)
        cols = []
        powers = [F.one for _ in range(self.rank)]  # powers[i] = theta^(col*q^(i+1)) mod P
        for col in range(d):
            if col:
                for i in range(self.rank):
                    powers[i] = (powers[i] * frob[i]) % P
            img = theta.shift(col) % P  # theta * theta^col
            for a_i, pw in zip(self.coeffs, powers):
                if not a_i.is_zero():
                    img = (img + a_i * pw) % P
            cols.append([img[i] for i in range(d)])
        matrix = [[cols[j][i] for j in range(d)] for i in range(d)]
        chi = charpoly(F, matrix)
        g = Poly(F, chi)
        if not (g.is_monic() and g.degree == d):
            raise InternalCheckError("Fitting generator is not monic of degree deg P")
        rng = random.Random(_derived_seed("fitting", F.modulus, F.q,
                                          tuple(c.coeffs for c in self.coeffs),
                                          P.coeffs))
        for _ in range(3):
            a = Poly(F, [rng.randrange(F.q) for _ in range(2 * d)])
            if not self.eval(g, a, mod=P).is_zero():
                raise InternalCheckError(
                    f"phi_g(a) != 0 mod P for P={P!r}; matrix construction is wrong")
        return FittingData(P=P, g=g, r=P - g)

    # -- torsion --------------------------------------------------------------------

    def growth_bound(self) -> Fraction:
        """M such that deg x > M forces deg phi_theta(x) = q^r deg x + deg a_r."""
        F = self.field
        qr = F.q ** self.rank
        best = Fraction(1, qr - 1)  # the tau^0 coefficient theta
        for i in range(1, self.rank):
            a_i = self.coeffs[i - 1]
            if not a_i.is_zero():
                cand = Fraction(a_i.degree, qr - F.q ** i)
                if cand > best:
                    best = cand
        return best

    def is_torsion(self, a) -> bool:
        """Whether phi_c(a) = 0 for some nonzero c.

        Iterates the theta-orbit: reaching 0 or revisiting a value means
        torsion; once the degree passes the growth bound it increases
        strictly forever, so the answer is no.  Always terminates.
        """
        a = self._coerce(a)
        M = self.growth_bound()
        seen = set()
        b = a
        while True:
            if b.is_zero():
                return True
            if b.degree > M:
                return False
            if b.coeffs in seen:
                return True
            seen.add(b.coeffs)
            b = self.apply_theta(b, guard=None)

    def exact_annihilator(self, a) -> Poly:
        """Monic generator of {c : phi_c(a) = 0} for a torsion point a."""
        a = self._coerce(a)
        if not self.is_torsion(a):
            raise ValueError("annihilator is zero for a non-torsion point")
        M = self.growth_bound()
        dim = int(M) + 1  # orbit degrees are bounded by M
        tracker = DependencyTracker(self.field)
        b = a
        while True:
            vec = [b[i] for i in range(dim)]
            combo = tracker.update(vec)
            if combo is not None:
                return Poly(self.field, combo)
            b = self.apply_theta(b, guard=None)

    # -- degree growth -----------------------------------------------------------------

    def degree_threshold(self) -> int:
        """Least c (from the closed-form construction) such that
        deg a > c implies deg phi_a(1) > deg a.  Base 1 only."""
        F = self.field
        one = F.one
        if self.is_torsion(one):
            raise ValueError("degree threshold undefined: 1 is a torsion point")
        M = self.growth_bound()
        t, n = one, 0
        while t.degree <= M:
            t = self.apply_theta(t, guard=None)
            n += 1
        N, D_N = n, t.degree
        qr = F.q ** self.rank
        c = Fraction(self.coeffs[-1].degree, qr - 1)
        n0 = 0
        while not (qr ** n0 * (D_N + c) - c > N + n0):
            n0 += 1
        return N + n0

    def degree_of_image_of_one(self, m: int) -> int:
        """deg phi_b(1) for any b of degree m >= the escape index N
        (the top digit dominates, so only deg b matters)."""
        F = self.field
        one = F.one
        if self.is_torsion(one):
            raise ValueError("undefined for torsion base 1")
        M = self.growth_bound()
        t, n = one, 0
        while t.degree <= M:
            t = self.apply_theta(t, guard=None)
            n += 1
        if m < n:
            raise ValueError(f"degree formula needs deg b >= {n}")
        qr = F.q ** self.rank
        c = Fraction(self.coeffs[-1].degree, qr - 1)
        val = qr ** (m - n) * (t.degree + c) - c
        assert val.denominator == 1
        return int(val)


def _derived_seed(*parts) -> int:
    h = hashlib.sha256()
    for part in parts:
        h.update(repr(part).encode())
        h.update(b"\x00")
    return int.from_bytes(h.digest()[:8], "big")
