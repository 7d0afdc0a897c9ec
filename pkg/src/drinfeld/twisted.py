"""Twisted (Ore) polynomials A{tau} with the commutation rule tau*a = a^q*tau.

tau acts on A as the q-power Frobenius.  Coefficients are stored on the
left: f = sum f_i tau^i, and the product picks up Frobenius twists,
(f*g)_k = sum_{i+j=k} f_i * g_j^(q^i).
"""
from __future__ import annotations

from .field import FqField
from .poly import Poly


class TwistedPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FqField, coeffs=()):
        cleaned = []
        for c in coeffs:
            if not isinstance(c, Poly):
                c = Poly(field, c)
            elif c.field != field:
                raise ValueError("coefficient over a different field")
            cleaned.append(c)
        while cleaned and cleaned[-1].is_zero():
            cleaned.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cleaned))

    def __setattr__(self, *a):
        raise AttributeError("TwistedPoly is immutable")

    @classmethod
    def constant(cls, poly: Poly) -> "TwistedPoly":
        return cls(poly.field, (poly,))

    @property
    def tau_degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Poly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _check(self, other):
        if not isinstance(other, TwistedPoly) or other.field != self.field:
            raise TypeError("expected a twisted polynomial over the same field")

    def __add__(self, other):
        if isinstance(other, Poly):
            other = TwistedPoly.constant(other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return TwistedPoly(self.field, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        if isinstance(other, Poly):
            other = TwistedPoly.constant(other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return TwistedPoly(self.field, [self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return TwistedPoly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Poly):
            other = TwistedPoly.constant(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return TwistedPoly(self.field, ())
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, fi in enumerate(self.coeffs):
            if fi.is_zero():
                continue
            for j, gj in enumerate(other.coeffs):
                if not gj.is_zero():
                    out[i + j] = out[i + j] + fi * gj.qpow(i)
        return TwistedPoly(self.field, out)

    def scale(self, c: int) -> "TwistedPoly":
        return TwistedPoly(self.field, [f.scale(c) for f in self.coeffs])

    def __call__(self, a: Poly) -> Poly:
        """Evaluate: tau^i acts as a -> a^(q^i)."""
        out = self.field.zero
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                out = out + c * a.qpow(i)
        return out

    def __eq__(self, other):
        return (isinstance(other, TwistedPoly)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            if i == 0:
                terms.append(f"({c!r})")
            else:
                tau = "τ" if i == 1 else f"τ^{i}"
                terms.append(tau if c.is_one() else f"({c!r})·{tau}")
        return " + ".join(terms)
