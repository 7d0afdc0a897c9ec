"""Univariate polynomials over F_q: the ring A = F_q[theta].

Immutable; coefficients are ascending element codes with no trailing zero,
so the zero polynomial has empty coefficients and degree -inf.  The
canonical total order compares degree first, then coefficient codes from
the top down; it drives every deterministic enumeration and record merge
in the package.
"""
from __future__ import annotations

import json

from .field import FqField

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FqField, coeffs=()):
        if isinstance(coeffs, Poly):
            coeffs = coeffs.coeffs
        coeffs = tuple(int(c) for c in coeffs)
        q = field.q
        for c in coeffs:
            if not 0 <= c < q:
                raise ValueError(f"coefficient code {c} out of range for q={q}")
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, field, coeffs):
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, int):
            # integers embed through Z -> F_p <= F_q
            c = other % self.field.p
            return Poly._raw(self.field, (c,) if c else ())
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        K, ctx = self.field._kernel, self.field._ctx
        return Poly._raw(self.field, K.poly_add(ctx, self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        K, ctx = self.field._kernel, self.field._ctx
        return Poly._raw(self.field, K.poly_sub(ctx, self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        K, ctx = self.field._kernel, self.field._ctx
        return Poly._raw(self.field, K.poly_neg(ctx, self.coeffs))

    def __mul__(self, other):
        K, ctx = self.field._kernel, self.field._ctx
        if isinstance(other, int):
            other = self._coerce(other)
            c = other.coeffs[0] if other.coeffs else 0
            return Poly._raw(self.field, K.poly_scale(ctx, self.coeffs, c))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._raw(self.field, K.poly_mul(ctx, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        K, ctx = self.field._kernel, self.field._ctx
        qq, rr = K.poly_divmod(ctx, self.coeffs, other.coeffs)
        return Poly._raw(self.field, qq), Poly._raw(self.field, rr)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        K, ctx = self.field._kernel, self.field._ctx
        return Poly._raw(self.field, K.poly_rem(ctx, self.coeffs, other.coeffs))

    def __pow__(self, k: int, mod=None):
        if k < 0:
            raise ValueError("negative exponent")
        K, ctx = self.field._kernel, self.field._ctx
        if mod is not None:
            mod = self._coerce(mod)
            return Poly._raw(self.field, K.poly_powmod(ctx, self.coeffs, k, mod.coeffs))
        result = Poly._raw(self.field, (1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self) -> "Poly":
        K, ctx = self.field._kernel, self.field._ctx
        return Poly._raw(self.field, K.poly_make_monic(ctx, self.coeffs))

    def scale(self, c: int) -> "Poly":
        K, ctx = self.field._kernel, self.field._ctx
        return Poly._raw(self.field, K.poly_scale(ctx, self.coeffs, c))

    def shift(self, k: int) -> "Poly":
        """Multiply by theta^k."""
        if not self.coeffs or k == 0:
            return self
        return Poly._raw(self.field, (0,) * k + self.coeffs)

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for j in range(1, len(self.coeffs)):
            out.append(F.mul(self.coeffs[j], j % F.p))
        while out and out[-1] == 0:
            out.pop()
        return Poly._raw(F, tuple(out))

    def evaluate(self, x: int) -> int:
        """Value at the field element with code x (Horner)."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def qpow(self, i: int) -> "Poly":
        """Ring power self**(q^i), computed by coefficient spreading.

        Valid because x -> x^q is the identity on F_q and a ring
        endomorphism of A, so f(theta)^(q^i) = f(theta^(q^i)).
        """
        if i == 0 or not self.coeffs:
            return self
        stride = self.field.q ** i
        out = [0] * ((len(self.coeffs) - 1) * stride + 1)
        for j, c in enumerate(self.coeffs):
            out[j * stride] = c
        return Poly._raw(self.field, tuple(out))

    def pth_root(self):
        """Inverse of x -> x^p on A, or None when self is not a p-th power."""
        F = self.field
        p = F.p
        if not self.coeffs:
            return self
        out = []
        for j, c in enumerate(self.coeffs):
            if j % p == 0:
                out.append(F.pth_root(c))
            elif c:
                return None
        return Poly._raw(F, tuple(out))

    # -- ordering, hashing, text ----------------------------------------------

    def sort_key(self):
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            o = self._coerce(other)
            return self.coeffs == o.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __reduce__(self):
        return (Poly, (self.field, self.coeffs))

    def _cmp_check(self, other):
        if not isinstance(other, Poly) or other.field != self.field:
            raise TypeError("cannot order polynomials over different fields")

    def __lt__(self, other):
        self._cmp_check(other)
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        self._cmp_check(other)
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        self._cmp_check(other)
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        self._cmp_check(other)
        return self.sort_key() >= other.sort_key()

    def to_codes(self) -> list:
        return list(self.coeffs)

    def text(self) -> str:
        """Canonical text form: ascending code list, e.g. "[1,0,1]"."""
        return json.dumps(list(self.coeffs), separators=(",", ":"))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                var = "θ" if j == 1 else f"θ^{j}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return " + ".join(terms)


def from_text(field: FqField, text: str) -> Poly:
    """Parse the canonical "[c0,c1,...]" form."""
    codes = json.loads(text)
    if not isinstance(codes, list):
        raise ValueError(f"not a coefficient list: {text!r}")
    return Poly(field, codes)


def xgcd(f: Poly, g: Poly):
    """Extended gcd: returns (d, u, v) with d monic and u*f + v*g = d."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = F.one, F.zero
    t0, t1 = F.zero, F.one
    while not r1.is_zero():
        qq, rr = divmod(r0, r1)
        r0, r1 = r1, rr
        s0, s1 = s1, s0 - qq * s1
        t0, t1 = t1, t0 - qq * t1
    if r0.is_zero():
        raise ValueError("xgcd(0, 0) is undefined")
    lc_inv = F.inv(r0.leading)
    return r0.scale(lc_inv), s0.scale(lc_inv), t0.scale(lc_inv)


def invmod(f: Poly, m: Poly) -> Poly:
    """Inverse of f modulo m; raises ZeroDivisionError when gcd(f, m) != 1."""
    d, u, _ = xgcd(f, m)
    if not d.is_one():
        raise ZeroDivisionError(f"{f!r} is not invertible modulo {m!r}")
    return u % m


def monic_of_degree(field: FqField, d: int):
    """All monic polynomials of degree d, in canonical order."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    q = field.q
    for code in range(q ** d):
        coeffs = [0] * (d + 1)
        c, i = code, 0
        while c:
            coeffs[i] = c % q
            c //= q
            i += 1
        coeffs[d] = 1
        yield Poly._raw(field, tuple(coeffs))


def all_nonzero_up_to_degree(field: FqField, d: int):
    """Every nonzero polynomial of degree <= d, in canonical order."""
    q = field.q
    for deg in range(d + 1):
        for lead in range(1, q):
            for code in range(q ** deg):
                coeffs = [0] * (deg + 1)
                c, i = code, 0
                while c:
                    coeffs[i] = c % q
                    c //= q
                    i += 1
                coeffs[deg] = lead
                yield Poly._raw(field, tuple(coeffs))


def random_poly(field: FqField, rng, degree: int, monic: bool = False) -> Poly:
    """Uniform polynomial of exactly the given degree (rng: random.Random)."""
    if degree < 0:
        return field.zero
    coeffs = [rng.randrange(field.q) for _ in range(degree)]
    coeffs.append(1 if monic else rng.randrange(1, field.q))
    return Poly(field, coeffs)
