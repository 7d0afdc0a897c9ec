"""Finite fields F_q, q = p^e, in a polynomial basis over F_p.

Elements are plain integer codes in [0, q): the element sum(c_i x^i) has
code sum(c_i p^i), where x is the class of the modulus variable.  All
arithmetic goes through per-field lookup tables shared with the selected
kernel backend, which keeps q capped (desk scale) but makes every
operation a table lookup.

The modulus for (p, e) defaults to the lexicographically least monic
irreducible of degree e over F_p (ordered by the code of its non-leading
coefficients), so element codes are stable across runs and machines.
"""
from __future__ import annotations

import functools

from . import _kernel
from .errors import UnsupportedFieldError

TABLE_LIMIT = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_field_tables(p):
    add = [0] * (p * p)
    mul = [0] * (p * p)
    for a in range(p):
        for b in range(p):
            add[a * p + b] = (a + b) % p
            mul[a * p + b] = (a * b) % p
    neg = [(-a) % p for a in range(p)]
    inv = [0] * p
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)
    return add, mul, neg, inv


@functools.lru_cache(maxsize=None)
def _fp_ctx(p):
    """Bootstrap F_p context (pure-Python kernel) for modulus searching."""
    from ._kernel import pykernel

    return pykernel.make_context(p, 1, p, *_prime_field_tables(p))


def _fp_irreducible(p, coeffs) -> bool:
    """Trial-division irreducibility over F_p; coeffs ascending, monic."""
    from ._kernel import pykernel as K

    ctx = _fp_ctx(p)
    e = len(coeffs) - 1
    if e < 1:
        return False
    f = tuple(coeffs)
    for d in range(1, e // 2 + 1):
        for code in range(p ** d):
            g = [0] * (d + 1)
            c, i = code, 0
            while c:
                c, g[i] = divmod(c, p)[0], c % p
                i += 1
            g[d] = 1
            if not K.poly_rem(ctx, f, tuple(g)):
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, e: int) -> tuple:
    """Least monic irreducible of degree e over F_p (ascending coeffs)."""
    if e == 1:
        return (0, 1)
    for code in range(p ** e):
        coeffs = [0] * (e + 1)
        c, i = code, 0
        while c:
            coeffs[i] = c % p
            c //= p
            i += 1
        coeffs[e] = 1
        if _fp_irreducible(p, coeffs):
            return tuple(coeffs)
    raise AssertionError("no irreducible modulus found")  # unreachable


class FqField:
    """The field F_q with element codes 0..q-1 and table-driven arithmetic."""

    def __init__(self, p: int, e: int = 1, modulus=None, backend: str | None = None):
        if not _is_prime(p):
            raise UnsupportedFieldError(f"p = {p} is not prime")
        if e < 1:
            raise UnsupportedFieldError(f"e = {e} must be positive")
        q = p ** e
        if q > TABLE_LIMIT:
            raise UnsupportedFieldError(
                f"unsupported (p, e) = ({p}, {e}): q = {q} exceeds the table limit {TABLE_LIMIT}")
        if modulus is None:
            modulus = default_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise UnsupportedFieldError("field modulus must be monic of degree e")
            if not _fp_irreducible(p, modulus):
                raise UnsupportedFieldError("field modulus is not irreducible over F_p")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = modulus
        self._backend_name = backend
        self._kernel = _kernel.get_kernel(backend)
        self._build_tables()
        self._ctx = self._kernel.make_context(
            p, e, q, self._add_tab, self._mul_tab, self._neg_tab, self._inv_tab)

    # -- table construction -------------------------------------------------

    def _build_tables(self):
        p, e, q = self.p, self.e, self.q
        if e == 1:
            self._add_tab, self._mul_tab, self._neg_tab, self._inv_tab = \
                _prime_field_tables(p)
            if p == 2:
                self._exp = [1]
                self._log = [0, 0]
            else:
                g = 2
                while any(pow(g, (p - 1) // r, p) == 1
                          for r in _prime_divisors(p - 1)):
                    g += 1
                self._exp = [pow(g, k, p) for k in range(p - 1)]
                self._log = [0] * p
                for k, v in enumerate(self._exp):
                    self._log[v] = k
            return

        digits = [self._digits_raw(a) for a in range(q)]
        # multiplicative structure via a generator of F_q*
        order = q - 1
        gen = None
        for cand in range(2, q):
            x, n = cand, 1
            while x != 1:
                x = self._gen_free_mul(digits, x, cand)
                n += 1
                if n > order:
                    break
            if n == order:
                gen = cand
                break
        if gen is None:  # q == 2 handled above (e == 1); unreachable here
            raise AssertionError("no generator found")
        exp = [1] * order
        for k in range(1, order):
            exp[k] = self._gen_free_mul(digits, exp[k - 1], gen)
        log = [0] * q
        for k, v in enumerate(exp):
            log[v] = k
        self._exp, self._log = exp, log

        mul = [0] * (q * q)
        for a in range(1, q):
            la = log[a]
            row = a * q
            for b in range(1, q):
                mul[row + b] = exp[(la + log[b]) % order]
        add = [0] * (q * q)
        if p == 2:
            for a in range(q):
                row = a * q
                for b in range(q):
                    add[row + b] = a ^ b
            neg = list(range(q))
        else:
            powers = [p ** i for i in range(e)]
            for a in range(q):
                da = digits[a]
                row = a * q
                for b in range(q):
                    db = digits[b]
                    add[row + b] = sum(((da[i] + db[i]) % p) * powers[i]
                                       for i in range(e))
            neg = [sum(((-d) % p) * powers[i] for i, d in enumerate(digits[a]))
                   for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[(order - log[a]) % order]
        self._add_tab, self._mul_tab, self._neg_tab, self._inv_tab = add, mul, neg, inv

    def _gen_free_mul(self, digits, a, b):
        from ._kernel import pykernel as K

        ctx = _fp_ctx(self.p)
        fa = tuple(digits[a])
        fb = tuple(digits[b])
        while fa and fa[-1] == 0:
            fa = fa[:-1]
        while fb and fb[-1] == 0:
            fb = fb[:-1]
        prod = K.poly_mul(ctx, fa, fb) if fa and fb else ()
        return self._code(K.poly_rem(ctx, prod, self.modulus))

    def _digits_raw(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _digits(self, a):
        d = self._digits_raw(a)
        while d and d[-1] == 0:
            d.pop()
        return tuple(d)

    def _code(self, coeffs):
        c = 0
        for d in reversed(coeffs):
            c = c * self.p + d
        return c

    # -- element arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._add_tab[a * self.q + b]

    def sub(self, a: int, b: int) -> int:
        return self._add_tab[a * self.q + self._neg_tab[b]]

    def neg(self, a: int) -> int:
        return self._neg_tab[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul_tab[a * self.q + b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self._inv_tab[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        order = self.q - 1
        if order == 1:
            return 1
        return self._exp[(self._log[a] * (k % order)) % order]

    def pth_root(self, a: int) -> int:
        """Unique p-th root (inverse Frobenius x -> x^p)."""
        return self.pow(a, self.p ** (self.e - 1))

    def from_int(self, n: int) -> int:
        """Code of the image of the integer n (i.e. n mod p as a constant)."""
        return n % self.p

    def elements(self):
        return range(self.q)

    def element_str(self, a: int) -> str:
        return str(a)

    # -- polynomial ring entry points -----------------------------------------

    def poly(self, coeffs):
        from .poly import Poly

        return Poly(self, coeffs)

    @property
    def zero(self):
        return self.poly(())

    @property
    def one(self):
        return self.poly((1,))

    @property
    def theta(self):
        return self.poly((0, 1))

    # -- identity, pickling ---------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FqField)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __reduce__(self):
        return (field, (self.p, self.e, self.modulus, self._backend_name))

    def __repr__(self):
        return f"FqField(q={self.q}, p={self.p}, e={self.e})"


def _prime_divisors(n):
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


@functools.lru_cache(maxsize=None)
def _field_cached(p, e, modulus, backend):
    return FqField(p, e, modulus, backend)


def field(p: int, e: int = 1, modulus=None, backend: str | None = None) -> FqField:
    """Shared, cached field instance for (p, e, modulus, backend)."""
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _field_cached(p, e, modulus, backend)
