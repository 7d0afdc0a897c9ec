"""Pure-Python arithmetic kernel for polynomials over F_q.

Polynomials are tuples of element codes in ascending degree order with no
trailing zeros; () is the zero polynomial.  Field arithmetic goes through
flat q*q lookup tables carried by the context, so the same code path works
for any supported q.  The compiled kernel (ckernel) exposes the identical
API; both are interchangeable behind drinfeld._kernel.
"""

NAME = "python"


class Ctx:
    __slots__ = ("p", "e", "q", "add", "mul", "neg", "inv")

    def __init__(self, p, e, q, add_tab, mul_tab, neg_tab, inv_tab):
        self.p = p
        self.e = e
        self.q = q
        self.add = add_tab
        self.mul = mul_tab
        self.neg = neg_tab
        self.inv = inv_tab


def make_context(p, e, q, add_tab, mul_tab, neg_tab, inv_tab):
    return Ctx(p, e, q, list(add_tab), list(mul_tab), list(neg_tab), list(inv_tab))


def elem_add(ctx, a, b):
    return ctx.add[a * ctx.q + b]


def elem_mul(ctx, a, b):
    return ctx.mul[a * ctx.q + b]


def elem_neg(ctx, a):
    return ctx.neg[a]


def elem_inv(ctx, a):
    if a == 0:
        raise ZeroDivisionError("inverse of zero field element")
    return ctx.inv[a]


def poly_add(ctx, f, g):
    if not f:
        return tuple(g)
    if not g:
        return tuple(f)
    q, add = ctx.q, ctx.add
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = add[out[i] * q + c]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_neg(ctx, f):
    neg = ctx.neg
    return tuple(neg[c] for c in f)


def poly_sub(ctx, f, g):
    return poly_add(ctx, f, poly_neg(ctx, g))


def poly_scale(ctx, f, c):
    if c == 0 or not f:
        return ()
    if c == 1:
        return tuple(f)
    q, mul = ctx.q, ctx.mul
    row = mul[c * q:(c + 1) * q]
    return tuple(row[x] for x in f)


def poly_mul(ctx, f, g):
    if not f or not g:
        return ()
    q, add, mul = ctx.q, ctx.add, ctx.mul
    if len(f) > len(g):
        f, g = g, f
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            row = mul[fi * q:(fi + 1) * q]
            for j, gj in enumerate(g):
                if gj:
                    k = i + j
                    out[k] = add[out[k] * q + row[gj]]
    # Leading coefficient is a product of nonzero elements, never zero.
    return tuple(out)


def poly_divmod(ctx, f, g):
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    nf, ng = len(f), len(g)
    if nf < ng:
        return (), tuple(f)
    q, add, mul, neg, inv = ctx.q, ctx.add, ctx.mul, ctx.neg, ctx.inv
    rem = list(f)
    ginv = inv[g[-1]]
    quo = [0] * (nf - ng + 1)
    for i in range(nf - ng, -1, -1):
        c = rem[i + ng - 1]
        if c:
            qc = mul[c * q + ginv]
            quo[i] = qc
            row = mul[neg[qc] * q:(neg[qc] + 1) * q]
            for j in range(ng - 1):
                gj = g[j]
                if gj:
                    k = i + j
                    rem[k] = add[rem[k] * q + row[gj]]
            rem[i + ng - 1] = 0
    del rem[ng - 1:]
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(quo), tuple(rem)


def poly_rem(ctx, f, g):
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    nf, ng = len(f), len(g)
    if nf < ng:
        return tuple(f)
    if ng == 1:
        return ()
    q, add, mul, neg, inv = ctx.q, ctx.add, ctx.mul, ctx.neg, ctx.inv
    rem = list(f)
    ginv = inv[g[-1]]
    for i in range(nf - ng, -1, -1):
        c = rem[i + ng - 1]
        if c:
            qc = mul[c * q + ginv]
            row = mul[neg[qc] * q:(neg[qc] + 1) * q]
            for j in range(ng - 1):
                gj = g[j]
                if gj:
                    k = i + j
                    rem[k] = add[rem[k] * q + row[gj]]
            rem[i + ng - 1] = 0
    del rem[ng - 1:]
    while rem and rem[-1] == 0:
        rem.pop()
    return tuple(rem)


def poly_mulmod(ctx, f, g, m):
    return poly_rem(ctx, poly_mul(ctx, f, g), m)


def poly_powmod(ctx, f, k, m):
    """f**k reduced mod m; k is any non-negative Python int."""
    if k < 0:
        raise ValueError("negative exponent")
    if not m:
        raise ZeroDivisionError("zero modulus")
    if len(m) == 1:
        return ()
    acc = (1,)
    base = poly_rem(ctx, f, m)
    while k:
        if k & 1:
            acc = poly_rem(ctx, poly_mul(ctx, acc, base), m)
        k >>= 1
        if k:
            base = poly_rem(ctx, poly_mul(ctx, base, base), m)
    return acc


def poly_make_monic(ctx, f):
    if not f:
        raise ValueError("zero polynomial has no monic normalization")
    lc = f[-1]
    if lc == 1:
        return tuple(f)
    return poly_scale(ctx, f, ctx.inv[lc])


def poly_gcd(ctx, f, g):
    """Monic gcd; gcd(f, 0) = monic(f).  Raises on gcd(0, 0)."""
    q, add, mul, neg, inv = ctx.q, ctx.add, ctx.mul, ctx.neg, ctx.inv
    a, b = list(f), list(g)
    while b:
        nb = len(b)
        binv = inv[b[-1]]
        if nb == 1:
            a = []
        else:
            for i in range(len(a) - nb, -1, -1):
                c = a[i + nb - 1]
                if c:
                    qc = mul[c * q + binv]
                    row = mul[neg[qc] * q:(neg[qc] + 1) * q]
                    for j in range(nb - 1):
                        bj = b[j]
                        if bj:
                            k = i + j
                            a[k] = add[a[k] * q + row[bj]]
                    a[i + nb - 1] = 0
            del a[nb - 1:]
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        raise ValueError("gcd(0, 0) is undefined")
    lc = a[-1]
    if lc != 1:
        li = inv[lc]
        row = mul[li * q:(li + 1) * q]
        a = [row[c] for c in a]
    return tuple(a)
