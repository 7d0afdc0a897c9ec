# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel; same API and conventions as pykernel."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

NAME = "c"


cdef class Ctx:
    cdef public int p, e, q
    cdef int *add
    cdef int *mul
    cdef int *neg
    cdef int *inv

    def __cinit__(self, int p, int e, int q, add_tab, mul_tab, neg_tab, inv_tab):
        cdef Py_ssize_t i, n2 = <Py_ssize_t> q * q
        self.p = p
        self.e = e
        self.q = q
        self.add = <int *> PyMem_Malloc(n2 * sizeof(int))
        self.mul = <int *> PyMem_Malloc(n2 * sizeof(int))
        self.neg = <int *> PyMem_Malloc(q * sizeof(int))
        self.inv = <int *> PyMem_Malloc(q * sizeof(int))
        if self.add == NULL or self.mul == NULL or self.neg == NULL or self.inv == NULL:
            raise MemoryError()
        for i in range(n2):
            self.add[i] = add_tab[i]
            self.mul[i] = mul_tab[i]
        for i in range(q):
            self.neg[i] = neg_tab[i]
            self.inv[i] = inv_tab[i]

    def __dealloc__(self):
        PyMem_Free(self.add)
        PyMem_Free(self.mul)
        PyMem_Free(self.neg)
        PyMem_Free(self.inv)


def make_context(p, e, q, add_tab, mul_tab, neg_tab, inv_tab):
    return Ctx(p, e, q, add_tab, mul_tab, neg_tab, inv_tab)


cdef int *_load(object f, Py_ssize_t *n) except? NULL:
    cdef Py_ssize_t i, m = len(f)
    cdef int *buf
    n[0] = m
    if m == 0:
        return NULL
    buf = <int *> PyMem_Malloc(m * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(m):
        buf[i] = f[i]
    return buf


cdef tuple _dump(int *buf, Py_ssize_t n):
    # trims trailing zeros
    while n > 0 and buf[n - 1] == 0:
        n -= 1
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = buf[i]
    return tuple(out)


def elem_add(Ctx ctx, int a, int b):
    return ctx.add[a * ctx.q + b]


def elem_mul(Ctx ctx, int a, int b):
    return ctx.mul[a * ctx.q + b]


def elem_neg(Ctx ctx, int a):
    return ctx.neg[a]


def elem_inv(Ctx ctx, int a):
    if a == 0:
        raise ZeroDivisionError("inverse of zero field element")
    return ctx.inv[a]


def poly_add(Ctx ctx, f, g):
    cdef Py_ssize_t nf, ng, i
    cdef int *a = _load(f, &nf)
    cdef int *b = _load(g, &ng)
    cdef int *add = ctx.add
    cdef int q = ctx.q
    cdef Py_ssize_t n = nf if nf > ng else ng
    cdef int *out = <int *> PyMem_Malloc((n if n else 1) * sizeof(int))
    if out == NULL:
        PyMem_Free(a); PyMem_Free(b)
        raise MemoryError()
    try:
        for i in range(n):
            out[i] = add[(a[i] if i < nf else 0) * q + (b[i] if i < ng else 0)]
        return _dump(out, n)
    finally:
        PyMem_Free(a); PyMem_Free(b); PyMem_Free(out)


def poly_neg(Ctx ctx, f):
    cdef Py_ssize_t nf, i
    cdef int *a = _load(f, &nf)
    cdef int *neg = ctx.neg
    try:
        for i in range(nf):
            a[i] = neg[a[i]]
        return _dump(a, nf)
    finally:
        PyMem_Free(a)


def poly_sub(Ctx ctx, f, g):
    return poly_add(ctx, f, poly_neg(ctx, g))


def poly_scale(Ctx ctx, f, int c):
    cdef Py_ssize_t nf, i
    if c == 0:
        return ()
    cdef int *a = _load(f, &nf)
    cdef int *row = ctx.mul + c * ctx.q
    try:
        for i in range(nf):
            a[i] = row[a[i]]
        return _dump(a, nf)
    finally:
        PyMem_Free(a)


cdef void _mul_into(Ctx ctx, int *a, Py_ssize_t na, int *b, Py_ssize_t nb,
                    int *out) noexcept:
    # out must have length na + nb - 1, caller zeroes it
    cdef Py_ssize_t i, j, k
    cdef int fi
    cdef int q = ctx.q
    cdef int *add = ctx.add
    cdef int *mul = ctx.mul
    cdef int *row
    for i in range(na):
        fi = a[i]
        if fi:
            row = mul + fi * q
            for j in range(nb):
                if b[j]:
                    k = i + j
                    out[k] = add[out[k] * q + row[b[j]]]


def poly_mul(Ctx ctx, f, g):
    cdef Py_ssize_t nf, ng, i
    if len(f) == 0 or len(g) == 0:
        return ()
    cdef int *a = _load(f, &nf)
    cdef int *b = _load(g, &ng)
    cdef Py_ssize_t n = nf + ng - 1
    cdef int *out = <int *> PyMem_Malloc(n * sizeof(int))
    if out == NULL:
        PyMem_Free(a); PyMem_Free(b)
        raise MemoryError()
    for i in range(n):
        out[i] = 0
    try:
        _mul_into(ctx, a, nf, b, ng, out)
        return _dump(out, n)
    finally:
        PyMem_Free(a); PyMem_Free(b); PyMem_Free(out)


cdef Py_ssize_t _rem_inplace(Ctx ctx, int *a, Py_ssize_t na, int *b, Py_ssize_t nb,
                             int *quo) noexcept:
    # reduces a mod b in place, returns trimmed remainder length;
    # quo may be NULL; b nonzero, nb >= 1
    cdef Py_ssize_t i, j, k
    cdef int c, qc
    cdef int q = ctx.q
    cdef int *add = ctx.add
    cdef int *mul = ctx.mul
    cdef int *neg = ctx.neg
    cdef int binv = ctx.inv[b[nb - 1]]
    cdef int *row
    for i in range(na - nb, -1, -1):
        c = a[i + nb - 1]
        if c:
            qc = mul[c * q + binv]
            if quo != NULL:
                quo[i] = qc
            row = mul + neg[qc] * q
            for j in range(nb - 1):
                if b[j]:
                    k = i + j
                    a[k] = add[a[k] * q + row[b[j]]]
            a[i + nb - 1] = 0
    cdef Py_ssize_t n = nb - 1
    if na < n:
        n = na
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return n


def poly_divmod(Ctx ctx, f, g):
    cdef Py_ssize_t nf, ng, nr, i
    if len(g) == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if len(f) < len(g):
        return (), tuple(f)
    cdef int *a = _load(f, &nf)
    cdef int *b = _load(g, &ng)
    cdef Py_ssize_t nq = nf - ng + 1
    cdef int *quo = <int *> PyMem_Malloc(nq * sizeof(int))
    if quo == NULL:
        PyMem_Free(a); PyMem_Free(b)
        raise MemoryError()
    for i in range(nq):
        quo[i] = 0
    try:
        nr = _rem_inplace(ctx, a, nf, b, ng, quo)
        return _dump(quo, nq), _dump(a, nr)
    finally:
        PyMem_Free(a); PyMem_Free(b); PyMem_Free(quo)


def poly_rem(Ctx ctx, f, g):
    cdef Py_ssize_t nf, ng, nr
    if len(g) == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if len(f) < len(g):
        return tuple(f)
    cdef int *a = _load(f, &nf)
    cdef int *b = _load(g, &ng)
    try:
        nr = _rem_inplace(ctx, a, nf, b, ng, NULL)
        return _dump(a, nr)
    finally:
        PyMem_Free(a); PyMem_Free(b)


def poly_mulmod(Ctx ctx, f, g, m):
    cdef Py_ssize_t nf, ng, nm, n, nr, i
    if len(m) == 0:
        raise ZeroDivisionError("zero modulus")
    if len(f) == 0 or len(g) == 0:
        return ()
    cdef int *a = _load(f, &nf)
    cdef int *b = _load(g, &ng)
    cdef int *mm = _load(m, &nm)
    n = nf + ng - 1
    cdef int *out = <int *> PyMem_Malloc(n * sizeof(int))
    if out == NULL:
        PyMem_Free(a); PyMem_Free(b); PyMem_Free(mm)
        raise MemoryError()
    for i in range(n):
        out[i] = 0
    try:
        _mul_into(ctx, a, nf, b, ng, out)
        if n >= nm:
            nr = _rem_inplace(ctx, out, n, mm, nm, NULL)
        else:
            nr = n
            while nr > 0 and out[nr - 1] == 0:
                nr -= 1
        return _dump(out, nr)
    finally:
        PyMem_Free(a); PyMem_Free(b); PyMem_Free(mm); PyMem_Free(out)


def poly_powmod(Ctx ctx, f, k, m):
    if k < 0:
        raise ValueError("negative exponent")
    if len(m) == 0:
        raise ZeroDivisionError("zero modulus")
    if len(m) == 1:
        return ()
    acc = (1,)
    base = poly_rem(ctx, f, m)
    while k:
        if k & 1:
            acc = poly_mulmod(ctx, acc, base, m)
        k >>= 1
        if k:
            base = poly_mulmod(ctx, base, base, m)
    return acc


def poly_make_monic(Ctx ctx, f):
    if len(f) == 0:
        raise ValueError("zero polynomial has no monic normalization")
    cdef int lc = f[len(f) - 1]
    if lc == 1:
        return tuple(f)
    return poly_scale(ctx, f, ctx.inv[lc])


def poly_gcd(Ctx ctx, f, g):
    cdef Py_ssize_t na, nb, nr
    cdef int *a = _load(f, &na)
    cdef int *b = _load(g, &nb)
    cdef int *t
    cdef Py_ssize_t nt
    cdef int lc, li, i
    cdef int *row
    try:
        while nb > 0:
            if na >= nb:
                nr = _rem_inplace(ctx, a, na, b, nb, NULL)
            else:
                nr = na
            t = a; a = b; b = t
            nt = nb; na = nt; nb = nr
        if na == 0:
            raise ValueError("gcd(0, 0) is undefined")
        lc = a[na - 1]
        if lc != 1:
            li = ctx.inv[lc]
            row = ctx.mul + li * ctx.q
            for i in range(na):
                a[i] = row[a[i]]
        return _dump(a, na)
    finally:
        PyMem_Free(a)
        PyMem_Free(b)
