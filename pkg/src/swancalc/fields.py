"""Exact arithmetic in prime fields and their small extensions.

Elements of F_{p^k} are encoded as integers in ``range(p**k)``: the integer
``sum(c_i * p**i)`` stands for the polynomial ``sum(c_i * x**i)`` reduced
modulo a deterministically chosen irreducible polynomial of degree k.  All
arithmetic goes through a :class:`FieldDescriptor`, which owns the defining
polynomial and (for small fields) discrete-log tables.
"""

from __future__ import annotations

from functools import lru_cache

_DLOG_TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs stay small here)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _int_to_digits(a: int, p: int, k: int) -> list[int]:
    digits = []
    for _ in range(k):
        digits.append(a % p)
        a //= p
    return digits


def _digits_to_int(digits, p: int) -> int:
    a = 0
    for c in reversed(digits):
        a = a * p + c
    return a


class FieldDescriptor:
    """The field F_{p^k} with a fixed defining polynomial.

    The defining polynomial is the first monic irreducible of degree k in the
    base-p integer ordering of coefficient vectors, so the same (p, k) always
    yields the same field.  Instances are interned: use :func:`make_field`.
    """

    def __init__(self, p: int, k: int, modulus_digits: tuple[int, ...]):
        self.p = p
        self.k = k
        self.order = p**k
        # modulus_digits lists c_0..c_{k-1} of x^k + c_{k-1} x^{k-1} + ... + c_0
        self.modulus_digits = modulus_digits
        self._exp: list[int] | None = None
        self._log: dict[int, int] | None = None
        self._gen: int | None = None
        if self.order <= _DLOG_TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers -------------------------------------------------

    def _build_tables(self) -> None:
        g = self.generator()
        exp = [1] * (self.order - 1)
        log = {1: 0}
        acc = 1
        for i in range(1, self.order - 1):
            acc = self.mul(acc, g)
            exp[i] = acc
            log[acc] = i
        self._exp, self._log = exp, log

    # -- element arithmetic (elements are ints in range(order)) ---------------

    def add(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (a + b) % p
        da = _int_to_digits(a, p, k)
        db = _int_to_digits(b, p, k)
        return _digits_to_int([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (-a) % p
        return _digits_to_int([(-x) % p for x in _int_to_digits(a, p, k)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            n = self.order - 1
            return self._exp[(self._log[a] + self._log[b]) % n]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        da = _int_to_digits(a, p, k)
        db = _int_to_digits(b, p, k)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo x^k = -(c_{k-1} x^{k-1} + ... + c_0)
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, m in enumerate(self.modulus_digits):
                    prod[i - k + j] = (prod[i - k + j] - c * m) % p
        return _digits_to_int(prod[:k], p)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._log is not None:
            n = self.order - 1
            return self._exp[(-self._log[a]) % n]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the rational integer n in the prime subfield."""
        return n % self.p

    def elements(self):
        return range(self.order)

    # -- multiplicative structure ---------------------------------------------

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        order = n
        for q in factorize(n):
            while order % q == 0 and self.pow(a, order // q) == 1:
                order //= q
        return order

    def generator(self) -> int:
        """Smallest generator of the multiplicative group (in int encoding)."""
        if self._gen is not None:
            return self._gen
        n = self.order - 1
        primes = list(factorize(n))
        for a in range(1, self.order):
            if all(self.pow(a, n // q) != 1 for q in primes):
                self._gen = a
                return a
        raise FieldError("no generator found (not a field?)")

    def dlog(self, a: int) -> int:
        """Discrete log base ``generator()``; table-backed for small fields."""
        if a == 0:
            raise FieldError("dlog of zero")
        if self._log is not None:
            return self._log[a]
        g = self.generator()
        acc = 1
        for i in range(self.order - 1):
            if acc == a:
                return i
            acc = self.mul(acc, g)
        raise FieldError("dlog failed")

    def nth_root(self, a: int, n: int):
        """Some n-th root of a in this field, or None if there is none."""
        if a == 0:
            return 0
        m = self.order - 1
        j = self.dlog(a)
        g = gcd = _gcd(n, m)
        if j % gcd != 0:
            return None
        # solve n*x = j mod m
        n_, j_, m_ = n // g, j // g, m // g
        x = (j_ * pow(n_, -1, m_)) % m_
        return self.pow(self.generator(), x)

    def pth_root(self, a: int) -> int:
        """The unique p-th root (inverse Frobenius); exists as F is perfect."""
        return self.pow(a, self.order // self.p)

    def trace_to_prime(self, a: int) -> int:
        """Absolute trace down to F_p, returned as an int mod p."""
        acc = a
        tot = a
        for _ in range(self.k - 1):
            acc = self.pow(acc, self.p)
            tot = self.add(tot, acc)
        return tot  # lies in the prime subfield => encoding < p

    # -- embeddings ------------------------------------------------------------

    def embedding_into(self, big: "FieldDescriptor"):
        """Return the canonical embedding F_{p^k} -> F_{p^(k*m)} as a callable.

        The image of x (the class of the variable) is the smallest root of the
        defining polynomial in the big field, so embeddings are deterministic.
        """
        if big.p != self.p or big.k % self.k != 0:
            raise FieldError("no embedding: incompatible field sizes")
        if big is self:
            return lambda a: a
        root = _embedding_root(self, big)

        def embed(a: int) -> int:
            digits = _int_to_digits(a, self.p, self.k)
            acc = 0
            for c in reversed(digits):
                acc = big.add(big.mul(acc, root), c)
            return acc

        return embed

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (make_field, (self.p, self.k))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def _embedding_root(small: FieldDescriptor, big: FieldDescriptor) -> int:
    digits = list(small.modulus_digits) + [1]
    for cand in range(big.order):
        acc = 0
        for c in reversed(digits):
            acc = big.add(big.mul(acc, cand), c)
        if acc == 0:
            return cand
    raise FieldError("defining polynomial has no root in the big field")


def _poly_is_irreducible(digits: list[int], p: int) -> bool:
    """Irreducibility of the monic poly x^k + sum digits[i] x^i over F_p.

    Uses the standard criterion: x^(p^k) = x mod f, and gcd(x^(p^(k/l)) - x, f)
    trivial for every prime l dividing k.
    """
    k = len(digits)
    if k == 1:
        return True

    def polymulmod(a, b):
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(len(prod) - 1, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j, m in enumerate(digits):
                    prod[i - k + j] = (prod[i - k + j] - c * m) % p
        out = prod[:k]
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def xq_pow(e: int):
        # x^(p^e) mod f by repeated p-th powering
        acc = [0, 1] if k > 1 else [0]
        for _ in range(e):
            result = [1]
            base = acc
            n = p
            while n:
                if n & 1:
                    result = polymulmod(result, base)
                base = polymulmod(base, base)
                n >>= 1
            acc = result
        return acc

    def polygcd(a, b):
        def trim(v):
            while v and v[-1] == 0:
                v.pop()
            return v

        a, b = trim(list(a)), trim(list(b))
        while b:
            # reduce a mod b
            while len(a) >= len(b):
                c = (a[-1] * pow(b[-1], -1, p)) % p
                shift = len(a) - len(b)
                for i, y in enumerate(b):
                    a[shift + i] = (a[shift + i] - c * y) % p
                trim(a)
                if not a:
                    break
            a, b = b, a
        return a if a else [0]

    full = xq_pow(k)
    minus_x = list(full)
    while len(minus_x) < 2:
        minus_x.append(0)
    minus_x[1] = (minus_x[1] - 1) % p
    if any(minus_x):
        return False
    for ell in factorize(k):
        part = xq_pow(k // ell)
        diff = list(part)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = polygcd(diff, digits + [1])
        if len(g) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldDescriptor:
    """Deterministic descriptor of F_{p^k}.

    Raises :class:`FieldError` for non-prime p or k outside 1..12.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if not 1 <= k <= 12:
        raise FieldError(f"extension degree {k} out of supported range 1..12")
    if k == 1:
        return FieldDescriptor(p, 1, (0,))
    for code in range(p**k):
        digits = _int_to_digits(code, p, k)
        if _poly_is_irreducible(digits, p):
            return FieldDescriptor(p, k, tuple(digits))
    raise FieldError("unreachable: no irreducible polynomial found")


# -- dense univariate polynomials over a FieldDescriptor ----------------------
#
# Coefficient lists are low-degree-first ints in the field encoding.  Only the
# handful of routines the rest of the package needs.


def poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(F: FieldDescriptor, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(F.add(x, y))
    return poly_trim(out)


def poly_scale(F: FieldDescriptor, a, c):
    return poly_trim([F.mul(x, c) for x in a])


def poly_mul(F: FieldDescriptor, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(out)


def poly_divmod(F: FieldDescriptor, a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, y))
        while a and a[-1] == 0:
            a.pop()
    return poly_trim(q), poly_trim(a)


def poly_gcd(F: FieldDescriptor, a, b):
    a, b = poly_trim(list(a)), poly_trim(list(b))
    while b:
        _, r = poly_divmod(F, a, b)
        a, b = b, r
    if a:
        a = poly_scale(F, a, F.inv(a[-1]))
    return a


def poly_derivative(F: FieldDescriptor, a):
    return poly_trim([F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def poly_eval(F: FieldDescriptor, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_roots(F: FieldDescriptor, a) -> list[int]:
    """All roots in F itself, by scan (fields here are small)."""
    return [x for x in F.elements() if poly_eval(F, a, x) == 0]


def poly_roots_with_multiplicity(F: FieldDescriptor, a) -> list[tuple[int, int]]:
    out = []
    for r in poly_roots(F, a):
        m = 0
        cur = list(a)
        while True:
            q, rem = poly_divmod(F, cur, [F.neg(r), 1])
            if rem:
                break
            m += 1
            cur = q
        out.append((r, m))
    return out
