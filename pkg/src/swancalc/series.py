"""Truncated Laurent series with explicit precision tracking.

A :class:`LaurentSeries` over a :class:`~swancalc.fields.FieldDescriptor`
stores a window of known coefficients ``coeffs[i]`` for the exponents
``val + i`` together with an absolute bound: the series is known modulo
O(s^bound).  ``bound = None`` means the series is exact (a Laurent
polynomial).  Arithmetic never reports a coefficient beyond the joint
precision of its operands, and the leading stored coefficient is nonzero
unless the series is (known to be) zero.

Precision discipline: consumers that need an order or a leading coefficient
of a series that is zero on its whole known window get a
:class:`PrecisionError`; higher layers rerun at doubled precision and raise
:class:`UnstablePrecisionError` if the two runs disagree.
"""

from __future__ import annotations

from .fields import FieldDescriptor


class PrecisionError(ArithmeticError):
    """A requested quantity is not determined at the working precision."""


class UnstablePrecisionError(ArithmeticError):
    """Doubling the working precision changed a reported result."""


class LaurentSeries:
    __slots__ = ("field", "val", "coeffs", "bound")

    def __init__(self, field: FieldDescriptor, val: int, coeffs, bound=None):
        self.field = field
        coeffs = list(coeffs)
        if bound is not None:
            # drop anything at or beyond the bound
            if val + len(coeffs) > bound:
                coeffs = coeffs[: max(0, bound - val)]
        # normalize: strip leading zeros
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            val = 0
        self.field = field
        self.val = val
        self.coeffs = tuple(coeffs)
        self.bound = bound

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(field, bound=None) -> "LaurentSeries":
        return LaurentSeries(field, 0, (), bound)

    @staticmethod
    def one(field) -> "LaurentSeries":
        return LaurentSeries(field, 0, (1,))

    @staticmethod
    def constant(field, c: int) -> "LaurentSeries":
        return LaurentSeries(field, 0, (c,))

    @staticmethod
    def monomial(field, c: int, exp: int) -> "LaurentSeries":
        return LaurentSeries(field, exp, (c,))

    @staticmethod
    def variable(field) -> "LaurentSeries":
        return LaurentSeries(field, 1, (1,))

    # -- basic queries ----------------------------------------------------------

    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.bound is None

    def is_known_zero(self) -> bool:
        """Zero on the whole known window (may hide higher terms if bounded)."""
        return not self.coeffs

    def order(self) -> int:
        """Exact valuation.  Raises PrecisionError when not determined."""
        if self.coeffs:
            return self.val
        if self.bound is None:
            raise PrecisionError("order of the exact zero series is undefined")
        raise PrecisionError(
            f"series is 0 up to O(s^{self.bound}); order not determined"
        )

    def leading_coefficient(self) -> int:
        self.order()
        return self.coeffs[0]

    def coefficient(self, exp: int) -> int:
        if self.bound is not None and exp >= self.bound:
            raise PrecisionError(f"coefficient of s^{exp} beyond O(s^{self.bound})")
        if not self.coeffs or exp < self.val or exp >= self.val + len(self.coeffs):
            return 0
        return self.coeffs[exp - self.val]

    def known_bound(self) -> int | None:
        return self.bound

    def truncate(self, bound: int) -> "LaurentSeries":
        nb = bound if self.bound is None else min(self.bound, bound)
        return LaurentSeries(self.field, self.val, self.coeffs, nb)

    # -- ring operations --------------------------------------------------------

    def _joint_bound_add(self, other) -> int | None:
        if self.bound is None:
            return other.bound
        if other.bound is None:
            return self.bound
        return min(self.bound, other.bound)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        F = self.field
        bound = self._joint_bound_add(other)
        if not self.coeffs:
            return LaurentSeries(F, other.val, other.coeffs, bound)
        if not other.coeffs:
            return LaurentSeries(F, self.val, self.coeffs, bound)
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        if bound is not None:
            hi = min(hi, bound)
        out = [0] * max(0, hi - lo)
        for i, c in enumerate(self.coeffs):
            e = self.val + i
            if e < hi:
                out[e - lo] = c
        for i, c in enumerate(other.coeffs):
            e = other.val + i
            if e < hi:
                out[e - lo] = F.add(out[e - lo], c)
        return LaurentSeries(F, lo, out, bound)

    def __neg__(self) -> "LaurentSeries":
        F = self.field
        return LaurentSeries(F, self.val, [F.neg(c) for c in self.coeffs], self.bound)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def _effective_val(self) -> int:
        # valuation lower bound usable in multiplication bookkeeping
        if self.coeffs:
            return self.val
        if self.bound is not None:
            return self.bound
        return 0  # exact zero: irrelevant, product is exact zero

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        F = self.field
        if self.is_exact_zero() or other.is_exact_zero():
            return LaurentSeries.zero(F)
        bound = None
        if self.bound is not None:
            bound = self.bound + other._effective_val()
        if other.bound is not None:
            b2 = other.bound + self._effective_val()
            bound = b2 if bound is None else min(bound, b2)
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(F, bound)
        n_out = len(self.coeffs) + len(other.coeffs) - 1
        v_out = self.val + other.val
        if bound is not None:
            n_out = min(n_out, bound - v_out)
        out = [0] * max(0, n_out)
        for i, x in enumerate(self.coeffs):
            if x == 0 or i >= n_out:
                continue
            jmax = min(len(other.coeffs), n_out - i)
            for j in range(jmax):
                y = other.coeffs[j]
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        return LaurentSeries(F, v_out, out, bound)

    def scale(self, c: int) -> "LaurentSeries":
        F = self.field
        if c == 0:
            return LaurentSeries.zero(F, self.bound)
        return LaurentSeries(F, self.val, [F.mul(c, x) for x in self.coeffs], self.bound)

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by s^n."""
        b = None if self.bound is None else self.bound + n
        return LaurentSeries(self.field, self.val + n, self.coeffs, b)

    def inverse(self, window: int | None = None) -> "LaurentSeries":
        """Multiplicative inverse.

        For an exact series the relative window defaults to DEFAULT_PRECISION;
        for a bounded series the known relative window is preserved.
        """
        F = self.field
        if self.is_known_zero():
            raise ZeroDivisionError("inverse of a series with no known terms")
        v = self.val
        rel = len(self.coeffs) if self.bound is None else self.bound - self.val
        if window is not None:
            rel = window if self.bound is None else min(rel, window)
        elif self.bound is None:
            rel = max(rel, DEFAULT_PRECISION)
        rel = max(rel, 1)
        a0inv = F.inv(self.coeffs[0])
        out = [0] * rel
        out[0] = a0inv
        for n in range(1, rel):
            acc = 0
            for i in range(1, min(n, len(self.coeffs) - 1) + 1):
                ai = self.coeffs[i] if i < len(self.coeffs) else 0
                if ai:
                    acc = F.add(acc, F.mul(ai, out[n - i]))
            out[n] = F.neg(F.mul(a0inv, acc))
        bound = None if self.bound is None and window is None else -v + rel
        return LaurentSeries(F, -v, out, bound)

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        if other.is_exact_zero():
            raise ZeroDivisionError("division by the exact zero series")
        return self * other.inverse()

    def pow(self, n: int) -> "LaurentSeries":
        if n < 0:
            return self.inverse().pow(-n)
        result = LaurentSeries.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus / composition --------------------------------------------------

    def derivative(self) -> "LaurentSeries":
        F = self.field
        out = []
        v = self.val
        for i, c in enumerate(self.coeffs):
            e = v + i
            out.append(F.mul(F.from_int(e % F.p), c))
        b = None if self.bound is None else self.bound - 1
        return LaurentSeries(F, v - 1, out, b)

    def compose(self, inner: "LaurentSeries") -> "LaurentSeries":
        """self(inner); requires the inner series to have positive order."""
        F = self.field
        if inner.is_known_zero():
            if inner.is_exact_zero():
                raise ValueError("composition with the zero series")
            raise PrecisionError("inner series has no known terms")
        w = inner.order()
        if w <= 0:
            raise ValueError("composition requires positive valuation")
        # resulting absolute bound
        bound = None
        if self.bound is not None:
            bound = self.bound * w
        if inner.bound is not None:
            shift = (self.val - 1) * w if self.val < 1 else 0
            b2 = inner.bound + shift
            bound = b2 if bound is None else min(bound, b2)
        if not self.coeffs:
            return LaurentSeries.zero(F, bound)
        inner_t = inner if bound is None else inner.truncate(bound)
        # positive part by Horner down to exponent 0, negative part via
        # inverse powers of the inner series
        pos = LaurentSeries.zero(F)
        neg = LaurentSeries.zero(F)
        v = self.val
        top = v + len(self.coeffs) - 1
        e = top
        while e >= 0:
            c = self.coefficient(e) if e >= v else 0
            pos = pos * inner_t + LaurentSeries.constant(F, c)
            e -= 1
        if v < 0:
            inv = inner_t.inverse()
            acc = inv
            for e in range(-1, v - 1, -1):
                c = self.coefficient(e)
                if c:
                    neg = neg + acc.scale(c)
                if e > v:
                    acc = acc * inv
        out = pos + neg
        if bound is not None:
            out = out.truncate(bound)
        return out

    def nth_root(self, n: int, window: int | None = None) -> "LaurentSeries":
        """An n-th root, for n prime to the characteristic.

        Requires n | order and an n-th root of the leading coefficient in the
        coefficient field.  Hensel iteration on y^n - self = 0.
        """
        F = self.field
        if n % F.p == 0:
            raise ValueError("nth_root requires n prime to the characteristic")
        v = self.order()
        if v % n != 0:
            raise ValueError("order not divisible by n")
        lead = F.nth_root(self.coeffs[0], n)
        if lead is None:
            raise ValueError("leading coefficient has no n-th root in the field")
        rel = (len(self.coeffs) if self.bound is None else self.bound - self.val)
        if window is not None:
            rel = min(rel, window) if self.bound is not None else window
        elif self.bound is None:
            rel = max(rel, DEFAULT_PRECISION)
        unit = self.shift(-v)
        y = LaurentSeries.constant(F, lead)
        n_inv = F.inv(F.from_int(n % F.p))
        # Newton: y <- y - (y^n - unit) / (n y^(n-1)).  The iterate is carried
        # as an exact polynomial candidate; accuracy doubles each round.
        cur = 1
        while cur < rel:
            cur = min(2 * cur, rel)
            err = (y.pow(n) - unit).truncate(cur)
            corr = (err * y.pow(n - 1).inverse(cur).scale(n_inv)).truncate(cur)
            step = y - corr
            y = LaurentSeries(F, step.val, step.coeffs, None).truncate(cur)
            y = LaurentSeries(F, y.val, y.coeffs, None)
        bnd = None if (self.bound is None and window is None) else rel
        root = LaurentSeries(F, y.val, y.coeffs, bnd).shift(v // n)
        return root

    def pth_root(self) -> "LaurentSeries":
        """Inverse Frobenius; requires every stored exponent divisible by p."""
        F = self.field
        p = F.p
        out_val = None
        out: dict[int, int] = {}
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.val + i
            if e % p != 0:
                raise ValueError("series is not a p-th power at this precision")
            out[e // p] = F.pth_root(c)
        if not out:
            b = None if self.bound is None else -(-self.bound // p)
            return LaurentSeries.zero(F, b)
        lo = min(out)
        hi = max(out)
        coeffs = [out.get(e, 0) for e in range(lo, hi + 1)]
        b = None if self.bound is None else -(-self.bound // p)
        return LaurentSeries(F, lo, coeffs, b)

    # -- comparisons / display -----------------------------------------------------

    def same_series(self, other: "LaurentSeries") -> bool:
        """Equality on the overlap of the known windows."""
        hi = None
        for b in (self.bound, other.bound):
            if b is not None:
                hi = b if hi is None else min(hi, b)
        lo_candidates = [s.val for s in (self, other) if s.coeffs]
        if not lo_candidates:
            return True
        lo = min(lo_candidates)
        if hi is None:
            hi = max(
                s.val + len(s.coeffs) for s in (self, other) if s.coeffs
            )
        for e in range(lo, hi):
            a = self.coeffs[e - self.val] if self.coeffs and self.val <= e < self.val + len(self.coeffs) else 0
            b = other.coeffs[e - other.val] if other.coeffs and other.val <= e < other.val + len(other.coeffs) else 0
            if a != b:
                return False
        return True

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*s^{self.val + i}")
        body = " + ".join(terms) if terms else "0"
        tail = "" if self.bound is None else f" + O(s^{self.bound})"
        return body + tail


DEFAULT_PRECISION = 64


def series_op(a: LaurentSeries, b: LaurentSeries, op: str) -> LaurentSeries:
    """Dispatcher covering add/mul/div/compose on truncated series."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "compose":
        return a.compose(b)
    raise ValueError(f"unknown series op {op!r}")
