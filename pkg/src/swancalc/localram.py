"""Local ramification theory over k((u)) for Kummer / Artin-Schreier towers.

Every extension handled here is totally ramified over its base (residue
extensions are performed beforehand by base-changing the coefficient field).
A tower is *realized* as an abstract Laurent-series field k'((s)) together
with

* the expansion of the base uniformizer u as a series in s,
* expansions of any tracked elements (previous generators, base data),
* for Galois layers, the action of each generator on s as a series.

Realization of a Kummer layer x^e = h (gcd(e, ord h) = 1, e prime to p) is
closed-form: with a*ord(h) + b*e = 1 the new uniformizer is s1 = x^a u^b and
u = s1^e * w^{-a} solves a fixed-point equation in the unit part w of h.

Realization of an Artin-Schreier layer y^p - y = h (pole order n prime to p
after representative reduction) works inside the explicit field
L = sum K y^i: monomials c * s^j * y^i have pairwise distinct valuations
p*j - n*i, so valuations, leading coefficients and digit-by-digit expansion
of any element in a chosen uniformizer pi = s^a y^b are exact operations.

From a realization, the two local invariants are plain series orders:

* wild different  = ord_s(du/ds) - (e - 1),
* log fixed length of sigma = ord_s(sigma(s)/s - 1).

Every public query runs at precision N and again at 2N and must agree;
disagreement raises :class:`UnstablePrecisionError`.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicInt
from .fields import FieldDescriptor
from .grouprep import BrauerRep, FiniteGroup
from .series import (
    DEFAULT_PRECISION,
    LaurentSeries,
    PrecisionError,
    UnstablePrecisionError,
)


class LocalRamError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Artin-Schreier layer internals: vectors over K with basis 1, y, .., y^{p-1}
# ---------------------------------------------------------------------------


class _ASContext:
    """Arithmetic in K(y), y^p - y = h, over K = field((s)) with ord(h) = -n."""

    def __init__(self, field: FieldDescriptor, h: LaurentSeries, n: int):
        self.F = field
        self.p = field.p
        self.h = h
        self.n = n

    def zero_vec(self):
        return [LaurentSeries.zero(self.F) for _ in range(self.p)]

    def scalar_vec(self, series: LaurentSeries):
        v = self.zero_vec()
        v[0] = series
        return v

    def y_vec(self):
        v = self.zero_vec()
        v[1] = LaurentSeries.one(self.F)
        return v

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def sub(self, a, b):
        return [x - y for x, y in zip(a, b)]

    def scale(self, a, series: LaurentSeries):
        return [x * series for x in a]

    def scale_const(self, a, c: int):
        return [x.scale(c) for x in a]

    def mul(self, a, b):
        p = self.p
        prod = [LaurentSeries.zero(self.F) for _ in range(2 * p - 1)]
        for i, x in enumerate(a):
            if x.is_known_zero() and x.bound is None:
                continue
            for j, yy in enumerate(b):
                if yy.is_known_zero() and yy.bound is None:
                    continue
                prod[i + j] = prod[i + j] + x * yy
        # reduce y^k for k >= p via y^p = y + h
        for k in range(2 * p - 2, p - 1, -1):
            c = prod[k]
            if c.is_exact_zero():
                continue
            prod[k] = LaurentSeries.zero(self.F)
            prod[k - p + 1] = prod[k - p + 1] + c
            prod[k - p] = prod[k - p] + c * self.h
        return prod[:p]

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        acc = self.scalar_vec(LaurentSeries.one(self.F))
        base = a
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def y_inverse(self):
        # y (y^{p-1} - 1) = h  =>  1/y = (y^{p-1} - 1) / h
        v = self.zero_vec()
        hinv = self.h.inverse()
        v[self.p - 1] = hinv
        v[0] = -hinv
        return v

    def inv(self, a):
        """Inverse via leading-monomial peeling and a geometric series."""
        v, i, lead, _ = self.valuation(a)
        if v is None:
            raise ZeroDivisionError("inverse of zero element")
        j = (v + self.n * i) // self.p  # ord of the K-coefficient at index i
        # leading monomial m = lead * s^j * y^i ; write a = m (1 + eps)
        minv = self.scalar_vec(LaurentSeries.monomial(self.F, self.F.inv(lead), -j))
        if i:
            minv = self.mul(minv, self.pow(self.y_inverse(), i))
        one = self.scalar_vec(LaurentSeries.one(self.F))
        eps = self.sub(self.mul(minv, a), one)
        try:
            veps, *_ = self.valuation(eps)
        except PrecisionError:
            veps = None
        if veps is None:
            return minv
        window = self._window_bound(eps)
        neg_eps = self.scale_const(eps, self.F.neg(1))
        out = one
        term = one
        k = 0
        while k * veps <= window:
            term = self.mul(term, neg_eps)
            out = self.add(out, term)
            k += 1
        return self.mul(minv, out)

    def _window_bound(self, a) -> int:
        bounds = []
        for i, comp in enumerate(a):
            if comp.bound is not None:
                bounds.append(self.p * comp.bound - self.n * i)
        return min(bounds) if bounds else 4 * DEFAULT_PRECISION

    def valuation(self, a):
        """Return (v, index, leading coefficient, floor) of a vector.

        v is the exact valuation, or None for the (exact) zero vector.
        Raises PrecisionError when the stored windows cannot decide.
        """
        candidates = []
        floors = []
        for i, comp in enumerate(a):
            if comp.coeffs:
                candidates.append((self.p * comp.val - self.n * i, i, comp.coeffs[0]))
            elif comp.bound is not None:
                floors.append(self.p * comp.bound - self.n * i)
        if not candidates:
            if floors:
                raise PrecisionError("vector is zero to precision; valuation unknown")
            return None, None, None, None
        v, i, lead = min(candidates, key=lambda t: (t[0], t[1]))
        floor = min(floors) if floors else None
        if floor is not None and floor <= v:
            raise PrecisionError("hidden low-order term possible; valuation unknown")
        return v, i, lead, floor


def _as_expand(ctx: _ASContext, w, pi_pows, target: int, symbol_field) -> LaurentSeries:
    """Digit-extract the expansion of w in the uniformizer pi, below target."""
    digits: dict[int, int] = {}
    cur = [c for c in w]
    achieved = target
    while True:
        try:
            v, i, lead, floor = ctx.valuation(cur)
        except PrecisionError:
            # everything below the floor is already extracted
            fl = []
            for idx, comp in enumerate(cur):
                if comp.bound is not None and not comp.coeffs:
                    fl.append(ctx.p * comp.bound - ctx.n * idx)
                elif comp.coeffs:
                    fl.append(ctx.p * comp.val - ctx.n * idx)
            achieved = min(fl)
            break
        if v is None:
            achieved = None  # exact
            break
        if v >= target:
            achieved = target
            break
        pv = pi_pows(v)
        v2, i2, lead2, _ = ctx.valuation(pv)
        if v2 != v or i2 != i:
            raise LocalRamError("uniformizer power has unexpected leading term")
        c = ctx.F.div(lead, lead2)
        digits[v] = c
        cur = ctx.sub(cur, ctx.scale_const(pv, c))
    if not digits:
        return LaurentSeries.zero(symbol_field, achieved)
    lo = min(digits)
    hi = max(digits)
    coeffs = [digits.get(e, 0) for e in range(lo, hi + 1)]
    return LaurentSeries(symbol_field, lo, coeffs, achieved)


class _PowerCache:
    def __init__(self, ctx: _ASContext, pi):
        self.ctx = ctx
        self.pos = {1: pi}
        self.neg = {}
        self._pi_inv = None

    def __call__(self, k: int):
        ctx = self.ctx
        if k == 0:
            return ctx.scalar_vec(LaurentSeries.one(ctx.F))
        if k > 0:
            if k not in self.pos:
                self.pos[k] = ctx.mul(self(k - 1), self.pos[1])
            return self.pos[k]
        if self._pi_inv is None:
            self._pi_inv = ctx.inv(self.pos[1])
        if k not in self.neg:
            prev = self(k + 1) if k != -1 else ctx.scalar_vec(LaurentSeries.one(ctx.F))
            self.neg[k] = ctx.mul(prev, self._pi_inv)
        return self.neg[k]


# ---------------------------------------------------------------------------
# Representative reduction
# ---------------------------------------------------------------------------


def artin_schreier_reduce(h: LaurentSeries) -> LaurentSeries:
    """Minimize the pole order of h modulo g^p - g.

    Leading terms c s^{-n} with p | n are removed by g = c^{1/p} s^{-n/p};
    the loop stops when the pole order is prime to p or the pole is gone.
    """
    F = h.field
    p = F.p
    while True:
        if h.is_known_zero():
            return h
        v = h.order()
        if v >= 0 or (-v) % p != 0:
            return h
        c = h.leading_coefficient()
        g = LaurentSeries.monomial(F, F.pth_root(c), v // p)
        h = h - (g.pow(p) - g)


# ---------------------------------------------------------------------------
# Tower specification and realization
# ---------------------------------------------------------------------------


class Layer:
    """One step of a tower: kind 'kummer' (with degree e) or 'artin_schreier'.

    ``h`` names the defining element: 'u' for the base uniformizer, 'base:X'
    for a base element supplied with the spec, or 'gen:<k>' for the generator
    created by a previous layer.  ``galois`` marks layers whose cyclic group
    should be realized (and through which earlier actions must lift).
    """

    def __init__(self, kind: str, h: str, e: int | None = None, galois: bool = True):
        if kind not in ("kummer", "artin_schreier"):
            raise LocalRamError(f"unknown layer kind {kind!r}")
        if kind == "kummer" and (e is None or e < 1):
            raise LocalRamError("kummer layer needs a degree e >= 1")
        self.kind = kind
        self.h = h
        self.e = e
        self.galois = galois

    def __repr__(self):
        if self.kind == "kummer":
            return f"Layer(kummer, e={self.e}, h={self.h})"
        return f"Layer(artin_schreier, h={self.h})"


class LocalExtensionSpec:
    """A totally ramified abelian-constructible extension of field((u)).

    ``base_elements`` maps names to callables precision -> LaurentSeries
    giving the expansions (in u) of the data the layers refer to.
    ``f_res`` records the residue degree of the place this extension sits at
    (the residue extension itself must already be folded into ``field``).
    """

    def __init__(self, field: FieldDescriptor, layers, base_elements=None, f_res: int = 1):
        self.field = field
        self.layers = list(layers)
        self.base_elements = dict(base_elements or {})
        self.f_res = f_res
        self._cache: dict[int, TowerRealization] = {}

    def ramification_index(self) -> int:
        e = 1
        for layer in self.layers:
            e *= layer.e if layer.kind == "kummer" else self.field.p
        return e

    def degree(self) -> int:
        return self.ramification_index() * self.f_res

    def galois_layer_orders(self) -> list[int]:
        out = []
        for layer in self.layers:
            if layer.galois:
                out.append(layer.e if layer.kind == "kummer" else self.field.p)
        return out

    def galois_group(self) -> FiniteGroup:
        G = None
        for d in self.galois_layer_orders():
            C = FiniteGroup.cyclic(d)
            G = C if G is None else FiniteGroup.direct_product(G, C)
        if G is None:
            G = FiniteGroup.cyclic(1)
        return G

    def element_to_tuple(self, g: int) -> tuple[int, ...]:
        orders = self.galois_layer_orders()
        out = []
        for d in reversed(orders):
            out.append(g % d)
            g //= d
        return tuple(reversed(out))

    def realize(self, precision: int) -> "TowerRealization":
        if precision not in self._cache:
            self._cache[precision] = _realize(self, precision)
        return self._cache[precision]


class TowerRealization:
    def __init__(self, field, e, tracked, gen_actions, gen_orders):
        self.field = field
        self.e = e
        self.tracked = tracked  # name -> LaurentSeries in the final uniformizer
        self.gen_actions = gen_actions  # list of series sigma_i(s)
        self.gen_orders = gen_orders
        self._action_cache: dict[tuple[int, ...], LaurentSeries] = {}

    def action(self, exponents) -> LaurentSeries:
        """Series for the action on the uniformizer of prod gen_i^{e_i}."""
        exponents = tuple(int(e) % d for e, d in zip(exponents, self.gen_orders))
        if exponents in self._action_cache:
            return self._action_cache[exponents]
        s = LaurentSeries.variable(self.field)
        act = s
        for gen_series, k in zip(self.gen_actions, exponents):
            for _ in range(k):
                act = gen_series.compose(act) if not _is_identity(act) else gen_series
        self._action_cache[exponents] = act
        return act


def _is_identity(series: LaurentSeries) -> bool:
    return series.val == 1 and series.coeffs == (1,) and series.bound is None


def _realize(spec: LocalExtensionSpec, precision: int) -> TowerRealization:
    F = spec.field
    p = F.p
    window = precision
    u = LaurentSeries.variable(F)
    tracked: dict[str, LaurentSeries] = {"u": u}
    for name, fn in spec.base_elements.items():
        tracked[f"base:{name}"] = fn(window)
    gen_actions: list[LaurentSeries] = []
    gen_orders: list[int] = []
    e_total = 1

    for idx, layer in enumerate(spec.layers):
        h = tracked.get(layer.h)
        if h is None:
            raise LocalRamError(f"layer defining element {layer.h!r} is not tracked")
        if layer.kind == "kummer":
            new_tracked, new_actions, x_series = _kummer_layer(
                F, layer.e, h, tracked, gen_actions, window
            )
            tracked = new_tracked
            tracked[f"gen:{idx}"] = x_series
            gen_actions = new_actions["lifted"]
            if layer.galois:
                gen_actions = gen_actions + [new_actions["new"]]
                gen_orders.append(layer.e)
            e_total *= layer.e
        else:
            new_tracked, new_actions, y_series = _artin_schreier_layer(
                F, h, tracked, gen_actions, window
            )
            tracked = new_tracked
            tracked[f"gen:{idx}"] = y_series
            gen_actions = new_actions["lifted"]
            if layer.galois:
                gen_actions = gen_actions + [new_actions["new"]]
                gen_orders.append(p)
            e_total *= p

    return TowerRealization(F, e_total, tracked, gen_actions, gen_orders)


def _kummer_layer(F, e, h, tracked, gen_actions, window):
    p = F.p
    if e % p == 0:
        raise LocalRamError("kummer layer degree must be prime to the characteristic")
    m = h.order()
    from math import gcd

    if gcd(e, m) != 1:
        raise LocalRamError(
            f"kummer layer with gcd(e, ord h) = {gcd(e, m)} > 1 is not totally ramified"
        )
    # a*m + b*e = 1
    a = pow(m, -1, e) if e > 1 else 0
    b = (1 - a * m) // e
    w = h.shift(-m)  # unit part
    s_new = LaurentSeries.variable(F)
    # solve u = s_new^e * (w o u)^(-a) by fixed-point iteration
    cur = s_new.pow(e)
    target_bound = window + e + abs(m) * e + 2
    for _ in range(target_bound):
        w_at = w.compose(cur.truncate(target_bound))
        nxt = (s_new.pow(e) * w_at.pow(-a)).truncate(target_bound)
        if nxt.same_series(cur) and (nxt.bound == cur.bound):
            cur = nxt
            break
        cur = nxt
    u_new = cur
    w_at_u = w.compose(u_new)
    x_series = (s_new.pow(m) * w_at_u.pow(b)).truncate(target_bound)

    new_tracked = {}
    for name, ser in tracked.items():
        new_tracked[name] = ser.compose(u_new)

    lifted = []
    for tau in gen_actions:
        ratio = (h.compose(tau)) / h
        lead = ratio.leading_coefficient()
        if ratio.order() != 0:
            raise LocalRamError("automorphism does not preserve the layer datum")
        if lead == 1 and ratio.same_series(LaurentSeries.one(F)) and ratio.bound is None:
            rho = LaurentSeries.one(F)
        else:
            rho = ratio.nth_root(e)
        rho_at = rho.compose(u_new) if not _is_series_one(rho) else LaurentSeries.one(F)
        tau_at = tau.compose(u_new)
        lifted_series = (x_series.pow(a) * rho_at.pow(a) * tau_at.pow(b)).truncate(
            target_bound
        )
        lifted.append(lifted_series)

    # layer generator: s_new -> zeta_e^a s_new
    new_action = None
    if e == 1:
        new_action = LaurentSeries.variable(F)
    else:
        if (F.order - 1) % e != 0:
            raise LocalRamError(
                f"residue field GF({F.p}^{F.k}) contains no primitive {e}-th root of unity"
            )
        zeta = F.pow(F.generator(), (F.order - 1) // e)
        new_action = LaurentSeries.monomial(F, F.pow(zeta, a % e), 1)
    return new_tracked, {"lifted": lifted, "new": new_action}, x_series


def _is_series_one(s: LaurentSeries) -> bool:
    return s.val == 0 and s.coeffs == (1,) and s.bound is None


def _artin_schreier_layer(F, h_raw, tracked, gen_actions, window):
    p = F.p
    h = artin_schreier_reduce(h_raw)
    if h.is_known_zero() or h.order() >= 0:
        raise LocalRamError("artin-schreier layer is unramified here (no pole)")
    n = -h.order()
    if n % p == 0:
        raise LocalRamError("pole order divisible by p survived reduction")
    ctx = _ASContext(F, h, n)
    b = (-pow(n, -1, p)) % p
    a = (1 + n * b) // p
    pi = ctx.scalar_vec(LaurentSeries.monomial(F, 1, a))
    if b:
        yv = ctx.y_vec()
        pi = ctx.mul(pi, ctx.pow(yv, b))
    pows = _PowerCache(ctx, pi)
    target = window + p * (n + 2)

    s_expansion = _as_expand(ctx, ctx.scalar_vec(LaurentSeries.variable(F)), pows, target, F)
    y_expansion = _as_expand(ctx, ctx.y_vec(), pows, target, F)

    new_tracked = {}
    for name, ser in tracked.items():
        new_tracked[name] = ser.compose(s_expansion)

    lifted = []
    for tau in gen_actions:
        r = h.compose(tau) - h
        delta = LaurentSeries.zero(F)
        if not r.is_known_zero():
            # tau(y) = y + delta with delta^p - delta = r: delta = -(r+r^p+..)
            if r.order() <= 0:
                raise LocalRamError(
                    "cannot lift automorphism through artin-schreier layer"
                )
            cap = r.bound if r.bound is not None else 4 * DEFAULT_PRECISION
            term = r
            while not term.is_known_zero() and term.order() <= cap:
                delta = delta - term
                term = term.pow(p)
        tau_vec = ctx.scalar_vec(tau.pow(a))
        if b:
            y_plus = ctx.add(ctx.y_vec(), ctx.scalar_vec(delta))
            tau_vec = ctx.mul(tau_vec, ctx.pow(y_plus, b))
        lifted.append(_as_expand(ctx, tau_vec, pows, target, F))

    # layer generator: y -> y + 1
    gen_vec = ctx.scalar_vec(LaurentSeries.monomial(F, 1, a))
    if b:
        y_plus_1 = ctx.add(ctx.y_vec(), ctx.scalar_vec(LaurentSeries.one(F)))
        gen_vec = ctx.mul(gen_vec, ctx.pow(y_plus_1, b))
    new_action = _as_expand(ctx, gen_vec, pows, target, F)

    return new_tracked, {"lifted": lifted, "new": new_action}, y_expansion


# ---------------------------------------------------------------------------
# Public invariants (all precision-doubled)
# ---------------------------------------------------------------------------


def _stable(spec: LocalExtensionSpec, precision, compute):
    n0 = precision or DEFAULT_PRECISION
    first = compute(spec.realize(n0))
    second = compute(spec.realize(2 * n0))
    if first != second:
        raise UnstablePrecisionError(
            f"result changed under precision doubling: {first} vs {second}"
        )
    return first


def wild_different_local(spec: LocalExtensionSpec, precision: int | None = None) -> int:
    """length of the relative differentials minus (e - 1), a natural number."""

    def compute(real: TowerRealization) -> int:
        du = real.tracked["u"].derivative()
        d = du.order() - (real.e - 1)
        if d < 0:
            raise LocalRamError("negative wild different: inconsistent realization")
        return d

    return _stable(spec, precision, compute)


def log_fixed_length(
    spec: LocalExtensionSpec, exponents, precision: int | None = None
) -> int:
    """ord of sigma(s)/s - 1 for the automorphism with the given exponents.

    This is the length of B modulo the ideal generated by sigma(b)/b - 1; for
    the monogenic extensions built here the uniformizer computes it, and a
    few unit-adjusted uniformizers are checked to give no smaller value.
    """

    def compute(real: TowerRealization) -> int:
        act = real.action(exponents)
        s = LaurentSeries.variable(real.field)
        ratio = act / s - LaurentSeries.one(real.field)
        if ratio.is_known_zero() and ratio.bound is None:
            raise LocalRamError("identity automorphism has no log fixed length")
        j = ratio.order()
        # unit-adjusted uniformizers (1 + s^k) s can only do worse; verify
        for k in (1, 2):
            unit = LaurentSeries.one(real.field) + LaurentSeries.monomial(real.field, 1, k)
            pi2 = unit * s
            ratio2 = pi2.compose(act) / pi2 - LaurentSeries.one(real.field)
            if ratio2.order() < j:
                raise LocalRamError("uniformizer choice affected the log fixed length")
        return j

    return _stable(spec, precision, compute)


def local_swan_conductor(
    spec: LocalExtensionSpec,
    rep: BrauerRep,
    precision: int | None = None,
) -> int:
    """Swan conductor of a representation of the inertia group.

    (1/|I|) [ D_log * dim - sum_{sigma != 1} j(sigma) * BrauerTrace(sigma) ];
    the result is asserted to be a non-negative rational integer.
    """
    G = rep.group
    orders = spec.galois_layer_orders()
    size = 1
    for d in orders:
        size *= d
    if G.n != size:
        raise LocalRamError("representation group does not match the extension")
    dlog = wild_different_local(spec, precision)
    total = CyclotomicInt.from_int(dlog) * rep.value(G.identity)
    for g in range(G.n):
        if g == G.identity:
            continue
        j = log_fixed_length(spec, spec.element_to_tuple(g), precision)
        total = total - CyclotomicInt.from_int(j) * rep.value(g)
    if not total.is_rational():
        raise LocalRamError("swan conductor is not rational: inconsistent data")
    value = Fraction(total.rational_value(), G.n)
    if value.denominator != 1 or value < 0:
        raise LocalRamError(
            f"swan conductor {value} is not a non-negative integer (integrality failure)"
        )
    return int(value)
