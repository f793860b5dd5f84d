"""Finite groups as explicit multiplication tables, and modular
representation data stored at the level of Brauer characters.

Every quantity the Swan-class formulas consume (dimensions of fixed spaces,
Brauer traces, induction) is computable from character values alone, so
representations are never materialized as matrices here.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicInt
from .fields import factorize


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group given by its multiplication table.

    Elements are integers 0..n-1; ``table[a][b]`` is the product ab.  Tables
    up to order 64 are validated exhaustively at construction.
    """

    def __init__(self, table, names=None, check: bool = True):
        self.table = [list(row) for row in table]
        self.n = len(self.table)
        self.names = list(names) if names is not None else [str(i) for i in range(self.n)]
        if check:
            self._validate()
        self.identity = self._find_identity()
        self.inverse = [self._find_inverse(a) for a in range(self.n)]
        self.element_order = [self._order(a) for a in range(self.n)]

    def _validate(self):
        n = self.n
        for row in self.table:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise GroupError("multiplication table is not square over 0..n-1")
        if n <= 64:
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                            raise GroupError("multiplication table is not associative")

    def _find_identity(self) -> int:
        for e in range(self.n):
            if all(self.table[e][a] == a and self.table[a][e] == a for a in range(self.n)):
                return e
        raise GroupError("no identity element")

    def _find_inverse(self, a: int) -> int:
        for b in range(self.n):
            if self.table[a][b] == self.identity and self.table[b][a] == self.identity:
                return b
        raise GroupError(f"element {a} has no inverse")

    def _order(self, a: int) -> int:
        acc, k = a, 1
        while acc != self.identity:
            acc = self.table[acc][a]
            k += 1
            if k > self.n:
                raise GroupError("element order exceeds group order")
        if self.n % k != 0:
            raise GroupError("element order does not divide the group order")
        return k

    # -- basic operations -------------------------------------------------------

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse[a], -k)
        acc = self.identity
        base = a
        while k:
            if k & 1:
                acc = self.table[acc][base]
            base = self.table[base][base]
            k >>= 1
        return acc

    def conjugate(self, t: int, a: int) -> int:
        """t a t^{-1}."""
        return self.table[self.table[t][a]][self.inverse[t]]

    def cyclic_subgroup(self, a: int) -> tuple[int, ...]:
        out = [self.identity]
        acc = a
        while acc != self.identity:
            out.append(acc)
            acc = self.table[acc][a]
        return tuple(sorted(out))

    def is_subgroup(self, S) -> bool:
        S = set(S)
        if self.identity not in S:
            return False
        return all(self.table[a][self.inverse[b]] in S for a in S for b in S)

    def left_cosets(self, H) -> list[tuple[int, ...]]:
        H = sorted(set(H))
        seen = set()
        cosets = []
        for a in range(self.n):
            if a in seen:
                continue
            coset = tuple(sorted(self.table[a][h] for h in H))
            cosets.append(coset)
            seen.update(coset)
        return cosets

    def transversal(self, H) -> list[int]:
        """Deterministic transversal of G/H: lowest element index per coset."""
        return [min(c) for c in self.left_cosets(H)]

    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        seen = set()
        classes = []
        for a in range(self.n):
            if a in seen:
                continue
            cls = tuple(sorted({self.conjugate(t, a) for t in range(self.n)}))
            classes.append(cls)
            seen.update(cls)
        return classes

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.n)
            for b in range(a)
        )

    # -- constructors -------------------------------------------------------------

    @staticmethod
    def cyclic(n: int) -> "FiniteGroup":
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        return FiniteGroup(table, names=[f"{a} mod {n}" for a in range(n)])

    @staticmethod
    def direct_product(G: "FiniteGroup", H: "FiniteGroup") -> "FiniteGroup":
        n, m = G.n, H.n
        table = [
            [
                G.table[a // m][b // m] * m + H.table[a % m][b % m]
                for b in range(n * m)
            ]
            for a in range(n * m)
        ]
        names = [f"({G.names[a // m]},{H.names[a % m]})" for a in range(n * m)]
        return FiniteGroup(table, names=names)

    @staticmethod
    def symmetric(n: int) -> "FiniteGroup":
        if n > 4:
            raise GroupError("symmetric groups only up to S_4 here")
        import itertools

        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [
            [index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
        ]
        return FiniteGroup(table, names=[str(p) for p in perms])


def p_part(G: FiniteGroup, p: int):
    """Elements of order a power of p; empty for p = 0."""
    if p == 0:
        return tuple()
    out = []
    for a in range(G.n):
        k = G.element_order[a]
        while k % p == 0:
            k //= p
        if k == 1:
            out.append(a)
    return tuple(out)


def cyclic_p_subgroups(G: FiniteGroup, p: int):
    """The set C_p(G) of cyclic p-power-order subgroups, with their generators.

    Returns a list of (subgroup_elements, generators) with the trivial
    subgroup included (its generator set is {identity}).
    """
    seen = {}
    for a in p_part(G, p):
        sub = G.cyclic_subgroup(a)
        gens = seen.setdefault(sub, [])
        if G.element_order[a] == len(sub):
            gens.append(a)
    if p != 0:
        seen.setdefault((G.identity,), [G.identity])
    out = []
    for sub in sorted(seen):
        gens = sorted(set(seen[sub])) or [G.identity]
        out.append((sub, tuple(gens)))
    return out


class BrauerRep:
    """A representation recorded by its Brauer character.

    ``values[a]`` is the Brauer trace of element a: the sum of the
    Teichmuller lifts of its eigenvalues, a cyclotomic integer.  ``ell`` is
    the coefficient characteristic (different from the residue
    characteristic p of the geometry).
    """

    def __init__(self, group: FiniteGroup, dim: int, values, ell: int, check: bool = True):
        self.group = group
        self.dim = dim
        self.values = [v if isinstance(v, CyclotomicInt) else CyclotomicInt.from_int(v) for v in values]
        self.ell = ell
        if check:
            self._validate()

    def _validate(self):
        G = self.group
        if len(self.values) != G.n:
            raise GroupError("one character value per group element required")
        if self.values[G.identity] != self.dim:
            raise GroupError("character value at the identity must equal the dimension")
        for cls in G.conjugacy_classes():
            v0 = self.values[cls[0]]
            for a in cls[1:]:
                if self.values[a] != v0:
                    raise GroupError("character values must be constant on conjugacy classes")

    def value(self, a: int) -> CyclotomicInt:
        return self.values[a]

    # -- constructors --------------------------------------------------------------

    @staticmethod
    def trivial(G: FiniteGroup, ell: int, dim: int = 1) -> "BrauerRep":
        return BrauerRep(G, dim, [CyclotomicInt.from_int(dim)] * G.n, ell)

    @staticmethod
    def cyclic_character(G: FiniteGroup, generator: int, j: int, ell: int) -> "BrauerRep":
        """The character sending ``generator`` to zeta_d^j, d = ord(generator).

        G must be cyclic, generated by ``generator``.
        """
        d = G.element_order[generator]
        if d != G.n:
            raise GroupError("cyclic_character requires a generating element")
        values: list[CyclotomicInt | None] = [None] * G.n
        acc = G.identity
        for k in range(d):
            values[acc] = CyclotomicInt.zeta(d, (j * k) % d)
            acc = G.op(acc, generator)
        return BrauerRep(G, 1, values, ell)

    @staticmethod
    def product_character(G: FiniteGroup, factors, ell: int) -> "BrauerRep":
        """Character of a direct product from characters of the factors.

        ``factors`` pairs each BrauerRep of rank 1 with a projection callable
        G-element -> factor-element.
        """
        values = []
        for a in range(G.n):
            v = CyclotomicInt.from_int(1)
            for rep, proj in factors:
                v = v * rep.value(proj(a))
            values.append(v)
        return BrauerRep(G, 1, values, ell)

    @staticmethod
    def regular(G: FiniteGroup, ell: int) -> "BrauerRep":
        values = []
        for a in range(G.n):
            if a == G.identity:
                values.append(CyclotomicInt.from_int(G.n))
            else:
                # permutation action with no fixed point: lifted eigenvalues are
                # full sets of d-th roots of unity, each summing to zero
                values.append(CyclotomicInt.from_int(0))
        return BrauerRep(G, G.n, values, ell)

    @staticmethod
    def induced_character(G: FiniteGroup, H, rep: "BrauerRep") -> "BrauerRep":
        """Brauer character induced from a subgroup H (elements listed in H)."""
        H = sorted(set(H))
        Hset = set(H)
        if not G.is_subgroup(H):
            raise GroupError("H is not a subgroup")
        hindex = {h: i for i, h in enumerate(H)}
        T = G.transversal(H)
        values = []
        for a in range(G.n):
            v = CyclotomicInt.from_int(0)
            for t in T:
                c = G.conjugate(G.inverse[t], a)
                if c in Hset:
                    v = v + rep.value(hindex[c])
            values.append(v)
        dim = len(T) * rep.dim
        return BrauerRep(G, dim, values, rep.ell)

    def direct_sum(self, other: "BrauerRep") -> "BrauerRep":
        if other.group is not self.group or other.ell != self.ell:
            raise GroupError("direct sum requires matching group and ell")
        return BrauerRep(
            self.group,
            self.dim + other.dim,
            [a + b for a, b in zip(self.values, other.values)],
            self.ell,
        )


def fixed_dim(M: BrauerRep, sigma: int) -> int:
    """dim of the sigma-fixed subspace, from the character sum over <sigma>."""
    G = M.group
    d = G.element_order[sigma]
    if d % M.ell == 0:
        raise GroupError(
            f"ell = {M.ell} divides ord(sigma) = {d}: fixed space not semisimple"
        )
    total = CyclotomicInt.from_int(0)
    acc = G.identity
    for _ in range(d):
        total = total + M.value(acc)
        acc = G.op(acc, sigma)
    if not total.is_rational() or total.rational_value() % d != 0:
        raise GroupError("character sum is not divisible by the order: bad character data")
    out = total.rational_value() // d
    if out < 0:
        raise GroupError("negative fixed dimension: bad character data")
    return out


def fixed_dim_subgroup(M: BrauerRep, subgroup) -> int:
    G = M.group
    sub = list(subgroup)
    if M.ell != 0 and len(sub) % M.ell == 0:
        raise GroupError("ell divides the subgroup order")
    total = CyclotomicInt.from_int(0)
    for g in sub:
        total = total + M.value(g)
    if not total.is_rational() or total.rational_value() % len(sub) != 0:
        raise GroupError("character sum is not divisible by the subgroup order")
    return total.rational_value() // len(sub)


def swan_coeff(M: BrauerRep, sigma: int, p: int) -> Fraction:
    """dim M^sigma - (dim M^{sigma^p} - dim M^sigma) / (p - 1)."""
    G = M.group
    if sigma not in p_part(G, p):
        raise GroupError("swan_coeff requires an element of p-power order")
    a = fixed_dim(M, sigma)
    b = fixed_dim(M, G.power(sigma, p))
    return Fraction(a) - Fraction(b - a, p - 1)


def swan_coeff_subgroup(M: BrauerRep, C, p: int) -> Fraction:
    """Subgroup variant used by the integral Swan class: C is cyclic p-power."""
    G = M.group
    Cp = sorted({G.power(g, p) for g in C})
    a = fixed_dim_subgroup(M, C)
    b = fixed_dim_subgroup(M, Cp)
    return Fraction(a) - Fraction(b - a, p - 1)


def brauer_identity_check(M: BrauerRep, sigma: int, p: int | None = None) -> bool:
    """Exact identity tying the Swan coefficient to a sum of Brauer traces.

    |(Z/p^e)^x| * swan_coeff(M, sigma) must equal the sum of the Brauer
    traces of sigma^i over i in (Z/p^e)^x, in the cyclotomic ring.
    """
    G = M.group
    d = G.element_order[sigma]
    if p is None:
        fac = factorize(d)
        if len(fac) != 1:
            raise GroupError("element order is not a prime power")
        p = next(iter(fac))
    e = 0
    dd = d
    while dd % p == 0:
        dd //= p
        e += 1
    if dd != 1 or e < 1:
        raise GroupError("ord(sigma) must be p^e with e >= 1")
    units = [i for i in range(1, d) if i % p != 0]
    lhs = len(units) * swan_coeff(M, sigma, p)
    rhs = CyclotomicInt.from_int(0)
    for i in units:
        rhs = rhs + M.value(G.power(sigma, i))
    if not rhs.is_rational():
        return False
    return Fraction(rhs.rational_value()) == lhs


def induced_fixed_dim(G: FiniteGroup, H, M: BrauerRep, sigma: int) -> int:
    """Fixed-space dimension of Ind_H^G M at sigma, via the coset sum.

    Sum over the deterministic transversal T of dim M^{<t s t^-1> n H}
    divided by the index [<t s t^-1> : <t s t^-1> n H].
    """
    H = sorted(set(H))
    Hset = set(H)
    if not G.is_subgroup(H):
        raise GroupError("H is not a subgroup")
    hindex = {h: i for i, h in enumerate(H)}
    T = G.transversal(H)
    total = Fraction(0)
    for t in T:
        c = G.conjugate(t, sigma)
        cyc = G.cyclic_subgroup(c)
        inter = sorted(set(cyc) & Hset)
        dim_fix = fixed_dim_subgroup(M, [hindex[x] for x in inter])
        index = len(cyc) // len(inter)
        total += Fraction(dim_fix, index)
    if total.denominator != 1:
        raise GroupError("induced fixed dimension came out non-integral")
    return int(total)


def subgroup_as_group(G: FiniteGroup, H) -> tuple[FiniteGroup, dict[int, int]]:
    """Materialize a subgroup as its own FiniteGroup.

    Elements are renumbered by sorted position in G; the returned dict maps
    G-elements to the new indices.  Representations of the subgroup are
    always expressed in this numbering.
    """
    H = sorted(set(H))
    if not G.is_subgroup(H):
        raise GroupError("H is not a subgroup")
    hindex = {h: i for i, h in enumerate(H)}
    table = [[hindex[G.op(a, b)] for b in H] for a in H]
    names = [G.names[h] for h in H]
    return FiniteGroup(table, names=names), hindex
