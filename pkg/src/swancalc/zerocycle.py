"""Boundary-supported 0-cycles with rational coefficients.

A cycle is a finite formal sum of places; each place key carries its residue
degree so that degrees and push-forwards are exact.  Keys are strings (for
points of the base line) or (string, index) pairs (for the places of a cover
lying over a base point).
"""

from __future__ import annotations

from fractions import Fraction


class ZeroCycle:
    def __init__(self, entries=None, degrees=None):
        # entries: key -> Fraction coefficient; degrees: key -> residue degree
        self.entries: dict = {}
        self.degrees: dict = {}
        if entries:
            for k, v in entries.items():
                v = Fraction(v)
                if v != 0:
                    self.entries[k] = v
                    self.degrees[k] = (degrees or {}).get(k, 1)

    @staticmethod
    def of_place(key, coeff, degree: int = 1) -> "ZeroCycle":
        return ZeroCycle({key: Fraction(coeff)}, {key: degree})

    def __add__(self, other: "ZeroCycle") -> "ZeroCycle":
        out = dict(self.entries)
        deg = dict(self.degrees)
        for k, v in other.entries.items():
            out[k] = out.get(k, Fraction(0)) + v
            deg.setdefault(k, other.degrees[k])
        return ZeroCycle(out, deg)

    def __neg__(self) -> "ZeroCycle":
        return ZeroCycle({k: -v for k, v in self.entries.items()}, dict(self.degrees))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ZeroCycle":
        c = Fraction(c)
        return ZeroCycle({k: c * v for k, v in self.entries.items()}, dict(self.degrees))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZeroCycle):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(sorted(self.entries.items(), key=lambda kv: str(kv[0]))))

    def is_zero(self) -> bool:
        return not self.entries

    def degree(self) -> Fraction:
        return sum(
            (v * self.degrees[k] for k, v in self.entries.items()), Fraction(0)
        )

    def coefficient(self, key) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def support(self):
        return sorted(self.entries, key=str)

    def items_sorted(self):
        return sorted(self.entries.items(), key=lambda kv: str(kv[0]))

    def map_keys(self, fn, degree_fn=None) -> "ZeroCycle":
        """Push coefficients through a key map, summing collisions.

        ``degree_fn`` gives the residue degree of the new key; by default the
        old degree is kept (a genuine push-forward multiplies coefficients by
        relative residue degrees before calling this).
        """
        out: dict = {}
        deg: dict = {}
        for k, v in self.entries.items():
            nk = fn(k)
            out[nk] = out.get(nk, Fraction(0)) + v
            deg[nk] = degree_fn(k) if degree_fn else self.degrees[k]
        return ZeroCycle(out, deg)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.entries.values())

    def is_effective(self) -> bool:
        return all(v >= 0 for v in self.entries.values())

    def as_json(self):
        return {
            str(k): [v.numerator, v.denominator] for k, v in self.items_sorted()
        }

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"{v}*[{k}]" for k, v in self.items_sorted())
