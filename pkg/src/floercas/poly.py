"""Sparse polynomials in three graded variables with monomial orders.

The three variables are the generators of the invariant ring: alpha, beta,
gamma of cohomological degree 2, 4, 6 (written a, b, c in the classical
undeformed ring — same arithmetic, different display name).  Coefficients
are either GaussianRational or TruncatedSeries, fixed per polynomial; a t
inside a series coefficient counts as degree -2 in the grading.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .exactalg import GR_ONE, GR_ZERO, GaussianRational, TruncatedSeries

#: cohomological degrees of (alpha, beta, gamma)
WEIGHTS = (2, 4, 6)

LT, EQ, GT = -1, 0, 1


class Monomial(tuple):
    """Exponent triple (e_alpha, e_beta, e_gamma)."""

    __slots__ = ()

    def __new__(cls, ea: int = 0, eb: int = 0, ec: int = 0):
        if ea < 0 or eb < 0 or ec < 0:
            raise ValueError("negative exponent")
        return tuple.__new__(cls, (ea, eb, ec))

    @property
    def total_degree(self) -> int:
        return self[0] + self[1] + self[2]

    @property
    def weighted_degree(self) -> int:
        return 2 * self[0] + 4 * self[1] + 6 * self[2]

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(self[0] + other[0], self[1] + other[1], self[2] + other[2])

    def divides(self, other: "Monomial") -> bool:
        return self[0] <= other[0] and self[1] <= other[1] and self[2] <= other[2]

    def divide(self, other: "Monomial") -> "Monomial":
        """self / other; other must divide self."""
        return Monomial(self[0] - other[0], self[1] - other[1], self[2] - other[2])

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(self[0], other[0]), max(self[1], other[1]), max(self[2], other[2]))

    def coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self, other))

    def render(self, names=("alpha", "beta", "gamma")) -> str:
        parts = []
        for e, name in zip(self, names):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


MONOMIAL_ONE = Monomial(0, 0, 0)
M_ALPHA = Monomial(1, 0, 0)
M_BETA = Monomial(0, 1, 0)
M_GAMMA = Monomial(0, 0, 1)


def _GRLEX_KEY(m: Monomial):
    return (m.total_degree, m[0], m[1], m[2])


@dataclass(frozen=True)
class MonomialOrder:
    """Total multiplicative well-founded order on monomials.

    kinds: grlex (total degree, lex tie alpha>beta>gamma), grevlex,
    wgrevlex (weights 2,4,6 with grevlex tie-break).
    """

    kind: str = "grlex"

    def key(self, m: Monomial):
        """Sort key; bigger key = bigger monomial."""
        if self.kind == "grlex":
            return (m.total_degree, m[0], m[1], m[2])
        if self.kind == "grevlex":
            return (m.total_degree, -m[2], -m[1], -m[0])
        if self.kind == "wgrevlex":
            return (m.weighted_degree, -m[2], -m[1], -m[0])
        raise ValueError(f"unknown order kind {self.kind!r}")

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return LT if k1 < k2 else (GT if k1 > k2 else EQ)


GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")
WGREVLEX = MonomialOrder("wgrevlex")

_ORDERS = {"grlex": GRLEX, "grevlex": GREVLEX, "wgrevlex": WGREVLEX}


def order_by_name(name: str) -> MonomialOrder:
    return _ORDERS[name]


def order_compare(m1: Monomial, m2: Monomial, order: MonomialOrder = GRLEX) -> int:
    """-1, 0 or +1 as m1 <, =, > m2 in the given order."""
    return order.compare(m1, m2)


def _coerce_coeff(c):
    if isinstance(c, (GaussianRational, TruncatedSeries)):
        return c
    return GaussianRational.coerce(c)


class SparsePoly:
    """Map from monomials to nonzero coefficients, canonical and immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | Iterable = ()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc: dict[Monomial, object] = {}
        for m, c in items:
            if not isinstance(m, Monomial):
                m = Monomial(*m)
            c = _coerce_coeff(c)
            if m in acc:
                c = acc[m] + c
            if c:
                acc[m] = c
            elif m in acc:
                del acc[m]
        object.__setattr__(
            self, "terms", dict(sorted(acc.items(), key=lambda mc: _GRLEX_KEY(mc[0])))
        )

    def __setattr__(self, name, value):
        raise AttributeError("SparsePoly is immutable")

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero() -> "SparsePoly":
        return SparsePoly()

    @staticmethod
    def constant(c) -> "SparsePoly":
        return SparsePoly({MONOMIAL_ONE: c})

    @staticmethod
    def variable(i: int) -> "SparsePoly":
        e = [0, 0, 0]
        e[i] = 1
        return SparsePoly({Monomial(*e): GR_ONE})

    @staticmethod
    def coerce(value) -> "SparsePoly":
        if isinstance(value, SparsePoly):
            return value
        return SparsePoly.constant(value)

    def coeff_kind(self):
        """The coefficient type, or None for the zero polynomial."""
        for c in self.terms.values():
            return type(c)
        return None

    def _check_kind(self, other: "SparsePoly"):
        k1, k2 = self.coeff_kind(), other.coeff_kind()
        if k1 is not None and k2 is not None and k1 is not k2:
            raise TypeError("mixed coefficient kinds (scalar vs series)")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = SparsePoly.coerce(other)
        self._check_kind(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = out[m] + c
                if s:
                    out[m] = s
                else:
                    del out[m]
            else:
                out[m] = c
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-SparsePoly.coerce(other))

    def __rsub__(self, other):
        return SparsePoly.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, TruncatedSeries, int)):
            c0 = _coerce_coeff(other)
            if not c0:
                return SparsePoly.zero()
            return SparsePoly({m: c * c0 for m, c in self.terms.items()})
        other = SparsePoly.coerce(other)
        self._check_kind(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                c = c1 * c2
                if m in out:
                    s = out[m] + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
                elif c:
                    out[m] = c
        return SparsePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        one = GR_ONE
        if self.coeff_kind() is TruncatedSeries:
            order = next(iter(self.terms.values())).order
            one = TruncatedSeries.constant(GR_ONE, order)
        out = SparsePoly.constant(one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_monomial(self, m: Monomial, c=None) -> "SparsePoly":
        if c is None:
            return SparsePoly({mm.mul(m): cc for mm, cc in self.terms.items()})
        return SparsePoly({mm.mul(m): cc * c for mm, cc in self.terms.items()})

    # -- predicates / access ------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, GaussianRational, TruncatedSeries)):
            other = SparsePoly.coerce(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, m: Monomial):
        return self.terms.get(m, GR_ZERO)

    def sorted_terms(self, order: MonomialOrder = GRLEX) -> list:
        """(monomial, coeff) pairs, descending in the order."""
        return sorted(self.terms.items(), key=lambda mc: order.key(mc[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = GRLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order: MonomialOrder = GRLEX):
        return self.terms[self.leading_monomial(order)]

    def constant_coeff(self):
        return self.terms.get(MONOMIAL_ONE, GR_ZERO)

    def total_degree(self) -> int:
        return max((m.total_degree for m in self.terms), default=0)

    def monomials(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def map_coeffs(self, fn) -> "SparsePoly":
        return SparsePoly({m: fn(c) for m, c in self.terms.items()})

    def is_homogeneous(self, degree: int | None = None) -> bool:
        """Exactly homogeneous in the weighted (cohomological) grading."""
        degs = {m.weighted_degree for m in self.terms}
        if not degs:
            return True
        if degree is not None:
            return degs == {degree}
        return len(degs) == 1

    def mod4_degree(self):
        """Common degree class mod 4 of all terms (t counts as -2), else None."""
        classes = set()
        for m, c in self.terms.items():
            w = m.weighted_degree
            if isinstance(c, TruncatedSeries):
                for d, cd in enumerate(c.coeffs):
                    if cd:
                        classes.add((w - 2 * d) % 4)
            else:
                classes.add(w % 4)
            if len(classes) > 1:
                return None
        return classes.pop() if classes else 0

    # -- rendering ----------------------------------------------------------
    def render(self, names=("alpha", "beta", "gamma"), order: MonomialOrder = GRLEX) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms(order):
            cs = str(c)
            ms = m.render(names)
            if ms == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ms)
            elif cs == "-1":
                parts.append(f"-{ms}")
            elif ("+" in cs[1:]) or ("-" in cs[1:]):
                parts.append(f"({cs})*{ms}")
            else:
                parts.append(f"{cs}*{ms}")
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SparsePoly({self})"

    # -- serialization ---------------------------------------------------
    def to_json(self, order: MonomialOrder = GRLEX) -> dict:
        return {
            "terms": [
                {"m": list(m), "c": c.to_json()} for m, c in self.sorted_terms(order)
            ]
        }

    @staticmethod
    def from_json(obj: dict) -> "SparsePoly":
        terms = {}
        for t in obj["terms"]:
            c = t["c"]
            if "coeffs" in c:
                coeff = TruncatedSeries.from_json(c)
            else:
                coeff = GaussianRational.from_json(c)
            terms[Monomial(*t["m"])] = coeff
        return SparsePoly(terms)


ALPHA = SparsePoly.variable(0)
BETA = SparsePoly.variable(1)
GAMMA = SparsePoly.variable(2)


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Exact product in canonical form."""
    return p * q
