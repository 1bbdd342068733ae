"""Exact sparse Laurent polynomials with arc-indexed variables.

A polynomial is a map from exponent vectors to arbitrary-precision integer
coefficients.  An exponent vector is a sorted tuple of (Arc, exponent) pairs
with all exponents nonzero, e.g.

    x[0,2]^2 * x[0,3]^-1  ->  ((Arc(0,2), 2), (Arc(0,3), -1))

Zero coefficients are never stored, so equality of dicts is equality of
polynomials.  Values are immutable by convention; every operation returns a
fresh polynomial.  Coefficients use Python integers: cluster variable
coefficients and tiling entries grow without bound.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Mapping, Tuple, Union

from .arcs import Arc

ExpVec = Tuple[Tuple[Arc, int], ...]


def _expvec(items: Iterable[Tuple[Arc, int]]) -> ExpVec:
    return tuple(sorted((a, e) for a, e in items if e != 0))


def _expvec_add(u: ExpVec, v: ExpVec) -> ExpVec:
    if not u:
        return v
    if not v:
        return u
    acc = dict(u)
    for a, e in v:
        e2 = acc.get(a, 0) + e
        if e2:
            acc[a] = e2
        else:
            del acc[a]
    return tuple(sorted(acc.items()))


class LaurentPoly:
    """Immutable sparse Laurent polynomial over the integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[ExpVec, int] | None = None):
        self.terms: Dict[ExpVec, int] = {k: v for k, v in (terms or {}).items() if v}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly({(): c})

    @staticmethod
    def variable(a: Arc) -> "LaurentPoly":
        return LaurentPoly({((a, 1),): 1})

    @staticmethod
    def monomial(alpha: Union[Mapping[Arc, int], Iterable[Tuple[Arc, int]]]) -> "LaurentPoly":
        """The monomial x^alpha for a finitely supported exponent map."""
        items = alpha.items() if isinstance(alpha, Mapping) else alpha
        return LaurentPoly({_expvec(items): 1})

    # -- ring structure ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self.terms)
        for k, v in other.terms.items():
            c = acc.get(k, 0) + v
            if c:
                acc[k] = c
            else:
                acc.pop(k, None)
        return LaurentPoly(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: Dict[ExpVec, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _expvec_add(k1, k2)
                c = acc.get(k, 0) + v1 * v2
                if c:
                    acc[k] = c
                else:
                    acc.pop(k, None)
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- specialisations ---------------------------------------------------

    def div_exact_variable(self, t: Arc) -> "LaurentPoly":
        """Divide by the single variable x_t; always exact in a Laurent ring."""
        return LaurentPoly({_expvec_add(k, ((t, -1),)): v for k, v in self.terms.items()})

    def substitute_unit(self, members: Union[Callable[[Arc], bool], Iterable[Arc]]) -> "LaurentPoly":
        """Set x_a = 1 for every arc a selected by `members` (set or predicate)."""
        if callable(members):
            keep = lambda a: not members(a)
        else:
            s = frozenset(members)
            keep = lambda a: a not in s
        acc: Dict[ExpVec, int] = {}
        for k, v in self.terms.items():
            k2 = tuple((a, e) for a, e in k if keep(a))
            c = acc.get(k2, 0) + v
            if c:
                acc[k2] = c
            else:
                acc.pop(k2, None)
        return LaurentPoly(acc)

    def eval_all_ones(self) -> int:
        """Value after setting every variable equal to 1."""
        return sum(self.terms.values())

    # -- inspection --------------------------------------------------------

    def variables(self) -> set:
        return {a for k in self.terms for a, _ in k}

    def min_exponents(self) -> Dict[Arc, int]:
        """Per-variable minimum exponent over all terms (0 counts when absent)."""
        out: Dict[Arc, int] = {}
        for k in self.terms:
            present = dict(k)
            for a in self.variables():
                e = present.get(a, 0)
                if a not in out or e < out[a]:
                    out[a] = e
        return out

    def denominator_support(self) -> set:
        """Arcs whose variable occurs with negative exponent after clearing."""
        return {a for a, e in self.min_exponents().items() if e < 0}

    def coefficients(self):
        return list(self.terms.values())

    # -- presentation ------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def __str__(self) -> str:
        return format_fraction(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"

    def to_json(self):
        return [
            {"coeff": c, "exps": [[[a.m, a.n], e] for a, e in k]}
            for k, c in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data) -> "LaurentPoly":
        acc: Dict[ExpVec, int] = {}
        for entry in data:
            k = _expvec((Arc(m, n), e) for (m, n), e in entry["exps"])
            acc[k] = acc.get(k, 0) + entry["coeff"]
        return LaurentPoly(acc)


ONE = LaurentPoly.const(1)


def _monomial_str(k: ExpVec, coeff: int) -> str:
    factors = [f"x[{a.m},{a.n}]" + (f"^{e}" if e != 1 else "") for a, e in k]
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return f"{coeff}*{body}"


def format_fraction(p: LaurentPoly) -> str:
    """Canonical text: numerator over a single monomial denominator.

    The denominator collects every variable with a negative minimum
    exponent, so the numerator is an honest polynomial.
    """
    if not p.terms:
        return "0"
    mins = p.min_exponents()
    den = {a: -e for a, e in mins.items() if e < 0}
    num = p * LaurentPoly.monomial(den) if den else p
    parts = []
    for k, c in num.sorted_terms():
        s = _monomial_str(k, c)
        if parts:
            parts.append("- " + s[1:] if s.startswith("-") else "+ " + s)
        else:
            parts.append(s)
    num_str = " ".join(parts)
    if not den:
        return num_str
    den_str = "*".join(
        f"x[{a.m},{a.n}]" + (f"^{e}" if e != 1 else "")
        for a, e in sorted(den.items())
    )
    if len(num.terms) > 1:
        num_str = f"({num_str})"
    if "*" in den_str:
        den_str = f"({den_str})"
    return f"{num_str}/{den_str}"
