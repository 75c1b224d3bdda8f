"""Exact sparse Laurent polynomials and rational functions over Q.

Every formula in the package is carried by :class:`LaurentPolynomial`, a map
from integer exponent vectors to nonzero :class:`fractions.Fraction`
coefficients.  Variables live in a :class:`VariableTable` whose order fixes
both the exponent layout and the canonical (lexicographic) term order.

>>> t = VariableTable.standard(2)
>>> u1, v1 = t.var("U_1"), t.var("V_1")
>>> (u1 - v1) * (u1 + v1)
U_1^2 - V_1^2
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "TableMismatchError",
    "DivisionByZeroError",
    "VariableTable",
    "LaurentPolynomial",
    "RationalFunction",
    "Scalar",
    "P_TABLE",
    "p_poly",
    "add",
    "mul",
    "substitute",
    "evaluate",
    "rf_add",
    "rf_mul",
    "rf_div",
]

Scalar = Union[int, Fraction]
Exponent = tuple[int, ...]


class TableMismatchError(ValueError):
    """Operands belong to different variable tables."""


class DivisionByZeroError(ZeroDivisionError):
    """A zero denominator appeared during exact arithmetic."""


@dataclass(frozen=True)
class VariableTable:
    """Ordered, duplicate-free list of variable names."""

    names: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def of(cls, *names: str) -> VariableTable:
        return cls(tuple(names))

    @classmethod
    def standard(cls, g: int, aux: Iterable[str] = ()) -> VariableTable:
        """``p, U_1..U_g, V_1..V_g`` followed by auxiliary names."""
        base = ["p"] + [f"U_{i}" for i in range(1, g + 1)] + [f"V_{i}" for i in range(1, g + 1)]
        return cls(tuple(base) + tuple(aux))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in table {self.names}") from None

    def extend(self, *names: str) -> VariableTable:
        return VariableTable(self.names + tuple(n for n in names if n not in self._index))

    def zero_exponent(self) -> Exponent:
        return (0,) * len(self.names)

    # convenience constructors
    def var(self, name: str) -> LaurentPolynomial:
        return LaurentPolynomial.variable(self, name)

    def const(self, c: Scalar) -> LaurentPolynomial:
        return LaurentPolynomial.constant(self, c)

    def mono(self, exps: Mapping[str, int], coeff: Scalar = 1) -> LaurentPolynomial:
        return LaurentPolynomial.monomial(self, exps, coeff)


def _frac(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    # gmpy2 / numpy integer-likes
    if hasattr(c, "numerator") and hasattr(c, "denominator"):
        return Fraction(int(c.numerator), int(c.denominator))
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping[Exponent, Scalar] | None = None):
        n = len(table)
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for table of size {n}")
            c = _frac(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.table = table
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, table: VariableTable, terms: dict[Exponent, Fraction]) -> LaurentPolynomial:
        obj = cls.__new__(cls)
        obj.table = table
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors -----------------------------------------------------
    @classmethod
    def zero(cls, table: VariableTable) -> LaurentPolynomial:
        return cls._raw(table, {})

    @classmethod
    def constant(cls, table: VariableTable, c: Scalar) -> LaurentPolynomial:
        c = _frac(c)
        return cls._raw(table, {table.zero_exponent(): c} if c else {})

    @classmethod
    def variable(cls, table: VariableTable, name: str) -> LaurentPolynomial:
        e = [0] * len(table)
        e[table.index(name)] = 1
        return cls._raw(table, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, table: VariableTable, exps: Mapping[str, int], coeff: Scalar = 1) -> LaurentPolynomial:
        e = [0] * len(table)
        for name, k in exps.items():
            e[table.index(name)] += k
        return cls._raw(table, {tuple(e): _frac(coeff)} if coeff else {})

    # basic views ------------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        z = self.table.zero_exponent()
        return all(e == z for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get(self.table.zero_exponent(), Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, exps: Exponent | Mapping[str, int]) -> Fraction:
        if isinstance(exps, Mapping):
            e = [0] * len(self.table)
            for name, k in exps.items():
                e[self.table.index(name)] = k
            exps = tuple(e)
        return self._terms.get(tuple(exps), Fraction(0))

    def variables(self) -> list[str]:
        """Names of variables that occur with a nonzero exponent."""
        used = [False] * len(self.table)
        for e in self._terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return [n for n, u in zip(self.table.names, used) if u]

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return self.table.zero_exponent()
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self) -> Exponent:
        if not self._terms:
            return self.table.zero_exponent()
        return tuple(max(col) for col in zip(*self._terms))

    def leading(self) -> tuple[Exponent, Fraction]:
        """Largest term under the canonical order."""
        e = max(self._terms)
        return e, self._terms[e]

    # arithmetic -------------------------------------------------------
    def _coerce(self, other: object) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            if other.table != self.table:
                raise TableMismatchError(f"{self.table.names} vs {other.table.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.table, other)
        return None

    def __add__(self, other: object) -> LaurentPolynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(self.table, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial._raw(self.table, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> LaurentPolynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> LaurentPolynomial:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> LaurentPolynomial:
        if isinstance(other, (int, Fraction)):
            c0 = _frac(other)
            if not c0:
                return LaurentPolynomial.zero(self.table)
            return LaurentPolynomial._raw(self.table, {e: c * c0 for e, c in self._terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPolynomial._raw(self.table, out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> LaurentPolynomial:
        """Division by a nonzero scalar or by a monomial (exact in the Laurent ring)."""
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZeroError("division by zero scalar")
            return self * (Fraction(1) / _frac(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def inverse(self) -> LaurentPolynomial:
        """Inverse of a monomial."""
        if not self._terms:
            raise DivisionByZeroError("inverse of the zero polynomial")
        if len(self._terms) != 1:
            raise ValueError("only monomials are units in a Laurent polynomial ring")
        (e, c), = self._terms.items()
        return LaurentPolynomial._raw(self.table, {tuple(-k for k in e): 1 / c})

    def __pow__(self, n: int) -> LaurentPolynomial:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentPolynomial.constant(self.table, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, exps: Exponent) -> LaurentPolynomial:
        """Multiply by the monomial with exponent vector ``exps``."""
        return LaurentPolynomial._raw(
            self.table, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()}
        )

    # comparison -------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPolynomial.constant(self.table, other)._terms
        if isinstance(other, LaurentPolynomial):
            return self.table == other.table and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table.names, frozenset(self._terms.items())))
        return self._hash

    # substitution and evaluation --------------------------------------
    def retable(self, table: VariableTable) -> LaurentPolynomial:
        """Re-express over another table; variables that occur must exist there."""
        if table == self.table:
            return self
        idx = []
        for i, name in enumerate(self.table.names):
            idx.append(table.index(name) if name in table else None)
        n = len(table)
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            ne = [0] * n
            for i, k in enumerate(e):
                if k:
                    j = idx[i]
                    if j is None:
                        raise TableMismatchError(f"variable {self.table.names[i]!r} missing from target table")
                    ne[j] = k
            ne_t = tuple(ne)
            out[ne_t] = out.get(ne_t, 0) + c
        return LaurentPolynomial(table, out)

    def subs(self, bindings: Mapping[str, LaurentPolynomial | Scalar], table: VariableTable | None = None) -> LaurentPolynomial:
        """Substitute Laurent polynomials for variables, staying in the Laurent ring.

        Negative powers are allowed only when the image is a monomial.  Unbound
        variables are carried over by name into ``table`` (default: own table).
        """
        table = table or self.table
        n_self = len(self.table)
        bound: dict[int, LaurentPolynomial] = {}
        for name, img in bindings.items():
            if name not in self.table:
                continue
            if not isinstance(img, LaurentPolynomial):
                img = LaurentPolynomial.constant(table, img)
            elif img.table != table:
                img = img.retable(table)
            bound[self.table.index(name)] = img
        free = [i for i in range(n_self) if i not in bound]
        free_target = [table.index(self.table.names[i]) if self.table.names[i] in table else None for i in free]
        power_cache: dict[tuple[int, int], LaurentPolynomial] = {}

        def power(i: int, k: int) -> LaurentPolynomial:
            key = (i, k)
            if key not in power_cache:
                power_cache[key] = bound[i] ** k
            return power_cache[key]

        out = LaurentPolynomial.zero(table)
        acc: dict[Exponent, Fraction] = {}
        nt = len(table)
        for e, c in self._terms.items():
            base = [0] * nt
            for i, j in zip(free, free_target):
                if e[i]:
                    if j is None:
                        raise TableMismatchError(f"unbound variable {self.table.names[i]!r} missing from target table")
                    base[j] += e[i]
            term = LaurentPolynomial._raw(table, {tuple(base): c})
            for i in bound:
                if e[i]:
                    term = term * power(i, e[i])
            for te, tc in term._terms.items():
                s = acc.get(te, 0) + tc
                if s:
                    acc[te] = s
                else:
                    del acc[te]
        out = LaurentPolynomial._raw(table, acc)
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        return evaluate(self, point)

    def collect(self, names: Iterable[str]) -> dict[Exponent, LaurentPolynomial]:
        """Group terms by the exponents of every variable *not* in ``names``.

        Returns a map from those outer exponents to coefficient polynomials
        over the sub-table ``names`` (kept in table order).
        """
        names = set(names)
        inner_idx = [i for i, n in enumerate(self.table.names) if n in names]
        outer_idx = [i for i, n in enumerate(self.table.names) if n not in names]
        inner_table = VariableTable(tuple(self.table.names[i] for i in inner_idx))
        groups: dict[Exponent, dict[Exponent, Fraction]] = {}
        for e, c in self._terms.items():
            outer = tuple(e[i] for i in outer_idx)
            inner = tuple(e[i] for i in inner_idx)
            groups.setdefault(outer, {})[inner] = c
        return {k: LaurentPolynomial._raw(inner_table, v) for k, v in groups.items()}

    # serialization ----------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "vars": list(self.table.names),
            "terms": [{"coeff": _fmt_coeff(c), "exp": list(e)} for e, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> LaurentPolynomial:
        table = VariableTable(tuple(data["vars"]))
        terms = {tuple(t["exp"]): Fraction(t["coeff"]) for t in data["terms"]}
        return cls(table, terms)

    @classmethod
    def from_json(cls, text: str) -> LaurentPolynomial:
        return cls.from_dict(json.loads(text))

    def __repr__(self) -> str:
        return self.to_str()

    def to_str(self, descending: bool = True) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=descending):
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(self.table.names, e) if k
            )
            if not mono:
                parts.append(_fmt_coeff(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_fmt_coeff(c)}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


class RationalFunction:
    """Quotient of two Laurent polynomials, normalized without a GCD.

    The denominator carries no monomial content and has leading coefficient 1
    under the canonical order.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial | None = None):
        if den is None:
            den = LaurentPolynomial.constant(num.table, 1)
        if num.table != den.table:
            raise TableMismatchError(f"{num.table.names} vs {den.table.names}")
        if den.is_zero():
            raise DivisionByZeroError("zero denominator")
        if num.is_zero():
            den = LaurentPolynomial.constant(num.table, 1)
        else:
            m = tuple(-k for k in den.min_exponents())
            den = den.shift(m)
            num = num.shift(m)
            lead = den.leading()[1]
            if lead != 1:
                den = den * (1 / lead)
                num = num * (1 / lead)
        self.num = num
        self.den = den

    @property
    def table(self) -> VariableTable:
        return self.num.table

    @classmethod
    def of(cls, value: RationalFunction | LaurentPolynomial | Scalar, table: VariableTable | None = None) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, LaurentPolynomial):
            return cls(value)
        if table is None:
            raise ValueError("a table is needed to lift a scalar")
        return cls(LaurentPolynomial.constant(table, value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def to_laurent(self) -> LaurentPolynomial:
        if not self.is_laurent():
            raise ValueError("rational function has a non-monomial denominator")
        return self.num * (1 / self.den.constant_value())

    def _lift(self, other: object) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            if other.table != self.table:
                raise TableMismatchError(f"{self.table.names} vs {other.table.names}")
            return other
        if isinstance(other, LaurentPolynomial):
            if other.table != self.table:
                raise TableMismatchError(f"{self.table.names} vs {other.table.names}")
            return RationalFunction(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction(LaurentPolynomial.constant(self.table, other))
        return None

    def __add__(self, other: object) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: object) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZeroError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: object) -> RationalFunction:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n) if not self.is_zero() else _raise_zero()
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        d = evaluate(self.den, point)
        if not d:
            raise DivisionByZeroError("denominator vanishes at the point")
        return evaluate(self.num, point) / d

    def to_dict(self) -> dict:
        return {"num": self.num.to_dict(), "den": self.den.to_dict()}

    @classmethod
    def from_dict(cls, data: Mapping) -> RationalFunction:
        if "num" in data:
            return cls(LaurentPolynomial.from_dict(data["num"]), LaurentPolynomial.from_dict(data["den"]))
        return cls(LaurentPolynomial.from_dict(data))

    def __repr__(self) -> str:
        if self.is_laurent():
            return repr(self.to_laurent())
        return f"({self.num!r}) / ({self.den!r})"


P_TABLE = VariableTable.of("p")


def p_poly(coeffs: Mapping[int, Scalar], table: VariableTable = P_TABLE) -> LaurentPolynomial:
    """Laurent polynomial in ``p`` from a map exponent -> coefficient."""
    return sum((LaurentPolynomial.monomial(table, {"p": k}, c) for k, c in coeffs.items()), LaurentPolynomial.zero(table))


def _raise_zero() -> RationalFunction:
    raise DivisionByZeroError("inverse of the zero rational function")


# functional interface ------------------------------------------------------

def add(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a + b


def mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    return a * b


def rf_add(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a + b


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def rf_div(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a / b


def evaluate(f: LaurentPolynomial, point: Mapping[str, Scalar]) -> Fraction:
    """Exact value of ``f`` at a rational point binding every occurring variable."""
    vals: list[Fraction | None] = []
    for name in f.table.names:
        vals.append(_frac(point[name]) if name in point else None)
    total = Fraction(0)
    for e, c in f._terms.items():
        term = c
        for i, k in enumerate(e):
            if not k:
                continue
            v = vals[i]
            if v is None:
                raise KeyError(f"variable {f.table.names[i]!r} is not bound")
            if not v and k < 0:
                raise DivisionByZeroError(f"{f.table.names[i]} = 0 raised to {k}")
            term *= v ** k
        total += term
    return total


def substitute(
    f: LaurentPolynomial,
    bindings: Mapping[str, RationalFunction | LaurentPolynomial | Scalar],
    table: VariableTable | None = None,
) -> RationalFunction:
    """Simultaneous substitution of rational functions for variables.

    Works over a common denominator: with image ``n_x/d_x`` and exponent range
    ``[lo_x, hi_x]`` of ``x`` in ``f``, everything is multiplied by
    ``d_x^max(hi_x,0) * n_x^max(-lo_x,0)`` so all powers become nonnegative.
    """
    table = table or f.table
    imgs: dict[int, RationalFunction] = {}
    for name, img in bindings.items():
        if name not in f.table:
            continue
        if isinstance(img, RationalFunction):
            if img.table != table:
                img = RationalFunction(img.num.retable(table), img.den.retable(table))
        elif isinstance(img, LaurentPolynomial):
            img = RationalFunction(img.retable(table))
        else:
            img = RationalFunction(LaurentPolynomial.constant(table, img))
        imgs[f.table.index(name)] = img

    if f.is_zero():
        return RationalFunction(LaurentPolynomial.zero(table))
    lo = f.min_exponents()
    hi = f.max_exponents()
    for i, img in imgs.items():
        if lo[i] < 0 and img.is_zero():
            raise DivisionByZeroError(f"{f.table.names[i]} maps to 0 but occurs with a negative exponent")

    free_names = {n: LaurentPolynomial.variable(table, n) for j, n in enumerate(f.table.names) if j not in imgs and n in table}
    pow_cache: dict[tuple[int, str, int], LaurentPolynomial] = {}

    def pw(i: int, which: str, k: int) -> LaurentPolynomial:
        key = (i, which, k)
        if key not in pow_cache:
            base = imgs[i].num if which == "n" else imgs[i].den
            pow_cache[key] = base ** k
        return pow_cache[key]

    one = LaurentPolynomial.constant(table, 1)
    num = LaurentPolynomial.zero(table)
    for e, c in f._terms.items():
        mono_exps: dict[str, int] = {}
        term = one * c
        for i, k in enumerate(e):
            if i in imgs:
                a = max(hi[i], 0)
                b = max(-lo[i], 0)
                # x^k * d^a * n^b = n^(k+b) * d^(a-k)
                term = term * pw(i, "n", k + b) * pw(i, "d", a - k)
            elif k:
                name = f.table.names[i]
                if name not in free_names:
                    raise TableMismatchError(f"unbound variable {name!r} missing from target table")
                mono_exps[name] = k
        if mono_exps:
            term = term * LaurentPolynomial.monomial(table, mono_exps)
        num = num + term
    den = one
    for i in imgs:
        a = max(hi[i], 0)
        b = max(-lo[i], 0)
        den = den * pw(i, "d", a) * pw(i, "n", b)
    return RationalFunction(num, den)
