"""Exact sparse multivariate polynomial arithmetic over Q.

Two kinds of variables occur.  An x-variable carries a place in {1, 2} and
a poset element, and renders as ``a1``, ``a2``.  A u-variable carries a
pair of poset elements (the upper slot may be empty) and renders as
``u[a,b]`` or ``u[0,b]``.  Monomials and polynomials are immutable with
canonical internal form, so structural equality and hashing just work.

Term order is always explicit: a MonomialOrder fixes the variable sequence
and positive integer weights, compares by weighted degree and breaks ties
reverse-lexicographically (the later a variable sits in the sequence, the
more an exponent on it *hurts*).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    DomainError,
    MinorIndexError,
    NonSquareError,
    ParseError,
    ShapeError,
    UnknownVariableError,
)


class XVar:
    """The letterplace variable x_{place, element}."""

    __slots__ = ("place", "element", "_hash")

    def __init__(self, place, element):
        if place not in (1, 2):
            raise DomainError(f"x-variable place must be 1 or 2, got {place!r}")
        self.place = place
        self.element = element
        self._hash = hash(("x", place, element))

    def render(self):
        return f"{self.element}{self.place}"

    def __eq__(self, other):
        return (
            isinstance(other, XVar)
            and self.place == other.place
            and self.element == other.element
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return self.render()


class UVar:
    """The deformation parameter u_{upper, lower}; upper=None is the empty
    slot reserved for the root."""

    __slots__ = ("upper", "lower", "_hash")

    def __init__(self, upper, lower):
        self.upper = upper
        self.lower = lower
        self._hash = hash(("u", upper, lower))

    def render(self):
        return f"u[{self.upper if self.upper is not None else '0'},{self.lower}]"

    def __eq__(self, other):
        return (
            isinstance(other, UVar)
            and self.upper == other.upper
            and self.lower == other.lower
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return self.render()


def _storage_key(v):
    # Ring-independent total order used only for canonical monomial storage.
    if isinstance(v, XVar):
        return (0, v.element, v.place)
    return (1, v.lower, v.upper if v.upper is not None else "")


class Monomial:
    """A power product, stored as a sorted tuple of (variable, exponent>0)."""

    __slots__ = ("pairs", "_hash")

    def __init__(self, pairs=()):
        # `pairs` is trusted to be normalized; use from_pairs otherwise.
        self.pairs = tuple(pairs)
        self._hash = hash(self.pairs)

    @staticmethod
    def from_pairs(pairs):
        acc = {}
        for v, e in pairs:
            acc[v] = acc.get(v, 0) + e
        for v, e in acc.items():
            if e < 0:
                raise DomainError(f"negative exponent on {v!r}")
        items = [(v, e) for v, e in acc.items() if e != 0]
        items.sort(key=lambda p: _storage_key(p[0]))
        return Monomial(tuple(items))

    @staticmethod
    def var(v, exp=1):
        return Monomial.from_pairs([(v, exp)])

    @property
    def is_one(self):
        return not self.pairs

    def degree(self):
        return sum(e for _, e in self.pairs)

    def u_degree(self):
        """Total exponent carried by u-variables."""
        return sum(e for v, e in self.pairs if isinstance(v, UVar))

    def exponent(self, v):
        for w, e in self.pairs:
            if w == v:
                return e
        return 0

    def variables(self):
        return tuple(v for v, _ in self.pairs)

    def mul(self, other):
        a, b = self.pairs, other.pairs
        i = j = 0
        out = []
        while i < len(a) and j < len(b):
            ka, kb = _storage_key(a[i][0]), _storage_key(b[j][0])
            if ka == kb:
                out.append((a[i][0], a[i][1] + b[j][1]))
                i += 1
                j += 1
            elif ka < kb:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial(tuple(out))

    def divides(self, other):
        j = 0
        ob = other.pairs
        for v, e in self.pairs:
            k = _storage_key(v)
            while j < len(ob) and _storage_key(ob[j][0]) < k:
                j += 1
            if j >= len(ob) or ob[j][0] != v or ob[j][1] < e:
                return False
        return True

    def div(self, other):
        """self / other; other must divide self."""
        if not other.divides(self):
            raise DomainError(f"{other!r} does not divide {self!r}")
        quo = dict(self.pairs)
        for v, e in other.pairs:
            quo[v] -= e
        items = [(v, e) for v, e in quo.items() if e]
        items.sort(key=lambda p: _storage_key(p[0]))
        return Monomial(tuple(items))

    def lcm(self, other):
        acc = dict(self.pairs)
        for v, e in other.pairs:
            if acc.get(v, 0) < e:
                acc[v] = e
        items = sorted(acc.items(), key=lambda p: _storage_key(p[0]))
        return Monomial(tuple(items))

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.pairs == other.pairs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.pairs:
            return "1"
        return "*".join(
            v.render() + (f"^{e}" if e != 1 else "") for v, e in self.pairs
        )


MONOMIAL_ONE = Monomial()


def _as_coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise DomainError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Polynomial:
    """Immutable map monomial -> nonzero Fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms):
        # `terms` is trusted: a dict with no zero coefficients.
        self.terms = terms
        self._hash = None

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def constant(c):
        c = _as_coeff(c)
        return Polynomial({MONOMIAL_ONE: c}) if c else _ZERO

    @staticmethod
    def variable(v):
        return Polynomial({Monomial.var(v): Fraction(1)})

    @staticmethod
    def term(mono, coeff=1):
        c = _as_coeff(coeff)
        return Polynomial({mono: c}) if c else _ZERO

    @staticmethod
    def from_terms(pairs):
        acc = {}
        for mono, c in pairs:
            c = _as_coeff(c)
            s = acc.get(mono, Fraction(0)) + c
            if s:
                acc[mono] = s
            else:
                acc.pop(mono, None)
        return Polynomial(acc)

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, mono):
        return self.terms.get(mono, Fraction(0))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, Fraction(0)) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Polynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_coeff(other)
            if not c:
                return _ZERO
            return Polynomial({m: c * d for m, d in self.terms.items()})
        if isinstance(other, Monomial):
            return Polynomial({m.mul(other): c for m, c in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = acc.get(m, Fraction(0)) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Polynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("polynomial powers take nonnegative integers")
        out = _ONE
        for _ in range(n):
            out = out * self
        return out

    def substitute(self, mapping):
        """Ring morphism determined by variable -> Polynomial; variables
        absent from the mapping are left alone."""
        out = _ZERO
        cache = {}
        for mono, c in self.terms.items():
            part = Polynomial.constant(c)
            for v, e in mono.pairs:
                key = (v, e)
                powed = cache.get(key)
                if powed is None:
                    base = mapping.get(v)
                    powed = (
                        Polynomial.term(Monomial.var(v, e))
                        if base is None
                        else base**e
                    )
                    cache[key] = powed
                part = part * powed
            out = out + part
        return out

    def variables(self):
        seen = set()
        for m in self.terms:
            seen.update(m.variables())
        return seen

    def min_u_degree(self):
        """Smallest u-degree among the monomials; None for the zero
        polynomial."""
        if not self.terms:
            return None
        return min(m.u_degree() for m in self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(
            self.terms, key=lambda m: [(_storage_key(v), e) for v, e in m.pairs]
        ):
            c = self.terms[m]
            bits.append(f"{c}*{m!r}" if not m.is_one else f"{c}")
        return " + ".join(bits)


_ZERO = Polynomial({})
_ONE = Polynomial({MONOMIAL_ONE: Fraction(1)})


class MonomialOrder:
    """Weighted degree, ties broken reverse-lexicographically against the
    fixed variable sequence (exponents on later variables lose)."""

    def __init__(self, variables, weights):
        self.variables = tuple(variables)
        self.index = {v: i for i, v in enumerate(self.variables)}
        if len(self.index) != len(self.variables):
            raise DomainError("duplicate variable in order")
        self.weights = {}
        for v in self.variables:
            w = weights[v]
            if not isinstance(w, int) or w <= 0:
                raise DomainError(f"weight of {v!r} must be a positive integer")
            self.weights[v] = w
        self._key_cache = {}

    def weight(self, mono):
        try:
            return sum(self.weights[v] * e for v, e in mono.pairs)
        except KeyError as exc:
            raise UnknownVariableError(f"{exc.args[0]!r} is not in this ring") from None

    def key(self, mono):
        """Sort key: bigger key = bigger monomial."""
        k = self._key_cache.get(mono)
        if k is not None:
            return k
        dense = [0] * len(self.variables)
        w = 0
        for v, e in mono.pairs:
            i = self.index.get(v)
            if i is None:
                raise UnknownVariableError(f"{v!r} is not in this ring")
            dense[i] = e
            w += self.weights[v] * e
        k = (w, tuple(-x for x in reversed(dense)))
        self._key_cache[mono] = k
        return k

    def greater(self, m1, m2):
        return self.key(m1) > self.key(m2)

    def leading_term(self, poly):
        if poly.is_zero:
            raise DomainError("the zero polynomial has no leading term")
        m = max(poly.terms, key=self.key)
        return m, poly.terms[m]

    def leading_monomial(self, poly):
        return self.leading_term(poly)[0]

    def sorted_terms(self, poly):
        """Terms of poly, leading term first."""
        return sorted(poly.terms.items(), key=lambda t: self.key(t[0]), reverse=True)


# -- rendering and parsing --------------------------------------------------


def render_monomial(mono, order):
    if mono.is_one:
        return "1"
    parts = []
    for v, e in sorted(mono.pairs, key=lambda p: order.index[p[0]]):
        parts.append(v.render() if e == 1 else f"{v.render()}^{e}")
    return "*".join(parts)


def render_polynomial(poly, order):
    """Canonical text: terms in descending order, `*` between factors,
    coefficient 1 dropped, -1 shown as a bare minus."""
    if poly.is_zero:
        return "0"
    out = []
    for i, (m, c) in enumerate(order.sorted_terms(poly)):
        neg = c < 0
        mag = -c if neg else c
        if m.is_one:
            body = str(mag)
        elif mag == 1:
            body = render_monomial(m, order)
        else:
            body = f"{mag}*{render_monomial(m, order)}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"{' - ' if neg else ' + '}{body}")
    return "".join(out)


def polynomial_to_json(poly, order):
    """JSON-ready list of terms, leading term first."""
    terms = []
    for m, c in order.sorted_terms(poly):
        mono = {}
        for v, e in sorted(m.pairs, key=lambda p: order.index[p[0]]):
            mono[v.render()] = e
        terms.append({"coeff": f"{c.numerator}/{c.denominator}", "monomial": mono})
    return terms


_COEFF_RE = re.compile(r"^(\d+)(?:/(\d+))?$")
_FACTOR_RE = re.compile(r"^([A-Za-z][A-Za-z0-9]*|u\[[A-Za-z0-9]+,[A-Za-z][A-Za-z0-9]*\])(?:\^(\d+))?$")


def variable_table(variables):
    """Map canonical render string -> VariableId, for the parser."""
    table = {}
    for v in variables:
        s = v.render()
        if s in table and table[s] != v:
            raise DomainError(f"two distinct variables render as {s!r}")
        table[s] = v
    return table


def parse_polynomial(text, variables):
    """Inverse of render_polynomial over a known variable universe.

    Accepts any term order and spacing; `variables` is an iterable of
    VariableIds (or a ready-made table from variable_table).
    """
    table = variables if isinstance(variables, dict) else variable_table(variables)
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text")
    # split into signed terms at top level (no parentheses in this grammar)
    chunks = re.split(r"\s*([+-])\s*", s)
    if chunks[0] == "":
        chunks = chunks[1:]
    else:
        chunks = ["+"] + chunks
    if len(chunks) % 2 != 0:
        raise ParseError(f"cannot parse polynomial: {text!r}")
    terms = []
    for sign, body in zip(chunks[0::2], chunks[1::2]):
        if not body:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = Fraction(1) if sign == "+" else Fraction(-1)
        pairs = []
        for factor in body.split("*"):
            factor = factor.strip()
            m = _COEFF_RE.match(factor)
            if m:
                num = int(m.group(1))
                den = int(m.group(2)) if m.group(2) else 1
                if den == 0:
                    raise ParseError(f"zero denominator in {factor!r}")
                coeff *= Fraction(num, den)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ParseError(f"cannot parse factor {factor!r}")
            name, exp = m.group(1), int(m.group(2) or 1)
            v = table.get(name)
            if v is None:
                raise UnknownVariableError(f"unknown variable {name!r}")
            pairs.append((v, exp))
        terms.append((Monomial.from_pairs(pairs), coeff))
    return Polynomial.from_terms(terms)


# -- matrices ---------------------------------------------------------------


class PolyMatrix:
    """A rectangular matrix of polynomials with memoized cofactor minors."""

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ShapeError("ragged rows")
        self.rows = rows
        self._det_memo = {}

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i, j):
        return self.rows[i][j]

    def determinant(self):
        if self.nrows != self.ncols:
            raise NonSquareError(f"{self.nrows}x{self.ncols} matrix has no determinant")
        return self._minor(tuple(range(self.nrows)), tuple(range(self.ncols)))

    def minor_det(self, delete_rows=(), delete_cols=()):
        """Determinant of the submatrix obtained by deleting the given row
        and column indices (which must leave a square matrix)."""
        dr, dc = tuple(delete_rows), tuple(delete_cols)
        for idx, bound, what in ((dr, self.nrows, "row"), (dc, self.ncols, "column")):
            if len(set(idx)) != len(idx):
                raise MinorIndexError(f"repeated {what} index in {idx}")
            for i in idx:
                if not (0 <= i < bound):
                    raise MinorIndexError(f"{what} index {i} out of range")
        rows = tuple(i for i in range(self.nrows) if i not in dr)
        cols = tuple(j for j in range(self.ncols) if j not in dc)
        if len(rows) != len(cols):
            raise NonSquareError(f"minor shape {len(rows)}x{len(cols)} is not square")
        return self._minor(rows, cols)

    def _minor(self, rows, cols):
        if not rows:
            return Polynomial.one()
        key = (rows, cols)
        cached = self._det_memo.get(key)
        if cached is not None:
            return cached
        i = rows[0]
        acc = Polynomial.zero()
        sign = 1
        for t, j in enumerate(cols):
            e = self.rows[i][j]
            if not e.is_zero:
                sub = self._minor(rows[1:], cols[:t] + cols[t + 1 :])
                piece = e * sub
                acc = acc + piece if sign > 0 else acc - piece
            sign = -sign
        self._det_memo[key] = acc
        return acc

    def __repr__(self):
        return f"PolyMatrix({self.nrows}x{self.ncols})"
