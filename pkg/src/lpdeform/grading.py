"""The multigrading of B(2,P) and the weighted (coarsened) Hilbert function.

The grading group is free on the symbols p1, p2 (one pair per poset
element); we reuse XVar objects as those symbols.  Writing

    hat(p) = p2 - sum over children b of b1,

the variables are graded by

    deg x_{i,p}  = p_i
    deg u_{q,p}  = p1 - q2 + hat(p)
    deg u_{0,r}  = r1 + hat(r)          (r the root).

This grading admits a strictly positive coarsening: give every p2 weight 1
and every p1 weight 1 + (sum of the children's p1 weights); then every
u-parameter comes out at weight 1 (the root's at 2), so weighted degree is
a genuine grading with finite-dimensional pieces — that's what the
truncated Hilbert function counts.
"""

from __future__ import annotations

from .errors import DomainError, NotHomogeneousError, UnknownVariableError
from .groebner import buchberger
from .letterplace import ring_variables
from .polynomials import MonomialOrder, UVar, XVar


class MultiDegree:
    """An element of the free abelian group on the symbols p1, p2."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords):
        # trusted: dict symbol -> nonzero int
        self.coords = coords
        self._hash = None

    @staticmethod
    def zero():
        return _ZERO_DEGREE

    @staticmethod
    def unit(place, element):
        return MultiDegree({XVar(place, element): 1})

    @staticmethod
    def of_pairs(pairs):
        acc = {}
        for sym, c in pairs:
            s = acc.get(sym, 0) + c
            if s:
                acc[sym] = s
            else:
                acc.pop(sym, None)
        return MultiDegree(acc)

    @property
    def is_zero(self):
        return not self.coords

    def __add__(self, other):
        acc = dict(self.coords)
        for sym, c in other.coords.items():
            s = acc.get(sym, 0) + c
            if s:
                acc[sym] = s
            else:
                acc.pop(sym, None)
        return MultiDegree(acc)

    def __neg__(self):
        return MultiDegree({sym: -c for sym, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return _ZERO_DEGREE
        return MultiDegree({sym: n * c for sym, c in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MultiDegree) and self.coords == other.coords

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coords.items()))
        return self._hash

    def render(self):
        if not self.coords:
            return "0"
        bits = []
        for sym in sorted(self.coords, key=lambda s: (s.element, s.place)):
            c = self.coords[sym]
            mag = f"{abs(c)}*" if abs(c) != 1 else ""
            bits.append(("-" if c < 0 else ("+" if bits else "")) + mag + sym.render())
        return "".join(bits)

    def __repr__(self):
        return f"MultiDegree({self.render()})"


_ZERO_DEGREE = MultiDegree({})


def hat_degree(tree, p):
    """hat(p) = p2 - sum of b1 over the children b of p."""
    pairs = [(XVar(2, p), 1)]
    for b in tree.children(p):
        pairs.append((XVar(1, b), -1))
    return MultiDegree.of_pairs(pairs)


def variable_degree(tree, v):
    """The multidegree of a ring variable of B(2,P)."""
    if isinstance(v, XVar):
        if v.element not in tree:
            raise UnknownVariableError(f"{v!r}: {v.element!r} is not a poset element")
        return MultiDegree.unit(v.place, v.element)
    if isinstance(v, UVar):
        p = v.lower
        if p not in tree:
            raise UnknownVariableError(f"{v!r}: {p!r} is not a poset element")
        if v.upper is None:
            if p != tree.root:
                raise UnknownVariableError(f"{v!r}: empty upper slot is for the root")
            return MultiDegree.unit(1, p) + hat_degree(tree, p)
        q = v.upper
        if q not in tree or p == tree.root or tree.meet(q, p) != tree.parent(p):
            raise UnknownVariableError(f"{v!r} is not a parameter of this tree")
        return (
            MultiDegree.unit(1, p) - MultiDegree.unit(2, q) + hat_degree(tree, p)
        )
    raise UnknownVariableError(f"unsupported variable {v!r}")


def monomial_degree(tree, mono):
    deg = MultiDegree.zero()
    for v, e in mono.pairs:
        deg = deg + variable_degree(tree, v) * e
    return deg


def homogeneous_degree(tree, f):
    """The common multidegree of f's monomials (zero polynomial: degree 0).

    Raises NotHomogeneousError with a two-monomial witness otherwise.
    """
    if f.is_zero:
        return MultiDegree.zero()
    it = iter(f.terms)
    m0 = next(it)
    d0 = monomial_degree(tree, m0)
    for m in it:
        d = monomial_degree(tree, m)
        if d != d0:
            raise NotHomogeneousError(
                f"monomial {m0!r} has degree {d0.render()} but {m!r} has {d.render()}",
                m0,
                d0,
                m,
                d,
            )
    return d0


def positivity_witness(tree):
    """Strictly positive integer weights that coarsen the multigrading.

    Returns an ordered map over ring_variables(tree); every u-parameter
    lands on weight 1 except the root's, which gets 2.
    """
    order = tree.linear_extension()
    d1 = {}
    for p in reversed(order):
        d1[p] = 1 + sum(d1[b] for b in tree.children(p))
    symbol_weight = {}
    for p in order:
        symbol_weight[XVar(1, p)] = d1[p]
        symbol_weight[XVar(2, p)] = 1
    weights = {}
    for v in ring_variables(tree):
        if isinstance(v, XVar):
            w = symbol_weight[v]
        else:
            deg = variable_degree(tree, v)
            w = sum(c * symbol_weight[sym] for sym, c in deg.coords.items())
        if w <= 0:
            raise DomainError(f"weight of {v!r} came out nonpositive ({w})")
        weights[v] = w
    return weights


def monomial_order_for(tree):
    """The package's working order on B(2,P): positivity-witness weights,
    reverse-lex tie-break, x-variables before u-parameters."""
    return MonomialOrder(ring_variables(tree), positivity_witness(tree))


def truncated_hilbert(gens, weights, max_degree, basis=None):
    """Dimensions of the weighted-degree pieces 0..max_degree of R/(gens),
    R the polynomial ring on exactly the variables listed in `weights`.

    Counts standard monomials of each weight; pass a ready GroebnerBasis
    (computed for the same weighted order) to skip recomputation.
    """
    variables = list(weights)
    order = MonomialOrder(variables, weights)
    if basis is None:
        basis = buchberger(gens, order)
    leads = [m.pairs for m in basis.leading_monomials()]
    counts = [0] * (max_degree + 1)
    expo = {}

    def standard():
        for lead in leads:
            if all(expo.get(v, 0) >= e for v, e in lead):
                return False
        return True

    def rec(i, used):
        if i == len(variables):
            if standard():
                counts[used] += 1
            return
        v = variables[i]
        w = weights[v]
        e = 0
        while used + e * w <= max_degree:
            if e:
                expo[v] = e
            rec(i + 1, used + e * w)
            e += 1
        expo.pop(v, None)

    rec(0, 0)
    return counts
