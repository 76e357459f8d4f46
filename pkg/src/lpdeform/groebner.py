"""Buchberger's algorithm, reduced bases, and normal forms.

The verifier reduces many structured polynomials modulo one fixed basis, so
this is the plain textbook algorithm: normal selection strategy (smallest
S-pair lcm first), the coprime-leading-term criterion, full tail reduction
at the end.  Two budgets turn runaway computations into ResourceLimitError
instead of hangs: a cap on processed S-pairs and a cap on the weighted
degree of any monomial created during reduction.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .polynomials import Polynomial

DEFAULT_MAX_PAIRS = 1_000_000
DEFAULT_MAX_WEIGHT = 10_000


def _monic(f, order):
    _, c = order.leading_term(f)
    return f * (Fraction(1) / c) if c != 1 else f


def _divide(f, leads, order, max_weight=None):
    """Complete division remainder of f by the (lm, poly) list `leads`."""
    work = dict(f.terms)
    remainder = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work[m]
        hit = None
        for lm, g in leads:
            if lm.divides(m):
                hit = (lm, g)
                break
        if hit is None:
            remainder[m] = c
            del work[m]
            continue
        lm, g = hit
        q = m.div(lm)
        # g is monic, so the head term cancels exactly
        for gm, gc in g.terms.items():
            t = gm.mul(q)
            if max_weight is not None and key(t)[0] > max_weight:
                raise ResourceLimitError(
                    f"monomial weight exceeded {max_weight} during reduction"
                )
            s = work.get(t, Fraction(0)) - c * gc
            if s:
                work[t] = s
            else:
                work.pop(t, None)
    return Polynomial(remainder)


def s_polynomial(f, g, order):
    mf, cf = order.leading_term(f)
    mg, cg = order.leading_term(g)
    l = mf.lcm(mg)
    tf = Polynomial.term(l.div(mf), Fraction(1) / cf)
    tg = Polynomial.term(l.div(mg), Fraction(1) / cg)
    return f * tf - g * tg


class GroebnerBasis:
    """A reduced Groebner basis: monic generators, no monomial of any
    generator divisible by another generator's leading monomial, sorted by
    leading monomial.  This form is unique for (ideal, order), so equal
    ideals produce structurally equal bases."""

    def __init__(self, polys, order):
        self.order = order
        self.polys = tuple(_monic(g, order) for g in polys)
        self._leads = [(order.leading_monomial(g), g) for g in self.polys]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.polys == other.polys
            and self.order.variables == other.order.variables
        )

    def leading_monomials(self):
        return tuple(lm for lm, _ in self._leads)

    def normal_form(self, f):
        """The unique remainder of f modulo this basis (zero iff f lies in
        the ideal)."""
        return _divide(f, self._leads, self.order)

    def contains(self, f):
        return self.normal_form(f).is_zero

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} polys)"


def normal_form(f, basis):
    return basis.normal_form(f)


def buchberger(gens, order, max_pairs=DEFAULT_MAX_PAIRS, max_weight=DEFAULT_MAX_WEIGHT):
    """Reduced Groebner basis of the ideal generated by `gens`.

    Raises ResourceLimitError when more than max_pairs S-pairs are
    processed or any monomial's weighted degree exceeds max_weight.
    Deterministic: the unique reduced basis, sorted by leading monomial.
    """
    G = []
    for f in gens:
        if f.is_zero:
            continue
        G.append(_monic(f, order))
    if not G:
        raise DomainError("no nonzero generators")

    lm = [order.leading_monomial(g) for g in G]
    leads = list(zip(lm, G))
    heap = []
    for i in range(len(G)):
        for j in range(i):
            heapq.heappush(heap, (order.key(lm[i].lcm(lm[j])), j, i))

    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        l = lm[i].lcm(lm[j])
        if l == lm[i].mul(lm[j]):
            continue  # coprime leading terms: S-pair reduces to zero
        processed += 1
        if processed > max_pairs:
            raise ResourceLimitError(f"S-pair budget of {max_pairs} exceeded")
        s = s_polynomial(G[i], G[j], order)
        r = _divide(s, leads, order, max_weight)
        if r.is_zero:
            continue
        r = _monic(r, order)
        k = len(G)
        G.append(r)
        lm.append(order.leading_monomial(r))
        leads.append((lm[k], r))
        for t in range(k):
            heapq.heappush(heap, (order.key(lm[k].lcm(lm[t])), t, k))

    # minimalize: drop any generator whose lead is divisible by another's
    by_key = sorted(range(len(G)), key=lambda i: order.key(lm[i]))
    kept = []
    for i in by_key:
        if not any(lm[j].divides(lm[i]) for j in kept):
            kept.append(i)
    # tail-reduce each survivor against the others
    reduced = []
    for i in kept:
        others = [(lm[j], G[j]) for j in kept if j != i]
        reduced.append(_divide(G[i], others, order) if others else G[i])
    reduced.sort(key=lambda g: order.key(order.leading_monomial(g)))
    return GroebnerBasis(reduced, order)
