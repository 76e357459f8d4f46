"""Degree-0 first-order deformations of the letterplace quotient.

Each generator of the cotangent module in the relevant degrees sends one
quadric p1*p2 to a square-free monomial prescribed by a pair (D, U): an
inclusion-minimal lower-bound set D for everything strictly above p, and an
inclusion-minimal upper-bound set U for everything strictly below p, with D
living outside the ideal below p, U outside the filter above p, and no
element of D under an element of U.  The image is

    p1*p2  |->  (prod over r in D of r1) * (prod over s in U of s2).

For rooted trees this collapses: D is forced to be the child set of p and U
is a single element q with meet(q, p) = parent(p) (or empty for the root),
in bijection with the deformation parameters u_{q,p}."""

from __future__ import annotations

from itertools import combinations

from .posets import as_rooted_tree
from .polynomials import Monomial, XVar


class T1Generator:
    """One cotangent generator: p1*p2 |-> image, tagged with its (D, U)."""

    __slots__ = ("source", "lower_set", "upper_set", "image")

    def __init__(self, source, lower_set, upper_set, image):
        self.source = source
        self.lower_set = tuple(lower_set)
        self.upper_set = tuple(upper_set)
        self.image = image

    def key(self):
        return (self.source, self.lower_set, self.upper_set, self.image)

    def __eq__(self, other):
        return isinstance(other, T1Generator) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"T1Generator({self.source}: D={self.lower_set}, U={self.upper_set})"


def _image(lower_set, upper_set):
    pairs = [(XVar(1, r), 1) for r in lower_set]
    pairs += [(XVar(2, s), 1) for s in upper_set]
    return Monomial.from_pairs(pairs)


def _minimal_bound_sets(poset, targets, within, lower):
    """Inclusion-minimal S within `within` such that every target t admits
    s in S with t <= s (upper) or s <= t (lower=True).

    Deterministic: results sorted by size, then by linear-extension index
    tuple.  The trivial answer for no targets is the empty set.
    """
    targets = tuple(targets)
    pos = {p: i for i, p in enumerate(poset.linear_extension())}
    pool = sorted(within, key=pos.__getitem__)
    if not targets:
        return [()]

    def bounds(s, t):
        return poset.le(s, t) if lower else poset.le(t, s)

    found = []
    for size in range(1, len(pool) + 1):
        for combo in combinations(pool, size):
            if any(set(f) <= set(combo) for f in found):
                continue
            if all(any(bounds(s, t) for s in combo) for t in targets):
                found.append(combo)
    found.sort(key=lambda c: (len(c), tuple(pos[s] for s in c)))
    return found


def minimal_upper_bound_sets(poset, targets, within):
    """Inclusion-minimal U in `within` with every target below some member."""
    return _minimal_bound_sets(poset, targets, within, lower=False)


def minimal_lower_bound_sets(poset, targets, within):
    """Inclusion-minimal D in `within` with every target above some member."""
    return _minimal_bound_sets(poset, targets, within, lower=True)


def t1_generators(poset):
    """All cotangent generators of a finite poset, ordered by source
    element, then upper set, then lower set (lexicographically along the
    linear extension)."""
    out = []
    elements = set(poset.elements)
    for p in poset.linear_extension():
        upper_pool = elements - poset.filter_at_or_above(p)
        lower_pool = elements - poset.ideal_at_or_below(p)
        us = minimal_upper_bound_sets(poset, poset.strict_ideal_below(p), upper_pool)
        ds = minimal_lower_bound_sets(poset, poset.strict_filter_above(p), lower_pool)
        for u_set in us:
            for d_set in ds:
                if any(poset.le(r, s) for r in d_set for s in u_set):
                    continue
                out.append(T1Generator(p, d_set, u_set, _image(d_set, u_set)))
    return out


def t1_generators_tree(tree):
    """The rooted-tree shortcut: one generator per deformation parameter.

    For non-root p, D = children(p) and U = {q} for each q with
    meet(q, p) = parent(p); for the root, D = children(root) and U empty.
    Produces the same list as t1_generators, in the same order.
    """
    tree = as_rooted_tree(tree)
    order = tree.linear_extension()
    out = []
    for p in order:
        d_set = tree.children(p)
        if p == tree.root:
            out.append(T1Generator(p, d_set, (), _image(d_set, ())))
            continue
        a = tree.parent(p)
        for q in order:
            if q != p and tree.meet(q, p) == a:
                out.append(T1Generator(p, d_set, (q,), _image(d_set, (q,))))
    return out
