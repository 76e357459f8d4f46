"""The quadratic letterplace ideal L(2,P) and the deformation parameters.

L(2,P) lives in k[x_{i,p} : i in {1,2}, p in P] and is generated by the
monomials p1*q2 over all comparable pairs p <= q.  For a rooted tree the
deformation of each non-root p introduces one parameter u_{q,p} per element
q whose meet with p is p's parent (q is either the parent itself or sits
weakly above a sibling of p); the root gets the single parameter u_{0,root}.
"""

from __future__ import annotations

from .posets import as_rooted_tree
from .polynomials import Monomial, Polynomial, UVar, XVar


def comparable_pairs(poset):
    """All (p, q) with p <= q, ordered by linear extension in both slots."""
    order = poset.linear_extension()
    return tuple((p, q) for p in order for q in order if poset.le(p, q))


def letterplace_generators(poset):
    """The generators p1*q2 of L(2,P), as ((p, q), Monomial) pairs."""
    out = []
    for p, q in comparable_pairs(poset):
        mono = Monomial.from_pairs([(XVar(1, p), 1), (XVar(2, q), 1)])
        out.append(((p, q), mono))
    return out


def letterplace_polynomials(poset):
    return [Polynomial.term(m) for _, m in letterplace_generators(poset)]


def u_variables(tree):
    """The deformation parameters, ordered by (p, then q) along the linear
    extension; u_{0,root} comes first because the root begins every linear
    extension."""
    tree = as_rooted_tree(tree)
    order = tree.linear_extension()
    out = []
    for p in order:
        if p == tree.root:
            out.append(UVar(None, p))
            continue
        a = tree.parent(p)
        for q in order:
            if q != p and tree.meet(q, p) == a:
                out.append(UVar(q, p))
    return out


def x_variables(poset):
    """x_{1,p}, x_{2,p} for p along the linear extension."""
    out = []
    for p in poset.linear_extension():
        out.append(XVar(1, p))
        out.append(XVar(2, p))
    return out


def ring_variables(tree):
    """The full variable list of B(2,P): x-variables first, then the
    deformation parameters.  This is the sequence every monomial order in
    the package is built on."""
    return x_variables(tree) + u_variables(tree)
