"""The deformed ideal J(2,P) of a rooted tree, via the T/S/D recursion.

For each comparable pair p <= q the deformed generator is

    g(p, q) = p1*q2 - T(p) * S_p(q2),

where T(p) collects the first-order deformation of p1*p2 read off the
cotangent module (one term q2*u_{q,p} per parameter of p), and S_p is the
substitution operator that rewrites q2 modulo the deformed relations of the
subtree under p.  S_p(q2) factors as R(p,q) * D(q)^q: a product of child
minors D(a)^b along the chain from p to q, times the full minor D(q)^q.

The minors come from the child matrix M(a) whose rows are indexed by the
children b^1..b^m of a and whose columns by (b^0=a, b^1, .., b^m), with
entries S_{b^i} T_{b^i} (b^j).  Everything is memoized per tree inside a
DeformationContext; clear_memos() drops the caches (results are pure, so
this is observationally transparent).
"""

from __future__ import annotations

from .errors import (
    DomainError,
    LeafError,
    MinorIndexError,
    NotComparableError,
    RelationError,
    ShapeError,
)
from .letterplace import comparable_pairs
from .polynomials import Monomial, PolyMatrix, Polynomial, UVar, XVar
from .posets import as_rooted_tree


def _x(place, p):
    return Polynomial.variable(XVar(place, p))


def _u(q, p):
    return Polynomial.variable(UVar(q, p))


def _inversions(seq):
    return sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    )


class DeformationContext:
    """All recursion state for one rooted tree."""

    def __init__(self, tree):
        self.tree = tree = as_rooted_tree(tree)
        self._linext_pos = {p: i for i, p in enumerate(tree.linear_extension())}
        self._t_sub = {}
        self._t_full = {}
        self._matrix = {}
        self._minor = {}
        self._s_op = {}

    def clear_memos(self):
        self._t_sub.clear()
        self._t_full.clear()
        self._matrix.clear()
        self._minor.clear()
        self._s_op.clear()

    # -- the T family ------------------------------------------------------

    def t_sub(self, c, b):
        """T_c(b): the share of b's deformation owed to c, which must be
        b's parent or one of its siblings.

        Parent a:   T_a(b) = -a2 * u_{a,b}
        Sibling c:  T_c(b) = -sum_{q >= c} q2 * u_{q,b}
        """
        key = (c, b)
        val = self._t_sub.get(key)
        if val is not None:
            return val
        tree = self.tree
        a = tree.parent(b)
        if a is None:
            raise RelationError(f"{b!r} is the root; T_c(b) needs a non-root b")
        if c == a:
            val = -(_x(2, a) * _u(a, b))
        elif c in tree.siblings(b):
            val = Polynomial.zero()
            for q in sorted(tree.filter_at_or_above(c), key=self._linext_pos.__getitem__):
                val = val - _x(2, q) * _u(q, b)
        else:
            raise RelationError(f"{c!r} is neither the parent nor a sibling of {b!r}")
        self._t_sub[key] = val
        return val

    def t_full(self, b):
        """T(b) = T_b(b): the root gets its single parameter; otherwise the
        negated sum of all parent/sibling shares."""
        val = self._t_full.get(b)
        if val is not None:
            return val
        tree = self.tree
        if b == tree.root:
            val = _u(None, b)
        else:
            val = -self.t_sub(tree.parent(b), b)
            for c in tree.siblings(b):
                val = val - self.t_sub(c, b)
        self._t_full[b] = val
        return val

    # -- the child matrix and its minors ------------------------------------

    def st_entry(self, x, b):
        """S_x T_x(b) for x among {parent(b), b, siblings of b}.

        The diagonal and parent cases are symbolic shortcuts:
            S_b T_b(b) = b1,   S_a T_a(b) = -u_{a,b};
        only the sibling case is a genuine composition S_c(T_c(b)).
        """
        tree = self.tree
        a = tree.parent(b)
        if a is None:
            raise RelationError(f"{b!r} is the root; matrix entries need children")
        if x == b:
            return _x(1, b)
        if x == a:
            return -_u(a, b)
        if x in tree.siblings(b):
            return self.s_op_linear(x, self.t_sub(x, b))
        raise RelationError(f"{x!r} is not {b!r} or its parent or a sibling")

    def matrix_m(self, a):
        """M(a): rows = children b^1..b^m of a, columns = (a, b^1, .., b^m),
        entry (j, i) = S_{column i} T_{column i} (b^j)."""
        mat = self._matrix.get(a)
        if mat is not None:
            return mat
        kids = self.tree.children(a)
        if not kids:
            raise LeafError(f"{a!r} is maximal; M(a) needs children")
        cols = (a,) + kids
        mat = PolyMatrix([[self.st_entry(x, b) for x in cols] for b in kids])
        self._matrix[a] = mat
        return mat

    def minor_d(self, a, i):
        """D(a)^i = (-1)^i * |M(a) with column i deleted|; column 0 is a
        itself, column i >= 1 is the i-th child.  For maximal a only i = 0
        is defined and D(a)^a = 1."""
        key = (a, i)
        val = self._minor.get(key)
        if val is not None:
            return val
        m = len(self.tree.children(a))
        if not (0 <= i <= m):
            raise MinorIndexError(f"column {i} out of range 0..{m} for {a!r}")
        if m == 0:
            val = Polynomial.one()
        else:
            det = self.matrix_m(a).minor_det(delete_cols=(i,))
            val = det if i % 2 == 0 else -det
        self._minor[key] = val
        return val

    def minor_d_child(self, a, b):
        """D(a)^b for a child b of a."""
        kids = self.tree.children(a)
        if b not in kids:
            raise RelationError(f"{b!r} is not a child of {a!r}")
        return self.minor_d(a, 1 + kids.index(b))

    def generalized_minor(self, a, cols, rows):
        """D(a)^{cols}_{rows}: delete the listed columns (subset of 0..m)
        and rows (subset of 1..m), |cols| = |rows| + 1, signed by
        (-1)^(sum(cols) + sum(rows) + inv(cols) + inv(rows)).

        The sign is antisymmetric in the written order of the indices and
        satisfies the Laplace expansion along any deleted row:
            D^I_K = sum_c entry(r, c) * D^{I+c}_{K+r}.
        """
        cols = tuple(cols)
        rows = tuple(rows)
        m = len(self.tree.children(a))
        if len(set(cols)) != len(cols) or len(set(rows)) != len(rows):
            raise MinorIndexError("repeated index in generalized minor")
        for i in cols:
            if not (0 <= i <= m):
                raise MinorIndexError(f"column {i} out of range 0..{m}")
        for k in rows:
            if not (1 <= k <= m):
                raise MinorIndexError(f"row {k} out of range 1..{m}")
        if len(cols) != len(rows) + 1:
            raise ShapeError(
                f"need one more deleted column than deleted rows, got "
                f"{len(cols)} columns and {len(rows)} rows"
            )
        if m == 0:
            # cols must be (0,), rows (): the empty matrix convention
            return Polynomial.one()
        det = self.matrix_m(a).minor_det(
            delete_rows=tuple(k - 1 for k in rows), delete_cols=cols
        )
        sign = sum(cols) + sum(rows) + _inversions(cols) + _inversions(rows)
        return det if sign % 2 == 0 else -det

    # -- the S family --------------------------------------------------------

    def cover_product_r(self, a, b):
        """R(a,b): the product of D(p)^q over the covers p -< q on the chain
        from a up to b; R(a,a) = 1."""
        key = (a, b)
        val = self._s_op.get(("R", key))
        if val is not None:
            return val
        tree = self.tree
        if not tree.le(a, b):
            raise NotComparableError(f"need {a!r} <= {b!r}")
        chain = [b]
        while chain[-1] != a:
            chain.append(tree.parent(chain[-1]))
        val = Polynomial.one()
        for lower, upper in zip(chain[1:], chain[:-1]):
            val = val * self.minor_d_child(lower, upper)
        self._s_op[("R", key)] = val
        return val

    def s_op(self, a, b):
        """S_a(b2) = R(a,b) * D(b)^b for a <= b."""
        key = (a, b)
        val = self._s_op.get(key)
        if val is not None:
            return val
        if not self.tree.le(a, b):
            raise NotComparableError(f"need {a!r} <= {b!r}")
        val = self.cover_product_r(a, b) * self.minor_d(b, 0)
        self._s_op[key] = val
        return val

    def s_op_linear(self, a, f):
        """Extend S_a over a polynomial whose every monomial is (one q2 with
        q >= a) times a product of u-parameters."""
        out = Polynomial.zero()
        for mono, coeff in f.items():
            target = None
            upart = []
            for v, e in mono.pairs:
                if isinstance(v, XVar):
                    if v.place != 2 or e != 1 or target is not None:
                        raise DomainError(
                            f"monomial {mono!r} is not q2 times a u-monomial"
                        )
                    target = v.element
                else:
                    upart.append((v, e))
            if target is None:
                raise DomainError(f"monomial {mono!r} has no place-2 variable")
            if not self.tree.le(a, target):
                raise DomainError(f"S_{a!r} hit {target!r}2 but {a!r} <= {target!r} fails")
            out = out + self.s_op(a, target) * Monomial(tuple(upart)) * coeff
        return out

    # -- the deformed ideal ---------------------------------------------------

    def deformed_generator(self, p, q):
        """g(p,q) = p1*q2 - T(p) * S_p(q2)."""
        if not self.tree.le(p, q):
            raise NotComparableError(f"need {p!r} <= {q!r}")
        head = Polynomial.term(
            Monomial.from_pairs([(XVar(1, p), 1), (XVar(2, q), 1)])
        )
        return head - self.t_full(p) * self.s_op(p, q)

    def j_ideal_generators(self):
        """All ((p,q), g(p,q)) in linear-extension order of the pairs."""
        return [
            ((p, q), self.deformed_generator(p, q))
            for p, q in comparable_pairs(self.tree)
        ]


def j_ideal_generators(tree):
    return DeformationContext(tree).j_ideal_generators()
