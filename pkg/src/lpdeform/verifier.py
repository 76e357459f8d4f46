"""Machine checks for the structural claims about J(2,P).

A Verifier owns one rooted tree, its deformation context, the weighted
monomial order, and a lazily built Groebner basis of J that every
membership test shares.  Each check returns CheckReport objects carrying a
verdict, instance counts, a witness on failure, and wall time.

The checks:

  specialization      u -> 0 sends each g(p,q) to exactly p1*q2
  homogeneity         every g(p,q) is multigraded of degree p1 + q2
  degree formulas     the T / S / ST / D degree laws, element by element
  flat-basic          S_p(b)c2 - b2 S_p(c) lies in J        (all p<=b, p<=c)
  lemma-ts            S_pT_p(q) b2 - T_p(q) S_p(b) lies in J
  lemma-stt           S_pT_p(q) T_p(r) - T_p(q) S_pT_p(r) lies in J
  lemma-sum-dt1..3    the child-sum minor identities lie in J
  flat-p2             a1 T(b) - T(a) R(a,b) b1 lies in J    (all a<=b)
  relation lifts      the two Koszul-type relation lifts: exact
                      factorization, membership, and u-positivity
  hilbert             truncated weighted Hilbert functions of J and L agree

The bridging identity used by the flatness induction (parent step composed
with sibling steps) is exactly a combination of the child-sum identities
and the defining recursion, so it carries no separate check; lemma-sum-*
and flat-basic are its content.

Verifiers accept an override generator list so mutated ideals can be
exercised: checks that quote g(p,q) pull from the override while the
recursion side is recomputed, so a corrupted generator is caught.
"""

from __future__ import annotations

import time

from .deformation import DeformationContext
from .grading import (
    MultiDegree,
    hat_degree,
    homogeneous_degree,
    monomial_order_for,
    positivity_witness,
    truncated_hilbert,
)
from .groebner import DEFAULT_MAX_PAIRS, DEFAULT_MAX_WEIGHT, buchberger
from .errors import NotHomogeneousError
from .letterplace import letterplace_generators, letterplace_polynomials
from .polynomials import Polynomial, XVar, render_polynomial
from .posets import as_rooted_tree


class CheckReport:
    """Outcome of one named check over all its instances."""

    __slots__ = ("name", "passed", "params", "witness", "elapsed")

    def __init__(self, name, passed, params, witness=None, elapsed=0.0):
        self.name = name
        self.passed = passed
        self.params = dict(params)
        self.witness = witness
        self.elapsed = elapsed

    def line(self):
        verdict = "PASS" if self.passed else "FAIL"
        bits = " ".join(f"{k}={v}" for k, v in self.params.items())
        head = f"{verdict} {self.name}" + (f" {bits}" if bits else "")
        tail = f" ({self.elapsed:.3f}s)"
        if self.witness and not self.passed:
            return f"{head}{tail}\n     witness: {self.witness}"
        return head + tail

    def to_json_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "params": self.params,
            "witness": self.witness,
            "elapsed": round(self.elapsed, 6),
        }

    def __repr__(self):
        return f"CheckReport({self.name}: {'PASS' if self.passed else 'FAIL'})"


def _clip(s, n=160):
    return s if len(s) <= n else s[: n - 3] + "..."


class Verifier:
    def __init__(
        self,
        tree,
        generators=None,
        max_pairs=DEFAULT_MAX_PAIRS,
        max_weight=DEFAULT_MAX_WEIGHT,
    ):
        self.tree = as_rooted_tree(tree)
        self.ctx = DeformationContext(self.tree)
        self.order = monomial_order_for(self.tree)
        self.max_pairs = max_pairs
        self.max_weight = max_weight
        self._generators = list(generators) if generators is not None else None
        self._basis = None

    @property
    def generators(self):
        """((p,q), g(p,q)) pairs — the override list if one was given."""
        if self._generators is None:
            self._generators = self.ctx.j_ideal_generators()
        return self._generators

    @property
    def basis(self):
        if self._basis is None:
            self._basis = buchberger(
                [g for _, g in self.generators],
                self.order,
                max_pairs=self.max_pairs,
                max_weight=self.max_weight,
            )
        return self._basis

    def _x(self, place, p):
        return Polynomial.variable(XVar(place, p))

    def _in_ideal(self, f):
        return self.basis.normal_form(f)

    # -- individual checks -------------------------------------------------

    def check_specialization(self):
        """u -> 0 must send the generator list onto the letterplace list."""
        t0 = time.monotonic()
        expected = letterplace_generators(self.tree)
        ok = len(expected) == len(self.generators)
        witness = None
        if not ok:
            witness = (
                f"{len(self.generators)} deformed generators vs "
                f"{len(expected)} letterplace generators"
            )
        if ok:
            for ((pair, g), (_, mono)) in zip(self.generators, expected):
                image = Polynomial(
                    {m: c for m, c in g.terms.items() if m.u_degree() == 0}
                )
                target = Polynomial.term(mono)
                if image != target:
                    ok = False
                    diff = image - target
                    witness = (
                        f"g{pair}: u->0 gave "
                        f"{_clip(render_polynomial(image, self.order))}; "
                        f"difference {_clip(render_polynomial(diff, self.order))}"
                    )
                    break
        return CheckReport(
            "specialization",
            ok,
            {"generators": len(self.generators)},
            witness,
            time.monotonic() - t0,
        )

    def check_homogeneity(self):
        """Every g(p,q) must be homogeneous of multidegree p1 + q2."""
        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for (p, q), g in self.generators:
            n += 1
            want = MultiDegree.unit(1, p) + MultiDegree.unit(2, q)
            try:
                got = homogeneous_degree(self.tree, g)
            except NotHomogeneousError as exc:
                ok, witness = False, f"g({p},{q}): {exc}"
                break
            if got != want:
                ok = False
                witness = f"g({p},{q}) is homogeneous of {got.render()}, wanted {want.render()}"
                break
        return CheckReport(
            "homogeneity", ok, {"generators": n}, witness, time.monotonic() - t0
        )

    def check_degree_formulas(self):
        """The four degree laws for T, S, sibling ST, and the minors D."""
        tree, ctx = self.tree, self.ctx
        reports = []

        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for p in tree:
            n += 1
            want = MultiDegree.unit(1, p) + hat_degree(tree, p)
            got = homogeneous_degree(tree, ctx.t_full(p))
            if got != want:
                ok, witness = False, f"deg T({p}) = {got.render()}, wanted {want.render()}"
                break
        reports.append(
            CheckReport("deg-T", ok, {"instances": n}, witness, time.monotonic() - t0)
        )

        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for p in tree:
            for q in sorted(tree.filter_at_or_above(p)):
                n += 1
                want = MultiDegree.unit(2, q) - hat_degree(tree, p)
                got = homogeneous_degree(tree, ctx.s_op(p, q))
                if got != want:
                    ok = False
                    witness = f"deg S_{p}({q}2) = {got.render()}, wanted {want.render()}"
                    break
            if not ok:
                break
        reports.append(
            CheckReport("deg-S", ok, {"instances": n}, witness, time.monotonic() - t0)
        )

        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for a in tree:
            kids = tree.children(a)
            for q in kids:
                for p in kids:
                    if p == q:
                        continue
                    n += 1
                    want = (
                        MultiDegree.unit(1, p)
                        + hat_degree(tree, p)
                        - hat_degree(tree, q)
                    )
                    got = homogeneous_degree(tree, ctx.st_entry(q, p))
                    if got != want:
                        ok = False
                        witness = (
                            f"deg S_{q}T_{q}({p}) = {got.render()}, "
                            f"wanted {want.render()}"
                        )
                        break
                if not ok:
                    break
            if not ok:
                break
        reports.append(
            CheckReport("deg-ST", ok, {"instances": n}, witness, time.monotonic() - t0)
        )

        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for a in tree:
            kids = tree.children(a)
            checks = [(0, MultiDegree.unit(2, a) - hat_degree(tree, a))]
            for i, b in enumerate(kids, start=1):
                checks.append((i, hat_degree(tree, b) - hat_degree(tree, a)))
            for i, want in checks:
                n += 1
                got = homogeneous_degree(tree, ctx.minor_d(a, i))
                if got != want:
                    ok = False
                    witness = f"deg D({a})^{i} = {got.render()}, wanted {want.render()}"
                    break
            if not ok:
                break
        reports.append(
            CheckReport("deg-D", ok, {"instances": n}, witness, time.monotonic() - t0)
        )
        return reports

    def check_flat_basic(self):
        """S_p(b)c2 - b2 S_p(c) lies in J for all p <= b, p <= c."""
        t0 = time.monotonic()
        tree, ctx = self.tree, self.ctx
        pos = {p: i for i, p in enumerate(tree.linear_extension())}
        ok, witness, n = True, None, 0
        for p in tree:
            above = sorted(tree.filter_at_or_above(p), key=pos.__getitem__)
            for i, b in enumerate(above):
                for c in above[i + 1 :]:
                    n += 1
                    expr = ctx.s_op(p, b) * self._x(2, c) - self._x(2, b) * ctx.s_op(
                        p, c
                    )
                    rem = self._in_ideal(expr)
                    if not rem.is_zero:
                        ok = False
                        witness = (
                            f"(p,b,c)=({p},{b},{c}): remainder "
                            f"{_clip(render_polynomial(rem, self.order))}"
                        )
                        break
                if not ok:
                    break
            if not ok:
                break
        return CheckReport(
            "flat-basic", ok, {"instances": n}, witness, time.monotonic() - t0
        )

    def _t_share(self, c, b):
        """T_c(b), reading T_b(b) as T(b)."""
        return self.ctx.t_full(b) if c == b else self.ctx.t_sub(c, b)

    def check_lemma_identities(self):
        """The sibling-level identities feeding the flatness induction."""
        tree, ctx = self.tree, self.ctx
        pos = {p: i for i, p in enumerate(tree.linear_extension())}
        reports = []

        # S_pT_p(q) b2 - T_p(q) S_p(b) for q in {p} + siblings, b >= p
        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for p in tree:
            if p == tree.root:
                continue
            for q in (p,) + tree.siblings(p):
                for b in sorted(tree.filter_at_or_above(p), key=pos.__getitem__):
                    n += 1
                    expr = ctx.st_entry(p, q) * self._x(2, b) - self._t_share(
                        p, q
                    ) * ctx.s_op(p, b)
                    rem = self._in_ideal(expr)
                    if not rem.is_zero:
                        ok = False
                        witness = (
                            f"(p,q,b)=({p},{q},{b}): remainder "
                            f"{_clip(render_polynomial(rem, self.order))}"
                        )
                        break
                if not ok:
                    break
            if not ok:
                break
        reports.append(
            CheckReport("lemma-ts", ok, {"instances": n}, witness, time.monotonic() - t0)
        )

        # S_pT_p(q) T_p(r) - T_p(q) S_pT_p(r) within each sibling class
        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for a in tree:
            kids = tree.children(a)
            for p in kids:
                for q in kids:
                    for r in kids:
                        n += 1
                        expr = ctx.st_entry(p, q) * self._t_share(p, r) - self._t_share(
                            p, q
                        ) * ctx.st_entry(p, r)
                        rem = self._in_ideal(expr)
                        if not rem.is_zero:
                            ok = False
                            witness = (
                                f"(p,q,r)=({p},{q},{r}): remainder "
                                f"{_clip(render_polynomial(rem, self.order))}"
                            )
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        reports.append(
            CheckReport("lemma-stt", ok, {"instances": n}, witness, time.monotonic() - t0)
        )

        # the three child-sum identities on generalized minors
        def sum_check(name, instances):
            t0 = time.monotonic()
            ok, witness, n = True, None, 0
            for label, expr in instances:
                n += 1
                rem = self._in_ideal(expr)
                if not rem.is_zero:
                    ok = False
                    witness = (
                        f"{label}: remainder "
                        f"{_clip(render_polynomial(rem, self.order))}"
                    )
                    break
            reports.append(
                CheckReport(name, ok, {"instances": n}, witness, time.monotonic() - t0)
            )

        def dt1_instances():
            for a in tree:
                kids = tree.children(a)
                m = len(kids)
                if m < 3:
                    continue
                for ib in range(1, m + 1):
                    for ic in range(ib + 1, m + 1):
                        for idd in range(1, m + 1):
                            if idd in (ib, ic):
                                continue
                            d = kids[idd - 1]
                            expr = Polynomial.zero()
                            for ix in range(1, m + 1):
                                x = kids[ix - 1]
                                expr = expr + ctx.generalized_minor(
                                    a, (ib, ic), (ix,)
                                ) * self._t_share(d, x)
                            yield f"a={a} cols=({ib},{ic}) T_{d}", expr

        def dt2_instances():
            for a in tree:
                kids = tree.children(a)
                m = len(kids)
                if m < 2:
                    continue
                for ib in range(1, m + 1):
                    for ic in range(ib + 1, m + 1):
                        expr = Polynomial.zero()
                        for ix in range(1, m + 1):
                            x = kids[ix - 1]
                            expr = expr + ctx.generalized_minor(
                                a, (ib, ic), (ix,)
                            ) * ctx.t_sub(a, x)
                        yield f"a={a} cols=({ib},{ic}) T_{a}", expr

        def dt3_instances():
            for a in tree:
                kids = tree.children(a)
                m = len(kids)
                if m < 2:
                    continue
                for ib in range(1, m + 1):
                    for ic in range(1, m + 1):
                        if ic == ib:
                            continue
                        c = kids[ic - 1]
                        expr = Polynomial.zero()
                        for ix in range(1, m + 1):
                            x = kids[ix - 1]
                            expr = expr + ctx.generalized_minor(
                                a, (0, ib), (ix,)
                            ) * self._t_share(c, x)
                        yield f"a={a} cols=(0,{ib}) T_{c}", expr

        sum_check("lemma-sum-dt1", dt1_instances())
        sum_check("lemma-sum-dt2", dt2_instances())
        sum_check("lemma-sum-dt3", dt3_instances())
        return reports

    def check_flat_p2(self):
        """a1 T(b) - T(a) R(a,b) b1 lies in J for all a <= b."""
        t0 = time.monotonic()
        tree, ctx = self.tree, self.ctx
        pos = {p: i for i, p in enumerate(tree.linear_extension())}
        ok, witness, n = True, None, 0
        for a in tree:
            for b in sorted(tree.filter_at_or_above(a), key=pos.__getitem__):
                n += 1
                expr = self._x(1, a) * ctx.t_full(b) - ctx.t_full(
                    a
                ) * ctx.cover_product_r(a, b) * self._x(1, b)
                rem = self._in_ideal(expr)
                if not rem.is_zero:
                    ok = False
                    witness = (
                        f"(a,b)=({a},{b}): remainder "
                        f"{_clip(render_polynomial(rem, self.order))}"
                    )
                    break
            if not ok:
                break
        return CheckReport(
            "flat-p2", ok, {"instances": n}, witness, time.monotonic() - t0
        )

    def check_relation_lifts(self):
        """The two Koszul-type relations among the p1*q2 lift into J.

        For each instance three facts are checked: the closed-form
        factorization holds exactly, the lifted combination reduces to zero
        modulo J, and every monomial of it carries a u-parameter (so the
        lift vanishes at u = 0, as a flat family requires).
        """
        tree, ctx = self.tree, self.ctx
        pos = {p: i for i, p in enumerate(tree.linear_extension())}
        gens_map = dict(self.generators)
        reports = []

        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for a in tree:
            above = sorted(tree.filter_at_or_above(a), key=pos.__getitem__)
            for i, b in enumerate(above):
                for c in above[i + 1 :]:
                    n += 1
                    lhs = self._x(2, c) * gens_map[(a, b)] - self._x(2, b) * gens_map[
                        (a, c)
                    ]
                    factored = ctx.t_full(a) * (
                        self._x(2, b) * ctx.s_op(a, c) - self._x(2, c) * ctx.s_op(a, b)
                    )
                    if lhs != factored:
                        ok = False
                        witness = f"(a,b,c)=({a},{b},{c}): factorization mismatch"
                        break
                    mu = lhs.min_u_degree()
                    if mu is not None and mu < 1:
                        ok = False
                        witness = f"(a,b,c)=({a},{b},{c}): lift has a u-free monomial"
                        break
                    rem = self._in_ideal(lhs)
                    if not rem.is_zero:
                        ok = False
                        witness = (
                            f"(a,b,c)=({a},{b},{c}): remainder "
                            f"{_clip(render_polynomial(rem, self.order))}"
                        )
                        break
                if not ok:
                    break
            if not ok:
                break
        reports.append(
            CheckReport(
                "relation-lift-x2", ok, {"instances": n}, witness, time.monotonic() - t0
            )
        )

        t0 = time.monotonic()
        ok, witness, n = True, None, 0
        for a in tree:
            for b in sorted(tree.filter_at_or_above(a), key=pos.__getitem__):
                for c in sorted(tree.filter_at_or_above(b), key=pos.__getitem__):
                    n += 1
                    lhs = self._x(1, b) * gens_map[(a, c)] - self._x(1, a) * gens_map[
                        (b, c)
                    ]
                    factored = ctx.s_op(b, c) * (
                        self._x(1, a) * ctx.t_full(b)
                        - ctx.t_full(a) * ctx.cover_product_r(a, b) * self._x(1, b)
                    )
                    if lhs != factored:
                        ok = False
                        witness = f"(a,b,c)=({a},{b},{c}): factorization mismatch"
                        break
                    mu = lhs.min_u_degree()
                    if mu is not None and mu < 1:
                        ok = False
                        witness = f"(a,b,c)=({a},{b},{c}): lift has a u-free monomial"
                        break
                    rem = self._in_ideal(lhs)
                    if not rem.is_zero:
                        ok = False
                        witness = (
                            f"(a,b,c)=({a},{b},{c}): remainder "
                            f"{_clip(render_polynomial(rem, self.order))}"
                        )
                        break
                if not ok:
                    break
            if not ok:
                break
        reports.append(
            CheckReport(
                "relation-lift-x1", ok, {"instances": n}, witness, time.monotonic() - t0
            )
        )
        return reports

    def compare_hilbert(self, max_degree):
        """Truncated weighted Hilbert functions of B/J and B/(L B) agree."""
        t0 = time.monotonic()
        weights = positivity_witness(self.tree)
        h_j = truncated_hilbert(
            [g for _, g in self.generators], weights, max_degree, basis=self.basis
        )
        h_l = truncated_hilbert(letterplace_polynomials(self.tree), weights, max_degree)
        ok = h_j == h_l
        witness = None if ok else f"J: {h_j} vs L: {h_l}"
        return CheckReport(
            "hilbert",
            ok,
            {"max_degree": max_degree, "J": h_j, "L": h_l},
            witness,
            time.monotonic() - t0,
        )

    # -- suites --------------------------------------------------------------

    def run_basic(self):
        """The checks that need no Groebner basis."""
        reports = [self.check_specialization(), self.check_homogeneity()]
        reports.extend(self.check_degree_formulas())
        return reports

    def run_full(self, max_degree=4):
        reports = self.run_basic()
        reports.append(self.check_flat_basic())
        reports.extend(self.check_lemma_identities())
        reports.append(self.check_flat_p2())
        reports.extend(self.check_relation_lifts())
        reports.append(self.compare_hilbert(max_degree))
        return reports
