"""A tour of deformed letterplace ideals on small rooted trees.

For a finite poset P the letterplace ideal L(2,P) is generated by the
monomials p1*q2 over comparable pairs p <= q.  When the Hasse diagram
of P is a rooted tree, each monomial deforms to a polynomial

    g(p, q) = p1*q2 - T(p) * S_p(q2)

in the same ring extended by one parameter u[q,p] per admissible pair
(plus u[0,root]).  Setting every u to zero recovers L(2,P).

Run:  python3 demos/tour_deformed_ideals.py
"""

from lpdeform import (
    DeformationContext,
    Polynomial,
    as_rooted_tree,
    letterplace_generators,
    monomial_order_for,
    parse_poset,
    render_monomial,
    render_polynomial,
    u_variables,
)

POSETS = {
    "chain a < b < c": "a < b\nb < c",
    "star a < b, c": "a < b\na < c",
    "mixed a < b, a < c < d": "a < b\na < c\nc < d",
}


def show(title, text):
    tree = as_rooted_tree(parse_poset(text))
    order = monomial_order_for(tree)
    ctx = DeformationContext(tree)
    print(f"== {title} ==")
    print("letterplace monomials:",
          ", ".join(render_monomial(m, order)
                    for _, m in letterplace_generators(tree)))
    print("deformation parameters:",
          ", ".join(v.render() for v in u_variables(tree)))
    for pair, g in ctx.j_ideal_generators():
        print(f"  g{pair}: {render_polynomial(g, order)}")
    # setting every u to zero recovers the letterplace monomial
    zero = {v: 0 for v in u_variables(tree)}
    recovered = [g.substitute(zero) for _, g in ctx.j_ideal_generators()]
    expected = [Polynomial.term(m) for _, m in letterplace_generators(tree)]
    print("u -> 0 recovers letterplace generators:", recovered == expected)
    print()


def main():
    for title, text in POSETS.items():
        show(title, text)


if __name__ == "__main__":
    main()
