"""Cotangent generators of letterplace quotients.

Each degree-0 first-order deformation of k[x]/L(2,P) sends a quadric
p1*p2 to a monomial prescribed by a pair (D, U): an inclusion-minimal
set D of lower bounds for everything strictly above p, an
inclusion-minimal set U of upper bounds for everything strictly below
p — D taken outside the down-set of p, U outside the up-set of p, and
no element of D under an element of U.  The image is the product of r1
over D and s2 over U.

On a rooted tree these pair off exactly with the deformation
parameters: D is forced to the child set of p, U is a single element q
with meet(q, p) = parent(p) (empty for the root), matching u[q,p].

Run:  python3 demos/cotangent_maps.py
"""

from lpdeform import (
    all_rooted_trees,
    parse_poset,
    t1_generators,
    t1_generators_tree,
    u_variables,
)

DIAMONDISH = """\
# two minimal elements a, b; not a tree
a < c
b < c
a < d
b < d
c < e
d < e
"""


def main():
    # a non-tree poset: the general minimal-bound-set computation
    poset = parse_poset(DIAMONDISH)
    print("== poset with two minimal elements ==")
    for g in t1_generators(poset):
        lower = ",".join(g.lower_set) or "-"
        upper = ",".join(g.upper_set) or "-"
        print(f"  source {g.source}: D={{{lower}}} U={{{upper}}} "
              f"image {g.image}")

    # on trees the shortcut and the general computation agree, and the
    # count equals the number of deformation parameters
    print("== trees up to five nodes ==")
    for tree in all_rooted_trees(5):
        general = t1_generators(tree)
        shortcut = t1_generators_tree(tree)
        params = u_variables(tree)
        status = "ok" if general == shortcut and len(general) == len(params) \
            else "MISMATCH"
        print(f"  {len(tree)} nodes, {len(params):2d} parameters, "
              f"{len(general):2d} cotangent generators: {status}")


if __name__ == "__main__":
    main()
