from lpdeform import (
    Monomial,
    MonomialOrder,
    MultiDegree,
    T1Generator,
    XVar,
    all_rooted_trees,
    letterplace_generators,
    load_poset,
    minimal_lower_bound_sets,
    minimal_upper_bound_sets,
    monomial_degree,
    render_monomial,
    t1_generators,
    t1_generators_tree,
    u_variables,
    variable_degree,
    x_variables,
)

from conftest import chain_tree, fixture_path, load_tree, star_tree, tree_from


def plain_order(poset):
    xs = x_variables(poset)
    return MonomialOrder(xs, {v: 1 for v in xs})


# -- minimal bound sets --------------------------------------------------------

def test_minimal_bound_sets_on_a_chain():
    tree = chain_tree(3)
    assert minimal_upper_bound_sets(tree, ["a"], ["b", "c"]) == [("b",), ("c",)]
    assert minimal_lower_bound_sets(tree, ["c"], ["a", "b"]) == [("a",), ("b",)]
    assert minimal_upper_bound_sets(tree, [], ["b", "c"]) == [()]
    assert minimal_lower_bound_sets(tree, [], []) == [()]


def test_minimal_bound_sets_prune_supersets():
    tree = star_tree(2)  # a < b, a < c
    # both leaves must be covered and neither bounds the other
    assert minimal_upper_bound_sets(tree, ["b", "c"], ["b", "c"]) == [("b", "c")]
    # a alone bounds both from below; (b, c) is not minimal once a is found
    assert minimal_lower_bound_sets(tree, ["b", "c"], ["a", "b", "c"]) == \
        [("a",), ("b", "c")]


# -- the general computation on a non-tree poset -------------------------------------

EXPECTED_DIAMOND = [
    ("a", ("b",), (), "b1"),
    ("a", ("c", "d"), (), "c1*d1"),
    ("b", ("a",), (), "a1"),
    ("b", ("c", "d"), (), "c1*d1"),
    ("c", ("e",), ("d",), "d2*e1"),
    ("c", ("d",), ("a", "b"), "a2*b2*d1"),
    ("c", ("e",), ("a", "b"), "a2*b2*e1"),
    ("d", ("e",), ("c",), "c2*e1"),
    ("d", ("c",), ("a", "b"), "a2*b2*c1"),
    ("d", ("e",), ("a", "b"), "a2*b2*e1"),
    ("e", (), ("c", "d"), "c2*d2"),
]


def test_diamond_poset_has_eleven_generators():
    poset = load_poset(fixture_path("diamond5.poset"))
    order = plain_order(poset)
    got = [(t.source, t.lower_set, t.upper_set, render_monomial(t.image, order))
           for t in t1_generators(poset)]
    assert got == EXPECTED_DIAMOND


def test_diamond_generators_respect_the_middle_swap():
    # c <-> d is an automorphism of the diamond, so the generator list is
    # invariant under that relabeling: the d-block mirrors the c-block
    poset = load_poset(fixture_path("diamond5.poset"))
    swap = {"c": "d", "d": "c"}

    def canon(source, lower, upper, relabel=lambda e: e):
        return (relabel(source),
                tuple(sorted(relabel(r) for r in lower)),
                tuple(sorted(relabel(s) for s in upper)))

    gens = t1_generators(poset)
    original = {canon(t.source, t.lower_set, t.upper_set) for t in gens}
    mirrored = {canon(t.source, t.lower_set, t.upper_set,
                      lambda e: swap.get(e, e)) for t in gens}
    assert mirrored == original


def test_generator_identity_semantics():
    img = Monomial.from_pairs([(XVar(1, "b"), 1)])
    g1 = T1Generator("a", ("b",), (), img)
    g2 = T1Generator("a", ["b"], (), img)
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != T1Generator("a", ("b",), ("c",), img)


# -- the rooted-tree shortcut ---------------------------------------------------

def test_tree_shortcut_agrees_with_general_computation():
    for tree in all_rooted_trees(5):
        assert t1_generators_tree(tree) == t1_generators(tree)


def test_tree_generators_match_deformation_parameters():
    for tree in (chain_tree(4), star_tree(3), load_tree("vc2"),
                 load_tree("tree7")):
        gens = t1_generators_tree(tree)
        params = u_variables(tree)
        assert len(gens) == len(params)
        for g, v in zip(gens, params):
            assert g.source == v.lower
            assert g.upper_set == (() if v.upper is None else (v.upper,))
            assert g.lower_set == tree.children(v.lower)


def test_images_are_standard_monomials():
    # no letterplace quadric divides an image, so each image is a genuine
    # nonzero element of the quotient
    for tree in all_rooted_trees(5):
        quadrics = [m for _, m in letterplace_generators(tree)]
        for g in t1_generators_tree(tree):
            assert not any(q.divides(g.image) for q in quadrics)


def test_degree_pairing_with_parameters():
    # the map p1*p2 -> image shifts multidegree by exactly -deg(u), the
    # parameter the generator is paired with
    tree = load_tree("tree7")
    for g, v in zip(t1_generators_tree(tree), u_variables(tree)):
        p = g.source
        shift = monomial_degree(tree, g.image) - \
            (MultiDegree.unit(1, p) + MultiDegree.unit(2, p))
        assert shift == -variable_degree(tree, v)


def test_single_node_tree():
    tree = tree_from("elem a")
    gens = t1_generators_tree(tree)
    assert [g.key() for g in gens] == [("a", (), (), Monomial())]
    assert gens == t1_generators(tree)
