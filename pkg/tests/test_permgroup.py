"""Permutation and permutation-group engine tests.

Frozen group orders were cross-checked against naive closure enumeration
(see test_order_matches_naive_closure) and, for the big wreath orders,
against the product formula |s|^|domain(t)| * |t|.
"""

import math
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from amoebagraph import (
    Permutation,
    PermutationError,
    compose,
    contains,
    cycle_notation,
    group_from_generators,
    is_block_system,
    is_symmetric,
    is_transitive,
    minimal_block_system,
    orbits,
    order,
    parse_cycles,
    preserves_partition,
    symmetric_group,
    wreath_product,
)

DOM3 = ("1", "2", "3")
DOM7 = tuple(str(k) for k in range(1, 8))


def perm(text, domain=DOM3):
    return parse_cycles(text, domain)


def perms_on(labels):
    """Hypothesis strategy: a uniformly random permutation of the labels."""
    return st.permutations(labels).map(lambda images: Permutation(labels, tuple(images)))


def naive_closure(gens, domain):
    """Independent order oracle: BFS products until closed."""
    frontier = {Permutation.identity(domain).images}
    gens = [g.images for g in gens]
    seen = set(frontier)
    while frontier:
        nxt = set()
        for images in frontier:
            lookup = dict(zip(domain, images))
            for g in gens:
                prod = tuple(lookup[x] for x in g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.add(prod)
        frontier = nxt
    return len(seen)


# ---------------------------------------------------------------- Permutation


def test_construction_validates():
    with pytest.raises(PermutationError):
        Permutation(DOM3, ("1", "1", "2"))
    with pytest.raises(PermutationError):
        Permutation(DOM3, ("1", "2"))
    with pytest.raises(PermutationError):
        Permutation(DOM3, ("1", "2", "4"))


def test_identity_and_call():
    e = Permutation.identity(DOM3)
    assert e.is_identity and e("2") == "2" and e.moved() == ()
    p = perm("(1 2)")
    assert p("1") == "2" and p("2") == "1" and p("3") == "3"
    assert p.moved() == ("1", "2")
    with pytest.raises(PermutationError):
        p("9")


def test_compose_identity_cases():
    """compose(id, p) = p and an involution squares to the identity."""
    p = perm("(1 2)")
    assert compose(Permutation.identity(DOM3), p) == p
    assert compose(p, Permutation.identity(DOM3)) == p
    assert compose(p, p).is_identity


def test_compose_applies_right_factor_first():
    """compose((1 2), (2 3)) sends 1->2, 2->3, 3->1: the 3-cycle (1 2 3)."""
    got = compose(perm("(1 2)"), perm("(2 3)"))
    assert got == perm("(1 2 3)")
    assert [got(x) for x in DOM3] == ["2", "3", "1"]


def test_inverse():
    p = perm("(1 2 3)")
    assert compose(p, p.inverse()).is_identity
    assert p.inverse() == perm("(1 3 2)")


def test_extended_and_restricted():
    p = perm("(1 2)").extended(["4"])
    assert p.domain == ("1", "2", "3", "4") and p("4") == "4"
    with pytest.raises(PermutationError):
        perm("(1 2)").extended(["2"])
    q = p.restricted(["1", "2"])
    assert q.domain == ("1", "2") and q("1") == "2"
    with pytest.raises(PermutationError):
        p.restricted(["1", "3"])  # drops 2, the image of 1


def test_relabeled():
    p = perm("(1 2)").relabeled({"1": "a", "2": "b", "3": "c"})
    assert p.domain == ("a", "b", "c") and p("a") == "b"


def test_cycle_notation():
    assert cycle_notation(Permutation.identity(DOM3)) == "()"
    assert cycle_notation(perm("(1 2 3)")) == "(1 2 3)"
    dom4 = ("1", "2", "3", "4")
    assert cycle_notation(parse_cycles("(1 4)(2 3)", dom4)) == "(1 4)(2 3)"


def test_parse_cycles_rejects_garbage():
    for text in ("(1 2", "(1 1)", "(1 9)", "(1 2)(2 3)"):
        with pytest.raises(PermutationError):
            parse_cycles(text, DOM3)


@given(perms_on(DOM7), perms_on(DOM7), perms_on(DOM7))
@settings(max_examples=100)
def test_compose_is_associative(a, b, c):
    """compose is associative on random permutations."""
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms_on(DOM7), perms_on(DOM7))
@settings(max_examples=100)
def test_inverse_antihomomorphism(a, b):
    """(a b)^-1 = b^-1 a^-1."""
    assert compose(a, b).inverse() == compose(b.inverse(), a.inverse())


@given(perms_on(DOM7))
@settings(max_examples=100)
def test_cycle_notation_round_trips(p):
    """parse_cycles(cycle_notation(p)) recovers p."""
    assert parse_cycles(cycle_notation(p), DOM7) == p


# ---------------------------------------------------------------------- group


def test_empty_generators_need_a_domain():
    g = group_from_generators([], domain=DOM3)
    assert g.order == 1 and list(g.elements()) == [Permutation.identity(DOM3)]
    with pytest.raises(PermutationError):
        group_from_generators([])


def test_two_generators_make_s3():
    g = group_from_generators([perm("(1 2)"), perm("(1 2 3)")])
    assert g.order == 6
    assert is_symmetric(g) and is_transitive(g)


def test_symmetric_group_orders():
    assert symmetric_group(DOM3).order == 6
    assert order(symmetric_group(tuple(str(k) for k in range(1, 13)))) == 479001600


@given(st.lists(perms_on(tuple("123456")), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_order_matches_naive_closure(gens):
    """Schreier-Sims order equals brute-force closure size."""
    g = group_from_generators(gens, domain=tuple("123456"))
    assert g.order == naive_closure(gens, tuple("123456"))


def test_elements_enumerates_exactly_once():
    g = group_from_generators([perm("(1 2 3)"), perm("(1 2)")])
    seen = list(g.elements())
    assert len(seen) == 6 == len({p.images for p in seen})
    assert sorted(p.images for p in seen) == sorted(permutations(DOM3))


def test_contains():
    g = symmetric_group(DOM3)
    assert contains(g, Permutation.identity(DOM3))
    a3 = group_from_generators([perm("(1 2 3)")])
    assert not contains(a3, perm("(1 2)"))  # odd permutation, even group
    assert contains(a3, perm("(1 3 2)"))


def test_orbits():
    trivial = group_from_generators([], domain=DOM3)
    assert orbits(trivial) == (("1",), ("2",), ("3",))
    g = group_from_generators([perm("(1 2)")])
    assert orbits(g) == (("1", "2"), ("3",))


def test_singleton_domain_is_symmetric():
    g = group_from_generators([], domain=("1",))
    assert is_symmetric(g) and is_transitive(g)


def test_trivial_group_on_two_labels_is_not_symmetric():
    assert not is_symmetric(group_from_generators([], domain=("1", "2")))


# -------------------------------------------------------------- block systems


def test_singletons_are_always_blocks():
    g = symmetric_group(DOM3)
    assert is_block_system(g, (("1",), ("2",), ("3",)))


def test_block_systems_of_the_wreath_action():
    w = wreath_product(symmetric_group(("a", "b")), symmetric_group(("1", "2")))
    blocks = ((("a", "1"), ("b", "1")), (("a", "2"), ("b", "2")))
    assert w.order == 8
    assert is_block_system(w, blocks)
    assert all(preserves_partition(p, blocks) for p in w.elements())
    assert minimal_block_system(w, (("a", "1"), ("b", "1"))) == blocks


def test_symmetric_group_is_primitive():
    g = symmetric_group(("1", "2", "3", "4"))
    assert minimal_block_system(g, ("1", "2")) == (("1", "2", "3", "4"),)


def test_minimal_block_system_needs_transitivity():
    g = group_from_generators([perm("(1 2)")])
    with pytest.raises(PermutationError):
        minimal_block_system(g, ("1", "2"))


def test_wreath_orders():
    s2 = symmetric_group(("a", "b"))
    s4 = symmetric_group(("a", "b", "c", "d"))
    s3 = symmetric_group(DOM3)
    assert wreath_product(s2, s2_copy := symmetric_group(("1", "2"))).order == 8
    assert wreath_product(s4, s3).order == 82944 == 24**3 * 6


def test_wreath_of_trivial_base_acts_like_the_top():
    trivial = group_from_generators([], domain=("a",))
    t = symmetric_group(DOM3)
    w = wreath_product(trivial, t)
    assert w.order == t.order
    assert orbits(w) == ((("a", "1"), ("a", "2"), ("a", "3")),)


@given(
    st.sampled_from([1, 2, 3]).flatmap(
        lambda k: st.tuples(st.just(k), st.sampled_from([1, 2, 3]))
    )
)
@settings(max_examples=9, deadline=None)
def test_wreath_order_law(sizes):
    """|s wr t| = |s|^|domain(t)| * |t| for full symmetric factors."""
    m, n = sizes
    s = symmetric_group(tuple(f"a{k}" for k in range(m)))
    t = symmetric_group(tuple(str(k) for k in range(n)))
    assert wreath_product(s, t).order == s.order**n * t.order


def test_wreath_elements_preserve_their_blocks():
    s = symmetric_group(("a", "b"))
    t = symmetric_group(("1", "2", "3"))
    w = wreath_product(s, t)
    blocks = tuple(tuple((b, x) for b in ("a", "b")) for x in ("1", "2", "3"))
    assert is_block_system(w, blocks)
