import random

import pytest
from hypothesis import given, strategies as st

from dehnscope.bbg import (EdgeLetter, edge_free_reduce, flat_norm, flat_norm_witness,
                           format_edge_word, papadima_suciu, phi, psi, tree_path_word)
from dehnscope.corpus import load
from dehnscope.errors import CapExceeded, Disconnected, NotAlternating, NotInKernel
from dehnscope.graph import empty_graph
from dehnscope.words import (Letter, free_equal, freely_conjugate, is_alternating,
                             is_trivial, parse_word, words_equal)

from support import ralternating, random_spanning_tree, rconnected


def random_edge_word(rng, tree, length):
    return tuple(EdgeLetter(rng.choice(tree.edges), rng.choice((1, -1))) for _ in range(length))


def test_k3_presentation_text():
    pres = papadima_suciu(load("K3"))
    assert pres.generators == [("a", "b"), ("a", "c")]
    assert pres.to_text() == "gen: a-b\ngen: a-c\nrel: [a-b, a-b' a-c]\n"
    assert not pres.flagged


def test_presentation_counts_and_flag():
    pres = papadima_suciu(load("OCT"))
    assert len(pres.generators) == 5 and len(pres.commutators) == 8
    assert papadima_suciu(load("C4")).flagged
    with pytest.raises(Disconnected):
        papadima_suciu(empty_graph("ab"))


@pytest.mark.parametrize("name", ["K3", "GAMMA1", "OCT", "GAMMA2"])
def test_relators_map_to_triangle_words(name):
    g = load(name)
    rng = random.Random(31)
    for _ in range(5):
        tree = random_spanning_tree(rng, g)
        pres = papadima_suciu(g, tree)
        for (a, b, c), rel in zip(pres.triangles, pres.relators):
            target = parse_word(f"{a} {c}' {b} {a}' {c} {b}'")
            image = psi(rel)
            assert freely_conjugate(image, target)
            assert is_trivial(g, image)


def test_tree_path_word_orientation():
    g = load("P4")
    t = g.spanning_tree()
    assert format_edge_word(tree_path_word(t, "d", "a")) == "c-d' b-c' a-b'"
    assert tree_path_word(t, "b", "b") == ()


@pytest.mark.parametrize("name", ["K3", "GAMMA1"])
def test_phi_psi_roundtrips(name):
    g = load(name)
    rng = random.Random(37)
    for _ in range(100):
        tree = random_spanning_tree(rng, g)
        ew = random_edge_word(rng, tree, rng.randint(0, 10))
        assert phi(tree, psi(ew)) == ew
        u = ralternating(rng, g, rng.randint(0, 6))
        assert free_equal(psi(phi(tree, u)), u)


def test_phi_rejects_non_alternating():
    g = load("K3")
    with pytest.raises(NotAlternating):
        phi(g.spanning_tree(), parse_word("a b"))


def test_edge_free_reduce():
    e = EdgeLetter(("a", "b"), 1)
    assert edge_free_reduce((e, e.inverse(), e)) == (e,)


@st.composite
def small_bbg_element(draw):
    name = draw(st.sampled_from(["K3", "P4", "C4", "GAMMA1"]))
    g = load(name)
    pairs = draw(st.lists(st.tuples(st.sampled_from(g.vertices), st.sampled_from(g.vertices)),
                          max_size=3))
    w = tuple(x for s, t in pairs for x in (Letter(s, 1), Letter(t, -1)))
    return g, w


@given(small_bbg_element())
def test_flat_norm_matches_plain_bfs(gw):
    g, w = gw
    n = flat_norm(g, w)
    wit = flat_norm_witness(g, w)
    assert len(wit) == n <= len(w)
    assert is_alternating(wit)
    assert words_equal(g, wit, w)


def test_flat_norm_examples():
    g = load("P4")
    assert flat_norm(g, ()) == 0
    assert flat_norm(g, parse_word("a b'")) == 2
    # a c^-1 equals a b^-1 b c^-1 but is itself a single pair
    assert flat_norm(g, parse_word("a b' b c'")) == 2
    # a a c^-1 c^-1 is the only geodesic (a, c do not commute) and is not
    # alternating, so no alternating word of length 4 represents it
    assert flat_norm(g, parse_word("a a c' c'")) == 6
    with pytest.raises(NotInKernel):
        flat_norm(g, parse_word("a"))
    with pytest.raises(CapExceeded):
        flat_norm(g, parse_word("a a a a d' d' d' d'"), cap=4)


def test_flat_norm_random_upper_bound():
    rng = random.Random(41)
    for _ in range(40):
        g = rconnected(rng, rng.randint(2, 5), 0.5)
        u = ralternating(rng, g, rng.randint(0, 3))
        assert flat_norm(g, u) <= len(u)
