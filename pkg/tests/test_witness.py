import random

import pytest

from dehnscope.coloured import colour_word
from dehnscope.corpus import load
from dehnscope.diagrams import (area, density, density_from_edges, validate_coarse)
from dehnscope.errors import (ColourClash, NoCommonColour, NotEssential, NotIrreducible,
                              PreconditionFailed, SupportIrreducible, TooSmall)
from dehnscope.graph import SimplicialGraph, empty_graph, join, path_graph
from dehnscope.reducible import has_D3, maximal_reducible_subgraphs
from dehnscope.witness import (bigon_necklace, bigon_split_diagram, commutator_common_colour,
                               commutator_grid, commutator_split, noncommuting_closed_walk,
                               witness_words)
from dehnscope.words import is_alternating, is_trivial, parse_word

from support import rconnected


def random_d3_graphs(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = rconnected(rng, rng.randint(4, 8), 0.55)
        if has_D3(g).holds:
            out.append(g)
    return out


def check_family(g, n):
    lam = has_D3(g).witness
    fam = witness_words(g, lam, n)
    assert is_alternating(fam.w1) and is_alternating(fam.w2) and is_alternating(fam.w)
    assert is_trivial(g, fam.w)
    assert len(fam.w) == 8 * n * (fam.k + fam.l)
    for walk, factor in ((fam.a, fam.factor1), (fam.b, fam.factor2)):
        assert walk[0] == walk[-1]
        assert set(walk) == set(factor)
        assert all(not g.commute(x, y) for x, y in zip(walk, walk[1:]))
    return fam


def test_gamma1_family():
    g = load("GAMMA1")
    fam = check_family(g, 1)
    assert fam.a == ("A", "B", "A") and fam.k == 2
    assert fam.b == ("C", "E", "C", "F", "D", "F", "C") and fam.l == 6
    assert [len(check_family(g, n).w) for n in (1, 2, 3)] == [64, 128, 192]


def test_random_d3_families():
    for g in random_d3_graphs(10, seed=79):
        for n in (1, 2):
            check_family(g, n)


def test_closed_walk_errors():
    with pytest.raises(TooSmall):
        noncommuting_closed_walk(empty_graph("a"))
    with pytest.raises(NotIrreducible):
        noncommuting_closed_walk(join(empty_graph("a"), empty_graph("b")))
    walk = noncommuting_closed_walk(path_graph("abcd"))
    assert len(walk) == 2 * 3 + 1


def test_witness_rejects_non_essential():
    g = load("GAMMA3")
    with pytest.raises(NotEssential):
        witness_words(g, maximal_reducible_subgraphs(g)[0], 1)
    with pytest.raises(ValueError):
        witness_words(load("GAMMA1"), has_D3(load("GAMMA1")).witness, 0)


# constructors


def K(names):
    vs = list(names)
    return SimplicialGraph(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]])


def check_constructed(d, g, boundary):
    assert validate_coarse(d, g, boundary)
    assert density(d) == density_from_edges(d)


def test_bigon_necklace_counts():
    g = K("abcd")
    for text in ("a", "a b' c", "a a b c' c'"):
        w = parse_word(text)
        d = bigon_necklace(g, w, "a", "d")
        check_constructed(d, g, colour_word(w, "a") + tuple(
            x.inverse() for x in reversed(colour_word(w, "d"))))
        assert area(d) == len(w)


def test_bigon_split():
    g = join(empty_graph("ab"), empty_graph("cd"), empty_graph("x"))
    w = parse_word("a c b' d")
    d = bigon_split_diagram(g, w, "x", "x")
    check_constructed(d, g, None)
    assert area(d) == 4
    with pytest.raises(SupportIrreducible):
        bigon_split_diagram(g, parse_word("a b"), "x", "x")
    with pytest.raises(ColourClash):
        bigon_split_diagram(g, w, "a", "x")


def test_commutator_common_colour():
    g = K("abcxy")
    w1, w2 = parse_word("a b'"), parse_word("c")
    d = commutator_common_colour(g, w1, "x", w2, "y", "x")
    check_constructed(d, g, None)
    assert area(d) == 5
    # with w2 empty the two bigons along w2 disappear
    d0 = commutator_common_colour(g, w1, "x", (), "y", "x")
    assert area(d0) == 3
    # z misses c, so it is not a colour of w2
    g2 = SimplicialGraph(list("abcxyz"), list(g.edges) + [("z", v) for v in "abxy"])
    with pytest.raises(NoCommonColour):
        commutator_common_colour(g2, w1, "x", w2, "y", "z")


def test_commutator_split():
    g = K("abcxy")
    d = commutator_split(g, parse_word("a b"), "x", parse_word("c"), "y")
    check_constructed(d, g, None)
    assert area(d) == 4
    with pytest.raises(PreconditionFailed):
        commutator_split(path_graph("abc"), parse_word("a"), "b", parse_word("c"), "b")


@pytest.mark.parametrize("k", range(0, 6))
def test_commutator_grid_counts(k):
    side1 = ["s0", "s1", "s2", "b"]
    side2 = ["a", "t0", "t1"]
    g = join(empty_graph(side1), empty_graph(side2))
    rng = random.Random(k)
    w1 = tuple(parse_word(rng.choice(side1[:3]) + rng.choice(["", "'"]))[0] for _ in range(k))
    w2 = parse_word("t0 t1'")
    d = commutator_grid(g, w1, "a", w2, "b")
    check_constructed(d, g, None)
    assert area(d) == 4 * k + 1
    lengths = [len(f) for f in d.bounded_faces()]
    # monochromatic commutators have 2 + 2|w2| sides, the bigons fewer
    assert lengths.count(2 + 2 * len(w2)) == k
    assert len(lengths) - k == 3 * k + 1


def test_commutator_grid_precondition():
    with pytest.raises(PreconditionFailed):
        commutator_grid(path_graph("abc"), parse_word("a"), "b", parse_word("c"), "b")
