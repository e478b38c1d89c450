import itertools

import pytest

from conedgraph.acceptance import random_structured_word
from conedgraph.aperiodic import WordSchedule, v
from conedgraph.geometry import (
    VertexPath,
    delta_estimate,
    delta_experiment,
    four_point_defect,
    geodesic_hausdorff,
    gluing_defect,
    gluing_experiment,
    hausdorff_experiment,
    hausdorff_Y,
    qc_experiment,
    quasiconvexity_probe,
    random_c_free_word,
    random_reduced_word,
    x_geodesic,
    y_geodesic,
)
from conedgraph.words import is_reduced, multiply
from conedgraph.ydist import y_dist


def test_x_geodesic_examples():
    assert x_geodesic("", "ab").vertices == ("", "a", "ab")
    assert x_geodesic("a", "a").vertices == ("a",)
    assert x_geodesic("", "aB").vertices == ("", "a", "aB")
    assert x_geodesic("ab", "aC").vertices == ("ab", "a", "aC")


def test_y_geodesic_examples():
    assert y_geodesic("", v(9)).vertices == ("", v(9))
    assert y_geodesic("", "acb").vertices == ("", "ac", "acb")
    assert y_geodesic("bc", "bc").vertices == ("bc",)


def test_y_geodesic_is_geodesic(rng):
    sched = WordSchedule()
    for _ in range(100):
        x = random_reduced_word(rng, rng.randint(0, 10))
        y = multiply(x, random_structured_word(rng, 60, sched))
        path = y_geodesic(x, y)
        assert path.vertices[0] == x and path.vertices[-1] == y
        assert path.length == y_dist(x, y)
        assert all(y_dist(p, q) == 1 for p, q in zip(path.vertices, path.vertices[1:]))
        xpath = x_geodesic(x, y)
        assert all(y_dist(p, q) == 1 and is_reduced(q) for p, q in zip(xpath.vertices, xpath.vertices[1:]))


def test_hausdorff_examples(rng):
    P = x_geodesic("", "abcab")
    assert hausdorff_Y(P, P) == 0
    a, b = VertexPath(("ab",)), VertexPath(("cAc",))
    assert hausdorff_Y(a, b) == y_dist("ab", "cAc")
    with pytest.raises(ValueError):
        hausdorff_Y(VertexPath(()), P)


def test_hausdorff_symmetric_and_zero_iff_equal(rng):
    for _ in range(40):
        P = VertexPath(tuple(random_reduced_word(rng, rng.randint(0, 6)) for _ in range(rng.randint(1, 4))))
        Q = VertexPath(tuple(random_reduced_word(rng, rng.randint(0, 6)) for _ in range(rng.randint(1, 4))))
        assert hausdorff_Y(P, Q) == hausdorff_Y(Q, P)
        assert (hausdorff_Y(P, Q) == 0) == (set(P.vertices) == set(Q.vertices))


def test_fast_hausdorff_matches_generic(rng):
    sched = WordSchedule()
    for _ in range(60):
        x = random_reduced_word(rng, rng.randint(0, 5))
        h = random_structured_word(rng, 40, sched) if rng.random() < 0.5 else random_reduced_word(rng, rng.randint(1, 40))
        y = multiply(x, h)
        fast, _ = geodesic_hausdorff(x, y)
        assert fast == hausdorff_Y(x_geodesic(x, y), y_geodesic(x, y))


def test_gluing_defect_examples(rng):
    x, y = "ab", "abcab"
    assert gluing_defect(x, x, y) == 0
    assert gluing_defect(x, y, y) == 0
    with pytest.raises(ValueError):
        gluing_defect("", "c", "ab")
    report = gluing_experiment(100, 20, 80, seed=1)
    assert report.sample_count == 100
    assert report.estimate <= 2


def test_four_point_defect():
    assert four_point_defect("ab", "ab", "cc", "cc") == 0
    quad = ("abcab", "CCa", "ba", "acbca")
    value = four_point_defect(*quad)
    for perm in itertools.permutations(quad):
        assert four_point_defect(*perm) == value
    g = "cAbb"
    assert four_point_defect(*(multiply(g, q) for q in quad)) == value


def test_delta_estimate_reports_max(rng):
    quads = [tuple(random_reduced_word(rng, rng.randint(0, 30)) for _ in range(4)) for _ in range(50)]
    report = delta_estimate(quads)
    assert report.sample_count == 50
    assert report.estimate == max(four_point_defect(*q) for q in quads)
    assert four_point_defect(*report.witness) == report.estimate
    tree_like = [tuple(random_c_free_word(rng, rng.randint(0, 2)) for _ in range(4)) for _ in range(30)]
    assert delta_estimate(tree_like).estimate <= 1


def test_quasiconvexity_probe():
    assert quasiconvexity_probe(v(12)) == 0
    assert quasiconvexity_probe("a") == 0
    with pytest.raises(ValueError):
        quasiconvexity_probe("acb")
    report = qc_experiment(50, 60, seed=3)
    assert report.estimate <= 2


def test_experiments_are_deterministic():
    a = hausdorff_experiment(20, 50, 120, seed=5)
    b = hausdorff_experiment(20, 50, 120, seed=5)
    assert a.as_dict() == b.as_dict() and a.values == b.values
    assert all(50 <= n <= 120 for n in a.lengths)
    assert delta_experiment(10, 30, seed=2).as_dict() == delta_experiment(10, 30, seed=2).as_dict()
