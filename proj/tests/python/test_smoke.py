import math

import numpy as np
import pytest

import repdim


def test_graph6_round_trip():
    g = repdim.parse_graph6("A_")
    assert g.n == 2
    assert g.adjacent(0, 1)
    assert repdim.encode_graph6(g) == "A_"


def test_generators_and_classifiers():
    pet = repdim.petersen_graph()
    assert pet.n == 10
    assert pet.edge_count() == 15
    c = repdim.complement(pet)
    assert c.edge_count() == 45 - 15


def test_spectrum():
    spec = repdim.spectrum(repdim.petersen_graph())
    taus = [t for t, _, _ in spec["distinct"]]
    mults = [m for _, m, _ in spec["distinct"]]
    assert taus == pytest.approx([-2.0, 1.0, 3.0])
    assert mults == [4, 5, 1]


def test_representation_number():
    assert repdim.representation_number(repdim.petersen_graph())["rep"] == 4
    assert repdim.representation_number(repdim.cycle_graph(6))["rep"] == 3
    assert repdim.representation_number(repdim.complete_graph(5))["rep"] == 4
    assert repdim.srg_rep(10, 3, 0, 1) == 4


def test_minimal_embedding_round_trip():
    g = repdim.cycle_graph(6)
    emb = repdim.minimal_embedding(g)
    pts = np.asarray(emb["points"])
    assert pts.shape == (6, 3)
    for u in range(6):
        for v in range(u + 1, 6):
            d = float(np.linalg.norm(pts[u] - pts[v]))
            want = emb["alpha"] if g.adjacent(u, v) else emb["beta"]
            assert math.isclose(d, want, abs_tol=1e-8)
    ok, reasons = repdim.verify_embedding(g, pts, emb["alpha"], emb["beta"])
    assert ok, reasons


def test_oracle_agreement():
    g = repdim.path_graph(5)
    assert repdim.brute_force_rep(g, 150)["rep_oracle"] == \
        repdim.representation_number(g)["rep"]


def test_schoenberg():
    m = np.array([[0.0, 1.0, 4.0], [1.0, 0.0, 1.0], [4.0, 1.0, 0.0]])
    r = repdim.schoenberg_test(m)
    assert r["is_edm"]
    assert r["embedding_dim"] == 1  # collinear points 0, 1, 2


def test_errors():
    with pytest.raises(Exception):
        repdim.parse_graph6("!!!")
