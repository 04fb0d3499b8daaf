import random

import pytest

import oracles
from foxcoh.cohomology import (
    coboundary_matrix,
    cocycle_matrix,
    h0_dimension,
    h1_dimension,
    verify_relators,
)
from foxcoh.errors import NotARepresentationError
from foxcoh.exactla import FMatrix, QuatMatrix, block_matrix, rank
from foxcoh.lie import FLAVORS, Representation, lie_basis
from foxcoh.words import Presentation, abelianization

# (fixture, flavor) -> (h0, z1, b1, h1); every row was produced by the
# float tangent-map oracle in oracles.py and agrees with the spectral
# count where that applies.
EXPECTED = {
    ("gamma8", "sp21"): (1, 23, 20, 3),
    ("gamma8", "u21"): (1, 11, 8, 3),
    ("gamma8", "su21"): (0, 10, 8, 2),
    ("gamma8", "m"): (0, 12, 12, 0),
    ("gammaW", "sp21"): (1, 34, 20, 14),
    ("gammaW", "u21"): (1, 14, 8, 6),
    ("gammaW", "su21"): (0, 12, 8, 4),
    ("gammaW", "m"): (0, 20, 12, 8),
    ("z3z3", "sp21"): (1, 28, 20, 8),
    ("z3z3", "u21"): (1, 12, 8, 4),
    ("z3z3", "su21"): (0, 12, 8, 4),
    ("z3z3", "m"): (0, 16, 12, 4),
}


@pytest.fixture(scope="module")
def cases(rho0, rhoW, p8, pW, pZ3, bases0, basesW):
    return {
        "gamma8": (rho0, p8, bases0),
        "gammaW": (rhoW, pW, basesW),
        "z3z3": (rhoW, pZ3, basesW),
    }


def trivial_rep(form):
    return Representation("ab", {"a": QuatMatrix.identity(), "b": QuatMatrix.identity()}, form)


def test_trivial_representation(rho0, bases0):
    rho = trivial_rep(rho0.form)
    B = bases0["sp21"]
    assert coboundary_matrix(rho, B).is_zero()
    assert h0_dimension(rho, B) == 21


def test_coboundary_shapes_and_ranks(rho0, bases0):
    C = coboundary_matrix(rho0, bases0["sp21"])
    assert C.shape == (42, 21)
    assert rank(C) == 20
    C = coboundary_matrix(rho0, bases0["su21"])
    assert C.shape == (16, 8)
    assert rank(C) == 8


def test_coboundary_rank_matches_float_elimination(rho0, bases0):
    C = coboundary_matrix(rho0, bases0["sp21"])
    import numpy as np

    arr = np.array([[e.approx() for e in row] for row in C.tolist()])
    assert oracles.numeric_rank(arr) == 20


def test_cocycle_gamma8(rho0, p8, bases0):
    Z = cocycle_matrix(rho0, bases0["sp21"], p8)
    assert Z.shape == (21, 42)
    assert rank(Z) == 19


def test_cocycle_z3z3_is_block_diagonal(rhoW, pZ3, basesW):
    B = basesW["sp21"]
    Z = cocycle_matrix(rhoW, B, pZ3)
    assert Z.shape == (42, 42)
    identity = FMatrix.identity(21)
    blocks = []
    for i, g in enumerate(rhoW.images):
        A = B.adjoint(g)
        blocks.append(identity + A + A @ A)
    zero = FMatrix.zeros(21, 21)
    assert Z == block_matrix([[blocks[0], zero], [zero, blocks[1]]])
    assert [rank(b) for b in blocks] == [7, 7]


def test_trivial_relator_gives_zero_rows(rho0, bases0):
    p = Presentation.parse("ab", ["", "aA"])
    Z = cocycle_matrix(rho0, bases0["u21"], p)
    assert Z.shape == (18, 18)
    assert Z.is_zero()


def test_not_a_representation(rho0, bases0):
    p = Presentation.parse("ab", ["ab"])
    with pytest.raises(NotARepresentationError):
        verify_relators(rho0, p)
    with pytest.raises(NotARepresentationError):
        cocycle_matrix(rho0, bases0["sp21"], p)


def test_h0_examples(rho0, rhoW, bases0, basesW):
    assert h0_dimension(trivial_rep(rho0.form), bases0["sp21"]) == 21
    assert h0_dimension(rho0, bases0["sp21"]) == 1
    assert h0_dimension(rhoW, basesW["su21"]) == 0


@pytest.mark.parametrize("key", sorted(EXPECTED))
def test_h1_table(cases, key):
    name, flavor = key
    rho, p, bases = cases[name]
    r = h1_dimension(rho, bases[flavor], p)
    assert (r.h0, r.z1, r.b1, r.h1) == EXPECTED[key]
    assert r.z1 == p.n * r.d - r.cocycle_rank
    assert r.b1 == r.d - r.h0 == r.coboundary_rank
    assert r.h1 >= 0


@pytest.mark.parametrize("key", sorted(EXPECTED))
def test_h1_table_matches_float_oracle(cases, key):
    name, flavor = key
    rho, p, _ = cases[name]
    imgs = [oracles.float_matrix(g) for g in rho.images]
    J = oracles.float_matrix(rho.form.J)
    rels = [list(r.letters) for r in p.relators]
    assert oracles.cohomology_dims(imgs, J, rels, flavor) == EXPECTED[key]


def test_split_reports(cases):
    for name, split in (("gamma8", {"u21": 3, "m": 0}), ("gammaW", {"u21": 6, "m": 8}),
                        ("z3z3", {"u21": 4, "m": 4})):
        rho, p, bases = cases[name]
        r = h1_dimension(rho, bases["sp21"], p)
        assert r.split == split
        assert sum(r.split.values()) == r.h1


def test_spectral_oracle_on_free_product(rhoW, pZ3, basesW):
    # for <a, b | a^3, b^3>: dim Z1 = sum (d - dim Fix Ad(g)), dim B1 = d - dim H0
    from foxcoh.lie import centralizer_dimension

    for flavor in FLAVORS:
        B = basesW[flavor]
        z1 = sum(B.dim - centralizer_dimension(g, B) for g in rhoW.images)
        b1 = B.dim - h0_dimension(rhoW, B)
        r = h1_dimension(rhoW, B, pZ3)
        assert (r.z1, r.b1, r.h1) == (z1, b1, z1 - b1)


@pytest.mark.parametrize("name", ["gamma8", "gammaW", "z3z3"])
def test_coboundaries_are_cocycles(cases, name):
    rho, p, bases = cases[name]
    for flavor in FLAVORS:
        B = bases[flavor]
        product = cocycle_matrix(rho, B, p) @ coboundary_matrix(rho, B)
        assert product.is_zero()


@pytest.mark.parametrize("seed", range(4))
def test_invariance_under_permutation_and_rescaling(cases, seed):
    rng = random.Random(seed)
    name = ["gamma8", "z3z3"][seed % 2]
    flavor = ["u21", "su21", "m", "sp21"][seed]
    rho, p, bases = cases[name]
    expected = EXPECTED[(name, flavor)][3]
    B = bases[flavor]
    order = list(range(B.dim))
    rng.shuffle(order)
    assert h1_dimension(rho, B.permuted(order), p, split=False).h1 == expected
    scaled = rho.with_form(rho.form.scaled(2))
    assert h1_dimension(scaled, lie_basis(scaled.form, flavor), p, split=False).h1 == expected


def test_inflation_and_central_split(cases):
    for flavor in FLAVORS:
        rW = h1_dimension(*_args(cases, "gammaW", flavor), split=False)
        rZ = h1_dimension(*_args(cases, "z3z3", flavor), split=False)
        assert rW.h1 >= rZ.h1
    for name in ("gamma8", "gammaW", "z3z3"):
        free_rank = abelianization(cases[name][1])[1]
        u = h1_dimension(*_args(cases, name, "u21")).h1
        su = h1_dimension(*_args(cases, name, "su21")).h1
        assert u == su + free_rank


def _args(cases, name, flavor):
    rho, p, bases = cases[name]
    return rho, bases[flavor], p


def test_report_fields(cases):
    rho, p, bases = cases["gamma8"]
    r = h1_dimension(rho, bases["sp21"], p).to_dict()
    assert r["abelianization"] == {"invariant_factors": [], "free_rank": 1, "group": "Z"}
    assert r["centralizers"] == {"a": 7, "b": 7}
    assert any("Zariski tangent" in n for n in r["notes"])
