import pytest

import oracles
from conftest import case
from weakhopf.braided import (BraidedGroup, braided_group_build, braided_group_verify,
                              centralizer_Hs, components_verify, decompose_braided_group,
                              projected_image)
from weakhopf.builders import build_group_algebra, cyclic_group, symmetric_group, trivial_group
from weakhopf.linalg import NotSplit, Subspace
from weakhopf.scalars import ONE
from weakhopf.wha import qt_verify


def test_braided_group_verify(small):
    rep = braided_group_verify(small.BG)
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("name,dim", [("kS3", 6), ("pair2", 2), ("disc2", 2), ("DZ2", 4)])
def test_dim_B(name, dim):
    assert case(name).BG.dim == dim


def test_centralizer_is_projection_image(small):
    assert centralizer_Hs(small.H) == projected_image(small.H)


@pytest.mark.parametrize("G", [trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group(3)],
                         ids=["1", "Z2", "Z3", "S3"])
def test_trivial_R_collapse(G):
    """With R = 1 (x) 1 the braided group of kG is kG itself."""
    H, R = build_group_algebra(G)
    BG = braided_group_build(H, qt_verify(H, R))
    assert BG.carrier == Subspace.full(H.dim)
    for i in range(H.dim):
        assert BG._delta_basis[i] == H.comult[i]
        assert BG.S_B({i: ONE}) == H.antipode[i]
        assert BG.counit({i: ONE}) == H.eps_t({i: ONE})


def test_antipode_inverse(small):
    BG = small.BG
    n = BG.dim
    for v in BG.carrier.rows:
        assert BG.T_B(BG.S_B(v)) == v
        assert BG.S_B(BG.T_B(v)) == v
    assert BG.S_B_matrix.compose(BG.T_B_matrix).cols == [{i: ONE} for i in range(n)]


def test_decomposition_matches_conjugacy_classes():
    c = case("kS3")
    elems = oracles.perms(3)
    expected = sorted(
        (Subspace.from_vectors(6, [{elems.index(g): ONE} for g in cls])
         for cls in oracles.conjugacy_classes(elems)), key=lambda s: s.dim)
    got = [comp.space for comp in c.comps]
    assert [s.dim for s in got] == [1, 2, 3]
    assert got == expected


def test_components_verify(small):
    rep = components_verify(small.BG, small.comps)
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("name,dims", [("pair2", [2]), ("disc2", [1, 1]), ("DZ2", [1, 1, 1, 1])])
def test_component_dims(name, dims):
    assert [comp.dim for comp in case(name).comps] == dims


def test_group_algebra_components_are_rational():
    # classes of an abelian group are points; no roots of unity are needed
    H, R = build_group_algebra(cyclic_group(3))
    BG = braided_group_build(H, qt_verify(H, R))
    assert [comp.dim for comp in decompose_braided_group(BG)] == [1, 1, 1]


def flipped(c):
    return BraidedGroup(c.H, c.rm, delta_override=lambda t: {(b, a): x for (a, b), x in t.items()})


def test_flipped_leg_mutant_rejected(DS3):
    rep = braided_group_verify(flipped(DS3))
    chk = rep.get("bialgebra_law")
    assert not chk.passed and chk.witness


def test_flip_is_invisible_for_cocommutative_group_algebra(kS3):
    assert braided_group_verify(flipped(kS3)).passed


@pytest.mark.slow
def test_double_s3(DS3):
    rep = braided_group_verify(DS3.BG)
    assert rep.passed, rep.summary()
    assert [comp.dim for comp in DS3.comps] == [1, 1, 4, 4, 4, 4, 9, 9]
    assert components_verify(DS3.BG, DS3.comps).passed


def test_double_s3_over_rationals_not_split():
    from weakhopf.builders import build_drinfeld_double
    H, R = build_drinfeld_double(symmetric_group(3))
    BG = braided_group_build(H, qt_verify(H, R))
    with pytest.raises(NotSplit):
        decompose_braided_group(BG)
