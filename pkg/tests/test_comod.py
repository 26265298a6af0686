import pytest

import oracles
from conftest import case
from corpus import dcomod_corpus, yd_corpus
from weakhopf.comod import (ComponentSplitting, RightAModule, RightComodule, adjunction_check,
                            comodule_verify, component_comodule, cotensor, cotensor_check,
                            end_algebra, enumerate_yd, forget, induce, internal_hom,
                            internal_hom_check, left_dual, plain_subcomodule, regular_comodule,
                            right_ideal_module, right_module_from_submodule, right_module_is_simple,
                            right_module_verify, simple_submodule, tensor_over_algebra)
from weakhopf.linalg import Matrix, Subspace, matrix_to_vector
from weakhopf.scalars import ONE
from weakhopf.yd import hom_yd, is_simple, to_yd, yd_verify


def comp_of_size(c, size):
    return next(comp for comp in c.comps if comp.dim == size)


def user_modules_for(c):
    """Simple right modules for the blocks with d > 1, found by eigenspace splitting."""
    out = {}
    for comp in c.comps:
        E = end_algebra(induce(comp, regular_comodule(comp)))
        for b in E.blocks:
            if b.d > 1:
                U = right_module_from_submodule(E, simple_submodule(E, b))
                out[(comp.index, b.index)] = (lambda mats, d: lambda E: RightAModule(E, d, mats))(U.mats, U.dim)
    return out


_ENUM = {}


def enumerated(name, with_users=True):
    key = (name, with_users)
    if key not in _ENUM:
        c = case(name)
        users = user_modules_for(c) if with_users else None
        _ENUM[key] = enumerate_yd(c.H, c.R, user_modules=users)
    return _ENUM[key]


# -- comodules ----------------------------------------------------------------------------

def test_comodule_axioms(small):
    for comp in small.comps:
        for W in [regular_comodule(comp)] + dcomod_corpus(small, comp):
            rep = comodule_verify(W, comp)
            assert rep.passed, (W.name, rep.summary())


def test_isotypic_parts_of_B(small):
    from weakhopf.yd import component_bcomod
    split = ComponentSplitting(small.comps)
    Bc = component_bcomod(small.BG)
    parts = [split.isotypic_part(Bc, i) for i in range(len(small.comps))]
    assert [p.dim for p in parts] == [comp.dim for comp in small.comps]


# -- cotensor and internal Hom ------------------------------------------------------------------

def right_regular(comp):
    """D as a right D-comodule, b -> b' (x) b''."""
    BG, D = comp.BG, comp.space
    n = BG.H.dim
    cols = []
    for v in D.rows:
        by_first = {}
        for (a, b), c in BG.delta(v).items():
            by_first.setdefault(b, {})[a] = c
        col = {}
        for b, vec in by_first.items():
            for p, c in D.coords(vec).items():
                col[p * n + b] = c
        cols.append(col)
    mod = component_comodule(comp).module
    return RightComodule(mod, Matrix(D.dim * n, D.dim, cols), f"D{comp.index}r")


def test_cotensor_trivial_coalgebra_is_full(kS3):
    comp = comp_of_size(kS3, 1)
    M = induce(comp, regular_comodule(comp))
    assert cotensor(left_dual(M), M).dim == M.dim ** 2


def test_cotensor_regular_bicomodule(small):
    for comp in small.comps:
        D = component_comodule(comp)
        assert cotensor(right_regular(comp), D).dim == D.dim


@pytest.mark.parametrize("size,expected", [(3, 3), (2, 2), (1, 1)])
def test_dual_cotensor_class_coalgebras(kS3, size, expected):
    comp = comp_of_size(kS3, size)
    D = component_comodule(comp)
    assert cotensor(left_dual(D), D).dim == expected
    assert internal_hom(D, D).dim == expected


def test_cotensor_inside_truncated_tensor(small):
    for comp in small.comps:
        for M in dcomod_corpus(small, comp):
            for N in dcomod_corpus(small, comp):
                rep = cotensor_check(left_dual(M), N)
                assert rep.passed, rep.summary()


def test_internal_hom_agrees_with_cotensor(small):
    for comp in small.comps:
        mods = dcomod_corpus(small, comp)
        for M in mods:
            for N in mods:
                rep = internal_hom_check(M, N)
                assert rep.passed, (M.name, N.name, rep.summary())


def test_internal_end_contains_identity(small):
    for comp in small.comps:
        for M in dcomod_corpus(small, comp):
            ih = internal_hom(M, M)
            assert ih.space.contains(matrix_to_vector(Matrix.identity(M.dim)))


def test_internal_hom_hopf_case_is_everything(kS3):
    comp = comp_of_size(kS3, 1)
    M = induce(comp, regular_comodule(comp))
    assert internal_hom(M, M).dim == M.dim ** 2


# -- induction --------------------------------------------------------------------------------

def test_induce_zero(kS3):
    comp = comp_of_size(kS3, 1)
    W = plain_subcomodule(regular_comodule(comp), Subspace.zero(1))
    assert induce(comp, W).dim == 0


def test_induce_hopf_trivial_coalgebra_gives_H(kS3):
    from weakhopf.repcat import hom_modules, regular_module
    comp = comp_of_size(kS3, 1)
    M = induce(comp, regular_comodule(comp))
    assert M.dim == kS3.H.dim
    homs = hom_modules(regular_module(kS3.H), M.module)
    assert any(f.rank() == M.dim for f in homs)


@pytest.mark.parametrize("size,dim", [(1, 6), (2, 12), (3, 18)])
def test_induced_dims_kS3(kS3, size, dim):
    comp = comp_of_size(kS3, size)
    assert induce(comp, regular_comodule(comp)).dim == dim


def test_groupoid_induction(pair2):
    comp = pair2.comps[0]
    W = regular_comodule(comp)
    M = induce(comp, W)
    # the regular comodule B is two copies of a simple comodule, so Ind(B) is V + V
    assert M.dim == 4
    assert len(hom_yd(M, M)) == 4
    line = plain_subcomodule(W, Subspace.from_vectors(2, [{0: ONE}]))
    V = induce(comp, line)
    assert V.dim == 2 and is_simple(V)
    assert yd_verify(to_yd(V, pair2.rm)).passed


def test_induced_modules_are_yd(small):
    for comp in small.comps:
        M = induce(comp, regular_comodule(comp))
        assert yd_verify(to_yd(M, small.rm)).passed


def test_adjunction(small):
    for comp in small.comps:
        mods = dcomod_corpus(small, comp)
        ws = [regular_comodule(comp)] + [forget(M) for M in mods]
        for W in ws:
            for M in mods:
                rep, a, b = adjunction_check(comp, W, M)
                assert rep.passed, (W.name, M.name, a, b)


# -- endomorphism algebras and tensor over them ---------------------------------------------------

@pytest.mark.parametrize("size,ds", [(1, [1, 1, 2]), (2, [2, 2, 2]), (3, [3, 3])])
def test_end_algebra_blocks_kS3(kS3, size, ds):
    comp = comp_of_size(kS3, size)
    E = end_algebra(induce(comp, regular_comodule(comp)))
    assert sorted(b.d for b in E.blocks) == ds
    expected = oracles.dpr_by_class(3)[size]
    assert sorted(b.simple_dim for b in E.blocks) == sorted(size * d for d in expected)
    assert E.alg.is_associative() and E.alg.is_unital()


def test_end_of_simple_is_k(pair2):
    comp = pair2.comps[0]
    V = induce(comp, plain_subcomodule(regular_comodule(comp), Subspace.from_vectors(2, [{0: ONE}])))
    assert end_algebra(V).dim == 1


def test_tensor_over_algebra(kS3):
    comp = comp_of_size(kS3, 1)
    M = induce(comp, regular_comodule(comp))
    E = end_algebra(M)
    A = right_ideal_module(E, E.alg.unit, "A")
    assert right_module_verify(A).passed
    full = tensor_over_algebra(A, E)
    assert full.report.passed and full.dim == M.dim
    zero = RightAModule(E, 0, [Matrix(0, 0)] * E.dim, "0")
    assert tensor_over_algebra(zero, E).dim == 0
    for b in E.blocks:
        if b.d == 1:
            V = tensor_over_algebra(right_ideal_module(E, b.idempotent), E)
            assert V.dim == b.isotypic.dim and is_simple(V)


def test_bad_right_module_rejected(kS3):
    comp = comp_of_size(kS3, 2)
    E = end_algebra(induce(comp, regular_comodule(comp)))
    ident = [Matrix.identity(2)] * E.dim
    U = RightAModule(E, 2, ident, "bogus")
    rep = right_module_verify(U)
    assert not rep.passed
    assert not right_module_is_simple(RightAModule(E, 2, [Matrix.identity(2)], "too-few"))


# -- enumeration ---------------------------------------------------------------------------------

def test_enumerate_trivial_group():
    payload, checks, simples, _ = enumerated("trivial")
    assert checks.passed
    assert payload["components"] == 1 and payload["simple_dims"] == [1]


def test_enumerate_kS3_matches_dpr():
    payload, checks, simples, _ = enumerated("kS3")
    assert checks.passed, checks.summary()
    assert payload["simple_dims"] == oracles.dpr_dims(3)
    assert payload["sum_of_squares"] == 36 and payload["all_constructed"]
    assert sorted(V.dim for _, _, V in simples) == oracles.dpr_dims(3)


def test_enumerate_without_user_modules_still_counts():
    payload, checks, simples, _ = enumerated("kS3", with_users=False)
    assert checks.passed
    assert payload["simple_count"] == 8 and not payload["all_constructed"]
    assert payload["constructed_sum_of_squares"] is None
    assert sorted(V.dim for _, _, V in simples) == [1, 1]


def test_enumerate_pair_groupoid():
    payload, checks, simples, _ = enumerated("pair2")
    assert checks.passed
    assert (payload["components"], payload["simple_dims"]) == (1, [2])
    assert payload["all_constructed"]


def test_enumerate_double_z2():
    payload, checks, _, _ = enumerated("DZ2")
    assert checks.passed
    assert payload["simple_count"] == 16 and payload["sum_of_squares"] == 16


@pytest.mark.parametrize("name", ["kS3", "pair2", "DZ2"])
def test_simples_verify(name):
    c = case(name)
    _, _, simples, _ = enumerated(name)
    for _, _, V in simples:
        assert yd_verify(to_yd(V, c.rm)).passed


@pytest.mark.parametrize("name", ["kS3", "pair2", "DZ2"])
def test_semisimple_expansion(name):
    c = case(name)
    _, _, simples, _ = enumerated(name)
    ys = [to_yd(V, c.rm) for _, _, V in simples]
    for M in yd_corpus(c):
        assert sum(len(hom_yd(V, M)) * V.dim for V in ys) == M.dim, M.name


def test_double_centralizer_bookkeeping():
    payload, _, _, _ = enumerated("kS3")
    for comp in payload["per_component"]:
        assert sum(b["d"] * b["simple_dim"] for b in comp["blocks"]) == comp["ind_dim"]
