"""Acceptance suite. Each test carries a ``criterion`` marker; the terminal summary
prints one PASS/FAIL line per criterion. Everything is exact: no tolerances."""

import time

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import BUILDERS, SMALL, case
from corpus import bcomod_corpus, dcomod_corpus, yd_corpus
from weakhopf.braided import (BraidedGroup, braided_group_build, braided_group_verify,
                              decompose_braided_group)
from weakhopf.builders import GroupTable, build_group_algebra, symmetric_group
from weakhopf.comod import (DComodule, adjunction_check, component_comodule, enumerate_yd, forget,
                            induce, internal_hom_check, regular_comodule)
from weakhopf.linalg import Matrix, Subspace
from weakhopf.repcat import direct_sum, dual_module, regular_module, unit_module
from weakhopf.scalars import ONE
from weakhopf.smash import (adjoint_module_algebra, dual_module_algebra, dual_smash_check,
                            invariants_beta, phi_check, smash_build, target_module_algebra,
                            trivial_module_algebra)
from weakhopf.wha import WeakHopfAlgebra, qt_check, qt_verify, wha_verify
from weakhopf.yd import roundtrip_check, yd_direct_sum

TITLES = {
    1: "axiom suites on kS3, the pair groupoid and D(S3), under 120 s",
    2: "braided group of kG with R = 1 (x) 1 is kG",
    3: "kS3 components are the conjugacy-class spans",
    4: "kS3 has 8 simple YD modules {1,1,2,2,2,2,3,3}, under 5 min",
    5: "pair groupoid: dim B = 2, r = 1, one simple of dim 2",
    6: "toYD and toBComod are mutually inverse on the corpus",
    7: "S_B T_B = T_B S_B = id",
    8: "internal Hom agrees with the cotensor product",
    9: "induction is left adjoint to forgetting",
    10: "Phi, beta and the dual smash check",
    11: "mutants are rejected with a named check and a witness",
}

ALL = SMALL + ["DS3"]


# -- 1 ----------------------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_axiom_suites():
    start = time.perf_counter()
    for name in ("kS3", "pair2", "DS3"):
        H, R = BUILDERS[name]()
        rep = wha_verify(H)
        assert rep.passed, rep.summary()
        rm, qrep = qt_check(H, R)
        assert rm is not None and qrep.passed, qrep.summary()
        brep = braided_group_verify(braided_group_build(H, rm))
        assert brep.passed, brep.summary()
    elapsed = time.perf_counter() - start
    assert elapsed < 120, f"{elapsed:.1f} s"


# -- 2 ----------------------------------------------------------------------------------------

def permutation_group(gens, n):
    """Closure of ``gens`` in S_n as a table, built from permutations directly."""
    e = tuple(range(n))
    elems, frontier = [e], [e]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = oracles.compose(g, x)
                if y not in elems:
                    elems.append(y)
                    new.append(y)
        frontier = new
    idx = {p: i for i, p in enumerate(elems)}
    mul = [[idx[oracles.compose(p, q)] for q in elems] for p in elems]
    return GroupTable(len(elems), mul, [idx[oracles.inverse(p)] for p in elems], 0)


def assert_collapse(G):
    H, R = build_group_algebra(G)
    BG = braided_group_build(H, qt_verify(H, R))
    assert BG.carrier == Subspace.full(H.dim)
    for i in range(H.dim):
        assert BG.delta({i: ONE}) == {(i, i): ONE} == H.comult[i]
        assert BG.S_B({i: ONE}) == {G.inverse[i]: ONE} == H.antipode[i]


@pytest.mark.criterion(2)
@settings(max_examples=25, deadline=None)
@given(st.lists(st.permutations(range(4)), min_size=1, max_size=2))
def test_trivial_R_collapse_random_groups(gens):
    G = permutation_group([tuple(g) for g in gens], 4)
    assert_collapse(G)


@pytest.mark.criterion(2)
def test_trivial_R_collapse_s3():
    assert_collapse(symmetric_group(3))


# -- 3 ----------------------------------------------------------------------------------------

@pytest.mark.criterion(3)
def test_decompose_kS3_conjugacy_classes():
    c = case("kS3")
    elems = oracles.perms(3)
    labels = c.H.labels
    from weakhopf.builders import _perm_label
    index = {_perm_label(p): i for i, p in enumerate(elems)}
    assert [index[l] for l in labels] == list(range(6))
    expected = sorted((Subspace.from_vectors(6, [{elems.index(g): ONE} for g in cls])
                       for cls in oracles.conjugacy_classes(elems)), key=lambda s: s.dim)
    comps = decompose_braided_group(c.BG)
    assert len(comps) == 3
    assert [comp.space for comp in comps] == expected
    assert sorted(comp.dim for comp in comps) == [1, 2, 3]


# -- 4 ----------------------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_enumerate_kS3():
    from test_comod import user_modules_for
    start = time.perf_counter()
    c = case("kS3")
    payload, checks, simples, _ = enumerate_yd(c.H, c.R, user_modules=user_modules_for(c))
    elapsed = time.perf_counter() - start
    expected = oracles.dpr_dims(3)
    assert expected == [1, 1, 2, 2, 2, 2, 3, 3]
    assert checks.passed, checks.summary()
    assert payload["simple_count"] == 8
    assert payload["simple_dims"] == expected
    assert sorted(V.dim for _, _, V in simples) == expected
    assert payload["sum_of_squares"] == payload["constructed_sum_of_squares"] == 36
    assert elapsed < 300


@pytest.mark.criterion(4)
def test_enumerate_kS3_from_shipped_modules():
    from pathlib import Path
    from weakhopf.fileio import read_algebra, read_modules
    data = Path(__file__).resolve().parent.parent / "data"
    H, R, _ = read_algebra(data / "s3.alg")
    users, _ = read_modules(data / "s3.modules.json", H.field)
    payload, checks, _, _ = enumerate_yd(H, R, user_modules=users)
    assert checks.passed
    assert payload["simple_dims"] == oracles.dpr_dims(3) and payload["all_constructed"]


# -- 5 ----------------------------------------------------------------------------------------

@pytest.mark.criterion(5)
def test_pair_groupoid():
    c = case("pair2")
    assert not c.H.is_hopf
    assert c.BG.dim == 2
    assert len(c.comps) == 1
    from test_comod import user_modules_for
    payload, checks, simples, _ = enumerate_yd(c.H, c.R, user_modules=user_modules_for(c))
    assert checks.passed
    assert payload["simple_count"] == 1 and payload["simple_dims"] == [2]
    assert [V.dim for _, _, V in simples] == [2]


# -- 6 ----------------------------------------------------------------------------------------

@pytest.mark.criterion(6)
@pytest.mark.parametrize("name", ALL)
def test_roundtrip(name):
    c = case(name)
    ys = yd_corpus(c)
    bs = bcomod_corpus(c) if name != "DS3" else [b for b in bcomod_corpus(c) if b.dim <= 36]
    assert len(ys) >= 10 and len(bs) >= 10
    for obj in ys + bs:
        rep = roundtrip_check(obj, c.rm)
        assert rep.passed, (obj.name, rep.summary())


# -- 7 ----------------------------------------------------------------------------------------

@pytest.mark.criterion(7)
@pytest.mark.parametrize("name", ALL + ["kZ3", "trivial"])
def test_antipode_inverse(name):
    BG = case(name).BG
    ident = Matrix.identity(BG.dim)
    assert BG.S_B_matrix.compose(BG.T_B_matrix) == ident
    assert BG.T_B_matrix.compose(BG.S_B_matrix) == ident
    for v in BG.carrier.rows:
        assert BG.T_B(BG.S_B(v)) == v == BG.S_B(BG.T_B(v))


# -- 8, 9 -------------------------------------------------------------------------------------

def sum_comodule(comp):
    D = component_comodule(comp)
    DD = yd_direct_sum(D, D)
    return DComodule(DD.module, DD.coaction, comp, "D+D")


def hom_pairs(c):
    """Pairs (M, N) of D-comodules; the double only uses Ind(D) for its smaller classes."""
    for comp in c.comps:
        if c.name != "DS3":
            mods = dcomod_corpus(c, comp)
            yield from ((M, N) for M in mods for N in mods)
        else:
            D, DD = component_comodule(comp), sum_comodule(comp)
            yield from [(D, D), (D, DD), (DD, D), (DD, DD)]
            if comp.dim <= 4:
                yield D, induce(comp, regular_comodule(comp))


def adjunction_pairs(c):
    for comp in c.comps:
        if c.name != "DS3":
            mods = dcomod_corpus(c, comp)
            ws = [regular_comodule(comp)] + [forget(M) for M in mods]
            yield from ((comp, W, M) for W in ws for M in mods)
        else:
            D, DD = component_comodule(comp), sum_comodule(comp)
            Ind = induce(comp, regular_comodule(comp))
            for W in (regular_comodule(comp), forget(DD)):
                for M in (D, DD, Ind):
                    yield comp, W, M


@pytest.mark.criterion(8)
@pytest.mark.parametrize("name", ALL)
def test_internal_hom_is_cotensor(name):
    c = case(name)
    n = 0
    for M, N in hom_pairs(c):
        rep = internal_hom_check(M, N)
        assert rep.passed, (M.name, N.name, rep.summary())
        n += 1
    assert n >= len(c.comps) * 4


@pytest.mark.criterion(9)
@pytest.mark.parametrize("name", ALL)
def test_induction_adjunction(name):
    c = case(name)
    for comp, W, M in adjunction_pairs(c):
        rep, a, b = adjunction_check(comp, W, M)
        assert rep.passed and a == b, (W.name, M.name, a, b)


# -- 10 ---------------------------------------------------------------------------------------

def module_algebras(c):
    out = [target_module_algebra(c.H), dual_module_algebra(c.H), adjoint_module_algebra(c.BG)]
    if c.H.is_hopf:
        out.append(trivial_module_algebra(c.H))
    return out


@pytest.mark.criterion(10)
@pytest.mark.parametrize("name", ALL)
def test_phi(name):
    c = case(name)
    for A in module_algebras(c):
        S, rep = smash_build(A, associativity=name != "DS3")
        assert rep.passed, rep.summary()
        prep = phi_check(S)
        assert prep.passed, (A.name, prep.summary())


@pytest.mark.criterion(10)
@pytest.mark.parametrize("name", ALL)
def test_beta(name):
    c = case(name)
    H = c.H
    reg = regular_module(H)
    for M in [reg, unit_module(H), dual_module(reg), c.BG.module, direct_sum(reg, unit_module(H))]:
        _, _, rep = invariants_beta(M)
        assert rep.passed, (M.name, rep.summary())


@pytest.mark.criterion(10)
@pytest.mark.parametrize("name", ALL)
def test_dual_smash(name):
    c = case(name)
    # for the double only the algebras with a 36-dimensional smash product are in reach
    algebras = module_algebras(c) if name != "DS3" else [target_module_algebra(c.H),
                                                        trivial_module_algebra(c.H)]
    for A in algebras:
        rep, payload = dual_smash_check(A, block_limit=36)
        assert rep.passed, (A.name, rep.summary())
        assert payload["double_smash_dim"] == payload["commutant_dim"]


# -- 11 ---------------------------------------------------------------------------------------

@pytest.mark.criterion(11)
def test_mutant_axiom4():
    H, _ = BUILDERS["kS3"]()
    g = H.labels.index("(1 2 3)")
    antipode = [dict(v) for v in H.antipode]
    antipode[g] = {g: ONE}
    bad = WeakHopfAlgebra(H.dim, H.mult, H.unit, H.comult, H.counit, antipode, H.field, H.labels)
    chk = wha_verify(bad).get("axiom4_target")
    assert not chk.passed and chk.witness == {"basis": [g]}


@pytest.mark.criterion(11)
def test_mutant_intertwiner():
    c = case("kS3")
    g = c.H.labels.index("(1 2)")
    rm, rep = qt_check(c.H, {(g, g): ONE})
    chk = rep.get("intertwiner")
    assert rm is None and not chk.passed and chk.witness


@pytest.mark.criterion(11)
def test_mutant_flipped_leg():
    c = case("DS3")
    BG = BraidedGroup(c.H, c.rm, delta_override=lambda t: {(b, a): x for (a, b), x in t.items()})
    chk = braided_group_verify(BG).get("bialgebra_law")
    assert not chk.passed and chk.witness
