import pytest

from weakhopf.linalg import Algebra, Subspace
from weakhopf.repcat import direct_sum, hom_modules, dual_module, regular_module, unit_module, zero_module
from weakhopf.scalars import ONE
from weakhopf.smash import (IllFormed, SmashProduct, adjoint_module_algebra, corrupt_action,
                            dual_module_algebra, dual_smash_check, invariants, invariants_beta,
                            left_regular_corruption, module_algebra_verify, phi_check, smash_build,
                            target_module_algebra, trivial_module_algebra)


def module_algebras(c):
    out = [target_module_algebra(c.H), dual_module_algebra(c.H), adjoint_module_algebra(c.BG)]
    if c.H.is_hopf:
        out.append(trivial_module_algebra(c.H))
    return out


def test_corpus_module_algebras(small):
    for A in module_algebras(small):
        rep = module_algebra_verify(A)
        assert rep.passed, (A.name, rep.summary())


def test_left_regular_is_not_module_algebra(kS3):
    rep = module_algebra_verify(left_regular_corruption(kS3.H))
    assert not rep.passed
    assert rep.get("action_respects_product").witness is not None


def test_trivial_module_algebra_needs_hopf(pair2):
    assert not module_algebra_verify(trivial_module_algebra(pair2.H)).passed


# -- smash product ------------------------------------------------------------------------

def test_smash_products_build(small):
    for A in module_algebras(small):
        S, rep = smash_build(A)
        assert rep.passed, (A.name, rep.summary())


def test_smash_with_k_is_H(kS3):
    S, _ = smash_build(trivial_module_algebra(kS3.H))
    assert S.dim == kS3.H.dim


def test_smash_with_target_has_dim_H(small):
    S, _ = smash_build(target_module_algebra(small.H))
    assert S.dim == small.H.dim


def test_smash_groupoid_B_dimension(pair2):
    # B = H_t = H_s = diagonal for the pair groupoid, so B (x)_{H_t} H = H
    A = adjoint_module_algebra(pair2.BG)
    S, rep = smash_build(A)
    assert rep.passed and S.dim == 4


def test_smash_projector_properties(small):
    for A in module_algebras(small):
        S = SmashProduct(A)
        assert S.P.compose(S.P) == S.P
        assert S.P.kernel() == S.relations()
        assert S.dim == S.nA * S.nH - S.relations().dim


def test_broken_action_is_ill_formed(pair2):
    A = target_module_algebra(pair2.H)
    # every element acts by the identity, so the balancing relations are not a kernel
    bogus = corrupt_action(A, [unit_module(pair2.H).mats[0].identity(A.dim)] * pair2.H.dim)
    with pytest.raises(IllFormed):
        smash_build(bogus)


# -- Phi --------------------------------------------------------------------------------------

def test_phi_corpus(small):
    for A in module_algebras(small):
        S, _ = smash_build(A, associativity=False)
        rep = phi_check(S)
        assert rep.passed, (A.name, rep.summary())


def test_phi_target_is_square_full_rank(small):
    S, _ = smash_build(target_module_algebra(small.H))
    rep = phi_check(S)
    assert rep.get("phi_bijective").passed and S.dim == small.H.dim


def test_phi_detects_left_regular_action(kS3):
    S, _ = smash_build(left_regular_corruption(kS3.H), associativity=False)
    rep = phi_check(S)
    chk = rep.get("phi_right_A_linear")
    assert not chk.passed and set(chk.witness) == {"h", "a", "b"}


# -- invariants and beta -------------------------------------------------------------------------

def corpus_modules(c):
    H = c.H
    out = [regular_module(H), unit_module(H), dual_module(regular_module(H)), c.BG.module,
           zero_module(H)]
    out.append(direct_sum(out[0], out[1]))
    return out


def test_beta_corpus(small):
    for M in corpus_modules(small):
        _, _, rep = invariants_beta(M)
        assert rep.passed, (M.name, rep.summary())


def test_beta_regular_group_algebra(kS3):
    _, inv_d, rep = invariants_beta(regular_module(kS3.H))
    assert rep.passed and inv_d.dim == 1


def test_beta_zero_module(kS3):
    inv, inv_d, rep = invariants_beta(zero_module(kS3.H))
    assert rep.passed and inv.dim == inv_d.dim == 0


def test_beta_unit_module(small):
    # Inv M = Hom_H(H_t, M); for M = H_t that is End of the unit object
    U = unit_module(small.H)
    inv, inv_d, rep = invariants_beta(U)
    assert rep.passed and inv.dim == len(hom_modules(U, U))
    if small.name != "pair2":
        assert inv.dim == U.dim


def test_invariants_are_homs_from_unit(small):
    U = unit_module(small.H)
    for M in corpus_modules(small):
        assert invariants(M).dim == len(hom_modules(U, M)), M.name


def test_invariants_of_regular_kS3_are_the_integral_line(kS3):
    inv = invariants(regular_module(kS3.H))
    assert inv == Subspace.from_vectors(6, [{g: ONE for g in range(6)}])


# -- dual smash ---------------------------------------------------------------------------------

def test_dual_smash_trivial_algebra_hopf(kS3):
    rep, payload = dual_smash_check(trivial_module_algebra(kS3.H))
    assert rep.passed, rep.summary()
    assert payload["double_smash_dim"] == payload["commutant_dim"] == 36
    assert payload["blocks"]["double_smash"] == [36]


def test_dual_smash_target_groupoid(pair2):
    rep, payload = dual_smash_check(target_module_algebra(pair2.H))
    assert rep.passed, rep.summary()
    # A#H = M_2 with the diagonal acting on the right: End is M_2 x M_2
    assert payload["double_smash_dim"] == payload["commutant_dim"] == 8
    assert payload["blocks"]["commutant"] == [4, 4]


def test_dual_smash_corpus(small):
    for A in module_algebras(small):
        rep, payload = dual_smash_check(A, block_limit=36)
        assert rep.passed, (A.name, rep.summary())


def test_semisimplicity_transfer_kS3(kS3):
    for A in module_algebras(kS3):
        _, payload = dual_smash_check(A, block_limit=0, verify_action=False)
        assert payload["smash_semisimple"] and payload["A_semisimple"]


def test_semisimplicity_flag_on_nonsemisimple_A(kS3):
    # dual numbers k[x]/x^2 with the counit action: A#H = A (x) H is not semisimple
    H = kS3.H
    alg = Algebra(2, {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 0): {1: ONE}}, {0: ONE}, H.field)
    k = trivial_module_algebra(H)
    M = direct_sum(k.module, k.module)
    from weakhopf.smash import ModuleAlgebra
    A = ModuleAlgebra(H, alg, M, "k[x]/x^2")
    assert module_algebra_verify(A).passed
    rep, payload = dual_smash_check(A, block_limit=0)
    assert rep.passed
    assert not payload["smash_semisimple"] and not payload["A_semisimple"]
