"""Module algebras, weak smash products A#H = A (x)_{H_t} H, the untwisting map
Phi: H (x)_{H_t} A -> A#H, invariants with beta_M, and the H*-dual smash checks."""

from __future__ import annotations

from .checks import Report
from .linalg import (Algebra, Matrix, NotSplit, Quotient, Subspace, axpy, isqrt_exact,
                     solve_linear_maps, vclean)
from .repcat import HModule, dual_module, hom_modules, module_verify, unit_module
from .scalars import ONE, ZERO


class IllFormed(ValueError):
    pass


class ModuleAlgebra:
    """An algebra A together with an H-module structure on the same vector space."""

    def __init__(self, H, alg, module, name="A"):
        if alg.dim != module.dim:
            raise ValueError("algebra and module dimensions differ")
        self.H = H
        self.alg = alg
        self.module = module
        self.name = name

    @property
    def dim(self):
        return self.alg.dim

    def act(self, h, a):
        acc = {}
        for i, c in h.items():
            axpy(acc, c, self.module.mats[i].apply(a))
        return acc


def module_algebra_verify(A):
    """Weak module-algebra axioms: h(ab) = (h_1 a)(h_2 b) and h 1 = eps_t(h) 1."""
    H, alg = A.H, A.alg
    rep = Report(f"module algebra {A.name}")
    rep.extend(module_verify(A.module))
    rep.add("algebra_associative", alg.is_associative())
    rep.add("algebra_unital", alg.is_unital())
    w = None
    for h in range(H.dim):
        for a in range(A.dim):
            for b in range(A.dim):
                lhs = A.module.mats[h].apply(alg.mult.get((a, b), {}))
                rhs = {}
                for (x, y), c in H.comult[h].items():
                    axpy(rhs, c, alg.mul(A.module.mats[x].cols[a], A.module.mats[y].cols[b]))
                if vclean(lhs) != vclean(rhs):
                    w = {"h": h, "a": a, "b": b}
                    break
            if w:
                break
        if w:
            break
    rep.add("action_respects_product", w is None, w)
    w = None
    for h in range(H.dim):
        if A.module.mats[h].apply(alg.unit) != A.act(H.eps_t({h: ONE}), alg.unit):
            w = {"h": h}
            break
    rep.add("action_unit", w is None, w)
    return rep


# -- corpus module algebras ------------------------------------------------------------

def algebra_of(H):
    return Algebra(H.dim, H.mult, H.unit, H.field)


def target_module_algebra(H):
    """H_t with h . z = eps_t(hz)."""
    return ModuleAlgebra(H, algebra_of(H).subalgebra(H.Ht), unit_module(H), "Ht")


def dual_module_algebra(H):
    """H* with (h -> f)(x) = f(xh), the product dual to Delta."""
    Hd = H.dual()
    n = H.dim
    mats = []
    for k in range(n):
        cols = [{} for _ in range(n)]
        for (j, kk), v in H.mult.items():
            if kk != k:
                continue
            for i, c in v.items():
                cols[i][j] = cols[i].get(j, ZERO) + c
        mats.append(Matrix(n, n, [vclean(c) for c in cols]))
    return ModuleAlgebra(H, Algebra(n, Hd.mult, Hd.unit, H.field), HModule(H, n, mats, "H*"), "H*")


def trivial_module_algebra(H):
    """k with h . 1 = eps(h); a module algebra only when H is Hopf."""
    mats = [Matrix(1, 1, [{0: H.counit[i]} if H.counit.get(i) else {}]) for i in range(H.dim)]
    return ModuleAlgebra(H, Algebra(1, {(0, 0): {0: ONE}}, {0: ONE}, H.field),
                         HModule(H, 1, mats, "k"), "k")


def adjoint_module_algebra(BG):
    """B with the adjoint action and the product of H."""
    H = BG.H
    alg = algebra_of(H).subalgebra(BG.carrier)
    return ModuleAlgebra(H, alg, BG.module, "B")


def corrupt_action(A, mats, name=None):
    """The same algebra with a different (possibly wrong) action."""
    return ModuleAlgebra(A.H, A.alg, HModule(A.H, A.dim, mats, name or f"{A.name}~"),
                         name or f"{A.name}~")


def left_regular_corruption(H):
    """H acting on itself by left multiplication: a module, not a module algebra."""
    alg = algebra_of(H)
    mats = [H.left_mult({i: ONE}) for i in range(H.dim)]
    return ModuleAlgebra(H, alg, HModule(H, H.dim, mats, "H-left"), "H-left")


# -- smash product ---------------------------------------------------------------------------

class SmashProduct:
    """A#H realized inside A (x) H (index a * dim H + h) as the image of the
    balancing projector P(a (x) h) = 1_1 . a (x) 1_2 h."""

    def __init__(self, A):
        self.A = A
        self.H = H = A.H
        self.nA, self.nH = A.dim, H.dim
        n = self.nA * self.nH
        cols = [self._project_basis(k) for k in range(n)]
        self.P = Matrix(n, n, cols)
        self.carrier = Subspace.from_vectors(n, cols)
        self._alg = None

    @property
    def dim(self):
        return self.carrier.dim

    def _project_basis(self, k):
        a, h = divmod(k, self.nH)
        H, A = self.H, self.A
        out = {}
        for (x, y), c in H.delta_one.items():
            xa = A.module.mats[x].cols[a]
            yh = H.mult.get((y, h), {})
            for i, d in xa.items():
                for j, e in yh.items():
                    kk = i * self.nH + j
                    out[kk] = out.get(kk, ZERO) + c * d * e
        return vclean(out)

    def project(self, v):
        return self.P.apply(v)

    def relations(self):
        """(a . z) (x) h - a (x) zh with a . z = S^-1(z) . a, z in H_t."""
        H, A = self.H, self.A
        rels = []
        for z in H.Ht.rows:
            Sz = H.Sinv(z)
            zh = [H.mul(z, {h: ONE}) for h in range(self.nH)]
            for a in range(self.nA):
                az = A.act(Sz, {a: ONE})
                for h in range(self.nH):
                    v = {}
                    for i, c in az.items():
                        v[i * self.nH + h] = v.get(i * self.nH + h, ZERO) + c
                    for j, c in zh[h].items():
                        v[a * self.nH + j] = v.get(a * self.nH + j, ZERO) - c
                    rels.append(vclean(v))
        return Subspace.from_vectors(self.nA * self.nH, rels)

    def amb_mul(self, x, y):
        """(a#h)(b#g) = a (h_1 . b) # h_2 g on representatives."""
        H, A = self.H, self.A
        nH = self.nH
        out = {}
        for k1, c1 in x.items():
            a, h = divmod(k1, nH)
            for k2, c2 in y.items():
                b, g = divmod(k2, nH)
                for (h1, h2), c in H.comult[h].items():
                    hb = A.module.mats[h1].cols[b]
                    if not hb:
                        continue
                    ahb = A.alg.mul({a: ONE}, hb)
                    hg = H.mult.get((h2, g))
                    if not ahb or not hg:
                        continue
                    for i, d in ahb.items():
                        for j, e in hg.items():
                            kk = i * nH + j
                            out[kk] = out.get(kk, ZERO) + c1 * c2 * c * d * e
        return vclean(out)

    def mul(self, x, y):
        return self.project(self.amb_mul(x, y))

    def element(self, a, h):
        return self.project({a * self.nH + h: ONE})

    @property
    def unit(self):
        acc = {}
        for a, c in self.A.alg.unit.items():
            for h, d in self.H.unit.items():
                acc[a * self.nH + h] = acc.get(a * self.nH + h, ZERO) + c * d
        return self.project(acc)

    def algebra(self):
        """Structure constants in the coordinates of the carrier basis."""
        if self._alg is None:
            rows = self.carrier.rows
            mult = {}
            for i, x in enumerate(rows):
                for j, y in enumerate(rows):
                    c = self.carrier.coords(self.mul(x, y))
                    if c:
                        mult[(i, j)] = c
            self._alg = Algebra(self.dim, mult, self.carrier.coords(self.unit), self.H.field)
        return self._alg

    def right_action(self, b):
        """x -> x (b # 1) on carrier coordinates."""
        rows = self.carrier.rows
        b1 = self.project({k * self.nH + h: c * d for k, c in b.items() for h, d in self.H.unit.items()})
        return Matrix(self.dim, self.dim, [self.carrier.coords(self.mul(x, b1)) for x in rows])


def smash_build(A, check=True, associativity=True):
    """Returns (SmashProduct, Report); raises IllFormed when the smash product is not well defined."""
    S = SmashProduct(A)
    rep = Report(f"{A.name} # H")
    if not check:
        return S, rep
    n = S.nA * S.nH
    rep.add("projector_idempotent", S.P.compose(S.P) == S.P)
    rel = S.relations()
    ker = S.P.kernel()
    rep.add("projector_kernel_is_balancing", rel == ker, {"relations": rel.dim, "kernel": ker.dim})
    w = None
    for r in rel.rows:
        for k in range(n):
            e = {k: ONE}
            if S.mul(r, e) or S.mul(e, r):
                w = {"relation_pivot": min(r), "basis": k}
                break
        if w:
            break
    rep.add("product_descends", w is None, w)
    if not rep.passed:
        raise IllFormed(rep.summary())
    if associativity:
        alg = S.algebra()
        rep.add("associative", alg.is_associative())
        rep.add("unital", alg.is_unital())
    return S, rep


# -- the untwisting map Phi ----------------------------------------------------------------------

def phi_check(S):
    """Phi: h (x) a -> (h_1 . a) # h_2 from H (x)_{H_t} A to A#H, against its stated inverse."""
    H, A = S.H, S.A
    nA, nH = S.nA, S.nH
    rep = Report(f"Phi for {A.name}")
    rels = []
    for z in H.Ht.rows:
        for h in range(nH):
            hz = H.mul({h: ONE}, z)
            for a in range(nA):
                za = A.act(z, {a: ONE})
                v = {}
                for j, c in hz.items():
                    v[j * nA + a] = v.get(j * nA + a, ZERO) + c
                for i, c in za.items():
                    v[h * nA + i] = v.get(h * nA + i, ZERO) - c
                rels.append(vclean(v))
    Q = Quotient(Subspace.from_vectors(nH * nA, rels))

    def phi(v):
        out = {}
        for k, c in v.items():
            h, a = divmod(k, nA)
            for (h1, h2), d in H.comult[h].items():
                for i, e in A.module.mats[h1].cols[a].items():
                    kk = i * nH + h2
                    out[kk] = out.get(kk, ZERO) + c * d * e
        return S.project(vclean(out))

    def psi(v):
        out = {}
        for k, c in v.items():
            a, h = divmod(k, nH)
            for (h1, h2), d in H.comult[h].items():
                for i, e in A.act(H.Sinv({h1: ONE}), {a: ONE}).items():
                    kk = h2 * nA + i
                    out[kk] = out.get(kk, ZERO) + c * d * e
        return Q.project(vclean(out))

    w = next(({"relation": i} for i, r in enumerate(Q.sub.rows) if phi(r)), None)
    rep.add("phi_well_defined", w is None, w)
    image = Matrix(S.dim, Q.dim, [S.carrier.coords(phi(Q.lift({j: ONE}))) for j in range(Q.dim)])
    rep.add("phi_bijective", Q.dim == S.dim and image.rank() == S.dim, {"source": Q.dim, "target": S.dim})
    w = None
    for h in range(nH):
        for a in range(nA):
            for b in range(nA):
                lhs = phi({h * nA + i: c for i, c in A.alg.mult.get((a, b), {}).items()})
                b1 = S.project({b * nH + u: c for u, c in H.unit.items()})
                rhs = S.mul(phi({h * nA + a: ONE}), b1)
                if lhs != rhs:
                    w = {"h": h, "a": a, "b": b}
                    break
            if w:
                break
        if w:
            break
    rep.add("phi_right_A_linear", w is None, w)
    w = next(({"class": j} for j in range(Q.dim) if psi(phi(Q.lift({j: ONE}))) != {j: ONE}), None)
    rep.add("psi_after_phi_identity", w is None, w)
    w = next(({"carrier": i} for i, x in enumerate(S.carrier.rows) if phi(Q.lift(psi(x))) != x), None)
    rep.add("phi_after_psi_identity", w is None, w)
    return rep


# -- invariants and beta_M ------------------------------------------------------------------------

def invariants(M):
    """Inv M = {m : h . m = eps_t(h) . m for all h}."""
    H = M.H
    rows = []
    for h in range(H.dim):
        diff = M.mats[h] - M.act(H.eps_t({h: ONE}))
        rows.extend(diff.transpose().cols)
    return Matrix.from_rows([r for r in rows if r], M.dim).kernel() if any(rows) \
        else Subspace.full(M.dim)


def invariants_beta(M):
    """Returns (Inv M, Inv M*, Report) for beta_M: Inv M* -> Hom_H(M, H_t) and f -> eps o f."""
    H = M.H
    inv_M = invariants(M)
    inv_Md = invariants(dual_module(M))
    U = unit_module(H)
    homs = hom_modules(M, U)
    hom_space = Subspace.from_vectors(M.dim * U.dim, [_mvec(f) for f in homs])
    rep = Report(f"beta for {M.name}")

    def beta(mstar):
        cols = []
        for m in range(M.dim):
            acc = {}
            for (x, y), c in H.delta_one.items():
                pair = sum((mstar.get(i, ZERO) * d for i, d in M.mats[x].cols[m].items()), ZERO)
                if pair:
                    axpy(acc, c * pair, {y: ONE})
            cols.append(U.coords(vclean(acc)))
        return Matrix(U.dim, M.dim, cols)

    def beta_inv(f):
        return vclean({m: H.eps(U.element(f.cols[m])) for m in range(M.dim)})

    rep.add("dims_equal", inv_Md.dim == len(homs), {"inv_dual": inv_Md.dim, "hom": len(homs)})
    w = next(({"basis": i} for i, v in enumerate(inv_Md.rows) if not hom_space.contains(_mvec(beta(v)))), None)
    rep.add("beta_lands_in_hom", w is None, w)
    w = next(({"basis": i} for i, f in enumerate(homs) if not inv_Md.contains(beta_inv(f))), None)
    rep.add("beta_inverse_lands_in_invariants", w is None, w)
    w = next(({"basis": i} for i, v in enumerate(inv_Md.rows) if beta_inv(beta(v)) != v), None)
    rep.add("beta_inv_after_beta", w is None, w)
    w = next(({"basis": i} for i, f in enumerate(homs) if beta(beta_inv(f)) != f), None)
    rep.add("beta_after_beta_inv", w is None, w)
    return inv_M, inv_Md, rep


def _mvec(f):
    out = {}
    for p, col in enumerate(f.cols):
        for q, c in col.items():
            out[q * f.ncols + p] = c
    return out


# -- (A#H)#H* against End(A#H)_A ---------------------------------------------------------------------

def smash_dual_module_algebra(S):
    """A#H as an H*-module algebra via f . (a#h) = a # (f -> h), f -> h = h_1 <f, h_2>."""
    H = S.H
    Hd = H.dual()
    rows = S.carrier.rows
    mats = []
    for f in range(H.dim):
        cols = []
        for x in rows:
            out = {}
            for k, c in x.items():
                a, h = divmod(k, S.nH)
                for (h1, h2), d in H.comult[h].items():
                    if h2 == f:
                        out[a * S.nH + h1] = out.get(a * S.nH + h1, ZERO) + c * d
            cols.append(S.carrier.coords(S.project(vclean(out))))
        mats.append(Matrix(S.dim, S.dim, cols))
    return ModuleAlgebra(Hd, S.algebra(), HModule(Hd, S.dim, mats, f"{S.A.name}#H"), f"{S.A.name}#H")


def right_commutant(S):
    """Basis of End(A#H)_A: maps commuting with right multiplication by A # 1."""
    eqs = []
    for b in range(S.nA):
        R = S.right_action({b: ONE})
        eqs.append([(ONE, None, R), (-ONE, R, None)])
    return solve_linear_maps(S.dim, S.dim, eqs)


def _block_dims(alg, precision_bits, height_bound, seed):
    dims = []
    for z in alg.central_idempotents(precision_bits, height_bound, seed):
        sub = Subspace.from_vectors(alg.dim, [alg.mul(z, {k: ONE}) for k in range(alg.dim)])
        dims.append(sub.dim)
    return sorted(dims)


def dual_smash_check(A, block_limit=64, precision_bits=256, height_bound=10 ** 6, seed=0, verify_action=True):
    """dim (A#H)#H* = dim End(A#H)_A, block multisets when small and split, and the
    semisimplicity transfer from A#H to A."""
    from .linalg import algebra_from_matrices
    S, _ = smash_build(A, check=False)
    rep = Report(f"dual smash for {A.name}")
    SA = smash_dual_module_algebra(S)
    if verify_action:
        mr = module_algebra_verify(SA)
        rep.add("H*_action_module_algebra", mr.passed, [c.name for c in mr.failures()])
    T, _ = smash_build(SA, check=False)
    ends = right_commutant(S)
    rep.add("dims_equal", T.dim == len(ends), {"double_smash": T.dim, "commutant": len(ends)})
    payload = {"smash_dim": S.dim, "double_smash_dim": T.dim, "commutant_dim": len(ends)}
    if T.dim <= block_limit and ends:
        try:
            b1 = _block_dims(T.algebra(), precision_bits, height_bound, seed)
            alg2, _ = algebra_from_matrices(ends, A.H.field)
            b2 = _block_dims(alg2, precision_bits, height_bound, seed)
            payload["blocks"] = {"double_smash": b1, "commutant": b2}
            rep.add("block_multisets_equal", b1 == b2, payload["blocks"])
            rep.add("blocks_square", all(isqrt_exact(d) is not None for d in b1))
        except NotSplit as exc:
            payload["blocks"] = f"not split: {exc}"
    smash_ss = S.algebra().is_semisimple()
    a_ss = A.alg.is_semisimple()
    payload["smash_semisimple"] = smash_ss
    payload["A_semisimple"] = a_ss
    rep.add("semisimplicity_transfer", a_ss or not smash_ss, {"smash": smash_ss, "A": a_ss})
    return rep, payload
