"""Comodules over adjoint-stable subcoalgebras of B: cotensor products, internal
Homs, induction, endomorphism algebras, tensor products over them, and the
enumeration of simple Yetter-Drinfeld modules."""

from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from .checks import Report
from .linalg import (Matrix, NotSemisimple, Quotient, Subspace, algebra_from_matrices, axpy,
                     isqrt_exact, matrix_to_vector, solve, vector_to_matrix)
from .repcat import HModule, act_diag, carrier, restrict_module
from .scalars import ONE, ZERO
from .yd import BComodule, _second_leg_coords, coaction_matrix, hom_colinear, hom_yd, is_simple


class PlainComodule:
    """A comodule over a subcoalgebra D of (B, Delta_B, eps), with no H-action."""

    def __init__(self, H, dim, coaction, name="W"):
        self.H = H
        self.dim = dim
        self.coaction = coaction
        self.name = name
        if coaction.shape != (H.dim * dim, dim):
            raise ValueError("coaction must map W into H (x) W")

    def rho_basis(self, p):
        return {divmod(k, self.dim): c for k, c in self.coaction.cols[p].items()}

    def rho(self, v):
        return {divmod(k, self.dim): c for k, c in self.coaction.apply(v).items()}

    def __repr__(self):
        return f"PlainComodule({self.name}, dim={self.dim})"


class DComodule(BComodule):
    """A D-comodule in the category of H-modules (coaction lands in D (x)_t M)."""

    def __init__(self, module, coaction, component=None, name=None):
        super().__init__(module, coaction, name)
        self.component = component


def _coaction_of(H, dim, fn):
    cols = [{i * dim + q: c for (i, q), c in fn({p: ONE}).items() if c} for p in range(dim)]
    return Matrix(H.dim * dim, dim, cols)


def forget(M):
    return PlainComodule(M.H, M.dim, M.coaction, f"U({M.name})")


def comodule_verify(W, comp):
    """Coaction into D, coassociativity over Delta_B, counit eps."""
    H = W.H
    BG = comp.BG
    D = comp.space
    rep = Report(f"D-comodule axioms for {W.name}")
    w = None
    for p in range(W.dim):
        firsts = {}
        for (i, q), c in W.rho_basis(p).items():
            axpy(firsts.setdefault(q, {}), c, {i: ONE})
        if not all(D.contains(v) for v in firsts.values()):
            w = {"basis": p}
            break
    rep.add("coaction_into_D", w is None, w)
    w = None
    for p in range(W.dim):
        lhs, rhs = {}, {}
        for (i, q), c in W.rho_basis(p).items():
            for (a, b), d in BG._delta_basis[i].items():
                lhs[(a, b, q)] = lhs.get((a, b, q), ZERO) + c * d
            for (j, r), d in W.rho_basis(q).items():
                rhs[(i, j, r)] = rhs.get((i, j, r), ZERO) + c * d
        if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
            w = {"basis": p}
            break
    rep.add("coassociativity", w is None, w)
    w = None
    for p in range(W.dim):
        acc = {}
        for (i, q), c in W.rho_basis(p).items():
            e = H.counit.get(i, ZERO)
            if e:
                axpy(acc, c * e, {q: ONE})
        if acc != {p: ONE}:
            w = {"basis": p}
            break
    rep.add("counit", w is None, w)
    if isinstance(W, BComodule):
        from .yd import bcomod_verify
        rep.extend(bcomod_verify(W, BG))
    return rep


def regular_comodule(comp, name=None):
    """D as a plain left comodule over itself."""
    D = comp.space

    def fn(v):
        return _second_leg_coords(comp.BG.delta(D.vector(v)), D.coords)

    return PlainComodule(comp.BG.H, D.dim, _coaction_of(comp.BG.H, D.dim, fn), name or f"D{comp.index}")


def plain_subcomodule(W, sub, name=None):
    def fn(v):
        return _second_leg_coords(W.rho(sub.vector(v)), sub.coords)

    return PlainComodule(W.H, sub.dim, _coaction_of(W.H, sub.dim, fn), name or f"{W.name}|sub")


def plain_direct_sum(V, W):
    m = V.dim

    def fn(v):
        out = {}
        left = {p: c for p, c in v.items() if p < m}
        right = {p - m: c for p, c in v.items() if p >= m}
        if left:
            out.update(V.rho(left))
        if right:
            for (i, q), c in W.rho(right).items():
                out[(i, q + m)] = c
        return out

    return PlainComodule(V.H, V.dim + W.dim, _coaction_of(V.H, V.dim + W.dim, fn), f"{V.name}+{W.name}")


def component_comodule(comp, name=None):
    """(D, ad, Delta_B) as a D-comodule in the category."""
    from .yd import component_bcomod
    b = component_bcomod(comp.BG, comp.space, name or f"D{comp.index}")
    return DComodule(b.module, b.coaction, comp, b.name)


class ComponentSplitting:
    """Coordinates of B = D_1 + ... + D_r, giving the central idempotents eps o P_i of B*."""

    def __init__(self, comps):
        self.comps = comps
        self.offsets = []
        cols = []
        for c in comps:
            self.offsets.append(len(cols))
            cols.extend(c.space.rows)
        self.H = comps[0].BG.H
        self.matrix = Matrix(self.H.dim, len(cols), cols)
        self.rows = cols

    def part(self, index, b):
        x = solve(self.matrix, b)
        if x is None:
            raise ValueError("vector is not in B")
        lo = self.offsets[index]
        hi = lo + self.comps[index].dim
        acc = {}
        for k, c in x.items():
            if lo <= k < hi:
                axpy(acc, c, self.rows[k])
        return acc

    def isotypic_part(self, N, index):
        """The part of a B-comodule whose coaction lands in D_index."""
        H = self.H
        comp = self.comps[index]
        images = []
        for p in range(N.dim):
            by_second = {}
            for (i, q), c in N.rho_basis(p).items():
                axpy(by_second.setdefault(q, {}), c, {i: ONE})
            acc = {}
            for q, v in by_second.items():
                e = H.eps(self.part(index, v))
                if e:
                    axpy(acc, e, {q: ONE})
            images.append(acc)
        sub = Subspace.from_vectors(N.dim, images)
        mod = restrict_module(N.module, sub, f"{N.name}[{index}]")

        def fn(v):
            return _second_leg_coords(N.rho(sub.vector(v)), sub.coords)

        return DComodule(mod, coaction_matrix(H, mod, fn), comp, mod.name)


# -- cotensor and internal Hom ----------------------------------------------------------

class RightComodule:
    """A right D-comodule: ``rcoaction`` maps M into M (x) H, rows p * dim H + i."""

    def __init__(self, module, rcoaction, name):
        self.module = module
        self.H = module.H
        self.rcoaction = rcoaction
        self.name = name

    @property
    def dim(self):
        return self.module.dim

    def rho_basis(self, p):
        n = self.H.dim
        return {divmod(k, n): c for k, c in self.rcoaction.cols[p].items()}


def left_dual(M):
    """*M: the S^-1 dual action and the transposed right coaction
    <m*_0, m> m*_1 = <m*, m_0> m_-1."""
    H = M.H
    mats = [M.module.act(H.Sinv({i: ONE})).transpose() for i in range(H.dim)]
    mod = HModule(H, M.dim, mats, f"*{M.name}")
    cols = [{} for _ in range(M.dim)]
    for p in range(M.dim):
        for (i, q), c in M.rho_basis(p).items():
            k = p * H.dim + i
            cols[q][k] = cols[q].get(k, ZERO) + c
    return RightComodule(mod, Matrix(M.dim * H.dim, M.dim, cols), mod.name)


def cotensor(Mr, Nl):
    """Kernel of rho_M x id - id x rho_N inside M (x) N (flat index p * dim N + q)."""
    H = Mr.H
    m, n, h = Mr.dim, Nl.dim, H.dim
    cols = []
    for p in range(m):
        rp = Mr.rho_basis(p)
        for q in range(n):
            col = {}
            for (a, i), c in rp.items():
                k = (a * h + i) * n + q
                col[k] = col.get(k, ZERO) + c
            for (i, b), c in Nl.rho_basis(q).items():
                k = (p * h + i) * n + b
                col[k] = col.get(k, ZERO) - c
            cols.append({k: c for k, c in col.items() if c})
    return Matrix(m * h * n, m * n, cols).kernel()


def cotensor_check(Mr, Nl, space=None):
    space = cotensor(Mr, Nl) if space is None else space
    rep = Report(f"cotensor {Mr.name} [] {Nl.name}")
    car = carrier([Mr.module, Nl.module])
    rep.add("inside_truncated_tensor", car.contains_subspace(space), {"dim": space.dim})
    H = Mr.H
    dims = (Mr.dim, Nl.dim)
    from .tensors import flatten, unflatten
    w = None
    for g in H.generators:
        for v in space.rows:
            img = flatten(act_diag([Mr.module, Nl.module], {g: ONE}, unflatten(v, dims)), dims)
            if not space.contains(img):
                w = {"generator": g}
                break
        if w:
            break
    rep.add("H_submodule", w is None, w)
    return rep


def hom_action(M, N, h, f):
    """(h . f)(m) = h_2 f(S^-1(h_1) m)."""
    H = M.H
    acc = Matrix.zero(N.dim, M.dim)
    for (a, b), c in H.comul(h).items():
        term = N.module.mats[b].compose(f).compose(M.module.act(H.Sinv({a: ONE})))
        acc = acc + term.scale(c)
    return acc


class InternalHom:
    def __init__(self, M, N):
        self.M, self.N = M, N
        self.maps = hom_colinear(M, N)
        self.space = Subspace.from_vectors(M.dim * N.dim, [matrix_to_vector(f) for f in self.maps])

    @property
    def dim(self):
        return self.space.dim

    def act(self, h, v):
        f = vector_to_matrix(v, self.N.dim, self.M.dim)
        return matrix_to_vector(hom_action(self.M, self.N, h, f))

    def module(self):
        H = self.M.H
        mats = [Matrix(self.dim, self.dim, [self.space.coords(self.act({i: ONE}, v)) for v in self.space.rows])
                for i in range(H.dim)]
        return HModule(H, self.dim, mats, f"Hom({self.M.name},{self.N.name})")


def internal_hom(M, N):
    return InternalHom(M, N)


def _compare(v, m, n):
    """m* (x) n (index p * n + q) -> the map m -> m*(m) n (index q * m + p)."""
    return {(k % n) * m + k // n: c for k, c in v.items()}


def internal_hom_check(M, N):
    """Hom^D(M, N) against *M [] N via the pairing map."""
    H = M.H
    ih = internal_hom(M, N)
    dM = left_dual(M)
    cot = cotensor(dM, N)
    rep = Report(f"internal Hom {M.name} -> {N.name}")
    rep.add("dims_equal", ih.dim == cot.dim, {"hom": ih.dim, "cotensor": cot.dim})
    image = Subspace.from_vectors(M.dim * N.dim, [_compare(v, M.dim, N.dim) for v in cot.rows])
    rep.add("comparison_bijective", image == ih.space and len(image.rows) == cot.dim)
    w = None
    for g in H.generators:
        for v in ih.space.rows:
            if not ih.space.contains(ih.act({g: ONE}, v)):
                w = {"generator": g}
                break
        if w:
            break
    rep.add("hom_closed_under_action", w is None, w)
    from .tensors import flatten, unflatten
    w = None
    for g in H.generators:
        for v in cot.rows:
            hv = flatten(act_diag([dM.module, N.module], {g: ONE}, unflatten(v, (M.dim, N.dim))), (M.dim, N.dim))
            if _compare(hv, M.dim, N.dim) != ih.act({g: ONE}, _compare(v, M.dim, N.dim)):
                w = {"generator": g}
                break
        if w:
            break
    rep.add("comparison_H_linear", w is None, w)
    return rep


# -- induction --------------------------------------------------------------------------

class InducedModule(DComodule):
    def __init__(self, module, coaction, component, base, carrier_space):
        super().__init__(module, coaction, component, f"Ind({base.name})")
        self.base = base
        self.carrier_space = carrier_space


def induce(comp, W):
    """Ind(W) inside H (x) W: generators sum eps(h_1 ._ad w_-1) h_2 (x) w_0."""
    BG = comp.BG
    H = BG.H
    n, w = H.dim, W.dim
    if w == 0:
        mod = HModule(H, 0, [Matrix(0, 0)] * n, "Ind(0)")
        return InducedModule(mod, Matrix(0, 0), comp, W, Subspace.zero(0))
    ad = BG.ad
    eps_ad = {}

    def e_ad(a, i):
        key = (a, i)
        if key not in eps_ad:
            eps_ad[key] = H.eps(ad.mats[a].cols[i])
        return eps_ad[key]

    gens = []
    for h in range(n):
        for p in range(w):
            acc = {}
            rp = W.rho_basis(p)
            for (a, b), c in H.comult[h].items():
                for (i, q), d in rp.items():
                    e = e_ad(a, i)
                    if e:
                        k = b * w + q
                        acc[k] = acc.get(k, ZERO) + c * d * e
            gens.append({k: v for k, v in acc.items() if v})
    space = Subspace.from_vectors(n * w, gens)
    mats = []
    for i in range(n):
        L = H.left_mult({i: ONE})
        cols = []
        for v in space.rows:
            img = {}
            for k, c in v.items():
                x, p = divmod(k, w)
                for y, d in L.cols[x].items():
                    img[y * w + p] = img.get(y * w + p, ZERO) + c * d
            cols.append(space.coords({k: c for k, c in img.items() if c}))
        mats.append(Matrix(space.dim, space.dim, cols))
    mod = HModule(H, space.dim, mats, f"Ind({W.name})")

    def fn(v):
        # Gamma(x (x) w) = x_1 ._ad w_-1 (x) x_2 (x) w_0
        out = {}
        for k, c in space.vector(v).items():
            x, p = divmod(k, w)
            rp = W.rho_basis(p)
            for (a, b), d in H.comult[x].items():
                for (i, q), e in rp.items():
                    for j, f in ad.mats[a].cols[i].items():
                        key = (j, b * w + q)
                        out[key] = out.get(key, ZERO) + c * d * e * f
        return _second_leg_coords({k: c for k, c in out.items() if c}, space.coords)

    return InducedModule(mod, coaction_matrix(H, mod, fn), comp, W, space)


def adjunction_check(comp, W, M):
    """dim Hom_H^D(Ind W, M) = dim Hom^D(W, M)."""
    ind = induce(comp, W)
    a = len(hom_yd(ind, M))
    b = len(hom_colinear(W, M))
    rep = Report(f"adjunction Ind({W.name}) -> {M.name}")
    rep.add("adjunction_dims", a == b, {"hom_H_D": a, "hom_D": b})
    return rep, a, b


# -- endomorphism algebras ------------------------------------------------------------------

@dataclass
class Block:
    index: int
    block_dim: int
    d: int
    isotypic: Subspace
    simple_dim: int
    idempotent: dict

    def to_dict(self):
        return {"index": self.index, "block_dim": self.block_dim, "d": self.d,
                "isotypic_dim": self.isotypic.dim, "simple_dim": self.simple_dim}


class EndAlgebra:
    def __init__(self, M, alg, basis):
        self.M = M
        self.alg = alg
        self.basis = basis
        self.blocks = []

    @property
    def dim(self):
        return self.alg.dim

    def matrix(self, x):
        acc = Matrix.zero(self.M.dim, self.M.dim)
        for k, c in x.items():
            acc = acc + self.basis[k].scale(c)
        return acc

    def coords(self, f):
        """Coordinates of an endomorphism in the algebra basis."""
        sub = Subspace.from_vectors(self.M.dim ** 2, [matrix_to_vector(b) for b in self.basis])
        mat = Matrix(self.M.dim ** 2, len(self.basis), [matrix_to_vector(b) for b in self.basis])
        x = solve(mat, matrix_to_vector(f))
        if x is None or not sub.contains(matrix_to_vector(f)):
            raise ValueError("map is not in the endomorphism algebra")
        return x


class NonSquareBlock(ArithmeticError):
    pass


def end_algebra(M, precision_bits=256, height_bound=10 ** 6, seed=0):
    if M.dim == 0:
        raise ValueError("End of the zero module")
    maps = hom_yd(M, M)
    alg, basis = algebra_from_matrices(maps, M.H.field)
    E = EndAlgebra(M, alg, basis)
    if not alg.is_semisimple():
        raise NotSemisimple("endomorphism algebra has a nonzero radical")
    idems = alg.central_idempotents(precision_bits, height_bound, seed)
    for j, z in enumerate(idems):
        block = Subspace.from_vectors(alg.dim, [alg.mul(z, {k: ONE}) for k in range(alg.dim)])
        d = isqrt_exact(block.dim)
        if d is None:
            raise NonSquareBlock(f"block {j} has non-square dimension {block.dim}; the field does not split it")
        iso = E.matrix(z).image()
        if iso.dim % d:
            raise NonSquareBlock(f"block {j}: isotypic dimension {iso.dim} not divisible by {d}")
        E.blocks.append(Block(j, block.dim, d, iso, iso.dim // d, z))
    return E


# -- right modules over A and tensor products over A -------------------------------------

class RightAModule:
    """``mats[k]`` sends u to u . a_k (column convention)."""

    def __init__(self, A, dim, mats, name="U"):
        self.A = A
        self.dim = dim
        self.mats = list(mats)
        self.name = name


def right_module_verify(U):
    A = U.A.alg
    rep = Report(f"right module {U.name}")
    ok = len(U.mats) == A.dim and all(m.shape == (U.dim, U.dim) for m in U.mats)
    rep.add("shapes", ok, {"expected": [A.dim, U.dim]})
    if not ok:
        return rep

    def act(x):
        acc = Matrix.zero(U.dim, U.dim)
        for k, c in x.items():
            acc = acc + U.mats[k].scale(c)
        return acc

    w = None
    for i in range(A.dim):
        for j in range(A.dim):
            if act(A.mult.get((i, j), {})) != U.mats[j].compose(U.mats[i]):
                w = {"basis": [i, j]}
                break
        if w:
            break
    rep.add("action_associative", w is None, w)
    rep.add("action_unital", act(A.unit) == Matrix.identity(U.dim))
    return rep


def right_module_is_simple(U):
    """Simple over a split algebra iff the action spans all of End(U)."""
    if U.dim == 0:
        return False
    span = Subspace.from_vectors(U.dim ** 2, [matrix_to_vector(m) for m in U.mats])
    grown = span
    while True:
        new = [matrix_to_vector(vector_to_matrix(v, U.dim, U.dim).compose(m)) for v in grown.rows for m in U.mats]
        nxt = Subspace.from_vectors(U.dim ** 2, grown.rows + new)
        if nxt.dim == grown.dim:
            break
        grown = nxt
    return grown.dim == U.dim ** 2


def right_ideal_module(E, e, name=None):
    """U = eA with right multiplication."""
    A = E.alg
    sub = Subspace.from_vectors(A.dim, [A.mul(e, {k: ONE}) for k in range(A.dim)])
    mats = [Matrix(sub.dim, sub.dim, [sub.coords(A.mul(v, {k: ONE})) for v in sub.rows]) for k in range(A.dim)]
    return RightAModule(E, sub.dim, mats, name or "eA")


def right_module_from_submodule(E, sub, name=None):
    """Hom(M, V) for a YD submodule V of M, as the right ideal {a : im a in V} of A."""
    A = E.alg
    Q = Quotient(sub)
    n = E.M.dim
    cols = []
    for k, b in enumerate(E.basis):
        col = {}
        for p in range(n):
            for r, c in Q.project(b.cols[p]).items():
                col[p * Q.dim + r] = c
        cols.append(col)
    ideal = Matrix(n * Q.dim, A.dim, cols).kernel()
    mats = [Matrix(ideal.dim, ideal.dim, [ideal.coords(A.mul(v, {k: ONE})) for v in ideal.rows])
            for k in range(A.dim)]
    return RightAModule(E, ideal.dim, mats, name or "Hom(M,V)")


def simple_submodule(E, block, seed=0, tries=20, precision_bits=256, height_bound=10 ** 6):
    """Best-effort search for a simple YD submodule of the isotypic part Mz.

    Repeatedly cuts V down to an eigenspace of a random YD endomorphism of V; needs the
    eigenvalues to lie in the field.  Returns a Subspace of M or raises NotSplit.
    """
    import random
    from .linalg import NotSplit, _roots_in_field, min_poly, poly_deriv, poly_gcd
    from .yd import restrict_yd
    rng = random.Random(seed)
    M = E.M
    field = M.H.field
    V = block.isotypic
    while True:
        Vm = restrict_yd(M, V)
        ends = hom_yd(Vm, Vm)
        if len(ends) <= 1:
            return V
        for _ in range(tries):
            f = Matrix.zero(V.dim, V.dim)
            for e in ends:
                f = f + e.scale(mpq(rng.randint(-3, 3)))
            p = min_poly(f)
            if len(p) > 2 and len(poly_gcd(p, poly_deriv(p))) == 1:
                break
        else:
            raise NotSplit("no semisimple non-scalar endomorphism found")
        lam = _roots_in_field(p, field, precision_bits, height_bound)[0]
        K = (f - Matrix.identity(V.dim).scale(lam)).kernel()
        V = Subspace.from_vectors(M.dim, [V.vector(v) for v in K.rows])


def tensor_over_algebra(U, E, M=None):
    """U (x)_A M as a D-comodule in the category (quotient of U (x) M)."""
    M = E.M if M is None else M
    H = M.H
    u, m = U.dim, M.dim
    rels = []
    for p in range(u):
        for k, a in enumerate(E.basis):
            ua = U.mats[k].cols[p]
            for q in range(m):
                v = {}
                for r, c in ua.items():
                    v[r * m + q] = v.get(r * m + q, ZERO) + c
                for s, c in a.cols[q].items():
                    v[p * m + s] = v.get(p * m + s, ZERO) - c
                rels.append({key: c for key, c in v.items() if c})
    rel = Subspace.from_vectors(u * m, rels)
    Q = Quotient(rel)
    rep = Report(f"{U.name} (x)_A {M.name}")

    def act_vec(i, v):
        out = {}
        for key, c in v.items():
            p, q = divmod(key, m)
            for s, d in M.module.mats[i].cols[q].items():
                out[p * m + s] = out.get(p * m + s, ZERO) + c * d
        return {k: c for k, c in out.items() if c}

    def coact_vec(v):
        out = {}
        for key, c in v.items():
            p, q = divmod(key, m)
            for (i, s), d in M.rho_basis(q).items():
                kk = (i, p * m + s)
                out[kk] = out.get(kk, ZERO) + c * d
        return {k: c for k, c in out.items() if c}

    stable = all(rel.contains(act_vec(g, v)) for g in H.generators for v in rel.rows)
    rep.add("relations_H_stable", stable)
    co_ok = True
    for v in rel.rows:
        by_first = {}
        for (i, key), c in coact_vec(v).items():
            axpy(by_first.setdefault(i, {}), c, {key: ONE})
        if not all(rel.contains(x) for x in by_first.values()):
            co_ok = False
            break
    rep.add("relations_coaction_stable", co_ok)
    mats = []
    for i in range(H.dim):
        mats.append(Matrix(Q.dim, Q.dim, [Q.project(act_vec(i, Q.lift({j: ONE}))) for j in range(Q.dim)]))
    mod = HModule(H, Q.dim, mats, f"{U.name}(x)A{M.name}")

    def fn(v):
        out = {}
        for (i, key), c in coact_vec(Q.lift(v)).items():
            out.setdefault(i, {})[key] = out.get(i, {}).get(key, ZERO) + c
        res = {}
        for i, vec in out.items():
            for j, c in Q.project({k: x for k, x in vec.items() if x}).items():
                res[(i, j)] = c
        return res

    V = DComodule(mod, coaction_matrix(H, mod, fn), getattr(M, "component", None), mod.name)
    V.report = rep
    return V


# -- enumeration ----------------------------------------------------------------------------

@dataclass
class ComponentResult:
    index: int
    dim: int
    ind_dim: int
    end_dim: int
    blocks: list
    constructed: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    def to_dict(self):
        return {"index": self.index, "dim": self.dim, "ind_dim": self.ind_dim,
                "end_dim": self.end_dim, "blocks": [b.to_dict() for b in self.blocks],
                "constructed": self.constructed, "checks": [c.to_dict() for c in self.checks]}


class ComponentError(ArithmeticError):
    def __init__(self, index, exc):
        super().__init__(f"component {index}: {type(exc).__name__}: {exc}")
        self.index = index
        self.cause = exc


def enumerate_yd(H, R, precision_bits=256, height_bound=10 ** 6, seed=0, user_modules=None,
                 verify_inputs=True):
    """Returns (payload dict, Report, constructed simples, components).

    ``user_modules`` maps (component, block) to a callable EndAlgebra -> RightAModule.
    """
    from .braided import braided_group_build, braided_group_verify, decompose_braided_group
    from .wha import qt_verify, wha_verify
    checks = Report("enumeration")
    if verify_inputs:
        wr = wha_verify(H)
        checks.add("wha_verify", wr.passed, [c.name for c in wr.failures()])
    rm = qt_verify(H, R)
    BG = braided_group_build(H, rm)
    if verify_inputs:
        br = braided_group_verify(BG)
        checks.add("braided_group_verify", br.passed, [c.name for c in br.failures()])
    comps = decompose_braided_group(BG, precision_bits, height_bound, seed)
    user_modules = user_modules or {}
    results, simples = [], []
    for comp in comps:
        try:
            M = induce(comp, regular_comodule(comp))
            E = end_algebra(M, precision_bits, height_bound, seed)
        except ArithmeticError as exc:
            raise ComponentError(comp.index, exc) from exc
        res = ComponentResult(comp.index, comp.dim, M.dim, E.dim, E.blocks)
        total = sum(b.d * b.simple_dim for b in E.blocks)
        res.checks.append(_chk(f"component_{comp.index}_double_centralizer", total == M.dim,
                               {"sum": total, "ind_dim": M.dim}))
        for b in E.blocks:
            tag = f"component_{comp.index}_block_{b.index}"
            if b.d == 1:
                U = right_ideal_module(E, b.idempotent, f"z{b.index}A")
            elif (comp.index, b.index) in user_modules:
                try:
                    U = user_modules[(comp.index, b.index)](E)
                except ValueError as exc:
                    res.checks.append(_chk(f"{tag}_user_module", False, str(exc)))
                    continue
                vr = right_module_verify(U)
                ok = vr.passed and right_module_is_simple(U)
                res.checks.append(_chk(f"{tag}_user_module", ok, [c.name for c in vr.failures()] or "not simple"))
                if not ok:
                    continue
            else:
                continue
            V = tensor_over_algebra(U, E, M)
            ok = V.report.passed and is_simple(V) and V.dim == b.simple_dim
            if ok and U.dim:
                # the constructed simple must live in this block
                ok = len(hom_yd(V, M)) == b.d
            res.checks.append(_chk(f"{tag}_simple", ok, {"dim": V.dim, "expected": b.simple_dim}))
            res.constructed.append({"block": b.index, "dim": V.dim, "simple": ok})
            simples.append((comp.index, b.index, V))
        results.append(res)
    for r in results:
        checks.checks.extend(r.checks)
    w = None
    for i, (ci, bi, V) in enumerate(simples):
        for cj, bj, V2 in simples[i + 1:]:
            if hom_yd(V, V2):
                w = {"pair": [[ci, bi], [cj, bj]]}
                break
        if w:
            break
    checks.add("distinct_blocks_orthogonal", w is None, w)
    dims = sorted(b.simple_dim for r in results for b in r.blocks)
    all_built = all(len(r.constructed) == len(r.blocks) for r in results)
    payload = {
        "components": len(comps),
        "component_dims": [c.dim for c in comps],
        "simple_count": len(dims),
        "simple_dims": dims,
        "sum_of_squares": sum(d * d for d in dims),
        "all_constructed": all_built,
        "constructed_sum_of_squares": sum(V.dim ** 2 for _, _, V in simples) if all_built else None,
        "per_component": [r.to_dict() for r in results],
    }
    return payload, checks, simples, comps


def _chk(name, passed, witness=None):
    from .checks import Check
    return Check(name, bool(passed), None if passed else witness)
