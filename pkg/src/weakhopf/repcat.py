"""Left H-modules: truncated tensor products, the unit object, left duals, braiding.

Elements of a plain tensor product M1 x ... x Mr are sparse tensors keyed by
index tuples; carriers are Subspaces of the flattened plain product (row-major).
"""

from __future__ import annotations

from functools import cached_property
from itertools import product

from .checks import Report
from .linalg import Matrix, Subspace, axpy, solve_linear_maps, vclean
from .scalars import ONE, ZERO
from .tensors import flatten, permute, tadd, unflatten


class HModule:
    """``mats[i]`` is the action of the basis element b_i."""

    def __init__(self, H, dim, mats, name="M"):
        self.H = H
        self.dim = dim
        self.mats = list(mats)
        self.name = name
        if len(self.mats) != H.dim or any(m.shape != (dim, dim) for m in self.mats):
            raise ValueError("need one dim x dim action matrix per basis element of H")

    def act(self, h):
        acc = [{} for _ in range(self.dim)]
        for i, c in h.items():
            for j, col in enumerate(self.mats[i].cols):
                axpy(acc[j], c, col)
        return Matrix(self.dim, self.dim, acc)

    def apply(self, h, v):
        acc = {}
        for i, c in h.items():
            axpy(acc, c, self.mats[i].apply(v))
        return acc

    def apply_basis(self, i, v):
        return self.mats[i].apply(v)

    def __repr__(self):
        return f"HModule({self.name}, dim={self.dim})"


def module_verify(M):
    H = M.H
    rep = Report(f"module axioms for {M.name}")
    w = None
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = M.mats[i].compose(M.mats[j])
            rhs = M.act(H.mult.get((i, j), {}))
            if lhs != rhs:
                w = {"basis": [i, j]}
                break
        if w:
            break
    rep.add("action_multiplicative", w is None, w)
    rep.add("action_unital", M.act(H.unit) == Matrix.identity(M.dim))
    return rep


def regular_module(H):
    return HModule(H, H.dim, [H.left_mult({i: ONE}) for i in range(H.dim)], "H")


def zero_module(H):
    return HModule(H, 0, [Matrix(0, 0) for _ in range(H.dim)], "0")


def restrict_module(M, sub, name=None):
    """The submodule on an invariant Subspace, in its basis coordinates."""
    mats = []
    for m in M.mats:
        cols = []
        for v in sub.rows:
            cols.append(sub.coords(m.apply(v)))
        mats.append(Matrix(sub.dim, sub.dim, cols))
    return HModule(M.H, sub.dim, mats, name or f"{M.name}|sub")


def is_invariant(M, sub, gens=None):
    gens = M.H.generators if gens is None else gens
    return all(sub.contains(M.mats[g].apply(v)) for g in gens for v in sub.rows)


class UnitModule(HModule):
    """H_t with h.z = eps_t(hz); coordinates w.r.t. the RREF basis of H_t."""

    def __init__(self, H):
        self.Ht = H.Ht
        mats = []
        for i in range(H.dim):
            cols = [self.Ht.coords(H.eps_t(H.mul({i: ONE}, z))) for z in self.Ht.rows]
            mats.append(Matrix(self.Ht.dim, self.Ht.dim, cols))
        super().__init__(H, self.Ht.dim, mats, "Ht")

    def element(self, coords):
        return self.Ht.vector(coords)

    def coords(self, z):
        return self.Ht.coords(z)


def unit_module(H):
    return UnitModule(H)


def dual_module(M):
    """<h x*, x> = <x*, S(h) x>."""
    H = M.H
    mats = [M.act(H.antipode[i]).transpose() for i in range(H.dim)]
    return HModule(H, M.dim, mats, f"{M.name}*")


def direct_sum(M, N):
    mats = []
    for a, b in zip(M.mats, N.mats):
        cols = [dict(c) for c in a.cols] + [{k + M.dim: x for k, x in c.items()} for c in b.cols]
        mats.append(Matrix(M.dim + N.dim, M.dim + N.dim, cols))
    return HModule(M.H, M.dim + N.dim, mats, f"{M.name}+{N.name}")


def hom_modules(M, N):
    """Basis of Hom_H(M, N) as Matrix objects."""
    eqs = [[(ONE, N.mats[g], None), (-ONE, None, M.mats[g])] for g in M.H.generators]
    return solve_linear_maps(M.dim, N.dim, eqs)


# -- acting on plain tensor products -------------------------------------------------

def act_tensor(modules, X, t):
    """Apply X in H^{x r} legwise to a tensor over ``modules``."""
    out = {}
    cache = {}
    for kx, a in X.items():
        for kt, b in t.items():
            parts = []
            for l, (i, p) in enumerate(zip(kx, kt)):
                key = (l, i, p)
                v = cache.get(key)
                if v is None:
                    v = modules[l].mats[i].cols[p]
                    cache[key] = v
                if not v:
                    break
                parts.append(v)
            else:
                acc = {(): a * b}
                for v in parts:
                    acc = {k + (j,): c * d for k, c in acc.items() for j, d in v.items()}
                tadd(out, acc)
    return out


def comul_power(H, h, r):
    """Iterated coproduct of h into r legs."""
    t = {(i,): c for i, c in h.items()}
    for _ in range(r - 1):
        t = _split_last(H, t)
    return t


def _split_last(H, t):
    out = {}
    for k, c in t.items():
        for (a, b), d in H.comult[k[-1]].items():
            key = k[:-1] + (a, b)
            s = out.get(key, ZERO) + c * d
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def act_diag(modules, h, t):
    """h . t with the diagonal (iterated coproduct) action."""
    return act_tensor(modules, comul_power(modules[0].H, h, len(modules)), t)


def carrier(modules):
    """Delta^(r)(1) applied to the plain tensor product, as a Subspace."""
    H = modules[0].H
    dims = tuple(m.dim for m in modules)
    X = comul_power(H, H.unit, len(modules))
    total = 1
    for d in dims:
        total *= d
    vecs = []
    for idx in range(total):
        t = unflatten({idx: ONE}, dims)
        vecs.append(flatten(act_tensor(modules, X, t), dims))
    return Subspace.from_vectors(total, vecs)


def dims_of(modules):
    return tuple(m.dim for m in modules)


class TruncatedTensor:
    """M x_t N = Delta(1)(M x N) with its module structure on carrier coordinates."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.H = left.H
        self.dims = (left.dim, right.dim)
        self.carrier = carrier([left, right])

    def tensor(self, coords):
        return unflatten(self.carrier.vector(coords), self.dims)

    def coords(self, t):
        return self.carrier.coords(flatten(t, self.dims))

    @cached_property
    def module(self):
        mats = []
        basis = [unflatten(v, self.dims) for v in self.carrier.rows]
        for i in range(self.H.dim):
            cols = [self.coords(act_diag([self.left, self.right], {i: ONE}, t)) for t in basis]
            mats.append(Matrix(self.carrier.dim, self.carrier.dim, cols))
        return HModule(self.H, self.carrier.dim, mats, f"{self.left.name}(x)t{self.right.name}")

    def inclusion(self):
        return self.carrier.inclusion()

    @property
    def dim(self):
        return self.carrier.dim


def ttensor(M, N):
    return TruncatedTensor(M, N)


def triple_carrier_check(M, N, P):
    """(M x_t N) x_t P and M x_t (N x_t P) coincide inside M x N x P."""
    MN, NP = ttensor(M, N), ttensor(N, P)
    left = ttensor(MN.module, P)
    right = ttensor(M, NP.module)
    full = carrier([M, N, P])
    dims = (M.dim, N.dim, P.dim)

    def push_left(v):
        out = {}
        for (a, p), c in unflatten(v, (MN.dim, P.dim)).items():
            for (m, n), d in MN.tensor({a: ONE}).items():
                out[(m, n, p)] = out.get((m, n, p), ZERO) + c * d
        return flatten(out, dims)

    def push_right(v):
        out = {}
        for (m, b), c in unflatten(v, (M.dim, NP.dim)).items():
            for (n, p), d in NP.tensor({b: ONE}).items():
                out[(m, n, p)] = out.get((m, n, p), ZERO) + c * d
        return flatten(out, dims)

    L = Subspace.from_vectors(full.ambient, [push_left(v) for v in left.carrier.rows])
    R = Subspace.from_vectors(full.ambient, [push_right(v) for v in right.carrier.rows])
    return L == R == full


# -- unit constraints and duality -----------------------------------------------------

def left_unitor(X, t):
    """l: H_t x_t X -> X, z (x) x -> z x; ``t`` keyed by (H-index, x-index)."""
    out = {}
    for (i, p), c in t.items():
        axpy(out, c, X.mats[i].cols[p])
    return out


def right_unitor(X, t):
    """r: X x_t H_t -> X, x (x) z -> S(z) x; ``t`` keyed by (x-index, H-index)."""
    H = X.H
    out = {}
    for (p, i), c in t.items():
        axpy(out, c, X.apply(H.antipode[i], {p: ONE}))
    return out


def left_unitor_inv(X, v):
    """x -> eps_t(1_1) (x) 1_2 x, with the H_t leg in H coordinates."""
    H = X.H
    out = {}
    for (a, b), c in H.delta_one.items():
        z = H.eps_t({a: ONE})
        xb = X.mats[b].apply(v)
        for i, d in z.items():
            for p, e in xb.items():
                key = (i, p)
                out[key] = out.get(key, ZERO) + c * d * e
    return {k: c for k, c in out.items() if c}


def right_unitor_inv(X, v):
    """x -> 1_1 x (x) eps_t(1_2)."""
    H = X.H
    out = {}
    for (a, b), c in H.delta_one.items():
        z = H.eps_t({b: ONE})
        xa = X.mats[a].apply(v)
        for p, e in xa.items():
            for i, d in z.items():
                key = (p, i)
                out[key] = out.get(key, ZERO) + c * d * e
    return {k: c for k, c in out.items() if c}


def ev(X, t):
    """ev(x* (x) x) = <x*, 1_1 x> 1_2, as an element of H_t (H coordinates)."""
    H = X.H
    out = {}
    for (a, b), c in H.delta_one.items():
        m = X.mats[a]
        for (q, p), d in t.items():
            e = m.cols[p].get(q)
            if e:
                axpy(out, c * d * e, {b: ONE})
    return out


def coev(X, z):
    """coev(z) = sum z_1 x_i (x) z_2 x_i^*, keyed by (x-index, x*-index)."""
    H = X.H
    Xd = dual_module(X)
    out = {}
    for (a, b), c in H.comul(z).items():
        for i in range(X.dim):
            left = X.mats[a].cols[i]
            right = Xd.mats[b].cols[i]
            for p, d in left.items():
                for q, e in right.items():
                    key = (p, q)
                    out[key] = out.get(key, ZERO) + c * d * e
    return {k: c for k, c in out.items() if c}


def zigzag_check(X):
    """Both rigidity identities on bases of X and X*."""
    H = X.H
    Xd = dual_module(X)
    rep = Report(f"rigidity for {X.name}")

    def first_zig(p):
        # X -> Ht x X -> X x X* x X -> X x Ht -> X
        t = left_unitor_inv(X, {p: ONE})
        out = {}
        for (i, q), c in t.items():
            for (a, b), d in coev(X, {i: ONE}).items():
                # ev on (x*_b, x_q)
                for k, e in ev(X, {(b, q): ONE}).items():
                    key = (a, k)
                    out[key] = out.get(key, ZERO) + c * d * e
        return vclean(right_unitor(X, out))

    def second_zig(q):
        # X* -> X* x Ht -> X* x X x X* -> Ht x X* -> X*
        t = right_unitor_inv(Xd, {q: ONE})
        out = {}
        for (b, i), c in t.items():
            for (a, b2), d in coev(X, {i: ONE}).items():
                for k, e in ev(X, {(b, a): ONE}).items():
                    key = (k, b2)
                    out[key] = out.get(key, ZERO) + c * d * e
        return vclean(left_unitor(Xd, out))

    w = next(({"basis": p} for p in range(X.dim) if first_zig(p) != {p: ONE}), None)
    rep.add("zigzag_X", w is None, w)
    w = next(({"basis": q} for q in range(X.dim) if second_zig(q) != {q: ONE}), None)
    rep.add("zigzag_Xdual", w is None, w)

    # ev and coev are module maps
    Ht = H.Ht
    U = unit_module(H)
    car = carrier([Xd, X])
    w = None
    for v in car.rows:
        t = unflatten(v, (X.dim, X.dim))
        for g in H.generators:
            lhs = ev(X, act_diag([Xd, X], {g: ONE}, t))
            rhs = U.element(U.mats[g].apply(U.coords(ev(X, t))))
            if lhs != rhs:
                w = {"generator": g}
                break
        if w:
            break
    rep.add("ev_module_map", w is None, w)
    w = None
    for j, z in enumerate(Ht.rows):
        for g in H.generators:
            lhs = coev(X, U.element(U.mats[g].cols[j]))
            rhs = act_diag([X, Xd], {g: ONE}, coev(X, z))
            if lhs != rhs:
                w = {"generator": g}
                break
        if w:
            break
    rep.add("coev_module_map", w is None, w)
    return rep


def unit_and_duals(M):
    return unit_module(M.H), dual_module(M), (lambda t: ev(M, t)), (lambda z: coev(M, z))


# -- braiding ------------------------------------------------------------------------

def braid_tensor(rm, M, N, t, inverse=False):
    """c(m (x) n) = R^2 n (x) R^1 m; inverse c^-1(n (x) m) = Rbar^1 m (x) Rbar^2 n."""
    if not inverse:
        return permute(act_tensor([M, N], rm.R, t), (1, 0))
    # t keyed by (n, m): swap, act with Rbar on (M, N)
    return act_tensor([M, N], rm.Rbar, permute(t, (1, 0)))


class Braiding:
    def __init__(self, M, N, rm):
        self.M, self.N, self.rm = M, N, rm
        self.source = ttensor(M, N)
        self.target = ttensor(N, M)

    @cached_property
    def matrix(self):
        cols = [self.target.coords(braid_tensor(self.rm, self.M, self.N, self.source.tensor({j: ONE})))
                for j in range(self.source.dim)]
        return Matrix(self.target.dim, self.source.dim, cols)

    @cached_property
    def inverse_matrix(self):
        cols = [self.source.coords(braid_tensor(self.rm, self.M, self.N, self.target.tensor({j: ONE}),
                                                inverse=True))
                for j in range(self.target.dim)]
        return Matrix(self.source.dim, self.target.dim, cols)

    def apply(self, t):
        return braid_tensor(self.rm, self.M, self.N, t)


def braiding(M, N, rm):
    return Braiding(M, N, rm)


def braiding_check(M, N, rm):
    c = braiding(M, N, rm)
    rep = Report(f"braiding {M.name},{N.name}")
    n1, n2 = c.source.dim, c.target.dim
    rep.add("carrier_dims_equal", n1 == n2, {"source": n1, "target": n2})
    rep.add("inverse_left", c.inverse_matrix.compose(c.matrix) == Matrix.identity(n1))
    rep.add("inverse_right", c.matrix.compose(c.inverse_matrix) == Matrix.identity(n2))
    S, T = c.source.module, c.target.module
    w = next(({"generator": g} for g in M.H.generators
              if c.matrix.compose(S.mats[g]) != T.mats[g].compose(c.matrix)), None)
    rep.add("module_map", w is None, w)
    return rep


def embed_legs(H, X, legs, r):
    """Place a tensor X on the given legs of an r-fold product, with 1 elsewhere."""
    others = [l for l in range(r) if l not in legs]
    out = {}
    for kx, c in X.items():
        for combo in product(H.unit.items(), repeat=len(others)):
            key = [None] * r
            coef = c
            for l, (i, e) in zip(others, combo):
                key[l] = i
                coef *= e
            for j, l in enumerate(legs):
                key[l] = kx[j]
            key = tuple(key)
            out[key] = out.get(key, ZERO) + coef
    return {k: v for k, v in out.items() if v}


def hexagon_check(M, N, P, rm):
    """Both hexagons on the carrier of M x N x P (leg-wise ambient maps)."""
    rep = Report(f"hexagons {M.name},{N.name},{P.name}")
    dims = (M.dim, N.dim, P.dim)
    car = carrier([M, N, P])
    H = M.H
    R = rm.R

    def c_M_NP(t):
        # m (x) n (x) p -> (R^2)_1 n (x) (R^2)_2 p (x) R^1 m
        X = {}
        for (a, b), c in R.items():
            for (b1, b2), d in H.comult[b].items():
                X[(a, b1, b2)] = X.get((a, b1, b2), ZERO) + c * d
        return permute(act_tensor([M, N, P], X, t), (1, 2, 0))

    def step_hex1(t):
        # c_{M,N} x id, then id x c_{M,P}
        u = permute(act_tensor([M, N, P], embed_legs(H, R, (0, 1), 3), t), (1, 0, 2))
        v = act_tensor([N, M, P], embed_legs(H, R, (1, 2), 3), u)
        return permute(v, (0, 2, 1))

    def c_MN_P(t):
        # m (x) n (x) p -> R^2 p (x) (R^1)_1 m (x) (R^1)_2 n
        X = {}
        for (a, b), c in R.items():
            for (a1, a2), d in H.comult[a].items():
                X[(a1, a2, b)] = X.get((a1, a2, b), ZERO) + c * d
        return permute(act_tensor([M, N, P], X, t), (2, 0, 1))

    def step_hex2(t):
        # id x c_{N,P}, then c_{M,P} x id
        u = permute(act_tensor([M, N, P], embed_legs(H, R, (1, 2), 3), t), (0, 2, 1))
        v = act_tensor([M, P, N], embed_legs(H, R, (0, 1), 3), u)
        return permute(v, (1, 0, 2))

    w1 = w2 = None
    for v in car.rows:
        t = unflatten(v, dims)
        if w1 is None and c_M_NP(t) != step_hex1(t):
            w1 = {"vector": sorted(v)[:3]}
        if w2 is None and c_MN_P(t) != step_hex2(t):
            w2 = {"vector": sorted(v)[:3]}
    rep.add("hexagon_left", w1 is None, w1)
    rep.add("hexagon_right", w2 is None, w2)
    return rep


def naturality_check(rm, gens=None):
    """c_{H,H} commutes with right multiplications (module maps of the regular module)."""
    H = rm.H
    Hr = regular_module(H)
    c = braiding(Hr, Hr, rm)
    gens = H.generators if gens is None else gens
    rep = Report("braiding naturality on the regular module")
    w = None
    for g in gens:
        f = H.right_mult({g: ONE})
        for j in range(c.source.dim):
            t = c.source.tensor({j: ONE})
            ft = {}
            for (a, b), x in t.items():
                for k, y in f.cols[a].items():
                    ft[(k, b)] = ft.get((k, b), ZERO) + x * y
            lhs = c.apply({k: v for k, v in ft.items() if v})
            ct = c.apply(t)
            rhs = {}
            for (a, b), x in ct.items():
                for k, y in f.cols[b].items():
                    rhs[(a, k)] = rhs.get((a, k), ZERO) + x * y
            if lhs != {k: v for k, v in rhs.items() if v}:
                w = {"generator": g, "carrier_index": j}
                break
        if w:
            break
    rep.add("naturality_first_leg", w is None, w)
    return rep
