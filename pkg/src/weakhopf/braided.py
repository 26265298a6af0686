"""The braided group B = C_H(H_s) of a quasi-triangular weak Hopf algebra."""

from __future__ import annotations

from functools import cached_property

from .checks import CheckFailed, Report
from .linalg import Algebra, Matrix, NotSemisimple, Singular, Subspace, axpy, vclean
from .repcat import HModule, act_tensor, embed_legs
from .scalars import ONE, ZERO
from .tensors import apply_leg, apply_legs, flatten, permute, tadd, unflatten


class IllFormed(CheckFailed):
    pass


class NotCosemisimple(ArithmeticError):
    pass


def centralizer_Hs(H):
    """Solutions of by = yb for y in H_s."""
    n = H.dim
    cols = []
    for j in range(n):
        col = {}
        for r, y in enumerate(H.Hs.rows):
            d = vclean({k: v for k, v in H.mul({j: ONE}, y).items()})
            for k, c in H.mul(y, {j: ONE}).items():
                d[k] = d.get(k, ZERO) - c
            for k, c in d.items():
                if c:
                    col[r * n + k] = c
        cols.append(col)
    return Matrix(n * max(H.Hs.dim, 1), n, cols).kernel()


def projected_image(H):
    """Image of h -> 1_1 h S(1_2)."""
    return Subspace.from_vectors(H.dim, [H.adjoint(H.unit, {j: ONE}) for j in range(H.dim)])


def ad_module(H):
    """The adjoint action on all of H (not unital off B); used for ambient legs."""
    return HModule(H, H.dim, [Matrix(H.dim, H.dim, [H.adjoint({i: ONE}, {j: ONE}) for j in range(H.dim)])
                              for i in range(H.dim)], "ad")


class BraidedGroup:
    def __init__(self, H, rm, carrier=None, delta_override=None):
        self.H = H
        self.rm = rm
        self.carrier = carrier if carrier is not None else centralizer_Hs(H)
        self.dim = self.carrier.dim
        self._delta_override = delta_override

    @cached_property
    def ad(self):
        return ad_module(self.H)

    # structure maps, as ambient formulas valid on B

    def mul(self, a, b):
        return self.H.mul(a, b)

    def unit(self, z):
        return dict(z)

    def counit(self, b):
        return self.H.eps_t(b)

    @cached_property
    def _delta_basis(self):
        H, R = self.H, self.rm.R
        SR2 = {}
        out = []
        for i in range(H.dim):
            acc = {}
            for (p, q), c in H.comult[i].items():
                for (r1, r2), d in R.items():
                    left = H.mul({p: ONE}, SR2.setdefault(r2, H.antipode[r2]))
                    if not left:
                        continue
                    right = self.ad.mats[r1].cols[q]
                    if not right:
                        continue
                    cd = c * d
                    for k, x in left.items():
                        for l, y in right.items():
                            key = (k, l)
                            s = acc.get(key, ZERO) + cd * x * y
                            if s:
                                acc[key] = s
                            else:
                                del acc[key]
            out.append(acc)
        if self._delta_override is not None:
            out = [self._delta_override(t) for t in out]
        return out

    def delta(self, b):
        """Delta_B(b) = b_1 S(R^2) (x) R^1 ._ad b_2."""
        acc = {}
        for i, c in b.items():
            tadd(acc, self._delta_basis[i], c)
        return acc

    def delta2(self, b):
        return apply_leg(self.delta(b), 0, lambda i: self._delta_basis[i])

    def S_B(self, b):
        """S_B(b) = R^2 S(R^1 ._ad b)."""
        H = self.H
        acc = {}
        for (r1, r2), d in self.rm.R.items():
            axpy(acc, d, H.mul({r2: ONE}, H.S(self.ad.mats[r1].apply(b))))
        return acc

    @cached_property
    def S_B_matrix(self):
        B = self.carrier
        return Matrix(B.dim, B.dim, [B.coords(self.S_B(v)) for v in B.rows])

    @cached_property
    def T_B_matrix(self):
        return self.S_B_matrix.inverse()

    def T_B(self, b):
        B = self.carrier
        return B.vector(self.T_B_matrix.apply(B.coords(b)))

    @cached_property
    def module(self):
        """B as an H-module under the adjoint action, in carrier coordinates."""
        B = self.carrier
        mats = [Matrix(B.dim, B.dim, [B.coords(self.ad.mats[i].apply(v)) for v in B.rows])
                for i in range(self.H.dim)]
        return HModule(self.H, B.dim, mats, "B")

    def leg_coords(self, t):
        """B (x) ... (x) B tensor in ambient indices -> carrier coordinates."""
        piv = {p: i for i, p in enumerate(self.carrier.pivots)}
        return apply_legs(t, [lambda k: {piv[k]: ONE} if k in piv else {}] * len(next(iter(t), ())))

    def braid(self, t, legs=(0, 1), r=2, modules=None):
        """c on two adjacent legs of a tensor (ad action on B legs)."""
        mods = modules or [self.ad] * r
        X = embed_legs(self.H, self.rm.R, legs, r)
        u = act_tensor(mods, X, t)
        perm = list(range(r))
        perm[legs[0]], perm[legs[1]] = legs[1], legs[0]
        return permute(u, tuple(perm))

    def __repr__(self):
        return f"BraidedGroup(dim={self.dim})"


def braided_group_build(H, rm):
    BG = BraidedGroup(H, rm)
    rep = Report("braided group construction")
    B = BG.carrier
    img = projected_image(H)
    rep.add("centralizer_equals_projection_image", B == img, {"dim_centralizer": B.dim, "dim_image": img.dim})
    rep.add("unit_in_B", all(B.contains(z) for z in H.Ht.rows))
    w = next(({"basis": [i, j]} for i, a in enumerate(B.rows) for j, b in enumerate(B.rows)
              if not B.contains(H.mul(a, b))), None)
    rep.add("B_closed_under_product", w is None, w)
    w = next(({"generator": g, "basis": j} for g in H.generators for j, b in enumerate(B.rows)
              if not B.contains(BG.ad.mats[g].apply(b))), None)
    rep.add("B_ad_stable", w is None, w)
    BB = Subspace.from_vectors(H.dim ** 2, [flatten({(k, l): x * y for k, x in a.items() for l, y in b.items()},
                                                     (H.dim, H.dim)) for a in B.rows for b in B.rows])
    d1 = embed_legs(H, H.delta_one, (0, 1), 2)
    w = None
    for j, b in enumerate(B.rows):
        t = BG.delta(b)
        if not BB.contains(flatten(t, (H.dim, H.dim))) or act_tensor([BG.ad, BG.ad], d1, t) != t:
            w = {"basis": j}
            break
    rep.add("delta_lands_in_truncated_BxB", w is None, w)
    w = None
    for i, a in enumerate(B.rows):
        for j, b in enumerate(B.rows):
            acc = {}
            for (p, q), c in act_tensor([BG.ad, BG.ad], d1,
                                        {(k, l): x * y for k, x in a.items() for l, y in b.items()}).items():
                axpy(acc, c, H.mult.get((p, q), {}))
            if acc != H.mul(a, b):
                w = {"basis": [i, j]}
                break
        if w:
            break
    rep.add("m_B_well_defined", w is None, w)
    w = next(({"basis": j} for j, b in enumerate(B.rows) if not B.contains(BG.S_B(b))), None)
    rep.add("S_B_lands_in_B", w is None, w)
    try:
        BG.T_B_matrix
        rep.add("S_B_invertible", True)
    except Singular:
        rep.add("S_B_invertible", False, {"reason": "S_B is singular on B"})
    if not rep.passed:
        raise IllFormed(f"{rep.failures()[0].name} fails", rep)
    BG.build_report = rep
    return BG


def braided_group_verify(BG, rm=None, stop_early=False):
    H = BG.H
    B = BG.carrier
    rep = Report("braided group axioms")
    ad = BG.ad
    n = H.dim
    basis = B.rows

    # coassociativity and counit laws
    w = None
    for j, b in enumerate(basis):
        t = BG.delta(b)
        if apply_leg(t, 0, BG._delta_basis) != apply_leg(t, 1, BG._delta_basis):
            w = {"basis": j}
            break
    rep.add("coassociativity", w is None, w)

    def left_counit(t):
        acc = {}
        for (p, q), c in t.items():
            axpy(acc, c, H.mul(H.eps_t({p: ONE}), {q: ONE}))
        return acc

    def right_counit(t):
        acc = {}
        for (p, q), c in t.items():
            axpy(acc, c, H.mul(H.S(H.eps_t({q: ONE})), {p: ONE}))
        return acc

    w = next(({"basis": j} for j, b in enumerate(basis) if left_counit(BG.delta(b)) != b), None)
    rep.add("counit_left", w is None, w)
    w = next(({"basis": j} for j, b in enumerate(basis) if right_counit(BG.delta(b)) != b), None)
    rep.add("counit_right", w is None, w)

    # unit laws on B x_t H_t
    w = None
    for z in H.Ht.rows:
        for j, b in enumerate(basis):
            if H.mul(z, b) != H.mul(H.mul(H.unit, z), b):
                w = {"basis": j}
    rep.add("unit_left", w is None, w)
    from .repcat import UnitModule  # local: avoids a cycle at import time
    U = UnitModule(H)
    Bm = BG.module
    carrier_BU = _carrier_pair(H, Bm, U)
    w = None
    for v in carrier_BU.rows:
        lhs, rhs = {}, {}
        for (i, k), c in unflatten(v, (Bm.dim, U.dim)).items():
            b, z = B.rows[i], U.Ht.rows[k]
            axpy(lhs, c, H.mul(b, z))
            axpy(rhs, c, H.mul(H.S(z), b))
        if lhs != rhs:
            w = {"vector": len(v)}
            break
    rep.add("unit_right", w is None, w)

    # braided bialgebra law on the carrier of B x_t B
    d1 = embed_legs(H, H.delta_one, (0, 1), 2)
    car = Subspace.from_vectors(n * n, [flatten(act_tensor([ad, ad], d1, {(k, l): x * y for k, x in a.items()
                                                                          for l, y in b.items()}), (n, n))
                                        for a in basis for b in basis])
    cache = {}

    def braid_pair(p, q):
        key = (p, q)
        v = cache.get(key)
        if v is None:
            v = BG.braid({(p, q): ONE})
            cache[key] = v
        return v

    w = None
    for v in car.rows:
        t = unflatten(v, (n, n))
        prod_ = {}
        for (p, q), c in t.items():
            axpy(prod_, c, H.mult.get((p, q), {}))
        lhs = BG.delta(prod_)
        rhs = {}
        for (p, q), c in t.items():
            da, db = BG._delta_basis[p], BG._delta_basis[q]
            for (a1, a2), x in da.items():
                for (b1, b2), y in db.items():
                    for (u1, u2), z in braid_pair(a2, b1).items():
                        left = H.mult.get((a1, u1))
                        right = H.mult.get((u2, b2))
                        if not left or not right:
                            continue
                        coef = c * x * y * z
                        for k, e in left.items():
                            for l, f in right.items():
                                key = (k, l)
                                s = rhs.get(key, ZERO) + coef * e * f
                                if s:
                                    rhs[key] = s
                                else:
                                    del rhs[key]
        if lhs != rhs:
            w = {"carrier_vector": _short(v)}
            break
    rep.add("bialgebra_law", w is None, w)
    if stop_early and w is not None:
        return rep

    # antipode laws and T_B
    w1 = w2 = None
    for j, b in enumerate(basis):
        t = BG.delta(b)
        l, r = {}, {}
        for (p, q), c in t.items():
            axpy(l, c, H.mul(BG.S_B({p: ONE}), {q: ONE}))
            axpy(r, c, H.mul({p: ONE}, BG.S_B({q: ONE})))
        e = H.eps_t(b)
        if w1 is None and l != e:
            w1 = {"basis": j}
        if w2 is None and r != e:
            w2 = {"basis": j}
    rep.add("antipode_left", w1 is None, w1)
    rep.add("antipode_right", w2 is None, w2)
    I = Matrix.identity(B.dim)
    try:
        T = BG.T_B_matrix
        rep.add("S_B_T_B_identity", BG.S_B_matrix.compose(T) == I)
        rep.add("T_B_S_B_identity", T.compose(BG.S_B_matrix) == I)
    except Singular:
        rep.add("S_B_T_B_identity", False, {"reason": "S_B singular"})
        rep.add("T_B_S_B_identity", False, {"reason": "S_B singular"})

    rep.add("cocommutativity_regular", *_cocomm(BG))
    return rep


def _short(v):
    return [[k, str(c)] for k, c in sorted(v.items())[:4]]


def _carrier_pair(H, M, N):
    from .repcat import carrier
    return carrier([M, N])


def _cocomm(BG):
    """(id x alpha)(Delta_B x id) = (id x alpha)(c_BB x id)(id x c_XB c_BX)(Delta_B x id) with X = H."""
    from .repcat import regular_module
    H = BG.H
    n = H.dim
    X = regular_module(H)
    ad = BG.ad
    mods = [ad, ad, X]
    d1 = embed_legs(H, H.delta_one, (0, 1), 2)
    B = BG.carrier
    vecs = []
    for b in B.rows:
        for x in range(n):
            t = act_tensor([ad, X], d1, {(k, x): c for k, c in b.items()})
            if t:
                vecs.append(flatten(t, (n, n)))
    car = Subspace.from_vectors(n * n, vecs)

    def alpha(t):
        out = {}
        for (p, q, x), c in t.items():
            for k, e in H.mult.get((q, x), {}).items():
                out[(p, k)] = out.get((p, k), ZERO) + c * e
        return {k: v for k, v in out.items() if v}

    for v in car.rows:
        t = unflatten(v, (n, n))
        u = apply_leg(t, 0, BG._delta_basis)  # legs (B, B, X)
        lhs = alpha(u)
        # c_{B,X} on legs (1, 2): (b'', x) -> (R^2 x, R^1 . b'')
        u2 = permute(act_tensor(mods, embed_legs(H, BG.rm.R, (1, 2), 3), u), (0, 2, 1))
        # now legs (B, X, B); c_{X,B} on legs (1, 2): (x', y) -> (R^2 . y, R^1 x')
        u3 = permute(act_tensor([ad, X, ad], embed_legs(H, BG.rm.R, (1, 2), 3), u2), (0, 2, 1))
        # legs (B, B, X); c_{B,B} on legs (0, 1)
        u4 = permute(act_tensor(mods, embed_legs(H, BG.rm.R, (0, 1), 3), u3), (1, 0, 2))
        rhs = alpha(u4)
        if lhs != rhs:
            return False, {"carrier_vector": _short(v)}
    return True, None


# -- decomposition -------------------------------------------------------------------

class SubcoalgebraComponent:
    def __init__(self, BG, space, index):
        self.BG = BG
        self.space = space
        self.index = index

    @property
    def dim(self):
        return self.space.dim

    def delta(self, d):
        return self.BG.delta(d)

    def counit(self, d):
        return self.BG.H.eps(d)

    def __repr__(self):
        return f"SubcoalgebraComponent(index={self.index}, dim={self.dim})"


def dual_algebra(BG):
    """B* with (f g)(b) = f(b') g(b''), in the basis dual to the carrier basis."""
    B = BG.carrier
    m = B.dim
    mult = {}
    for k, b in enumerate(B.rows):
        for (i, j), c in BG.leg_coords(BG.delta(b)).items():
            mult.setdefault((i, j), {})[k] = c
    unit = {k: BG.H.eps(b) for k, b in enumerate(B.rows)}
    return Algebra(m, mult, vclean(unit), BG.H.field)


def _adjoint_closure(BG, sub):
    H = BG.H
    while True:
        new = [BG.ad.mats[g].apply(v) for g in H.generators for v in sub.rows]
        grown = Subspace.from_vectors(sub.ambient, sub.rows + new)
        if grown.dim == sub.dim:
            return sub
        sub = grown


def decompose_braided_group(BG, precision_bits=256, height_bound=10 ** 6, seed=0):
    B = BG.carrier
    A = dual_algebra(BG)
    if not A.is_semisimple():
        raise NotCosemisimple("the dual algebra of (B, Delta_B) has a nonzero radical")
    try:
        idems = A.central_idempotents(precision_bits, height_bound, seed)
    except NotSemisimple as exc:
        raise NotCosemisimple(str(exc)) from exc
    pieces = []
    for p in idems:
        vecs = []
        for b in B.rows:
            acc = {}
            for (i, j, k), c in BG.leg_coords(BG.delta2(b)).items():
                x = p.get(i, ZERO) * p.get(k, ZERO)
                if x:
                    axpy(acc, c * x, B.rows[j])
            vecs.append(acc)
        C = Subspace.from_vectors(B.ambient, vecs)
        pieces.append(_adjoint_closure(BG, C))
    merged = []
    for P in pieces:
        hit = [M for M in merged if M.intersect(P).dim > 0]
        for M in hit:
            merged.remove(M)
            P = P.sum(M)
        merged.append(P)
    merged.sort(key=lambda S: (S.dim, S.pivots))
    return [SubcoalgebraComponent(BG, S, i) for i, S in enumerate(merged)]


def components_verify(BG, comps):
    H = BG.H
    B = BG.carrier
    n = H.dim
    rep = Report("decomposition of B")
    total = Subspace.zero(B.ambient)
    for c in comps:
        total = total.sum(c.space)
    rep.add("components_sum_to_B", total == B, {"dim_sum": total.dim, "dim_B": B.dim})
    rep.add("components_independent", sum(c.dim for c in comps) == B.dim,
            {"dims": [c.dim for c in comps]})
    for c in comps:
        D = c.space
        stable = all(D.contains(BG.ad.mats[g].apply(v)) for g in H.generators for v in D.rows)
        rep.add(f"component_{c.index}_ad_stable", stable)
        DD = Subspace.from_vectors(n * n, [flatten({(k, l): x * y for k, x in a.items() for l, y in b.items()},
                                                   (n, n)) for a in D.rows for b in D.rows])
        sub = all(DD.contains(flatten(BG.delta(v), (n, n))) for v in D.rows)
        rep.add(f"component_{c.index}_subcoalgebra", sub)
    return rep
