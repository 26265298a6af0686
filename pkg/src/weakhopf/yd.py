"""Yetter-Drinfeld modules and B-comodules, with the conversions between them."""

from __future__ import annotations

from .checks import Report
from .linalg import Matrix, axpy, solve_linear_maps
from .repcat import act_tensor, module_verify, regular_module
from .scalars import ONE, ZERO
from .tensors import tadd


def coaction_matrix(H, M, fn):
    """Matrix of m -> fn(m) (a tensor keyed by (H-index, M-index)), rows i*dim M + p."""
    m = M.dim
    cols = []
    for p in range(m):
        cols.append({i * m + q: c for (i, q), c in fn({p: ONE}).items() if c})
    return Matrix(H.dim * m, m, cols)


def _as_tensor(col, m):
    return {divmod(k, m): c for k, c in col.items()}


class Coacting:
    """An H-module together with a coaction matrix into H (x) M."""

    kind = "coaction"

    def __init__(self, module, coaction, name=None):
        self.module = module
        self.H = module.H
        self.coaction = coaction
        self.name = name or module.name
        if coaction.shape != (self.H.dim * module.dim, module.dim):
            raise ValueError("coaction must map M into H (x) M")

    @property
    def dim(self):
        return self.module.dim

    def rho(self, v):
        return _as_tensor(self.coaction.apply(v), self.dim)

    def rho_basis(self, p):
        return _as_tensor(self.coaction.cols[p], self.dim)

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, dim={self.dim})"


class YDModule(Coacting):
    kind = "yd"


class BComodule(Coacting):
    kind = "bcomod"


def _first_failure(items):
    for w in items:
        if w is not None:
            return w
    return None


def yd_verify(M):
    H = M.H
    mod = M.module
    Hr = regular_module(H)
    rep = Report(f"Yetter-Drinfeld axioms for {M.name}")
    rep.extend(module_verify(mod))
    d1 = H.delta_one

    w = _first_failure({"basis": p} if act_tensor([Hr, mod], d1, M.rho_basis(p)) != M.rho_basis(p) else None
                       for p in range(M.dim))
    rep.add("coaction_in_truncated_tensor", w is None, w)

    def coassoc(p):
        t = M.rho_basis(p)
        lhs = {}
        for (i, q), c in t.items():
            for (a, b), d in H.comult[i].items():
                lhs[(a, b, q)] = lhs.get((a, b, q), ZERO) + c * d
        rhs = {}
        for (i, q), c in t.items():
            for (j, r), d in M.rho_basis(q).items():
                rhs[(i, j, r)] = rhs.get((i, j, r), ZERO) + c * d
        return {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}

    w = _first_failure(None if coassoc(p) else {"basis": p} for p in range(M.dim))
    rep.add("coassociativity", w is None, w)

    def counit(p):
        acc = {}
        for (i, q), c in M.rho_basis(p).items():
            e = H.counit.get(i, ZERO)
            if e:
                axpy(acc, c * e, {q: ONE})
        return acc == {p: ONE}

    w = _first_failure(None if counit(p) else {"basis": p} for p in range(M.dim))
    rep.add("counit", w is None, w)

    def compat(h, p):
        lhs, rhs = {}, {}
        for (a, b), c in H.comult[h].items():
            # h_1 m_-1 (x) h_2 m_0
            for (i, q), d in M.rho_basis(p).items():
                left = H.mult.get((a, i))
                if not left:
                    continue
                right = mod.mats[b].cols[q]
                for k, x in left.items():
                    for r, y in right.items():
                        lhs[(k, r)] = lhs.get((k, r), ZERO) + c * d * x * y
            # (h_1 m)_-1 h_2 (x) (h_1 m)_0
            for (i, q), d in M.rho(mod.mats[a].cols[p]).items():
                for k, x in H.mult.get((i, b), {}).items():
                    rhs[(k, q)] = rhs.get((k, q), ZERO) + c * d * x
        return {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}

    w = None
    for h in range(H.dim):
        for p in range(M.dim):
            if not compat(h, p):
                w = {"h": h, "m": p}
                break
        if w:
            break
    rep.add("yd_compatibility", w is None, w)
    return rep


def bcomod_verify(N, BG):
    """Comodule axioms over (B, Delta_B, eps_t) in the category of H-modules."""
    H = N.H
    mod = N.module
    B = BG.carrier
    rep = Report(f"B-comodule axioms for {N.name}")
    rep.extend(module_verify(mod))
    d1 = H.delta_one
    w = None
    for p in range(N.dim):
        t = N.rho_basis(p)
        in_B = all(B.contains(_leg0(t, q)) for q in {q for (_, q) in t})
        if not in_B or act_tensor([BG.ad, mod], d1, t) != t:
            w = {"basis": p}
            break
    rep.add("coaction_in_truncated_BxM", w is None, w)

    def linear(g, p):
        lhs = N.rho(mod.mats[g].cols[p])
        comul = {k: c for k, c in H.comult[g].items()}
        rhs = act_tensor([BG.ad, mod], comul, N.rho_basis(p))
        return lhs == rhs

    w = _first_failure({"generator": g, "basis": p} if not linear(g, p) else None
                       for g in H.generators for p in range(N.dim))
    rep.add("coaction_H_linear", w is None, w)

    def coassoc(p):
        t = N.rho_basis(p)
        lhs = {}
        for (i, q), c in t.items():
            for (a, b), d in BG._delta_basis[i].items():
                lhs[(a, b, q)] = lhs.get((a, b, q), ZERO) + c * d
        rhs = {}
        for (i, q), c in t.items():
            for (j, r), d in N.rho_basis(q).items():
                rhs[(i, j, r)] = rhs.get((i, j, r), ZERO) + c * d
        return {k: v for k, v in lhs.items() if v} == {k: v for k, v in rhs.items() if v}

    w = _first_failure(None if coassoc(p) else {"basis": p} for p in range(N.dim))
    rep.add("coassociativity", w is None, w)

    def counit(p):
        acc = {}
        for (i, q), c in N.rho_basis(p).items():
            z = H.eps_t({i: ONE})
            axpy(acc, c, mod.apply(z, {q: ONE}))
        return acc == {p: ONE}

    w = _first_failure(None if counit(p) else {"basis": p} for p in range(N.dim))
    rep.add("counit", w is None, w)
    return rep


def _leg0(t, q):
    return {i: c for (i, r), c in t.items() if r == q}


def to_bcomod(M, rm):
    """rho_R(m) = m_-1 S(R^2) (x) R^1 m_0."""
    H = M.H
    mod = M.module
    SR = [(r1, H.antipode[r2], d) for (r1, r2), d in rm.R.items()]

    def fn(v):
        out = {}
        for (i, q), c in M.rho(v).items():
            for r1, s2, d in SR:
                left = H.mul({i: ONE}, s2)
                right = mod.mats[r1].cols[q]
                for k, x in left.items():
                    for r, y in right.items():
                        out[(k, r)] = out.get((k, r), ZERO) + c * d * x * y
        return out

    return BComodule(mod, coaction_matrix(H, mod, fn), M.name)


def to_yd(N, rm):
    """rho(m) = m^-1 R^2 (x) R^1 m^0."""
    H = N.H
    mod = N.module

    def fn(v):
        out = {}
        for (i, q), c in N.rho(v).items():
            for (r1, r2), d in rm.R.items():
                left = H.mult.get((i, r2))
                if not left:
                    continue
                right = mod.mats[r1].cols[q]
                for k, x in left.items():
                    for r, y in right.items():
                        out[(k, r)] = out.get((k, r), ZERO) + c * d * x * y
        return out

    return YDModule(mod, coaction_matrix(H, mod, fn), N.name)


def yd_bcomod_roundtrip(M, rm, direction):
    if direction == "toBComod":
        return to_bcomod(M, rm)
    if direction == "toYD":
        return to_yd(M, rm)
    raise ValueError(f"unknown direction {direction!r}")


def roundtrip_check(obj, rm):
    """Both composites return the original coaction matrix exactly."""
    rep = Report(f"round trip for {obj.name}")
    if isinstance(obj, YDModule):
        back = to_yd(to_bcomod(obj, rm), rm)
        rep.add("toYD_after_toBComod_identity", back.coaction == obj.coaction)
    else:
        back = to_bcomod(to_yd(obj, rm), rm)
        rep.add("toBComod_after_toYD_identity", back.coaction == obj.coaction)
    return rep


# -- Hom spaces ---------------------------------------------------------------------

def _coaction_terms(H, M, N):
    """Terms of rho_N f - (id x f) rho_M for solve_linear_maps."""
    n, m = N.dim, M.dim
    terms = [(ONE, N.coaction, None)]
    for i in range(H.dim):
        proj = Matrix(m, m, [{q: c for (j, q), c in M.rho_basis(p).items() if j == i} for p in range(m)])
        if proj.is_zero():
            continue
        inj = Matrix(H.dim * n, n, [{i * n + q: ONE} for q in range(n)])
        terms.append((-ONE, inj, proj))
    return terms


def hom_yd(M, N):
    """Basis of maps commuting with the actions and the coactions."""
    H = M.H
    if M.dim == 0 or N.dim == 0:
        return []
    eqs = [[(ONE, N.module.mats[g], None), (-ONE, None, M.module.mats[g])] for g in H.generators]
    eqs.append(_coaction_terms(H, M, N))
    return solve_linear_maps(M.dim, N.dim, eqs)


def hom_colinear(M, N):
    """Maps commuting with the coactions only."""
    if M.dim == 0 or N.dim == 0:
        return []
    return solve_linear_maps(M.dim, N.dim, [_coaction_terms(M.H, M, N)])


def is_simple(M):
    return M.dim > 0 and len(hom_yd(M, M)) == 1


# -- corpus constructions -------------------------------------------------------------

def _second_leg_coords(t, coords):
    """Re-express the second leg of a two-leg tensor in subspace coordinates."""
    by_first = {}
    for (i, j), c in t.items():
        axpy(by_first.setdefault(i, {}), c, {j: ONE})
    return {(i, q): c for i, vec in by_first.items() if vec for q, c in coords(vec).items()}


def braided_yd(module, rm, inverse=False):
    """rho(m) = R^2 (x) R^1 m, or Rbar^1 (x) Rbar^2 m with ``inverse``."""
    H = module.H

    def fn(v):
        out = {}
        X = rm.Rbar if inverse else rm.R
        for (r1, r2), d in X.items():
            leg, act = (r1, r2) if inverse else (r2, r1)
            for q, c in module.mats[act].apply(v).items():
                out[(leg, q)] = out.get((leg, q), ZERO) + c * d
        return out

    tag = "Rbar" if inverse else "R"
    return YDModule(module, coaction_matrix(H, module, fn), f"{module.name}[{tag}]")


def adjoint_yd(BG, space=None, name="B"):
    """(D, ad, Delta) for an ad-stable subcoalgebra D of B (default D = B)."""
    from .repcat import restrict_module
    H = BG.H
    D = space if space is not None else BG.carrier
    module = restrict_module(BG.ad, D, name)

    def fn(v):
        return _second_leg_coords(H.comul(D.vector(v)), D.coords)

    return YDModule(module, coaction_matrix(H, module, fn), name)


def component_bcomod(BG, space=None, name="B"):
    """(D, ad, Delta_B) as a B-comodule, in D-coordinates on the second leg."""
    from .repcat import restrict_module
    H = BG.H
    D = space if space is not None else BG.carrier
    module = restrict_module(BG.ad, D, name)

    def fn(v):
        return _second_leg_coords(BG.delta(D.vector(v)), D.coords)

    return BComodule(module, coaction_matrix(H, module, fn), name)


def unit_yd(H):
    """H_t with rho(z) = Delta(z)."""
    from .repcat import unit_module
    U = unit_module(H)

    def fn(v):
        return _second_leg_coords(H.comul(U.element(v)), U.coords)

    return YDModule(U, coaction_matrix(H, U, fn), "Ht")


def yd_direct_sum(M, N):
    from .repcat import direct_sum
    H = M.H
    mod = direct_sum(M.module, N.module)
    m = M.dim

    def fn(v):
        out = {}
        left = {p: c for p, c in v.items() if p < m}
        right = {p - m: c for p, c in v.items() if p >= m}
        if left:
            tadd(out, M.rho(left))
        if right:
            tadd(out, {(i, q + m): c for (i, q), c in N.rho(right).items()})
        return out

    return YDModule(mod, coaction_matrix(H, mod, fn), f"{M.name}+{N.name}")


def restrict_yd(M, sub, name=None):
    """Sub-YD module on a Subspace stable under action and coaction."""
    from .repcat import restrict_module
    H = M.H
    mod = restrict_module(M.module, sub, name or f"{M.name}|sub")

    def fn(v):
        return _second_leg_coords(M.rho(sub.vector(v)), sub.coords)

    return YDModule(mod, coaction_matrix(H, mod, fn), mod.name)
