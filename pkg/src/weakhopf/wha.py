"""Weak Hopf algebras given by structure constants, and their R-matrices."""

from __future__ import annotations

from functools import cached_property

from .checks import CheckFailed, Report
from .linalg import Matrix, Singular, Subspace, axpy, solve, vclean
from .scalars import ONE, ZERO, FieldSpec
from .tensors import apply_leg, apply_legs, flatten, permute, tadd, tensor_outer, unflatten


class DimensionMismatch(ValueError):
    pass


class NotQuasiTriangular(CheckFailed):
    pass


class NoInverse(CheckFailed):
    pass


def _fmt(v, field=None):
    """Compact, JSON-friendly rendering of a sparse vector or tensor."""
    field = field or FieldSpec.rationals()

    def key(k):
        return list(k) if isinstance(k, tuple) else k

    return [[key(k), field.format(c)] for k, c in sorted(v.items())]


class WeakHopfAlgebra:
    """Structure constants of a finite-dimensional weak Hopf algebra.

    ``mult[(i, j)]`` is b_i b_j, ``comult[i]`` is Delta(b_i) as a tensor keyed by
    pairs, ``counit[i]`` is eps(b_i), ``antipode[i]`` is S(b_i).
    """

    def __init__(self, dim, mult, unit, comult, counit, antipode, field=None, labels=None):
        self.dim = dim
        self.field = field or FieldSpec.rationals()
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(dim)]
        self._validate(mult, unit, comult, counit, antipode)
        self.mult = {k: vclean(v) for k, v in mult.items() if vclean(v)}
        self.unit = vclean(unit)
        self.comult = [{k: c for k, c in t.items() if c} for t in comult]
        self.counit = {i: c for i, c in dict(counit).items() if c}
        self.antipode = [vclean(v) for v in antipode]

    def _validate(self, mult, unit, comult, counit, antipode):
        n = self.dim
        if len(comult) != n or len(antipode) != n or len(self.labels) != n:
            raise DimensionMismatch("comultiplication, antipode and labels need one entry per basis element")

        def ok(i):
            return isinstance(i, int) and 0 <= i < n

        for (i, j), v in mult.items():
            if not (ok(i) and ok(j) and all(ok(k) for k in v)):
                raise DimensionMismatch(f"multiplication index out of range at {(i, j)}")
        if not all(ok(k) for k in unit) or not all(ok(k) for k in dict(counit)):
            raise DimensionMismatch("unit or counit index out of range")
        for t in comult:
            if not all(len(k) == 2 and ok(k[0]) and ok(k[1]) for k in t):
                raise DimensionMismatch("comultiplication index out of range")
        for v in antipode:
            if not all(ok(k) for k in v):
                raise DimensionMismatch("antipode index out of range")

    # -- basic operations ---------------------------------------------------

    def basis(self, i):
        return {i: ONE}

    def mul(self, x, y):
        acc = {}
        mult = self.mult
        for i, a in x.items():
            for j, b in y.items():
                v = mult.get((i, j))
                if v:
                    axpy(acc, a * b, v)
        return acc

    def mul3(self, x, y, z):
        return self.mul(self.mul(x, y), z)

    def comul(self, x):
        acc = {}
        for i, a in x.items():
            tadd(acc, self.comult[i], a)
        return acc

    def comul2(self, x):
        """(Delta x id) Delta(x), keyed by triples."""
        return apply_leg(self.comul(x), 0, lambda i: self.comult[i])

    def eps(self, x):
        return sum((a * self.counit.get(i, ZERO) for i, a in x.items()), ZERO)

    def S(self, x):
        acc = {}
        for i, a in x.items():
            axpy(acc, a, self.antipode[i])
        return acc

    def Sinv(self, x):
        return self.Sinv_matrix.apply(x)

    def tmul(self, t, u):
        """Legwise product in a tensor power of H."""
        out = {}
        mult = self.mult
        for k1, a in t.items():
            for k2, b in u.items():
                parts = []
                for i, j in zip(k1, k2):
                    v = mult.get((i, j))
                    if not v:
                        break
                    parts.append(v)
                else:
                    coef = a * b
                    acc = {(): coef}
                    for v in parts:
                        nxt = {}
                        for key, c in acc.items():
                            for k, d in v.items():
                                nxt[key + (k,)] = c * d
                        acc = nxt
                    tadd(out, acc)
        return out

    def one_tensor(self, r):
        """1 x 1 x ... x 1 (r legs) as a tensor."""
        acc = {(): ONE}
        for _ in range(r):
            acc = tensor_outer(acc, {(k,): c for k, c in self.unit.items()})
        return acc

    # -- cached structure ---------------------------------------------------

    @cached_property
    def S_matrix(self):
        return Matrix(self.dim, self.dim, [dict(v) for v in self.antipode])

    @cached_property
    def Sinv_matrix(self):
        return self.S_matrix.inverse()

    @cached_property
    def delta_one(self):
        return self.comul(self.unit)

    @cached_property
    def delta_op_one(self):
        return permute(self.delta_one, (1, 0))

    @cached_property
    def eps_t_matrix(self):
        # eps_t(x) = eps(1_1 x) 1_2
        cols = []
        d1 = self.delta_one
        for j in range(self.dim):
            acc = {}
            for (a, b), c in d1.items():
                e = self.eps(self.mult.get((a, j), {}))
                if e:
                    axpy(acc, c * e, {b: ONE})
            cols.append(acc)
        return Matrix(self.dim, self.dim, cols)

    @cached_property
    def eps_s_matrix(self):
        # eps_s(x) = 1_1 eps(x 1_2)
        cols = []
        d1 = self.delta_one
        for j in range(self.dim):
            acc = {}
            for (a, b), c in d1.items():
                e = self.eps(self.mult.get((j, b), {}))
                if e:
                    axpy(acc, c * e, {a: ONE})
            cols.append(acc)
        return Matrix(self.dim, self.dim, cols)

    def eps_t(self, x):
        return self.eps_t_matrix.apply(x)

    def eps_s(self, x):
        return self.eps_s_matrix.apply(x)

    @cached_property
    def Ht(self):
        return self.eps_t_matrix.image()

    @cached_property
    def Hs(self):
        return self.eps_s_matrix.image()

    def left_mult(self, x):
        return Matrix(self.dim, self.dim, [self.mul(x, {j: ONE}) for j in range(self.dim)])

    def right_mult(self, x):
        return Matrix(self.dim, self.dim, [self.mul({j: ONE}, x) for j in range(self.dim)])

    def adjoint(self, h, b):
        """h_1 b S(h_2)."""
        acc = {}
        for (i, j), c in self.comul(h).items():
            axpy(acc, c, self.mul(self.mul({i: ONE}, b), self.antipode[j]))
        return acc

    @cached_property
    def generators(self):
        """Basis indices generating H as a unital algebra (greedy, deterministic)."""
        gens = []
        span = Subspace.from_vectors(self.dim, [self.unit])
        for i in range(self.dim):
            if span.contains({i: ONE}):
                continue
            gens.append(i)
            frontier = list(span.rows) + [{i: ONE}]
            span = Subspace.from_vectors(self.dim, frontier)
            while True:
                new = [self.mul(v, {g: ONE}) for v in span.rows for g in gens]
                grown = Subspace.from_vectors(self.dim, span.rows + new)
                if grown.dim == span.dim:
                    break
                span = grown
            if span.dim == self.dim:
                break
        return tuple(gens)

    @cached_property
    def is_hopf(self):
        return self.delta_one == self.one_tensor(2)

    def __repr__(self):
        return f"WeakHopfAlgebra(dim={self.dim}, field={self.field!r})"

    # -- duality ------------------------------------------------------------

    def dual(self):
        """H* with the transposed structure (basis dual to the basis of H)."""
        n = self.dim
        mult = {}
        for k, t in enumerate(self.comult):
            for (i, j), c in t.items():
                mult.setdefault((i, j), {})[k] = c
        comult = [{} for _ in range(n)]
        for (i, j), v in self.mult.items():
            for k, c in v.items():
                comult[k][(i, j)] = c
        antipode = [{} for _ in range(n)]
        for i, v in enumerate(self.antipode):
            for j, c in v.items():
                antipode[j][i] = c
        labels = [f"{l}*" for l in self.labels]
        return WeakHopfAlgebra(n, mult, dict(self.counit), comult, dict(self.unit), antipode,
                               self.field, labels)

    def structure_equal(self, other):
        return (self.dim == other.dim and self.mult == other.mult and self.unit == other.unit
                and self.comult == other.comult and self.counit == other.counit
                and self.antipode == other.antipode)


def counital_maps(H, h):
    return H.eps_t(h), H.eps_s(h)


def _first(items):
    for w in items:
        if w is not None:
            return w
    return None


def wha_verify(H):
    """Exhaustive check of the weak Hopf algebra axioms on basis tuples."""
    n = H.dim
    f = H.field
    rep = Report("weak Hopf algebra axioms")
    E = [[H.eps(H.mult.get((i, j), {})) for j in range(n)] for i in range(n)]
    one = H.unit

    def b(i):
        return {i: ONE}

    # algebra and coalgebra
    def assoc():
        for i in range(n):
            for j in range(n):
                ij = H.mult.get((i, j), {})
                for k in range(n):
                    if H.mul(ij, b(k)) != H.mul(b(i), H.mult.get((j, k), {})):
                        return {"basis": [i, j, k]}
        return None

    rep.add("associativity", (w := assoc()) is None, w)
    w = _first({"basis": [i]} if not (H.mul(one, b(i)) == b(i) == H.mul(b(i), one)) else None
               for i in range(n))
    rep.add("unit", w is None, w)
    w = _first({"basis": [i]} if apply_leg(H.comult[i], 0, lambda k: H.comult[k])
               != apply_leg(H.comult[i], 1, lambda k: H.comult[k]) else None for i in range(n))
    rep.add("coassociativity", w is None, w)

    def counit_ok(i):
        t = H.comult[i]
        left, right = {}, {}
        for (p, q), c in t.items():
            axpy(left, c * H.counit.get(p, ZERO), {q: ONE})
            axpy(right, c * H.counit.get(q, ZERO), {p: ONE})
        return left == b(i) == right

    w = _first(None if counit_ok(i) else {"basis": [i]} for i in range(n))
    rep.add("counit", w is None, w)

    # axiom 1
    def ax1():
        for i in range(n):
            for j in range(n):
                if H.comul(H.mult.get((i, j), {})) != H.tmul(H.comult[i], H.comult[j]):
                    return {"basis": [i, j]}
        return None

    rep.add("axiom1_multiplicative", (w := ax1()) is None, w)

    # axiom 2
    d1 = H.delta_one
    one1 = {(k,): c for k, c in one.items()}
    d1x1 = tensor_outer(d1, one1)
    x1d1 = tensor_outer(one1, d1)
    d2 = H.comul2(one)
    a = H.tmul(d1x1, x1d1)
    c2 = H.tmul(x1d1, d1x1)
    rep.add("axiom2_unit", d2 == a == c2,
            {"delta2_of_1": _fmt(d2, f)} if not d2 == a == c2 else None)

    # axiom 3: eps(xyz) = eps(x y_1) eps(y_2 z) = eps(x y_2) eps(y_1 z)
    def ax3():
        for x in range(n):
            for y in range(n):
                xy = H.mult.get((x, y), {})
                dy = H.comult[y]
                for z in range(n):
                    lhs = sum((c * E[k][z] for k, c in xy.items()), ZERO)
                    m1 = sum((c * E[x][p] * E[q][z] for (p, q), c in dy.items()), ZERO)
                    m2 = sum((c * E[x][q] * E[p][z] for (p, q), c in dy.items()), ZERO)
                    if not lhs == m1 == m2:
                        return {"basis": [x, y, z]}
        return None

    rep.add("axiom3_counit", (w := ax3()) is None, w)

    def x1Sx2(i):
        acc = {}
        for (p, q), c in H.comult[i].items():
            axpy(acc, c, H.mul(b(p), H.antipode[q]))
        return acc

    def Sx1x2(i):
        acc = {}
        for (p, q), c in H.comult[i].items():
            axpy(acc, c, H.mul(H.antipode[p], b(q)))
        return acc

    w = _first({"basis": [i]} if x1Sx2(i) != H.eps_t(b(i)) else None for i in range(n))
    rep.add("axiom4_target", w is None, w)
    w = _first({"basis": [i]} if Sx1x2(i) != H.eps_s(b(i)) else None for i in range(n))
    rep.add("axiom5_source", w is None, w)

    def ax6(i):
        acc = {}
        for (p, q, r), c in H.comul2(b(i)).items():
            axpy(acc, c, H.mul(H.mul(H.antipode[p], b(q)), H.antipode[r]))
        return acc == H.antipode[i]

    w = _first(None if ax6(i) else {"basis": [i]} for i in range(n))
    rep.add("axiom6_antipode", w is None, w)

    # antipode invertible and regular
    try:
        H.Sinv_matrix
        rep.add("antipode_invertible", True)
    except Singular:
        rep.add("antipode_invertible", False, {"reason": "S is singular"})
    ts = Subspace.from_vectors(n, [H.mul(z, y) for z in H.Ht.rows for y in H.Hs.rows])
    w = _first({"vector": _fmt(v, f)} if H.S(H.S(v)) != v else None for v in ts.rows)
    rep.add("regularity", w is None, w)

    # counital maps
    et, es = H.eps_t_matrix, H.eps_s_matrix
    rep.add("eps_t_idempotent", et.compose(et) == et)
    rep.add("eps_s_idempotent", es.compose(es) == es)

    # WHArelation1: eps(hg) = eps(eps_s(h) g) = eps(h eps_t(g))
    def rel1():
        for h in range(n):
            sh = H.eps_s(b(h))
            for g in range(n):
                tg = H.eps_t(b(g))
                if not E[h][g] == H.eps(H.mul(sh, b(g))) == H.eps(H.mul(b(h), tg)):
                    return {"basis": [h, g]}
        return None

    rep.add("WHArelation1", (w := rel1()) is None, w)
    S = H.S_matrix
    rep.add("WHArelation2", et.compose(S) == et.compose(es) == S.compose(es))
    rep.add("WHArelation3", es.compose(S) == es.compose(et) == S.compose(et))

    def rel4(i):
        lhs = H.tmul(d1, {(i, k): c for (k,), c in one1.items()})
        rhs = apply_leg(H.comult[i], 1, lambda k: H.eps_t(b(k)))
        return lhs == rhs

    def rel5(i):
        lhs = H.tmul({(k, i): c for (k,), c in one1.items()}, d1)
        rhs = apply_leg(H.comult[i], 0, lambda k: H.eps_s(b(k)))
        return lhs == rhs

    w = _first(None if rel4(i) else {"basis": [i]} for i in range(n))
    rep.add("WHArelation4", w is None, w)
    w = _first(None if rel5(i) else {"basis": [i]} for i in range(n))
    rep.add("WHArelation5", w is None, w)

    # S is an anti-(co)algebra map
    def anti_alg():
        for i in range(n):
            for j in range(n):
                if H.S(H.mult.get((i, j), {})) != H.mul(H.antipode[j], H.antipode[i]):
                    return {"basis": [i, j]}
        return None

    rep.add("S_anti_algebra", (w := anti_alg()) is None, w)
    w = _first({"basis": [i]} if H.comul(H.antipode[i]) != permute(
        apply_legs(H.comult[i], [H.antipode, H.antipode]), (1, 0)) else None for i in range(n))
    rep.add("S_anti_coalgebra", w is None, w)
    return rep


# -- quasi-triangular structure ----------------------------------------------------

class RMatrix:
    """An R-matrix R in H x H together with its weak inverse Rbar."""

    def __init__(self, H, R, Rbar, report=None):
        self.H = H
        self.R = {k: c for k, c in R.items() if c}
        self.Rbar = {k: c for k, c in Rbar.items() if c}
        self.report = report

    def __repr__(self):
        return f"RMatrix(terms={len(self.R)})"


def _legmap(H, fn):
    return lambda i: fn({i: ONE})


def qt_check(H, R):
    """Check the quasi-triangular axioms; returns (RMatrix or None, Report)."""
    R = {k: c for k, c in R.items() if c}
    f = H.field
    n = H.dim
    rep = Report("quasi-triangular structure")
    d1, d1op = H.delta_one, H.delta_op_one

    proj = H.tmul(H.tmul(d1op, R), d1)
    rep.add("R_in_truncation", proj == R, {"difference": _fmt(tadd(dict(proj), R, -ONE), f)})

    def inter():
        for i in range(n):
            lhs = H.tmul(R, H.comult[i])
            rhs = H.tmul(permute(H.comult[i], (1, 0)), R)
            if lhs != rhs:
                return {"basis": [i]}
        return None

    rep.add("intertwiner", (w := inter()) is None, w)

    one = H.unit
    R13 = {}
    for (a, b), c in R.items():
        for k, e in one.items():
            R13[(a, k, b)] = R13.get((a, k, b), ZERO) + c * e
    R12 = tensor_outer(R, {(k,): e for k, e in one.items()})
    R23 = tensor_outer({(k,): e for k, e in one.items()}, R)
    lhs = apply_leg(R, 1, lambda i: H.comult[i])
    rhs = H.tmul(R13, R12)
    rep.add("coproduct_right_leg", lhs == rhs, {"lhs_terms": len(lhs), "rhs_terms": len(rhs)})
    lhs = apply_leg(R, 0, lambda i: H.comult[i])
    rhs = H.tmul(R13, R23)
    rep.add("coproduct_left_leg", lhs == rhs, {"lhs_terms": len(lhs), "rhs_terms": len(rhs)})
    if not rep.passed:
        return None, rep

    Rbar = solve_rbar(H, R)
    if Rbar is None:
        rep.add("inverse_exists", False, {"reason": "R Rbar = Delta^op(1), Rbar R = Delta(1) inconsistent"})
        return None, rep
    rep.add("inverse_exists", True)
    rep.add("Rbar_in_truncation", H.tmul(H.tmul(d1, Rbar), d1op) == Rbar)

    def leg0(fn):
        return apply_leg(R, 0, lambda i: fn({i: ONE}))

    def leg1(fn):
        return apply_leg(R, 1, lambda i: fn({i: ONE}))

    S_on_0 = lambda t: apply_leg(t, 0, lambda i: H.antipode[i])  # noqa: E731
    rep.add("eR1_source", leg0(H.eps_s) == d1)
    rep.add("eR1_target", leg0(H.eps_t) == d1op)
    rep.add("eR2_source", leg1(H.eps_s) == S_on_0(d1op))
    rep.add("eR2_target", leg1(H.eps_t) == S_on_0(d1))
    rep.add("SotSR_Rbar", S_on_0(R) == Rbar)
    rep.add("SotSR_R", apply_legs(R, [H.antipode, H.antipode]) == R)
    rm = RMatrix(H, R, Rbar, rep)
    return (rm if rep.passed else None), rep


def solve_rbar(H, R):
    """Rbar in Delta(1)(H x H)Delta^op(1) with R Rbar = Delta^op(1), Rbar R = Delta(1)."""
    n = H.dim
    n2 = n * n
    d1, d1op = H.delta_one, H.delta_op_one
    dims = (n, n)
    cols = []
    for i in range(n):
        for j in range(n):
            e = {(i, j): ONE}
            left = flatten(H.tmul(R, e), dims)
            right = flatten(H.tmul(e, R), dims)
            col = dict(left)
            for k, c in right.items():
                col[k + n2] = c
            cols.append(col)
    rhs = dict(flatten(d1op, dims))
    for k, c in flatten(d1, dims).items():
        rhs[k + n2] = c
    x = solve(Matrix(2 * n2, n2, cols), rhs)
    if x is None:
        return None
    X = unflatten(x, dims)
    Rbar = H.tmul(H.tmul(d1, X), d1op)
    if H.tmul(R, Rbar) != d1op or H.tmul(Rbar, R) != d1:
        return None
    return Rbar


def qt_verify(H, R):
    rm, rep = qt_check(H, R)
    if rm is None:
        if "inverse_exists" in rep and not rep.get("inverse_exists").passed:
            raise NoInverse("no weak inverse for R", rep)
        bad = rep.failures()[0]
        raise NotQuasiTriangular(f"{bad.name} fails", rep)
    return rm
