"""Exact sparse linear algebra.

Vectors are plain ``dict`` objects mapping an index to a nonzero scalar.  A
:class:`Matrix` stores its columns as such vectors, which suits maps that are
defined by the images of basis vectors.  Subspaces keep a canonical reduced
row echelon basis, so two subspaces are equal iff their bases are.
"""

from __future__ import annotations

import math
import random

import mpmath

from .scalars import (ONE, ZERO, ComplexBall, FieldSpec, ReconstructionFailed,
                      inv, reconstruct_exact)


class AmbientMismatch(ValueError):
    pass


class NotSplit(ArithmeticError):
    pass


class NotSemisimple(ArithmeticError):
    pass


class Singular(ArithmeticError):
    pass


# -- vectors -------------------------------------------------------------------

def vadd(u, v):
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, ZERO) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vsub(u, v):
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, ZERO) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vscale(v, c):
    if not c:
        return {}
    return {k: a * c for k, a in v.items()}


def axpy(acc, c, v):
    """acc += c * v, in place."""
    if not c:
        return acc
    for k, a in v.items():
        s = acc.get(k, ZERO) + c * a
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def vclean(v):
    return {k: c for k, c in v.items() if c}


def unit_vector(i):
    return {i: ONE}


def vlinear(v, images):
    """Sum of v[i] * images[i] where images is indexable by i."""
    acc = {}
    for i, c in v.items():
        axpy(acc, c, images[i])
    return acc


# -- echelon engine ------------------------------------------------------------

class Echelon:
    """Incrementally maintained reduced row echelon form.

    Each stored row has coefficient 1 at its pivot (its smallest index) and 0
    at every other pivot, which keeps the form canonical.  When ``track`` is
    set, every row carries a tag vector recording it as a combination of the
    inserted vectors (indexed by insertion order).
    """

    def __init__(self, track=False):
        self.rows = {}
        self.tags = {} if track else None
        self._count = 0
        self._col_index = {}  # column -> set of pivots whose row has it

    def __len__(self):
        return len(self.rows)

    def reduce(self, v, tag=None):
        v = dict(v)
        hits = [p for p in v if p in self.rows] if len(v) < len(self.rows) \
            else [p for p in self.rows if p in v]
        for p in hits:
            c = v.get(p)
            if c:
                axpy(v, -c, self.rows[p])
                if tag is not None:
                    axpy(tag, -c, self.tags[p])
        return v

    def add(self, v):
        """Insert v; returns (pivot or None, tag of the residual)."""
        tag = {self._count: ONE} if self.tags is not None else None
        self._count += 1
        r = self.reduce(v, tag)
        if not r:
            return None, tag
        p = min(r)
        c = inv(r[p])
        if c != ONE:
            r = vscale(r, c)
            if tag is not None:
                tag = vscale(tag, c)
        for q in list(self._col_index.get(p, ())):
            row = self.rows[q]
            f = row.get(p)
            if f:
                self._unindex(q, row)
                axpy(row, -f, r)
                self._index(q, row)
                if tag is not None:
                    axpy(self.tags[q], -f, tag)
        self.rows[p] = r
        self._index(p, r)
        if tag is not None:
            self.tags[p] = tag
        return p, tag

    def _index(self, p, row):
        for k in row:
            if k != p:
                self._col_index.setdefault(k, set()).add(p)

    def _unindex(self, p, row):
        for k in row:
            if k != p:
                s = self._col_index.get(k)
                if s is not None:
                    s.discard(p)

    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]


# -- subspaces ------------------------------------------------------------------

class Subspace:
    """A subspace of k^n given by its canonical RREF basis."""

    __slots__ = ("ambient", "rows", "pivots", "_pivset")

    def __init__(self, ambient, rows, pivots):
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots
        self._pivset = {p: i for i, p in enumerate(pivots)}

    @classmethod
    def from_vectors(cls, ambient, vectors):
        ech = Echelon()
        for v in vectors:
            if v:
                ech.add(v)
        piv = ech.pivots()
        return cls(ambient, [ech.rows[p] for p in piv], piv)

    @classmethod
    def zero(cls, ambient):
        return cls(ambient, [], [])

    @classmethod
    def full(cls, ambient):
        return cls(ambient, [{i: ONE} for i in range(ambient)], list(range(ambient)))

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return list(self.rows)

    def residual(self, v):
        v = dict(v)
        for p in [p for p in v if p in self._pivset]:
            c = v.get(p)
            if c:
                axpy(v, -c, self.rows[self._pivset[p]])
        return v

    def contains(self, v):
        return not self.residual(v)

    def coords(self, v):
        """Coordinates of v in the stored basis; raises if v is not in the span."""
        if self.residual(v):
            raise ValueError("vector not in subspace")
        return {i: v[p] for i, p in enumerate(self.pivots) if v.get(p)}

    def vector(self, coords):
        acc = {}
        for i, c in coords.items():
            axpy(acc, c, self.rows[i])
        return acc

    def _check(self, other):
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def sum(self, other):
        self._check(other)
        return Subspace.from_vectors(self.ambient, self.rows + other.rows)

    def intersect(self, other):
        self._check(other)
        # x = sum a_i u_i lies in other iff the residual combination vanishes
        res = [other.residual(u) for u in self.rows]
        m = Matrix(self.ambient, len(res), res)
        ker = m.kernel()
        return Subspace.from_vectors(
            self.ambient, [vlinear(k, self.rows) for k in ker.rows])

    def contains_subspace(self, other):
        self._check(other)
        return all(self.contains(v) for v in other.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.pivots == other.pivots and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, tuple(self.pivots)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def free_indices(self):
        """Non-pivot coordinates: they index a basis of the quotient k^n / self."""
        return [i for i in range(self.ambient) if i not in self._pivset]

    def inclusion(self):
        return Matrix(self.ambient, self.dim, list(self.rows))

    def projection_coords(self):
        """Matrix sending a vector of the subspace to its coordinates (garbage off it)."""
        cols = [{} for _ in range(self.ambient)]
        for i, p in enumerate(self.pivots):
            cols[p] = {i: ONE}
        return Matrix(self.dim, self.ambient, cols)


def subspace_ops(u, v, op):
    if op == "sum":
        return u.sum(v)
    if op == "intersect":
        return u.intersect(v)
    if op == "contains":
        return u.contains_subspace(v)
    if op == "equals":
        u._check(v)
        return u == v
    raise ValueError(f"unknown op {op!r}")


class Quotient:
    """k^n / U with the canonical complement spanned by the non-pivot unit vectors."""

    def __init__(self, sub):
        self.sub = sub
        self.free = sub.free_indices()
        self.index = {j: i for i, j in enumerate(self.free)}

    @property
    def dim(self):
        return len(self.free)

    def project(self, v):
        r = self.sub.residual(v)
        return {self.index[j]: c for j, c in r.items()}

    def lift(self, coords):
        return {self.free[i]: c for i, c in coords.items()}


# -- matrices --------------------------------------------------------------------

class Matrix:
    """Sparse matrix stored by columns; ``cols[j]`` is the image of e_j."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = [vclean(c) for c in cols] if cols is not None else [{} for _ in range(ncols)]
        if len(self.cols) != ncols:
            raise ValueError("column count mismatch")

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def zero(cls, nrows, ncols):
        return cls(nrows, ncols)

    @classmethod
    def from_rows(cls, rows, ncols=None):
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            items = row.items() if isinstance(row, dict) else enumerate(row)
            for j, c in items:
                if c:
                    cols[j][i] = c if not isinstance(c, int) else ONE * c
        return cls(nrows, ncols, cols)

    @classmethod
    def from_function(cls, nrows, ncols, fn):
        return cls(nrows, ncols, [fn(j) for j in range(ncols)])

    def apply(self, v):
        acc = {}
        cols = self.cols
        for j, c in v.items():
            axpy(acc, c, cols[j])
        return acc

    def compose(self, other):
        """self after other."""
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} o {other.shape}")
        return Matrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    __matmul__ = compose

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __add__(self, other):
        return Matrix(self.nrows, self.ncols, [vadd(a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other):
        return Matrix(self.nrows, self.ncols, [vsub(a, b) for a, b in zip(self.cols, other.cols)])

    def scale(self, c):
        return Matrix(self.nrows, self.ncols, [vscale(a, c) for a in self.cols])

    def __neg__(self):
        return self.scale(-ONE)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.cols == other.cols

    def __hash__(self):
        return hash(self.shape)

    def is_zero(self):
        return not any(self.cols)

    def transpose(self):
        cols = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, c in col.items():
                cols[i][j] = c
        return Matrix(self.ncols, self.nrows, cols)

    def kron(self, other):
        r2, c2 = other.nrows, other.ncols
        cols = []
        for a in self.cols:
            for b in other.cols:
                col = {}
                for i, x in a.items():
                    base = i * r2
                    for k, y in b.items():
                        col[base + k] = x * y
                cols.append(col)
        return Matrix(self.nrows * r2, self.ncols * c2, cols)

    def entry(self, i, j):
        return self.cols[j].get(i, ZERO)

    def entries(self):
        rows = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, c in col.items():
                rows[i][j] = c
        return rows

    def nonzero_entries(self):
        for j, col in enumerate(self.cols):
            for i, c in sorted(col.items()):
                yield i, j, c

    def rank(self):
        ech = Echelon()
        for c in self.cols:
            if c:
                ech.add(c)
        return len(ech)

    def image(self):
        return Subspace.from_vectors(self.nrows, self.cols)

    def kernel(self):
        ech = Echelon(track=True)
        null = []
        for c in self.cols:
            p, tag = ech.add(c)
            if p is None:
                null.append(tag)
        return Subspace.from_vectors(self.ncols, null)

    def inverse(self):
        if self.nrows != self.ncols:
            raise Singular("non-square matrix")
        ech = Echelon(track=True)
        for c in self.cols:
            p, _ = ech.add(c)
            if p is None:
                raise Singular("matrix is singular")
        # row p of the RREF is e_p = sum tag[j] * col_j, so inverse column p = tag
        return Matrix(self.ncols, self.nrows, [ech.tags[p] for p in range(self.nrows)])

    def restrict(self, source, target=None):
        """Matrix of the map from ``source`` (a Subspace) into ``target`` coordinates."""
        imgs = [self.apply(v) for v in source.rows]
        if target is None:
            return Matrix(self.nrows, source.dim, imgs)
        return Matrix(target.dim, source.dim, [target.coords(v) for v in imgs])

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def kernel(m):
    return m.kernel()


def direct_sum_matrix(a, b):
    cols = [dict(c) for c in a.cols]
    off = a.nrows
    cols += [{i + off: c for i, c in col.items()} for col in b.cols]
    return Matrix(a.nrows + b.nrows, a.ncols + b.ncols, cols)


def nullspace(rows, nvars):
    """Solutions x of <row, x> = 0 for every sparse row."""
    ech = Echelon()
    for r in rows:
        if r:
            ech.add(r)
            if len(ech) == nvars:
                return Subspace.zero(nvars)
    pivots = ech.rows
    free = [j for j in range(nvars) if j not in pivots]
    # column view of the pivot rows restricted to free variables
    by_free = {}
    for p, row in pivots.items():
        for j, c in row.items():
            if j != p:
                by_free.setdefault(j, []).append((p, c))
    vecs = []
    for f in free:
        v = {f: ONE}
        for p, c in by_free.get(f, ()):
            v[p] = -c
        vecs.append(v)
    return Subspace.from_vectors(nvars, vecs)


def solve(matrix, rhs):
    """One solution x of matrix x = rhs, or None when inconsistent."""
    ech = Echelon(track=True)
    for c in matrix.cols:
        ech.add(c)
    tag = {}
    r = dict(rhs)
    for p in [p for p in r if p in ech.rows]:
        c = r.get(p)
        if c:
            axpy(r, -c, ech.rows[p])
            axpy(tag, c, ech.tags[p])
    if r:
        return None
    return tag


def solve_linear_maps(dim_src, dim_tgt, equations):
    """Basis of linear maps f: k^dim_src -> k^dim_tgt satisfying every equation.

    Each equation is a list of terms (coef, L, R) meaning sum coef * L f R = 0,
    with L a Matrix out of k^dim_tgt and R a Matrix into k^dim_src.  ``None``
    stands for an identity.  Maps are returned as Matrix objects; unknown f[q,p]
    has index q * dim_src + p.
    """
    nvars = dim_src * dim_tgt
    ech = Echelon()
    for eq in equations:
        rows = {}
        for coef, left, right in eq:
            lcols = [{q: ONE} for q in range(dim_tgt)] if left is None else left.cols
            rcols = [{p: ONE} for p in range(dim_src)] if right is None else right.cols
            for q, lcol in enumerate(lcols):
                for x, a in lcol.items():
                    ac = a * coef
                    for y, rcol in enumerate(rcols):
                        for p, b in rcol.items():
                            row = rows.setdefault((x, y), {})
                            key = q * dim_src + p
                            s = row.get(key, ZERO) + ac * b
                            if s:
                                row[key] = s
                            else:
                                del row[key]
        for row in rows.values():
            if row:
                ech.add(row)
        if len(ech) == nvars:
            return []
    sol = nullspace(ech.basis(), nvars)
    return [vector_to_matrix(v, dim_tgt, dim_src) for v in sol.rows]


def vector_to_matrix(v, nrows, ncols):
    cols = [{} for _ in range(ncols)]
    for key, c in v.items():
        q, p = divmod(key, ncols)
        cols[p][q] = c
    return Matrix(nrows, ncols, cols)


def matrix_to_vector(m):
    out = {}
    for p, col in enumerate(m.cols):
        for q, c in col.items():
            out[q * m.ncols + p] = c
    return out


# -- polynomials over a field (coefficient lists, low degree first) ------------

def poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_eval(p, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    p, q = poly_trim(p), poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead = inv(q[-1])
    quo = [ZERO] * max(len(p) - len(q) + 1, 0)
    rem = list(p)
    for k in range(len(quo) - 1, -1, -1):
        c = rem[k + len(q) - 1] * lead
        quo[k] = c
        if c:
            for j, b in enumerate(q):
                rem[k + j] -= c * b
    return poly_trim(quo), poly_trim(rem[: len(q) - 1])


def poly_gcd(p, q):
    p, q = poly_trim(p), poly_trim(q)
    while q:
        p, q = q, poly_divmod(p, q)[1]
    if not p:
        return p
    lead = inv(p[-1])
    return [c * lead for c in p]


def poly_deriv(p):
    return poly_trim([c * k for k, c in enumerate(p)][1:])


def min_poly(m):
    """Monic minimal polynomial of a square Matrix (low degree first)."""
    n = m.nrows
    if m.ncols != n:
        raise ValueError("min_poly needs a square matrix")
    ech = Echelon(track=True)
    power = Matrix.identity(n)
    for k in range(n + 1):
        p, tag = ech.add(matrix_to_vector(power))
        if p is None:
            # tag is a dependency among I, M, ..., M^k with tag[k] = 1
            coeffs = [tag.get(j, ZERO) for j in range(k + 1)]
            lead = inv(coeffs[-1])
            return [c * lead for c in coeffs]
        power = m.compose(power)
    raise ArithmeticError("no dependency found; impossible for a square matrix")


def poly_of_matrix(p, m):
    n = m.nrows
    acc = Matrix.zero(n, n)
    for c in reversed(p):
        acc = m.compose(acc) + Matrix.identity(n).scale(c)
    return acc


# -- algebras given by structure constants --------------------------------------

class Algebra:
    """A finite-dimensional unital algebra: ``mult[(i, j)]`` is b_i b_j as a vector."""

    def __init__(self, dim, mult, unit, field=None):
        self.dim = dim
        self.mult = mult
        self.unit = vclean(unit)
        self.field = field or FieldSpec.rationals()

    def mul(self, x, y):
        acc = {}
        mult = self.mult
        for i, a in x.items():
            for j, b in y.items():
                v = mult.get((i, j))
                if v:
                    axpy(acc, a * b, v)
        return acc

    def left_matrix(self, x):
        return Matrix(self.dim, self.dim, [self.mul(x, {j: ONE}) for j in range(self.dim)])

    def right_matrix(self, x):
        return Matrix(self.dim, self.dim, [self.mul({j: ONE}, x) for j in range(self.dim)])

    def is_associative(self):
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult.get((i, j), {})
                for k in range(self.dim):
                    if self.mul(ij, {k: ONE}) != self.mul({i: ONE}, self.mult.get((j, k), {})):
                        return False
        return True

    def is_unital(self):
        return all(self.mul(self.unit, {i: ONE}) == {i: ONE} == self.mul({i: ONE}, self.unit)
                   for i in range(self.dim))

    def is_commutative(self):
        return all(self.mult.get((i, j), {}) == self.mult.get((j, i), {})
                   for i in range(self.dim) for j in range(i))

    def center(self):
        rows = []
        for i in range(self.dim):
            # [x, b_i] = 0 for x = sum x_j b_j
            per = {}
            for j in range(self.dim):
                d = vsub(self.mult.get((j, i), {}), self.mult.get((i, j), {}))
                for k, c in d.items():
                    per.setdefault(k, {})[j] = c
            rows.extend(per.values())
        return nullspace(rows, self.dim)

    def trace(self, x):
        m = self.left_matrix(x)
        return sum((m.entry(i, i) for i in range(self.dim)), ZERO)

    def trace_form_radical(self):
        traces = [self.trace({k: ONE}) for k in range(self.dim)]
        rows = []
        for i in range(self.dim):
            row = {}
            for j in range(self.dim):
                t = sum((c * traces[k] for k, c in self.mult.get((i, j), {}).items()), ZERO)
                if t:
                    row[j] = t
            rows.append(row)
        return nullspace(rows, self.dim)

    def is_semisimple(self):
        return self.trace_form_radical().dim == 0

    def subalgebra(self, sub):
        """Structure constants of a subalgebra in the coordinates of ``sub``."""
        basis = sub.rows
        mult = {}
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                c = sub.coords(self.mul(x, y))
                if c:
                    mult[(i, j)] = c
        return Algebra(sub.dim, mult, sub.coords(self.unit), self.field)

    def central_idempotents(self, precision_bits=256, height_bound=10 ** 6, seed=0):
        """Central primitive idempotents (vectors in this algebra's coordinates)."""
        zsub = self.center()
        zalg = self.subalgebra(zsub)
        comm = CommAlgebra(zalg.dim, zalg.mult, zalg.unit, self.field)
        idem = split_commutative(comm, precision_bits, height_bound, seed)
        return [zsub.vector(e) for e in idem]


class CommAlgebra(Algebra):
    pass


def algebra_from_matrices(mats, field=None):
    """The algebra spanned by a composition-closed list of square matrices."""
    if not mats:
        raise ValueError("empty matrix algebra")
    n = mats[0].nrows
    sub = Subspace.from_vectors(n * n, [matrix_to_vector(m) for m in mats])
    if sub.dim != len(mats):
        raise ValueError("matrices are linearly dependent")
    basis = [vector_to_matrix(v, n, n) for v in sub.rows]
    mult = {}
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            c = sub.coords(matrix_to_vector(a.compose(b)))
            if c:
                mult[(i, j)] = c
    unit = sub.coords(matrix_to_vector(Matrix.identity(n)))
    return Algebra(len(basis), mult, unit, field), basis


def _roots_in_field(poly, field, precision_bits, height_bound):
    """All roots of a squarefree polynomial, reconstructed exactly, or NotSplit."""
    deg = len(poly) - 1
    prec = precision_bits
    last = None
    for _ in range(4):
        with mpmath.workprec(prec):
            cs = [field.embed(c, prec) for c in reversed(poly)]
            try:
                roots, err = mpmath.polyroots(cs, maxsteps=200 + 20 * deg,
                                              extraprec=prec, error=True)
            except mpmath.libmp.libhyper.NoConvergence as exc:
                last = str(exc)
                prec *= 2
                continue
            radius = max(mpmath.mpf(err), mpmath.mpf(2) ** (-prec // 2)) * 16
            found = []
            try:
                for r in roots:
                    lam = reconstruct_exact(ComplexBall(mpmath.mpc(r), radius), field,
                                            height_bound, prec)
                    if poly_eval(poly, lam):
                        raise ReconstructionFailed("candidate root fails exact substitution")
                    found.append(lam)
            except ReconstructionFailed as exc:
                last = str(exc)
                prec *= 2
                continue
            if len(set(found)) != deg:
                last = "reconstructed roots are not distinct"
                prec *= 2
                continue
            return found
    raise NotSplit(f"polynomial does not split over {field!r}: {last}")


def split_commutative(z, precision_bits=256, height_bound=10 ** 6, seed=0):
    """Primitive idempotents of a split semisimple commutative algebra.

    Deterministic: basis elements are tried in order; seeded random
    combinations are used only if no basis element separates a block.
    """
    field = z.field
    n = z.dim
    blocks = [dict(z.unit)]
    rng = random.Random(seed)

    def block_space(e):
        return Subspace.from_vectors(n, [z.mul(e, {j: ONE}) for j in range(n)])

    def refine(e, x):
        space = block_space(e)
        if space.dim == 1:
            return None
        ex = z.mul(e, x)
        mat = Matrix(space.dim, space.dim,
                     [space.coords(z.mul(ex, v)) for v in space.rows])
        mp = min_poly(mat)
        if len(mp) == 2:
            return None
        if len(poly_gcd(mp, poly_deriv(mp))) > 1:
            raise NotSemisimple("minimal polynomial has a repeated root")
        roots = _roots_in_field(mp, field, precision_bits, height_bound)
        parts = []
        for j, lj in enumerate(roots):
            acc = dict(e)
            for l, ll in enumerate(roots):
                if l != j:
                    acc = z.mul(acc, vscale(vsub(ex, vscale(e, ll)), inv(lj - ll)))
            parts.append(acc)
        return parts

    def sweep(candidates):
        nonlocal blocks
        for x in candidates:
            new = []
            for e in blocks:
                parts = refine(e, x)
                new.extend(parts if parts else [e])
            blocks = new
            if len(blocks) == n:
                return True
        return False

    if not sweep([{j: ONE} for j in range(n)]):
        tries = 0
        while len(blocks) < n and tries < 8:
            tries += 1
            x = {j: field.coerce(rng.randint(-9, 9)) for j in range(n)}
            sweep([vclean(x)])
    if len(blocks) != n:
        raise NotSemisimple("commutative algebra has non-separable blocks")
    for e in blocks:
        if z.mul(e, e) != e:
            raise ArithmeticError("splitting produced a non-idempotent")
    return sorted(blocks, key=_vector_sort_key)


def _vector_sort_key(v):
    return sorted((k, str(c)) for k, c in v.items())


def isqrt_exact(n):
    r = math.isqrt(n)
    return r if r * r == n else None
