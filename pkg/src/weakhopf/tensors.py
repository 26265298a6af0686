"""Sparse tensors: dicts keyed by index tuples.

An element of V1 x ... x Vr is ``{(i1, ..., ir): c}``.  Leg maps are callables
or sequences sending a basis index to a sparse vector.
"""

from __future__ import annotations

from .linalg import axpy
from .scalars import ONE, ZERO


def tadd(acc, t, c=ONE):
    """acc += c * t in place."""
    if not c:
        return acc
    for k, a in t.items():
        s = acc.get(k, ZERO) + c * a
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)
    return acc


def tsub(t, u):
    return tadd(dict(t), u, -ONE)


def tscale(t, c):
    if not c:
        return {}
    return {k: a * c for k, a in t.items()}


def outer(*vectors):
    """Tensor product of sparse vectors."""
    acc = {(): ONE}
    for v in vectors:
        nxt = {}
        for key, a in acc.items():
            for i, b in v.items():
                nxt[key + (i,)] = a * b
        acc = nxt
    return acc


def tensor_outer(t, u):
    out = {}
    for k1, a in t.items():
        for k2, b in u.items():
            out[k1 + k2] = a * b
    return out


def _leg(fn, i):
    return fn(i) if callable(fn) else fn[i]


def apply_legs(t, maps):
    """Apply one linear map per leg (``None`` = identity); maps may change arity
    by returning tensors keyed by tuples when ``expand`` is used (see apply_leg)."""
    out = {}
    cache = [dict() for _ in maps]
    for key, c in t.items():
        parts = []
        for l, i in enumerate(key):
            fn = maps[l]
            if fn is None:
                parts.append({i: ONE})
            else:
                v = cache[l].get(i)
                if v is None:
                    v = _leg(fn, i)
                    cache[l][i] = v
                parts.append(v)
        for k2, b in outer(*parts).items():
            s = out.get(k2, ZERO) + c * b
            if s:
                out[k2] = s
            else:
                del out[k2]
    return out


def apply_leg(t, leg, fn):
    """Apply a map on one leg; ``fn(i)`` may return a vector (dict int->c) or a
    tensor (dict tuple->c), in which case the leg is replaced by several legs."""
    out = {}
    cache = {}
    for key, c in t.items():
        i = key[leg]
        img = cache.get(i)
        if img is None:
            img = _leg(fn, i)
            cache[i] = img
        pre, post = key[:leg], key[leg + 1:]
        for j, b in img.items():
            k2 = pre + (j if isinstance(j, tuple) else (j,)) + post
            s = out.get(k2, ZERO) + c * b
            if s:
                out[k2] = s
            else:
                del out[k2]
    return out


def permute(t, perm):
    """New key position p holds old key[perm[p]]."""
    return {tuple(k[p] for p in perm): c for k, c in t.items()}


def contract_leg(t, leg, functional):
    """Pair one leg with a covector (dict index -> scalar), removing the leg."""
    out = {}
    for key, c in t.items():
        f = functional.get(key[leg])
        if f:
            k2 = key[:leg] + key[leg + 1:]
            s = out.get(k2, ZERO) + c * f
            if s:
                out[k2] = s
            else:
                del out[k2]
    return out


def flatten(t, dims):
    """Tensor -> flat vector with row-major index."""
    out = {}
    for key, c in t.items():
        idx = 0
        for k, d in zip(key, dims):
            idx = idx * d + k
        out[idx] = out.get(idx, ZERO) + c
    return {k: c for k, c in out.items() if c}


def unflatten(v, dims):
    out = {}
    for idx, c in v.items():
        key = []
        for d in reversed(dims):
            idx, r = divmod(idx, d)
            key.append(r)
        out[tuple(reversed(key))] = c
    return out


def pair_to_vector(t):
    """Collapse a 1-leg tensor to a vector."""
    return {k[0]: c for k, c in t.items()}


def vector_to_tensor(v):
    return {(i,): c for i, c in v.items()}


__all__ = ["tadd", "tsub", "tscale", "outer", "tensor_outer", "apply_legs", "apply_leg",
           "permute", "contract_leg", "flatten", "unflatten", "pair_to_vector",
           "vector_to_tensor", "axpy"]
