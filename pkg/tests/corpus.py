"""Module corpora shared by the YD, comodule and acceptance tests."""

from weakhopf.comod import component_comodule, induce, regular_comodule
from weakhopf.repcat import dual_module, regular_module, unit_module
from weakhopf.yd import (adjoint_yd, braided_yd, component_bcomod, to_bcomod, to_yd, unit_yd,
                         yd_direct_sum)

_YD, _BC = {}, {}


def yd_corpus(c):
    if c.name not in _YD:
        H, rm, BG = c.H, c.rm, c.BG
        reg = regular_module(H)
        dual = dual_module(reg)
        B = adjoint_yd(BG)
        mods = [B, unit_yd(H),
                braided_yd(reg, rm), braided_yd(reg, rm, True),
                braided_yd(dual, rm), braided_yd(dual, rm, True),
                braided_yd(unit_module(H), rm), braided_yd(BG.module, rm, True),
                yd_direct_sum(B, unit_yd(H))]
        mods += [adjoint_yd(BG, comp.space, f"D{comp.index}") for comp in c.comps]
        mods += [to_yd(induce(comp, regular_comodule(comp)), rm) for comp in c.comps[:2]]
        _YD[c.name] = mods
    return _YD[c.name]


def bcomod_corpus(c):
    if c.name not in _BC:
        mods = [to_bcomod(M, c.rm) for M in yd_corpus(c)]
        mods += [component_bcomod(c.BG, comp.space, f"D{comp.index}") for comp in c.comps]
        mods += [component_comodule(comp) for comp in c.comps]
        mods += [induce(comp, regular_comodule(comp)) for comp in c.comps]
        _BC[c.name] = mods
    return _BC[c.name]


def dcomod_corpus(c, comp):
    """D-comodules in the category for one component: D itself, Ind(D), and D + D."""
    from weakhopf.comod import DComodule
    from weakhopf.yd import yd_direct_sum as _sum
    D = component_comodule(comp)
    M = induce(comp, regular_comodule(comp))
    DD = _sum(D, D)
    return [D, M, DComodule(DD.module, DD.coaction, comp, "D+D")]
