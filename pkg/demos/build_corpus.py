"""Regenerate the files under data/: tables, algebra files, the axiom-4 mutant and
user-module files for the blocks with d > 1."""

import sys
from pathlib import Path

from weakhopf.builders import (FieldSpec, build_drinfeld_double, build_group_algebra,
                               build_groupoid_algebra, cyclic_group, indiscrete_groupoid,
                               symmetric_group)
from weakhopf.comod import (end_algebra, induce, regular_comodule, right_module_from_submodule,
                            simple_submodule)
from weakhopf.braided import braided_group_build, decompose_braided_group
from weakhopf.fileio import dumps, modules_to_dict, write_algebra, write_table
from weakhopf.scalars import ONE
from weakhopf.wha import WeakHopfAlgebra, qt_verify

OUT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "data"


def user_modules(H, R):
    BG = braided_group_build(H, qt_verify(H, R))
    entries = []
    for comp in decompose_braided_group(BG):
        E = end_algebra(induce(comp, regular_comodule(comp)))
        for b in E.blocks:
            if b.d > 1:
                V = simple_submodule(E, b)
                entries.append((comp.index, b.index, right_module_from_submodule(E, V)))
    return modules_to_dict(entries, H.field)


def axiom4_mutant(H, R, g):
    """Same structure, but S(g) = g."""
    antipode = [dict(v) for v in H.antipode]
    antipode[g] = {g: ONE}
    return WeakHopfAlgebra(H.dim, H.mult, H.unit, H.comult, H.counit, antipode, H.field, H.labels), R


def main():
    OUT.mkdir(exist_ok=True)
    s3 = symmetric_group(3)
    write_table(OUT / "s3.table.json", s3)
    write_table(OUT / "z2.table.json", cyclic_group(2))
    write_table(OUT / "pair2.table.json", indiscrete_groupoid(2))

    H, R = build_group_algebra(s3, FieldSpec.cyclotomic(3))
    write_algebra(OUT / "s3.alg", H, R)
    (OUT / "s3.modules.json").write_text(dumps(user_modules(H, R)))
    cycle = H.labels.index("(1 2 3)")
    write_algebra(OUT / "broken.alg", *axiom4_mutant(H, R, cycle))

    H, R = build_groupoid_algebra(indiscrete_groupoid(2))
    write_algebra(OUT / "pair2.alg", H, R)
    (OUT / "pair2.modules.json").write_text(dumps(user_modules(H, R)))

    write_algebra(OUT / "dz2.alg", *build_drinfeld_double(cyclic_group(2)))
    write_algebra(OUT / "ds3.alg", *build_drinfeld_double(s3, FieldSpec.cyclotomic(3)))
    for p in sorted(OUT.iterdir()):
        print(p.name)


if __name__ == "__main__":
    main()
