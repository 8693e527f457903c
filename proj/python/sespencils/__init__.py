from ._sespencils import (
    analyze_pencil,
    classes_bruteforce,
    classes_closed,
    companion_pencil_json,
    count_orbits,
    decomposable_pair_closed,
    decomposable_pair_orbits,
    dihedral_census,
    h_genus1,
    i_indecomposable,
    n_closed,
    stabilizer_order,
    sylow3_bijection_check,
)

__all__ = [
    "analyze_pencil",
    "classes_bruteforce",
    "classes_closed",
    "companion_pencil_json",
    "count_orbits",
    "decomposable_pair_closed",
    "decomposable_pair_orbits",
    "dihedral_census",
    "h_genus1",
    "i_indecomposable",
    "n_closed",
    "stabilizer_order",
    "sylow3_bijection_check",
]
