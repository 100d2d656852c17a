"""Finite permutation groups, subgroup lattices, and K-U-subnormality.

The package enumerates complete subgroup lattices of small groups and
decides, by exhaustive search, which n-maximal subgroups are subnormal in
Kegel's sense with respect to the supersoluble formation.
"""
from ._kernels import backend_name
from .classifier import (ClassificationReport, TypeLabel, classify,
                         recognize_theorem_a, recognize_theorem_b,
                         recognize_theorem_c, recognize_theorem_d,
                         verify_corpus)
from .errors import GroupError, InputError
from .io import GroupSource, build, emit_report, load_group_file
from .lattice import SubgroupLattice, all_subgroups
from .perm import Group, Permutation, group_from_generators

__all__ = [
    "ClassificationReport", "Group", "GroupError", "GroupSource", "InputError",
    "Permutation", "SubgroupLattice", "TypeLabel", "all_subgroups", "backend_name",
    "build", "classify", "emit_report", "group_from_generators", "load_group_file",
    "recognize_theorem_a", "recognize_theorem_b", "recognize_theorem_c",
    "recognize_theorem_d", "verify_corpus",
]
