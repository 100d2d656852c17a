import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kusub.io import (build, bundled_corpus_dir, corpus_files,  # noqa: E402
                      load_group_file)
from kusub.lattice import SubgroupLattice  # noqa: E402

DATA = Path(__file__).parent / "data"


@lru_cache(maxsize=None)
def lattice(expr):
    """Lattice of a builder expression, cached across tests."""
    return SubgroupLattice(build(expr))


@lru_cache(maxsize=None)
def corpus_lattice(name):
    for path in corpus_files(bundled_corpus_dir()):
        if path.stem == name:
            return SubgroupLattice(load_group_file(path).group())
    raise KeyError(name)


@lru_cache(maxsize=None)
def _corpus():
    out = []
    for path in corpus_files(bundled_corpus_dir()):
        src = load_group_file(path)
        out.append((src.name, SubgroupLattice(src.group())))
    return tuple(out)


@pytest.fixture(scope="session")
def corpus():
    return list(_corpus())


def sub_by_gens(L, *cycle_strs):
    """Index of the subgroup generated by permutations written in cycle notation."""
    from kusub.io import parse_cycles, permutation_from_cycles
    G = L.group
    idx = [G.element_index(permutation_from_cycles(G.degree, parse_cycles(c))) for c in cycle_strs]
    return L.lookup(L._closure([0], idx))
