import pytest

from grosimp.category import chain_category, discrete_category, terminal_category
from grosimp.diagram import Diagram, constant_diagram, constant_marked_diagram
from grosimp.homs import enumerate_cell_maps
from grosimp.marked import flat, sharp
from grosimp.simplicial import standard_simplex

BOUND = 3


@pytest.fixture(scope="session")
def pt():
    return standard_simplex(0, BOUND)


@pytest.fixture(scope="session")
def seg():
    return standard_simplex(1, BOUND)


@pytest.fixture(scope="session")
def chain1():
    return chain_category(1)


@pytest.fixture(scope="session")
def chain2():
    return chain_category(2)


@pytest.fixture(scope="session")
def inclusion_diagram(pt, seg, chain1):
    """Point into an interval: the structure map is injective."""
    from grosimp.simplicial import SimplicialMap
    end = [m.as_simplicial_map() for m in enumerate_cell_maps(pt, seg)
           if m.as_simplicial_map().apply(0, (0,)) == (1,)][0]
    C = chain1
    return Diagram(
        C,
        {0: pt, 1: seg},
        {C.identity[0]: SimplicialMap.identity(pt),
         C.identity[1]: SimplicialMap.identity(seg),
         (0, 1): end},
        marked=False,
    )


@pytest.fixture(scope="session")
def marked_inclusion_diagram(pt, seg, chain1, inclusion_diagram):
    from grosimp.marked import MarkedMap
    C = chain1
    mp, ms = flat(pt), flat(seg)
    end = inclusion_diagram.structure_map((0, 1))
    return Diagram(
        C,
        {0: mp, 1: ms},
        {C.identity[0]: MarkedMap.identity(mp),
         C.identity[1]: MarkedMap.identity(ms),
         (0, 1): MarkedMap(mp, ms, end)},
        marked=True,
    )
