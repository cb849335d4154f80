"""Full acceptance battery, one test per criterion.

Runs the same randomized checks as ``grosimp suite`` at the default seed
and reports one pass/fail line for each.
"""

import pytest

from grosimp import properties


CRITERIA = (
    "simplicial-identities",
    "comparison-iso",
    "fiber-laws",
    "mapping-space-identities",
    "terminal-collapse",
    "bar-sizes",
    "bar-comparison",
    "localization",
    "triangle-identities",
    "cocartesian-checks",
    "tensor-compatibility",
    "colimit-universal",
)


@pytest.fixture(scope="module")
def battery():
    results = properties.run_all()
    assert sorted(r.name for r in results) == sorted(CRITERIA)
    return {r.name: r for r in results}


@pytest.mark.parametrize("name", CRITERIA)
def test_criterion(battery, name):
    res = battery[name]
    print(res.line())
    assert res.ok, res.line()
