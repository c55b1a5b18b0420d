from pathlib import Path

import pytest

from pbzlogic import KnowledgeBase, Orthopair, Universe

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def demo_csv() -> Path:
    return DATA_DIR / "demo.csv"


@pytest.fixture
def six_universe() -> Universe:
    return Universe.of("o1", "o2", "o3", "o4", "o5", "o6")


@pytest.fixture
def six_kb(six_universe) -> KnowledgeBase:
    u = six_universe
    return KnowledgeBase.from_partition(
        u, [u.subset(["o1", "o2"]), u.subset(["o3", "o4"]), u.subset(["o5", "o6"])]
    )


@pytest.fixture
def six_pair(six_universe) -> Orthopair:
    return Orthopair.from_names(six_universe, ["o1", "o2", "o3"], ["o4", "o5"])
