import os
import logging
import pytest
import numpy as np
from pathlib import Path
from dotenv import load_dotenv
from utils.core.models import CuttingPlan, Instance, Lay
from utils.core.files import save_instance, save_plan
from utils.bench.generator import FIGURE_LENGTHS

# Load environment variables
load_dotenv(override=True)

RUN_SLOW = os.getenv("HFSC_RUN_SLOW") == "1"

slow = pytest.mark.skipif(not RUN_SLOW, reason="set HFSC_RUN_SLOW=1 to run full-scale benchmark tests")


def make_instance(
    demand: list[list[int]],
    lengths: list[int],
    bed_length: int = 720,
    bed_height: int = 160,
    name: str = "test",
) -> Instance:
    return Instance(
        name=name,
        bed_length=bed_length,
        bed_height=bed_height,
        lengths=tuple(lengths),
        demand=tuple(tuple(row) for row in demand),
    )


def random_instance(rng: np.random.Generator, name: str = "random") -> Instance:
    """
    A desk-scale instance: up to 10 figures and 3 fabric types, demands up
    to 50 and a bed of at most 120×20, with some zero SKUs mixed in.
    Templates may be as long as the bed.
    """
    g = int(rng.integers(1, 11))
    f = int(rng.integers(1, 4))
    bed_length = int(rng.integers(20, 121))
    bed_height = int(rng.integers(3, 21))
    lengths = rng.integers(1, bed_length + 1, size=g)
    demand = rng.integers(0, 51, size=(g, f))
    demand[rng.random(size=(g, f)) < 0.2] = 0
    if not demand.any():
        demand[0, 0] = 1
    return make_instance(demand.tolist(), lengths.tolist(), bed_length, bed_height, name=name)


@pytest.fixture(autouse=True)
def hfsc_logger_level():
    """Keep the project logger at DEBUG so caplog sees everything."""
    logger = logging.getLogger("hfsc")
    previous = logger.level
    logger.setLevel(logging.DEBUG)
    yield
    logger.setLevel(previous)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def single_sku_instance() -> Instance:
    """g=f=1, demand [[4]], lengths [100], bed 720×160."""
    return make_instance([[4]], [100], name="single")


@pytest.fixture
def single_sku_plan(single_sku_instance: Instance) -> CuttingPlan:
    return CuttingPlan.from_lays(single_sku_instance, [Lay(heights=(4,), counts=(1,))])


@pytest.fixture
def small_instance() -> Instance:
    """Two figures, two fabric types, room for a couple of lays."""
    return make_instance([[6, 2], [4, 0]], [2, 3], bed_length=12, bed_height=5, name="small")


@pytest.fixture
def instance_file(tmp_path: Path, single_sku_instance: Instance) -> Path:
    return save_instance(single_sku_instance, tmp_path / "single.json")


@pytest.fixture
def plan_file(tmp_path: Path, single_sku_plan: CuttingPlan) -> Path:
    return save_plan(single_sku_plan, tmp_path / "single_plan.json")


@pytest.fixture
def full_scale_lengths() -> list[int]:
    """Template lengths of the 30 benchmark garment figures."""
    return list(FIGURE_LENGTHS)
