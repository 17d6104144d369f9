import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from helpkit.report import load_bundled_table


@pytest.fixture(scope="session")
def a5():
    return load_bundled_table("a5")


@pytest.fixture(scope="session")
def s3():
    return load_bundled_table("s3")


@pytest.fixture(scope="session")
def co1():
    return load_bundled_table("co1")


@pytest.fixture(scope="session")
def co2():
    return load_bundled_table("co2")


@pytest.fixture(scope="session")
def co3():
    return load_bundled_table("co3")


@pytest.fixture(scope="session")
def tables(a5, s3, co1, co2, co3):
    return {"a5": a5, "s3": s3, "co1": co1, "co2": co2, "co3": co3}
