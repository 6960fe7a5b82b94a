from __future__ import annotations

import math
from functools import lru_cache

import pytest

from finring import dsl
from finring.harness import generate_corpus, run_all


@lru_cache(maxsize=None)
def build(text: str):
    """Build-and-memoize a ring from its spec text (shared across tests)."""
    return dsl.build_ring(dsl.parse_spec(text))


def gcd_units(m: int) -> set[int]:
    return {a for a in range(m) if math.gcd(a, m) == 1}


@pytest.fixture(scope="session")
def default_corpus():
    return generate_corpus()


@pytest.fixture(scope="session")
def check_results(default_corpus):
    return run_all(default_corpus)
