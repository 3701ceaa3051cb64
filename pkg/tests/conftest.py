import random

import pytest
from hypothesis import strategies as st

from loopsmith.constructions import (
    build_sts,
    cyclic_group,
    direct_product,
    elementary_abelian_two,
    klein_group,
    octonion_loop,
    random_factor_set,
    steiner_loop,
)
from loopsmith.core import loop_from_rows
from loopsmith.fixtures import FIXTURE_NAMES, load_fixture
from loopsmith.structure import relabel


@pytest.fixture(scope="session")
def fixtures():
    return {name: load_fixture(name) for name in FIXTURE_NAMES}


@pytest.fixture(scope="session")
def c_loop_fixtures(fixtures):
    return {k: v for k, v in fixtures.items() if k != "ipnuc12"}


def _base_loops():
    loops = [
        cyclic_group(1),
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        cyclic_group(6),
        klein_group(),
        elementary_abelian_two(3),
        steiner_loop(build_sts(7)),
        steiner_loop(build_sts(9)),
        direct_product(cyclic_group(2), cyclic_group(3)),
        octonion_loop(),
    ]
    loops.extend(load_fixture(name) for name in FIXTURE_NAMES)
    return loops


BASE_LOOPS = _base_loops()


@st.composite
def loops(draw, max_order=16):
    """A pool loop with labels shuffled by a random bijection fixing 0."""
    pool = [l for l in BASE_LOOPS if l.order <= max_order]
    loop = draw(st.sampled_from(pool))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    perm = list(range(1, loop.order))
    rng.shuffle(perm)
    return relabel(loop, (0, *perm))


@st.composite
def klein_z3_factor_sets(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_factor_set(klein_group(), cyclic_group(3), random.Random(seed))
