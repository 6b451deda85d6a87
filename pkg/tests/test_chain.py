import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra import numpy as hnp

from bornchain.chain import (
    DotChain,
    QuantumState,
    RegionPartition,
    build_chain,
    regional_norms,
    total_norm,
)


def test_build_chain_shapes():
    pair = build_chain([0, 0], [1])
    assert pair.site_count == 2
    np.testing.assert_array_equal(pair.hamiltonian(), [[0, -1], [-1, 0]])

    three = build_chain([0, 0, 0], [1, 0])
    assert [list(r) for r in three.components()] == [[0, 1], [2]]

    single = build_chain([0], [])
    assert single.site_count == 1
    assert single.hamiltonian().shape == (1, 1)


@pytest.mark.parametrize("on_site, hopping", [([0, 0], []), ([0, 0], [1, 1]), ([], [])])
def test_build_chain_rejects_bad_lengths(on_site, hopping):
    with pytest.raises(ValueError):
        build_chain(on_site, hopping)


def test_hamiltonian_is_symmetric(rng):
    chain = build_chain(rng.normal(size=7), rng.normal(size=6))
    h = chain.hamiltonian()
    np.testing.assert_array_equal(h, h.T)


def test_regional_norms():
    lr = RegionPartition.blocks(1, 1)
    assert regional_norms([1, 2], lr) == {"L": 1.0, "R": 4.0}
    assert regional_norms([1, 0], lr) == {"L": 1.0, "R": 0.0}
    assert regional_norms([1, 1], lr) == {"L": 1.0, "R": 1.0}


def test_regional_norms_size_mismatch():
    with pytest.raises(IndexError):
        regional_norms([1, 2, 3], RegionPartition.blocks(1, 1))


def test_total_norm():
    assert total_norm([1, 3]) == 10
    assert total_norm([0, 0, 0]) == 0
    assert total_norm([1 / np.sqrt(2), 1j / np.sqrt(2)]) == pytest.approx(1, abs=1e-15)


@pytest.mark.parametrize("regions", [
    {"L": (0, 1), "R": (1, 2)},   # overlap
    {"L": (0,), "R": (2,)},       # gap
    {"L": (-1,), "R": (0,)},
])
def test_partition_validation(regions):
    with pytest.raises(ValueError):
        RegionPartition(regions)


def test_partition_isolation():
    part = RegionPartition.blocks(2, 2)
    assert part.crossing_bonds() == [1]
    assert part.is_isolated(build_chain([0] * 4, [1, 0, 3]))
    assert not part.is_isolated(build_chain([0] * 4, [1, 1e-300, 3]))


def test_state_is_immutable():
    s = QuantumState([1, 2])
    with pytest.raises(ValueError):
        s.amplitudes[0] = 5


complex_vectors = hnp.arrays(
    np.complex128,
    st.integers(1, 40),
    elements=st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False),
)


@given(complex_vectors, st.data())
def test_regional_norms_sum_to_total(amps, data):
    labels = data.draw(st.lists(st.sampled_from("ABC"), min_size=amps.size, max_size=amps.size))
    regions = {}
    for j, lab in enumerate(labels):
        regions.setdefault(lab, []).append(j)
    part = RegionPartition(regions)
    total = total_norm(amps)
    assert sum(regional_norms(amps, part).values()) == pytest.approx(total, rel=1e-12, abs=1e-300)


unit_box_vectors = hnp.arrays(
    np.complex128,
    st.integers(1, 40),
    elements=st.complex_numbers(max_magnitude=1, allow_nan=False, allow_infinity=False),
)


@given(unit_box_vectors, st.floats(0, 2 * np.pi))
def test_total_norm_phase_invariant(amps, phi):
    rotated = amps * cmath.exp(1j * phi)
    assert abs(total_norm(rotated) - total_norm(amps)) <= 1e-12
