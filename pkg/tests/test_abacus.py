import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import moduli, partitions
from corespan.abacus import (
    abacus_words,
    boundary_index,
    core,
    core_by_rimhooks,
    core_charges,
    cores_up_to,
    enumerate_class,
    from_core_and_quotient,
    g_c,
    g_c_inv,
    hooks_divisible_count,
    in_kc,
    is_core,
    quotient,
    remove_rimhook,
    runner_position,
)
from corespan.errors import HookNotEqualC, NotACore, NuNotInKc
from corespan.partition import Partition, boundary_word, partitions_of, partitions_up_to

MU = (12, 12, 10, 8, 7, 4, 1, 1, 1)


@given(st.integers(-50, 50), moduli)
def test_runner_position_inverts_boundary_index(j, c):
    m = runner_position(j, c)
    assert boundary_index(j % c, m, c) == j


def test_runner_charges_of_mu():
    assert core_charges(MU, 2) == (2, -2)
    assert core(MU, 2) == (3, 2, 1)


def test_core_examples():
    assert core((4, 2, 1), 2) == (1,)
    assert core(MU, 1) == ()
    assert core((), 3) == ()


@given(partitions(), moduli)
def test_runner_words_interleave_back(lam, c):
    words = abacus_words(Partition(lam), c)
    assert words.interleave() == boundary_word(lam)
    assert sum(words.charges()) == 0


def test_hooks_divisible_count_examples():
    assert hooks_divisible_count((4, 2, 1), 2) == 3
    assert hooks_divisible_count(MU, 2) == 25


@given(partitions(), moduli)
def test_hooks_divisible_count_matches_cells(lam, c):
    expected = sum(1 for cell in oracles.cells(lam) if oracles.arm_leg_hook(lam, cell)[2] % c == 0)
    assert hooks_divisible_count(Partition(lam), c) == expected
    # the c-divisible hooks are exactly as many as the rim hooks stripped
    assert expected == oracles.weight(lam, c)


@pytest.mark.parametrize("c", [1, 2, 3, 4])
def test_core_matches_beta_number_oracle(c):
    for lam in partitions_up_to(12):
        assert core(lam, c) == oracles.core(lam, c)


@pytest.mark.parametrize("c", [2, 3])
def test_core_is_independent_of_removal_order(c):
    for lam in partitions_up_to(12):
        top = core_by_rimhooks(lam, c, "topmost")
        right = core_by_rimhooks(lam, c, "rightmost")
        assert top == right == core(lam, c)
        assert core_charges(top, c) == core_charges(lam, c)


def test_remove_rimhook():
    # the rim hook at (1, 0) of (2, 2) is the right column
    assert remove_rimhook((2, 2), (1, 0), 2) == (1, 1)
    assert remove_rimhook((1,), (0, 0), 1) == ()
    with pytest.raises(HookNotEqualC):
        remove_rimhook((2, 2), (0, 0), 2)


@given(partitions(), st.integers(2, 4))
def test_removing_a_rimhook_keeps_the_core(lam, c):
    lam = Partition(lam)
    for cell in oracles.cells(lam):
        if oracles.arm_leg_hook(lam, cell)[2] == c:
            smaller = remove_rimhook(lam, cell, c)
            assert smaller.size == lam.size - c
            assert core(smaller, c) == core(lam, c)


@given(partitions(), moduli)
def test_is_core(lam, c):
    assert is_core(Partition(lam), c) == oracles.is_core(lam, c)


def test_quotient_trivial_cases():
    assert quotient((4, 2, 1), 1) == ((4, 2, 1),)
    assert quotient((3, 2, 1), 2) == ((), ())


@pytest.mark.parametrize("c", [2, 3])
def test_core_and_quotient_round_trip(c):
    for lam in partitions_up_to(14):
        mu, quot = core(lam, c), quotient(lam, c)
        assert len(quot) == c
        assert lam.size == mu.size + c * sum(q.size for q in quot)
        assert from_core_and_quotient(mu, quot, c) == lam


def test_from_core_and_quotient_rejects_non_core():
    with pytest.raises(NotACore):
        from_core_and_quotient((2,), ((), ()), 2)
    assert from_core_and_quotient((2, 1), ((), ()), 2) == (2, 1)


def test_class_of_two_one():
    assert set(enumerate_class((2, 1), 2, 7)) == {
        (6, 1), (4, 3), (4, 1, 1, 1), (2, 2, 2, 1), (2, 1, 1, 1, 1, 1)}
    assert set(enumerate_class((), 1, 4)) == set(partitions_of(4))


@pytest.mark.parametrize("c", [2, 3])
def test_classes_partition_par_n(c):
    for n in range(12):
        by_core = {}
        for lam in oracles.partitions(n):
            by_core.setdefault(oracles.core(lam, c), set()).add(lam)
        for mu, members in by_core.items():
            assert set(enumerate_class(mu, c, n)) == members


def test_cores_up_to_frozen():
    # number of 2-cores (staircases) and 3-cores of each size up to 10
    assert [sum(1 for mu in cores_up_to(2, 10) if mu.size == n) for n in range(11)] == [
        1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]
    assert [sum(1 for mu in cores_up_to(3, 10) if mu.size == n) for n in range(11)] == [
        1, 1, 2, 0, 2, 1, 2, 0, 1, 2, 2]


def test_g_c_examples():
    lam = (7, 7, 4, 4, 4, 4, 4, 4, 4, 3, 2, 2, 2, 1)
    assert g_c(lam, 3) == ((4, 4, 2), (7, 7, 4, 3, 1))
    assert g_c_inv((4, 4, 2), (7, 7, 4, 3, 1), 3) == lam
    assert g_c((1, 1), 2) == ((1,), ())
    assert g_c_inv((1,), (), 2) == (1, 1)
    assert g_c_inv((), (3, 1), 2) == (3, 1)
    with pytest.raises(NuNotInKc):
        g_c_inv((), (1, 1), 2)


@pytest.mark.parametrize("c", [1, 2, 3, 4])
def test_g_c_is_a_bijection(c):
    for n in range(15):
        seen = set()
        for lam in partitions_of(n):
            xi, nu = g_c(lam, c)
            assert in_kc(nu, c)
            assert c * xi.size + nu.size == n
            assert core(nu, c) == core(lam, c)
            assert g_c_inv(xi, nu, c) == lam
            seen.add((xi, nu))
        assert len(seen) == len(partitions_of(n))
