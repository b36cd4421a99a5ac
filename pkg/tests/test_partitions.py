import pytest
from hypothesis import given

from strategies import partitions, skew_shapes
from verschiebung.partitions import (
    conjugate,
    contains,
    enumerate_z_asymmetric,
    format_partition,
    frobenius,
    from_frobenius,
    hook_lengths,
    is_z_asymmetric,
    normalize,
    parse_partition,
    partitions_of,
    partitions_up_to,
    rank,
    ribbon_info,
    shifted_rank,
    sub_partitions,
    z_asymmetric_counts,
    z_lambda,
)


def cells(lam):
    return {(i, j) for i, row in enumerate(lam) for j in range(row)}


def brute_conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for row in lam if row > j) for j in range(lam[0]))


def series_product(e, n):
    # prod_{i>=0} (1 + q^(e + 2i)) truncated at q^n, by plain polynomial multiplication
    poly = [1] + [0] * n
    k = e
    while k <= n:
        new = poly[:]
        for d in range(n - k + 1):
            new[d + k] += poly[d]
        poly = new
        k += 2
    return poly


class TestBasics:
    def test_conjugate_example(self):
        assert conjugate((6, 5, 5, 1)) == (4, 3, 3, 3, 3, 1)

    def test_conjugate_trivial(self):
        assert conjugate(()) == ()
        assert conjugate((3,)) == (1, 1, 1)

    def test_normalize_strips_zeros(self):
        assert normalize([3, 1, 0, 0]) == (3, 1)

    def test_normalize_rejects_increasing(self):
        with pytest.raises(ValueError):
            normalize([1, 2])

    def test_parse_and_format(self):
        assert parse_partition("6,5,5,1") == (6, 5, 5, 1)
        assert parse_partition("-") == ()
        assert format_partition((6, 5, 5, 1)) == "6,5,5,1"
        with pytest.raises(ValueError):
            parse_partition("a,b")

    def test_partition_counts(self):
        # p(n) for n = 0..12
        assert [len(partitions_of(n)) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]

    def test_z_lambda(self):
        assert z_lambda((2,)) == 2
        assert z_lambda((2, 1, 1)) == 4
        assert z_lambda((1, 1, 1)) == 6

    def test_involution_up_to_25(self):
        for n in range(26):
            for lam in partitions_of(n):
                assert conjugate(conjugate(lam)) == lam

    @given(partitions(max_size=20))
    def test_conjugate_matches_cells(self, lam):
        assert conjugate(lam) == brute_conjugate(lam)
        assert cells(conjugate(lam)) == {(j, i) for i, j in cells(lam)}


class TestFrobenius:
    def test_example(self):
        f = frobenius((6, 5, 5, 1))
        assert (tuple(f.arms), tuple(f.legs)) == ((5, 3, 2), (3, 1, 0))
        assert str(f) == "(5,3,2 | 3,1,0)"

    def test_trivial(self):
        assert tuple(frobenius(()).arms) == ()
        f = frobenius((2,))
        assert (tuple(f.arms), tuple(f.legs)) == ((1,), (0,))

    def test_round_trip_up_to_25(self):
        for n in range(26):
            for lam in partitions_of(n):
                f = frobenius(lam)
                assert from_frobenius(f.arms, f.legs) == lam
                assert len(f.arms) == rank(lam) == sum(1 for i, j in cells(lam) if i == j)

    def test_shifted_rank_examples(self):
        assert shifted_rank((6, 5, 5, 1), 2) == 1
        assert shifted_rank((6, 5, 5, 1), -3) == 2
        assert shifted_rank((), 5) == 0

    @given(partitions(max_size=16))
    def test_shifted_rank_definition(self, lam):
        assert shifted_rank(lam, 0) == rank(lam)
        for c in range(0, 4):
            assert shifted_rank(lam, c) == rank(lam[c:])
            cut = tuple(x - c for x in lam if x > c)
            assert shifted_rank(lam, -c) == rank(cut)


class TestHooks:
    def test_corner_hook(self):
        assert hook_lengths((6, 5, 5, 1))[0][0] == 9
        assert hook_lengths((1,)) == [[1]]
        assert hook_lengths((2, 1)) == [[3, 1], [1]]

    @given(partitions(max_size=16))
    def test_arm_plus_leg(self, lam):
        grid = hook_lengths(lam)
        conj = conjugate(lam)
        for i, row in enumerate(lam):
            for j in range(row):
                assert grid[i][j] == (row - j - 1) + (conj[j] - i - 1) + 1


class TestZAsymmetric:
    def test_example(self):
        assert is_z_asymmetric((6, 5, 5, 1), 2)

    def test_small_cases(self):
        assert is_z_asymmetric((2,), 1)
        assert list(enumerate_z_asymmetric(1, 2)) == [(), (2,)]
        assert list(enumerate_z_asymmetric(3, 0)) == [()]

    def test_empty_is_z_asymmetric_for_all_z(self):
        assert all(is_z_asymmetric((), z) for z in range(-6, 7))

    def test_z0_is_self_conjugate(self):
        for n in range(13):
            for lam in partitions_of(n):
                assert is_z_asymmetric(lam, 0) == (lam == conjugate(lam))

    def test_conjugation_law(self):
        for n in range(13):
            for lam in partitions_of(n):
                for z in range(-4, 5):
                    assert is_z_asymmetric(lam, z) == is_z_asymmetric(conjugate(lam), -z)

    def test_enumeration_matches_filter(self):
        for z in range(-3, 5):
            brute = sorted(lam for n in range(15) for lam in partitions_of(n) if is_z_asymmetric(lam, z))
            assert sorted(enumerate_z_asymmetric(z, 14)) == brute

    @pytest.mark.parametrize("z", range(0, 6))
    def test_generating_function_to_30(self, z):
        found = enumerate_z_asymmetric(z, 30)
        counts = [0] * 31
        for lam in found:
            counts[sum(lam)] += 1
        assert counts == series_product(1 + z, 30)
        assert z_asymmetric_counts(z, 30) == series_product(1 + z, 30)

    def test_self_conjugate_counts_small(self):
        # (-q;q^2)_inf = 1 + q + q^3 + q^4 + q^5 + q^6 + q^7 + 2q^8 + ...
        assert series_product(1, 8) == [1, 1, 0, 1, 1, 1, 1, 1, 2]
        assert [len([lam for lam in partitions_of(n) if lam == conjugate(lam)]) for n in range(9)] == \
            [1, 1, 0, 1, 1, 1, 1, 1, 2]


class TestRibbons:
    def test_ribbon_example(self):
        assert ribbon_info(((6, 5, 5, 1), (4, 4, 2, 1))) == (6, 2)

    def test_trivial(self):
        assert ribbon_info(((1,), ())) == (1, 0)
        assert ribbon_info(((2, 2), (2,))) == (2, 0)

    def test_non_ribbons(self):
        assert ribbon_info(((2, 2), ())) is None  # 2x2 block
        assert ribbon_info(((2, 1), (1,))) is None  # disconnected

    @given(skew_shapes(max_size=10))
    def test_ribbon_definition(self, shape):
        outer, inner = shape
        diff = cells(outer) - cells(inner)
        info = ribbon_info(shape)
        if not diff:
            return
        connected = _connected(diff)
        no_square = not any({(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)} <= diff for i, j in diff)
        if connected and no_square:
            assert info == (len(diff), len({i for i, _ in diff}) - 1)
        else:
            assert info is None


def _connected(cellset):
    cellset = set(cellset)
    start = next(iter(cellset))
    seen, stack = {start}, [start]
    while stack:
        i, j = stack.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return seen == cellset


def test_containment_and_subpartitions():
    for lam in partitions_up_to(8):
        subs = sub_partitions(lam)
        assert set(subs) == {mu for n in range(sum(lam) + 1) for mu in partitions_of(n) if contains(lam, mu)}
