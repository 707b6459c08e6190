import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_code
from cqbounds import codes
from cqbounds.bounds import gv_distance
from cqbounds.codes import BlockCode
from cqbounds.errors import IndexOutOfRange, LengthMismatch, NotBinary, OutOfRange, ParseError, ValidationError


def full_code(n):
    return BlockCode(tuple("".join(w) for w in itertools.product("01", repeat=n)))


def h2(x):
    return 0.0 if x in (0.0, 1.0) else -x * math.log2(x) - (1 - x) * math.log2(1 - x)


@st.composite
def binary_codes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    words = draw(st.sets(st.integers(0, 2**n - 1), min_size=1, max_size=min(2**n, 12)))
    return BlockCode(tuple(format(w, f"0{n}b") for w in sorted(words)))


def test_block_code_validation():
    with pytest.raises(LengthMismatch):
        BlockCode(("01", "011"))
    with pytest.raises(ValidationError):
        BlockCode(("01", "01"))
    with pytest.raises(ValidationError):
        BlockCode(("02",))
    code = BlockCode(("000", "111"))
    assert (code.n, code.M) == (3, 2)
    assert code.rate == pytest.approx(1 / 3)


def test_hamming_distance_examples():
    assert codes.hamming_distance("000", "000") == 0
    assert codes.hamming_distance("000", "111") == 3
    assert codes.hamming_distance("0101", "0011") == 2
    with pytest.raises(LengthMismatch):
        codes.hamming_distance("01", "011")


def test_multiplicity_examples():
    np.testing.assert_array_equal(codes.multiplicity_enumerators(BlockCode(("000", "111")), 0).counts, [1, 0, 0, 1])
    for m in (0, 5):
        np.testing.assert_array_equal(codes.multiplicity_enumerators(full_code(4), m).counts, [1, 4, 6, 4, 1])
    np.testing.assert_array_equal(codes.multiplicity_enumerators(BlockCode(("00", "01", "11")), 0).counts, [1, 1, 1])
    with pytest.raises(IndexOutOfRange):
        codes.multiplicity_enumerators(full_code(2), 4)


def test_average_multiplicity_examples():
    # rows by exhaustive enumeration: (1,1,1), (1,2,0), (1,1,1)
    np.testing.assert_allclose(codes.average_multiplicity(BlockCode(("00", "01", "11"))).counts, [1, 4 / 3, 2 / 3])
    np.testing.assert_array_equal(codes.average_multiplicity(BlockCode(("0110",))).counts, [1, 0, 0, 0, 0])
    lin = codes.linear_code([[1, 0, 1, 1], [0, 1, 0, 1]])
    np.testing.assert_allclose(codes.average_multiplicity(lin).counts, codes.multiplicity_enumerators(lin, 2).counts)


def test_weight_enumerator_examples():
    np.testing.assert_array_equal(codes.weight_enumerator(BlockCode(("000", "111"))).counts, [1, 0, 0, 1])
    np.testing.assert_array_equal(codes.weight_enumerator(full_code(3)).counts, [1, 3, 3, 1])
    np.testing.assert_array_equal(codes.weight_enumerator(BlockCode(("000", "011", "101", "110"))).counts, [1, 0, 3, 0])
    with pytest.raises(NotBinary):
        codes.weight_enumerator(BlockCode(("012",), q=3))


@settings(max_examples=50, deadline=None)
@given(binary_codes())
def test_profiles_sum_to_size(code):
    for m in range(code.M):
        prof = codes.multiplicity_enumerators(code, m)
        assert prof.counts.sum() == code.M
        assert prof.counts[0] == 1
    assert codes.average_multiplicity(code).total == pytest.approx(code.M, abs=1e-9)
    w = codes.weight_enumerator(code).counts
    assert w.sum() == code.M and w[0] in (0, 1) and w[-1] in (0, 1)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(2, 7), data=st.data())
def test_linear_codes_have_uniform_profiles(n, data):
    k = data.draw(st.integers(1, n))
    seed = data.draw(st.integers(0, 2**32))
    code = codes.random_linear_code(n, k, seed)
    assert codes.is_linear(code)
    weights = codes.weight_enumerator(code).counts
    for m in range(code.M):
        np.testing.assert_array_equal(codes.multiplicity_enumerators(code, m).counts, weights)
    exps = codes.ame(codes.average_multiplicity(code), n).exponents
    assert np.all(np.isneginf(exps) | (exps >= 0))


def test_is_linear_detects_nonlinear():
    assert not codes.is_linear(BlockCode(("00", "01", "11")))
    assert not codes.is_linear(BlockCode(("01", "10")))
    assert codes.is_linear(full_code(3))


def test_random_linear_code_reproducible():
    a = codes.random_linear_code(10, 4, seed=123)
    b = codes.random_linear_code(10, 4, seed=123)
    assert a.words == b.words
    assert a.M == 16
    assert all(w[:4] == format(i, "04b") for i, w in enumerate(a.words))


def test_rescaled_binomial_examples():
    np.testing.assert_array_equal(codes.rescaled_binomial_profile(5, 1.0).counts, [1, 5, 10, 10, 5, 1])
    np.testing.assert_allclose(codes.rescaled_binomial_profile(4, 0.5).counts, np.array([1, 4, 6, 4, 1]) / 4)
    assert codes.rescaled_binomial_profile(4, 0.5).total == pytest.approx(4.0)
    with pytest.raises(OutOfRange):
        codes.rescaled_binomial_profile(4, 0.0)


@pytest.mark.parametrize("n,rate", [(7, 0.3), (60, 0.5), (61, 0.5), (200, 0.25), (1024, 0.75)])
def test_rescaled_binomial_sums_to_size(n, rate):
    total = codes.rescaled_binomial_profile(n, rate).total
    assert total == pytest.approx(2.0 ** (n * rate), rel=1e-9)


@pytest.mark.parametrize("n", [5, 60, 61, 512, 1200])
@pytest.mark.parametrize("rate", [0.25, 0.75, 1.0])
def test_rescaled_exponents_match_profile(n, rate):
    direct = codes.rescaled_binomial_exponents(n, rate).exponents
    if n * rate < 1000:
        via_profile = codes.ame(codes.rescaled_binomial_profile(n, rate), n).exponents
        np.testing.assert_allclose(direct, via_profile, atol=1e-12)
    else:
        with pytest.raises(OutOfRange):
            codes.rescaled_binomial_profile(n, rate)
    assert direct[0] == pytest.approx(rate - 1, abs=1e-15)


def test_log2_binomial_regimes_agree():
    for n in (61, 100, 300):
        for d in (0, 1, n // 3, n // 2, n):
            assert codes.log2_binomial(n, d)[0] == pytest.approx(math.log2(math.comb(n, d)), abs=1e-9)


def exhaustive_random_linear_average(n, k):
    """Average weight enumerator over every A in G = [I | A]."""
    messages = np.array(list(itertools.product([0, 1], repeat=k)))
    total = np.zeros(n + 1)
    count = 0
    for bits in itertools.product([0, 1], repeat=k * (n - k)):
        a = np.array(bits, dtype=int).reshape(k, n - k)
        weights = messages.sum(axis=1) + (messages @ a % 2).sum(axis=1)
        total += np.bincount(weights, minlength=n + 1)
        count += 1
    return total / count


def test_random_linear_expected_examples():
    np.testing.assert_allclose(codes.random_linear_expected_weights(3, 1).counts, [1, 0.25, 0.5, 0.25], atol=1e-15)
    np.testing.assert_allclose(exhaustive_random_linear_average(3, 1), [1, 0.25, 0.5, 0.25], atol=1e-15)
    np.testing.assert_array_equal(codes.random_linear_expected_weights(5, 5).counts, [1, 5, 10, 10, 5, 1])
    with pytest.raises(OutOfRange):
        codes.random_linear_expected_weights(3, 4)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 3), (6, 2)])
def test_random_linear_expected_vs_exhaustive(n, k):
    expected = codes.random_linear_expected_weights(n, k).counts
    np.testing.assert_allclose(expected, exhaustive_random_linear_average(n, k), atol=1e-12)
    assert expected.sum() / 2**k == pytest.approx(1.0, abs=1e-12)


def test_random_linear_large_n_log_space():
    prof = codes.random_linear_expected_weights(200, 80)
    assert prof.total == pytest.approx(2.0**80, rel=1e-9)


def test_ame_examples():
    exps = codes.ame(codes.MultiplicityProfile([1, 0, 4, 0.5]), 2).exponents
    assert exps[0] == 0.0
    assert np.isneginf(exps[1]) and np.isneginf(exps[3]) is np.False_
    assert exps[2] == 1.0 and exps[3] == -0.5
    np.testing.assert_allclose(codes.ame(codes.MultiplicityProfile([1, 0, 4, 0.5]), 2).multiplicities(2), [1, 0, 4, 0.5])


def test_ame_full_code_approaches_entropy():
    errors = []
    for n in (64, 256, 1024):
        exps = codes.ame(codes.rescaled_binomial_profile(n, 1.0), n).exponents
        d = np.arange(n + 1)
        errors.append(np.max(np.abs(exps - np.array([h2(x) for x in d / n]))))
    # Stirling: the gap shrinks like log(n)/n
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] < 0.01


@pytest.mark.parametrize("delta", [0.1, 0.25, 0.5])
@pytest.mark.parametrize("rate", [0.25, 0.5, 0.75])
def test_ame_rescaled_binomial_converges(delta, rate):
    n = 512
    exps = codes.ame(codes.rescaled_binomial_profile(n, rate), n).exponents
    assert abs(exps[int(delta * n)] - (h2(delta) - (1 - rate))) <= 0.02


def test_iaame_examples():
    assert codes.iaame(0.5, 1.0) == 1.0
    assert codes.iaame(0.0, 0.3) == pytest.approx(0.3 - 1)
    assert codes.iaame(gv_distance(0.5), 0.5) == pytest.approx(0.0, abs=1e-12)
    assert codes.iaame(0.11, 0.5) == pytest.approx(0.0, abs=1e-3)
    with pytest.raises(OutOfRange):
        codes.iaame(1.5, 0.5)


def test_expurgated_iaame_examples():
    rate = 0.5
    gv = gv_distance(rate)
    assert np.isneginf(codes.expurgated_iaame(gv * 0.9, rate))
    assert np.isneginf(codes.expurgated_iaame(gv, rate))
    assert codes.expurgated_iaame(0.5, rate) == pytest.approx(rate)
    approach = [codes.expurgated_iaame(gv + eps, rate) for eps in (1e-2, 1e-4, 1e-6)]
    assert all(v > 0 for v in approach) and approach[0] > approach[1] > approach[2]
    assert approach[-1] < 1e-4


@given(st.floats(0, 1), st.floats(0, 1))
def test_expurgated_iaame_nonnegative_where_finite(delta, rate):
    v = codes.expurgated_iaame(delta, rate)
    assert np.isneginf(v) or v >= 0


def test_union_bound_examples():
    assert codes.union_bound(BlockCode(("000", "111")), 0.5) == 0.125
    code = BlockCode(("0110", "1011", "0000"))
    assert codes.union_bound(code, 0.0) == 0.0
    assert codes.union_bound(code, 1.0) == code.M - 1
    with pytest.raises(OutOfRange):
        codes.union_bound(code, 1.2)


@settings(max_examples=40, deadline=None)
@given(binary_codes(max_n=8), st.floats(0, 1))
def test_union_bound_two_routes(code, c):
    direct = codes.union_bound(code, c)
    via_profile = codes.union_bound_from_profile(codes.average_multiplicity(code), c)
    assert direct == pytest.approx(via_profile, abs=1e-10)


def test_parse_code_errors():
    assert codes.parse_code("# header\n010\n\n111\n").words == ("010", "111")
    with pytest.raises(ParseError) as info:
        codes.parse_code("010\n01\n")
    assert info.value.line == 2
    with pytest.raises(ParseError) as info:
        codes.parse_code("010\n111\n010\n")
    assert info.value.line == 3
    with pytest.raises(ParseError):
        codes.parse_code("01x\n")
    with pytest.raises(ParseError):
        codes.parse_code("\n")


def test_code_file_round_trip(tmp_path, rng):
    code = random_code(rng, 6, 9)
    path = tmp_path / "code.txt"
    path.write_text(codes.format_code(code))
    assert codes.load_code(path).words == code.words
