import itertools

import pytest

from kronnil.kostant import (
    KostantPartition,
    bilex_leq,
    dominance_leq,
    enumerate_gamma,
    enumerate_kostant,
    enumerate_lambda,
    kp_stats,
    kp_to_weight,
    parse_kp,
    rho,
    weight_to_kp,
)
from kronnil.roots import DimVector, beta, delta, gamma
from kronnil.symfun import partitions


def kp(*parts):
    return KostantPartition.from_parts(parts)


def qpp(max_height):
    for h in range(1, max_height + 1):
        for n in range(h // 2 + 1):
            yield DimVector(n, h - n)


class TestRho:
    def test_examples(self):
        assert rho(kp(beta(1), delta(2), beta(0))) == kp(beta(1), delta(1), delta(1), beta(0))
        assert rho(kp(beta(2), beta(0))) == kp(beta(2), beta(0))
        assert rho(kp(delta(3))) == kp(delta(1), delta(1), delta(1))

    def test_idempotent(self):
        for pi in enumerate_kostant(DimVector(3, 4)):
            assert rho(rho(pi)) == rho(pi)
            assert rho(pi).weight == pi.weight


class TestBilex:
    def test_example(self):
        pi, sigma = kp(beta(2), beta(0)), kp(beta(1), beta(1))
        assert bilex_leq(sigma, pi)
        assert bilex_leq(pi, pi)
        assert not bilex_leq(pi, sigma)

    def test_weight_mismatch(self):
        with pytest.raises(ValueError):
            bilex_leq(kp(beta(1)), kp(beta(2)))

    def test_partial_order_on_gamma(self):
        for b in qpp(12):
            g = enumerate_gamma(b)
            for x, y in itertools.product(g, repeat=2):
                if bilex_leq(x, y) and bilex_leq(y, x):
                    assert x == y
            for x, y, z in itertools.product(g, repeat=3):
                if bilex_leq(x, y) and bilex_leq(y, z):
                    assert bilex_leq(x, z)

    def test_preorder_on_all_kostant_partitions(self):
        # imaginary parts are compared through rho only
        ps = enumerate_kostant(DimVector(3, 3))
        assert len(ps) > 5
        for x, y, z in itertools.product(ps, repeat=3):
            if bilex_leq(x, y) and bilex_leq(y, z):
                assert bilex_leq(x, z)


class TestGamma:
    def test_examples(self):
        assert enumerate_gamma(DimVector(1, 2)) == [kp(beta(1))]
        assert enumerate_gamma(DimVector(1, 3)) == [kp(beta(1), beta(0))]
        assert enumerate_gamma(DimVector(2, 4)) == [kp(beta(2), beta(0)), kp(beta(1), beta(1))]

    def test_rejects_outside_cone(self):
        with pytest.raises(ValueError):
            enumerate_gamma(DimVector(3, 2))

    def test_count_is_partitions_with_at_most_r_parts(self):
        for b in qpp(14):
            assert len(enumerate_gamma(b)) == len(partitions(b.n, b.rank))

    def test_gamma_is_kostant_subset(self):
        for b in qpp(9):
            brute = [pi for pi in enumerate_kostant(b) if pi.in_gamma()]
            assert sorted(brute, key=str) == sorted(enumerate_gamma(b), key=str)


class TestStats:
    def test_examples(self):
        assert kp_stats(parse_kp("b2^1,b0^3")) == (2, 4, [3, 0, 1])
        n, r, _ = kp_stats(kp(*[beta(0)] * 5))
        assert (n, r) == (0, 5)
        n, r, _ = kp_stats(kp(beta(1), beta(1)))
        assert (n, r) == (2, 2)

    def test_rejects_non_beta(self):
        with pytest.raises(ValueError):
            kp_stats(kp(gamma(0), beta(1)))
        with pytest.raises(ValueError):
            kp_stats(kp(delta(1), beta(0)))


class TestBijection:
    def test_examples(self):
        assert kp_to_weight(kp(beta(1), beta(0))) == (1, 0)
        assert kp_to_weight(kp(beta(0), beta(0), beta(0))) == (0, 0, 0)
        assert kp_to_weight(kp(beta(2), beta(1), beta(1))) == (2, 1, 1)

    def test_bijection(self):
        for b in qpp(14):
            image = [kp_to_weight(pi) for pi in enumerate_gamma(b)]
            assert sorted(image) == sorted(enumerate_lambda(b))
            assert len(set(image)) == len(image)
            for pi in enumerate_gamma(b):
                assert weight_to_kp(kp_to_weight(pi)) == pi

    def test_rejects_outside_gamma(self):
        with pytest.raises(ValueError):
            kp_to_weight(kp(delta(1), beta(0)))


class TestDominance:
    def test_examples(self):
        assert dominance_leq((1, 1), (2, 0))
        assert dominance_leq((2, 1, 1), (2, 2, 0))
        assert not dominance_leq((2, 0), (1, 1))

    def test_errors(self):
        with pytest.raises(ValueError):
            dominance_leq((1, 0), (1,))
        with pytest.raises(ValueError):
            dominance_leq((1, 0), (2, 0))

    def test_dominance_implies_bilex(self):
        for b in qpp(12):
            for pi, sigma in itertools.product(enumerate_gamma(b), repeat=2):
                if dominance_leq(kp_to_weight(pi), kp_to_weight(sigma)):
                    assert bilex_leq(pi, sigma)


def test_tokens_roundtrip():
    for pi in enumerate_kostant(DimVector(3, 4)):
        assert parse_kp(pi.token) == pi
    assert parse_kp("b2^1,b0^3").token == "b2^1,b0^3"


def test_parts_must_be_sorted():
    with pytest.raises(ValueError):
        KostantPartition((beta(0), beta(1)))
