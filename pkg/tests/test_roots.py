import random

import pytest

from kronnil.roots import (
    ALPHA0,
    ALPHA1,
    DELTA,
    DimVector,
    Ordering,
    Root,
    beta,
    convex_compare,
    delta,
    gamma,
    height,
    pairing,
    parse_root,
    positive_roots,
    root_from_dimvector,
)


def test_convex_compare_examples():
    assert convex_compare(gamma(0), gamma(1)) is Ordering.GREATER
    assert convex_compare(beta(1), beta(0)) is Ordering.GREATER
    assert convex_compare(delta(2), delta(3)) is Ordering.EQUIVALENT
    assert convex_compare(gamma(7), delta(1)) is Ordering.GREATER
    assert convex_compare(delta(5), beta(9)) is Ordering.GREATER


def test_height_examples():
    assert height(DELTA) == 2
    assert height(beta(2).dim) == 5
    assert height(ALPHA0) == 1


def test_pairing_examples():
    assert pairing(ALPHA0, ALPHA0) == 2
    assert pairing(ALPHA1, ALPHA1) == 2
    assert pairing(ALPHA0, ALPHA1) == -2
    assert pairing(DELTA, ALPHA0) == 0
    for n in range(5):
        for m in range(5):
            assert pairing(beta(n).dim, beta(m).dim) == 2


def test_dimension_vectors():
    assert gamma(2).dim == ALPHA1 + 2 * DELTA
    assert beta(2).dim == ALPHA0 + 2 * DELTA == DimVector(2, 3)
    assert delta(3).dim == DimVector(3, 3)
    assert beta(2).dim.rank == 1


def test_rank_decomposition():
    b = DimVector(2, 4)
    assert b.rank * ALPHA0 + b.n * DELTA == b


def test_delta_is_isotropic():
    rng = random.Random(0)
    for _ in range(100):
        v = DimVector(rng.randint(-20, 20), rng.randint(-20, 20))
        assert pairing(DELTA, v) == 0


def test_convexity_exhaustive():
    roots = positive_roots(16)
    for a in roots:
        for b in roots:
            s = root_from_dimvector(a.dim + b.dim)
            if s is None:
                continue
            if convex_compare(a, b) is not Ordering.LESS:
                assert convex_compare(a, s) is not Ordering.LESS
                assert convex_compare(s, b) is not Ordering.LESS


def test_root_tokens():
    for r in positive_roots(9):
        assert parse_root(r.token) == r
        assert root_from_dimvector(r.dim) == r
    with pytest.raises(ValueError):
        parse_root("x1")
    with pytest.raises(ValueError):
        Root("d", 0)


def test_non_roots():
    assert root_from_dimvector(DimVector(0, 2)) is None
    assert root_from_dimvector(DimVector(0, 0)) is None
