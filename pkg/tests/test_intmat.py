"""Smith normal form and lattice utilities."""

from hypothesis import given, settings, strategies as st

from logmin.monoid_kernel import intmat


def mat_strategy(max_dim=6, lo=-9, hi=9):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            )
        )
    )


def test_identity_2x2():
    snf = intmat.smith_normal_form(intmat.identity(2))
    assert snf.d == intmat.identity(2)


def test_diag_2_3_gives_1_6():
    a = [[2, 0], [0, 3]]
    snf = intmat.smith_normal_form(a)
    assert snf.diagonal == [1, 6]
    assert intmat.mat_mul(intmat.mat_mul(snf.u, a), snf.v) == snf.d
    assert intmat.det_in_units(snf.u)
    assert intmat.det_in_units(snf.v)


def test_zero_1x1():
    snf = intmat.smith_normal_form([[0]])
    assert snf.d == [[0]]


@settings(max_examples=200, deadline=None)
@given(mat_strategy())
def test_snf_invariants(a):
    snf = intmat.smith_normal_form(a)
    m, n = intmat.shape(a)
    # U A V == D
    assert intmat.mat_mul(intmat.mat_mul(snf.u, a), snf.v) == snf.d
    # D diagonal, nonnegative, divisibility chain
    for i in range(m):
        for j in range(n):
            if i != j:
                assert snf.d[i][j] == 0
    diag = snf.diagonal
    assert all(x >= 0 for x in diag)
    for x, y in zip(diag, diag[1:]):
        if x == 0:
            assert y == 0
        else:
            assert y % x == 0
    # transforms unimodular, tracked inverses correct
    assert intmat.det_in_units(snf.u)
    assert intmat.det_in_units(snf.v)
    assert intmat.mat_mul(snf.u, snf.u_inv) == intmat.identity(m)
    assert intmat.mat_mul(snf.v_inv, snf.v) == intmat.identity(n)


@settings(max_examples=100, deadline=None)
@given(mat_strategy(max_dim=4, lo=-5, hi=5))
def test_kernel_basis_annihilates(a):
    for k in intmat.kernel_basis(a):
        assert any(x != 0 for x in k)
        assert all(x == 0 for x in intmat.mat_vec(a, k))


@settings(max_examples=100, deadline=None)
@given(mat_strategy(max_dim=4, lo=-5, hi=5), st.data())
def test_solve_int_roundtrip(a, data):
    m, n = intmat.shape(a)
    x = data.draw(st.lists(st.integers(-4, 4), min_size=n, max_size=n))
    b = intmat.mat_vec(a, x)
    sol = intmat.solve_int(a, b)
    assert sol is not None
    assert intmat.mat_vec(a, sol) == b


def test_solve_int_infeasible():
    assert intmat.solve_int([[2]], [3]) is None
    assert intmat.solve_int([[0]], [1]) is None


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=0, max_size=4))
def test_saturated_span_contains_vectors(vectors):
    basis = intmat.saturated_span_basis(vectors, 3)
    if basis:
        bmat = intmat.from_columns(basis, 3)
        for v in vectors:
            assert intmat.solve_int(bmat, v) is not None
    else:
        assert all(all(x == 0 for x in v) for v in vectors)


def test_saturated_span_is_saturated():
    # span of (2, 0) saturates to the full first axis
    basis = intmat.saturated_span_basis([[2, 0]], 2)
    bmat = intmat.from_columns(basis, 2)
    assert intmat.solve_int(bmat, [1, 0]) is not None
    assert intmat.solve_int(bmat, [0, 1]) is None
