import json
from fractions import Fraction

import pytest

from tauadic.normform import (BoxTooSmallError, GramForm,
                              NotPositiveDefiniteError,
                              enumerate_bruteforce_oracle,
                              enumerate_short_vectors, gram_form,
                              ldl_decompose, norm_sq)
from tauadic.ring import TAU, ZERO, ZTau, multiply, negate


def test_gram_coefficients():
    g = gram_form(1)
    assert g.diag == (2, 4, 8, 16)
    assert g.cross == {(0, 1): 1, (0, 2): 1, (0, 3): 7,
                       (1, 2): 2, (1, 3): 2, (2, 3): 4}
    g = gram_form(-1)
    assert g.diag == (2, 4, 8, 16)
    assert g.cross == {(0, 1): -1, (0, 2): 1, (0, 3): -7,
                       (1, 2): -2, (1, 3): 2, (2, 3): -4}


def test_gram_diagonal_is_mu_independent():
    for k in range(4):
        e = [0] * 4
        e[k] = 3
        assert gram_form(1)(e) == gram_form(-1)(e)


def test_norm_sq_examples():
    assert norm_sq(ZTau(1, 0, 0, 0), 1) == 2
    assert norm_sq(ZTau(1, 0, 0, 0), -1) == 2
    assert norm_sq(ZTau(1, 1, 0, 0), 1) == 7
    assert norm_sq(ZTau(1, 1, 0, 0), -1) == 5
    assert norm_sq(ZTau(2, 0, -1, -1), 1) == 20
    assert norm_sq(ZERO, 1) == 0


def test_norm_sq_matches_gram_form():
    for mu in (1, -1):
        g = gram_form(mu)
        for a in [ZTau(1, 2, 3, 4), ZTau(-5, 0, 7, -1), ZTau(9, -9, 2, 0)]:
            assert norm_sq(a, mu) == g(a)


def test_norm_invariance():
    for mu in (1, -1):
        for a in [ZTau(1, 2, 3, 4), ZTau(-5, 0, 7, -1), ZTau(0, 0, 0, 1)]:
            assert norm_sq(negate(a), mu) == norm_sq(a, mu)
            assert norm_sq(multiply(TAU, a, mu), mu) == 2 * norm_sq(a, mu)


def test_ldl_identity_for_diagonal_form():
    g = GramForm(mu=1, diag=(2, 4, 8, 16), cross={})
    l, d = ldl_decompose(g)
    assert d == [Fraction(2), Fraction(4), Fraction(8), Fraction(16)]
    for i in range(4):
        for j in range(i + 1, 4):
            assert l[i][j] == 0


def test_ldl_pivots_positive():
    for mu in (1, -1):
        _, d = ldl_decompose(gram_form(mu))
        assert all(p > 0 for p in d)


def test_ldl_rejects_indefinite_form():
    bad = GramForm(mu=1, diag=(1, 1, 1, 1), cross={(0, 1): 5})
    with pytest.raises(NotPositiveDefiniteError):
        ldl_decompose(bad)


def test_ldl_reconstructs_form():
    for mu in (1, -1):
        g = gram_form(mu)
        l, d = ldl_decompose(g)
        for x in [(1, 0, 0, 0), (1, -2, 3, -4), (7, 7, -7, 7), (0, 5, 0, -5)]:
            total = Fraction(0)
            for i in range(4):
                inner = x[i] + sum(l[i][j] * x[j] for j in range(i + 1, 4))
                total += d[i] * inner * inner
            assert total == g(x)


def test_enumeration_counts():
    assert len(enumerate_short_vectors(1, 20)) == 94
    assert len(enumerate_short_vectors(-1, 20)) == 94
    assert len(enumerate_short_vectors(1, 38)) == 300
    assert len(enumerate_short_vectors(-1, 38)) == 300


def test_enumeration_smallest_shell():
    got = enumerate_short_vectors(1, 2)
    assert got.element_set() == {ZTau(1, 0, 0, 0), ZTau(-1, 0, 0, 0)}


def test_enumeration_zero_bound_and_flag():
    assert len(enumerate_short_vectors(1, 0)) == 0
    with_zero = enumerate_short_vectors(1, 0, include_zero=True)
    assert with_zero.element_set() == {ZERO}
    assert len(enumerate_short_vectors(1, 1)) == 0  # minimum nonzero norm is 2


def test_enumeration_is_sorted_and_symmetric():
    found = enumerate_short_vectors(-1, 20)
    keys = [(n, e) for e, n in found.elements]
    assert keys == sorted(keys)
    elems = found.element_set()
    assert all(negate(e) in elems for e in elems)


def test_enumeration_matches_bruteforce():
    for mu in (1, -1):
        for bound in (0, 1, 2, 5, 10, 15, 20, 25, 38, 45, 50):
            fast = enumerate_short_vectors(mu, bound).element_set()
            slow = enumerate_bruteforce_oracle(mu, bound, 8).element_set()
            assert fast == slow, (mu, bound)


def test_norm_matches_root_embedding():
    # the form must agree with |alpha(w1)|^2 + |alpha(w2)|^2 for one root
    # per conjugate pair of the characteristic polynomial
    import random

    from tauadic.checks import _eval_at_root, characteristic_roots

    rng = random.Random(20)
    for mu in (1, -1):
        roots = characteristic_roots(mu)
        assert abs(roots[0].conjugate() - roots[1]) < 1e-12
        assert abs(roots[2].conjugate() - roots[3]) < 1e-12
        assert all(abs(abs(w) ** 2 - 2) < 1e-12 for w in roots)
        for _ in range(500):
            a = ZTau(*(rng.randint(-100, 100) for _ in range(4)))
            embedded = (abs(_eval_at_root(a, roots[0])) ** 2
                        + abs(_eval_at_root(a, roots[2])) ** 2)
            q = norm_sq(a, mu)
            assert abs(embedded - q) <= 1e-9 * max(1.0, q)


def test_bruteforce_box_guard():
    with pytest.raises(BoxTooSmallError):
        enumerate_bruteforce_oracle(1, 2, 1)
    with pytest.raises(ValueError):
        enumerate_bruteforce_oracle(1, 2, 0)


def test_short_vector_serialization():
    found = enumerate_short_vectors(1, 2)
    csv_text = found.to_csv()
    assert csv_text.splitlines()[0] == "s,t,u,v,norm_sq"
    assert csv_text.splitlines()[1:] == ["-1,0,0,0,2", "1,0,0,0,2"]
    obj = json.loads(found.to_json())
    assert obj == [{"element": [-1, 0, 0, 0], "norm_sq": 2},
                   {"element": [1, 0, 0, 0], "norm_sq": 2}]
