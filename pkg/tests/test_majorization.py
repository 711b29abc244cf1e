"""Majorization relations and Schur-convexity certification."""

import pytest
from hypothesis import given, strategies as st

from ordrel import (
    ParameterDomainError,
    majorizes,
    monotone_schur_implication,
    schur_certify,
    weak_submajorizes,
    weak_supermajorizes,
)

vecs = st.lists(st.floats(min_value=-5.0, max_value=5.0), min_size=2, max_size=5)


class TestRelations:
    def test_textbook_examples(self):
        # mean vector is majorized by anything with the same sum
        assert majorizes((2.0, 2.0, 2.0), (1.0, 2.0, 3.0))
        assert not majorizes((1.0, 2.0, 3.0), (2.0, 2.0, 2.0))
        # different sums never majorize
        assert not majorizes((1.0, 1.0), (1.0, 2.0))

    def test_weak_sub(self):
        # entrywise smaller (descending prefix sums smaller) qualifies
        assert weak_submajorizes((1.0, 2.0), (1.5, 2.5))
        assert not weak_submajorizes((1.5, 2.5), (1.0, 2.0))
        assert weak_submajorizes((2.0, 2.0), (1.0, 3.5))

    def test_weak_super(self):
        # entrywise larger (ascending prefix sums larger) qualifies
        assert weak_supermajorizes((1.5, 2.5), (1.0, 2.0))
        assert not weak_supermajorizes((1.0, 2.0), (1.5, 2.5))
        assert weak_supermajorizes((2.0, 2.0), (0.5, 3.0))

    def test_validation(self):
        with pytest.raises(ParameterDomainError):
            majorizes((1.0,), (1.0,))
        with pytest.raises(ParameterDomainError):
            majorizes((1.0, 2.0), (1.0, 2.0, 3.0))
        with pytest.raises(ParameterDomainError):
            weak_submajorizes((float("nan"), 1.0), (1.0, 1.0))

    @given(vecs)
    def test_reflexive(self, a):
        assert majorizes(a, a)
        assert weak_submajorizes(a, a)
        assert weak_supermajorizes(a, a)

    @given(vecs)
    def test_permutation_invariant(self, a):
        assert majorizes(a, list(reversed(a)))

    @given(vecs)
    def test_majorization_implies_both_weak_forms(self, a):
        b = list(reversed(sorted(a)))
        if majorizes(a, b):
            assert weak_submajorizes(a, b)
            assert weak_supermajorizes(a, b)

    @given(vecs, st.floats(min_value=0.01, max_value=2.0))
    def test_shift_gives_weak_relations(self, a, c):
        up = [v + c for v in a]
        assert weak_submajorizes(a, up)
        assert weak_supermajorizes(up, a)


class TestSchurCertify:
    def test_sum_of_squares_convex(self):
        cert = schur_certify(lambda a: sum(x * x for x in a),
                             [(0.0, 3.0)] * 3, mode="convex", samples=100, seed=1)
        assert cert.certified
        assert cert.min_delta >= -1e-7

    def test_product_concave_on_positives(self):
        cert = schur_certify(lambda a: a[0] * a[1] * a[2],
                             [(0.5, 3.0)] * 3, mode="concave", samples=100, seed=2)
        assert cert.certified

    def test_refutation(self):
        cert = schur_certify(lambda a: sum(x * x for x in a),
                             [(0.5, 3.0)] * 2, mode="concave", samples=50, seed=3)
        assert cert.verdict == "refuted"
        assert cert.witness is not None

    def test_asymmetric_function_rejected(self):
        with pytest.raises(ParameterDomainError):
            schur_certify(lambda a: a[0] + 2.0 * a[1], [(0.0, 1.0)] * 2,
                          samples=10, seed=4)

    def test_seed_reproducible(self):
        f = lambda a: sum(x * x for x in a)
        c1 = schur_certify(f, [(0.0, 2.0)] * 2, samples=30, seed=9)
        c2 = schur_certify(f, [(0.0, 2.0)] * 2, samples=30, seed=9)
        assert c1 == c2

    def test_json(self):
        cert = schur_certify(lambda a: sum(a), [(0.0, 1.0)] * 2, samples=20, seed=0)
        obj = cert.to_json()
        assert obj["verdict"] == "certified"
        assert obj["samples"] == 20


class TestImplication:
    def test_increasing_convex_uses_submajorization(self):
        f = lambda a: sum(x * x for x in a)
        res = monotone_schur_implication(f, (1.0, 2.0), (1.5, 2.5), "increasing")
        assert res.relation == "submajorize"
        assert res.confirmed and res.f_a <= res.f_b

    def test_decreasing_convex_uses_supermajorization(self):
        f = lambda a: sum(1.0 / x for x in a)
        res = monotone_schur_implication(f, (2.0, 3.0), (1.0, 2.0), "decreasing")
        assert res.relation == "supermajorize"
        assert res.confirmed

    def test_not_applicable(self):
        f = lambda a: sum(a)
        res = monotone_schur_implication(f, (5.0, 5.0), (1.0, 1.0), "increasing")
        assert res.relation is None and not res.confirmed

    def test_bad_monotonicity(self):
        with pytest.raises(ParameterDomainError):
            monotone_schur_implication(sum, (1.0, 2.0), (1.0, 2.0), "sideways")
