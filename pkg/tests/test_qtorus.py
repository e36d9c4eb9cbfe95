import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcluster.qarith import QLaurent
from qcluster.qtorus import (
    SkewForm,
    TorusElem,
    ordered_product,
    parse_torus_elem,
    render_torus_elem,
    unit_vector,
    vec_add,
    vec_neg,
)

# the skew form of the rank-2 principal example, used as a workhorse
LAM4 = SkewForm([
    [0, 0, -2, 0],
    [0, 0, 0, -1],
    [2, 0, 0, -2],
    [0, 1, 2, 0],
])


def skew_forms(dim):
    upper = st.lists(
        st.integers(min_value=-3, max_value=3),
        min_size=dim * (dim - 1) // 2,
        max_size=dim * (dim - 1) // 2,
    )

    def build(entries):
        rows = [[0] * dim for _ in range(dim)]
        it = iter(entries)
        for i in range(dim):
            for j in range(i + 1, dim):
                value = next(it)
                rows[i][j] = value
                rows[j][i] = -value
        return SkewForm(rows)

    return upper.map(build)


def exp_vecs(dim):
    return st.tuples(*([st.integers(min_value=-3, max_value=3)] * dim))


def elements(form, max_terms=3):
    dim = form.dim
    coeffs = st.dictionaries(
        st.integers(min_value=-4, max_value=4),
        st.integers(min_value=-3, max_value=3),
        max_size=2,
    ).map(QLaurent)
    return st.dictionaries(exp_vecs(dim), coeffs, max_size=max_terms).map(
        lambda terms: TorusElem(form, terms)
    )


class TestSkewForm:
    def test_rejects_nonskew(self):
        with pytest.raises(ValueError):
            SkewForm([[0, 1], [1, 0]])
        with pytest.raises(ValueError):
            SkewForm([[1, 0], [0, 0]])
        with pytest.raises(ValueError):
            SkewForm([[0, 1, 0], [-1, 0, 0]])

    def test_pairing_bilinear_and_alternating(self):
        form = LAM4
        e = (1, -2, 0, 3)
        f = (0, 1, 1, -1)
        g = (2, 0, -1, 0)
        assert form.pairing(vec_add(e, f), g) == form.pairing(e, g) + form.pairing(f, g)
        assert form.pairing(e, e) == 0
        assert form.pairing(e, f) == -form.pairing(f, e)


class TestMonomials:
    def test_unit(self):
        assert TorusElem.monomial(LAM4, (0, 0, 0, 0), 1) == TorusElem.unit(LAM4)

    def test_generator(self):
        assert TorusElem.generator(LAM4, 2) == TorusElem.monomial(LAM4, (0, 1, 0, 0), 1)

    def test_zero_coefficient_gives_zero(self):
        assert TorusElem.monomial(LAM4, (1, 0, 0, 0), 0).is_zero()

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            TorusElem.monomial(LAM4, (1, 0, 0), 1)


class TestLinear:
    def test_cancellation(self):
        a = TorusElem.monomial(LAM4, (1, 2, -1, 0), QLaurent({1: 3}))
        assert (a - a).is_zero()

    def test_identity(self):
        a = TorusElem.monomial(LAM4, (0, 1, 0, 1), 1)
        assert a + TorusElem.zero(LAM4) == a

    def test_scale_by_commutator_coefficient(self):
        # the witness (q^(3/2) - q^(-1/2)) x2 x4 assembled by scaling
        word = ordered_product(LAM4, (0, 1, 0, 1))
        scaled = word.scale(QLaurent({3: 1, -1: -1}))
        assert scaled.term_count() == 1
        assert scaled.coefficient((0, 1, 0, 1)) == QLaurent({2: 1, -2: -1})

    def test_cross_form_refused(self):
        other = SkewForm([[0, 1], [-1, 0]])
        with pytest.raises(ValueError):
            TorusElem.unit(LAM4) + TorusElem.unit(other)
        with pytest.raises(ValueError):
            TorusElem.unit(LAM4) * TorusElem.unit(other)


class TestTwistedProduct:
    def test_generator_pair_example(self):
        # x1 * x3 = q^(lambda_13/2) X^(e1+e3) with lambda_13 = -2
        x1 = TorusElem.generator(LAM4, 1)
        x3 = TorusElem.generator(LAM4, 3)
        assert x1 * x3 == TorusElem.monomial(LAM4, (1, 0, 1, 0), QLaurent({-2: 1}))

    def test_monomial_inverse(self):
        e = (2, -1, 3, 0)
        mono = TorusElem.monomial(LAM4, e, 1)
        inv = TorusElem.monomial(LAM4, vec_neg(e), 1)
        assert mono * inv == TorusElem.unit(LAM4)
        assert mono.inverse_monomial() == inv

    def test_exchange_relation_value(self):
        # x2 * (X^(1,-1,0,1) + X^(0,-1,0,0)) = q^(-1/2) x1 x4 + 1
        x2 = TorusElem.generator(LAM4, 2)
        y2 = TorusElem(LAM4, {(1, -1, 0, 1): 1, (0, -1, 0, 0): 1})
        expected = ordered_product(LAM4, (1, 0, 0, 1)).scale(QLaurent({-1: 1})) + TorusElem.unit(LAM4)
        assert x2 * y2 == expected

    @given(st.integers(min_value=1, max_value=6).flatmap(
        lambda dim: st.tuples(skew_forms(dim), exp_vecs(dim), exp_vecs(dim))
    ))
    @settings(max_examples=80)
    def test_basis_multiplication_rule(self, drawn):
        form, e, f = drawn
        lhs = TorusElem.monomial(form, e, 1) * TorusElem.monomial(form, f, 1)
        twist = QLaurent.q_power(form.pairing(e, f))
        assert lhs == TorusElem.monomial(form, vec_add(e, f), twist)

    def test_quasi_commutation_all_pairs(self):
        for i in range(1, 5):
            for j in range(1, 5):
                xi = TorusElem.generator(LAM4, i)
                xj = TorusElem.generator(LAM4, j)
                twist = QLaurent.q_power(2 * LAM4.entry(i, j))
                assert xi * xj == (xj * xi).scale(twist)

    @given(skew_forms(3), st.data())
    @settings(max_examples=40, deadline=None)
    def test_associative_and_distributive(self, form, data):
        a = data.draw(elements(form))
        b = data.draw(elements(form))
        c = data.draw(elements(form))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    def test_power_of_monomial(self):
        e = (1, -1, 2, 0)
        mono = TorusElem.monomial(LAM4, e, 1)
        assert mono ** 3 == TorusElem.monomial(LAM4, (3, -3, 6, 0), 1)
        assert mono ** 0 == TorusElem.unit(LAM4)


class TestBar:
    def test_fixes_basis_monomials(self):
        mono = TorusElem.monomial(LAM4, (1, 2, 3, 4), 1)
        assert mono.bar() == mono

    def test_involution(self):
        elem = TorusElem(LAM4, {(1, 0, 0, 0): QLaurent({3: 2}), (0, 1, 0, 0): QLaurent({-1: 1})})
        assert elem.bar().bar() == elem

    @given(skew_forms(3), st.data())
    @settings(max_examples=40, deadline=None)
    def test_anti_automorphism(self, form, data):
        f = data.draw(elements(form))
        g = data.draw(elements(form))
        assert (f * g).bar() == g.bar() * f.bar()


class TestOrderedProduct:
    def test_single_factor(self):
        for i in range(1, 5):
            assert ordered_product(LAM4, unit_vector(4, i)) == TorusElem.generator(LAM4, i)

    def test_x2_x4_prefactor(self):
        # lambda_42 = 1, so x2*x4 = q^(-1/2) X^(0,1,0,1)
        assert ordered_product(LAM4, (0, 1, 0, 1)) == TorusElem.monomial(
            LAM4, (0, 1, 0, 1), QLaurent({-1: 1})
        )

    def test_prefactor_identity_sweep(self):
        # X^a = q^(1/2 sum_{l<k} a_k a_l lambda_kl) * x1^a1 ... x4^a4
        for a in itertools.product((-1, 0, 1), repeat=4):
            half = sum(
                a[k] * a[l] * LAM4.entry(k + 1, l + 1)
                for l in range(4)
                for k in range(l + 1, 4)
            )
            lhs = ordered_product(LAM4, a)
            assert lhs == TorusElem.monomial(LAM4, a, QLaurent.q_power(-half))

    def test_order_changes_twist_not_support(self):
        natural = ordered_product(LAM4, (0, 1, 0, 1), order=(1, 2, 3, 4))
        reversed_ = ordered_product(LAM4, (0, 1, 0, 1), order=(4, 3, 2, 1))
        assert natural.support() == reversed_.support()
        assert reversed_ == TorusElem.monomial(LAM4, (0, 1, 0, 1), QLaurent({1: 1}))

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            ordered_product(LAM4, (0, 1, 0, 1), order=(1, 1, 2, 3))


class TestCanonicalText:
    def test_zero(self):
        assert render_torus_elem(TorusElem.zero(LAM4)) == "0"

    def test_unit(self):
        assert render_torus_elem(TorusElem.unit(LAM4)) == "1 * X^[0,0,0,0]"

    def test_graded_lex_order(self):
        elem = TorusElem(
            LAM4,
            {
                (1, 0, 0, 0): QLaurent.one(),
                (0, -1, 0, 0): QLaurent({1: 1}),
                (0, 0, 0, 1): QLaurent({0: 1, 2: 1}),
            },
        )
        assert render_torus_elem(elem) == (
            "q^(1/2) * X^[0,-1,0,0] + (1 + q) * X^[0,0,0,1] + 1 * X^[1,0,0,0]"
        )

    @given(skew_forms(4), st.data())
    @settings(max_examples=60, deadline=None)
    def test_round_trip(self, form, data):
        elem = data.draw(elements(form, max_terms=4))
        assert parse_torus_elem(render_torus_elem(elem), form) == elem

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_torus_elem("1 * Y^[0,0,0,0]", LAM4)
        with pytest.raises(ValueError):
            parse_torus_elem("1 * X^[0,0]", LAM4)
