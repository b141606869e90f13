"""
Property-based testing for codes, pairs and additive codes using hypothesis.

This module checks laws that hold for every small code, not just the
hand-picked examples in the other test modules.
"""

from hypothesis import HealthCheck, given, strategies as st, assume, settings

from aqecc_workbench.combinators import direct_sum, extend, puncture, shorten, uuv
from aqecc_workbench.css import CssPair, derive
from aqecc_workbench.field import as_ints, make_field, prime_basis
from aqecc_workbench.lincode import dual, expand, from_generator, is_subcode, min_distance
from aqecc_workbench.symplectic import (
    SymplecticVector,
    css_to_additive,
    phi_inverse,
    phi_map,
    stabilizer_params,
    symplectic_dual,
    trace_symplectic_form,
)

FIELDS = [(2, 1), (3, 1), (2, 2)]


@st.composite
def field_gen(draw):
    """One of the small desk fields."""
    p, m = draw(st.sampled_from(FIELDS))
    return make_field(p, m)


@st.composite
def code_gen(draw, min_n=1, max_n=6):
    """A random linear code spanned by up to four random rows."""
    gf = draw(field_gen())
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, gf.order - 1), min_size=n, max_size=n),
            max_size=4,
        )
    )
    return from_generator(gf, rows, n=n)


@st.composite
def pair_gen(draw):
    """A strictly nested pair C2 < C1."""
    c1 = draw(code_gen(min_n=2, max_n=6))
    assume(c1.k > 0)
    picks = draw(st.lists(st.integers(0, c1.k - 1), max_size=c1.k - 1, unique=True))
    c2 = from_generator(c1.field, as_ints(c1.generator)[sorted(picks)], n=c1.n)
    return CssPair(c1, c2)


@st.composite
def symplectic_vector_gen(draw, gf, n):
    a = draw(st.lists(st.integers(0, gf.order - 1), min_size=n, max_size=n))
    b = draw(st.lists(st.integers(0, gf.order - 1), min_size=n, max_size=n))
    return SymplecticVector(gf, a, b)


class TestLinearCodeProperties:
    """Test duality laws on random codes."""

    @given(code_gen())
    @settings(max_examples=50, deadline=None)
    def test_dual_of_dual(self, code):
        """dual(dual(C)) = C and k + k-dual = n."""
        assert dual(dual(code)) == code
        assert code.k + dual(code).k == code.n

    @given(code_gen(min_n=2))
    @settings(max_examples=50, deadline=None)
    def test_puncture_shorten_duality(self, code):
        """dual(puncture(C, i)) = shorten(dual(C), i) at every coordinate."""
        for i in range(code.n):
            assert dual(puncture(code, i)) == shorten(dual(code), i)

    @given(code_gen())
    @settings(max_examples=30, deadline=None)
    def test_extend_then_puncture(self, code):
        assert puncture(extend(code), code.n) == code

    @given(code_gen(max_n=4), code_gen(max_n=4))
    @settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    def test_direct_sum_distance(self, a, b):
        """d(A + B) = min(d(A), d(B))."""
        assume(a.field == b.field and a.k > 0 and b.k > 0)
        combined = direct_sum(a, b)
        expected = min(min_distance(a).value, min_distance(b).value)
        assert min_distance(combined).value == expected

    @given(code_gen(max_n=4))
    @settings(max_examples=30, deadline=None)
    def test_expansion_duality(self, code):
        """dual(expand(C, B)) = expand(dual(C), B-dual) over GF(4)."""
        assume(not code.field.is_prime)
        basis = prime_basis(code.field)
        assert dual(expand(code, basis)) == expand(dual(code), basis.dual)

    @given(code_gen(max_n=4))
    @settings(max_examples=30, deadline=None)
    def test_expansion_keeps_distance(self, code):
        """Expanding with a basis never lowers the minimum distance."""
        assume(not code.field.is_prime and code.k > 0)
        expanded = expand(code, prime_basis(code.field))
        assert min_distance(expanded).value >= min_distance(code).value


class TestPairProperties:
    """Test CSS derivation against the symplectic picture."""

    @given(pair_gen())
    @settings(max_examples=40, deadline=None)
    def test_css_matches_stabilizer(self, pair):
        assert is_subcode(pair.c2, pair.c1)
        assert stabilizer_params(css_to_additive(pair)) == derive(pair)

    @given(pair_gen())
    @settings(max_examples=40, deadline=None)
    def test_relative_weights_dominate(self, pair):
        """d_z >= d(C1) and d_x >= d(C2-dual)."""
        params = derive(pair)
        assert params.k == pair.c1.k - pair.c2.k
        assert params.dz.value >= min_distance(pair.c1).value
        assert params.dx.value >= min_distance(dual(pair.c2)).value

    @given(pair_gen(), st.data())
    @settings(max_examples=40, deadline=None)
    def test_combinators_keep_nesting(self, pair, data):
        """C2 < C1 implies op(C2) < op(C1) for every combinator."""
        c1, c2 = pair.c1, pair.c2
        i = data.draw(st.integers(0, pair.n - 1))
        assert is_subcode(puncture(c2, i), puncture(c1, i))
        assert is_subcode(shorten(c2, i), shorten(c1, i))
        assert is_subcode(extend(c2), extend(c1))
        assert is_subcode(direct_sum(c2, dual(c1)), direct_sum(c1, dual(c2)))
        assert is_subcode(uuv(c2, dual(c1)), uuv(c1, dual(c2)))


class TestSymplecticProperties:
    """Test the trace-symplectic form and phi."""

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_form_is_alternating(self, data):
        gf = data.draw(field_gen())
        n = data.draw(st.integers(1, 3))
        x = data.draw(symplectic_vector_gen(gf, n))
        y = data.draw(symplectic_vector_gen(gf, n))
        assert int(trace_symplectic_form(x, x)) == 0
        assert int(trace_symplectic_form(x, y) + trace_symplectic_form(y, x)) == 0

    @given(st.data())
    @settings(max_examples=50, deadline=None)
    def test_phi_round_trip_and_weight(self, data):
        """phi is invertible and carries symplectic weight to Hamming weight."""
        gf = data.draw(field_gen())
        n = data.draw(st.integers(1, 3))
        x = data.draw(symplectic_vector_gen(gf, n))
        image = phi_map(x.concatenated())
        assert as_ints(phi_inverse(image)).tolist() == as_ints(x.concatenated()).tolist()
        assert int((as_ints(image) != 0).sum()) == x.swt

    @given(pair_gen())
    @settings(max_examples=30, deadline=None)
    def test_symplectic_dual_size(self, pair):
        """|C| |C-perp_s| = p^(2tn) and the dual of the dual is C."""
        code = css_to_additive(pair)
        other = symplectic_dual(code)
        assert code.rank + other.rank == 2 * code.t * code.n
        assert symplectic_dual(other) == code
