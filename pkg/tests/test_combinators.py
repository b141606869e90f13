"""
Tests for puncture, shorten, extend, direct sum and (u|u+v).
"""

import pytest

from aqecc_workbench.combinators import direct_sum, extend, puncture, shorten, uuv
from aqecc_workbench.errors import CodeMismatchError
from aqecc_workbench.field import make_field
from aqecc_workbench.lincode import (
    dual,
    from_generator,
    full_space,
    is_subcode,
    min_distance,
    repetition_code,
    zero_code,
)

from .test_lincode import hamming


class TestPuncture:
    """Test coordinate deletion."""

    def test_puncture_hamming(self):
        """Puncturing [7,4,3] gives [6,4,2]."""
        code = puncture(hamming(), 3)
        assert (code.n, code.k) == (6, 4)
        assert min_distance(code).value == 2

    def test_puncture_away_from_min_weight_support(self):
        """{11000, 00111} punctured at 4 keeps d = 2."""
        code = from_generator(make_field(2), [[1, 1, 0, 0, 0], [0, 0, 1, 1, 1]])
        punctured = puncture(code, 4)
        assert punctured == from_generator(make_field(2), [[1, 1, 0, 0], [0, 0, 1, 1]])
        assert min_distance(punctured).value == 2

    def test_puncture_zero_code(self):
        """The zero code stays zero."""
        assert puncture(zero_code(make_field(2), 3), 0) == zero_code(make_field(2), 2)

    def test_puncture_bad_coordinate(self):
        """Out-of-range coordinates and length-1 codes are rejected."""
        with pytest.raises(CodeMismatchError):
            puncture(hamming(), 7)
        with pytest.raises(CodeMismatchError):
            puncture(full_space(make_field(2), 1), 0)


class TestShorten:
    """Test shortening."""

    def test_shorten_hamming(self):
        """Shortening [7,4,3] at 0 gives [6,3,3]."""
        code = shorten(hamming(), 0)
        assert (code.n, code.k) == (6, 3)
        assert min_distance(code).value == 3

    def test_shorten_repetition(self):
        """No nonzero repetition word vanishes anywhere."""
        assert shorten(repetition_code(make_field(3), 4), 2).k == 0

    def test_dual_of_puncture_is_shortened_dual(self):
        """dual(puncture(C, i)) = shorten(dual(C), i)."""
        code = hamming()
        for i in range(code.n):
            assert dual(puncture(code, i)) == shorten(dual(code), i)


class TestExtend:
    """Test the overall parity extension."""

    def test_extend_hamming(self):
        """Extending [7,4,3] gives [8,4,4]."""
        code = extend(hamming())
        assert (code.n, code.k) == (8, 4)
        assert min_distance(code).value == 4

    def test_extended_words_sum_to_zero(self):
        """Every extended word has coordinate sum zero, over GF(3) too."""
        code = extend(from_generator(make_field(3), [[1, 2, 2], [0, 1, 1]]))
        for word in code.codewords():
            assert int(word.sum()) == 0

    def test_extend_then_puncture(self):
        """Deleting the new coordinate gives the code back."""
        code = hamming()
        assert puncture(extend(code), code.n) == code

    def test_extend_zero_code(self):
        """The zero code gains a coordinate and stays zero."""
        assert extend(zero_code(make_field(2), 2)) == zero_code(make_field(2), 3)


class TestDirectSumAndUuv:
    """Test the two gluing constructions."""

    def test_direct_sum(self):
        """[7,4,3] + [3,1,3] = [10,5,3]."""
        code = direct_sum(hamming(), repetition_code(make_field(2), 3))
        assert (code.n, code.k) == (10, 5)
        assert min_distance(code).value == 3

    def test_direct_sum_dual(self):
        """The dual of a direct sum is the direct sum of the duals."""
        a, b = hamming(), repetition_code(make_field(2), 3)
        assert dual(direct_sum(a, b)) == direct_sum(dual(a), dual(b))

    def test_direct_sum_fields_must_match(self):
        """Codes over different fields cannot be summed."""
        with pytest.raises(CodeMismatchError):
            direct_sum(hamming(), repetition_code(make_field(3), 3))

    def test_uuv(self):
        """(u|u+v) of [2,2,1] and [2,1,2] is [4,3,2]."""
        gf = make_field(2)
        code = uuv(full_space(gf, 2), repetition_code(gf, 2))
        assert (code.n, code.k) == (4, 3)
        assert min_distance(code).value == 2

    def test_uuv_reed_muller(self):
        """(u|u+v) of [4,3,2] and [4,1,4] is the [8,4,4] Reed-Muller code."""
        gf = make_field(2)
        code = uuv(dual(repetition_code(gf, 4)), repetition_code(gf, 4))
        assert (code.n, code.k) == (8, 4)
        assert min_distance(code).value == 4

    def test_uuv_lengths_must_match(self):
        """Both codes need the same length."""
        gf = make_field(2)
        with pytest.raises(CodeMismatchError):
            uuv(full_space(gf, 2), repetition_code(gf, 3))


class TestNesting:
    """Every combinator keeps a subcode inside its supercode."""

    def test_puncture_shorten_extend_keep_nesting(self):
        """The [7,3] simplex code stays inside the [7,4] Hamming code."""
        outer = hamming()
        inner = dual(outer)
        assert is_subcode(extend(inner), extend(outer))
        for i in range(outer.n):
            assert is_subcode(puncture(inner, i), puncture(outer, i))
            assert is_subcode(shorten(inner, i), shorten(outer, i))

    def test_direct_sum_and_uuv_keep_nesting(self):
        gf = make_field(2)
        outer, inner = hamming(), dual(hamming())
        big, small = full_space(gf, 7), repetition_code(gf, 7)
        assert is_subcode(direct_sum(inner, small), direct_sum(outer, big))
        assert is_subcode(uuv(inner, small), uuv(outer, big))
        assert not is_subcode(uuv(outer, big), uuv(inner, small))
