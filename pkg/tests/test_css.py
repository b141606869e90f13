"""
Tests for CSS derivation and the pair-level constructions.
"""

import pytest

from aqecc_workbench.combinators import extend
from aqecc_workbench.css import (
    AqeccParams,
    ClaimedBounds,
    ClaimStatus,
    CssPair,
    DistanceValue,
    TheoremTag,
    claim_status,
    derive,
    direct_sum_aqecc,
    expand_aqecc,
    extend_aqecc,
    find_puncture_coordinate,
    puncture_aqecc,
    require_puncture_coordinate,
    singleton_advisory,
    uuv_aqecc,
)
from aqecc_workbench.errors import CodeMismatchError, HypothesisFailedError, NotNestedError
from aqecc_workbench.families import qr
from aqecc_workbench.field import make_field, prime_basis
from aqecc_workbench.lincode import (
    dual,
    even_odd_weights,
    from_generator,
    full_space,
    repetition_code,
)
from aqecc_workbench.settings import Settings

from .test_lincode import hamming


def steane():
    code = hamming()
    return CssPair(code, dual(code))


def exact(value):
    return DistanceValue(value, True)


class TestCssPair:
    """Test pair validation and serialization."""

    def test_steane_pair(self):
        """The Steane pair encodes one qubit in seven."""
        pair = steane()
        assert (pair.n, pair.k) == (7, 1)
        assert pair.field == make_field(2)

    def test_not_nested(self):
        """Reversed, equal or unrelated codes are rejected."""
        code = hamming()
        with pytest.raises(NotNestedError):
            CssPair(dual(code), code)
        with pytest.raises(NotNestedError):
            CssPair(code, code)

    def test_different_lengths(self):
        """Codes of different lengths cannot form a pair."""
        gf = make_field(2)
        with pytest.raises(CodeMismatchError):
            CssPair(full_space(gf, 3), repetition_code(gf, 2))

    def test_dict_round_trip(self):
        """A pair re-parses to an equal pair."""
        pair = steane()
        assert CssPair.from_dict(pair.to_dict()) == pair


class TestDerive:
    """Test the CSS parameter oracle."""

    def test_steane(self):
        """[[7,1,3/3]]_2, pure."""
        params = derive(steane())
        assert params == AqeccParams(2, 7, 1, exact(3), exact(3), True)
        assert str(params) == "[[7,1,3/3]]_2"
        assert params.exact

    def test_asymmetric_pair(self):
        """Repetition inside the full space gives d_z = 1 and d_x = n."""
        gf = make_field(2)
        params = derive(CssPair(full_space(gf, 3), repetition_code(gf, 3)))
        assert (params.k, params.dz.value, params.dx.value) == (2, 1, 3)

    def test_impure_pair(self):
        """A relative weight above the absolute one makes the code impure."""
        gf = make_field(2)
        c1 = from_generator(gf, [[1, 1, 0, 0, 0], [0, 0, 1, 1, 1]])
        c2 = from_generator(gf, [[1, 1, 0, 0, 0]])
        params = derive(CssPair(c1, c2))
        assert params.dz.value == 3
        assert params.pure is False

    def test_budget_fallback(self):
        """Out-of-budget sides are reported as inexact bounds."""
        params = derive(steane(), dz_fallback=3, settings=Settings(max_codewords=4))
        assert params.dz == DistanceValue(3, False)
        assert params.dx == DistanceValue(1, False)
        assert params.pure is None
        assert not params.exact
        assert str(params) == "[[7,1,>=3/>=1]]_2"

    def test_singleton_advisory(self):
        """k above n - d_x - d_z + 2 is flagged, otherwise nothing."""
        assert singleton_advisory(AqeccParams(2, 7, 1, exact(3), exact(3), True)) is None
        text = singleton_advisory(AqeccParams(2, 3, 2, exact(2), exact(2), True))
        assert text is not None and "Singleton" in text
        assert singleton_advisory(AqeccParams(2, 3, 2, exact(2), exact(2), False)) is None


class TestClaimStatus:
    """Test how claims are settled against oracle parameters."""

    def test_verified_exact(self):
        params = AqeccParams(2, 7, 1, exact(3), exact(3), True)
        assert claim_status(ClaimedBounds(7, 1, 3, 3), params) is ClaimStatus.VERIFIED_EXACT

    def test_refuted_distance(self):
        params = AqeccParams(2, 7, 1, exact(3), exact(3), True)
        assert claim_status(ClaimedBounds(7, 1, 4, 3), params) is ClaimStatus.REFUTED

    def test_refuted_dimension(self):
        params = AqeccParams(2, 7, 1, exact(3), exact(3), True)
        assert claim_status(ClaimedBounds(7, 2, 3, 3), params) is ClaimStatus.REFUTED

    def test_bound_only(self):
        params = AqeccParams(2, 7, 1, exact(3), DistanceValue(1, False), None)
        assert claim_status(ClaimedBounds(7, 1, 3, 3), params) is ClaimStatus.VERIFIED_BOUND

    def test_budget_exceeded(self):
        params = AqeccParams(2, 7, 1, DistanceValue(3, False), DistanceValue(3, False), None)
        assert claim_status(ClaimedBounds(7, 1, 3, 3), params) is ClaimStatus.BUDGET_EXCEEDED


class TestConstructions:
    """Test the claimed bounds of each construction on small inputs."""

    def test_expand_qr_pair(self):
        """The [[5,1]]_4 QR pair expands to [[10,2]]_2 with d >= 3."""
        spec = qr(5, 4)
        pair = CssPair(spec.residue, spec.residue_even)
        derivation = expand_aqecc(pair, prime_basis(pair.field))
        claim = derivation.claim
        assert claim.tag is TheoremTag.EXPANSION
        assert claim.claimed == ClaimedBounds(10, 2, 3, 3)
        assert claim.status is ClaimStatus.VERIFIED_EXACT
        assert derivation.pair.field == make_field(2)

    def test_expand_with_foreign_basis(self):
        """A basis of another tower is rejected."""
        with pytest.raises(CodeMismatchError):
            expand_aqecc(steane(), prime_basis(make_field(2, 2)))

    def test_direct_sum(self):
        """Steane plus Steane is [[14,2,3/3]]."""
        claim = direct_sum_aqecc(steane(), steane()).claim
        assert claim.claimed == ClaimedBounds(14, 2, 3, 3)
        assert claim.status is ClaimStatus.VERIFIED_EXACT

    def test_puncture_case_one(self):
        """Every coordinate of Steane touches a weight-3 word: d_z >= 2."""
        derivation = puncture_aqecc(steane(), 0)
        claim = derivation.claim
        assert claim.claimed == ClaimedBounds(6, 1, 2, 3)
        assert claim.status is ClaimStatus.VERIFIED_EXACT
        assert any("case (i)" in note for note in claim.notes)
        assert derivation.pair.n == 6

    def test_puncture_case_two(self):
        """A coordinate outside every minimum-weight word keeps d_z >= d1."""
        gf = make_field(2)
        c1 = from_generator(gf, [[1, 1, 0, 0, 0], [0, 0, 1, 1, 1]])
        c2 = from_generator(gf, [[1, 1, 1, 1, 1]])
        claim = puncture_aqecc(CssPair(c1, c2), 4).claim
        assert claim.claimed == ClaimedBounds(4, 1, 2, 2)
        assert claim.status is ClaimStatus.VERIFIED_EXACT
        assert any("case (ii)" in note for note in claim.notes)

    def test_puncture_unsatisfiable(self):
        """No coordinate qualifies when the dual of C2 is a repetition code."""
        gf = make_field(2)
        pair = CssPair(full_space(gf, 3), dual(repetition_code(gf, 3)))
        assert find_puncture_coordinate(pair) is None
        with pytest.raises(HypothesisFailedError):
            require_puncture_coordinate(pair)
        claim = puncture_aqecc(pair, 0).claim
        assert claim.status is ClaimStatus.HYPOTHESIS_FAILED
        assert claim.params is None
        assert any("unsatisfiable" in note for note in claim.notes)

    def test_puncture_coordinate_search(self):
        """Coordinate 0 is the first admissible one for Steane."""
        assert require_puncture_coordinate(steane()) == 0

    def test_puncture_over_budget(self):
        """A distance that cannot be enumerated leaves the claim unchecked."""
        claim = puncture_aqecc(steane(), 0, settings=Settings(max_codewords=4)).claim
        assert claim.status is ClaimStatus.BUDGET_EXCEEDED

    def test_extend(self):
        """Odd-like weight 3 below even-like 4 gives d_z >= 4; d_x drops to 1."""
        derivation = extend_aqecc(steane())
        claim = derivation.claim
        assert claim.claimed == ClaimedBounds(8, 1, 4, 1)
        assert claim.status is ClaimStatus.VERIFIED_EXACT
        assert claim.params.dz.value == 4
        assert claim.params.dx.value == 1
        assert any("case (b)" in note for note in claim.notes)

    def test_extend_even_case(self):
        """Extended Hamming [8,4,4] is all even-like, so d_z >= wt_e = 4."""
        outer = extend(hamming())
        pair = CssPair(outer, extend(dual(hamming())))
        weights = even_odd_weights(outer)
        assert (weights.even, weights.odd) == (4, None)
        claim = extend_aqecc(pair).claim
        assert claim.claimed == ClaimedBounds(9, 1, 4, 1)
        assert claim.status is ClaimStatus.VERIFIED_EXACT
        assert claim.params.dz.value == 4
        assert claim.params.dx.value == 1
        assert any("case (a)" in note for note in claim.notes)

    def test_uuv(self):
        """(u|u+v) of Steane with itself is [[14,2]] with d >= 3."""
        claim = uuv_aqecc(steane(), steane()).claim
        assert claim.claimed == ClaimedBounds(14, 2, 3, 3)
        assert claim.status is ClaimStatus.VERIFIED_EXACT

    def test_claim_serialization(self):
        """Claims serialize with their tag, status and parameters."""
        data = direct_sum_aqecc(steane(), steane()).claim.to_dict()
        assert data["tag"] == "MAINII"
        assert data["status"] == "verified-exact"
        assert data["params"]["dz"] == {"value": 3, "exact": True}
