"""
Tests for additive codes, the trace-symplectic form and phi_B expansion.
"""

import itertools

import numpy as np
import pytest

from aqecc_workbench.css import ClaimedBounds, ClaimStatus, CssPair, TheoremTag, derive
from aqecc_workbench.errors import CodeMismatchError, FieldError, NotSelfOrthogonalError
from aqecc_workbench.families import qr
from aqecc_workbench.field import as_ints, make_field, prime_basis
from aqecc_workbench.lincode import from_generator
from aqecc_workbench.symplectic import (
    AdditiveCode,
    SymplecticVector,
    additive_from_vectors,
    check_additive,
    css_to_additive,
    delete_coordinate,
    direct_sum_additive,
    expand_additive,
    phi_b_expand,
    phi_inverse,
    phi_map,
    puncture_additive,
    stabilizer_params,
    symplectic_distance,
    symplectic_dual,
    trace_alternating_form,
    trace_symplectic_form,
)

from .test_css import steane


def steane_additive():
    return css_to_additive(steane())


def toy_code():
    """span{(11|00), (00|11)}: self-orthogonal with K = 1."""
    return additive_from_vectors(make_field(2), [[1, 1, 0, 0], [0, 0, 1, 1]], 2)


class TestSymplecticVector:
    """Test weights and the trace-symplectic form."""

    def test_weights(self):
        """(101|011) has X weight 2, Z weight 2 and symplectic weight 3."""
        v = SymplecticVector(make_field(2), [1, 0, 1], [0, 1, 1])
        assert (v.n, v.wt_x, v.wt_z, v.swt) == (3, 2, 2, 3)
        assert as_ints(v.concatenated()).tolist() == [1, 0, 1, 0, 1, 1]

    def test_mismatched_parts(self):
        """X and Z parts must have the same length."""
        with pytest.raises(CodeMismatchError):
            SymplecticVector(make_field(2), [1, 0], [1])

    def test_binary_form(self):
        """<(1|0), (0|1)> = 1 over GF(2)."""
        gf = make_field(2)
        x = SymplecticVector(gf, [1], [0])
        y = SymplecticVector(gf, [0], [1])
        assert int(trace_symplectic_form(x, y)) == 1
        assert int(trace_symplectic_form(x, x)) == 0

    def test_gf4_form_takes_the_trace(self):
        """<(omega|0), (0|1)> = tr(omega) = 1 while <(1|0), (0|1)> = tr(1) = 0."""
        gf = make_field(2, 2)
        z = SymplecticVector(gf, [0], [1])
        assert int(trace_symplectic_form(SymplecticVector(gf, [2], [0]), z)) == 1
        assert int(trace_symplectic_form(SymplecticVector(gf, [1], [0]), z)) == 0

    def test_form_needs_same_space(self):
        gf = make_field(2)
        with pytest.raises(CodeMismatchError):
            trace_symplectic_form(
                SymplecticVector(gf, [1], [0]), SymplecticVector(gf, [1, 0], [0, 0])
            )


class TestPhiMap:
    """Test the GF(q)^(2n) <-> GF(q^2)^n isometry."""

    def test_phi_on_gf2(self):
        """(1|1) -> 1, (1|0) -> omega, (0|1) -> omega^2."""
        gf = make_field(2)
        images = phi_map(gf([[1, 1], [1, 0], [0, 1]]))
        assert as_ints(images).tolist() == [[1], [2], [3]]

    def test_phi_inverse(self):
        """phi_inverse undoes phi on every vector of GF(3)^4."""
        gf = make_field(3)
        vectors = gf(list(itertools.product(range(3), repeat=4)))
        assert as_ints(phi_inverse(phi_map(vectors))).tolist() == as_ints(vectors).tolist()

    def test_alternating_form(self):
        """<omega, omega^2>_a = 1 over GF(4)."""
        gf4 = make_field(2, 2)
        assert int(trace_alternating_form(gf4([2]), gf4([3]))) == 1
        assert int(trace_alternating_form(gf4([2]), gf4([2]))) == 0

    def test_alternating_form_matches_symplectic_form(self):
        """phi carries the trace-symplectic form to the trace-alternating one."""
        gf = make_field(2)
        vectors = [[1, 0, 0, 1], [0, 1, 1, 1], [1, 1, 0, 1]]
        for x in vectors:
            for y in vectors:
                symplectic = trace_symplectic_form(
                    SymplecticVector(gf, x[:2], x[2:]), SymplecticVector(gf, y[:2], y[2:])
                )
                alternating = trace_alternating_form(phi_map(gf(x)), phi_map(gf(y)))
                assert int(symplectic) == int(alternating)

    def test_odd_degree_rejected(self):
        """GF(8) is not a quadratic extension."""
        gf8 = make_field(2, 3)
        with pytest.raises(FieldError):
            phi_inverse(gf8([1]))


class TestAdditiveCode:
    """Test additive codes and their symplectic duals."""

    def test_css_to_additive(self):
        """The Steane pair gives a rank-6 self-orthogonal code of length 7."""
        code = steane_additive()
        assert (code.n, code.t, code.rank) == (7, 1, 6)
        assert code.size == 64
        assert code.is_self_orthogonal()

    def test_dual_sizes(self):
        """|C| |C-perp_s| = p^(2tn)."""
        gf4 = make_field(2, 2)
        code = additive_from_vectors(gf4, [[2, 1, 0, 0, 1, 3]], 3)
        assert code.rank + symplectic_dual(code).rank == 2 * 2 * 3
        assert symplectic_dual(symplectic_dual(code)) == code

    def test_dual_of_zero_code(self):
        """The dual of the zero code is the whole space."""
        code = additive_from_vectors(make_field(3), np.zeros((0, 4), dtype=np.int64), 2)
        assert code.rank == 0
        assert symplectic_dual(code).rank == 4

    def test_not_self_orthogonal(self):
        """span{(1|0), (0|1)} is rejected."""
        code = additive_from_vectors(make_field(2), [[1, 0], [0, 1]], 1)
        assert not code.is_self_orthogonal()
        with pytest.raises(NotSelfOrthogonalError):
            stabilizer_params(code)

    def test_dict_round_trip(self):
        """A code re-parses to an equal code."""
        code = css_to_additive(CssPair(qr(5, 4).residue, qr(5, 4).residue_even))
        assert AdditiveCode.from_dict(code.to_dict()) == code

    def test_span_must_match_length(self):
        """The span must have length 2tn over the prime field."""
        with pytest.raises(CodeMismatchError):
            AdditiveCode(make_field(2), 3, toy_code().span)


class TestStabilizerParams:
    """Test the stabilizer parameter oracle."""

    def test_agrees_with_css(self):
        """The Steane code has the same parameters either way."""
        assert stabilizer_params(steane_additive()) == derive(steane())

    def test_symplectic_distance(self):
        """The Steane code has symplectic distance 3."""
        assert symplectic_distance(steane_additive()) == 3

    def test_k_zero(self):
        """With K = 1 the distances range over the whole dual: 2 and 2."""
        params = stabilizer_params(toy_code())
        assert (params.n, params.k, params.dz.value, params.dx.value) == (2, 0, 2, 2)

    def test_gf4_css_agrees(self):
        """The [[5,1]]_4 QR pair agrees with its additive image."""
        spec = qr(5, 4)
        pair = CssPair(spec.residue, spec.residue_even)
        assert stabilizer_params(css_to_additive(pair)) == derive(pair)


class TestPhiBExpansion:
    """Test the symplectic expansion map."""

    def test_single_vector(self):
        """(omega|1) maps to (0,1|0,1) under {1, omega}."""
        gf4 = make_field(2, 2)
        code = additive_from_vectors(gf4, [[2, 1]], 1)
        expanded = phi_b_expand(code, prime_basis(gf4))
        assert (expanded.n, expanded.rank) == (2, 1)
        assert as_ints(expanded.span.generator).tolist() == [[0, 1, 0, 1]]

    def test_preserves_form(self):
        """<(omega|1), (1|omega)> = 1 before and after expansion."""
        gf4 = make_field(2, 2)
        basis = prime_basis(gf4)
        x, y = [2, 1], [1, 2]
        before = trace_symplectic_form(
            SymplecticVector(gf4, x[:1], x[1:]), SymplecticVector(gf4, y[:1], y[1:])
        )
        ex = phi_b_expand(additive_from_vectors(gf4, [x], 1), basis).vectors()[0]
        ey = phi_b_expand(additive_from_vectors(gf4, [y], 1), basis).vectors()[0]
        gf = make_field(2)
        after = trace_symplectic_form(
            SymplecticVector(gf, ex[:2], ex[2:]), SymplecticVector(gf, ey[:2], ey[2:])
        )
        assert int(before) == int(after) == 1

    def test_wrong_field(self):
        """A basis of another tower is rejected."""
        with pytest.raises(FieldError):
            phi_b_expand(steane_additive(), prime_basis(make_field(2, 2)))


class TestAdditiveConstructions:
    """Test the additive-code derivations."""

    def test_expand_qr(self):
        """((5, 4^1, 3/3))_4 expands to ((10, 2^2, >=3/>=3))_2."""
        spec = qr(5, 4)
        code = css_to_additive(CssPair(spec.residue, spec.residue_even))
        derivation = expand_additive(code, prime_basis(code.field))
        claim = derivation.claim
        assert claim.tag is TheoremTag.ADDITIVE_EXPANSION
        assert claim.claimed == ClaimedBounds(10, 2, 3, 3)
        assert claim.status is ClaimStatus.VERIFIED_EXACT
        assert derivation.code.field == make_field(2)

    def test_puncture_steane(self):
        """Puncturing the pure Steane code gives [[6,1,>=2/>=2]]."""
        derivation = puncture_additive(steane_additive(), 0)
        claim = derivation.claim
        assert claim.claimed == ClaimedBounds(6, 1, 2, 2)
        assert claim.status is ClaimStatus.VERIFIED_EXACT
        assert derivation.code.is_self_orthogonal()
        assert derivation.params.k == 1
        assert derivation.params.pure is True

    def test_impure_result_refutes_pure_claim(self):
        """An impure code settles a claim that promises purity as refuted."""
        gf = make_field(2)
        c1 = from_generator(gf, [[1, 1, 0, 0, 0], [0, 0, 1, 1, 1]])
        c2 = from_generator(gf, [[1, 1, 0, 0, 0]])
        code = css_to_additive(CssPair(c1, c2))
        claimed = ClaimedBounds(5, 1, 1, 1)
        relaxed = check_additive(TheoremTag.ADDITIVE_PUNCTURE, {}, code, claimed, (), None)
        assert relaxed.params.pure is False
        assert relaxed.claim.status is ClaimStatus.VERIFIED_EXACT
        strict = check_additive(
            TheoremTag.ADDITIVE_PUNCTURE, {}, code, claimed, (), None, require_pure=True
        )
        assert strict.claim.status is ClaimStatus.REFUTED
        assert any("not pure" in note for note in strict.claim.notes)

    def test_puncture_without_logical_qudit(self):
        """A code with K = 1 fails the hypotheses."""
        derivation = puncture_additive(toy_code(), 0)
        assert derivation.claim.status is ClaimStatus.HYPOTHESIS_FAILED
        assert derivation.code is None

    def test_delete_coordinate(self):
        """Deleting a coordinate shortens both parts."""
        code = delete_coordinate(toy_code(), 1)
        assert code.n == 1
        assert code.rank == 2
        with pytest.raises(CodeMismatchError):
            delete_coordinate(toy_code(), 2)

    def test_direct_sum(self):
        """Steane plus Steane is [[14,2,3/3]]."""
        derivation = direct_sum_additive(steane_additive(), steane_additive())
        claim = derivation.claim
        assert claim.claimed == ClaimedBounds(14, 2, 3, 3)
        assert claim.status is ClaimStatus.VERIFIED_EXACT
        assert derivation.code.rank == 12

    def test_direct_sum_fields_must_match(self):
        gf4 = make_field(2, 2)
        other = additive_from_vectors(gf4, [[1, 0]], 1)
        with pytest.raises(CodeMismatchError):
            direct_sum_additive(steane_additive(), other)
