"""
CSS construction and the AQECC-level constructions built on nested pairs.

Every construction returns a Derivation: the new pair, the parameters the
oracles found for it, and a TheoremClaim comparing those parameters with the
bounds the construction promises. A distance that could not be enumerated
leaves the claim at a bound-only status.
"""

from __future__ import annotations

from enum import Enum
from typing import Any, NamedTuple

from loguru import logger

from .combinators import direct_sum, extend, puncture, uuv
from .errors import BudgetExceededError, CodeMismatchError, HypothesisFailedError, NotNestedError
from .field import FieldBasis
from .lincode import (
    LinearCode,
    dual,
    even_odd_weights,
    expand,
    has_min_weight_word_at,
    has_zero_coordinate_word,
    is_subcode,
    min_distance,
    relative_min_weight,
    require_coordinate,
    require_same_space,
)
from .settings import Settings


class ClaimStatus(Enum):
    """How far a claim could be checked."""

    # Both distances enumerated and at or above the claimed bounds
    VERIFIED_EXACT = "verified-exact"

    # One distance enumerated and above its bound, the other out of budget
    VERIFIED_BOUND = "verified-bound"

    # Neither distance could be enumerated; n and k were still checked
    BUDGET_EXCEEDED = "budget-exceeded"

    # The construction's hypotheses do not hold for these inputs
    HYPOTHESIS_FAILED = "hypothesis-failed"

    # An enumerated value is below its bound, or n/k disagree
    REFUTED = "refuted"


class TheoremTag(Enum):
    EXPANSION = "MAINI"
    ADDITIVE_EXPANSION = "GenExpa"
    DIRECT_SUM = "MAINII"
    ADDITIVE_DIRECT_SUM = "MAINII-additive"
    PUNCTURE = "MAINIII"
    ADDITIVE_PUNCTURE = "MAINNEW"
    EXTENSION = "MAINIV"
    U_U_PLUS_V = "MAINV"
    GRM = "mainGRM"
    CHARACTER = "lagchar"
    BCH_NESTED = "BCH-nested"
    BCH_DESIGNED = "ABCH1"
    QR_1_MOD_4 = "qrexp1"
    QR_3_MOD_4 = "qrexp2"


class DistanceValue(NamedTuple):
    """A distance that is either exact or only a lower bound."""

    value: int
    exact: bool

    def to_dict(self) -> dict[str, Any]:
        return {"value": self.value, "exact": self.exact}

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


class AqeccParams(NamedTuple):
    """[[n, k, d_z/d_x]]_q of an asymmetric quantum code."""

    q: int
    n: int
    k: int
    dz: DistanceValue
    dx: DistanceValue
    pure: bool | None

    @property
    def exact(self) -> bool:
        return self.dz.exact and self.dx.exact

    def to_dict(self) -> dict[str, Any]:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "dz": self.dz.to_dict(),
            "dx": self.dx.to_dict(),
            "pure": self.pure,
        }

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.dz}/{self.dx}]]_{self.q}"


class ClaimedBounds(NamedTuple):
    """What a construction promises; a None distance bound is unknown."""

    n: int
    k: int
    dz: int | None
    dx: int | None

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "dz": self.dz, "dx": self.dx}


class TheoremClaim(NamedTuple):
    """One line of the verification ledger."""

    tag: TheoremTag
    inputs: dict[str, Any]
    claimed: ClaimedBounds
    status: ClaimStatus
    params: AqeccParams | None
    notes: tuple[str, ...] = ()

    @property
    def verified(self) -> bool:
        return self.status in (ClaimStatus.VERIFIED_EXACT, ClaimStatus.VERIFIED_BOUND)

    def to_dict(self) -> dict[str, Any]:
        return {
            "tag": self.tag.value,
            "inputs": self.inputs,
            "claimed": self.claimed.to_dict(),
            "status": self.status.value,
            "params": self.params.to_dict() if self.params is not None else None,
            "notes": list(self.notes),
        }


class CssPair:
    """A strictly nested pair c2 < c1 of codes over one field."""

    def __init__(self, c1: LinearCode, c2: LinearCode):
        require_same_space(c1, c2)
        if c2.k >= c1.k or not is_subcode(c2, c1):
            raise NotNestedError(f"{c2} is not a proper subcode of {c1}")
        self.c1 = c1
        self.c2 = c2

    @property
    def field(self):
        return self.c1.field

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def k(self) -> int:
        return self.c1.k - self.c2.k

    def to_dict(self) -> dict[str, Any]:
        return {"c1": self.c1.to_dict(), "c2": self.c2.to_dict()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CssPair:
        return cls(LinearCode.from_dict(data["c1"]), LinearCode.from_dict(data["c2"]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CssPair):
            return False
        return self.c1 == other.c1 and self.c2 == other.c2

    def __hash__(self) -> int:
        return hash((self.c1, self.c2))

    def __repr__(self) -> str:
        return f"CssPair({self.c2} < {self.c1})"


class Derivation(NamedTuple):
    pair: CssPair | None
    params: AqeccParams | None
    claim: TheoremClaim


def _distance_or_none(code: LinearCode, settings: Settings | None) -> int | None:
    try:
        return min_distance(code, settings=settings).value
    except BudgetExceededError as e:
        logger.debug("distance of {} unknown: {}", code, e)
        return None


def _relative(
    outer: LinearCode, inner: LinearCode, fallback: int | None, settings: Settings | None
) -> DistanceValue:
    try:
        return DistanceValue(relative_min_weight(outer, inner, settings=settings).value, True)
    except BudgetExceededError as e:
        logger.warning("{}; reporting the bound {} instead", e, fallback or 1)
        return DistanceValue(fallback or 1, False)


def singleton_advisory(params: AqeccParams) -> str | None:
    """Text flagging a pure exact code with k > n - d_x - d_z + 2, else None."""
    if not (params.pure and params.exact):
        return None
    limit = params.n - params.dx.value - params.dz.value + 2
    if params.k <= limit:
        return None
    return f"{params} exceeds the asymmetric Singleton limit k <= {limit}"


def derive(
    pair: CssPair,
    *,
    dz_fallback: int | None = None,
    dx_fallback: int | None = None,
    settings: Settings | None = None,
) -> AqeccParams:
    """CSS parameters: d_z = wt(C1 minus C2), d_x = wt(C2-dual minus C1-dual).

    A side whose enumeration is over budget is reported as the fallback
    bound (1 when none is given) and flagged inexact.
    """
    dz = _relative(pair.c1, pair.c2, dz_fallback, settings)
    dx = _relative(dual(pair.c2), dual(pair.c1), dx_fallback, settings)
    pure: bool | None = None
    if dz.exact and dx.exact:
        d1 = _distance_or_none(pair.c1, settings)
        d2_dual = _distance_or_none(dual(pair.c2), settings)
        if d1 is not None and d2_dual is not None:
            pure = dz.value == d1 and dx.value == d2_dual
    params = AqeccParams(pair.field.order, pair.n, pair.k, dz, dx, pure)
    advisory = singleton_advisory(params)
    if advisory:
        logger.warning(advisory)
    return params


def claim_status(claimed: ClaimedBounds, params: AqeccParams) -> ClaimStatus:
    if params.n != claimed.n or params.k != claimed.k:
        return ClaimStatus.REFUTED
    verdicts = [
        value.value >= bound if value.exact and bound is not None else None
        for bound, value in ((claimed.dz, params.dz), (claimed.dx, params.dx))
    ]
    if False in verdicts:
        return ClaimStatus.REFUTED
    if all(verdicts):
        return ClaimStatus.VERIFIED_EXACT
    if any(verdicts):
        return ClaimStatus.VERIFIED_BOUND
    return ClaimStatus.BUDGET_EXCEEDED


def settle(
    tag: TheoremTag,
    inputs: dict[str, Any],
    claimed: ClaimedBounds,
    params: AqeccParams,
    notes: tuple[str, ...] = (),
) -> TheoremClaim:
    """Compare oracle parameters with a claim and record the verdict."""
    status = claim_status(claimed, params)
    advisory = singleton_advisory(params)
    if advisory:
        notes = (*notes, advisory)
    if status is ClaimStatus.REFUTED:
        logger.warning("{} claim {} refuted by {}", tag.value, claimed, params)
    else:
        logger.debug("{} claim {}: {}", tag.value, claimed, status.value)
    return TheoremClaim(tag, inputs, claimed, status, params, notes)


def failed_hypothesis(
    tag: TheoremTag, inputs: dict[str, Any], claimed: ClaimedBounds, *reasons: str
) -> TheoremClaim:
    logger.info("{} hypotheses fail: {}", tag.value, "; ".join(reasons))
    return TheoremClaim(tag, inputs, claimed, ClaimStatus.HYPOTHESIS_FAILED, None, reasons)


def out_of_budget(
    tag: TheoremTag, inputs: dict[str, Any], claimed: ClaimedBounds, error: BudgetExceededError
) -> TheoremClaim:
    return TheoremClaim(tag, inputs, claimed, ClaimStatus.BUDGET_EXCEEDED, None, (str(error),))


def check_pair(
    tag: TheoremTag,
    inputs: dict[str, Any],
    pair: CssPair,
    claimed: ClaimedBounds,
    *,
    notes: tuple[str, ...] = (),
    settings: Settings | None = None,
) -> Derivation:
    """Run the CSS oracles on `pair` and settle `claimed` against them."""
    params = derive(pair, dz_fallback=claimed.dz, dx_fallback=claimed.dx, settings=settings)
    return Derivation(pair, params, settle(tag, inputs, claimed, params, notes))


def _pair_inputs(pair: CssPair) -> dict[str, Any]:
    return {"c1": str(pair.c1), "c2": str(pair.c2), "q": pair.field.order}


def _min_or_none(*values: int | None) -> int | None:
    if any(value is None for value in values):
        return None
    return min(value for value in values if value is not None)


def expand_with_claim(
    pair: CssPair,
    basis: FieldBasis,
    tag: TheoremTag,
    inputs: dict[str, Any],
    claimed: ClaimedBounds,
    *,
    notes: tuple[str, ...] = (),
    settings: Settings | None = None,
) -> Derivation:
    """Expand both codes of `pair` with `basis` and check `claimed` on the result."""
    if basis.tower.top != pair.field:
        raise CodeMismatchError(f"basis of {basis.tower} cannot expand a pair over {pair.field}")
    expanded = CssPair(expand(pair.c1, basis), expand(pair.c2, basis))
    return check_pair(tag, inputs, expanded, claimed, notes=notes, settings=settings)


def expand_aqecc(
    pair: CssPair, basis: FieldBasis, *, settings: Settings | None = None
) -> Derivation:
    """[[mn, mk, d_z*/d_x*]] from a pair over GF(q^m) with d_z* >= d(C1), d_x* >= d(C2-dual)."""
    m = basis.degree
    claimed = ClaimedBounds(
        m * pair.n,
        m * pair.k,
        _distance_or_none(pair.c1, settings),
        _distance_or_none(dual(pair.c2), settings),
    )
    inputs = {**_pair_inputs(pair), "basis": basis.to_dict()}
    return expand_with_claim(pair, basis, TheoremTag.EXPANSION, inputs, claimed, settings=settings)


def direct_sum_aqecc(
    pair_a: CssPair, pair_b: CssPair, *, settings: Settings | None = None
) -> Derivation:
    """(C1 + C3, C2 + C4) as direct sums."""
    if pair_a.field != pair_b.field:
        raise CodeMismatchError(f"pairs over {pair_a.field} and {pair_b.field}")
    claimed = ClaimedBounds(
        pair_a.n + pair_b.n,
        pair_a.k + pair_b.k,
        _min_or_none(
            _distance_or_none(pair_a.c1, settings), _distance_or_none(pair_b.c1, settings)
        ),
        _min_or_none(
            _distance_or_none(dual(pair_a.c2), settings),
            _distance_or_none(dual(pair_b.c2), settings),
        ),
    )
    pair = CssPair(direct_sum(pair_a.c1, pair_b.c1), direct_sum(pair_a.c2, pair_b.c2))
    inputs = {"a": _pair_inputs(pair_a), "b": _pair_inputs(pair_b)}
    return check_pair(TheoremTag.DIRECT_SUM, inputs, pair, claimed, settings=settings)


def find_puncture_coordinate(pair: CssPair) -> int | None:
    """First coordinate where the dual of C2 has a nonzero word vanishing, if any."""
    inner_dual = dual(pair.c2)
    for i in range(pair.n):
        if has_zero_coordinate_word(inner_dual, i):
            return i
    return None


def require_puncture_coordinate(pair: CssPair) -> int:
    """Like `find_puncture_coordinate`, but raise when no coordinate qualifies."""
    i = find_puncture_coordinate(pair)
    if i is None:
        raise HypothesisFailedError(
            TheoremTag.PUNCTURE.value, "no nonzero word of C2 dual vanishes at any coordinate"
        )
    return i


def puncture_aqecc(pair: CssPair, i: int, *, settings: Settings | None = None) -> Derivation:
    """Puncture both codes at coordinate i.

    Case (i), some minimum-weight word of C1 is nonzero at i: d_z >= d1 - 1.
    Case (ii), otherwise: d_z >= d1. Both cases keep d_x >= d(C2-dual).
    """
    require_coordinate(pair.c1, i)
    inputs = {**_pair_inputs(pair), "coordinate": i}
    inner_dual = dual(pair.c2)
    claimed = ClaimedBounds(pair.n - 1, pair.k, None, None)
    try:
        d1 = min_distance(pair.c1, settings=settings).value
        d2_dual = min_distance(inner_dual, settings=settings).value
    except BudgetExceededError as e:
        return Derivation(None, None, out_of_budget(TheoremTag.PUNCTURE, inputs, claimed, e))
    claimed = claimed._replace(dx=d2_dual)

    reasons = []
    if pair.n < 2:
        reasons.append("length must be at least 2")
    if d1 < 2:
        reasons.append(f"d(C1) = {d1} is below 2")
    if d2_dual < 2:
        reasons.append(f"d(C2 dual) = {d2_dual} is below 2")
    if not has_zero_coordinate_word(inner_dual, i):
        if find_puncture_coordinate(pair) is None:
            reasons.append("no coordinate satisfies the hypothesis: hypothesis unsatisfiable")
        else:
            reasons.append(f"C2 dual has no nonzero word vanishing at coordinate {i}")
    if reasons:
        claim = failed_hypothesis(TheoremTag.PUNCTURE, inputs, claimed, *reasons)
        return Derivation(None, None, claim)

    touches = has_min_weight_word_at(pair.c1, i, settings=settings)
    claimed = claimed._replace(dz=d1 - 1 if touches else d1)
    punctured = CssPair(puncture(pair.c1, i), puncture(pair.c2, i))
    note = "case (i): a minimum-weight word of C1 touches the coordinate" if touches else (
        "case (ii): no minimum-weight word of C1 touches the coordinate"
    )
    return check_pair(
        TheoremTag.PUNCTURE, inputs, punctured, claimed, notes=(note,), settings=settings
    )


def extend_aqecc(pair: CssPair, *, settings: Settings | None = None) -> Derivation:
    """Extend both codes by an overall parity coordinate.

    d_z >= d1 when the minimum even-like weight of C1 is at most the odd-like
    one, d_z >= d1 + 1 otherwise; d_x >= d of the dual of the extended C2.
    """
    inputs = _pair_inputs(pair)
    extended = CssPair(extend(pair.c1), extend(pair.c2))
    dx_bound = _distance_or_none(dual(extended.c2), settings)
    try:
        weights = even_odd_weights(pair.c1, settings=settings)
    except BudgetExceededError as e:
        claimed = ClaimedBounds(pair.n + 1, pair.k, None, dx_bound)
        return Derivation(None, None, out_of_budget(TheoremTag.EXTENSION, inputs, claimed, e))

    d1 = min(w for w in (weights.even, weights.odd) if w is not None)
    odd_first = weights.odd is not None and (weights.even is None or weights.odd < weights.even)
    claimed = ClaimedBounds(pair.n + 1, pair.k, d1 + 1 if odd_first else d1, dx_bound)
    note = "case (b): odd-like weight below even-like" if odd_first else (
        "case (a): even-like weight at most odd-like"
    )
    return check_pair(
        TheoremTag.EXTENSION, inputs, extended, claimed, notes=(note,), settings=settings
    )


def uuv_aqecc(pair_a: CssPair, pair_b: CssPair, *, settings: Settings | None = None) -> Derivation:
    """((C2|C2+C4) < (C1|C1+C3)) with d_z >= min(2 d1, d3), d_x >= min(2 d(C4-dual), d(C2-dual))."""
    require_same_space(pair_a.c1, pair_b.c1)
    d1 = _distance_or_none(pair_a.c1, settings)
    d3 = _distance_or_none(pair_b.c1, settings)
    d2_dual = _distance_or_none(dual(pair_a.c2), settings)
    d4_dual = _distance_or_none(dual(pair_b.c2), settings)
    claimed = ClaimedBounds(
        2 * pair_a.n,
        pair_a.k + pair_b.k,
        _min_or_none(2 * d1 if d1 is not None else None, d3),
        _min_or_none(2 * d4_dual if d4_dual is not None else None, d2_dual),
    )
    pair = CssPair(uuv(pair_a.c1, pair_b.c1), uuv(pair_a.c2, pair_b.c2))
    inputs = {"a": _pair_inputs(pair_a), "b": _pair_inputs(pair_b)}
    return check_pair(TheoremTag.U_U_PLUS_V, inputs, pair, claimed, settings=settings)
