"""
Additive codes under the trace-symplectic form.

An additive code C <= GF(q)^(2n), q = p^t, is stored as a GF(p)-linear code
of length 2tn. The vector (a|b) occupies prime coordinates
(part * n + i) * t + j, where part is 0 for a and 1 for b and j runs over
the base-p digits of the i-th entry.
"""

from __future__ import annotations

from functools import cache
from typing import Any, NamedTuple

import numpy as np
from loguru import logger

from .css import (
    AqeccParams,
    ClaimedBounds,
    ClaimStatus,
    CssPair,
    DistanceValue,
    TheoremClaim,
    TheoremTag,
    failed_hypothesis,
    out_of_budget,
    settle,
)
from .errors import (
    BudgetExceededError,
    CodeMismatchError,
    FieldError,
    InvalidParameterError,
    NotSelfOrthogonalError,
    UndefinedDistanceError,
)
from .field import (
    FieldArray,
    FieldBasis,
    FiniteField,
    as_ints,
    field_from_dict,
    field_of,
    from_digits,
    make_field,
    make_tower,
    normal_basis,
    prime_tower,
    to_digits,
    vstack,
)
from .lincode import LinearCode, dual, from_generator, kernel_rows, zero_code
from .oracle import scan_minimum
from .settings import Settings

X_PART = 0
Z_PART = 1


class SymplecticVector:
    """(a|b) in GF(q)^(2n); a is the X part, b the Z part."""

    def __init__(self, field: FiniteField, a: Any, b: Any):
        self.field = field
        self.a = field(a)
        self.b = field(b)
        if self.a.shape != self.b.shape or self.a.ndim != 1:
            raise CodeMismatchError(f"X part {self.a.shape} and Z part {self.b.shape} differ")

    @property
    def n(self) -> int:
        return int(self.a.shape[0])

    @property
    def wt_x(self) -> int:
        return int(np.count_nonzero(as_ints(self.a)))

    @property
    def wt_z(self) -> int:
        return int(np.count_nonzero(as_ints(self.b)))

    @property
    def swt(self) -> int:
        return int(np.count_nonzero(as_ints(self.a) | as_ints(self.b)))

    def concatenated(self) -> FieldArray:
        return self.field.GF(np.concatenate([as_ints(self.a), as_ints(self.b)]))

    def __repr__(self) -> str:
        return f"SymplecticVector({as_ints(self.a).tolist()}|{as_ints(self.b).tolist()})"


def to_prime_coordinates(field: FiniteField, vectors: Any) -> np.ndarray:
    """Flatten (..., 2n) vectors over GF(q) to (..., 2tn) digits over GF(p)."""
    digits = to_digits(vectors, field)
    return digits.reshape(*digits.shape[:-2], digits.shape[-2] * digits.shape[-1])


def from_prime_coordinates(field: FiniteField, rows: Any, n: int) -> FieldArray:
    """Inverse of `to_prime_coordinates`."""
    rows = as_ints(rows)
    return from_digits(rows.reshape(*rows.shape[:-1], 2 * n, field.m), field)


def _prime_field(field: FiniteField) -> FiniteField:
    return make_field(field.p)


def _trace_to_prime(field: FiniteField, values: Any) -> FieldArray:
    return prime_tower(field).trace(values)


@cache
def symplectic_form_matrix(field: FiniteField, n: int) -> FieldArray:
    """Omega over GF(p) with <x|y>_s = x Omega y^T on prime coordinates."""
    size = 2 * field.m * n
    units = from_prime_coordinates(field, np.eye(size, dtype=np.int64), n)
    a, b = units[:, :n], units[:, n:]
    products = b @ a.T
    return _trace_to_prime(field, products - products.T)


def trace_symplectic_form(x: SymplecticVector, y: SymplecticVector) -> FieldArray:
    """tr_{q/p}(b . a' - b' . a) for x = (a|b), y = (a'|b')."""
    if x.field != y.field or x.n != y.n:
        raise CodeMismatchError(f"vectors {x} and {y} live in different spaces")
    return _trace_to_prime(x.field, (x.b * y.a - y.b * x.a).sum())


def _half_field(top: FiniteField) -> FiniteField:
    if top.m % 2:
        raise FieldError(f"{top} is not a quadratic extension of a subfield")
    return make_field(top.p, top.m // 2)


@cache
def _quadratic_basis(bottom: FiniteField) -> FieldBasis:
    """(beta, beta^q), the canonical normal basis of GF(q^2) over GF(q)."""
    top = make_field(bottom.p, 2 * bottom.m)
    return normal_basis(make_tower(bottom, top))


@cache
def _alternating_constant(bottom: FiniteField) -> FieldArray:
    beta = _quadratic_basis(bottom).elements[0]
    return beta ** (2 * bottom.order) - beta**2


def trace_alternating_form(v: FieldArray, w: FieldArray) -> FieldArray:
    """tr_{q/p}((v . w^q - v^q . w) / (beta^(2q) - beta^2)) for v, w in GF(q^2)^n."""
    if v.shape != w.shape:
        raise CodeMismatchError(f"vectors of shapes {v.shape} and {w.shape}")
    top = field_of(v)
    bottom = _half_field(top)
    q = bottom.order
    value = (v * w**q - v**q * w).sum() / _alternating_constant(bottom)
    return _trace_to_prime(bottom, make_tower(bottom, top).project(value))


def phi_map(vectors: FieldArray) -> FieldArray:
    """(v|w) -> beta v + beta^q w, from GF(q)^(2n) to GF(q^2)^n."""
    field = field_of(vectors)
    n = vectors.shape[-1] // 2
    coordinates = np.stack([as_ints(vectors[..., :n]), as_ints(vectors[..., n:])], axis=-1)
    return _quadratic_basis(field).combine(field(coordinates))


def phi_inverse(values: FieldArray) -> FieldArray:
    """GF(q^2)^n back to GF(q)^(2n)."""
    bottom = _half_field(field_of(values))
    coordinates = as_ints(_quadratic_basis(bottom).coordinates(values))
    return bottom.GF(np.concatenate([coordinates[..., 0], coordinates[..., 1]], axis=-1))


class AdditiveCode:
    """A GF(p)-linear code inside GF(q)^(2n)."""

    def __init__(self, field: FiniteField, n: int, span: LinearCode):
        if span.field != _prime_field(field) or span.n != 2 * field.m * n:
            raise CodeMismatchError(
                f"span {span} does not describe vectors of GF({field.order})^{2 * n}"
            )
        self.field = field
        self.n = n
        self.span = span

    @property
    def t(self) -> int:
        return self.field.m

    @property
    def rank(self) -> int:
        return self.span.k

    @property
    def size(self) -> int:
        return self.field.p**self.rank

    def vectors(self) -> FieldArray:
        """Generators as vectors of GF(q)^(2n)."""
        return from_prime_coordinates(self.field, self.span.generator, self.n)

    def symplectic_vectors(self) -> list[SymplecticVector]:
        return [SymplecticVector(self.field, v[: self.n], v[self.n :]) for v in self.vectors()]

    def is_self_orthogonal(self) -> bool:
        if self.rank == 0:
            return True
        generator = self.span.generator
        products = generator @ symplectic_form_matrix(self.field, self.n) @ generator.T
        return not np.any(as_ints(products))

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.field.p,
            "t": self.t,
            "n": self.n,
            "modulus": self.field.modulus_coefficients,
            "generator": self.span.rows(),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> AdditiveCode:
        field_data = {"p": data["p"], "m": data["t"]}
        if "modulus" in data:
            field_data["modulus"] = data["modulus"]
        field = field_from_dict(field_data)
        n = int(data["n"])
        span = from_generator(_prime_field(field), data["generator"], n=2 * field.m * n)
        return cls(field, n, span)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdditiveCode):
            return False
        return self.field == other.field and self.n == other.n and self.span == other.span

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.span))

    def __repr__(self) -> str:
        return f"AdditiveCode(GF({self.field.order})^{2 * self.n}, rank {self.rank})"


def additive_from_vectors(field: FiniteField, vectors: Any, n: int) -> AdditiveCode:
    """GF(p)-span of (r, 2n) vectors over GF(q)."""
    prime = _prime_field(field)
    rows = to_prime_coordinates(field, field(vectors)).reshape(-1, 2 * field.m * n)
    if rows.shape[0] == 0:
        return AdditiveCode(field, n, zero_code(prime, 2 * field.m * n))
    return AdditiveCode(field, n, from_generator(prime, rows, n=2 * field.m * n))


def symplectic_dual(code: AdditiveCode) -> AdditiveCode:
    """All vectors with zero trace-symplectic form against every codeword."""
    prime = _prime_field(code.field)
    size = code.span.n
    if code.rank == 0:
        return AdditiveCode(code.field, code.n, LinearCode(prime, size, prime.identity(size)))
    constraints = code.span.generator @ symplectic_form_matrix(code.field, code.n)
    kernel = kernel_rows(prime, constraints, size)
    return AdditiveCode(code.field, code.n, LinearCode(prime, size, kernel))


def _part_columns(code: AdditiveCode, part: int) -> np.ndarray:
    width = code.n * code.t
    return np.arange(part * width, (part + 1) * width)


def _position_weights(n: int, t: int):
    def weights(words: FieldArray) -> np.ndarray:
        return np.count_nonzero(as_ints(words).reshape(-1, n, t).any(axis=-1), axis=-1)

    return weights


def _pure_errors(code: AdditiveCode, part: int) -> FieldArray:
    """Generator of the errors of C-perp_s supported on one part only."""
    prime = _prime_field(code.field)
    width = code.n * code.t
    if code.rank == 0:
        return prime.identity(width)
    constraints = code.span.generator @ symplectic_form_matrix(code.field, code.n)
    return kernel_rows(prime, constraints[:, _part_columns(code, part)], width)


def _pure_minimum(
    code: AdditiveCode, part: int, *, exclude: bool, settings: Settings | None
) -> int:
    generator = _pure_errors(code, part)
    accept = None
    if exclude:
        checks = code.span.parity_check[:, _part_columns(code, part)]

        def accept(words: FieldArray) -> np.ndarray:
            return np.any(as_ints(words @ checks.T) != 0, axis=1)

    label = "X" if part == X_PART else "Z"
    scan = scan_minimum(
        _prime_field(code.field),
        generator,
        weight=_position_weights(code.n, code.t),
        accept=accept,
        what=f"pure {label} errors of {code}",
        settings=settings,
    )
    if scan.minimum is None:
        raise UndefinedDistanceError(f"{code} has no undetectable pure {label} error")
    return scan.minimum


def _logical_dimension(code: AdditiveCode) -> int:
    free = code.t * code.n - code.rank
    if free < 0 or free % code.t:
        raise InvalidParameterError(
            f"K = p^{free} of {code} is not a power of q = {code.field.order}"
        )
    return free // code.t


def require_self_orthogonal(code: AdditiveCode) -> None:
    if not code.is_self_orthogonal():
        raise NotSelfOrthogonalError(f"{code} is not contained in its trace-symplectic dual")


def stabilizer_params(code: AdditiveCode, *, settings: Settings | None = None) -> AqeccParams:
    """[[n, k, d_z/d_x]]_q of the stabilizer code defined by a self-orthogonal C.

    d_x and d_z are the least X and Z weights of pure errors in C-perp_s
    outside C, or anywhere in C-perp_s when K = 1.

    Raises:
        NotSelfOrthogonalError: C is not inside its trace-symplectic dual.
        UndefinedDistanceError: no pure error of one type is undetectable.
        BudgetExceededError: an enumeration is over budget.
    """
    require_self_orthogonal(code)
    k = _logical_dimension(code)
    exclude = k > 0
    dx = _pure_minimum(code, X_PART, exclude=exclude, settings=settings)
    dz = _pure_minimum(code, Z_PART, exclude=exclude, settings=settings)
    if exclude:
        pure = dx == _pure_minimum(code, X_PART, exclude=False, settings=settings) and (
            dz == _pure_minimum(code, Z_PART, exclude=False, settings=settings)
        )
    else:
        pure = True
    params = AqeccParams(
        code.field.order, code.n, k, DistanceValue(dz, True), DistanceValue(dx, True), pure
    )
    logger.debug("{} defines {}", code, params)
    return params


def symplectic_distance(code: AdditiveCode, *, settings: Settings | None = None) -> int:
    """Least symplectic weight in C-perp_s outside C (all of C-perp_s when K = 1)."""
    require_self_orthogonal(code)
    normalizer = symplectic_dual(code)
    exclude = _logical_dimension(code) > 0
    scan = scan_minimum(
        _prime_field(code.field),
        normalizer.span.generator,
        weight=_symplectic_weights(code.n, code.t),
        accept=(lambda words: ~code.span.contains(words)) if exclude else None,
        what=f"symplectic distance of {code}",
        settings=settings,
    )
    if scan.minimum is None:
        raise UndefinedDistanceError(f"{code} has no undetectable error")
    return scan.minimum


def _symplectic_weights(n: int, t: int):
    def weights(words: FieldArray) -> np.ndarray:
        nonzero = as_ints(words).reshape(-1, 2, n, t).any(axis=-1)
        return np.count_nonzero(nonzero[:, 0] | nonzero[:, 1], axis=-1)

    return weights


def css_to_additive(pair: CssPair) -> AdditiveCode:
    """{(a|b) : a in C1-dual, b in C2} as an additive code."""
    field = pair.field
    n = pair.n
    scalars = field(field.p ** np.arange(field.m))
    blocks = []
    outer_dual = dual(pair.c1)
    if outer_dual.k:
        x_rows = (scalars[:, None, None] * outer_dual.generator[None]).reshape(-1, n)
        blocks.append(np.concatenate([as_ints(x_rows), np.zeros_like(as_ints(x_rows))], axis=1))
    if pair.c2.k:
        z_rows = (scalars[:, None, None] * pair.c2.generator[None]).reshape(-1, n)
        blocks.append(np.concatenate([np.zeros_like(as_ints(z_rows)), as_ints(z_rows)], axis=1))
    vectors = np.concatenate(blocks, axis=0) if blocks else np.zeros((0, 2 * n), dtype=np.int64)
    return additive_from_vectors(field, vectors, n)


def phi_b_expand(code: AdditiveCode, basis: FieldBasis) -> AdditiveCode:
    """(u|v) -> (c_B(u) | M c_B(v)) coordinatewise, M the Gram matrix of the basis."""
    tower = basis.tower
    if tower.top != code.field:
        raise FieldError(f"basis of {tower} cannot expand a code over {code.field}")
    bottom = tower.bottom
    m = tower.degree
    if code.rank == 0:
        return additive_from_vectors(bottom, np.zeros((0, 2 * code.n * m)), code.n * m)
    vectors = code.vectors()
    u = basis.coordinates(vectors[:, : code.n])
    v = basis.coordinates(vectors[:, code.n :]).reshape(-1, m) @ basis.gram_matrix
    rows = np.concatenate(
        [as_ints(u).reshape(code.rank, -1), as_ints(v).reshape(code.rank, -1)], axis=1
    )
    return additive_from_vectors(bottom, rows, code.n * m)


class AdditiveDerivation(NamedTuple):
    code: AdditiveCode | None
    params: AqeccParams | None
    claim: TheoremClaim


def _params_or_none(code: AdditiveCode, settings: Settings | None) -> AqeccParams | None:
    try:
        return stabilizer_params(code, settings=settings)
    except BudgetExceededError as e:
        logger.warning("parameters of {} unknown: {}", code, e)
        return None


def check_additive(
    tag: TheoremTag,
    inputs: dict[str, Any],
    code: AdditiveCode,
    claimed: ClaimedBounds,
    notes: tuple[str, ...],
    settings: Settings | None,
    *,
    require_pure: bool = False,
) -> AdditiveDerivation:
    """Settle `claimed` against the stabilizer oracle; an impure result refutes a pure claim."""
    try:
        params = stabilizer_params(code, settings=settings)
    except BudgetExceededError as e:
        return AdditiveDerivation(code, None, out_of_budget(tag, inputs, claimed, e))
    claim = settle(tag, inputs, claimed, params, notes)
    if require_pure and params.exact and params.pure is False:
        logger.warning("{} claim {} refuted: {} is not pure", tag.value, claimed, params)
        claim = claim._replace(
            status=ClaimStatus.REFUTED, notes=(*claim.notes, f"{params} is not pure")
        )
    return AdditiveDerivation(code, params, claim)


def _additive_inputs(code: AdditiveCode) -> dict[str, Any]:
    return {"q": code.field.order, "n": code.n, "rank": code.rank}


def expand_additive(
    code: AdditiveCode, basis: FieldBasis, *, settings: Settings | None = None
) -> AdditiveDerivation:
    """((nm, K, d_z*/d_x*)) over GF(q) from ((n, K, d_z/d_x)) over GF(q^m), d* >= d."""
    require_self_orthogonal(code)
    m = basis.degree
    before = _params_or_none(code, settings)
    k = _logical_dimension(code)
    claimed = ClaimedBounds(
        code.n * m,
        k * m,
        before.dz.value if before else None,
        before.dx.value if before else None,
    )
    inputs = {**_additive_inputs(code), "basis": basis.to_dict()}
    expanded = phi_b_expand(code, basis)
    return check_additive(
        TheoremTag.ADDITIVE_EXPANSION, inputs, expanded, claimed, (), settings
    )


def _isotropic_extension(code: AdditiveCode, rank: int) -> AdditiveCode:
    """Grow `code` inside its symplectic dual, one canonical vector at a time."""
    prime = _prime_field(code.field)
    current = code
    while current.rank < rank:
        candidates = symplectic_dual(current).span.generator
        fresh = candidates[~current.span.contains(candidates)]
        if fresh.shape[0] == 0:
            raise InvalidParameterError(f"{current} is already maximal isotropic")
        rows = vstack(prime, current.span.generator, fresh[:1])
        current = AdditiveCode(code.field, code.n, from_generator(prime, rows, n=code.span.n))
    return current


def delete_coordinate(code: AdditiveCode, i: int) -> AdditiveCode:
    """Delete coordinate i in the GF(q^2) picture and map back."""
    if not 0 <= i < code.n:
        raise CodeMismatchError(f"coordinate {i} outside 0..{code.n - 1}")
    if code.rank == 0:
        return additive_from_vectors(code.field, np.zeros((0, 2 * (code.n - 1))), code.n - 1)
    images = phi_map(code.vectors())
    keep = [j for j in range(code.n) if j != i]
    return additive_from_vectors(code.field, phi_inverse(images[:, keep]), code.n - 1)


def puncture_additive(
    code: AdditiveCode, i: int, *, settings: Settings | None = None
) -> AdditiveDerivation:
    """Pure [[n, k, d_z/d_x]] with d_x, d_z >= 2 gives [[n - 1, k, >= d_z - 1 / >= d_x - 1]].

    The punctured normalizer is the deletion of coordinate i from C-perp_s;
    its symplectic dual is enlarged isotropically until K matches q^k.
    The result must itself be pure; an impure one refutes the claim.
    """
    inputs = {**_additive_inputs(code), "coordinate": i}
    claimed = ClaimedBounds(code.n - 1, 0, None, None)
    reasons = []
    if code.n < 2:
        reasons.append("length must be at least 2")
        return AdditiveDerivation(
            None, None, failed_hypothesis(TheoremTag.ADDITIVE_PUNCTURE, inputs, claimed, *reasons)
        )
    try:
        before = stabilizer_params(code, settings=settings)
    except BudgetExceededError as e:
        return AdditiveDerivation(
            None, None, out_of_budget(TheoremTag.ADDITIVE_PUNCTURE, inputs, claimed, e)
        )
    claimed = ClaimedBounds(code.n - 1, before.k, before.dz.value - 1, before.dx.value - 1)
    if not before.pure:
        reasons.append(f"{before} is not pure")
    if before.dz.value < 2 or before.dx.value < 2:
        reasons.append(f"{before} needs d_z, d_x >= 2")
    if before.k < 1:
        reasons.append("the code encodes no qudit")
    if reasons:
        return AdditiveDerivation(
            None, None, failed_hypothesis(TheoremTag.ADDITIVE_PUNCTURE, inputs, claimed, *reasons)
        )
    if not 0 <= i < code.n:
        raise CodeMismatchError(f"coordinate {i} outside 0..{code.n - 1}")

    normalizer = delete_coordinate(symplectic_dual(code), i)
    shortened = symplectic_dual(normalizer)
    target = code.t * (code.n - 1 - before.k)
    if shortened.rank > target:
        reasons.append(f"deleting coordinate {i} leaves a stabilizer of rank {shortened.rank}")
    else:
        try:
            punctured = _isotropic_extension(shortened, target)
        except InvalidParameterError as e:
            reasons.append(str(e))
    if reasons:
        return AdditiveDerivation(
            None, None, failed_hypothesis(TheoremTag.ADDITIVE_PUNCTURE, inputs, claimed, *reasons)
        )
    return check_additive(
        TheoremTag.ADDITIVE_PUNCTURE, inputs, punctured, claimed, (), settings, require_pure=True
    )


def direct_sum_additive(
    a: AdditiveCode, b: AdditiveCode, *, settings: Settings | None = None
) -> AdditiveDerivation:
    """((n1 + n2, K1 K2, min d_z / min d_x))."""
    if a.field != b.field:
        raise CodeMismatchError(f"codes over {a.field} and {b.field}")
    require_self_orthogonal(a)
    require_self_orthogonal(b)
    n, t = a.n + b.n, a.t
    rows = np.zeros((a.rank + b.rank, 2, n, t), dtype=np.int64)
    rows[: a.rank, :, : a.n] = as_ints(a.span.generator).reshape(-1, 2, a.n, t)
    rows[a.rank :, :, a.n :] = as_ints(b.span.generator).reshape(-1, 2, b.n, t)
    prime = _prime_field(a.field)
    flat = rows.reshape(-1, 2 * n * t)
    code = AdditiveCode(a.field, n, from_generator(prime, flat, n=2 * n * t))

    pa, pb = _params_or_none(a, settings), _params_or_none(b, settings)
    claimed = ClaimedBounds(
        n,
        _logical_dimension(a) + _logical_dimension(b),
        min(pa.dz.value, pb.dz.value) if pa and pb else None,
        min(pa.dx.value, pb.dx.value) if pa and pb else None,
    )
    inputs = {"a": _additive_inputs(a), "b": _additive_inputs(b)}
    return check_additive(TheoremTag.ADDITIVE_DIRECT_SUM, inputs, code, claimed, (), settings)
