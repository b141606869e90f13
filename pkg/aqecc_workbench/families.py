"""
Classical code families and the asymmetric quantum codes derived from them.

Each constructor returns the code together with a spec carrying the
parameters the closed-form formulas predict. Each *_aqecc checker builds the
nested pair the corresponding theorem uses, expands it over the prime field
when q is not prime, and settles the theorem's claim against the oracles.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable
from typing import Any, NamedTuple

import galois
import numpy as np
from loguru import logger

from .css import (
    ClaimedBounds,
    CssPair,
    TheoremClaim,
    TheoremTag,
    check_pair,
    expand_with_claim,
    failed_hypothesis,
    out_of_budget,
)
from .errors import BudgetExceededError, CodeMismatchError, FieldError, InvalidParameterError
from .field import (
    FieldArray,
    FieldTower,
    FiniteField,
    as_ints,
    field_of_order,
    make_field,
    make_tower,
    prime_basis,
    split_prime_power,
)
from .lincode import LinearCode, dual, from_generator, full_space, is_subcode, zero_code
from .oracle import check_budget
from .settings import Settings
from .symplectic import check_additive, css_to_additive, phi_b_expand


def _check_expanded(
    tag: TheoremTag,
    inputs: dict[str, Any],
    pair: CssPair,
    claimed: ClaimedBounds,
    basis_kind: str,
    settings: Settings | None,
    notes: tuple[str, ...] = (),
) -> TheoremClaim:
    if pair.field.is_prime:
        return check_pair(tag, inputs, pair, claimed, notes=notes, settings=settings).claim
    basis = prime_basis(pair.field, basis_kind)
    derivation = expand_with_claim(
        pair, basis, tag, inputs, claimed, notes=notes, settings=settings
    )
    return derivation.claim


# Generalized Reed-Muller codes


class GrmSpec(NamedTuple):
    q: int
    m: int
    alpha: int
    dimension: int
    distance: int
    dual_order: int

    def to_dict(self) -> dict[str, Any]:
        return self._asdict()


def grm_dimension(q: int, m: int, alpha: int) -> int:
    """sum_i (-1)^i C(m, i) C(m + alpha - iq, alpha - iq)."""
    total = 0
    for i in range(m + 1):
        rest = alpha - i * q
        if rest < 0:
            break
        total += (-1) ** i * math.comb(m, i) * math.comb(m + rest, rest)
    return total


def grm_distance(q: int, m: int, alpha: int) -> int:
    """(t + 1) q^u where m(q - 1) - alpha = (q - 1) u + t, 0 <= t < q - 1."""
    u, t = divmod(m * (q - 1) - alpha, q - 1)
    return (t + 1) * q**u


def grm_dual_order(q: int, m: int, alpha: int) -> int:
    return m * (q - 1) - 1 - alpha


def _require_grm_order(q: int, m: int, alpha: int) -> None:
    if m < 1:
        raise InvalidParameterError(f"number of variables must be positive, got m={m}")
    if not 0 <= alpha < m * (q - 1):
        raise InvalidParameterError(f"order {alpha} outside 0..{m * (q - 1) - 1}")


def grm_spec(q: int, m: int, alpha: int) -> GrmSpec:
    _require_grm_order(q, m, alpha)
    return GrmSpec(
        q,
        m,
        alpha,
        grm_dimension(q, m, alpha),
        grm_distance(q, m, alpha),
        grm_dual_order(q, m, alpha),
    )


def grm(
    q: int, m: int, alpha: int, *, settings: Settings | None = None
) -> tuple[LinearCode, GrmSpec]:
    """Evaluations of the polynomials of total degree <= alpha at all of GF(q)^m.

    Points are ordered lexicographically by element index and monomials in
    graded-lex order, each variable exponent below q.
    """
    spec = grm_spec(q, m, alpha)
    field = field_of_order(q, settings=settings)
    check_budget(f"points of GF({q})^{m}", q, m, settings)
    points = field(np.array(list(itertools.product(range(q), repeat=m)), dtype=np.int64))
    monomials = sorted(
        (e for e in itertools.product(range(q), repeat=m) if sum(e) <= alpha),
        key=lambda e: (sum(e), e),
    )
    rows = []
    for exponents in monomials:
        values = field.GF.Ones(q**m)
        for j, e in enumerate(exponents):
            if e:
                values = values * points[:, j] ** e
        rows.append(as_ints(values))
    code = from_generator(field, np.array(rows, dtype=np.int64))
    if code.k != spec.dimension:
        raise CodeMismatchError(
            f"R_{q}({alpha}, {m}) has rank {code.k}, formula gives {spec.dimension}"
        )
    return code, spec


def grm_aqecc(
    q: int,
    m: int,
    alpha1: int,
    alpha2: int,
    *,
    basis_kind: str = "polynomial",
    settings: Settings | None = None,
) -> TheoremClaim:
    """[[t q^m, t(k(a2) - k(a1)), d_z >= d(a2) / d_x >= d(a1-dual)]]_p from R(a1) < R(a2)."""
    _, t = split_prime_power(q)
    spec1, spec2 = grm_spec(q, m, alpha1), grm_spec(q, m, alpha2)
    inputs = {"q": q, "m": m, "alpha1": alpha1, "alpha2": alpha2, "basis": basis_kind}
    claimed = ClaimedBounds(
        t * q**m,
        t * (spec2.dimension - spec1.dimension),
        spec2.distance,
        grm_distance(q, m, spec1.dual_order),
    )
    if alpha1 >= alpha2:
        return failed_hypothesis(
            TheoremTag.GRM, inputs, claimed, f"alpha1={alpha1} must be below alpha2={alpha2}"
        )
    try:
        inner, _ = grm(q, m, alpha1, settings=settings)
        outer, _ = grm(q, m, alpha2, settings=settings)
    except BudgetExceededError as e:
        return out_of_budget(TheoremTag.GRM, inputs, claimed, e)
    pair = CssPair(outer, inner)
    return _check_expanded(TheoremTag.GRM, inputs, pair, claimed, basis_kind, settings)


# Character codes


def _require_odd_characteristic(q: int) -> int:
    p, t = split_prime_power(q)
    if p == 2:
        raise InvalidParameterError(f"character codes need odd characteristic, got q={q}")
    return t


def character_dimension(r: int, m: int) -> int:
    """s_m(r) = C(m, 0) + ... + C(m, r)."""
    return sum(math.comb(m, i) for i in range(r + 1))


def character_distance(r: int, m: int) -> int:
    return 2 ** (m - r)


def _binary_points(m: int) -> np.ndarray:
    return np.array(list(itertools.product((0, 1), repeat=m)), dtype=np.int64).reshape(-1, m)


def character_code(
    q: int, r: int, m: int, *, settings: Settings | None = None
) -> LinearCode:
    """Span of the characters x -> (-1)^(x.y) of Z_2^m with wt(y) <= r, over GF(q).

    Points x and labels y run over {0,1}^m in lexicographic order; labels are
    grouped by weight.
    """
    _require_odd_characteristic(q)
    if m < 1 or not 0 <= r <= m:
        raise InvalidParameterError(f"need m >= 1 and 0 <= r <= m, got r={r}, m={m}")
    field = field_of_order(q, settings=settings)
    check_budget(f"points of Z_2^{m}", 2, m, settings)
    points = _binary_points(m)
    labels = sorted((y for y in points.tolist() if sum(y) <= r), key=lambda y: (sum(y), y))
    parity = (points @ np.array(labels, dtype=np.int64).T) % 2
    rows = np.where(parity.T == 1, field.p - 1, 1)
    return from_generator(field, rows)


def _sign_pattern(field: FiniteField, m: int) -> FieldArray:
    weights = _binary_points(m).sum(axis=1)
    return field(np.where(weights % 2 == 1, field.p - 1, 1))


def character_dual_is_equivalent(
    q: int, r: int, m: int, *, settings: Settings | None = None
) -> bool:
    """Whether dual(C_q(r, m)) = D C_q(m - r - 1, m), D = diag((-1)^wt(x))."""
    code = character_code(q, r, m, settings=settings)
    if r == m:
        return dual(code).k == 0
    partner = character_code(q, m - r - 1, m, settings=settings)
    scaled = from_generator(code.field, partner.generator * _sign_pattern(code.field, m)[None, :])
    return dual(code) == scaled


def character_aqecc(
    q: int,
    r1: int,
    r2: int,
    m: int,
    *,
    basis_kind: str = "polynomial",
    settings: Settings | None = None,
) -> TheoremClaim:
    """[[t 2^m, t(s(r2) - s(r1)), d_z >= 2^(m - r2) / d_x >= 2^(r1 + 1)]]_p from C(r1) < C(r2)."""
    t = _require_odd_characteristic(q)
    inputs = {"q": q, "r1": r1, "r2": r2, "m": m, "basis": basis_kind}
    claimed = ClaimedBounds(
        t * 2**m,
        t * (character_dimension(r2, m) - character_dimension(r1, m)),
        character_distance(r2, m),
        2 ** (r1 + 1),
    )
    if not 0 <= r1 < r2 <= m:
        return failed_hypothesis(
            TheoremTag.CHARACTER, inputs, claimed, f"need 0 <= r1 < r2 <= m, got r1={r1}, r2={r2}"
        )
    try:
        inner = character_code(q, r1, m, settings=settings)
        outer = character_code(q, r2, m, settings=settings)
    except BudgetExceededError as e:
        return out_of_budget(TheoremTag.CHARACTER, inputs, claimed, e)
    pair = CssPair(outer, inner)
    return _check_expanded(TheoremTag.CHARACTER, inputs, pair, claimed, basis_kind, settings)


# Cyclic codes


def multiplicative_order(q: int, n: int) -> int:
    """Least m >= 1 with q^m = 1 mod n."""
    if math.gcd(q, n) != 1:
        raise InvalidParameterError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    m, power = 1, q % n
    while power != 1:
        power = power * q % n
        m += 1
    return m


def cyclotomic_coset(s: int, q: int, n: int) -> tuple[int, ...]:
    members = [s % n]
    while (value := members[-1] * q % n) != members[0]:
        members.append(value)
    return tuple(sorted(members))


def cyclotomic_cosets(q: int, n: int) -> list[tuple[int, ...]]:
    """q-cyclotomic cosets modulo n, ordered by their least element."""
    multiplicative_order(q, n)
    seen: set[int] = set()
    cosets = []
    for s in range(n):
        if s not in seen:
            coset = cyclotomic_coset(s, q, n)
            seen.update(coset)
            cosets.append(coset)
    return cosets


def splitting_field(
    q: int, n: int, *, settings: Settings | None = None
) -> tuple[FieldTower, FieldArray]:
    """GF(q^ord_n(q)) over GF(q), and alpha = g^((Q - 1) / n) for its primitive g."""
    field = field_of_order(q, settings=settings)
    m = multiplicative_order(q, n)
    top = make_field(field.p, field.m * m, settings=settings)
    tower = make_tower(field, top)
    alpha = top.generator ** ((top.order - 1) // n)
    return tower, alpha


def cyclic_code(tower: FieldTower, alpha: FieldArray, n: int, zeros: Iterable[int]) -> LinearCode:
    """Cyclic code of length n over the bottom field with zeros alpha^s, s in `zeros`.

    Raises:
        FieldError: the generator polynomial has a coefficient outside the bottom field.
    """
    exponents = sorted({s % n for s in zeros})
    field = tower.bottom
    if not exponents:
        return full_space(field, n)
    if len(exponents) == n:
        return zero_code(field, n)
    roots = alpha ** np.array(exponents, dtype=np.int64)
    generator = galois.Poly.Roots(roots, field=tower.top.GF)
    coefficients = as_ints(tower.project(generator.coeffs[::-1]))
    degree = len(exponents)
    rows = np.zeros((n - degree, n), dtype=np.int64)
    for shift in range(n - degree):
        rows[shift, shift : shift + degree + 1] = coefficients
    return from_generator(field, rows)


# BCH codes


class BchSpec(NamedTuple):
    q: int
    n: int
    b: int
    delta: int
    cosets: tuple[tuple[int, ...], ...]
    generator_degree: int
    dimension: int

    def to_dict(self) -> dict[str, Any]:
        data = self._asdict()
        data["cosets"] = [list(coset) for coset in self.cosets]
        return data


def bch_zero_set(q: int, n: int, b: int, delta: int) -> frozenset[int]:
    """Union of the cyclotomic cosets of b, ..., b + delta - 2."""
    zeros: set[int] = set()
    for s in range(b, b + delta - 1):
        zeros.update(cyclotomic_coset(s, q, n))
    return frozenset(zeros)


def _cosets_of(zeros: frozenset[int], q: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(coset for coset in cyclotomic_cosets(q, n) if coset[0] in zeros)


def bch(
    q: int, n: int, b: int = 1, delta: int = 2, *, settings: Settings | None = None
) -> tuple[LinearCode, BchSpec]:
    """BCH code with zeros alpha^b, ..., alpha^(b + delta - 2) and their conjugates."""
    if math.gcd(q, n) != 1:
        raise InvalidParameterError(f"gcd({q}, {n}) != 1")
    if not 2 <= delta <= n:
        raise InvalidParameterError(f"designed distance {delta} outside 2..{n}")
    tower, alpha = splitting_field(q, n, settings=settings)
    zeros = bch_zero_set(q, n, b, delta)
    code = cyclic_code(tower, alpha, n, zeros)
    spec = BchSpec(q, n, b, delta, _cosets_of(zeros, q, n), len(zeros), n - len(zeros))
    return code, spec


def bch_bound(zeros: Iterable[int], n: int) -> int:
    """One more than the longest run of consecutive exponents mod n among `zeros`."""
    present = {s % n for s in zeros}
    if len(present) == n:
        return n + 1
    longest = 0
    for start in present:
        if (start - 1) % n in present:
            continue
        run = 0
        while (start + run) % n in present:
            run += 1
        longest = max(longest, run)
    return longest + 1


def dual_zero_set(zeros: Iterable[int], n: int) -> frozenset[int]:
    """Zeros of the dual of the cyclic code with zero set `zeros`: -(complement)."""
    present = {s % n for s in zeros}
    return frozenset((-s) % n for s in range(n) if s not in present)


def bch_dimension_formula(q: int, m: int, n: int, delta: int) -> int:
    """n - m ceil((delta - 1)(1 - 1/q)), valid for narrow-sense codes in the small-delta range."""
    return n - m * -(-(delta - 1) * (q - 1) // q)


def bch_nested_aqecc(
    q: int,
    n: int,
    delta1: int,
    delta2: int,
    *,
    basis_kind: str = "polynomial",
    settings: Settings | None = None,
) -> TheoremClaim:
    """Narrow-sense BCH codes C1, C2 with C1-dual < C2.

    Requires q^floor(m/2) < n <= q^m - 1, 2 <= delta_i <= delta_max,
    delta1 < delta2-dual <= delta2 < delta1-dual and distinct coset unions.
    Claims [[tn, t(n - m ceil((d1 - 1)(1 - 1/q)) - m ceil((d2 - 1)(1 - 1/q))),
    d_z >= delta2 / d_x >= delta1]]_p.
    """
    _, t = split_prime_power(q)
    m = multiplicative_order(q, n)
    inputs = {"q": q, "n": n, "delta1": delta1, "delta2": delta2, "basis": basis_kind}
    k = bch_dimension_formula(q, m, n, delta1) + bch_dimension_formula(q, m, n, delta2) - n
    claimed = ClaimedBounds(t * n, t * k, delta2, delta1)

    delta_max = min(n * q ** -(-m // 2) // (q**m - 1), n)
    reasons = []
    if not q ** (m // 2) < n <= q**m - 1:
        reasons.append(f"n={n} outside q^floor(m/2) < n <= q^m - 1")
    if not (2 <= delta1 <= delta_max and 2 <= delta2 <= delta_max):
        reasons.append(f"designed distances must lie in 2..{delta_max}")
    zeros1 = bch_zero_set(q, n, 1, delta1)
    zeros2 = bch_zero_set(q, n, 1, delta2)
    if zeros1 == zeros2:
        reasons.append("the two coset unions coincide")
    perp1 = bch_bound(dual_zero_set(zeros1, n), n)
    perp2 = bch_bound(dual_zero_set(zeros2, n), n)
    if not delta1 < perp2 <= delta2 < perp1:
        reasons.append(
            f"need delta1 < delta2-dual <= delta2 < delta1-dual, got "
            f"{delta1} < {perp2} <= {delta2} < {perp1}"
        )
    if reasons:
        return failed_hypothesis(TheoremTag.BCH_NESTED, inputs, claimed, *reasons)

    try:
        tower, alpha = splitting_field(q, n, settings=settings)
    except BudgetExceededError as e:
        return out_of_budget(TheoremTag.BCH_NESTED, inputs, claimed, e)
    c1 = cyclic_code(tower, alpha, n, zeros1)
    c2 = cyclic_code(tower, alpha, n, zeros2)
    inner = dual(c1)
    if not (inner.k < c2.k and is_subcode(inner, c2)):
        return failed_hypothesis(
            TheoremTag.BCH_NESTED, inputs, claimed, "the dual of C1 is not a proper subcode of C2"
        )
    notes = (f"delta1-dual={perp1}", f"delta2-dual={perp2}")
    return _check_expanded(
        TheoremTag.BCH_NESTED, inputs, CssPair(c2, inner), claimed, basis_kind, settings, notes
    )


class DesignedShape(NamedTuple):
    """One parameter shape [[tn, t(n - m x - offset), d_z >= dz / d_x >= dx]]_p."""

    name: str
    c: int | None
    ell: int | None
    x: int
    offset: int
    dz: int
    dx: int

    @property
    def label(self) -> str:
        pairs = (("c", self.c), ("l", self.ell))
        extras = [f"{key}={value}" for key, value in pairs if value is not None]
        return f"{self.name}({', '.join(extras)})" if extras else self.name

    def to_dict(self) -> dict[str, Any]:
        return self._asdict()


def bch_designed_shapes(q: int) -> list[DesignedShape]:
    """Every shape of the designed-distance BCH family for alphabet q."""
    shapes = [DesignedShape("4q-5", None, None, 4 * q - 5, 2, 2 * q + 2, 2 * q)]
    shapes += [
        DesignedShape("4q-c-5", c, None, 4 * q - c - 5, 2, 2 * q + 2, 2 * q - c)
        for c in range(q - 1)
    ]
    shapes += [
        DesignedShape("2c-l-4", c, ell, 2 * c - ell - 4, 2, c, c - ell)
        for c in range(2, q + 1)
        for ell in range(c - 1)
    ]
    shapes += [
        DesignedShape("2c-l-6", c, ell, 2 * c - ell - 6, 2, c, c - ell)
        for c in range(q + 3, 2 * q + 1)
        for ell in range(c - q - 2)
    ]
    shapes += [
        DesignedShape("4q-l-5", None, ell, 4 * q - ell - 5, 1, 2 * q + 1, 2 * q - ell)
        for ell in range(q - 1)
    ]
    return shapes


def _designed_pair_zeros(
    q: int, m: int, shape: DesignedShape
) -> tuple[frozenset[int], frozenset[int], int, int] | None:
    """Zero sets (Z1, Zd) with C1 = <Z1>, C2 = dual(<Zd>) matching the shape.

    Z1 is a BCH zero set of designed distance dz and Zd one of designed
    distance dx. Narrow-sense starts are tried first, then every pair of
    starts in increasing order.
    """
    n = q**m - 1
    target = m * shape.x + shape.offset
    starts = [1] + [b for b in range(n) if b != 1]
    outer_sets = {b: bch_zero_set(q, n, b, shape.dz) for b in starts}
    dual_sets = {b: bch_zero_set(q, n, b, shape.dx) for b in starts}
    negated = {b: frozenset((-s) % n for s in zeros) for b, zeros in dual_sets.items()}
    for b1 in starts:
        z1 = outer_sets[b1]
        for b2 in starts:
            if len(z1) + len(dual_sets[b2]) == target and not z1 & negated[b2]:
                return z1, dual_sets[b2], b1, b2
    return None


def bch_designed_aqecc(
    q: int,
    m: int,
    shape: DesignedShape,
    *,
    basis_kind: str = "polynomial",
    settings: Settings | None = None,
) -> TheoremClaim:
    """Check one designed-distance shape at n = q^m - 1.

    The nested cyclic pair is reconstructed from two BCH zero sets; when no
    pair of starts reaches the claimed dimension the claim is reported as a
    failed hypothesis.
    """
    p, t = split_prime_power(q)
    n = q**m - 1
    inputs = {"q": q, "m": m, "shape": shape.label, "basis": basis_kind}
    claimed = ClaimedBounds(t * n, t * (n - m * shape.x - shape.offset), shape.dz, shape.dx)
    reasons = []
    if p == 2:
        reasons.append(f"q={q} must be odd")
    if m < 3 or (q == 3 and m < 4):
        reasons.append(f"m={m} too small (m >= 3, and m >= 4 when q = 3)")
    if claimed.k <= 0:
        reasons.append(f"claimed dimension {claimed.k} is not positive")
    if reasons:
        return failed_hypothesis(TheoremTag.BCH_DESIGNED, inputs, claimed, *reasons)

    try:
        tower, alpha = splitting_field(q, n, settings=settings)
    except BudgetExceededError as e:
        return out_of_budget(TheoremTag.BCH_DESIGNED, inputs, claimed, e)
    found = _designed_pair_zeros(q, m, shape)
    if found is None:
        logger.warning("no BCH zero sets reproduce {} for q={}, m={}", shape.label, q, m)
        return failed_hypothesis(
            TheoremTag.BCH_DESIGNED,
            inputs,
            claimed,
            "no nested pair of BCH zero sets reaches the claimed dimension",
        )
    zeros1, zeros_dual, b1, b2 = found
    c1 = cyclic_code(tower, alpha, n, zeros1)
    c2 = dual(cyclic_code(tower, alpha, n, zeros_dual))
    notes = (f"C1 starts at b={b1}", f"C2-dual starts at b={b2}")
    return _check_expanded(
        TheoremTag.BCH_DESIGNED, inputs, CssPair(c1, c2), claimed, basis_kind, settings, notes
    )


# Quadratic residue codes


class QrSpec(NamedTuple):
    """The four quadratic residue codes of prime length p over GF(q)."""

    p: int
    q: int
    squares: tuple[int, ...]
    non_squares: tuple[int, ...]
    residue: LinearCode
    residue_even: LinearCode
    nonresidue: LinearCode
    nonresidue_even: LinearCode

    def codes(self) -> dict[str, LinearCode]:
        return {
            "Q": self.residue,
            "Q_even": self.residue_even,
            "N": self.nonresidue,
            "N_even": self.nonresidue_even,
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "q": self.q,
            "squares": list(self.squares),
            "non_squares": list(self.non_squares),
            "codes": {name: code.to_dict() for name, code in self.codes().items()},
        }


def quadratic_residues(p: int) -> tuple[int, ...]:
    return tuple(sorted({x * x % p for x in range(1, p)}))


def qr(p: int, q: int, *, settings: Settings | None = None) -> QrSpec:
    """Q, Q-even, N, N-even with generators q(x), (x-1)q(x), n(x), (x-1)n(x).

    Raises:
        InvalidParameterError: p is not an odd prime, or q is not a nonzero
            quadratic residue modulo p.
    """
    if p < 3 or not galois.is_prime(p):
        raise InvalidParameterError(f"length must be an odd prime, got {p}")
    split_prime_power(q)
    squares = quadratic_residues(p)
    if q % p not in squares:
        raise InvalidParameterError(f"{q} is not a nonzero quadratic residue mod {p}")
    non_squares = tuple(s for s in range(1, p) if s not in squares)
    tower, alpha = splitting_field(q, p, settings=settings)
    try:
        codes = [
            cyclic_code(tower, alpha, p, zeros)
            for zeros in (squares, (0, *squares), non_squares, (0, *non_squares))
        ]
    except FieldError as e:
        raise InvalidParameterError(f"QR generator of length {p} is not over GF({q}): {e}") from e
    return QrSpec(p, q, squares, non_squares, *codes)


def qr_distance_bound(p: int) -> int:
    """ceil(sqrt(p)) for p = 1 mod 4; least d with d^2 - d + 1 >= p for p = 3 mod 4."""
    if p % 4 == 1:
        root = math.isqrt(p)
        return root if root * root == p else root + 1
    d = 1
    while d * d - d + 1 < p:
        d += 1
    return d


def qr_aqecc(
    p: int,
    q: int,
    *,
    basis_kind: str = "polynomial",
    settings: Settings | None = None,
) -> TheoremClaim:
    """[[tp, t, d_z/d_x]]_(p*) from the QR codes of length p over GF(q = p*^t).

    p = 1 mod 4 uses the pair (Q, Q-even) as a CSS pair; p = 3 mod 4 uses its
    symplectic image expanded with phi_B.
    """
    _, t = split_prime_power(q)
    bound = qr_distance_bound(p)
    claimed = ClaimedBounds(t * p, t, bound, bound)
    tag = TheoremTag.QR_1_MOD_4 if p % 4 == 1 else TheoremTag.QR_3_MOD_4
    inputs = {"p": p, "q": q, "basis": basis_kind}
    try:
        spec = qr(p, q, settings=settings)
    except InvalidParameterError as e:
        return failed_hypothesis(tag, inputs, claimed, str(e))
    except BudgetExceededError as e:
        return out_of_budget(tag, inputs, claimed, e)

    pair = CssPair(spec.residue, spec.residue_even)
    if tag is TheoremTag.QR_1_MOD_4:
        return _check_expanded(tag, inputs, pair, claimed, basis_kind, settings)
    code = css_to_additive(pair)
    if not pair.field.is_prime:
        code = phi_b_expand(code, prime_basis(pair.field, basis_kind))
    return check_additive(tag, inputs, code, claimed, (), settings).claim
