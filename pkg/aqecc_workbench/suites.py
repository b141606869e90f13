"""
Verification suites.

Each suite checks one family of properties exhaustively at desk scale or on
seeded random instances, and returns a SuiteReport listing every failure.
Checks whose enumeration is over budget are counted as skipped.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field, replace
from typing import Any

import galois
import numpy as np
from loguru import logger

from .combinators import direct_sum, extend, puncture, shorten, uuv
from .css import (
    ClaimStatus,
    CssPair,
    TheoremClaim,
    derive,
    direct_sum_aqecc,
    expand_aqecc,
    extend_aqecc,
    puncture_aqecc,
    uuv_aqecc,
)
from .errors import BudgetExceededError, FieldError, InvalidParameterError
from .families import (
    bch,
    bch_nested_aqecc,
    character_aqecc,
    character_code,
    character_dimension,
    character_distance,
    character_dual_is_equivalent,
    grm,
    grm_aqecc,
    qr,
    qr_aqecc,
    quadratic_residues,
)
from .field import (
    BASIS_KINDS,
    FieldBasis,
    FieldTower,
    FiniteField,
    as_ints,
    basis_by_name,
    make_field,
    make_tower,
    prime_basis,
    split_prime_power,
)
from .lincode import LinearCode, dual, expand, from_generator, is_subcode, min_distance
from .settings import Settings, resolve_settings
from .symplectic import (
    AdditiveCode,
    SymplecticVector,
    additive_from_vectors,
    css_to_additive,
    direct_sum_additive,
    expand_additive,
    phi_b_expand,
    phi_map,
    puncture_additive,
    stabilizer_params,
    symplectic_dual,
    trace_alternating_form,
    trace_symplectic_form,
)


@dataclass
class SuiteReport:
    """Outcome of one suite."""

    name: str
    checked: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.checked += 1
        if not condition:
            self.failures.append(message)
            logger.warning("{}: {}", self.name, message)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": self.failures,
            "notes": self.notes,
        }


SUITE_MAX_CODEWORDS = 2**20


@dataclass(frozen=True)
class SuiteOptions:
    seed: int = 0
    max_q: int = 16
    max_p: int = 13
    samples: int = 20


# Random instances


def random_code(rng: np.random.Generator, gf: FiniteField, n: int, k: int) -> LinearCode:
    """Span of k uniformly random rows; the rank may come out below k."""
    rows = rng.integers(0, gf.order, size=(k, n))
    return from_generator(gf, rows, n=n)


def random_subcode(rng: np.random.Generator, code: LinearCode, k: int) -> LinearCode:
    if k == 0:
        return from_generator(code.field, [], n=code.n)
    mix = code.field(rng.integers(0, code.field.order, size=(k, code.k)))
    return from_generator(code.field, mix @ code.generator, n=code.n)


def random_pair(
    rng: np.random.Generator, gf: FiniteField, n: int, *, max_k: int | None = None
) -> CssPair:
    """A random strictly nested pair of length n."""
    while True:
        c1 = random_code(rng, gf, n, int(rng.integers(1, (max_k or n) + 1)))
        if c1.k == 0:
            continue
        c2 = random_subcode(rng, c1, int(rng.integers(0, c1.k)))
        if c2.k < c1.k:
            return CssPair(c1, c2)


def random_basis(rng: np.random.Generator, tower: FieldTower) -> FieldBasis:
    while True:
        elements = rng.integers(1, tower.top.order, size=tower.degree)
        try:
            return FieldBasis(tower, elements)
        except FieldError:
            continue


def _prime_powers(limit: int, settings: Settings | None) -> Iterator[FiniteField]:
    budget = resolve_settings(settings).max_field_order
    for q in range(2, min(limit, budget) + 1):
        try:
            p, m = split_prime_power(q)
        except FieldError:
            continue
        yield make_field(p, m, settings=settings)


def _towers(limit: int, settings: Settings | None) -> Iterator[FieldTower]:
    fields = list(_prime_powers(limit, settings))
    for bottom, top in itertools.product(fields, repeat=2):
        if bottom.p == top.p and top.m % bottom.m == 0 and top.m > bottom.m:
            yield make_tower(bottom, top)


# Suites


def field_axioms(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("field-axioms")
    for gf in _prime_powers(options.max_q, settings):
        a = gf.elements
        one = gf.GF(1)
        report.check(bool(np.all(a + gf.GF(0) == a)), f"{gf}: zero is not additive identity")
        report.check(bool(np.all(a * one == a)), f"{gf}: one is not multiplicative identity")
        nonzero = a[1:]
        report.check(
            bool(np.all(nonzero * nonzero ** (gf.order - 2) == one)), f"{gf}: missing inverses"
        )
        powers = gf.generator ** np.arange(gf.order - 1)
        report.check(
            len(set(as_ints(powers).tolist())) == gf.order - 1, f"{gf}: generator is not primitive"
        )
        x, y, z = (gf.GF(rng.integers(0, gf.order, size=64)) for _ in range(3))
        report.check(bool(np.all(x * (y + z) == x * y + x * z)), f"{gf}: distributivity fails")
        report.check(bool(np.all(x * y == y * x)), f"{gf}: multiplication is not commutative")
    return report


def trace_linearity(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("trace-linearity")
    for tower in _towers(options.max_q, settings):
        top, bottom = tower.top, tower.bottom
        x = top.GF(rng.integers(0, top.order, size=32))
        y = top.GF(rng.integers(0, top.order, size=32))
        c = bottom.GF(rng.integers(0, bottom.order, size=32))
        report.check(
            bool(np.all(tower.trace(x + y) == tower.trace(x) + tower.trace(y))),
            f"{tower}: trace is not additive",
        )
        report.check(
            bool(np.all(tower.trace(tower.embed(c) * x) == c * tower.trace(x))),
            f"{tower}: trace is not linear over the bottom field",
        )
        report.check(
            bool(np.all(tower.trace(x**tower.q) == tower.trace(x))),
            f"{tower}: trace is not Frobenius invariant",
        )
        image = set(as_ints(tower.trace(top.elements)).tolist())
        report.check(len(image) == bottom.order, f"{tower}: trace is not onto")
    return report


def dual_bases(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("dual-basis")
    for tower in _towers(options.max_q, settings):
        bases = [basis_by_name(tower, kind) for kind in BASIS_KINDS] + [random_basis(rng, tower)]
        for basis in bases:
            products = tower.trace(basis.elements[:, None] * basis.dual.elements[None, :])
            report.check(
                bool(np.all(as_ints(products) == np.eye(tower.degree, dtype=np.int64))),
                f"{basis}: tr(b_i b*_j) is not the identity",
            )
            report.check(basis.dual.dual == basis, f"{basis}: dual of the dual differs")
            values = tower.top.elements
            report.check(
                bool(np.all(basis.combine(basis.coordinates(values)) == values)),
                f"{basis}: coordinates do not round trip",
            )
    return report


def dual_expansion(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    """dual(expand(C, B)) = expand(dual(C), dual(B))."""
    report = SuiteReport("dual-expansion")
    for (p, m), count in (((2, 2), 50), ((3, 2), 25)):
        tower = make_tower(make_field(p), make_field(p, m))
        for _ in range(count):
            n = int(rng.integers(1, 7))
            code = random_code(rng, tower.top, n, int(rng.integers(1, min(n, 3) + 1)))
            basis = random_basis(rng, tower)
            left = dual(expand(code, basis))
            right = expand(dual(code), basis.dual)
            report.check(left == right, f"{code} over {basis}: dual of expansion differs")
    return report


def combinator_laws(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("combinator-laws")
    fields = [make_field(2), make_field(3), make_field(2, 2)]
    for trial in range(100):
        gf = fields[trial % len(fields)]
        n = int(rng.integers(2, 7))
        code = random_code(rng, gf, n, int(rng.integers(0, n + 1)))
        i = int(rng.integers(0, n))
        report.check(
            dual(puncture(code, i)) == shorten(dual(code), i),
            f"{code}: dual of puncture at {i} is not the shortened dual",
        )
        report.check(puncture(extend(code), n) == code, f"{code}: extend then puncture differs")
        other = random_code(rng, gf, int(rng.integers(1, 5)), 2)
        report.check(
            dual(direct_sum(code, other)) == direct_sum(dual(code), dual(other)),
            f"{code} + {other}: dual of direct sum differs",
        )

        pair = random_pair(rng, gf, n, max_k=4)
        outer, inner = pair.c1, pair.c2
        nested = {
            "puncture": (puncture(inner, i), puncture(outer, i)),
            "shorten": (shorten(inner, i), shorten(outer, i)),
            "extend": (extend(inner), extend(outer)),
            "direct sum": (direct_sum(inner, other), direct_sum(outer, other)),
            "(u|u+v)": (uuv(inner, dual(outer)), uuv(outer, dual(inner))),
        }
        for name, (small, big) in nested.items():
            report.check(is_subcode(small, big), f"{pair}: {name} at {i} breaks nesting")

        u = random_code(rng, gf, 4, int(rng.integers(1, 4)))
        v = random_code(rng, gf, 4, int(rng.integers(1, 4)))
        if u.k == 4 or v.k == 4:
            report.skipped += 1
            continue
        try:
            weight = min_distance(dual(uuv(u, v)), settings=settings).value
            expected = min(
                2 * min_distance(dual(v), settings=settings).value,
                min_distance(dual(u), settings=settings).value,
            )
        except BudgetExceededError:
            report.skipped += 1
            continue
        report.check(weight == expected, f"({u}|{u}+{v}): dual weight {weight} != {expected}")
    return report


def grm_formulas(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("grm-formulas")
    for q, m in itertools.product((2, 3, 4), (1, 2, 3)):
        for alpha in range(m * (q - 1)):
            code, spec = grm(q, m, alpha, settings=settings)
            report.check(code.k == spec.dimension, f"R_{q}({alpha},{m}): rank {code.k} != {spec}")
            partner, _ = grm(q, m, spec.dual_order, settings=settings)
            report.check(dual(code) == partner, f"R_{q}({alpha},{m}): dual is not R(alpha-dual)")
            try:
                d = min_distance(code, settings=settings).value
            except BudgetExceededError:
                report.skipped += 1
                continue
            report.check(d == spec.distance, f"R_{q}({alpha},{m}): d={d}, formula {spec.distance}")
    return report


def character_codes(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("character-codes")
    for q, m in itertools.product((3, 5, 9), (1, 2, 3)):
        for r in range(m + 1):
            code = character_code(q, r, m, settings=settings)
            report.check(
                code.k == character_dimension(r, m), f"C_{q}({r},{m}): dimension {code.k}"
            )
            report.check(
                character_dual_is_equivalent(q, r, m, settings=settings),
                f"C_{q}({r},{m}): dual is not D C({m - r - 1},{m})",
            )
            try:
                d = min_distance(code, settings=settings).value
            except BudgetExceededError:
                report.skipped += 1
                continue
            report.check(d == character_distance(r, m), f"C_{q}({r},{m}): d={d}")
    return report


BCH_LENGTHS = ((2, 7), (2, 15), (3, 8), (3, 26), (4, 15))


def bch_bounds(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("bch-bound")
    for q, n in BCH_LENGTHS:
        for delta in range(2, n + 1):
            try:
                code, spec = bch(q, n, 1, delta, settings=settings)
            except BudgetExceededError:
                report.skipped += 1
                continue
            report.check(
                code.k == n - spec.generator_degree, f"BCH({q},{n},{delta}): dimension {code.k}"
            )
            if code.k == 0:
                continue
            try:
                d = min_distance(code, settings=settings).value
            except BudgetExceededError:
                report.skipped += 1
                continue
            report.check(d >= delta, f"BCH({q},{n},{delta}): d={d} below the designed distance")
    return report


def qr_codes(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("qr-codes")
    for p in range(3, options.max_p + 1, 2):
        if not galois.is_prime(p):
            continue
        for gf in _prime_powers(options.max_q, settings):
            q = gf.order
            if q % p not in quadratic_residues(p):
                continue
            try:
                spec = qr(p, q, settings=settings)
            except BudgetExceededError:
                report.skipped += 1
                continue
            label = f"QR({p},{q})"
            report.check(spec.residue.k == (p + 1) // 2, f"{label}: dim Q = {spec.residue.k}")
            report.check(
                spec.residue_even.k == (p - 1) // 2, f"{label}: dim Q-even = {spec.residue_even.k}"
            )
            partner = spec.nonresidue if p % 4 == 1 else spec.residue
            report.check(spec.residue_even == dual(partner), f"{label}: Q-even is not the dual")
            try:
                d = min_distance(spec.residue, settings=settings).value
                d_even = min_distance(spec.residue_even, settings=settings).value
            except BudgetExceededError:
                report.skipped += 1
                continue
            report.check(d * d >= p, f"{label}: d={d} below the square-root bound")
            if p % 4 == 3:
                report.check(d * d - d + 1 >= p, f"{label}: d={d} fails d^2 - d + 1 >= p")
            if q == 2:
                report.notes.append(f"{label}: d(Q)={d}, d(Q-even)={d_even}")
    return report


def symplectic_isometry(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("symplectic-isometry")
    binary = make_field(2)
    for n in (1, 2, 3):
        vectors = binary.GF(np.array(list(itertools.product((0, 1), repeat=2 * n))))
        images = phi_map(vectors)
        for vector, image in zip(vectors, images, strict=True):
            swt = SymplecticVector(binary, vector[:n], vector[n:]).swt
            report.check(
                int(np.count_nonzero(as_ints(image))) == swt,
                f"phi({as_ints(vector).tolist()}) has the wrong weight",
            )
        if n > 2:
            continue
        for i, j in itertools.product(range(len(vectors)), repeat=2):
            x = SymplecticVector(binary, vectors[i][:n], vectors[i][n:])
            y = SymplecticVector(binary, vectors[j][:n], vectors[j][n:])
            report.check(
                trace_symplectic_form(x, y) == trace_alternating_form(images[i], images[j]),
                f"forms disagree on {x} and {y}",
            )

    for gf in (make_field(2), make_field(3), make_field(2, 2)):
        for n in (1, 2):
            draws = gf.GF(rng.integers(0, gf.order, size=(options.samples, 3, 2 * n)))
            for x, y, z in draws:
                sx, sy, sz = (SymplecticVector(gf, v[:n], v[n:]) for v in (x, y, z))
                sum_yz = SymplecticVector(gf, (y + z)[:n], (y + z)[n:])
                report.check(trace_symplectic_form(sx, sx) == 0, f"form({sx}, {sx}) != 0")
                report.check(
                    trace_symplectic_form(sx, sum_yz)
                    == trace_symplectic_form(sx, sy) + trace_symplectic_form(sx, sz),
                    f"form is not additive at {sx}",
                )
                report.check(sx.swt <= sx.wt_x + sx.wt_z, f"{sx}: swt above wt_x + wt_z")
                report.check(sx.swt >= max(sx.wt_x, sx.wt_z), f"{sx}: swt below max part weight")
            for _ in range(options.samples):
                code = additive_from_vectors(
                    gf, rng.integers(0, gf.order, size=(int(rng.integers(0, 3)), 2 * n)), n
                )
                total = code.size * symplectic_dual(code).size
                report.check(
                    total == gf.p ** (2 * gf.m * n), f"{code}: |C| |C-dual| = {total}"
                )
    return report


def random_self_orthogonal(
    rng: np.random.Generator, field: FiniteField, n: int, rank: int
) -> AdditiveCode:
    """Grow an isotropic code by random vectors orthogonal to what is already there."""
    code = additive_from_vectors(field, np.zeros((0, 2 * n), dtype=np.int64), n)
    for _ in range(8 * rank):
        if code.rank >= rank:
            break
        candidate = additive_from_vectors(
            field,
            np.concatenate(
                [as_ints(code.vectors()), rng.integers(0, field.order, size=(1, 2 * n))]
            ),
            n,
        )
        if candidate.rank > code.rank and candidate.is_self_orthogonal():
            code = candidate
    return code


def phi_b_vector(v: SymplecticVector, basis: FieldBasis) -> SymplecticVector:
    """(c_B(a) | M c_B(b)) for a single vector."""
    a = basis.coordinates(v.a)
    b = basis.coordinates(v.b) @ basis.gram_matrix
    return SymplecticVector(basis.tower.bottom, a.reshape(-1), b.reshape(-1))


def phi_b_orthogonality(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("phi-b-orthogonality")
    gf = make_field(2, 2)
    for _ in range(options.samples):
        n = int(rng.integers(1, 4))
        code = random_self_orthogonal(rng, gf, n, int(rng.integers(1, 2 * n + 1)))
        basis = prime_basis(gf, BASIS_KINDS[int(rng.integers(0, len(BASIS_KINDS)))])
        image = phi_b_expand(code, basis)
        report.check(image.is_self_orthogonal(), f"{code}: phi_B image is not self-orthogonal")
        report.check(image.rank == code.rank, f"{code}: phi_B changed the rank")

        x, y = (
            SymplecticVector(gf, draw[:n], draw[n:])
            for draw in gf.GF(rng.integers(0, gf.order, size=(2, 2 * n)))
        )
        px, py = phi_b_vector(x, basis), phi_b_vector(y, basis)
        report.check(
            trace_symplectic_form(px, py) == trace_symplectic_form(x, y),
            f"phi_B does not preserve the form on {x} and {y}",
        )
        report.check(
            px.wt_x >= x.wt_x and px.wt_z >= x.wt_z, f"{x}: phi_B lowered a part weight"
        )
    return report


def css_symplectic_agreement(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    report = SuiteReport("css-symplectic-agreement")
    fields = [make_field(2), make_field(3), make_field(2, 2)]
    for trial in range(options.samples):
        gf = fields[trial % len(fields)]
        pair = random_pair(rng, gf, int(rng.integers(2, 7)), max_k=4)
        try:
            expected = derive(pair, settings=settings)
            actual = stabilizer_params(css_to_additive(pair), settings=settings)
        except BudgetExceededError:
            report.skipped += 1
            continue
        report.check(expected == actual, f"{pair}: derive gives {expected}, symplectic {actual}")
    return report


def _steane_pair() -> CssPair:
    hamming = from_generator(
        make_field(2),
        [
            [1, 0, 0, 0, 1, 1, 0],
            [0, 1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 0, 1, 1],
            [0, 0, 0, 1, 1, 1, 1],
        ],
    )
    return CssPair(hamming, dual(hamming))


def theorem_battery(settings: Settings | None = None) -> Iterator[TheoremClaim]:
    """Desk-scale instances of every construction."""
    steane = _steane_pair()
    qr5 = qr(5, 4, settings=settings)
    qr_pair = CssPair(qr5.residue, qr5.residue_even)
    for kind in BASIS_KINDS:
        yield expand_aqecc(qr_pair, prime_basis(qr_pair.field, kind), settings=settings).claim
    yield direct_sum_aqecc(steane, steane, settings=settings).claim
    for i in range(steane.n):
        yield puncture_aqecc(steane, i, settings=settings).claim
    yield extend_aqecc(steane, settings=settings).claim
    extended_hamming = CssPair(extend(steane.c1), extend(steane.c2))
    yield extend_aqecc(extended_hamming, settings=settings).claim
    yield uuv_aqecc(steane, steane, settings=settings).claim
    yield grm_aqecc(2, 3, 1, 2, settings=settings)
    yield character_aqecc(3, 0, 1, 2, settings=settings)
    yield bch_nested_aqecc(2, 15, 2, 4, settings=settings)
    yield qr_aqecc(5, 4, settings=settings)
    yield qr_aqecc(7, 2, settings=settings)
    yield qr_aqecc(13, 3, settings=settings)
    additive = css_to_additive(steane)
    qr_additive = css_to_additive(qr_pair)
    yield expand_additive(qr_additive, prime_basis(qr_pair.field), settings=settings).claim
    yield puncture_additive(additive, 0, settings=settings).claim
    yield direct_sum_additive(additive, additive, settings=settings).claim


def theorem_soundness(
    rng: np.random.Generator, options: SuiteOptions, settings: Settings | None = None
) -> SuiteReport:
    """No claim may be refuted by an exact oracle value."""
    report = SuiteReport("theorem-soundness")
    claims = list(theorem_battery(settings))
    gf = make_field(2, 2)
    tower = make_tower(make_field(2), gf)
    for _ in range(options.samples):
        pair = random_pair(rng, gf, int(rng.integers(2, 5)), max_k=3)
        claims.append(expand_aqecc(pair, random_basis(rng, tower), settings=settings).claim)
    for claim in claims:
        if claim.status is ClaimStatus.BUDGET_EXCEEDED:
            report.skipped += 1
        report.check(
            claim.status is not ClaimStatus.REFUTED,
            f"{claim.tag.value} {claim.inputs}: claimed {claim.claimed}, oracle {claim.params}",
        )
        report.notes.append(f"{claim.tag.value}: {claim.status.value}")
    return report


Suite = Callable[[np.random.Generator, SuiteOptions, Settings | None], SuiteReport]

SUITES: dict[str, Suite] = {
    "field-axioms": field_axioms,
    "trace-linearity": trace_linearity,
    "dual-basis": dual_bases,
    "dual-expansion": dual_expansion,
    "combinator-laws": combinator_laws,
    "grm-formulas": grm_formulas,
    "character-codes": character_codes,
    "bch-bound": bch_bounds,
    "qr-codes": qr_codes,
    "symplectic-isometry": symplectic_isometry,
    "phi-b-orthogonality": phi_b_orthogonality,
    "css-symplectic-agreement": css_symplectic_agreement,
    "theorem-soundness": theorem_soundness,
}


def run_suites(
    name: str, options: SuiteOptions | None = None, *, settings: Settings | None = None
) -> list[SuiteReport]:
    """Run one suite, or every suite for "all", each from a fresh seeded generator.

    Enumerations inside a suite never exceed SUITE_MAX_CODEWORDS, whatever the
    configured budget.
    """
    config = resolve_settings(settings)
    config = replace(config, max_codewords=min(config.max_codewords, SUITE_MAX_CODEWORDS))
    options = options or SuiteOptions(seed=config.seed)
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise InvalidParameterError(
            f"unknown suite {name!r}; expected 'all' or one of {', '.join(SUITES)}"
        )
    reports = []
    for suite_name in names:
        rng = np.random.default_rng(options.seed)
        report = SUITES[suite_name](rng, options, config)
        logger.info(
            "{}: {} checks, {} failures, {} skipped",
            suite_name,
            report.checked,
            len(report.failures),
            report.skipped,
        )
        reports.append(report)
    return reports
