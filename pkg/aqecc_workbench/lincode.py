"""
Linear codes over finite fields.

A LinearCode stores its generator in reduced row echelon form, so two codes
with the same codeword set compare equal. Distances are computed by
exhaustive enumeration within the configured budget; the absolute minimum
distance is cached on the code.
"""

from __future__ import annotations

from enum import Enum
from functools import cached_property
from typing import Any, NamedTuple

import galois
import numpy as np
from loguru import logger

from .errors import CodeMismatchError, FieldError, NotNestedError, UndefinedDistanceError
from .field import FieldArray, FieldBasis, FiniteField, as_ints, field_from_dict
from .oracle import check_budget, hamming_weights, messages, scan_minimum
from .settings import Settings


class WeightKind(Enum):
    """What a WeightReport measures."""

    ABSOLUTE = "absolute"
    RELATIVE = "relative"
    EVEN_LIKE = "even-like"
    ODD_LIKE = "odd-like"
    DUAL = "dual"


class OracleMethod(Enum):
    EXHAUSTIVE = "exhaustive"
    COSET_EXHAUSTIVE = "coset-exhaustive"


class WeightReport(NamedTuple):
    """An exact minimum weight together with how it was obtained."""

    subject: str
    kind: WeightKind
    value: int
    method: OracleMethod
    enumerated: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "kind": self.kind.value,
            "value": self.value,
            "method": self.method.value,
            "enumerated": self.enumerated,
        }


class EvenOddWeights(NamedTuple):
    """Minimum even-like and odd-like weights; None when no word of that kind exists."""

    even: int | None
    odd: int | None
    enumerated: int


def canonical_rows(field: FiniteField, matrix: Any) -> FieldArray:
    """Nonzero rows of the reduced row echelon form of `matrix`."""
    matrix = field(matrix)
    if matrix.shape[0] == 0:
        return matrix
    reduced = matrix.row_reduce()
    return reduced[np.any(as_ints(reduced) != 0, axis=1)]


def kernel_rows(field: FiniteField, matrix: FieldArray, n: int) -> FieldArray:
    """Canonical basis of {x : matrix @ x = 0} inside GF(q)^n."""
    if matrix.shape[0] == 0 or not np.any(as_ints(matrix)):
        return field.identity(n)
    if np.linalg.matrix_rank(matrix) == n:
        return field.zeros((0, n))
    return canonical_rows(field, matrix.null_space())


class LinearCode:
    """An [n, k] linear code over GF(q) given by its canonical generator."""

    def __init__(self, field: FiniteField, n: int, generator: FieldArray):
        if n < 1:
            raise CodeMismatchError(f"code length must be positive, got {n}")
        if generator.ndim != 2 or generator.shape[1] != n:
            raise CodeMismatchError(f"generator shape {generator.shape} does not match n={n}")
        self.field = field
        self.n = n
        self.generator = generator
        self._distance: WeightReport | None = None

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    @property
    def q(self) -> int:
        return self.field.order

    @cached_property
    def parity_check(self) -> FieldArray:
        """Generator of the dual code; rows span every check on the codewords."""
        return kernel_rows(self.field, self.generator, self.n)

    def contains(self, words: Any) -> np.ndarray:
        """Membership of each row of `words` (a single word gives a 0-d answer)."""
        words = self.field(words)
        if self.k == self.n:
            return np.ones(words.shape[:-1], dtype=bool)
        single = words.ndim == 1
        block = words[None, :] if single else words
        syndromes = as_ints(block @ self.parity_check.T)
        inside = ~np.any(syndromes != 0, axis=1)
        return inside[0] if single else inside

    def codewords(self, *, settings: Settings | None = None) -> FieldArray:
        """Every codeword, zero first, in Gray message order."""
        total = check_budget(f"codewords of {self}", self.q, self.k, settings)
        if self.k == 0:
            return self.field.zeros((1, self.n))
        return messages(self.field, self.k, 0, total) @ self.generator

    def rows(self) -> list[list[int]]:
        return as_ints(self.generator).tolist()

    @property
    def cached_distance(self) -> int | None:
        return self._distance.value if self._distance is not None else None

    def to_dict(self) -> dict[str, Any]:
        return {"field": self.field.to_dict(), "n": self.n, "k": self.k, "generator": self.rows()}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> LinearCode:
        field = field_from_dict(data["field"])
        code = from_generator(field, data["generator"], n=int(data["n"]))
        if "k" in data and int(data["k"]) != code.k:
            raise CodeMismatchError(f"generator has rank {code.k}, file says k={data['k']}")
        return code

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return False
        return (
            self.field == other.field
            and self.n == other.n
            and np.array_equal(as_ints(self.generator), as_ints(other.generator))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, as_ints(self.generator).tobytes()))

    def __str__(self) -> str:
        if self._distance is not None:
            return f"[{self.n},{self.k},{self._distance.value}]_{self.q}"
        return f"[{self.n},{self.k}]_{self.q}"

    def __repr__(self) -> str:
        return f"LinearCode({self})"


def from_generator(field: FiniteField, rows: Any, n: int | None = None) -> LinearCode:
    """Build a code from any spanning set of rows.

    Raises:
        CodeMismatchError: ragged rows, or an empty spanning set without `n`.
        FieldError: entries outside the field.
    """
    if isinstance(rows, (galois.FieldArray, np.ndarray)):
        if rows.ndim != 2:
            raise CodeMismatchError(f"generator must be 2-dimensional, got shape {rows.shape}")
        matrix = rows
    else:
        rows = [list(row) for row in rows]
        if not rows and n is None:
            raise CodeMismatchError("the length of a code with no generator rows must be given")
        width = n if n is not None else len(rows[0])
        if any(len(row) != width for row in rows):
            raise CodeMismatchError("generator rows have different lengths")
        matrix = np.array(rows, dtype=np.int64).reshape(len(rows), width)
    if n is None:
        n = int(matrix.shape[1])
    elif matrix.shape[1] != n:
        raise CodeMismatchError(f"generator has {matrix.shape[1]} columns, expected {n}")
    if isinstance(matrix, galois.FieldArray) and type(matrix) is not field.GF:
        raise FieldError(f"generator is over {type(matrix).name}, expected {field}")
    return LinearCode(field, n, canonical_rows(field, matrix))


def zero_code(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, n, field.zeros((0, n)))


def full_space(field: FiniteField, n: int) -> LinearCode:
    return LinearCode(field, n, field.identity(n))


def repetition_code(field: FiniteField, n: int) -> LinearCode:
    return from_generator(field, [[1] * n])


def require_same_space(*codes: LinearCode) -> None:
    first = codes[0]
    for code in codes[1:]:
        if code.field != first.field:
            raise CodeMismatchError(f"codes over {first.field} and {code.field}")
        if code.n != first.n:
            raise CodeMismatchError(f"codes of length {first.n} and {code.n}")


def require_coordinate(code: LinearCode, i: int) -> None:
    if not 0 <= i < code.n:
        raise CodeMismatchError(f"coordinate {i} outside 0..{code.n - 1}")


def dual(code: LinearCode) -> LinearCode:
    """Euclidean dual."""
    return LinearCode(code.field, code.n, code.parity_check)


def is_subcode(c2: LinearCode, c1: LinearCode) -> bool:
    """True when every word of c2 lies in c1."""
    require_same_space(c1, c2)
    if c2.k == 0 or c1.k == c1.n:
        return True
    if c2.k > c1.k:
        return False
    return not np.any(as_ints(c2.generator @ c1.parity_check.T))


def min_distance(code: LinearCode, *, settings: Settings | None = None) -> WeightReport:
    """Exact minimum distance by enumerating all q^k codewords.

    Raises:
        UndefinedDistanceError: the code is the zero code.
        BudgetExceededError: q^k is above the codeword budget.
    """
    if code.k == 0:
        raise UndefinedDistanceError(f"the zero code {code} has no minimum distance")
    if code._distance is not None:
        return code._distance
    scan = scan_minimum(
        code.field, code.generator, what=f"minimum distance of {code}", settings=settings
    )
    assert scan.minimum is not None
    report = WeightReport(
        str(code), WeightKind.ABSOLUTE, scan.minimum, OracleMethod.EXHAUSTIVE, scan.enumerated
    )
    code._distance = report
    return report


def relative_min_weight(
    c1: LinearCode, c2: LinearCode, *, settings: Settings | None = None
) -> WeightReport:
    """Minimum weight of the words of c1 outside c2.

    c2 membership is tested through its parity-check matrix, one block of
    c1 messages at a time.
    """
    if not is_subcode(c2, c1):
        raise NotNestedError(f"{c2} is not a subcode of {c1}")
    if c1.k == c2.k:
        raise UndefinedDistanceError(f"{c1} \\ {c2} is empty")
    subject = f"{c1} \\ {c2}"

    def outside(words: FieldArray) -> np.ndarray:
        return ~c2.contains(words)

    scan = scan_minimum(
        c1.field,
        c1.generator,
        accept=outside if c2.k > 0 else None,
        what=f"relative weight of {subject}",
        settings=settings,
    )
    assert scan.minimum is not None
    return WeightReport(
        subject,
        WeightKind.RELATIVE,
        scan.minimum,
        OracleMethod.COSET_EXHAUSTIVE,
        scan.enumerated - c1.q**c2.k,
    )


def _coordinate_sums(code: LinearCode, words: FieldArray) -> np.ndarray:
    return as_ints(words @ code.field.GF.Ones((code.n, 1)))[:, 0]


def even_odd_weights(code: LinearCode, *, settings: Settings | None = None) -> EvenOddWeights:
    """Minimum weights of even-like (coordinate sum zero) and odd-like words."""
    even = scan_minimum(
        code.field,
        code.generator,
        accept=lambda words: _coordinate_sums(code, words) == 0,
        what=f"even-like weight of {code}",
        settings=settings,
    )
    odd = scan_minimum(
        code.field,
        code.generator,
        accept=lambda words: _coordinate_sums(code, words) != 0,
        what=f"odd-like weight of {code}",
        settings=settings,
    )
    return EvenOddWeights(even.minimum, odd.minimum, even.enumerated)


def expand(code: LinearCode, basis: FieldBasis) -> LinearCode:
    """q-ary expansion: each coordinate over GF(q^r) becomes r coordinates over GF(q).

    The expanded code is spanned by the expansions of b_j * g_i for every
    basis element b_j and generator row g_i.
    """
    tower = basis.tower
    if tower.top != code.field:
        raise FieldError(f"basis of {tower} cannot expand a code over {code.field}")
    r = tower.degree
    if code.k == 0:
        return zero_code(tower.bottom, code.n * r)
    scaled = code.generator[:, None, :] * basis.elements[None, :, None]
    coordinates = basis.coordinates(scaled)
    logger.debug("expanding {} over {}", code, tower)
    return from_generator(tower.bottom, coordinates.reshape(code.k * r, code.n * r))


def has_min_weight_word_at(
    code: LinearCode, i: int, *, settings: Settings | None = None
) -> bool:
    """Whether some minimum-weight word is nonzero at coordinate i."""
    require_coordinate(code, i)
    if code.k == 0:
        return False
    d = min_distance(code, settings=settings).value

    def touches(words: FieldArray) -> np.ndarray:
        values = as_ints(words)
        return (hamming_weights(words) == d) & (values[:, i] != 0)

    scan = scan_minimum(
        code.field, code.generator, accept=touches, what=f"support of {code}", settings=settings
    )
    return scan.minimum is not None


def has_zero_coordinate_word(code: LinearCode, i: int) -> bool:
    """Whether some nonzero word vanishes at coordinate i.

    That subcode is the kernel of c -> c_i, of dimension k minus the rank of
    column i, so no enumeration is needed.
    """
    require_coordinate(code, i)
    column_rank = 1 if np.any(as_ints(code.generator[:, i])) else 0
    return code.k - column_rank >= 1
