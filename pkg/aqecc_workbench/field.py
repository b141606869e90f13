"""
Finite fields GF(p^m), subfield towers, traces and bases.

Arithmetic is delegated to galois. This module pins one modulus per (p, m)
so element indices are reproducible, and adds the tower machinery used by
code expansion and the symplectic layer: subfield embeddings, relative
traces, dual and normal bases, and Gram matrices of the trace form.
"""

from __future__ import annotations

from functools import cache, cached_property
from typing import Any

import galois
import numpy as np
from loguru import logger

from .errors import BudgetExceededError, FieldError
from .settings import Settings, resolve_settings

FieldArray = galois.FieldArray

BASIS_KINDS = ("polynomial", "dual-of-polynomial", "normal")


def as_ints(values: Any) -> np.ndarray:
    """Element indices of a FieldArray (or anything array-like) as int64."""
    if isinstance(values, galois.FieldArray):
        values = values.view(np.ndarray)
    return np.asarray(values, dtype=np.int64)


class FiniteField:
    """GF(p^m) defined by the lexicographically smallest primitive modulus.

    Elements are galois FieldArrays whose integer value is the base-p
    evaluation of the coefficient tuple, so index i always names the same
    element across runs.
    """

    def __init__(self, p: int, m: int, modulus: galois.Poly):
        self.p = p
        self.m = m
        self.order = p**m
        self.modulus = modulus
        if m == 1:
            # galois rejects irreducible_poly for prime fields
            self.GF = galois.GF(self.order)
        else:
            self.GF = galois.GF(self.order, irreducible_poly=modulus)

    @property
    def modulus_coefficients(self) -> list[int]:
        """Modulus coefficients, constant term first."""
        return [int(c) for c in self.modulus.coeffs[::-1]]

    @property
    def is_prime(self) -> bool:
        return self.m == 1

    @cached_property
    def generator(self) -> FieldArray:
        """The root of the modulus, a primitive element."""
        if self.m == 1:
            return -self.GF(int(self.modulus.coeffs[-1]))
        return self.GF(self.p)

    @property
    def elements(self) -> FieldArray:
        return self.GF.elements

    def __call__(self, values: Any) -> FieldArray:
        """Coerce integer indices into elements of this field."""
        if isinstance(values, galois.FieldArray) and type(values) is self.GF:
            return values
        try:
            return self.GF(as_ints(values))
        except (ValueError, TypeError) as e:
            raise FieldError(f"values are not elements of {self}: {e}") from e

    def zeros(self, shape: int | tuple[int, ...]) -> FieldArray:
        return self.GF.Zeros(shape)

    def identity(self, size: int) -> FieldArray:
        return self.GF.Identity(size)

    def to_dict(self) -> dict[str, Any]:
        return {"p": self.p, "m": self.m, "modulus": self.modulus_coefficients}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return False
        return self.p == other.p and self.m == other.m

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    def __str__(self) -> str:
        return f"GF({self.order})"

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, m={self.m}, modulus={self.modulus_coefficients})"


@cache
def _canonical_field(p: int, m: int) -> FiniteField:
    modulus = galois.primitive_poly(p, m, method="min")
    logger.debug("GF({}^{}) modulus {}", p, m, modulus)
    return FiniteField(p, m, modulus)


def make_field(p: int, m: int = 1, *, settings: Settings | None = None) -> FiniteField:
    """Return the canonical GF(p^m).

    Raises:
        FieldError: p is not prime or m < 1.
        BudgetExceededError: p^m is above the configured field budget.
    """
    if m < 1:
        raise FieldError(f"extension degree must be at least 1, got {m}")
    if p < 2 or not galois.is_prime(p):
        raise FieldError(f"characteristic must be prime, got {p}")
    budget = resolve_settings(settings).max_field_order
    if p**m > budget:
        raise BudgetExceededError(f"field GF({p}^{m})", p**m, budget)
    return _canonical_field(p, m)


def split_prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    primes, exponents = galois.factors(q)
    if len(primes) != 1:
        raise FieldError(f"{q} is not a prime power")
    return int(primes[0]), int(exponents[0])


def field_of_order(q: int, *, settings: Settings | None = None) -> FiniteField:
    p, m = split_prime_power(q)
    return make_field(p, m, settings=settings)


def field_of(values: FieldArray) -> FiniteField:
    """The canonical field a FieldArray belongs to."""
    cls = type(values)
    field = _canonical_field(int(cls.characteristic), int(cls.degree))
    if field.GF is not cls:
        raise FieldError(f"{cls.name} is not a canonical field")
    return field


def field_from_dict(data: dict[str, Any]) -> FiniteField:
    field = make_field(int(data["p"]), int(data["m"]))
    if "modulus" in data and list(data["modulus"]) != field.modulus_coefficients:
        raise FieldError(f"modulus {data['modulus']} is not the canonical one for {field}")
    return field


def to_digits(values: Any, field: FiniteField) -> np.ndarray:
    """Base-p coefficients of each element, constant term first, on a new last axis."""
    ints = as_ints(values)
    powers = field.p ** np.arange(field.m, dtype=np.int64)
    return (ints[..., None] // powers) % field.p


def from_digits(digits: Any, field: FiniteField) -> FieldArray:
    """Inverse of `to_digits`."""
    powers = field.p ** np.arange(field.m, dtype=np.int64)
    return field.GF((np.asarray(digits, dtype=np.int64) * powers).sum(axis=-1))


def hstack(field: FiniteField, *blocks: Any) -> FieldArray:
    return field.GF(np.concatenate([as_ints(b) for b in blocks], axis=-1))


def vstack(field: FiniteField, *blocks: Any) -> FieldArray:
    return field.GF(np.concatenate([as_ints(b) for b in blocks], axis=0))


class FieldTower:
    """GF(q^r) over GF(q), with a fixed embedding of the bottom field."""

    def __init__(self, bottom: FiniteField, top: FiniteField):
        if bottom.p != top.p or top.m % bottom.m:
            raise FieldError(f"{bottom} is not a subfield of {top}")
        self.bottom = bottom
        self.top = top
        self.degree = top.m // bottom.m
        self._embedding = self._embedding_table()
        self._projection = np.full(top.order, -1, dtype=np.int64)
        self._projection[self._embedding] = np.arange(bottom.order, dtype=np.int64)

    def _embedding_table(self) -> np.ndarray:
        if self.bottom.m == 1 or self.bottom == self.top:
            return np.arange(self.bottom.order, dtype=np.int64)
        # bottom generator goes to the smallest root of its modulus in the top field
        lifted = galois.Poly(self.bottom.modulus.coeffs.view(np.ndarray), field=self.top.GF)
        image = self.top.GF(int(as_ints(lifted.roots()).min()))
        powers = image ** np.arange(self.bottom.m)
        digits = self.top.GF(to_digits(np.arange(self.bottom.order), self.bottom))
        images = (digits * powers).sum(axis=-1)
        logger.debug("embedding {} into {} via root {}", self.bottom, self.top, int(image))
        return as_ints(images)

    @property
    def q(self) -> int:
        return self.bottom.order

    def embed(self, values: Any) -> FieldArray:
        """Map bottom-field elements into the top field."""
        return self.top.GF(self._embedding[as_ints(values)])

    def contains(self, values: Any) -> bool:
        return bool(np.all(self._projection[as_ints(values)] >= 0))

    def project(self, values: Any) -> FieldArray:
        """Map top-field elements lying in the subfield back to the bottom field."""
        indices = self._projection[as_ints(values)]
        if np.any(indices < 0):
            raise FieldError(f"element outside {self.bottom} inside {self.top}")
        return self.bottom.GF(indices)

    def trace(self, values: Any) -> FieldArray:
        """Relative trace: sum of a^(q^i) for i < degree, as bottom-field elements."""
        power = self.top(values)
        total = power.copy()
        for _ in range(1, self.degree):
            power = power**self.q
            total = total + power
        return self.project(total)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldTower):
            return False
        return self.bottom == other.bottom and self.top == other.top

    def __hash__(self) -> int:
        return hash((self.bottom, self.top))

    def __str__(self) -> str:
        return f"{self.top}/{self.bottom}"

    def __repr__(self) -> str:
        return f"FieldTower({self.top}/{self.bottom})"


@cache
def make_tower(bottom: FiniteField, top: FiniteField) -> FieldTower:
    return FieldTower(bottom, top)


def prime_tower(field: FiniteField) -> FieldTower:
    """The tower of a field over its prime subfield."""
    return make_tower(make_field(field.p), field)


def trace(values: FieldArray, bottom: FiniteField | FieldTower) -> FieldArray:
    """Trace of top-field elements down to `bottom`.

    The top field is read off the array itself when `bottom` is a field.
    """
    tower = bottom if isinstance(bottom, FieldTower) else make_tower(bottom, field_of(values))
    return tower.trace(values)


class FieldBasis:
    """An ordered basis b_1..b_r of GF(q^r) over GF(q).

    Coordinates are computed through the dual basis:
    a = sum_j tr(a * b*_j) b_j.
    """

    def __init__(self, tower: FieldTower, elements: Any):
        self.tower = tower
        self.elements = tower.top(elements)
        if self.elements.shape != (tower.degree,):
            raise FieldError(
                f"a basis of {tower} has {tower.degree} elements, got {self.elements.shape}"
            )
        products = self.elements[:, None] * self.elements[None, :]
        self._gram = tower.trace(products)
        if np.linalg.matrix_rank(self._gram) != tower.degree:
            raise FieldError(f"{as_ints(self.elements).tolist()} is not a basis of {tower}")

    @property
    def degree(self) -> int:
        return self.tower.degree

    @property
    def gram_matrix(self) -> FieldArray:
        """M_ij = tr(b_i b_j), a symmetric invertible matrix over the bottom field."""
        return self._gram.copy()

    @cached_property
    def dual(self) -> FieldBasis:
        inverse = self.tower.embed(np.linalg.inv(self._gram))
        elements = (inverse * self.elements[None, :]).sum(axis=1)
        return FieldBasis(self.tower, elements)

    def coordinates(self, values: Any) -> FieldArray:
        """c_B(a) for every a in `values`, on a new trailing axis of length r."""
        values = self.tower.top(values)
        return self.tower.trace(values[..., None] * self.dual.elements)

    def combine(self, coordinates: Any) -> FieldArray:
        """Inverse of `coordinates`: sum_j c_j b_j over the last axis."""
        return (self.tower.embed(coordinates) * self.elements).sum(axis=-1)

    def to_dict(self) -> dict[str, Any]:
        return {
            "bottom": self.tower.bottom.to_dict(),
            "top": self.tower.top.to_dict(),
            "elements": as_ints(self.elements).tolist(),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldBasis):
            return False
        return self.tower == other.tower and np.array_equal(
            as_ints(self.elements), as_ints(other.elements)
        )

    def __hash__(self) -> int:
        return hash((self.tower, tuple(as_ints(self.elements).tolist())))

    def __repr__(self) -> str:
        return f"FieldBasis({self.tower}, {as_ints(self.elements).tolist()})"


def dual_basis(basis: FieldBasis) -> FieldBasis:
    """The unique basis with tr(b_i b*_j) = delta_ij."""
    return basis.dual


def gram_matrix(basis: FieldBasis) -> FieldArray:
    return basis.gram_matrix


def polynomial_basis(tower: FieldTower) -> FieldBasis:
    """Powers 1, g, .., g^(r-1) of the top field's primitive element."""
    g = tower.top.generator
    return FieldBasis(tower, g ** np.arange(tower.degree))


def normal_basis(tower: FieldTower) -> FieldBasis:
    """(b, b^q, .., b^(q^(r-1))) for the smallest-index b that gives a basis."""
    exponents = tower.q ** np.arange(tower.degree)
    for index in range(1, tower.top.order):
        beta = tower.top.GF(index)
        conjugates = beta**exponents
        products = conjugates[:, None] * conjugates[None, :]
        if np.linalg.matrix_rank(tower.trace(products)) == tower.degree:
            return FieldBasis(tower, conjugates)
    raise FieldError(f"no normal basis found for {tower}")  # unreachable for finite fields


def basis_by_name(tower: FieldTower, kind: str) -> FieldBasis:
    if kind == "polynomial":
        return polynomial_basis(tower)
    if kind == "dual-of-polynomial":
        return polynomial_basis(tower).dual
    if kind == "normal":
        return normal_basis(tower)
    raise FieldError(f"unknown basis kind {kind!r}; expected one of {', '.join(BASIS_KINDS)}")


def prime_basis(field: FiniteField, kind: str = "polynomial") -> FieldBasis:
    """A basis of `field` over its prime subfield."""
    return basis_by_name(prime_tower(field), kind)
