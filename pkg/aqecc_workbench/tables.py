"""
Table rows for the code families.

Every row records the family, its parameters, the claimed [[n, k]] and
distance bounds, and what the oracles made of the claim. Rows are produced in
a fixed order so two runs with the same caps give identical output.
"""

from __future__ import annotations

import csv
import io
import math
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import Any, NamedTuple

import galois
from loguru import logger

from .css import ClaimStatus, TheoremClaim
from .errors import InvalidParameterError
from .families import (
    bch_bound,
    bch_designed_aqecc,
    bch_designed_shapes,
    bch_nested_aqecc,
    bch_zero_set,
    character_aqecc,
    dual_zero_set,
    grm_aqecc,
    multiplicative_order,
    qr_aqecc,
    quadratic_residues,
)
from .field import split_prime_power
from .settings import Settings

CSV_HEADER = (
    "family",
    "params",
    "n",
    "k",
    "dz_claim",
    "dx_claim",
    "status",
    "tag",
    "dz_oracle",
    "dx_oracle",
)


class TableRow(NamedTuple):
    family: str
    params: dict[str, Any]
    n: int
    k: int
    dz_claim: int | None
    dx_claim: int | None
    status: str
    tag: str
    dz_oracle: str
    dx_oracle: str

    @classmethod
    def from_claim(cls, family: str, params: dict[str, Any], claim: TheoremClaim) -> TableRow:
        oracle = claim.params
        return cls(
            family,
            params,
            claim.claimed.n,
            claim.claimed.k,
            claim.claimed.dz,
            claim.claimed.dx,
            claim.status.value,
            claim.tag.value,
            str(oracle.dz) if oracle else "",
            str(oracle.dx) if oracle else "",
        )

    def csv_fields(self) -> list[str]:
        params = ";".join(f"{key}={value}" for key, value in self.params.items())
        return [
            self.family,
            params,
            str(self.n),
            str(self.k),
            "" if self.dz_claim is None else str(self.dz_claim),
            "" if self.dx_claim is None else str(self.dx_claim),
            self.status,
            self.tag,
            self.dz_oracle,
            self.dx_oracle,
        ]

    def to_dict(self) -> dict[str, Any]:
        return self._asdict()


@dataclass(frozen=True)
class TableCaps:
    """Upper limits on the loops of a table; None picks the family default."""

    q: int | None = None
    max_m: int | None = None
    max_n: int | None = None
    max_p: int = 13
    max_q: int = 16
    basis: str = "polynomial"


def _is_prime_power(q: int) -> bool:
    return q >= 2 and len(galois.factors(q)[0]) == 1


def _grm_rows(caps: TableCaps, q: int, settings: Settings | None) -> Iterator[TableRow]:
    family = "grm" if galois.is_prime(q) else "expanded-grm"
    for m in range(1, (caps.max_m or (3 if galois.is_prime(q) else 2)) + 1):
        top = m * (q - 1)
        for alpha1 in range(top):
            for alpha2 in range(alpha1 + 1, top):
                claim = grm_aqecc(q, m, alpha1, alpha2, basis_kind=caps.basis, settings=settings)
                params = {"q": q, "m": m, "alpha1": alpha1, "alpha2": alpha2}
                yield TableRow.from_claim(family, params, claim)


def grm_rows(caps: TableCaps, settings: Settings | None = None) -> Iterator[TableRow]:
    q = caps.q or 2
    if not galois.is_prime(q):
        raise InvalidParameterError(f"the grm table takes a prime q, got {q}")
    return _grm_rows(caps, q, settings)


def expanded_grm_rows(caps: TableCaps, settings: Settings | None = None) -> Iterator[TableRow]:
    q = caps.q or 4
    if galois.is_prime(q):
        raise InvalidParameterError(f"the expanded-grm table takes a prime power, got {q}")
    return _grm_rows(caps, q, settings)


def _character_rows(caps: TableCaps, q: int, settings: Settings | None) -> Iterator[TableRow]:
    family = "character" if galois.is_prime(q) else "expanded-character"
    for m in range(1, (caps.max_m or (3 if galois.is_prime(q) else 2)) + 1):
        for r1 in range(m + 1):
            for r2 in range(r1 + 1, m + 1):
                claim = character_aqecc(q, r1, r2, m, basis_kind=caps.basis, settings=settings)
                params = {"q": q, "m": m, "r1": r1, "r2": r2}
                yield TableRow.from_claim(family, params, claim)


def character_rows(caps: TableCaps, settings: Settings | None = None) -> Iterator[TableRow]:
    q = caps.q or 3
    if not galois.is_prime(q):
        raise InvalidParameterError(f"the character table takes a prime q, got {q}")
    return _character_rows(caps, q, settings)


def expanded_character_rows(
    caps: TableCaps, settings: Settings | None = None
) -> Iterator[TableRow]:
    q = caps.q or 9
    if galois.is_prime(q):
        raise InvalidParameterError(f"the expanded-character table takes a prime power, got {q}")
    return _character_rows(caps, q, settings)


def nested_bch_instances(q: int, max_n: int) -> Iterator[tuple[int, int, int]]:
    """(n, delta1, delta2) passing the range and designed-distance gates."""
    for n in range(3, max_n + 1):
        if math.gcd(q, n) != 1:
            continue
        m = multiplicative_order(q, n)
        if not q ** (m // 2) < n <= q**m - 1:
            continue
        delta_max = min(n * q ** -(-m // 2) // (q**m - 1), n)
        for delta1 in range(2, delta_max + 1):
            zeros1 = bch_zero_set(q, n, 1, delta1)
            perp1 = bch_bound(dual_zero_set(zeros1, n), n)
            for delta2 in range(delta1 + 1, delta_max + 1):
                zeros2 = bch_zero_set(q, n, 1, delta2)
                perp2 = bch_bound(dual_zero_set(zeros2, n), n)
                if zeros1 != zeros2 and delta1 < perp2 <= delta2 < perp1:
                    yield n, delta1, delta2


def _bch_nested_rows(caps: TableCaps, q: int, settings: Settings | None) -> Iterator[TableRow]:
    family = "bch-nested" if galois.is_prime(q) else "expanded-bch-nested"
    max_n = caps.max_n or (15 if galois.is_prime(q) else 9)
    for n, delta1, delta2 in nested_bch_instances(q, max_n):
        claim = bch_nested_aqecc(q, n, delta1, delta2, basis_kind=caps.basis, settings=settings)
        params = {"q": q, "n": n, "delta1": delta1, "delta2": delta2}
        yield TableRow.from_claim(family, params, claim)


def bch_nested_rows(caps: TableCaps, settings: Settings | None = None) -> Iterator[TableRow]:
    q = caps.q or 2
    if not galois.is_prime(q):
        raise InvalidParameterError(f"the bch-nested table takes a prime q, got {q}")
    return _bch_nested_rows(caps, q, settings)


def expanded_bch_nested_rows(
    caps: TableCaps, settings: Settings | None = None
) -> Iterator[TableRow]:
    q = caps.q or 4
    if galois.is_prime(q):
        raise InvalidParameterError(f"the expanded-bch-nested table takes a prime power, got {q}")
    return _bch_nested_rows(caps, q, settings)


def bch_designed_rows(caps: TableCaps, settings: Settings | None = None) -> Iterator[TableRow]:
    q = caps.q or 3
    first_m = 4 if q == 3 else 3
    for m in range(first_m, max(caps.max_m or first_m, first_m) + 1):
        for shape in bch_designed_shapes(q):
            claim = bch_designed_aqecc(q, m, shape, basis_kind=caps.basis, settings=settings)
            params = {"q": q, "m": m, "shape": shape.label}
            yield TableRow.from_claim("bch-designed", params, claim)


def _qr_rows(
    caps: TableCaps,
    family: str,
    accept: Callable[[int, int], bool],
    settings: Settings | None,
) -> Iterator[TableRow]:
    for p in range(3, caps.max_p + 1):
        if not galois.is_prime(p):
            continue
        squares = quadratic_residues(p)
        for q in range(2, caps.max_q + 1):
            if not _is_prime_power(q) or q % p not in squares or not accept(p, q):
                continue
            claim = qr_aqecc(p, q, basis_kind=caps.basis, settings=settings)
            yield TableRow.from_claim(family, {"p": p, "q": q}, claim)


def qr_rows(caps: TableCaps, settings: Settings | None = None) -> Iterator[TableRow]:
    return _qr_rows(caps, "qr", lambda p, q: bool(galois.is_prime(q)), settings)


def expanded_qr_rows(caps: TableCaps, settings: Settings | None = None) -> Iterator[TableRow]:
    return _qr_rows(
        caps,
        "expanded-qr",
        lambda p, q: p % 4 == 1 and split_prime_power(q)[1] > 1,
        settings,
    )


def expanded_qr_3mod4_rows(
    caps: TableCaps, settings: Settings | None = None
) -> Iterator[TableRow]:
    return _qr_rows(
        caps,
        "expanded-qr-3mod4",
        lambda p, q: p % 4 == 3 and split_prime_power(q)[1] > 1,
        settings,
    )


TABLE_FAMILIES: dict[str, Callable[..., Iterator[TableRow]]] = {
    "grm": grm_rows,
    "expanded-grm": expanded_grm_rows,
    "character": character_rows,
    "expanded-character": expanded_character_rows,
    "bch-nested": bch_nested_rows,
    "expanded-bch-nested": expanded_bch_nested_rows,
    "bch-designed": bch_designed_rows,
    "qr": qr_rows,
    "expanded-qr": expanded_qr_rows,
    "expanded-qr-3mod4": expanded_qr_3mod4_rows,
}


def table_rows(
    family: str, caps: TableCaps | None = None, *, settings: Settings | None = None
) -> list[TableRow]:
    """All rows of one family within `caps`."""
    if family not in TABLE_FAMILIES:
        raise InvalidParameterError(
            f"unknown table family {family!r}; expected one of {', '.join(TABLE_FAMILIES)}"
        )
    rows = list(TABLE_FAMILIES[family](caps or TableCaps(), settings))
    refuted = sum(row.status == ClaimStatus.REFUTED.value for row in rows)
    logger.info("{} table: {} rows, {} refuted", family, len(rows), refuted)
    return rows


def rows_to_csv(rows: list[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
    return buffer.getvalue()
