"""
Exhaustive codeword enumeration.

Messages are enumerated in a q-ary Gray order, so consecutive messages differ
in one symbol, and pushed through the generator in fixed-size blocks. Blocks
may be handed to a thread pool; the minimum is folded after all blocks
return, so the answer does not depend on the partitioning.
"""

from __future__ import annotations

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import NamedTuple

import numpy as np
from loguru import logger

from .errors import BudgetExceededError
from .field import FieldArray, FiniteField, as_ints
from .settings import Settings, resolve_settings

WeightFunction = Callable[[FieldArray], np.ndarray]
WordFilter = Callable[[FieldArray], np.ndarray]


class ScanResult(NamedTuple):
    """Outcome of one enumeration."""

    minimum: int | None
    enumerated: int


def hamming_weights(words: FieldArray) -> np.ndarray:
    return np.count_nonzero(as_ints(words), axis=-1)


def check_budget(what: str, q: int, k: int, settings: Settings | None = None) -> int:
    """Return q^k, or raise if it is above the codeword budget."""
    total = q**k
    budget = resolve_settings(settings).max_codewords
    if total > budget:
        raise BudgetExceededError(what, total, budget)
    return total


def messages(field: FiniteField, k: int, start: int, stop: int) -> FieldArray:
    """Messages with Gray indices in [start, stop).

    Index i has base-q digits d (first symbol most significant) and message
    g with g_0 = d_0 and g_j = d_j - d_{j-1} mod q. The map is a bijection
    on [0, q^k) that sends 0 to the zero message, and consecutive indices
    give messages that differ in exactly one symbol.
    """
    index = np.arange(start, stop, dtype=np.int64)
    powers = field.order ** np.arange(k - 1, -1, -1, dtype=np.int64)
    digits = (index[:, None] // powers) % field.order
    gray = digits.copy()
    gray[:, 1:] = (digits[:, 1:] - digits[:, :-1]) % field.order
    return field.GF(gray)


def scan_minimum(
    field: FiniteField,
    generator: FieldArray,
    *,
    weight: WeightFunction = hamming_weights,
    accept: WordFilter | None = None,
    what: str = "enumeration",
    settings: Settings | None = None,
) -> ScanResult:
    """Minimum `weight` over the nonzero codewords spanned by `generator`.

    Only words for which `accept` is true take part. The zero word is never
    visited. `minimum` is None when no word qualifies.
    """
    config = resolve_settings(settings)
    k = generator.shape[0]
    total = check_budget(what, field.order, k, config)
    if k == 0:
        return ScanResult(None, total)

    blocks = [
        (start, min(start + config.chunk_size, total))
        for start in range(1, total, config.chunk_size)
    ]

    def visit(bounds: tuple[int, int]) -> int | None:
        words = messages(field, k, *bounds) @ generator
        weights = weight(words)
        if accept is not None:
            weights = weights[accept(words)]
        return int(weights.min()) if weights.size else None

    if config.threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            minima = list(pool.map(visit, blocks))
    else:
        minima = [visit(bounds) for bounds in blocks]

    found = [value for value in minima if value is not None]
    result = ScanResult(min(found) if found else None, total)
    logger.debug("{}: {} words over {}, minimum {}", what, total, field, result.minimum)
    return result
