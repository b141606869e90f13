"""
Classical code transformations: puncture, shorten, extend, direct sum and
the (u|u+v) construction.

Coordinates are 0-indexed. Zero codes pass through every combinator and
come out as zero codes.
"""

from __future__ import annotations

import numpy as np

from .errors import CodeMismatchError
from .field import as_ints
from .lincode import LinearCode, from_generator, require_coordinate, require_same_space, zero_code


def _require_length(code: LinearCode, minimum: int) -> None:
    if code.n < minimum:
        raise CodeMismatchError(f"{code} needs length at least {minimum}")


def puncture(code: LinearCode, i: int) -> LinearCode:
    """Delete coordinate i from every codeword."""
    _require_length(code, 2)
    require_coordinate(code, i)
    if code.k == 0:
        return zero_code(code.field, code.n - 1)
    keep = [j for j in range(code.n) if j != i]
    return from_generator(code.field, code.generator[:, keep])


def shorten(code: LinearCode, i: int) -> LinearCode:
    """Keep the words vanishing at coordinate i, then delete that coordinate."""
    _require_length(code, 2)
    require_coordinate(code, i)
    keep = [j for j in range(code.n) if j != i]
    generator = code.generator
    column = generator[:, i]
    support = np.flatnonzero(as_ints(column))
    if support.size:
        pivot = int(support[0])
        factors = column / column[pivot]
        others = [r for r in range(code.k) if r != pivot]
        if not others:
            return zero_code(code.field, code.n - 1)
        generator = generator - factors[:, None] * generator[pivot][None, :]
        generator = generator[others]
    if generator.shape[0] == 0:
        return zero_code(code.field, code.n - 1)
    return from_generator(code.field, generator[:, keep])


def extend(code: LinearCode) -> LinearCode:
    """Append the coordinate x_(n+1) = -(x_1 + ... + x_n) at position n."""
    if code.k == 0:
        return zero_code(code.field, code.n + 1)
    parity = -(code.generator @ code.field.GF.Ones((code.n, 1)))
    rows = np.concatenate([as_ints(code.generator), as_ints(parity)], axis=1)
    return from_generator(code.field, rows)


def direct_sum(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """{(c1, c2)} with a block-diagonal generator."""
    if c1.field != c2.field:
        raise CodeMismatchError(f"codes over {c1.field} and {c2.field}")
    rows = np.zeros((c1.k + c2.k, c1.n + c2.n), dtype=np.int64)
    rows[: c1.k, : c1.n] = as_ints(c1.generator)
    rows[c1.k :, c1.n :] = as_ints(c2.generator)
    return from_generator(c1.field, rows, n=c1.n + c2.n)


def uuv(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """{(u, u + v) : u in c1, v in c2}."""
    require_same_space(c1, c2)
    n = c1.n
    rows = np.zeros((c1.k + c2.k, 2 * n), dtype=np.int64)
    rows[: c1.k, :n] = as_ints(c1.generator)
    rows[: c1.k, n:] = as_ints(c1.generator)
    rows[c1.k :, n:] = as_ints(c2.generator)
    return from_generator(c1.field, rows, n=2 * n)
