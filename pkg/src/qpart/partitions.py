"""2-colored Rogers-Ramanujan partitions and overpartitions.

Two ways of counting every family live side by side here: exhaustive
generators (backtracking, pruned by the family's own constraints) and
dynamic-programming counters that reach much larger weights.  The tests
play them against each other.

Parts are always stored in decreasing order.  For overpartitions a value
may carry at most one overlined copy, and that copy sorts ahead of the
plain copies of the same value, so ``d_j >= d_{j+1}`` with index 1 being
the largest part.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from qpart import _kernels
from qpart.qseries import XQSeries

__all__ = [
    "Color",
    "ColoredPartition",
    "Overpartition",
    "PreconditionError",
    "is_valid_2crr",
    "enumerate_2crr",
    "count_2crr",
    "count_2crr_table",
    "refined_count_2crr",
    "count_2crr_no_red1",
    "count_2crr_no_red1_table",
    "enumerate_overpartitions",
    "is_valid_D",
    "enumerate_D",
    "count_D",
    "is_valid_C",
    "count_C",
    "count_C_table",
    "build_xq_table",
    "parse_colored",
    "parse_overpartition",
]

EMPTY = "empty"
OVERLINE = "̅"


class PreconditionError(ValueError):
    pass


class Color(enum.Enum):
    BLACK = 0
    RED = 1

    def swap(self) -> "Color":
        return Color.RED if self is Color.BLACK else Color.BLACK


@dataclass(frozen=True)
class ColoredPartition:
    """Parts as ``(value, Color)`` pairs, largest value first."""

    parts: tuple[tuple[int, Color], ...] = ()

    @classmethod
    def of(cls, *parts: tuple[int, Color]) -> "ColoredPartition":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(v for v, _ in self.parts)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.parts)

    def count(self, color: Color) -> int:
        return sum(1 for _, c in self.parts if c is color)

    def swap_colors(self) -> "ColoredPartition":
        return ColoredPartition(tuple((v, c.swap()) for v, c in self.parts))

    def sort_key(self):
        return tuple((-v, c.value) for v, c in self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        if not self.parts:
            return EMPTY
        return ",".join(f"{v}'" if c is Color.RED else str(v) for v, c in self.parts)


@dataclass(frozen=True)
class Overpartition:
    """Parts as ``(value, overlined)`` pairs, weakly decreasing."""

    parts: tuple[tuple[int, bool], ...] = ()

    @classmethod
    def of(cls, *parts: tuple[int, bool]) -> "Overpartition":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(v for v, _ in self.parts)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.parts)

    def sort_key(self):
        return tuple((-v, 0 if o else 1) for v, o in self.parts)

    def __len__(self):
        return len(self.parts)

    def format(self, ascii: bool = True) -> str:
        if not self.parts:
            return EMPTY
        mark = "~" if ascii else OVERLINE
        return ",".join(f"{v}{mark}" if o else str(v) for v, o in self.parts)

    def __str__(self):
        return self.format(ascii=True)


def parse_colored(text: str) -> ColoredPartition:
    """Inverse of ``str(ColoredPartition)``: ``"3,2',1"``."""
    text = text.strip()
    if not text or text == EMPTY:
        return ColoredPartition()
    parts = []
    for token in text.split(","):
        token = token.strip()
        red = token.endswith("'")
        parts.append((int(token.rstrip("'")), Color.RED if red else Color.BLACK))
    return ColoredPartition(tuple(parts))


def parse_overpartition(text: str) -> Overpartition:
    """Accepts both ``3~`` and the combining-overline form."""
    text = text.strip()
    if not text or text == EMPTY:
        return Overpartition()
    parts = []
    for token in text.split(","):
        token = token.strip()
        over = token.endswith("~") or token.endswith(OVERLINE)
        parts.append((int(token.rstrip("~" + OVERLINE)), over))
    return Overpartition(tuple(parts))


# -- 2-colored Rogers-Ramanujan partitions ---------------------------------


def is_valid_2crr(p: ColoredPartition) -> bool:
    """Same-color neighbours differ by >= 2 and no value carries both colors."""
    values = p.values
    if any(a < b for a, b in zip(values, values[1:])):
        raise PreconditionError(f"parts must be sorted decreasing: {p}")
    if any(v < 1 for v in values):
        return False
    if len(set(values)) != len(values):
        return False
    last: dict[Color, int] = {}
    for v, c in p.parts:
        if c in last and last[c] - v < 2:
            return False
        last[c] = v
    return True


def enumerate_2crr(n: int, min_part: int = 1) -> list[ColoredPartition]:
    """All 2-colored RR partitions of ``n`` with every part >= ``min_part``.

    Output is in canonical order: decreasing values, Black before Red.
    """
    if n < 0:
        return []
    lo = max(min_part, 1)
    out: list[ColoredPartition] = []
    stack: list[tuple[int, Color]] = []

    def rec(rem: int, below: int, last_black: int, last_red: int) -> None:
        if rem == 0:
            out.append(ColoredPartition(tuple(stack)))
            return
        for v in range(min(rem, below - 1), lo - 1, -1):
            # remaining weight must fit in distinct values lo..v
            if rem > (v + lo) * (v - lo + 1) // 2:
                break
            if last_black - v >= 2:
                stack.append((v, Color.BLACK))
                rec(rem - v, v, v, last_red)
                stack.pop()
            if last_red - v >= 2:
                stack.append((v, Color.RED))
                rec(rem - v, v, last_black, v)
                stack.pop()

    sentinel = n + 2
    rec(n, n + 1, sentinel, sentinel)
    return out


def count_2crr_table(n_max: int, min_part: int = 1) -> list[int]:
    """Counts for weights 0..n_max via the run-alternation DP.

    Colors alternate inside each maximal run of consecutive values and
    are free across runs, so each distinct-value set contributes
    2**(number of runs).
    """
    if n_max < 0:
        return []
    return _kernels.run_dp_counts(n_max, max(min_part, 1), 2)


def count_2crr(n: int, min_part: int = 1, method: str = "dp") -> int:
    if n < 0:
        return 0
    if method == "enumerate":
        return len(enumerate_2crr(n, min_part))
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    return count_2crr_table(n, min_part)[n]


def refined_count_2crr(m: int, n: int, min_part: int = 1, method: str = "dp") -> int:
    """Number of partitions of ``n`` into exactly ``m`` parts, all >= min_part."""
    if m < 0 or n < 0:
        return 0
    if method == "enumerate":
        return sum(1 for p in enumerate_2crr(n, min_part) if len(p) == m)
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    return _kernels.run_dp_refined(m, n, max(min_part, 1), 2)[m][n]


def count_2crr_no_red1_table(n_max: int) -> list[int]:
    # a run starting at 1 has its colors forced once 1 must be black
    if n_max < 0:
        return []
    return _kernels.run_dp_counts(n_max, 1, 1)


def count_2crr_no_red1(n: int, method: str = "dp") -> int:
    if n < 0:
        return 0
    if method == "enumerate":
        red_one = (1, Color.RED)
        return sum(1 for p in enumerate_2crr(n, 1) if red_one not in p.parts)
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")
    return count_2crr_no_red1_table(n)[n]


def build_xq_table(min_part: int, x_order: int, q_order: int,
                   method: str = "enumerate") -> XQSeries:
    """Table of refined counts r_j(m, n) for m <= x_order, n <= q_order."""
    if method == "dp":
        return XQSeries.from_rows(
            _kernels.run_dp_refined(x_order, q_order, max(min_part, 1), 2)
        )
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    rows = [[0] * (q_order + 1) for _ in range(x_order + 1)]
    for n in range(q_order + 1):
        for p in enumerate_2crr(n, min_part):
            if len(p) <= x_order:
                rows[len(p)][n] += 1
    return XQSeries.from_rows(rows)


# -- overpartitions ----------------------------------------------------------


def enumerate_overpartitions(n: int) -> Iterator[Overpartition]:
    """Every overpartition of ``n``: at most one overlined copy per value."""
    if n < 0:
        return
    stack: list[tuple[int, bool]] = []

    def rec(rem: int, below: int) -> Iterator[Overpartition]:
        if rem == 0:
            yield Overpartition(tuple(stack))
            return
        for v in range(min(rem, below - 1), 0, -1):
            for over in (True, False):
                base = v if over else 0
                if base > rem:
                    continue
                for plain in range((rem - base) // v + 1):
                    if not over and plain == 0:
                        continue
                    block = [(v, True)] * over + [(v, False)] * plain
                    stack.extend(block)
                    yield from rec(rem - base - plain * v, v)
                    del stack[len(stack) - len(block):]

    yield from rec(n, n + 1)


def _check_k_a(k: int, a: int) -> None:
    if not (k >= a >= 1):
        raise PreconditionError(f"need k >= a >= 1, got k={k}, a={a}")


def is_valid_D(p: Overpartition, k: int, a: int) -> bool:
    """Membership in the family counted by D_{k,a}.

    At most a-1 non-overlined 1s, and d_j - d_{j+k-1} >= 1 when d_j is
    overlined, >= 2 otherwise (1-based indices, largest part first).
    """
    _check_k_a(k, a)
    parts = p.parts
    if any(x < y for (x, _), (y, _) in zip(parts, parts[1:])):
        raise PreconditionError(f"parts must be weakly decreasing: {p}")
    if sum(1 for v, o in parts if v == 1 and not o) > a - 1:
        return False
    for j in range(len(parts) - k + 1):
        v, over = parts[j]
        if v - parts[j + k - 1][0] < (1 if over else 2):
            return False
    return True


def _walk_D(n: int, k: int, a: int, emit) -> None:
    # checks each gap condition the moment its right end is placed
    stack: list[tuple[int, bool]] = []
    plain_ones = 0

    def rec(rem: int) -> None:
        nonlocal plain_ones
        if rem == 0:
            emit(stack)
            return
        t = len(stack)
        if t:
            pv = stack[-1][0]
            top = min(rem, pv)
        else:
            pv = n + 1
            top = rem
        for v in range(top, 0, -1):
            for over in (True, False):
                if v == pv and over:
                    # the overlined copy is unique and sorts first
                    continue
                if not over and v == 1 and plain_ones >= a - 1:
                    continue
                j = t - k + 1
                if j >= 0:
                    jv, jo = stack[j] if j < t else (v, over)
                    if jv - v < (1 if jo else 2):
                        continue
                stack.append((v, over))
                if not over and v == 1:
                    plain_ones += 1
                rec(rem - v)
                if not over and v == 1:
                    plain_ones -= 1
                stack.pop()

    rec(n)


def enumerate_D(k: int, a: int, n: int) -> list[Overpartition]:
    _check_k_a(k, a)
    out: list[Overpartition] = []
    if n >= 0:
        _walk_D(n, k, a, lambda s: out.append(Overpartition(tuple(s))))
    return out


def count_D(k: int, a: int, n: int) -> int:
    """D_{k,a}(n) by pruned exhaustive search."""
    _check_k_a(k, a)
    if n < 0:
        return 0
    total = 0

    def bump(_):
        nonlocal total
        total += 1

    _walk_D(n, k, a, bump)
    return total


def _c_permissions(k: int, i: int, n_max: int) -> tuple[list[bool], list[bool]]:
    if not (k >= i >= 1):
        raise PreconditionError(f"need k >= i >= 1, got k={k}, i={i}")
    if i == k:
        # C_{k,k}: no part of either kind divisible by k
        ok = [v % k != 0 for v in range(n_max + 1)]
        return ok, list(ok)
    banned = {0, i, 2 * k - i}
    plain = [v % (2 * k) not in banned for v in range(n_max + 1)]
    return plain, [True] * (n_max + 1)


def is_valid_C(p: Overpartition, k: int, i: int) -> bool:
    """Membership in the family counted by C_{k,i}."""
    plain_ok, over_ok = _c_permissions(k, i, max(p.values, default=0))
    return all(over_ok[v] if o else plain_ok[v] for v, o in p.parts)


def count_C_table(k: int, i: int, n_max: int) -> list[int]:
    """C_{k,i}(n) for n = 0..n_max by a knapsack over part values."""
    if n_max < 0:
        return []
    plain_ok, over_ok = _c_permissions(k, i, n_max)
    return _kernels.overpartition_counts(n_max, plain_ok, over_ok)


def count_C(k: int, i: int, n: int) -> int:
    if n < 0:
        return 0
    return count_C_table(k, i, n)[n]
