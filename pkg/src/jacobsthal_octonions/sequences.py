"""Jacobsthal-family integer sequences and the scalar identities they obey.

Four sequences are generated, all by their defining recurrences over exact
integers:

* Jacobsthal            J(n):   J(n+1) = J(n) + 2 J(n-1),  seeds 0, 1
* Jacobsthal-Lucas      JL(n):  same recurrence,           seeds 2, 1
* third-order Jacobsthal J3(n): x(n+3) = x(n+2) + x(n+1) + 2 x(n), seeds 0, 1, 1
* third-order Jacobsthal-Lucas JL3(n): same recurrence,    seeds 2, 1, 5

The two third-order sequences also have radical-free closed forms built on
the period-3 correction term V(n) in {2, -3, 1}: 7*J3(n) = 2^(n+1) - V(n)
and 7*JL3(n) = 2^(n+3) + 3*V(n).  ``seq_closed`` evaluates those exactly
and asserts the division by 7 leaves no remainder, which doubles as a
transcription self-check.

Negative indices are rejected everywhere: extending the recurrences
backwards yields non-integer values for the Lucas-type sequence, so the
domain is n >= 0 only.  ``scalar_identity_sides`` evaluates both sides of
each registered scalar identity; the three identities that reference index
n-3 (E5, E9, E12) therefore require n >= 3.
"""

from __future__ import annotations

import threading
from enum import Enum

from .errors import DomainError, InconsistencyError

__all__ = [
    "SequenceKind",
    "THIRD_ORDER_KINDS",
    "CORRECTION_TABLE",
    "correction",
    "seq_value",
    "seq_closed",
    "partial_sum",
    "partial_sum_closed",
    "SCALAR_IDENTITY_IDS",
    "SCALAR_IDENTITY_MIN_INDEX",
    "scalar_identity_sides",
]


class SequenceKind(Enum):
    """The four generated sequences; values double as CLI tags."""

    JACOBSTHAL = "jacobsthal"
    JACOBSTHAL_LUCAS = "jacobsthal-lucas"
    THIRD_ORDER_JACOBSTHAL = "j3"
    THIRD_ORDER_JACOBSTHAL_LUCAS = "jl3"


THIRD_ORDER_KINDS = (
    SequenceKind.THIRD_ORDER_JACOBSTHAL,
    SequenceKind.THIRD_ORDER_JACOBSTHAL_LUCAS,
)

_SEEDS = {
    SequenceKind.JACOBSTHAL: (0, 1),
    SequenceKind.JACOBSTHAL_LUCAS: (2, 1),
    SequenceKind.THIRD_ORDER_JACOBSTHAL: (0, 1, 1),
    SequenceKind.THIRD_ORDER_JACOBSTHAL_LUCAS: (2, 1, 5),
}

# Value of V(n) by n mod 3; V folds the complex-root part of the Binet
# forms (the cube-roots-of-unity contribution) into an integer of period 3.
CORRECTION_TABLE = (2, -3, 1)

# Monotonically growing per-kind caches; the lock keeps concurrent callers
# on pure-function semantics.
_cache: dict[SequenceKind, list[int]] = {k: list(s) for k, s in _SEEDS.items()}
_cache_lock = threading.Lock()


def correction(n: int) -> int:
    """The period-3 correction term V(n) in {2, -3, 1}."""
    return CORRECTION_TABLE[n % 3]


def seq_value(kind: SequenceKind, n: int) -> int:
    """The n-th term of ``kind``, computed by its defining recurrence."""
    if n < 0:
        raise DomainError(f"sequence index must be >= 0, got {n}")
    with _cache_lock:
        values = _cache[kind]
        if kind in THIRD_ORDER_KINDS:
            while len(values) <= n:
                values.append(values[-1] + values[-2] + 2 * values[-3])
        else:
            while len(values) <= n:
                values.append(values[-1] + 2 * values[-2])
        return values[n]


def seq_closed(kind: SequenceKind, n: int) -> int:
    """The n-th third-order term by exact closed form.

    Uses the radical-free shape over 7 and verifies divisibility, so a
    wrong correction table cannot silently produce wrong values.
    """
    if kind not in THIRD_ORDER_KINDS:
        raise ValueError(f"closed form is defined for the third-order kinds, not {kind}")
    if n < 0:
        raise DomainError(f"sequence index must be >= 0, got {n}")
    if kind is SequenceKind.THIRD_ORDER_JACOBSTHAL:
        numerator = 2 ** (n + 1) - correction(n)
    else:
        numerator = 2 ** (n + 3) + 3 * correction(n)
    q, r = divmod(numerator, 7)
    if r:
        raise InconsistencyError(f"closed-form numerator {numerator} is not divisible by 7")
    return q


def partial_sum(kind: SequenceKind, n: int) -> int:
    """The literal sum of terms 0..n of a third-order kind."""
    if kind not in THIRD_ORDER_KINDS:
        raise ValueError(f"partial sums are defined for the third-order kinds, not {kind}")
    if n < 0:
        raise DomainError(f"sequence index must be >= 0, got {n}")
    return sum(seq_value(kind, k) for k in range(n + 1))


def partial_sum_closed(kind: SequenceKind, n: int) -> int:
    """The closed form of ``partial_sum``: a shifted term with a residue-
    dependent constant."""
    if kind not in THIRD_ORDER_KINDS:
        raise ValueError(f"partial sums are defined for the third-order kinds, not {kind}")
    if n < 0:
        raise DomainError(f"sequence index must be >= 0, got {n}")
    nxt = seq_value(kind, n + 1)
    if kind is SequenceKind.THIRD_ORDER_JACOBSTHAL:
        return nxt - 1 if n % 3 == 0 else nxt
    return nxt + 1 if n % 3 == 0 else nxt - 2


def _j3(n: int) -> int:
    return seq_value(SequenceKind.THIRD_ORDER_JACOBSTHAL, n)


def _jl3(n: int) -> int:
    return seq_value(SequenceKind.THIRD_ORDER_JACOBSTHAL_LUCAS, n)


# Scalar identities, each as (lhs, rhs) with the left side always computed
# from recurrence-generated values.  EC5/E6/E8 have period-3 right sides.


def _e4(n: int):
    return 3 * _j3(n) + _jl3(n), 2 ** (n + 1)


def _e5(n: int):
    return _jl3(n) - 3 * _j3(n), 2 * _jl3(n - 3)


def _ec5(n: int):
    return _j3(n + 2) - 4 * _j3(n), -2 if n % 3 == 1 else 1


def _e6(n: int):
    return _jl3(n) - 4 * _j3(n), correction(n)


def _e7(n: int):
    return _jl3(n + 1) + _jl3(n), 3 * _j3(n + 2)


def _e8(n: int):
    return _jl3(n) - _j3(n + 2), (1, -1, 0)[n % 3]


def _e9(n: int):
    return _jl3(n - 3) ** 2 + 3 * _j3(n) * _jl3(n), 4 ** n


def _e10(n: int):
    kind = SequenceKind.THIRD_ORDER_JACOBSTHAL
    return partial_sum(kind, n), partial_sum_closed(kind, n)


def _e11(n: int):
    kind = SequenceKind.THIRD_ORDER_JACOBSTHAL_LUCAS
    return partial_sum(kind, n), partial_sum_closed(kind, n)


def _e12(n: int):
    return _jl3(n) ** 2 - 9 * _j3(n) ** 2, 2 ** (n + 2) * _jl3(n - 3)


def _jsum(n: int):
    return _j3(n + 2) + _j3(n + 1) + _j3(n), 2 ** (n + 1)


_SCALAR_SIDES = {
    "E4": _e4, "E5": _e5, "EC5": _ec5, "E6": _e6, "E7": _e7, "E8": _e8,
    "E9": _e9, "E10": _e10, "E11": _e11, "E12": _e12, "JSUM": _jsum,
}

SCALAR_IDENTITY_IDS = tuple(_SCALAR_SIDES)

# E5, E9 and E12 reference index n-3; terms below index 0 are undefined.
SCALAR_IDENTITY_MIN_INDEX = {name: 3 if name in ("E5", "E9", "E12") else 0
                             for name in _SCALAR_SIDES}


def scalar_identity_sides(identity, n: int) -> tuple[int, int]:
    """Both sides of a scalar identity at index n, evaluated exactly.

    ``identity`` is one of the names in SCALAR_IDENTITY_IDS (an enum member
    with that ``name`` is accepted too).  Returns (lhs, rhs) rather than a
    boolean so that a discrepancy report can carry the witness values.
    """
    name = getattr(identity, "name", identity)
    try:
        sides = _SCALAR_SIDES[name]
    except KeyError:
        raise ValueError(f"unknown scalar identity {name!r}") from None
    n_min = SCALAR_IDENTITY_MIN_INDEX[name]
    if n < n_min:
        raise DomainError(f"identity {name} is defined for n >= {n_min}, got {n}")
    return sides(n)
