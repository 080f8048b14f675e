"""Vertex labels over the alphabet {0, ..., d}, disc operations and imprints.

A label is a plain tuple of ints.  Kautz labels have distinct consecutive
symbols; cyclic Kautz labels additionally have distinct first and last
symbols, so they can be read around a disc with a marked start.

For the three-symbol alphabet (d = 2) every ordered pair of distinct symbols
carries a sign, and the cyclic sequence of signs of a label is its imprint.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, InvalidLabelError, InvalidSwapError, InvalidSymbolError

Label = tuple[int, ...]


def check_symbols(seq: Sequence[int], d: int) -> None:
    """Raise InvalidSymbolError unless every symbol is in 0..d."""
    if len(seq) == 0:
        raise InvalidLabelError("label must be nonempty")
    for s in seq:
        if not 0 <= s <= d:
            raise InvalidSymbolError(f"symbol {s} outside alphabet 0..{d}")


def is_kautz_label(seq: Sequence[int], d: int) -> bool:
    check_symbols(seq, d)
    return all(a != b for a, b in zip(seq, seq[1:]))


def is_cyclic_kautz_label(seq: Sequence[int], d: int) -> bool:
    """True iff ``seq`` is Kautz-valid and, for length >= 2, first != last.

    Length-one labels are accepted: the wrap-around condition is vacuous.
    """
    if not is_kautz_label(seq, d):
        return False
    return len(seq) == 1 or seq[0] != seq[-1]


def rotate(seq: Sequence[int], k: int) -> Label:
    """Move the marked start ``k`` steps: ``a_{k+1} ... a_l a_1 ... a_k``."""
    seq = tuple(seq)
    if not seq:
        return seq
    k %= len(seq)
    return seq[k:] + seq[:k]


def swap_symbol(seq: Sequence[int], i: int, x: int, d: int) -> Label:
    """Replace the symbol at 1-based position ``i`` by ``x``.

    The label is read cyclically, so position 1 neighbours position l.  The
    input only has to be Kautz-valid; a cyclic Kautz input gives a cyclic
    Kautz output.
    """
    seq = tuple(seq)
    if not is_kautz_label(seq, d):
        raise InvalidLabelError(f"{format_label(seq, d)} is not a Kautz label")
    n = len(seq)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} outside 1..{n}")
    check_symbols((x,), d)
    left, right = seq[(i - 2) % n], seq[i % n]
    if x == left or x == right:
        raise InvalidSwapError(
            f"symbol {x} at position {i} would repeat a neighbour ({left}, {right})"
        )
    return seq[: i - 1] + (x,) + seq[i:]


def format_label(seq: Sequence[int], d: int | None = None) -> str:
    """Render a label as digits (d <= 9) or comma-separated integers."""
    if d is None:
        d = max(seq, default=0)
    if d <= 9:
        return "".join(str(s) for s in seq)
    return ",".join(str(s) for s in seq)


def parse_label(text: str, d: int | None = None) -> Label:
    """Inverse of :func:`format_label`; validates the alphabet when ``d`` is given."""
    text = text.strip()
    if not text:
        raise InvalidLabelError("empty label")
    try:
        if "," in text:
            seq = tuple(int(part) for part in text.split(","))
        else:
            seq = tuple(int(ch) for ch in text)
    except ValueError:
        raise InvalidLabelError(f"cannot parse label {text!r}") from None
    if d is not None:
        if d > 9 and "," not in text and len(seq) > 1:
            raise InvalidLabelError(
                f"labels over 0..{d} must be comma-separated, got {text!r}"
            )
        check_symbols(seq, d)
    return seq


def kautz_labels(d: int, length: int, cyclic: bool = False) -> Iterator[Label]:
    """Yield all Kautz (or cyclic Kautz) labels in lexicographic order.

    Labels are grown one symbol at a time, so memory and time scale with
    the number of valid labels rather than (d+1)**length.
    """
    if d < 0 or length < 1:
        return
    prefix: list[int] = []

    def extend() -> Iterator[Label]:
        if len(prefix) == length:
            if not cyclic or length == 1 or prefix[0] != prefix[-1]:
                yield tuple(prefix)
            return
        last = prefix[-1] if prefix else None
        final = len(prefix) == length - 1
        for s in range(d + 1):
            if s == last:
                continue
            if cyclic and final and length > 1 and s == prefix[0]:
                continue
            prefix.append(s)
            yield from extend()
            prefix.pop()

    yield from extend()


# -- signs and imprints (alphabet {0, 1, 2} only) -------------------------


class Sign(enum.Enum):
    PLUS = "+"
    MINUS = "-"

    def __str__(self) -> str:
        return self.value


def sgn(a: int, b: int) -> Sign:
    """PLUS for (0,1), (1,2), (2,0); MINUS for the reversed pairs."""
    if a not in (0, 1, 2) or b not in (0, 1, 2):
        raise DomainError(f"sgn is defined on symbols 0..2, got ({a}, {b})")
    if a == b:
        raise DomainError(f"sgn needs distinct symbols, got ({a}, {a})")
    return Sign.PLUS if (b - a) % 3 == 1 else Sign.MINUS


@dataclass(frozen=True)
class Imprint:
    signs: tuple[Sign, ...]

    @property
    def plus_count(self) -> int:
        return sum(1 for s in self.signs if s is Sign.PLUS)

    @property
    def minus_count(self) -> int:
        return len(self.signs) - self.plus_count

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join(s.value for s in self.signs)

    @classmethod
    def from_string(cls, text: str) -> "Imprint":
        try:
            return cls(tuple(Sign(ch) for ch in text))
        except ValueError:
            raise DomainError(f"imprint must consist of '+' and '-', got {text!r}") from None


def imprint(seq: Sequence[int]) -> Imprint:
    """Cyclic sign sequence of a cyclic Kautz label over {0, 1, 2}."""
    seq = tuple(seq)
    if any(not 0 <= s <= 2 for s in seq):
        raise DomainError("imprints are defined only for the alphabet {0, 1, 2}")
    if len(seq) < 2:
        raise DomainError("imprints need labels of length >= 2")
    if not is_cyclic_kautz_label(seq, 2):
        raise InvalidLabelError(f"{format_label(seq)} is not a cyclic Kautz label")
    n = len(seq)
    return Imprint(tuple(sgn(seq[i], seq[(i + 1) % n]) for i in range(n)))


def from_imprint(first: int, signs: Imprint | Iterable[Sign] | str) -> Label:
    """Rebuild the unique d = 2 label with the given first symbol and imprint."""
    if isinstance(signs, str):
        signs = Imprint.from_string(signs)
    elif not isinstance(signs, Imprint):
        signs = Imprint(tuple(signs))
    if first not in (0, 1, 2):
        raise DomainError(f"first symbol must be in 0..2, got {first}")
    if len(signs) < 2:
        raise DomainError("imprints need length >= 2")
    seq = [first]
    for s in signs.signs[:-1]:
        seq.append((seq[-1] + (1 if s is Sign.PLUS else -1)) % 3)
    closing = (seq[-1] + (1 if signs.signs[-1] is Sign.PLUS else -1)) % 3
    if closing != first:
        raise DomainError(f"imprint {signs} does not close up into a cyclic label")
    return tuple(seq)
