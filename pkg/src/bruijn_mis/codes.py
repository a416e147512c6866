"""Maximum comma-free codes of length 3."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator

from .enumeration import enumerate_all
from .group import transporter
from .sets import CandidateSet, Kind, is_comma_free, is_independent, lmis_size


class Provenance(str, enum.Enum):
    LMIS = "lmis-derived"
    CLASSICAL = "classical"
    USER = "user"


@dataclass(frozen=True)
class CommaFreeCode(CandidateSet):
    provenance: Provenance = Provenance.USER


def classical_code(d: int) -> CommaFreeCode:
    """All words x1 x2 x3 with x1 < x2 >= x3."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    words = frozenset(w for w in itertools.product(range(d), repeat=3) if w[0] < w[1] >= w[2])
    code = CommaFreeCode(d, words, Provenance.CLASSICAL)
    assert len(code) == lmis_size(d) and is_comma_free(code)
    return code


def codes_from_lmis(d: int) -> Iterator[CommaFreeCode]:
    for T in enumerate_all(d, Kind.LOOPLESS):
        code = CommaFreeCode(d, T.words, Provenance.LMIS)
        if not is_comma_free(code):
            raise AssertionError(f"loop-less MIS {T} is not comma-free")
        yield code


def code_classes(codes) -> list[list[CandidateSet]]:
    """Group codes into digit-permutation classes (transporter search against class leaders)."""
    classes: list[list[CandidateSet]] = []
    for C in codes:
        for cls in classes:
            if transporter(cls[0], C) is not None:
                cls.append(C)
                break
        else:
            classes.append([C])
    return classes


@dataclass(frozen=True)
class CodeReport:
    d: int
    size: int
    comma_free: bool
    maximum: bool
    independent: bool

    @property
    def ok(self) -> bool:
        return self.comma_free


def validate_code(C: CandidateSet) -> CodeReport:
    return CodeReport(
        d=C.d,
        size=len(C),
        comma_free=is_comma_free(C),
        maximum=len(C) == lmis_size(C.d),
        independent=is_independent(C, Kind.LOOPLESS),
    )
