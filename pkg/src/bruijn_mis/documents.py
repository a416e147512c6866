"""JSON documents for sets and construction traces, plus the compact text form.

A set document looks like::

    {
      "d": 2,
      "D": 3,
      "kind": "with-loops",
      "words": [[0, 0, 0], [0, 1, 0], [0, 1, 1]]
    }

with optional ``"trace"`` and ``"provenance"`` keys.  The compact form is one
word per line (``000``), optionally preceded by ``# d=2 kind=loop-less``; it
only works for alphabets of at most 10 digits.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from typing import Sequence

from .constructors import BASES, OPERATORS, ConstructionTrace
from .group import Permutation
from .sets import CandidateSet, Kind

KINDS = ("with-loops", "loop-less", "code")
COMPACT_MAX_D = 10


class DocumentError(ValueError):
    pass


class UnsortedInputWarning(UserWarning):
    pass


@dataclass(frozen=True)
class TraceDocument:
    base: str
    ops: tuple[str, ...]
    perm: tuple[int, ...]

    @classmethod
    def from_trace(cls, trace: ConstructionTrace) -> "TraceDocument":
        return cls(trace.base, tuple(trace.ops), trace.final_perm.images)

    def to_trace(self) -> ConstructionTrace:
        try:
            return ConstructionTrace(self.base, self.ops, Permutation(self.perm))
        except ValueError as exc:
            raise DocumentError(f"malformed trace: {exc}") from None

    def as_dict(self) -> dict:
        return {"base": self.base, "ops": list(self.ops), "perm": list(self.perm)}


@dataclass(frozen=True)
class SetDocument:
    d: int
    words: tuple[tuple[int, ...], ...]
    kind: str = "with-loops"
    D: int = 3
    trace: TraceDocument | None = None
    provenance: str | None = None

    @classmethod
    def from_set(cls, S: CandidateSet, kind: str | None = None, trace: ConstructionTrace | None = None,
                 provenance: str | None = None) -> "SetDocument":
        if kind is None:
            kind = getattr(S, "kind", Kind.WITH_LOOPS)
        kind = kind.value if isinstance(kind, Kind) else str(kind)
        prov = getattr(S, "provenance", None)
        if provenance is None and prov is not None:
            provenance = prov.value
        D = len(next(iter(S.words))) if S.words else 3
        tdoc = TraceDocument.from_trace(trace) if trace is not None else None
        return cls(S.d, tuple(sorted(S.words)), kind, D, tdoc, provenance)

    def candidate(self) -> CandidateSet:
        return CandidateSet(self.d, frozenset(self.words))

    def as_dict(self) -> dict:
        out: dict = {"d": self.d, "D": self.D, "kind": self.kind, "words": [list(w) for w in self.words]}
        if self.trace is not None:
            out["trace"] = self.trace.as_dict()
        if self.provenance is not None:
            out["provenance"] = self.provenance
        return out


def _dump(value) -> str:
    return json.dumps(value, separators=(", ", ": "))


def serialize_set(doc: SetDocument, compact: bool = False) -> str:
    """Byte-stable JSON; ``compact`` gives a single line (for JSONL streams)."""
    items = doc.as_dict()
    if compact:
        return _dump(items) + "\n"
    body = ",\n".join(f"  {_dump(k)}: {_dump(v)}" for k, v in items.items())
    return "{\n" + body + "\n}\n"


def serialize_trace(doc: TraceDocument) -> str:
    body = ",\n".join(f"  {_dump(k)}: {_dump(v)}" for k, v in doc.as_dict().items())
    return "{\n" + body + "\n}\n"


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def _trace_from(obj) -> TraceDocument:
    if not isinstance(obj, dict):
        raise DocumentError("trace must be an object")
    try:
        base, ops, perm = obj["base"], obj["ops"], obj["perm"]
    except KeyError as exc:
        raise DocumentError(f"trace is missing {exc.args[0]!r}") from None
    if base not in BASES:
        raise DocumentError(f"unknown base {base!r}")
    if not isinstance(ops, list) or any(op not in OPERATORS for op in ops):
        raise DocumentError(f"ops must be a list over {sorted(OPERATORS)}")
    if not isinstance(perm, list):
        raise DocumentError("perm must be a list of integers")
    doc = TraceDocument(base, tuple(ops), tuple(_int(x, "perm entry") for x in perm))
    doc.to_trace()
    return doc


def parse_trace(text: str) -> TraceDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return _trace_from(obj)


def _finish(d: int, D: int, kind: str, words: Sequence[tuple[int, ...]], trace, provenance) -> SetDocument:
    if d < 1:
        raise DocumentError(f"d must be positive, got {d}")
    if kind not in KINDS:
        raise DocumentError(f"kind must be one of {KINDS}, got {kind!r}")
    for w in words:
        if len(w) != D:
            raise DocumentError(f"word {list(w)} does not have length {D}")
        if any(not 0 <= x < d for x in w):
            raise DocumentError(f"word {list(w)} has a digit outside 0..{d - 1}")
    if len(set(words)) != len(words):
        raise DocumentError("duplicate words")
    ordered = tuple(sorted(words))
    if ordered != tuple(words):
        warnings.warn("words were not sorted; re-sorted", UnsortedInputWarning, stacklevel=3)
    return SetDocument(d, ordered, kind, D, trace, provenance)


def _parse_json(text: str) -> SetDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise DocumentError("set document must be a JSON object")
    if "d" not in obj or "words" not in obj:
        raise DocumentError("set document needs 'd' and 'words'")
    d = _int(obj["d"], "d")
    D = _int(obj.get("D", 3), "D")
    kind = obj.get("kind", "with-loops")
    raw = obj["words"]
    if not isinstance(raw, list) or not all(isinstance(w, list) for w in raw):
        raise DocumentError("words must be a list of digit arrays")
    words = [tuple(_int(x, "digit") for x in w) for w in raw]
    trace = _trace_from(obj["trace"]) if obj.get("trace") is not None else None
    provenance = obj.get("provenance")
    return _finish(d, D, kind, words, trace, provenance)


def _parse_compact(text: str) -> SetDocument:
    d = None
    kind = "with-loops"
    words = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            for field in line[1:].split():
                key, _, value = field.partition("=")
                if key == "d":
                    d = int(value)
                elif key == "kind":
                    kind = value
            continue
        if len(line) != 3 or not line.isdigit():
            raise DocumentError(f"line {lineno}: expected a 3-digit word, got {line!r}")
        words.append(tuple(int(c) for c in line))
    if d is None:
        d = max((max(w) for w in words), default=0) + 1
    if d > COMPACT_MAX_D:
        raise DocumentError(f"compact form only supports d <= {COMPACT_MAX_D}; use JSON arrays for d={d}")
    return _finish(d, 3, kind, words, None, None)


def parse_set(text: str) -> SetDocument:
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_compact(text)


def read_set(path: str) -> SetDocument:
    with open(path) as fh:
        return parse_set(fh.read())


def read_trace(path: str) -> TraceDocument:
    with open(path) as fh:
        return parse_trace(fh.read())
