"""Core types for triple-structured inputs and whitespace-token texts.

Structured records (knowledge-graph triples, or table rows flattened to
triples) are immutable once constructed; every downstream stage consumes the
linearized token view produced here.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

SUBJECT_MARKER = "<S>"
PREDICATE_MARKER = "<P>"
OBJECT_MARKER = "<O>"
MARKERS = (SUBJECT_MARKER, PREDICATE_MARKER, OBJECT_MARKER)

_MARKER_SET = frozenset(MARKERS)


class SourceKind(str, Enum):
    """Origin of a structured record; both kinds share the same triple form."""

    GRAPH = "graph"
    TABLE = "table"


def _clean_field(value: str, role: str) -> str:
    tokens = str(value).split()
    if not tokens:
        raise ValueError(f"triple {role} must be non-empty after trimming")
    for token in tokens:
        if token in _MARKER_SET:
            raise ValueError(f"triple {role} may not contain reserved token {token!r}")
    return " ".join(tokens)


@dataclass(frozen=True)
class Triple:
    """One (subject, predicate, object) fact; fields are whitespace-normalized."""

    subject: str
    predicate: str
    object: str

    def __post_init__(self) -> None:
        for role in ("subject", "predicate", "object"):
            super().__setattr__(role, _clean_field(getattr(self, role), role))


@dataclass(frozen=True)
class TokenSeq:
    """A whitespace-delimited token sequence; no token carries internal whitespace."""

    tokens: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        tokens = tuple(self.tokens)
        for token in tokens:
            if not token or any(ch.isspace() for ch in token):
                raise ValueError(f"bad token {token!r}: empty or contains whitespace")
        super().__setattr__("tokens", tokens)

    @classmethod
    def from_text(cls, text: str) -> TokenSeq:
        return cls(tuple(text.split()))

    def detokenized(self) -> str:
        return " ".join(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __bool__(self) -> bool:
        return bool(self.tokens)


@dataclass(frozen=True)
class StructuredInput:
    """An ordered, non-empty list of triples; order drives linearization."""

    triples: tuple[Triple, ...]
    source_kind: SourceKind = SourceKind.GRAPH

    def __post_init__(self) -> None:
        triples = tuple(self.triples)
        if not triples:
            raise ValueError("structured input needs at least one triple")
        super().__setattr__("triples", triples)
        super().__setattr__("source_kind", SourceKind(self.source_kind))

    def __len__(self) -> int:
        return len(self.triples)


@dataclass(frozen=True)
class LabeledExample:
    input: StructuredInput
    text: TokenSeq

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("labeled example text must be non-empty")


def linearize(source: StructuredInput) -> TokenSeq:
    """Flatten triples into role-marked tokens, in triple order, no separators."""
    tokens: list[str] = []
    for triple in source.triples:
        tokens.append(SUBJECT_MARKER)
        tokens.extend(triple.subject.split())
        tokens.append(PREDICATE_MARKER)
        tokens.extend(triple.predicate.split())
        tokens.append(OBJECT_MARKER)
        tokens.extend(triple.object.split())
    return TokenSeq(tuple(tokens))


def parse_linearized(
    seq: TokenSeq, source_kind: SourceKind = SourceKind.GRAPH
) -> StructuredInput:
    """Inverse of :func:`linearize` for inputs whose fields avoid the markers."""
    tokens = seq.tokens
    triples: list[Triple] = []
    i = 0
    while i < len(tokens):
        fields: list[str] = []
        for marker in MARKERS:
            if i >= len(tokens) or tokens[i] != marker:
                found = tokens[i] if i < len(tokens) else "<end>"
                raise ValueError(f"expected {marker} at token {i}, found {found!r}")
            i += 1
            start = i
            while i < len(tokens) and tokens[i] not in _MARKER_SET:
                i += 1
            fields.append(" ".join(tokens[start:i]))
        triples.append(Triple(*fields))
    return StructuredInput(tuple(triples), source_kind)


def canonical_entity(surface: str) -> str:
    """Whitespace-normalized, lowercased entity form used for all matching."""
    return " ".join(surface.split()).lower()


def extract_entities(source: StructuredInput) -> set[str]:
    """Deduplicated canonical subjects and objects; predicates are excluded."""
    entities: set[str] = set()
    for triple in source.triples:
        entities.add(canonical_entity(triple.subject))
        entities.add(canonical_entity(triple.object))
    return entities


def triples_from_table(
    row_entity: str, attributes: Sequence[tuple[str, str]]
) -> StructuredInput:
    """Flatten one table row: the row entity is the shared subject and each
    (attribute, value) pair becomes a triple."""
    return StructuredInput(
        tuple(Triple(row_entity, attr, value) for attr, value in attributes),
        SourceKind.TABLE,
    )
