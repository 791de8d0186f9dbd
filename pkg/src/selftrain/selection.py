"""Pseudo-label quality gates: entity coverage and a probability-ranked quota."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .kb import StructuredInput, TokenSeq, extract_entities


@dataclass(frozen=True)
class PseudoLabeledExample:
    """A structured input paired with a generated text and its quality scores."""

    input: StructuredInput
    text: TokenSeq
    logprob: float
    coverage: float
    iteration: int

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("pseudo-labeled text must be non-empty")
        if not math.isfinite(self.logprob):
            raise ValueError("logprob must be finite")
        if not 0.0 <= self.coverage <= 1.0:
            raise ValueError(f"coverage {self.coverage} outside [0, 1]")
        if self.iteration < 1:
            raise ValueError("iteration must be >= 1")


@dataclass(frozen=True)
class SelectionConfig:
    eps_cov: float = 1.0
    eps_gen: float = 0.5
    length_normalize: bool = False

    def __post_init__(self) -> None:
        if not 0.0 <= self.eps_cov <= 1.0:
            raise ValueError(f"eps_cov {self.eps_cov} outside [0, 1]")
        if not 0.0 < self.eps_gen <= 1.0:
            raise ValueError(f"eps_gen {self.eps_gen} outside (0, 1]")


def coverage(source: StructuredInput, text: TokenSeq) -> float:
    """Fraction of the input's entities that occur in the text.

    An entity counts as present when its canonical token sequence appears as a
    contiguous, case-insensitive window of the text tokens. An input with no
    entities (impossible for valid triples, but kept total) is fully covered.
    """
    entities = extract_entities(source)
    if not entities:
        return 1.0
    lowered = [token.lower() for token in text.tokens]
    hits = 0
    for entity in entities:
        window = entity.split()
        width = len(window)
        for start in range(0, len(lowered) - width + 1):
            if lowered[start : start + width] == window:
                hits += 1
                break
    return hits / len(entities)


def select(
    candidates: Sequence[PseudoLabeledExample], config: SelectionConfig
) -> list[PseudoLabeledExample]:
    """Keep fully-enough-covered candidates, then the top share by score.

    Step 1 drops candidates with coverage below ``eps_cov``. Step 2 ranks the
    survivors by log-probability (optionally length-normalized) descending,
    ties preserving candidate order, and keeps the first
    ``ceil(eps_gen * survivors)``.
    """
    survivors = [c for c in candidates if c.coverage >= config.eps_cov]
    if not survivors:
        return []
    score: Callable[[PseudoLabeledExample], float]
    if config.length_normalize:
        score = lambda c: c.logprob / len(c.text)  # noqa: E731
    else:
        score = lambda c: c.logprob  # noqa: E731
    ranked = sorted(survivors, key=score, reverse=True)
    quota = math.ceil(config.eps_gen * len(survivors))
    return ranked[:quota]
