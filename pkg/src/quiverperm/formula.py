"""Closed-form permutation attached to a mutation word, and its check.

Each generator x_ij contributes the transposition (i+1 j), independent of
sign.  For a word w = g_1 g_2 ... g_N (application order) acting on a state
whose c-matrix factors as sigma times a standard matrix, the predicted
relabeling of mutable vertices is

    sigma o t_1 o t_2 o ... o t_N o sigma^{-1}

``verify`` compares that prediction against an independent observation:
the row permutation relating the endpoint to the coframe (reddening
sequences) or to the start (loop sequences).  Arbitrary sequences carry a
predicted value but nothing to compare it with.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .perm import Permutation
from .picture import PictureWord, SignedGenerator, allowed, word_from_sequence
from .quiver import (ExchangeMatrix, ExtendedExchangeMatrix, apply_sequence,
                     coframed, find_row_permutation, framed, is_all_red, mutate)
from .roots import vector_to_signed_root
from .standard import factor_standard


def transposition_of(g: SignedGenerator, n: int) -> Permutation:
    """(i+1 j) for the generator of root (i, j); identity for simple roots."""
    return Permutation.transposition(n, g.root.i + 1, g.root.j)


def formula_permutation(w: PictureWord, sigma: Permutation) -> Permutation:
    acc = sigma
    for g in w.factors:
        acc = acc * transposition_of(g, sigma.n)
    return acc * sigma.inverse()


@dataclass(frozen=True)
class TrackedState:
    """A state together with the permutation part of its c-matrix.

    The invariant ``factor_standard(state.c).rho == sigma`` holds after
    every step; stepping maintains it incrementally instead of refactoring.
    """

    state: ExtendedExchangeMatrix
    sigma: Permutation

    @classmethod
    def from_state(cls, m: ExtendedExchangeMatrix) -> "TrackedState":
        fact = factor_standard(m.c)
        if fact is None:
            raise ValueError("c-matrix does not factor through a standard matrix")
        return cls(m, fact.rho)

    def step(self, g: SignedGenerator) -> "TrackedState":
        k = allowed(self.state, g)
        if k is None:
            raise ValueError(f"{g} is not allowed on this state")
        return self.step_vertex(k)

    def step_vertex(self, k: int) -> "TrackedState":
        sr = vector_to_signed_root(self.state.c_row(k))
        if sr is None:
            raise ValueError(f"c-vector of vertex {k} is not a signed root")
        t = Permutation.transposition(self.state.n, sr.root.i + 1, sr.root.j)
        return TrackedState(mutate(self.state, k), self.sigma * t)

    def run(self, seq: Sequence[int]) -> "TrackedState":
        cur = self
        for k in seq:
            cur = cur.step_vertex(k)
        return cur


def is_reddening(m: ExtendedExchangeMatrix, seq: Sequence[int]) -> bool:
    """Whether ``seq`` turns every vertex red.  Requires a framed start."""
    if m != framed(ExchangeMatrix(m.b)):
        raise ValueError("reddening sequences are defined from a framed state")
    return is_all_red(apply_sequence(m, seq))


def is_loop(m: ExtendedExchangeMatrix,
            seq: Sequence[int]) -> Optional[Permutation]:
    """The row permutation carrying the start state to the end state, or
    ``None`` when the sequence is not a loop."""
    return find_row_permutation(m, apply_sequence(m, seq))


def observed_reddening_permutation(m: ExtendedExchangeMatrix,
                                   seq: Sequence[int]) -> Permutation:
    """The row permutation carrying the coframe to the all-red endpoint."""
    if not is_reddening(m, seq):
        raise ValueError("sequence is not reddening")
    end = apply_sequence(m, seq)
    rho = find_row_permutation(coframed(ExchangeMatrix(m.b)), end)
    if rho is None:
        raise ValueError("all-red endpoint is not a row permutation of the coframe")
    return rho


class Verdict(Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class FormulaReport:
    word: PictureWord
    sigma: Permutation
    formula_perm: Permutation
    observed_perm: Optional[Permutation]
    verdict: Verdict

    def to_json(self) -> dict:
        return {
            "word": self.word.to_json(),
            "sigma": self.sigma.cycle_string(),
            "formula": self.formula_perm.cycle_string(),
            "observed": (None if self.observed_perm is None
                         else self.observed_perm.cycle_string()),
            "verdict": self.verdict.value,
        }


def verify(m: ExtendedExchangeMatrix, seq: Sequence[int],
           corrupt: bool = False) -> FormulaReport:
    """Predict the permutation of one sequence and compare where possible.

    The observation is independent of the prediction: for a reddening
    sequence it is the row permutation from the coframe to the endpoint,
    for a loop the row permutation from the start.  A sequence that is
    neither has nothing to compare against and reports NotApplicable.
    Raises ``ValueError`` when the starting c-matrix does not factor.

    ``corrupt`` multiplies the prediction by (1 2), as a negative control:
    every comparison then has to mismatch.
    """
    word = word_from_sequence(m, seq)
    start = factor_standard(m.c)
    if start is None:
        raise ValueError("starting c-matrix does not factor through a "
                         "standard matrix")
    sigma = start.rho
    predicted = formula_permutation(word, sigma)
    if corrupt:
        predicted = predicted * Permutation.transposition(m.n, 1, 2)
    if m == framed(ExchangeMatrix(m.b)) and is_reddening(m, seq):
        observed = observed_reddening_permutation(m, seq)
    else:
        observed = is_loop(m, seq)
    if observed is None:
        return FormulaReport(word, sigma, predicted, None,
                             Verdict.NOT_APPLICABLE)
    verdict = Verdict.MATCH if predicted == observed else Verdict.MISMATCH
    return FormulaReport(word, sigma, predicted, observed, verdict)
