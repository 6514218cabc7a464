"""Operational quantities: guessing games, postselected posteriors, ACE.

These connect a distribution over functions to what an observer of the
induced conditional distribution can actually do. The guessing probability
works for any alphabet. The posterior of causal connection and the average
causal effect are bit-to-bit quantities, and the fiber minimum shows how
much of the connection weight is forced by the conditional alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bit2bit import FLIP, IDENT, RESET0, RESET1
from .core import (
    ONE,
    ZERO,
    FunctionDistribution,
    Rational,
    StochasticMap,
    canonical_preimage,
    exact,
    image_size,
    to_stochastic,
)
from .errors import SizeMismatch, ZeroMarginal


@dataclass(frozen=True)
class Prior:
    """Exact distribution over the input alphabet."""

    weights: tuple[Rational, ...]

    def __post_init__(self) -> None:
        weights = tuple(exact(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValueError("a prior needs at least one input")
        for w in weights:
            if w < 0:
                raise ValueError(f"negative prior weight {w}")
        if sum(weights, start=ZERO) != ONE:
            raise ValueError("prior weights must sum to exactly 1")

    @classmethod
    def uniform(cls, size: int) -> "Prior":
        return cls(weights=(Rational(1, size),) * size)

    def __len__(self) -> int:
        return len(self.weights)


def _resolve_prior(P: FunctionDistribution, prior: Optional[Prior]) -> Prior:
    if prior is None:
        return Prior.uniform(P.domain_size)
    if len(prior) != P.domain_size:
        raise SizeMismatch(
            f"prior over {len(prior)} inputs against domain size {P.domain_size}"
        )
    return prior


def guessing_probability(
    P: FunctionDistribution, prior: Optional[Prior] = None
) -> Rational:
    """Best achievable probability of guessing the input from one output.

    The guesser picks an argmax of the joint weight for each output; outputs
    with zero marginal never occur and contribute nothing.
    """
    prior = _resolve_prior(P, prior)
    S = to_stochastic(P)
    total = ZERO
    for y in range(S.output_size):
        total += max(S.entries[y][x] * prior.weights[x] for x in range(S.input_size))
    return total


def posterior_causal_connection(
    P: FunctionDistribution, y: int, prior: Optional[Prior] = None
) -> Rational:
    """Posterior weight on the nonconstant functions after observing y.

    Only the uniform prior is supported; an explicit one must equal it.
    """
    if (P.domain_size, P.codomain_size) != (2, 2):
        raise SizeMismatch("posteriors are defined for bit-to-bit resources only")
    if y not in (0, 1):
        raise ValueError(f"output {y!r} is not a bit")
    prior = _resolve_prior(P, prior)
    if prior != Prior.uniform(P.domain_size):
        raise ValueError("posteriors are defined for the uniform prior only")
    connected = ZERO
    marginal = ZERO
    for f, w in P.items():
        hit = sum(
            (prior.weights[x] for x in range(2) if f(x) == y), start=ZERO
        )
        marginal += w * hit
        if image_size(f) > 1:
            connected += w * hit
    if marginal == ZERO:
        raise ZeroMarginal(f"output {y} has zero marginal under this prior")
    return connected / marginal


def max_postselected_connection(P: FunctionDistribution) -> Rational:
    """Best certainty of causal connection over observable outputs.

    Uses the uniform prior. Outputs that cannot occur are skipped rather
    than treated as vacuous certainty.
    """
    if (P.domain_size, P.codomain_size) != (2, 2):
        raise SizeMismatch("posteriors are defined for bit-to-bit resources only")
    best = ZERO
    for y in (0, 1):
        try:
            value = posterior_causal_connection(P, y)
        except ZeroMarginal:
            continue
        best = max(best, value)
    return best


def _require_bit_map(S: StochasticMap) -> None:
    if (S.input_size, S.output_size) != (2, 2):
        raise SizeMismatch("average causal effect is defined for 2x2 maps only")


def ace(S: StochasticMap) -> Rational:
    """Average causal effect of a binary conditional: P(1|1) - P(1|0)."""
    _require_bit_map(S)
    return S.entries[1][1] - S.entries[1][0]


def ace_dist(P: FunctionDistribution) -> Rational:
    """Average causal effect read directly off the resource weights.

    Equals the weight on the identity minus the weight on the flip, and
    agrees with `ace` of the induced conditional.
    """
    if (P.domain_size, P.codomain_size) != (2, 2):
        raise SizeMismatch("average causal effect is defined for bit resources only")
    return P.weight(IDENT) - P.weight(FLIP)


def min_beta_over_preimage(
    S: StochasticMap,
) -> tuple[Rational, FunctionDistribution]:
    """Least connection weight among resources inducing S, with a witness.

    All resources inducing S differ only by sliding weight between the
    balanced identity/flip mixture and the balanced reset mixture. Sliding
    down as far as nonnegativity allows zeroes out the lighter of the two
    nonconstant weights, and what remains of the connection weight is
    exactly the absolute average causal effect of S.
    """
    _require_bit_map(S)
    base = canonical_preimage(S)
    w_ident = base.weight(IDENT)
    w_flip = base.weight(FLIP)
    slide = min(w_ident, w_flip)
    witness = FunctionDistribution(
        2,
        2,
        {
            IDENT: w_ident - slide,
            FLIP: w_flip - slide,
            RESET0: base.weight(RESET0) + slide,
            RESET1: base.weight(RESET1) + slide,
        },
    )
    bound = abs(ace(S))
    if to_stochastic(witness) != S:
        raise AssertionError("fiber witness left the preimage of S")
    if witness.weight(IDENT) + witness.weight(FLIP) != bound:
        raise AssertionError("fiber witness missed the lower bound")
    return bound, witness
