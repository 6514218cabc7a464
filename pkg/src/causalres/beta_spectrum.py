"""Image-size spectra and the cumulative monotones built from them.

For a resource with codomain of size n, the spectrum collects the total
weight landing on functions of each image size 1..n. Tail sums of the
spectrum never increase under free operations, and in the variant theory
whose free operations may depend on the resource they act on, tail-sum
dominance is the whole convertibility story.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ONE, ZERO, FunctionDistribution, Rational, image_size
from .errors import SizeMismatch


@dataclass(frozen=True)
class BetaSpectrum:
    """weights[k-1] is the probability of drawing a function with image size k."""

    weights: tuple[Rational, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights:
            raise ValueError("a spectrum needs at least one bucket")
        for w in self.weights:
            if w < 0:
                raise ValueError(f"negative spectrum weight {w}")
        if sum(self.weights, start=ZERO) != ONE:
            raise ValueError("spectrum weights must sum to exactly 1")

    def weight(self, k: int) -> Rational:
        """Mass on image size k; zero beyond the stored range."""
        if k < 1:
            raise ValueError("image sizes start at 1")
        return self.weights[k - 1] if k <= len(self.weights) else ZERO

    def cumulative(self, k: int) -> Rational:
        """Tail sum over image sizes >= k; identically 1 at k = 1."""
        if k < 1:
            raise ValueError("image sizes start at 1")
        return sum(self.weights[k - 1 :], start=ZERO)


def beta_vector(P: FunctionDistribution) -> BetaSpectrum:
    """Bucket the support of P by image size."""
    buckets = [ZERO] * P.codomain_size
    for f, w in P.items():
        buckets[image_size(f) - 1] += w
    return BetaSpectrum(weights=tuple(buckets))


def cumulative_monotones(P: FunctionDistribution) -> tuple[Rational, ...]:
    """Tail sums of the spectrum, largest image size first.

    The first entry is the chance of drawing a function of maximal image
    size, the last is always 1.
    """
    spectrum = beta_vector(P)
    n = P.codomain_size
    return tuple(spectrum.cumulative(k) for k in range(n, 0, -1))


def alt_convertible(P: FunctionDistribution, Q: FunctionDistribution) -> bool:
    """Tail-sum dominance at every image size.

    Decides convertibility in the variant theory with resource-dependent
    free operations. Spectra over different codomain sizes are not
    comparable; no padding convention is invented here.
    """
    if P.codomain_size != Q.codomain_size:
        raise SizeMismatch(
            f"cannot compare spectra over codomain sizes "
            f"{P.codomain_size} and {Q.codomain_size}"
        )
    source = beta_vector(P)
    target = beta_vector(Q)
    return all(
        source.cumulative(k) >= target.cumulative(k)
        for k in range(1, P.codomain_size + 1)
    )
