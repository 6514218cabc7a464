"""Resource theory of causal influence for deterministic functions.

Free objects are the constant functions, free operations are deterministic
pre/post-processings, and the induced order is total: f reaches g exactly
when the image of f is at least as large as the image of g. The witness
construction below is the constructive half of that claim, with all
tie-breaking made deterministic so a witness for a given pair is unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import FiniteFunction, compose_functions, image_size
from .errors import NotConvertible


@dataclass(frozen=True)
class DeterministicWitness:
    """A (pre, post) pair certifying one conversion: post after f after pre."""

    pre: FiniteFunction
    post: FiniteFunction


@dataclass(frozen=True)
class InfluenceBits:
    """Image count together with its base-2 logarithm.

    The count is the exact quantity; `bits` is the float log and is exact
    only when the count is a power of two.
    """

    image_size: int
    bits: float


def is_free_function(f: FiniteFunction) -> bool:
    """Constant functions carry no causal influence."""
    return image_size(f) == 1


def caus_convertible(f: FiniteFunction, g: FiniteFunction) -> bool:
    """f reaches g under deterministic pre/post-processing."""
    return image_size(f) >= image_size(g)


def caus_monotone(f: FiniteFunction) -> InfluenceBits:
    """Bits of causal influence: log2 of the image size."""
    n = image_size(f)
    return InfluenceBits(image_size=n, bits=math.log2(n))


def conversion_witness(f: FiniteFunction, g: FiniteFunction) -> DeterministicWitness:
    """Build and verify a deterministic witness taking f to g.

    The construction factors f and g through their images (enumerated
    ascending), embeds the image of g into the image of f by index, and
    collapses everything outside an image onto its smallest member. The
    composed table is checked against g before returning.
    """
    if not caus_convertible(f, g):
        raise NotConvertible(
            f"image size {image_size(f)} cannot reach image size {image_size(g)}"
        )
    f_image = f.image()
    g_image = g.image()

    # Right inverse of the surjective part of f: index k of the image goes to
    # the smallest input that f maps onto f_image[k].
    first_preimage = [
        min(x for x in range(f.domain_size) if f.outputs[x] == z) for z in f_image
    ]
    g_index = {z: k for k, z in enumerate(g_image)}
    pre = FiniteFunction(
        g.domain_size,
        f.domain_size,
        tuple(first_preimage[g_index[g.outputs[x]]] for x in range(g.domain_size)),
    )

    # Left inverse of the injective part of f, then the left inverse of the
    # index embedding, then the injective part of g. Points with no natural
    # preimage collapse to index 0.
    f_index = {z: k for k, z in enumerate(f_image)}
    post_outputs = []
    for y in range(f.codomain_size):
        k = f_index.get(y, 0)
        post_outputs.append(g_image[k] if k < len(g_image) else g_image[0])
    post = FiniteFunction(f.codomain_size, g.codomain_size, tuple(post_outputs))

    rebuilt = compose_functions(post, compose_functions(f, pre))
    if rebuilt != g:
        raise AssertionError(f"witness reconstruction produced {rebuilt.outputs}")
    return DeterministicWitness(pre=pre, post=post)
