"""Resource theory of knowledge of causal influence.

Resources are exact distributions over functions. A free operation draws a
deterministic (pre, post) pair from a common-cause distribution, so the free
polytope is spanned by the finitely many deterministic pairs and every
convertibility question reduces to convex-hull membership over their images.
That membership test, the downward-closure vertex list and the Hasse diagram
over labeled resources all run on the exact LP in `exactlp`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence, Union

from .core import (
    ONE,
    ZERO,
    FiniteFunction,
    FunctionDistribution,
    Rational,
    WeightLike,
    compose_functions,
    exact,
    image_size,
)
from .errors import ResourceBudgetExceeded, SizeMismatch
from .exactlp import convex_weights

DEFAULT_COMB_BUDGET = 10**6


@dataclass(frozen=True)
class ExtremalComb:
    """A deterministic (pre, post) pair; extreme point of the free polytope."""

    pre: FiniteFunction
    post: FiniteFunction


MixtureLike = Union[
    Mapping[ExtremalComb, WeightLike],
    Iterable[tuple[ExtremalComb, WeightLike]],
]


class CombMixture:
    """Common-cause-correlated mixture of deterministic (pre, post) pairs.

    All supported combs must share one signature. Weights behave exactly as
    in FunctionDistribution: positive, exact, summing to one.
    """

    __slots__ = ("_support", "_items")

    def __init__(self, support: MixtureLike) -> None:
        pairs = support.items() if isinstance(support, Mapping) else support
        acc: dict[ExtremalComb, Rational] = {}
        signature = None
        for comb, raw in pairs:
            if not isinstance(comb, ExtremalComb):
                raise TypeError(f"support keys must be combs, got {comb!r}")
            sig = (
                comb.pre.domain_size,
                comb.pre.codomain_size,
                comb.post.domain_size,
                comb.post.codomain_size,
            )
            if signature is None:
                signature = sig
            elif sig != signature:
                raise SizeMismatch(f"comb signature {sig} differs from {signature}")
            w = exact(raw)
            if w < 0:
                raise ValueError(f"negative weight {w}")
            if w > 0:
                acc[comb] = acc.get(comb, ZERO) + w
        if sum(acc.values(), start=ZERO) != ONE:
            raise ValueError("weights must sum to exactly 1")
        object.__setattr__(self, "_support", acc)
        object.__setattr__(
            self,
            "_items",
            tuple(sorted(acc.items(), key=lambda kv: (kv[0].pre.outputs, kv[0].post.outputs))),
        )

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CombMixture is immutable")

    @classmethod
    def point(cls, comb: ExtremalComb) -> "CombMixture":
        return cls({comb: ONE})

    @property
    def support(self) -> dict[ExtremalComb, Rational]:
        return dict(self._items)

    def items(self) -> tuple[tuple[ExtremalComb, Rational], ...]:
        return self._items

    def weight(self, comb: ExtremalComb) -> Rational:
        return self._support.get(comb, ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CombMixture):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __repr__(self) -> str:
        inner = ", ".join(
            f"({c.pre.outputs}, {c.post.outputs}): {w}" for c, w in self._items
        )
        return f"CombMixture({{{inner}}})"


@dataclass(frozen=True)
class ConversionVerdict:
    """Outcome of a convertibility question, with certificate when positive."""

    convertible: bool
    certificate: Optional[CombMixture]

    def __bool__(self) -> bool:
        return self.convertible


@dataclass(frozen=True)
class HasseGraph:
    """Equivalence classes of labels plus the cover edges between them.

    Edges are (upper, lower) index pairs into `classes`; the relation is the
    transitive reduction of the class order, so nothing implied by longer
    chains is stored.
    """

    classes: tuple[tuple[str, ...], ...]
    edges: tuple[tuple[int, int], ...]


def is_free_resource(P: FunctionDistribution) -> bool:
    """True when every supported function is constant."""
    return all(image_size(f) == 1 for f in P.functions())


def enumerate_extremal_combs(
    src_domain: int,
    src_codomain: int,
    tgt_domain: int,
    tgt_codomain: int,
    budget: int = DEFAULT_COMB_BUDGET,
) -> list[ExtremalComb]:
    """All deterministic (pre, post) pairs for the given conversion signature.

    Pre maps the target domain into the source domain and post maps the
    source codomain into the target codomain. Pairs come out in lexicographic
    order of (pre table, post table). The count is checked against the budget
    before anything is materialized.
    """
    for size in (src_domain, src_codomain, tgt_domain, tgt_codomain):
        if size < 1:
            raise ValueError("alphabet sizes must be positive")
    count = src_domain**tgt_domain * tgt_codomain**src_codomain
    if count > budget:
        raise ResourceBudgetExceeded(
            f"{count} extremal combs exceed the budget of {budget}"
        )
    pres = [
        FiniteFunction(tgt_domain, src_domain, outputs)
        for outputs in product(range(src_domain), repeat=tgt_domain)
    ]
    posts = [
        FiniteFunction(src_codomain, tgt_codomain, outputs)
        for outputs in product(range(tgt_codomain), repeat=src_codomain)
    ]
    return [ExtremalComb(pre, post) for pre in pres for post in posts]


def apply_extremal(comb: ExtremalComb, P: FunctionDistribution) -> FunctionDistribution:
    """Pushforward of P along f -> post . f . pre."""
    if comb.pre.codomain_size != P.domain_size or comb.post.domain_size != P.codomain_size:
        raise SizeMismatch(
            f"comb expects a {comb.pre.codomain_size}->{comb.post.domain_size} resource, "
            f"got {P.domain_size}->{P.codomain_size}"
        )
    acc: dict[FiniteFunction, Rational] = {}
    for f, w in P.items():
        h = compose_functions(comb.post, compose_functions(f, comb.pre))
        acc[h] = acc.get(h, ZERO) + w
    return FunctionDistribution(comb.pre.domain_size, comb.post.codomain_size, acc)


def apply_mixture(m: CombMixture, P: FunctionDistribution) -> FunctionDistribution:
    """Weighted pushforward; convexity of the weights keeps it normalized."""
    acc: dict[FiniteFunction, Rational] = {}
    result_sizes = None
    for comb, w in m.items():
        image = apply_extremal(comb, P)
        result_sizes = (image.domain_size, image.codomain_size)
        for f, p in image.items():
            acc[f] = acc.get(f, ZERO) + w * p
    assert result_sizes is not None
    return FunctionDistribution(result_sizes[0], result_sizes[1], acc)


def _distinct_images(
    P: FunctionDistribution, combs: Sequence[ExtremalComb]
) -> tuple[list[FunctionDistribution], list[ExtremalComb]]:
    """One representative comb per distinct image, in first-seen order."""
    images: list[FunctionDistribution] = []
    reps: list[ExtremalComb] = []
    seen: set[FunctionDistribution] = set()
    for comb in combs:
        image = apply_extremal(comb, P)
        if image not in seen:
            seen.add(image)
            images.append(image)
            reps.append(comb)
    return images, reps


def _coordinates(
    dists: Sequence[FunctionDistribution], axis: Sequence[FiniteFunction]
) -> list[list[Rational]]:
    return [[d.weight(f) for f in axis] for d in dists]


def know_convertible(
    P: FunctionDistribution,
    Q: FunctionDistribution,
    budget: int = DEFAULT_COMB_BUDGET,
) -> ConversionVerdict:
    """Decide whether some free operation maps P exactly to Q.

    Q is convertible from P exactly when it lies in the convex hull of the
    images of P under the extremal combs, so after deduplicating images the
    question goes to the feasibility LP. Two shortcuts keep desk-scale runs
    fast without changing any verdict: a resource reachable by a single comb
    returns that comb as a point certificate without touching the LP (the
    identity comb is tried first so reflexive questions certify themselves),
    and a target supported outside everything the images can reach is
    rejected outright, since a mixture never puts weight on a function that
    no image supports.
    """
    combs = enumerate_extremal_combs(
        P.domain_size, P.codomain_size, Q.domain_size, Q.codomain_size, budget=budget
    )
    if (P.domain_size, P.codomain_size) == (Q.domain_size, Q.codomain_size):
        ident = ExtremalComb(
            FiniteFunction.identity(P.domain_size),
            FiniteFunction.identity(P.codomain_size),
        )
        if apply_extremal(ident, P) == Q:
            return ConversionVerdict(True, CombMixture.point(ident))

    images: list[FunctionDistribution] = []
    reps: list[ExtremalComb] = []
    seen: set[FunctionDistribution] = set()
    for comb in combs:
        image = apply_extremal(comb, P)
        if image == Q:
            return ConversionVerdict(True, CombMixture.point(comb))
        if image not in seen:
            seen.add(image)
            images.append(image)
            reps.append(comb)

    reachable: set[FiniteFunction] = set()
    for image in images:
        reachable.update(image.functions())
    if any(f not in reachable for f in Q.functions()):
        return ConversionVerdict(False, None)

    axis = sorted(reachable, key=lambda f: f.outputs)
    weights = convex_weights(_coordinates(images, axis), [Q.weight(f) for f in axis])
    if weights is None:
        return ConversionVerdict(False, None)
    certificate = CombMixture(
        {rep: w for rep, w in zip(reps, weights) if w > 0}
    )
    if apply_mixture(certificate, P) != Q:
        raise AssertionError("feasible LP weights failed to reproduce the target")
    return ConversionVerdict(True, certificate)


def downward_closure_vertices(
    P: FunctionDistribution, budget: int = DEFAULT_COMB_BUDGET
) -> list[FunctionDistribution]:
    """Vertices of the polytope of resources reachable from P.

    The closure keeps the signature of P. Candidate points are the distinct
    images of P under the extremal combs; a candidate is a vertex exactly
    when it is not a convex combination of the remaining candidates, which
    is safe to test pointwise because interior candidates only ever lean on
    vertices, never on each other.
    """
    combs = enumerate_extremal_combs(
        P.domain_size, P.codomain_size, P.domain_size, P.codomain_size, budget=budget
    )
    images, _ = _distinct_images(P, combs)
    if len(images) == 1:
        return images

    axis_set: set[FiniteFunction] = set()
    for image in images:
        axis_set.update(image.functions())
    axis = sorted(axis_set, key=lambda f: f.outputs)
    coords = _coordinates(images, axis)

    vertices = []
    for i, image in enumerate(images):
        others = coords[:i] + coords[i + 1 :]
        if convex_weights(others, coords[i]) is None:
            vertices.append(image)
    return vertices


def hasse(
    resources: Sequence[tuple[str, FunctionDistribution]],
    budget: int = DEFAULT_COMB_BUDGET,
) -> HasseGraph:
    """Order the labeled resources and reduce to the cover relation.

    Mutually convertible resources are merged into one class. Convertibility
    is transitive, so class membership can be settled against a single
    representative and the cover test only needs to exclude two-step chains.
    """
    if not resources:
        return HasseGraph(classes=(), edges=())
    labels = [label for label, _ in resources]
    dists = [dist for _, dist in resources]
    sizes = {(d.domain_size, d.codomain_size) for d in dists}
    if len(sizes) > 1:
        raise SizeMismatch(f"resources span several signatures: {sorted(sizes)}")

    cache: dict[tuple[FunctionDistribution, FunctionDistribution], bool] = {}

    def reaches(a: FunctionDistribution, b: FunctionDistribution) -> bool:
        if a == b:
            return True
        key = (a, b)
        if key not in cache:
            cache[key] = know_convertible(a, b, budget=budget).convertible
        return cache[key]

    class_members: list[list[int]] = []
    class_rep: list[FunctionDistribution] = []
    for idx, dist in enumerate(dists):
        for cls, rep in enumerate(class_rep):
            if reaches(dist, rep) and reaches(rep, dist):
                class_members[cls].append(idx)
                break
        else:
            class_members.append([idx])
            class_rep.append(dist)

    k = len(class_rep)
    dominates = [
        [a != b and reaches(class_rep[a], class_rep[b]) for b in range(k)]
        for a in range(k)
    ]
    edges = tuple(
        (a, b)
        for a in range(k)
        for b in range(k)
        if dominates[a][b]
        and not any(dominates[a][c] and dominates[c][b] for c in range(k))
    )
    classes = tuple(tuple(labels[i] for i in members) for members in class_members)
    return HasseGraph(classes=classes, edges=edges)
