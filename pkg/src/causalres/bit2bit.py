"""Complete characterization of bit-to-bit resources.

A distribution over the four bit functions is pinned down by three numbers:
beta, the weight on the two nonconstant functions; alpha, the bias between
flip and identity inside that weight; gamma, the bias between the two resets
outside it. Alpha only exists when beta is positive and gamma only when beta
is below one. The triple of monotones computed here decides convertibility
without any linear program, which is what `bit_convertible_fast` exploits;
the LP in `rtknowcaus` stays available as the independent general route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import ONE, ZERO, FiniteFunction, FunctionDistribution, Rational, exact
from .errors import SizeMismatch

IDENT = FiniteFunction(2, 2, (0, 1))
FLIP = FiniteFunction(2, 2, (1, 0))
RESET0 = FiniteFunction(2, 2, (0, 0))
RESET1 = FiniteFunction(2, 2, (1, 1))

HALF = Rational(1, 2)


@dataclass(frozen=True)
class BitParams:
    """The (alpha, beta, gamma) coordinates of a bit-to-bit resource.

    alpha runs from -1 (all identity) to +1 (all flip) and is None when
    beta is zero; gamma runs from -1 (all reset-to-0) to +1 (all reset-to-1)
    and is None when beta is one.
    """

    alpha: Optional[Rational]
    beta: Rational
    gamma: Optional[Rational]

    def __post_init__(self) -> None:
        beta = exact(self.beta)
        alpha = None if self.alpha is None else exact(self.alpha)
        gamma = None if self.gamma is None else exact(self.gamma)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)
        if not ZERO <= beta <= ONE:
            raise ValueError(f"beta {beta} outside [0, 1]")
        if (alpha is None) != (beta == ZERO):
            raise ValueError("alpha must be present exactly when beta > 0")
        if (gamma is None) != (beta == ONE):
            raise ValueError("gamma must be present exactly when beta < 1")
        if alpha is not None and not -ONE <= alpha <= ONE:
            raise ValueError(f"alpha {alpha} outside [-1, 1]")
        if gamma is not None and not -ONE <= gamma <= ONE:
            raise ValueError(f"gamma {gamma} outside [-1, 1]")

    def to_distribution(self) -> FunctionDistribution:
        """Invert the parametrization back into four exact weights."""
        a = self.alpha if self.alpha is not None else ZERO
        g = self.gamma if self.gamma is not None else ZERO
        return _from_weights(
            self.beta * (ONE - a) * HALF,
            self.beta * (ONE + a) * HALF,
            (ONE - self.beta) * (ONE - g) * HALF,
            (ONE - self.beta) * (ONE + g) * HALF,
        )


@dataclass(frozen=True)
class MonotoneTriple:
    """The complete monotone set for bit-to-bit resources.

    m_abs_alpha is None exactly for free resources. m_gamma_beta is the
    certainty of causal connection attainable by postselecting on the
    output; it is 0 for free resources and 1 when beta is 1.
    """

    m_beta: Rational
    m_abs_alpha: Optional[Rational]
    m_gamma_beta: Rational


@dataclass(frozen=True)
class CanonicalForm:
    """(|alpha|, beta, |gamma|); equal forms mean the same equivalence class."""

    abs_alpha: Optional[Rational]
    beta: Rational
    abs_gamma: Optional[Rational]


def _require_bits(P: FunctionDistribution) -> None:
    if (P.domain_size, P.codomain_size) != (2, 2):
        raise SizeMismatch(
            f"bit-to-bit operation on a {P.domain_size}->{P.codomain_size} resource"
        )


def _from_weights(
    w_ident: Rational, w_flip: Rational, w_reset0: Rational, w_reset1: Rational
) -> FunctionDistribution:
    return FunctionDistribution(
        2, 2, {IDENT: w_ident, FLIP: w_flip, RESET0: w_reset0, RESET1: w_reset1}
    )


def bit_resource(
    alpha: Optional[Rational], beta: Rational, gamma: Optional[Rational]
) -> FunctionDistribution:
    """Build the resource with the given coordinates."""
    return BitParams(alpha=alpha, beta=beta, gamma=gamma).to_distribution()


def parametrize(P: FunctionDistribution) -> BitParams:
    """Read the (alpha, beta, gamma) coordinates off the four weights."""
    _require_bits(P)
    w_ident = P.weight(IDENT)
    w_flip = P.weight(FLIP)
    beta = w_ident + w_flip
    alpha = (w_flip - w_ident) / beta if beta > 0 else None
    gamma = (
        (P.weight(RESET1) - P.weight(RESET0)) / (ONE - beta) if beta < 1 else None
    )
    return BitParams(alpha=alpha, beta=beta, gamma=gamma)


def monotone_triple(P: FunctionDistribution) -> MonotoneTriple:
    """Evaluate the three monotones at P."""
    params = parametrize(P)
    beta = params.beta
    if beta == ZERO:
        return MonotoneTriple(m_beta=ZERO, m_abs_alpha=None, m_gamma_beta=ZERO)
    if beta == ONE:
        assert params.alpha is not None
        return MonotoneTriple(m_beta=ONE, m_abs_alpha=abs(params.alpha), m_gamma_beta=ONE)
    assert params.alpha is not None and params.gamma is not None
    return MonotoneTriple(
        m_beta=beta,
        m_abs_alpha=abs(params.alpha),
        m_gamma_beta=beta / (ONE - abs(params.gamma) * (ONE - beta)),
    )


def canonical_form(P: FunctionDistribution) -> CanonicalForm:
    """Forget the signs of alpha and gamma; both are freely flippable."""
    params = parametrize(P)
    return CanonicalForm(
        abs_alpha=None if params.alpha is None else abs(params.alpha),
        beta=params.beta,
        abs_gamma=None if params.gamma is None else abs(params.gamma),
    )


def bit_convertible_fast(P: FunctionDistribution, Q: FunctionDistribution) -> bool:
    """Decide convertibility from the monotone triple alone.

    A free target is reachable from anything. A free source reaches only
    free targets. Otherwise all three monotones are defined on both sides
    and must not increase.
    """
    _require_bits(P)
    _require_bits(Q)
    src = monotone_triple(P)
    dst = monotone_triple(Q)
    if dst.m_beta == ZERO:
        return True
    if src.m_beta == ZERO:
        return False
    assert src.m_abs_alpha is not None and dst.m_abs_alpha is not None
    return (
        src.m_beta >= dst.m_beta
        and src.m_abs_alpha >= dst.m_abs_alpha
        and src.m_gamma_beta >= dst.m_gamma_beta
    )


def table1_vertices(P: FunctionDistribution) -> list[FunctionDistribution]:
    """Candidate vertex list of the downward closure of P, deduplicated.

    The rows are P itself, the two resets, and the three sign-flip images
    of P (alpha, both, gamma). A free resource has no alpha to flip and its
    closure degenerates onto the reset segment, so only the resets remain.
    Coinciding rows are merged; reducing interior points away is the job of
    the general closure routine, not of this list.
    """
    params = parametrize(P)
    if params.beta == ZERO:
        return [FunctionDistribution.point(RESET0), FunctionDistribution.point(RESET1)]
    alpha = params.alpha
    gamma = params.gamma if params.gamma is not None else ZERO
    assert alpha is not None
    beta = params.beta
    rows = [
        P,
        FunctionDistribution.point(RESET0),
        FunctionDistribution.point(RESET1),
        _row(-alpha, beta, gamma),
        _row(-alpha, beta, -gamma),
        _row(alpha, beta, -gamma),
    ]
    unique: list[FunctionDistribution] = []
    for row in rows:
        if row not in unique:
            unique.append(row)
    return unique


def _row(alpha: Rational, beta: Rational, gamma: Rational) -> FunctionDistribution:
    return _from_weights(
        beta * (ONE - alpha) * HALF,
        beta * (ONE + alpha) * HALF,
        (ONE - beta) * (ONE - gamma) * HALF,
        (ONE - beta) * (ONE + gamma) * HALF,
    )


# Corners of a cube make a regular tetrahedron with rational coordinates.
TETRA_VERTICES = {
    IDENT: (ZERO, ZERO, ZERO),
    FLIP: (ONE, ONE, ZERO),
    RESET0: (ONE, ZERO, ONE),
    RESET1: (ZERO, ONE, ONE),
}


def tetra_coords(P: FunctionDistribution) -> tuple[Rational, Rational, Rational]:
    """Barycentric embedding of P into the fixed reference tetrahedron."""
    _require_bits(P)
    coords = [ZERO, ZERO, ZERO]
    for f, w in P.items():
        vertex = TETRA_VERTICES[f]
        for i in range(3):
            coords[i] += w * vertex[i]
    return (coords[0], coords[1], coords[2])
