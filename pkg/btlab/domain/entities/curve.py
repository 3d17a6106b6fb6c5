from collections.abc import Callable
from enum import StrEnum
from fractions import Fraction

from attr import attrib, dataclass

from btlab.domain.entities.exponent_pair import ExponentPair


class Hypothesis(StrEnum):
    UNCONDITIONAL = 'unconditional'
    PRIME_MODULUS = 'prime-modulus'
    SMOOTH_SQUAREFREE = 'smooth-squarefree-modulus'
    RAMANUJAN_PETERSSON = 'ramanujan-petersson'
    MOMENT_CONJECTURE = 'moment-conjecture'
    HYPOTHESIS_R_STAR = 'hypothesis-r-star'
    LINDELOF = 'lindelof'


def _as_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(slots=True, frozen=True)
class Interval:
    lo: Fraction = attrib(converter=_as_fraction)
    hi: Fraction = attrib(converter=_as_fraction)
    lo_closed: bool = True
    hi_closed: bool = False

    def contains(self, x: Fraction) -> bool:
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        return above and below

    def __str__(self) -> str:
        left = '[' if self.lo_closed else '('
        right = ']' if self.hi_closed else ')'
        return f'{left}{self.lo}, {self.hi}{right}'


@dataclass(slots=True, frozen=True)
class CurvePiece:
    interval: Interval
    formula: str
    evaluate: Callable[[Fraction], Fraction]


@dataclass(slots=True, frozen=True)
class CurveParams:
    theta: Fraction | None = None
    delta: Fraction | None = None
    pair: ExponentPair | None = None

    def label(self) -> str:
        parts = []
        if self.theta is not None:
            parts.append(f'theta={self.theta}')
        if self.delta is not None:
            parts.append(f'delta={self.delta}')
        if self.pair is not None:
            parts.append(f'pair=({self.pair.kappa},{self.pair.lam})')
        return ','.join(parts)


@dataclass(slots=True, frozen=True)
class BTCurve:
    """
    A named admissible-constant curve C(varpi).

    `build` turns parameters into concrete pieces; non-parametric curves ignore them.
    """
    id: str
    source: str
    hypotheses: frozenset[Hypothesis]
    build: Callable[[CurveParams], tuple[CurvePiece, ...]]
    parameters: tuple[str, ...] = ()
    symbolic: str | None = None

    @property
    def unconditional(self) -> bool:
        return self.hypotheses <= {Hypothesis.UNCONDITIONAL}


@dataclass(slots=True, frozen=True)
class CurveChoice:
    """A curve together with the parameters it is evaluated at"""
    curve_id: str
    params: CurveParams = CurveParams()

    @property
    def label(self) -> str:
        extra = self.params.label()
        return f'{self.curve_id}[{extra}]' if extra else self.curve_id


@dataclass(slots=True, frozen=True)
class Envelope:
    varpi: Fraction
    admissible: tuple[tuple[str, Fraction], ...]
    best: tuple[str, ...]
    best_value: Fraction | None
