"""
Catalog of admissible Brun-Titchmarsh constants C(varpi).

Formulas and interval closures are kept exactly as published; no continuity is imposed across piece boundaries.
"""

from fractions import Fraction as F

from btlab.domain.entities.curve import BTCurve, CurveParams, CurvePiece, Hypothesis, Interval
from btlab.domain.errors import InvalidParameterError

THETA_KIM_SARNAK = F(7, 64)
DELTA_LIMIT = F(16, 45)

U = Hypothesis.UNCONDITIONAL


def _piece(lo, hi, lo_closed: bool, hi_closed: bool, formula: str, evaluate) -> CurvePiece:
    return CurvePiece(Interval(F(lo), F(hi), lo_closed, hi_closed), formula, evaluate)


def _fixed(*pieces: CurvePiece):
    return lambda params: pieces


def _theta(params: CurveParams) -> F:
    if params.theta is None:
        raise InvalidParameterError('this curve needs theta')
    if not 0 <= params.theta <= THETA_KIM_SARNAK:
        raise InvalidParameterError(f'theta must lie in [0, 7/64], got {params.theta}')
    return params.theta


def _delta(params: CurveParams) -> F:
    if params.delta is None:
        raise InvalidParameterError('this curve needs delta')
    if not 0 <= params.delta < DELTA_LIMIT:
        raise InvalidParameterError(f'delta must lie in [0, 16/45), got {params.delta}')
    return params.delta


def _burgess_like(params: CurveParams) -> tuple[CurvePiece, ...]:
    theta = _theta(params)
    return (
        _piece(F(9, 20), F(1, 2), False, False, '16/(8-(3+2*theta)*varpi)', lambda w: 16 / (8 - (3 + 2 * theta) * w)),
    )


def _exponent_pair(params: CurveParams) -> tuple[CurvePiece, ...]:
    if params.pair is None:
        raise InvalidParameterError('this curve needs an exponent pair')
    kappa, lam = params.pair.kappa, params.pair.lam
    top = 1 + kappa - lam
    if 1 + 2 * kappa - lam == 0:
        return ()
    lo = top / (2 + 2 * kappa - lam)
    hi = top / (1 + 2 * kappa - lam)
    return (
        _piece(
            lo, hi, True, True,
            '4/((3+kappa-lambda)-(3+2*kappa-lambda)*varpi)',
            lambda w: 4 / ((3 + kappa - lam) - (3 + 2 * kappa - lam) * w),
        ),
    )


def _moments_smooth(params: CurveParams) -> tuple[CurvePiece, ...]:
    delta = _delta(params)
    breakpoint_ = 10 / (24 - 5 * delta)
    return (
        _piece(F(1, 8), breakpoint_, True, False, '2', lambda w: F(2)),
        _piece(
            breakpoint_, F(9, 20), True, False,
            '20/(20-(24-5*delta)*varpi)', lambda w: 20 / (20 - (24 - 5 * delta) * w),
        ),
    )


def _moments_general(params: CurveParams) -> tuple[CurvePiece, ...]:
    delta = _delta(params)
    return (_piece(F(9, 20), F(1, 2), True, True, '4/(2-(1-delta)*varpi)', lambda w: 4 / (2 - (1 - delta) * w)),)


CURVES: tuple[BTCurve, ...] = (
    BTCurve(
        'van-lint-richert', 'van Lint & Richert 1965; Montgomery & Vaughan 1973; Selberg 1991', frozenset({U}),
        _fixed(_piece(0, 1, False, False, '2/(1-varpi)', lambda w: 2 / (1 - w))),
    ),
    BTCurve(
        'motohashi', 'Motohashi 1973, 1974', frozenset({U}),
        _fixed(
            _piece(0, F(1, 3), False, False, '16/(8-3*varpi)', lambda w: 16 / (8 - 3 * w)),
            _piece(F(1, 3), F(2, 5), True, True, '4/(2-varpi)', lambda w: 4 / (2 - w)),
            _piece(F(2, 5), F(1, 2), False, True, '2/(2-3*varpi)', lambda w: 2 / (2 - 3 * w)),
        ),
    ),
    BTCurve(
        'goldfeld', 'Goldfeld 1975', frozenset({U}),
        _fixed(_piece(0, F(24, 71), False, False, '16/(8-3*varpi)', lambda w: 16 / (8 - 3 * w))),
    ),
    BTCurve(
        'iwaniec-burgess', 'Iwaniec 1982, Burgess bound with r = 2', frozenset({U}),
        _fixed(_piece(0, F(9, 20), False, False, '16/(8-3*varpi)', lambda w: 16 / (8 - 3 * w))),
    ),
    BTCurve(
        'iwaniec-burgess-cubic', 'Iwaniec 1982, Burgess bound with r = 3', frozenset({U}),
        _fixed(_piece(0, F(9, 20), False, False, '6/(3-varpi)', lambda w: 6 / (3 - w))),
    ),
    BTCurve(
        'iwaniec-kloosterman', 'Iwaniec 1982, Kloosterman sums', frozenset({U}),
        _fixed(_piece(F(9, 20), F(2, 3), True, True, '8/(6-7*varpi)', lambda w: 8 / (6 - 7 * w))),
    ),
    BTCurve(
        'friedlander-iwaniec', 'Friedlander & Iwaniec 1997', frozenset({U}),
        _fixed(
            _piece(
                F(6, 11), 1, True, False, '(2-((1-varpi)/4)^6)/(1-varpi)',
                lambda w: (2 - ((1 - w) / 4) ** 6) / (1 - w),
            ),
        ),
    ),
    BTCurve(
        'bourgain-garaev', 'Bourgain & Garaev 2014', frozenset({U}), _fixed(),
        symbolic='(2-c0*(1-varpi)^2)/(1-varpi) on [1-delta0, 1) with unspecified c0, delta0 > 0',
    ),
    BTCurve(
        'maynard', 'Maynard 2013', frozenset({U}),
        _fixed(_piece(0, F(1, 8), False, False, '2', lambda w: F(2))),
    ),
    BTCurve(
        'burgess-like', 'Burgess-like constant via Kloostermania; theta = 7/64 unconditionally', frozenset({U}),
        _burgess_like, parameters=('theta',),
    ),
    BTCurve(
        'prime-moduli', 'Prime moduli beyond 1/2 via twisted fourth moments', frozenset({Hypothesis.PRIME_MODULUS}),
        _fixed(
            _piece(F(1, 2), F(12, 23), True, False, '8/(5-5*varpi)', lambda w: 8 / (5 - 5 * w)),
            _piece(F(12, 23), F(32, 61), True, False, '32/(32-43*varpi)', lambda w: 32 / (32 - 43 * w)),
            _piece(F(32, 61), F(8, 15), True, False, '24/(16-17*varpi)', lambda w: 24 / (16 - 17 * w)),
            _piece(F(8, 15), F(7, 13), True, False, '48/(40-49*varpi)', lambda w: 48 / (40 - 49 * w)),
            _piece(F(7, 13), F(6, 11), True, False, '16/(11-12*varpi)', lambda w: 16 / (11 - 12 * w)),
            _piece(F(6, 11), F(4, 7), True, False, '32/(28-35*varpi)', lambda w: 32 / (28 - 35 * w)),
        ),
    ),
    BTCurve(
        'smooth-special-pair', 'Smooth squarefree moduli, exponent pair (1/20, 33/40)',
        frozenset({Hypothesis.SMOOTH_SQUAREFREE}),
        _fixed(_piece(F(9, 51), F(9, 11), True, True, '160/(89-91*varpi)', lambda w: 160 / (89 - 91 * w))),
    ),
    BTCurve(
        'smooth-exponent-pair', 'Smooth squarefree moduli, general A/B exponent pair',
        frozenset({Hypothesis.SMOOTH_SQUAREFREE}), _exponent_pair, parameters=('pair',),
    ),
    BTCurve(
        'smooth-flat', 'Smooth squarefree moduli below 9/20', frozenset({Hypothesis.SMOOTH_SQUAREFREE}),
        _fixed(
            _piece(F(1, 8), F(5, 12), True, False, '2', lambda w: F(2)),
            _piece(F(5, 12), F(9, 20), True, False, '5/(5-6*varpi)', lambda w: 5 / (5 - 6 * w)),
        ),
    ),
    BTCurve(
        'moments-smooth', 'Smooth squarefree moduli under the twisted fourth-moment conjecture',
        frozenset({Hypothesis.SMOOTH_SQUAREFREE, Hypothesis.MOMENT_CONJECTURE}), _moments_smooth,
        parameters=('delta',),
    ),
    BTCurve(
        'moments-general', 'General moduli under the twisted fourth-moment conjecture',
        frozenset({Hypothesis.MOMENT_CONJECTURE}), _moments_general, parameters=('delta',),
    ),
    BTCurve(
        'hooley-r-star', 'Iwaniec 1982 under Hooley\'s Hypothesis R*', frozenset({Hypothesis.HYPOTHESIS_R_STAR}),
        _fixed(
            _piece(F(4, 9), F(7, 12), False, False, '6/(5-6*varpi)', lambda w: 6 / (5 - 6 * w)),
            _piece(F(7, 12), 1, False, False, '5/(3-3*varpi)', lambda w: 5 / (3 - 3 * w)),
        ),
    ),
    BTCurve(
        'motohashi-lindelof', 'Motohashi 1974 under the Lindelof Hypothesis for Dirichlet L-functions',
        frozenset({Hypothesis.LINDELOF}),
        _fixed(
            _piece(0, F(1, 3), True, True, '2', lambda w: F(2)),
            _piece(F(1, 3), F(1, 2), True, True, '2/(2-3*varpi)', lambda w: 2 / (2 - 3 * w)),
        ),
    ),
)

CATALOG: dict[str, BTCurve] = {curve.id: curve for curve in CURVES}


def get_curve(curve_id: str) -> BTCurve:
    try:
        return CATALOG[curve_id]
    except KeyError:
        raise InvalidParameterError(f'unknown curve {curve_id!r}; known: {", ".join(CATALOG)}')
