from .characters import CharacterGroup, CharacterIndex
from .curve import BTCurve, CurveChoice, CurveParams, CurvePiece, Envelope, Hypothesis, Interval
from .exponent_pair import TRIVIAL_PAIR, ExponentPair, ProcessWord
from .residue_counts import ResidueCounts
from .sieve_table import EULER_GAMMA, SieveTable
from .sums import CongruenceCount, KloostermanTable

__all__ = [
    'BTCurve',
    'CharacterGroup',
    'CharacterIndex',
    'CongruenceCount',
    'CurveChoice',
    'CurveParams',
    'CurvePiece',
    'EULER_GAMMA',
    'Envelope',
    'ExponentPair',
    'Hypothesis',
    'Interval',
    'KloostermanTable',
    'ProcessWord',
    'ResidueCounts',
    'SieveTable',
    'TRIVIAL_PAIR',
]
