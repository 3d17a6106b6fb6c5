import re
from fractions import Fraction

from attr import attrib, dataclass

from btlab.domain.errors import InvalidParameterError

_SUPERSCRIPTS = str.maketrans('⁰¹²³⁴⁵⁶⁷⁸⁹', '0123456789')
_RUN = re.compile(r'([AB])(?:\^?(\d+))?')


@dataclass(slots=True, frozen=True)
class ExponentPair:
    kappa: Fraction = attrib(converter=Fraction)
    lam: Fraction = attrib(converter=Fraction)
    nu: Fraction = attrib(converter=Fraction)

    @property
    def total(self) -> Fraction:
        return self.kappa + self.lam

    def in_band(self) -> bool:
        """0 <= kappa <= 1/2 <= lambda <= 1 and 0 <= nu <= 1"""
        half = Fraction(1, 2)
        return 0 <= self.kappa <= half <= self.lam <= 1 and 0 <= self.nu <= 1

    def as_strings(self) -> tuple[str, str, str]:
        return str(self.kappa), str(self.lam), str(self.nu)

    def __str__(self) -> str:
        return ' '.join(self.as_strings())


TRIVIAL_PAIR = ExponentPair(0, 1, 0)


def _check_letters(instance, attribute, value: str) -> None:
    if any(letter not in 'AB' for letter in value):
        raise InvalidParameterError(f'process word may only contain A and B, got {value!r}')


@dataclass(slots=True, frozen=True)
class ProcessWord:
    """
    Word over {A, B}. The rightmost letter acts first on (0, 1, 0).
    """
    letters: str = attrib(default='', validator=_check_letters)

    @classmethod
    def from_string(cls, text: str) -> 'ProcessWord':
        """
        Parse plain letters or run-length notation.

        Accepts "AABAAB", "A2BA2B", "A^2BA^2B" and "A²BA²B" for the same word.
        """
        cleaned = text.strip().replace(' ', '').replace('*', '').translate(_SUPERSCRIPTS)
        position = 0
        parts = []
        while position < len(cleaned):
            match = _RUN.match(cleaned, position)
            if match is None:
                raise InvalidParameterError(f'cannot parse process word {text!r}')
            parts.append(match.group(1) * int(match.group(2) or 1))
            position = match.end()
        return cls(''.join(parts))

    @property
    def is_canonical(self) -> bool:
        return 'BB' not in self.letters

    def compact(self) -> str:
        """Run-length form, e.g. A2BA2B"""
        out = []
        for match in re.finditer(r'A+|B+', self.letters):
            run = match.group(0)
            out.append(run[0] if len(run) == 1 else f'{run[0]}{len(run)}')
        return ''.join(out)

    def sort_key(self) -> tuple[int, str]:
        return len(self.letters), self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters
