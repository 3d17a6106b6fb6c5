from attr import dataclass


@dataclass(slots=True, frozen=True)
class ResidueCounts:
    x: int
    q: int
    counts: dict[int, int]
    phi_q: int

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def max_count(self) -> int:
        return max(self.counts.values())

    @property
    def max_residue(self) -> int:
        """Smallest residue attaining the maximum"""
        top = self.max_count
        return min(a for a, count in self.counts.items() if count == top)

    def rows(self) -> list[dict[str, int]]:
        return [{'x': self.x, 'q': self.q, 'a': a, 'count': count} for a, count in sorted(self.counts.items())]
