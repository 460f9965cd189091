"""The five target spectral sequences and computation windows."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Target(Enum):
    C2 = "c2"
    C2_V0 = "c2-v0"
    C6 = "c6"
    C6_V0 = "c6-v0"
    C6_Y = "c6-y"

    @property
    def period(self) -> int:
        """u1-period of the power series towers (3 on C6-family pages)."""
        return 3 if self in (Target.C6, Target.C6_V0, Target.C6_Y) else 1

    @property
    def weight_filtered(self) -> bool:
        """C6-family pages keep only the weight-0 monomials."""
        return self.period == 3

    @property
    def even_u_only(self) -> bool:
        """Integral pages contain only even u-powers."""
        return self in (Target.C2, Target.C6)

    @property
    def mod2(self) -> bool:
        """Mod-2 pages: every tower is 2-torsion."""
        return self is not Target.C2 and self is not Target.C6

    @property
    def y_page(self) -> bool:
        return self is Target.C6_Y

    @classmethod
    def from_string(cls, s: str) -> "Target":
        for t in cls:
            if t.value == s:
                return t
        raise ValueError(f"unknown target {s!r}")


# Padding applied around the requested window so that every d3..d7
# source/target of an interior class is present during computation.
STEM_PAD = 7
FILT_PAD = 7
U1_PAD = 6


@dataclass(frozen=True)
class Window:
    """Trusted region plus truncation parameters.

    stem_lo..stem_hi is inclusive; filt_max caps the filtration of
    reported classes.  K is the 2-adic truncation of the Witt ring and N
    the u1-truncation of reported power series towers.  Computation
    internally pads all three directions.
    """

    stem_lo: int
    stem_hi: int
    filt_max: int = 40
    K: int = 3
    N: int = 12

    @property
    def stem_range(self) -> range:
        return range(self.stem_lo - STEM_PAD, self.stem_hi + STEM_PAD + 1)

    @property
    def filt_range(self) -> range:
        return range(0, self.filt_max + FILT_PAD + 1)

    @property
    def n_u1(self) -> int:
        """Internal u1-truncation; only exponents < N are reported."""
        return self.N + U1_PAD

    def trusted(self, stem: int, filt: int) -> bool:
        return self.stem_lo <= stem <= self.stem_hi and 0 <= filt <= self.filt_max

    def in_padded(self, stem: int, filt: int) -> bool:
        return stem in self.stem_range and filt in self.filt_range
