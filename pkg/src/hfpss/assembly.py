"""From Einfty columns to homotopy groups.

Extensions are resolved by declared directives, never inferred.  On the
mod-2 targets the only nonsplit extensions pair a filtration-0 tower with
the filtration-2 tower one u1-step and one u-step above it (the relation
"2x = eta*alpha*x climbed by one cell"); the pair merges into a single
W/4-series on the filtration-0 generator and any upper classes below the
pairing threshold survive as separate F4 summands.  These pairs occur
exactly in stems congruent to 2 mod 8.  On the integral targets and on
the smash-with-Y target every extension splits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groupexpr import GroupExpr, Term
from .monomials import Monomial
from .pages import PageStack, Tower, towers_of_page
from .targets import Target


class ExtensionError(Exception):
    """A merge directive's pairing predicate failed against the page."""


@dataclass(frozen=True)
class ExtensionDirective:
    action: str                 # "merge-eta-alpha" or "split"
    stem_residue: int | None    # merge applies at stems = residue mod 8

    def applies(self, stem: int) -> bool:
        if self.action == "split":
            return True
        return stem % 8 == self.stem_residue


def extension_directives(target: Target) -> list[ExtensionDirective]:
    if target in (Target.C2_V0, Target.C6_V0):
        return [ExtensionDirective("merge-eta-alpha", 2),
                ExtensionDirective("split", None)]
    return [ExtensionDirective("split", None)]


def _tower_term(t: Tower) -> Term:
    if t.free:
        coeff = "W"
    elif t.order == 1:
        coeff = "F4"
    elif t.order == 2:
        coeff = "W/4"
    else:
        raise ExtensionError(f"tower {t.label()} has unexpected order 2^{t.order}")
    return Term(t.scalar, t.mono, coeff, t.period)


def _eta_alpha_partner(lower: Tower, upper: Tower) -> bool:
    """Is `upper` the alpha^2*u*u1-shift of the series `lower`?"""
    return (lower.period is not None and upper.period == lower.period
            and lower.mono.al == 0 and upper.mono.al == 2
            and upper.mono.u == lower.mono.u + 1
            and lower.order == 1 and upper.order == 1
            and not lower.free and not upper.free
            and (upper.mono.u1 - lower.mono.u1 - 1) % lower.period == 0
            and upper.mono.u1 <= lower.mono.u1 + 1)


@dataclass
class AssembledGroup:
    stem: int
    expr: GroupExpr
    consulted: bool                  # an extension directive examined this stem
    merged: list[tuple[str, str]] = field(default_factory=list)  # provenance


def assemble_pi(stem: int, towers: list[Tower], target: Target) -> AssembledGroup:
    """Resolve the extensions in one Einfty column."""
    directives = extension_directives(target)
    merge = next((d for d in directives if d.action == "merge-eta-alpha"
                  and d.applies(stem)), None)
    consulted = len(towers) >= 2 or merge is not None

    towers = list(towers)
    terms: list[Term] = []
    merged: list[tuple[str, str]] = []

    if merge is not None:
        lowers = [t for t in towers if t.filt == 0 and t.period is not None
                  and t.mono.al == 0]
        uppers = [t for t in towers if t.filt == 2 and t.period is not None]
        if lowers and uppers:
            if len(lowers) != 1 or len(uppers) != 1:
                raise ExtensionError(f"ambiguous merge pattern at stem {stem}")
            lower, upper = lowers[0], uppers[0]
            if not _eta_alpha_partner(lower, upper):
                raise ExtensionError(
                    f"merge directive at stem {stem}: {upper.label()} is not "
                    f"the eta*alpha partner of {lower.label()}")
            towers.remove(lower)
            towers.remove(upper)
            terms.append(Term(lower.scalar, lower.mono, "W/4", lower.period))
            merged.append((lower.label(), upper.label()))
            # upper classes below the pairing threshold stay as F4 summands
            b = upper.mono.u1
            while b <= lower.mono.u1:
                terms.append(Term(upper.scalar,
                                  Monomial(upper.mono.u, b, upper.mono.al),
                                  "F4", None))
                b += upper.period

    terms.extend(_tower_term(t) for t in towers)
    return AssembledGroup(stem, GroupExpr(tuple(terms)), consulted, merged)


def assemble_all(stack: PageStack) -> dict[int, AssembledGroup]:
    """Homotopy groups for every trusted stem of the window."""
    by_stem: dict[int, list[Tower]] = {}
    for (stem, filt), towers in towers_of_page(stack.einfty).items():
        if stack.einfty.is_trusted(stem, filt):
            by_stem.setdefault(stem, []).extend(towers)
    window = stack.window
    out = {}
    for stem in range(window.stem_lo, window.stem_hi + 1):
        out[stem] = assemble_pi(stem, by_stem.get(stem, []), stack.target)
    return out


def column_log4_order(stack: PageStack, stem: int) -> int:
    """log4 of the truncated Einfty column order (extension-independent)."""
    einf = stack.einfty
    total = 0
    for (n, filt), mod in einf.modules.items():
        if n == stem and einf.is_trusted(n, filt):
            total += sum(s.order for s in einf.reported_summands(n, filt))
    return total
