"""Driving a spectral sequence from its starting page to collapse.

The page succession is

    E2 = E3  --d3-->  E4 = E5 = E6 = E7  --d7-->  E8 = Einfty;

the intermediate equalities hold because the d5 rule sets are empty and
no even-r differential can exist (source and target bidegrees always have
opposite parity).  Both facts are certified, not assumed: the d5 pass
must propagate to zero maps, the even-r case by checking that no nonzero
source/target bidegree pair exists, and collapse at E8 by checking that
every d_r with r >= 8 has zero source or zero target.

Freeness of a tower cannot be read off at one 2-adic truncation, so the
whole pipeline runs at K and K+1 and a summand is certified free exactly
when its annihilator exponent grows with the truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .e2 import build_e2
from .modules import (BidegreeModule, Page, PipelineError, Summand,
                      compose_cols, homology_at)
from .monomials import NAMED, Monomial
from .rules import Propagation, propagate, rule_table, validate_coverage
from .targets import Target, Window

PAGE_ORDER = (2, 3, 4, 5, 6, 7, 8)
ALIASES = {3: 2, 5: 4, 6: 4, 7: 4}


class CertificateError(PipelineError):
    """A structural page fact failed to verify."""


def turn_page(page: Page, prop: Propagation, rule_r: int) -> Page:
    """Homology at every bidegree, generator names carried by pure lifts."""
    out = Page(target=page.target, r=rule_r + 1, window=page.window, K=page.K,
               untrusted=set(page.untrusted) | set(prop.boundary))
    r = rule_r
    for (stem, filt), mod in page.modules.items():
        d_out = prop.maps.get((stem, filt))
        d_in = prop.maps.get((stem + 1, filt - r))
        if d_in is not None and d_in.target is not mod:
            d_in = None
        new_mod, _section = homology_at(mod, d_in, d_out, page.K)
        if new_mod.total_length > mod.total_length:
            raise PipelineError(
                f"homology grew at ({stem},{filt})")
        if new_mod:
            out.modules[(stem, filt)] = new_mod
    return out


def check_d_squared(page: Page, prop: Propagation, r: int) -> None:
    for (stem, filt), first in prop.maps.items():
        second = prop.maps.get((stem - 1, filt + r))
        if second is None:
            continue
        for col in compose_cols(first, second):
            for i, coeff in col:
                if coeff.val() < second.target.summands[i].order:
                    raise CertificateError(
                        f"d{r} o d{r} != 0 at bidegree ({stem},{filt})")


def _nonzero_reported(page: Page) -> set[tuple[int, int]]:
    out = set()
    for (stem, filt), mod in page.modules.items():
        if any(s.mono.u1 < page.window.N for s in mod.summands):
            out.add((stem, filt))
    return out


def check_even_r_vanishing(page: Page, rs=(2, 4, 6)) -> None:
    """Sparseness: no even-r differential has nonzero source and target."""
    nonzero = _nonzero_reported(page)
    for (stem, filt) in nonzero:
        if not page.window.trusted(stem, filt):
            continue
        for r in rs:
            if (stem - 1, filt + r) in nonzero:
                raise CertificateError(
                    f"even differential d{r} possible at ({stem},{filt})")


def check_collapse(page: Page) -> None:
    """E8 = Einfty: every d_r (r >= 8) has zero source or target."""
    nonzero = _nonzero_reported(page)
    for (stem, filt) in nonzero:
        if not page.window.trusted(stem, filt):
            continue
        for (stem2, filt2) in nonzero:
            if stem2 == stem - 1 and filt2 - filt >= 8 \
                    and page.window.trusted(stem2, filt2):
                raise CertificateError(
                    f"possible d{filt2 - filt} from ({stem},{filt})")


@dataclass
class PageStack:
    target: Target
    window: Window
    pages: dict[int, Page]
    maps: dict[int, Propagation]
    certificates: list[str] = field(default_factory=list)

    def page(self, r: int) -> Page:
        if r >= 8:
            r = 8
        r = ALIASES.get(r, r)
        return self.pages[r]

    @property
    def einfty(self) -> Page:
        return self.pages[8]


def _run_once(target: Target, window: Window, K: int) -> tuple[dict[int, Page], dict[int, Propagation]]:
    p2 = build_e2(target, window, K)
    for r in (3, 5, 7):
        validate_coverage(rule_table(target, r), p2)

    prop3 = propagate(p2, rule_table(target, 3))
    check_d_squared(p2, prop3, 3)
    p4 = turn_page(p2, prop3, 3)

    prop5 = propagate(p4, rule_table(target, 5))
    if prop5.maps:
        raise CertificateError("nontrivial d5 propagated from an empty rule set")

    prop7 = propagate(p4, rule_table(target, 7))
    check_d_squared(p4, prop7, 7)
    p8 = turn_page(p4, prop7, 7)

    return {2: p2, 4: p4, 8: p8}, {3: prop3, 7: prop7}


def _certify_freeness(pages_lo: dict[int, Page], pages_hi: dict[int, Page], K: int) -> None:
    """Mark summands free when their annihilator grows with the truncation."""
    for r, page in pages_lo.items():
        hi = pages_hi[r]
        for key, mod in page.modules.items():
            hm = hi.modules.get(key)
            hi_orders = {(s.scalar, s.mono): s.order for s in (hm.summands if hm else ())}
            new = []
            for s in mod.summands:
                o_hi = hi_orders.get((s.scalar, s.mono))
                if o_hi is None:
                    raise PipelineError(
                        f"summand {s.label()} at {key} missing from K={K + 1} run")
                if o_hi == s.order + 1 and s.order == K - s.scalar:
                    new.append(Summand(s.scalar, s.mono, s.order, free=True))
                elif o_hi == s.order:
                    new.append(s)
                else:
                    raise PipelineError(
                        f"truncation-unstable order for {s.label()} at {key}: "
                        f"{s.order} vs {o_hi}")
            page.modules[key] = BidegreeModule(mod.stem, mod.filt, tuple(new))


def run_to_einfty(target: Target, window: Window) -> PageStack:
    """E2 through Einfty with all structural certificates.

    Runs at K and K+1; the returned stack holds the K-truncated pages with
    free towers certified by the comparison.
    """
    pages, maps = _run_once(target, window, window.K)
    pages_hi, _ = _run_once(target, window, window.K + 1)
    _certify_freeness(pages, pages_hi, window.K)

    certificates = []
    check_even_r_vanishing(pages[2], rs=(2,))
    check_even_r_vanishing(pages[4], rs=(4, 6))
    certificates.append("even-r source/target overlap: none")
    certificates.append("d5 rule set empty and propagates to zero")
    check_collapse(pages[8])
    certificates.append("E8 collapse: every d_r (r>=8) has zero source or target")
    for r_new, r_old in ((4, 2), (8, 4)):
        for key in pages[r_new].modules:
            lo = pages[r_new].modules[key].total_length
            hi = pages[r_old].modules[key].total_length if key in pages[r_old].modules else 0
            if lo > hi:
                raise CertificateError(f"module length grew at {key}")
    certificates.append("monotone death of total module length")

    return PageStack(target=target, window=window, pages=pages, maps=maps,
                     certificates=certificates)


# ---------------------------------------------------------------------------
# Tower (power series) recognition on a computed page.

@dataclass(frozen=True)
class Tower:
    scalar: int
    mono: Monomial       # generator, u1-exponent = series offset
    order: int
    free: bool
    period: int | None   # None for an isolated class

    @property
    def stem(self) -> int:
        return self.mono.stem

    @property
    def filt(self) -> int:
        return self.mono.filt

    def label(self) -> str:
        prefix = "" if self.scalar == 0 else str(1 << self.scalar)
        return prefix + str(self.mono)


def towers_of_module(mod: BidegreeModule, period: int, N: int) -> list[Tower]:
    """Group reported summands into truncated power series towers.

    A run of slots with u1-exponents beta, beta+p, ... is a series tower
    exactly when it reaches the reporting horizon N; shorter runs are
    isolated classes.
    """
    towers = []
    groups: dict[tuple[int, int, bool, int, int], list[int]] = {}
    for s in mod.summands:
        if s.mono.u1 >= N:
            continue
        key = (s.scalar, s.order, s.free, s.mono.u, s.mono.al)
        groups.setdefault(key, []).append(s.mono.u1)
    for (scalar, order, free, u, al), bs in sorted(groups.items()):
        bs.sort()
        run: list[int] = []
        for b in bs + [None]:
            if run and (b is None or b != run[-1] + period):
                if run[-1] + period >= N:
                    towers.append(Tower(scalar, Monomial(u, run[0], al),
                                        order, free, period))
                else:
                    towers.extend(Tower(scalar, Monomial(u, bb, al), order, free, None)
                                  for bb in run)
                run = []
            if b is not None:
                run.append(b)
    towers.sort(key=lambda t: (t.filt, t.mono.u1, t.mono.u, t.scalar))
    return towers


def towers_of_page(page: Page) -> dict[tuple[int, int], list[Tower]]:
    period = page.target.period
    out = {}
    for key, mod in sorted(page.modules.items()):
        ts = towers_of_module(mod, period, page.window.N)
        if ts:
            out[key] = ts
    return out


def periodicity_check(stack: PageStack, shift: Monomial, page_r: int,
                      stems: range) -> list[str]:
    """Labeled column isomorphism under multiplication by the shift.

    Returns the list of mismatching column pairs (empty = periodic).
    """
    page = stack.page(page_r)
    delta = shift.stem
    failures = []
    for n in stems:
        for filt in page.window.filt_range:
            if not (page.window.trusted(n, filt)
                    and page.window.trusted(n + delta, filt)):
                continue
            here = {(s.scalar, s.mono * shift, s.order, s.free)
                    for s in page.reported_summands(n, filt)}
            there = {(s.scalar, s.mono, s.order, s.free)
                     for s in page.reported_summands(n + delta, filt)}
            if here != there:
                failures.append(f"columns {n} and {n + delta} differ at filtration {filt}")
    return failures


def hurewicz_permanent_cycles(stack: PageStack) -> list[str]:
    """Detectors of eta, nu, kappabar must survive to Einfty (integral targets)."""
    missing = []
    einf = stack.einfty
    for name in ("eta", "nu", "kappabar"):
        m = NAMED[name]
        mod = einf.module(*m.bidegree)
        if not einf.window.trusted(*m.bidegree):
            continue
        if mod.slot_of(m) is None:
            missing.append(f"{name} = {m} died before Einfty")
    return missing


# ---------------------------------------------------------------------------
# Serialization.

def page_to_json(page: Page) -> dict:
    period = page.target.period
    bidegrees = []
    for (stem, filt), mod in sorted(page.modules.items()):
        ts = towers_of_module(mod, period, page.window.N)
        if not ts:
            continue
        bidegrees.append({
            "stem": stem,
            "filt": filt,
            "trusted": page.is_trusted(stem, filt),
            "towers": [{
                "gen": t.label(),
                "ann_exp": "free" if t.free else t.order,
                "period": t.period,
                "offset": t.mono.u1,
            } for t in ts],
        })
    return {
        "target": page.target.value,
        "page": page.r,
        "window": {"stem_lo": page.window.stem_lo, "stem_hi": page.window.stem_hi,
                   "filt_max": page.window.filt_max,
                   "K": page.window.K, "N": page.window.N},
        "bidegrees": bidegrees,
    }


def stack_to_json(stack: PageStack) -> dict:
    return {
        "target": stack.target.value,
        "pages": {str(r): page_to_json(p) for r, p in sorted(stack.pages.items())},
        "aliases": {str(k): v for k, v in ALIASES.items()},
        "certificates": stack.certificates,
    }
