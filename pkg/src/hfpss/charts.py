"""Spectral sequence charts, in plain text and SVG.

Glyph conventions follow the published figures: a filled dot is a single
F4 class, a circled dot an F4 power series tower, a box a Witt power
series tower (scalar prefixes annotate the box).  Differentials are
drawn as arrows of span (stem - 1, filtration + r); an arrow is dashed
when the tower-to-tower map it depicts is not an isomorphism.  Slope-1
lines can be added to show eta-multiplication.

The text format uses one character per glyph ('.', 'o', '#'), a
fixed-width grid, and a sorted arrow list below the grid; it is intended
for byte-exact golden tests.
"""

from __future__ import annotations

from .modules import Page
from .monomials import NAMED
from .pages import Tower, towers_of_module, towers_of_page
from .rules import Propagation

GLYPHS = {"f4": ".", "f4_series": "o", "w": "#"}


def _glyph(t: Tower) -> str:
    if t.free:
        return GLYPHS["w"]
    return GLYPHS["f4_series"] if t.period is not None else GLYPHS["f4"]


def _tower_index(towers: list[Tower], mono) -> int | None:
    for i, t in enumerate(towers):
        if t.mono.u == mono.u and t.mono.al == mono.al \
                and mono.u1 >= t.mono.u1 \
                and (t.period is None and mono.u1 == t.mono.u1
                     or t.period is not None and (mono.u1 - t.mono.u1) % t.period == 0):
            return i
    return None


def _arrows(page: Page, prop: Propagation, towers_by_bid) -> list[tuple]:
    """(source bid, target bid, dashed) per tower-to-tower differential."""
    arrows = []
    for (stem, filt), lm in sorted(prop.maps.items()):
        src_towers = towers_by_bid.get((stem, filt), [])
        tgt_key = (lm.target.stem, lm.target.filt)
        tgt_towers = towers_by_bid.get(tgt_key, [])
        pairs: dict[tuple[int, int], list] = {}
        for j, col in enumerate(lm.cols):
            s_mono = lm.source.summands[j].mono
            if s_mono.u1 >= page.window.N:
                continue
            si = _tower_index(src_towers, s_mono)
            for i, coeff in col:
                t_mono = lm.target.summands[i].mono
                if t_mono.u1 >= page.window.N:
                    continue
                ti = _tower_index(tgt_towers, t_mono)
                if si is None or ti is None:
                    continue
                pairs.setdefault((si, ti), []).append(
                    (j, i, coeff, lm.source.summands[j], lm.target.summands[i]))
        for (si, ti), hits in pairs.items():
            src_slots = [s for s in lm.source.summands
                         if _tower_index(src_towers, s.mono) == si
                         and s.mono.u1 < page.window.N]
            tgt_slots = [t for t in lm.target.summands
                         if _tower_index(tgt_towers, t.mono) == ti
                         and t.mono.u1 < page.window.N]
            iso = (len(hits) == len(src_slots) == len(tgt_slots)
                   and all(c.is_unit() and s.order == t.order
                           for (_, _, c, s, t) in hits))
            arrows.append(((stem, filt), tgt_key, not iso))
    return sorted(set(arrows))


def render_text(page: Page, prop: Propagation | None = None,
                page_index: int | None = None) -> str:
    """Fixed-width glyph grid plus a sorted arrow list."""
    window = page.window
    towers_by_bid = towers_of_page(page)
    stems = range(window.stem_lo, window.stem_hi + 1)
    cells = {}
    max_filt = 0
    for (stem, filt), ts in towers_by_bid.items():
        if window.trusted(stem, filt) and stem in stems:
            cells[(stem, filt)] = "".join(_glyph(t) for t in ts)
            max_filt = max(max_filt, filt)
    width = max([len(v) for v in cells.values()], default=1) + 1
    lines = [f"target {page.target.value}  page E{page_index or page.r}  "
             f"stems {window.stem_lo}..{window.stem_hi}"]
    for filt in range(max_filt, -1, -1):
        row = "".join(cells.get((stem, filt), "").ljust(width) for stem in stems)
        lines.append(f"{filt:3d} |" + row.rstrip())
    lines.append("    +" + "-" * (width * len(stems)))
    labels = "".join(str(stem).ljust(width) for stem in stems)
    lines.append("     " + labels.rstrip())
    if prop is not None:
        lines.append("")
        lines.append("arrows:")
        for (src, tgt, dashed) in _arrows(page, prop, towers_by_bid):
            if not (window.trusted(*src) and window.trusted(*tgt)):
                continue
            style = " dashed" if dashed else ""
            lines.append(f"  d{tgt[1] - src[1]} "
                         f"({src[0]},{src[1]}) -> ({tgt[0]},{tgt[1]}){style}")
    return "\n".join(lines) + "\n"


def _svg_header(width: int, height: int) -> list[str]:
    return [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            '<rect width="100%" height="100%" fill="white"/>']


def render_svg(page: Page, prop: Propagation | None = None,
               labels: bool = False, eta_lines: bool = False,
               cell: int = 26) -> str:
    """SVG 1.1 chart of one page."""
    window = page.window
    towers_by_bid = towers_of_page(page)
    stems = list(range(window.stem_lo, window.stem_hi + 1))
    max_filt = max([f for (n, f) in towers_by_bid
                    if window.trusted(n, f) and n in stems], default=0)
    margin = 40
    width = margin * 2 + cell * len(stems)
    height = margin * 2 + cell * (max_filt + 1)

    def xy(stem: int, filt: int) -> tuple[int, int]:
        return (margin + cell * (stem - window.stem_lo) + cell // 2,
                height - margin - cell * filt - cell // 2)

    out = _svg_header(width, height)
    out.append('<g stroke="#cccccc" stroke-width="1">')
    for i in range(len(stems) + 1):
        x = margin + cell * i
        out.append(f'<line x1="{x}" y1="{margin}" x2="{x}" y2="{height - margin}"/>')
    for j in range(max_filt + 2):
        y = height - margin - cell * j
        out.append(f'<line x1="{margin}" y1="{y}" x2="{width - margin}" y2="{y}"/>')
    out.append("</g>")
    for i, stem in enumerate(stems):
        if stem % 2 == 0:
            x = margin + cell * i + cell // 2
            out.append(f'<text x="{x}" y="{height - margin + 14}" font-size="9" '
                       f'text-anchor="middle">{stem}</text>')
    for filt in range(0, max_filt + 1, 2):
        y = height - margin - cell * filt - cell // 2
        out.append(f'<text x="{margin - 6}" y="{y + 3}" font-size="9" '
                   f'text-anchor="end">{filt}</text>')

    if eta_lines:
        eta = NAMED["eta"]
        out.append('<g stroke="#bbbbbb" stroke-width="1">')
        for (stem, filt), ts in sorted(towers_by_bid.items()):
            if not (window.trusted(stem, filt) and window.trusted(stem + 1, filt + 1)):
                continue
            nxt = page.module(stem + 1, filt + 1)
            for t in ts:
                if nxt.slot_of(t.mono * eta) is not None:
                    x1, y1 = xy(stem, filt)
                    x2, y2 = xy(stem + 1, filt + 1)
                    out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
        out.append("</g>")

    if prop is not None:
        out.append('<g stroke="#c02020" stroke-width="1.5" fill="none">')
        for (src, tgt, dashed) in _arrows(page, prop, towers_by_bid):
            if not (window.trusted(*src) and window.trusted(*tgt)):
                continue
            x1, y1 = xy(*src)
            x2, y2 = xy(*tgt)
            dash = ' stroke-dasharray="4 3"' if dashed else ""
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{dash}/>')
        out.append("</g>")

    for (stem, filt), ts in sorted(towers_by_bid.items()):
        if not (window.trusted(stem, filt) and stem in stems):
            continue
        x, y = xy(stem, filt)
        n = len(ts)
        for k, t in enumerate(ts):
            dx = (k - (n - 1) / 2) * 8
            cx = int(x + dx)
            if t.free:
                out.append(f'<rect x="{cx - 4}" y="{y - 4}" width="8" height="8" '
                           f'fill="none" stroke="black"/>')
                if t.scalar:
                    out.append(f'<text x="{cx - 6}" y="{y - 6}" font-size="7" '
                               f'text-anchor="end">{1 << t.scalar}</text>')
            elif t.period is not None:
                out.append(f'<circle cx="{cx}" cy="{y}" r="5" fill="none" stroke="black"/>')
                out.append(f'<circle cx="{cx}" cy="{y}" r="1.8" fill="black"/>')
            else:
                out.append(f'<circle cx="{cx}" cy="{y}" r="2.5" fill="black"/>')
            if labels:
                out.append(f'<text x="{cx + 6}" y="{y + 9}" font-size="7">'
                           f'{t.label()}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_page(page: Page, prop: Propagation | None = None, fmt: str = "text",
                page_index: int | None = None, **kwargs) -> str:
    if fmt == "text":
        return render_text(page, prop, page_index=page_index)
    if fmt == "svg":
        return render_svg(page, prop, **kwargs)
    raise ValueError(f"unknown chart format {fmt!r}")


def glyph_count(page: Page) -> int:
    """Number of glyphs a chart of this page contains (one per tower)."""
    return sum(len(ts) for (n, f), ts in towers_of_page(page).items()
               if page.window.trusted(n, f))


def tower_count(page: Page) -> int:
    window = page.window
    total = 0
    for (n, f), mod in page.modules.items():
        if window.trusted(n, f):
            total += len(towers_of_module(mod, page.target.period, window.N))
    return total
