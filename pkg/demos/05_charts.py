"""Rendering publication-style charts.

Text charts use '.' for a single F4 class, 'o' for an F4 power series
tower, '#' for a Witt tower, with a sorted arrow list (dashed = not an
isomorphism).  SVG charts add generator labels, differential arrows, and
optional slope-1 eta-multiplication lines.
"""

import pathlib

from hfpss.charts import render_svg, render_text
from hfpss.pages import run_to_einfty
from hfpss.targets import Target, Window

out_dir = pathlib.Path(__file__).resolve().parent / "output"
out_dir.mkdir(exist_ok=True)

stack = run_to_einfty(Target.C2_V0, Window(0, 12, filt_max=12))
print(render_text(stack.page(3), stack.maps[3], page_index=3))

svg = render_svg(stack.page(3), stack.maps[3], labels=True)
(out_dir / "c2_v0_e3.svg").write_text(svg)

stack = run_to_einfty(Target.C6, Window(0, 48, filt_max=14))
(out_dir / "c6_e7.svg").write_text(render_svg(stack.page(7), stack.maps[7]))
(out_dir / "c6_einfty.svg").write_text(
    render_svg(stack.page(8), None, labels=True, eta_lines=True))

stack = run_to_einfty(Target.C6_Y, Window(0, 48, filt_max=10))
(out_dir / "c6_y_e7.svg").write_text(render_svg(stack.page(7), stack.maps[7]))

print(f"SVG charts written to {out_dir}/")
