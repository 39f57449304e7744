"""
Drawing Cambrian fans
=====================

Writes SVG pictures of rank-3 Cambrian fans to demos/out/: the affine G2
fan for c = srt in an affine slice, B3 stereographically, and the (5,4,2)
hyperbolic group in the Poincare disk. Shaded chambers are the sortable
ones; bold segments separate distinct fibres of the projection.
"""
from pathlib import Path

from cambrian import groups
from cambrian.render import RenderSpec, render_svg, shaded_words

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

jobs = [
    ("affine-G2", "srt", RenderSpec(projection="affine-slice", length_cap=10)),
    ("affine-A2", "pqr", RenderSpec(projection="affine-slice", length_cap=9)),
    ("B3", "pqr", RenderSpec(projection="stereographic", length_cap=9)),
    ("hyperbolic-542", "rst", RenderSpec(projection="poincare-disk", length_cap=9, labels=False)),
]
for name, c, spec in jobs:
    svg = render_svg(groups.load_group(name), c, spec)
    path = out / f"{name}-{c}-{spec.projection}.svg"
    path.write_text(svg)
    print(f"{path.name}: {len(shaded_words(svg))} sortable chambers")
