import pytest

from cambrian import groups
from cambrian.forms import RankNotThree
from cambrian.render import ProjectionUnavailable, RenderSpec, render_svg, shaded_words
from cambrian.sortable import enumerate_sortables


def _expected(W, c, cap):
    return sorted(v.word_str("") for v in enumerate_sortables(W, c, cap))


@pytest.mark.parametrize("name,c,projection,cap", [
    ("affine-G2", "srt", "affine-slice", 8),
    ("affine-A2", "pqr", "affine-slice", 7),
    ("B3", "pqr", "stereographic", 9),
    ("hyperbolic-542", "rst", "poincare-disk", 6),
])
def test_shading_matches_enumeration(name, c, projection, cap):
    W = groups.load_group(name)
    spec = RenderSpec(projection=projection, length_cap=cap)
    svg = render_svg(W, c, spec)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert sorted(shaded_words(svg)) == _expected(W, c, cap)
    assert render_svg(W, c, spec) == svg


def test_no_highlight(affG2):
    svg = render_svg(affG2, "srt", RenderSpec(highlight="none", length_cap=4, labels=False))
    assert shaded_words(svg) == [] and "<text" not in svg


def test_projection_errors(A4, B3, affA2):
    with pytest.raises(RankNotThree):
        render_svg(A4, "pqrs")
    with pytest.raises(ProjectionUnavailable):
        render_svg(B3, "pqr", RenderSpec(projection="affine-slice"))
    with pytest.raises(ProjectionUnavailable):
        render_svg(affA2, "pqr", RenderSpec(projection="poincare-disk"))
