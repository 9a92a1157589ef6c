"""Render all six constructions as SVG files into demos/output/.

Identical parameters always produce byte-identical documents.
"""

from pathlib import Path

from enumerlab.figures import render_figure

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

descriptions = {
    1: "the bare grid",
    2: "the binary tree to depth 4",
    3: "the tree projected onto grid anti-diagonals",
    4: "the boustrophedon walk",
    5: "the truth-table matrix, 17 rows by 5 columns",
    6: "the walk over the matrix, rows labeled with walk positions",
}

for n, what in descriptions.items():
    svg = render_figure(n)
    assert svg == render_figure(n), "renders must be byte-identical"
    path = out_dir / f"figure{n}.svg"
    path.write_text(svg, encoding="utf-8")
    print(f"figure {n}: {what} -> {path}")
