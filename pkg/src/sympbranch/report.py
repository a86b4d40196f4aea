"""File reports: Hasse diagrams of factor posets and dimension tables.

Figures are drawn with matplotlib straight on Figure objects (no pyplot
state) so rendering works headless. The dimension table goes out as CSV
next to the figures.
"""

from __future__ import annotations

import csv
from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .dims import dims_table
from .padic import Prime
from .weyl import FactorPoset


def _heights(poset: FactorPoset) -> dict[int, int]:
    """Longest-chain height of each factor above the poset minimum."""
    heights: dict[int, int] = {}
    for m in sorted(poset.factors, key=lambda m: sum(poset.lt(q, m) for q in poset.factors)):
        below = [q for q in poset.factors if poset.lt(q, m)]
        heights[m] = 1 + max((heights[q] for q in below), default=-1)
    return heights


def render_poset_figure(poset: FactorPoset, path: Path) -> None:
    """Draw the Hasse diagram of a factor poset to an image file, nodes
    placed by longest-chain height."""
    heights = _heights(poset)
    levels: dict[int, list[int]] = {}
    for m, h in heights.items():
        levels.setdefault(h, []).append(m)
    pos: dict[int, tuple[float, float]] = {}
    for h, members in levels.items():
        for idx, m in enumerate(sorted(members)):
            pos[m] = ((idx + 1) / (len(members) + 1), float(h))
    width = max(len(ms) for ms in levels.values())
    depth = max(levels) + 1
    fig = Figure(figsize=(max(3.2, 2.2 * width), max(2.4, 1.3 * depth)))
    FigureCanvasAgg(fig)
    ax = fig.add_subplot()
    for lo, hi in poset.covers():
        (x0, y0), (x1, y1) = pos[lo], pos[hi]
        ax.plot([x0, x1], [y0, y1], color="0.55", lw=1.2, zorder=1)
    for m, (x, y) in pos.items():
        label = f"$\\pi_{{{m}}} = \\omega_{{{poset.n + 1 - m}}}$"
        ax.text(
            x,
            y,
            label,
            ha="center",
            va="center",
            zorder=2,
            bbox=dict(boxstyle="round,pad=0.35", fc="white", ec="0.3"),
        )
    ax.set_xlim(0, 1)
    ax.set_ylim(-0.6, max(levels) + 0.6)
    ax.set_axis_off()
    ax.set_title(
        f"factor poset of $V_{{{poset.l}}}^{{{poset.n}}}$, p = {poset.p}"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)


def write_dims_csv(n: int, p, path: Path) -> None:
    """Write the rank-n dimension table as CSV."""
    rows = dims_table(n, p)
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["i_omega", "i_pi", "weyl_dim", "irr_dim"]
        )
        writer.writeheader()
        writer.writerows(rows)


def run_report(p, n: int, outdir, l: int | None = None) -> list[Path]:
    """Render the rank-n report into outdir: one Hasse diagram per Weyl
    module (or just the one for l, if given) plus the dimension CSV.
    Returns the written paths."""
    p = Prime(p)
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    csv_path = out / f"dims_p{int(p)}_n{n}.csv"
    write_dims_csv(n, p, csv_path)
    written.append(csv_path)
    indices = [l] if l is not None else list(range(1, n + 2))
    for m in indices:
        fig_path = out / f"poset_p{int(p)}_n{n}_l{m}.png"
        render_poset_figure(FactorPoset(n, m, p), fig_path)
        written.append(fig_path)
    return written
