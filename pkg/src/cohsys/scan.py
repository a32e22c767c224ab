"""Verdict maps over a rectangle of the (d, k) plane, with CSV and SVG output."""

import datetime
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from cohsys.criteria import Outcome, verdict

CSV_HEADER = "g,n,d,k,outcome,theorem,a"

COLORS = {
    Outcome.GUARANTEED_NONEMPTY: "#2ca02c",
    Outcome.UNKNOWN: "#bdbdbd",
    Outcome.CLIFFORD_INFEASIBLE: "#d62728",
}


class Cell(NamedTuple):
    d: int
    k: int
    outcome: Outcome
    theorem: str
    a: Optional[int]


@dataclass(frozen=True)
class ScanConfig:
    g: int
    n: int
    d_min: int
    d_max: int
    k_min: int
    k_max: int
    fmt: str = "csv"
    out: Optional[str] = None

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"genus must be >= 2, got {self.g}")
        if self.n < 1:
            raise ValueError(f"rank must be >= 1, got {self.n}")
        if self.d_min > self.d_max:
            raise ValueError(f"empty degree range [{self.d_min}, {self.d_max}]")
        if self.d_min <= 0:
            raise ValueError(f"degrees must be positive, got d_min={self.d_min}")
        if not 0 <= self.k_min <= self.k_max:
            raise ValueError(f"need 0 <= k_min <= k_max, got [{self.k_min}, {self.k_max}]")
        if self.fmt not in ("csv", "svg"):
            raise ValueError(f"unknown format {self.fmt!r}")


@dataclass(frozen=True)
class RegionMap:
    """Row-major grid of cells, d outer and k inner, both ascending.

    ``meta`` carries the engine version and scan time; renderers ignore it.
    """

    g: int
    n: int
    d_range: tuple
    k_range: tuple
    cells: tuple
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def d_values(self):
        return range(self.d_range[0], self.d_range[1] + 1)

    @property
    def k_values(self):
        return range(self.k_range[0], self.k_range[1] + 1)

    def cell(self, d: int, k: int) -> Cell:
        width = self.k_range[1] - self.k_range[0] + 1
        return self.cells[(d - self.d_range[0]) * width + (k - self.k_range[0])]


def evaluate_cell(g: int, n: int, d: int, k: int) -> Cell:
    v = verdict(g, n, d, k)
    if v.witness is None:
        return Cell(d, k, v.outcome, "", None)
    return Cell(d, k, v.outcome, v.witness.theorem.value, v.witness.a)


def _scan_column(args):
    g, n, d, k_min, k_max = args
    return [evaluate_cell(g, n, d, k) for k in range(k_min, k_max + 1)]


def scan_region(config: ScanConfig, jobs: int = 1) -> RegionMap:
    """Evaluate every cell; ``jobs > 1`` farms degree columns out to processes.

    Columns are merged back in degree order, so the result does not depend on
    ``jobs``.
    """
    from cohsys import __version__

    tasks = [
        (config.g, config.n, d, config.k_min, config.k_max)
        for d in range(config.d_min, config.d_max + 1)
    ]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            columns = list(pool.map(_scan_column, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        columns = [_scan_column(task) for task in tasks]
    meta = {
        "version": __version__,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }
    return RegionMap(
        config.g,
        config.n,
        (config.d_min, config.d_max),
        (config.k_min, config.k_max),
        tuple(cell for column in columns for cell in column),
        meta,
    )


def render_csv(region: RegionMap) -> bytes:
    lines = [CSV_HEADER]
    for c in sorted(region.cells, key=lambda c: (c.d, c.k)):
        a = "" if c.a is None else str(c.a)
        lines.append(f"{region.g},{region.n},{c.d},{c.k},{c.outcome.value},{c.theorem},{a}")
    return ("\n".join(lines) + "\n").encode("ascii")


def render_svg(region: RegionMap, cell_size: int = 12) -> bytes:
    """One <rect class="cell"> per cell; d runs left to right, k bottom to top."""
    nd = len(region.d_values)
    nk = len(region.k_values)
    left, top, bottom, legend_w = 48, 24, 40, 210
    width = left + nd * cell_size + 20 + legend_w
    height = top + max(nk * cell_size, 3 * 20) + bottom
    plot_bottom = top + nk * cell_size

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>g={region.g} n={region.n} d={region.d_range[0]}..{region.d_range[1]} "
        f"k={region.k_range[0]}..{region.k_range[1]}</title>",
        '<g id="cells" stroke="#ffffff" stroke-width="0.5">',
    ]
    for c in region.cells:
        x = left + (c.d - region.d_range[0]) * cell_size
        y = plot_bottom - (c.k - region.k_range[0] + 1) * cell_size
        label = c.outcome.value + (f" {c.theorem} a={c.a}" if c.theorem else "")
        out.append(
            f'<rect class="cell" x="{x}" y="{y}" width="{cell_size}" height="{cell_size}" '
            f'fill="{COLORS[c.outcome]}"><title>d={c.d} k={c.k} {label}</title></rect>'
        )
    out.append("</g>")

    out.append('<g id="axes" font-family="sans-serif" font-size="10" fill="#000000">')
    step_d = max(1, nd // 10)
    for i, d in enumerate(region.d_values):
        if i % step_d == 0:
            x = left + i * cell_size + cell_size // 2
            out.append(f'<text x="{x}" y="{plot_bottom + 12}" text-anchor="middle">{d}</text>')
    step_k = max(1, nk // 10)
    for j, k in enumerate(region.k_values):
        if j % step_k == 0:
            y = plot_bottom - j * cell_size - cell_size // 2 + 4
            out.append(f'<text x="{left - 4}" y="{y}" text-anchor="end">{k}</text>')
    out.append(
        f'<text x="{left + nd * cell_size // 2}" y="{plot_bottom + 28}" text-anchor="middle">d</text>'
    )
    out.append(f'<text x="12" y="{top + nk * cell_size // 2}" text-anchor="middle">k</text>')
    out.append("</g>")

    lx = left + nd * cell_size + 20
    out.append('<g id="legend" font-family="sans-serif" font-size="10" fill="#000000">')
    for i, outcome in enumerate(COLORS):
        y = top + i * 20
        out.append(
            f'<rect class="legend" x="{lx}" y="{y}" width="12" height="12" fill="{COLORS[outcome]}"/>'
        )
        out.append(f'<text x="{lx + 18}" y="{y + 10}">{outcome.value}</text>')
    out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("ascii")
