"""Matplotlib rendering of region maps (PNG, PDF or anything savefig accepts)."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import ListedColormap
from matplotlib.patches import Patch

from cohsys.scan import COLORS, RegionMap

_ORDER = list(COLORS)


def region_figure(region: RegionMap, width: float = 8.0):
    """Build a figure with d on the x axis and k on the y axis."""
    nd = len(region.d_values)
    nk = len(region.k_values)
    grid = np.zeros((nk, nd), dtype=int)
    for c in region.cells:
        grid[c.k - region.k_range[0], c.d - region.d_range[0]] = _ORDER.index(c.outcome)

    height = max(3.0, width * nk / max(nd, 1) + 1.5)
    fig, ax = plt.subplots(figsize=(width, height))
    ax.imshow(
        grid,
        origin="lower",
        cmap=ListedColormap([COLORS[o] for o in _ORDER]),
        vmin=0,
        vmax=len(_ORDER) - 1,
        extent=(
            region.d_range[0] - 0.5,
            region.d_range[1] + 0.5,
            region.k_range[0] - 0.5,
            region.k_range[1] + 0.5,
        ),
        interpolation="nearest",
        aspect="auto",
    )
    ax.set_xlabel("d")
    ax.set_ylabel("k")
    ax.set_title(f"g = {region.g}, n = {region.n}")
    handles = [Patch(color=COLORS[o], label=o.value) for o in _ORDER]
    ax.legend(handles=handles, loc="upper left", fontsize=8, framealpha=0.9)
    fig.tight_layout()
    return fig


def save_region_figure(region: RegionMap, path: str, dpi: int = 120) -> None:
    fig = region_figure(region)
    fig.savefig(path, dpi=dpi, metadata={"Software": None} if path.endswith(".png") else None)
    plt.close(fig)
