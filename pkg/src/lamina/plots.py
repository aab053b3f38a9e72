"""Figure rendering for the report path.

Renders the two diagram kinds emitted by the command line: the polar
directional diagram of the Poisson's ratio and the lamination-domain map.
Output is SVG; the backend, hash salt and metadata are pinned so identical
inputs produce byte-identical files.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

matplotlib.rcParams["svg.hashsalt"] = "lamina"
matplotlib.rcParams["svg.fonttype"] = "none"

#: Marker conventions for the domain map point classes.
SERIES_MARKERS = {
    "eta_min": ("o", "open", "margin minimum"),
    "nu12_min": ("+", "line", "lowest Poisson's ratio"),
    "zone_max": ("s", "open", "widest auxetic zone"),
}


def polar_nu12_figure(theta_deg, nu12, title: str = ""):
    """Polar directional diagram of nu12 with a thin circle at the zero level.

    The supplied quarter [0, 90] degrees is unfolded to the full turn using
    the mirror symmetry about 90 degrees and the half-turn periodicity.
    The curve runs inside the zero circle exactly where nu12 is negative.
    """
    t = np.asarray(theta_deg, dtype=float)
    v = np.asarray(nu12, dtype=float)
    tf = np.concatenate([t, 180.0 - t[::-1], 180.0 + t, 360.0 - t[::-1]])
    vf = np.concatenate([v, v[::-1], v, v[::-1]])

    vmin, vmax = float(np.min(vf)), float(np.max(vf))
    span = max(vmax - vmin, 1e-6)
    base = max(0.0, -vmin) + 0.25 * span

    fig, ax = plt.subplots(subplot_kw={"projection": "polar"}, figsize=(5.5, 5.5))
    circle = np.linspace(0.0, 2.0 * np.pi, 361)
    ax.plot(circle, np.full_like(circle, base), color="black", lw=0.6)
    ax.plot(np.radians(tf), vf + base, color="tab:blue", lw=1.4)

    ticks = np.linspace(vmin, vmax, 5)
    ax.set_rticks(ticks + base)
    ax.set_yticklabels([f"{val:.2f}" for val in ticks], fontsize=8)
    ax.set_rlim(0.0, vmax + base + 0.15 * span)
    ax.set_xticks(np.radians(np.arange(0, 360, 45)))
    ax.grid(True, lw=0.3, alpha=0.6)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    return fig


def domain_map_figure(series: dict[str, dict[int, list[tuple[float, float]]]],
                      title: str = ""):
    """Map of the lamination domain with contour lines and marker classes.

    ``series`` maps a series name to its parts, each part being an ordered
    list of (xi3, xi1) vertices. Series whose name contains "boundary" are
    drawn as lines; the known optimum classes use their conventional
    markers, anything else falls back to crosses.
    """
    fig, ax = plt.subplots(figsize=(5.5, 5.0))
    xs = np.linspace(-1.0, 1.0, 401)
    ax.plot(xs, 2.0 * xs * xs - 1.0, color="black", lw=1.0)
    ax.plot([-1.0, 1.0], [1.0, 1.0], color="black", lw=1.0)

    for name in sorted(series):
        parts = series[name]
        if "boundary" in name:
            label = "zero-margin contour"
            for idx in sorted(parts):
                arr = np.asarray(parts[idx])
                ax.plot(arr[:, 0], arr[:, 1], color="tab:red", lw=1.2, label=label)
                label = None
            continue
        marker, fill, label = SERIES_MARKERS.get(name, ("x", "line", name))
        arr = np.asarray([pt for idx in sorted(parts) for pt in parts[idx]])
        style = (
            {"color": "tab:blue"}
            if fill == "line"  # stroke-only markers such as + and x
            else {"facecolors": "none", "edgecolors": "tab:blue"}
        )
        ax.scatter(
            arr[:, 0], arr[:, 1], marker=marker, s=45, linewidths=1.2,
            label=label, **style,
        )

    ax.set_xlim(-1.05, 1.05)
    ax.set_ylim(-1.05, 1.1)
    ax.set_xlabel("xi3")
    ax.set_ylabel("xi1")
    ax.set_aspect("equal")
    ax.legend(loc="upper center", fontsize=8, framealpha=0.9)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    return fig


def save_svg(fig, path: str | Path) -> None:
    """Write the figure as SVG with reproducible bytes, then close it."""
    fig.savefig(Path(path), format="svg", metadata={"Date": None})
    plt.close(fig)
