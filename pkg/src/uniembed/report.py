"""Figure and CSV rendering for solve results.

The report path writes a level heatmap of the matrix plus, depending on
the outcome, either the embedding drawn on the number line with the
threshold scale, or the certificate cycles drawn as arcs over the vertex
axis. A delimited file with the same content accompanies the figures.
Everything is written to files; there is no interactive display.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .matrix import RobinsonMatrix
from .solver import SolveResult


def render_report(m: RobinsonMatrix, result: SolveResult, outdir: str | Path,
                  dpi: int = 150) -> list[Path]:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    written = [_render_levels(m, out, dpi)]
    if result.feasible:
        written.append(_render_embedding(result, out, dpi))
        written.append(_write_embedding_csv(result, out))
    else:
        written.append(_render_certificate(m, result, out, dpi))
        written.append(_write_certificate_csv(m, result, out))
    return written


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _render_levels(m: RobinsonMatrix, out: Path, dpi: int) -> Path:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(m.entries, cmap="viridis", vmin=0, vmax=m.k,
                   extent=(0.5, m.n + 0.5, m.n + 0.5, 0.5))
    if m.n <= 15:
        for u in range(1, m.n + 1):
            for v in range(1, m.n + 1):
                value = m.level(u, v)
                color = "white" if value < m.k / 2 else "black"
                ax.text(v, u, str(value), ha="center", va="center",
                        color=color, fontsize=8)
        ax.set_xticks(range(1, m.n + 1))
        ax.set_yticks(range(1, m.n + 1))
    cbar = fig.colorbar(im, ax=ax, ticks=range(m.k + 1))
    cbar.set_label("similarity level")
    ax.set_title(f"{m.n}x{m.n} similarity levels (k={m.k})")
    ax.set_xlabel("vertex")
    ax.set_ylabel("vertex")
    path = out / "levels.png"
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
    return path


def _render_embedding(result: SolveResult, out: Path, dpi: int) -> Path:
    plt = _pyplot()
    assert result.embedding is not None and result.d is not None
    xs = [float(x) for x in result.embedding.positions]
    fig, ax = plt.subplots(figsize=(8, 3))
    ax.axhline(0, color="lightgray", zorder=0)
    ax.scatter(xs, [0] * len(xs), zorder=3, color="tab:blue")
    for v, x in enumerate(xs, start=1):
        ax.annotate(str(v), (x, 0), textcoords="offset points",
                    xytext=(0, 8), ha="center", fontsize=8)
    # threshold ruler below the axis, one bar per level
    for t, d in enumerate(result.d.values, start=1):
        y = -0.12 * t
        ax.plot([xs[0], xs[0] + float(d)], [y, y], lw=2)
        ax.annotate(f"d{t} = {d}", (xs[0] + float(d), y),
                    textcoords="offset points", xytext=(4, -2), fontsize=8)
    ax.set_yticks([])
    ax.set_ylim(-0.12 * (result.d.k + 1.5), 0.25)
    ax.set_xlabel("position")
    ax.set_title("embedding positions and threshold distances")
    path = out / "embedding.png"
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
    return path


def _render_certificate(m: RobinsonMatrix, result: SolveResult, out: Path,
                        dpi: int) -> Path:
    plt = _pyplot()
    assert result.certificate is not None
    cycles = result.certificate.cycles
    fig, ax = plt.subplots(figsize=(8, 3 + len(cycles)))
    ax.scatter(range(1, m.n + 1), [0] * m.n, color="black", zorder=3)
    for v in range(1, m.n + 1):
        ax.annotate(str(v), (v, 0), textcoords="offset points",
                    xytext=(0, -14), ha="center", fontsize=9)
    colors = ("tab:red", "tab:blue")
    for c_idx, cycle in enumerate(cycles):
        color = colors[c_idx % len(colors)]
        rad = 0.35 + 0.18 * c_idx
        verts = cycle.vertices
        for i in range(1, len(verts)):
            x, y = verts[i - 1], verts[i]
            ax.annotate(
                "", xy=(y, 0), xytext=(x, 0),
                arrowprops=dict(arrowstyle="->", color=color,
                                connectionstyle=f"arc3,rad={rad}"))
            mid = (x + y) / 2
            ax.annotate(str(m.level(x, y)), (mid, 0),
                        textcoords="offset points",
                        xytext=(0, 30 + 26 * c_idx), ha="center",
                        fontsize=8, color=color)
        ax.plot([], [], color=color,
                label=f"cycle {c_idx + 1}: bound {cycle.bound}")
    ax.legend(loc="upper left", fontsize=8)
    ax.set_yticks([])
    ax.set_xlabel("vertex")
    ax.set_title("NO SOLUTION: certificate cycles with edge levels")
    path = out / "certificate.png"
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
    plt.close(fig)
    return path


def _write_embedding_csv(result: SolveResult, out: Path) -> Path:
    assert result.embedding is not None and result.d is not None
    path = out / "embedding.csv"
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["vertex", "position", "position_float"])
        for v, x in enumerate(result.embedding.positions, start=1):
            writer.writerow([v, str(x), float(x)])
        writer.writerow([])
        writer.writerow(["threshold", "value", "value_float"])
        for t, d in enumerate(result.d.values, start=1):
            writer.writerow([f"d{t}", str(d), float(d)])
    return path


def _write_certificate_csv(m: RobinsonMatrix, result: SolveResult,
                           out: Path) -> Path:
    assert result.certificate is not None
    path = out / "certificate.csv"
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["cycle", "step", "from", "to", "level", "constraint"])
        for c_idx, cycle in enumerate(result.certificate.cycles, start=1):
            verts = cycle.vertices
            for i in range(1, len(verts)):
                x, y = verts[i - 1], verts[i]
                writer.writerow(
                    [c_idx, i, x, y, m.level(x, y), _step_constraint(m, x, y)])
    return path


def _step_constraint(m: RobinsonMatrix, x: int, y: int) -> str:
    """Inequality a step contributes, in terms of the embedded gap."""
    t = m.level(x, y)
    if x < y:
        return f"gap({x},{y}) < d{t}"
    if t == m.k:
        return f"gap({y},{x}) > 0"
    return f"gap({y},{x}) > d{t + 1}"
