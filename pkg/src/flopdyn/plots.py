"""Matplotlib figures for degree tables, orbit traces, and sampling reports.

Rendering uses the Agg backend and writes straight to files; figures are a
visual companion to the delimited output, never a data carrier, so plain
floats are fine here.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .dynamics import DegreeTable, RayTrace
from .primitivity import PrimitivityReport
from .serialize import quad_to_decimal_str


def degree_figure(table: DegreeTable, lam_plus, path) -> None:
    """Growth of P_k (log scale) next to both estimators against the limit."""
    fig, (ax_growth, ax_est) = plt.subplots(1, 2, figsize=(10, 4))

    ks = [row.k for row in table.rows]
    log10_p = [math.log10(row.P) for row in table.rows]
    ax_growth.plot(ks, log10_p, marker="o", color="#1f77b4")
    ax_growth.set_xlabel("k")
    ax_growth.set_ylabel("log10 P_k")
    ax_growth.set_title("pairing growth")

    lam = float(lam_plus)
    s_pts = [(row.k, float(row.s)) for row in table.rows if row.s is not None]
    t_pts = [(row.k, float(row.t)) for row in table.rows if row.t is not None]
    if s_pts:
        ax_est.plot(*zip(*s_pts), marker="o", label="s_k = P_k^(1/k)")
    if t_pts:
        ax_est.plot(*zip(*t_pts), marker="s", label="t_k = P_(k+1)/P_k")
    ax_est.axhline(lam, color="#b91c1c", linestyle="--",
                   label=f"lambda_plus = {lam:.6f}")
    ax_est.set_xlabel("k")
    ax_est.set_title("degree estimators")
    ax_est.legend()

    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def orbit_figure(trace: RayTrace, path) -> None:
    """Distance of the normalized iterate to the target eigenray, log scale."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ks = [row.k for row in trace.rows]
    dists = [float(row.distance) for row in trace.rows]
    positive = [(k, v) for k, v in zip(ks, dists) if v > 0]
    if positive:
        ax.semilogy(*zip(*positive), marker="o", color="#1f77b4")
    ax.set_xlabel("k")
    ax.set_ylabel("distance to target ray")
    target = quad_to_decimal_str(trace.target_slope, 8)
    ax.set_title(f"{trace.direction} orbit, target slope {target}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def report_figure(report: PrimitivityReport, path) -> None:
    """Histogram of reduction word lengths across the sampled classes."""
    fig, ax = plt.subplots(figsize=(6, 4))
    lengths = report.semiample_samples.word_lengths
    if lengths:
        top = max(lengths)
        bins = [x - 0.5 for x in range(top + 2)]
        ax.hist(lengths, bins=bins, color="#1f77b4", edgecolor="#111827")
    ax.set_xlabel("flop word length")
    ax.set_ylabel("sampled classes")
    d1 = quad_to_decimal_str(report.d1_exact, 8)
    ax.set_title(f"n={report.n}: {report.verdict}, d1 = {d1}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
