"""Figures for the report subcommands, rendered to files with the Agg backend."""

from __future__ import annotations

from typing import Mapping, Sequence


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def _save(fig, path: str) -> None:
    # fixed metadata keeps repeated renders byte-identical where the format allows
    meta = {"Software": None} if str(path).lower().endswith(".png") else {"Creator": None, "CreationDate": None}
    fig.savefig(path, metadata=meta)


def plot_nset(rows: Sequence[tuple[int, Sequence[int]]], path: str) -> None:
    """Scatter of every n-value against its prime, colored by p mod 8."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8, 5))
    for res, color in ((1, "tab:blue"), (3, "tab:orange"), (5, "tab:green"), (7, "tab:red")):
        pts = [(p, n) for p, vals in rows if p % 8 == res for n in vals]
        if pts:
            ax.scatter([a for a, _ in pts], [b for _, b in pts], s=12, color=color, label=f"p = {res} mod 8")
    ax.set_xlabel("p")
    ax.set_ylabel("n(x), x in X_p")
    ax.legend()
    fig.tight_layout()
    _save(fig, path)
    plt.close(fig)


def plot_nmin(values: Mapping[int, int], path: str) -> None:
    """Smallest n-value against p on log-log axes."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 5))
    ps = sorted(values)
    ax.loglog(ps, [values[p] for p in ps], "o-")
    ax.set_xlabel("p")
    ax.set_ylabel("min n(X_p)")
    fig.tight_layout()
    _save(fig, path)
    plt.close(fig)


def plot_ball_layers(layer_sizes: Sequence[int], path: str) -> None:
    """Sphere sizes of the projective Cayley ball, on a log scale."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 5))
    radii = list(range(len(layer_sizes)))
    ax.semilogy(radii, list(layer_sizes), "o-", label="observed")
    free = [1] + [4 * 3 ** (r - 1) for r in radii[1:]]
    ax.semilogy(radii, free, "--", color="gray", label="free group")
    ax.set_xlabel("word length")
    ax.set_ylabel("new elements")
    ax.legend()
    fig.tight_layout()
    _save(fig, path)
    plt.close(fig)
