"""Figures rendered by ``dvsigma report``."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def gram_heatmap(gram, path, title="Gram matrix"):
    """Heatmap of an integer Gram matrix with a diverging colour scale."""
    g = np.array(gram, dtype=float)
    lim = max(1.0, float(np.abs(g).max()))
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(g, cmap="RdBu_r", vmin=-lim, vmax=lim)
    ax.set_title(title)
    ax.set_xlabel("basis index")
    ax.set_ylabel("basis index")
    fig.colorbar(im, ax=ax)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def character_plot(values, expected, labels, path, title="Character of the lattice action"):
    """Bars for the computed character next to markers for the expected one."""
    x = np.arange(len(values))
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(x, values, color="tab:blue", label="computed")
    ax.plot(x, expected, "o", color="tab:red", label="expected")
    ax.axhline(0, color="black", linewidth=0.6)
    ax.set_xticks(x)
    ax.set_xticklabels(labels)
    ax.set_xlabel("conjugacy class (element order)")
    ax.set_ylabel("trace")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return Path(path)


def render_report_figures(certificate: dict, outdir) -> list[str]:
    """Write the figures the available blocks support; returns the file names."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    blocks = certificate.get("blocks", {})
    written = []
    pic = blocks.get("picard")
    if pic and "gram" in pic.get("outputs", {}):
        written.append(gram_heatmap(pic["outputs"]["gram"], outdir / "picard_gram.png",
                                    "Picard lattice Gram matrix"))
        chi = pic["outputs"]["character_hperp_by_order"]
        labels = ["1", "2", "3", "5", "5", "6", "11", "11"]
        expected = [20, 4, 2, 0, 0, -2, -2, -2]
        written.append(character_plot(chi, expected, labels, outdir / "hperp_character.png",
                                      "Character of G on the complement of H"))
    hp = blocks.get("hperp")
    if hp and "gram" in hp.get("outputs", {}):
        written.append(gram_heatmap(hp["outputs"]["gram"], outdir / "hperp_gram.png",
                                    "Complement of H: Gram matrix"))
    return [p.name for p in written]
