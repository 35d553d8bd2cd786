"""Eigenvector overlap profiles for the (512, 256, 3, 5) benchmark layout.

For each probe (uniform state, left-marked class, right-marked class, and
the signless-Laplacian eigenvector) emits a CSV of |<probe|psi_n>|^2 for
the four reduced eigenvectors across a log-spaced gamma grid. The two
crossings near gamma = 0.002 and 0.004 mark the critical rates.
"""

from pathlib import Path

from qwsearch.cli import main

LAYOUT = ["--n1", "512", "--n2", "256", "--k1", "3", "--k2", "5"]
OUT_DIR = Path(__file__).resolve().parent.parent / "results"


def run() -> None:
    OUT_DIR.mkdir(exist_ok=True)
    for probe in ("s", "ml", "mr", "sq"):
        out = OUT_DIR / f"overlaps_{probe}.csv"
        code = main(
            [
                "overlaps",
                *LAYOUT,
                "--walk", "signless",
                "--probe", probe,
                "--gamma-min", "0.001",
                "--gamma-max", "0.0055",
                "--gamma-count", "200",
                "--out", str(out),
            ]
        )
        assert code == 0, f"overlaps failed for probe={probe}"
        print(f"wrote {out}")


if __name__ == "__main__":
    run()
