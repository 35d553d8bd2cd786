"""Runtime comparison across the three walks on a lopsided layout.

Sweeps the left marked count on (1024, 256, k1, 5) and emits the five
deterministic-search runtimes plus the fastest-walk label per row. The
label switches from signless-right to adjacency at k1 = 12 and from
adjacency to Laplacian-left at k1 = 34.
"""

from pathlib import Path

from qwsearch.cli import main

OUT_DIR = Path(__file__).resolve().parent.parent / "results"


def run() -> None:
    OUT_DIR.mkdir(exist_ok=True)
    out = OUT_DIR / "runtime_regimes.csv"
    code = main(
        [
            "runtimes",
            "--n1", "1024", "--n2", "256", "--k1", "1", "--k2", "5",
            "--sweep", "k1",
            "--sweep-min", "1",
            "--sweep-max", "60",
            "--out", str(out),
        ]
    )
    assert code == 0
    print(f"wrote {out}")


if __name__ == "__main__":
    run()
