"""Success-probability curves for the (512, 256, 3, 5) benchmark layout.

Emits one CSV per jumping rate and initial state into results/, covering
a gamma grid spanning both critical rates (0.001 to 0.0055). Plot t
against p_success to see the two critical rates stand out.
"""

from pathlib import Path

from qwsearch.cli import main

GAMMAS = [0.001, 0.0015, 0.002, 0.0025, 0.003, 0.0035, 0.004, 0.0045, 0.005, 0.0055]
LAYOUT = ["--n1", "512", "--n2", "256", "--k1", "3", "--k2", "5"]
OUT_DIR = Path(__file__).resolve().parent.parent / "results"


def run() -> None:
    OUT_DIR.mkdir(exist_ok=True)
    for init in ("s", "sq"):
        for gamma in GAMMAS:
            out = OUT_DIR / f"success_{init}_gamma{gamma:g}.csv"
            code = main(
                [
                    "simulate",
                    *LAYOUT,
                    "--walk", "signless",
                    "--init", init,
                    "--gamma", str(gamma),
                    "--tmax", "80",
                    "--out", str(out),
                ]
            )
            assert code == 0, f"simulate failed for init={init} gamma={gamma}"
            print(f"wrote {out}")


if __name__ == "__main__":
    run()
