"""Print the published matrices next to freshly computed ones.

Usage: python scripts/reproduce_fixtures.py
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from fatkahler.cli import render_matrix  # noqa: E402
from fatkahler.different import kaehler_different_hf  # noqa: E402
from fatkahler.kaehler import delta_template_ci, hf_omega  # noqa: E402
from fatkahler.schemes import HilbertMatrix, first_difference, hf  # noqa: E402
import reference_data as ref  # noqa: E402


def show(title, computed, expected):
    status = "matches" if computed.tolist() == expected else "DIFFERS"
    print(f"== {title}: {status}")
    print(render_matrix(computed))


def main():
    show("HF of the mixed 5-point scheme", hf(ref.MIXED_Y, 6, 6), ref.HF_Y)
    show("HF of its thickening", hf(ref.MIXED_V, 9, 9), ref.HF_V)
    show("Omega of the mixed scheme", hf_omega(ref.MIXED_Y, 9, 9), ref.OMEGA_Y)
    delta = HilbertMatrix(tuple(map(tuple, first_difference(hf_omega(ref.TRIPLE_GRID_2X3, 9, 13)))))
    show("first difference of Omega, 3 x grid(2,3)", delta, ref.DELTA_TRIPLE_GRID_2X3)
    print("template equal:", delta_template_ci(2, 3, 3) == ref.DELTA_TRIPLE_GRID_2X3, "\n")
    show("Omega of 3 x (8-point ACI)", hf_omega(ref.TRIPLE_ACI, 14, 14), ref.OMEGA_TRIPLE_ACI)
    show("Kaehler different of the staircase", kaehler_different_hf(ref.STAIRCASE, 6, 6), ref.THETA_STAIRCASE)


if __name__ == "__main__":
    main()
