"""Slopes of small point sets and the dual arrangement they produce."""
import random
from fractions import Fraction

from arrangio.slopes import PointConfig, slope_theorem_check

configs = {
    "unit square": [(0, 0), (1, 0), (0, 1), (1, 1)],
    "triangle": [(0, 0), (1, 0), (0, 1)],
    "3x2 grid": [(x, y) for x in range(3) for y in range(2)],
}
rng = random.Random(1)
configs["random"] = [(Fraction(rng.randint(-9, 9), 2), Fraction(rng.randint(-9, 9), 3)) for _ in range(6)]

for name, pts in configs.items():
    rep = slope_theorem_check(PointConfig(tuple(dict.fromkeys(pts))))
    d = rep.to_dict()
    print(f"{name:12s} n={d['n']} w={d['w']}  |A_PD|={d['apd_size']}  "
          f"m(P_mod)={d['m_pmod']}  all checks: {rep.ok}")
