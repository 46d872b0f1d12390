"""Refute B(m) over the rationals and realize it where the coefficient vanishes.

Over Q the propagation ends in (m - 1)(a1 b2 - a2 b1) = 0.  Over F_p with
p | m - 1 that identity is harmless, and whether B(m) is realized depends on
F_p^2 having room for m distinct directions.
"""
from arrangio.fields import QQ, PrimeField
from arrangio.ssconfig import Realization, bm_template, realize_or_refute, replay, search_classify

for m in range(3, 9):
    cert = realize_or_refute(bm_template(m), QQ)
    print(f"B({m}) over Q: {cert.identity}   replays: {replay(cert, bm_template(m))}")

print()
for m, p in [(3, 2), (4, 3), (5, 2), (5, 5), (6, 5)]:
    r = realize_or_refute(bm_template(m), PrimeField(p))
    if isinstance(r, Realization):
        coords = {i: tuple(str(x) for x in v) for i, v in r.coordinates.items()}
        print(f"B({m}) over F_{p}: realized {coords}")
    else:
        print(f"B({m}) over F_{p}: {r.kind} failure at {r.failing}")

print()
for c in search_classify(5, require_surjective=True).classes:
    r = realize_or_refute(c.representative, QQ)
    tag = "B(5)" if c.is_bm else f"contains B{c.contains_bk}" if c.contains_bk else "no B(k) inside"
    print(f"{c.representative}  orbit {c.orbit_size:3d}  {tag:16s} -> {type(r).__name__}")
