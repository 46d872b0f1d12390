"""Walk through the 2m-line Boroczky arrangements.

Prints the singular-point counts, the simple points on each pencil line, and
where the simple point of each transversal sits.
"""
from math import comb

from arrangio.analysis import dirac_motzkin_check, line_profiles, simple_point_partners
from arrangio.generators import boroczky
from arrangio.nbc import equiv_2m_verdict

for m in range(3, 9):
    A = boroczky(m)
    P = A.supersolvable_witness()
    print(f"m={m}: n={A.n}  t_k={A.t_k}  |Sing|={A.sing_count} (C(m+1,2)+1 = {comb(m + 1, 2) + 1})")

    dm = dirac_motzkin_check(A)
    print(f"   simple points {dm.lhs} vs n/2 = {dm.rhs}, equality: {dm.equality}")

    u = [p.u for p in line_profiles(A, P) if p.through_modular]
    print(f"   simple points on pencil lines: {u}")

    partners = simple_point_partners(A, P)
    print("   transversal j meets its simple point on pencil line:",
          {j - m: v[0] for j, v in partners.items()})

# relabel the lines and ask for a lattice isomorphism back
A = boroczky(5)
B = type(A)(list(reversed(A.lines)), A.spec)
v = equiv_2m_verdict(A, B)
print("\nboroczky(5) vs reversed copy:", v.equivalent, v.witness)
