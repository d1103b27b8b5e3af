"""Walk through the plane, the action of H, and the split of one-forms.

Run with ``python demos/plane_and_forms.py``.
"""

from qm3 import hopf, reps, wz
from qm3.qplane import PlaneElt, to_matrix
from qm3.reference import DECOMPOSITIONS, PLANE_BLOCKS
from qm3.report import render_table

x, y = PlaneElt.monomial(1, 0), PlaneElt.monomial(0, 1)
print("x y =", (x * y).text(), "  y x =", (y * x).text())
print("x as a matrix:", [[c.literal() for c in row] for row in to_matrix(x)])

Xp, Xm, K = hopf.H_gens()
H = hopf.build_H()
delta = " + ".join(f"({c.literal()}) {H.labels[i]} (x) {H.labels[j]}" for (i, j), c in sorted(Xp.coproduct().items()))
print("\nDelta(X+) =", delta)
print("\nAction on the plane:")
print(render_table("action-4.2"))

print("\nThe plane splits into three blocks:")
for name, basis in PLANE_BLOCKS.items():
    print(f"  {', '.join(basis):18} -> {reps.classify(reps.plane_module(basis)).text()}")

form = wz.parse_form("x^2 y dx - dy")
print("\nd(x^2 y) =", wz.wz_d(wz.parse_form("x^2 y")).text())
print("X- acting on", form.text(), "gives", wz.h_act_form(Xm, form).text())

for name, parts in DECOMPOSITIONS.items():
    rep = reps.decompose_block(name, parts)
    print(f"\n{name}: " + " + ".join(p.classified for p in rep.parts))
    print(reps.render_decomposition(rep))
