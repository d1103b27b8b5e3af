"""Solve for the star on one-forms and for the invariant scalar product."""

from qm3 import star, wz
from qm3.qplane import MONOMIALS, PlaneElt, mono_name

sol = star.solve_star_on_forms()
print("star on one-forms: dx* =", sol.dx_star.text(), " dy* =", sol.dy_star.text())
print("dx dy star:", sol.star(wz.DXDY).text())

g = star.solve_invariant_gram()
print("\nfree parameters before normalizing:", g.solution_dim)
for (r, s), value in zip(MONOMIALS, g.unit_row):
    print(f"  (1, {mono_name(r, s):8}) = {value.literal()}")

xy = PlaneElt.monomial(1, 1)
print("(xy, xy) =", g.gram.inner(xy, xy).literal())
print("invariance:", star.verify_gram_invariance().passed)
alt = star.check_alternative_invariance_forces_zero()
print("other ordering of star and antipode leaves", alt.solution_dim, "solutions")

print("\nhermitian one-forms:")
for fam in star.hermitian_oneforms().families:
    for f in fam.forms:
        print(f"  {fam.name:10} {f.text()}")
