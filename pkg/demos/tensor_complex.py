"""Gauge-field style one-forms in the product of ordinary forms with the WZ calculus."""

from qm3 import wz
from qm3.derham import (ExtForm, Poly, XiElt, XiOneForm, mfield_from_plane, pack_oneform,
                        unpack_oneform, xi_d, xi_grade_decompose)
from qm3.qplane import PlaneElt

n = 4
t0 = Poly.coord(n, 0)
dx0 = XiElt.from_ext(ExtForm.dx(n, 0))
x = XiElt.from_wz(wz.parse_form("x"))

# a_0 = t0 * x  (matrix-valued), phi_y = y^2
zero = XiOneForm.zero(n)
a0 = tuple(p * t0 for p in mfield_from_plane(PlaneElt.monomial(1, 0), n))
omega = XiOneForm((a0,) + zero.a_mu[1:], zero.phi_x, mfield_from_plane(PlaneElt.monomial(0, 2), n))
u = pack_oneform(omega)
print("one-form:\n" + u.text())
assert unpack_oneform(u) == omega

F = xi_d(u) + u * u
print("\nd w + w w by block:")
for (p, r), blk in xi_grade_decompose(F)[2].items():
    print(f"  ordinary degree {p}, WZ degree {r}:\n    " + blk.text().replace("\n", "\n    "))
print("\nd(d w) vanishes:", xi_d(xi_d(u)).is_zero())
print("sign check, d(dx0 x) =", xi_d(dx0 * x).text())
