"""Table renderers and the markdown report."""

from __future__ import annotations

import json

from . import hopf, reps, star, wz
from .qplane import MONOMIALS, mono_name
from .reference import CHAIN_6E, DECOMPOSITIONS, PLANE_BLOCKS

TABLES = ("action-4.2", "omega-3o2", "omega-3e2", "omega-3i2", "pairing", "gram")
GEN_NAMES = ("K", "X+", "X-")


def _grid(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    fmt = lambda r: " | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([fmt(header), sep] + [fmt(r) for r in rows])


def _action_rows(name: str) -> list[tuple[str, list[str]]]:
    if name == "action-4.2":
        return [(row, [z.text() for z in imgs]) for row, imgs in reps.action_table().items()]
    return [(row.text(), [f.text() for f in imgs]) for row, imgs in wz.omega_tables()[name]]


def table_data(name: str) -> dict:
    if name in ("action-4.2", "omega-3o2", "omega-3e2", "omega-3i2"):
        return {"rows": [{"element": r, **dict(zip(GEN_NAMES, imgs))} for r, imgs in _action_rows(name)]}
    if name == "pairing":
        return hopf.pairing_json()
    if name == "gram":
        return star.solve_invariant_gram().gram.to_json()
    raise KeyError(name)


def render_table(name: str, fmt: str = "text") -> str:
    if name not in TABLES:
        raise KeyError(name)
    if fmt == "json":
        return json.dumps(table_data(name), indent=2, sort_keys=True)
    if name in ("action-4.2", "omega-3o2", "omega-3e2", "omega-3i2"):
        return _grid(["z", "K z", "X+ z", "X- z"], [[r] + imgs for r, imgs in _action_rows(name)])
    if name == "pairing":
        H, F = hopf.build_H(), hopf.build_F()
        m = hopf.pairing_matrix()
        rows = [[H.labels[i]] + [c.literal() for c in row] for i, row in enumerate(m)]
        return _grid(["<h,f>"] + list(F.labels), rows) + f"\nrank: {hopf.pairing_rank()}"
    g = star.solve_invariant_gram().gram
    names = [mono_name(r, s) for r, s in MONOMIALS]
    return _grid(["(u,v)"] + names, [[names[i]] + [c.literal() for c in row] for i, row in enumerate(g.entries)])


def _code(text: str) -> str:
    return f"```\n{text}\n```"


def _status(ok: bool) -> str:
    return "verified" if ok else "FAILED"


def build_report() -> str:
    out = ["# Reduced quantum plane at a cube root of unity: computed tables", ""]
    out.append("All values are exact in Q(w), w a primitive cube root of unity; "
               "q = w and q^2 = -1 - w.")

    out += ["", "## Quantum plane", ""]
    out.append("Basis x^r y^s, 0 <= r, s <= 2, with x y = q y x and x^3 = y^3 = 1. "
               "Products are cross-checked against 3x3 matrices.")

    out += ["", "## Hopf algebras and their pairing", ""]
    F, H = hopf.build_F(), hopf.build_H()
    for hd in (F, H):
        res = hopf.verify_hopf(hd)
        out.append(f"- {hd.name}: dimension {hd.dim}; Hopf axioms {_status(all(r.passed for r in res.values()))}")
    dual = hopf.verify_duality()
    out.append(f"- pairing laws {_status(all(r.passed for r in dual.values()))}; rank {hopf.pairing_rank()}")
    out += ["", _code(render_table("pairing"))]

    out += ["", "## Action on the plane", "", _code(render_table("action-4.2"))]
    out.append("")
    for tag, basis_ in PLANE_BLOCKS.items():
        label = reps.classify(reps.plane_module(basis_))
        out.append(f"- span({', '.join(basis_)}) : {label.text()}")

    out += ["", "## Differential calculus", ""]
    out.append("Generators x, y, dx, dy; coordinates written to the left of differentials. "
               "Dimensions 9, 18, 9 in degrees 0, 1, 2.")
    for name in ("omega-3o2", "omega-3e2", "omega-3i2"):
        out += ["", f"### {name}", "", _code(render_table(name))]

    out += ["", "## Decompositions", ""]
    out.append("Solid arrows `--X+-->`, dashed arrows `..X-..>`.")
    for name, parts in DECOMPOSITIONS.items():
        rep = reps.decompose_block(name, parts)
        out += ["", f"### {name}: {' + '.join(p.classified or p.label for p in rep.parts)} ({_status(rep.passed)})", ""]
        out.append(_code(reps.render_decomposition(rep)))
    mod, rows = reps.omega_block("omega-3i2")
    chain = reps.verify_chain(mod, [(lbl, reps.block_coordinates(rows, fs)) for lbl, fs in CHAIN_6E])
    out += ["", "Submodule chain in the 6_e block: 0 -> " + " -> ".join(r[2] for r in chain)
            + f" ({_status(all(r[1] for r in chain))})"]

    out += ["", "## Stars", ""]
    sol = star.solve_star_on_forms()
    out.append("- X+* = -q^2 X+, X-* = -q X-, K* = K; a, b, c, d, x, y are self-adjoint")
    out.append(f"- duality with the antipode: {_status(star.verify_star_duality().passed)} on 729 pairs")
    out.append(f"- compatibility with the action on the plane: {_status(star.verify_action_star('M').passed)}")
    out.append(f"- solved star on one-forms: dx* = {sol.dx_star.text()}, dy* = {sol.dy_star.text()} "
               f"(solution space dimension {sol.solution_dim})")
    out.append(f"- compatibility with the action on forms: {_status(star.verify_action_star('Omega').passed)}")
    out.append(f"- d and star: {_status(all(r.passed for r in star.verify_d_star().values()))}")

    out += ["", "## Invariant scalar product", ""]
    g = star.solve_invariant_gram()
    out.append(f"- solution space before normalization: dimension {g.solution_dim}")
    out.append("- nonvanishing (1, z): " + ", ".join(mono_name(*MONOMIALS[i]) for i in g.nonvanishing))
    out.append(f"- (1, x^2 y^2) = {g.unit_row[8].literal()} with (xy, xy) = 1")
    out.append(f"- invariance under all 27 basis elements: {_status(star.verify_gram_invariance().passed)}")
    alt = star.check_alternative_invariance_forces_zero()
    out.append(f"- the alternative invariance condition admits only the zero product: {_status(alt.passed)}")
    out += ["", _code(render_table("gram"))]

    out += ["", "## Hermitian one-forms", ""]
    herm = star.hermitian_oneforms()
    for fam in herm.families:
        out.append(f"- {fam.name}: " + "; ".join(f.text() for f in fam.forms)
                   + f" ({_status(all(fam.hermitian))})")
    out.append(f"- combined complex rank {herm.rank} of 18")

    out += ["", "## Tensor complex with ordinary forms", ""]
    from . import derham

    out.append(f"- basis slots over scalar functions in grade 1 (four coordinates): {derham.xi_slots(1)}")
    out.append("- sign convention: d(w (x) r) = dw (x) r + (-1)^deg(w) w (x) dr")
    out.append("")
    return "\n".join(out)
