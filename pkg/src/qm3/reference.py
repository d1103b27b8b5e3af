"""Reference values, used only as test and report oracles.

Forms are written in the little language of :func:`qm3.wz.parse_form`;
nothing in the library computes from these.
"""

# Action of (K, X+, X-) on the monomials of the plane.
ACTION_TABLE = {
    "x^2": ("q^2 x^2", "0", "-q^2 x y"),
    "x y": ("x y", "q x^2", "q y^2"),
    "y^2": ("q y^2", "-q^2 x y", "0"),
    "x": ("q x", "0", "y"),
    "y": ("q^2 y", "x", "0"),
    "x^2 y^2": ("x^2 y^2", "-q y", "-q x"),
    "x^2 y": ("q x^2 y", "q^2", "-x y^2"),
    "x y^2": ("q^2 x y^2", "-x^2 y", "q^2"),
    "1": ("1", "0", "0"),
}

OMEGA_TABLES = {
    "omega-3o2": {
        "x^2 y dx": ("q^2 x^2 y dx", "q^2 dx", "-q^2 x y^2 dx + x^2 y dy"),
        "x y^2 dx": ("x y^2 dx", "-x^2 y dx", "q dx + x y^2 dy"),
        "1 dx": ("q dx", "0", "dy"),
        "x^2 y dy": ("x^2 y dy", "q^2 dy + q x^2 y dx", "-q x y^2 dy"),
        "x y^2 dy": ("q x y^2 dy", "-x^2 y dy + q^2 x y^2 dx", "dy"),
        "1 dy": ("q^2 dy", "dx", "0"),
    },
    "omega-3e2": {
        "x dx": ("q^2 x dx", "0", "q^2 y dx + x dy"),
        "y dx": ("y dx", "x dx", "y dy"),
        "x^2 y^2 dx": ("q x^2 y^2 dx", "-q y dx", "-x dx + x^2 y^2 dy"),
        "x dy": ("x dy", "q x dx", "q y dy"),
        "y dy": ("q y dy", "x dy + q^2 y dx", "0"),
        "x^2 y^2 dy": ("q^2 x^2 y^2 dy", "-q y dy + x^2 y^2 dx", "-q^2 x dy"),
    },
    "omega-3i2": {
        "x^2 dx": ("x^2 dx", "0", "-q x y dx + x^2 dy"),
        "x y dx": ("q x y dx", "q x^2 dx", "y^2 dx + x y dy"),
        "y^2 dx": ("q^2 y^2 dx", "-q^2 x y dx", "y^2 dy"),
        "x^2 dy": ("q x^2 dy", "q^2 x^2 dx", "-x y dy"),
        "x y dy": ("q^2 x y dy", "q x^2 dy + x y dx", "q^2 y^2 dy"),
        "y^2 dy": ("y^2 dy", "-q^2 x y dy + q y^2 dx", "0"),
    },
}

# Submodules of the plane.
PLANE_BLOCKS = {
    "3_i": ("x^2", "x y", "y^2"),
    "3_e": ("x", "y", "x^2 y^2"),
    "3_o": ("x^2 y", "1", "x y^2"),
}

# Splittings of the one-form blocks, with explicit basis vectors.
DECOMPOSITIONS = {
    "omega-3o2": [
        ("3_i", ("q x^2 y dx - dy", "-x^2 y dy + q^2 x y^2 dx", "-q dx + q x y^2 dy")),
        ("3_e", ("dx", "dy", "x^2 y dy + q x y^2 dx")),
    ],
    "omega-3e2": [
        ("3_i", ("y dy", "q x dy + y dx", "x dx")),
        ("3_o", ("x^2 y^2 dy - x dx", "x dy - q y dx", "y dy - q^2 x^2 y^2 dx")),
    ],
    "omega-3i2": [
        ("6_e", ("x^2 dx", "x y dx", "y^2 dx", "x^2 dy", "x y dy", "y^2 dy")),
    ],
}

# Chain of submodules inside the 6_e block of one-forms.
CHAIN_6E = [
    ("2", ("-q^2 x^2 dy + x y dx", "-q x y dy + y^2 dx")),
    ("3_e", ("-q^2 x^2 dy + x y dx", "-q x y dy + y^2 dx", "x^2 dx")),
    ("4_e", ("-q^2 x^2 dy + x y dx", "-q x y dy + y^2 dx", "x^2 dx", "y^2 dy")),
    ("6_e", ("x^2 dx", "x y dx", "y^2 dx", "x^2 dy", "x y dy", "y^2 dy")),
]

# Hermitian one-forms, one per free real coefficient.
HERMITIAN_ONEFORMS = {
    "omega_3i": ("q x^2 y dx - dy", "q^2 x y^2 dx - x^2 y dy", "q dx - q x y^2 dy"),
    "omega_3i'": ("q^2 y dy", "y dx + q x dy", "q^2 x dx"),
    "omega_3e": ("dy", "q x y^2 dx + x^2 y dy", "dx"),
    "omega_3o": ("q x dx - q x^2 y^2 dy", "q^2 y dx - q x dy", "q^4 x^2 y^2 dx - q^2 y dy"),
    "omega_6e": (
        "x y dx - q^2 x^2 dy",
        "y^2 dx - q x y dy",
        "q x^2 dx",
        "q y^2 dy",
        "q^2 x y dx + q^2 x^2 dy",
        "q x y dy + q y^2 dx",
    ),
}
