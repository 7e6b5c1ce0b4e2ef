"""Expected values for every matrix family: sizes, ranks, twists,
local-freeness, and golden Fitting ideals.

``notes`` records entries where the transcription was corrected so that the
factorization identity A*B = f*Id holds; the stored variant is the one that
passes verification.
"""

NAMED_POINTS = {
    "xi": ("affine", -1, 0),        # (-1 : 0 : 1)
    "lambda0": ("infinity",),       # (0 : 1 : 0)
    "s": ("singular",),             # (0 : 0 : 1), the node
}

# family name -> static expectations
FAMILIES = {
    "phi_lambda": {
        "size": 2, "rank": 1, "params": "point",
        "points": ("affine", "infinity", "singular", "parametric"),
        "row_twists": (1, 1), "col_twists": (2, 3),
        "locally_free": {"affine": True, "infinity": True, "singular": False},
    },
    "psi_lambda": {
        "size": 2, "rank": 1, "params": "point",
        "points": ("affine", "infinity", "singular", "parametric"),
        "row_twists": (0, 1), "col_twists": (2, 2),
        "locally_free": {"affine": True, "infinity": True, "singular": False},
    },
    "alpha_lambda": {
        "size": 3, "rank": 1, "params": "point",
        "points": ("affine", "singular", "parametric"),
        "row_twists": (1, 1, 1), "col_twists": (2, 2, 2),
        "locally_free": {"affine": True, "singular": False},
    },
    "beta_lambda": {
        "size": 3, "rank": 2, "params": "point",
        "points": ("affine", "singular", "parametric"),
        "row_twists": (0, 0, 0), "col_twists": (2, 2, 2),
        "locally_free": {"affine": True, "singular": False},
    },
    "delta_m": {
        "size": 6, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, 1, m, m, m),
        "col_twists": lambda m: (2, 2, 2, m + 1, m + 1, m + 1),
        "locally_free": False,
    },
    "delta_m_t": {
        "size": 6, "rank": 2, "params": "m",
        "row_twists": lambda m: tuple(-t for t in (2, 2, 2, m + 1, m + 1, m + 1)),
        "col_twists": lambda m: tuple(-t for t in (1, 1, 1, m, m, m)),
        "locally_free": False,
    },
    "alpha_psi1_m": {
        "size": 5, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, 1, m - 1, m),
        "col_twists": lambda m: (2, 2, 2, m + 1, m + 1),
        "locally_free": False,
    },
    "alpha_psi2_m": {
        "size": 5, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, 1, m - 1, m),
        "col_twists": lambda m: (2, 2, 2, m + 1, m + 1),
        "locally_free": False,
    },
    "alpha_phi1_m": {
        "size": 5, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, 1, m, m),
        "col_twists": lambda m: (2, 2, 2, m + 1, m + 2),
        "locally_free": False,
    },
    "alpha_phi2_m": {
        "size": 5, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, 1, m, m),
        "col_twists": lambda m: (2, 2, 2, m + 1, m + 2),
        "locally_free": False,
    },
    "alpha_psi_lambda": {
        "size": 5, "rank": 2, "params": "point",
        "points": ("affine-regular", "infinity"),
        "row_twists": (1, 1, 1, 0, 1), "col_twists": (2, 2, 2, 2, 2),
        "locally_free": False,
    },
    "phi_psi_lambda": {
        "size": 4, "rank": 2, "params": "point",
        "points": ("affine-regular", "infinity"),
        "row_twists": (1, 1, 0, 1), "col_twists": (2, 3, 2, 2),
        "locally_free": False,
    },
    "phi_psi1_m": {
        "size": 4, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, m - 1, m),
        "col_twists": lambda m: (2, 3, m + 1, m + 1),
        "locally_free": False,
        "notes": "entry (2,4) stored with the sign of entry (1,3); the "
                 "opposite-sign variant breaks A*B = f*Id",
    },
    "phi_psi2_m": {
        "size": 4, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, m - 1, m),
        "col_twists": lambda m: (2, 3, m + 1, m + 1),
        "locally_free": False,
        "notes": "entry (2,4) stored with the sign of entry (1,3); the "
                 "opposite-sign variant breaks A*B = f*Id",
    },
    "psi_phi1_m": {
        "size": 4, "rank": 2, "params": "m",
        "row_twists": lambda m: (0, 1, m, m),
        "col_twists": lambda m: (2, 2, m + 1, m + 2),
        "locally_free": False,
        "notes": "entry (4,4) stored as y1^2+y1*y3; the y1^2+y2*y3 variant "
                 "breaks A*B = f*Id",
    },
    "psi_phi2_m": {
        "size": 4, "rank": 2, "params": "m",
        "row_twists": lambda m: (0, 1, m, m),
        "col_twists": lambda m: (2, 2, m + 1, m + 2),
        "locally_free": False,
        "notes": "entry (4,4) stored as y1^2+y1*y3; the y1^2+y2*y3 variant "
                 "breaks A*B = f*Id",
    },
    "phi_phi1_m": {
        "size": 4, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, m, m),
        "col_twists": lambda m: (2, 3, m + 1, m + 2),
        "locally_free": False,
    },
    "phi_phi2_m": {
        "size": 4, "rank": 2, "params": "m",
        "row_twists": lambda m: (1, 1, m, m),
        "col_twists": lambda m: (2, 3, m + 1, m + 2),
        "locally_free": False,
    },
    "M2": {
        "size": 4, "rank": 2, "params": None,
        "row_twists": (1, 1, 1, 0), "col_twists": (3, 2, 2, 2),
        "locally_free": True,
    },
    "omega1_M2": {
        "size": 4, "rank": 2, "params": None,
        "row_twists": (3, 2, 2, 2), "col_twists": (4, 4, 4, 3),
        "locally_free": True,
    },
}

# golden Fitting ideals for the two-generated families (index 1)
FITTING_GOLDEN = {
    ("phi_lambda", "affine"): ("y1-{l1}*y3", "y2-{l2}*y3", "y3^2"),
    ("psi_lambda", "affine"): ("y1-{l1}*y3", "y2-{l2}*y3", "y3^2"),
    ("phi_lambda", "infinity"): ("y1", "y3", "y2^2"),
    ("psi_lambda", "infinity"): ("y1", "y3", "y2^2"),
    ("phi_lambda", "singular"): ("y1", "y2"),
    ("psi_lambda", "singular"): ("y1", "y2"),
}
