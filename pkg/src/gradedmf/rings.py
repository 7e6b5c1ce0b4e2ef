"""Standard rings for the nodal-cubic hypersurface and its parametric variants."""

from __future__ import annotations

from .polyring import Ring

F_CUBIC = "y1^3+y1^2*y3-y2^2*y3"
CURVE_RELATION = "a^3+a^2-b^2"


def ambient_ring():
    """Q[y1,y2,y3], degrevlex, no relations."""
    return Ring(["y1", "y2", "y3"])


def nodal_ring():
    """The hypersurface quotient Q[y1,y2,y3]/<f> with f the nodal cubic."""
    return ambient_ring().with_relations([F_CUBIC])


def parametric_ring():
    """Q[y1,y2,y3,a,b] with f and the curve relation a^3+a^2-b^2."""
    base = Ring(["y1", "y2", "y3", "a", "b"], blocks=(3, 2),
                weights=(1, 1, 1, 0, 0))
    return base.with_relations([F_CUBIC, CURVE_RELATION])


def extension_ring(n_unknowns):
    """Session ring with unknown entry coefficients d1..dn and parameters a, b."""
    names = ["y1", "y2", "y3"] + [f"d{i}" for i in range(1, n_unknowns + 1)] + ["a", "b"]
    weights = (1, 1, 1) + (0,) * n_unknowns + (0, 0)
    base = Ring(names, blocks=(3, n_unknowns, 2), weights=weights)
    return base.with_relations([F_CUBIC, CURVE_RELATION])


def f_polynomial(ring):
    """The nodal cubic inside any ring containing y1, y2, y3."""
    return ring.parse(F_CUBIC)
