"""Session scripts: deterministic replays of interactive computations.

One command per line, ``#`` starts a comment.  Commands:

    ring <spec>                          set the current ring
    matrix <name> <R>x<C> [twists=r,..|c,..] : e11, e12 ; e21, e22
    matrix-subst <name> <src> v=expr [v=expr ...]
    set-entry <name> <i> <j> <expr>      1-based indices
    condext <name> <A> <B> <D>           condition ideal of adj(A)*D*adj(B)
    ideal <name> : g1 | g2 | ...
    subst <name> v=expr [...]            substitute in an ideal
    simple <name>                        strip y2/y3 monomial factors
    interred <name>                      interreduce the ideal
    assert-ideal-equal <name> : g1 | g2 | ...
    assert-dim <int> ...                 (reserved)
    print <name>
    echo <text>

Scripts are replayed sequentially; assertion failures are recorded and the
replay continues, so a report always covers the whole script.
"""

from __future__ import annotations

from . import groebner
from .extsolver import condext
from .groebner import Ideal
from .matfac import GradedMatrix
from .matio import parse_ring_spec


class SessionError(ValueError):
    pass


def _parse_assignments(parts, ring):
    mapping = {}
    for part in parts:
        name, _, value = part.partition("=")
        if not _:
            raise SessionError(f"expected var=value, got {part!r}")
        mapping[name.strip()] = ring.parse(value)
    return mapping


def run_script(text, name="<session>"):
    """Execute a session script; returns a report dict."""
    ring = None
    objects = {}
    log = []
    failures = []

    def need_ring():
        if ring is None:
            raise SessionError("no ring defined yet")
        return ring

    def get(kind, nm):
        if nm not in objects:
            raise SessionError(f"unknown object {nm!r}")
        obj = objects[nm]
        if kind is GradedMatrix and not isinstance(obj, GradedMatrix):
            raise SessionError(f"{nm!r} is not a matrix")
        if kind is Ideal and not isinstance(obj, Ideal):
            raise SessionError(f"{nm!r} is not an ideal")
        return obj

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            head, _, rest = line.partition(" ")
            rest = rest.strip()
            if head == "ring":
                ring = parse_ring_spec(rest)
                log.append(f"ring {ring!r}")
            elif head == "matrix":
                front, _, body = rest.partition(":")
                bits = front.split()
                nm, shape = bits[0], bits[1]
                nrows, ncols = (int(x) for x in shape.lower().split("x"))
                row_t = col_t = None
                for extra in bits[2:]:
                    if extra.startswith("twists="):
                        rt, _, ct = extra[len("twists="):].partition("|")
                        row_t = tuple(int(x) for x in rt.split(","))
                        col_t = tuple(int(x) for x in ct.split(","))
                rows = [[need_ring().parse(e) for e in r.split(",")]
                        for r in body.split(";") if r.strip()]
                if len(rows) != nrows or any(len(r) != ncols for r in rows):
                    raise SessionError(f"matrix {nm} does not match shape {shape}")
                objects[nm] = GradedMatrix(need_ring(), rows,
                                           row_t or (0,) * nrows,
                                           col_t or (0,) * ncols, check=False)
                log.append(f"matrix {nm} {nrows}x{ncols}")
            elif head == "matrix-subst":
                bits = rest.split()
                nm, src = bits[0], bits[1]
                mapping = _parse_assignments(bits[2:], need_ring())
                objects[nm] = get(GradedMatrix, src).subs(mapping)
                log.append(f"matrix {nm} = subst({src})")
            elif head == "set-entry":
                bits = rest.split(None, 3)
                nm, i, j, expr = bits[0], int(bits[1]), int(bits[2]), bits[3]
                m = get(GradedMatrix, nm)
                ent = [list(r) for r in m.entries]
                ent[i - 1][j - 1] = need_ring().parse(expr)
                objects[nm] = GradedMatrix(m.ring, ent, m.row_twists,
                                           m.col_twists, check=False)
                log.append(f"set-entry {nm}[{i},{j}]")
            elif head == "condext":
                nm, a, b, d = rest.split()
                objects[nm] = condext(get(GradedMatrix, a), get(GradedMatrix, b),
                                      get(GradedMatrix, d))
                log.append(f"condext {nm}: {len(objects[nm].gens)} generators")
            elif head == "ideal":
                front, _, body = rest.partition(":")
                nm = front.strip()
                gens = [need_ring().parse(g) for g in body.split("|") if g.strip()]
                objects[nm] = Ideal(need_ring(), gens)
                log.append(f"ideal {nm}: {len(gens)} generators")
            elif head == "subst":
                bits = rest.split()
                nm = bits[0]
                mapping = _parse_assignments(bits[1:], need_ring())
                ideal = get(Ideal, nm)
                objects[nm] = Ideal(ideal.ring,
                                    [g.subs(mapping) for g in ideal.gens])
                log.append(f"subst {nm}")
            elif head == "simple":
                ideal = get(Ideal, rest)
                gens = [g.strip_monomial_factors(("y2", "y3"))
                        for g in ideal.gens if not g.is_zero()]
                objects[rest] = Ideal(ideal.ring, gens)
                log.append(f"simple {rest}")
            elif head == "interred":
                ideal = get(Ideal, rest)
                objects[rest] = ideal.interreduced()
                log.append(f"interred {rest}")
            elif head == "assert-ideal-equal":
                front, _, body = rest.partition(":")
                nm = front.strip()
                ideal = get(Ideal, nm)
                golden = [ideal.ring.parse(g) for g in body.split("|") if g.strip()]
                ok = groebner.ideal_equal(list(ideal.gens), golden, ideal.ring)
                log.append(f"assert-ideal-equal {nm}: {'ok' if ok else 'FAILED'}")
                if not ok:
                    failures.append(f"{name}:{lineno}: ideal {nm} differs from "
                                    "the golden generators")
            elif head == "print":
                obj = objects.get(rest)
                if obj is None:
                    raise SessionError(f"unknown object {rest!r}")
                log.append(f"{rest} = {obj}")
            elif head == "echo":
                log.append(rest)
            else:
                raise SessionError(f"unknown command {head!r}")
        except SessionError as exc:
            raise SessionError(f"{name}:{lineno}: {exc}") from None
    return {"script": name, "ok": not failures, "failures": failures, "log": log}


def run_file(path):
    with open(path) as fh:
        return run_script(fh.read(), name=str(path))
