"""Buchberger's algorithm, normal forms, interreduction and ideal comparison.

One engine serves ideals and submodules of free modules: an element of a
free module is a dict mapping (component, exponent-tuple) to a Fraction.
Ideals are the rank-1 case.  Quotient rings are handled by appending the
ring's defining relations (times each free generator) to every computation.

Pair selection is the normal strategy -- smallest lcm total degree first,
ties broken by generator index -- so bases are reproducible.
"""

from __future__ import annotations

from fractions import Fraction

from .polyring import Polynomial, mono_div, mono_divides, mono_lcm, mono_mul

# ------------------------------------------------------------- vector layer


def poly_to_vec(p, comp=0):
    return {(comp, m): c for m, c in p.terms.items()}


def vec_to_poly(v, ring, comp=0):
    terms = {}
    for (c, m), coeff in v.items():
        if c != comp:
            raise ValueError("vector has terms outside the requested component")
        terms[m] = coeff
    return Polynomial(ring, terms, _clean=True)


def vec_lead(v, order):
    return max(v, key=lambda t: order.term_key(*t))


def vec_sub_mul(v, coeff, mono, w):
    """In-place v -= coeff * x^mono * w."""
    for (c, m), wc in w.items():
        key = (c, mono_mul(mono, m))
        s = v.get(key, 0) - coeff * wc
        if s:
            v[key] = s
        else:
            v.pop(key, None)


def vec_scale(v, coeff):
    return {k: coeff * c for k, c in v.items()}


class _Reducers:
    """Basis triples (lead, leadcoeff, vec) bucketed by lead component."""

    def __init__(self, triples=()):
        self.by_comp = {}
        self.triples = []
        for t in triples:
            self.add(t)

    def add(self, triple):
        self.triples.append(triple)
        self.by_comp.setdefault(triple[0][0], []).append(triple)

    def find(self, comp, mono):
        for triple in self.by_comp.get(comp, ()):
            if mono_divides(triple[0][1], mono):
                return triple
        return None


def vec_nf(v, reducers, order):
    """Full normal form of v against the reducers."""
    if not isinstance(reducers, _Reducers):
        reducers = _Reducers(reducers)
    work = dict(v)
    rem = {}
    while work:
        lead = vec_lead(work, order)
        comp, mono = lead
        hit = reducers.find(comp, mono)
        if hit is None:
            rem[lead] = work.pop(lead)
        else:
            blead, bcoeff, bvec = hit
            vec_sub_mul(work, work[lead] / bcoeff, mono_div(mono, blead[1]), bvec)
    return rem


def _prepare(vectors, order):
    out = []
    for v in vectors:
        if v:
            lead = vec_lead(v, order)
            out.append((lead, v[lead], v))
    return out


class ModuleGB:
    """Incremental Groebner basis of a submodule of a free module.

    ``rank1`` enables the product criterion (sound for ideals only).
    ``skip_component``: pairs whose leads both lie in components >= the bound
    are skipped; syzygy computations use this for the coefficient-tracking
    block, which needs no completion.
    """

    def __init__(self, order, rank1=False, skip_component=None):
        self.order = order
        self.rank1 = rank1
        self.skip_component = skip_component
        self.basis = _Reducers()
        self.pairs = set()

    def _admit(self, r):
        lead = vec_lead(r, self.order)
        k = len(self.basis.triples)
        for i, (blead, _, _) in enumerate(self.basis.triples):
            if blead[0] == lead[0]:
                self.pairs.add((i, k))
        self.basis.add((lead, r[lead], r))

    def reduce(self, v):
        return vec_nf(v, self.basis, self.order)

    def add(self, v, complete=True):
        """Reduce and admit v; returns True when v was not already a member."""
        r = self.reduce(v)
        if not r:
            return False
        self._admit(r)
        if complete:
            self.complete()
        return True

    def contains(self, v):
        return not self.reduce(v)

    def complete(self):
        triples = self.basis.triples
        pairs = self.pairs

        def pair_degree(ij):
            return sum(mono_lcm(triples[ij[0]][0][1], triples[ij[1]][0][1]))

        while pairs:
            i, j = min(pairs, key=lambda ij: (pair_degree(ij), ij))
            pairs.discard((i, j))
            (ci, mi), lci, vi = triples[i]
            (cj, mj), lcj, vj = triples[j]
            if (self.skip_component is not None
                    and ci >= self.skip_component and cj >= self.skip_component):
                continue
            lcm_m = mono_lcm(mi, mj)
            if self.rank1 and mono_mul(mi, mj) == lcm_m:
                continue
            if _chain_criterion(triples, pairs, i, j, ci, lcm_m):
                continue
            s = {}
            vec_sub_mul(s, Fraction(-1) / lci, mono_div(lcm_m, mi), vi)
            vec_sub_mul(s, Fraction(1) / lcj, mono_div(lcm_m, mj), vj)
            r = vec_nf(s, self.basis, self.order)
            if r:
                self._admit(r)

    def vectors(self):
        return [v for (_, _, v) in self.basis.triples]


def buchberger_vectors(vectors, order, rank1=False, skip_component=None):
    """Groebner basis of the module generated by the given vectors."""
    engine = ModuleGB(order, rank1=rank1, skip_component=skip_component)
    for v in vectors:
        if v:
            engine.add(v, complete=False)
    engine.complete()
    return engine.vectors()


def _chain_criterion(triples, pairs, i, j, comp, lcm_m):
    for k, (lead, _, _) in enumerate(triples):
        if k in (i, j) or lead[0] != comp:
            continue
        if mono_divides(lead[1], lcm_m):
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                return True
    return False


def minimalize_vectors(gb, order):
    """Drop basis elements whose lead is divisible by another element's lead."""
    prepared = _prepare(gb, order)
    prepared.sort(key=lambda t: order.term_key(*t[0]))
    out = []
    for lead, coeff, v in prepared:
        if not any(b[0][0] == lead[0] and mono_divides(b[0][1], lead[1]) for b in out):
            out.append((lead, coeff, v))
    return out


def interreduce_vectors(gb, order):
    """Tail-reduce a minimalized basis and make it monic."""
    mins = minimalize_vectors(gb, order)
    out = []
    for idx in range(len(mins)):
        others = _Reducers(mins[:idx] + mins[idx + 1:])
        r = vec_nf(mins[idx][2], others, order)
        if r:
            out.append(vec_scale(r, 1 / r[vec_lead(r, order)]))
    return out


# ------------------------------------------------------------- ideal layer


def groebner_basis(gens, ring, include_relations=True):
    """Reduced Groebner basis of the ideal (ring relations appended).

    Every S-polynomial of the result reduces to zero; generators are monic,
    tail-reduced, and no lead term divides another.
    """
    polys = [g for g in gens if not g.is_zero()]
    if include_relations:
        polys = polys + [r for r in ring.relations if not r.is_zero()]
    if not polys:
        return []
    vecs = [poly_to_vec(p) for p in polys]
    gb = buchberger_vectors(vecs, ring.order, rank1=True)
    gb = interreduce_vectors(gb, ring.order)
    out = [vec_to_poly(v, ring) for v in gb]
    out.sort(key=lambda p: ring.order.key(p.lead_monomial()))
    return out


def normal_form(p, basis):
    """Remainder of p on division by the basis; no term divisible by a lead."""
    if p.is_zero() or not basis:
        return p
    ring = p.ring
    prepared = _prepare([poly_to_vec(b) for b in basis if not b.is_zero()], ring.order)
    return vec_to_poly(vec_nf(poly_to_vec(p), prepared, ring.order), ring)


def interreduce(gens, ring):
    """Mutually reduce generators modulo each other and the ring relations.

    The generated ideal (over the quotient) is unchanged; on output no
    generator's lead term divides another's and coefficients are primitive
    integers with positive lead.
    """
    rel = list(ring.relation_gb()) if ring.relations else []
    current = [ring.nf(g) for g in gens] if rel else list(gens)
    current = [g for g in current if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        current.sort(key=lambda p: ring.order.key(p.lead_monomial()))
        for i in range(len(current)):
            r = normal_form(current[i], current[:i] + current[i + 1:] + rel)
            if r.terms != current[i].terms:
                changed = True
                if r.is_zero():
                    current.pop(i)
                else:
                    current[i] = r
                break
    return [g.primitive() for g in current]


def ideal_equal(gens_a, gens_b, ring):
    """True iff the generator lists span the same ideal over the ring."""
    gens_a = [g for g in gens_a if not g.is_zero()]
    gens_b = [g for g in gens_b if not g.is_zero()]
    gb_a = groebner_basis(gens_a, ring)
    gb_b = groebner_basis(gens_b, ring)
    return (all(normal_form(g, gb_b).is_zero() for g in gens_a)
            and all(normal_form(g, gb_a).is_zero() for g in gens_b))


def exact_divide(p, d):
    """Quotient q with p == q*d, or None when d does not divide p."""
    if p.is_zero():
        return p.ring.zero()
    ring = p.ring
    lead_d = d.lead_monomial()
    lc_d = d.lead_coeff()
    work = dict(p.terms)
    q = {}
    while work:
        m = max(work, key=ring.order.key)
        c = work[m]
        if not mono_divides(lead_d, m):
            return None
        qm = mono_div(m, lead_d)
        qc = c / lc_d
        q[qm] = qc
        for dm, dc in d.terms.items():
            key = mono_mul(qm, dm)
            s = work.get(key, 0) - qc * dc
            if s:
                work[key] = s
            else:
                work.pop(key, None)
    return Polynomial(ring, q, _clean=True)


def divide_modulo(p, d, ring):
    """Quotient q with p == q*d modulo the ring's parameter relations.

    Returns None when no such quotient exists.  Valid whenever {d} together
    with the parameter relations is already a Groebner basis, which holds for
    the hypersurface polynomial against parameter-only relations (the lead
    monomials live in disjoint blocks).
    """
    params = ring.param_gb() if ring.param_relations() else []
    order = ring.order
    divisors = _Reducers(_prepare([poly_to_vec(d)] + [poly_to_vec(r) for r in params],
                                  order))
    work = poly_to_vec(ring.param_nf(p))
    q = {}
    while work:
        lead = vec_lead(work, order)
        comp, mono = lead
        hit = divisors.find(comp, mono)
        if hit is None:
            return None
        blead, bcoeff, bvec = hit
        factor = work[lead] / bcoeff
        qm = mono_div(mono, blead[1])
        vec_sub_mul(work, factor, qm, bvec)
        if bvec is divisors.triples[0][2]:
            s = q.get(qm, 0) + factor
            if s:
                q[qm] = s
            else:
                q.pop(qm, None)
    return Polynomial(ring, q, _clean=True)


# ------------------------------------------------------------------- Ideal


class Ideal:
    """Ideal with cached Groebner basis over its ring."""

    def __init__(self, ring, gens):
        self.ring = ring
        parsed = [ring.parse(g) if isinstance(g, str) else g for g in gens]
        self.gens = tuple(g for g in parsed if not g.is_zero())
        self._gb = None

    def groebner(self):
        if self._gb is None:
            self._gb = groebner_basis(list(self.gens), self.ring)
        return self._gb

    def normal_form(self, p):
        return normal_form(p, self.groebner())

    def contains(self, p):
        return self.normal_form(p).is_zero()

    def is_zero(self):
        return all(self.ring.nf(g).is_zero() for g in self.gens)

    def interreduced(self):
        return Ideal(self.ring, interreduce(list(self.gens), self.ring))

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            raise ValueError("ring mismatch")
        return ideal_equal(self.gens, other.gens, self.ring)

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.gens) + ">"

    __repr__ = __str__
