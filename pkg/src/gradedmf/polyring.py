"""Exact multivariate polynomial arithmetic over Q with graded structure.

Monomials are plain exponent tuples.  A ring fixes the variable names, a
block degrevlex monomial order, one grading weight per variable and an
optional list of defining relations (the quotient-ring case).  Polynomials
are immutable term maps from exponent tuple to nonzero Fraction; all
arithmetic is exact and never reduces modulo the relations -- reduction is
always an explicit normal-form call.

Grading weights let parameter variables (weight 0) coexist with the
geometric variables (weight 1): homogeneity and twist bookkeeping only see
the weight-1 part.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Monomial = tuple  # exponent tuple, one slot per ring variable


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """Quotient a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class MonomialOrder:
    """Block degrevlex; earlier blocks dominate.

    ``blocks`` lists the number of variables per block.  For module terms a
    position-over-term flag decides whether the component or the monomial is
    compared first; lower component index always wins ties.
    """

    def __init__(self, blocks, position_over_term=True):
        self.blocks = tuple(blocks)
        self.position_over_term = position_over_term
        self._slices = []
        start = 0
        for n in self.blocks:
            self._slices.append((start, start + n))
            start += n
        self.nvars = start

    def key(self, mono):
        """Sort key; larger key means larger monomial."""
        out = []
        for lo, hi in self._slices:
            seg = mono[lo:hi]
            out.append(sum(seg))
            out.append(tuple(-e for e in reversed(seg)))
        return tuple(out)

    def term_key(self, comp, mono):
        if self.position_over_term:
            return (-comp, self.key(mono))
        return (self.key(mono), -comp)

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.blocks == other.blocks
                and self.position_over_term == other.position_over_term)

    def __repr__(self):
        return f"MonomialOrder(blocks={self.blocks})"


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Ring:
    """Polynomial ring over Q, optionally with defining relations.

    Relations are appended to every Groebner computation run over the ring;
    plain polynomial arithmetic ignores them.  Relations of grading degree 0
    (relations among weight-0 parameters) are available separately because
    exact matrix-factorization identities may use those but never the
    hypersurface equation itself.
    """

    def __init__(self, names, blocks=None, weights=None):
        self.names = tuple(names)
        self.nvars = len(self.names)
        if len(set(self.names)) != self.nvars:
            raise ValueError("duplicate variable names")
        self.order = MonomialOrder(blocks if blocks else (self.nvars,))
        if self.order.nvars != self.nvars:
            raise ValueError("order blocks do not cover the variables")
        self.weights = tuple(weights) if weights is not None else (1,) * self.nvars
        if len(self.weights) != self.nvars:
            raise ValueError("one grading weight per variable required")
        self.index = {nm: i for i, nm in enumerate(self.names)}
        self.relations = ()
        self._rel_gb = None
        self._param_gb = None

    # -- construction -----------------------------------------------------

    def with_relations(self, rels):
        """New ring with the given defining relations (str or Polynomial)."""
        ring = Ring(self.names, self.order.blocks, self.weights)
        parsed = []
        for r in rels:
            p = ring.parse(r) if isinstance(r, str) else Polynomial(ring, r.terms)
            if not p.is_zero():
                parsed.append(p)
        ring.relations = tuple(parsed)
        return ring

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name):
        if name not in self.index:
            raise KeyError(f"unknown variable {name!r}")
        exps = [0] * self.nvars
        exps[self.index[name]] = 1
        return Polynomial(self, {tuple(exps): Fraction(1)})

    def gens(self):
        return [self.var(nm) for nm in self.names]

    def mono_degree(self, mono):
        return sum(e * w for e, w in zip(mono, self.weights))

    # -- relations ---------------------------------------------------------

    def relation_gb(self):
        """Reduced Groebner basis of the defining relations (cached)."""
        if self._rel_gb is None:
            from . import groebner
            self._rel_gb = groebner.groebner_basis(list(self.relations), self,
                                                   include_relations=False)
        return self._rel_gb

    def param_relations(self):
        return [r for r in self.relations if r.degree() == 0]

    def param_gb(self):
        """Basis of the grading-degree-0 relations only (cached)."""
        if self._param_gb is None:
            from . import groebner
            self._param_gb = groebner.groebner_basis(self.param_relations(), self,
                                                     include_relations=False)
        return self._param_gb

    def nf(self, p):
        """Normal form modulo all defining relations."""
        if not self.relations:
            return p
        from . import groebner
        return groebner.normal_form(p, self.relation_gb())

    def param_nf(self, p):
        """Normal form modulo the parameter relations only."""
        if not self.param_relations():
            return p
        from . import groebner
        return groebner.normal_form(p, self.param_gb())

    # -- parsing -----------------------------------------------------------

    def parse(self, text):
        return _parse_polynomial(self, text)

    def __eq__(self, other):
        return (isinstance(other, Ring)
                and self.names == other.names
                and self.order == other.order
                and self.weights == other.weights
                and [r.terms for r in self.relations] == [r.terms for r in other.relations])

    def __repr__(self):
        rel = f", {len(self.relations)} relations" if self.relations else ""
        return f"Ring({','.join(self.names)}{rel})"


class Polynomial:
    """Sparse exact polynomial; term map exponent-tuple -> nonzero Fraction."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring, terms, _clean=False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            self.terms = {m: Fraction(c) for m, c in terms.items() if c != 0}
        self._lead = None

    # -- predicates and degrees --------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in m) for m in self.terms)

    def constant_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def degree(self):
        """Largest grading-weighted term degree; None for the zero polynomial."""
        if not self.terms:
            return None
        md = self.ring.mono_degree
        return max(md(m) for m in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        md = self.ring.mono_degree
        degs = {md(m) for m in self.terms}
        return len(degs) == 1

    def homogeneous_degree(self):
        """Degree if homogeneous and nonzero, else raises."""
        if not self.is_homogeneous() or self.is_zero():
            raise ValueError("polynomial is zero or not homogeneous")
        return self.degree()

    def total_degree(self):
        """Plain total degree, all variables weight 1; None if zero."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    # -- term access ---------------------------------------------------------

    def lead_monomial(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no lead term")
            self._lead = max(self.terms, key=self.ring.order.key)
        return self._lead

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def sorted_terms(self):
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]),
                      reverse=True)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        big, small = (self.terms, other.terms)
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()}, _clean=True)

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(1 / self.lead_coeff())

    def primitive(self):
        """Scale to coprime integer coefficients with positive lead coefficient."""
        if self.is_zero():
            return self
        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        factor = Fraction(den, num)
        if self.lead_coeff() < 0:
            factor = -factor
        return self.scale(factor)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- structural operations -------------------------------------------------

    def subs(self, mapping, target=None):
        """Substitute variables by polynomials or constants.

        ``mapping`` maps variable names to replacement values; unmapped
        variables must exist (by name) in the target ring.
        """
        target = target or self.ring
        images = []
        for nm in self.ring.names:
            if nm in mapping:
                v = mapping[nm]
                images.append(target.const(v) if isinstance(v, (int, Fraction)) else
                              (target.parse(v) if isinstance(v, str) else v))
            else:
                images.append(target.var(nm))
        out = target.zero()
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * images[i] ** e
            out = out + term
        return out

    def coeff_split(self, name):
        """Write self as sum coeff_k * var^k with coefficients free of var.

        Returns (power, coefficient) pairs with strictly decreasing powers.
        """
        idx = self.ring.index[name]
        buckets = {}
        for m, c in self.terms.items():
            e = m[idx]
            rest = m[:idx] + (0,) + m[idx + 1:]
            buckets.setdefault(e, {})[rest] = c
        out = [(e, Polynomial(self.ring, t, _clean=True)) for e, t in buckets.items()]
        out.sort(key=lambda t: t[0], reverse=True)
        return out

    def strip_monomial_factors(self, names):
        """Divide out the largest monomial in the named variables dividing every term."""
        if self.is_zero():
            raise ValueError("cannot strip factors from the zero polynomial")
        idxs = [self.ring.index[nm] for nm in names]
        mins = {i: min(m[i] for m in self.terms) for i in idxs}
        if all(v == 0 for v in mins.values()):
            return self
        out = {}
        for m, c in self.terms.items():
            mm = list(m)
            for i, v in mins.items():
                mm[i] -= v
            out[tuple(mm)] = c
        return Polynomial(self.ring, out, _clean=True)

    # -- printing ----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.ring.names[i])
                elif e > 1:
                    factors.append(f"{self.ring.names[i]}^{e}")
            coeff = abs(c)
            if factors and coeff == 1:
                body = "*".join(factors)
            elif factors:
                body = f"{coeff}*" + "*".join(factors)
            else:
                body = str(coeff)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"<{self}>"


# ------------------------------------------------------------------ parser

_OPS = set("+-*^()")


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch == "/":
            tokens.append(("/", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


def _parse_polynomial(ring, text):
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]]

    def advance():
        tok = tokens[pos[0]]
        pos[0] += 1
        return tok

    def parse_expr():
        sign = 1
        while peek()[0] in ("+", "-"):
            if advance()[0] == "-":
                sign = -sign
        acc = parse_term().scale(sign)
        while peek()[0] in ("+", "-"):
            sign = 1
            while peek()[0] in ("+", "-"):
                if advance()[0] == "-":
                    sign = -sign
            acc = acc + parse_term().scale(sign)
        return acc

    def parse_term():
        acc = parse_power()
        while peek()[0] in ("*", "/"):
            op = advance()[0]
            rhs = parse_power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by nonzero constants", peek()[2])
                acc = acc.scale(1 / rhs.constant_value())
        return acc

    def parse_power():
        base = parse_atom()
        if peek()[0] == "^":
            advance()
        else:
            return base
        kind, value, at = advance()
        if kind != "num":
            raise ParseError("exponent must be a nonnegative integer", at)
        return base ** int(value)

    def parse_atom():
        kind, value, at = advance()
        if kind == "num":
            return ring.const(int(value))
        if kind == "name":
            if value not in ring.index:
                raise ParseError(f"unknown variable {value!r}", at)
            return ring.var(value)
        if kind == "(":
            inner = parse_expr()
            kind2, _, at2 = advance()
            if kind2 != ")":
                raise ParseError("expected ')'", at2)
            return inner
        if kind == "-":
            return -parse_atom()
        raise ParseError(f"unexpected token {value!r}", at)

    result = parse_expr()
    kind, value, at = peek()
    if kind != "end":
        raise ParseError(f"trailing input {value!r}", at)
    return result
