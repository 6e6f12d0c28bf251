"""Graded polynomial rings, homogeneous components and presentations.

Polynomials are sympy sparse ``PolyElement`` objects over QQ or a rational
function field QQ(a1, ..., am).  A :class:`GradedPolyRing` adds the degree map
into an :class:`coxaut.abelian.AbelianGroup`.
"""
import re
from math import gcd

import numpy as np
from sympy import Symbol, QQ
from sympy.polys.rings import PolyRing
from sympy.polys.orderings import grevlex
from sympy.polys.matrices import DomainMatrix
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, convert_xor
from tokenize import TokenError

from .abelian import GroupElement, int_matrix, generates
from .cones import RationalCone, positive_relation, dot
from .utilities import (ProblemParseError, ShapeMismatch, NonEffectiveGrading,
                        NonPointedGrading, NotHomogeneous)

_NAME_RE = re.compile(r'^[A-Za-z][A-Za-z0-9_]*$')


class CoefficientField(object):
    """
    The ground field: QQ, or rational functions in named parameters.
    """

    def __init__(self, parameters=()):
        """
        Instantiate a CoefficientField.

        Parameters
        ----------
        parameters: `list`, optional
           Parameter names.  Empty means the rationals.
        """
        self.parameters = tuple(str(p) for p in parameters)
        for p in self.parameters:
            if not _NAME_RE.match(p):
                raise ProblemParseError("Invalid parameter name %r" % (p))
        if len(set(self.parameters)) != len(self.parameters):
            raise ProblemParseError("Duplicate parameter names")
        if self.parameters:
            self.domain = QQ.frac_field(*[Symbol(p) for p in self.parameters])
        else:
            self.domain = QQ

    @property
    def kind(self):
        return 'rational_functions' if self.parameters else 'rationals'

    def is_zero(self, c):
        return not c

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and other.parameters == self.parameters

    def __hash__(self):
        return hash(self.parameters)

    def __repr__(self):
        if self.parameters:
            return "CoefficientField(QQ(%s))" % (", ".join(self.parameters))
        return "CoefficientField(QQ)"


def grlex_key(exp):
    """Sort key of the global graded lexicographic monomial order."""
    return (sum(exp), tuple(exp))


def format_coefficient(domain, c):
    expr = domain.to_sympy(c)
    return str(expr).replace('**', '^')


def format_monomial(exp, names):
    parts = []
    for e, name in zip(exp, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def format_polynomial(f, names=None):
    """
    Print a polynomial in the ``T1*T2 + T3^2`` grammar.

    Terms are ordered by the global graded lexicographic order, largest first.

    Parameters
    ----------
    f: `PolyElement`
    names: `list`, optional
       Variable names, default taken from the ring of ``f``.

    Returns
    -------
    text: `str`
    """
    ring = f.ring
    if names is None:
        names = [str(s) for s in ring.symbols]
    if not f:
        return "0"
    domain = ring.domain
    out = []
    for exp, c in sorted(f.terms(), key=lambda t: grlex_key(t[0]), reverse=True):
        mono = format_monomial(exp, names)
        expr = domain.to_sympy(c)
        negative = expr.is_Number and expr < 0
        if negative:
            expr = -expr
        if expr.is_Number:
            cstr = str(expr)
        else:
            cstr = "(%s)" % (str(expr).replace('**', '^'))
        if mono:
            term = mono if cstr == "1" else "%s*%s" % (cstr, mono)
        else:
            term = cstr
        if not out:
            out.append("-" + term if negative else term)
        else:
            out.append(("- " if negative else "+ ") + term)
    return " ".join(out)


def parse_polynomial(text, poly_ring, parameters=()):
    """
    Parse a polynomial string into a sympy ring element.

    Both ``^`` and ``**`` denote powers.

    Parameters
    ----------
    text: `str`
    poly_ring: `sympy.polys.rings.PolyRing`
    parameters: `list`, optional
       Parameter names allowed in coefficients.

    Raises
    ------
    ProblemParseError: on syntax errors or unknown symbols.
    """
    names = [str(s) for s in poly_ring.symbols]
    local = {name: Symbol(name) for name in list(names) + list(parameters)}
    try:
        expr = parse_expr(str(text), local_dict=local,
                          transformations=standard_transformations + (convert_xor,))
    except (SyntaxError, TypeError, TokenError, ValueError) as err:
        raise ProblemParseError("Cannot parse polynomial %r: %s" % (text, err))
    unknown = set(str(s) for s in expr.free_symbols) - set(local)
    if unknown:
        raise ProblemParseError("Unknown symbols %s in %r" % (sorted(unknown), text))
    try:
        return poly_ring.from_expr(expr)
    except Exception as err:
        raise ProblemParseError("Not a polynomial: %r (%s)" % (text, err))


class GradedPolyRing(object):
    """
    A polynomial ring K[T_1, ..., T_r] graded by an abelian group.
    """

    def __init__(self, names, field, group, degrees):
        """
        Instantiate a GradedPolyRing.

        Parameters
        ----------
        names: `list`
           Variable names.
        field: `coxaut.CoefficientField`
        group: `coxaut.AbelianGroup`
        degrees: `list`
           One GroupElement (or integer vector) per variable.
        """
        names = [str(n) for n in names]
        for n in names:
            if not _NAME_RE.match(n):
                raise ProblemParseError("Invalid variable name %r" % (n))
            if n in field.parameters:
                raise ProblemParseError("Variable %s clashes with a parameter" % (n))
        if len(set(names)) != len(names):
            raise ProblemParseError("Duplicate variable names")
        if len(degrees) != len(names):
            raise ShapeMismatch("%d degrees for %d variables" % (len(degrees), len(names)))
        self.names = tuple(names)
        self.field = field
        self.group = group
        self.degrees = tuple(d if isinstance(d, GroupElement) else group.element(d)
                             for d in degrees)
        for d in self.degrees:
            if d.group != group:
                raise ShapeMismatch("Degree %s is not an element of %s" % (str(d), str(group)))
        self.domain = field.domain
        if names:
            self.poly_ring = PolyRing(list(names), self.domain, grevlex)
        else:
            self.poly_ring = PolyRing([], self.domain, grevlex)
        self.gens = self.poly_ring.gens
        self._degree_matrix = int_matrix([d.vec for d in self.degrees], ncols=group.ngens).T \
            if names else np.zeros((group.ngens, 0), dtype=object)
        self._functional = None
        self._basis_cache = {}

    @property
    def nvars(self):
        return len(self.names)

    def degree_matrix(self):
        """Integer matrix with the degree vectors as columns."""
        return self._degree_matrix

    def gen(self, i):
        return self.gens[i]

    def index(self, name):
        return self.names.index(name)

    def monomial(self, exp):
        return self.poly_ring.term_new(tuple(exp), self.domain.one)

    def monomial_degree(self, exp):
        vec = self._degree_matrix.dot(np.array(exp, dtype=object)) if self.nvars else \
            [0] * self.group.ngens
        return GroupElement(self.group, vec)

    def degree_of(self, f):
        """
        Common degree of all terms of ``f``.

        Returns
        -------
        degree: `coxaut.GroupElement` or None
           None for the zero polynomial.

        Raises
        ------
        NotHomogeneous: if terms disagree.
        """
        degree = None
        for exp in f.itermonoms():
            d = self.monomial_degree(exp)
            if degree is None:
                degree = d
            elif d != degree:
                raise NotHomogeneous("%s is not homogeneous: degrees %s and %s" %
                                     (self.format(f), str(degree), str(d)),
                                     witness=self.format(f))
        return degree

    def is_homogeneous(self, f):
        try:
            self.degree_of(f)
        except NotHomogeneous:
            return False
        return True

    def parse(self, text):
        return parse_polynomial(text, self.poly_ring, self.field.parameters)

    def format(self, f):
        return format_polynomial(f, self.names)

    def element_order(self, w):
        """Order of a torsion element (infinite orders are not handled)."""
        order = 1
        for t, n in zip(w.torsion, self.group.torsion_orders):
            o = n // gcd(t, n)
            order = order * o // gcd(order, o)
        return order

    ###################################
    ## Grading checks                ##
    ###################################

    def check_effective(self):
        ok, quotient = generates(self.group, self.degrees)
        if not ok:
            raise NonEffectiveGrading("Variable degrees do not generate %s (cokernel %s)" %
                                      (str(self.group), str(quotient)), witness=str(quotient))
        return True

    def positive_functional(self):
        """
        Integer vector u with <u, free part of deg T_i> > 0 for every i.

        Raises
        ------
        NonPointedGrading: naming a nonconstant monomial of degree zero.
        """
        if self._functional is not None:
            return self._functional
        k = self.group.free_rank
        free = [d.free for d in self.degrees]
        for i, f in enumerate(free):
            if all(x == 0 for x in f):
                order = self.element_order(self.degrees[i])
                exp = [0] * self.nvars
                exp[i] = order
                mono = format_monomial(exp, self.names)
                raise NonPointedGrading("Monomial %s has degree 0" % (mono), witness=mono)
        if self.nvars == 0:
            self._functional = (0,) * k
            return self._functional
        cone = RationalCone.from_rays(free, k)
        if not cone.is_pointed():
            rel = positive_relation(free, k)
            exp = [x * self.group.exponent for x in rel]
            mono = format_monomial(exp, self.names)
            raise NonPointedGrading("Monomial %s has degree 0" % (mono), witness=mono)
        u = [0] * k
        for facet in cone.facets:
            u = [a + b for a, b in zip(u, facet)]
        if not all(dot(u, f) > 0 for f in free):
            raise RuntimeError("Positive functional construction failed")
        self._functional = tuple(u)
        return self._functional

    def check_effective_pointed(self):
        """
        Check the grading is effective and pointed.

        Returns
        -------
        diagnostics: `dict`
           The positive functional and its values on the variables.
        """
        self.check_effective()
        u = self.positive_functional()
        return {'effective': True, 'pointed': True, 'functional': [int(x) for x in u],
                'weights': [int(dot(u, d.free)) for d in self.degrees]}

    ###################################
    ## Monomial bases                ##
    ###################################

    def monomial_basis(self, w):
        """
        All exponent vectors of degree ``w``, largest first in graded lex order.

        Parameters
        ----------
        w: `coxaut.GroupElement`

        Returns
        -------
        basis: `list`
           Exponent tuples.
        """
        if w in self._basis_cache:
            return self._basis_cache[w]
        u = self.positive_functional()
        weights = [dot(u, d.free) for d in self.degrees]
        target = dot(u, w.free)
        if self.nvars == 0:
            basis = [()] if w.is_zero() else []
        elif target < 0:
            basis = []
        else:
            basis = [exp for exp in _knapsack(weights, target)
                     if self.monomial_degree(exp) == w]
            basis.sort(key=grlex_key, reverse=True)
        self._basis_cache[w] = basis
        return basis

    def component_dimension(self, w):
        return len(self.monomial_basis(w))

    def is_below(self, w1, w2):
        """True if w1 < w2, i.e. w2 - w1 is a nonzero degree of a monomial."""
        if w1 == w2:
            return False
        return len(self.monomial_basis(w2 - w1)) > 0

    ###################################
    ## Derived rings                 ##
    ###################################

    def drop_variable(self, i):
        names = self.names[:i] + self.names[i + 1:]
        degrees = self.degrees[:i] + self.degrees[i + 1:]
        return GradedPolyRing(names, self.field, self.group, degrees)

    def convert_dropping(self, f, i, target):
        """Move ``f`` (free of T_i) into the ring with T_i dropped."""
        terms = {}
        for exp, c in f.terms():
            if exp[i] != 0:
                raise ValueError("Polynomial still involves %s" % (self.names[i]))
            terms[exp[:i] + exp[i + 1:]] = c
        return target.poly_ring.from_dict(terms)

    def __eq__(self, other):
        return (isinstance(other, GradedPolyRing) and other.names == self.names and
                other.field == self.field and other.degrees == self.degrees)

    def __hash__(self):
        return hash((self.names, self.field, self.degrees))

    def __repr__(self):
        return "GradedPolyRing(%s over %s graded by %s)" % (", ".join(self.names),
                                                           repr(self.field), str(self.group))


def _knapsack(weights, target):
    """All nonnegative vectors nu with sum(weights[i] * nu[i]) == target."""
    r = len(weights)
    out = []
    vec = [0] * r

    def rec(i, remaining):
        a = weights[i]
        if i == r - 1:
            if remaining % a == 0:
                vec[i] = remaining // a
                out.append(tuple(vec))
                vec[i] = 0
            return
        for e in range(remaining // a + 1):
            vec[i] = e
            rec(i + 1, remaining - e * a)
        vec[i] = 0

    rec(0, target)
    return out


class Ideal(object):
    """
    An ideal given by generators, in a graded or a plain sympy ring.
    """

    def __init__(self, ring, generators=()):
        """
        Instantiate an Ideal.

        Parameters
        ----------
        ring: `coxaut.GradedPolyRing` or `sympy.polys.rings.PolyRing`
        generators: `list`
           Polynomials (ring elements or strings); zero and repeated
           generators are dropped.
        """
        self.ring = ring
        if isinstance(ring, GradedPolyRing):
            self.poly_ring = ring.poly_ring
            self.graded = ring
        else:
            self.poly_ring = ring
            self.graded = None
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = parse_polynomial(g, self.poly_ring,
                                     self.graded.field.parameters if self.graded else ())
            else:
                g = self.poly_ring(g) if g.ring != self.poly_ring else g
            if g and g not in gens:
                gens.append(g)
        self.generators = gens
        self._groebner = {}

    def is_zero(self):
        return len(self.generators) == 0

    def is_homogeneous(self):
        if self.graded is None:
            raise ValueError("Homogeneity needs a graded ring")
        return all(self.graded.is_homogeneous(g) for g in self.generators)

    def generator_degrees(self):
        """Degrees of the generators, in order."""
        return [self.graded.degree_of(g) for g in self.generators]

    def format_generators(self):
        names = [str(s) for s in self.poly_ring.symbols]
        return [format_polynomial(g, names) for g in self.generators]

    def __repr__(self):
        return "Ideal(<%s>)" % (", ".join(self.format_generators()))


###################################
## Homogeneous components        ##
###################################

class HomogeneousComponent(object):
    """
    A subspace of S_w given by a row reduced basis in the monomial basis.

    Attributes
    ----------
    degree: `coxaut.GroupElement`
    monomials: `list`
       The monomial basis of S_w (exponent tuples).
    rows: `list`
       Row reduced echelon rows (domain elements).
    pivots: `list`
       Pivot column of each row.
    """

    def __init__(self, ring, degree, monomials, rows, pivots):
        self.ring = ring
        self.degree = degree
        self.monomials = list(monomials)
        self.rows = [list(r) for r in rows]
        self.pivots = list(pivots)
        self._index = {m: i for i, m in enumerate(self.monomials)}

    @property
    def dim(self):
        return len(self.rows)

    @property
    def ambient_dim(self):
        return len(self.monomials)

    def polynomials(self):
        out = []
        for row in self.rows:
            terms = {m: c for m, c in zip(self.monomials, row) if c}
            out.append(self.ring.poly_ring.from_dict(terms))
        return out

    def coordinates(self, f):
        """Coefficient vector of ``f`` in the monomial basis."""
        domain = self.ring.domain
        vec = [domain.zero] * len(self.monomials)
        for exp, c in f.terms():
            if exp not in self._index:
                raise ValueError("Term %s is not of degree %s" %
                                 (format_monomial(exp, self.ring.names), str(self.degree)))
            vec[self._index[exp]] = c
        return vec

    def complement_forms(self):
        """
        Linear forms vanishing exactly on this subspace.

        One form per non-pivot column f: x_f = 1 and x_p = -row[f] on pivots.
        """
        domain = self.ring.domain
        forms = []
        pivset = set(self.pivots)
        for f in range(len(self.monomials)):
            if f in pivset:
                continue
            x = [domain.zero] * len(self.monomials)
            x[f] = domain.one
            for row, p in zip(self.rows, self.pivots):
                x[p] = -row[f]
            forms.append(x)
        return forms

    def contains(self, f):
        """Membership of a polynomial of this degree."""
        if not f:
            return True
        vec = self.coordinates(f)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c:
                vec = [v - c * r for v, r in zip(vec, row)]
        return all(not v for v in vec)


def row_reduce(ring, degree, monomials, polys):
    """
    Row reduced span of ``polys`` inside the span of ``monomials``.

    Returns
    -------
    component: `coxaut.HomogeneousComponent`
    """
    domain = ring.domain
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for f in polys:
        if not f:
            continue
        vec = [domain.zero] * len(monomials)
        for exp, c in f.terms():
            vec[index[exp]] = c
        rows.append(vec)
    if not rows:
        return HomogeneousComponent(ring, degree, monomials, [], [])
    M = DomainMatrix(rows, (len(rows), len(monomials)), domain)
    R, pivots = M.rref()
    R = R.to_list()
    out_rows = [R[i] for i in range(len(pivots))]
    return HomogeneousComponent(ring, degree, monomials, out_rows, list(pivots))


def ideal_component(ideal, w, generators=None):
    """
    Basis of the degree w part of a homogeneous ideal.

    Parameters
    ----------
    ideal: `coxaut.Ideal`
    w: `coxaut.GroupElement`
    generators: `list`, optional
       Restrict to these generators (used for the ideal below w).

    Returns
    -------
    component: `coxaut.HomogeneousComponent`
    """
    S = ideal.graded
    monomials = S.monomial_basis(w)
    gens = ideal.generators if generators is None else generators
    products = []
    if monomials:
        for g in gens:
            dg = S.degree_of(g)
            for m in S.monomial_basis(w - dg):
                products.append(g.mul_monom(m))
    return row_reduce(S, w, monomials, products)


def generator_degrees(S):
    """
    The distinct variable degrees in canonical order.

    Degrees are sorted by their value under the positive functional of the
    grading, then by their free and torsion entries, so the order does not
    depend on how the variables are listed.
    """
    u = S.positive_functional()
    return sorted(set(S.degrees), key=lambda d: (dot(u, d.free), d.vec))


def ideal_generator_degrees(ideal):
    """
    The degrees w where I_w is not generated by lower components.

    Returns
    -------
    degrees: `list`
       Ordered by first occurrence among the given generators.
    """
    S = ideal.graded
    gdeg = [(g, S.degree_of(g)) for g in ideal.generators]
    candidates = []
    for _, d in gdeg:
        if d not in candidates:
            candidates.append(d)
    keep = []
    for w in candidates:
        full = ideal_component(ideal, w).dim
        lower = [g for g, d in gdeg if S.is_below(d, w)]
        lower_dim = ideal_component(ideal, w, generators=lower).dim
        if full > lower_dim:
            keep.append(w)
    return keep


def minimalize_presentation(S, ideal, logger=None):
    """
    Remove redundant variables until the ideal lies in <T>^2.

    Parameters
    ----------
    S: `coxaut.GradedPolyRing`
    ideal: `coxaut.Ideal`

    Returns
    -------
    S_min: `coxaut.GradedPolyRing`
    I_min: `coxaut.Ideal`
    eliminated: `list`
       (name, substitution string) in elimination order.
    """
    eliminated = []
    current_ring = S
    current = ideal
    while True:
        found = None
        for i in range(current_ring.nvars):
            exp = tuple(1 if j == i else 0 for j in range(current_ring.nvars))
            comp = ideal_component(current, current_ring.degrees[i])
            if comp.dim == 0:
                continue
            col = comp.monomials.index(exp)
            for row in comp.rows:
                if row[col]:
                    found = (i, row, col, comp)
                    break
            if found is not None:
                break
        if found is None:
            break
        i, row, col, comp = found
        c0 = row[col]
        poly_terms = {m: c for m, c in zip(comp.monomials, row) if c and m != comp.monomials[col]}
        rest = current_ring.poly_ring.from_dict(poly_terms) if poly_terms else current_ring.poly_ring.zero
        sub = rest.quo_ground(-c0) if rest else rest
        name = current_ring.names[i]
        eliminated.append((name, current_ring.format(sub)))
        if logger is not None:
            logger.info("Eliminating redundant generator %s = %s" % (name, current_ring.format(sub)))
        gen = current_ring.gens[i]
        new_ring = current_ring.drop_variable(i)
        new_gens = []
        for g in current.generators:
            h = g.compose(gen, sub)
            if h:
                new_gens.append(current_ring.convert_dropping(h, i, new_ring))
        current_ring = new_ring
        current = Ideal(new_ring, new_gens)
    return current_ring, current, eliminated
