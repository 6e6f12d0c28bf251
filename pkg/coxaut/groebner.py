"""Groebner bases over QQ and QQ(parameters).

A Buchberger implementation with the Gebauer-Moeller pair criteria working on
sympy ``PolyElement`` objects, with every run charged to a
:class:`coxaut.utilities.Budget`.  On top of it: normal forms, membership,
elimination, preimages of ring maps, saturation and Krull dimension.
"""
from sympy.polys.rings import PolyRing
from sympy.polys.orderings import grevlex, lex, ProductOrder

from .polyring import Ideal, format_polynomial
from .utilities import default_budget, log_info


class _Pick(object):
    """Picklable projection of a monomial onto some positions."""
    def __init__(self, indices):
        self.indices = tuple(indices)

    def __call__(self, monom):
        return tuple(monom[i] for i in self.indices)

    def __eq__(self, other):
        return isinstance(other, _Pick) and other.indices == self.indices

    def __hash__(self):
        return hash(self.indices)


class MonomialOrder(object):
    """
    A monomial order: grevlex, lex, or a block order eliminating some variables.
    """

    def __init__(self, kind='grevlex', eliminate=()):
        """
        Instantiate a MonomialOrder.

        Parameters
        ----------
        kind: `str`, optional
           'grevlex', 'lex' or 'elimination'.
        eliminate: `list`, optional
           Variable indices to eliminate (for 'elimination').
        """
        if kind not in ('grevlex', 'lex', 'elimination'):
            raise ValueError("Unknown monomial order %s" % (kind))
        if kind == 'elimination' and len(eliminate) == 0:
            raise ValueError("An elimination order needs variables to eliminate")
        self.kind = kind
        self.eliminate = tuple(sorted(int(i) for i in eliminate))

    def key(self):
        return (self.kind, self.eliminate)

    def sympy_order(self, nvars):
        if self.kind == 'grevlex':
            return grevlex
        if self.kind == 'lex':
            return lex
        keep = [i for i in range(nvars) if i not in self.eliminate]
        return ProductOrder((grevlex, _Pick(self.eliminate)), (grevlex, _Pick(keep)))

    def __repr__(self):
        if self.kind == 'elimination':
            return "MonomialOrder(elimination of %r)" % (list(self.eliminate),)
        return "MonomialOrder(%s)" % (self.kind)


class GroebnerBasis(object):
    """
    A reduced Groebner basis with respect to a monomial order.

    Attributes
    ----------
    ideal: `coxaut.Ideal`
    order: `coxaut.MonomialOrder`
    ring: `sympy.polys.rings.PolyRing`
       The ideal's ring re-ordered by ``order``.
    elements: `list`
       Monic basis elements, leading monomials decreasing.
    """

    def __init__(self, ideal, order, ring, elements):
        self.ideal = ideal
        self.order = order
        self.ring = ring
        self.elements = list(elements)

    def is_unit(self):
        return any(g.is_ground and g for g in self.elements)

    def leading_monomials(self):
        return [g.LM for g in self.elements]

    def reduce(self, f):
        """Remainder of ``f`` on division by the basis, in the ideal's ring."""
        h = f.set_ring(self.ring)
        if self.elements:
            h = h.rem(self.elements)
        return h.set_ring(self.ideal.poly_ring)

    def polynomials(self):
        """Basis elements in the ideal's original ring."""
        return [g.set_ring(self.ideal.poly_ring) for g in self.elements]

    def format(self):
        names = [str(s) for s in self.ring.symbols]
        return [format_polynomial(g, names) for g in self.elements]

    def __len__(self):
        return len(self.elements)


def _buchberger(f, ring, counter, budget):
    order = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    if not f:
        return []

    # inter-reduce the input
    f1 = f[:]
    while True:
        f = f1[:]
        f1 = []
        for i in range(len(f)):
            r = f[i].rem(f[:i]) if i > 0 else f[i]
            if r:
                f1.append(r.monic())
        if f == f1:
            break

    index = {}
    for i, h in enumerate(f):
        index[h] = i

    def normal(g, J):
        h = g.rem([f[j] for j in J])
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
        return h.LM, index[h]

    def update(G, B, ih):
        h = f[ih]
        mh = h.LM

        C = set(G)
        D = set()
        while C:
            ig = C.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip):
                m = monomial_lcm(mh, f[ip].LM)
                return monomial_div(lcm_hg, m)

            if monomial_mul(mh, mg) == lcm_hg or (
                    not any(lcm_divides(ipx) for ipx in C) and
                    not any(lcm_divides(pr[1]) for pr in D)):
                D.add((ih, ig))

        E = set()
        while D:
            ih_, ig = D.pop()
            mg = f[ig].LM
            if monomial_mul(mh, mg) != monomial_lcm(mh, mg):
                E.add((ih_, ig))

        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            mg1 = f[ig1].LM
            mg2 = f[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (not monomial_div(lcm12, mh) or
                    monomial_lcm(mg1, mh) == lcm12 or
                    monomial_lcm(mg2, mh) == lcm12):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = set()
        while G:
            ig = G.pop()
            if not monomial_div(f[ig].LM, mh):
                G_new.add(ig)
        G_new.add(ih)
        return G_new, B_new

    F = set(range(len(f)))
    G = set()
    CP = set()
    while F:
        ih = min(F, key=lambda x: order(f[x].LM))
        F.remove(ih)
        G, CP = update(G, CP, ih)

    while CP:
        ig1, ig2 = min(CP, key=lambda pr: (order(monomial_lcm(f[pr[0]].LM, f[pr[1]].LM)), pr))
        CP.remove((ig1, ig2))
        counter.tick()
        lcm12 = monomial_lcm(f[ig1].LM, f[ig2].LM)
        budget.check_degree(sum(lcm12))

        m1 = monomial_div(lcm12, f[ig1].LM)
        m2 = monomial_div(lcm12, f[ig2].LM)
        s = f[ig1].mul_monom(m1) - f[ig2].mul_monom(m2)
        G1 = sorted(G, key=lambda g: order(f[g].LM))
        ht = normal(s, G1)
        if ht:
            G, CP = update(G, CP, ht[1])

    reduced = set()
    for ig in sorted(G):
        ht = normal(f[ig], sorted(G - {ig}))
        if ht:
            reduced.add(ht[1])
    out = [f[ig] for ig in reduced]
    return sorted(out, key=lambda p: order(p.LM), reverse=True)


def groebner(ideal, order=None, budget=None, logger=None):
    """
    Reduced Groebner basis of an ideal.

    Parameters
    ----------
    ideal: `coxaut.Ideal`
    order: `coxaut.MonomialOrder`, optional
       Default is grevlex.
    budget: `coxaut.Budget`, optional
    logger: `coxaut.Logger`, optional

    Returns
    -------
    gb: `coxaut.GroebnerBasis`

    Raises
    ------
    BudgetExceeded: when a pair or degree budget runs out.
    """
    if order is None:
        order = MonomialOrder('grevlex')
    budget = default_budget(budget)
    key = order.key()
    if key in ideal._groebner:
        return ideal._groebner[key]

    ring = ideal.poly_ring.clone(order=order.sympy_order(ideal.poly_ring.ngens))
    F = [g.set_ring(ring) for g in ideal.generators]
    counter = budget.start_groebner()
    G = _buchberger(F, ring, counter, budget)
    log_info(logger, "Groebner basis with %d elements after %d pairs" % (len(G), counter.count))
    gb = GroebnerBasis(ideal, order, ring, G)
    ideal._groebner[key] = gb
    return gb


def normal_form(f, gb):
    """Normal form of ``f`` with respect to a Groebner basis."""
    return gb.reduce(f)


def membership(f, ideal, budget=None):
    """True if ``f`` lies in ``ideal``."""
    if not f:
        return True
    return not normal_form(f, groebner(ideal, budget=budget))


def is_solvable(ideal, budget=None):
    """True if 1 is not in the ideal, i.e. its zero set is nonempty."""
    if ideal.is_zero():
        return True
    return not groebner(ideal, budget=budget).is_unit()


def same_ideal(ideal1, ideal2, budget=None):
    """Equality of two ideals in the same ring by comparing reduced bases."""
    if ideal1.poly_ring != ideal2.poly_ring:
        raise ValueError("Ideals live in different rings")
    gb1 = groebner(ideal1, budget=budget).polynomials()
    gb2 = groebner(ideal2, budget=budget).polynomials()
    return sorted(str(g) for g in gb1) == sorted(str(g) for g in gb2)


###################################
## Moving between rings          ##
###################################

def extend_ring(poly_ring, names):
    """A grevlex ring with extra variables appended."""
    old = [str(s) for s in poly_ring.symbols]
    clash = set(old) & set(names)
    if clash:
        raise ValueError("Variable names %s already in use" % (sorted(clash)))
    return PolyRing(old + list(names), poly_ring.domain, grevlex)


def map_variables(f, target, positions):
    """
    Move a polynomial to another ring over the same domain.

    Parameters
    ----------
    f: `PolyElement`
    target: `sympy.polys.rings.PolyRing`
    positions: `list`
       positions[i] is the target index of source variable i, or None when
       the variable may not occur.
    """
    n = target.ngens
    terms = {}
    for exp, c in f.terms():
        new = [0] * n
        for i, e in enumerate(exp):
            if e == 0:
                continue
            p = positions[i]
            if p is None:
                raise ValueError("Variable %s has no image in the target ring" %
                                 (str(f.ring.symbols[i])))
            new[p] += e
        new = tuple(new)
        terms[new] = terms.get(new, target.domain.zero) + c
    return target.from_dict({m: c for m, c in terms.items() if c})


def eliminate(ideal, variables, budget=None, logger=None):
    """
    Intersect an ideal with the subring not involving ``variables``.

    Parameters
    ----------
    ideal: `coxaut.Ideal`
    variables: `list`
       Indices (or names) of variables to eliminate.

    Returns
    -------
    elim: `coxaut.Ideal`
       In the same ring; no generator involves the eliminated variables.
    """
    names = [str(s) for s in ideal.poly_ring.symbols]
    idx = sorted(names.index(v) if isinstance(v, str) else int(v) for v in variables)
    if not idx or ideal.is_zero():
        return Ideal(ideal.ring, list(ideal.generators))
    gb = groebner(ideal, MonomialOrder('elimination', idx), budget=budget, logger=logger)
    keep = []
    for g in gb.polynomials():
        if all(all(exp[i] == 0 for i in idx) for exp in g.itermonoms()):
            keep.append(g)
    return Ideal(ideal.ring, keep)


def preimage(images, ideal, target, budget=None, logger=None):
    """
    Preimage of an ideal under the ring map Y_j -> images[j].

    Parameters
    ----------
    images: `list`
       Polynomials in the ring of ``ideal``, one per variable of ``target``.
    ideal: `coxaut.Ideal`
    target: `sympy.polys.rings.PolyRing`
       The source ring of the map, with variables Y_1, ..., Y_m.

    Returns
    -------
    pre: `coxaut.Ideal`
       An ideal of ``target``.
    """
    src = ideal.poly_ring
    n = src.ngens
    m = target.ngens
    if len(images) != m:
        raise ValueError("Got %d images for %d variables" % (len(images), m))
    big = extend_ring(src, [str(s) for s in target.symbols])
    inc = list(range(n))
    gens = [map_variables(g, big, inc) for g in ideal.generators]
    for j, img in enumerate(images):
        gens.append(big.gens[n + j] - map_variables(img, big, inc))
    elim = eliminate(Ideal(big, gens), list(range(n)), budget=budget, logger=logger)
    back = [None] * n + list(range(m))
    return Ideal(target, [map_variables(g, target, back) for g in elim.generators])


def saturate(ideal, f, budget=None, logger=None):
    """
    The saturation I : f^infinity, as (I + <1 - t f>) with t eliminated.
    """
    if ideal.is_zero():
        return Ideal(ideal.ring, [])
    src = ideal.poly_ring
    n = src.ngens
    big = extend_ring(src, ['_sat_t'])
    inc = list(range(n))
    t = big.gens[n]
    gens = [map_variables(g, big, inc) for g in ideal.generators]
    gens.append(big.one - t * map_variables(f, big, inc))
    elim = eliminate(Ideal(big, gens), [n], budget=budget, logger=logger)
    return Ideal(ideal.ring, [map_variables(g, src, inc + [None]) for g in elim.generators])


def _solvable_variable(g, ring):
    """
    A variable x with g = c x + b, c a nonzero constant and b free of x.

    Returns
    -------
    (i, value): index of x and the polynomial -b/c, or None.
    """
    for i in range(ring.ngens):
        if g.degree(i) != 1:
            continue
        lead = {}
        rest = {}
        for monom, coeff in g.terms():
            if monom[i] == 1:
                lead[monom] = coeff
            else:
                rest[monom] = coeff
        if len(lead) != 1:
            continue
        (monom, coeff), = lead.items()
        if any(e for j, e in enumerate(monom) if j != i):
            continue
        inv = ring.domain.quo(ring.domain.one, coeff)
        return i, ring.from_dict(rest).mul_ground(-inv)
    return None


def substitute_linear(ideal, carried=(), logger=None):
    """
    Remove variables that some generator expresses as a polynomial in the others.

    A generator c x + b with b free of x is dropped and x := -b/c is put into
    every other generator and every carried polynomial, so V(I) is the graph
    of a polynomial map over the zero set of the result.

    Returns
    -------
    reduced: `coxaut.Ideal`
       Equations in the remaining variables, same ring.
    carried: `list`
       The carried polynomials after substitution.
    eliminated: `list`
       Indices of the removed variables.
    """
    ring = ideal.poly_ring
    gens = list(ideal.generators)
    carried = list(carried)
    eliminated = []
    changed = True
    while changed:
        changed = False
        for k, g in enumerate(gens):
            found = _solvable_variable(g, ring)
            if found is None:
                continue
            i, value = found
            x = ring.gens[i]
            gens = [h.compose(x, value) for j, h in enumerate(gens) if j != k]
            gens = [h for h in gens if h]
            carried = [h.compose(x, value) for h in carried]
            eliminated.append(i)
            changed = True
            break
    if eliminated:
        log_info(logger, "Substituted %d variables solved by linear equations" % (len(eliminated)))
    return Ideal(ideal.ring, gens), carried, eliminated


###################################
## Dimension                     ##
###################################

def _min_hitting_set(supports, nvars):
    best = [nvars + 1]

    def rec(chosen, remaining):
        if len(chosen) >= best[0]:
            return
        open_sets = [s for s in remaining if not (s & chosen)]
        if not open_sets:
            best[0] = len(chosen)
            return
        pick = min(open_sets, key=lambda s: (len(s), sorted(s)))
        for v in sorted(pick):
            rec(chosen | {v}, open_sets)

    rec(frozenset(), supports)
    return best[0]


def ideal_dimension(ideal, budget=None, logger=None):
    """
    Krull dimension of the zero set, from the leading monomials of a basis.

    Returns
    -------
    dim: `int`
       -1 for the empty zero set.
    """
    n = ideal.poly_ring.ngens
    if ideal.is_zero():
        return n
    gb = groebner(ideal, budget=budget, logger=logger)
    if gb.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(m) if e > 0) for m in gb.leading_monomials()]
    supports = [s for s in set(supports)]
    return n - _min_hitting_set(supports, n)
