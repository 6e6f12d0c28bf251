"""Automorphism groups of Mori dream spaces.

Starting from a Cox ring R = S/I with an ample class w, this module computes
the GIT chamber of w, the degree symmetries fixing it, the group Aut_H of the
total coordinate space, and finally a presentation of the coordinate algebra
of Aut(X) as the degree zero Veronese subalgebra of the localized group ring.
"""
import itertools
import multiprocessing

import numpy as np
from PyNormaliz import NmzCone, NmzResult
from sympy.polys.rings import PolyRing
from sympy import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.matrices import DomainMatrix

from .abelian import (quotient_group, kernel_lattice,
                      lattice_index_in_saturation, lattice_intersection, saturation_basis,
                      lattice_contains)
from .cones import RationalCone
from .polyring import Ideal, format_polynomial, format_monomial
from .groebner import (groebner, saturate, is_solvable, preimage, same_ideal, ideal_dimension,
                       map_variables)
from .autgraded import (build_rep_basis, aut_omega, aut_ks, stab_ideal, quot_rep, gamma_group,
                        group_dimension, coset_lattice, ComponentCount, entry_name)
from .utilities import EmptyChamber, default_budget, log_info


class CoxInput(object):
    """
    A Cox ring R = S/I together with an ample class.
    """

    def __init__(self, ring, ideal, ample_class):
        """
        Instantiate a CoxInput.

        Parameters
        ----------
        ring: `coxaut.GradedPolyRing`
        ideal: `coxaut.Ideal`
        ample_class: `coxaut.GroupElement`

        Raises
        ------
        EmptyChamber: if the ample class is not in the cone of the degrees.
        """
        ring.check_effective_pointed()
        if all(x == 0 for x in ample_class.free):
            raise EmptyChamber("Ample class %s has zero free part" % (str(ample_class)))
        cone = RationalCone.from_rays([d.free for d in ring.degrees], ring.group.free_rank)
        if not cone.contains(ample_class.free):
            raise EmptyChamber("Ample class %s lies outside the cone of the degrees" %
                               (str(ample_class)), witness=str(ample_class))
        self.ring = ring
        self.ideal = ideal
        self.ample_class = ample_class


###################################
## a-faces and the GIT cone      ##
###################################

class AFace(object):
    """A set of variable indices whose torus orbit meets V(I), with its orbit cone."""

    def __init__(self, gamma, orbit_cone):
        self.gamma = tuple(gamma)
        self.orbit_cone = orbit_cone

    def __repr__(self):
        return "AFace(%r)" % (self.gamma,)


def orbit_cone(gamma, S):
    """Cone generated by the free parts of deg T_i, i in gamma."""
    return RationalCone.from_rays([S.degrees[i].free for i in gamma], S.group.free_rank)


def restrict_to_face(ideal, gamma):
    """Set every variable outside gamma to zero."""
    keep = set(gamma)
    gens = []
    for g in ideal.generators:
        terms = {exp: c for exp, c in g.terms()
                 if all(e == 0 or i in keep for i, e in enumerate(exp))}
        if terms:
            gens.append(ideal.poly_ring.from_dict(terms))
    return Ideal(ideal.ring, gens)


def is_a_face(gamma, ideal, budget=None):
    """
    True if V(I) meets the torus orbit with support exactly gamma.
    """
    restricted = restrict_to_face(ideal, gamma)
    if restricted.is_zero():
        return True
    prod = ideal.poly_ring.one
    for i in gamma:
        prod = prod * ideal.poly_ring.gens[i]
    return is_solvable(saturate(restricted, prod, budget=budget), budget=budget)


_ACTIVE = {}


def _aface_worker(chunk):
    runner = _ACTIVE['runner']
    return [is_a_face(gamma, runner.ideal, budget=runner.budget) for gamma in chunk]


class AFaceRunner(object):
    """
    Run the a-face tests of the candidate faces, optionally with a fork pool.
    """

    def __init__(self, cox, budget=None, nproc=1, logger=None):
        self.cox = cox
        self.ideal = cox.ideal
        self.budget = default_budget(budget)
        self.nproc = nproc
        self.logger = logger

    def candidates(self):
        """
        All faces whose orbit cone contains the ample class, with their cones.

        Raises BudgetExceeded as soon as more faces than the budget allows are found.
        """
        S = self.cox.ring
        w = self.cox.ample_class.free
        out = []
        for size in range(S.nvars + 1):
            for gamma in itertools.combinations(range(S.nvars), size):
                cone = orbit_cone(gamma, S)
                if cone.contains(w):
                    out.append(AFace(gamma, cone))
                    if len(out) > self.budget.max_afaces:
                        self.budget.check_afaces(len(out))
        return out

    def run(self):
        faces = self.candidates()
        self.budget.check_afaces(len(faces))
        log_info(self.logger, "Testing %d candidate faces" % (len(faces)))
        gammas = [f.gamma for f in faces]
        if self.nproc <= 1 or len(gammas) < 2:
            flags = [is_a_face(g, self.ideal, budget=self.budget) for g in gammas]
        else:
            nchunk = min(self.nproc * 4, len(gammas))
            chunks = [gammas[i::nchunk] for i in range(nchunk)]
            _ACTIVE['runner'] = self
            mp_ctx = multiprocessing.get_context("fork")
            pool = mp_ctx.Pool(processes=self.nproc)
            retvals = pool.map(_aface_worker, chunks, chunksize=1)
            pool.close()
            pool.join()
            _ACTIVE.pop('runner', None)
            result = {}
            for chunk, vals in zip(chunks, retvals):
                result.update(zip(chunk, vals))
            flags = [result[g] for g in gammas]
        return [f for f, ok in zip(faces, flags) if ok]


def list_a_faces(cox, budget=None, nproc=1, logger=None):
    """
    The a-faces whose orbit cone contains the ample class.

    Returns
    -------
    faces: `list`
       `coxaut.AFace` objects in increasing size, then lexicographic order.
    """
    return AFaceRunner(cox, budget=budget, nproc=nproc, logger=logger).run()


def git_cone(cox, budget=None, nproc=1, logger=None):
    """
    The GIT cone of the ample class: the intersection of its orbit cones.

    Raises
    ------
    EmptyChamber: if no orbit cone contains the ample class.
    """
    faces = list_a_faces(cox, budget=budget, nproc=nproc, logger=logger)
    if not faces:
        raise EmptyChamber("Ample class %s lies in no orbit cone" % (str(cox.ample_class)),
                           witness=str(cox.ample_class))
    cone = faces[0].orbit_cone
    for face in faces[1:]:
        if not face.orbit_cone.contains_cone(cone):
            cone = cone.intersect(face.orbit_cone)
    log_info(logger, "GIT cone from %d a-faces" % (len(faces)))
    return cone


def sigma_of_lambda(cone, sigmas):
    """The degree symmetries whose free part maps the cone onto itself."""
    return [s for s in sigmas if cone.transform(s.free_block) == cone]


###################################
## Aut_H of total coordinates    ##
###################################

class AutHatX(object):
    """
    Aut_H of the total coordinate space and the data it was built from.

    Attributes
    ----------
    chamber: `coxaut.RationalCone`
    sigmas: `list`
       Degree symmetries fixing the chamber.
    rep: `coxaut.RepBasis`
    stab: `coxaut.MatrixGroupDescription`
    group: `coxaut.MatrixGroupDescription`
       The description in GL(k).
    qrep: `coxaut.QuotientRep`
    """

    def __init__(self, chamber, sigmas, rep, stab, group, qrep):
        self.chamber = chamber
        self.sigmas = sigmas
        self.rep = rep
        self.stab = stab
        self.group = group
        self.qrep = qrep


def aut_hat_x(cox, chamber=None, budget=None, nproc=1, logger=None):
    """
    Describe Aut_H of the total coordinate space in GL(k).

    Parameters
    ----------
    cox: `coxaut.CoxInput`
    chamber: `coxaut.RationalCone`, optional
       A trusted GIT chamber; computed from a-faces when None.

    Returns
    -------
    aut: `coxaut.AutHatX`
    """
    budget = default_budget(budget)
    S = cox.ring
    if chamber is None:
        chamber = git_cone(cox, budget=budget, nproc=nproc, logger=logger)
    elif not chamber.contains(cox.ample_class.free):
        raise EmptyChamber("Supplied chamber does not contain the ample class")
    rep = build_rep_basis(S, logger=logger)
    sigmas = sigma_of_lambda(chamber, aut_omega(S, logger=logger))
    log_info(logger, "%d degree symmetries fix the chamber" % (len(sigmas)))
    base = aut_ks(S, sigmas=sigmas, rep=rep, logger=logger)
    stab = stab_ideal(S, cox.ideal, rep=rep, base=base, logger=logger)
    group, qrep = quot_rep(S, cox.ideal, stab, rep=rep, budget=budget, logger=logger)
    return AutHatX(chamber, sigmas, rep, stab, group, qrep)


def entry_grading(column_degrees):
    """
    The grading deg T_ij = u_j of the matrix entries.

    Returns
    -------
    grading: `dict`
       'entries': function (r, c) -> degree, 'det': the degree of det.
    """
    K = column_degrees[0].group
    det = K.zero()
    for u in column_degrees:
        det = det + u
    return {'entries': lambda r, c: column_degrees[c], 'det': det,
            'columns': list(column_degrees)}


###################################
## Hilbert bases and Veronese    ##
###################################

def _degree_constraints(degrees, group, subgroup):
    """Equations and congruences cutting out deg(nu) in K' on Z^n."""
    Q, P = quotient_group(group, subgroup)
    images = [P.dot(np.array(d.vec, dtype=object)) for d in degrees]
    equations = [[int(img[i]) for img in images] for i in range(Q.free_rank)]
    congruences = []
    for t, m in enumerate(Q.torsion_orders):
        i = Q.free_rank + t
        congruences.append([int(img[i]) % m for img in images] + [int(m)])
    equations = [row for row in equations if any(row)]
    congruences = [row for row in congruences if any(row[:-1])]
    return equations, congruences


def hilbert_basis(degrees, group, subgroup=(), budget=None):
    """
    Minimal generators of the monoid of nu >= 0 with deg(nu) in a subgroup.

    Parameters
    ----------
    degrees: `list`
       GroupElements deg(e_1), ..., deg(e_n).
    group: `coxaut.AbelianGroup`
    subgroup: `list`, optional
       Generators of K'; default the zero subgroup.

    Returns
    -------
    basis: `list`
       Exponent tuples by increasing total degree.

    Raises
    ------
    BudgetExceeded: when an extreme ray or a basis element is beyond the
       Hilbert degree budget.
    """
    budget = default_budget(budget)
    n = len(degrees)
    if n == 0:
        return []
    equations, congruences = _degree_constraints(degrees, group, subgroup)
    data = {'inequalities': [[1 if i == j else 0 for j in range(n)] for i in range(n)]}
    if equations:
        data['equations'] = equations
    if congruences:
        data['congruences'] = congruences
    cone = NmzCone(**data)

    rays = [tuple(int(x) for x in r) for r in NmzResult(cone, "ExtremeRays")]
    if rays:
        budget.check_hilbert_degree(max(sum(r) for r in rays))
    basis = [tuple(int(x) for x in b) for b in NmzResult(cone, "HilbertBasis")]
    basis = sorted(set(b for b in basis if any(b)),
                   key=lambda v: (sum(v), tuple(-x for x in v)))
    if basis:
        budget.check_hilbert_degree(sum(basis[-1]))
    return basis


class VeronesePresentation(object):
    """
    The subalgebra of degrees in K' presented as K[Y]/J.

    Attributes
    ----------
    generators: `list`
       Exponent tuples mu_j with Y_j -> T^mu_j.
    ring: `sympy.polys.rings.PolyRing`
       Ring of the Y variables.
    ideal: `coxaut.Ideal`
       Relations J.
    """

    def __init__(self, source_names, generators, ring, ideal):
        self.source_names = list(source_names)
        self.generators = list(generators)
        self.ring = ring
        self.ideal = ideal

    @property
    def names(self):
        return [str(s) for s in self.ring.symbols]

    def monomial_table(self):
        return [(name, format_monomial(mu, self.source_names) or "1")
                for name, mu in zip(self.names, self.generators)]

    def relations(self):
        return [format_polynomial(g, self.names) for g in self.ideal.generators]


def _fresh_names(prefix, count, taken):
    names = ["%s%d" % (prefix, j + 1) for j in range(count)]
    if set(names) & set(taken):
        names = ["%s_%d" % (prefix, j + 1) for j in range(count)]
    return names


def veronese(poly_ring, degrees, group, ideal=None, subgroup=(), budget=None, logger=None):
    """
    Present the degree-K' Veronese subalgebra of K[T]/I.

    Parameters
    ----------
    poly_ring: `sympy.polys.rings.PolyRing`
       The ring K[T].
    degrees: `list`
       GroupElement degree of each variable.
    group: `coxaut.AbelianGroup`
    ideal: `coxaut.Ideal`, optional
       Default the zero ideal.
    subgroup: `list`, optional
       Generators of K'.

    Returns
    -------
    pres: `coxaut.VeronesePresentation`
    """
    budget = default_budget(budget)
    if ideal is None:
        ideal = Ideal(poly_ring, [])
    mus = hilbert_basis(degrees, group, subgroup=subgroup, budget=budget)
    if not ideal.is_zero():
        # monomials lying in I are zero in the quotient
        gb = groebner(ideal, budget=budget, logger=logger)
        nonzero = [mu for mu in mus if gb.reduce(poly_ring.term_new(mu, poly_ring.domain.one))]
        if len(nonzero) < len(mus):
            log_info(logger, "Dropped %d Hilbert basis monomials lying in the ideal" %
                     (len(mus) - len(nonzero)))
        mus = nonzero
    log_info(logger, "Veronese subalgebra needs %d generators" % (len(mus)))
    src_names = [str(s) for s in poly_ring.symbols]
    names = _fresh_names('Y', len(mus), src_names)
    Y = PolyRing(names, poly_ring.domain, grevlex)
    images = [poly_ring.term_new(mu, poly_ring.domain.one) for mu in mus]
    rel = preimage(images, ideal, Y, budget=budget, logger=logger)
    return VeronesePresentation(src_names, mus, Y, rel)


###################################
## The quasitorus H              ##
###################################

def h_lattice_ideal(column_degrees, domain=QQ, budget=None):
    """
    The lattice ideal of H on the diagonal entries.

    Parameters
    ----------
    column_degrees: `list`
       Degrees u_j of the entry grading.

    Returns
    -------
    ring: `sympy.polys.rings.PolyRing`
       Ring of the diagonal entries T_j_j.
    ideal: `coxaut.Ideal`
    lattice: `list`
       Basis of the kernel of the entry grading.
    """
    k = len(column_degrees)
    K = column_degrees[0].group
    ring = PolyRing([entry_name(j, j) for j in range(k)], domain, grevlex)
    lattice = kernel_lattice(K, column_degrees)
    gens = []
    for v in lattice:
        plus = tuple(max(x, 0) for x in v)
        minus = tuple(max(-x, 0) for x in v)
        gens.append(ring.term_new(plus, domain.one) - ring.term_new(minus, domain.one))
    ideal = Ideal(ring, gens)
    prod = ring.one
    for x in ring.gens:
        prod = prod * x
    return ring, saturate(ideal, prod, budget=budget), lattice


def caut_equals_h(group, budget=None):
    """
    Compare the degree preserving subgroup with the quasitorus H.

    Both are described inside the unit coset pattern; their ideals are compared
    after saturating by the block determinants.
    """
    unit = group.unit_coset()
    if unit is None:
        raise ValueError("Group description without an identity coset")
    _, hideal, _ = h_lattice_ideal(group.column_degrees, domain=unit.ring.domain, budget=budget)
    gens = []
    diag_pos = {}
    for i, (r, c) in enumerate(unit.pattern):
        if r == c:
            diag_pos[r] = i
        else:
            gens.append(unit.ring.gens[i])
    positions = [diag_pos[j] for j in range(group.size)]
    lifted = Ideal(unit.ring, [map_variables(g, unit.ring, positions)
                               for g in hideal.generators] + gens)
    h_sat = saturate(lifted, unit.det_product(), budget=budget)
    return same_ideal(unit.saturated(budget=budget), h_sat, budget=budget)


def aut_x_component_count(aut, gamma, budget=None):
    """
    Components of Aut(X): |Gamma| * [L_sat cap L_H : L] in the binomial case.
    """
    group = aut.group
    unit = group.unit_coset()
    if unit is None or not unit.all_blocks_trivial():
        return ComponentCount(None, {'reason': 'unit coset is not diagonal'})
    lattice = coset_lattice(unit, budget=budget)
    if lattice is None:
        return ComponentCount(None, {'reason': 'unit coset is not binomial'})
    k = group.size
    lat_h = kernel_lattice(group.column_degrees[0].group, group.column_degrees)
    for v in lattice:
        if not lattice_contains(lat_h, v, k):
            raise RuntimeError("The quasitorus H is not contained in the unit component lattice")
    sat = saturation_basis(lattice, k)
    meet = lattice_intersection(sat, lat_h, k)
    index = lattice_index_in_saturation(lattice, k) // lattice_index_in_saturation(meet, k)
    return ComponentCount(gamma.order * index,
                          {'gamma_order': gamma.order, 'torus_quotient_components': index,
                           'lattice': [list(v) for v in lattice]})


###################################
## Hopf algebra presentation     ##
###################################

class HopfAlgebraPresentation(object):
    """
    Generators Y_j = (entry monomial) * D^e and relations presenting O(Aut(X)).

    D stands for the inverse determinant.  The Hopf structure is realized on
    points: comultiply evaluates at a product of matrices, antipode at an
    inverse, counit at the identity.
    """

    def __init__(self, size, entries, veronese_pres):
        self.size = size
        self.entries = list(entries)
        self.veronese = veronese_pres

    @property
    def generator_count(self):
        return len(self.veronese.generators)

    @property
    def names(self):
        return self.veronese.names

    @property
    def ideal(self):
        return self.veronese.ideal

    def monomial_table(self):
        return self.veronese.monomial_table()

    def relations(self):
        return self.veronese.relations()

    def evaluate(self, matrix):
        """Values of Y_1, ..., Y_m at an invertible matrix."""
        dom = self.veronese.ring.domain
        A = [[dom.convert(x) for x in row] for row in matrix]
        det = DomainMatrix(A, (self.size, self.size), dom).det()
        if not det:
            raise ValueError("Matrix is not invertible")
        point = [A[r][c] for r, c in self.entries] + [dom.one / det]
        values = []
        for mu in self.veronese.generators:
            v = dom.one
            for x, e in zip(point, mu):
                if e:
                    v = v * x ** e
            values.append(v)
        return values

    def satisfies(self, values):
        """True if the relations vanish at the given values."""
        return all(not g(*values) for g in self.ideal.generators) if values else True

    def comultiply(self, matrix1, matrix2):
        dom = self.veronese.ring.domain
        A = DomainMatrix([[dom.convert(x) for x in row] for row in matrix1], (self.size, self.size), dom)
        B = DomainMatrix([[dom.convert(x) for x in row] for row in matrix2], (self.size, self.size), dom)
        return self.evaluate((A * B).to_list())

    def antipode(self, matrix):
        dom = self.veronese.ring.domain
        A = DomainMatrix([[dom.convert(x) for x in row] for row in matrix], (self.size, self.size), dom)
        return self.evaluate(A.inv().to_list())

    def counit(self):
        return self.evaluate([[1 if r == c else 0 for c in range(self.size)] for r in range(self.size)])

    def dimension(self, budget=None):
        return ideal_dimension(self.ideal, budget=budget)


class AutXResult(object):
    """Everything computed for Aut(X)."""

    def __init__(self, aut_hat, gamma, presentation, dimension, components, caut_is_h,
                 hat_dimension=None):
        self.aut_hat = aut_hat
        self.gamma = gamma
        self.presentation = presentation
        self.dimension = dimension
        self.hat_dimension = hat_dimension
        self.components = components
        self.caut_is_h = caut_is_h


def union_ideal(group):
    """
    Product ideal of the cosets in the ring of all entries used by some coset.

    Returns
    -------
    entries: `list`
       (row, column) of the union pattern, sorted.
    ring: `sympy.polys.rings.PolyRing`
    ideal: `coxaut.Ideal`
    """
    entries = sorted(set(rc for c in group.cosets for rc in c.pattern))
    where = {rc: i for i, rc in enumerate(entries)}
    ring = PolyRing([entry_name(r, c) for r, c in entries] + ['D'], group.domain, grevlex)
    product = None
    for coset in group.cosets:
        positions = [where[rc] for rc in coset.pattern]
        gens = [map_variables(g, ring, positions) for g in coset.ideal.generators]
        gens.extend(ring.gens[where[rc]] for rc in entries if rc not in coset.index)
        if product is None:
            product = gens
        else:
            product = list(dict.fromkeys(a * b for a in product for b in gens if a * b))
    return entries, ring, Ideal(ring, product or [])


def aut_x(cox, chamber=None, budget=None, nproc=1, logger=None):
    """
    Compute a Hopf algebra presentation of O(Aut(X)) and its invariants.

    Returns
    -------
    result: `coxaut.AutXResult`
    """
    budget = default_budget(budget)
    aut = aut_hat_x(cox, chamber=chamber, budget=budget, nproc=nproc, logger=logger)
    group = aut.group
    gamma = gamma_group(group, budget=budget, logger=logger)
    k = group.size

    entries, ring, product = union_ideal(group)
    where = {rc: i for i, rc in enumerate(entries)}
    dom = ring.to_domain()
    M = [[ring.gens[where[(r, c)]] if (r, c) in where else ring.zero for c in range(k)]
         for r in range(k)]
    det = DomainMatrix(M, (k, k), dom).det()
    D = ring.gens[len(entries)]
    localized = Ideal(ring, list(product.generators) + [D * det - ring.one])

    u = group.column_degrees
    K = u[0].group
    degrees = [u[c] for _, c in entries] + [-entry_grading(u)['det']]
    pres = veronese(ring, degrees, K, ideal=localized, budget=budget, logger=logger)
    hopf = HopfAlgebraPresentation(k, entries, pres)

    hat_dimension = group_dimension(group, budget=budget)
    log_info(logger, "Aut_H of the total coordinate space has dimension %d" % (hat_dimension))
    dimension = hat_dimension - K.free_rank
    components = aut_x_component_count(aut, gamma, budget=budget)
    caut_is_h = caut_equals_h(group, budget=budget)
    log_info(logger, "Aut(X) has dimension %d" % (dimension))
    return AutXResult(aut, gamma, hopf, dimension, components, caut_is_h,
                      hat_dimension=hat_dimension)
