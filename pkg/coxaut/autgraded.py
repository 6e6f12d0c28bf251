"""Graded automorphism groups of polynomial rings and their quotients.

The group Aut_K(S) acts on V = S_{w_1} + ... + S_{w_s}, the sum of the
components in the generator degrees.  A graded automorphism with degree
symmetry sigma maps S_w onto S_sigma(w), so its matrix has nonzero entries only
where block(row) == sigma(block(column)).  Each sigma gives one coset,
described by an ideal in the entries of that pattern.

Matrices act on columns: the image of basis element j is sum_i A[i][j] b_i.
"""
import itertools

import numpy as np
from sympy.polys.rings import PolyRing
from sympy.polys.orderings import grevlex
from sympy.polys.matrices import DomainMatrix

from .abelian import (FiniteGroup, enumerate_aut_stabilizing,
                      lattice_index_in_saturation, sum_elements)
from .polyring import (Ideal, ideal_component, generator_degrees, ideal_generator_degrees,
                       format_polynomial, grlex_key)
from .groebner import (groebner, saturate, ideal_dimension, is_solvable, preimage,
                       map_variables, substitute_linear)
from .utilities import BlockDimMismatch, NotHomogeneous, log_info


def entry_name(r, c):
    """Name of the matrix entry in row r, column c (0-based input)."""
    return "T%d_%d" % (r + 1, c + 1)


###################################
## Representation basis          ##
###################################

class Block(object):
    """
    One generator degree w with the monomial basis of S_w.
    """

    def __init__(self, index, degree, monomials, offset):
        self.index = index
        self.degree = degree
        self.monomials = list(monomials)
        self.offset = offset

    @property
    def dim(self):
        return len(self.monomials)

    @property
    def coords(self):
        return range(self.offset, self.offset + self.dim)


class RepBasis(object):
    """
    The concatenated monomial bases of the components S_w, w in Omega_S.

    Attributes
    ----------
    ring: `coxaut.GradedPolyRing`
    blocks: `list`
       `coxaut.autgraded.Block` objects in canonical degree order.
    n: `int`
       Total dimension.
    monomials: `list`
       Exponent tuple of each coordinate.
    """

    def __init__(self, ring, blocks):
        self.ring = ring
        self.blocks = list(blocks)
        self.monomials = [m for b in self.blocks for m in b.monomials]
        self.n = len(self.monomials)
        self._coord = {m: i for i, m in enumerate(self.monomials)}
        self._block_of = [b.index for b in self.blocks for _ in b.monomials]
        self._block_index = {b.degree: b.index for b in self.blocks}

    def coord(self, exp):
        """Coordinate of a basis monomial, None if not in the basis."""
        return self._coord.get(tuple(exp))

    def block_of(self, coord):
        return self._block_of[coord]

    def block_index(self, w):
        return self._block_index[w]

    @property
    def degrees(self):
        return [b.degree for b in self.blocks]

    @property
    def block_dims(self):
        return [b.dim for b in self.blocks]

    def column_degrees(self):
        """Degree u_j of each coordinate (the degree of its block)."""
        return [self.blocks[self._block_of[j]].degree for j in range(self.n)]

    def block_permutation(self, sigma):
        """
        Block indices permuted by a degree symmetry.

        Raises
        ------
        BlockDimMismatch: if sigma joins blocks of different dimension.
        """
        perm = []
        for b in self.blocks:
            target = sigma(b.degree)
            if target not in self._block_index:
                raise ValueError("Degree symmetry does not stabilize the generator degrees")
            j = self._block_index[target]
            if self.blocks[j].dim != b.dim:
                raise BlockDimMismatch("Block %d of dimension %d maps to block %d of dimension %d" %
                                       (b.index + 1, b.dim, j + 1, self.blocks[j].dim),
                                       witness=(b.index, j))
            perm.append(j)
        return tuple(perm)

    def permuting_matrix(self, perm):
        """k-th basis monomial of block c goes to the k-th monomial of block perm[c]."""
        B = np.zeros((self.n, self.n), dtype=object)
        for b in self.blocks:
            target = self.blocks[perm[b.index]]
            for k in range(b.dim):
                B[target.offset + k, b.offset + k] = 1
        return B

    def describe(self):
        lines = []
        for b in self.blocks:
            mons = ", ".join(format_monomial_or_one(m, self.ring.names) for m in b.monomials)
            lines.append("block %d: degree %s, dim %d: %s" % (b.index + 1, str(b.degree), b.dim, mons))
        return "\n".join(lines)


def format_monomial_or_one(exp, names):
    parts = []
    for e, name in zip(exp, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts) if parts else "1"


def build_rep_basis(S, logger=None):
    """
    Build the faithful representation basis of Aut_K(S).

    Parameters
    ----------
    S: `coxaut.GradedPolyRing`
       Effectively and pointedly graded.

    Returns
    -------
    rep: `coxaut.RepBasis`
    """
    S.check_effective_pointed()
    blocks = []
    offset = 0
    for i, w in enumerate(generator_degrees(S)):
        mons = S.monomial_basis(w)
        blocks.append(Block(i, w, mons, offset))
        offset += len(mons)
    rep = RepBasis(S, blocks)
    log_info(logger, "Representation of dimension %d in %d blocks" % (rep.n, len(blocks)))
    return rep


###################################
## Polynomials with matrix entries ##
###################################

def _dmul(a, b):
    """Product of two maps S-monomial -> entry polynomial."""
    out = {}
    for ea, pa in a.items():
        for eb, pb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            p = pa * pb
            if e in out:
                out[e] = out[e] + p
            else:
                out[e] = p
    return {e: p for e, p in out.items() if p}


def _substitute(f, images, ring, cache):
    """
    The substitution action f(phi(T_1), ..., phi(T_r)) as a map monomial -> entry polynomial.
    """
    nvars = len(images)
    out = {}
    for exp, c in f.terms():
        term = {(0,) * len(exp): ring.one}
        for i in range(nvars):
            e = exp[i]
            if e == 0:
                continue
            key = (i, e)
            if key not in cache:
                power = {(0,) * len(exp): ring.one}
                for _ in range(e):
                    power = _dmul(power, images[i])
                cache[key] = power
            term = _dmul(term, cache[key])
        for m, p in term.items():
            p = p.mul_ground(c)
            out[m] = out[m] + p if m in out else p
    return {m: p for m, p in out.items() if p}


###################################
## Cosets and group descriptions ##
###################################

class Coset(object):
    """
    The matrices of one degree symmetry sigma, as an ideal in the pattern entries.

    Attributes
    ----------
    label: `coxaut.GroupHom`
       The degree symmetry sigma.
    block_perm: `tuple`
       Image block of each block.
    pattern: `list`
       (row, column) of the entries allowed to be nonzero, sorted.
    ring: `sympy.polys.rings.PolyRing`
       One variable per pattern entry.
    ideal: `coxaut.Ideal`
       Equations on the pattern entries.
    """

    def __init__(self, label, block_perm, size, blocks, pattern, ring, generators):
        self.label = label
        self.block_perm = tuple(block_perm)
        self.size = size
        self.blocks = blocks
        self.pattern = list(pattern)
        self.ring = ring
        self.index = {rc: i for i, rc in enumerate(self.pattern)}
        self.ideal = Ideal(ring, generators)
        self._saturated = None
        self._reduced = None
        self._block_dets = None

    @classmethod
    def from_pattern(cls, label, block_perm, blocks, domain, generators_fn=None):
        """
        Build a coset whose pattern comes from a block layout.

        Parameters
        ----------
        blocks: `list`
           (offset, dim) per block.
        """
        size = sum(d for _, d in blocks)
        block_of = [b for b, (_, d) in enumerate(blocks) for _ in range(d)]
        pattern = [(r, c) for r in range(size) for c in range(size)
                   if block_of[r] == block_perm[block_of[c]]]
        ring = PolyRing([entry_name(r, c) for r, c in pattern], domain, grevlex) if pattern \
            else PolyRing(['_empty'], domain, grevlex)
        coset = cls(label, block_perm, size, blocks, pattern, ring, [])
        if generators_fn is not None:
            coset.ideal = Ideal(ring, generators_fn(coset))
        return coset

    def with_generators(self, generators):
        """A copy with a different generator list."""
        return Coset(self.label, self.block_perm, self.size, self.blocks, self.pattern,
                     self.ring, generators)

    def is_unit(self):
        return self.label.is_identity()

    def var(self, r, c):
        i = self.index.get((r, c))
        return None if i is None else self.ring.gens[i]

    def block_rows(self, b):
        off, d = self.blocks[b]
        return list(range(off, off + d))

    def block_determinants(self):
        """Determinant of each square block of the pattern."""
        if self._block_dets is None:
            dets = []
            dom = self.ring.to_domain()
            for c, (off, d) in enumerate(self.blocks):
                if d == 0:
                    continue
                rows = self.block_rows(self.block_perm[c])
                cols = list(range(off, off + d))
                M = [[self.var(r, cc) for cc in cols] for r in rows]
                dets.append(DomainMatrix(M, (d, d), dom).det())
            self._block_dets = dets
        return self._block_dets

    def det_product(self):
        p = self.ring.one
        for d in self.block_determinants():
            p = p * d
        return p

    def saturated(self, budget=None, logger=None):
        """The coset ideal saturated by the block determinants (cached)."""
        if self._saturated is None:
            self._saturated = saturate(self.ideal, self.det_product(), budget=budget, logger=logger)
        return self._saturated

    def reduced(self, budget=None):
        """
        The coset with linearly solved entries substituted, saturated (cached).

        Returns
        -------
        (ideal, eliminated): the saturated ideal in the remaining entries, or
        None when the determinant vanishes on the coset, and the number of
        substituted entries.
        """
        if self._reduced is None:
            ideal, (det,), eliminated = substitute_linear(self.ideal, [self.det_product()])
            sat = saturate(ideal, det, budget=budget) if det else None
            self._reduced = (sat, len(eliminated))
        return self._reduced

    def is_nonempty(self, budget=None):
        sat, _ = self.reduced(budget=budget)
        return sat is not None and is_solvable(sat, budget=budget)

    def dimension(self, budget=None):
        sat, eliminated = self.reduced(budget=budget)
        if sat is None:
            return -1
        dim = ideal_dimension(sat, budget=budget)
        return dim - eliminated if dim >= 0 else dim

    def all_blocks_trivial(self):
        return all(d <= 1 for _, d in self.blocks)

    def permutation_tuple(self, one_indexed=True):
        off = 1 if one_indexed else 0
        return tuple(p + off for p in self.block_perm)

    def evaluate(self, matrix):
        """
        True if an exact matrix lies in this coset.

        Parameters
        ----------
        matrix: array-like
           size x size matrix of integers, sympy numbers or domain elements.
        """
        dom = self.ring.domain
        for r in range(self.size):
            for c in range(self.size):
                if (r, c) not in self.index and dom.convert(matrix[r][c]):
                    return False
        if not self.pattern:
            return True
        vals = [dom.convert(matrix[r][c]) for r, c in self.pattern]
        for g in self.ideal.generators:
            if g(*vals):
                return False
        for d in self.block_determinants():
            if not d(*vals):
                return False
        return True

    def format_generators(self):
        names = [str(s) for s in self.ring.symbols]
        return [format_polynomial(g, names) for g in self.ideal.generators]


class MatrixGroupDescription(object):
    """
    A closed subgroup of GL(n) as a union of cosets, one per degree symmetry.

    Attributes
    ----------
    size: `int`
    column_degrees: `list`
       Degree u_j of each coordinate.
    cosets: `list`
       `coxaut.Coset` objects, the identity coset first.
    """

    def __init__(self, size, column_degrees, cosets, domain, kind):
        self.size = size
        self.column_degrees = list(column_degrees)
        self.cosets = list(cosets)
        self.domain = domain
        self.kind = kind
        self._full_ring = None

    def unit_coset(self):
        """The identity-labelled coset (the degree preserving subgroup)."""
        for c in self.cosets:
            if c.is_unit():
                return c
        return None

    def labels(self):
        return [c.label for c in self.cosets]

    def contains(self, matrix):
        """Index of the coset containing an exact invertible matrix, or None."""
        for i, c in enumerate(self.cosets):
            if c.evaluate(matrix):
                return i
        return None

    def full_ring(self):
        """Polynomial ring in all size^2 entries."""
        if self._full_ring is None:
            names = [entry_name(r, c) for r in range(self.size) for c in range(self.size)]
            self._full_ring = PolyRing(names, self.domain, grevlex)
        return self._full_ring

    def full_generators(self, coset):
        """Coset equations plus the vanishing entries, in all size^2 entries."""
        full = self.full_ring()
        positions = [r * self.size + c for r, c in coset.pattern]
        gens = [map_variables(g, full, positions) for g in coset.ideal.generators]
        for r in range(self.size):
            for c in range(self.size):
                if (r, c) not in coset.index:
                    gens.append(full.gens[r * self.size + c])
        return gens

    def combined_ideal(self):
        """The product of the coset ideals, cutting out the union of the cosets."""
        full = self.full_ring()
        current = None
        for coset in self.cosets:
            gens = self.full_generators(coset)
            if current is None:
                current = gens
            else:
                current = [a * b for a in current for b in gens]
                current = list(dict.fromkeys(p for p in current if p))
        return Ideal(full, current or [])

    def describe(self):
        lines = ["matrix size: %d" % (self.size),
                 "cosets: %d" % (len(self.cosets))]
        for i, c in enumerate(self.cosets):
            lines.append("coset %d: block permutation %s%s" %
                         (i + 1, str(c.permutation_tuple()), " (unit)" if c.is_unit() else ""))
            lines.append("  free entries: %d" % (len(c.pattern)))
            gens = c.format_generators()
            if gens:
                lines.extend("  %s" % (g) for g in gens)
            else:
                lines.append("  (no equations)")
        return "\n".join(lines)

    def to_dict(self):
        return {'size': self.size,
                'column_degrees': [list(w.vec) for w in self.column_degrees],
                'cosets': [{'block_permutation': list(c.permutation_tuple()),
                            'sigma': [[int(x) for x in row] for row in c.label.matrix.tolist()],
                            'entries': [entry_name(r, cc) for r, cc in c.pattern],
                            'equations': c.format_generators()} for c in self.cosets]}


###################################
## Algorithm building blocks     ##
###################################

def _column_images(rep, coset):
    """Image of each basis coordinate as a map S-monomial -> pattern entry."""
    images = []
    for c in range(rep.n):
        img = {}
        for r in coset.block_rows(coset.block_perm[rep.block_of(c)]):
            img[rep.monomials[r]] = coset.var(r, c)
        images.append(img)
    return images


def _admissibility(rep, images, ring):
    eqs = []
    for i in range(rep.n):
        for j in range(i, rep.n):
            e = tuple(a + b for a, b in zip(rep.monomials[i], rep.monomials[j]))
            t = rep.coord(e)
            if t is None:
                continue
            diff = dict(images[t])
            for m, p in _dmul(images[i], images[j]).items():
                diff[m] = diff[m] - p if m in diff else -p
            for m in sorted(diff, key=grlex_key, reverse=True):
                if diff[m] and diff[m] not in eqs:
                    eqs.append(diff[m])
    return eqs


def admissibility_equations(S, rep):
    """
    Equations making a matrix compatible with multiplication on V.

    For basis monomials T^a, T^b whose product T^(a+b) is again a basis
    monomial, the image of T^(a+b) must equal the product of the images.

    Returns
    -------
    equations: `list`
       Polynomials in the ring of all n^2 entries.
    """
    n = rep.n
    full = PolyRing([entry_name(r, c) for r in range(n) for c in range(n)], S.domain, grevlex)
    images = []
    for c in range(n):
        images.append({rep.monomials[r]: full.gens[r * n + c] for r in range(n)})
    return _admissibility(rep, images, full)


def permuting_matrices(sigmas, rep):
    """
    One permutation matrix per degree symmetry.

    Returns
    -------
    pairs: `list`
       (sigma, B_sigma) tuples.

    Raises
    ------
    BlockDimMismatch: if a symmetry joins blocks of different dimension.
    """
    return [(sigma, rep.permuting_matrix(rep.block_permutation(sigma))) for sigma in sigmas]


def _rep_blocks(rep):
    return [(b.offset, b.dim) for b in rep.blocks]


def aut_omega(S, logger=None):
    """All automorphisms of K stabilizing the generator degrees."""
    return enumerate_aut_stabilizing(S.group, generator_degrees(S), logger=logger)


def aut_ks(S, sigmas=None, rep=None, logger=None):
    """
    Describe Aut_{K,Sigma}(S) in GL(n).

    Parameters
    ----------
    S: `coxaut.GradedPolyRing`
    sigmas: `list`, optional
       Degree symmetries, default all of Aut(Omega_S).
    rep: `coxaut.RepBasis`, optional

    Returns
    -------
    group: `coxaut.MatrixGroupDescription`
    """
    if rep is None:
        rep = build_rep_basis(S, logger=logger)
    if sigmas is None:
        sigmas = aut_omega(S, logger=logger)
    cosets = []
    for sigma in sigmas:
        try:
            perm = rep.block_permutation(sigma)
        except BlockDimMismatch as err:
            log_info(logger, "Skipping degree symmetry: %s" % (str(err)))
            continue

        def gens(coset):
            return _admissibility(rep, _column_images(rep, coset), coset.ring)

        cosets.append(Coset.from_pattern(sigma, perm, _rep_blocks(rep), S.domain, gens))
    log_info(logger, "Aut_K(S) described by %d cosets" % (len(cosets)))
    return MatrixGroupDescription(rep.n, rep.column_degrees(), cosets, S.domain, 'aut_ks')


def transporter(S, ideal1, ideal2, sigmas=None, rep=None, base=None, logger=None):
    """
    The matrices A of Aut_{K,Sigma}(S) with A.I1 contained in I2.

    For each ideal generator degree u of I1 and each basis element h of
    (I1)_u, the image A.h must satisfy the linear forms cutting out
    (I2)_sigma(u) inside S_sigma(u).

    Returns
    -------
    group: `coxaut.MatrixGroupDescription`
       A closed subset of GL(n), not a group in general.
    """
    if rep is None:
        rep = build_rep_basis(S, logger=logger)
    if base is None:
        base = aut_ks(S, sigmas=sigmas, rep=rep, logger=logger)
    omega1 = ideal_generator_degrees(ideal1)
    basis1 = {u: ideal_component(ideal1, u).polynomials() for u in omega1}
    var_coords = [rep.coord(tuple(1 if j == i else 0 for j in range(S.nvars))) for i in range(S.nvars)]
    cosets = []
    for coset in base.cosets:
        sigma = coset.label
        columns = _column_images(rep, coset)
        images = [columns[c] for c in var_coords]
        cache = {}
        gens = list(coset.ideal.generators)
        for u in omega1:
            target = ideal_component(ideal2, sigma(u))
            forms = target.complement_forms()
            if not forms:
                continue
            index = {m: i for i, m in enumerate(target.monomials)}
            for h in basis1[u]:
                image = _substitute(h, images, coset.ring, cache)
                for m in image:
                    if m not in index:
                        raise NotHomogeneous("Image of %s leaves degree %s" %
                                             (S.format(h), str(sigma(u))))
                for form in forms:
                    eq = coset.ring.zero
                    for m, p in image.items():
                        c = form[index[m]]
                        if c:
                            eq = eq + p.mul_ground(c)
                    if eq and eq not in gens:
                        gens.append(eq)
        cosets.append(coset.with_generators(gens))
    return MatrixGroupDescription(base.size, base.column_degrees, cosets, base.domain, 'transporter')


def stab_ideal(S, ideal, sigmas=None, rep=None, base=None, logger=None):
    """
    Describe the stabilizer of an ideal in Aut_{K,Sigma}(S).

    Degree symmetries that do not stabilize Omega_I are dropped first.

    Returns
    -------
    group: `coxaut.MatrixGroupDescription`
    """
    if rep is None:
        rep = build_rep_basis(S, logger=logger)
    if base is None:
        base = aut_ks(S, sigmas=sigmas, rep=rep, logger=logger)
    omega_i = set(ideal_generator_degrees(ideal))
    kept = []
    for coset in base.cosets:
        if set(coset.label(u) for u in omega_i) == omega_i:
            kept.append(coset)
        else:
            log_info(logger, "Degree symmetry %s moves the ideal generator degrees" %
                     (str(coset.permutation_tuple())))
    base = MatrixGroupDescription(base.size, base.column_degrees, kept, base.domain, 'aut_ks')
    group = transporter(S, ideal, ideal, rep=rep, base=base, logger=logger)
    group.kind = 'stab'
    return group


###################################
## Quotient representation       ##
###################################

class QuotientRep(object):
    """
    The quotient V / I_V with a monomial complement basis.

    Attributes
    ----------
    k: `int`
       Dimension of V / I_V.
    complement: `list`
       Coordinates in V of the complement monomials u_1, ..., u_k.
    projection: `list`
       k x n matrix of V -> V / I_V in the complement basis.
    """

    def __init__(self, rep, components):
        self.rep = rep
        domain = rep.ring.domain
        n = rep.n
        complement = []
        blocks = []
        nonpivots = []
        for b, comp in zip(rep.blocks, components):
            piv = set(comp.pivots)
            nonpiv = [f for f in range(b.dim) if f not in piv]
            blocks.append((len(complement), len(nonpiv)))
            nonpivots.append(nonpiv)
            complement.extend(b.offset + f for f in nonpiv)
        self.complement = complement
        self.blocks = blocks
        self.k = len(complement)
        self.monomials = [rep.monomials[c] for c in complement]
        self.column_degrees = [rep.blocks[rep.block_of(c)].degree for c in complement]
        where = {c: i for i, c in enumerate(complement)}

        P = [[domain.zero] * n for _ in range(self.k)]
        for new, old in enumerate(complement):
            P[new][old] = domain.one
        for b, comp, nonpiv in zip(rep.blocks, components, nonpivots):
            for row, p in zip(comp.rows, comp.pivots):
                for f in nonpiv:
                    if row[f]:
                        P[where[b.offset + f]][b.offset + p] = -row[f]
        self.projection = P
        self.inclusion = [[domain.one if where.get(r) == j else domain.zero for j in range(self.k)]
                          for r in range(n)]

    def is_trivial(self):
        return self.k == self.rep.n

    def project(self, matrix):
        """The induced k x k matrix P A E of an n x n matrix A."""
        dom = self.rep.ring.domain
        A = [[dom.convert(x) for x in row] for row in matrix]
        out = []
        for i in range(self.k):
            row = []
            for j in range(self.k):
                c = self.complement[j]
                row.append(sum((self.projection[i][r] * A[r][c] for r in range(self.rep.n)),
                               dom.zero))
            out.append(row)
        return out


def quot_rep(S, ideal, group, rep=None, budget=None, logger=None):
    """
    Push a stabilizer description down to GL(k), k = dim V / I_V.

    Parameters
    ----------
    group: `coxaut.MatrixGroupDescription`
       Output of stab_ideal.

    Returns
    -------
    qgroup: `coxaut.MatrixGroupDescription`
    qrep: `coxaut.QuotientRep`
    """
    if rep is None:
        rep = build_rep_basis(S, logger=logger)
    components = [ideal_component(ideal, b.degree) for b in rep.blocks]
    qrep = QuotientRep(rep, components)
    if qrep.is_trivial():
        log_info(logger, "All I_q vanish: the quotient representation is the stabilizer itself")
        return group, qrep

    log_info(logger, "Quotient representation of dimension %d" % (qrep.k))
    cosets = []
    for coset in group.cosets:
        dims = [d for _, d in qrep.blocks]
        if any(dims[c] != dims[coset.block_perm[c]] for c in range(len(dims))):
            log_info(logger, "Dropping coset %s: quotient blocks do not match" %
                     (str(coset.permutation_tuple())))
            continue
        qcoset = Coset.from_pattern(coset.label, coset.block_perm, qrep.blocks, group.domain)
        tmp = PolyRing(['Q%d_%d' % (r + 1, c + 1) for r, c in qcoset.pattern], group.domain, grevlex)
        images = []
        for r, c in qcoset.pattern:
            col = qrep.complement[c]
            img = coset.ring.zero
            for rr in range(rep.n):
                coef = qrep.projection[r][rr]
                v = coset.var(rr, col)
                if coef and v is not None:
                    img = img + v.mul_ground(coef)
            images.append(img)
        pre = preimage(images, coset.saturated(budget=budget, logger=logger), tmp,
                       budget=budget, logger=logger)
        positions = list(range(len(qcoset.pattern)))
        gens = [map_variables(g, qcoset.ring, positions) for g in pre.generators]
        cosets.append(qcoset.with_generators(gens))
    return MatrixGroupDescription(qrep.k, qrep.column_degrees, cosets, group.domain, 'quotient'), qrep


###################################
## Invariants                    ##
###################################

def gamma_group(group, budget=None, logger=None):
    """
    The degree symmetries realized by invertible matrices of a description.

    Returns
    -------
    gamma: `coxaut.FiniteGroup`
    """
    realized = []
    for coset in group.cosets:
        if coset.is_nonempty(budget=budget):
            realized.append(coset.label)
        else:
            log_info(logger, "Coset %s has no invertible points" % (str(coset.permutation_tuple())))
    return FiniteGroup(realized)


def group_dimension(group, budget=None):
    """Largest dimension of a coset after imposing invertibility (-1 if empty)."""
    dims = [coset.dimension(budget=budget) for coset in group.cosets]
    return max(dims) if dims else -1


class ComponentCount(object):
    """
    Number of connected components, or unknown, with a per-coset certificate.
    """

    def __init__(self, count, certificate):
        self.count = count
        self.certificate = certificate

    def is_known(self):
        return self.count is not None

    def __str__(self):
        return "unknown" if self.count is None else str(self.count)

    def to_dict(self):
        return {'count': self.count, 'certificate': self.certificate}


def coset_lattice(coset, budget=None):
    """
    Exponent lattice of a coset whose saturated ideal is binomial.

    Returns
    -------
    lattice: `list` or None
       Basis vectors in the pattern coordinates, None if not binomial.
    """
    sat = coset.saturated(budget=budget)
    gb = groebner(sat, budget=budget)
    vectors = []
    for g in gb.elements:
        terms = g.terms()
        if len(terms) != 2:
            return None
        (e1, _), (e2, _) = terms
        vectors.append(tuple(a - b for a, b in zip(e1, e2)))
    return vectors


def component_count(group, budget=None):
    """
    Count connected components by the binomial lattice method.

    A nonempty coset whose pattern is a monomial matrix pattern and whose
    saturated ideal is binomial is a translate of a diagonalizable group with
    exponent lattice L; it has [L_sat : L] components.

    Returns
    -------
    count: `coxaut.ComponentCount`
    """
    total = 0
    known = True
    certificate = []
    for coset in group.cosets:
        entry = {'block_permutation': list(coset.permutation_tuple())}
        if not coset.is_nonempty(budget=budget):
            entry['components'] = 0
            certificate.append(entry)
            continue
        if not coset.all_blocks_trivial():
            entry['components'] = 'unknown'
            entry['reason'] = 'blocks of dimension > 1'
            known = False
            certificate.append(entry)
            continue
        lattice = coset_lattice(coset, budget=budget)
        if lattice is None:
            entry['components'] = 'unknown'
            entry['reason'] = 'not binomial'
            known = False
            certificate.append(entry)
            continue
        index = lattice_index_in_saturation(lattice, len(coset.pattern))
        entry['components'] = index
        entry['lattice'] = [list(v) for v in lattice]
        total += index
        certificate.append(entry)
    return ComponentCount(total if known else None, certificate)


def check_entry_homogeneous(group, column_degrees=None):
    """
    Check every coset equation is homogeneous for deg T_ij = u_j.

    Raises
    ------
    NotHomogeneous: naming the offending generator.
    """
    if column_degrees is None:
        column_degrees = group.column_degrees
    for coset in group.cosets:
        var_degrees = [column_degrees[c] for _, c in coset.pattern]
        K = column_degrees[0].group if column_degrees else None
        for g, text in zip(coset.ideal.generators, coset.format_generators()):
            degree = None
            for exp in g.itermonoms():
                d = sum_elements(K, [var_degrees[i] * e for i, e in enumerate(exp) if e])
                if degree is None:
                    degree = d
                elif d != degree:
                    raise NotHomogeneous("Equation %s is not homogeneous in the entry grading" % (text),
                                         witness=text)
    return True


###################################
## Symmetries and bounds         ##
###################################

def _permute(f, perm, ring):
    terms = {}
    for exp, c in f.terms():
        new = [0] * len(exp)
        for i, e in enumerate(exp):
            new[perm[i]] += e
        terms[tuple(new)] = c
    return ring.from_dict(terms)


def extract_permutation_symmetries(S, ideal, sigmas=None, logger=None):
    """
    All variable permutations mapping every ideal generator into the ideal.

    Candidates send the variables of degree w to those of degree sigma(w)
    for some degree symmetry sigma.  Membership is decided degree by degree
    by linear algebra.

    Returns
    -------
    perms: `list`
       Sorted 0-based image tuples (perm[i] is the index T_i goes to).
    """
    if sigmas is None:
        sigmas = aut_omega(S, logger=logger)
    by_degree = {}
    for i, d in enumerate(S.degrees):
        by_degree.setdefault(d, []).append(i)
    gens = [(g, S.degree_of(g)) for g in ideal.generators]
    components = {}
    found = set()
    for sigma in sigmas:
        choices = []
        ok = True
        for w, vars_w in by_degree.items():
            target = by_degree.get(sigma(w), [])
            if len(target) != len(vars_w):
                ok = False
                break
            choices.append((vars_w, list(itertools.permutations(target))))
        if not ok:
            continue
        for combo in itertools.product(*[c[1] for c in choices]):
            perm = [None] * S.nvars
            for (vars_w, _), images in zip(choices, combo):
                for i, j in zip(vars_w, images):
                    perm[i] = j
            good = True
            for g, d in gens:
                target = sigma(d)
                if target not in components:
                    components[target] = ideal_component(ideal, target)
                if not components[target].contains(_permute(g, perm, S.poly_ring)):
                    good = False
                    break
            if good:
                found.add(tuple(perm))
    perms = sorted(found)
    log_info(logger, "Found %d permutation symmetries" % (len(perms)))
    return perms


def permutations_closed(perms):
    """True if a set of permutations is closed under composition and inverses."""
    pset = set(perms)
    for p in perms:
        inv = [0] * len(p)
        for i, j in enumerate(p):
            inv[j] = i
        if tuple(inv) not in pset:
            return False
        for q in perms:
            if tuple(p[q[i]] for i in range(len(p))) not in pset:
                return False
    return True


def dim_bound(S, ideal, mds=False):
    """
    Upper bound on the dimension of the graded automorphism group.

    Sum over w in Omega of dim(R_w)^2, minus the free rank of K for the
    automorphism group of the Mori dream space.
    """
    total = 0
    for w in generator_degrees(S):
        d = S.component_dimension(w) - ideal_component(ideal, w).dim
        total += d * d
    if mds:
        total -= S.group.free_rank
    return total
