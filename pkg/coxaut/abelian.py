"""Finitely generated abelian groups, their elements and endomorphisms.

A grading group is K = Z^k + Z/n_1 + ... + Z/n_m, kept in the decomposition the
user gave.  Elements are integer vectors with the torsion entries last, and
endomorphisms are integer matrices in block form [[B, 0], [C, D]].
"""
import itertools
from collections import Counter

import numpy as np
import sympy
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from .utilities import ShapeMismatch, NonEffectiveGrading


def int_matrix(rows, ncols=None):
    """
    Convert nested rows to a numpy object array of python ints.

    Parameters
    ----------
    rows: array-like
       Integer rows.
    ncols: `int`, optional
       Number of columns, needed when there are no rows.

    Returns
    -------
    mat: `np.ndarray`
       Object array of python ints.
    """
    rows = [[int(x) for x in row] for row in rows]
    if len(rows) == 0:
        return np.zeros((0, 0 if ncols is None else ncols), dtype=object)
    mat = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != mat.shape[1]:
            raise ShapeMismatch("Ragged integer matrix: row %d has %d entries, expected %d" %
                                (i, len(row), mat.shape[1]))
        mat[i, :] = row
    return mat


def identity_matrix(n):
    """Object-dtype integer identity matrix."""
    mat = np.zeros((n, n), dtype=object)
    for i in range(n):
        mat[i, i] = 1
    return mat


def _zeros(nr, nc):
    mat = np.empty((nr, nc), dtype=object)
    mat.fill(0)
    return mat


###################################
## Smith normal form             ##
###################################

def _from_domain(dM):
    rows = [[int(x) for x in row] for row in dM.to_list()]
    return int_matrix(rows, ncols=dM.shape[1])


def smith_normal_form(M):
    """
    Compute the Smith normal form of an integer matrix.

    Parameters
    ----------
    M: array-like
       Integer matrix.

    Returns
    -------
    U: `np.ndarray`
       Unimodular row transform.
    D: `np.ndarray`
       Diagonal matrix with nonnegative d_i, d_i | d_{i+1}, zeros last.
    V: `np.ndarray`
       Unimodular column transform, with U @ M @ V == D.
    """
    M = np.array(M, dtype=object)
    if M.ndim != 2:
        raise ShapeMismatch("smith_normal_form needs a 2d matrix")
    nr, nc = M.shape
    if nr == 0 or nc == 0:
        return identity_matrix(nr), _zeros(nr, nc), identity_matrix(nc)

    dM = DomainMatrix([[ZZ(int(x)) for x in row] for row in M.tolist()], (nr, nc), ZZ)
    dD, dU, dV = smith_normal_decomp(dM)
    U, D, V = _from_domain(dU), _from_domain(dD), _from_domain(dV)

    for t in range(min(nr, nc)):
        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            U[t, :] = -U[t, :]

    return U, D, V


def _diagonal(D):
    return [D[i, i] for i in range(min(D.shape))]


def integer_kernel(M):
    """
    Integer basis of the kernel of an integer matrix.

    Parameters
    ----------
    M: `np.ndarray`
       Integer matrix (nr x nc).

    Returns
    -------
    basis: `list`
       List of integer tuples of length nc spanning the kernel lattice.
    """
    M = np.array(M, dtype=object)
    nc = M.shape[1]
    if M.shape[0] == 0:
        return [tuple(int(x) for x in identity_matrix(nc)[:, j]) for j in range(nc)]
    U, D, V = smith_normal_form(M)
    diag = _diagonal(D)
    rank = sum(1 for d in diag if d != 0)
    return [tuple(int(x) for x in V[:, j]) for j in range(rank, nc)]


def lattice_index_in_saturation(vectors, ambient_dim):
    """
    Index of the lattice spanned by ``vectors`` in its saturation.

    This is the product of the nonzero invariant factors.
    """
    if len(vectors) == 0:
        return 1
    M = int_matrix(vectors, ncols=ambient_dim)
    U, D, V = smith_normal_form(M)
    index = 1
    for d in _diagonal(D):
        if d != 0:
            index *= int(d)
    return index


def saturation_basis(vectors, ambient_dim):
    """
    Basis of the saturation (L tensor Q) intersected with Z^d of a lattice L.
    """
    if len(vectors) == 0:
        return []
    M = int_matrix(vectors, ncols=ambient_dim)
    # saturation of the row span = kernel of the kernel
    perp = integer_kernel(M)
    if len(perp) == 0:
        return [tuple(int(x) for x in identity_matrix(ambient_dim)[:, j])
                for j in range(ambient_dim)]
    return integer_kernel(int_matrix(perp, ncols=ambient_dim))


def lattice_intersection(basis1, basis2, ambient_dim):
    """
    Basis of the intersection of two sublattices of Z^d.

    Solves x B1 = y B2 over the integers.
    """
    if len(basis1) == 0 or len(basis2) == 0:
        return []
    B1 = int_matrix(basis1, ncols=ambient_dim)
    B2 = int_matrix(basis2, ncols=ambient_dim)
    stacked = np.concatenate([B1.T, -B2.T], axis=1)
    coeffs = integer_kernel(stacked)
    out = []
    for c in coeffs:
        x = np.array(c[:B1.shape[0]], dtype=object)
        out.append(tuple(int(v) for v in x.dot(B1)))
    return out


def lattice_contains(basis, vector, ambient_dim):
    """True if ``vector`` lies in the lattice spanned by ``basis``."""
    if all(v == 0 for v in vector):
        return True
    if len(basis) == 0:
        return False
    M = int_matrix(list(basis), ncols=ambient_dim).T
    U, D, V = smith_normal_form(M)
    rhs = U.dot(np.array(vector, dtype=object))
    diag = _diagonal(D)
    for i in range(M.shape[0]):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if rhs[i] != 0:
                return False
        elif rhs[i] % d != 0:
            return False
    return True


###################################
## Groups and elements           ##
###################################

class AbelianGroup(object):
    """
    A finitely generated abelian group Z^k + Z/n_1 + ... + Z/n_m.
    """

    def __init__(self, free_rank, torsion_orders=()):
        """
        Instantiate an AbelianGroup.

        Parameters
        ----------
        free_rank: `int`
           Rank k of the free part.
        torsion_orders: `list`, optional
           Orders n_i >= 2 of the cyclic torsion summands.
        """
        free_rank = int(free_rank)
        if free_rank < 0:
            raise ValueError("free_rank must be nonnegative")
        orders = tuple(int(n) for n in torsion_orders)
        for n in orders:
            if n < 2:
                raise ValueError("Torsion orders must be >= 2, got %d" % (n))
        self.free_rank = free_rank
        self.torsion_orders = orders

    @classmethod
    def from_presentation(cls, ngens, relations):
        """
        The group Z^ngens / <relations> in normal form.

        Parameters
        ----------
        ngens: `int`
        relations: `list`
           Integer vectors of length ngens.

        Returns
        -------
        group: `coxaut.AbelianGroup`
        projection: `np.ndarray`
           Matrix of the quotient map from Z^ngens.
        """
        return quotient_group(cls(ngens), [tuple(int(x) for x in r) for r in relations])

    @property
    def ngens(self):
        return self.free_rank + len(self.torsion_orders)

    @property
    def moduli(self):
        """Per-coordinate modulus, None on the free coordinates."""
        return (None,) * self.free_rank + self.torsion_orders

    @property
    def exponent(self):
        """Smallest positive a with a*t = 0 for every torsion element t."""
        a = 1
        for n in self.torsion_orders:
            a = a * n // sympy.igcd(a, n)
        return a

    def is_finite(self):
        return self.free_rank == 0

    def relation_matrix(self):
        """
        Columns n_i e_{k+i} generating the relations of the torsion part.
        """
        R = _zeros(self.ngens, len(self.torsion_orders))
        for i, n in enumerate(self.torsion_orders):
            R[self.free_rank + i, i] = n
        return R

    def canonical_blocks(self):
        """
        Prime power decomposition of the torsion part.

        Returns
        -------
        blocks: `list`
           Sorted list of (p, e) with one Z/p^e summand each.
        """
        blocks = []
        for n in self.torsion_orders:
            for p, e in sympy.factorint(n).items():
                blocks.append((int(p), int(e)))
        return sorted(blocks)

    def element(self, vec):
        """Make a GroupElement from an integer vector."""
        return GroupElement(self, vec)

    def zero(self):
        return GroupElement(self, (0,) * self.ngens)

    def parse_element(self, value):
        """
        Parse an element given as a list or a whitespace string.

        Parameters
        ----------
        value: `list` or `str`
           Entries with the torsion entries last.
        """
        if isinstance(value, str):
            value = value.replace(',', ' ').split()
        elif isinstance(value, int):
            value = [value]
        try:
            vec = [int(v) for v in value]
        except (TypeError, ValueError):
            raise ShapeMismatch("Cannot read group element from %r" % (value,))
        return GroupElement(self, vec)

    def __eq__(self, other):
        return (isinstance(other, AbelianGroup) and
                self.free_rank == other.free_rank and
                self.torsion_orders == other.torsion_orders)

    def __hash__(self):
        return hash((self.free_rank, self.torsion_orders))

    def __repr__(self):
        return "AbelianGroup(%d, %r)" % (self.free_rank, list(self.torsion_orders))

    def __str__(self):
        parts = []
        if self.free_rank > 0:
            parts.append("Z^%d" % (self.free_rank))
        for n in self.torsion_orders:
            parts.append("Z/%d" % (n))
        if not parts:
            return "0"
        return " + ".join(parts)


class GroupElement(object):
    """
    An element of an AbelianGroup, torsion entries stored reduced.
    """

    __slots__ = ('group', 'vec')

    def __init__(self, group, vec):
        vec = tuple(int(v) for v in vec)
        if len(vec) != group.ngens:
            raise ShapeMismatch("Element of length %d does not fit %s" % (len(vec), str(group)))
        k = group.free_rank
        reduced = vec[:k] + tuple(v % n for v, n in zip(vec[k:], group.torsion_orders))
        self.group = group
        self.vec = reduced

    @property
    def free(self):
        return self.vec[:self.group.free_rank]

    @property
    def torsion(self):
        return self.vec[self.group.free_rank:]

    def is_zero(self):
        return all(v == 0 for v in self.vec)

    def _check(self, other):
        if not isinstance(other, GroupElement) or other.group != self.group:
            raise ShapeMismatch("Cannot combine elements of different groups")

    def __add__(self, other):
        self._check(other)
        return GroupElement(self.group, [a + b for a, b in zip(self.vec, other.vec)])

    def __sub__(self, other):
        self._check(other)
        return GroupElement(self.group, [a - b for a, b in zip(self.vec, other.vec)])

    def __neg__(self):
        return GroupElement(self.group, [-a for a in self.vec])

    def __mul__(self, n):
        return GroupElement(self.group, [int(n) * a for a in self.vec])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.group == other.group and self.vec == other.vec

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.group, self.vec))

    def __lt__(self, other):
        return self.vec < other.vec

    def __repr__(self):
        return "GroupElement(%r)" % (list(self.vec),)

    def __str__(self):
        free = " ".join(str(v) for v in self.free)
        if not self.group.torsion_orders:
            return "(%s)" % (free)
        tors = " ".join(str(v) for v in self.torsion)
        if free:
            return "(%s | %s)" % (free, tors)
        return "(| %s)" % (tors)


def sum_elements(group, elements):
    """Sum of an iterable of GroupElements (zero when empty)."""
    total = group.zero()
    for w in elements:
        total = total + w
    return total


###################################
## Homomorphisms                 ##
###################################

class GroupHom(object):
    """
    An endomorphism of an AbelianGroup given by an integer block matrix.
    """

    def __init__(self, group, matrix):
        """
        Instantiate a GroupHom, checking that it is well defined.

        Parameters
        ----------
        group: `coxaut.AbelianGroup`
           Source and target group.
        matrix: array-like
           n x n integer matrix [[B, 0], [C, D]].

        Raises
        ------
        ShapeMismatch: wrong matrix shape.
        ValueError: the matrix does not define a map on the group.
        """
        A = int_matrix(matrix, ncols=group.ngens) if not isinstance(matrix, np.ndarray) \
            else np.array(matrix, dtype=object)
        n = group.ngens
        if A.shape != (n, n):
            raise ShapeMismatch("Homomorphism matrix of shape %s does not fit %s" %
                                (str(A.shape), str(group)))
        A = A.copy()
        k = group.free_rank
        orders = group.torsion_orders
        for i in range(k):
            for j in range(k, n):
                if A[i, j] != 0:
                    raise ValueError("Torsion cannot map to the free part (entry %d,%d)" % (i, j))
        for jrow, nj in enumerate(orders):
            for i, ni in enumerate(orders):
                if (ni * A[k + jrow, k + i]) % nj != 0:
                    raise ValueError("Entry (%d,%d) violates the annihilator condition" %
                                     (k + jrow, k + i))
            for col in range(n):
                A[k + jrow, col] = A[k + jrow, col] % nj
        self.group = group
        self.matrix = A

    @classmethod
    def identity(cls, group):
        return cls(group, identity_matrix(group.ngens))

    @property
    def free_block(self):
        k = self.group.free_rank
        return self.matrix[:k, :k]

    @property
    def torsion_block(self):
        k = self.group.free_rank
        return self.matrix[k:, k:]

    @property
    def mixed_block(self):
        k = self.group.free_rank
        return self.matrix[k:, :k]

    def key(self):
        return tuple(int(x) for x in self.matrix.flatten())

    def is_identity(self):
        return self.key() == GroupHom.identity(self.group).key()

    def __call__(self, w):
        return apply(self, w)

    def __eq__(self, other):
        return isinstance(other, GroupHom) and self.group == other.group and self.key() == other.key()

    def __hash__(self):
        return hash((self.group, self.key()))

    def __repr__(self):
        return "GroupHom(%r)" % (self.matrix.tolist(),)


def apply(h, w):
    """
    Apply a homomorphism to an element.

    Parameters
    ----------
    h: `coxaut.GroupHom`
    w: `coxaut.GroupElement`

    Returns
    -------
    image: `coxaut.GroupElement`
    """
    if w.group != h.group:
        raise ShapeMismatch("Element and homomorphism live on different groups")
    vec = h.matrix.dot(np.array(w.vec, dtype=object))
    return GroupElement(h.group, vec)


def compose(h1, h2):
    """The composition h1 o h2."""
    if h1.group != h2.group:
        raise ShapeMismatch("Cannot compose homomorphisms of different groups")
    return GroupHom(h1.group, h1.matrix.dot(h2.matrix))


def _det(mat):
    if mat.shape[0] == 0:
        return 1
    return int(sympy.Matrix(mat.tolist()).det())


def is_automorphism(h, K=None):
    """
    Check whether a homomorphism is invertible.

    Parameters
    ----------
    h: `coxaut.GroupHom`
    K: `coxaut.AbelianGroup`, optional
       Group to check against, defaults to ``h.group``.

    Returns
    -------
    is_aut: `bool`
    """
    if K is not None and K != h.group:
        raise ShapeMismatch("Homomorphism is defined on %s, not %s" % (str(h.group), str(K)))
    K = h.group
    if abs(_det(h.free_block)) != 1:
        return False
    m = len(K.torsion_orders)
    if m == 0:
        return True
    # The torsion map is onto iff the columns of D and the relations span Z^m.
    N = K.relation_matrix()[K.free_rank:, :]
    U, D, V = smith_normal_form(np.concatenate([h.torsion_block, N], axis=1))
    return all(d == 1 for d in _diagonal(D))


def invert(h):
    """
    Inverse of an automorphism.

    Raises
    ------
    ValueError: if ``h`` is not an automorphism.
    """
    if not is_automorphism(h):
        raise ValueError("Cannot invert a non-automorphism")
    K = h.group
    k = K.free_rank
    m = len(K.torsion_orders)
    n = K.ngens
    B = h.free_block
    if k > 0:
        Binv = sympy.Matrix(B.tolist()).inv()
        Binv = int_matrix([[int(x) for x in Binv.row(i)] for i in range(k)], ncols=k)
    else:
        Binv = _zeros(0, 0)
    inv = _zeros(n, n)
    inv[:k, :k] = Binv
    if m > 0:
        T = AbelianGroup(0, K.torsion_orders)
        Dh = GroupHom(T, h.torsion_block)
        ident = GroupHom.identity(T)
        power = Dh
        prev = ident
        while power != ident:
            prev = power
            power = compose(power, Dh)
        Dinv = prev.matrix
        C = h.mixed_block
        inv[k:, k:] = Dinv
        inv[k:, :k] = -(Dinv.dot(C).dot(Binv)) if k > 0 else _zeros(m, 0)
    return GroupHom(K, inv)


###################################
## Sub- and quotient groups      ##
###################################

def generates(K, elements):
    """
    Check whether ``elements`` generate K.

    Returns
    -------
    ok: `bool`
    quotient: `coxaut.AbelianGroup`
       The cokernel K / <elements> (trivial iff ok).
    """
    Q, _ = quotient_group(K, elements)
    return Q.ngens == 0, Q


def quotient_group(K, subgroup_gens):
    """
    The quotient of K by the subgroup generated by ``subgroup_gens``.

    Parameters
    ----------
    K: `coxaut.AbelianGroup`
    subgroup_gens: `list`
       GroupElements (or integer vectors) generating K'.

    Returns
    -------
    quotient: `coxaut.AbelianGroup`
       K / K' with free part first.
    projection: `np.ndarray`
       Integer matrix P such that x -> P x (torsion rows reduced) is the quotient map.
    """
    n = K.ngens
    cols = [list(w.vec if isinstance(w, GroupElement) else w) for w in subgroup_gens]
    R = K.relation_matrix()
    if cols:
        R = np.concatenate([R, int_matrix(cols, ncols=n).T], axis=1)
    if R.shape[1] == 0:
        return K, identity_matrix(n)
    U, D, V = smith_normal_form(R)
    diag = _diagonal(D) + [0] * (n - min(D.shape))
    free_rows = [i for i in range(n) if diag[i] == 0]
    tors_rows = [i for i in range(n) if diag[i] not in (0, 1)]
    Q = AbelianGroup(len(free_rows), [int(diag[i]) for i in tors_rows])
    rows = [list(U[i, :]) for i in free_rows + tors_rows]
    P = int_matrix(rows, ncols=n)
    return Q, P


def kernel_lattice(K, degrees):
    """
    Integer basis of the kernel of the degree map Z^r -> K.

    Parameters
    ----------
    K: `coxaut.AbelianGroup`
    degrees: `list`
       GroupElements deg(e_1), ..., deg(e_r).

    Returns
    -------
    basis: `list`
       Integer tuples of length r, torsion congruences included.
    """
    r = len(degrees)
    k = K.free_rank
    m = len(K.torsion_orders)
    if r == 0:
        return []
    Q = int_matrix([w.vec for w in degrees], ncols=K.ngens).T
    aug = _zeros(K.ngens, r + m)
    aug[:, :r] = Q
    for i, n in enumerate(K.torsion_orders):
        aug[k + i, r + i] = -n
    if K.ngens == 0:
        return [tuple(int(x) for x in identity_matrix(r)[:, j]) for j in range(r)]
    return [v[:r] for v in integer_kernel(aug)]


###################################
## Automorphisms stabilizing a set ##
###################################

def _free_part_candidates(K, omega):
    """
    All B in GL(k, Z) permuting the free parts of omega, respecting fiber sizes.
    """
    k = K.free_rank
    if k == 0:
        return [_zeros(0, 0)]
    fibers = Counter(w.free for w in omega)
    F = sorted(fibers)

    basis = []
    for f in F:
        trial = basis + [f]
        if sympy.Matrix(trial).rank() > len(basis):
            basis = trial
        if len(basis) == k:
            break
    if len(basis) < k:
        raise NonEffectiveGrading("Free parts of the degree set do not span Q^%d" % (k),
                                  witness=F)
    Bm_inv = sympy.Matrix(basis).T.inv()
    coords = {}
    by_depth = {}
    for f in F:
        c = Bm_inv * sympy.Matrix(f)
        coords[f] = c
        depth = max([i + 1 for i in range(k) if c[i] != 0] or [0])
        by_depth.setdefault(depth, []).append(f)

    found = []

    def extend(images):
        j = len(images)
        for f in by_depth.get(j, []):
            img = sympy.zeros(k, 1)
            for i in range(j):
                img += coords[f][i] * sympy.Matrix(images[i])
            if not all(x.is_integer for x in img):
                return
            img = tuple(int(x) for x in img)
            if fibers.get(img, 0) != fibers[f]:
                return
        if j == k:
            C = sympy.Matrix(images).T
            B = C * Bm_inv
            if not all(x.is_integer for x in B):
                return
            if abs(B.det()) != 1:
                return
            found.append(int_matrix([[int(x) for x in B.row(i)] for i in range(k)], ncols=k))
            return
        for c in F:
            if c in images or fibers[c] != fibers[basis[j]]:
                continue
            extend(images + [c])

    extend([])
    return found


def _torsion_row_options(K):
    k = K.free_rank
    orders = K.torsion_orders
    options = []
    for nj in orders:
        ranges = [range(nj)] * k
        for ni in orders:
            ranges.append([d for d in range(nj) if (ni * d) % nj == 0])
        options.append(list(itertools.product(*ranges)))
    return options


def enumerate_aut_stabilizing(K, omega, logger=None):
    """
    Enumerate the automorphisms of K mapping the finite set omega onto itself.

    Parameters
    ----------
    K: `coxaut.AbelianGroup`
    omega: iterable of `coxaut.GroupElement`
       Degree set; duplicates collapse.
    logger: `coxaut.Logger`, optional

    Returns
    -------
    auts: `list`
       GroupHoms, identity first, the rest sorted by matrix entries.

    Raises
    ------
    NonEffectiveGrading: if omega does not generate K.
    """
    omega = set(omega)
    ok, Q = generates(K, omega)
    if not ok:
        raise NonEffectiveGrading("Degrees do not generate %s; cokernel is %s" % (str(K), str(Q)),
                                  witness=str(Q))
    k = K.free_rank
    n = K.ngens
    free_cands = _free_part_candidates(K, list(omega))
    if logger is not None:
        logger.info("Found %d free-part candidates" % (len(free_cands)))

    row_options = _torsion_row_options(K)
    result = []
    for B in free_cands:
        for rows in itertools.product(*row_options):
            A = _zeros(n, n)
            A[:k, :k] = B
            for j, row in enumerate(rows):
                A[k + j, :] = list(row)
            h = GroupHom(K, A)
            if set(apply(h, w) for w in omega) != omega:
                continue
            if not is_automorphism(h):
                continue
            result.append(h)

    ident = GroupHom.identity(K)
    result = sorted(set(result), key=lambda h: (not h.is_identity(), h.key()))
    if ident not in result:
        raise RuntimeError("Identity missing from the stabilizer enumeration")
    return result


###################################
## Finite groups of automorphisms ##
###################################

class FiniteGroup(object):
    """
    A finite list of GroupHoms with its multiplication table.

    ``table[i][j]`` is the index of compose(elements[i], elements[j]) or None
    when the product falls outside the list.
    """

    def __init__(self, elements):
        self.elements = list(elements)
        index = {h: i for i, h in enumerate(self.elements)}
        self.table = [[index.get(compose(a, b)) for b in self.elements] for a in self.elements]
        self.inverses = []
        for h in self.elements:
            try:
                self.inverses.append(index.get(invert(h)))
            except ValueError:
                self.inverses.append(None)

    @property
    def order(self):
        return len(self.elements)

    def identity_index(self):
        for i, h in enumerate(self.elements):
            if h.is_identity():
                return i
        return None

    def is_closed(self):
        """True if the list is closed under products and inverses and holds the identity."""
        if self.identity_index() is None:
            return False
        if any(x is None for row in self.table for x in row):
            return False
        return all(x is not None for x in self.inverses)

    def is_abelian(self):
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))
