"""Rational polyhedral cones with exact double description.

Cones live in Q^d and are kept in both descriptions: generators (rays plus a
lineality basis) and halfspaces (facet normals plus equations).  The conversion
between the two is done by the Parma Polyhedra Library in exact integers.
"""
from math import gcd

import ppl

from .utilities import ShapeMismatch


def primitive(vec):
    """Divide an integer vector by the gcd of its entries."""
    vec = [int(v) for v in vec]
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g <= 1:
        return tuple(vec)
    return tuple(v // g for v in vec)


def dot(a, b):
    return sum(int(x) * int(y) for x, y in zip(a, b))


def _expression(vec, dim):
    vec = [int(x) for x in vec]
    if len(vec) != dim:
        raise ShapeMismatch("Vector of length %d in dimension %d" % (len(vec), dim))
    return ppl.Linear_Expression(vec, 0)


def _halfspace_polyhedron(inequalities, equations, dim):
    cone = ppl.C_Polyhedron(dim, 'universe')
    for a in inequalities:
        cone.add_constraint(ppl.Constraint(_expression(a, dim) >= 0))
    for e in equations:
        cone.add_constraint(ppl.Constraint(_expression(e, dim) == 0))
    return cone


def _coefficients(obj, dim):
    coefs = [int(c) for c in obj.coefficients()]
    return primitive(coefs + [0] * (dim - len(coefs)))


def _generators(cone, dim):
    rays = []
    lineality = []
    for gen in cone.minimized_generators():
        if gen.is_ray():
            rays.append(_coefficients(gen, dim))
        elif gen.is_line():
            lineality.append(_coefficients(gen, dim))
    return sorted(set(rays)), sorted(lineality)


def _constraints(cone, dim):
    facets = []
    equations = []
    for con in cone.minimized_constraints():
        coefs = _coefficients(con, dim)
        if all(x == 0 for x in coefs):
            continue
        if con.is_equality():
            equations.append(coefs)
        else:
            facets.append(coefs)
    return sorted(set(facets)), sorted(equations)


def double_description(inequalities, dim, equations=()):
    """
    Generators of the cone {x : a.x >= 0 for all a in inequalities}.

    Parameters
    ----------
    inequalities: `list`
       Integer vectors of length ``dim``.
    dim: `int`
       Ambient dimension.
    equations: `list`, optional
       Integer vectors e with e.x == 0 on the cone.

    Returns
    -------
    rays: `list`
       Primitive extreme rays of the pointed part, sorted.
    lineality: `list`
       Integer basis of the lineality space.
    """
    return _generators(_halfspace_polyhedron(inequalities, equations, dim), dim)


class RationalCone(object):
    """
    A rational polyhedral cone in Q^d, in both descriptions.
    """

    def __init__(self, dim, rays, lineality, facets, equations):
        self.ambient_dim = dim
        self.rays = tuple(sorted(set(rays)))
        self.lineality = tuple(lineality)
        self.facets = tuple(sorted(set(facets)))
        self.equations = tuple(equations)

    @classmethod
    def from_rays(cls, rays, dim, lineality=()):
        """
        Build a cone from generators.

        Parameters
        ----------
        rays: `list`
           Integer (or rational-free integer) generator vectors.
        dim: `int`
           Ambient dimension.
        lineality: `list`, optional
           Generators of a lineality space.

        Returns
        -------
        cone: `coxaut.RationalCone`
        """
        cone = ppl.C_Polyhedron(dim, 'empty')
        cone.add_generator(ppl.point())
        for r in rays:
            if any(int(x) != 0 for x in r):
                cone.add_generator(ppl.ray(_expression(r, dim)))
        for l in lineality:
            if any(int(x) != 0 for x in l):
                cone.add_generator(ppl.line(_expression(l, dim)))
        return cls._from_polyhedron(cone, dim)

    @classmethod
    def from_inequalities(cls, inequalities, equations, dim):
        """
        Build a cone from halfspaces a.x >= 0 and equations e.x == 0.
        """
        return cls._from_polyhedron(_halfspace_polyhedron(inequalities, equations, dim), dim)

    @classmethod
    def _from_polyhedron(cls, cone, dim):
        rays, lin = _generators(cone, dim)
        facets, equations = _constraints(cone, dim)
        return cls(dim, rays, lin, facets, equations)

    def contains(self, vec):
        """True if the integer (or rational) vector lies in the cone."""
        if len(vec) != self.ambient_dim:
            raise ShapeMismatch("Vector of length %d in a cone of dimension %d" %
                                (len(vec), self.ambient_dim))
        if any(dot(e, vec) != 0 for e in self.equations):
            return False
        return all(dot(f, vec) >= 0 for f in self.facets)

    def contains_cone(self, other):
        gens = list(other.rays) + list(other.lineality) + [tuple(-x for x in l) for l in other.lineality]
        return all(self.contains(g) for g in gens)

    def intersect(self, other):
        """Intersection with another cone (halfspaces concatenated)."""
        if other.ambient_dim != self.ambient_dim:
            raise ShapeMismatch("Cannot intersect cones of different ambient dimension")
        return RationalCone.from_inequalities(list(self.facets) + list(other.facets),
                                              list(self.equations) + list(other.equations),
                                              self.ambient_dim)

    def dimension(self):
        return self.ambient_dim - len(self.equations)

    def is_pointed(self):
        return len(self.lineality) == 0

    def relative_interior_point(self):
        """Sum of the generators; lies in the relative interior."""
        pt = [0] * self.ambient_dim
        for r in self.rays:
            pt = [a + b for a, b in zip(pt, r)]
        return tuple(pt)

    def is_interior(self, vec):
        """True if vec lies in the relative interior."""
        return self.contains(vec) and all(dot(f, vec) > 0 for f in self.facets)

    def transform(self, matrix):
        """Image of a pointed cone under an integer matrix (rows act on columns)."""
        imgs = []
        for r in self.rays:
            imgs.append([sum(int(matrix[i][j]) * r[j] for j in range(self.ambient_dim))
                         for i in range(self.ambient_dim)])
        lin = []
        for l in self.lineality:
            lin.append([sum(int(matrix[i][j]) * l[j] for j in range(self.ambient_dim))
                        for i in range(self.ambient_dim)])
        return RationalCone.from_rays(imgs, self.ambient_dim, lineality=lin)

    def __eq__(self, other):
        return (isinstance(other, RationalCone) and other.ambient_dim == self.ambient_dim and
                self.contains_cone(other) and other.contains_cone(self))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ambient_dim, self.rays, len(self.lineality)))

    def __repr__(self):
        return "RationalCone(rays=%r, lineality=%r)" % (list(self.rays), list(self.lineality))

    def describe(self):
        """Rays and facets as printable text."""
        lines = ["rays:"]
        lines.extend("  %s" % (" ".join(str(x) for x in r)) for r in self.rays)
        if self.lineality:
            lines.append("lineality:")
            lines.extend("  %s" % (" ".join(str(x) for x in l)) for l in self.lineality)
        lines.append("facets:")
        lines.extend("  %s" % (" ".join(str(x) for x in f)) for f in self.facets)
        if self.equations:
            lines.append("equations:")
            lines.extend("  %s" % (" ".join(str(x) for x in e)) for e in self.equations)
        return "\n".join(lines)


def positive_relation(vectors, dim):
    """
    A nonnegative integer relation sum(nu_i v_i) = 0 with largest possible support.

    Returns None when the only such relation is zero.
    """
    r = len(vectors)
    ineqs = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
    eqs = [tuple(int(vectors[i][c]) for i in range(r)) for c in range(dim)]
    cone = RationalCone.from_inequalities(ineqs, eqs, r)
    if not cone.rays:
        return None
    return cone.relative_interior_point()
