import unittest
import os

from sympy import QQ

from coxaut import (AbelianGroup, CoefficientField, GradedPolyRing, Ideal, ProblemFile,
                    RationalCone, EmptyChamber, BudgetExceeded, Budget)
from coxaut.mds import (CoxInput, AFaceRunner, is_a_face, git_cone, list_a_faces,
                        sigma_of_lambda, aut_hat_x, entry_grading, hilbert_basis, veronese,
                        h_lattice_ideal, caut_equals_h, aut_x_component_count, aut_x)
from coxaut.autgraded import (aut_omega, stab_ideal, gamma_group, group_dimension)
from coxaut.groebner import membership


def _load(name):
    problem = ProblemFile(os.path.join('data_for_tests', name), quiet=True)
    return problem.build()


class AFaceTestCase(unittest.TestCase):
    """
    Tests of a-faces, GIT cones and the degree symmetries fixing them.
    """

    def test_a_faces(self):
        """
        Test a-faces of the A3 2A1 surface.
        """
        S, I, ample, _ = _load('a3_2a1_ample.yaml')
        self.assertTrue(is_a_face((0, 2, 3), I))
        self.assertTrue(is_a_face((0, 1, 2), I))
        self.assertFalse(is_a_face((0, 3), I))
        self.assertFalse(is_a_face((0, 1), I))
        self.assertTrue(is_a_face((), I))

        cox = CoxInput(S, I, ample)
        faces = list_a_faces(cox)
        gammas = [f.gamma for f in faces]
        self.assertIn((0, 2, 3), gammas)
        self.assertNotIn((0, 3), gammas)
        self.assertEqual(gammas, sorted(gammas, key=lambda g: (len(g), g)))

        chamber = git_cone(cox)
        self.assertEqual(chamber, RationalCone.from_rays([(1, 0), (1, 1)], 2))

        sigmas = sigma_of_lambda(chamber, aut_omega(S))
        self.assertEqual(len(sigmas), 2)

    def test_toric(self):
        """
        Test chambers of a toric variety with three rays in the plane.
        """
        K = AbelianGroup(2)
        S = GradedPolyRing(['T1', 'T2', 'T3'], CoefficientField(), K, [(1, 0), (0, 1), (1, 1)])
        I = Ideal(S, [])

        chamber = git_cone(CoxInput(S, I, K.element((1, 2))))
        self.assertEqual(chamber, RationalCone.from_rays([(0, 1), (1, 1)], 2))
        self.assertEqual(len(sigma_of_lambda(chamber, aut_omega(S))), 1)

        chamber = git_cone(CoxInput(S, I, K.element((2, 1))))
        self.assertEqual(chamber, RationalCone.from_rays([(1, 0), (1, 1)], 2))

        # the diagonal is a wall, fixed by swapping the first two degrees
        chamber = git_cone(CoxInput(S, I, K.element((1, 1))))
        self.assertEqual(chamber.dimension(), 1)
        self.assertEqual(len(sigma_of_lambda(chamber, aut_omega(S))), 2)

    def test_errors(self):
        """
        Test ample classes outside the moving region and a-face budgets.
        """
        S, I, _, _ = _load('a3_2a1_ample.yaml')
        K = S.group
        self.assertRaises(EmptyChamber, CoxInput, S, I, K.element((0, 0, 1)))
        self.assertRaises(EmptyChamber, CoxInput, S, I, K.element((1, 2, 0)))

        cox = CoxInput(S, I, K.element((2, 1, 0)))
        self.assertRaises(BudgetExceeded, list_a_faces, cox, Budget(max_afaces=1))
        # enumeration stops at the first face past the budget
        budget = Budget(max_afaces=1)
        try:
            AFaceRunner(cox, budget=budget).candidates()
        except BudgetExceeded as err:
            self.assertEqual(err.witness, 2)
        else:
            self.fail("a-face budget was not enforced")
        self.assertEqual(budget.usage()["afaces_tested"], 2)

        wrong = RationalCone.from_rays([(1, -1), (1, 0)], 2)
        self.assertRaises(EmptyChamber, aut_hat_x, cox, wrong)


class HilbertBasisTestCase(unittest.TestCase):
    """
    Tests of Hilbert bases of degree monoids.
    """

    def test_free(self):
        """
        Test Hilbert bases over the integers.
        """
        Z = AbelianGroup(1)
        self.assertEqual(hilbert_basis([Z.element((1,)), Z.element((-1,))], Z), [(1, 1)])
        self.assertEqual(hilbert_basis([Z.element((2,)), Z.element((-3,))], Z), [(3, 2)])
        self.assertEqual(hilbert_basis([Z.element((1,)), Z.element((2,))], Z), [])

        degrees = [Z.element((1,)), Z.element((1,)), Z.element((-2,))]
        basis = hilbert_basis(degrees, Z)
        self.assertEqual(basis, [(2, 0, 1), (1, 1, 1), (0, 2, 1)])

        # every degree zero exponent of small size is a sum of basis elements
        def decomposes(v):
            if not any(v):
                return True
            for b in basis:
                if all(x >= y for x, y in zip(v, b)):
                    if decomposes(tuple(x - y for x, y in zip(v, b))):
                        return True
            return False

        for a in range(5):
            for b in range(5):
                if (a + b) % 2 == 0:
                    self.assertTrue(decomposes((a, b, (a + b) // 2)))

    def test_torsion(self):
        """
        Test Hilbert bases with torsion and with a subgroup.
        """
        K2 = AbelianGroup(0, [2])
        basis = hilbert_basis([K2.element((1,)), K2.element((1,))], K2)
        self.assertEqual(basis, [(2, 0), (1, 1), (0, 2)])

        Z = AbelianGroup(1)
        degrees = [Z.element((1,))] * 4
        basis = hilbert_basis(degrees, Z, subgroup=[(2,)])
        self.assertEqual(len(basis), 10)
        self.assertTrue(all(sum(b) == 2 for b in basis))

        self.assertRaises(BudgetExceeded, hilbert_basis, [Z.element((1,)), Z.element((-7,))], Z,
                          (), Budget(hilbert_max_degree=3))


class VeroneseTestCase(unittest.TestCase):
    """
    Tests of presentations of Veronese subalgebras.
    """

    def test_even_degree(self):
        """
        Test the even degree part of four variables of degree 1.
        """
        S, I, _, _ = _load('toy_veronese.yaml')
        pres = veronese(S.poly_ring, S.degrees, S.group, ideal=I, subgroup=[(2,)])
        self.assertEqual(len(pres.generators), 10)
        self.assertEqual(pres.names[0], 'Y1')
        self.assertEqual(len(pres.monomial_table()), 10)
        self.assertTrue(len(pres.ideal.generators) > 0)

        # relations vanish at the images of points
        for point in [(1, 2, 3, 5), (2, -1, 7, 1)]:
            values = []
            for mu in pres.generators:
                v = QQ(1)
                for x, e in zip(point, mu):
                    v *= QQ(x) ** e
                values.append(v)
            for g in pres.ideal.generators:
                self.assertEqual(g(*values), 0)

    def test_quotient(self):
        """
        Test that the degree zero part of a quotient keeps its relation.
        """
        S, I, _, _ = _load('toy_quotient.yaml')
        pres = veronese(S.poly_ring, S.degrees, S.group, ideal=I)
        self.assertEqual(pres.generators, [(0, 0, 1), (1, 1, 0)])
        self.assertEqual(pres.monomial_table(), [('Y1', 'T3'), ('Y2', 'T1*T2')])
        self.assertEqual(pres.relations(), ["Y1^2 - Y2"])

    def test_vanishing_monomials(self):
        """
        Test that basis monomials lying in the ideal are not used as generators.
        """
        S = GradedPolyRing(['T1', 'T2', 'T3', 'T4'], CoefficientField(), AbelianGroup(1),
                           [(1,), (-1,), (1,), (-1,)])
        I = Ideal(S, ["T1*T2"])
        self.assertEqual(len(hilbert_basis(S.degrees, S.group)), 4)

        pres = veronese(S.poly_ring, S.degrees, S.group, ideal=I)
        self.assertEqual(pres.monomial_table(),
                         [('Y1', 'T1*T4'), ('Y2', 'T2*T3'), ('Y3', 'T3*T4')])
        self.assertEqual(pres.relations(), ["Y1*Y2"])

    def test_no_relations(self):
        """
        Test the degree zero part of K[T1, T2] graded by (1, -1).
        """
        S = GradedPolyRing(['T1', 'T2'], CoefficientField(), AbelianGroup(1), [(1,), (-1,)])
        pres = veronese(S.poly_ring, S.degrees, S.group)
        self.assertEqual(pres.generators, [(1, 1)])
        self.assertEqual(pres.relations(), [])


class QuasitorusTestCase(unittest.TestCase):
    """
    Tests of the quasitorus H and its comparison with the degree preserving part.
    """

    def test_lattice_ideal(self):
        """
        Test the lattice ideal of two entries of the same degree.
        """
        Z = AbelianGroup(1)
        ring, ideal, lattice = h_lattice_ideal([Z.element((1,)), Z.element((1,))])
        self.assertEqual(len(lattice), 1)
        x, y = ring.gens
        self.assertTrue(membership(x - y, ideal))
        self.assertFalse(membership(x, ideal))

        grading = entry_grading([Z.element((1,)), Z.element((1,))])
        self.assertEqual(grading['det'], Z.element((2,)))
        self.assertEqual(grading['entries'](0, 1), Z.element((1,)))

    def test_caut(self):
        """
        Test the comparison on the torus and on the A3 2A1 surface.
        """
        S, I, _, _ = _load('torus3.yaml')
        self.assertTrue(caut_equals_h(stab_ideal(S, I)))

        S, I, _, _ = _load('a3_2a1.yaml')
        group = stab_ideal(S, I)
        self.assertFalse(caut_equals_h(group))

        # the degree preserving part contains H
        unit = group.unit_coset()
        _, hideal, _ = h_lattice_ideal(group.column_degrees)
        lifted = [g.set_ring(unit.ring) for g in hideal.generators]
        for g in unit.saturated().generators:
            self.assertTrue(membership(g, Ideal(unit.ring, lifted)))


class AutHatXTestCase(unittest.TestCase):
    """
    Tests of Aut_H of the total coordinate space of the A3 2A1 surface.
    """

    def runTest(self):
        """
        Test dimension and components with the chamber supplied or computed.
        """
        S, I, ample, _ = _load('a3_2a1_ample.yaml')
        cox = CoxInput(S, I, ample)
        chamber = RationalCone.from_rays([(1, 0), (1, 1)], 2)

        aut = aut_hat_x(cox, chamber=chamber)
        self.assertEqual(len(aut.sigmas), 2)
        self.assertEqual(aut.group.size, 5)

        gamma = gamma_group(aut.group)
        self.assertEqual(gamma.order, 2)
        self.assertEqual(group_dimension(aut.group) - S.group.free_rank, 1)

        count = aut_x_component_count(aut, gamma)
        self.assertEqual(count.count, 2)
        self.assertEqual(count.certificate['torus_quotient_components'], 1)

        computed = aut_hat_x(cox)
        self.assertEqual(computed.chamber, chamber)


class ProjectiveLineTestCase(unittest.TestCase):
    """
    Tests of the Hopf algebra of the automorphism group of the projective line.
    """

    def runTest(self):
        """
        Test the presentation of PGL(2) and its structure maps on points.
        """
        S, I, ample, _ = _load('p1.yaml')
        result = aut_x(CoxInput(S, I, ample))

        self.assertEqual(result.dimension, 3)
        self.assertFalse(result.components.is_known())
        self.assertEqual(result.gamma.order, 1)
        self.assertFalse(result.caut_is_h)

        hopf = result.presentation
        self.assertEqual(hopf.generator_count, 10)
        self.assertEqual(hopf.entries, [(0, 0), (0, 1), (1, 0), (1, 1)])

        A = [[1, 2], [0, 1]]
        B = [[2, 0], [1, 1]]
        self.assertTrue(hopf.satisfies(hopf.counit()))
        self.assertTrue(hopf.satisfies(hopf.evaluate(A)))
        self.assertTrue(hopf.satisfies(hopf.comultiply(A, B)))
        self.assertTrue(hopf.satisfies(hopf.antipode(A)))

        # scalar matrices act trivially on the projective line
        self.assertEqual(hopf.evaluate(A), hopf.evaluate([[3, 6], [0, 3]]))
        self.assertEqual(hopf.antipode([[1, 0], [0, 1]]), hopf.counit())
        self.assertRaises(ValueError, hopf.evaluate, [[1, 1], [1, 1]])


if __name__=='__main__':
    unittest.main()
