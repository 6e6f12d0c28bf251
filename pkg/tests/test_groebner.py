import unittest
import os

from sympy import QQ
from sympy.polys.rings import PolyRing
from sympy.polys.orderings import grevlex

from coxaut import (AbelianGroup, CoefficientField, GradedPolyRing, Ideal, ProblemFile,
                    Budget, BudgetExceeded, MonomialOrder, groebner)
from coxaut.groebner import (membership, is_solvable, same_ideal, eliminate, preimage,
                             saturate, ideal_dimension, map_variables, substitute_linear)


class GroebnerBasisTestCase(unittest.TestCase):
    """
    Tests of reduced Groebner bases and membership.
    """

    def setUp(self):
        self.S = GradedPolyRing(['x', 'y', 'z'], CoefficientField(), AbelianGroup(1),
                                [(1,), (1,), (1,)])

    def test_membership(self):
        """
        Test ideal membership and the unit ideal.
        """
        S = self.S
        I = Ideal(S, ["x*y - z^2", "y^2 - x*z"])
        self.assertTrue(membership(S.parse("x*y^2 - y*z^2"), I))
        self.assertFalse(membership(S.parse("x*y"), I))
        self.assertTrue(membership(S.poly_ring.zero, I))
        self.assertTrue(is_solvable(I))

        gb = groebner(I)
        self.assertTrue(len(gb) >= 2)
        for g in gb.elements:
            self.assertEqual(g.LC, 1)

        J = Ideal(S, ["x - 1", "x"])
        self.assertFalse(is_solvable(J))
        self.assertTrue(groebner(J).is_unit())

    def test_same_ideal(self):
        """
        Test equality of ideals given by different generators.
        """
        S = self.S
        I1 = Ideal(S, ["x - y", "y - z"])
        I2 = Ideal(S, ["x - z", "x + y - 2*z"])
        self.assertTrue(same_ideal(I1, I2))
        self.assertFalse(same_ideal(I1, Ideal(S, ["x - y"])))

    def test_budget(self):
        """
        Test that the pair and degree budgets are enforced.
        """
        S = self.S
        I = Ideal(S, ["x^3 - y^2*z", "x*y*z - z^3", "y^3 - x^2*z"])
        self.assertRaises(BudgetExceeded, groebner, I, None, Budget(max_pairs=1))
        I = Ideal(S, ["x^3 - y^2*z", "x*y*z - z^3", "y^3 - x^2*z"])
        self.assertRaises(BudgetExceeded, groebner, I, None, Budget(max_degree=2))

        budget = Budget()
        I = Ideal(S, ["x*y - z^2", "y^2 - x*z"])
        groebner(I, budget=budget)
        usage = budget.usage()
        self.assertEqual(usage['groebner_calls'], 1)
        self.assertTrue(usage['pairs_used'] >= 1)


class EliminationTestCase(unittest.TestCase):
    """
    Tests of elimination, preimages, saturation and dimension.
    """

    def test_eliminate(self):
        """
        Test the implicit equation of a parametrized curve.
        """
        R = PolyRing(['t', 'x', 'y'], QQ, grevlex)
        t, x, y = R.gens
        I = Ideal(R, [x - t**2, y - t**3])
        E = eliminate(I, ['t'])
        self.assertEqual(len(E.generators), 1)
        g = E.generators[0]
        self.assertTrue(g == x**3 - y**2 or g == y**2 - x**3)

        order = MonomialOrder('elimination', [0])
        self.assertEqual(order.eliminate, (0,))
        self.assertRaises(ValueError, MonomialOrder, 'elimination')

    def test_preimage(self):
        """
        Test that the kernel of the twisted cubic parametrization has three quadrics.
        """
        src = PolyRing(['s', 't'], QQ, grevlex)
        s, t = src.gens
        target = PolyRing(['Y1', 'Y2', 'Y3', 'Y4'], QQ, grevlex)
        images = [s**3, s**2 * t, s * t**2, t**3]
        ker = preimage(images, Ideal(src, []), target)
        Y1, Y2, Y3, Y4 = target.gens
        self.assertEqual(len(ker.generators), 3)
        for q in (Y1 * Y3 - Y2**2, Y2 * Y4 - Y3**2, Y1 * Y4 - Y2 * Y3):
            self.assertTrue(membership(q, ker))
        self.assertEqual(ideal_dimension(ker), 2)

    def test_saturate(self):
        """
        Test removing a component along a hyperplane.
        """
        R = PolyRing(['x', 'y'], QQ, grevlex)
        x, y = R.gens
        I = Ideal(R, [x * y, x**2])
        sat = saturate(I, y)
        self.assertTrue(membership(x, sat))
        self.assertFalse(membership(y, sat))
        self.assertEqual(ideal_dimension(sat), 1)
        self.assertEqual(ideal_dimension(I), 1)
        self.assertEqual(ideal_dimension(Ideal(R, [x - 1, x])), -1)
        self.assertEqual(ideal_dimension(Ideal(R, [])), 2)

        moved = map_variables(x * y, PolyRing(['a', 'b', 'c'], QQ, grevlex), [2, 0])
        self.assertEqual(str(moved), "a*c")

    def test_substitute_linear(self):
        """
        Test removing variables given by the other ones.
        """
        R = PolyRing(['x', 'y', 'z', 'w'], QQ, grevlex)
        x, y, z, w = R.gens
        I = Ideal(R, [2 * x - y * z, y - z**2, x * w - 1])
        reduced, carried, eliminated = substitute_linear(I, [x * y])
        self.assertEqual(eliminated, [0, 1])
        self.assertEqual(reduced.generators, [(z**3 * w - 2).mul_ground(QQ(1, 2))])
        self.assertEqual(carried, [(z**5).mul_ground(QQ(1, 2))])
        self.assertEqual(ideal_dimension(I), 1)
        self.assertEqual(ideal_dimension(reduced) - len(eliminated), 1)

        # x appears with a nonconstant coefficient only
        _, _, eliminated = substitute_linear(Ideal(R, [x * y - 1]))
        self.assertEqual(eliminated, [])


class ParametricTestCase(unittest.TestCase):
    """
    Tests of Groebner bases over a rational function field.
    """

    def runTest(self):
        """
        Test the 2A2 stabilizer equations, solvable for generic a.
        """
        file_path = 'data_for_tests'
        problem = ProblemFile(os.path.join(file_path, 'two_a2.yaml'), quiet=True)
        S, I, _, _ = problem.build()

        self.assertTrue(is_solvable(I))
        self.assertTrue(membership(S.parse("T11*T44 - T55^2"), I))
        self.assertTrue(membership(S.parse("T22*T33 - T55^2"), I))

        # a and a - 1 are units, so T55 = 1 forces T66*T77 = 1
        J = Ideal(S, list(I.generators) + [S.parse("T55 - 1"), S.parse("T66*T77")])
        self.assertFalse(is_solvable(J))


if __name__=='__main__':
    unittest.main()
