import unittest
import os

from coxaut import (AbelianGroup, CoefficientField, GradedPolyRing, Ideal, ProblemFile,
                    ProblemParseError, NotHomogeneous, NonPointedGrading, NonEffectiveGrading)
from coxaut.polyring import (format_polynomial, ideal_component, ideal_generator_degrees,
                             generator_degrees, minimalize_presentation)


def _ring(names, degrees, group=None, parameters=()):
    if group is None:
        group = AbelianGroup(1)
    return GradedPolyRing(names, CoefficientField(parameters), group, degrees)


class ParseFormatTestCase(unittest.TestCase):
    """
    Tests of reading and printing polynomials.
    """

    def test_parse(self):
        """
        Test parsing polynomials, with errors.
        """
        S = _ring(['T1', 'T2'], [(1,), (1,)])
        T1, T2 = S.gens

        self.assertEqual(S.parse("T1^2 - 3*T2"), T1**2 - 3*T2)
        self.assertEqual(S.parse("T1**2 - 3*T2"), T1**2 - 3*T2)
        self.assertRaises(ProblemParseError, S.parse, "T1 +* T2")
        self.assertRaises(ProblemParseError, S.parse, "T1 + T9")
        self.assertRaises(ProblemParseError, S.parse, "T1/T2")
        self.assertRaises(ProblemParseError, CoefficientField, ['1a'])
        self.assertRaises(ProblemParseError, _ring, ['T1', 'T1'], [(1,), (1,)])

    def test_format(self):
        """
        Test the canonical print order and coefficient signs.
        """
        S = _ring(['T1', 'T2', 'T3'], [(1,), (1,), (1,)])
        self.assertEqual(S.format(S.parse("T3^2 + T1*T2 - T2")), "T1*T2 + T3^2 - T2")
        self.assertEqual(S.format(S.parse("-2*T1 + 1/2*T3")), "-2*T1 + 1/2*T3")
        self.assertEqual(S.format(S.poly_ring.zero), "0")

        P = _ring(['T11', 'T44'], [(1,), (1,)], parameters=['a'])
        f = P.parse("(a - 1)*T11*T44")
        self.assertEqual(format_polynomial(f), "(a - 1)*T11*T44")


class GradingTestCase(unittest.TestCase):
    """
    Tests of degrees, grading checks and monomial bases.
    """

    def test_checks(self):
        """
        Test the effective and pointed diagnostics.
        """
        S = _ring(['T1', 'T2'], [(1,), (-1,)])
        try:
            S.check_effective_pointed()
            self.fail("Expected NonPointedGrading")
        except NonPointedGrading as err:
            self.assertEqual(err.witness, "T1*T2")

        S = _ring(['T1', 'T2'], [(2,), (2,)])
        self.assertRaises(NonEffectiveGrading, S.check_effective_pointed)

        K = AbelianGroup(1, [2])
        S = _ring(['T1', 'T2'], [(1, 0), (0, 1)], group=K)
        try:
            S.check_effective_pointed()
            self.fail("Expected NonPointedGrading")
        except NonPointedGrading as err:
            self.assertEqual(err.witness, "T2^2")

        S = _ring(['T1', 'T2', 'T3'], [(1,), (1,), (2,)])
        diag = S.check_effective_pointed()
        self.assertTrue(diag['effective'])
        self.assertTrue(all(w > 0 for w in diag['weights']))

    def test_homogeneous(self):
        """
        Test degrees of polynomials.
        """
        S = _ring(['T1', 'T2', 'T3'], [(1,), (1,), (2,)])
        self.assertEqual(S.degree_of(S.parse("T1^2 + T3")), S.group.element((2,)))
        self.assertIsNone(S.degree_of(S.poly_ring.zero))
        self.assertRaises(NotHomogeneous, S.degree_of, S.parse("T1 + T3"))
        self.assertFalse(S.is_homogeneous(S.parse("T1 + T2^2")))

    def test_monomial_basis(self):
        """
        Test monomial bases of weighted components.
        """
        S = _ring(['T1', 'T2', 'T3'], [(1,), (1,), (2,)])
        basis = S.monomial_basis(S.group.element((2,)))
        self.assertEqual(basis, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)])
        self.assertEqual(S.component_dimension(S.group.element((-1,))), 0)
        self.assertTrue(S.is_below(S.group.element((1,)), S.group.element((3,))))
        self.assertFalse(S.is_below(S.group.element((3,)), S.group.element((1,))))


class IdealDegreesTestCase(unittest.TestCase):
    """
    Tests of homogeneous components of ideals and their generator degrees.
    """

    def setUp(self):
        file_path = 'data_for_tests'
        self.problem = ProblemFile(os.path.join(file_path, 'a3_2a1.yaml'), quiet=True)

    def test_component(self):
        """
        Test the degree (2, 0 | 0) part of the A3 2A1 ideal.
        """
        S, I, _, _ = self.problem.build()
        w = S.group.element((2, 0, 0))
        comp = ideal_component(I, w)
        self.assertEqual(comp.ambient_dim, 3)
        self.assertEqual(comp.dim, 1)
        self.assertTrue(comp.contains(S.parse("2*T1*T2 + 2*T3^2 + 2*T4^2")))
        self.assertFalse(comp.contains(S.parse("T3^2")))
        self.assertEqual(len(comp.complement_forms()), 2)

        self.assertEqual(ideal_generator_degrees(I), [w])
        self.assertEqual(len(generator_degrees(S)), 5)

    def test_redundant_generator(self):
        """
        Test that generators coming from lower degrees are not counted.
        """
        S = _ring(['T1'], [(1,)])
        I = Ideal(S, ["T1^2", "T1^3", "T1^2"])
        self.assertEqual(len(I.generators), 2)
        self.assertEqual(ideal_generator_degrees(I), [S.group.element((2,))])

    def test_minimalize(self):
        """
        Test elimination of a redundant variable.
        """
        S = _ring(['T1', 'T2', 'T3'], [(1,), (1,), (1,)])
        I = Ideal(S, ["T3 - T1 - T2", "T1*T2"])
        S2, I2, eliminated = minimalize_presentation(S, I)
        self.assertEqual(S2.names, ('T2', 'T3'))
        self.assertEqual(eliminated, [('T1', '-T2 + T3')])
        self.assertEqual(I2.format_generators(), ["-T2^2 + T2*T3"])

        # nothing to do for the A3 2A1 ring
        S, I, _, _ = self.problem.build()
        S2, I2, eliminated = minimalize_presentation(S, I)
        self.assertEqual(eliminated, [])
        self.assertEqual(S2, S)


if __name__=='__main__':
    unittest.main()
