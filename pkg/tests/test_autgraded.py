import unittest
import os

from coxaut import (AbelianGroup, CoefficientField, GradedPolyRing, Ideal, ProblemFile,
                    NotHomogeneous)
from coxaut.autgraded import (build_rep_basis, aut_omega, aut_ks, stab_ideal, quot_rep, transporter,
                              admissibility_equations, gamma_group, group_dimension,
                              component_count, check_entry_homogeneous,
                              extract_permutation_symmetries, permutations_closed, dim_bound,
                              permuting_matrices)


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class RepBasisTestCase(unittest.TestCase):
    """
    Tests of the representation basis and the admissibility equations.
    """

    def test_weighted(self):
        """
        Test the weighted ring with degrees 1, 1, 2.
        """
        S = GradedPolyRing(['T1', 'T2', 'T3'], CoefficientField(), AbelianGroup(1),
                           [(1,), (1,), (2,)])
        rep = build_rep_basis(S)
        self.assertEqual(rep.block_dims, [2, 4])
        self.assertEqual(rep.n, 6)
        self.assertEqual(rep.coord((0, 0, 1)), 5)
        self.assertIsNone(rep.coord((3, 0, 0)))
        self.assertTrue(len(admissibility_equations(S, rep)) > 0)

        self.assertEqual(len(aut_omega(S)), 1)

    def test_a3_2a1(self):
        """
        Test the A3 2A1 ring: five one dimensional blocks, no admissibility.
        """
        problem = ProblemFile(os.path.join('data_for_tests', 'a3_2a1.yaml'), quiet=True)
        S, I, _, _ = problem.build()
        rep = build_rep_basis(S)
        self.assertEqual(rep.block_dims, [1, 1, 1, 1, 1])
        self.assertEqual(admissibility_equations(S, rep), [])

        sigmas = aut_omega(S)
        self.assertEqual(len(sigmas), 2)
        self.assertEqual(rep.block_permutation(sigmas[1]), (0, 2, 1, 3, 4))


class StabilizerTestCase(unittest.TestCase):
    """
    Tests of the stabilizer of the A3 2A1 ideal and its invariants.
    """

    def setUp(self):
        problem = ProblemFile(os.path.join('data_for_tests', 'a3_2a1.yaml'), quiet=True)
        self.S, self.I, _, _ = problem.build()
        self.rep = build_rep_basis(self.S)
        base = aut_ks(self.S, rep=self.rep)
        stab = stab_ideal(self.S, self.I, rep=self.rep, base=base)
        self.group, self.qrep = quot_rep(self.S, self.I, stab, rep=self.rep)

    def test_cosets(self):
        """
        Test the coset layout and membership of explicit matrices.
        """
        group = self.group
        self.assertTrue(self.qrep.is_trivial())
        self.assertEqual(group.size, 5)
        self.assertEqual(len(group.cosets), 2)
        self.assertTrue(group.cosets[0].is_unit())
        self.assertEqual(group.cosets[1].permutation_tuple(), (1, 3, 2, 4, 5))
        self.assertTrue(check_entry_homogeneous(group))

        # blocks in canonical degree order are T2, T4, T3, T5, T1
        self.assertEqual([self.rep.coord(e) for e in _identity(5)], [4, 0, 2, 1, 3])

        A = _identity(5)
        self.assertEqual(group.contains(A), 0)
        A[1][1] = -1
        self.assertEqual(group.contains(A), 0)
        A[0][0] = 2
        self.assertIsNone(group.contains(A))

        B = _identity(5)
        B[1][1] = 0
        B[2][2] = 0
        B[1][2] = 1
        B[2][1] = 1
        self.assertEqual(group.contains(B), 1)

        # singular matrices are never in the group
        Z = _identity(5)
        Z[4][4] = 0
        self.assertIsNone(group.contains(Z))

        text = group.describe()
        self.assertIn("cosets: 2", text)
        self.assertEqual(len(group.to_dict()['cosets']), 2)

    def test_invariants(self):
        """
        Test dimension, component count and the component group.
        """
        group = self.group
        self.assertEqual(group_dimension(group), 3)

        count = component_count(group)
        self.assertTrue(count.is_known())
        self.assertEqual(count.count, 4)
        self.assertEqual([c['components'] for c in count.certificate], [2, 2])

        gamma = gamma_group(group)
        self.assertEqual(gamma.order, 2)
        self.assertTrue(gamma.is_abelian())

        self.assertEqual(dim_bound(self.S, self.I), 5)
        self.assertEqual(dim_bound(self.S, self.I, mds=True), 3)

    def test_transporter(self):
        """
        Test the matrices moving the ideal onto one with a changed sign.
        """
        J = Ideal(self.S, ["T1*T2 - T3^2 - T4^2"])
        moving = transporter(self.S, self.I, J, rep=self.rep)
        self.assertEqual(len(moving.cosets), 2)

        A = _identity(5)
        self.assertIsNone(moving.contains(A))
        A[0][0] = -1
        self.assertEqual(moving.contains(A), 0)

        pairs = permuting_matrices(aut_omega(self.S), self.rep)
        self.assertEqual(len(pairs), 2)

    def test_symmetries(self):
        """
        Test the variable permutations of the A3 2A1 ideal.
        """
        perms = extract_permutation_symmetries(self.S, self.I)
        self.assertEqual(perms, [(0, 1, 2, 3, 4), (0, 1, 3, 2, 4)])
        self.assertTrue(permutations_closed(perms))
        self.assertFalse(permutations_closed([(0, 1, 2), (1, 2, 0)]))


class HomogeneityTestCase(unittest.TestCase):
    """
    Tests that non-homogeneous coset equations are reported.
    """

    def runTest(self):
        """
        Run the entry grading check on an edited coset.
        """
        problem = ProblemFile(os.path.join('data_for_tests', 'a3_2a1.yaml'), quiet=True)
        S, I, _, _ = problem.build()
        group = stab_ideal(S, I)
        unit = group.cosets[0]
        t = unit.ring.gens
        group.cosets[0] = unit.with_generators(list(unit.ideal.generators) + [t[0] - t[2]])
        self.assertRaises(NotHomogeneous, check_entry_homogeneous, group)


class TorusTestCase(unittest.TestCase):
    """
    Tests of the polynomial ring with its fine grading.
    """

    def runTest(self):
        """
        Test that the automorphisms are the torus extended by the permutations.
        """
        problem = ProblemFile(os.path.join('data_for_tests', 'torus3.yaml'), quiet=True)
        S, I, _, _ = problem.build()
        group = stab_ideal(S, I)
        self.assertEqual(len(group.cosets), 6)

        gamma = gamma_group(group)
        self.assertEqual(gamma.order, 6)
        self.assertFalse(gamma.is_abelian())
        self.assertEqual(group_dimension(group), 3)
        self.assertEqual(component_count(group).count, 6)

        perms = extract_permutation_symmetries(S, I)
        self.assertEqual(len(perms), 6)
        self.assertTrue(permutations_closed(perms))


class GrassmannianSymmetryTestCase(unittest.TestCase):
    """
    Tests of the variable permutations of the Pluecker ideal of G(2,5).
    """

    def runTest(self):
        """
        Test that the ten permutation symmetries are found.
        """
        problem = ProblemFile(os.path.join('data_for_tests', 'grassmannian_g25.yaml'), quiet=True)
        S, I, _, _ = problem.build()
        perms = extract_permutation_symmetries(S, I)
        self.assertEqual(len(perms), 10)
        self.assertIn(tuple(range(10)), perms)

        one_based = set(tuple(p + 1 for p in perm) for perm in perms)
        for perm in [(10, 9, 7, 4, 8, 6, 3, 5, 2, 1),
                     (4, 3, 2, 1, 10, 9, 7, 8, 6, 5),
                     (1, 7, 6, 5, 4, 3, 2, 10, 9, 8)]:
            self.assertIn(perm, one_based)

        rep = build_rep_basis(S)
        self.assertEqual(rep.block_dims, [1] * 10)
        self.assertEqual(admissibility_equations(S, rep), [])


if __name__=='__main__':
    unittest.main()
