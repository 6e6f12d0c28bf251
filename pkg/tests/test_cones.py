import unittest
import numpy.testing as testing

from coxaut import RationalCone, ShapeMismatch
from coxaut.cones import double_description, positive_relation, primitive


class DoubleDescriptionTestCase(unittest.TestCase):
    """
    Tests of the exact double description of cones.
    """

    def test_quadrant(self):
        """
        Test the positive quadrant from halfspaces and from rays.
        """
        rays, lin = double_description([(1, 0), (0, 1)], 2)
        self.assertEqual(rays, [(0, 1), (1, 0)])
        self.assertEqual(lin, [])

        cone = RationalCone.from_rays([(2, 0), (0, 3), (1, 1)], 2)
        self.assertEqual(list(cone.rays), [(0, 1), (1, 0)])
        self.assertEqual(list(cone.facets), [(0, 1), (1, 0)])
        self.assertTrue(cone.is_pointed())
        self.assertEqual(cone.dimension(), 2)

    def test_lineality(self):
        """
        Test a halfplane, which has a lineality space.
        """
        cone = RationalCone.from_inequalities([(1, 0)], [], 2)
        self.assertFalse(cone.is_pointed())
        self.assertEqual(len(cone.lineality), 1)
        self.assertTrue(cone.contains((0, -5)))
        self.assertFalse(cone.contains((-1, 0)))

    def test_lower_dimensional(self):
        """
        Test a ray in the plane.
        """
        ray = RationalCone.from_rays([(1, 1)], 2)
        self.assertEqual(ray.dimension(), 1)
        self.assertTrue(ray.contains((3, 3)))
        self.assertFalse(ray.contains((1, 0)))
        self.assertFalse(ray.is_interior((0, 0)))
        self.assertTrue(ray.is_interior((2, 2)))
        self.assertRaises(ShapeMismatch, ray.contains, (1, 1, 1))

    def test_primitive(self):
        """
        Test primitive integer vectors.
        """
        self.assertEqual(primitive((4, -6, 0)), (2, -3, 0))
        self.assertEqual(primitive((0, 0)), (0, 0))


class ConeOperationsTestCase(unittest.TestCase):
    """
    Tests of intersections, images and equality.
    """

    def runTest(self):
        """
        Run the cone operation tests.
        """
        a = RationalCone.from_rays([(1, -1), (1, 1)], 2)
        b = RationalCone.from_rays([(1, 0), (1, 2)], 2)
        c = a.intersect(b)
        self.assertEqual(c, RationalCone.from_rays([(1, 0), (1, 1)], 2))
        self.assertTrue(a.contains_cone(c))
        self.assertFalse(c.contains_cone(a))

        pt = c.relative_interior_point()
        self.assertTrue(c.is_interior(pt))

        # reflection in the x axis swaps the two halves of a
        refl = [[1, 0], [0, -1]]
        self.assertEqual(a.transform(refl), a)
        self.assertNotEqual(c.transform(refl), c)
        self.assertEqual(c.transform(refl), RationalCone.from_rays([(1, 0), (1, -1)], 2))

        text = c.describe()
        self.assertIn("rays:", text)
        self.assertIn("facets:", text)


class PositiveRelationTestCase(unittest.TestCase):
    """
    Tests of nonnegative relations among vectors.
    """

    def runTest(self):
        """
        Run the positive relation tests.
        """
        rel = positive_relation([(1,), (-1,)], 1)
        self.assertIsNotNone(rel)
        self.assertEqual(rel[0], rel[1])
        self.assertTrue(rel[0] > 0)

        rel = positive_relation([(2,), (-3,)], 1)
        testing.assert_array_equal(rel, (3, 2))

        self.assertIsNone(positive_relation([(1, 0), (0, 1)], 2))


if __name__=='__main__':
    unittest.main()
