from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from chromatic.exceptions import InterpolationError
from chromatic.models import Convention
from chromatic.poly import BivarPoly, interpolate_grid, interpolate_univariate, kl_expansion, parse

LAM = BivarPoly.lam()
MU = BivarPoly.mu()

polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-50, 50),
    max_size=6,
).map(BivarPoly)
small = st.integers(-6, 6)


class RenderTests(SimpleTestCase):
    def test_canonical_order(self):
        self.assertEqual((LAM + MU) ** 2 + 0, parse("1*λ^2 + 2*λ^1*μ^1 + 1*μ^2"))
        self.assertEqual(((LAM + MU) ** 2).render(), "1*λ^2 + 2*λ^1*μ^1 + 1*μ^2")

    def test_signs_and_constants(self):
        self.assertEqual((LAM - 1).render(), "1*λ^1 - 1")
        self.assertEqual((-MU + 3).render(), "-1*μ^1 + 3")
        self.assertEqual(BivarPoly.zero().render(), "0")
        self.assertEqual(MU.render(), "1*μ^1")

    def test_custom_names(self):
        self.assertEqual((LAM * MU).render(names=("k", "l")), "1*k^1*l^1")

    def test_parse_accepts_rendered_text(self):
        poly = LAM ** 3 - 4 * LAM * MU ** 2 + 7
        self.assertEqual(parse(poly.render()), poly)
        self.assertEqual(parse("0"), BivarPoly.zero())

    def test_parse_rejects_garbage(self):
        with self.assertRaises(ValueError):
            parse("1*λ^2 +")
        with self.assertRaises(ValueError):
            parse("2*ν^1")

    def test_json_terms_use_strings(self):
        big = BivarPoly({(1, 0): 10 ** 30})
        self.assertEqual(big.json_terms(), [{"i": 1, "j": 0, "coeff": str(10 ** 30)}])


class ArithmeticTests(SimpleTestCase):
    @settings(max_examples=60, deadline=None)
    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        self.assertEqual(a + b, b + a)
        self.assertEqual(a * b, b * a)
        self.assertEqual((a + b) + c, a + (b + c))
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual(a - a, BivarPoly.zero())

    @settings(max_examples=60, deadline=None)
    @given(polys, polys, small, small)
    def test_evaluation_is_a_homomorphism(self, a, b, x, y):
        self.assertEqual((a * b).evaluate(x, y), a.evaluate(x, y) * b.evaluate(x, y))
        self.assertEqual((a - b)(x, y), a(x, y) - b(x, y))

    @settings(max_examples=60, deadline=None)
    @given(polys, polys)
    def test_product_rule(self, a, b):
        self.assertEqual((a * b).d_dmu(), a.d_dmu() * b + a * b.d_dmu())

    def test_zero_coefficients_are_dropped(self):
        self.assertTrue(BivarPoly({(2, 1): 0}).is_zero())
        self.assertEqual(LAM - LAM, 0)

    def test_degrees(self):
        poly = LAM ** 3 * MU + MU ** 2
        self.assertEqual(poly.degree_lambda, 3)
        self.assertEqual(poly.degree_mu, 2)
        self.assertEqual(poly.total_degree, 4)
        self.assertEqual(poly.coefficient(3, 1), 1)

    def test_coefficients_must_be_integers(self):
        self.assertEqual(BivarPoly({(1, 0): Fraction(4, 2)}), 2 * LAM)
        with self.assertRaises(ValueError):
            BivarPoly({(1, 0): Fraction(1, 2)})
        with self.assertRaises(ValueError):
            LAM.scale(Fraction(1, 2))

    def test_negative_power_rejected(self):
        with self.assertRaises(ValueError):
            LAM ** -1

    def test_evaluate_exact(self):
        self.assertEqual(((LAM + MU) ** 3).evaluate(2, 3), 125)
        self.assertEqual((LAM * 2).evaluate(Fraction(1, 2), 0), 1)
        self.assertEqual((10 ** 20 * LAM ** 5).evaluate(10, 0), 10 ** 25)

    def test_substitutions(self):
        poly = (LAM + MU) ** 2 - LAM
        self.assertEqual(poly.d_dmu(), 2 * LAM + 2 * MU)
        self.assertEqual(poly.substitute_mu(2), LAM ** 2 + 3 * LAM + 4)
        self.assertEqual(poly.substitute_lambda(1), MU ** 2 + 2 * MU)
        self.assertEqual(poly.lambda_slice(), LAM ** 2 - LAM)
        self.assertEqual(poly.swap_variables(), (LAM + MU) ** 2 - MU)

    def test_from_univariate(self):
        self.assertEqual(BivarPoly.from_univariate([1, 0, 2]), 2 * LAM ** 2 + 1)
        self.assertEqual(BivarPoly.from_univariate([0, 3], variable=1), 3 * MU)


class ExpansionTests(SimpleTestCase):
    def test_signed_arguments(self):
        k, l = BivarPoly.lam(), BivarPoly.mu()
        self.assertEqual(kl_expansion(LAM + MU, Convention.SIGNED), 2 * k + 1 + 2 * l)
        self.assertEqual(kl_expansion(LAM * MU, Convention.ZERO_FREE), 4 * k * l)
        self.assertEqual(kl_expansion(LAM - MU, Convention.UNSIGNED), k - l)

    def test_expansion_agrees_with_evaluation(self):
        poly = (LAM + MU) ** 2 - LAM
        expanded = kl_expansion(poly, Convention.SIGNED)
        for k in range(3):
            for l in range(3):
                self.assertEqual(expanded.evaluate(k, l), poly.evaluate(2 * k + 1, 2 * l))


class InterpolationTests(SimpleTestCase):
    def test_recovers_polynomial(self):
        poly = LAM ** 2 + LAM * MU - MU + 5
        values = {(a, b): poly.evaluate(a, b) for a in range(3) for b in range(3)}
        self.assertEqual(interpolate_grid(values, 2), poly)

    def test_accepts_triples_on_shifted_grid(self):
        poly = (LAM + MU) ** 2 - LAM
        triples = [(2 * k + 1, 2 * l, poly.evaluate(2 * k + 1, 2 * l)) for k in range(3) for l in range(3)]
        self.assertEqual(interpolate_grid(triples, 2), poly)

    def test_non_integral_coefficient(self):
        values = {(a, b): a * (a - 1) // 2 for a in range(3) for b in range(3)}
        with self.assertRaises(InterpolationError):
            interpolate_grid(values, 2)

    def test_total_degree_bound(self):
        values = {(a, b): a * b for a in range(2) for b in range(2)}
        with self.assertRaises(InterpolationError):
            interpolate_grid(values, 1)

    def test_duplicate_coordinate(self):
        with self.assertRaises(InterpolationError):
            interpolate_grid([(0, 0, 1), (0, 0, 1), (1, 0, 1), (0, 1, 1)], 1)

    def test_incomplete_grid(self):
        with self.assertRaises(InterpolationError):
            interpolate_grid({(0, 0): 1, (1, 0): 1, (0, 1): 1}, 1)

    def test_univariate(self):
        self.assertEqual(interpolate_univariate([0, 1, 2], [0, 1, 4]), LAM ** 2)
        self.assertEqual(interpolate_univariate([0, 2], [1, 5], variable=1), 2 * MU + 1)
        with self.assertRaises(InterpolationError):
            interpolate_univariate([0, 0], [1, 1])
