import unittest
from unittest.mock import MagicMock
import itertools

from algebra import (FieldSpec, GaloisField, Polynomial, conjugatePoly, countIrreducibles, elementDegree,
                     enumIrreducibles, fieldForOrder, frobeniusApply, frobeniusOrbit, isIrreducible, isPrimePower,
                     primePowerParts, splitOverExtension)
from errors import ContractViolationError, GuardExceededError

def poly(field, text):
    return Polynomial.parse(text, field)

class TestPrimePowers(unittest.TestCase):

    def test_primePowerParts(self):
        self.assertEqual(primePowerParts(2), (2, 1))
        self.assertEqual(primePowerParts(8), (2, 3))
        self.assertEqual(primePowerParts(81), (3, 4))

    def test_notPrimePower(self):
        for q in (1, 6, 12, 0):
            with self.assertRaises(ContractViolationError):
                primePowerParts(q)
        self.assertFalse(isPrimePower(10))
        self.assertTrue(isPrimePower(25))

class TestGaloisField(unittest.TestCase):

    def setUp(self):
        self.gf4 = GaloisField(2, 2)
        self.gf3 = GaloisField(3)
        self.gf9 = GaloisField(3, 2)

    def test_defaultModulusGf4(self):
        """
        Tests that GF(4) is built on t^2+t+1 with generator w = code 2.
        """
        self.assertEqual(self.gf4.modulus, (1, 1, 1))
        self.assertEqual(self.gf4.generator, 2)
        self.assertEqual(self.gf4.mul(2, 2), 3)
        self.assertEqual(self.gf4.mul(2, 3), 1)
        self.assertEqual(self.gf4.add(2, 3), 1)
        self.assertEqual(self.gf4.inv(2), 3)

    def test_primeField(self):
        self.assertEqual(self.gf3.add(2, 2), 1)
        self.assertEqual(self.gf3.neg(1), 2)
        self.assertEqual(self.gf3.mul(2, 2), 1)
        self.assertEqual(self.gf3.sub(0, 1), 2)

    def test_fieldAxiomsGf9(self):
        """
        Tests associativity, distributivity and inverses exhaustively in GF(9).
        """
        F = self.gf9
        for a, b, c in itertools.product(range(9), repeat=3):
            self.assertEqual(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
            self.assertEqual(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
        for a in range(1, 9):
            self.assertEqual(F.mul(a, F.inv(a)), 1)
            self.assertEqual(F.add(a, F.neg(a)), 0)

    def test_arrayOpsMatchScalarOps(self):
        import numpy
        F = self.gf9
        x = numpy.array([[a for a in range(9)] for _ in range(9)])
        y = x.T
        mul = F.mulArray(x, y)
        add = F.addArray(x, y)
        for a in range(9):
            for b in range(9):
                self.assertEqual(mul[b, a], F.mul(a, b))
                self.assertEqual(add[b, a], F.add(a, b))

    def test_frobenius(self):
        F = fieldForOrder(16)
        for a in range(16):
            self.assertEqual(F.frobenius(a, 2, 4), a)
            self.assertEqual(F.frobenius(a, 2, 1), F.mul(a, a))

    def test_nonPrimitiveModulusRejected(self):
        """
        Tests that t^2+1 = (t+1)^2 over GF(2) is refused as a modulus.
        """
        with self.assertRaises(ContractViolationError):
            GaloisField(2, 2, (1, 0, 1))

    def test_compositeCharacteristicRejected(self):
        with self.assertRaises(ContractViolationError):
            GaloisField(4)

    def test_textRoundTrip(self):
        self.assertEqual(self.gf4.toText(3), "w+1")
        self.assertEqual(self.gf4.parse("w+1"), 3)
        self.assertEqual(self.gf4.parse("w^2"), 3)
        self.assertEqual(self.gf9.toText(0), "0")
        for x in range(9):
            self.assertEqual(self.gf9.parse(self.gf9.toText(x)), x)

    def test_parseRejectsGarbage(self):
        with self.assertRaises(ContractViolationError):
            self.gf4.parse("wx")
        with self.assertRaises(ContractViolationError):
            self.gf4.parse("")

    def test_fieldForOrderIsCached(self):
        self.assertIs(fieldForOrder(8), fieldForOrder(8))

class TestPolynomial(unittest.TestCase):

    def setUp(self):
        self.gf2 = fieldForOrder(2)
        self.gf4 = fieldForOrder(4)

    def test_arithmetic(self):
        t1 = poly(self.gf2, "t+1")
        self.assertEqual(t1 * t1, poly(self.gf2, "t^2+1"))
        self.assertEqual(t1 ** 3, poly(self.gf2, "t^3+t^2+t+1"))
        q, r = divmod(poly(self.gf2, "t^3+t+1"), t1)
        self.assertEqual(q * t1 + r, poly(self.gf2, "t^3+t+1"))
        self.assertEqual(r, Polynomial.constant(self.gf2, 1))

    def test_gcd(self):
        a = poly(self.gf2, "t^2+1")
        b = poly(self.gf2, "t^2+t")
        self.assertEqual(a.gcd(b), poly(self.gf2, "t+1"))

    def test_degreeAndMonic(self):
        f = Polynomial(fieldForOrder(3), (1, 0, 2))
        self.assertEqual(f.degree, 2)
        self.assertFalse(f.isMonic())
        self.assertTrue(f.monic().isMonic())
        self.assertTrue(Polynomial(self.gf2, (0, 0)).isZero())

    def test_textOverExtension(self):
        f = poly(self.gf4, "t^2+(w+1)t+w")
        self.assertEqual(f.coeffs, (2, 3, 1))
        self.assertEqual(f.toText(), "t^2+(w+1)t+w")

    def test_evaluate(self):
        f = poly(self.gf4, "t^2+t+1")
        self.assertEqual(f.evaluate(2), 0)
        self.assertEqual(f.evaluate(3), 0)
        self.assertEqual(f.evaluate(1), 1)

    def test_mixedFieldsRejected(self):
        with self.assertRaises(ContractViolationError):
            poly(self.gf2, "t") + poly(self.gf4, "t")

class TestIrreducibles(unittest.TestCase):

    def test_countIrreducibles(self):
        """
        Tests the necklace count against known values.
        """
        self.assertEqual(countIrreducibles(2, 2), 1)
        self.assertEqual(countIrreducibles(2, 3), 2)
        self.assertEqual(countIrreducibles(2, 4), 3)
        self.assertEqual(countIrreducibles(3, 2), 3)
        self.assertEqual(countIrreducibles(4, 2), 6)
        self.assertEqual(countIrreducibles(2, 6), 9)

    def test_countIrreduciblesUpToOrder4096(self):
        """
        Tests d N(q,d) <= q^d and sum over e | d of e N(q,e) = q^d for every
        q^d <= 2^12.
        """
        for q in range(2, 4097):
            if not isPrimePower(q):
                continue
            d = 1
            while q**d <= 4096:
                self.assertLessEqual(d*countIrreducibles(q, d), q**d)
                total = sum(e*countIrreducibles(q, e) for e in range(1, d + 1) if d % e == 0)
                self.assertEqual(total, q**d, f"q={q} d={d}")
                d += 1

    def test_isIrreducible(self):
        gf2 = fieldForOrder(2)
        self.assertTrue(isIrreducible(poly(gf2, "t^2+t+1")))
        self.assertFalse(isIrreducible(poly(gf2, "t^2+1")))
        self.assertTrue(isIrreducible(poly(gf2, "t^4+t+1")))
        self.assertFalse(isIrreducible(poly(gf2, "t^4+t^2+1")))
        self.assertTrue(isIrreducible(poly(gf2, "t^5+t^2+1")))
        self.assertFalse(isIrreducible(poly(gf2, "t^5+t^4+t^3+t^2+t+1")))
        self.assertFalse(isIrreducible(Polynomial.constant(gf2, 1)))

    def test_enumIrreduciblesMatchesCount(self):
        for q, d in ((2, 2), (2, 3), (2, 4), (3, 2), (4, 2), (5, 2), (3, 3)):
            found = enumIrreducibles(q, d)
            self.assertEqual(len(found), countIrreducibles(q, d))
            self.assertTrue(all(f.isMonic() and f.degree == d and isIrreducible(f) for f in found))
            self.assertEqual(len(set(found)), len(found))

    def test_enumIrreduciblesOrder(self):
        gf3 = fieldForOrder(3)
        self.assertEqual([f.toText() for f in enumIrreducibles(2, 2)], ["t^2+t+1"])
        self.assertEqual(enumIrreducibles(gf3, 2), [poly(gf3, "t^2+1"), poly(gf3, "t^2+t+2"), poly(gf3, "t^2+2t+2")])

    def test_enumIrreduciblesGuard(self):
        with self.assertRaises(GuardExceededError):
            enumIrreducibles(2, 5, guard=16)

    def test_enumIrreduciblesUsesCache(self):
        cache = MagicMock()
        cache.load.return_value = None
        found = enumIrreducibles(2, 3, cache=cache)
        cache.store.assert_called_once_with(fieldForOrder(2), 3, found)

        cache.load.return_value = ["cached"]
        self.assertEqual(enumIrreducibles(2, 3, cache=cache), ["cached"])

class TestFieldSpec(unittest.TestCase):

    def test_quadraticOverGf2(self):
        spec = FieldSpec(2, 2)
        self.assertEqual(spec.Q, 4)
        self.assertEqual(spec.omega, 2)
        self.assertEqual(spec.modulus.toText(), "t^2+t+1")
        self.assertEqual(spec.coordinates(spec.omega), (0, 1))

    def test_customModulus(self):
        spec = FieldSpec(2, 3, "t^3+t+1")
        self.assertEqual(spec.modulus, poly(spec.F, "t^3+t+1"))
        self.assertEqual(repr(spec), "FieldSpec(q=2, b=3, modulus=t^3+t+1)")

    def test_embeddingIsHomomorphism(self):
        """
        Tests the GF(4) -> GF(16) embedding and the coordinate tables.
        """
        spec = FieldSpec(4, 2)
        F, K = spec.F, spec.K
        for a, b in itertools.product(range(4), repeat=2):
            self.assertEqual(spec.embed(F.mul(a, b)), K.mul(spec.embed(a), spec.embed(b)))
            self.assertEqual(spec.embed(F.add(a, b)), K.add(spec.embed(a), spec.embed(b)))
        for a in range(4):
            self.assertEqual(spec.restrict(spec.embed(a)), a)
        for x in range(16):
            self.assertEqual(spec.fromCoordinates(spec.coordinates(x)), x)

    def test_modulusIsMinimalPolynomialOfOmega(self):
        spec = FieldSpec(4, 2)
        self.assertEqual(spec.modulus.degree, 2)
        self.assertTrue(isIrreducible(spec.modulus))
        lifted = spec.modulus.mapCoefficients(spec.embed, spec.K)
        self.assertEqual(lifted.evaluate(spec.omega), 0)

    def test_restrictOutsideBaseField(self):
        spec = FieldSpec(2, 2)
        with self.assertRaises(ContractViolationError):
            spec.restrict(spec.omega)

    def test_customModulusNeedsPrimeBase(self):
        with self.assertRaises(ContractViolationError):
            FieldSpec(4, 2, "t^2+t+w")

    def test_fieldElements(self):
        spec = FieldSpec(2, 2)
        w = spec.primitiveElement
        self.assertEqual(w * w, spec.element("w+1"))
        self.assertEqual(w * w * w, spec.element(1))
        self.assertEqual(spec.element((0, 1)), w)
        self.assertEqual(w + w, spec.element(0))
        self.assertEqual(str(w ** 2), "w+1")

    def test_blowupBlocks(self):
        spec   = FieldSpec(2, 2)
        blocks = spec.blowupBlocks()
        self.assertEqual(blocks.shape, (4, 2, 2))
        # w acts on the basis 1, w as the companion matrix of t^2+t+1
        self.assertEqual(blocks[spec.omega].tolist(), [[0, 1], [1, 1]])

class TestFrobenius(unittest.TestCase):

    def setUp(self):
        self.spec = FieldSpec(2, 2)

    def test_frobeniusApply(self):
        w = self.spec.primitiveElement
        self.assertEqual(frobeniusApply(w, 1), w * w)
        self.assertEqual(frobeniusApply(w, 2), w)
        with self.assertRaises(ContractViolationError):
            frobeniusApply(w, -1)

    def test_frobeniusOverGf9(self):
        """
        Tests GF(9) = GF(3)(w) with w^2 = w + 1, where w^3 = 2w + 1.
        """
        K = GaloisField(3, 2, modulus=(2, 2, 1))
        w = K.parse("w")
        self.assertEqual(K.mul(w, w), K.parse("w+1"))
        self.assertEqual(K.frobenius(w, 3, 1), K.parse("2w+1"))
        spec = FieldSpec(3, 2, "t^2+2t+2")
        x    = spec.primitiveElement
        self.assertEqual(frobeniusApply(x, 1), spec.element((1, 2)))
        for code in range(9):
            y = spec.element(code)
            self.assertEqual(frobeniusApply(y, 2), y)
        for f in range(3):
            y = spec.element(spec.embed(f))
            self.assertEqual(frobeniusApply(y, 1), y)

    def test_elementDegree(self):
        degrees = [elementDegree(self.spec.element(x)) for x in range(4)]
        self.assertEqual(degrees, [1, 1, 2, 2])

    def test_degreeFourElementsOfGf16(self):
        """
        Tests that GF(16) has 12 elements of degree 4 over GF(2), i.e. 4 * N(2,4).
        """
        spec  = FieldSpec(2, 4)
        count = sum(1 for x in range(16) if elementDegree(spec.element(x)) == 4)
        self.assertEqual(count, 4 * countIrreducibles(2, 4))

    def test_conjugatePoly(self):
        K = self.spec.K
        g = Polynomial.linear(K, self.spec.omega)
        self.assertEqual(conjugatePoly(g, 1, self.spec), Polynomial.linear(K, 3))
        self.assertEqual(conjugatePoly(g, 2, self.spec), g)
        self.assertEqual(len(frobeniusOrbit(g, self.spec)), 2)
        self.assertEqual(frobeniusOrbit(Polynomial.linear(K, 1), self.spec), [Polynomial.linear(K, 1)])

    def test_conjugatePolyNeedsExtensionField(self):
        with self.assertRaises(ContractViolationError):
            conjugatePoly(poly(self.spec.F, "t+1"), 1, self.spec)

class TestSplitOverExtension(unittest.TestCase):

    def test_splitIntoRoots(self):
        spec  = FieldSpec(2, 2)
        roots = splitOverExtension(poly(spec.F, "t^2+t+1"), spec)
        self.assertEqual(roots, [Polynomial.linear(spec.K, 2), Polynomial.linear(spec.K, 3)])

    def test_splitIntoQuadratics(self):
        """
        Tests that t^4+t+1 splits over GF(4) into two conjugate quadratics.
        """
        spec = FieldSpec(2, 2)
        f    = poly(spec.F, "t^4+t+1")
        gs   = splitOverExtension(f, spec)
        self.assertEqual(len(gs), 2)
        self.assertTrue(all(g.degree == 2 and isIrreducible(g) for g in gs))
        self.assertEqual(gs[0] * gs[1], f.mapCoefficients(spec.embed, spec.K))
        self.assertEqual(conjugatePoly(gs[0], 1, spec), gs[1])

    def test_coprimeDegreeStaysIrreducible(self):
        spec = FieldSpec(2, 2)
        f    = poly(spec.F, "t^3+t+1")
        self.assertEqual(splitOverExtension(f, spec), [f.mapCoefficients(spec.embed, spec.K)])

    def test_splitOverPrimePowerBase(self):
        spec = FieldSpec(4, 2)
        for f in enumIrreducibles(spec.F, 2):
            roots = splitOverExtension(f, spec)
            self.assertEqual(len(roots), 2)
            product = roots[0] * roots[1]
            self.assertEqual(product, f.mapCoefficients(spec.embed, spec.K))

    def test_reducibleRejected(self):
        spec = FieldSpec(2, 2)
        with self.assertRaises(ContractViolationError):
            splitOverExtension(poly(spec.F, "t^2+1"), spec)

if __name__ == '__main__':
    unittest.main()
