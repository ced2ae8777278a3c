import unittest
from fractions import Fraction

from mpmath import iv

from errors import ContractViolationError, HypothesisError
from series import (Interval, SeriesParams, TruncatedPowerSeries, WorkingPrecision, binomialSeries, eulerL, eulerP,
                    fractionText, hSeries, jProductSeries, jSeries, jSubstitutionSeries, lSeries, omegaLimit, omegaN,
                    pSeries, pcbSeries, pcbiSeries, prefixSumDivision, proportionSeries, qProduct, sSeries)

class TestTruncatedPowerSeries(unittest.TestCase):

    def test_constructionPadsAndTruncates(self):
        s = TruncatedPowerSeries([1, 2], 3)
        self.assertEqual(s.coeffs, (1, 2, 0, 0))
        self.assertEqual(TruncatedPowerSeries([1, 2, 3, 4], 1).coeffs, (1, 2))
        with self.assertRaises(ContractViolationError):
            TruncatedPowerSeries([1], -1)

    def test_coefficientBeyondOrder(self):
        s = TruncatedPowerSeries([1, 1], 2)
        self.assertEqual(s[-1], 0)
        with self.assertRaises(ContractViolationError):
            s[3]

    def test_arithmeticUsesSmallerOrder(self):
        """
        Tests that unknown coefficients above an order never leak into a result.
        """
        a = TruncatedPowerSeries([1, 1, 1, 1], 3)
        b = TruncatedPowerSeries([1, -1], 1)
        self.assertEqual((a*b).order, 1)
        self.assertEqual((a + b).order, 1)
        self.assertEqual(a*b, TruncatedPowerSeries([1, 0], 1))

    def test_inverse(self):
        oneMinusU = TruncatedPowerSeries([1, -1], 5)
        self.assertEqual(oneMinusU.inverse(), TruncatedPowerSeries([1]*6, 5))
        self.assertEqual(TruncatedPowerSeries([2, 1], 3).inverse()*TruncatedPowerSeries([2, 1], 3), TruncatedPowerSeries.constant(1, 3))
        with self.assertRaises(ContractViolationError):
            TruncatedPowerSeries.variable(3).inverse()

    def test_powersAndSubstitution(self):
        s = TruncatedPowerSeries([1, 1], 4)
        self.assertEqual(s**3, TruncatedPowerSeries([1, 3, 3, 1, 0], 4))
        self.assertEqual(s**-1, TruncatedPowerSeries([1, -1, 1, -1, 1], 4))
        self.assertEqual(s.scaled(Fraction(1, 2)), TruncatedPowerSeries([1, Fraction(1, 2)], 4))
        self.assertEqual(s.shifted(2), TruncatedPowerSeries([0, 0, 1, 1], 6))
        self.assertEqual(s.truncate(1).order, 1)

    def test_evaluateAndPrefixSums(self):
        s = TruncatedPowerSeries([1, 2, 3], 2)
        self.assertEqual(s.evaluate(Fraction(1, 2)), Fraction(11, 4))
        self.assertEqual(s.prefixSums(), [1, 3, 6])
        self.assertEqual(prefixSumDivision(s), TruncatedPowerSeries([1, 3, 6], 2))

    def test_agreesWith(self):
        self.assertTrue(TruncatedPowerSeries([1, 2, 3], 2).agreesWith(TruncatedPowerSeries([1, 2], 1)))
        self.assertFalse(TruncatedPowerSeries([1, 2, 3], 2).agreesWith(TruncatedPowerSeries([1, 3], 1)))

    def test_json(self):
        params   = SeriesParams(2, 2)
        document = TruncatedPowerSeries([0, Fraction(1, 2)], 1).toJson(params)
        self.assertEqual(document["coefficients"], ["0/1", "1/2"])
        self.assertEqual(document["params"], {"q": 2, "b": 2, "Q": 4, "N": 1})
        self.assertEqual(TruncatedPowerSeries.fromJson(document), TruncatedPowerSeries([0, Fraction(1, 2)], 1))

    def test_fractionText(self):
        self.assertEqual(fractionText(1), "1/1")
        self.assertEqual(fractionText(Fraction(55, 128)), "55/128")

class TestSeriesParams(unittest.TestCase):

    def test_derivedValues(self):
        params = SeriesParams(2, 4)
        self.assertEqual(params.Q, 16)
        self.assertEqual(params.N, 3)

    def test_degreeOneIsRefused(self):
        with self.assertRaises(HypothesisError):
            SeriesParams(2, 1)

    def test_nonPrimePowerIsRefused(self):
        with self.assertRaises(ContractViolationError):
            SeriesParams(6, 2)

class TestEulerProducts(unittest.TestCase):

    def test_omegaN(self):
        self.assertEqual(omegaN(0, 2), 1)
        self.assertEqual(omegaN(2, 2), Fraction(3, 8))
        self.assertEqual(omegaN(1, 4), Fraction(3, 4))
        with self.assertRaises(ContractViolationError):
            omegaN(-1, 2)

    def test_eulerExpansions(self):
        self.assertEqual(eulerL(4, 2)[1], Fraction(-1, 3))
        self.assertEqual(eulerL(4, 2)[2], Fraction(1, 45))
        self.assertEqual(eulerP(2, 2), TruncatedPowerSeries([1, 2, Fraction(8, 3)], 2))

    def test_eulerLMatchesFiniteProduct(self):
        """
        Tests that the first coefficients of L agree with a long finite product
        up to the size of the omitted factors.
        """
        L      = eulerL(2, 3)
        finite = qProduct(2, 1, 60, 3)
        for c in range(4):
            self.assertLess(abs(L[c] - finite[c]), Fraction(1, 2**55))

    def test_qProduct(self):
        self.assertEqual(qProduct(2, 1, 1, 2), TruncatedPowerSeries([1, Fraction(-1, 2)], 2))

    def test_binomialSeries(self):
        self.assertEqual(binomialSeries(2, 3), TruncatedPowerSeries([1, 2, 3, 4], 3))
        self.assertEqual(binomialSeries(3, 2), TruncatedPowerSeries([1, 3, 6], 2))

    def test_omegaLimit(self):
        """
        Tests the enclosure of prod (1 - 2^-i) = 0.28878809508660242127...
        """
        box = omegaLimit(2, 64)
        self.assertLessEqual(box.width, Fraction(1, 2**64))
        self.assertTrue(box.lo < Fraction("0.2887880950866024213") < box.hi)

    def test_workingPrecisionRestores(self):
        saved = iv.prec
        with WorkingPrecision(200):
            self.assertEqual(iv.prec, 200)
        self.assertEqual(iv.prec, saved)

    def test_intervalFromIv(self):
        with WorkingPrecision(53):
            box = Interval.fromIv(iv.mpf([0.25, 0.5]))
        self.assertEqual(box, Interval(Fraction(1, 4), Fraction(1, 2)))
        self.assertTrue(box.contains(Fraction(1, 3)))
        self.assertEqual(box.midpoint, Fraction(3, 8))

class TestGeneratingFunctions(unittest.TestCase):

    def _identities(self, q, b, order):
        params = SeriesParams(q, b)
        one    = TruncatedPowerSeries.constant(1, order)
        self.assertEqual(pSeries(params, order)*TruncatedPowerSeries([1, -1], order)*lSeries(params, order), one)
        self.assertEqual(pSeries(params, order), pSeries(params, order, "product"))
        self.assertEqual(sSeries(params, order), sSeries(params, order, "closed"))
        self.assertEqual(lSeries(params, order), lSeries(params, order, "definition"))
        self.assertEqual(hSeries(params, order), hSeries(params, order, "definition"))
        self.assertEqual(pcbSeries(params, order), pcbSeries(params, order, "inclusion-exclusion"))
        self.assertEqual(jProductSeries(params, order), jSubstitutionSeries(params, order))
        A = proportionSeries(params, order)
        self.assertEqual(prefixSumDivision(jSeries(params, order).scaled(Fraction(1, params.Q))), A)

    def test_identitiesQuadraticOverGf2(self):
        self._identities(2, 2, 8)

    def test_identitiesQuadraticOverGf3(self):
        self._identities(3, 2, 6)

    def test_identitiesCubicOverGf2(self):
        self._identities(2, 3, 6)

    def test_identitiesWithSeveralIrreducibles(self):
        self._identities(2, 4, 4)

    def test_lCoefficientBound(self):
        """
        Tests |[u^c] L| <= 2Q Q^-c up to c = 30 at Q = 4, with alternating signs.
        """
        L = lSeries(SeriesParams(2, 2), 30)
        self.assertEqual(L[1], Fraction(-1, 3))
        for c in range(31):
            self.assertLessEqual(abs(L[c]), Fraction(8, 4**c))
            self.assertEqual(L[c] < 0, c % 2 == 1)

    def test_proportionValues(self):
        """
        Tests the exact proportions for small c against enumerated values.
        """
        A = proportionSeries(SeriesParams(2, 2), 3)
        self.assertEqual(A[0], 0)
        self.assertEqual(A[1], Fraction(1, 2))
        self.assertEqual(A[2], Fraction(55, 128))
        self.assertEqual(A[3], Fraction(13881, 32768))
        self.assertEqual(proportionSeries(SeriesParams(3, 2), 2)[1], Fraction(2, 3))
        self.assertEqual(proportionSeries(SeriesParams(3, 2), 2)[2], Fraction(1060, 2187))
        self.assertEqual(proportionSeries(SeriesParams(2, 3), 2)[1], Fraction(3, 4))
        self.assertEqual(proportionSeries(SeriesParams(2, 3), 2)[2], Fraction(945, 2048))

    def test_proportionsAreProbabilities(self):
        A = proportionSeries(SeriesParams(2, 2), 12)
        for c in range(13):
            self.assertTrue(0 <= A[c] <= 1)

    def test_pcbConstantTermAndJ(self):
        params = SeriesParams(2, 2)
        self.assertEqual(pcbSeries(params, 4)[0], 0)
        self.assertEqual(jSeries(params, 4)[1], 2)
        self.assertEqual(proportionSeries(params, 4)[1]*params.Q, jSeries(params, 4)[1])

    def test_pcbiOfEmptySetIsP(self):
        params = SeriesParams(2, 3)
        self.assertEqual(pcbiSeries(0, params, 4), pSeries(params, 4))
        with self.assertRaises(ContractViolationError):
            pcbiSeries(3, params, 4)

    def test_unknownForm(self):
        with self.assertRaises(ContractViolationError):
            pSeries(SeriesParams(2, 2), 3, "other")

if __name__ == '__main__':
    unittest.main()
