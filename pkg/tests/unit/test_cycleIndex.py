import unittest
from unittest.mock import MagicMock, patch
from fractions import Fraction
import os

from algebra import FieldSpec, Polynomial, fieldForOrder
from cycleIndex import (ASSIGNMENTS, CycleIndex, centralizerOrder, gSeries, glOrder, namedAssignment,
                        typeClassSize)
from errors import ContractViolationError, GuardExceededError
from partition import Partition
from series import SeriesParams, eulerP, pcbiSeries

SLOW = os.environ.get("PCC_SLOW_TESTS") == "1"

class TestClosedFormulas(unittest.TestCase):

    def test_glOrder(self):
        self.assertEqual(glOrder(1, 5), 4)
        self.assertEqual(glOrder(2, 2), 6)
        self.assertEqual(glOrder(3, 2), 168)
        self.assertEqual(glOrder(0, 2), 1)

    def test_centralizerOrder(self):
        """
        Tests centralizer orders of the linear types over GF(2).
        """
        self.assertEqual(centralizerOrder(Partition(()), 1, 2), 1)
        self.assertEqual(centralizerOrder(Partition((1,)), 1, 2), 1)
        self.assertEqual(centralizerOrder(Partition((1, 1)), 1, 2), 6)
        self.assertEqual(centralizerOrder(Partition((2,)), 1, 2), 2)
        self.assertEqual(centralizerOrder((1,), 2, 2), 3)

    def test_gSeriesIsEulerP(self):
        self.assertEqual(gSeries(2, 1, 5), eulerP(2, 5).scaled(Fraction(1, 2)))
        self.assertEqual(gSeries(3, 1, 3), eulerP(3, 3).scaled(Fraction(1, 3)))

class TestCycleIndex(unittest.TestCase):

    def setUp(self):
        self.cycleIndex = CycleIndex({}, {"parallelism": 1})

    def test_typeCensusCoversAlgebra(self):
        """
        Tests that the type classes partition M(2,2) and match their class sizes.
        """
        census = self.cycleIndex.typeCensus(2, 2)
        self.assertEqual(sum(census.values()), 16)
        for mtype, count in census.items():
            self.assertEqual(count, typeClassSize(mtype, 2))

    def test_typeCensusIsCached(self):
        first = self.cycleIndex.typeCensus(1, 3)
        self.assertIs(self.cycleIndex.typeCensus(1, 3), first)
        self.assertEqual(len(first), 3)

    def test_typeCensusGuard(self):
        cycleIndex = CycleIndex({"enumeration_guard": 100}, {"parallelism": 1})
        with self.assertRaises(GuardExceededError) as ctx:
            cycleIndex.typeCensus(2, 4)
        self.assertIn("--raise-guard", str(ctx.exception))

    def test_identityForNamedAssignments(self):
        for q in (2, 3):
            field = fieldForOrder(q)
            for name in ("all-ones", "all-ones-forced", "unipotent", "zero"):
                values = namedAssignment(name, field)
                rhs    = self.cycleIndex.icycleRhs(2, field, None, values)
                for m in (1, 2):
                    lhs = self.cycleIndex.icycleLhs(m, field, None, values)
                    self.assertEqual(lhs, rhs[m], f"{name} q={q} n={m}")

    def _identityInDimensionThree(self, q):
        field = fieldForOrder(q)
        for name in ("all-ones", "all-ones-forced", "unipotent"):
            values = namedAssignment(name, field)
            rhs    = self.cycleIndex.icycleRhs(3, field, None, values)
            self.assertEqual(self.cycleIndex.icycleLhs(3, field, None, values), rhs[3], f"{name} q={q} n=3")

    def test_identityInDimensionThree(self):
        self._identityInDimensionThree(2)

    @unittest.skipUnless(SLOW, "set PCC_SLOW_TESTS=1")
    def test_identityInDimensionThreeOverGf3(self):
        self._identityInDimensionThree(3)

    def test_allOnesGivesMatrixCountOverGl(self):
        field = fieldForOrder(2)
        rhs   = self.cycleIndex.icycleRhs(3, field, None, namedAssignment("all-ones", field))
        for n in range(4):
            self.assertEqual(rhs[n], Fraction(2**(n*n), glOrder(n, 2)))

    def test_pcbiAssignmentLinksToSeries(self):
        """
        Tests the identity for the pcbi assignment over GF(4) and its link to
        the PCBI(1) series of (q, b) = (2, 2).
        """
        spec   = FieldSpec(2, 2)
        values = namedAssignment("pcbi", spec.K, spec)
        rhs    = self.cycleIndex.icycleRhs(2, spec.K, None, values)
        for m in (1, 2):
            self.assertEqual(self.cycleIndex.icycleLhs(m, spec.K, None, values), rhs[m])
        self.assertEqual(rhs.scale(2), pcbiSeries(1, SeriesParams(2, 2), 2))

    def test_badForcedPolynomial(self):
        field = fieldForOrder(2)
        with self.assertRaises(ContractViolationError):
            self.cycleIndex.icycleLhs(1, field, [Polynomial.parse("t^2+1", field)], namedAssignment("all-ones", field))

    def test_namedAssignmentErrors(self):
        with self.assertRaises(ContractViolationError):
            namedAssignment("bogus", fieldForOrder(2))
        with self.assertRaises(ContractViolationError):
            namedAssignment("pcbi", fieldForOrder(2))
        self.assertIn("pcbi", ASSIGNMENTS)

    def test_unipotentCount(self):
        field = fieldForOrder(2)
        for n in range(4):
            self.assertEqual(self.cycleIndex.unipotentCount(n, field), 2**(n*(n - 1)))
        gf3 = fieldForOrder(3)
        for n in range(3):
            self.assertEqual(self.cycleIndex.unipotentCount(n, gf3), 3**(n*(n - 1)))

    @unittest.skipUnless(SLOW, "set PCC_SLOW_TESTS=1")
    def test_unipotentCountOverGf3InDimensionThree(self):
        self.assertEqual(self.cycleIndex.unipotentCount(3, fieldForOrder(3)), 3**6)

    def test_centralizerBruteforce(self):
        """
        Tests commutant enumeration against the closed formula.
        """
        gf2 = fieldForOrder(2)
        t   = Polynomial.parse("t", gf2)
        self.assertEqual(self.cycleIndex.centralizerBruteforce(Partition((1, 1)), t), 6)
        self.assertEqual(self.cycleIndex.centralizerBruteforce(Partition((2,)), t), 2)
        self.assertEqual(self.cycleIndex.centralizerBruteforce(Partition((1,)), Polynomial.parse("t^2+t+1", gf2)), 3)
        for lam in (Partition((2, 1)), Partition((1, 1, 1)), Partition((3,))):
            self.assertEqual(self.cycleIndex.centralizerBruteforce(lam, t), centralizerOrder(lam, 1, 2))

    def test_centralizerBruteforceChecksField(self):
        t = Polynomial.parse("t", fieldForOrder(2))
        with self.assertRaises(ContractViolationError):
            self.cycleIndex.centralizerBruteforce(Partition((1,)), t, q=3)

    def test_logsThroughLogger(self):
        logger     = MagicMock()
        cycleIndex = CycleIndex({}, {"parallelism": 1}, logger)
        cycleIndex.typeCensus(1, 2)
        sent = [call.args[0] for call in logger.handleMessage.call_args_list]
        self.assertTrue(all(entry["Sender"] == "CycleIndex" for entry in sent))
        self.assertIn("INFO", [entry["Message"]["payload"]["level"] for entry in sent])

    @patch('cycleIndex.ConfigLoader')
    def test_defaultsFromConfig(self, mockConfigLoader):
        mockConfigLoader.return_value.get_config.return_value = {
            "system": {"parallelism": 1},
            "modules": {"cycleIndex": {"partition_guard": 12}}
        }
        cycleIndex = CycleIndex()
        self.assertEqual(cycleIndex.partitionGuard, 12)
        self.assertEqual(cycleIndex.parallelism(), 1)

if __name__ == '__main__':
    unittest.main()
