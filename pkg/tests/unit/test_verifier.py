import unittest
from unittest.mock import MagicMock, patch
import os

from census import Census
from cycleIndex import CycleIndex
from errors import ContractViolationError
from verifier import SUITES, CheckResult, Verifier

SLOW = os.environ.get("PCC_SLOW_TESTS") == "1"

class TestCheckResult(unittest.TestCase):

    def test_toText(self):
        self.assertEqual(CheckResult("series", "x", True, "1", "1").toText(), "PASS x: 1 = 1")
        self.assertEqual(CheckResult("series", "x", False, "1", "2").toText(), "FAIL x: 1 != 2")
        self.assertEqual(CheckResult("tail", "y", True, "0.1", "< 0.2", "margin 0.1").toText(), "PASS y: 0.1 = < 0.2 (margin 0.1)")

class TestVerifier(unittest.TestCase):

    def setUp(self):
        self.logger   = MagicMock()
        system        = {"parallelism": 1}
        self.verifier = Verifier(logger=self.logger, census=Census({}, system, self.logger), cycleIndex=CycleIndex({}, system, self.logger))

    def assertAllPassed(self, results):
        failed = [r.toText() for r in results if not r.passed]
        self.assertEqual(failed, [])

    def test_cycleIndexSuite(self):
        results = self.verifier.cycleIndexSuite(2, 2, "all-ones")
        self.assertEqual(len(results), 2)
        self.assertAllPassed(results)
        self.assertEqual(results[1].rhs, "8/3")

    def test_cycleIndexSuitePcbi(self):
        """
        Tests the pcbi assignment over GF(4) including its link to PCBI(1).
        """
        results = self.verifier.cycleIndexSuite(4, 2, "pcbi")
        self.assertEqual(len(results), 3)
        self.assertAllPassed(results)

    def test_pcbiNeedsSquareOrder(self):
        with self.assertRaises(ContractViolationError):
            self.verifier.cycleIndexSuite(8, 1, "pcbi")

    def test_centralizerSuite(self):
        results = self.verifier.centralizerSuite(2, 2)
        self.assertEqual(len(results), 7)
        self.assertAllPassed(results)

    def test_centralizerSuiteDimensionFour(self):
        results = self.verifier.centralizerSuite(2, 4)
        self.assertEqual(len(results), 30)
        self.assertAllPassed(results)

    def test_centralizerSuiteOverGf3(self):
        results = self.verifier.centralizerSuite(3, 3)
        self.assertEqual(len(results), 29)
        self.assertAllPassed(results)

    def test_criterionSuite(self):
        results = self.verifier.criterionSuite(2, 2, 1)
        self.assertEqual([r.name for r in results], ["F/K criterion agreement q=2 b=2 c=1", "enumerated = series proportion q=2 b=2 c=1"])
        self.assertAllPassed(results)
        self.assertEqual(results[1].lhs, "1/2")

    @patch('census.isPrimaryCyclicF')
    def test_criterionSuiteReportsDisagreement(self, mockCriterion):
        mockCriterion.return_value.isCyclic = False
        results = self.verifier.criterionSuite(2, 2, 1)
        self.assertEqual(len(results), 1)
        self.assertFalse(results[0].passed)
        levels = [call.args[0]["Message"]["payload"]["level"] for call in self.logger.handleMessage.call_args_list]
        self.assertIn("WARNING", levels)

    def test_inclusionExclusionSuite(self):
        results = self.verifier.inclusionExclusionSuite(3, 2, 1)
        self.assertEqual(len(results), 5)
        self.assertAllPassed(results)

    def test_seriesSuite(self):
        results = self.verifier.seriesSuite(2, 2, 6)
        self.assertEqual(len(results), 15)
        self.assertAllPassed(results)

    def test_seriesSuiteOverGf3(self):
        self.assertAllPassed(self.verifier.seriesSuite(3, 2, 4))

    def test_unipotentSuite(self):
        results = self.verifier.unipotentSuite(2, 2)
        self.assertEqual(len(results), 4)
        self.assertAllPassed(results)

    @unittest.skipUnless(SLOW, "set PCC_SLOW_TESTS=1")
    def test_unipotentSuiteOverGf3(self):
        results = self.verifier.unipotentSuite(3, 3)
        self.assertEqual(len(results), 6)
        self.assertAllPassed(results)

    @unittest.skipUnless(SLOW, "set PCC_SLOW_TESTS=1")
    def test_cycleIndexSuiteDimensionThree(self):
        for q in (2, 3):
            for assignment in ("all-ones", "all-ones-forced", "unipotent"):
                results = self.verifier.cycleIndexSuite(q, 3, assignment)
                self.assertEqual(len(results), 3)
                self.assertAllPassed(results)

    def test_windowSweepSuite(self):
        """
        Tests both window checks for every q^b up to 2^16.
        """
        results = self.verifier.windowSweepSuite()
        self.assertAllPassed(results)
        self.assertEqual(len(results), 2*len(self.verifier.census.windowSweep()))
        self.assertIn("two-sided window q=256 b=2", [r.name for r in results])
        self.assertEqual(len(self.verifier.run("window", sweep=True, maxOrder=16)), 10)

    def test_windowSuite(self):
        results = self.verifier.windowSuite(2, 2)
        self.assertEqual(len(results), 2)
        self.assertAllPassed(results)

    @unittest.skipUnless(SLOW, "set PCC_SLOW_TESTS=1")
    def test_tailSuite(self):
        results = self.verifier.tailSuite(2, 2, 49, 50)
        self.assertEqual(len(results), 4)
        self.assertAllPassed(results)

    def test_runDispatch(self):
        results = self.verifier.run("unipotent", q=2, maxDim=1)
        self.assertEqual([r.suite for r in results], ["unipotent", "unipotent"])
        with self.assertRaises(ContractViolationError):
            self.verifier.run("bogus")
        self.assertIn("all", SUITES)

    @unittest.skipUnless(SLOW, "set PCC_SLOW_TESTS=1")
    def test_runAll(self):
        self.assertAllPassed(self.verifier.run("all"))

if __name__ == '__main__':
    unittest.main()
