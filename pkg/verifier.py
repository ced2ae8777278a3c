"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import math
from dataclasses import dataclass
from fractions   import Fraction

from algebra    import FieldSpec, enumIrreducibles, fieldForOrder
from census     import WINDOW_MAX_ORDER, Census, decimalText
from cycleIndex import CycleIndex, centralizerOrder, gSeries, glOrder, namedAssignment
from errors     import ContractViolationError, CriterionMismatchError
from module     import Module
from partition  import partitionsOf
from series     import (SeriesParams, TruncatedPowerSeries, eulerP, fractionText, hSeries, jProductSeries, jSeries,
                        jSubstitutionSeries, lSeries, pSeries, pcbSeries, pcbiSeries, prefixSumDivision, proportionSeries,
                        sSeries)

SUITES = ("cycle-index","centralizer","criterion","inclusion-exclusion","tail","series","unipotent","window","all")

def _text(value):
    if isinstance(value,Fraction):
        return fractionText(value) if value.denominator != 1 else str(value.numerator)
    if isinstance(value,TruncatedPowerSeries):
        return "[" + ", ".join(_text(c) for c in value.coeffs) + "]"
    return str(value)

@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one identity: both sides as printed and whether they agree.
    """
    suite  : str
    name   : str
    passed : bool
    lhs    : str
    rhs    : str
    detail : str = ""

    def toText(self):
        relation = "=" if self.passed else "!="
        line     = f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.lhs} {relation} {self.rhs}"
        if self.detail:
            line += f" ({self.detail})"
        return line

class Verifier(Module):
    """
    Drives the cross-check suites. Every check computes one quantity in two
    independent ways and records both sides.
    """
    def __init__(self,moduleConfig=None,systemConfig=None,logger=None,census=None,cycleIndex=None):
        super().__init__("Verifier",moduleConfig,systemConfig,logger)
        self.census     = census if census is not None else Census(logger=logger)
        self.cycleIndex = cycleIndex if cycleIndex is not None else CycleIndex(logger=logger)

    def _check(self,suite,name,lhs,rhs,detail="",passed=None):
        if passed is None:
            passed = lhs == rhs
        result = CheckResult(suite,name,bool(passed),_text(lhs),_text(rhs),detail)
        self.log("DEBUG" if passed else "WARNING",result.toText())
        return result

    def cycleIndexSuite(self,q,n,assignment="all-ones"):
        """
        [u^m] of the product side against the enumerated side for m = 1..n.
        For "pcbi" also b times the product side against the PCBI(1) series.
        """
        field   = fieldForOrder(q)
        spec    = None
        if assignment == "pcbi":
            base = math.isqrt(q)
            if base*base != q:
                raise ContractViolationError(f"the pcbi assignment needs a square field order, got {q}")
            spec = FieldSpec(base,2)
        values  = namedAssignment(assignment,field,spec)
        rhs     = self.cycleIndex.icycleRhs(n,field,None,values)
        results = []
        for m in range(1,n + 1):
            lhs = self.cycleIndex.icycleLhs(m,field,None,values)
            results.append(self._check("cycle-index",f"cycle index {assignment} q={q} n={m}",lhs,rhs[m]))
        if spec is not None:
            linked = pcbiSeries(1,SeriesParams(spec.q,spec.b),n)
            results.append(self._check("cycle-index",f"b * product side = PCBI(1) q={spec.q} b={spec.b}",rhs.scale(spec.b),linked))
        return results

    def centralizerSuite(self,q,maxDim):
        """
        |C(lam,h)| by commutant enumeration against the closed formula, for
        every irreducible h and partition lam with |lam| deg h <= maxDim.
        """
        field   = fieldForOrder(q)
        results = []
        for d in range(1,maxDim + 1):
            for h in enumIrreducibles(field,d):
                for size in range(1,maxDim//d + 1):
                    for lam in partitionsOf(size):
                        counted = self.cycleIndex.centralizerBruteforce(lam,h)
                        formula = centralizerOrder(lam,d,q)
                        results.append(self._check("centralizer",f"centralizer {lam} of {h.toText()} q={q}",counted,formula))
        return results

    def criterionSuite(self,q,b,c):
        """
        F-side and K-side verdicts over all of M(c,q^b) and all f in
        Irr(q,b), then the enumerated proportion against the series value.
        """
        results = []
        try:
            brute = self.census.proportionBruteforce(q,b,c)
        except CriterionMismatchError as e:
            return [self._check("criterion",f"F/K criterion agreement q={q} b={b} c={c}","disagree","agree",str(e),False)]
        results.append(self._check("criterion",f"F/K criterion agreement q={q} b={b} c={c}","agree","agree"))
        results.append(self._check("criterion",f"enumerated = series proportion q={q} b={b} c={c}",brute,self.census.proportionExact(q,b,c)))
        return results

    def inclusionExclusionSuite(self,q,b,c):
        report  = self.census.inclusionExclusionReport(q,b,c)
        suite   = "inclusion-exclusion"
        results = [self._check(suite,f"alternating sum = |pcb| q={q} b={b} c={c}",report.alternatingSum,report.direct)]
        if report.N <= 3:
            results.append(self._check(suite,f"subset counts depend only on size q={q} b={b} c={c}","yes" if report.sizeIndependent else "no","yes"))
        for i in range(1,report.N + 1):
            results.append(self._check(suite,f"|pcbI| for |I|={i} q={q} b={b} c={c}",report.subsetCounts[i],report.seriesCounts[i]))
        return results

    def tailSuite(self,q,b,cLo,cHi):
        """
        Per-c tail bound rows, margins in the detail field.
        """
        report  = self.census.verifyTailBounds(q,b,cLo,cHi)
        results = []
        for row in report.rows:
            results.append(self._check("tail",f"difference bound c={row.c}",decimalText(row.difference,12),f"< {decimalText(row.differenceBound,12)}",
                                       f"margin {decimalText(row.differenceMargin,12)}",row.difference < row.differenceBound))
            results.append(self._check("tail",f"limit distance bound c={row.c}",decimalText(row.limitDistance,12),f"<= {decimalText(row.limitBound,12)}",
                                       f"margin {decimalText(row.limitMargin,12)}",row.limitDistance <= row.limitBound))
        return results

    def seriesSuite(self,q,b,order):
        """
        Identities between the generating functions, each built two ways.
        """
        params  = SeriesParams(q,b)
        suite   = "series"
        one     = TruncatedPowerSeries.constant(1,order)
        oneMinusU = TruncatedPowerSeries([1,-1],order)
        A       = proportionSeries(params,order)
        results = [
            self._check(suite,"P (1-u) L = 1",pSeries(params,order)*oneMinusU*lSeries(params,order),one),
            self._check(suite,"P definition = P product",pSeries(params,order),pSeries(params,order,"product")),
            self._check(suite,"S definition = S closed",sSeries(params,order),sSeries(params,order,"closed")),
            self._check(suite,"L closed = L definition",lSeries(params,order),lSeries(params,order,"definition")),
            self._check(suite,"H product = H definition",hSeries(params,order),hSeries(params,order,"definition")),
            self._check(suite,"PCB binomial = PCB inclusion-exclusion",pcbSeries(params,order),pcbSeries(params,order,"inclusion-exclusion")),
            self._check(suite,"[u^0] PCB = 0",pcbSeries(params,order)[0],Fraction(0)),
            self._check(suite,"J product = J substitution",jProductSeries(params,order),jSubstitutionSeries(params,order)),
            self._check(suite,"[u^1] J = a_1 Q",jSeries(params,order)[1],A[1]*params.Q),
            self._check(suite,"J(u/Q) / (1-u) = proportion series",prefixSumDivision(jSeries(params,order).scaled(Fraction(1,params.Q))),A),
            self._check(suite,f"G(u,{q},1) = P(u/{q},{q})",gSeries(q,1,order),eulerP(q,order).scaled(Fraction(1,q)))
        ]
        for row in self.census.verifyInequalities(q,b):
            results.append(self._check(suite,row.name,decimalText(row.lhs,20),decimalText(row.rhs,20),passed=row.passed))
        return results

    def unipotentSuite(self,q,maxDim):
        """
        Enumerated unipotent matrices of M(n,q) against q^(n(n-1)), and the
        unipotent product side against q^(n(n-1))/|GL(n,q)|.
        """
        field   = fieldForOrder(q)
        rhs     = self.cycleIndex.icycleRhs(maxDim,field,None,namedAssignment("unipotent",field))
        results = []
        for n in range(1,maxDim + 1):
            results.append(self._check("unipotent",f"unipotent count q={q} n={n}",self.cycleIndex.unipotentCount(n,field),q**(n*(n - 1))))
            results.append(self._check("unipotent",f"unipotent series q={q} n={n}",rhs[n],Fraction(q**(n*(n - 1)),glOrder(n,q))))
        return results

    def windowSuite(self,q,b):
        report = self.census.limitWindowReport(q,b)
        diff   = f"[{decimalText(report.difference.lo,12)}, {decimalText(report.difference.hi,12)}]"
        return [
            self._check("window",f"|limit - (1 - 1/e)| < 4 b/(e q^(b/2)) q={q} b={b}",diff,f"+-{decimalText(report.simpleBound.lo,12)}",passed=report.simplePassed),
            self._check("window",f"two-sided window q={q} b={b}",diff,f"({decimalText(report.lowerBound.hi,12)}, {decimalText(report.upperBound.lo,12)})",passed=report.twoSidedPassed)
        ]

    def windowSweepSuite(self,maxOrder=WINDOW_MAX_ORDER):
        """
        Both window checks for every prime power q and b >= 2 with
        q^b <= maxOrder.
        """
        results = []
        for report in self.census.windowSweep(maxOrder):
            name = f"q={report.q} b={report.b}"
            results.append(self._check("window",f"|limit - (1 - 1/e)| < 4 b/(e q^(b/2)) {name}","inside","inside" if report.simplePassed else "outside",
                                       passed=report.simplePassed))
            results.append(self._check("window",f"two-sided window {name}","inside","inside" if report.twoSidedPassed else "outside",
                                       passed=report.twoSidedPassed))
        return results

    def run(self,suite,**params):
        """
        Runs one suite, or every suite at desk scale for "all".

        Returns:
            list: CheckResult values in execution order.
        """
        q,b = params.get("q",2),params.get("b",2)
        if suite == "cycle-index":
            return self.cycleIndexSuite(q,params.get("n",2),params.get("assignment","all-ones"))
        if suite == "centralizer":
            return self.centralizerSuite(q,params.get("maxDim",3))
        if suite == "criterion":
            return self.criterionSuite(q,b,params.get("c",1))
        if suite == "inclusion-exclusion":
            return self.inclusionExclusionSuite(q,b,params.get("c",1))
        if suite == "tail":
            return self.tailSuite(q,b,params.get("cLo",49),params.get("cHi",55))
        if suite == "series":
            return self.seriesSuite(q,b,params.get("order",8))
        if suite == "unipotent":
            return self.unipotentSuite(q,params.get("maxDim",2))
        if suite == "window":
            if params.get("sweep"):
                return self.windowSweepSuite(params.get("maxOrder",WINDOW_MAX_ORDER))
            return self.windowSuite(q,b)
        if suite == "all":
            results = []
            for q in (2,3):
                for assignment in ("all-ones","all-ones-forced","unipotent"):
                    results += self.cycleIndexSuite(q,3,assignment)
            results += self.cycleIndexSuite(4,2,"pcbi")
            results += self.centralizerSuite(2,4)
            results += self.centralizerSuite(3,3)
            results += self.criterionSuite(2,2,2)
            results += self.inclusionExclusionSuite(3,2,1)
            results += self.seriesSuite(2,2,8)
            results += self.unipotentSuite(2,3)
            results += self.unipotentSuite(3,3)
            results += self.windowSweepSuite()
            results += self.tailSuite(2,2,49,52)
            return results
        raise ContractViolationError(f"unknown suite '{suite}', expected one of {', '.join(SUITES)}")
