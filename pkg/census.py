"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import enum
import math
import os
import sys
from collections     import Counter
from dataclasses     import dataclass, field
from fractions       import Fraction
from itertools       import combinations
from multiprocessing import Pool

import jsonschema
import mpmath
import numpy
import pandas
import sympy
from mpmath import iv
from tqdm   import tqdm

from algebra      import FieldSpec, enumIrreducibles, isPrimePower, primePowerParts
from configLoader import ConfigLoader
from cycleIndex   import glOrder
from errors       import ContractViolationError, CriterionMismatchError, GuardExceededError
from matrixLab    import MatrixOverField, blowup, isPrimaryCyclicF, isPrimaryCyclicK, matrixBatch
from module       import Module
from series       import Interval, SeriesParams, WorkingPrecision, fractionText, omegaIv, omegaN, pcbiSeries, proportionSeries

BRUTEFORCE_GUARD = 2**20
RAISED_GUARD     = 2**24
SERIES_LIMIT     = 80
TAIL_LIMIT_BITS  = 260
DECIMAL_DIGITS   = 60
WINDOW_MAX_ORDER = 2**16
POOL_THRESHOLD   = 4096
REFERENCE_TABLE  = os.path.join("data","reference_proportions.csv")

_RATIONAL = {"type": "string", "pattern": "^-?[0-9]+/[0-9]+$"}

REPORT_SCHEMA = {
    "type"       : "object",
    "required"   : ["q", "b", "method"],
    "properties" : {
        "q"            : {"type": "integer", "minimum": 2},
        "b"            : {"type": "integer", "minimum": 2},
        "c"            : {"type": ["integer", "null"], "minimum": 1},
        "method"       : {"enum": ["SERIES", "BRUTE_FORCE", "MONTE_CARLO", "LIMIT"]},
        "proportion"   : _RATIONAL,
        "decimal"      : {"type": "string"},
        "interval"     : {"type": "array", "items": _RATIONAL, "minItems": 2, "maxItems": 2},
        "samples"      : {"type": "integer", "minimum": 1},
        "seed"         : {"type": "integer", "minimum": 0},
        "stderr"       : _RATIONAL,
        "modulus"      : {"type": "string"},
        "window_check" : {"type": "boolean"},
        "constants"    : {
            "type"       : "object",
            "required"   : ["a_L", "a_J", "M", "k"],
            "properties" : {
                "a_L"            : {"type": "integer"},
                "a_J"            : _RATIONAL,
                "M"              : _RATIONAL,
                "k"              : _RATIONAL,
                "limit_interval" : {"type": "array", "items": _RATIONAL, "minItems": 2, "maxItems": 2}
            }
        }
    }
}

class CensusMethod(enum.Enum):
    SERIES      = "SERIES"
    BRUTE_FORCE = "BRUTE_FORCE"
    MONTE_CARLO = "MONTE_CARLO"
    LIMIT       = "LIMIT"

def decimalText(x,digits=DECIMAL_DIGITS):
    """
    Decimal rendering of a rational to the given significant digits.
    """
    x = Fraction(x)
    with mpmath.workdps(digits + 10):
        return mpmath.nstr(mpmath.mpf(x.numerator)/x.denominator,digits)

def _intervalJson(interval):
    return [fractionText(interval.lo),fractionText(interval.hi)]

def _intervalFromJson(pair):
    return Interval(Fraction(pair[0]),Fraction(pair[1]))

@dataclass(frozen=True)
class BoundConstants:
    aL            : int
    aJ            : Fraction
    M             : Fraction
    k             : Fraction
    limitInterval : Interval = None

    def toJson(self):
        document = {
            "a_L" : self.aL,
            "a_J" : fractionText(self.aJ),
            "M"   : fractionText(self.M),
            "k"   : fractionText(self.k)
        }
        if self.limitInterval is not None:
            document["limit_interval"] = _intervalJson(self.limitInterval)
        return document

    @classmethod
    def fromJson(cls,document):
        limit = document.get("limit_interval")
        return cls(document["a_L"],Fraction(document["a_J"]),Fraction(document["M"]),Fraction(document["k"]),
                   _intervalFromJson(limit) if limit is not None else None)

@dataclass(frozen=True)
class CensusReport:
    """
    One computed value of P_M(c,q^b), or of its limit when c is None.
    """
    q           : int
    b           : int
    c           : int
    method      : CensusMethod
    proportion  : Fraction = None
    interval    : Interval = None
    samples     : int = None
    seed        : int = None
    stderr      : Fraction = None
    constants   : BoundConstants = None
    modulus     : str = None
    windowCheck : bool = None

    def __post_init__(self):
        if self.proportion is not None and not 0 <= self.proportion <= 1:
            raise ContractViolationError(f"proportion {self.proportion} outside [0,1]")

    def toJson(self):
        document = {"q": self.q, "b": self.b, "c": self.c, "method": self.method.value}
        if self.proportion is not None:
            document["proportion"] = fractionText(self.proportion)
            document["decimal"]    = decimalText(self.proportion)
        if self.interval is not None:
            document["interval"] = _intervalJson(self.interval)
        if self.samples is not None:
            document["samples"] = self.samples
        if self.seed is not None:
            document["seed"] = self.seed
        if self.stderr is not None:
            document["stderr"] = fractionText(self.stderr)
        if self.modulus is not None:
            document["modulus"] = self.modulus
        if self.windowCheck is not None:
            document["window_check"] = self.windowCheck
        if self.constants is not None:
            document["constants"] = self.constants.toJson()
        jsonschema.validate(document,REPORT_SCHEMA)
        return document

    @classmethod
    def fromJson(cls,document):
        jsonschema.validate(document,REPORT_SCHEMA)
        return cls(
            q           = document["q"],
            b           = document["b"],
            c           = document.get("c"),
            method      = CensusMethod(document["method"]),
            proportion  = Fraction(document["proportion"]) if "proportion" in document else None,
            interval    = _intervalFromJson(document["interval"]) if "interval" in document else None,
            samples     = document.get("samples"),
            seed        = document.get("seed"),
            stderr      = Fraction(document["stderr"]) if "stderr" in document else None,
            constants   = BoundConstants.fromJson(document["constants"]) if "constants" in document else None,
            modulus     = document.get("modulus"),
            windowCheck = document.get("window_check")
        )

    def toText(self):
        if self.proportion is not None:
            return fractionText(self.proportion) if self.proportion.denominator != 1 else str(self.proportion.numerator)
        lines = [f"{self.interval}"]
        if self.windowCheck is not None:
            lines.append(f"window check: {'PASS' if self.windowCheck else 'FAIL'}")
        if self.constants is not None:
            lines.append(f"a_L = {self.constants.aL}")
            lines.append(f"a_J = {decimalText(self.constants.aJ,20)}")
            lines.append(f"M = {decimalText(self.constants.M,20)}")
            lines.append(f"k = {decimalText(self.constants.k,20)}")
        return "\n".join(lines)

    def toRow(self):
        return {
            "c"          : self.c,
            "method"     : self.method.value,
            "proportion" : decimalText(self.proportion) if self.proportion is not None else "",
            "exact"      : fractionText(self.proportion) if self.proportion is not None else ""
        }

@dataclass(frozen=True)
class InclusionExclusionReport:
    q              : int
    b              : int
    c              : int
    N              : int
    direct         : int
    subsetCounts   : dict
    seriesCounts   : dict
    sizeIndependent: bool
    alternatingSum : int

    @property
    def passed(self):
        return self.sizeIndependent and self.alternatingSum == self.direct and self.subsetCounts == self.seriesCounts

@dataclass(frozen=True)
class WindowReport:
    q              : int
    b              : int
    difference     : Interval
    simpleBound    : Interval
    lowerBound     : Interval
    upperBound     : Interval
    simplePassed   : bool
    twoSidedPassed : bool

    @property
    def passed(self):
        return self.simplePassed and self.twoSidedPassed

@dataclass(frozen=True)
class TailRow:
    c                : int
    difference       : Fraction
    differenceBound  : Fraction
    limitDistance    : Fraction
    limitBound       : Fraction

    @property
    def differenceMargin(self):
        return self.differenceBound - self.difference

    @property
    def limitMargin(self):
        return self.limitBound - self.limitDistance

    @property
    def passed(self):
        return self.difference < self.differenceBound and self.limitDistance <= self.limitBound

@dataclass(frozen=True)
class TailBoundReport:
    q         : int
    b         : int
    cLo       : int
    cHi       : int
    constants : BoundConstants
    rows      : tuple

    @property
    def passed(self):
        return all(row.passed for row in self.rows)

@dataclass(frozen=True)
class InequalityRow:
    name   : str
    lhs    : Fraction
    rhs    : Fraction
    passed : bool

@dataclass(frozen=True)
class TableComparison:
    c         : int
    exact     : Fraction
    reference : Fraction
    note      : str = ""

    @property
    def matches(self):
        return self.exact == self.reference

@dataclass
class TableResult:
    q           : int
    b           : int
    reports     : list = field(default_factory=list)
    comparisons : list = field(default_factory=list)

    def toFrame(self):
        rows  = []
        known = {comp.c: comp for comp in self.comparisons}
        for report in self.reports:
            row  = report.toRow()
            comp = known.get(report.c)
            row["reference_match"] = "" if comp is None else ("yes" if comp.matches else "no")
            row["note"]            = "" if comp is None else comp.note
            rows.append(row)
        return pandas.DataFrame(rows,columns=["c","method","proportion","exact","reference_match","note"])

def _censusChunk(task):
    """
    Pool worker: for every matrix with the given leading row, the set of
    indices of the f in Irr(q,b) for which it is f-primary cyclic, decided on
    K; the F-side verdict is recomputed and disagreements are counted.
    """
    spec,c,lead,polys = task
    tail       = spec.Q**(c*(c - 1))
    counts     = Counter()
    mismatches = 0
    for entries in matrixBatch(spec.Q,c,lead*tail,(lead + 1)*tail):
        X    = MatrixOverField(spec,entries)
        Y    = blowup(X)
        hits = []
        for i,f in enumerate(polys):
            onK = isPrimaryCyclicK(X,f).isCyclic
            if onK != isPrimaryCyclicF(X,f,Y).isCyclic:
                mismatches += 1
            if onK:
                hits.append(i)
        counts[frozenset(hits)] += 1
    return counts,mismatches

def _isPrimaryCyclicAny(X,polys):
    return any(isPrimaryCyclicK(X,f).isCyclic for f in polys)

class Census(Module):
    """
    Exact, enumerated and sampled proportions of primary cyclic matrices in
    M(c,q^b), their limit and the constants bounding the approach to it.
    """
    def __init__(self,moduleConfig=None,systemConfig=None,logger=None,raiseGuard=False,cache=None):
        """
        Args:
            moduleConfig (dict): The 'census' section of config.json.
            systemConfig (dict): The 'system' section.
            logger (Logger): Shared logger.
            raiseGuard (bool): Use the raised enumeration guard.
            cache (IrreducibleCache): Optional on-disk polynomial cache.
        """
        if moduleConfig is None:
            full_config  = ConfigLoader().get_config()
            moduleConfig = full_config.get("modules",{}).get("census",{})
            systemConfig = full_config.get("system",{}) if systemConfig is None else systemConfig
        super().__init__("Census",moduleConfig,systemConfig,logger)
        self.bruteforceGuard = self.config.get("bruteforce_guard",BRUTEFORCE_GUARD)
        self.raisedGuard     = self.config.get("raised_guard",RAISED_GUARD)
        self.seriesLimit     = self.config.get("series_order_limit",SERIES_LIMIT)
        self.referencePath   = self.config.get("reference_table_path",REFERENCE_TABLE)
        if not os.path.isabs(self.referencePath):
            self.referencePath = os.path.join(os.path.dirname(os.path.abspath(__file__)),self.referencePath)
        self.defaultSeed     = self.config.get("monte_carlo_seed",0)
        self.limitBits       = self.config.get("limit_bits",64)
        self.raiseGuard      = raiseGuard
        self.cache           = cache
        self._proportions    = {}
        self._enumerations   = {}
        self._reference      = None

    @property
    def guard(self):
        return self.raisedGuard if self.raiseGuard else self.bruteforceGuard

    def _spec(self,q,b,modulus=None):
        SeriesParams(q,b)
        return FieldSpec(q,b,modulus)

    def _checkDimension(self,c):
        if not isinstance(c,int) or c < 1:
            raise ContractViolationError(f"matrix dimension c={c!r} must be a positive integer")

    # --- exact values ---

    def proportionSeriesFor(self,q,b,order):
        """
        The proportion series of (q,b) to at least the given order, cached.
        """
        params = SeriesParams(q,b)
        known  = self._proportions.get((q,b))
        if known is None or known.order < order:
            self.log("DEBUG",f"Expanding the proportion series of q={q}, b={b} to order {order}.")
            known = proportionSeries(params,order)
            self._proportions[(q,b)] = known
        return known

    def proportionExact(self,q,b,c):
        """
        P_M(c,q^b) = omega_c(1,q^b) [u^c] PCB(u,q^b).

        Returns:
            Fraction: The exact proportion.
        """
        self._checkDimension(c)
        return self.proportionSeriesFor(q,b,c)[c]

    def reportExact(self,q,b,c):
        return CensusReport(q,b,c,CensusMethod.SERIES,proportion=self.proportionExact(q,b,c))

    # --- enumeration ---

    def _enumerate(self,q,b,c,modulus=None):
        spec = self._spec(q,b,modulus)
        self._checkDimension(c)
        key  = (spec,c)
        if key in self._enumerations:
            return self._enumerations[key]
        size = spec.Q**(c*c)
        if size > self.guard:
            override = "--raise-guard" if not self.raiseGuard else "a larger census.raised_guard"
            raise GuardExceededError(f"enumerating M({c},{spec.Q})",size,self.guard,override)
        polys = enumIrreducibles(spec.F,b,cache=self.cache)
        self.log("INFO",f"Enumerating {size} matrices of M({c},{spec.Q}) against {len(polys)} polynomials.")

        tasks      = [(spec,c,lead,polys) for lead in range(spec.Q**c)]
        counts     = Counter()
        mismatches = 0
        workers    = self.parallelism()
        if workers > 1 and size > POOL_THRESHOLD:
            with Pool(processes=workers) as pool:
                for part,bad in tqdm(pool.imap(_censusChunk,tasks),total=len(tasks),disable=not self.progress(),file=sys.stderr):
                    counts.update(part)
                    mismatches += bad
        else:
            for task in tqdm(tasks,disable=not self.progress(),file=sys.stderr):
                part,bad    = _censusChunk(task)
                counts.update(part)
                mismatches += bad
        if mismatches:
            self.log("ERROR",f"{mismatches} F/K verdict disagreements in M({c},{spec.Q}).")
            raise CriterionMismatchError(f"F-side and K-side verdicts disagree {mismatches} times in M({c},{spec.Q})")
        result = (spec,polys,counts)
        self._enumerations[key] = result
        return result

    def proportionBruteforce(self,q,b,c,modulus=None):
        """
        Fraction of X in M(c,q^b) that are f-primary cyclic for some f in
        Irr(q,b), by full enumeration with both criteria.
        """
        spec,_,counts = self._enumerate(q,b,c,modulus)
        hits = sum(count for subset,count in counts.items() if subset)
        return Fraction(hits,spec.Q**(c*c))

    def reportBruteforce(self,q,b,c,modulus=None):
        spec = self._spec(q,b,modulus)
        return CensusReport(q,b,c,CensusMethod.BRUTE_FORCE,proportion=self.proportionBruteforce(q,b,c,modulus),modulus=spec.modulus.toText())

    def inclusionExclusionReport(self,q,b,c):
        """
        |pcbI(I,c,q^b)| for subsets I of Irr(q,b) read off the enumeration,
        checked for size independence, against the series and through the
        alternating sum against |pcb(c,q^b)|.
        """
        spec,polys,counts = self._enumerate(q,b,c)
        N      = len(polys)
        direct = sum(count for subset,count in counts.items() if subset)

        def pcbiCount(indices):
            wanted = frozenset(indices)
            return sum(count for subset,count in counts.items() if wanted <= subset)

        subsetCounts    = {}
        sizeIndependent = True
        for i in range(1,N + 1):
            subsets         = combinations(range(N),i)
            subsetCounts[i] = pcbiCount(next(subsets))
            if N <= 3:
                sizeIndependent = sizeIndependent and all(pcbiCount(s) == subsetCounts[i] for s in subsets)

        params       = SeriesParams(q,b)
        gl           = glOrder(c,spec.Q)
        seriesCounts = {i: pcbiSeries(i,params,c)[c]*gl for i in range(1,N + 1)}
        seriesCounts = {i: int(v) if v.denominator == 1 else v for i,v in seriesCounts.items()}
        alternating  = sum((-1)**(i + 1)*math.comb(N,i)*subsetCounts[i] for i in range(1,N + 1))
        return InclusionExclusionReport(q,b,c,N,direct,subsetCounts,seriesCounts,sizeIndependent,alternating)

    def inclusionExclusionCheck(self,q,b,c):
        return self.inclusionExclusionReport(q,b,c).passed

    # --- sampling ---

    def proportionMontecarlo(self,q,b,c,samples,seed=None):
        """
        Estimate from i.i.d. uniform matrices drawn with numpy's seeded
        generator.

        Returns:
            tuple: (estimate, standard error) as Fractions.
        """
        self._checkDimension(c)
        if not isinstance(samples,int) or samples < 1:
            raise ContractViolationError(f"samples={samples!r} must be a positive integer")
        seed  = self.defaultSeed if seed is None else seed
        spec  = self._spec(q,b)
        polys = enumIrreducibles(spec.F,b,cache=self.cache)
        rng   = numpy.random.default_rng(seed)
        draws = rng.integers(0,spec.Q,size=(samples,c,c))
        hits  = 0
        for entries in tqdm(draws,disable=not self.progress(),file=sys.stderr):
            if _isPrimaryCyclicAny(MatrixOverField(spec,entries),polys):
                hits += 1
        estimate = Fraction(hits,samples)
        stderr   = Fraction(math.sqrt(float(estimate*(1 - estimate))/samples)).limit_denominator(10**12)
        self.log("INFO",f"Monte Carlo M({c},{spec.Q}): {hits}/{samples} hits with seed {seed}.")
        return estimate,stderr

    def reportMontecarlo(self,q,b,c,samples,seed=None):
        seed            = self.defaultSeed if seed is None else seed
        estimate,stderr = self.proportionMontecarlo(q,b,c,samples,seed)
        spec            = self._spec(q,b)
        return CensusReport(q,b,c,CensusMethod.MONTE_CARLO,proportion=estimate,samples=samples,seed=seed,stderr=stderr,modulus=spec.modulus.toText())

    # --- limit ---

    def _limitIv(self,params,bits):
        Q,b,N = params.Q,params.b,params.N
        omega = omegaIv(Q,bits)
        H1    = iv.mpf(b*Q)/((Q - 1)**2)*omega**b
        return 1 - (1 - H1)**N

    def limitProportion(self,q,b,precisionBits=None):
        """
        Enclosure of 1 - (1 - H(1,q^b))^N with
        H(1,q^b) = b q^-b / (1 - q^-b)^2 * omega(1,q^b)^b.

        Returns:
            Interval: Width at most 2^-precisionBits.
        """
        params = SeriesParams(q,b)
        bits   = self.limitBits if precisionBits is None else precisionBits
        target = Fraction(1,2**bits)
        extra  = params.N.bit_length() + 2*b.bit_length() + 4
        wp     = bits + 2*params.Q.bit_length() + extra + 40
        while True:
            with WorkingPrecision(wp):
                interval = Interval.fromIv(self._limitIv(params,bits + extra))
            if interval.width <= target:
                return interval
            self.log("DEBUG",f"Limit interval of width 2^{interval.width.numerator.bit_length() - interval.width.denominator.bit_length()} too wide, retrying.")
            wp    *= 2
            extra += 16

    def reportLimit(self,q,b,precisionBits=None,withConstants=False):
        interval  = self.limitProportion(q,b,precisionBits)
        constants = self.convergenceConstants(q,b) if withConstants else None
        return CensusReport(q,b,None,CensusMethod.LIMIT,interval=interval,constants=constants,windowCheck=self.limitWindowCheck(q,b))

    def limitWindowReport(self,q,b):
        """
        Position of the limit relative to 1 - 1/e:
        |diff| < 4 e^-1 b q^(-b/2) and
        -4b/(e q^(b/2)) < diff < (1+b)/(e q^b) + 2(1+b)^2/(e q^(2b)).
        """
        params = SeriesParams(q,b)
        Q      = params.Q
        bits   = 64 + params.N.bit_length()
        with WorkingPrecision(bits + 2*Q.bit_length() + 60):
            limit  = self._limitIv(params,bits)
            einv   = iv.exp(iv.mpf(-1))
            diff   = Interval.fromIv(limit - (1 - einv))
            simple = Interval.fromIv(4*einv*b/iv.sqrt(iv.mpf(Q)))
            lower  = Interval(-simple.hi,-simple.lo)
            upper  = Interval.fromIv((1 + b)*einv/Q + 2*(1 + b)**2*einv/(iv.mpf(Q)**2))
        simplePassed   = max(abs(diff.lo),abs(diff.hi)) < simple.lo
        twoSidedPassed = lower.hi < diff.lo and diff.hi < upper.lo
        report = WindowReport(q,b,diff,simple,lower,upper,simplePassed,twoSidedPassed)
        self.log("DEBUG",f"Window check q={q}, b={b}: {report.passed}.")
        return report

    def limitWindowCheck(self,q,b):
        return self.limitWindowReport(q,b).passed

    def windowSweep(self,maxOrder=WINDOW_MAX_ORDER):
        """
        Window reports for every prime power q and b >= 2 with q^b <= maxOrder.
        """
        reports = []
        for q in range(2,math.isqrt(maxOrder) + 1):
            if not isPrimePower(q):
                continue
            b = 2
            while q**b <= maxOrder:
                reports.append(self.limitWindowReport(q,b))
                b += 1
        return reports

    def verifyInequalities(self,q,b):
        """
        The elementary inequalities behind the window, for x = q^-b <= 1/4:
        omega(1,Q) > 1 - x - x^2 > 1/2, (1 - x - x^2)^b >= 1 - 2bx and
        1/(1 - x) < 1 + x + 2x^2.
        """
        params = SeriesParams(q,b)
        x      = Fraction(1,params.Q)
        if x > Fraction(1,4):
            raise ContractViolationError(f"q^b = {params.Q} is below 4")
        quad   = 1 - x - x*x
        omega  = Interval.fromIv(self._omegaInterval(params.Q))
        rows = [
            InequalityRow("omega(1,Q) > 1 - x - x^2",omega.lo,quad,omega.lo > quad),
            InequalityRow("1 - x - x^2 > 1/2",quad,Fraction(1,2),quad > Fraction(1,2)),
            InequalityRow("(1 - x - x^2)^b >= 1 - 2bx",quad**b,1 - 2*b*x,quad**b >= 1 - 2*b*x),
            InequalityRow("1/(1 - x) < 1 + x + 2x^2",1/(1 - x),1 + x + 2*x*x,1/(1 - x) < 1 + x + 2*x*x)
        ]
        return rows

    def _omegaInterval(self,Q):
        with WorkingPrecision(120):
            return omegaIv(Q,64)

    # --- constants and tail ---

    def convergenceConstants(self,q,b,withLimit=True):
        """
        a_L = 2q^b, a_J = (8/3)(b q^b/(q^b - 1) 2^(2b) q^(2b^2))^ceil(q^b/b),
        k = a_J/(1 - q^-b) and M = (max(b-1, q^b/b)/log(3/4))^2 rounded up.

        Returns:
            BoundConstants: With the limit interval when withLimit is set.
        """
        params = SeriesParams(q,b)
        Q      = params.Q
        aL     = 2*Q
        base   = Fraction(b*Q,Q - 1)*2**(2*b)*q**(2*b*b)
        aJ     = Fraction(8,3)*base**(-(-Q//b))
        k      = aJ/(1 - Fraction(1,Q))
        top    = max(Fraction(b - 1),Fraction(Q,b))
        with WorkingPrecision(128):
            M = Interval.fromIv((iv.mpf(top.numerator)/top.denominator/iv.log(iv.mpf(3)/4))**2).hi
        limit = self.limitProportion(q,b) if withLimit else None
        return BoundConstants(aL,aJ,M,k,limit)

    def verifyTailBounds(self,q,b,cLo,cHi):
        """
        For c in [cLo, cHi]: |P_M(c+1) - P_M(c)| < a_J q^(-bc) exactly, and
        |P_M(c) - P_M(inf)| <= k q^(-bc) against a limit interval far
        narrower than the bound.

        Returns:
            TailBoundReport: Per-c rows with margins.
        """
        constants = self.convergenceConstants(q,b,withLimit=False)
        if cLo <= constants.M:
            raise ContractViolationError(f"c_lo={cLo} must exceed the threshold M = {float(constants.M):.2f}")
        if cHi < cLo:
            raise ContractViolationError(f"empty range [{cLo}, {cHi}]")
        if cHi + 1 > self.seriesLimit:
            raise ContractViolationError(f"c_hi={cHi} needs series order {cHi + 1}, above the limit {self.seriesLimit}")
        Q      = q**b
        series = self.proportionSeriesFor(q,b,cHi + 1)
        logK   = constants.k.numerator.bit_length() - constants.k.denominator.bit_length()
        needed = Q.bit_length()*cHi - logK + 18
        bits   = max(TAIL_LIMIT_BITS,needed)
        limit  = self.limitProportion(q,b,bits)
        constants = BoundConstants(constants.aL,constants.aJ,constants.M,constants.k,limit)
        rows = []
        for c in range(cLo,cHi + 1):
            scale = Fraction(1,Q**c)
            rows.append(TailRow(
                c,
                abs(series[c + 1] - series[c]),
                constants.aJ*scale,
                max(abs(series[c] - limit.lo),abs(series[c] - limit.hi)),
                constants.k*scale
            ))
        report = TailBoundReport(q,b,cLo,cHi,constants,tuple(rows))
        self.log("INFO",f"Tail bounds q={q}, b={b}, c in [{cLo},{cHi}]: {'PASS' if report.passed else 'FAIL'}.")
        return report

    def differenceProfile(self,q,b,cMax):
        """
        Consecutive differences against a_J q^(-bc) for c = 1..cMax, without
        the threshold precondition; informational only.
        """
        constants = self.convergenceConstants(q,b,withLimit=False)
        series    = self.proportionSeriesFor(q,b,cMax + 1)
        Q         = q**b
        return [TailRow(c,abs(series[c + 1] - series[c]),constants.aJ/Q**c,Fraction(0),Fraction(0)) for c in range(1,cMax + 1)]

    # --- reference table ---

    def referenceTable(self):
        if self._reference is None:
            self._reference = pandas.read_csv(self.referencePath)
        return self._reference

    def referenceValue(self,q,b,c):
        """
        The tabulated polynomial in q, b and x = q^-b for row c, evaluated.

        Returns:
            Fraction: None when the table has no row c.
        """
        table = self.referenceTable()
        rows  = table[table["c"] == c]
        if rows.empty:
            return None
        x     = Fraction(1,q**b)
        value = Fraction(0)
        for row in rows.itertuples(index=False):
            value += Fraction(int(row.numerator),int(row.denominator))*x**int(row.x_power)*Fraction(q)**int(row.q_power)*Fraction(b)**int(row.b_power)
        return value

    def tableGenerate(self,q,b,cMax):
        """
        Exact proportions for c = 1..cMax and comparisons with the reference
        rows for the c the table covers.
        """
        self._checkDimension(cMax)
        primePowerParts(q)
        result = TableResult(q,b)
        for c in range(1,cMax + 1):
            result.reports.append(self.reportExact(q,b,c))
        covered = sorted(int(c) for c in self.referenceTable()["c"].unique())
        for c in covered:
            if c > cMax:
                break
            exact     = result.reports[c - 1].proportion
            reference = self.referenceValue(q,b,c)
            note      = ""
            if exact != reference:
                note = "tabulated row assumes b prime" if not sympy.isprime(b) else "differs from the series value"
                self.log("WARNING",f"Reference row c={c} differs at q={q}, b={b}.")
            result.comparisons.append(TableComparison(c,exact,reference,note))
        return result
