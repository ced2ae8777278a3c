"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import argparse
import copy
import json
import os
import sys
from dataclasses import asdict, dataclass, field

import pandas

from census          import Census, decimalText
from configLoader    import ConfigLoader
from cycleIndex      import ASSIGNMENTS, CycleIndex
from errors          import ContractViolationError, CriterionMismatchError, GuardExceededError, HypothesisError
from module          import Module
from polynomialCache import IrreducibleCache
from series          import SeriesParams, pcbSeries
from verifier        import SUITES, Verifier

EXIT_OK     = 0
EXIT_FAIL   = 1
EXIT_USAGE  = 2
EXIT_GUARD  = 3
CACHE_ENV   = "PCC_CACHE_DIR"
FORMATS     = ("json","csv","text")
METHODS     = ("exact","brute","mc")

def positiveInt(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value

def nonNegativeInt(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} must not be negative")
    return value

@dataclass
class CliConfig:
    """
    Parsed and validated invocation.
    """
    subcommand    : str
    options       : dict = field(default_factory=dict)
    outputFormat  : str = "text"
    parallelism   : int = None
    guardOverride : bool = False
    cacheDir      : str = None
    useCache      : bool = True

class CLI(Module):
    """
    Command-line front end: proportion, limit, verify and table subcommands.
    Results go to stdout, diagnostics to the Logger.
    """
    def __init__(self,fullConfig=None,logger=None,stdout=None,stderr=None):
        """
        Args:
            fullConfig (dict): The whole config.json document.
            logger (Logger): Shared logger.
            stdout: Stream for results; sys.stdout when None.
            stderr: Stream for error messages; sys.stderr when None.
        """
        if fullConfig is None:
            fullConfig = ConfigLoader().get_config()
        super().__init__("CLI",fullConfig.get("modules",{}),fullConfig.get("system",{}),logger)
        self.stdout = stdout
        self.stderr = stderr
        self.parser = self.buildParser()

    def _out(self):
        return self.stdout or sys.stdout

    def _err(self):
        return self.stderr or sys.stderr

    def buildParser(self):
        common = argparse.ArgumentParser(add_help=False,allow_abbrev=False)
        common.add_argument("--parallelism",type=positiveInt,help="worker processes (default: machine cores)")
        common.add_argument("--raise-guard",action="store_true",help="raise the brute-force guard to census.raised_guard")
        common.add_argument("--no-cache",action="store_true",help="do not read or write the polynomial cache")
        common.add_argument("--cache-dir",help=f"polynomial cache directory (overridden by {CACHE_ENV})")
        common.add_argument("--format",choices=FORMATS,default="text")

        parser = argparse.ArgumentParser(prog="pcc",allow_abbrev=False,description="Proportions of primary cyclic matrices in M(c,q^b).")
        sub    = parser.add_subparsers(dest="subcommand",required=True)

        proportion = sub.add_parser("proportion",parents=[common],allow_abbrev=False,help="P_M(c,q^b) by series, enumeration or sampling")
        proportion.add_argument("--q",type=positiveInt,required=True)
        proportion.add_argument("--b",type=int,required=True)
        proportion.add_argument("--c",type=positiveInt,required=True)
        proportion.add_argument("--method",choices=METHODS,default="exact")
        proportion.add_argument("--samples",type=positiveInt,default=1000)
        proportion.add_argument("--seed",type=nonNegativeInt)
        proportion.add_argument("--modulus",help="primitive polynomial defining GF(q^b), e.g. 't^2+t+1'")
        proportion.add_argument("--dump-series",metavar="PATH",help="write the PCB series up to u^c as JSON")

        limit = sub.add_parser("limit",parents=[common],allow_abbrev=False,help="interval for the limit of P_M(c,q^b)")
        limit.add_argument("--q",type=positiveInt,required=True)
        limit.add_argument("--b",type=int,required=True)
        limit.add_argument("--bits",type=positiveInt)
        limit.add_argument("--with-constants",action="store_true")

        verify = sub.add_parser("verify",parents=[common],allow_abbrev=False,help="cross-check suites")
        verify.add_argument("suite",choices=SUITES)
        verify.add_argument("--q",type=positiveInt,default=2)
        verify.add_argument("--b",type=int,default=2)
        verify.add_argument("--c",type=positiveInt,default=1)
        verify.add_argument("--n",type=positiveInt,default=2)
        verify.add_argument("--assignment",choices=ASSIGNMENTS,default="all-ones")
        verify.add_argument("--max-dim",type=positiveInt,default=3)
        verify.add_argument("--c-lo",type=positiveInt,default=49)
        verify.add_argument("--c-hi",type=positiveInt,default=55)
        verify.add_argument("--order",type=positiveInt,default=8)
        verify.add_argument("--sweep",action="store_true",help="window suite over every q^b up to 2^16")

        table = sub.add_parser("table",parents=[common],allow_abbrev=False,help="exact proportions for c = 1..cmax")
        table.add_argument("--q",type=positiveInt,required=True)
        table.add_argument("--b",type=int,required=True)
        table.add_argument("--cmax",type=positiveInt,required=True)
        return parser

    def parse(self,argv):
        """
        Returns:
            CliConfig: The invocation; argparse exits with code 2 on bad flags.
        """
        args     = vars(self.parser.parse_args(argv))
        cliDir   = args.pop("cache_dir")
        cacheDir = os.environ.get(CACHE_ENV) or cliDir or self.systemConfig.get("cache_dir",".pcc_cache")
        return CliConfig(
            subcommand    = args.pop("subcommand"),
            outputFormat  = args.pop("format"),
            parallelism   = args.pop("parallelism"),
            guardOverride = args.pop("raise_guard"),
            useCache      = not args.pop("no_cache"),
            cacheDir      = cacheDir,
            options       = args
        )

    def _components(self,config):
        system = copy.deepcopy(self.systemConfig)
        if config.parallelism is not None:
            system["parallelism"] = config.parallelism
        cache      = IrreducibleCache(config.cacheDir,self.logger) if config.useCache else None
        census     = Census(self.config.get("census",{}),system,self.logger,config.guardOverride,cache)
        cycleIndex = CycleIndex(self.config.get("cycleIndex",{}),system,self.logger)
        return census,cycleIndex

    def run(self,argv):
        """
        Parses argv and runs one subcommand.

        Returns:
            int: 0 success, 1 verification failure, 2 usage error, 3 guard refusal.
        """
        try:
            config = self.parse(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code else EXIT_OK
        handler = {
            "proportion" : self.cmdProportion,
            "limit"      : self.cmdLimit,
            "verify"     : self.cmdVerify,
            "table"      : self.cmdTable
        }[config.subcommand]
        try:
            return handler(config)
        except (HypothesisError,ContractViolationError) as e:
            print(f"error: {e}",file=self._err())
            return EXIT_USAGE
        except GuardExceededError as e:
            self.log("WARNING",str(e))
            print(f"refused: {e}",file=self._err())
            return EXIT_GUARD

    def _emit(self,text):
        out = self._out()
        out.write(text)
        if not text.endswith("\n"):
            out.write("\n")

    def _emitReport(self,report,outputFormat):
        if outputFormat == "json":
            self._emit(json.dumps(report.toJson(),indent=2))
        elif outputFormat == "csv":
            self._emit(pandas.DataFrame([report.toRow()]).to_csv(index=False))
        else:
            self._emit(report.toText())

    def cmdProportion(self,config):
        opts     = config.options
        q,b,c    = opts["q"],opts["b"],opts["c"]
        SeriesParams(q,b)
        census,_ = self._components(config)
        if opts["method"] == "exact":
            report = census.reportExact(q,b,c)
        elif opts["method"] == "brute":
            report = census.reportBruteforce(q,b,c,opts["modulus"])
        else:
            report = census.reportMontecarlo(q,b,c,opts["samples"],opts["seed"])
        if opts["dump_series"]:
            params = SeriesParams(q,b)
            with open(opts["dump_series"],"w") as f:
                json.dump(pcbSeries(params,c).toJson(params),f,indent=2)
            self.log("INFO",f"PCB series up to u^{c} written to '{opts['dump_series']}'.")
        self._emitReport(report,config.outputFormat)
        return EXIT_OK

    def cmdLimit(self,config):
        opts     = config.options
        census,_ = self._components(config)
        report   = census.reportLimit(opts["q"],opts["b"],opts["bits"],opts["with_constants"])
        if config.outputFormat == "csv":
            row = {
                "q"            : report.q,
                "b"            : report.b,
                "lower"        : decimalText(report.interval.lo),
                "upper"        : decimalText(report.interval.hi),
                "window_check" : report.windowCheck
            }
            self._emit(pandas.DataFrame([row]).to_csv(index=False))
        else:
            self._emitReport(report,config.outputFormat)
        return EXIT_OK

    def cmdVerify(self,config):
        opts              = config.options
        census,cycleIndex = self._components(config)
        verifier          = Verifier(logger=self.logger,census=census,cycleIndex=cycleIndex)
        try:
            results = verifier.run(opts["suite"],q=opts["q"],b=opts["b"],c=opts["c"],n=opts["n"],assignment=opts["assignment"],
                                   maxDim=opts["max_dim"],cLo=opts["c_lo"],cHi=opts["c_hi"],order=opts["order"],sweep=opts["sweep"])
        except CriterionMismatchError as e:
            print(f"FAIL {opts['suite']}: {e}",file=self._out())
            return EXIT_FAIL
        if config.outputFormat == "json":
            self._emit(json.dumps([asdict(r) for r in results],indent=2))
        elif config.outputFormat == "csv":
            self._emit(pandas.DataFrame([asdict(r) for r in results]).to_csv(index=False))
        else:
            for result in results:
                self._emit(result.toText())
        failed = sum(1 for r in results if not r.passed)
        self.log("INFO" if not failed else "ERROR",f"verify {opts['suite']}: {len(results) - failed}/{len(results)} passed.")
        return EXIT_OK if not failed else EXIT_FAIL

    def cmdTable(self,config):
        opts     = config.options
        census,_ = self._components(config)
        result   = census.tableGenerate(opts["q"],opts["b"],opts["cmax"])
        frame    = result.toFrame()
        if config.outputFormat == "json":
            document = {
                "reports"     : [report.toJson() for report in result.reports],
                "comparisons" : [{"c": comp.c, "match": comp.matches, "note": comp.note} for comp in result.comparisons]
            }
            self._emit(json.dumps(document,indent=2))
        elif config.outputFormat == "csv":
            self._emit(frame.to_csv(index=False))
        else:
            self._emit(frame.to_string(index=False))
        return EXIT_OK
