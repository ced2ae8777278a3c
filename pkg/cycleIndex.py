"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import itertools
import sys
from collections     import Counter
from dataclasses     import dataclass, field
from fractions       import Fraction
from multiprocessing import Pool

import numpy
from tqdm import tqdm

from algebra      import FieldSpec, Polynomial, countIrreducibles, enumIrreducibles, fieldForOrder, isIrreducible, splitOverExtension
from configLoader import ConfigLoader
from errors       import ContractViolationError, GuardExceededError
from matrixLab    import MatrixOverField, charPoly, commutantBasis, factorize, lambdaPartition, matrixBatch
from module       import Module
from partition    import Partition, partitionsOf
from series       import TruncatedPowerSeries, omegaN

ENUMERATION_GUARD = 2**24
COMMUTANT_GUARD   = 2**24
COMMUTANT_CHUNK   = 4096
POOL_THRESHOLD    = 4096

def glOrder(n,q):
    """
    Returns:
        int: |GL(n,q)| = prod_{i=0}^{n-1} (q^n - q^i).
    """
    order = 1
    for i in range(n):
        order *= q**n - q**i
    return order

def centralizerOrder(lam,d,q):
    """
    Number of invertible matrices commuting with a matrix of primary type
    (h, lam) with deg h = d over GF(q): with Q = q^d and lam' the conjugate
    partition, Q^(sum lam'_i^2) * prod_i omega_(m_i)(1,Q), m_i the number of
    parts equal to i.

    Returns:
        int: 1 for the empty partition.
    """
    if not isinstance(lam,Partition):
        lam = Partition(tuple(lam))
    if lam.isEmpty():
        return 1
    Q     = q**d
    value = Fraction(Q**sum(p*p for p in lam.conjugate().parts))
    for mult in lam.multiplicities().values():
        value *= omegaN(mult,Q)
    if value.denominator != 1:
        raise ContractViolationError(f"centralizer order of {lam} over GF({Q}) is not an integer")
    return value.numerator

def gSeries(q,d,order):
    """
    G(u,q,d) = 1 + sum over non-empty lam of u^|lam| / c(lam,d,q).
    """
    coeffs = [Fraction(1)] + [Fraction(0)]*order
    for m in range(1,order + 1):
        coeffs[m] = sum((Fraction(1,centralizerOrder(lam,d,q)) for lam in partitionsOf(m)),Fraction(0))
    return TruncatedPowerSeries(coeffs,order)

@dataclass(frozen=True)
class PartitionWeight:
    """
    Value of x_(h,lam) by the shape of lam.
    """
    empty      : Fraction = Fraction(1)
    singlePart : Fraction = Fraction(1)
    multiPart  : Fraction = Fraction(1)

    def value(self,lam):
        if lam.isEmpty():
            return Fraction(self.empty)
        if lam.isSinglePart():
            return Fraction(self.singlePart)
        return Fraction(self.multiPart)

@dataclass
class VariableAssignment:
    """
    Values for the indeterminates x_(h,lam): per-polynomial weights with a
    default for every polynomial not listed, plus the forced set I.
    """
    default : PartitionWeight = field(default_factory=PartitionWeight)
    weights : dict = field(default_factory=dict)
    forced  : frozenset = frozenset()

    def weight(self,h):
        return self.weights.get(h,self.default)

    def value(self,h,lam):
        return self.weight(h).value(lam)

ASSIGNMENTS = ("all-ones","all-ones-forced","unipotent","zero","pcbi")

def namedAssignment(name,field,spec=None):
    """
    Builds one of the assignments used by the cycle index checks.

    Args:
        name (str): One of ASSIGNMENTS.
        field (GaloisField): Field of the matrix algebra.
        spec (FieldSpec): For "pcbi", the extension whose K is `field`.

    Returns:
        VariableAssignment: The assignment.
    """
    one,zero = Fraction(1),Fraction(0)
    t        = Polynomial.monomial(field,1)
    if name == "all-ones":
        return VariableAssignment()
    if name == "all-ones-forced":
        return VariableAssignment(forced=frozenset([t]))
    if name == "unipotent":
        unipotent = Polynomial.linear(field,1)
        return VariableAssignment(PartitionWeight(one,zero,zero),{unipotent: PartitionWeight(one,one,one)})
    if name == "zero":
        return VariableAssignment(PartitionWeight(one,zero,zero))
    if name == "pcbi":
        if spec is None:
            spec = FieldSpec(_baseOrder(field),2)
        if spec.K != field:
            raise ContractViolationError("the pcbi assignment lives in the extension field of its FieldSpec")
        f     = enumIrreducibles(spec.F,spec.b)[0]
        roots = splitOverExtension(f,spec)
        weights = {roots[0]: PartitionWeight(zero,one,zero)}
        for g in roots[1:]:
            weights[g] = PartitionWeight(one,zero,zero)
        return VariableAssignment(PartitionWeight(),weights,frozenset(roots))
    raise ContractViolationError(f"unknown assignment '{name}', expected one of {', '.join(ASSIGNMENTS)}")

def _baseOrder(field):
    if field.m % 2:
        raise ContractViolationError(f"GF({field.order}) is not a quadratic extension")
    return field.p**(field.m//2)

def _typeOf(X):
    key = []
    for h,_ in factorize(charPoly(X)):
        key.append((h.coeffs,lambdaPartition(X,h).parts))
    return tuple(key)

def _typeChunk(task):
    """
    Pool worker: type counts of all matrices with a given leading row.
    """
    field,n,lead = task
    tail  = field.order**(n*(n - 1))
    counts = Counter()
    rows   = matrixBatch(field.order,n,lead*tail,(lead + 1)*tail)
    for entries in rows:
        counts[_typeOf(MatrixOverField(field,entries))] += 1
    return counts

class CycleIndex(Module):
    """
    Both sides of the cycle index identity for M(n,q): a type census of the
    full algebra weighed by an assignment, and the truncated product over
    irreducible polynomials.
    """
    def __init__(self,moduleConfig=None,systemConfig=None,logger=None):
        if moduleConfig is None:
            full_config  = ConfigLoader().get_config()
            moduleConfig = full_config.get("modules",{}).get("cycleIndex",{})
            systemConfig = full_config.get("system",{}) if systemConfig is None else systemConfig
        super().__init__("CycleIndex",moduleConfig,systemConfig,logger)
        self.enumerationGuard = self.config.get("enumeration_guard",ENUMERATION_GUARD)
        self.partitionGuard   = self.config.get("partition_guard",60)
        self.commutantGuard   = self.config.get("commutant_guard",COMMUTANT_GUARD)
        self._census          = {}

    def _field(self,field):
        if isinstance(field,int):
            return fieldForOrder(field)
        if isinstance(field,FieldSpec):
            return field.K
        return field

    def typeCensus(self,n,field):
        """
        Counts the matrices of M(n,q) by type, the set of pairs
        (h, lambda(X,h)) over the irreducible divisors h of the
        characteristic polynomial.

        Args:
            n (int): Dimension.
            field (GaloisField|int): The field or its order.

        Returns:
            dict: type -> number of matrices, where a type is a tuple of
            (Polynomial, Partition) sorted by polynomial.
        """
        field = self._field(field)
        key   = (field,n)
        if key in self._census:
            return self._census[key]
        size = field.order**(n*n)
        if size > self.enumerationGuard:
            raise GuardExceededError(f"type census of M({n},{field.order})",size,self.enumerationGuard,"--raise-guard")
        self.log("INFO",f"Type census of M({n},{field.order}): {size} matrices.")

        counts = Counter()
        if n == 0:
            counts[()] = 1
        else:
            tasks   = [(field,n,lead) for lead in range(field.order**n)]
            workers = self.parallelism()
            if workers > 1 and size > POOL_THRESHOLD:
                with Pool(processes=workers) as pool:
                    for part in tqdm(pool.imap(_typeChunk,tasks),total=len(tasks),disable=not self.progress(),file=sys.stderr):
                        counts.update(part)
            else:
                for task in tqdm(tasks,disable=not self.progress(),file=sys.stderr):
                    counts.update(_typeChunk(task))

        census = {}
        for raw,count in sorted(counts.items()):
            census[tuple((Polynomial(field,coeffs),Partition(parts)) for coeffs,parts in raw)] = count
        self._census[key] = census
        self.log("DEBUG",f"M({n},{field.order}) has {len(census)} types.")
        return census

    def icycleLhs(self,n,field,forced,assignment):
        """
        (1/|GL(n,q)|) * sum over X in M(n,q) of the product of x(h, lambda(X,h))
        over h in Div X together with the forced set.

        Args:
            n (int): Dimension.
            field (GaloisField|int): The field.
            forced (iterable): Irreducible polynomials always included;
                None uses the assignment's own forced set.
            assignment (VariableAssignment): The values.

        Returns:
            Fraction: The exact average.
        """
        field  = self._field(field)
        forced = assignment.forced if forced is None else frozenset(forced)
        for h in forced:
            if h.field != field or not isIrreducible(h):
                raise ContractViolationError(f"forced polynomial {h.toText()} is not irreducible over GF({field.order})")
        total = Fraction(0)
        for mtype,count in self.typeCensus(n,field).items():
            present = {h for h,_ in mtype}
            value   = Fraction(1)
            for h,lam in mtype:
                value *= assignment.value(h,lam)
            for h in forced - present:
                value *= assignment.value(h,Partition(()))
            total += value*count
        return total/glOrder(n,field.order)

    def _factor(self,weight,d,q,order,constant):
        coeffs = [Fraction(0)]*(order + 1)
        coeffs[0] = Fraction(constant)
        for m in range(1,order//d + 1):
            acc = Fraction(0)
            for lam in partitionsOf(m,self.partitionGuard):
                w = weight.value(lam)
                if w:
                    acc += w/centralizerOrder(lam,d,q)
            coeffs[m*d] = acc
        return TruncatedPowerSeries(coeffs,order)

    def icycleRhs(self,order,field,forced,assignment):
        """
        Truncated expansion of the product over monic irreducible h of
        (e_h + sum over non-empty lam of x(h,lam) u^(|lam| deg h) / c(lam,deg h,q)),
        with e_h = x(h,()) for forced h and 1 otherwise.

        Returns:
            TruncatedPowerSeries: Coefficient n equals icycleLhs(n, ...).
        """
        field   = self._field(field)
        forced  = assignment.forced if forced is None else frozenset(forced)
        q       = field.order
        special = sorted(set(assignment.weights) | set(forced),key=lambda h: h.sortKey())
        result  = TruncatedPowerSeries.constant(1,order)

        perDegree = Counter(h.degree for h in special)
        for d in range(1,order + 1):
            others = countIrreducibles(q,d) - perDegree.get(d,0)
            if others < 0:
                raise ContractViolationError(f"more special polynomials of degree {d} than irreducibles")
            if others:
                result = result*self._factor(assignment.default,d,q,order,1)**others
        for h in special:
            constant = assignment.value(h,Partition(())) if h in forced else Fraction(1)
            if h.degree > order:
                result = result.scale(constant)
            else:
                result = result*self._factor(assignment.weight(h),h.degree,q,order,constant)
        return result

    def centralizerBruteforce(self,lam,h,q=None):
        """
        Counts the invertible matrices commuting with the block companion
        matrix of h^lam_1, h^lam_2, ... by enumerating its commutant.

        Args:
            lam (Partition): Block sizes.
            h (Polynomial): Monic irreducible polynomial over GF(q).
            q (int): Field order, checked against h.

        Returns:
            int: The number of invertible commuting matrices.
        """
        if not isinstance(lam,Partition):
            lam = Partition(tuple(lam))
        field = h.field
        if q is not None and q != field.order:
            raise ContractViolationError(f"polynomial over GF({field.order}) given for q={q}")
        if lam.isEmpty():
            return 1
        s    = lam.size*h.degree
        size = field.order**(s*s)
        if size > self.commutantGuard:
            raise GuardExceededError(f"commutant scan in M({s},{field.order})",size,self.commutantGuard,"--raise-guard")
        X     = MatrixOverField.blockDiagonal([MatrixOverField.companion(h**part) for part in lam.parts],field)
        basis = numpy.array(commutantBasis(X),dtype=numpy.int64)
        dim   = len(basis)
        self.log("DEBUG",f"Commutant of type {lam} for {h.toText()} has dimension {dim}.")

        count = 0
        combos = itertools.product(range(field.order),repeat=dim)
        while True:
            chunk = numpy.array(list(itertools.islice(combos,COMMUTANT_CHUNK)),dtype=numpy.int64)
            if not len(chunk):
                break
            terms  = field.mulArray(chunk[:,:,None,None],basis[None,:,:,:])
            matrix = field.sumArray(terms,axis=1)
            count += sum(1 for Y in matrix if MatrixOverField(field,Y).isInvertible())
        return count

    def unipotentCount(self,n,field):
        """
        Number of X in M(n,q) whose only eigenvalue is 1, from the type census.
        """
        field = self._field(field)
        if n == 0:
            return 1
        one = Polynomial.linear(field,1)
        return sum(count for mtype,count in self.typeCensus(n,field).items() if len(mtype) == 1 and mtype[0][0] == one)

def typeClassSize(mtype,q):
    """
    Number of matrices of a given type: |GL(n,q)| / prod c(lam, deg h, q).
    """
    n       = sum(h.degree*lam.size for h,lam in mtype)
    central = 1
    for h,lam in mtype:
        central *= centralizerOrder(lam,h.degree,q)
    size,rest = divmod(glOrder(n,q),central)
    if rest:
        raise ContractViolationError(f"class size for type {mtype} is not an integer")
    return size
