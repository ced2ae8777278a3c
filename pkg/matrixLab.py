"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import enum
import itertools
from dataclasses import dataclass

import numpy

from algebra   import FieldSpec, GaloisField, Polynomial, enumIrreducibles, isIrreducible, splitOverExtension
from errors    import ContractViolationError
from partition import Partition

class CriterionMethod(enum.Enum):
    F_DEFINITION = "F_DEFINITION"
    K_CRITERION  = "K_CRITERION"

@dataclass(frozen=True)
class PrimaryComponent:
    """
    The h-primary part of a matrix: h irreducible, multiplicity the exponent
    of h in the minimal polynomial, basis the echelonised rows spanning the
    component and partition the block sizes of its cyclic decomposition.
    """
    poly         : Polynomial
    multiplicity : int
    basis        : tuple
    partition    : Partition

@dataclass(frozen=True)
class PrimaryCyclicVerdict:
    f        : Polynomial
    isCyclic : bool
    witness  : Polynomial = None
    method   : CriterionMethod = CriterionMethod.F_DEFINITION

def _rowReduce(field,rows):
    """
    Reduced row echelon form over a table field.

    Args:
        field (GaloisField): The coefficient field.
        rows (list): Rows as lists of element codes.

    Returns:
        tuple: (reduced rows, pivot columns, determinant factor). The factor
        is the product of the pivots with the sign of the row swaps; it is
        the determinant when the matrix is square of full rank.
    """
    rows  = [list(r) for r in rows]
    nRows = len(rows)
    nCols = len(rows[0]) if rows else 0
    pivots = []
    det    = 1
    r      = 0
    for col in range(nCols):
        if r == nRows:
            break
        pivot = next((i for i in range(r,nRows) if rows[i][col]),None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r],rows[pivot] = rows[pivot],rows[r]
            det = field.neg(det)
        lead    = rows[r][col]
        det     = field.mul(det,lead)
        inv     = field.inv(lead)
        rows[r] = [field.mul(inv,x) for x in rows[r]]
        for i in range(nRows):
            if i != r and rows[i][col]:
                factor  = field.neg(rows[i][col])
                rows[i] = [field.add(x,field.mul(factor,y)) if y else x for x,y in zip(rows[i],rows[r])]
        pivots.append(col)
        r += 1
    return rows,pivots,det

def _rankGf2(rows):
    basis = []
    for row in rows:
        mask = 0
        for bit in row:
            mask = (mask << 1) | int(bit)
        for vec in basis:
            mask = min(mask,mask ^ vec)
        if mask:
            basis.append(mask)
            basis.sort(reverse=True)
    return len(basis)

def matrixBatch(order,n,start,stop):
    """
    Odometer decoding of matrix indices: index k maps to the n x n matrix
    whose row-major entries are the base-order digits of k, last entry
    varying fastest.

    Returns:
        numpy.ndarray: Shape (stop - start, n, n) of element codes.
    """
    idx    = numpy.arange(start,stop,dtype=numpy.int64)
    powers = order**numpy.arange(n*n - 1,-1,-1,dtype=numpy.int64)
    return ((idx[:,None]//powers[None,:]) % order).reshape(-1,n,n)

class MatrixOverField:
    """
    Square matrix of element codes over a GaloisField.

    When built from a FieldSpec the matrix lives over the extension K and
    remembers the spec, which blowup() and the primary cyclic tests need.
    """
    __slots__ = ("field","spec","entries")

    def __init__(self,field,entries):
        if isinstance(field,FieldSpec):
            self.spec  = field
            self.field = field.K
        else:
            self.spec  = None
            self.field = field
        entries = numpy.array(entries,dtype=numpy.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ContractViolationError(f"matrix of shape {entries.shape} is not square")
        if entries.size and (entries.min() < 0 or entries.max() >= self.field.order):
            raise ContractViolationError(f"matrix entries outside GF({self.field.order})")
        entries.setflags(write=False)
        self.entries = entries

    def _like(self,entries):
        return MatrixOverField(self.spec if self.spec is not None else self.field,entries)

    @property
    def size(self):
        return self.entries.shape[0]

    # --- constructors ---

    @classmethod
    def zero(cls,field,n):
        return cls(field,numpy.zeros((n,n),dtype=numpy.int64))

    @classmethod
    def identity(cls,field,n):
        return cls(field,numpy.eye(n,dtype=numpy.int64))

    @classmethod
    def diagonal(cls,field,values):
        return cls(field,numpy.diag(numpy.array(values,dtype=numpy.int64)))

    @classmethod
    def companion(cls,poly,field=None):
        """
        Companion matrix of a monic polynomial t^n + a_(n-1)t^(n-1) + ... + a_0:
        ones on the superdiagonal, last row -a_0, ..., -a_(n-1).
        """
        if not poly.isMonic() or poly.degree < 1:
            raise ContractViolationError(f"companion matrix needs a monic non-constant polynomial, got {poly.toText()}")
        F       = poly.field
        n       = poly.degree
        entries = numpy.zeros((n,n),dtype=numpy.int64)
        for i in range(n - 1):
            entries[i,i + 1] = 1
        entries[n - 1,:] = [F.neg(c) for c in poly.coeffs[:n]]
        return cls(field if field is not None else F,entries)

    @classmethod
    def blockDiagonal(cls,blocks,field=None):
        n       = sum(b.size for b in blocks)
        entries = numpy.zeros((n,n),dtype=numpy.int64)
        at = 0
        for block in blocks:
            entries[at:at + block.size,at:at + block.size] = block.entries
            at += block.size
        if field is None:
            field = blocks[0].spec if blocks[0].spec is not None else blocks[0].field
        return cls(field,entries)

    @classmethod
    def fromText(cls,text,field):
        """
        Reads "w+1,0;1,w": rows separated by ';', entries by ','.
        """
        base = field.K if isinstance(field,FieldSpec) else field
        rows = [[base.parse(e) for e in row.split(",")] for row in text.replace(" ","").split(";")]
        return cls(field,rows)

    def toText(self):
        return ";".join(",".join(self.field.toText(int(x)) for x in row) for row in self.entries)

    # --- arithmetic ---

    def _check(self,other):
        if not isinstance(other,MatrixOverField) or other.field != self.field or other.size != self.size:
            raise ContractViolationError("matrices over different fields or of different sizes")

    def __add__(self,other):
        self._check(other)
        return self._like(self.field.addArray(self.entries,other.entries))

    def __sub__(self,other):
        self._check(other)
        return self._like(self.field.addArray(self.entries,self.field.negArray(other.entries)))

    def __mul__(self,other):
        self._check(other)
        return self._like(self.field.matmul(self.entries,other.entries))

    def scale(self,c):
        return self._like(self.field.mulArray(self.entries,c))

    def addScalar(self,c):
        """
        Returns:
            MatrixOverField: self + c*I.
        """
        entries = numpy.array(self.entries)
        idx     = numpy.arange(self.size)
        entries[idx,idx] = self.field.addArray(entries[idx,idx],c)
        return self._like(entries)

    def power(self,e):
        result = MatrixOverField.identity(self.spec if self.spec is not None else self.field,self.size)
        base   = self
        while e > 0:
            if e & 1:
                result = result*base
            base = base*base
            e  >>= 1
        return result

    def evaluatePolynomial(self,poly):
        """
        Horner evaluation of poly at this matrix.
        """
        if poly.field != self.field:
            raise ContractViolationError("polynomial and matrix over different fields")
        if poly.isZero():
            return MatrixOverField.zero(self.spec if self.spec is not None else self.field,self.size)
        acc = MatrixOverField.zero(self.spec if self.spec is not None else self.field,self.size).addScalar(poly.leading)
        for c in reversed(poly.coeffs[:-1]):
            acc = (acc*self).addScalar(c)
        return acc

    # --- linear algebra ---

    def rank(self):
        if self.field.order == 2:
            return _rankGf2(self.entries.tolist())
        return len(_rowReduce(self.field,self.entries.tolist())[1])

    def nullity(self):
        return self.size - self.rank()

    def determinant(self):
        rows,pivots,det = _rowReduce(self.field,self.entries.tolist())
        return det if len(pivots) == self.size else 0

    def leftKernel(self):
        """
        Basis of {v : vX = 0} in reduced echelon form.

        Returns:
            list: Tuples of element codes.
        """
        return leftKernelOf(self.field,self.entries.tolist())

    def isInvertible(self):
        return self.rank() == self.size

    def __eq__(self,other):
        return isinstance(other,MatrixOverField) and self.field == other.field and numpy.array_equal(self.entries,other.entries)

    def __hash__(self):
        return hash((self.field,self.entries.tobytes()))

    def __repr__(self):
        return f"MatrixOverField([{self.toText()}] over GF({self.field.order}))"

def leftKernelOf(field,rows):
    """
    Echelonised basis of the left kernel of a (possibly non-square) matrix.

    Args:
        field (GaloisField): Coefficient field.
        rows (list): The matrix A as lists of codes.

    Returns:
        list: Tuples v with vA = 0, in reduced echelon form.
    """
    nRows = len(rows)
    if nRows == 0:
        return []
    transposed           = [list(col) for col in zip(*rows)]
    reduced,pivots,_     = _rowReduce(field,transposed)
    free                 = [c for c in range(nRows) if c not in pivots]
    basis = []
    for fc in free:
        vec     = [0]*nRows
        vec[fc] = 1
        for i,pc in enumerate(pivots):
            vec[pc] = field.neg(reduced[i][fc])
        basis.append(vec)
    if not basis:
        return []
    echelon,pivots,_ = _rowReduce(field,basis)
    return [tuple(row) for row in echelon[:len(pivots)]]

def charPoly(X):
    """
    Characteristic polynomial det(tI - X), via reduction to upper Hessenberg
    form by similarity and the Hessenberg determinant recurrence.

    Returns:
        Polynomial: Monic of degree X.size over X.field.
    """
    F = X.field
    n = X.size
    H = X.entries.tolist()
    for k in range(n - 2):
        pivot = next((i for i in range(k + 1,n) if H[i][k]),None)
        if pivot is None:
            continue
        if pivot != k + 1:
            H[k + 1],H[pivot] = H[pivot],H[k + 1]
            for row in H:
                row[k + 1],row[pivot] = row[pivot],row[k + 1]
        inv = F.inv(H[k + 1][k])
        for j in range(k + 2,n):
            if H[j][k] == 0:
                continue
            factor = F.mul(H[j][k],inv)
            H[j]   = [F.sub(x,F.mul(factor,y)) for x,y in zip(H[j],H[k + 1])]
            for row in H:
                row[k + 1] = F.add(row[k + 1],F.mul(factor,row[j]))

    t     = Polynomial.monomial(F,1)
    polys = [Polynomial.constant(F,1)]
    for m in range(1,n + 1):
        acc     = (t - Polynomial.constant(F,H[m - 1][m - 1]))*polys[m - 1]
        product = 1
        for i in range(m - 1,0,-1):
            product = F.mul(product,H[i][i - 1])
            if product == 0:
                break
            coef = F.mul(H[i - 1][m - 1],product)
            if coef:
                acc = acc - polys[i - 1].scale(coef)
        polys.append(acc)
    return polys[n]

def factorize(poly):
    """
    Factorisation of a monic polynomial into monic irreducibles by trial
    division with the enumerated irreducibles of each degree.

    Returns:
        list: (h, exponent) pairs sorted by h.
    """
    if poly.degree < 1:
        return []
    rest    = poly.monic()
    factors = []
    d = 1
    while rest.degree >= 2*d:
        for h in enumIrreducibles(rest.field,d):
            count = 0
            while True:
                q,r = divmod(rest,h)
                if not r.isZero():
                    break
                rest   = q
                count += 1
            if count:
                factors.append((h,count))
            if rest.degree < 2*d:
                break
        d += 1
    if rest.degree > 0:
        factors.append((rest,1))
    merged = {}
    for h,e in factors:
        merged[h] = merged.get(h,0) + e
    return sorted(merged.items(),key=lambda item: item[0].sortKey())

def _kernelSequence(X,h):
    deg  = h.degree
    hX   = X.evaluatePolynomial(h)
    seq  = [0]
    acc  = hX
    while True:
        k = acc.nullity()
        if k % deg:
            raise ContractViolationError(f"kernel dimension {k} of {h.toText()} is not a multiple of its degree")
        if k//deg == seq[-1]:
            return seq
        seq.append(k//deg)
        if k == X.size:
            return seq
        acc = acc*hX

def lambdaPartition(X,h):
    """
    Block sizes of the h-primary cyclic decomposition of X, from the kernel
    dimensions k_j of h(X)^j: the conjugate partition has parts k_j - k_(j-1).

    Args:
        X (MatrixOverField): The matrix.
        h (Polynomial): Monic irreducible polynomial over X.field.

    Returns:
        Partition: Empty when h does not divide the characteristic polynomial.
    """
    if h.field != X.field:
        raise ContractViolationError("polynomial and matrix over different fields")
    if not isIrreducible(h):
        raise ContractViolationError(f"{h.toText()} is not irreducible over GF({X.field.order})")
    seq = _kernelSequence(X,h.monic())
    return Partition.fromConjugate([seq[j] - seq[j - 1] for j in range(1,len(seq))])

def primaryComponents(X):
    """
    Returns:
        list: PrimaryComponent for each irreducible divisor of the
        characteristic polynomial, sorted by polynomial.
    """
    components = []
    for h,_ in factorize(charPoly(X)):
        lam   = lambdaPartition(X,h)
        alpha = lam.largest
        basis = X.evaluatePolynomial(h**alpha).leftKernel()
        components.append(PrimaryComponent(h,alpha,tuple(basis),lam))
    return components

def minPoly(X):
    """
    Minimal polynomial, the product of h^(largest part of lambda(X,h)).
    """
    result = Polynomial.constant(X.field,1)
    for component in primaryComponents(X):
        result = result*(component.poly**component.multiplicity)
    return result

def blowup(X):
    """
    The bc x bc matrix over F of X acting on K^c viewed as an F-space with
    basis w^i v_j, where e_(j*b + i) stands for w^i v_j.

    Args:
        X (MatrixOverField): c x c matrix built from a FieldSpec.

    Returns:
        MatrixOverField: Matrix over spec.F.
    """
    spec = X.spec
    if spec is None:
        raise ContractViolationError("blow-up needs a matrix built from a FieldSpec")
    c,b = X.size,spec.b
    big = spec.blowupBlocks()[X.entries].transpose(0,2,1,3).reshape(c*b,c*b)
    return MatrixOverField(spec.F,big)

def _checkCriterionInput(X,f):
    spec = X.spec
    if spec is None:
        raise ContractViolationError("the primary cyclic test needs a matrix built from a FieldSpec")
    if f.field != spec.F:
        raise ContractViolationError("f must be a polynomial over the base field")
    if not isIrreducible(f):
        raise ContractViolationError(f"{f.toText()} is not irreducible over GF({spec.q})")
    return spec

def isPrimaryCyclicF(X,f,blown=None):
    """
    f-primary cyclicity of the blown-up matrix Y: Null f(Y) is an irreducible
    FY-module, i.e. lambda(Y,f) has exactly one part, i.e. nullity(f(Y)) = deg f.

    Args:
        X (MatrixOverField): Matrix over K.
        f (Polynomial): Irreducible polynomial over F.
        blown (MatrixOverField): Optional precomputed blowup(X).

    Returns:
        PrimaryCyclicVerdict: method F_DEFINITION, no witness.
    """
    _checkCriterionInput(X,f)
    Y = blown if blown is not None else blowup(X)
    return PrimaryCyclicVerdict(f,Y.evaluatePolynomial(f.monic()).nullity() == f.degree,None,CriterionMethod.F_DEFINITION)

def isPrimaryCyclicK(X,f):
    """
    The same property decided on K^c: b divides deg f and some irreducible
    divisor g of f over K has lambda(X,g) with one part while no other
    conjugate of g divides the characteristic polynomial of X.

    Returns:
        PrimaryCyclicVerdict: method K_CRITERION, witness g when cyclic.
    """
    spec = _checkCriterionInput(X,f)
    if f.degree % spec.b:
        return PrimaryCyclicVerdict(f,False,None,CriterionMethod.K_CRITERION)
    witness = None
    for g in splitOverExtension(f.monic(),spec):
        blocks = X.evaluatePolynomial(g).nullity()//g.degree
        if blocks == 0:
            continue
        if blocks > 1 or witness is not None:
            return PrimaryCyclicVerdict(f,False,None,CriterionMethod.K_CRITERION)
        witness = g
    return PrimaryCyclicVerdict(f,witness is not None,witness,CriterionMethod.K_CRITERION)

def commutantBasis(X):
    """
    Basis of the space of matrices Y with XY = YX.

    Returns:
        list: numpy arrays of shape (n, n).
    """
    F = X.field
    n = X.size
    x = X.entries.tolist()
    # row (k,l) holds the coefficient of Y_kl in every entry (i,j) of XY - YX
    rows = []
    for k,l in itertools.product(range(n),repeat=2):
        row = []
        for i,j in itertools.product(range(n),repeat=2):
            value = x[i][k] if l == j else 0
            if i == k:
                value = F.sub(value,x[l][j])
            row.append(value)
        rows.append(row)
    return [numpy.array(v,dtype=numpy.int64).reshape(n,n) for v in leftKernelOf(F,rows)]
