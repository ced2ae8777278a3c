"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import itertools
import math
from functools import lru_cache

import numpy
import sympy

from errors import ContractViolationError, GuardExceededError

ENUMERATION_GUARD = 2**24
TABLE_GUARD       = 2**22
ADD_TABLE_LIMIT   = 256
EXHAUSTIVE_LIMIT  = 2**16

def primePowerParts(q):
    """
    Splits a prime power into its characteristic and exponent.

    Args:
        q (int): A prime power.

    Returns:
        tuple: (p, m) with q == p**m.
    """
    if not isinstance(q,int) or q < 2:
        raise ContractViolationError(f"{q!r} is not a prime power")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise ContractViolationError(f"{q} is not a prime power")
    (p,m), = factors.items()
    return int(p),int(m)

def isPrimePower(q):
    try:
        primePowerParts(q)
    except ContractViolationError:
        return False
    return True

class GaloisField:
    """
    Table driven arithmetic in GF(p^m).

    Elements are integer codes: the code of sum(d_i * a^i) is sum(d_i * p^i),
    where a is a root of the stored monic modulus. The modulus is primitive,
    so a generates the multiplicative group and the exp/log tables cover it.
    Scalar operations use plain lists; the *Array methods are the numpy
    counterparts used for whole matrices.
    """
    def __init__(self,p,m=1,modulus=None):
        """
        Args:
            p (int): The characteristic (prime).
            m (int): The degree over the prime field.
            modulus (sequence): Monic primitive polynomial of degree m over
                GF(p), coefficients lowest degree first. Defaults to the first
                primitive polynomial in coefficient order.
        """
        if not sympy.isprime(p):
            raise ContractViolationError(f"characteristic {p} is not prime")
        if m < 1:
            raise ContractViolationError(f"field degree {m} must be positive")
        self.p     = p
        self.m     = m
        self.order = p**m
        if self.order > TABLE_GUARD:
            raise GuardExceededError(f"tables for GF({self.order})",self.order,TABLE_GUARD)

        if modulus is None:
            modulus = self._firstPrimitiveModulus()
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1 or any(c < 0 or c >= p for c in modulus):
            raise ContractViolationError(f"modulus {modulus} is not a monic polynomial of degree {m} over GF({p})")
        tables = self._buildTables(modulus)
        if tables is None:
            raise ContractViolationError(f"modulus {modulus} is not primitive over GF({p})")
        self.modulus = modulus

        expList,logList    = tables
        self.expList       = expList + expList
        self.logList       = logList
        self.generator     = expList[1] if self.order > 2 else 1
        self.powers        = [p**i for i in range(m)]
        self.negList       = [self._fromDigits([(-d) % p for d in self.digits(x)]) for x in range(self.order)]

        self.expArray      = numpy.array(self.expList,dtype=numpy.int64)
        self.logArray      = numpy.array(logList,dtype=numpy.int64)
        self.digitArray    = numpy.array([self.digits(x) for x in range(self.order)],dtype=numpy.int64)
        self.powerArray    = numpy.array(self.powers,dtype=numpy.int64)

        self.addList = None
        if p != 2 and self.order <= ADD_TABLE_LIMIT:
            table        = self._fromDigitArray((self.digitArray[:,None,:] + self.digitArray[None,:,:]) % p)
            self.addList = table.tolist()

    # --- construction helpers ---

    def _firstPrimitiveModulus(self):
        for low in itertools.product(range(self.p),repeat=self.m):
            if low[0] == 0:
                continue
            candidate = tuple(low) + (1,)
            if self._buildTables(candidate) is not None:
                return candidate
        raise ContractViolationError(f"no primitive polynomial of degree {self.m} over GF({self.p})")

    def _buildTables(self,modulus):
        p,m   = self.p,self.m
        size  = self.order - 1
        exp   = [0]*size
        log   = [0]*self.order
        state = [1] + [0]*(m - 1)
        for i in range(size):
            code = self._fromDigits(state)
            if i > 0 and code == 1:
                return None
            exp[i]    = code
            log[code] = i
            carry = state[-1]
            state = [0] + state[:-1]
            if carry:
                state = [(state[j] - carry*modulus[j]) % p for j in range(m)]
        if self._fromDigits(state) != 1:
            return None
        return exp,log

    def _fromDigits(self,digits):
        code = 0
        for d in reversed(digits):
            code = code*self.p + d
        return code

    def _fromDigitArray(self,digits):
        return (digits*self.powerArray).sum(axis=-1)

    # --- scalar arithmetic ---

    def digits(self,x):
        """
        Returns:
            list: The m base-p digits of the code x, lowest first.
        """
        out = []
        for _ in range(self.m):
            x,d = divmod(x,self.p)
            out.append(d)
        return out

    def add(self,a,b):
        if self.p == 2:
            return a ^ b
        if self.addList is not None:
            return self.addList[a][b]
        p = self.p
        return self._fromDigits([(x + y) % p for x,y in zip(self.digits(a),self.digits(b))])

    def neg(self,a):
        return self.negList[a]

    def sub(self,a,b):
        return self.add(a,self.negList[b])

    def mul(self,a,b):
        if a == 0 or b == 0:
            return 0
        return self.expList[self.logList[a] + self.logList[b]]

    def inv(self,a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.expList[(self.order - 1 - self.logList[a]) % (self.order - 1)]

    def div(self,a,b):
        return self.mul(a,self.inv(b))

    def power(self,a,e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self.expList[(self.logList[a]*e) % (self.order - 1)]

    def frobenius(self,a,q,i=1):
        """
        Returns a^(q^i), computed on the exponent of a.
        """
        if a == 0:
            return 0
        return self.expList[(self.logList[a]*pow(q,i,self.order - 1)) % (self.order - 1)]

    def fromInt(self,n):
        """
        Returns:
            int: The code of the prime field element n mod p.
        """
        return n % self.p

    def elements(self):
        return range(self.order)

    # --- numpy arithmetic ---

    def addArray(self,x,y):
        if self.p == 2:
            return numpy.bitwise_xor(x,y)
        return self._fromDigitArray((self.digitArray[x] + self.digitArray[y]) % self.p)

    def negArray(self,x):
        if self.p == 2:
            return numpy.asarray(x)
        return self._fromDigitArray((-self.digitArray[x]) % self.p)

    def mulArray(self,x,y):
        x,y  = numpy.broadcast_arrays(numpy.asarray(x),numpy.asarray(y))
        prod = self.expArray[self.logArray[x] + self.logArray[y]]
        return numpy.where((x != 0) & (y != 0),prod,0)

    def sumArray(self,x,axis=0):
        x    = numpy.asarray(x)
        axis = axis % x.ndim
        if self.p == 2:
            return numpy.bitwise_xor.reduce(x,axis=axis)
        return self._fromDigitArray(self.digitArray[x].sum(axis=axis) % self.p)

    def matmul(self,a,b):
        """
        Product of two code matrices.
        """
        return self.sumArray(self.mulArray(a[:,:,None],b[None,:,:]),axis=1)

    # --- text ---

    def toText(self,x):
        """
        Writes an element as a polynomial in the generator 'w' with digits
        0..p-1, e.g. "w+1" or "2w^2+w".
        """
        if self.m == 1:
            return str(x)
        terms = []
        for i,d in reversed(list(enumerate(self.digits(x)))):
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            else:
                coef = "" if d == 1 else str(d)
                terms.append(coef + ("w" if i == 1 else f"w^{i}"))
        return "+".join(terms) if terms else "0"

    def parse(self,text):
        """
        Reads an element written by toText().
        """
        text = text.replace(" ","")
        if not text:
            raise ContractViolationError("empty field element")
        alpha = self.generator if self.m == 1 else self.p
        value = 0
        for term in text.split("+"):
            try:
                if "w" in term:
                    coef,_,exp = term.partition("w")
                    coef = int(coef) if coef else 1
                    exp  = int(exp[1:]) if exp.startswith("^") else (1 if not exp else None)
                    if exp is None:
                        raise ValueError(term)
                    piece = self.mul(self.fromInt(coef),self.power(alpha,exp))
                else:
                    piece = self.fromInt(int(term))
            except ValueError:
                raise ContractViolationError(f"cannot read field element '{text}'")
            value = self.add(value,piece)
        return value

    def __eq__(self,other):
        return isinstance(other,GaloisField) and (self.p,self.m,self.modulus) == (other.p,other.m,other.modulus)

    def __hash__(self):
        return hash((self.p,self.m,self.modulus))

    def __repr__(self):
        return f"GaloisField(p={self.p}, m={self.m}, modulus={self.modulus})"

@lru_cache(maxsize=None)
def fieldForOrder(q):
    """
    Returns:
        GaloisField: The default table field of order q.
    """
    p,m = primePowerParts(q)
    return GaloisField(p,m)

class Polynomial:
    """
    Dense polynomial over a GaloisField, coefficients lowest degree first,
    stored as a tuple of element codes without trailing zeros.
    """
    __slots__ = ("field","coeffs")

    def __init__(self,field,coeffs):
        coeffs = list(int(c) for c in coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        for c in coeffs:
            if c < 0 or c >= field.order:
                raise ContractViolationError(f"coefficient code {c} outside GF({field.order})")
        self.field  = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls,field,c):
        return cls(field,(c,))

    @classmethod
    def monomial(cls,field,k,c=1):
        return cls(field,(0,)*k + (c,))

    @classmethod
    def linear(cls,field,root):
        """
        Returns:
            Polynomial: t - root.
        """
        return cls(field,(field.neg(root),1))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def isZero(self):
        return not self.coeffs

    def isMonic(self):
        return self.leading == 1

    def sortKey(self):
        return (self.degree,self.coeffs)

    def _check(self,other):
        if not isinstance(other,Polynomial):
            return NotImplemented
        if other.field != self.field:
            raise ContractViolationError("polynomials over different fields")
        return other

    def __add__(self,other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        F = self.field
        a,b = self.coeffs,other.coeffs
        if len(a) < len(b):
            a,b = b,a
        return Polynomial(F,[F.add(x,b[i]) if i < len(b) else x for i,x in enumerate(a)])

    def __neg__(self):
        return Polynomial(self.field,[self.field.neg(c) for c in self.coeffs])

    def __sub__(self,other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self,other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if self.isZero() or other.isZero():
            return Polynomial(self.field,())
        F   = self.field
        out = [0]*(len(self.coeffs) + len(other.coeffs) - 1)
        for i,x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j,y in enumerate(other.coeffs):
                if y:
                    out[i + j] = F.add(out[i + j],F.mul(x,y))
        return Polynomial(F,out)

    def scale(self,c):
        return Polynomial(self.field,[self.field.mul(c,x) for x in self.coeffs])

    def __divmod__(self,other):
        other = self._check(other)
        if other.isZero():
            raise ZeroDivisionError("polynomial division by zero")
        F         = self.field
        rem       = list(self.coeffs)
        dq        = other.degree
        lead      = F.inv(other.leading)
        quot      = [0]*max(0,len(rem) - dq)
        for k in range(len(rem) - 1,dq - 1,-1):
            c = rem[k]
            if c == 0:
                continue
            factor          = F.mul(c,lead)
            quot[k - dq]    = factor
            for j,y in enumerate(other.coeffs):
                if y:
                    rem[k - dq + j] = F.sub(rem[k - dq + j],F.mul(factor,y))
        return Polynomial(F,quot),Polynomial(F,rem[:dq])

    def __floordiv__(self,other):
        return divmod(self,other)[0]

    def __mod__(self,other):
        return divmod(self,other)[1]

    def monic(self):
        if self.isZero():
            raise ContractViolationError("the zero polynomial has no monic associate")
        return self.scale(self.field.inv(self.leading))

    def gcd(self,other):
        """
        Returns:
            Polynomial: The monic greatest common divisor (zero if both are zero).
        """
        a,b = self,self._check(other)
        while not b.isZero():
            a,b = b,a % b
        return a if a.isZero() else a.monic()

    def powMod(self,e,modulus):
        result = Polynomial.constant(self.field,1) % modulus
        base   = self % modulus
        while e > 0:
            if e & 1:
                result = (result*base) % modulus
            base = (base*base) % modulus
            e  >>= 1
        return result

    def __pow__(self,e):
        result = Polynomial.constant(self.field,1)
        base   = self
        while e > 0:
            if e & 1:
                result = result*base
            base = base*base
            e  >>= 1
        return result

    def evaluate(self,x):
        F   = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc,x),c)
        return acc

    def mapCoefficients(self,fn,field):
        return Polynomial(field,[fn(c) for c in self.coeffs])

    def __eq__(self,other):
        return isinstance(other,Polynomial) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field,self.coeffs))

    def __lt__(self,other):
        return self.sortKey() < other.sortKey()

    def toText(self):
        """
        Writes the polynomial as "t^3+t+1"; coefficients with more than one
        term are wrapped in parentheses, e.g. "t^2+(w+1)t+w".
        """
        if self.isZero():
            return "0"
        terms = []
        for k in range(self.degree,-1,-1):
            c = self.coeffs[k]
            if c == 0:
                continue
            coef = self.field.toText(c)
            if k == 0:
                terms.append(coef)
                continue
            mono = "t" if k == 1 else f"t^{k}"
            if c == 1:
                terms.append(mono)
            elif "+" in coef:
                terms.append(f"({coef}){mono}")
            else:
                terms.append(coef + mono)
        return "+".join(terms)

    @classmethod
    def parse(cls,text,field):
        """
        Reads a polynomial written by toText().
        """
        text   = text.replace(" ","")
        terms  = []
        depth  = 0
        start  = 0
        for i,ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "+" and depth == 0:
                terms.append(text[start:i])
                start = i + 1
        terms.append(text[start:])
        coeffs = {}
        for term in terms:
            if not term:
                raise ContractViolationError(f"cannot read polynomial '{text}'")
            if "t" in term:
                coefText,_,expText = term.rpartition("t")
                if expText.startswith("^"):
                    try:
                        k = int(expText[1:])
                    except ValueError:
                        raise ContractViolationError(f"cannot read polynomial '{text}'")
                elif expText == "":
                    k = 1
                else:
                    raise ContractViolationError(f"cannot read polynomial '{text}'")
                if coefText.startswith("(") and coefText.endswith(")"):
                    coefText = coefText[1:-1]
                c = field.parse(coefText) if coefText else 1
            else:
                k,c = 0,field.parse(term)
            coeffs[k] = field.add(coeffs.get(k,0),c)
        size = max(coeffs) + 1 if coeffs else 0
        return cls(field,[coeffs.get(k,0) for k in range(size)])

    def __repr__(self):
        return f"Polynomial({self.toText()} over GF({self.field.order}))"

    __str__ = toText

class FieldSpec:
    """
    The pair F = GF(q) inside K = GF(q^b), with K viewed as an F-space with
    basis 1, w, ..., w^(b-1) for a primitive element w of K.
    """
    def __init__(self,q,b,modulus=None):
        """
        Args:
            q (int): Order of the base field F.
            b (int): Extension degree, at least 1.
            modulus (Polynomial|sequence|str): Optional primitive polynomial of
                degree b over GF(q) defining K; only accepted for prime q.
        """
        p,m = primePowerParts(q)
        if not isinstance(b,int) or b < 1:
            raise ContractViolationError(f"extension degree {b!r} must be a positive integer")
        self.q,self.b = q,b
        self.p,self.m = p,m
        self.Q        = q**b
        self.F        = fieldForOrder(q)

        if modulus is None:
            self.K = fieldForOrder(self.Q)
        else:
            if m != 1:
                raise ContractViolationError("a custom modulus is only accepted over a prime field")
            if isinstance(modulus,str):
                modulus = Polynomial.parse(modulus,self.F)
            if isinstance(modulus,Polynomial):
                modulus = modulus.coeffs
            self.K = GaloisField(p,b,modulus)

        self.omega         = self.K.generator if self.Q > 2 else 1
        self.embedTable    = self._buildEmbedding()
        self.restrictTable = {k: f for f,k in enumerate(self.embedTable)}
        self.omegaPowers   = [self.K.power(self.omega,i) for i in range(b)]
        self.coordTable    = self._buildCoordinates()
        self.modulus       = self._minimalPolynomial()
        self._blocks       = None

    def _buildEmbedding(self):
        K = self.K
        if self.m == 1:
            return list(range(self.p))
        fMod = Polynomial(K,self.F.modulus)
        root = next(x for x in K.elements() if fMod.evaluate(x) == 0)
        table = []
        for code in range(self.q):
            acc = 0
            for i,d in enumerate(self.F.digits(code)):
                if d:
                    acc = K.add(acc,K.mul(K.fromInt(d),K.power(root,i)))
            table.append(acc)
        return table

    def _buildCoordinates(self):
        K = self.K
        if self.m == 1:
            return [tuple(K.digits(x)) for x in K.elements()]
        table = [None]*self.Q
        for coords in itertools.product(range(self.q),repeat=self.b):
            acc = 0
            for c,w in zip(coords,self.omegaPowers):
                if c:
                    acc = K.add(acc,K.mul(self.embedTable[c],w))
            table[acc] = coords
        return table

    def _minimalPolynomial(self):
        K    = self.K
        poly = Polynomial.constant(K,1)
        for i in range(self.b):
            poly = poly*Polynomial.linear(K,K.frobenius(self.omega,self.q,i))
        return poly.mapCoefficients(self.restrict,self.F)

    def embed(self,code):
        """
        Maps an element of F into K.
        """
        return self.embedTable[code]

    def restrict(self,code):
        """
        Maps an element of K lying in F back to its F code.
        """
        try:
            return self.restrictTable[code]
        except KeyError:
            raise ContractViolationError(f"{self.K.toText(code)} does not lie in GF({self.q})")

    def coordinates(self,code):
        """
        Returns:
            tuple: The F codes of x in the basis 1, w, ..., w^(b-1).
        """
        return self.coordTable[code]

    def fromCoordinates(self,coords):
        K   = self.K
        acc = 0
        for c,w in zip(coords,self.omegaPowers):
            acc = K.add(acc,K.mul(self.embedTable[c],w))
        return acc

    def blowupBlocks(self):
        """
        Returns:
            numpy.ndarray: Shape (Q, b, b); row i of block x holds the
            coordinates of w^i * x.
        """
        if self._blocks is None:
            K = self.K
            self._blocks = numpy.array(
                [[self.coordTable[K.mul(w,x)] for w in self.omegaPowers] for x in K.elements()],
                dtype=numpy.int64
            ).reshape(self.Q,self.b,self.b)
        return self._blocks

    def element(self,value):
        """
        Wraps a K code, a coordinate sequence or a text into a FieldElement.
        """
        if isinstance(value,FieldElement):
            return value
        if isinstance(value,str):
            return FieldElement(self,self.K.parse(value))
        if isinstance(value,int):
            return FieldElement(self,value)
        return FieldElement(self,self.fromCoordinates(value))

    @property
    def primitiveElement(self):
        return FieldElement(self,self.omega)

    def __eq__(self,other):
        return isinstance(other,FieldSpec) and (self.q,self.b,self.K) == (other.q,other.b,other.K)

    def __hash__(self):
        return hash((self.q,self.b,self.K))

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_blocks"] = None
        return state

    def __repr__(self):
        return f"FieldSpec(q={self.q}, b={self.b}, modulus={self.modulus.toText()})"

class FieldElement:
    """
    Element of K = GF(q^b) attached to its FieldSpec.
    """
    __slots__ = ("spec","code")

    def __init__(self,spec,code):
        if not 0 <= code < spec.Q:
            raise ContractViolationError(f"code {code} outside GF({spec.Q})")
        self.spec = spec
        self.code = int(code)

    @property
    def coords(self):
        return self.spec.coordinates(self.code)

    def _other(self,other):
        if isinstance(other,FieldElement):
            if other.spec != self.spec:
                raise ContractViolationError("elements of different fields")
            return other.code
        if isinstance(other,int):
            return self.spec.K.fromInt(other)
        return None

    def __add__(self,other):
        y = self._other(other)
        return NotImplemented if y is None else FieldElement(self.spec,self.spec.K.add(self.code,y))

    __radd__ = __add__

    def __sub__(self,other):
        y = self._other(other)
        return NotImplemented if y is None else FieldElement(self.spec,self.spec.K.sub(self.code,y))

    def __neg__(self):
        return FieldElement(self.spec,self.spec.K.neg(self.code))

    def __mul__(self,other):
        y = self._other(other)
        return NotImplemented if y is None else FieldElement(self.spec,self.spec.K.mul(self.code,y))

    __rmul__ = __mul__

    def __truediv__(self,other):
        y = self._other(other)
        return NotImplemented if y is None else FieldElement(self.spec,self.spec.K.div(self.code,y))

    def __pow__(self,e):
        return FieldElement(self.spec,self.spec.K.power(self.code,e))

    def __eq__(self,other):
        return isinstance(other,FieldElement) and self.spec == other.spec and self.code == other.code

    def __hash__(self):
        return hash((self.spec,self.code))

    def __repr__(self):
        return f"FieldElement({self.spec.K.toText(self.code)} in GF({self.spec.Q}))"

    def __str__(self):
        return self.spec.K.toText(self.code)

def frobeniusApply(x,i):
    """
    Applies the i-th power of the Frobenius automorphism y -> y^q of K over F.

    Args:
        x (FieldElement): The element.
        i (int): Non-negative power.

    Returns:
        FieldElement: x^(q^i).
    """
    if i < 0:
        raise ContractViolationError(f"Frobenius power {i} must be non-negative")
    spec = x.spec
    return FieldElement(spec,spec.K.frobenius(x.code,spec.q,i))

def elementDegree(x):
    """
    Returns:
        int: The degree of x over F, i.e. the least k >= 1 with x^(q^k) = x.
    """
    spec = x.spec
    for k in range(1,spec.b + 1):
        if spec.K.frobenius(x.code,spec.q,k) == x.code:
            return k
    raise ContractViolationError("element degree exceeds the extension degree")

def conjugatePoly(g,i,spec):
    """
    Applies the i-th Frobenius power of K over F to every coefficient of g.

    Args:
        g (Polynomial): Polynomial over spec.K.
        i (int): Frobenius power; taken modulo b.
        spec (FieldSpec): The extension K/F.

    Returns:
        Polynomial: The conjugate polynomial, of the same degree.
    """
    if g.field != spec.K:
        raise ContractViolationError("conjugation needs a polynomial over the extension field")
    K = spec.K
    i = i % spec.b
    return g.mapCoefficients(lambda c: K.frobenius(c,spec.q,i),K)

def frobeniusOrbit(g,spec):
    """
    Returns:
        list: The distinct conjugates of g, in order of first appearance.
    """
    orbit = []
    for i in range(spec.b):
        h = conjugatePoly(g,i,spec)
        if h not in orbit:
            orbit.append(h)
    return orbit

def _exhaustiveIrreducible(f):
    field = f.field
    for k in range(1,f.degree//2 + 1):
        for low in itertools.product(range(field.order),repeat=k):
            if (f % Polynomial(field,low + (1,))).isZero():
                return False
    return True

def _benOrIrreducible(f):
    field = f.field
    t     = Polynomial.monomial(field,1)
    h     = t
    for _ in range(f.degree//2):
        h = h.powMod(field.order,f)
        if f.gcd(h - t).degree > 0:
            return False
    return True

def _isIrreducible(f):
    if f.degree < 1:
        return False
    f = f.monic()
    if f.degree == 1:
        return True
    if f.degree <= 4 and f.field.order**(f.degree//2) <= EXHAUSTIVE_LIMIT:
        return _exhaustiveIrreducible(f)
    return _benOrIrreducible(f)

@lru_cache(maxsize=65536)
def isIrreducible(f):
    """
    Irreducibility test: exhaustive factor search up to degree 4 and the
    gcd(t^(q^k) - t, f) criterion above.

    Args:
        f (Polynomial): Non-constant polynomial.

    Returns:
        bool: True when f is irreducible over its field.
    """
    return _isIrreducible(f)

def countIrreducibles(q,d):
    """
    Number of monic irreducible polynomials of degree d over GF(q).

    Args:
        q (int): A prime power.
        d (int): The degree, at least 1.

    Returns:
        int: (1/d) * sum over e | d of mobius(e) * q^(d/e).
    """
    if not isinstance(d,int) or d < 1:
        raise ContractViolationError(f"degree {d!r} must be a positive integer")
    primePowerParts(q)
    total = sum(int(sympy.mobius(e))*q**(d//e) for e in sympy.divisors(d))
    count,rest = divmod(total,d)
    if rest:
        raise ContractViolationError(f"necklace sum for q={q}, d={d} is not divisible by d")
    return count

@lru_cache(maxsize=256)
def _enumerate(field,d):
    found = []
    for low in itertools.product(range(field.order),repeat=d):
        candidate = Polynomial(field,low + (1,))
        if d == 1 or _isIrreducible(candidate):
            found.append(candidate)
    return tuple(found)

def enumIrreducibles(field,d,guard=ENUMERATION_GUARD,cache=None):
    """
    All monic irreducible polynomials of degree d, sorted by coefficient vector.

    Args:
        field (GaloisField|int): The coefficient field, or its order.
        d (int): The degree, at least 1.
        guard (int): Refuse when more than this many candidates would be scanned.
        cache (IrreducibleCache): Optional on-disk cache.

    Returns:
        list: Polynomials over field.
    """
    if isinstance(field,int):
        field = fieldForOrder(field)
    if not isinstance(d,int) or d < 1:
        raise ContractViolationError(f"degree {d!r} must be a positive integer")
    size = field.order**d
    if size > guard:
        raise GuardExceededError(f"enumerating degree {d} polynomials over GF({field.order})",size,guard)
    if cache is not None:
        stored = cache.load(field,d)
        if stored is not None:
            return stored
    result = list(_enumerate(field,d))
    if cache is not None:
        cache.store(field,d,result)
    return result

def _equalDegreeSplit(f,k,rng):
    n = f.degree
    if n == k:
        return [f]
    field = f.field
    while True:
        a = Polynomial(field,[int(c) for c in rng.integers(0,field.order,size=n)])
        if a.degree < 1:
            continue
        if field.p == 2:
            term  = a % f
            trace = term
            for _ in range(field.m*k - 1):
                term  = (term*term) % f
                trace = trace + term
            probe = trace
        else:
            probe = a.powMod((field.order**k - 1)//2,f) - Polynomial.constant(field,1)
        g = f.gcd(probe)
        if 0 < g.degree < n:
            return _equalDegreeSplit(g,k,rng) + _equalDegreeSplit(f//g,k,rng)

@lru_cache(maxsize=4096)
def splitOverExtension(f,spec):
    """
    Factors an irreducible f over F into its irreducible divisors over K.

    Args:
        f (Polynomial): Monic irreducible polynomial over spec.F of degree d.
        spec (FieldSpec): The extension K/F.

    Returns:
        list: The gcd(b,d) distinct monic divisors over K, each of degree
        d/gcd(b,d), sorted; they form one Frobenius orbit with product f.
    """
    if f.field != spec.F:
        raise ContractViolationError("splitting needs a polynomial over the base field")
    if not isIrreducible(f):
        raise ContractViolationError(f"{f.toText()} is not irreducible over GF({spec.q})")
    K  = spec.K
    fK = f.monic().mapCoefficients(spec.embed,K)
    e  = math.gcd(spec.b,f.degree)
    if e == 1:
        return [fK]
    k = f.degree//e
    if k == 1 and K.order <= EXHAUSTIVE_LIMIT:
        factors = [Polynomial.linear(K,x) for x in K.elements() if fK.evaluate(x) == 0]
    else:
        factors = _equalDegreeSplit(fK,k,numpy.random.default_rng(0))
    return sorted(g.monic() for g in factors)
