"""
Author: Antlampas
CC BY-SA 4.0
https://creativecommons.org/licenses/by-sa/4.0/
"""

import math
from dataclasses import dataclass, field
from fractions   import Fraction

import mpmath
from mpmath import iv

from algebra import countIrreducibles, primePowerParts
from errors  import ContractViolationError, HypothesisError

def fractionText(x):
    """
    Exact "num/den" text of a rational, also for integers ("1/1").
    """
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"

class TruncatedPowerSeries:
    """
    Power series in u with exact rational coefficients known up to u^order.

    Coefficients above the order are unknown, not zero: every binary
    operation truncates to the smaller of the two orders.
    """
    __slots__ = ("coeffs","order")

    def __init__(self,coefficients,order=None):
        """
        Args:
            coefficients (sequence): Coefficients of u^0, u^1, ...; missing
                ones up to order are zero.
            order (int): Truncation order; defaults to len(coefficients) - 1.
        """
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ContractViolationError(f"truncation order {order} is negative")
        coeffs = coeffs[:order + 1] + [Fraction(0)]*(order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order  = order

    @classmethod
    def constant(cls,c,order):
        return cls([c],order)

    @classmethod
    def variable(cls,order):
        """
        The series u.
        """
        return cls([0,1],order)

    @classmethod
    def fromFunction(cls,fn,order):
        return cls([fn(n) for n in range(order + 1)],order)

    def __getitem__(self,n):
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise ContractViolationError(f"coefficient of u^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    def coefficient(self,n):
        return self[n]

    def _coerce(self,other):
        if isinstance(other,TruncatedPowerSeries):
            return other
        if isinstance(other,(int,Fraction)):
            return TruncatedPowerSeries.constant(other,self.order)
        return None

    def __add__(self,other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order,other.order)
        return TruncatedPowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(order + 1)],order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPowerSeries([-c for c in self.coeffs],self.order)

    def __sub__(self,other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self,other):
        return (-self) + other

    def __mul__(self,other):
        if isinstance(other,(int,Fraction)):
            return self.scale(other)
        if not isinstance(other,TruncatedPowerSeries):
            return NotImplemented
        order = min(self.order,other.order)
        a,b   = self.coeffs,other.coeffs
        out   = [Fraction(0)]*(order + 1)
        for i in range(order + 1):
            if a[i] == 0:
                continue
            ai = a[i]
            for j in range(order + 1 - i):
                if b[j]:
                    out[i + j] += ai*b[j]
        return TruncatedPowerSeries(out,order)

    __rmul__ = __mul__

    def scale(self,c):
        c = Fraction(c)
        return TruncatedPowerSeries([c*x for x in self.coeffs],self.order)

    def inverse(self):
        """
        Multiplicative inverse; the constant term must be a unit.
        """
        if self.coeffs[0] == 0:
            raise ContractViolationError("a power series with zero constant term has no inverse")
        a   = self.coeffs
        inv = [Fraction(1)/a[0]]
        for n in range(1,self.order + 1):
            acc = sum((a[k]*inv[n - k] for k in range(1,n + 1) if a[k]),Fraction(0))
            inv.append(-acc*inv[0])
        return TruncatedPowerSeries(inv,self.order)

    def __truediv__(self,other):
        if isinstance(other,(int,Fraction)):
            return self.scale(Fraction(1)/Fraction(other))
        if not isinstance(other,TruncatedPowerSeries):
            return NotImplemented
        return self*other.inverse()

    def __pow__(self,e):
        if e < 0:
            return self.inverse()**(-e)
        result = TruncatedPowerSeries.constant(1,self.order)
        base   = self
        while e > 0:
            if e & 1:
                result = result*base
            base = base*base
            e  >>= 1
        return result

    def scaled(self,a):
        """
        Returns:
            TruncatedPowerSeries: The substitution u -> a*u.
        """
        a = Fraction(a)
        return TruncatedPowerSeries([c*a**i for i,c in enumerate(self.coeffs)],self.order)

    def shifted(self,k):
        """
        Multiplication by u^k; the order grows by k.
        """
        return TruncatedPowerSeries([0]*k + list(self.coeffs),self.order + k)

    def truncate(self,order):
        if order > self.order:
            raise ContractViolationError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedPowerSeries(self.coeffs[:order + 1],order)

    def prefixSums(self):
        out,acc = [],Fraction(0)
        for c in self.coeffs:
            acc += c
            out.append(acc)
        return out

    def evaluate(self,x):
        """
        The polynomial part sum_{n <= order} c_n x^n.
        """
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc*x + c
        return acc

    def __eq__(self,other):
        return isinstance(other,TruncatedPowerSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order,self.coeffs))

    def agreesWith(self,other):
        """
        Coefficient equality up to the smaller of the two orders.
        """
        order = min(self.order,other.order)
        return self.coeffs[:order + 1] == other.coeffs[:order + 1]

    def toJson(self,params=None):
        document = {
            "order"        : self.order,
            "coefficients" : [fractionText(c) for c in self.coeffs]
        }
        if params is not None:
            document["params"] = {"q": params.q, "b": params.b, "Q": params.Q, "N": params.N}
        return document

    @classmethod
    def fromJson(cls,document):
        return cls([Fraction(c) for c in document["coefficients"]],document["order"])

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        more  = ", ..." if self.order >= 6 else ""
        return f"TruncatedPowerSeries([{shown}{more}], order={self.order})"

@dataclass(frozen=True)
class SeriesParams:
    """
    The pair (q, b) with b > 1, plus Q = q^b and N = |Irr(q,b)|.
    """
    q : int
    b : int
    Q : int = field(init=False)
    N : int = field(init=False)

    def __post_init__(self):
        primePowerParts(self.q)
        if not isinstance(self.b,int) or self.b < 2:
            raise HypothesisError(self.b)
        object.__setattr__(self,"Q",self.q**self.b)
        object.__setattr__(self,"N",countIrreducibles(self.q,self.b))

@dataclass(frozen=True)
class Interval:
    """
    Closed rational interval [lo, hi].
    """
    lo : Fraction
    hi : Fraction

    @classmethod
    def fromIv(cls,x):
        """
        Exact rational endpoints of an mpmath iv value.
        """
        lo,hi = x._mpi_
        return cls(Fraction(*mpmath.libmp.to_rational(lo)),Fraction(*mpmath.libmp.to_rational(hi)))

    def toIv(self):
        return iv.mpf([iv.mpf(self.lo.numerator)/self.lo.denominator,iv.mpf(self.hi.numerator)/self.hi.denominator])

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi)/2

    def contains(self,x):
        return self.lo <= x <= self.hi

    def __str__(self):
        return f"[{mpmath.nstr(mpmath.mpf(self.lo.numerator)/self.lo.denominator,20)}, {mpmath.nstr(mpmath.mpf(self.hi.numerator)/self.hi.denominator,20)}]"

class WorkingPrecision:
    """
    Context manager setting iv.prec and restoring it on exit.
    """
    def __init__(self,bits):
        self.bits  = bits
        self.saved = None

    def __enter__(self):
        self.saved = iv.prec
        iv.prec    = self.bits
        return self

    def __exit__(self,*exc):
        iv.prec = self.saved
        return False

def omegaN(n,Q):
    """
    Returns:
        Fraction: prod_{i=1}^{n} (1 - Q^-i) = |GL(n,Q)| / |M(n,Q)|.
    """
    if n < 0:
        raise ContractViolationError(f"omegaN needs n >= 0, got {n}")
    if Q < 2:
        raise ContractViolationError(f"omegaN needs Q >= 2, got {Q}")
    acc = Fraction(1)
    for i in range(1,n + 1):
        acc *= 1 - Fraction(1,Q**i)
    return acc

def omegaIv(Q,bits):
    """
    Interval enclosure of prod_{i>=1} (1 - Q^-i) at the current iv precision.
    Factors up to M are multiplied out; the rest lies in
    [1 - Q^-(M+1)/(1 - Q^-1), 1] and M is chosen so that this tail is
    below 2^-(bits+3).
    """
    M = 1
    while Q**(M + 1) < 2**(bits + 4):
        M += 1
    one  = iv.mpf(1)
    acc  = one
    for i in range(1,M + 1):
        acc = acc*(one - one/(Q**i))
    tail = (one/(Q**(M + 1)))/(one - one/Q)
    return acc*(one - tail*iv.mpf([0,1]))

def omegaLimit(Q,precisionBits):
    """
    Rigorous enclosure of omega(1,Q) = prod_{i>=1} (1 - Q^-i).

    Args:
        Q (int): At least 2.
        precisionBits (int): Requested width exponent.

    Returns:
        Interval: Width at most 2^-precisionBits.
    """
    if Q < 2:
        raise ContractViolationError(f"omegaLimit needs Q >= 2, got {Q}")
    with WorkingPrecision(precisionBits + 2*Q.bit_length() + 40):
        return Interval.fromIv(omegaIv(Q,precisionBits))

def binomialSeries(b,order):
    """
    Returns:
        TruncatedPowerSeries: (1 - u)^(-b), coefficients C(n+b-1, b-1).
    """
    return TruncatedPowerSeries([math.comb(n + b - 1,b - 1) for n in range(order + 1)],order)

def qProduct(Q,start,stop,order):
    """
    Finite product prod_{i=start}^{stop} (1 - u Q^-i), expanded exactly.
    """
    acc = TruncatedPowerSeries.constant(1,order)
    for i in range(start,stop + 1):
        acc = acc*TruncatedPowerSeries([1,-Fraction(1,Q**i)],order)
    return acc

def eulerL(Q,order):
    """
    prod_{i>=1} (1 - u Q^-i) through Euler's expansion: the coefficient of
    u^c is (-1)^c / prod_{i=1}^{c} (Q^i - 1).
    """
    coeffs = []
    den    = 1
    for c in range(order + 1):
        if c:
            den *= Q**c - 1
        coeffs.append(Fraction((-1)**c,den))
    return TruncatedPowerSeries(coeffs,order)

def eulerP(Q,order):
    """
    1 + sum_{n>=1} u^n / omega_n(1,Q).
    """
    coeffs = []
    acc    = Fraction(1)
    for n in range(order + 1):
        if n:
            acc /= 1 - Fraction(1,Q**n)
        coeffs.append(acc)
    return TruncatedPowerSeries(coeffs,order)

def pSeries(params,order,form="definition"):
    """
    P(u, q^b). form "definition" sums 1/omega_n; "product" inverts (1-u)L.
    """
    if form == "definition":
        return eulerP(params.Q,order)
    if form == "product":
        return ((TruncatedPowerSeries([1,-1],order))*eulerL(params.Q,order)).inverse()
    raise ContractViolationError(f"unknown form '{form}' for P")

def sSeries(params,order,form="definition"):
    """
    S(u, q^b) = sum_{n>=1} u^n / (Q^n (1 - Q^-1)), or its closed form
    u / ((Q-1)(1 - u/Q)).
    """
    Q = params.Q
    if form == "definition":
        return TruncatedPowerSeries([0] + [1/(Fraction(Q)**n*(1 - Fraction(1,Q))) for n in range(1,order + 1)],order)
    if form == "closed":
        u = TruncatedPowerSeries.variable(order)
        return u.scale(Fraction(1,Q - 1))/TruncatedPowerSeries([1,-Fraction(1,Q)],order)
    raise ContractViolationError(f"unknown form '{form}' for S")

def lSeries(params,order,form="closed"):
    """
    L(u, q^b) = prod_{i>=1} (1 - u Q^-i). form "definition" is 1/(P(1-u)).
    """
    if form == "closed":
        return eulerL(params.Q,order)
    if form == "definition":
        return (pSeries(params,order)*TruncatedPowerSeries([1,-1],order)).inverse()
    raise ContractViolationError(f"unknown form '{form}' for L")

def hSeries(params,order,form="product"):
    """
    H(u, q^b) = b P^-b (1-u)^-b S ("definition"), or
    b/(Q-1) * u/(1 - u/Q) * L^b ("product").
    """
    b = params.b
    if form == "definition":
        return pSeries(params,order).inverse()**b*binomialSeries(b,order)*sSeries(params,order).scale(b)
    if form == "product":
        return sSeries(params,order,"closed").scale(b)*lSeries(params,order)**b
    raise ContractViolationError(f"unknown form '{form}' for H")

def pcbiSeries(k,params,order):
    """
    P * H^k, the generating function for matrices primary cyclic for every
    member of a k-subset of Irr(q,b).
    """
    if not isinstance(k,int) or k < 0 or k > params.N:
        raise ContractViolationError(f"subset size k={k} must lie in [0, N={params.N}]")
    P = pSeries(params,order)
    if k == 0:
        return P
    return P*hSeries(params,order)**k

def pcbSeries(params,order,form="binomial"):
    """
    P (1 - (1 - H)^N), or the alternating sum of C(N,i) PCBI(i).
    """
    if form == "binomial":
        H = hSeries(params,order)
        return pSeries(params,order)*(1 - (1 - H)**params.N)
    if form == "inclusion-exclusion":
        acc = TruncatedPowerSeries.constant(0,order)
        for i in range(1,params.N + 1):
            acc = acc + pcbiSeries(i,params,order).scale((-1)**(i + 1)*math.comb(params.N,i))
        return acc
    raise ContractViolationError(f"unknown form '{form}' for PCB")

def proportionSeries(params,order):
    """
    sum_c P_M(c, q^b) u^c: the coefficients of PCB times omega_c(1,Q).
    """
    pcb = pcbSeries(params,order)
    return TruncatedPowerSeries([omegaN(c,params.Q)*pcb[c] for c in range(order + 1)],order)

def jSeries(params,order):
    """
    (1 - uQ) A(uQ) with A the proportion series: [u^c] = (a_c - a_(c-1)) Q^c.
    """
    A = proportionSeries(params,order)
    return TruncatedPowerSeries([1,-params.Q],order)*A.scaled(params.Q)

def jSubstitutionSeries(params,order):
    """
    (1 - uQ) PCB(uQ).
    """
    return TruncatedPowerSeries([1,-params.Q],order)*pcbSeries(params,order).scaled(params.Q)

def jProductSeries(params,order):
    """
    P(u) [1 - (1 - bQ/(Q-1) u (1-u)^(b-1) L(u)^b)^N], the expanded form of
    (1 - uQ) PCB(uQ).
    """
    Q,b   = params.Q,params.b
    u     = TruncatedPowerSeries.variable(order)
    inner = u.scale(Fraction(b*Q,Q - 1))*TruncatedPowerSeries([1,-1],order)**(b - 1)*lSeries(params,order)**b
    return pSeries(params,order)*(1 - (1 - inner)**params.N)

def prefixSumDivision(X):
    """
    X / (1 - u): coefficient c is the sum of the coefficients 0..c of X.
    """
    return TruncatedPowerSeries(X.prefixSums(),X.order)
