"""The generalized hypergeometric equation and its weight functions.

The equation is ``sigma*y'' + tau*y' - lambda_n*y = 0`` with
``sigma = a x^2 + b x + c`` and ``tau = d x + e``. Polynomial solutions of
degree n require ``lambda_n = n(n-1)a + n d``; this places lambda on the
right-hand side with a minus sign, which is the opposite sign convention to
the ``-n(tau' + (n-1) sigma''/2)`` form found in some references.

The Pearson equation ``(sigma w)' = tau w`` fixes the weight through

    w'/w = L/sigma,    L = (d - 2a) x + (e - b).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidEquation
from .polyalg import RationalPoly, fraction_str, to_fraction

INF = math.inf


@dataclass(frozen=True)
class HyperParams:
    """Coefficients (a, b, c, d, e) of sigma and tau, as exact rationals."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self):
        for name in "abcde":
            object.__setattr__(self, name, to_fraction(getattr(self, name)))

    @classmethod
    def of(cls, a, b, c, d, e) -> "HyperParams":
        return cls(a, b, c, d, e)

    @property
    def sigma(self) -> RationalPoly:
        return RationalPoly((self.c, self.b, self.a))

    @property
    def tau(self) -> RationalPoly:
        return RationalPoly((self.e, self.d))

    y1 = tau

    @property
    def pearson_numerator(self) -> RationalPoly:
        """L = (d - 2a) x + (e - b)."""
        return RationalPoly((self.e - self.b, self.d - 2 * self.a))

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    def lambda_n(self, n: int) -> Fraction:
        return lambda_n(self, n)

    def astuple(self) -> tuple[Fraction, ...]:
        return (self.a, self.b, self.c, self.d, self.e)

    def scaled(self, s) -> "HyperParams":
        s = to_fraction(s)
        return HyperParams(*(s * v for v in self.astuple()))

    def __str__(self):
        return "(" + ", ".join(fraction_str(v) for v in self.astuple()) + ")"


def lambda_n(hp: HyperParams, n: int) -> Fraction:
    """Eigenvalue n(n-1)a + n d for the degree-n polynomial solution."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return n * (n - 1) * hp.a + n * hp.d


class BochnerClass(enum.Enum):
    ConstantSigma = "Hermite-type"
    LinearSigma = "Laguerre-type"
    TwoRealRoots = "Jacobi-type"
    DoubleRealRoot = "Bessel-type"
    ComplexRoots = "Romanovski-type"


def classify(hp: HyperParams) -> BochnerClass:
    """Classify by degree of sigma and the sign of b^2 - 4ac."""
    if hp.a == 0 and hp.b == 0 and hp.c == 0:
        raise InvalidEquation("sigma identically zero")
    if hp.a == 0:
        return BochnerClass.ConstantSigma if hp.b == 0 else BochnerClass.LinearSigma
    disc = hp.discriminant
    if disc > 0:
        return BochnerClass.TwoRealRoots
    if disc == 0:
        return BochnerClass.DoubleRealRoot
    return BochnerClass.ComplexRoots


def exact_sqrt(q: Fraction) -> Fraction | None:
    """Square root of a nonnegative rational when it is rational, else None."""
    if q < 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


# --- weight descriptions -----------------------------------------------------

@dataclass(frozen=True)
class LogDerivative:
    """Rational function num/den equal to w'/w."""

    num: RationalPoly
    den: RationalPoly


class WeightSpec:
    """Common interface of all weight families."""

    family: str = ""
    support: tuple[float, float] | None = None

    def hyper(self) -> HyperParams:  # pragma: no cover - overridden
        raise NotImplementedError

    def weight(self, x):  # pragma: no cover - overridden
        raise NotImplementedError

    def log_derivative(self) -> LogDerivative | None:
        return None

    def log_derivative_float(self, x: float) -> float:
        ld = self.log_derivative()
        return float(ld.num(x)) / float(ld.den(x))

    def expression(self) -> str:  # pragma: no cover - overridden
        raise NotImplementedError

    def params(self) -> dict:
        return {}


def _fr(v) -> Fraction:
    return to_fraction(v)


@dataclass(frozen=True)
class Hermite(WeightSpec):
    """Weight exp(-alpha x^2) on the real line."""

    alpha: Fraction = Fraction(1)
    family: str = field(default="hermite", init=False)
    support: tuple = field(default=(-INF, INF), init=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", _fr(self.alpha))

    def hyper(self) -> HyperParams:
        return HyperParams(0, 0, 1, -2 * self.alpha, 0)

    def weight(self, x):
        return np.exp(-float(self.alpha) * np.asarray(x, dtype=float) ** 2)

    def log_derivative(self):
        return LogDerivative(RationalPoly((0, -2 * self.alpha)), RationalPoly.one())

    def expression(self):
        return f"exp(-{fraction_str(self.alpha)}*x^2)"

    def params(self):
        return {"alpha": self.alpha}


@dataclass(frozen=True)
class Laguerre(WeightSpec):
    """Weight x^beta exp(-alpha x) on [0, inf)."""

    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(0)
    family: str = field(default="laguerre", init=False)
    support: tuple = field(default=(0.0, INF), init=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", _fr(self.alpha))
        object.__setattr__(self, "beta", _fr(self.beta))

    def hyper(self):
        return HyperParams(0, 1, 0, -self.alpha, self.beta + 1)

    def weight(self, x):
        x = np.asarray(x, dtype=float)
        return x ** float(self.beta) * np.exp(-float(self.alpha) * x)

    def log_derivative(self):
        return LogDerivative(RationalPoly((self.beta, -self.alpha)), RationalPoly.x())

    def expression(self):
        return f"x^{fraction_str(self.beta)}*exp(-{fraction_str(self.alpha)}*x)"

    def params(self):
        return {"alpha": self.alpha, "beta": self.beta}


@dataclass(frozen=True)
class Jacobi(WeightSpec):
    """Weight (1-x)^alpha (1+x)^beta on [-1, 1]."""

    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)
    family: str = field(default="jacobi", init=False)
    support: tuple = field(default=(-1.0, 1.0), init=False)

    def __post_init__(self):
        object.__setattr__(self, "alpha", _fr(self.alpha))
        object.__setattr__(self, "beta", _fr(self.beta))

    @property
    def orthogonal(self) -> bool:
        return self.alpha > -1 and self.beta > -1

    def hyper(self):
        return HyperParams(-1, 0, 1, -self.alpha - self.beta - 2, self.beta - self.alpha)

    def weight(self, x):
        x = np.asarray(x, dtype=float)
        return (1 - x) ** float(self.alpha) * (1 + x) ** float(self.beta)

    def weight_from_gaps(self, dl, dr):
        """Weight from distances to the endpoints, dl = x + 1, dr = 1 - x."""
        return dr ** float(self.alpha) * dl ** float(self.beta)

    def log_derivative(self):
        # -alpha/(1-x) + beta/(1+x)
        num = RationalPoly((self.beta - self.alpha, -self.alpha - self.beta))
        return LogDerivative(num, RationalPoly((1, 0, -1)))

    def expression(self):
        return f"(1-x)^{fraction_str(self.alpha)}*(1+x)^{fraction_str(self.beta)}"

    def params(self):
        return {"alpha": self.alpha, "beta": self.beta}


@dataclass(frozen=True)
class Bessel(WeightSpec):
    """Equation x^2 y'' + (alpha x + beta) y' = ..., weight x^(alpha-2) exp(-beta/x).

    The ordinary Bessel polynomials are alpha = beta = 2. The alternative
    labelling in which the weight reads x^s exp(-beta/x) uses s = alpha - 2;
    see :func:`bessel_from_exponent`.
    """

    alpha: Fraction = Fraction(2)
    beta: Fraction = Fraction(2)
    family: str = field(default="bessel", init=False)
    support: tuple | None = field(default=None, init=False)  # unit-circle contour

    def __post_init__(self):
        object.__setattr__(self, "alpha", _fr(self.alpha))
        object.__setattr__(self, "beta", _fr(self.beta))

    def hyper(self):
        return HyperParams(1, 0, 0, self.alpha, self.beta)

    def weight(self, x):
        x = np.asarray(x)
        return x ** float(self.alpha - 2) * np.exp(-float(self.beta) / x)

    def log_derivative(self):
        return LogDerivative(RationalPoly((self.beta, self.alpha - 2)), RationalPoly((0, 0, 1)))

    def expression(self):
        return f"x^{fraction_str(self.alpha - 2)}*exp(-{fraction_str(self.beta)}/x)"

    def params(self):
        return {"alpha": self.alpha, "beta": self.beta}


def bessel_from_exponent(s, beta) -> Bessel:
    """Bessel weight labelled by its power: x^s exp(-beta/x), i.e. d = s + 2."""
    return Bessel(_fr(s) + 2, beta)


@dataclass(frozen=True)
class Romanovski(WeightSpec):
    """Weight (1+x^2)^(-p) exp(q arctan x) on the real line."""

    p: Fraction = Fraction(1)
    q: Fraction = Fraction(0)
    family: str = field(default="romanovski", init=False)
    support: tuple = field(default=(-INF, INF), init=False)

    def __post_init__(self):
        object.__setattr__(self, "p", _fr(self.p))
        object.__setattr__(self, "q", _fr(self.q))

    @classmethod
    def from_beta_alpha(cls, beta, alpha) -> "Romanovski":
        """Labelling by (beta, alpha) with weight (1+x^2)^(beta-1/2) exp(-alpha arctan x)."""
        return cls(Fraction(1, 2) - _fr(beta), -_fr(alpha))

    @property
    def beta_alpha(self) -> tuple[Fraction, Fraction]:
        return Fraction(1, 2) - self.p, -self.q

    def hyper(self):
        return HyperParams(1, 0, 1, 2 * (1 - self.p), self.q)

    def weight(self, x):
        x = np.asarray(x, dtype=float)
        return (1 + x * x) ** (-float(self.p)) * np.exp(float(self.q) * np.arctan(x))

    def log_derivative(self):
        return LogDerivative(RationalPoly((self.q, -2 * self.p)), RationalPoly((1, 0, 1)))

    def admissible(self, n: int, m: int) -> bool:
        """Finite orthogonality condition n + m < 2p - 1."""
        return n + m < 2 * self.p - 1

    def expression(self):
        return f"(1+x^2)^(-{fraction_str(self.p)})*exp({fraction_str(self.q)}*arctan(x))"

    def params(self):
        return {"p": self.p, "q": self.q}


@dataclass(frozen=True)
class GeneralWeight(WeightSpec):
    """Closed-form weight for a parameter set that is not in canonical form.

    ``kind`` and ``data`` describe the root structure of sigma:

    * ``gaussian``: sigma = c; w = exp(d x^2/(2c) + e x/c)
    * ``power_exp``: sigma = b x + c; w = exp(d x/b) |b x + c|^s
    * ``two_roots``: w = |x - r1|^A |x - r2|^B
    * ``double_root``: w = |x - r|^s exp(-K/(x - r))
    * ``complex_roots``: w = ((x-h)^2 + k^2)^s exp(t arctan((x-h)/k))
    """

    hp: HyperParams = None
    kind: str = ""
    data: tuple = ()
    family: str = field(default="general", init=False)
    support: tuple | None = None

    def hyper(self):
        return self.hp

    @property
    def values(self) -> dict:
        return dict(self.data)

    def weight(self, x):
        v = {k: float(val) for k, val in self.data}
        x = np.asarray(x, dtype=float)
        if self.kind == "gaussian":
            return np.exp(v["g2"] * x * x + v["g1"] * x)
        if self.kind == "power_exp":
            return np.exp(v["rate"] * x) * np.abs(v["b"] * x + v["c"]) ** v["s"]
        if self.kind == "two_roots":
            return np.abs(x - v["r1"]) ** v["A"] * np.abs(x - v["r2"]) ** v["B"]
        if self.kind == "double_root":
            return np.abs(x - v["r"]) ** v["s"] * np.exp(-v["K"] / (x - v["r"]))
        if self.kind == "complex_roots":
            u = x - v["h"]
            return (u * u + v["k"] ** 2) ** v["s"] * np.exp(v["t"] * np.arctan(u / v["k"]))
        raise ValueError(self.kind)

    def log_derivative_float(self, x: float) -> float:
        v = {k: float(val) for k, val in self.data}
        if self.kind == "gaussian":
            return 2 * v["g2"] * x + v["g1"]
        if self.kind == "power_exp":
            return v["rate"] + v["s"] * v["b"] / (v["b"] * x + v["c"])
        if self.kind == "two_roots":
            return v["A"] / (x - v["r1"]) + v["B"] / (x - v["r2"])
        if self.kind == "double_root":
            return v["s"] / (x - v["r"]) + v["K"] / (x - v["r"]) ** 2
        if self.kind == "complex_roots":
            u = x - v["h"]
            return (2 * v["s"] * u + v["t"] * v["k"]) / (u * u + v["k"] ** 2)
        raise ValueError(self.kind)

    def log_derivative(self):
        v = dict(self.data)
        if not all(isinstance(val, Fraction) for val in v.values()):
            return None
        if self.kind == "gaussian":
            return LogDerivative(RationalPoly((v["g1"], 2 * v["g2"])), RationalPoly.one())
        if self.kind == "power_exp":
            den = RationalPoly((v["c"], v["b"]))
            num = den.scale(v["rate"]) + v["s"] * v["b"]
            return LogDerivative(num, den)
        if self.kind == "two_roots":
            f1, f2 = RationalPoly((-v["r1"], 1)), RationalPoly((-v["r2"], 1))
            return LogDerivative(f2.scale(v["A"]) + f1.scale(v["B"]), f1 * f2)
        if self.kind == "double_root":
            f = RationalPoly((-v["r"], 1))
            return LogDerivative(f.scale(v["s"]) + v["K"], f * f)
        if self.kind == "complex_roots":
            u = RationalPoly((-v["h"], 1))
            return LogDerivative(u.scale(2 * v["s"]) + v["t"] * v["k"], u * u + v["k"] ** 2)
        return None

    def expression(self):
        v = {k: (fraction_str(val) if isinstance(val, Fraction) else f"{float(val):.12g}")
             for k, val in self.data}
        if self.kind == "gaussian":
            return f"exp({v['g2']}*x^2 + {v['g1']}*x)"
        if self.kind == "power_exp":
            return f"exp({v['rate']}*x)*|{v['b']}*x + {v['c']}|^{v['s']}"
        if self.kind == "two_roots":
            return f"|x - {v['r1']}|^{v['A']}*|x - {v['r2']}|^{v['B']}"
        if self.kind == "double_root":
            return f"|x - {v['r']}|^{v['s']}*exp(-{v['K']}/(x - {v['r']}))"
        return f"((x - {v['h']})^2 + {v['k']}^2)^{v['s']}*exp({v['t']}*arctan((x - {v['h']})/{v['k']}))"

    def params(self):
        return dict(self.data)


def _maybe_exact(q: Fraction | None, fallback: float):
    return q if q is not None else fallback


def _general_weight(hp: HyperParams) -> GeneralWeight:
    a, b, c, d, e = hp.astuple()
    L = hp.pearson_numerator
    cls = classify(hp)
    if cls is BochnerClass.ConstantSigma:
        data = (("g2", d / (2 * c)), ("g1", e / c))
        return GeneralWeight(hp, "gaussian", data, support=(-INF, INF))
    if cls is BochnerClass.LinearSigma:
        # L/sigma = (d x + e - b)/(b x + c) = d/b + (e - b - d c/b)/(b x + c)
        s = (e - b - d * c / b) / b
        data = (("rate", d / b), ("b", b), ("c", c), ("s", s))
        root = float(-c / b)
        sup = (root, INF) if d / b < 0 else (-INF, root)
        return GeneralWeight(hp, "power_exp", data, support=sup)
    disc = hp.discriminant
    if cls is BochnerClass.TwoRealRoots:
        sq = exact_sqrt(disc)
        if sq is not None:
            r1, r2 = (-b - sq) / (2 * a), (-b + sq) / (2 * a)
            if r1 > r2:
                r1, r2 = r2, r1
            A = L(r1) / (a * (r1 - r2))
            B = L(r2) / (a * (r2 - r1))
        else:
            s = math.sqrt(float(disc))
            r1, r2 = sorted(((-float(b) - s) / (2 * float(a)), (-float(b) + s) / (2 * float(a))))
            A = float(L(r1)) / (float(a) * (r1 - r2))
            B = float(L(r2)) / (float(a) * (r2 - r1))
        data = (("r1", r1), ("r2", r2), ("A", A), ("B", B))
        return GeneralWeight(hp, "two_roots", data, support=(float(r1), float(r2)))
    if cls is BochnerClass.DoubleRealRoot:
        r = -b / (2 * a)
        s = (d - 2 * a) / a
        K = L(r) / a
        data = (("r", r), ("s", s), ("K", K))
        return GeneralWeight(hp, "double_root", data, support=None)
    h = -b / (2 * a)
    k2 = -disc / (4 * a * a)
    k = exact_sqrt(k2)
    kk = _maybe_exact(k, math.sqrt(float(k2)))
    s = (d - 2 * a) / (2 * a)
    if isinstance(kk, Fraction):
        t = L(h) / (a * kk)
    else:
        t = float(L(h)) / (float(a) * kk)
    data = (("h", h), ("k", kk), ("s", s), ("t", t))
    return GeneralWeight(hp, "complex_roots", data, support=(-INF, INF))


_HALF = Fraction(1, 2)


def pearson_weight(hp: HyperParams) -> WeightSpec:
    """Solve the Pearson equation, returning a named family when hp is canonical."""
    a, b, c, d, e = hp.astuple()
    classify(hp)
    if a == 0 and b == 0 and c == 1 and e == 0:
        return Hermite(-d / 2)
    if a == 0 and b == 1 and c == 0:
        return Laguerre(-d, e - 1)
    if a == -1 and b == 0 and c == 1:
        return Jacobi((-d - 2 - e) / 2, (-d - 2 + e) / 2)
    if a == 1 and b == 0 and c == 0:
        return Bessel(d, e)
    if a == 1 and b == 0 and c == 1:
        return Romanovski(1 - d / 2, e)
    return _general_weight(hp)


def canonicalize(ws: WeightSpec) -> HyperParams:
    """Equation parameters of a weight description (inverse of pearson_weight)."""
    return ws.hyper()


def pearson_identity_exact(ws: WeightSpec) -> bool:
    """Check w'/w == L/sigma as an identity of rational functions (cross-multiplied)."""
    hp = ws.hyper()
    ld = ws.log_derivative()
    if ld is None:
        raise ValueError("weight has irrational root data; use pearson_identity_float")
    return ld.num * hp.sigma == hp.pearson_numerator * ld.den


def pearson_identity_float(ws: WeightSpec, xs) -> float:
    """Max relative mismatch between w'/w and L/sigma on sample points."""
    hp = ws.hyper()
    worst = 0.0
    for x in xs:
        lhs = ws.log_derivative_float(float(x))
        rhs = float(hp.pearson_numerator(float(x))) / float(hp.sigma(float(x)))
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    return worst


def parse_weight(family: str, params: dict) -> WeightSpec:
    """Build a weight from a family name and a dict of rational parameters."""
    f = family.lower()
    P = {k: to_fraction(v) for k, v in params.items()}
    if f == "hermite":
        return Hermite(P.get("alpha", 1))
    if f == "laguerre":
        return Laguerre(P.get("alpha", 1), P.get("beta", 0))
    if f == "jacobi":
        return Jacobi(P.get("alpha", 0), P.get("beta", 0))
    if f == "bessel":
        return Bessel(P.get("alpha", 2), P.get("beta", 2))
    if f == "romanovski":
        if "p" in P or "q" in P:
            return Romanovski(P.get("p", 1), P.get("q", 0))
        return Romanovski.from_beta_alpha(P.get("beta", Fraction(1, 2) - 1), P.get("alpha", 0))
    raise ValueError(f"unknown family {family!r}")
