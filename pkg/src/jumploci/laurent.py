"""Laurent polynomials with rational coefficients.

A polynomial is a mapping from integer exponent vectors to nonzero
Fractions.  Besides ring arithmetic this module provides monomial
substitution (restriction to a subtorus) and the dimension of a common
zero set inside the algebraic torus, the latter through a Gröbner basis.
"""

from fractions import Fraction
from itertools import combinations

__all__ = ["LaurentPolynomial", "torus_zero_dimension"]


class LaurentPolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has the wrong length (want {nvars})")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self.terms = clean

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPolynomial.constant(self.nvars, other)
        return (isinstance(other, LaurentPolynomial) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"LaurentPolynomial({self.nvars}, {self.to_string()!r})"

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return LaurentPolynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return LaurentPolynomial(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.nvars, t)

    __rmul__ = __mul__

    def is_monomial(self):
        return len(self.terms) == 1

    def coefficient_sum(self):
        return sum(self.terms.values(), Fraction(0))

    def evaluate(self, point):
        """Value at a point of ``(Q^×)^n``."""
        if len(point) != self.nvars:
            raise ValueError("point has the wrong length")
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def substitute(self, B):
        """Monomial substitution ``t_i -> prod_s u_s^{B[i][s]}``.

        ``B`` is an ``n x r`` integer matrix; the result lives in ``r``
        variables and may be zero after cancellation.
        """
        r = len(B[0]) if B else 0
        if len(B) != self.nvars:
            raise ValueError("substitution matrix has the wrong number of rows")
        t = {}
        for exp, c in self.terms.items():
            new = tuple(sum(exp[i] * B[i][s] for i in range(self.nvars)) for s in range(r))
            t[new] = t.get(new, 0) + c
        return LaurentPolynomial(r, t)

    def embed(self, nvars, offset):
        """The same polynomial in ``nvars`` variables, shifted by ``offset``."""
        t = {}
        for exp, c in self.terms.items():
            e = [0] * nvars
            e[offset:offset + self.nvars] = exp
            t[tuple(e)] = c
        return LaurentPolynomial(nvars, t)

    def to_string(self, names=None):
        if not self.terms:
            return "0"
        names = names or [f"t{i + 1}" for i in range(self.nvars)]
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return {"terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data, nvars):
        terms = {}
        for t in data["terms"]:
            e = tuple(int(x) for x in t["exp"])
            terms[e] = terms.get(e, 0) + Fraction(str(t["coef"]))
        return cls(nvars, terms)


def _independent_dimension(leading, nvars):
    """Krull dimension of ``k[x]/I`` read off the leading monomials of a
    Gröbner basis of ``I``: the largest set of variables containing the
    support of no leading monomial."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leading]
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return -1


def torus_zero_dimension(polys, nvars):
    """Dimension of the common zero set of ``polys`` in ``(C^×)^nvars``.

    Returns -1 for the empty set.  Trivial cases are decided directly;
    otherwise a Gröbner basis of the saturated ideal is computed.
    """
    polys = [p for p in polys if p]
    if not polys:
        return nvars
    if any(p.is_monomial() for p in polys):
        return -1
    if nvars == 0:
        return -1
    if len(polys) == 1:
        return nvars - 1
    if nvars == 1:
        from sympy import Poly, QQ, gcd as sgcd, symbols
        u = symbols("u")
        g = None
        for p in polys:
            low = min(e[0] for e in p.terms)
            sp = Poly({(e[0] - low,): c for e, c in p.terms.items()}, u, domain=QQ)
            g = sp if g is None else sgcd(g, sp)
        return 0 if g.degree() > 0 else -1
    from sympy import Poly, QQ, groebner, symbols
    gens = symbols(f"u0:{nvars}") + (symbols("z_sat"),)
    sp = []
    for p in polys:
        low = [min(e[i] for e in p.terms) for i in range(nvars)]
        sp.append(Poly({tuple(e[i] - low[i] for i in range(nvars)) + (0,): c
                        for e, c in p.terms.items()}, *gens, domain=QQ))
    # z * u0 * ... * u_{n-1} - 1 removes the coordinate hyperplanes
    sat = {(1,) * (nvars + 1): Fraction(1), (0,) * (nvars + 1): Fraction(-1)}
    sp.append(Poly(sat, *gens, domain=QQ))
    G = groebner(sp, *gens, order="grevlex", domain=QQ)
    leading = []
    for g in G.polys:
        if g.is_ground:
            return -1
        leading.append(g.monoms(order="grevlex")[0])
    return _independent_dimension(leading, nvars + 1)
