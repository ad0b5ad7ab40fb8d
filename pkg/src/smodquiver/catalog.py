"""Catalog of graded simple Lie kinds and their half/short-graded simples.

Each kind carries a fixed grading cocharacter h.  A simple is "half" if the
eigenvalues of h on it are exactly {-1/2, +1/2}, and "short" if they lie in
{-1, 0, +1}; the catalog lists both families per kind, keyed by names from a
fixed namespace ("V", "V*", "ad", "S2V", ..., "Gamma+", "LrV(r)", "L").

The duality/form table is hard data: for the sp and so1 standard modules it
deliberately differs from the classical Frobenius-Schur indicator (which
`weights.fs_indicator` reports); the table drives block classification, the
engine drives the honest invariant-form computations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import weights
from .weights import RootSystem, composite


class UnknownLabel(KeyError):
    pass


HALF = frozenset((Fraction(1, 2), Fraction(-1, 2)))
SHORT = frozenset((Fraction(-1), Fraction(0), Fraction(1)))


@dataclass(frozen=True)
class LieKind:
    """A simple graded Lie kind: series + algebra size.

    series: "sl2" | "sp" | "sl" | "so1" | "so2" | "e7".
    size: for sp/sl/so1/so2 the N of sp(N)/sl(N)/so(N); 0 for sl2 and e7.
    so2 covers both parities (second short grading); so1 is the first
    short grading of so(4n).
    """

    series: str
    size: int = 0

    def __post_init__(self):
        s, n = self.series, self.size
        if s == "sp" and (n % 2 or n < 4):
            raise ValueError(f"sp({n})")
        if s == "sl" and (n % 2 or n < 4):
            raise ValueError(f"sl({n})")
        if s == "so1" and (n % 4 or n < 8):
            raise ValueError(f"so1({n})")
        if s == "so2" and n < 4:
            raise ValueError(f"so2({n})")
        if s not in ("sl2", "sp", "sl", "so1", "so2", "e7"):
            raise ValueError(s)

    def __str__(self):
        if self.series == "sl2":
            return "sl(2)"
        if self.series == "e7":
            return "e7"
        return f"{self.series}({self.size})"

    @property
    def rank(self):
        if self.series == "sl2":
            return 1
        if self.series == "sl":
            return self.size - 1
        if self.series == "e7":
            return 7
        return self.size // 2

    def root_system(self):
        s, n = self.series, self.size
        if s == "sl2":
            return RootSystem("A", 1)
        if s == "sp":
            return RootSystem("C", n // 2)
        if s == "sl":
            return RootSystem("A", n - 1)
        if s == "so1":
            return RootSystem("D", n // 2)
        if s == "so2":
            return RootSystem("B" if n % 2 else "D", (n - 1) // 2 if n % 2 else n // 2)
        raise ValueError("e7 has no character support")

    def cocharacter(self):
        """Doubled grading cocharacter h of the kind's short grading."""
        s, n = self.series, self.size
        if s == "sl2":
            return (1, -1)
        if s == "sp":
            return (1,) * (n // 2)
        if s == "sl":
            h = n // 2
            return (1,) * h + (-1,) * h
        if s == "so1":
            return (1,) * (n // 2)
        if s == "so2":
            r = self.root_system().rank
            return (2,) + (0,) * (r - 1)
        raise ValueError("e7 has no character support")


SL2 = LieKind("sl2")
E7 = LieKind("e7")


def SP(n):
    return LieKind("sp", n)


def SL(n):
    return LieKind("sl", n)


def SO1(n):
    return LieKind("so1", n)


def SO2(n):
    return LieKind("so2", n)


@dataclass(frozen=True)
class SLabel:
    kind: LieKind
    name: str
    weight: tuple  # doubled highest weight in the kind's root system; None for e7


@dataclass(frozen=True)
class FormData:
    dual: str
    parity: str  # "symmetric" | "skew" | "none"


_LRV = re.compile(r"^LrV\((\d+)\)$")


@lru_cache(maxsize=None)
def _half_weight_table(kind):
    s, n = kind.series, kind.size
    if s == "sl2":
        return {"L": (2, 0)}
    if s == "sp":
        r = n // 2
        return {"V": (2,) + (0,) * (r - 1)}
    if s == "sl":
        return {"V": (2,) + (0,) * (n - 1), "V*": (2,) * (n - 1) + (0,)}
    if s == "so1":
        r = n // 2
        return {"V": (2,) + (0,) * (r - 1)}
    if s == "so2":
        r = kind.root_system().rank
        if n % 2:
            return {"Gamma": (1,) * r}
        return {"Gamma+": (1,) * r, "Gamma-": (1,) * (r - 1) + (-1,)}
    return {}


@lru_cache(maxsize=None)
def _one_weight_table(kind):
    s, n = kind.series, kind.size
    if s == "sl2":
        return {"ad": (4, 0)}
    if s == "sp":
        r = n // 2
        t = {"ad": (4,) + (0,) * (r - 1)}
        if r >= 2:
            t["L2V"] = (2, 2) + (0,) * (r - 2)
        return t
    if s == "sl":
        t = {
            "ad": (4,) + (2,) * (n - 2) + (0,),
            "S2V": (4,) + (0,) * (n - 1),
            "S2V*": (4,) * (n - 1) + (0,),
            "L2V": (2, 2) + (0,) * (n - 2),
            "L2V*": (2,) * (n - 2) + (0, 0),
        }
        return t
    if s == "so1":
        r = n // 2
        t = {"ad": (2, 2) + (0,) * (r - 2), "S2V": (4,) + (0,) * (r - 1)}
        if n == 12:
            # the one extra short-graded spinor of so(12); with h=(1/2,...,1/2)
            # it is the spinor whose weights carry an odd number of minus signs
            t["Gamma+"] = (1,) * (r - 1) + (-1,)
        return t
    if s == "so2":
        r = kind.root_system().rank
        if n % 2:
            return {f"LrV({k})": (2,) * k + (0,) * (r - k) for k in range(1, r + 1)}
        t = {f"LrV({k})": (2,) * k + (0,) * (r - k) for k in range(1, r)}
        t["Lambda+"] = (2,) * r
        t["Lambda-"] = (2,) * (r - 1) + (-2,)
        return t
    return {"ad": None}


def s_half_simples(kind):
    """Simple objects on which h acts with eigenvalues exactly +-1/2."""
    table = _half_weight_table(kind)
    return [SLabel(kind, name, table[name]) for name in _half_order(kind)]


def _half_order(kind):
    table = _half_weight_table(kind)
    order = ["L", "V", "V*", "Gamma", "Gamma+", "Gamma-"]
    return [n for n in order if n in table]


def s_one_simples(kind):
    table = _one_weight_table(kind)
    names = sorted(table, key=_one_sort_key)
    return [SLabel(kind, name, table[name]) for name in names]


def _one_sort_key(name):
    m = _LRV.match(name)
    if m:
        return (1, int(m.group(1)), name)
    if name.startswith("Lambda"):
        return (2, 0 if name == "Lambda+" else 1, name)
    base = {"ad": 0, "S2V": 2, "S2V*": 3, "L2V": 4, "L2V*": 5, "Gamma+": 8}
    return (0, base.get(name, 99), name)


def half_weight(kind, name):
    try:
        return _half_weight_table(kind)[name]
    except KeyError:
        raise UnknownLabel(f"{kind} has no half simple {name!r}") from None


def one_weight(kind, name):
    try:
        return _one_weight_table(kind)[name]
    except KeyError:
        raise UnknownLabel(f"{kind} has no short-graded simple {name!r}") from None


def any_weight(kind, name):
    t = _half_weight_table(kind)
    if name in t:
        return t[name]
    return one_weight(kind, name)


def label_character(kind, name):
    return weights.weight_multiplicities(kind.root_system(), any_weight(kind, name))


def grading_eigenvalues(kind, lam):
    """Set of h-eigenvalues on the irreducible with highest weight lam."""
    sys = kind.root_system()
    if not weights.is_dominant(sys, lam):
        raise weights.NotDominant(lam)
    ch = weights.weight_multiplicities(sys, lam)
    return weights.eigenvalue_set(ch, kind.cocharacter())


@lru_cache(maxsize=None)
def is_s_half(kind, lam):
    """True iff V_lam carries eigenvalues exactly {-1/2, +1/2}."""
    if kind.series == "e7":
        return False
    return grading_eigenvalues(kind, lam) == HALF


def is_s_one(kind, lam):
    if kind.series == "e7":
        return False
    ev = grading_eigenvalues(kind, lam)
    return ev <= SHORT and ev != {Fraction(0)}


@lru_cache(maxsize=None)
def _name_of_half_weight(kind, lam):
    for name, w in _half_weight_table(kind).items():
        if w == lam:
            return name
    return None


@lru_cache(maxsize=None)
def restrict_s(kind, m_name, n_name):
    """(M (x) N) restricted to half simples and the trivial module.

    M is a half simple of the kind, N any catalog simple.  Returns a dict
    mapping half-simple names (or "tr") to multiplicities.
    """
    sys = kind.root_system()
    cm = weights.weight_multiplicities(sys, half_weight(kind, m_name))
    cn = weights.weight_multiplicities(sys, any_weight(kind, n_name))
    out = {}
    for lam, mult in weights.tensor_decompose(cm, cn).items():
        if weights.is_trivial_weight(sys, lam):
            out["tr"] = out.get("tr", 0) + mult
        elif is_s_half(kind, lam):
            name = _name_of_half_weight(kind, lam)
            assert name is not None, f"half simple {lam} missing from catalog of {kind}"
            out[name] = out.get(name, 0) + mult
    return out


def dual_label(kind, name):
    """Catalog name of the dual of a catalog simple (half or short-graded)."""
    if kind.series == "e7":
        if name == "ad":
            return "ad"
        raise UnknownLabel(name)
    sys = kind.root_system()
    lam = any_weight(kind, name)
    dual = weights.dual_weight(sys, weights.normalize_dominant(sys, lam))
    for table in (_half_weight_table(kind), _one_weight_table(kind)):
        for cand, w in table.items():
            if w == dual:
                return cand
    raise UnknownLabel(f"dual of {name} over {kind} is not a catalog simple")


def duality_form(kind, name):
    """Normative duality/form table for the half simples.

    For the sp and so1 standard modules the recorded parity is the table
    value, not the classical indicator; see `classical_parity` for the
    engine's answer.
    """
    s, n = kind.series, kind.size
    if s == "sl2" and name == "L":
        return FormData("L", "skew")
    if s == "sp" and name == "V":
        return FormData("V", "symmetric")
    if s == "so1" and name == "V":
        return FormData("V", "skew")
    if s == "sl" and name in ("V", "V*"):
        return FormData("V*" if name == "V" else "V", "none")
    if s == "so2" and n % 2 and name == "Gamma":
        m = kind.root_system().rank
        return FormData("Gamma", "symmetric" if m % 4 in (0, 3) else "skew")
    if s == "so2" and n % 2 == 0 and name in ("Gamma+", "Gamma-"):
        m = kind.root_system().rank
        if m % 2 == 0:
            return FormData(name, "symmetric" if m % 4 == 0 else "skew")
        return FormData("Gamma-" if name == "Gamma+" else "Gamma+", "none")
    raise UnknownLabel(f"{kind} has no half simple {name!r}")


@lru_cache(maxsize=None)
def classical_parity(kind, name):
    """Form parity of a catalog simple per the character engine (exact)."""
    if kind.series == "e7":
        return "symmetric" if name == "ad" else "none"
    sys = kind.root_system()
    ind = weights.fs_indicator(sys, any_weight(kind, name))
    return {1: "symmetric", -1: "skew", 0: "none"}[ind]


def parity_discrepancies(kind):
    """Half-simple names where the table parity differs from the engine."""
    out = []
    for lab in s_half_simples(kind):
        table = duality_form(kind, lab.name).parity
        engine = classical_parity(kind, lab.name)
        if table != engine:
            out.append((lab.name, table, engine))
    return out


@lru_cache(maxsize=None)
def graded_piece_dim(kind, name, level):
    """Dimension of the h-eigenvalue-`level` piece of a catalog simple."""
    if kind.series == "e7":
        # short grading of e7 relative to its sl2: (27, 79, 27)
        return {Fraction(1): 27, Fraction(-1): 27, Fraction(0): 79}.get(level, 0)
    ch = label_character(kind, name)
    h2 = kind.cocharacter()
    return sum(m for w, m in ch.mults.items()
               if Fraction(weights.ip4(w, h2), 4) == level)


def composite_system(kinds):
    return composite(*[k.root_system() for k in kinds])
