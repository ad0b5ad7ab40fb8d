"""Commutative algebras with the partial associativity law, and their modules.

Carries both classification-level data (`JordanSpec`: simple ideals plus a
square-zero radical given by catalog labels) and explicit structure constants
for small algebras, with exact multilinearized identity checks.

All arithmetic is over Fraction; identities are checked on basis tuples after
full multilinearization, which is equivalent over an infinite field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Q0, Q1, commutator, is_zero_mat, mat_mul, nullspace, qvec, solve


class CubicIdentityFails(ArithmeticError):
    """rho(e)(rho(e)-1)(2 rho(e)-1) != 0: not a module over the algebra."""


class NotAssociative(ArithmeticError):
    pass


class SpecError(ValueError):
    def __init__(self, report):
        super().__init__("; ".join(report.violations))
        self.report = report


# ---------------------------------------------------------------------------
# classification-level specs


@dataclass(frozen=True)
class SimpleIdealKind:
    kind: str  # "field" | "bilinear" | "hermitian" | "albert"
    dim: int = 0       # bilinear: dim of the algebra including the unit
    comp: int = 0      # hermitian: composition algebra dimension 1|2|4
    n: int = 0         # hermitian: matrix size

    def __str__(self):
        if self.kind == "field":
            return "k"
        if self.kind == "bilinear":
            return f"bilinear({self.dim})"
        if self.kind == "hermitian":
            return f"hermitian({self.comp},{self.n})"
        return "albert"


def Field():
    return SimpleIdealKind("field")


def Bilinear(dim):
    return SimpleIdealKind("bilinear", dim=dim)


def Hermitian(comp, n):
    return SimpleIdealKind("hermitian", comp=comp, n=n)


def Albert():
    return SimpleIdealKind("albert")


@dataclass(frozen=True)
class RadicalComponentSpec:
    kind: str                 # "unital" | "tensor"
    refs: tuple               # ((ideal, label),) or ((i, labelA), (j, labelB))
    mult: int = 1


def Unital(ideal, label, mult=1):
    return RadicalComponentSpec("unital", ((ideal, label),), mult)


def TensorOfSpecial(ideal_a, label_a, ideal_b, label_b, mult=1):
    return RadicalComponentSpec("tensor", ((ideal_a, label_a), (ideal_b, label_b)), mult)


@dataclass(frozen=True)
class JordanSpec:
    ideals: tuple
    radical: tuple = ()
    unital: bool = True


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


_TRIVIAL_NAMES = {"tr", "trivial"}


def validate_spec(spec: JordanSpec) -> ValidationReport:
    """Report-style validation of a classification-level spec."""
    from . import catalog
    from .tkk import kind_of_ideal

    rep = ValidationReport()
    bad = rep.violations.append
    for i, ideal in enumerate(spec.ideals):
        if ideal.kind == "bilinear" and ideal.dim < 3:
            bad(f"ideal {i}: bilinear requires dim >= 3, got {ideal.dim}")
        elif ideal.kind == "hermitian":
            if ideal.comp not in (1, 2, 4):
                bad(f"ideal {i}: hermitian component dim must be 1, 2 or 4")
            if ideal.n < 3:
                bad(f"ideal {i}: hermitian requires n >= 3, got {ideal.n}")
        elif ideal.kind not in ("field", "bilinear", "hermitian", "albert"):
            bad(f"ideal {i}: unknown kind {ideal.kind!r}")
    if spec.unital and not spec.ideals:
        bad("unital spec with empty ideal list")

    def kind_or_none(idx):
        try:
            return kind_of_ideal(spec.ideals[idx])
        except ValueError:
            return None

    for j, comp in enumerate(spec.radical):
        if comp.mult < 1:
            bad(f"radical {j}: multiplicity must be >= 1")
        idxs = [i for i, _ in comp.refs]
        if any(i < 0 or i >= len(spec.ideals) for i in idxs):
            bad(f"radical {j}: ideal index out of range")
            continue
        if any(lbl in _TRIVIAL_NAMES for _, lbl in comp.refs):
            bad(f"radical {j}: trivial radical component")
            continue
        if comp.kind == "unital":
            (i, label), = comp.refs
            kind = kind_or_none(i)
            if kind is None:
                continue
            names = {s.name for s in catalog.s_one_simples(kind)}
            if label not in names:
                bad(f"radical {j}: {label!r} is not a short-graded simple of {kind}")
        elif comp.kind == "tensor":
            (ia, la), (ib, lb) = comp.refs
            if ia == ib:
                bad(f"radical {j}: tensor components must reference distinct ideals")
                continue
            for i, lbl in comp.refs:
                kind = kind_or_none(i)
                if kind is None:
                    continue
                names = {s.name for s in catalog.s_half_simples(kind)}
                if lbl not in names:
                    bad(f"radical {j}: {lbl!r} is not a half simple of {kind}")
        else:
            bad(f"radical {j}: unknown component kind {comp.kind!r}")
    return rep


def unitalize(spec: JordanSpec) -> JordanSpec:
    """Adjoin a formal identity: append one field ideal; idempotent."""
    if spec.unital:
        return spec
    return JordanSpec(spec.ideals + (Field(),), spec.radical, True)


# -- JSON wire format --------------------------------------------------------


def spec_to_dict(spec: JordanSpec) -> dict:
    ideals = []
    for ideal in spec.ideals:
        if ideal.kind == "field":
            ideals.append({"kind": "field"})
        elif ideal.kind == "bilinear":
            ideals.append({"kind": "bilinear", "dim": ideal.dim})
        elif ideal.kind == "hermitian":
            ideals.append({"kind": "hermitian", "comp": ideal.comp, "n": ideal.n})
        else:
            ideals.append({"kind": "albert"})
    radical = []
    for comp in spec.radical:
        if comp.kind == "unital":
            (i, label), = comp.refs
            radical.append({"kind": "unital", "ideal": i, "label": label,
                            "mult": comp.mult})
        else:
            (ia, la), (ib, lb) = comp.refs
            radical.append({"kind": "tensor", "a": {"ideal": ia, "label": la},
                            "b": {"ideal": ib, "label": lb}, "mult": comp.mult})
    return {"ideals": ideals, "radical": radical, "unital": spec.unital}


def spec_from_dict(data: dict) -> JordanSpec:
    ideals = []
    for d in data["ideals"]:
        kind = d["kind"]
        if kind == "field":
            ideals.append(Field())
        elif kind == "bilinear":
            ideals.append(Bilinear(int(d["dim"])))
        elif kind == "hermitian":
            ideals.append(Hermitian(int(d["comp"]), int(d["n"])))
        elif kind == "albert":
            ideals.append(Albert())
        else:
            raise ValueError(f"unknown ideal kind {kind!r}")
    radical = []
    for d in data.get("radical", ()):
        kind = d["kind"]
        mult = int(d.get("mult", 1))
        if kind == "unital":
            radical.append(Unital(int(d["ideal"]), d["label"], mult))
        elif kind == "tensor":
            radical.append(TensorOfSpecial(int(d["a"]["ideal"]), d["a"]["label"],
                                           int(d["b"]["ideal"]), d["b"]["label"], mult))
        else:
            raise ValueError(f"unknown radical kind {kind!r}")
    return JordanSpec(tuple(ideals), tuple(radical), bool(data.get("unital", True)))


def load_spec(path) -> JordanSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return spec_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# explicit structure constants


class StructureConstants:
    """Commutative product on k^n: c[i][j] is the vector e_i * e_j."""

    def __init__(self, table):
        self.c = tuple(tuple(tuple(Fraction(x) for x in v) for v in row)
                       for row in table)
        self.dim = len(self.c)
        for i in range(self.dim):
            if len(self.c[i]) != self.dim:
                raise ValueError("table is not square")
            for j in range(self.dim):
                if len(self.c[i][j]) != self.dim:
                    raise ValueError("entries must be n-vectors")
                if self.c[i][j] != self.c[j][i]:
                    raise ValueError("table is not commutative")

    def mul(self, x, y):
        out = [Q0] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, ck in enumerate(self.c[i][j]):
                    if ck:
                        out[k] += xi * yj * ck
        return out

    def left_mult_matrix(self, i):
        """Matrix of x -> e_i * x."""
        return [[self.c[i][j][k] for j in range(self.dim)] for k in range(self.dim)]

    def basis(self, i):
        v = [Q0] * self.dim
        v[i] = Q1
        return v

    def __eq__(self, other):
        return isinstance(other, StructureConstants) and self.c == other.c


def find_unit(sc: StructureConstants):
    """The unit element as a vector, or None."""
    n = sc.dim
    rows, rhs = [], []
    for i in range(n):
        for k in range(n):
            rows.append([sc.c[j][i][k] for j in range(n)])
            rhs.append(Q1 if k == i else Q0)
    return solve(rows, rhs)


def check_jordan_identity(sc: StructureConstants) -> bool:
    """Full multilinearization of ((a*a)*b)*a = (a*a)*(b*a) on basis tuples."""
    n = sc.dim

    def f(x, y, b, z):
        xy = sc.c[x][y]
        left = sc.mul(sc.mul(xy, sc.basis(b)), sc.basis(z))
        right = sc.mul(xy, sc.c[b][z])
        return [l - r for l, r in zip(left, right)]

    for x in range(n):
        for y in range(x, n):
            for z in range(y, n):
                for b in range(n):
                    acc = f(x, y, b, z)
                    for t, v in enumerate(f(y, z, b, x)):
                        acc[t] += v
                    for t, v in enumerate(f(z, x, b, y)):
                        acc[t] += v
                    if any(acc):
                        return False
    return True


@dataclass
class BiRepresentation:
    algebra: StructureConstants
    matrices: list  # d x d rational matrices, one per algebra basis vector

    @property
    def dim(self):
        return len(self.matrices[0]) if self.matrices else 0

    def rho(self, vec):
        d = self.dim
        out = [[Q0] * d for _ in range(d)]
        for coeff, mat in zip(vec, self.matrices):
            if coeff:
                for r in range(d):
                    for c in range(d):
                        if mat[r][c]:
                            out[r][c] += coeff * mat[r][c]
        return out


def regular_birep(sc: StructureConstants) -> BiRepresentation:
    return BiRepresentation(sc, [sc.left_mult_matrix(i) for i in range(sc.dim)])


def check_birepresentation(rep: BiRepresentation) -> bool:
    """Multilinearized module identities on all basis triples."""
    sc = rep.algebra
    n = sc.dim
    rhos = rep.matrices

    def rho_of(vec):
        return rep.rho(vec)

    # rho(a)rho(b)rho(c) + rho(c)rho(b)rho(a) + rho((a*c)*b)
    #   = rho(a)rho(b*c) + rho(b)rho(c*a) + rho(c)rho(a*b)
    for a in range(n):
        for c in range(a, n):
            for b in range(n):
                lhs = mat_mul(mat_mul(rhos[a], rhos[b]), rhos[c])
                rhs = mat_mul(mat_mul(rhos[c], rhos[b]), rhos[a])
                m = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(lhs, rhs)]
                m = [[x + y for x, y in zip(r1, r2)]
                     for r1, r2 in zip(m, rho_of(sc.mul(sc.c[a][c], sc.basis(b))))]
                for (p, q, r) in ((a, b, c), (b, c, a), (c, a, b)):
                    t = mat_mul(rhos[p], rho_of(sc.c[q][r]))
                    m = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(m, t)]
                if not is_zero_mat(m):
                    return False
    # linearized [rho(a), rho(a*a)] = 0
    for x in range(n):
        for y in range(x, n):
            for z in range(y, n):
                m = commutator(rhos[x], rho_of(sc.c[y][z]))
                for (p, q, r) in ((y, z, x), (z, x, y)):
                    t = commutator(rhos[p], rho_of(sc.c[q][r]))
                    m = [[u + v for u, v in zip(r1, r2)] for r1, r2 in zip(m, t)]
                if not is_zero_mat(m):
                    return False
    return True


@dataclass
class PeirceSplit:
    dims: tuple          # (dim M_0, dim M_1/2, dim M_1)
    bases: tuple         # eigenvector bases for 0, 1/2, 1


def peirce_split(rep: BiRepresentation, e) -> PeirceSplit:
    """Eigenspace split of rho(e) for eigenvalues 0, 1/2, 1.

    `e` is a basis index or an explicit vector; it must be the unit of the
    algebra.  Raises CubicIdentityFails if rho(e)(rho(e)-1)(2rho(e)-1) != 0.
    """
    sc = rep.algebra
    evec = sc.basis(e) if isinstance(e, int) else qvec(e)
    for i in range(sc.dim):
        if sc.mul(evec, sc.basis(i)) != sc.basis(i):
            raise ValueError("e is not the unit of the algebra")
    d = rep.dim
    re = rep.rho(evec)
    ident = [[Q1 if i == j else Q0 for j in range(d)] for i in range(d)]
    m1 = [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(re, ident)]
    m2 = [[2 * x - y for x, y in zip(r1, r2)] for r1, r2 in zip(re, ident)]
    if not is_zero_mat(mat_mul(mat_mul(re, m1), m2)):
        raise CubicIdentityFails("rho(e)(rho(e)-1)(2rho(e)-1) != 0")
    bases = []
    for lam in (Fraction(0), Fraction(1, 2), Fraction(1)):
        mat = [[x - (lam if i == j else 0) for j, x in enumerate(row)]
               for i, row in enumerate(re)]
        bases.append(tuple(tuple(v) for v in nullspace(mat)))
    dims = tuple(len(b) for b in bases)
    assert sum(dims) == d
    return PeirceSplit(dims, tuple(bases))


def plus_product(assoc_table) -> StructureConstants:
    """Symmetrized product a*b = ab + ba of an associative table."""
    table = [[qvec(v) for v in row] for row in assoc_table]
    n = len(table)

    def mul(x, y):
        out = [Q0] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    for k, ck in enumerate(table[i][j]):
                        if ck:
                            out[k] += xi * yj * ck
        return out

    def basis(i):
        v = [Q0] * n
        v[i] = Q1
        return v

    for i in range(n):
        for j in range(n):
            for k in range(n):
                if mul(table[i][j], basis(k)) != mul(basis(i), table[j][k]):
                    raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})")
    sym = [[tuple(x + y for x, y in zip(table[i][j], table[j][i]))
            for j in range(n)] for i in range(n)]
    return StructureConstants(sym)


def matrix_algebra_table(n):
    """Associative structure constants of M_n(k) on the basis E_ij (row-major)."""
    dim = n * n

    def idx(i, j):
        return i * n + j

    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        table[idx(i, j)][idx(k, l)][idx(i, l)] = Fraction(1)
    return table
