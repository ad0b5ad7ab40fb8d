"""Short-graded Lie algebras from commutative algebra structure constants.

`tkk_construct` realizes g = g_{-1} + g_0 + g_1 with g_{-1} the algebra J,
g_0 the span of left multiplications and their commutators inside End(J),
and g_1 the span of the product map P and its g_0-orbit inside the symmetric
bilinear maps.  The distinguished triple is (unit, -L_unit, P).  Everything
is verified: grading, Jacobi, triple identities.

`lie_datum_of_spec` is the classification-level counterpart: it maps a
JordanSpec to graded simple kinds plus radical entries with multiplicity
spaces, without touching structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import catalog, jordan
from .catalog import E7, SL, SL2, SO1, SO2, SP, LieKind
from .linalg import Q0, Q1, SpanSolver, commutator, mat_vec, nullspace, rank

MAX_EXPLICIT_DIM = 16


class JacobiFails(ArithmeticError):
    """The constructed bracket is not a Lie bracket (bad input or bug)."""


class NotUnital(ValueError):
    pass


# ---------------------------------------------------------------------------
# explicit construction


@dataclass
class ShortGradedLie:
    """Graded Lie algebra on basis g_{-1} | g_0 | g_1 with sparse brackets."""

    dims: tuple                    # (d_-1, d_0, d_1)
    bracket: dict                  # (i, j) with i < j -> {k: coeff}
    triple: tuple                  # (e, h, f) as full coordinate vectors

    @property
    def total_dim(self):
        return sum(self.dims)

    def degree(self, i):
        n, d0, _ = self.dims
        if i < n:
            return -1
        if i < n + d0:
            return 0
        return 1

    def bracket_basis(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.bracket.get((i, j), {})
        return {k: -c for k, c in self.bracket.get((j, i), {}).items()}

    def bracket_vec(self, u, v):
        out = {}
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, Q0) + ui * vj * c
        return {k: c for k, c in out.items() if c}

    def check_grading(self):
        for (i, j), vec in self.bracket.items():
            d = self.degree(i) + self.degree(j)
            for k, c in vec.items():
                if c and self.degree(k) != d:
                    return False
        return True

    def check_jacobi(self):
        n = self.total_dim
        for i in range(n):
            for j in range(i + 1, n):
                bij = self.bracket_basis(i, j)
                for k in range(j + 1, n):
                    acc = {}
                    for t, c in bij.items():
                        for s, d in self.bracket_basis(t, k).items():
                            acc[s] = acc.get(s, Q0) + c * d
                    for t, c in self.bracket_basis(j, k).items():
                        for s, d in self.bracket_basis(t, i).items():
                            acc[s] = acc.get(s, Q0) + c * d
                    for t, c in self.bracket_basis(k, i).items():
                        for s, d in self.bracket_basis(t, j).items():
                            acc[s] = acc.get(s, Q0) + c * d
                    if any(acc.values()):
                        return False
        return True

    def check_triple(self):
        """e in g_{-1}, h in g_0, f in g_1 with [e,f]=h, [h,e]=-e, [h,f]=f."""
        e, h, f = self.triple
        ef = self.bracket_vec(e, f)
        if {k: c for k, c in enumerate(h) if c} != ef:
            return False
        he = self.bracket_vec(h, e)
        if {k: -c for k, c in enumerate(e) if c} != he:
            return False
        hf = self.bracket_vec(h, f)
        return {k: c for k, c in enumerate(f) if c} == hf


def _flatten(t):
    return [x for a in t for b in a for x in b]


def tkk_construct(sc: jordan.StructureConstants) -> ShortGradedLie:
    """Short-graded Lie algebra of a unital algebra given by its table."""
    n = sc.dim
    if n > MAX_EXPLICIT_DIM:
        raise ValueError(f"explicit construction bounded at dim {MAX_EXPLICIT_DIM}")
    if not jordan.check_jordan_identity(sc):
        raise ValueError("structure constants fail the defining identity")
    unit = jordan.find_unit(sc)
    if unit is None:
        raise NotUnital("algebra has no identity element")

    lmats = [sc.left_mult_matrix(i) for i in range(n)]

    def act(L, B):
        """(L.B)(x,y) = L(B(x,y)) - B(Lx,y) - B(x,Ly)."""
        out = [[[Q0] * n for _ in range(n)] for _ in range(n)]
        for x in range(n):
            for y in range(n):
                v = mat_vec(L, B[x][y])
                row = out[x][y]
                for k in range(n):
                    row[k] += v[k]
        for t in range(n):
            for x in range(n):
                c = L[t][x]
                if not c:
                    continue
                for y in range(n):
                    bty = B[t][y]
                    rxy = out[x][y]
                    ryx = out[y][x]
                    for k in range(n):
                        if bty[k]:
                            rxy[k] -= c * bty[k]
                            ryx[k] -= c * bty[k]
        return out

    # g_0: span of L_a and [L_a, L_b]
    g0 = SpanSolver(n * n)
    g0_ops = []

    def add_op(m):
        if g0.add([x for row in m for x in row]):
            g0_ops.append(m)

    for m in lmats:
        add_op(m)
    for i in range(n):
        for j in range(i + 1, n):
            add_op(commutator(lmats[i], lmats[j]))

    # g_1: span of P and L_a.P, inside symmetric bilinear maps
    ptensor = [[list(sc.c[i][j]) for j in range(n)] for i in range(n)]
    g1 = SpanSolver(n * n * n)
    g1_maps = []

    def add_map(b):
        if g1.add(_flatten(b)):
            g1_maps.append(b)

    add_map(ptensor)
    for m in lmats:
        add_map(act(m, ptensor))

    d0, d1 = len(g0_ops), len(g1_maps)
    total = n + d0 + d1
    bracket = {}

    def put(i, j, vec_dict):
        vec_dict = {k: c for k, c in vec_dict.items() if c}
        if not vec_dict:
            return
        if i < j:
            bracket[(i, j)] = vec_dict
        else:
            bracket[(j, i)] = {k: -c for k, c in vec_dict.items()}

    def g0_coords(m):
        c = g0.coords([x for row in m for x in row])
        if c is None:
            raise JacobiFails("operator outside the constructed degree-0 span")
        return c

    def g1_coords(b):
        c = g1.coords(_flatten(b))
        if c is None:
            raise JacobiFails("bilinear map outside the constructed degree-1 span")
        return c

    # [L, x] = L(x)
    for a, L in enumerate(g0_ops):
        for i in range(n):
            put(n + a, i, {k: L[k][i] for k in range(n)})
    # [B, x](y) = B(x, y), an operator in g_0
    for b, B in enumerate(g1_maps):
        for i in range(n):
            op = [[B[i][y][k] for y in range(n)] for k in range(n)]
            coords = g0_coords(op)
            put(n + d0 + b, i, {n + t: c for t, c in enumerate(coords)})
    # [L, L'] and [L, B]
    for a, L in enumerate(g0_ops):
        for b in range(a + 1, d0):
            coords = g0_coords(commutator(L, g0_ops[b]))
            put(n + a, n + b, {n + t: c for t, c in enumerate(coords)})
        for b, B in enumerate(g1_maps):
            coords = g1_coords(act(L, B))
            put(n + a, n + d0 + b, {n + d0 + t: c for t, c in enumerate(coords)})

    evec = [Q0] * total
    for i, x in enumerate(unit):
        evec[i] = x
    neg_le = [[-sum(unit[i] * lmats[i][r][c] for i in range(n)) for c in range(n)]
              for r in range(n)]
    hvec = [Q0] * total
    for t, c in enumerate(g0_coords(neg_le)):
        hvec[n + t] = c
    fvec = [Q0] * total
    for t, c in enumerate(g1_coords(ptensor)):
        fvec[n + d0 + t] = c

    g = ShortGradedLie((n, d0, d1), bracket, (tuple(evec), tuple(hvec), tuple(fvec)))
    if not (g.check_grading() and g.check_triple() and g.check_jacobi()):
        raise JacobiFails("constructed bracket fails verification")
    return g


def jordan_from_short_pair(g: ShortGradedLie) -> jordan.StructureConstants:
    """Product x*y = [[f,x],y] on g_{-1}, from the stored triple."""
    n = g.dims[0]
    _, _, f = g.triple
    table = []
    for i in range(n):
        xi = [Q1 if t == i else Q0 for t in range(g.total_dim)]
        fx = g.bracket_vec(f, xi)
        fxv = [Q0] * g.total_dim
        for k, c in fx.items():
            fxv[k] = c
        row = []
        for j in range(n):
            xj = [Q1 if t == j else Q0 for t in range(g.total_dim)]
            res = g.bracket_vec(fxv, xj)
            if any(k >= n for k in res):
                raise JacobiFails("[[f,x],y] leaves degree -1")
            row.append(tuple(res.get(k, Q0) for k in range(n)))
        table.append(row)
    return jordan.StructureConstants(table)


def minimality_check(g: ShortGradedLie) -> bool:
    """[g_{-1}, g_1] spans g_0 and the center is zero."""
    n, d0, d1 = g.dims
    total = g.total_dim
    rows = []
    for i in range(n):
        for b in range(n + d0, total):
            vec = g.bracket_basis(i, b)
            if any(k < n or k >= n + d0 for k in vec):
                return False
            rows.append([vec.get(n + t, Q0) for t in range(d0)])
    if rank(rows) != d0:
        return False
    ad_rows = []
    for j in range(total):
        for k in range(total):
            ad_rows.append([g.bracket_basis(i, j).get(k, Q0) for i in range(total)])
    return not nullspace(ad_rows)


# ---------------------------------------------------------------------------
# classification-level map


def kind_of_ideal(ideal: jordan.SimpleIdealKind) -> LieKind:
    if ideal.kind == "field":
        return SL2
    if ideal.kind == "bilinear":
        if ideal.dim < 3:
            raise ValueError("bilinear ideal requires dim >= 3")
        return SO2(ideal.dim + 2)
    if ideal.kind == "hermitian":
        if ideal.n < 3:
            raise ValueError("hermitian ideal requires n >= 3")
        if ideal.comp == 1:
            return SP(2 * ideal.n)
        if ideal.comp == 2:
            return SL(2 * ideal.n)
        if ideal.comp == 4:
            return SO1(4 * ideal.n)
        raise ValueError("hermitian component dim must be 1, 2 or 4")
    if ideal.kind == "albert":
        return E7
    raise ValueError(f"unknown ideal kind {ideal.kind!r}")


@dataclass(frozen=True)
class RadicalEntry:
    """A simple summand of the radical, with its multiplicity space."""

    support: tuple   # one or two summand indices
    labels: tuple    # parallel catalog names
    w_dim: int

    @property
    def is_tensor(self):
        return len(self.support) == 2


@dataclass(frozen=True)
class LieDatum:
    summands: tuple   # LieKind per simple ideal
    radical: tuple    # merged RadicalEntry list


def lie_datum_of_spec(spec: jordan.JordanSpec) -> LieDatum:
    """Classification-level graded Lie datum of a unital spec."""
    report = jordan.validate_spec(spec)
    if not report.ok:
        raise jordan.SpecError(report)
    if not spec.unital:
        raise ValueError("spec must be unital (apply unitalize first)")
    kinds = tuple(kind_of_ideal(i) for i in spec.ideals)
    merged = {}
    for comp in spec.radical:
        refs = sorted(comp.refs)
        key = (tuple(i for i, _ in refs), tuple(l for _, l in refs))
        merged[key] = merged.get(key, 0) + comp.mult
    entries = tuple(RadicalEntry(sup, labs, merged[(sup, labs)])
                    for sup, labs in sorted(merged))
    return LieDatum(kinds, entries)


# ---------------------------------------------------------------------------
# central extensions


@dataclass
class CentextReport:
    pair_dims: dict = field(default_factory=dict)  # (q, q') with q <= q' -> dim
    total: int = 0


def _parity_indicator(kind, name):
    """(t_sym, t_alt): trivial multiplicity in S^2 and Lambda^2 (classical)."""
    p = catalog.classical_parity(kind, name)
    return (1 if p == "symmetric" else 0, 1 if p == "skew" else 0)


def _entry_parities(datum, entry):
    ts, tl = 1, 0  # neutral for the 1-dim case; replaced below
    if entry.is_tensor:
        (ka, kb) = (datum.summands[entry.support[0]], datum.summands[entry.support[1]])
        sa, la_ = _parity_indicator(ka, entry.labels[0])
        sb, lb_ = _parity_indicator(kb, entry.labels[1])
        ts = sa * sb + la_ * lb_
        tl = sa * lb_ + la_ * sb
    else:
        kind = datum.summands[entry.support[0]]
        ts, tl = _parity_indicator(kind, entry.labels[0])
    return ts, tl


def _entries_dual(datum, e1, e2):
    if e1.support != e2.support:
        return False
    duals = tuple(catalog.dual_label(datum.summands[i], l)
                  for i, l in zip(e1.support, e1.labels))
    return duals == e2.labels


def central_extension_dim(datum: LieDatum) -> CentextReport:
    """dim of the invariants of the alternating square of the radical.

    Computed per pair of radical entries: within one entry W(x)M the
    contribution is dim S^2(W) * [M alternating] + dim Lambda^2(W) *
    [M symmetric]; a cross pair contributes dim W * dim W' iff the base
    modules are dual.  Parities come from the character engine (classical
    indicators), so this is the honest cohomological dimension.
    """
    rep = CentextReport()
    entries = datum.radical
    for q, e in enumerate(entries):
        ts, tl = _entry_parities(datum, e)
        k = e.w_dim
        dim = (k * (k + 1) // 2) * tl + (k * (k - 1) // 2) * ts
        if dim:
            rep.pair_dims[(q, q)] = dim
        for q2 in range(q + 1, len(entries)):
            e2 = entries[q2]
            if _entries_dual(datum, e, e2):
                rep.pair_dims[(q, q2)] = e.w_dim * e2.w_dim
    rep.total = sum(rep.pair_dims.values())
    return rep
