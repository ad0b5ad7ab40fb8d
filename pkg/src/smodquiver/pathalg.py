"""Finite-dimensional graded pointed algebras and their resolutions.

Two carriers share one protocol (dims / src / dst / mul):

  * PresentedAlgebra: quiver + quadratic relations, basis extracted degree by
    degree (degree-d spanning pairs arrow(x)A_{d-1} modulo relation spreads);
  * TensorGradedAlgebra: degreewise tensor with a connected graded algebra
    (Segre products against S(W) or Lambda(W)).

On top of the protocol: Hilbert series, minimal graded resolutions of the
vertex simples with exact Betti tables, and the linearity check up to a
homological cap.  All arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Q0, Q1, SpanSolver, nullspace, rref


class NonTerminating(RuntimeError):
    """Basis extraction did not reach an empty degree below the cap."""


class CapExceeded(RuntimeError):
    pass


class VertexMismatch(ValueError):
    pass


class PresentationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# presented algebras


class PresentedAlgebra:
    """Path algebra of a quiver modulo homogeneous monomial-length relations.

    vertices: sequence of vertex ids.  arrows: (aid, src, dst) triples with
    unique aids.  relations: iterables of (coef, path) with path a tuple of
    arrow ids, outermost first, so (f, g) means "f after g"; all terms of one
    relation must share endpoints and length.  Relations are quadratic in the
    intended use; longer homogeneous relations are supported for control
    experiments.
    """

    def __init__(self, vertices, arrows, relations, deg_cap=8):
        self.vertices = tuple(vertices)
        self.arrows = tuple(sorted(arrows))
        self._arrow_pos = {a[0]: i for i, a in enumerate(self.arrows)}
        if len(self._arrow_pos) != len(self.arrows):
            raise PresentationError("duplicate arrow ids")
        self._asrc = {a[0]: a[1] for a in self.arrows}
        self._adst = {a[0]: a[2] for a in self.arrows}
        vset = set(self.vertices)
        for aid, src, dst in self.arrows:
            if src not in vset or dst not in vset:
                raise PresentationError(f"arrow {aid} touches unknown vertex")
        self.relations = []
        for rel in relations:
            terms = tuple((Fraction(c), tuple(path)) for c, path in rel)
            if len({len(p) for _, p in terms}) != 1:
                raise PresentationError("relation terms must share length")
            ends = set()
            for _, p in terms:
                if len(p) < 2:
                    raise PresentationError("relations start at path length 2")
                for s in range(len(p) - 1):
                    if self._asrc[p[s]] != self._adst[p[s + 1]]:
                        raise PresentationError(f"non-composable path {p}")
                ends.add((self._asrc[p[-1]], self._adst[p[0]]))
            if len(ends) != 1:
                raise PresentationError("relation terms must share endpoints")
            self.relations.append(terms)
        self.deg_cap = deg_cap
        # degree data
        self._src = [[v for v in self.vertices], [a[1] for a in self.arrows]]
        self._dst = [[v for v in self.vertices], [a[2] for a in self.arrows]]
        self._pairs = [None, None]        # degree d: list of (arrow_pos, x_idx)
        self._pair_reduce = [None, None]  # pair idx -> ((basis_idx, coef), ...)
        self._free = [None, None]         # basis: positions into pairs
        self._mul_cache = {}
        self._build()

    # -- protocol ----------------------------------------------------------

    @property
    def top_degree(self):
        return len(self._src) - 1

    def dims(self, d):
        if d < 0 or d > self.top_degree:
            return 0
        return len(self._src[d])

    def src(self, d, i):
        return self._src[d][i]

    def dst(self, d, i):
        return self._dst[d][i]

    def mul(self, d1, i, d2, j):
        """Product (d1, i) after (d2, j) as ((k, coef), ...) in degree d1+d2."""
        if d1 == 0:
            return ((j, Q1),) if self._src[0][i] == self._dst[d2][j] else ()
        if d2 == 0:
            return ((i, Q1),) if self._src[d1][i] == self._dst[0][j] else ()
        if d1 + d2 > self.top_degree:
            return ()
        key = (d1, i, d2, j)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        if self._src[d1][i] != self._dst[d2][j]:
            out = ()
        elif d1 == 1:
            out = self._reduce_pair(d2 + 1, i, j)
        else:
            a, x = self._pairs[d1][self._free[d1][i]]
            acc = {}
            for k, c in self.mul(d1 - 1, x, d2, j):
                for k2, c2 in self._reduce_pair(d1 - 1 + d2 + 1, a, k):
                    acc[k2] = acc.get(k2, Q0) + c * c2
            out = tuple((k, c) for k, c in sorted(acc.items()) if c)
        self._mul_cache[key] = out
        return out

    # -- construction ------------------------------------------------------

    def _reduce_pair(self, d, arrow_pos, x_idx):
        """Class of the spanning pair arrow(x)basis in degree d >= 2."""
        if d > self.top_degree:
            return ()
        idx = self._pair_index[d].get((arrow_pos, x_idx))
        if idx is None:
            return ()
        return self._pair_reduce[d][idx]

    def _tail_class(self, path_tail, d0, j):
        """Class of (path_tail composed after basis (d0, j)) as ((x, c), ...)."""
        combo = {j: Q1}
        d = d0
        for aid in reversed(path_tail):
            apos = self._arrow_pos[aid]
            nxt = {}
            for x, c in combo.items():
                for k, c2 in self.mul(1, apos, d, x):
                    nxt[k] = nxt.get(k, Q0) + c * c2
            combo = {k: c for k, c in nxt.items() if c}
            d += 1
            if not combo:
                break
        return combo

    def _relation_rows(self, d, index):
        """Spread rows of the relations in degree d, in pair coordinates."""
        rows = []
        for terms in self.relations:
            length = len(terms[0][1])
            if d < length or self.dims(d - length) == 0:
                continue
            src_r = self._asrc[terms[0][1][-1]]
            for y in range(self.dims(d - length)):
                if self._dst[d - length][y] != src_r:
                    continue
                row = {}
                for c, p in terms:
                    for x, c2 in self._tail_class(p[1:], d - length, y).items():
                        key = (self._arrow_pos[p[0]], x)
                        row[key] = row.get(key, Q0) + c * c2
                row = {index[k]: c for k, c in row.items() if c}
                if row:
                    rows.append(row)
        return rows

    def _build(self):
        self._pair_index = [None, None]
        d = 2
        while True:
            pairs = []
            for apos, (aid, src, dst) in enumerate(self.arrows):
                for x in range(self.dims(d - 1)):
                    if self._dst[d - 1][x] == src:
                        pairs.append((apos, x))
            if not pairs:
                return
            index = {p: i for i, p in enumerate(pairs)}
            sparse_rows = self._relation_rows(d, index)
            # fixpoint of single-coordinate rows: those pairs are dead
            dead = set()
            changed = True
            while changed:
                changed = False
                remaining = []
                for row in sparse_rows:
                    row = {k: c for k, c in row.items() if k not in dead}
                    if not row:
                        continue
                    if len(row) == 1:
                        dead.add(next(iter(row)))
                        changed = True
                    else:
                        remaining.append(row)
                sparse_rows = remaining
            alive = [i for i in range(len(pairs)) if i not in dead]
            alive_pos = {p: t for t, p in enumerate(alive)}
            rows = []
            for row in sparse_rows:
                dense = [Q0] * len(alive)
                for k, c in row.items():
                    dense[alive_pos[k]] += c
                rows.append(dense)
            red, pivots = rref(rows)
            pivset = set(pivots)
            free = [alive[i] for i in range(len(alive)) if i not in pivset]
            free_pos = {p: t for t, p in enumerate(free)}
            reduce_tab = [()] * len(pairs)
            for t, p in enumerate(free):
                reduce_tab[p] = ((t, Q1),)
            for r, pc in enumerate(pivots):
                reduce_tab[alive[pc]] = tuple(
                    (free_pos[alive[j]], -red[r][j])
                    for j in range(len(alive))
                    if j not in pivset and red[r][j])
            self._pairs.append(pairs)
            self._pair_index.append(index)
            self._pair_reduce.append(reduce_tab)
            self._free.append(free)
            self._src.append([self._src[d - 1][pairs[p][1]] for p in free])
            self._dst.append([self.arrows[pairs[p][0]][2] for p in free])
            if not free:
                # trim the empty degree and stop
                self._pairs.pop()
                self._pair_index.pop()
                self._pair_reduce.pop()
                self._free.pop()
                self._src.pop()
                self._dst.pop()
                return
            d += 1
            if d > self.deg_cap:
                raise NonTerminating(
                    f"degree {self.deg_cap} reached with dimension "
                    f"{len(free)} still nonzero")

    # -- conveniences ------------------------------------------------------

    def hilbert(self):
        return tuple(self.dims(d) for d in range(self.top_degree + 1))

    def total_dim(self):
        return sum(self.hilbert())

    def dims_by_pair(self, d):
        out = {}
        for i in range(self.dims(d)):
            key = (self.src(d, i), self.dst(d, i))
            out[key] = out.get(key, 0) + 1
        return out

    def path_of(self, d, i):
        """A representative path (tuple of arrow ids, outermost first)."""
        if d == 0:
            return ()
        if d == 1:
            return (self.arrows[i][0],)
        a, x = self._pairs[d][self._free[d][i]]
        return (self.arrows[a][0],) + self.path_of(d - 1, x)


def from_presentation(quiver, relations, deg_cap=8) -> PresentedAlgebra:
    """Adapter from quiver/relation objects (duck-typed) or raw tuples."""
    if hasattr(quiver, "thin"):
        vertices = [v.vid for v in quiver.vertices]
        arrows = [(t.tid, t.src, t.dst) for t in quiver.thin]
    else:
        vertices, arrows = quiver
    rels = []
    for r in relations:
        rels.append(tuple(r.terms) if hasattr(r, "terms") else tuple(r))
    return PresentedAlgebra(vertices, arrows, rels, deg_cap)


# ---------------------------------------------------------------------------
# auxiliary graded algebras (single vertex) and the Segre product


class SimpleGradedAlgebra:
    """Connected graded algebra with an explicit basis and product rule."""

    def __init__(self, vertex, basis_by_degree, mul_fn):
        self.vertices = (vertex,)
        self._basis = basis_by_degree          # list of lists of labels
        self._index = [{b: i for i, b in enumerate(layer)}
                       for layer in basis_by_degree]
        self._mul_fn = mul_fn

    @property
    def top_degree(self):
        return len(self._basis) - 1

    def dims(self, d):
        return len(self._basis[d]) if 0 <= d <= self.top_degree else 0

    def src(self, d, i):
        return self.vertices[0]

    def dst(self, d, i):
        return self.vertices[0]

    def mul(self, d1, i, d2, j):
        if d1 + d2 > self.top_degree:
            return ()
        out = []
        for label, coef in self._mul_fn(d1, self._basis[d1][i],
                                        d2, self._basis[d2][j]):
            out.append((self._index[d1 + d2][label], Fraction(coef)))
        return tuple(out)

    def hilbert(self):
        return tuple(self.dims(d) for d in range(self.top_degree + 1))


def sym_algebra(k, cap, vertex=0) -> SimpleGradedAlgebra:
    """Polynomial algebra on k variables truncated above degree cap."""
    basis = [sorted(itertools.combinations_with_replacement(range(k), d))
             for d in range(cap + 1)]

    def mul(d1, m1, d2, m2):
        return ((tuple(sorted(m1 + m2)), 1),)

    return SimpleGradedAlgebra(vertex, basis, mul)


def ext_algebra(k, vertex=0) -> SimpleGradedAlgebra:
    """Exterior algebra on k anticommuting generators."""
    basis = [sorted(itertools.combinations(range(k), d)) for d in range(k + 1)]

    def mul(d1, m1, d2, m2):
        if set(m1) & set(m2):
            return ()
        merged = m1 + m2
        target = tuple(sorted(merged))
        # sign of the sorting permutation
        perm = sorted(range(len(merged)), key=lambda t: merged[t])
        sign = 1
        seen = [False] * len(perm)
        for s in range(len(perm)):
            if seen[s]:
                continue
            length = 0
            t = s
            while not seen[t]:
                seen[t] = True
                t = perm[t]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return ((target, sign),)

    return SimpleGradedAlgebra(vertex, basis, mul)


class TensorGradedAlgebra:
    """Degreewise tensor product A_n (x) B_n; vertices come from A."""

    def __init__(self, a, b):
        if len(b.vertices) != 1:
            raise VertexMismatch("second factor must be connected (one vertex)")
        self.a, self.b = a, b
        self.vertices = tuple(a.vertices)
        self.top = min(a.top_degree, b.top_degree)
        while self.top > 0 and self.dims(self.top) == 0:
            self.top -= 1

    @property
    def top_degree(self):
        return self.top

    def dims(self, d):
        if d < 0 or d > self.top:
            return 0
        return self.a.dims(d) * self.b.dims(d)

    def _split(self, d, i):
        nb = self.b.dims(d)
        return divmod(i, nb)

    def src(self, d, i):
        return self.a.src(d, self._split(d, i)[0])

    def dst(self, d, i):
        return self.a.dst(d, self._split(d, i)[0])

    def mul(self, d1, i, d2, j):
        if d1 + d2 > self.top:
            return ()
        ia, ib = self._split(d1, i)
        ja, jb = self._split(d2, j)
        out = {}
        nb = self.b.dims(d1 + d2)
        for ka, ca in self.a.mul(d1, ia, d2, ja):
            for kb, cb in self.b.mul(d1, ib, d2, jb):
                k = ka * nb + kb
                out[k] = out.get(k, Q0) + ca * cb
        return tuple((k, c) for k, c in sorted(out.items()) if c)

    def hilbert(self):
        return tuple(self.dims(d) for d in range(self.top + 1))

    def dims_by_pair(self, d):
        out = {}
        for i in range(self.dims(d)):
            key = (self.src(d, i), self.dst(d, i))
            out[key] = out.get(key, 0) + 1
        return out


def segre_product(a, b) -> TensorGradedAlgebra:
    """Degreewise tensor product of a pointed algebra with a connected one."""
    return TensorGradedAlgebra(a, b)


def pi_product(a: PresentedAlgebra, b: PresentedAlgebra,
               deg_cap=8) -> PresentedAlgebra:
    """Glue two presented algebras along a common vertex set; mixed
    positive-degree products vanish."""
    if set(a.vertices) != set(b.vertices):
        raise VertexMismatch("degree-0 parts differ")
    arrows = [(("a", aid), src, dst) for aid, src, dst in a.arrows]
    arrows += [(("b", aid), src, dst) for aid, src, dst in b.arrows]
    rels = []
    for tag, alg in (("a", a), ("b", b)):
        for terms in alg.relations:
            rels.append(tuple((c, tuple((tag, aid) for aid in p))
                              for c, p in terms))
    for f_tag, f_alg, g_tag, g_alg in (("a", a, "b", b), ("b", b, "a", a)):
        for faid, fsrc, fdst in f_alg.arrows:
            for gaid, gsrc, gdst in g_alg.arrows:
                if fsrc == gdst:
                    rels.append(((Q1, ((f_tag, faid), (g_tag, gaid))),))
    return PresentedAlgebra(a.vertices, arrows, rels, deg_cap)


# ---------------------------------------------------------------------------
# minimal graded resolutions


@dataclass
class Resolution:
    vertex: object
    betti: dict = field(default_factory=dict)   # (i, degree) -> {vertex: count}
    syzygy_dims: list = field(default_factory=list)  # per step: (deg, vtx) -> dim
    finished: bool = False

    def is_linear(self):
        return all(i == d for (i, d) in self.betti)

    def betti_number(self, i, d):
        return sum(self.betti.get((i, d), {}).values())


class _Projective:
    """Direct sum of shifted vertex projectives over a protocol algebra."""

    def __init__(self, alg, summands):
        self.alg = alg
        self.summands = tuple(summands)  # (vertex, shift)
        self._basis = {}

    def basis(self, t):
        """Basis of degree t: list of (summand_idx, d, i, dst)."""
        if t in self._basis:
            return self._basis[t]
        out = []
        for s, (v, shift) in enumerate(self.summands):
            d = t - shift
            if 0 <= d <= self.alg.top_degree:
                for i in range(self.alg.dims(d)):
                    if self.alg.src(d, i) == v:
                        out.append((s, d, i, self.alg.dst(d, i)))
        self._basis[t] = out
        return out

    def max_degree(self):
        if not self.summands:
            return -1
        return max(shift for _, shift in self.summands) + self.alg.top_degree

    def act(self, t, vec, gdeg, gidx):
        """Left action of algebra element (gdeg, gidx) on a degree-t vector."""
        src_g = self.alg.src(gdeg, gidx)
        basis_t = self.basis(t)
        out_basis = {key: pos for pos, key in enumerate(
            (s, d, i) for s, d, i, _ in self.basis(t + gdeg))}
        out = [Q0] * len(out_basis)
        for pos, c in enumerate(vec):
            if not c:
                continue
            s, d, i, dst = basis_t[pos]
            if dst != src_g:
                continue
            for k, c2 in self.alg.mul(gdeg, gidx, d, i):
                out[out_basis[(s, d + gdeg, k)]] += c * c2
        return out


def minimal_resolution(alg, vertex, hom_cap=5, deg_cap=None) -> Resolution:
    """Minimal graded resolution of the vertex simple, up to hom_cap steps."""
    if vertex not in alg.vertices:
        raise VertexMismatch(f"unknown vertex {vertex!r}")
    res = Resolution(vertex)
    res.betti[(0, 0)] = {vertex: 1}
    p = _Projective(alg, [(vertex, 0)])
    # first syzygy: everything of positive degree in P^0
    kernel = {}
    for t in range(1, p.max_degree() + 1):
        basis = p.basis(t)
        vecs = []
        for pos in range(len(basis)):
            v = [Q0] * len(basis)
            v[pos] = Q1
            vecs.append(v)
        if vecs:
            kernel[t] = vecs

    arrows1 = [(alg.src(1, i), alg.dst(1, i), i) for i in range(alg.dims(1))]

    for step in range(1, hom_cap + 1):
        res.syzygy_dims.append({})
        for t in sorted(kernel):
            by_vtx = {}
            for v in kernel[t]:
                w = _dst_vertex(p, t, v)
                by_vtx[w] = by_vtx.get(w, 0) + 1
            for w, dim in sorted(by_vtx.items(), key=lambda kv: str(kv[0])):
                res.syzygy_dims[-1][(t, w)] = dim
        if not kernel:
            res.finished = True
            return res
        # minimal generators of the kernel, degree by degree
        gens = []  # (w, t, vector over P_t)
        spans = {}

        def span_at(t, w, size):
            key = (t, w)
            if key not in spans:
                spans[key] = SpanSolver(size)
            return spans[key]

        for t in sorted(kernel):
            # images of lower-degree kernel vectors under the arrows
            if t - 1 in kernel:
                for u in kernel[t - 1]:
                    for src_a, dst_a, gi in arrows1:
                        img = p.act(t - 1, u, 1, gi)
                        if any(img):
                            w = _dst_vertex(p, t, img)
                            span_at(t, w, len(img)).add(img)
            for u in kernel[t]:
                w = _dst_vertex(p, t, u)
                if span_at(t, w, len(u)).add(u):
                    gens.append((w, t, u))
        if deg_cap is not None and any(t > deg_cap for _, t, _ in gens):
            raise CapExceeded(f"syzygy generator beyond degree cap {deg_cap}")
        betti = {}
        for w, t, _ in gens:
            betti.setdefault((step, t), {}).setdefault(w, 0)
            betti[(step, t)][w] += 1
        res.betti.update(betti)
        # next projective and kernel
        pnext = _Projective(alg, [(w, t) for w, t, _ in gens])
        kernel_next = {}
        for t in range(0, pnext.max_degree() + 1):
            bnext = pnext.basis(t)
            if not bnext:
                continue
            btarget = p.basis(t)
            cols = []
            for s, d, i, dst in bnext:
                shift, gvec = gens[s][1], gens[s][2]
                img = p.act(shift, gvec, d, i) if d > 0 else list(gvec)
                cols.append(img)
            if not btarget:
                mat = [[Q0] * len(bnext)]
            else:
                mat = [[cols[j][r] for j in range(len(bnext))]
                       for r in range(len(btarget))]
            null = nullspace(mat)
            if null:
                kernel_next[t] = null
        p = pnext
        kernel = kernel_next
    res.finished = not kernel
    return res


def _dst_vertex(p, t, vec):
    basis = p.basis(t)
    w = None
    for pos, c in enumerate(vec):
        if c:
            if w is None:
                w = basis[pos][3]
            elif w != basis[pos][3]:
                raise AssertionError("kernel vector mixes vertex components")
    return w


def koszul_check(alg, hom_cap=5):
    """True iff every vertex simple has a linear resolution up to hom_cap."""
    tables = {}
    ok = True
    for v in alg.vertices:
        res = minimal_resolution(alg, v, hom_cap)
        tables[v] = res
        ok = ok and res.is_linear()
    return ok, tables
