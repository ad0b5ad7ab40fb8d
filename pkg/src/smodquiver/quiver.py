"""Assembly of the module-category quiver with quadratic relations.

Pipeline: JordanSpec -> LieDatum -> radical groups -> colored quiver ->
block classification -> relation templates -> QuiverReport.

Conventions:
  * vertices are colored by summand index, sorted by (color, catalog order);
  * one thick arrow per (radical group, direction), carrying the multiplicity
    space dimension; thin arrows expand W-indices and are sorted by
    (group, w_index, src, dst);
  * a product (f, g) in a relation means the path "g then f"; every relation
    is homogeneous of path length 2;
  * arrow direction: j -> k whenever the half simple at k occurs in the
    restriction of (L_j (x) group module), matching the block shape tables
    emitted by the blocks command.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import catalog, jordan, tkk
from .catalog import SL2


@dataclass(frozen=True)
class Vertex:
    vid: int
    color: int
    label: str


@dataclass(frozen=True)
class ThickArrow:
    aid: int
    src: int
    dst: int
    group: int
    w_dim: int


@dataclass(frozen=True)
class ThinArrow:
    tid: int
    src: int
    dst: int
    group: int
    w_index: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple       # thick
    thin: tuple         # expanded, deterministic order

    def vertex(self, vid):
        return self.vertices[vid]


@dataclass(frozen=True)
class RadicalGroup:
    index: int
    support: tuple
    labels: tuple
    w_dim: int
    rtype: str            # "I" | "II"
    singular: bool
    parity: str           # normative (table-based) parity of the base module
    engine_parity: str    # classical parity per the character engine
    inert: bool = False


@dataclass(frozen=True)
class Relation:
    terms: tuple  # ((Fraction coef, (tid_outer, tid_inner)), ...)

    @property
    def is_monomial(self):
        return len(self.terms) == 1


@dataclass(frozen=True)
class Block:
    kind: str             # ZeroRelations | A1_SegreSym | A1_SegreAlt | A2_Segre
    #                       | CliffordOdd | CliffordEven
    groups: tuple         # radical group indices
    vertices: tuple       # vertex ids touched by the block's arrows
    thin_ids: tuple
    relations: tuple
    isolated: int         # number of quiver vertices outside the block
    descriptor: str = ""
    notes: tuple = ()


@dataclass(frozen=True)
class QuiverReport:
    schema_version: int
    spec: dict
    summands: tuple       # printable kind names
    groups: tuple         # RadicalGroup
    quiver: Quiver
    blocks: tuple
    relations: tuple      # global: all block relations plus cross-block zeros
    wild: bool
    centext_pairs: tuple  # ((q, q2), dim) sorted
    centext_total: int
    notes: tuple


class AssemblyError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# radical groups


def group_radical(datum: tkk.LieDatum):
    """Radical entries with singularity and form parity attached."""
    half = Fraction(1, 2)
    groups = []
    for q, e in enumerate(datum.radical):
        kinds = [datum.summands[i] for i in e.support]
        if e.is_tensor:
            halves = [catalog.graded_piece_dim(k, l, half)
                      for k, l in zip(kinds, e.labels)]
            singular = all(h == 1 for h in halves)
            forms = [catalog.duality_form(k, l) for k, l in zip(kinds, e.labels)]
            if all(f.dual == l for f, l in zip(forms, e.labels)):
                parity = _parity_product(forms[0].parity, forms[1].parity)
            else:
                parity = "none"
            eng = [catalog.classical_parity(k, l) for k, l in zip(kinds, e.labels)]
            engine_parity = (_parity_product(eng[0], eng[1])
                             if "none" not in eng else "none")
        else:
            kind, label = kinds[0], e.labels[0]
            if kind.series == "e7":
                singular = False
            else:
                singular = catalog.graded_piece_dim(kind, label, Fraction(1)) == 1
            if catalog.dual_label(kind, label) == label:
                parity = engine_parity = catalog.classical_parity(kind, label)
            else:
                parity = engine_parity = "none"
        groups.append(RadicalGroup(q, e.support, e.labels, e.w_dim,
                                   "I" if e.is_tensor else "II",
                                   singular, parity, engine_parity))
    return groups


def _parity_product(p1, p2):
    if "none" in (p1, p2):
        return "none"
    return "symmetric" if p1 == p2 else "skew"


# ---------------------------------------------------------------------------
# vertices and arrows


def arrows_of(datum: tkk.LieDatum, groups):
    """Colored quiver: half simples per summand, one thick arrow per
    (group, direction)."""
    vertices = []
    vid_of = {}
    for color, kind in enumerate(datum.summands):
        for lab in catalog.s_half_simples(kind):
            v = Vertex(len(vertices), color, lab.name)
            vertices.append(v)
            vid_of[(color, lab.name)] = v.vid

    arrows = []
    inert = set()
    for g in groups:
        endpoints = []
        if g.rtype == "I":
            (i, j) = g.support
            (la, lb) = g.labels
            ki, kj = datum.summands[i], datum.summands[j]
            endpoints = [
                (vid_of[(i, catalog.dual_label(ki, la))], vid_of[(j, lb)]),
                (vid_of[(j, catalog.dual_label(kj, lb))], vid_of[(i, la)]),
            ]
        else:
            i = g.support[0]
            kind = datum.summands[i]
            if kind.series != "e7":
                for lab in catalog.s_half_simples(kind):
                    res = catalog.restrict_s(kind, lab.name, g.labels[0])
                    targets = sorted(t for t in res if t != "tr")
                    assert len(targets) <= 1, "restriction is multiplicity free"
                    for t in targets:
                        assert res[t] == 1
                        endpoints.append((vid_of[(i, lab.name)], vid_of[(i, t)]))
        if not endpoints:
            inert.add(g.index)
        for src, dst in sorted(endpoints):
            arrows.append((g.index, src, dst, g.w_dim))

    arrows.sort()
    thick = tuple(ThickArrow(aid, src, dst, grp, w)
                  for aid, (grp, src, dst, w) in enumerate(arrows))
    thin_sorted = sorted((a.group, wi, a.src, a.dst, a.aid)
                         for a in thick for wi in range(a.w_dim))
    thin = tuple(ThinArrow(tid, src, dst, grp, wi)
                 for tid, (grp, wi, src, dst, _) in enumerate(thin_sorted))
    new_groups = [g if g.index not in inert else
                  RadicalGroup(g.index, g.support, g.labels, g.w_dim, g.rtype,
                               g.singular, g.parity, g.engine_parity, True)
                  for g in groups]
    return Quiver(tuple(vertices), thick, thin), new_groups


# ---------------------------------------------------------------------------
# block classification


def classify_block(datum, groups, q):
    """Block kind of group q, plus the participating group indices."""
    g = groups[q]
    kinds = [datum.summands[i] for i in g.support]
    if g.rtype == "I":
        sl2_sides = [t for t in range(2) if kinds[t] == SL2]
        if len(sl2_sides) == 2:
            return "CliffordEven", (q,)
        if len(sl2_sides) == 1:
            s_side = 1 - sl2_sides[0]
            skind, sname = kinds[s_side], g.labels[s_side]
            form = catalog.duality_form(skind, sname)
            if form.dual == sname:
                kind = "A1_SegreSym" if form.parity == "symmetric" else "A1_SegreAlt"
                return kind, (q,)
            dual_labels = tuple(catalog.dual_label(k, l)
                                for k, l in zip(kinds, g.labels))
            for g2 in groups:
                if (g2.index != q and g2.rtype == "I"
                        and g2.support == g.support and g2.labels == dual_labels):
                    return "A2_Segre", tuple(sorted((q, g2.index)))
        return "ZeroRelations", (q,)
    kind = kinds[0]
    if g.singular and kind.series in ("so2", "sl2"):
        odd = kind == SL2 or kind.size % 2 == 1
        return ("CliffordOdd" if odd else "CliffordEven"), (q,)
    return "ZeroRelations", (q,)


# ---------------------------------------------------------------------------
# relation templates


def relations_of(block_kind, w_dims):
    """Quadratic relation templates over symbolic arrows (family, w_index).

    A term (coef, ((f, i), (g, j))) stands for coef * (f_i composed after
    g_j).  Families: A1 -> alpha: [L]->[S], beta: [S]->[L]; A2 -> alpha:
    [S*]->[L] and delta: [L]->[S] over W, beta: [L]->[S*] and gamma:
    [S]->[L] over W'; CliffordOdd -> loops ell; CliffordEven -> a: v+ -> v-,
    b: v- -> v+.  ZeroRelations yields the marker "all-zero".
    """
    one = Fraction(1)
    rels = []
    if block_kind == "ZeroRelations":
        return "all-zero"
    if block_kind in ("A1_SegreSym", "A1_SegreAlt"):
        k = w_dims[0]
        for i in range(k):
            for j in range(k):
                rels.append(((one, (("alpha", i), ("beta", j))),))
        if block_kind == "A1_SegreSym":
            for i in range(k):
                for j in range(i + 1, k):
                    rels.append(((one, (("beta", i), ("alpha", j))),
                                 (-one, (("beta", j), ("alpha", i)))))
        else:
            for i in range(k):
                rels.append(((one, (("beta", i), ("alpha", i))),))
                for j in range(i + 1, k):
                    rels.append(((one, (("beta", i), ("alpha", j))),
                                 (one, (("beta", j), ("alpha", i)))))
        return tuple(rels)
    if block_kind == "A2_Segre":
        k, l = w_dims
        for j in range(l):
            for i in range(k):
                rels.append(((one, (("beta", j), ("alpha", i))),))
                rels.append(((one, (("delta", i), ("gamma", j))),))
            for j2 in range(l):
                rels.append(((one, (("beta", j), ("gamma", j2))),))
        for i in range(k):
            for i2 in range(k):
                rels.append(((one, (("delta", i), ("alpha", i2))),))
        for i in range(k):
            for j in range(l):
                rels.append(((one, (("alpha", i), ("beta", j))),
                             (-one, (("gamma", j), ("delta", i)))))
        return tuple(rels)
    if block_kind == "CliffordOdd":
        k = w_dims[0]
        for i in range(k):
            rels.append(((one, (("ell", i), ("ell", i))),))
            for j in range(i + 1, k):
                rels.append(((one, (("ell", i), ("ell", j))),
                             (-one, (("ell", j), ("ell", i)))))
        return tuple(rels)
    if block_kind == "CliffordEven":
        k = w_dims[0]
        for i in range(k):
            rels.append(((one, (("a", i), ("b", i))),))
            rels.append(((one, (("b", i), ("a", i))),))
            for j in range(i + 1, k):
                rels.append(((one, (("a", i), ("b", j))),
                             (one, (("a", j), ("b", i)))))
                rels.append(((one, (("b", i), ("a", j))),
                             (one, (("b", j), ("a", i)))))
        return tuple(rels)
    raise ValueError(f"unknown block kind {block_kind!r}")


def wildness_flag(groups) -> bool:
    """True iff some radical isomorphism class has multiplicity >= 3."""
    return any(g.w_dim >= 3 for g in groups)


# ---------------------------------------------------------------------------
# binding templates to actual arrows


def _thin_by_thick(quiver):
    out = {}
    for t in quiver.thin:
        # thin arrows of one thick arrow share (group, src, dst)
        out.setdefault((t.group, t.src, t.dst), []).append(t.tid)
    for v in out.values():
        v.sort()
    return out


def _bind_block(datum, groups, quiver, kind, qidx, thin_map):
    """Instantiate the relation template on the block's thin arrows."""
    gs = [groups[q] for q in qidx]
    thick = [a for a in quiver.arrows if a.group in qidx]
    thin_ids = sorted(t.tid for t in quiver.thin if t.group in qidx)
    families = {}
    if kind in ("A1_SegreSym", "A1_SegreAlt"):
        g = gs[0]
        sl2_color = next(i for i in g.support if datum.summands[i] == SL2)
        lvid = next(v.vid for v in quiver.vertices
                    if v.color == sl2_color and v.label == "L")
        for a in thick:
            fam = "alpha" if a.src == lvid else "beta"
            families[fam] = thin_map[(a.group, a.src, a.dst)]
    elif kind == "A2_Segre":
        gw, gwp = gs
        sl2_color = next(i for i in gw.support if datum.summands[i] == SL2)
        lvid = next(v.vid for v in quiver.vertices
                    if v.color == sl2_color and v.label == "L")
        for a in thick:
            if a.group == gw.index:
                fam = "delta" if a.src == lvid else "alpha"
            else:
                fam = "beta" if a.src == lvid else "gamma"
            families[fam] = thin_map[(a.group, a.src, a.dst)]
    elif kind == "CliffordOdd":
        a = thick[0]
        families["ell"] = thin_map[(a.group, a.src, a.dst)]
    elif kind == "CliffordEven":
        vplus = min(a.src for a in thick)
        for a in thick:
            fam = "a" if a.src == vplus else "b"
            families[fam] = thin_map[(a.group, a.src, a.dst)]

    template = relations_of(kind, tuple(g.w_dim for g in gs))
    rels = []
    if template == "all-zero":
        rels = _zero_relations(quiver, thin_ids, thin_ids)
    else:
        for rel in template:
            terms = tuple((coef, (families[f][i], families[g][j]))
                          for coef, ((f, i), (g, j)) in rel)
            rels.append(Relation(terms))
    vertex_ids = tuple(sorted({a.src for a in thick} | {a.dst for a in thick}))
    return vertex_ids, tuple(thin_ids), tuple(rels)


def _zero_relations(quiver, outer_ids, inner_ids):
    """One monomial relation per composable (outer after inner) pair."""
    thin = {t.tid: t for t in quiver.thin}
    rels = []
    for y in inner_ids:
        for x in outer_ids:
            if thin[x].src == thin[y].dst:
                rels.append(Relation(((Fraction(1), (x, y)),)))
    return rels


# ---------------------------------------------------------------------------
# full pipeline


def _kind_class(kind):
    if kind.series in ("sl2", "sp", "so1"):
        return "A"
    if kind.series == "so2" and kind.size % 2 == 1:
        return "A"
    if kind.series == "sl":
        return "B"
    if kind.series == "so2" and kind.size % 4 == 2:
        return "B"
    if kind.series == "so2":
        return "C"
    return "?"


def _descriptor(datum, groups, kind, qidx):
    g = groups[qidx[0]]
    kinds = [datum.summands[i] for i in g.support]
    if g.rtype == "II":
        if g.inert:
            return "inert component"
        cls = _kind_class(kinds[0])
        label = g.labels[0]
        if cls == "A":
            return "Table1:row1 (loop)"
        if label == "ad" and kinds[0].series == "sl":
            return "Table1:row2 (two loops)"
        if label.startswith("LrV("):
            r = int(label[4:-1])
            return ("Table1:row2 (two loops)" if r % 2 == 0
                    else "Table1:row3 (2-cycle)")
        if label.startswith("Lambda"):
            return ("Table1:row4 (loop + isolated)" if cls == "C"
                    else "Table1:row5 (single arrow)")
        return "Table1:row5 (single arrow)"
    if kind == "A2_Segre":
        return "A2 block (dual-pair quotient)"
    if kind == "CliffordEven" and len(kinds) == 2:
        return "so(4) alias Clifford block"
    classes = tuple(sorted(_kind_class(k) for k in kinds))
    row = {("A", "A"): 1, ("A", "B"): 2, ("A", "C"): 3,
           ("B", "B"): 4, ("B", "C"): 5, ("C", "C"): 6}.get(classes)
    return f"Table2:row{row}" if row else ""


def assemble(spec: jordan.JordanSpec) -> QuiverReport:
    """Full pipeline from a JordanSpec to the quiver-with-relations report."""
    report = jordan.validate_spec(spec)
    if not report.ok:
        raise jordan.SpecError(report)
    spec = jordan.unitalize(spec)
    datum = tkk.lie_datum_of_spec(spec)
    groups = group_radical(datum)
    quiver, groups = arrows_of(datum, groups)
    thin_map = _thin_by_thick(quiver)

    notes = []
    blocks = []
    claimed = set()
    total_vertices = len(quiver.vertices)
    for g in groups:
        if g.index in claimed:
            continue
        kind, qidx = classify_block(datum, groups, g.index)
        claimed.update(qidx)
        vertex_ids, thin_ids, rels = _bind_block(
            datum, groups, quiver, kind, qidx, thin_map)
        bnotes = []
        if g.inert:
            bnotes.append(f"group {g.index} ({'/'.join(g.labels)}) induces no "
                          "arrows; retained as inert")
        if kind in ("A1_SegreSym", "A1_SegreAlt"):
            s_side = next(t for t in range(2)
                          if datum.summands[g.support[t]] != SL2)
            skind = datum.summands[g.support[s_side]]
            sname = g.labels[s_side]
            table = catalog.duality_form(skind, sname).parity
            engine = catalog.classical_parity(skind, sname)
            if table != engine:
                bnotes.append(
                    f"classification used table parity '{table}' for "
                    f"({skind},{sname}); character engine computes '{engine}'")
        if kind == "CliffordEven":
            bnotes.append("relations use the alternating pairing of the "
                          "graded exterior algebra; the diagonal-pairing "
                          "variant of this block is the same algebra in a "
                          "different arrow basis, except for its "
                          "inconsistent gamma*delta item")
        blocks.append(Block(kind, tuple(qidx), vertex_ids, thin_ids, rels,
                            total_vertices - len(vertex_ids),
                            _descriptor(datum, groups, kind, qidx),
                            tuple(bnotes)))
        notes.extend(bnotes)

    all_rels = []
    for b in blocks:
        all_rels.extend(b.relations)
    # cross-block compositions vanish
    for b1 in blocks:
        for b2 in blocks:
            if b1 is not b2:
                all_rels.extend(_zero_relations(quiver, b1.thin_ids, b2.thin_ids))

    cent = tkk.central_extension_dim(datum)
    return QuiverReport(
        schema_version=1,
        spec=jordan.spec_to_dict(spec),
        summands=tuple(str(k) for k in datum.summands),
        groups=tuple(groups),
        quiver=quiver,
        blocks=tuple(blocks),
        relations=tuple(all_rels),
        wild=wildness_flag(groups),
        centext_pairs=tuple(sorted(cent.pair_dims.items())),
        centext_total=cent.total,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# serialization


def report_to_dict(rep: QuiverReport) -> dict:
    def rel(r):
        return [{"coef": str(c), "path": list(p)} for c, p in r.terms]

    return {
        "schemaVersion": rep.schema_version,
        "spec": rep.spec,
        "summands": list(rep.summands),
        "groups": [{"index": g.index, "support": list(g.support),
                    "labels": list(g.labels), "wDim": g.w_dim,
                    "type": g.rtype, "singular": g.singular,
                    "parity": g.parity, "engineParity": g.engine_parity,
                    "inert": g.inert} for g in rep.groups],
        "vertices": [{"id": v.vid, "color": v.color, "label": v.label}
                     for v in rep.quiver.vertices],
        "arrows": [{"id": a.aid, "src": a.src, "dst": a.dst,
                    "group": a.group, "wDim": a.w_dim}
                   for a in rep.quiver.arrows],
        "thinArrows": [{"id": t.tid, "src": t.src, "dst": t.dst,
                        "group": t.group, "wIndex": t.w_index}
                       for t in rep.quiver.thin],
        "blocks": [{"kind": b.kind, "groups": list(b.groups),
                    "vertices": list(b.vertices),
                    "thinArrows": list(b.thin_ids),
                    "relations": [rel(r) for r in b.relations],
                    "isolated": b.isolated,
                    "descriptor": b.descriptor,
                    "notes": list(b.notes)} for b in rep.blocks],
        "relations": [rel(r) for r in rep.relations],
        "wild": rep.wild,
        "centext": {"pairs": [{"groups": list(k), "dim": v}
                              for k, v in rep.centext_pairs],
                    "total": rep.centext_total},
        "notes": list(rep.notes),
    }


def report_from_dict(data: dict) -> QuiverReport:
    def rel(terms):
        return Relation(tuple((Fraction(t["coef"]), tuple(t["path"]))
                              for t in terms))

    vertices = tuple(Vertex(v["id"], v["color"], v["label"])
                     for v in data["vertices"])
    arrows = tuple(ThickArrow(a["id"], a["src"], a["dst"], a["group"], a["wDim"])
                   for a in data["arrows"])
    thin = tuple(ThinArrow(t["id"], t["src"], t["dst"], t["group"], t["wIndex"])
                 for t in data["thinArrows"])
    groups = tuple(RadicalGroup(g["index"], tuple(g["support"]),
                                tuple(g["labels"]), g["wDim"], g["type"],
                                g["singular"], g["parity"], g["engineParity"],
                                g["inert"]) for g in data["groups"])
    blocks = tuple(Block(b["kind"], tuple(b["groups"]), tuple(b["vertices"]),
                         tuple(b["thinArrows"]),
                         tuple(rel(r) for r in b["relations"]),
                         b["isolated"], b["descriptor"], tuple(b["notes"]))
                   for b in data["blocks"])
    return QuiverReport(
        schema_version=data["schemaVersion"],
        spec=data["spec"],
        summands=tuple(data["summands"]),
        groups=groups,
        quiver=Quiver(vertices, arrows, thin),
        blocks=blocks,
        relations=tuple(rel(r) for r in data["relations"]),
        wild=data["wild"],
        centext_pairs=tuple((tuple(p["groups"]), p["dim"])
                            for p in data["centext"]["pairs"]),
        centext_total=data["centext"]["total"],
        notes=tuple(data["notes"]),
    )
