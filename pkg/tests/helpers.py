"""Shared builders for the test suite."""

from fractions import Fraction

from smodquiver import pathalg as P
from smodquiver import quiver as Q

ONE = Fraction(1)


def lam(k):
    """Exterior algebra on k generators, presented on one vertex."""
    arrows = [(i, 0, 0) for i in range(k)]
    rels = [[(ONE, (i, i))] for i in range(k)]
    rels += [[(ONE, (i, j)), (ONE, (j, i))]
             for i in range(k) for j in range(i + 1, k)]
    return P.PresentedAlgebra([0], arrows, rels)


def template_algebra(kind, wdims):
    """Instantiate a relation template on a concrete quiver.

    Vertex conventions: A1/CliffordEven use 0 = [L]/[v+], 1 = [S]/[v-];
    A2 uses 0 = [L], 1 = [S], 2 = [S*].
    """
    k = wdims[0]
    if kind in ("A1_SegreSym", "A1_SegreAlt"):
        arrows = [(i, 0, 1) for i in range(k)] + [(k + i, 1, 0) for i in range(k)]
        fam = {"alpha": list(range(k)), "beta": [k + i for i in range(k)]}
        verts = [0, 1]
    elif kind == "CliffordOdd":
        arrows = [(i, 0, 0) for i in range(k)]
        fam = {"ell": list(range(k))}
        verts = [0]
    elif kind == "CliffordEven":
        arrows = [(i, 0, 1) for i in range(k)] + [(k + i, 1, 0) for i in range(k)]
        fam = {"a": list(range(k)), "b": [k + i for i in range(k)]}
        verts = [0, 1]
    elif kind == "A2_Segre":
        k, l = wdims
        arrows = ([(i, 2, 0) for i in range(k)]                 # alpha: S* -> L
                  + [(k + i, 0, 1) for i in range(k)]           # delta: L -> S
                  + [(2 * k + j, 0, 2) for j in range(l)]       # beta: L -> S*
                  + [(2 * k + l + j, 1, 0) for j in range(l)])  # gamma: S -> L
        fam = {"alpha": list(range(k)),
               "delta": [k + i for i in range(k)],
               "beta": [2 * k + j for j in range(l)],
               "gamma": [2 * k + l + j for j in range(l)]}
        verts = [0, 1, 2]
    else:
        raise ValueError(kind)
    rels = []
    for rel in Q.relations_of(kind, tuple(wdims)):
        rels.append([(c, (fam[f][i], fam[g][j]))
                     for c, ((f, i), (g, j)) in rel])
    return P.PresentedAlgebra(verts, arrows, rels)
