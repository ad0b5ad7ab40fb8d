"""Exact character computations for the classical root systems A, B, C, D.

Conventions:
  * weights live in the standard epsilon-basis and are stored as tuples of
    *doubled* integers, so spin weights like (1/2,...,1/2) stay integral;
  * the A family uses gl-style coordinates of length rank+1 (non-increasing
    integer tuples); dominant labels are normalized to have minimum entry 0,
    while intermediate tensor bookkeeping keeps the ambient level;
  * inner products of doubled vectors are 4x the true value (`ip4`).

The engine is exact end to end: dimensions via the Weyl product formula,
weight multiplicities via Freudenthal's recursion over the dominant cone,
tensor products via iterated leading-term subtraction.

Everything here is a pure function of its arguments; the lru_cache memo
tables are internally locked, so concurrent callers see identical results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# ---------------------------------------------------------------------------
# systems


class NotDominant(ValueError):
    pass


class NonDecomposable(RuntimeError):
    """Internal consistency failure during character subtraction."""


class CharacterTooLarge(RuntimeError):
    """Product character exceeded the configured feasibility bound."""


MAX_CHARACTER_POINTS = 10 ** 6


@dataclass(frozen=True)
class RootSystem:
    family: str  # one of "A", "B", "C", "D"
    rank: int

    def __post_init__(self):
        if self.family not in "ABCD":
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.family == "D" and self.rank < 2:
            raise ValueError("D requires rank >= 2")

    @property
    def ambient(self):
        return self.rank + 1 if self.family == "A" else self.rank


@dataclass(frozen=True)
class CompositeSystem:
    """Orthogonal direct sum of root systems; weights are concatenations."""

    components: tuple

    @property
    def ambient(self):
        return sum(c.ambient for c in self.components)

    def split(self, w):
        parts = []
        pos = 0
        for c in self.components:
            parts.append(tuple(w[pos:pos + c.ambient]))
            pos += c.ambient
        return parts


def composite(*systems):
    return CompositeSystem(tuple(systems))


def _join(parts):
    out = []
    for p in parts:
        out.extend(p)
    return tuple(out)


# ---------------------------------------------------------------------------
# roots, rho, dominance


def ip4(v, w):
    """Integer inner product of doubled vectors; equals 4*(v,w)."""
    return sum(a * b for a, b in zip(v, w))


def _embed(vec, offset, total):
    out = [0] * total
    for i, x in enumerate(vec):
        out[offset + i] = x
    return tuple(out)


@lru_cache(maxsize=None)
def positive_roots(sys):
    if isinstance(sys, CompositeSystem):
        roots = []
        pos = 0
        for c in sys.components:
            roots.extend(_embed(a, pos, sys.ambient) for a in positive_roots(c))
            pos += c.ambient
        return tuple(roots)
    n = sys.ambient
    roots = []

    def e(i, c=2):
        v = [0] * n
        v[i] = c
        return v

    for i in range(n):
        for j in range(i + 1, n):
            v = e(i)
            v[j] = -2
            roots.append(tuple(v))
            if sys.family in "BCD":
                v = e(i)
                v[j] = 2
                roots.append(tuple(v))
    if sys.family == "B":
        roots.extend(tuple(e(i)) for i in range(n))
    elif sys.family == "C":
        roots.extend(tuple(e(i, 4)) for i in range(n))
    return tuple(roots)


@lru_cache(maxsize=None)
def simple_roots(sys):
    if isinstance(sys, CompositeSystem):
        roots = []
        pos = 0
        for c in sys.components:
            roots.extend(_embed(a, pos, sys.ambient) for a in simple_roots(c))
            pos += c.ambient
        return tuple(roots)
    n = sys.ambient
    roots = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 2, -2
        roots.append(tuple(v))
    v = [0] * n
    if sys.family == "B":
        v[n - 1] = 2
        roots.append(tuple(v))
    elif sys.family == "C":
        v[n - 1] = 4
        roots.append(tuple(v))
    elif sys.family == "D":
        v[n - 2], v[n - 1] = 2, 2
        roots.append(tuple(v))
    return tuple(roots)


@lru_cache(maxsize=None)
def rho2(sys):
    """The Weyl vector, doubled."""
    if isinstance(sys, CompositeSystem):
        return _join([rho2(c) for c in sys.components])
    r = sys.rank
    if sys.family == "A":
        return tuple(2 * (r - i) for i in range(r + 1))
    if sys.family == "B":
        return tuple(2 * (r - i) - 1 for i in range(r))
    if sys.family == "C":
        return tuple(2 * (r - i) for i in range(r))
    return tuple(2 * (r - i) - 2 for i in range(r))


def is_dominant(sys, w):
    if isinstance(sys, CompositeSystem):
        return all(is_dominant(c, p) for c, p in zip(sys.components, sys.split(w)))
    fam = sys.family
    if fam == "A":
        return all(w[i] >= w[i + 1] for i in range(len(w) - 1))
    if fam in "BC":
        return all(w[i] >= w[i + 1] for i in range(len(w) - 1)) and w[-1] >= 0
    return all(w[i] >= w[i + 1] for i in range(len(w) - 2)) and w[-2] >= abs(w[-1])


def dominantize(sys, w):
    """Dominant representative of the Weyl orbit of w."""
    if isinstance(sys, CompositeSystem):
        return _join([dominantize(c, p) for c, p in zip(sys.components, sys.split(w))])
    fam = sys.family
    if fam == "A":
        return tuple(sorted(w, reverse=True))
    if fam in "BC":
        return tuple(sorted((abs(x) for x in w), reverse=True))
    mags = sorted((abs(x) for x in w), reverse=True)
    negs = sum(1 for x in w if x < 0)
    if negs % 2 == 1 and all(x != 0 for x in w):
        mags[-1] = -mags[-1]
    return tuple(mags)


def normalize_dominant(sys, w):
    """Shift A-components so the minimum entry is 0 (labels, not levels)."""
    if isinstance(sys, CompositeSystem):
        return _join([normalize_dominant(c, p)
                      for c, p in zip(sys.components, sys.split(w))])
    if sys.family == "A":
        m = min(w)
        return tuple(x - m for x in w)
    return tuple(w)


def is_trivial_weight(sys, w):
    return all(x == 0 for x in normalize_dominant(sys, w))


def dual_weight(sys, lam):
    """Highest weight of the dual module, -w0(lam), as a normalized label."""
    if isinstance(sys, CompositeSystem):
        return _join([dual_weight(c, p) for c, p in zip(sys.components, sys.split(lam))])
    if not is_dominant(sys, lam):
        raise NotDominant(lam)
    fam = sys.family
    if fam == "A":
        return normalize_dominant(sys, tuple(-x for x in reversed(lam)))
    if fam in "BC" or sys.rank % 2 == 0:
        return tuple(lam)
    return tuple(lam[:-1]) + (-lam[-1],)


def root_coords(sys, v):
    """Coordinates of doubled vector v in the simple roots (true values).

    Returns a list of Fractions, or None if v is outside the root-lattice
    span (for A: nonzero level).
    """
    if isinstance(sys, CompositeSystem):
        out = []
        for c, p in zip(sys.components, sys.split(v)):
            sub = root_coords(c, p)
            if sub is None:
                return None
            out.extend(sub)
        return out
    fam = sys.family
    p2 = list(itertools.accumulate(v))
    if fam == "A":
        if p2[-1] != 0:
            return None
        return [Fraction(x, 2) for x in p2[:-1]]
    if fam == "B":
        return [Fraction(x, 2) for x in p2]
    if fam == "C":
        return [Fraction(x, 2) for x in p2[:-1]] + [Fraction(p2[-1], 4)]
    head = [Fraction(x, 2) for x in p2[:-2]]
    pm1, vr = p2[-2], v[-1]
    return head + [Fraction(pm1 - vr, 4), Fraction(pm1 + vr, 4)]


def in_positive_root_cone(sys, v):
    """True iff v is a nonnegative integer combination of simple roots."""
    coords = root_coords(sys, v)
    if coords is None:
        return False
    return all(c >= 0 and c.denominator == 1 for c in coords)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# dimensions and multiplicities


def weyl_dim(sys, lam):
    """Dimension of the irreducible with highest weight lam (doubled)."""
    if not is_dominant(sys, lam):
        raise NotDominant(lam)
    if isinstance(sys, CompositeSystem):
        out = 1
        for c, p in zip(sys.components, sys.split(lam)):
            out *= weyl_dim(c, p)
        return out
    lr = _add(lam, rho2(sys))
    r2 = rho2(sys)
    d = Fraction(1)
    for a in positive_roots(sys):
        d *= Fraction(ip4(lr, a), ip4(r2, a))
    assert d.denominator == 1 and d > 0
    return int(d)


def _orbit(sys, w):
    """Full Weyl orbit of a doubled weight, as a set of tuples."""
    if isinstance(sys, CompositeSystem):
        parts = [sorted(_orbit(c, p)) for c, p in zip(sys.components, sys.split(w))]
        return {_join(combo) for combo in itertools.product(*parts)}
    fam = sys.family
    perms = set(itertools.permutations(w))
    if fam == "A":
        return perms
    orbit = set()
    has_zero = any(x == 0 for x in w)
    for p in perms:
        choices = [(x,) if x == 0 else (x, -x) for x in p]
        for signed in itertools.product(*choices):
            if fam == "D" and not has_zero:
                if sum(1 for x in signed if x < 0) % 2 == sum(1 for x in w if x < 0) % 2:
                    orbit.add(signed)
            else:
                orbit.add(signed)
    return orbit


def _weight_set(sys, lam):
    """All weights of the irreducible V_lam, by saturation BFS from lam."""
    simples = simple_roots(sys)
    seen = {lam}
    queue = [lam]
    while queue:
        nu = queue.pop()
        for a in simples:
            mu = _sub(nu, a)
            if mu in seen:
                continue
            if in_positive_root_cone(sys, _sub(lam, dominantize(sys, mu))):
                seen.add(mu)
                queue.append(mu)
    return seen


@lru_cache(maxsize=None)
def dominant_character(sys, lam):
    """Multiplicities of the dominant weights of V_lam (Freudenthal)."""
    if not is_dominant(sys, lam):
        raise NotDominant(lam)
    if isinstance(sys, CompositeSystem):
        parts = [dominant_character(c, p).items()
                 for c, p in zip(sys.components, sys.split(lam))]
        out = {}
        for combo in itertools.product(*parts):
            out[_join([w for w, _ in combo])] = _prod(m for _, m in combo)
        return out
    weights = _weight_set(sys, lam)
    doms = sorted((w for w in weights if is_dominant(sys, w)),
                  key=lambda w: (-ip4(w, rho2(sys)), w))
    r2 = rho2(sys)
    lr = _add(lam, r2)
    nlam = ip4(lr, lr)
    mult = {lam: 1}
    for mu in doms:
        if mu == lam:
            continue
        mr = _add(mu, r2)
        denom = nlam - ip4(mr, mr)
        acc = 0
        for a in positive_roots(sys):
            nu = _add(mu, a)
            while nu in weights:
                acc += mult[dominantize(sys, nu)] * ip4(nu, a)
                nu = _add(nu, a)
        val = Fraction(2 * acc, denom)
        assert val.denominator == 1 and val > 0
        mult[mu] = int(val)
    total = sum(m * len(_orbit(sys, w)) for w, m in mult.items())
    assert total == weyl_dim(sys, lam), "Freudenthal mass check failed"
    return mult


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


@lru_cache(maxsize=None)
def _full_character(sys, lam):
    out = {}
    for w, m in dominant_character(sys, lam).items():
        for v in _orbit(sys, w):
            out[v] = m
    return out


# ---------------------------------------------------------------------------
# characters as data


@dataclass
class Character:
    """Finite weight multiset with positive integer multiplicities."""

    system: object
    mults: dict

    def mass(self):
        return sum(self.mults.values())

    def copy(self):
        return Character(self.system, dict(self.mults))


def weight_multiplicities(sys, lam):
    """Character of the irreducible with highest weight lam."""
    return Character(sys, dict(_full_character(sys, lam)))


def char_product(c1: Character, c2: Character) -> Character:
    if c1.system != c2.system:
        raise ValueError("characters live over different systems")
    if len(c1.mults) * len(c2.mults) > MAX_CHARACTER_POINTS:
        raise CharacterTooLarge(
            f"{len(c1.mults)} x {len(c2.mults)} weight points")
    acc = {}
    for w1, m1 in c1.mults.items():
        for w2, m2 in c2.mults.items():
            w = _add(w1, w2)
            acc[w] = acc.get(w, 0) + m1 * m2
    return Character(c1.system, acc)


def char_sum(chars):
    chars = list(chars)
    if not chars:
        raise ValueError("empty sum")
    sys = chars[0].system
    acc = {}
    for c in chars:
        if c.system != sys:
            raise ValueError("characters live over different systems")
        for w, m in c.mults.items():
            acc[w] = acc.get(w, 0) + m
    return Character(sys, acc)


def char_scale(c: Character, k: int) -> Character:
    return Character(c.system, {w: k * m for w, m in c.mults.items()})


def decompose_character(c: Character):
    """Decompose into irreducibles by iterated leading-term subtraction.

    Returns {normalized dominant weight: multiplicity}.
    """
    sys = c.system
    rem = dict(c.mults)
    r2 = rho2(sys)
    out = {}
    while rem:
        top = max(rem, key=lambda w: (ip4(w, r2), w))
        if not is_dominant(sys, top) or rem[top] < 0:
            raise NonDecomposable(f"leading term {top} -> {rem.get(top)}")
        m = rem[top]
        out[normalize_dominant(sys, top)] = out.get(normalize_dominant(sys, top), 0) + m
        for w, k in _full_character(sys, top).items():
            nv = rem.get(w, 0) - m * k
            if nv < 0:
                raise NonDecomposable(f"negative multiplicity at {w}")
            if nv:
                rem[w] = nv
            else:
                rem.pop(w, None)
    return out


def tensor_decompose(c1: Character, c2: Character):
    """Constituents of the tensor product, as {dominant weight: mult}."""
    return decompose_character(char_product(c1, c2))


def ext_sym_square(c: Character):
    """(S^2, Lambda^2) of a character, by indexed pair enumeration."""
    items = []
    for w, m in c.mults.items():
        items.extend([w] * m)
    n = len(items)
    if n * n > 2 * MAX_CHARACTER_POINTS:
        raise CharacterTooLarge(f"square of a mass-{n} character")
    s2, l2 = {}, {}
    for i in range(n):
        wi = items[i]
        w = _add(wi, wi)
        s2[w] = s2.get(w, 0) + 1
        for j in range(i + 1, n):
            w = _add(wi, items[j])
            s2[w] = s2.get(w, 0) + 1
            l2[w] = l2.get(w, 0) + 1
    return Character(c.system, s2), Character(c.system, {k: v for k, v in l2.items()})


def trivial_multiplicity(c: Character) -> int:
    """Multiplicity of the trivial constituent (full decomposition)."""
    if not c.mults:
        return 0
    out = decompose_character(c)
    zero = tuple([0] * _ambient(c.system))
    return out.get(zero, 0)


def _ambient(sys):
    return sys.ambient


def fs_indicator(sys, lam):
    """Classical Frobenius-Schur indicator: +1 symmetric, -1 skew, 0 non-self-dual."""
    lam_n = normalize_dominant(sys, lam)
    if dual_weight(sys, lam_n) != lam_n:
        return 0
    ch = weight_multiplicities(sys, lam_n)
    s2, l2 = ext_sym_square(ch)
    ts = trivial_multiplicity(s2)
    tl = trivial_multiplicity(l2)
    assert ts + tl == 1, "irreducible self-dual module must carry exactly one form"
    return 1 if ts else -1


def eigenvalue_set(c: Character, h2):
    """Set of pairings <w, h> over the weights of the character (true values)."""
    return {Fraction(ip4(w, h2), 4) for w in c.mults}


def is_weyl_invariant(c: Character) -> bool:
    sys = c.system
    for a in simple_roots(sys):
        aa = ip4(a, a)
        for w, m in c.mults.items():
            coeff = Fraction(2 * ip4(w, a), aa)
            if coeff.denominator != 1:
                return False
            refl = tuple(x - int(coeff) * y for x, y in zip(w, a))
            if c.mults.get(refl, 0) != m:
                return False
    return True
