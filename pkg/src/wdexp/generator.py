"""Seeded generation of valid model instances and random representations.

The pairing is built per slope level as a laminar hierarchy (an ultrametric
tree) over that level's classes and characters, with the dual involution
realized as a tree automorphism: dual pairs are sibling leaves, everything
else is self-dual.  Distances D(a,b) are least-common-ancestor heights,
leaves carry self-distances below their parent, and the pairing is read off
as s(a,b) = D(a, dual(b)).  Cross-level pairs are forced to max slope.

A repair pass then raises heights until every entry satisfies

    s(a,b) >= max(min_slope(a), min_slope(b)) / 2

where min_slope(i) is the smallest pairing slope between i and any in-model
character (the best twist can do).  This floor is what the bound theorems
force on orbit data reachable by twisting; the bare axiom set does not imply
it for free entries, and without it sweeps over decomposable minimal
representations can manufacture counterexamples that no genuine family of
representations realizes.  Raising heights keeps the tree laminar, so the
ultrametric and dual-symmetry axioms survive repair.

Flags are computed last, directly from the finished pairing, so the
validator's re-verification holds by construction.

The PRNG is splitmix64 with fixed reduction rules: identical parameters and
seed reproduce identical models on any platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .model import (
    UNRAMIFIED_ID,
    IrreducibleClass,
    ModelInstance,
    PairingTable,
    is_minimal_class,
    validate_model,
)
from .rationals import parse_rational
from .rep import Indecomposable, WDRep


class GeneratorError(RuntimeError):
    pass


MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 stream; the reduction below(n) is next64() % n."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next64() % n

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list):
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class GenParams:
    slope_levels: tuple[Fraction, ...]
    classes_per_level: int = 2
    dim_pool: tuple[int, ...] = (1, 2, 3, 4)
    max_deg: int = 4
    tree_depth: int = 3
    char_per_level: int = 1
    seed: int = 0

    def __post_init__(self):
        levels = tuple(Fraction(v) for v in self.slope_levels)
        object.__setattr__(self, "slope_levels", levels)
        object.__setattr__(self, "dim_pool", tuple(int(d) for d in self.dim_pool))
        if not levels:
            raise ValueError("need at least one slope level")
        if len(set(levels)) != len(levels):
            raise ValueError("slope levels must be distinct")
        if any(v < 0 for v in levels):
            raise ValueError("slope levels must be >= 0")
        if min(self.classes_per_level, self.char_per_level, self.tree_depth, self.max_deg) < 1:
            raise ValueError("all counts must be >= 1")
        if not self.dim_pool or any(d < 1 for d in self.dim_pool):
            raise ValueError("dimension pool must contain integers >= 1")

    @staticmethod
    def from_strings(levels: str, classes_per_level=2, dims="1,2,3,4", max_deg=4,
                     tree_depth=3, char_per_level=1, seed=0) -> "GenParams":
        return GenParams(
            slope_levels=tuple(parse_rational(t) for t in levels.split(",") if t.strip()),
            classes_per_level=int(classes_per_level),
            dim_pool=tuple(int(t) for t in str(dims).split(",") if t.strip()),
            max_deg=int(max_deg),
            tree_depth=int(tree_depth),
            char_per_level=int(char_per_level),
            seed=int(seed),
        )


@dataclass
class GenStats:
    attempts: int = 0
    repair_rounds: int = 0
    raised_entries: int = 0


# -- tree machinery ----------------------------------------------------------


@dataclass
class _Leaf:
    id: str
    self_value: Fraction


@dataclass
class _Node:
    height: Fraction
    children: list

    def leaves(self):
        out = []
        stack = [self]
        while stack:
            n = stack.pop()
            if isinstance(n, _Leaf):
                out.append(n)
            else:
                stack.extend(n.children)
        return out


def _ceil_grid(x: Fraction, g: int) -> Fraction:
    return Fraction(math.ceil(x * g), g)


def _grid_pick(rng: SplitMix64, lo: Fraction, hi: Fraction, g: int) -> Fraction:
    """Uniform grid point in [lo, hi] (multiples of 1/g)."""
    lo_i = math.ceil(lo * g)
    hi_i = math.floor(hi * g)
    if hi_i < lo_i:
        return Fraction(lo_i, g)
    return Fraction(lo_i + rng.below(hi_i - lo_i + 1), g)


def _build_tree(rng, units, hi, g, depth) -> _Node:
    """Random laminar hierarchy; each unit is a list of leaf descriptors
    (singleton for self-dual orbits, two ids for a dual pair)."""
    h = _grid_pick(rng, Fraction(0), hi, g)
    node = _Node(h, [])
    if len(units) == 1 or depth <= 0:
        groups = [[u] for u in units]
    else:
        k = 2 + rng.below(min(3, len(units) - 1))
        pool = list(units)
        rng.shuffle(pool)
        groups = [[] for _ in range(k)]
        for idx, u in enumerate(pool):
            groups[idx % k].append(u)
        groups = [grp for grp in groups if grp]
    for grp in groups:
        if len(grp) == 1:
            node.children.append(_expand_unit(rng, grp[0], h, g))
        else:
            node.children.append(_build_tree(rng, grp, h, g, depth - 1))
    return node


def _expand_unit(rng, unit, hi, g):
    """A self-dual orbit becomes a leaf; a dual pair becomes a pair node
    whose height is the orbit's self-pairing slope."""
    ids, is_char = unit
    if len(ids) == 1:
        sv = Fraction(0) if is_char else _grid_pick(rng, Fraction(0), hi, g)
        return _Leaf(ids[0], sv)
    h = _grid_pick(rng, Fraction(0), hi, g)
    sv = Fraction(0) if is_char else _grid_pick(rng, Fraction(0), h, g)
    return _Node(h, [_Leaf(ids[0], sv), _Leaf(ids[1], sv)])


def _tree_distances(root: _Node) -> dict[tuple[str, str], Fraction]:
    """D(a,b) = LCA height for distinct leaves, self_value on the diagonal."""
    dist: dict[tuple[str, str], Fraction] = {}

    def visit(node):
        if isinstance(node, _Leaf):
            dist[(node.id, node.id)] = node.self_value
            return [node.id]
        mine = []
        child_sets = [visit(c) for c in node.children]
        for a_idx in range(len(child_sets)):
            for b_idx in range(a_idx + 1, len(child_sets)):
                for a in child_sets[a_idx]:
                    for b in child_sets[b_idx]:
                        dist[(a, b)] = node.height
                        dist[(b, a)] = node.height
        for cs in child_sets:
            mine.extend(cs)
        return mine

    visit(root)
    return dist


def _enforce_floors(root: _Node, floor_of, g) -> int:
    """Raise node heights and leaf self-values to their floors, keeping
    children at or below parents.  Returns the number of raised values."""
    raised = 0

    def visit(node) -> Fraction:
        nonlocal raised
        if isinstance(node, _Leaf):
            f = _ceil_grid(floor_of([node.id]) , g)
            if node.self_value < f:
                node.self_value = f
                raised += 1
            return node.self_value
        ids = [leaf.id for leaf in node.leaves()]
        f = _ceil_grid(floor_of(ids), g)
        child_max = Fraction(0)
        for c in node.children:
            child_max = max(child_max, visit(c))
        target = max(node.height, f, child_max)
        if target > node.height:
            node.height = target
            raised += 1
        return node.height

    visit(root)
    return raised


# -- model assembly ----------------------------------------------------------


def _char_level(level: Fraction) -> int:
    """Characters carry integer slopes (dimension-1 integrality), so a
    fractional level is covered by the next integer up."""
    return max(1, math.ceil(level))


def _attempt(p: GenParams, rng: SplitMix64, stats: GenStats) -> ModelInstance:
    levels = sorted(p.slope_levels)

    # Class slots per level, dimensions filtered by integrality.
    slots: list[tuple[str, int, Fraction]] = []
    for li, lam in enumerate(levels):
        feasible = sorted(m for m in set(p.dim_pool) if (m * lam).denominator == 1)
        if not feasible:
            raise GeneratorError(
                f"no dimension in pool {p.dim_pool} gives an integer Swan exponent at slope {lam}"
            )
        for k in range(p.classes_per_level):
            slots.append((f"L{li}c{k}", rng.choice(feasible), lam))

    # Dedicated characters: one batch per positive level, at the level if it
    # is an integer and at the next integer otherwise.
    char_levels = sorted({_char_level(lam) for lam in levels if lam > 0})
    for ci, cl in enumerate(char_levels):
        for k in range(p.char_per_level):
            slots.append((f"X{ci}n{k}", 1, Fraction(cl)))

    # Dual structure: pair up same-(slope, dim) slots at random, u stays out.
    groups: dict[tuple[Fraction, int], list[str]] = {}
    for cid, dim, lam in slots:
        groups.setdefault((lam, dim), []).append(cid)
    dual: dict[str, str] = {UNRAMIFIED_ID: UNRAMIFIED_ID}
    for key in sorted(groups):
        ids = groups[key]
        rng.shuffle(ids)
        i = 0
        while i < len(ids):
            if i + 1 < len(ids) and rng.below(2) == 1:
                dual[ids[i]] = ids[i + 1]
                dual[ids[i + 1]] = ids[i]
                i += 2
            else:
                dual[ids[i]] = ids[i]
                i += 1

    dims = {cid: dim for cid, dim, _ in slots}
    dims[UNRAMIFIED_ID] = 1
    slopes = {cid: lam for cid, _, lam in slots}
    slopes[UNRAMIFIED_ID] = Fraction(0)

    # Twist degeneracy per orbit (shared by duals); characters get 1.
    deg: dict[str, int] = {UNRAMIFIED_ID: 1}
    for cid in sorted(dims):
        if cid in deg:
            continue
        m = dims[cid]
        divisors = [d for d in range(1, min(m, p.max_deg) + 1) if m % d == 0]
        d = rng.choice(divisors)
        deg[cid] = d
        deg[dual[cid]] = d

    # One ultrametric tree per slope value present.
    by_slope: dict[Fraction, list[str]] = {}
    for cid in sorted(dims):
        by_slope.setdefault(slopes[cid], []).append(cid)
    trees: dict[Fraction, _Node] = {}
    for lam in sorted(by_slope):
        ids = by_slope[lam]
        units = []
        seen = set()
        for cid in ids:
            if cid in seen:
                continue
            orbit = [cid] if dual[cid] == cid else [cid, dual[cid]]
            seen.update(orbit)
            units.append((orbit, dims[cid] == 1))
        g = math.gcd(*(dims[c] for c in ids)) ** 2
        trees[lam] = _build_tree(rng, units, lam, g, p.tree_depth)

    def distances():
        dist = {}
        for lam, tree in trees.items():
            dist.update(_tree_distances(tree))
        return dist

    def pairing_from(dist) -> dict[tuple[str, str], Fraction]:
        entries = {}
        ids = sorted(dims)
        for a_idx, a in enumerate(ids):
            for b in ids[a_idx:]:
                if slopes[a] == slopes[b]:
                    s = dist[(a, dual[b])]
                    if dist[(dual[a], b)] != s:
                        raise GeneratorError("dual involution is not a tree isometry")
                else:
                    s = max(slopes[a], slopes[b])
                entries[(a, b) if a <= b else (b, a)] = s
        return entries

    chars = sorted(c for c in dims if dims[c] == 1)

    # Repair: iterate the twist-minimized-slope floor to a fixed point.
    for _round in range(100):
        dist = distances()
        entries = pairing_from(dist)

        def pair(a, b):
            return entries[(a, b) if a <= b else (b, a)]

        min_slope = {c: min(pair(chi, c) for chi in chars) for c in sorted(dims)}
        changed = 0
        for lam in sorted(trees):
            g = math.gcd(*(dims[c] for c in by_slope[lam])) ** 2

            def floor_of(ids_under):
                # D-entries under this node are s(a, dual(b)) for leaf pairs,
                # so the floor takes the worst twist-minimized slope present.
                return max(min_slope[x] for x in ids_under) / 2

            changed += _enforce_floors(trees[lam], floor_of, g)
        if changed == 0:
            break
        stats.repair_rounds += 1
        stats.raised_entries += changed
    else:
        raise GeneratorError("pairing repair did not converge in 100 rounds")

    entries = pairing_from(distances())
    pairing = PairingTable(entries)
    bare = ModelInstance(
        [
            IrreducibleClass(cid, dims[cid], slopes[cid], deg[cid], dual[cid])
            for cid in sorted(dims)
        ],
        pairing,
        chars,
    )
    flagged = [
        IrreducibleClass(
            cid,
            dims[cid],
            slopes[cid],
            deg[cid],
            dual[cid],
            minimal_sigma=is_minimal_class(cid, "sigma", bare),
            minimal_eta=is_minimal_class(cid, "eta", bare),
        )
        for cid in sorted(dims)
    ]
    return ModelInstance(flagged, pairing, chars)


def gen_model_with_stats(p: GenParams) -> tuple[ModelInstance, GenStats]:
    rng = SplitMix64(p.seed)
    stats = GenStats()
    last = None
    for _ in range(100):
        stats.attempts += 1
        model = _attempt(p, rng, stats)
        report = validate_model(model)
        if report.ok:
            return model, stats
        last = report
    details = "; ".join(str(v) for v in last.violations[:5]) if last else "none"
    raise GeneratorError(f"could not generate a valid model in 100 attempts: {details}")


def gen_model(p: GenParams) -> ModelInstance:
    """Deterministic: identical params and seed give identical instances."""
    return gen_model_with_stats(p)[0]


def gen_rep(m: ModelInstance, max_terms: int, max_r: int, seed: int) -> WDRep:
    """Uniform draw of at most max_terms indecomposables with Sp-length at
    most max_r; the zero representation only when max_terms = 0."""
    if max_terms < 0 or (max_terms > 0 and max_r < 1):
        raise ValueError("need max_terms >= 0 and max_r >= 1")
    if max_terms == 0:
        return WDRep.zero()
    rng = SplitMix64(seed)
    ids = sorted(m.classes)
    n = 1 + rng.below(max_terms)
    terms = []
    for _ in range(n):
        r = 1 + rng.below(max_r)
        terms.append((1, Indecomposable(r, rng.choice(ids))))
    return WDRep.from_terms(terms)
