"""Abstract model of irreducible twist-orbit classes and their tensor slopes.

A model instance holds a finite set of irreducible classes (unramified-twist
orbits of irreducible Weil representations, keyed by opaque ids), a symmetric
table of tensor slopes s(i,j) = slope of class_i tensor class_j, and the list
of dimension-1 classes (the in-model character set).  The distinguished id
"u" is reserved for the unramified-character orbit.

`validate_model` checks the axiom set M1-M8 plus the structural type
invariants and reports every violation with an explicit witness.  Structural
defects (unresolvable ids, a dual map that is not an involution, missing
pairing entries) raise `ModelStructureError` instead: they make the axiom
checks meaningless rather than false.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .rationals import format_rational, parse_rational

UNRAMIFIED_ID = "u"

MODES = ("sigma", "eta")


class ModelStructureError(ValueError):
    """Ill-formed model: ids do not resolve, dual is not an involution, etc."""


@dataclass(frozen=True)
class IrreducibleClass:
    """One unramified-twist orbit of irreducibles.

    dim       -- dimension m >= 1
    slope     -- Swan slope, a rational >= 0 with m*slope an integer
    deg       -- twist degeneracy: number of unramified characters fixing
                 the orbit under twisting; divides dim
    dual      -- id of the contragredient orbit
    minimal_sigma / minimal_eta -- minimality flags, asserted by whoever
                 built the model and re-verified against the in-model
                 character set by the validator
    """

    id: str
    dim: int
    slope: Fraction
    deg: int
    dual: str
    minimal_sigma: bool = False
    minimal_eta: bool = False

    @property
    def is_char(self) -> bool:
        return self.dim == 1

    @property
    def swan(self) -> Fraction:
        return self.dim * self.slope


def _pair_key(i: str, j: str) -> tuple[str, str]:
    return (i, j) if i <= j else (j, i)


class PairingTable:
    """Symmetric map from unordered class-id pairs {i,j} to tensor slopes."""

    def __init__(self, entries):
        d: dict[tuple[str, str], Fraction] = {}
        for (i, j), v in dict(entries).items() if isinstance(entries, dict) else entries:
            d[_pair_key(i, j)] = Fraction(v)
        self._d = d

    def get(self, i: str, j: str) -> Fraction:
        try:
            return self._d[_pair_key(i, j)]
        except KeyError:
            raise ModelStructureError(f"missing pairing entry for {{{i},{j}}}") from None

    def has(self, i: str, j: str) -> bool:
        return _pair_key(i, j) in self._d

    def items(self):
        return sorted(self._d.items())

    def __len__(self):
        return len(self._d)

    def __eq__(self, other):
        return isinstance(other, PairingTable) and self._d == other._d


class ModelInstance:
    """Immutable-after-validation bundle of classes, pairing, characters."""

    def __init__(self, classes, pairing: PairingTable, characters):
        self.classes: dict[str, IrreducibleClass] = {}
        for c in classes:
            if c.id in self.classes:
                raise ModelStructureError(f"duplicate class id {c.id!r}")
            self.classes[c.id] = c
        self.pairing = pairing
        self.characters = tuple(characters)

    # -- lookups ---------------------------------------------------------

    def cls(self, i: str) -> IrreducibleClass:
        try:
            return self.classes[i]
        except KeyError:
            raise ModelStructureError(f"unknown class id {i!r}") from None

    def class_ids(self) -> list[str]:
        return list(self.classes)

    def dual(self, i: str) -> str:
        return self.cls(i).dual

    def dim(self, i: str) -> int:
        return self.cls(i).dim

    def slope(self, i: str) -> Fraction:
        return self.cls(i).slope

    def deg(self, i: str) -> int:
        return self.cls(i).deg

    def pair(self, i: str, j: str) -> Fraction:
        self.cls(i), self.cls(j)
        return self.pairing.get(i, j)

    # -- structure -------------------------------------------------------

    def structural_check(self):
        """Raise ModelStructureError unless ids resolve, dual is an
        involution and every pairing entry is present."""
        ids = set(self.classes)
        for c in self.classes.values():
            if c.dual not in ids:
                raise ModelStructureError(f"dual of {c.id!r} is unknown id {c.dual!r}")
        for c in self.classes.values():
            if self.classes[c.dual].dual != c.id:
                raise ModelStructureError(f"dual map is not an involution at {c.id!r}")
        for i in ids:
            for j in ids:
                if not self.pairing.has(i, j):
                    raise ModelStructureError(f"missing pairing entry for {{{i},{j}}}")
        for ch in self.characters:
            if ch not in ids:
                raise ModelStructureError(f"character list names unknown id {ch!r}")

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        classes = []
        for i in sorted(self.classes):
            c = self.classes[i]
            flags = []
            if c.minimal_sigma:
                flags.append("minimal_sigma")
            if c.minimal_eta:
                flags.append("minimal_eta")
            classes.append(
                {
                    "id": c.id,
                    "dim": c.dim,
                    "slope": format_rational(c.slope),
                    "deg": c.deg,
                    "dual": c.dual,
                    "flags": flags,
                }
            )
        pairing = [
            {"i": i, "j": j, "slope": format_rational(v)}
            for (i, j), v in self.pairing.items()
        ]
        return {"classes": classes, "pairing": pairing, "characters": sorted(self.characters)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()


def dualized(m: ModelInstance) -> ModelInstance:
    """The model with every class replaced by its dual.

    Class data is dual-invariant apart from the dual pointer itself, so the
    effect is to re-source each pairing entry {i,j} from {dual(i),dual(j)}.
    """
    entries = {}
    for (i, j), _ in m.pairing.items():
        entries[_pair_key(i, j)] = m.pairing.get(m.dual(i), m.dual(j))
    return ModelInstance(m.classes.values(), PairingTable(entries), m.characters)


# -- validation -----------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[str, ...]
    lhs: Fraction
    rhs: Fraction

    def __str__(self):
        ids = ",".join(self.witness)
        return f"{self.axiom}[{ids}]: lhs={format_rational(self.lhs)} rhs={format_rational(self.rhs)}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom, witness, lhs, rhs):
        self.violations.append(Violation(axiom, tuple(witness), Fraction(lhs), Fraction(rhs)))

    def labels(self) -> set[str]:
        return {v.axiom for v in self.violations}


def is_minimal_class(i: str, mode: str, m: ModelInstance) -> bool:
    """Whether twisting by any in-model character can lower the exponent.

    mode "sigma": every character chi satisfies dim_i * s(chi,i) >= sw_i.
    mode "eta":   every character chi satisfies ar(chi ox sigma_i) >= ar_i,
    where the twisted Artin exponent is dim_i*(s(chi,i)+1) except that it is
    0 when dim_i = 1 and chi is the dual orbit (the twist lands in the
    unramified orbit).  Minimality is relative to the model's character set.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    c = m.cls(i)
    if mode == "sigma":
        sw = c.swan
        return all(c.dim * m.pair(chi, i) >= sw for chi in m.characters)
    ar_i = class_artin(i, m)
    for chi in m.characters:
        if c.dim == 1 and chi == c.dual:
            twisted = Fraction(0)
        else:
            twisted = c.dim * (m.pair(chi, i) + 1)
        if twisted < ar_i:
            return False
    return True


def class_artin(i: str, m: ModelInstance) -> Fraction:
    """Artin exponent of a single class: 0 for the unramified orbit,
    dim*(slope+1) otherwise."""
    if i == UNRAMIFIED_ID:
        return Fraction(0)
    c = m.cls(i)
    return c.dim * (c.slope + 1)


def class_eta(i: str, m: ModelInstance) -> Fraction:
    return class_artin(i, m) / m.dim(i)


def validate_model(m: ModelInstance) -> ValidationReport:
    """Exhaustively check M1-M8 and the type invariants.

    Deterministic; every failed check is recorded with witness ids and both
    sides of the failed comparison.  Structural problems raise instead.
    """
    from .exponents import indec_tensor_kernel  # deferred: exponents imports model

    m.structural_check()
    rep = ValidationReport()
    ids = sorted(m.classes)

    # Type invariants on classes.
    for i in ids:
        c = m.classes[i]
        if c.dim < 1:
            rep.add("dim_positive", (i,), c.dim, 1)
        if c.deg < 1:
            rep.add("deg_positive", (i,), c.deg, 1)
        if c.slope < 0:
            rep.add("slope_nonneg", (i,), c.slope, 0)
        if c.dim >= 1 and (c.dim * c.slope).denominator != 1:
            rep.add("slope_integral", (i,), c.dim * c.slope, 0)
        if c.deg >= 1 and c.dim % c.deg != 0:
            rep.add("deg_divides_dim", (i,), c.dim % c.deg, 0)
        if c.dim == 1 and c.deg != 1:
            rep.add("char_deg", (i,), c.deg, 1)
        d = m.classes[c.dual]
        if (d.dim, d.slope, d.deg) != (c.dim, c.slope, c.deg):
            rep.add("dual_preserves_data", (i, c.dual), Fraction(d.dim), Fraction(c.dim))

    # The distinguished unramified orbit.
    if UNRAMIFIED_ID not in m.classes:
        rep.add("unit_class", (UNRAMIFIED_ID,), 0, 1)
    else:
        u = m.classes[UNRAMIFIED_ID]
        if u.dim != 1 or u.slope != 0 or u.dual != UNRAMIFIED_ID:
            rep.add("unit_class", (UNRAMIFIED_ID,), u.dim * (u.slope + 1), 1)

    # Character list: exactly the dim-1 classes, u included.
    chars = set(m.characters)
    dim1 = {i for i in ids if m.classes[i].dim == 1}
    if chars != dim1 or (UNRAMIFIED_ID in m.classes and UNRAMIFIED_ID not in chars):
        rep.add("character_set", tuple(sorted(chars.symmetric_difference(dim1))), len(chars), len(dim1))

    # A character orbit tensored with its dual is unramified: slope 0.
    for i in ids:
        c = m.classes[i]
        if c.dim == 1 and m.pair(i, c.dual) != 0:
            rep.add("char_self_pairing", (i, c.dual), m.pair(i, c.dual), 0)

    # M1 integrality, and non-negativity of entries.
    for (i, j), s in m.pairing.items():
        if s < 0:
            rep.add("M1", (i, j), s, 0)
        elif (m.dim(i) * m.dim(j) * s).denominator != 1:
            rep.add("M1", (i, j), m.dim(i) * m.dim(j) * s, 0)

    # M2 unit row.
    if UNRAMIFIED_ID in m.classes:
        for i in ids:
            if m.pair(UNRAMIFIED_ID, i) != m.slope(i):
                rep.add("M2", (UNRAMIFIED_ID, i), m.pair(UNRAMIFIED_ID, i), m.slope(i))

    # M3 max rule.
    for a, i in enumerate(ids):
        for j in ids[a:]:
            s = m.pair(i, j)
            hi = max(m.slope(i), m.slope(j))
            if s > hi:
                rep.add("M3", (i, j), s, hi)
            elif m.slope(i) != m.slope(j) and s != hi:
                rep.add("M3", (i, j), s, hi)

    # M4 dual symmetry.
    for a, i in enumerate(ids):
        for j in ids[a:]:
            if m.pair(i, j) != m.pair(m.dual(i), m.dual(j)):
                rep.add("M4", (i, j), m.pair(i, j), m.pair(m.dual(i), m.dual(j)))

    # M5 diagonal minimality.
    for i in ids:
        diag = m.pair(i, m.dual(i))
        for k in ids:
            if diag > m.pair(i, k):
                rep.add("M5", (i, k), diag, m.pair(i, k))

    # M6 ultrametric on D(i,j) = s(i, dual j).
    dist = {(i, j): m.pair(i, m.dual(j)) for i in ids for j in ids}
    for i in ids:
        for j in ids:
            dij = dist[i, j]
            for k in ids:
                bound = max(dist[i, k], dist[k, j])
                if dij > bound:
                    rep.add("M6", (i, j, k), dij, bound)

    # M7 minimal self-pairing.
    for i in ids:
        c = m.classes[i]
        if c.minimal_sigma and m.pair(i, c.dual) < c.slope / 2:
            rep.add("M7", (i,), m.pair(i, c.dual), c.slope / 2)

    # M8 irreducible-level lower bound for eta-minimal classes.  The kernel
    # needs integral Swan exponents; when M1 already failed for a pair, that
    # violation is on record and the M8 comparison is skipped.
    for i in ids:
        if not m.classes[i].minimal_eta:
            continue
        eta_i = class_eta(i, m)
        for j in ids:
            try:
                ar, _sw, dim = indec_tensor_kernel(1, i, 1, j, m)
            except ValueError:
                continue
            lhs = Fraction(ar, dim)
            rhs = max(eta_i, class_eta(j, m)) / 2
            if lhs < rhs:
                rep.add("M8", (i, j), lhs, rhs)

    # Flags re-verified against the character set, both directions.
    for i in ids:
        c = m.classes[i]
        for mode, flag in (("sigma", c.minimal_sigma), ("eta", c.minimal_eta)):
            actual = is_minimal_class(i, mode, m)
            if flag != actual:
                rep.add(f"flag_{mode}", (i,), int(flag), int(actual))

    return rep


# -- model files ----------------------------------------------------------


def model_from_json_dict(doc: dict) -> ModelInstance:
    """Build a ModelInstance from the JSON document format.

    Pairing entries forced by M2 (unit row) or M3 (distinct slopes) may be
    omitted and are reconstructed; an omitted entry between equal-slope
    classes is ambiguous and raises ModelStructureError.
    """
    classes = []
    for c in doc["classes"]:
        flags = c.get("flags", [])
        classes.append(
            IrreducibleClass(
                id=str(c["id"]),
                dim=int(c["dim"]),
                slope=parse_rational(c["slope"]),
                deg=int(c["deg"]),
                dual=str(c["dual"]),
                minimal_sigma="minimal_sigma" in flags,
                minimal_eta="minimal_eta" in flags,
            )
        )
    by_id = {c.id: c for c in classes}
    entries = {}
    for e in doc.get("pairing", []):
        i, j = str(e["i"]), str(e["j"])
        if i not in by_id or j not in by_id:
            raise ModelStructureError(f"pairing names unknown id in {{{i},{j}}}")
        entries[_pair_key(i, j)] = parse_rational(e["slope"])
    ids = sorted(by_id)
    for a, i in enumerate(ids):
        for j in ids[a:]:
            if _pair_key(i, j) in entries:
                continue
            if i == UNRAMIFIED_ID or j == UNRAMIFIED_ID:
                other = j if i == UNRAMIFIED_ID else i
                entries[_pair_key(i, j)] = by_id[other].slope
            elif by_id[i].slope != by_id[j].slope:
                entries[_pair_key(i, j)] = max(by_id[i].slope, by_id[j].slope)
            else:
                raise ModelStructureError(
                    f"pairing entry {{{i},{j}}} omitted but not forced by the unit row or the max rule"
                )
    model = ModelInstance(classes, PairingTable(entries), doc.get("characters", []))
    model.structural_check()
    return model


def load_model(path) -> ModelInstance:
    with open(path, "r", encoding="utf-8") as fh:
        return model_from_json_dict(json.load(fh))


def dump_model(m: ModelInstance, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(m.to_json())
