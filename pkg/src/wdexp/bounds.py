"""Bound checks on concrete inputs, sharpness witnesses, and the sweep.

Each check evaluates one labeled inequality exactly and returns a
CheckResult carrying both sides as rationals.  Labels:

    A, AS           lower bound eta/varsigma(x ox y) >= max(.,.)/2,
                    valid under a minimality hypothesis on x
    B, BS           symmetric lower bound via x ox dual(x), y ox dual(y)
    B_indec, BS_irr the stronger max form for single-term inputs
    C, CS           upper bound on ar/sw(x ox y)
    C_irr, CS_irr   eta/varsigma(x ox y) <= max(eta/varsigma) for
                    irreducible inputs

Minimality preconditions are checked and failures are surfaced as distinct
results (precondition_failed=True), never skipped silently: the A-bound is
vacuous without its hypothesis and a sweep must report how many samples
satisfied it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .exponents import (
    exponents_of,
    is_minimal_rep,
    swan_profile,
    tensor_exponents,
)
from .generator import MASK64, GenParams, SplitMix64, gen_model_with_stats, gen_rep
from .maxplus import mp_degree_weight, mp_vee, optimal_witness, pair_upper_bound, s_map
from .model import (
    UNRAMIFIED_ID,
    IrreducibleClass,
    ModelInstance,
    PairingTable,
    validate_model,
)
from .rationals import format_rational
from .rep import Indecomposable, WDRep, format_rep, rep_dual

THEOREM_LABELS = ("A", "AS", "B", "B_indec", "BS", "BS_irr", "C", "C_irr", "CS", "CS_irr")

# Top-level selectors accepted by sweeps, with the labels they produce.
SWEEP_FAMILIES = {
    "A": ("A",),
    "AS": ("AS",),
    "B": ("B", "B_indec"),
    "BS": ("BS", "BS_irr"),
    "C": ("C", "C_irr"),
    "CS": ("CS", "CS_irr"),
}


@dataclass(frozen=True)
class CheckResult:
    theorem: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    equality: bool
    inputs: dict
    precondition_failed: bool = False

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "precondition_failed": self.precondition_failed,
            "inputs": self.inputs,
        }


def _result(theorem, lhs, rhs, direction, inputs, precondition_failed=False):
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    holds = lhs >= rhs if direction == ">=" else lhs <= rhs
    return CheckResult(theorem, lhs, rhs, holds, lhs == rhs, inputs, precondition_failed)


def _inputs(m: ModelInstance, x: WDRep, y: WDRep, **extra) -> dict:
    d = {"model": m.digest(), "x": format_rep(x), "y": format_rep(y)}
    d.update(extra)
    return d


def _norm(report, mode: str) -> Fraction:
    val = report.eta if mode == "eta" else report.varsigma
    if val is None:
        raise ValueError("normalized exponent undefined for the zero representation")
    return val


def check_bound_A(x: WDRep, y: WDRep, m: ModelInstance, mode: str = "eta") -> CheckResult:
    """Lower bound: norm(x ox y) >= max(norm(x), norm(y)) / 2 when x cannot
    be lowered by any in-model character twist."""
    if x.is_zero or y.is_zero:
        raise ValueError("the A-bound needs nonzero representations")
    label = "A" if mode == "eta" else "AS"
    minimal = is_minimal_rep(x, mode, m)
    lhs = _norm(tensor_exponents(x, y, m), mode)
    rhs = max(_norm(exponents_of(x, m), mode), _norm(exponents_of(y, m), mode)) / 2
    return _result(label, lhs, rhs, ">=", _inputs(m, x, y, mode=mode),
                   precondition_failed=not minimal)


def check_bound_B(x: WDRep, y: WDRep, m: ModelInstance, mode: str = "eta",
                  variant: str = "sum") -> CheckResult:
    """Symmetric lower bound on norm(x ox dual(y)).

    variant "sum": rhs is the average of the two self-dual tensor norms.
    variant "indec_or_irr": rhs is their max; requires single-term inputs
    (any Sp-length for mode eta, length 1 for mode sigma).
    """
    if x.is_zero or y.is_zero:
        raise ValueError("the B-bound needs nonzero representations")
    if variant not in ("sum", "indec_or_irr"):
        raise ValueError(f"unknown variant {variant!r}")
    if variant == "indec_or_irr":
        for z in (x, y):
            if len(z.terms) != 1 or z.terms[0][0] != 1:
                raise ValueError("the strong B-variant needs single-term representations")
            if mode == "sigma" and z.terms[0][1].r != 1:
                raise ValueError("the strong BS-variant needs irreducible representations")
        label = "B_indec" if mode == "eta" else "BS_irr"
    else:
        label = "B" if mode == "eta" else "BS"
    lhs = _norm(tensor_exponents(x, rep_dual(y, m), m), mode)
    dx = _norm(tensor_exponents(x, rep_dual(x, m), m), mode)
    dy = _norm(tensor_exponents(y, rep_dual(y, m), m), mode)
    rhs = max(dx, dy) if variant == "indec_or_irr" else (dx + dy) / 2
    return _result(label, lhs, rhs, ">=", _inputs(m, x, y, mode=mode, variant=variant))


def check_bound_C(x: WDRep, y: WDRep, m: ModelInstance, mode: str = "eta",
                  variant: str = "general") -> CheckResult:
    """Upper bounds on the tensor exponent.

    variant "general": ar(x ox y) <= dim(y)ar(x) + dim(x)ar(y) - min(ar)
    (Swan exponents for mode sigma).  variant "irreducible": the normalized
    exponent of the tensor is at most the max of the factors'; requires
    irreducible (length-1 single-term) inputs.
    """
    if x.is_zero or y.is_zero:
        raise ValueError("the C-bound needs nonzero representations")
    if variant not in ("general", "irreducible"):
        raise ValueError(f"unknown variant {variant!r}")
    ex, ey = exponents_of(x, m), exponents_of(y, m)
    t = tensor_exponents(x, y, m)
    if variant == "general":
        label = "C" if mode == "eta" else "CS"
        if mode == "eta":
            lhs = Fraction(t.ar)
            rhs = Fraction(ey.dim * ex.ar + ex.dim * ey.ar - min(ex.ar, ey.ar))
        else:
            lhs = Fraction(t.sw)
            rhs = Fraction(ey.dim * ex.sw + ex.dim * ey.sw - min(ex.sw, ey.sw))
    else:
        for z in (x, y):
            if len(z.terms) != 1 or z.terms[0][0] != 1 or z.terms[0][1].r != 1:
                raise ValueError("the irreducible C-variant needs irreducible representations")
        label = "C_irr" if mode == "eta" else "CS_irr"
        lhs = _norm(t, mode)
        rhs = max(_norm(ex, mode), _norm(ey, mode))
    return _result(label, lhs, rhs, "<=", _inputs(m, x, y, mode=mode, variant=variant))


# -- the exponent dictionary for pairs ---------------------------------------


@dataclass(frozen=True)
class GLPair:
    """Exponent data of a pair of irreducible representations of general
    linear groups: dimensions, the pair's Artin exponent, and the count d of
    unramified twists carrying one factor to the dual of the other."""

    m: int
    n: int
    ar_pair: int
    d: int = 0

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("dimensions must be >= 1")
        if self.d < 0:
            raise ValueError("twist count must be >= 0")
        if self.d != 0 and (self.m != self.n or self.n % self.d != 0):
            raise ValueError("a nonzero twist count forces m = n and d | n")


def gl_pair_dictionary(p: GLPair) -> tuple[int, Fraction]:
    """(sw_pair, varsigma_pair) from Artin data: sw = ar - mn + d."""
    sw = p.ar_pair - p.m * p.n + p.d
    if sw < 0:
        raise ValueError(f"inconsistent pair data: sw would be {sw} < 0")
    return sw, Fraction(sw, p.m * p.n)


def gl_pair_artin_from_swan(sw_pair: int, m: int, n: int, d: int = 0) -> int:
    """Inverse direction of the dictionary: ar = sw + mn - d."""
    if sw_pair < 0:
        raise ValueError("Swan exponent must be >= 0")
    GLPair(m, n, sw_pair + m * n - d, d)
    return sw_pair + m * n - d


# -- sharpness witnesses -----------------------------------------------------


def _witness_model(extra_classes, pairing_entries) -> ModelInstance:
    classes = [IrreducibleClass(UNRAMIFIED_ID, 1, Fraction(0), 1, UNRAMIFIED_ID, True, True)]
    classes += extra_classes
    entries = dict(pairing_entries)
    ids = [c.id for c in classes]
    by_id = {c.id: c for c in classes}
    for a_idx, a in enumerate(ids):
        for b in ids[a_idx:]:
            key = (a, b) if a <= b else (b, a)
            if key in entries:
                continue
            if a == UNRAMIFIED_ID or b == UNRAMIFIED_ID:
                other = b if a == UNRAMIFIED_ID else a
                entries[key] = by_id[other].slope
            else:
                entries[key] = max(by_id[a].slope, by_id[b].slope)
    chars = [c.id for c in classes if c.dim == 1]
    model = ModelInstance(classes, PairingTable(entries), chars)
    report = validate_model(model)
    if not report.ok:
        raise AssertionError(f"witness model invalid: {[str(v) for v in report.violations]}")
    return model


def dim2_witness_model() -> ModelInstance:
    """Self-dual dimension-2 class of slope 1/2 with full twist degeneracy
    and self-pairing 1/4: attains equality in the A-, AS- and B-bounds."""
    cls = IrreducibleClass("w", 2, Fraction(1, 2), 2, "w", True, True)
    return _witness_model([cls], {("w", "w"): Fraction(1, 4)})


def prime_dim_witness_model(ell: int) -> ModelInstance:
    """Self-dual class of prime dimension ell and slope 1 whose self-pairing
    is (1 - 1/ell): twisting the self-dual tensor slope strictly above the
    one-half floor."""
    cls = IrreducibleClass(f"p{ell}", ell, Fraction(1), 1, f"p{ell}", True, True)
    return _witness_model([cls], {(f"p{ell}", f"p{ell}"): 1 - Fraction(1, ell)})


def tame_character_witness_model() -> ModelInstance:
    """Self-dual tame character (slope 0, Artin exponent 1): attains
    equality in the general C-bound against the unramified orbit."""
    cls = IrreducibleClass("t", 1, Fraction(0), 1, "t", True, False)
    return _witness_model([cls], {("t", "t"): Fraction(0)})


def sharpness_suite() -> list[CheckResult]:
    """Equality-attaining checks: the dimension-2 witness for the A/AS/B
    bounds, prime-dimension witnesses for the improved self-dual slope,
    the tame character for the C-bound, and the max-plus pair witness."""
    out = []

    m2 = dim2_witness_model()
    x = WDRep.from_terms([(1, Indecomposable(1, "w"))])
    out.append(check_bound_A(x, x, m2, "eta"))
    out.append(check_bound_A(x, x, m2, "sigma"))
    out.append(check_bound_B(x, x, m2, "eta", "sum"))

    for ell in (3, 5):
        mw = prime_dim_witness_model(ell)
        xw = WDRep.from_terms([(1, Indecomposable(1, f"p{ell}"))])
        out.append(check_bound_B(xw, xw, mw, "sigma", "indec_or_irr"))
        out.append(check_bound_A(xw, xw, mw, "sigma"))

    mt = tame_character_witness_model()
    xt = WDRep.from_terms([(1, Indecomposable(1, "t"))])
    yu = WDRep.from_terms([(1, Indecomposable(1, UNRAMIFIED_ID))])
    out.append(check_bound_C(xt, yu, mt, "eta", "general"))

    d1, v1, d2, v2 = 2, Fraction(3), 1, Fraction(5)
    w1, w2 = optimal_witness(d1, v1, d2, v2)
    _, v_prod = mp_degree_weight(mp_vee(w1, w2))
    bound = pair_upper_bound(d1, v1, d2, v2)
    out.append(
        CheckResult(
            "CS",
            v_prod,
            bound,
            v_prod <= bound,
            v_prod == bound,
            {"witness": "max-plus pair", "d1": d1, "v1": "3", "d2": d2, "v2": "5"},
        )
    )
    return out


# -- sweeps -------------------------------------------------------------------


@dataclass
class SweepSummary:
    samples: dict[str, int] = field(default_factory=dict)
    violations: dict[str, int] = field(default_factory=dict)
    equalities: dict[str, int] = field(default_factory=dict)
    precondition_failures: dict[str, int] = field(default_factory=dict)
    models: int = 0
    repair_rounds: int = 0

    def record(self, r: CheckResult):
        t = r.theorem
        for d in (self.samples, self.violations, self.equalities, self.precondition_failures):
            d.setdefault(t, 0)
        if r.precondition_failed:
            self.precondition_failures[t] += 1
            return
        self.samples[t] += 1
        if not r.holds:
            self.violations[t] += 1
        if r.equality:
            self.equalities[t] += 1

    def total_violations(self) -> int:
        return sum(self.violations.values())

    def csv(self) -> str:
        lines = ["theorem,samples,violations,equalities"]
        for t in sorted(self.samples):
            lines.append(f"{t},{self.samples[t]},{self.violations[t]},{self.equalities[t]}")
        return "\n".join(lines) + "\n"


def pair_seed(base_seed: int, model_index: int, pair_index: int, side: int) -> int:
    """Deterministic derived seed for the representation draws."""
    h = SplitMix64(base_seed & MASK64)
    h.state = (h.state ^ (model_index + 1) * 0x9E3779B97F4A7C15) & MASK64
    h.state = (h.state ^ (pair_index + 1) * 0xC2B2AE3D27D4EB4F) & MASK64
    h.state = (h.state ^ (side + 1) * 0x165667B19E3779F9) & MASK64
    return h.next64()


def run_sweep(theorems, models: int, pairs_per_model: int, gen: GenParams,
              seed: int, max_terms: int = 3, max_r: int = 4, sample_hook=None):
    """Generate `models` instances with seeds seed..seed+models-1, draw
    `pairs_per_model` representation pairs each, and run the selected bound
    families.  Returns (results, summary); ordering is fixed by
    (model index, pair index, label) regardless of scheduling.  When given,
    sample_hook(model, x, y) sees every drawn pair."""
    for t in theorems:
        if t not in SWEEP_FAMILIES:
            raise ValueError(f"unknown theorem selector {t!r}")
    results: list[CheckResult] = []
    summary = SweepSummary()
    for mi in range(models):
        params = replace(gen, seed=seed + mi)
        model, stats = gen_model_with_stats(params)
        summary.models += 1
        summary.repair_rounds += stats.repair_rounds
        for pi in range(pairs_per_model):
            x = gen_rep(model, max_terms, max_r, pair_seed(seed, mi, pi, 0))
            y = gen_rep(model, max_terms, max_r, pair_seed(seed, mi, pi, 1))
            if sample_hook is not None:
                sample_hook(model, x, y)
            for rr in checks_for_pair(theorems, x, y, model):
                results.append(rr)
                summary.record(rr)
    return results, summary


def checks_for_pair(theorems, x: WDRep, y: WDRep, m: ModelInstance):
    """All applicable labeled checks for one representation pair."""
    single_x = len(x.terms) == 1 and x.terms[0][0] == 1
    single_y = len(y.terms) == 1 and y.terms[0][0] == 1
    irr_x = single_x and x.terms[0][1].r == 1
    irr_y = single_y and y.terms[0][1].r == 1
    out = []
    if "A" in theorems:
        out.append(check_bound_A(x, y, m, "eta"))
    if "AS" in theorems:
        out.append(check_bound_A(x, y, m, "sigma"))
    if "B" in theorems:
        out.append(check_bound_B(x, y, m, "eta", "sum"))
        if single_x and single_y:
            out.append(check_bound_B(x, y, m, "eta", "indec_or_irr"))
    if "BS" in theorems:
        out.append(check_bound_B(x, y, m, "sigma", "sum"))
        if irr_x and irr_y:
            out.append(check_bound_B(x, y, m, "sigma", "indec_or_irr"))
    if "C" in theorems:
        out.append(check_bound_C(x, y, m, "eta", "general"))
        if irr_x and irr_y:
            out.append(check_bound_C(x, y, m, "eta", "irreducible"))
    if "CS" in theorems:
        out.append(check_bound_C(x, y, m, "sigma", "general"))
        if irr_x and irr_y:
            out.append(check_bound_C(x, y, m, "sigma", "irreducible"))
    return out


def swan_bridge_gap(x: WDRep, y: WDRep, m: ModelInstance) -> Fraction:
    """v(S(x) vee S(y)) - sw(x ox y): nonnegative on valid models (the
    max-plus image dominates the true tensor Swan exponent)."""
    sx = s_map(swan_profile(x, m))
    sy = s_map(swan_profile(y, m))
    _, v = mp_degree_weight(mp_vee(sx, sy))
    return v - tensor_exponents(x, y, m).sw


def results_to_json(results) -> str:
    return json.dumps([r.to_json_dict() for r in results], indent=1, sort_keys=True) + "\n"
