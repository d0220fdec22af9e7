import math
from fractions import Fraction

import pytest

from wdexp.generator import (
    GenParams,
    GeneratorError,
    SplitMix64,
    gen_model,
    gen_model_with_stats,
    gen_rep,
)
from wdexp.model import UNRAMIFIED_ID, is_minimal_class, validate_model
from wdexp.rep import rep_dim


def test_splitmix_reference_stream():
    # first outputs for seed 0 (standard splitmix64 constants)
    rng = SplitMix64(0)
    first = [rng.next64() for _ in range(3)]
    assert first == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_gen_params_validation():
    with pytest.raises(ValueError):
        GenParams(slope_levels=())
    with pytest.raises(ValueError):
        GenParams(slope_levels=(Fraction(1), Fraction(1)))
    with pytest.raises(ValueError):
        GenParams(slope_levels=(Fraction(-1),))
    with pytest.raises(ValueError):
        GenParams(slope_levels=(Fraction(1),), classes_per_level=0)
    with pytest.raises(ValueError):
        GenParams(slope_levels=(Fraction(1),), dim_pool=())


def test_infeasible_dimension_pool_fails_loudly():
    params = GenParams(slope_levels=(Fraction(1, 3),), dim_pool=(2, 4))
    with pytest.raises(GeneratorError):
        gen_model(params)


def test_generated_models_are_valid(gen_params):
    for seed in range(8):
        m = gen_model(GenParams.from_strings("0,1/2,1,2", seed=seed))
        report = validate_model(m)
        assert report.ok, (seed, [str(v) for v in report.violations])


def test_determinism_same_seed(gen_params):
    a = gen_model(gen_params)
    b = gen_model(gen_params)
    assert a.to_json() == b.to_json()
    assert a.digest() == b.digest()


def test_different_seeds_differ():
    a = gen_model(GenParams.from_strings("0,1/2,1,2", seed=1))
    b = gen_model(GenParams.from_strings("0,1/2,1,2", seed=2))
    assert a.digest() != b.digest()


def test_minimal_params_give_unit_plus_one_class():
    m = gen_model(GenParams(slope_levels=(Fraction(0),), classes_per_level=1, dim_pool=(2,)))
    assert set(m.classes) == {UNRAMIFIED_ID, "L0c0"}
    assert m.pair("L0c0", UNRAMIFIED_ID) == m.slope("L0c0")


def test_characters_cover_positive_levels(generated_model):
    # every positive slope carried by a class is matched by a character at
    # that slope when integral, or at the next integer above otherwise
    slopes = {c.slope for c in generated_model.classes.values() if c.slope > 0}
    char_slopes = {
        generated_model.slope(ch) for ch in generated_model.characters
    }
    for s in slopes:
        target = s if s.denominator == 1 else Fraction(math.ceil(s))
        assert target in char_slopes, (s, sorted(char_slopes))


def test_generated_flags_match_recomputation(generated_model):
    for cid, c in generated_model.classes.items():
        assert c.minimal_sigma == is_minimal_class(cid, "sigma", generated_model)
        assert c.minimal_eta == is_minimal_class(cid, "eta", generated_model)


def test_pairing_floor_against_character_minimum(generated_model):
    # generated pairings sit at or above half the twist-minimized slope
    m = generated_model
    ids = sorted(m.classes)
    min_slope = {
        i: min(m.pair(chi, i) for chi in m.characters) for i in ids
    }
    for a in ids:
        for b in ids:
            assert m.pair(a, b) >= max(min_slope[a], min_slope[b]) / 2, (a, b)


def test_gen_rep_zero_terms(generated_model):
    assert gen_rep(generated_model, 0, 5, 1).is_zero


def test_gen_rep_deterministic_and_bounded(generated_model):
    a = gen_rep(generated_model, 3, 4, 123)
    b = gen_rep(generated_model, 3, 4, 123)
    assert a == b
    assert not a.is_zero
    total_terms = sum(k for k, _ in a.terms)
    assert 1 <= total_terms <= 3
    assert all(1 <= ind.r <= 4 for _, ind in a.terms)
    assert rep_dim(a, generated_model) > 0


def test_gen_rep_covers_every_class(generated_model):
    seen = set()
    for seed in range(10_000):
        seen.update(gen_rep(generated_model, 3, 4, seed).classes())
        if seen == set(generated_model.classes):
            break
    assert seen == set(generated_model.classes)


def test_stats_reported(gen_params):
    _, stats = gen_model_with_stats(gen_params)
    assert stats.attempts >= 1
    assert stats.repair_rounds >= 0


def test_distinct_slopes_forced_to_max(generated_model):
    m = generated_model
    ids = sorted(m.classes)
    for a in ids:
        for b in ids:
            if m.slope(a) != m.slope(b):
                assert m.pair(a, b) == max(m.slope(a), m.slope(b))


def test_unit_class_minimal_in_generated(generated_model):
    assert is_minimal_class(UNRAMIFIED_ID, "eta", generated_model)
    assert is_minimal_class(UNRAMIFIED_ID, "sigma", generated_model)
