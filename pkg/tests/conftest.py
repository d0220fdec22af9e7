from fractions import Fraction

import pytest

from wdexp.generator import GenParams, gen_model
from wdexp.model import model_from_json_dict


@pytest.fixture(scope="session")
def unit_model():
    """Just the unramified orbit."""
    return model_from_json_dict(
        {
            "classes": [
                {"id": "u", "dim": 1, "slope": "0", "deg": 1, "dual": "u",
                 "flags": ["minimal_sigma", "minimal_eta"]},
            ],
            "pairing": [],
            "characters": ["u"],
        }
    )


ZOO_DOC = {
    # u: unramified orbit; t: tame character; g/gd: ramified character dual
    # pair at slope 2; a: self-dual dim-2 class at slope 1/2 with full twist
    # degeneracy (the half-slope equality witness); b: self-dual dim-2 class
    # at slope 1; c3: self-dual dim-3 class at slope 2, not minimal (the
    # character g sits at pairing slope 1 < 2).
    "classes": [
        {"id": "u", "dim": 1, "slope": "0", "deg": 1, "dual": "u",
         "flags": ["minimal_sigma", "minimal_eta"]},
        {"id": "t", "dim": 1, "slope": "0", "deg": 1, "dual": "t",
         "flags": ["minimal_sigma"]},
        {"id": "g", "dim": 1, "slope": "2", "deg": 1, "dual": "gd", "flags": []},
        {"id": "gd", "dim": 1, "slope": "2", "deg": 1, "dual": "g", "flags": []},
        {"id": "a", "dim": 2, "slope": "1/2", "deg": 2, "dual": "a",
         "flags": ["minimal_sigma", "minimal_eta"]},
        {"id": "b", "dim": 2, "slope": "1", "deg": 1, "dual": "b",
         "flags": ["minimal_sigma", "minimal_eta"]},
        {"id": "c3", "dim": 3, "slope": "2", "deg": 3, "dual": "c3", "flags": []},
    ],
    # Only entries not forced by the unit row or the max rule.
    "pairing": [
        {"i": "u", "j": "t", "slope": "0"},
        {"i": "t", "j": "t", "slope": "0"},
        {"i": "a", "j": "a", "slope": "1/4"},
        {"i": "b", "j": "b", "slope": "1/2"},
        {"i": "g", "j": "g", "slope": "1"},
        {"i": "gd", "j": "gd", "slope": "1"},
        {"i": "g", "j": "gd", "slope": "0"},
        {"i": "g", "j": "c3", "slope": "1"},
        {"i": "gd", "j": "c3", "slope": "1"},
        {"i": "c3", "j": "c3", "slope": "2/3"},
    ],
    "characters": ["u", "t", "g", "gd"],
}


@pytest.fixture(scope="session")
def zoo_model():
    """Hand-built valid model covering tame, ramified-dual-pair,
    fractional-slope, and non-minimal classes."""
    return model_from_json_dict(ZOO_DOC)


@pytest.fixture(scope="session")
def gen_params():
    return GenParams.from_strings("0,1/2,1,2", seed=0)


@pytest.fixture(scope="session")
def generated_model(gen_params):
    return gen_model(gen_params)


def frac(s) -> Fraction:
    from wdexp.rationals import parse_rational

    return parse_rational(s)
