"""Exact pattern-density calculus on permutations and blow-up permutons.

Thin wrapper over the C++ core: permutations and block words travel as
strings ("2143", "21|21"), exact rationals come back as fractions.Fraction.
"""

import json as _json
from fractions import Fraction as _Fraction

from ._lynperm import (
    block_word,
    blocks,
    cfl,
    is_lyndon,
    lemma_unique,
    lyndon_counts,
    lyndon_factors,
    lyndon_permutations,
    reduce,
    reduction_table,
    sample,
    shuffle,
)
from ._lynperm import blowup_density as _blowup_density
from ._lynperm import estimate as _estimate
from ._lynperm import flag_product as _flag_product
from ._lynperm import pattern_density as _pattern_density
from ._lynperm import verify_json as _verify_json
from ._lynperm import witness_json as _witness_json

__all__ = [
    "block_word",
    "blocks",
    "blowup_density",
    "cfl",
    "estimate_density",
    "find_witness",
    "flag_product",
    "is_lyndon",
    "lemma_unique",
    "lyndon_counts",
    "lyndon_factors",
    "lyndon_permutations",
    "pattern_density",
    "reduce",
    "reduction_table",
    "sample",
    "shuffle",
    "verify",
]


def _scale_strings(scales):
    return [str(s) for s in scales]


def flag_product(parts):
    return {p: _Fraction(c) for p, c in _flag_product(list(parts)).items()}


def pattern_density(sigma, perm):
    return _Fraction(_pattern_density(sigma, perm))


def blowup_density(sigma, base, scales):
    return _Fraction(_blowup_density(sigma, base, _scale_strings(scales)))


def estimate_density(sigma, base, scales, trials=10000, seed=0):
    return _estimate(sigma, base, _scale_strings(scales), trials, seed)


def find_witness(k, attempts=16, seed=0):
    return _json.loads(_witness_json(k, attempts, seed))


def verify(level="desk", seed=0):
    return _json.loads(_verify_json(level, seed))
