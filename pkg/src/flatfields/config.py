"""Tunable limits for certifications and enumerations.

All algorithms are exact; these caps only bound how long a certification is
allowed to refine or enumerate before giving up with a diagnostic error.
"""

import json
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Config:
    # exactnum
    subfield_degree_limit: int = 6      # subfields() refuses larger fields
    factor_degree_limit: int = 32       # factorization over Q degree cap
    join_coeff_limit: int = 64          # primitive element search c = 0..limit
    # monodromy
    perron_graeffe_cap: int = 12        # Graeffe doublings before diagnosing a tie
    trace_stable_lengths: int = 3       # word lengths with no field growth
    trace_word_cap_factor: int = 2      # word length cap = factor * dim
    block_power_bound: int = 24         # powers tried to fix ker(p) pointwise

    def with_overrides(self, **kw):
        return replace(self, **kw)


DEFAULT = Config()


def load_config(path) -> Config:
    """Read overrides from a JSON file; unknown keys are rejected."""
    with open(path) as fh:
        data = json.load(fh)
    known = set(Config.__dataclass_fields__)
    bad = set(data) - known
    if bad:
        raise ValueError(f"unknown config keys: {sorted(bad)}")
    return DEFAULT.with_overrides(**data)
