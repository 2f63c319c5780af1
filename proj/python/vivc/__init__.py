"""Python bindings for the V_IVC delay-function core."""

from ._vivc import (
    VivcError,
    commit,
    cycle_experiment,
    decommit,
    derive_delay,
    entropy_d,
    eval_json,
    iterate,
    merkle_root,
    rand_gen_str,
    step,
    trusted_setup_json,
    verify_json,
)

__all__ = [
    "VivcError",
    "commit",
    "cycle_experiment",
    "decommit",
    "derive_delay",
    "entropy_d",
    "eval_json",
    "iterate",
    "merkle_root",
    "rand_gen_str",
    "step",
    "trusted_setup_json",
    "verify_json",
]
