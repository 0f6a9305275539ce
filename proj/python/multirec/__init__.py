"""Multidimensional infinite words: generators, recurrence checks and derivatives."""

from ._multirec import (
    MultirecError,
    check_condition,
    check_surd,
    classify_2x2,
    derivative,
    directional,
    enumerate_2x2,
    fibonacci,
    letter,
    measure_gaps,
    morphism_presets,
    non_surd_witness,
    prefix,
    render,
    subgroups,
    thue_morse,
    ur_window_bound,
    verify_figures,
    word_presets,
)

__all__ = [
    "MultirecError",
    "check_condition",
    "check_surd",
    "classify_2x2",
    "derivative",
    "directional",
    "enumerate_2x2",
    "fibonacci",
    "letter",
    "measure_gaps",
    "morphism_presets",
    "non_surd_witness",
    "prefix",
    "render",
    "subgroups",
    "thue_morse",
    "ur_window_bound",
    "verify_figures",
    "word_presets",
]
