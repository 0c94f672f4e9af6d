"""weinkit: exact handle-calculus homology, Reeb chord/orbit grading, and
asymptotic-dynamical-convexity certificates for Weinstein domains."""

__version__ = "0.1.0"

from .graded import (
    ChainComplex,
    GradedGroup,
    cancel_summand,
    cohomology_from_homology,
    euler_characteristic,
    homology,
    homology_from_cohomology,
    invariant_factor_chain,
    semi_characteristic,
)
from .snf import SNFResult, bareiss_determinant, is_unimodular, smith_normal_form
from .handles import (
    BoundaryHomologyReport,
    C1Report,
    HandlePresentation,
    OmegaVerdict,
    boundary_connect_sum,
    boundary_homology,
    c1_propagation_check,
    cohomology,
    handlebody_boundary_homology,
    intersection_form_rank,
    omega_membership,
)
from .floer import (
    LoopHomologyTable,
    SHPlusProfile,
    Verdict,
    boundedinfinite_distinguisher,
    cem_flexible_obstruction,
    distinguish_flexible_fillings,
    flexible_support_test,
    nearby_conclusion,
    sh_plus_from_vanishing,
    sh_plus_reindex_back,
    sh_support_adc_obstruction,
    taut_les_bounds,
    wh_plus_from_vanishing,
    wrapped_loop_grading,
)
from .chords import (
    ChordRecord,
    ChordSpectrum,
    MorseData,
    SelfIntersectionIndex,
    chord_degree,
    choose_Q,
    min_positive_N,
    self_intersection_index,
    stabilize,
)
from .surgery import (
    ADCCertificate,
    CyclicWord,
    OrbitRecord,
    OrbitSpectrum,
    Stage,
    adc_check,
    add_surgery_chord,
    belt_sphere_chords,
    canonical_rotation,
    enumerate_words,
    flexible_surgery_certificate,
    legendrian_surgery_rules,
    nonsimultaneous_words,
    normalize_certificate,
    orbits_after_surgery,
    rescale,
    subcritical_surgery,
)
from .scaling import (
    GProfile,
    bound_ratio,
    build_g,
    conformal_bound,
    verify_h_family,
)
from .corpus import CORPUS, examples_corpus, run_example

__all__ = [
    "ADCCertificate",
    "BoundaryHomologyReport",
    "C1Report",
    "CORPUS",
    "ChainComplex",
    "ChordRecord",
    "ChordSpectrum",
    "CyclicWord",
    "GProfile",
    "GradedGroup",
    "HandlePresentation",
    "LoopHomologyTable",
    "MorseData",
    "OmegaVerdict",
    "OrbitRecord",
    "OrbitSpectrum",
    "SHPlusProfile",
    "SNFResult",
    "SelfIntersectionIndex",
    "Stage",
    "Verdict",
    "adc_check",
    "add_surgery_chord",
    "bareiss_determinant",
    "belt_sphere_chords",
    "bound_ratio",
    "boundary_connect_sum",
    "boundary_homology",
    "boundedinfinite_distinguisher",
    "build_g",
    "c1_propagation_check",
    "cancel_summand",
    "canonical_rotation",
    "cem_flexible_obstruction",
    "chord_degree",
    "choose_Q",
    "cohomology",
    "cohomology_from_homology",
    "conformal_bound",
    "distinguish_flexible_fillings",
    "enumerate_words",
    "euler_characteristic",
    "examples_corpus",
    "flexible_support_test",
    "flexible_surgery_certificate",
    "handlebody_boundary_homology",
    "homology",
    "homology_from_cohomology",
    "intersection_form_rank",
    "invariant_factor_chain",
    "is_unimodular",
    "legendrian_surgery_rules",
    "min_positive_N",
    "nearby_conclusion",
    "nonsimultaneous_words",
    "normalize_certificate",
    "omega_membership",
    "orbits_after_surgery",
    "rescale",
    "run_example",
    "self_intersection_index",
    "semi_characteristic",
    "sh_plus_from_vanishing",
    "sh_plus_reindex_back",
    "sh_support_adc_obstruction",
    "smith_normal_form",
    "stabilize",
    "subcritical_surgery",
    "taut_les_bounds",
    "verify_h_family",
    "wh_plus_from_vanishing",
    "wrapped_loop_grading",
]
