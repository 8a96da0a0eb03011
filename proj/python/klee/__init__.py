"""Python interface to the klee C++ core.

Build K_eps and its origin-symmetric partner L_eps, compare their inner
section functions and run the certification suite.
"""

from ._klee import (
    SCHEMA_VERSION,
    Body,
    Check,
    NumericalError,
    Partner,
    Report,
    VerifyConfig,
    ball_volume,
    build_k,
    build_l,
    build_partner,
    critical_epsilon,
    inner_section,
    klee_curvature,
    radon_multipliers,
    report_json,
    section_area,
    section_area_mc,
    sphere_area,
    unit_ball,
    verify,
)

__all__ = [
    "SCHEMA_VERSION",
    "Body",
    "Check",
    "NumericalError",
    "Partner",
    "Report",
    "VerifyConfig",
    "ball_volume",
    "build_k",
    "build_l",
    "build_partner",
    "critical_epsilon",
    "inner_section",
    "klee_curvature",
    "radon_multipliers",
    "report_json",
    "section_area",
    "section_area_mc",
    "sphere_area",
    "unit_ball",
    "verify",
]
