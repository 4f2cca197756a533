"""Co-verification of discretized human/robot workcells.

Bounded satisfiability checking of a metric-temporal workcell model plus
geometric replay of counterexample traces, so every reported hazard can be
confirmed or refuted against continuous 3D motion.
"""

from .encode import CheckResult, check, decode, encode
from .geometry import Box, aabb_max_distance, aabb_min_distance, contact_probability
from .logic import (
    Alw,
    And,
    Atom,
    Dist,
    Eq,
    EqVar,
    FiniteVariable,
    Formula,
    Implies,
    LeConst,
    Not,
    Or,
    Proposition,
    Som,
    SymbolTable,
    Trace,
    evaluate,
    free_symbols,
)
from .parsing import ParseError, parse_formula
from .replay import ClassifiedHazard, MotionCommand, classify, extract_motions, interpolate
from .world import (
    Mitigation,
    Scenario,
    ScenarioError,
    VerifyResult,
    apply_mitigation,
    bundled_scenario_path,
    compile_scenario,
    load_scenario,
    loads_scenario,
    risk_value,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Alw", "And", "Atom", "Box", "CheckResult", "ClassifiedHazard", "Dist", "Eq",
    "EqVar", "FiniteVariable", "Formula", "Implies", "LeConst", "Mitigation",
    "MotionCommand", "Not", "Or", "ParseError", "Proposition", "Scenario",
    "ScenarioError", "Som", "SymbolTable", "Trace", "VerifyResult",
    "aabb_max_distance", "aabb_min_distance", "apply_mitigation",
    "bundled_scenario_path", "check", "classify", "compile_scenario",
    "contact_probability", "decode", "encode", "evaluate", "extract_motions",
    "free_symbols", "interpolate", "load_scenario", "loads_scenario",
    "parse_formula", "risk_value", "verify",
]
