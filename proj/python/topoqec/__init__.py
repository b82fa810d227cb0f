"""Surface-code toolkit: stabilizer simulation, matching decoders, and
magic-state distillation analytics, backed by the C++ core."""

from topoqec._core import (
    CliffordCircuit,
    CodeFixture,
    Graph,
    MeasureOutcome,
    PauliProduct,
    ResultRow,
    ResultTable,
    RngStream,
    StabilizerTableau,
    SurfaceCodeLayout,
    braid_cnot_verify,
    build_code,
    code_fixture,
    code_fixture_names,
    concat_analytics,
    coupling_from_p,
    decode_syndrome,
    decode_trial,
    distill_cost,
    distill_curve,
    distill_threshold,
    estimate_crossing,
    outcome_probability,
    parse_circuit,
    run_threshold_experiment,
    sample_circuit,
    syndrome_bias_circuit,
    syndrome_bias_phenomenological,
)

__all__ = [
    "CliffordCircuit",
    "CodeFixture",
    "Graph",
    "MeasureOutcome",
    "PauliProduct",
    "ResultRow",
    "ResultTable",
    "RngStream",
    "StabilizerTableau",
    "SurfaceCodeLayout",
    "braid_cnot_verify",
    "build_code",
    "code_fixture",
    "code_fixture_names",
    "concat_analytics",
    "coupling_from_p",
    "decode_syndrome",
    "decode_trial",
    "distill_cost",
    "distill_curve",
    "distill_threshold",
    "estimate_crossing",
    "outcome_probability",
    "parse_circuit",
    "run_threshold_experiment",
    "sample_circuit",
    "syndrome_bias_circuit",
    "syndrome_bias_phenomenological",
]

__version__ = "0.1.0"
