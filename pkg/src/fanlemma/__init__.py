"""Constructive Fan and Tucker lemmas on symmetric spheres aligned with a flag of hemispheres."""

from .complex import SymmetricComplex, cofacets, faces, simplex, validate_symmetry
from .errors import (
    FanLemmaError,
    HypothesisError,
    LabelingError,
    StructuralAnomaly,
    ValidationError,
)
from .flag import Carrier, HemisphereFlag, validate_flag
from .generators import GeneratorSpec, barycentric, generate, octahedral, paper_tetra
from .labeling import (
    Kind,
    Labeling,
    SimplexClass,
    classify,
    from_representatives,
    induced_labeling,
    random_labeling,
    validate_labeling,
)
from .oracle import OracleReport, build_graph, count_alternating, count_tucker_endpoints, verify_path
from .pathfinder import Mode, Node, PathGraph, PathTrace, Termination, run, trace_antipode

__version__ = "0.1.0"

__all__ = [
    "Carrier",
    "FanLemmaError",
    "GeneratorSpec",
    "HemisphereFlag",
    "HypothesisError",
    "Kind",
    "Labeling",
    "LabelingError",
    "Mode",
    "Node",
    "OracleReport",
    "PathGraph",
    "PathTrace",
    "SimplexClass",
    "StructuralAnomaly",
    "SymmetricComplex",
    "Termination",
    "ValidationError",
    "barycentric",
    "build_graph",
    "classify",
    "cofacets",
    "count_alternating",
    "count_tucker_endpoints",
    "faces",
    "from_representatives",
    "generate",
    "induced_labeling",
    "octahedral",
    "paper_tetra",
    "random_labeling",
    "run",
    "simplex",
    "trace_antipode",
    "validate_flag",
    "validate_labeling",
    "validate_symmetry",
    "verify_path",
]
