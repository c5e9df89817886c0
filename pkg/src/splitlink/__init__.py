"""Entanglement splitting of small pure states under single-qubit measurement,
read against the cut behaviour of three-component links."""

__version__ = "0.1.0"

from .classify import (
    Analogue,
    ClassificationResult,
    CutSemantics,
    classify,
    consistency_check,
    matching_models,
)
from .links import LinkKind, LinkModel, borromean, chain3, cut, hopf3, standard_models
from .measure import (
    PROB_TOL,
    MeasurementRecord,
    SingleQubitBasis,
    measure_computational,
    project_arbitrary,
)
from .profile import SplittingEntry, SplittingProfile, build_profile
from .schmidt import (
    RANK_TOL,
    Bipartition,
    SchmidtResult,
    coefficient_matrix,
    schmidt_decompose,
    schmidt_rank,
)
from .state import (
    NORM_TOL,
    CanonicalState,
    PureState,
    construct_canonical,
    fidelity,
    from_amplitudes,
)
