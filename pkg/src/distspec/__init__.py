"""Certified distance-spectral computations and extremal checks for small graphs."""

from distspec.graph_core import (
    DistanceMatrix,
    Graph,
    Graph6Error,
    NotConnectedError,
    TransmissionProfile,
    UnsupportedSizeError,
    canonical_form,
    complement,
    distance_matrix,
    encode_graph6,
    is_connected,
    is_isomorphic,
    parse_graph6,
    transmissions,
)
from distspec.spectral import PerronCertificate, QuotientMatrix, perron, quotient_matrix
from distspec.bounds import (
    ClaimsReport,
    SigmaRecord,
    check_conjecture,
    check_theorem,
    classify_equality_case,
    gamma,
    minimizer_claims_report,
    sigma,
    sigma_n,
)

__version__ = "0.1.0"

__all__ = [
    "ClaimsReport",
    "DistanceMatrix",
    "Graph",
    "Graph6Error",
    "NotConnectedError",
    "PerronCertificate",
    "QuotientMatrix",
    "SigmaRecord",
    "TransmissionProfile",
    "UnsupportedSizeError",
    "canonical_form",
    "check_conjecture",
    "check_theorem",
    "classify_equality_case",
    "complement",
    "distance_matrix",
    "encode_graph6",
    "gamma",
    "is_connected",
    "is_isomorphic",
    "minimizer_claims_report",
    "parse_graph6",
    "perron",
    "quotient_matrix",
    "sigma",
    "sigma_n",
    "transmissions",
]
