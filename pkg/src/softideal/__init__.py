"""Finite soft topological spaces and ideal convergence of soft-point sequences."""

from .convergence import (
    EpSoftSeq,
    build_interleaved_sequence,
    constant_sequence,
    differs_on,
    exception_set,
    gamma_set,
    hit_set,
    ideal_converges_to,
    ideal_limits,
    istar_converges_to,
    lambda_set,
    lift,
    soft_converges_to,
    soft_limit_points_of_sequence,
    stat_converges_to,
    subsequence_by_epset,
    witness_nonconvergent_subsequence,
)
from .ideals import Ideal, ap_witness, finite_ideal, ideal_contains, ideal_new, in_dual_filter, parse_ideal, satisfies_ap
from .natset import EpSet, ep_density, ep_from_bits, ep_from_finite, ep_from_residues, parse_epset
from .softset import (
    ParameterSet,
    PointGraph,
    SoftPoint,
    SoftSet,
    Universe,
    absolute_soft_set,
    empty_soft_set,
    make_soft_set,
)
from .topology import SoftTopology, enumerate_topologies, topology_new
from .workspace import Workspace, parse_workspace, serialize_workspace

__version__ = "0.1.0"

__all__ = [
    "EpSet",
    "EpSoftSeq",
    "Ideal",
    "ParameterSet",
    "PointGraph",
    "SoftPoint",
    "SoftSet",
    "SoftTopology",
    "Universe",
    "Workspace",
    "absolute_soft_set",
    "ap_witness",
    "build_interleaved_sequence",
    "constant_sequence",
    "differs_on",
    "empty_soft_set",
    "enumerate_topologies",
    "ep_density",
    "ep_from_bits",
    "ep_from_finite",
    "ep_from_residues",
    "exception_set",
    "finite_ideal",
    "gamma_set",
    "hit_set",
    "ideal_contains",
    "ideal_converges_to",
    "ideal_limits",
    "ideal_new",
    "in_dual_filter",
    "istar_converges_to",
    "lambda_set",
    "lift",
    "make_soft_set",
    "parse_epset",
    "parse_ideal",
    "parse_workspace",
    "satisfies_ap",
    "serialize_workspace",
    "soft_converges_to",
    "soft_limit_points_of_sequence",
    "stat_converges_to",
    "subsequence_by_epset",
    "topology_new",
    "witness_nonconvergent_subsequence",
]
