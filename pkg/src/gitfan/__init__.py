# GIT 扇模块
from .afaces import enumerate_afaces, expand_afaces
from .checkpoint import TraversalCheckpoint, load_checkpoint, save_checkpoint
from .derived import OrbitGraph, expand_fan, extract_semiample_and_mori, moving_cone, orbit_adjacency_graph
from .hashing import HashStore, act_on_hash, hash_at, hash_of, hash_orbit, orbit_min_hash
from .models import AdjacencyEdge, AFaceOrbit, ConeModel, FanStatistics, GitFanResult, TraversalMode
from .neighbors import FrontierEntry, Neighbor, find_neighbor, interior_entries, start_point
from .orbit_cones import (
    OrbitConeTable,
    face_cone,
    gitcone_at,
    minimal_full_dim,
    project_orbit_cones,
    reduce_by_orbit_inclusion,
)
from .pipeline import PipelineOptions, PipelineRun, compute_git_fan, enumerate_afaces_async, run_pipeline
from .traversal import FanTraversal, traverse_plain, traverse_symmetric

__all__ = [
    "enumerate_afaces",
    "expand_afaces",
    "TraversalCheckpoint",
    "load_checkpoint",
    "save_checkpoint",
    "OrbitGraph",
    "expand_fan",
    "extract_semiample_and_mori",
    "moving_cone",
    "orbit_adjacency_graph",
    "HashStore",
    "act_on_hash",
    "hash_at",
    "hash_of",
    "hash_orbit",
    "orbit_min_hash",
    "AdjacencyEdge",
    "AFaceOrbit",
    "ConeModel",
    "FanStatistics",
    "GitFanResult",
    "TraversalMode",
    "FrontierEntry",
    "Neighbor",
    "find_neighbor",
    "interior_entries",
    "start_point",
    "OrbitConeTable",
    "face_cone",
    "gitcone_at",
    "minimal_full_dim",
    "project_orbit_cones",
    "reduce_by_orbit_inclusion",
    "PipelineOptions",
    "PipelineRun",
    "compute_git_fan",
    "enumerate_afaces_async",
    "run_pipeline",
    "FanTraversal",
    "traverse_plain",
    "traverse_symmetric",
]
