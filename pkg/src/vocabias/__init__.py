"""Information-theoretic model of vocabulary learning on bipartite form-counterpart graphs."""
from .delta import (
    DeltaInputsCounterpartCapped,
    DeltaInputsVertexCapped,
    LinearDelta,
    StrategyEvaluator,
    counterpart_capped_extremes,
    delta_counterpart_capped,
    delta_general,
    delta_phi0,
    delta_vertex_capped,
    vertex_capped_extremes,
)
from .errors import BudgetError, DomainError, IntegrityError, SkeletonError, UndefinedDistributionError
from .flesh import CostParams, EntropyBundle, FleshParams, cost, entropies, joint_probability, marginals, normalizer
from .mutation import EntropyState, MutationEngine, apply_mutation, build_state, entropies_from_state
from .oracle import EnumerationSpec, brute_delta, brute_entropies, brute_omega, enumerate_skeleta
from .skeleton import Skeleton, SkeletonClass, classify, new_skeleton, parse_skeleton, toggle_edge

__version__ = "0.1.0"
