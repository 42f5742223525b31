"""Exact search for stable sets meeting every maximum clique, built on
clique intersection structure and independent systems of representatives."""

from .cliques import (
    CliqueComponent,
    CliqueSet,
    HajnalReport,
    KERNEL_BACKEND,
    KostochkaReport,
    check_hajnal,
    check_hajnal_subset,
    check_kostochka,
    clique_graph,
    components,
    hypothesis_met,
    maximum_cliques,
)
from .errors import BudgetExceededError, CliquehitError, InvariantViolationError
from .graphs import (
    Graph,
    PartitionedGraph,
    SplitMix64,
    emit_dimacs,
    emit_partition,
    gen_blown_up_cycle,
    gen_haxell_gadget,
    gen_linked_cliques,
    gen_random,
    parse_dimacs,
    parse_partition,
    to_dot,
)
from .hitting import (
    HittingReport,
    brute_force_hitting,
    choose_k,
    hitting_stable_set,
    verify_hitting,
)
from .isr import (
    AugmentResult,
    DominationCertificate,
    find_certificate_exact,
    find_isr_augmenting,
    find_isr_exact,
    find_isr_for_blocks,
    lopsided_check,
    theorem4_bound_audit,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentResult",
    "BudgetExceededError",
    "CliqueComponent",
    "CliqueSet",
    "CliquehitError",
    "DominationCertificate",
    "Graph",
    "HajnalReport",
    "HittingReport",
    "InvariantViolationError",
    "KERNEL_BACKEND",
    "KostochkaReport",
    "PartitionedGraph",
    "SplitMix64",
    "brute_force_hitting",
    "check_hajnal",
    "check_hajnal_subset",
    "check_kostochka",
    "choose_k",
    "clique_graph",
    "components",
    "emit_dimacs",
    "emit_partition",
    "find_certificate_exact",
    "find_isr_augmenting",
    "find_isr_exact",
    "find_isr_for_blocks",
    "gen_blown_up_cycle",
    "gen_haxell_gadget",
    "gen_linked_cliques",
    "gen_random",
    "hitting_stable_set",
    "hypothesis_met",
    "lopsided_check",
    "maximum_cliques",
    "parse_dimacs",
    "parse_partition",
    "theorem4_bound_audit",
    "to_dot",
    "verify_certificate",
    "verify_hitting",
]
