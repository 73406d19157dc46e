#include "maxlin/error.hpp"

namespace maxlin {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_connected: return "NotConnected";
    case errc::directed_cycle: return "DirectedCycle";
    case errc::block_not_complete: return "BlockNotComplete";
    case errc::block_not_transitive: return "BlockNotTransitive";
    case errc::duplicate_or_reversed_edge: return "DuplicateOrReversedEdge";
    case errc::unknown_node: return "UnknownNode";
    case errc::path_budget_exceeded: return "PathBudgetExceeded";
    case errc::weight_out_of_range: return "WeightOutOfRange";
    case errc::criticality_violated: return "CriticalityViolated";
    case errc::criticality_tie: return "CriticalityTie";
    case errc::non_positive_diagonal: return "NonPositiveDiagonal";
    case errc::negative_input: return "NegativeInput";
    case errc::non_positive_threshold: return "NonPositiveThreshold";
    case errc::not_single_child: return "NotSingleChild";
    case errc::leaves_parameter_space: return "LeavesParameterSpace";
    case errc::not_unique_source: return "NotUniqueSource";
    case errc::empty_u: return "EmptyU";
    case errc::ambiguous_support: return "AmbiguousSupport";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::enumeration_budget_exceeded: return "EnumerationBudgetExceeded";
    case errc::no_applicable_case: return "NoApplicableCase";
    case errc::no_exit_path: return "NoExitPath";
    case errc::atom_count_mismatch: return "AtomCountMismatch";
    case errc::unresolvable_tie: return "UnresolvableTie";
    case errc::inconsistent_table: return "InconsistentTable";
    case errc::criterion_satisfied: return "CriterionSatisfied";
    case errc::too_few_exceedances: return "TooFewExceedances";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace maxlin
