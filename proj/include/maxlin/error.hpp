#pragma once

#include <stdexcept>
#include <string>

namespace maxlin {

// Stable error codes surfaced through the CLI as machine-readable strings.
enum class errc {
  not_connected,
  directed_cycle,
  block_not_complete,
  block_not_transitive,
  duplicate_or_reversed_edge,
  unknown_node,
  path_budget_exceeded,
  weight_out_of_range,
  criticality_violated,
  criticality_tie,
  non_positive_diagonal,
  negative_input,
  non_positive_threshold,
  not_single_child,
  leaves_parameter_space,
  not_unique_source,
  empty_u,
  ambiguous_support,
  dimension_mismatch,
  enumeration_budget_exceeded,
  no_applicable_case,
  no_exit_path,
  atom_count_mismatch,
  unresolvable_tie,
  inconsistent_table,
  criterion_satisfied,
  too_few_exceedances,
  invalid_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace maxlin
