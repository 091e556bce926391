#pragma once

#include <stdexcept>
#include <string>

namespace pretop {

enum class errc {
  universe_not_covered,
  not_subfamily,
  empty_subspace,
  cap_exceeded,
  not_associative,
  no_identity,
  no_inverse,
  not_subgroup,
  not_normal,
  not_closed_subgroup,
  not_pretop_group,
  not_almost_topological,
  axioms_violated,
  invalid_chain,
  not_invariant_chain,
  kernel_not_normal,
  not_closed,
  point_in_set,
  not_t1,
  not_surjective,
  not_precontinuous,
  not_open_map,
  unknown_question,
  bad_input,
};

const char* errc_name(errc code);

// Library-wide error type. `code` distinguishes contract violations
// (bad input, exit code 2 at the CLI) from cap overruns and internal checks.
class error : public std::runtime_error {
 public:
  error(errc code, std::string what_arg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

}  // namespace pretop
