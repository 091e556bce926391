#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pretop/ptg.hpp"

namespace pretop {

// All union-closed families on n points containing the empty set whose total
// union is the whole space, streamed in a deterministic order.
// Pre: n <= caps().enum_points.
std::uint64_t enumerate_pretopologies(
    int n, const std::function<void(const pretopology&)>& sink = nullptr);

// Test-only style oracle over all 2^(2^n - 2) candidate families; n <= 4.
std::uint64_t enumerate_pretopologies_oracle(int n);

// One enumerated group pre-topology, with its generating identity
// neighborhoods and a stable instance name.
struct enumerated_instance {
  pretop_group instance;
  std::vector<mask_t> system;  // the accepted neighborhood system at e
  std::string name;            // "<group>#<index>"
  classification cls;          // computed once at enumeration time
};

enum class enum_strategy {
  automatic,   // generic below order 7, subgroup antichains above
  generic,     // all antichains of e-containing subsets
  subgroups,   // antichains of subgroups (atoms of any instance qualify)
};

// Filter: comma-separated classification flags, each optionally negated with
// '!', e.g. "pretopological,!topological". Empty keeps everything.
std::vector<enumerated_instance> enumerate_group_pretopologies(
    const finite_group& g, const std::string& filter = "",
    bool automorphism_dedup = false,
    enum_strategy strategy = enum_strategy::automatic, int jobs = 1);

// Replayable counterexample: the instance (group + open family) plus the
// violated theorem or question and free-form detail.
struct suite_witness {
  std::string theorem_id;
  std::string group_name;
  std::vector<std::vector<std::string>> family;  // open sets as label lists
  std::string detail;
};

struct theorem_record {
  std::string id;
  std::string statement;     // what is claimed, in plain words
  bool experimental = false;  // violations become findings, not failures
  // Returns nullopt when the hypothesis is unmet; otherwise the violation
  // witness detail if the conclusion fails, or an empty string on pass.
  std::function<std::optional<std::string>(const enumerated_instance&)> check;
};

std::vector<theorem_record> default_registry();

struct theorem_outcome {
  std::string id;
  bool experimental = false;
  int pass = 0;
  int skip = 0;
  std::vector<suite_witness> violations;
};

struct finding_t {
  std::string kind;  // "erratum-candidate" | "experimental"
  std::string id;
  std::string detail;
};

struct suite_report {
  std::vector<theorem_outcome> theorems;
  std::vector<finding_t> findings;
  struct certificate_t {
    int order_lo = 0, order_hi = 0;
    int groups = 0;
    int instances = 0;
    std::string dedup;  // "none" | "automorphism"
  } certificate;
  bool proven_violation = false;
};

// Enumerated instances for the catalog orders [lo, hi] plus the built-in
// fixtures; canonical order, independent of jobs.
std::vector<enumerated_instance> suite_instances(int order_lo, int order_hi,
                                                 bool automorphism_dedup,
                                                 int jobs);

suite_report run_theorem_suite(const std::vector<enumerated_instance>& instances,
                               const std::vector<theorem_record>& registry,
                               int jobs = 1);

// Re-runs the violated check on the stored instance; true when the stored
// verdict reproduces.
bool replay_witness(const suite_witness& w,
                    const std::vector<theorem_record>& registry);

struct search_task {
  std::string question;
  int order_lo = 1, order_hi = 6;
  bool automorphism_dedup = true;
  int jobs = 1;
};

struct search_result {
  std::string question;
  bool exhausted = false;
  std::optional<suite_witness> witness;
  std::string note;  // question-specific context recorded in the output
  int orders_lo = 0, orders_hi = 0;
  int instances_scanned = 0;
  bool refutes_proven = false;  // a witness here indicates a defect
};

std::vector<std::string> known_questions();
search_result search_counterexample(const search_task& task);

}  // namespace pretop
