#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>

#include "pretop/caps.hpp"
#include "pretop/dyadic.hpp"
#include "pretop/errors.hpp"
#include "pretop/universe.hpp"

namespace pretop {

const char* errc_name(errc code) {
  switch (code) {
    case errc::universe_not_covered: return "UniverseNotCovered";
    case errc::not_subfamily: return "NotSubfamily";
    case errc::empty_subspace: return "EmptySubspace";
    case errc::cap_exceeded: return "CapExceeded";
    case errc::not_associative: return "NotAssociative";
    case errc::no_identity: return "NoIdentity";
    case errc::no_inverse: return "NoInverse";
    case errc::not_subgroup: return "NotSubgroup";
    case errc::not_normal: return "NotNormal";
    case errc::not_closed_subgroup: return "NotClosedSubgroup";
    case errc::not_pretop_group: return "NotPreTopGroup";
    case errc::not_almost_topological: return "NotAlmostTopological";
    case errc::axioms_violated: return "AxiomsViolated";
    case errc::invalid_chain: return "InvalidChain";
    case errc::not_invariant_chain: return "NotInvariantChain";
    case errc::kernel_not_normal: return "KernelNotNormal";
    case errc::not_closed: return "NotClosed";
    case errc::point_in_set: return "PointInSet";
    case errc::not_t1: return "NotT1";
    case errc::not_surjective: return "NotSurjective";
    case errc::not_precontinuous: return "NotPreContinuous";
    case errc::not_open_map: return "NotOpenMap";
    case errc::unknown_question: return "UnknownQuestion";
    case errc::bad_input: return "BadInput";
  }
  return "Error";
}

void caps_t::apply_override(const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      fail(errc::bad_input, "cap override needs name=value: '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(errc::bad_input, "cap override value not an integer: '" + item + "'");
    }
    if (value < 1) fail(errc::bad_input, "cap must be positive: '" + item + "'");
    if (key == "component_points") component_points = value;
    else if (key == "product_points") product_points = value;
    else if (key == "product_members") product_members = value;
    else if (key == "coset_count") coset_count = value;
    else if (key == "subgroup_order") subgroup_order = value;
    else if (key == "iso_order") iso_order = value;
    else if (key == "enum_points") enum_points = value;
    else if (key == "enum_order_full") enum_order_full = value;
    else if (key == "enum_order_filtered") enum_order_filtered = value;
    else fail(errc::bad_input, "unknown cap name: '" + key + "'");
  }
}

caps_t& caps() {
  static caps_t instance = [] {
    caps_t c;
    if (const char* env = std::getenv("PRETOP_CAP_OVERRIDE"); env && *env)
      c.apply_override(env);
    return c;
  }();
  return instance;
}

universe_t::universe_t(std::vector<std::string> ls) : labels(std::move(ls)) {
  if (labels.empty()) fail(errc::bad_input, "universe must have at least one point");
  if (labels.size() > 64) fail(errc::bad_input, "universe larger than 64 points");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      fail(errc::bad_input, "duplicate universe label '" + l + "'");
}

int universe_t::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

std::vector<std::string> universe_t::mask_labels(mask_t m) const {
  std::vector<std::string> out;
  for (int i : mask_elements(m)) out.push_back(labels[i]);
  return out;
}

mask_t universe_t::mask_of(const std::vector<std::string>& ls) const {
  mask_t m = 0;
  for (const auto& l : ls) {
    int i = index_of(l);
    if (i < 0) fail(errc::bad_input, "label '" + l + "' not in universe");
    m |= mask_t{1} << i;
  }
  return m;
}

dyadic dyadic::parse(const std::string& s) {
  auto slash = s.find("/2^");
  try {
    if (slash == std::string::npos) return dyadic{std::stoull(s), 0};
    return dyadic{std::stoull(s.substr(0, slash)), std::stoi(s.substr(slash + 3))};
  } catch (const std::exception&) {
    fail(errc::bad_input, "bad dyadic '" + s + "'");
  }
}

}  // namespace pretop
