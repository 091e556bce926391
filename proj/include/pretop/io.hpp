#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pretop/explore.hpp"
#include "pretop/prenorm.hpp"
#include "pretop/quotient.hpp"
#include "pretop/separation.hpp"

namespace pretop {

using json = nlohmann::json;

// ---- fixtures ------------------------------------------------------------

// "P6", "P4", "discrete:<group>", "indiscrete:<group>"; groups by catalog
// name or "cyclic:N".
std::optional<pretop_group> fixture(const std::string& name);

pretopology fixture_p6_topology();
pretopology fixture_p4_topology();
pretopology discrete_topology(const universe_t& u);
pretopology indiscrete_topology(const universe_t& u);

// ---- file formats ----------------------------------------------------------

// {"universe": [labels], "sets": [[labels]]}
set_family family_from_json(const json& j);
json family_to_json(const set_family& fam);

// {"name", "elements", "table"} or {"cyclic": n} or {"product": [spec, spec]}
finite_group group_from_json(const json& j);
json group_to_json(const finite_group& g);

set_family load_family(const std::string& path);
finite_group load_group(const std::string& path);

// ---- report serialization ---------------------------------------------------

json to_json(const universe_t& u, const witness_t& w);
json to_json(const pretop_group& x, const classification& c);
json to_json(const universe_t& u, const separation_report_t& r);
json to_json(const quotient_space& q);
json to_json(const quotient_group_result& q);
json to_json(const pretop_group& x, const prenorm_t& n);
json to_json(const universe_t& u, const cardinal_report& r);
json to_json(const suite_report& r);
json to_json(const search_result& r);
json to_json(const suite_witness& w);
suite_witness witness_from_json(const json& j);

// Reconstructs the stored instance of a witness (group + family).
pretop_group instance_from_witness(const suite_witness& w);

// ---- rendering -----------------------------------------------------------

std::string render_text(const json& report);  // lossy pretty form
std::string render(const json& report, const std::string& format);  // json|text

}  // namespace pretop
