#include "pretop/io.hpp"

#include <fstream>
#include <sstream>

#include "pretop/errors.hpp"

namespace pretop {

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

pretopology discrete_topology(const universe_t& u) {
  std::vector<mask_t> singles;
  for (int i = 0; i < u.size(); ++i) singles.push_back(mask_t{1} << i);
  return union_close(u, singles);
}

pretopology indiscrete_topology(const universe_t& u) {
  return union_close(u, {u.all()});
}

namespace {

pretopology family_of(const universe_t& u,
                      const std::vector<std::vector<std::string>>& sets) {
  std::vector<mask_t> members;
  for (const auto& s : sets) members.push_back(u.mask_of(s));
  set_family fam(u, std::move(members));
  if (auto v = is_pretopology(fam))
    fail(errc::bad_input, "fixture family is not a pre-topology");
  return pretopology{std::move(fam)};
}

}  // namespace

pretopology fixture_p6_topology() {
  universe_t u = cyclic(6).universe;
  return family_of(
      u, {{},
          {"0", "3"},
          {"1", "4"},
          {"2", "5"},
          {"0", "2", "4"},
          {"1", "3", "5"},
          {"0", "1", "3", "4"},
          {"0", "2", "3", "5"},
          {"0", "2", "3", "4"},
          {"0", "1", "3", "5"},
          {"1", "2", "4", "5"},
          {"0", "1", "2", "4"},
          {"1", "3", "4", "5"},
          {"0", "2", "4", "5"},
          {"1", "2", "3", "5"},
          {"0", "1", "2", "3", "4"},
          {"0", "1", "3", "4", "5"},
          {"0", "2", "3", "4", "5"},
          {"0", "1", "2", "3", "5"},
          {"0", "1", "2", "4", "5"},
          {"1", "2", "3", "4", "5"},
          {"0", "1", "2", "3", "4", "5"}});
}

pretopology fixture_p4_topology() {
  universe_t u = cyclic(4).universe;
  return family_of(u, {{},
                       {"0", "1", "3"},
                       {"0", "1", "2"},
                       {"1", "2", "3"},
                       {"0", "2", "3"},
                       {"0", "1", "2", "3"}});
}

std::optional<pretop_group> fixture(const std::string& name) {
  if (name == "P6") return make_pretop_group(cyclic(6), fixture_p6_topology());
  if (name == "P4") return make_pretop_group(cyclic(4), fixture_p4_topology());
  for (const char* prefix : {"discrete:", "indiscrete:"}) {
    if (name.rfind(prefix, 0) != 0) continue;
    auto g = group_by_name(name.substr(std::string(prefix).size()));
    if (!g) return std::nullopt;
    pretopology top = name[0] == 'd' ? discrete_topology(g->universe)
                                     : indiscrete_topology(g->universe);
    return make_pretop_group(std::move(*g), std::move(top));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// file formats
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(errc::bad_input, where + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) fail(errc::bad_input, where + " must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

set_family family_from_json(const json& j) {
  if (!j.is_object()) fail(errc::bad_input, "family file must be a JSON object");
  if (!j.contains("universe")) fail(errc::bad_input, "family file misses 'universe'");
  if (!j.contains("sets")) fail(errc::bad_input, "family file misses 'sets'");
  universe_t u(string_list(j["universe"], "'universe'"));
  if (!j["sets"].is_array()) fail(errc::bad_input, "'sets' must be an array");
  std::vector<mask_t> members;
  int idx = 0;
  for (const auto& s : j["sets"]) {
    members.push_back(u.mask_of(string_list(s, "sets[" + std::to_string(idx) + "]")));
    ++idx;
  }
  return set_family(std::move(u), std::move(members));
}

json family_to_json(const set_family& fam) {
  json j;
  j["universe"] = fam.universe.labels;
  json sets = json::array();
  for (mask_t m : fam.members) sets.push_back(fam.universe.mask_labels(m));
  j["sets"] = std::move(sets);
  return j;
}

finite_group group_from_json(const json& j) {
  if (!j.is_object()) fail(errc::bad_input, "group file must be a JSON object");
  if (j.contains("cyclic")) {
    if (!j["cyclic"].is_number_integer())
      fail(errc::bad_input, "'cyclic' must be an integer");
    return cyclic(j["cyclic"].get<int>());
  }
  if (j.contains("product")) {
    if (!j["product"].is_array() || j["product"].size() != 2)
      fail(errc::bad_input, "'product' must be a two-element array");
    return direct_product(group_from_json(j["product"][0]),
                          group_from_json(j["product"][1]));
  }
  if (j.contains("name") && j["name"].is_string() && !j.contains("table")) {
    if (auto g = group_by_name(j["name"].get<std::string>())) return *g;
    fail(errc::bad_input, "unknown catalog group '" + j["name"].get<std::string>() + "'");
  }
  if (!j.contains("elements")) fail(errc::bad_input, "group file misses 'elements'");
  if (!j.contains("table")) fail(errc::bad_input, "group file misses 'table'");
  universe_t u(string_list(j["elements"], "'elements'"));
  if (!j["table"].is_array()) fail(errc::bad_input, "'table' must be an array");
  std::vector<std::vector<int>> table;
  int row_idx = 0;
  for (const auto& row : j["table"]) {
    auto labels = string_list(row, "table[" + std::to_string(row_idx) + "]");
    std::vector<int> r;
    for (const auto& l : labels) {
      int i = u.index_of(l);
      if (i < 0)
        fail(errc::bad_input, "table[" + std::to_string(row_idx) + "] entry '" + l +
                                  "' is not an element");
      r.push_back(i);
    }
    table.push_back(std::move(r));
    ++row_idx;
  }
  std::string name = j.contains("name") && j["name"].is_string()
                         ? j["name"].get<std::string>()
                         : "G";
  return validate_group(name, std::move(u), std::move(table));
}

json group_to_json(const finite_group& g) {
  json j;
  j["name"] = g.name;
  j["elements"] = g.universe.labels;
  json table = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.universe.label(g.op(a, b)));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    fail(errc::bad_input, "'" + path + "': " + ex.what());
  }
  return j;
}

}  // namespace

set_family load_family(const std::string& path) { return family_from_json(load_json(path)); }
finite_group load_group(const std::string& path) { return group_from_json(load_json(path)); }

// ---------------------------------------------------------------------------
// report serialization
// ---------------------------------------------------------------------------

json to_json(const universe_t& u, const witness_t& w) {
  json j;
  json sets = json::array();
  for (mask_t m : w.sets) sets.push_back(u.mask_labels(m));
  j["sets"] = std::move(sets);
  json points = json::array();
  for (int p : w.points)
    points.push_back(p >= 0 && p < u.size() ? json(u.label(p)) : json(p));
  j["points"] = std::move(points);
  j["note"] = w.note;
  return j;
}

json to_json(const pretop_group& x, const classification& c) {
  json j;
  json flags = json::object();
  flags["right_ptg"] = c.right_ptg;
  flags["left_ptg"] = c.left_ptg;
  flags["semi"] = c.semi;
  flags["quasi"] = c.quasi;
  flags["para"] = c.para;
  flags["pretopological"] = c.pretopological;
  flags["strongly"] = c.strongly;
  flags["symmetrically"] = c.symmetrically;
  flags["almost"] = c.almost;
  flags["topological"] = c.topological;
  j["flags"] = std::move(flags);
  json witnesses = json::object();
  for (const auto& [name, w] : c.witnesses)
    witnesses[name] = to_json(x.group.universe, w);
  j["witnesses"] = std::move(witnesses);
  return j;
}

json to_json(const universe_t& u, const separation_report_t& r) {
  json j;
  j["t0"] = r.t0;
  j["t1"] = r.t1;
  j["t2"] = r.t2;
  j["regular"] = r.regular;
  j["completely_regular"] = r.completely_regular;
  json witnesses = json::object();
  for (const auto& [name, w] : r.witnesses) witnesses[name] = to_json(u, w);
  j["witnesses"] = std::move(witnesses);
  return j;
}

json to_json(const quotient_space& q) {
  json j;
  json cosets = json::array();
  for (mask_t c : q.cosets) cosets.push_back(q.base.group.universe.mask_labels(c));
  j["cosets"] = std::move(cosets);
  j["topology"] = family_to_json(q.top.fam);
  json flags = json::object();
  flags["pi_open"] = q.checks.pi_open;
  flags["translate_prebase"] = q.checks.translate_prebase;
  bool discrete = static_cast<std::uint64_t>(q.top.opens().size()) ==
                  (std::uint64_t{1} << q.cosets.size());
  flags["discrete"] = discrete;
  if (q.checks.t1) flags["t1"] = *q.checks.t1;
  if (q.checks.regular) flags["regular"] = *q.checks.regular;
  j["flags"] = std::move(flags);
  return j;
}

json to_json(const quotient_group_result& q) {
  json j;
  j["group"] = group_to_json(q.quotient.group);
  j["topology"] = family_to_json(q.quotient.top.fam);
  j["classification"] = to_json(q.quotient, q.cls);
  j["separation"] = to_json(q.quotient.group.universe, q.separation);
  j["sandwich_ok"] = q.sandwich_ok;
  return j;
}

json to_json(const pretop_group& x, const prenorm_t& n) {
  json values = json::object();
  for (int a = 0; a < x.group.order(); ++a)
    values[x.group.universe.label(a)] = n.at(a).str();
  json j;
  j["values"] = std::move(values);
  return j;
}

json to_json(const universe_t& u, const cardinal_report& r) {
  json j;
  j["weight"] = r.weight;
  json character = json::object();
  for (int p = 0; p < u.size(); ++p) character[u.label(p)] = r.character[p];
  j["character"] = std::move(character);
  j["cellularity"] = r.cellularity;
  j["density"] = r.density;
  json witnesses = json::object();
  json cellular = json::array();
  for (mask_t m : r.cellular_family) cellular.push_back(u.mask_labels(m));
  witnesses["cellular_family"] = std::move(cellular);
  witnesses["dense_set"] = u.mask_labels(r.dense_set);
  j["witnesses"] = std::move(witnesses);
  return j;
}

json to_json(const suite_witness& w) {
  json j;
  j["theorem"] = w.theorem_id;
  j["group"] = w.group_name;
  j["family"] = w.family;
  j["detail"] = w.detail;
  return j;
}

suite_witness witness_from_json(const json& j) {
  suite_witness w;
  w.theorem_id = j.at("theorem").get<std::string>();
  w.group_name = j.at("group").get<std::string>();
  for (const auto& s : j.at("family"))
    w.family.push_back(s.get<std::vector<std::string>>());
  w.detail = j.at("detail").get<std::string>();
  return w;
}

pretop_group instance_from_witness(const suite_witness& w) {
  auto g = group_by_name(w.group_name);
  if (!g) fail(errc::bad_input, "witness group '" + w.group_name + "' unknown");
  std::vector<mask_t> members;
  for (const auto& s : w.family) members.push_back(g->universe.mask_of(s));
  return make_pretop_group(*g, pretopology{set_family(g->universe, members)});
}

json to_json(const suite_report& r) {
  json j;
  json theorems = json::array();
  for (const auto& t : r.theorems) {
    json row;
    row["id"] = t.id;
    row["experimental"] = t.experimental;
    row["pass"] = t.pass;
    row["skip"] = t.skip;
    json violations = json::array();
    for (const auto& v : t.violations) violations.push_back(to_json(v));
    row["violations"] = std::move(violations);
    theorems.push_back(std::move(row));
  }
  j["theorems"] = std::move(theorems);
  json findings = json::array();
  for (const auto& f : r.findings) {
    json row;
    row["kind"] = f.kind;
    row["id"] = f.id;
    row["detail"] = f.detail;
    findings.push_back(std::move(row));
  }
  j["findings"] = std::move(findings);
  json cert = json::object();
  cert["order_lo"] = r.certificate.order_lo;
  cert["order_hi"] = r.certificate.order_hi;
  cert["groups"] = r.certificate.groups;
  cert["instances"] = r.certificate.instances;
  cert["dedup"] = r.certificate.dedup;
  j["certificate"] = std::move(cert);
  j["proven_violation"] = r.proven_violation;
  return j;
}

json to_json(const search_result& r) {
  json j;
  j["question"] = r.question;
  j["orders"] = {r.orders_lo, r.orders_hi};
  j["result"] = r.exhausted ? "exhausted" : "witness";
  if (r.witness) j["witness"] = to_json(*r.witness);
  j["note"] = r.note;
  j["instances_scanned"] = r.instances_scanned;
  j["refutes_proven"] = r.refutes_proven;
  return j;
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

namespace {

void render_value(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value[0].is_object() || value[0].is_array()))) {
        os << prefix << key << ":\n";
        render_value(value, prefix + "  ", os);
      } else {
        os << prefix << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        os << prefix << "-\n";
        render_value(item, prefix + "  ", os);
      } else {
        os << prefix << "- " << item.dump() << "\n";
      }
    }
  } else {
    os << prefix << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render_value(report, "", os);
  return os.str();
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "text") return render_text(report);
  fail(errc::bad_input, "format must be json or text, got '" + format + "'");
}

}  // namespace pretop
