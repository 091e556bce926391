// Command-line front end: fixtures and files in, checks, constructions and
// exhaustive searches out. Exit codes: 0 success / all-pass, 1 a failed check
// or proven-theorem violation (witness emitted), 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pretop/caps.hpp"
#include "pretop/errors.hpp"
#include "pretop/explore.hpp"
#include "pretop/io.hpp"
#include "pretop/prenorm.hpp"
#include "pretop/quotient.hpp"
#include "pretop/separation.hpp"

namespace {

using pretop::json;

struct common_opts {
  std::string fixture;
  std::string group_file;
  std::string family_file;
  std::string format = "text";
  std::string out;
  std::string set_labels;
  std::string subgroup_labels;
  int jobs = 1;
  std::vector<std::string> cap_overrides;
};

void add_input_flags(CLI::App* cmd, common_opts& o) {
  cmd->add_option("--fixture", o.fixture,
                  "builtin instance: P6, P4, discrete:<group>, indiscrete:<group>");
  cmd->add_option("--group", o.group_file, "group file (JSON)");
  cmd->add_option("--family", o.family_file, "open-family file (JSON)");
}

void add_output_flags(CLI::App* cmd, common_opts& o) {
  cmd->add_option("--format", o.format, "json|text")->default_val("text");
  cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
  cmd->add_option("--jobs", o.jobs, "worker threads for enumeration")->default_val(1);
  cmd->add_option("--cap", o.cap_overrides, "raise a brute-force cap, name=value");
}

// fixture names resolve before file lookup
pretop::pretop_group resolve_instance(const common_opts& o) {
  if (!o.fixture.empty()) {
    auto fx = pretop::fixture(o.fixture);
    if (!fx) pretop::fail(pretop::errc::bad_input, "unknown fixture '" + o.fixture + "'");
    return *fx;
  }
  if (o.group_file.empty() || o.family_file.empty())
    pretop::fail(pretop::errc::bad_input,
                 "need --fixture or both --group and --family");
  pretop::finite_group g = pretop::load_group(o.group_file);
  pretop::set_family fam = pretop::load_family(o.family_file);
  if (auto v = pretop::is_pretopology(fam))
    pretop::fail(pretop::errc::bad_input, "family file is not a pre-topology");
  return pretop::make_pretop_group(std::move(g),
                                   pretop::pretopology{std::move(fam)});
}

pretop::mask_t parse_labels(const pretop::universe_t& u, const std::string& csv) {
  std::vector<std::string> labels;
  std::string token;
  std::stringstream ss(csv);
  while (std::getline(ss, token, ','))
    if (!token.empty()) labels.push_back(token);
  return u.mask_of(labels);
}

int emit(const json& report, const common_opts& o) {
  std::string text = pretop::render(report, o.format);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) pretop::fail(pretop::errc::bad_input, "cannot write '" + o.out + "'");
    f << text;
  }
  return 0;
}

std::pair<int, int> parse_orders(const std::string& spec) {
  auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(spec);
      return {v, v};
    }
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
  } catch (const std::exception&) {
    pretop::fail(pretop::errc::bad_input, "orders must look like LO..HI, got '" + spec + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite pre-topological group workbench"};
  app.require_subcommand(1);

  common_opts o;
  std::string orders = "2..6";
  std::string question;
  std::string filter;
  int points = 0;
  bool list_instances = false;
  bool dedup = false;

  auto* check = app.add_subcommand("check", "validate a group/family file");
  add_input_flags(check, o);
  add_output_flags(check, o);

  auto* classify_cmd = app.add_subcommand("classify", "taxonomy flags with witnesses");
  add_input_flags(classify_cmd, o);
  add_output_flags(classify_cmd, o);

  auto* separation_cmd = app.add_subcommand("separation", "separation axiom report");
  add_input_flags(separation_cmd, o);
  add_output_flags(separation_cmd, o);

  auto* closure_cmd = app.add_subcommand("closure", "closure/interior of a set");
  add_input_flags(closure_cmd, o);
  closure_cmd->add_option("--set", o.set_labels, "comma-separated labels")->required();
  add_output_flags(closure_cmd, o);

  auto* quotient_cmd = app.add_subcommand("quotient", "coset space with quotient pre-topology");
  add_input_flags(quotient_cmd, o);
  quotient_cmd->add_option("--subgroup", o.subgroup_labels, "comma-separated labels")
      ->required();
  add_output_flags(quotient_cmd, o);

  auto* prenorm_cmd = app.add_subcommand("prenorm", "chain and prenorm from a neighborhood");
  add_input_flags(prenorm_cmd, o);
  prenorm_cmd->add_option("--set", o.set_labels, "open set containing e")->required();
  add_output_flags(prenorm_cmd, o);

  auto* cardinals_cmd = app.add_subcommand("cardinals", "weight/character/cellularity/density");
  add_input_flags(cardinals_cmd, o);
  add_output_flags(cardinals_cmd, o);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "pre-topologies or group instances");
  enumerate_cmd->add_option("--points", points, "count union-closed families on n points");
  enumerate_cmd->add_option("--orders", orders, "group orders LO..HI");
  enumerate_cmd->add_option("--filter", filter,
                            "classification filter, e.g. pretopological,!topological");
  enumerate_cmd->add_flag("--list", list_instances, "emit the instances, not just counts");
  enumerate_cmd->add_flag("--dedup", dedup, "deduplicate by group automorphisms");
  add_output_flags(enumerate_cmd, o);

  auto* search_cmd = app.add_subcommand("search", "counterexample search for a question");
  search_cmd->add_option("--question", question, "question id")->required();
  search_cmd->add_option("--orders", orders, "group orders LO..HI");
  search_cmd->add_flag("--dedup", dedup, "deduplicate by group automorphisms");
  add_output_flags(search_cmd, o);

  auto* suite_cmd = app.add_subcommand("suite", "run the theorem registry over enumerated instances");
  suite_cmd->add_option("--orders", orders, "group orders LO..HI");
  suite_cmd->add_flag("--dedup", dedup, "deduplicate by group automorphisms");
  add_output_flags(suite_cmd, o);

  auto* questions_cmd = app.add_subcommand("questions", "list known question ids");
  add_output_flags(questions_cmd, o);

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& cap : o.cap_overrides) pretop::caps().apply_override(cap);

    if (check->parsed()) {
      json report;
      bool ok = true;
      if (!o.fixture.empty() || (!o.group_file.empty() && !o.family_file.empty())) {
        pretop::pretop_group x = resolve_instance(o);
        report["group"] = x.group.name;
        report["valid"] = true;
        report["opens"] = static_cast<int>(x.top.opens().size());
      } else if (!o.group_file.empty()) {
        pretop::finite_group g = pretop::load_group(o.group_file);
        report["group"] = g.name;
        report["valid"] = true;
      } else if (!o.family_file.empty()) {
        pretop::set_family fam = pretop::load_family(o.family_file);
        auto v = pretop::is_pretopology(fam);
        report["valid"] = !v.has_value();
        if (v) {
          ok = false;
          json w;
          switch (v->kind) {
            case pretop::pretopology_violation::missing_empty:
              w["missing"] = "empty set";
              break;
            case pretop::pretopology_violation::missing_full:
              w["missing"] = "full set (or the union does not cover)";
              break;
            case pretop::pretopology_violation::union_not_member:
              w["union_of"] = {fam.universe.mask_labels(v->a),
                               fam.universe.mask_labels(v->b)};
              break;
          }
          report["witness"] = std::move(w);
        }
      } else {
        pretop::fail(pretop::errc::bad_input, "nothing to check");
      }
      emit(report, o);
      return ok ? 0 : 1;
    }

    if (classify_cmd->parsed()) {
      pretop::pretop_group x = resolve_instance(o);
      return emit(pretop::to_json(x, pretop::classify(x)), o);
    }

    if (separation_cmd->parsed()) {
      pretop::pretop_group x = resolve_instance(o);
      return emit(pretop::to_json(x.group.universe, pretop::separation_report(x.top)), o);
    }

    if (closure_cmd->parsed()) {
      pretop::pretop_group x = resolve_instance(o);
      pretop::mask_t s = parse_labels(x.group.universe, o.set_labels);
      json report;
      report["set"] = x.group.universe.mask_labels(s);
      report["closure"] = x.group.universe.mask_labels(pretop::closure(x.top, s));
      report["interior"] = x.group.universe.mask_labels(pretop::interior(x.top, s));
      return emit(report, o);
    }

    if (quotient_cmd->parsed()) {
      pretop::pretop_group x = resolve_instance(o);
      pretop::mask_t h = parse_labels(x.group.universe, o.subgroup_labels);
      pretop::quotient_space q = pretop::coset_space(x, h);
      json report = pretop::to_json(q);
      report["discrete_iff_open"] = pretop::discrete_iff_open_check(x, h);
      return emit(report, o);
    }

    if (prenorm_cmd->parsed()) {
      pretop::pretop_group x = resolve_instance(o);
      pretop::mask_t u = parse_labels(x.group.universe, o.set_labels);
      pretop::nbhd_chain chain = pretop::build_chain(x, u);
      pretop::prenorm_t n = pretop::construct_prenorm(x, chain);
      json report;
      json chain_json = json::array();
      for (pretop::mask_t m : chain.sets)
        chain_json.push_back(x.group.universe.mask_labels(m));
      report["chain"] = std::move(chain_json);
      report["prenorm"] = pretop::to_json(x, n);
      report["unit_ball"] =
          x.group.universe.mask_labels(pretop::ball(n, pretop::dyadic::whole(1)));
      report["precontinuous"] = pretop::is_precontinuous_prenorm(x, n);
      return emit(report, o);
    }

    if (cardinals_cmd->parsed()) {
      pretop::pretop_group x = resolve_instance(o);
      json report = pretop::to_json(x.group.universe, pretop::cardinals(x.top));
      auto pair = pretop::resolvable_witness(x.top);
      report["resolvable"] = pair.has_value();
      if (pair) {
        report["resolution"] = {x.group.universe.mask_labels(pair->first),
                                x.group.universe.mask_labels(pair->second)};
      }
      report["covering_index"] = pretop::covering_index(x);
      return emit(report, o);
    }

    if (enumerate_cmd->parsed()) {
      json report;
      if (points > 0) {
        json families = json::array();
        std::function<void(const pretop::pretopology&)> sink;
        if (list_instances)
          sink = [&](const pretop::pretopology& t) {
            families.push_back(pretop::family_to_json(t.fam));
          };
        report["points"] = points;
        report["count"] = pretop::enumerate_pretopologies(points, sink);
        if (list_instances) report["families"] = std::move(families);
      } else {
        auto [lo, hi] = parse_orders(orders);
        json rows = json::array();
        int total = 0;
        for (int order = lo; order <= hi; ++order)
          for (const pretop::finite_group& g : pretop::groups_of_order(order)) {
            auto instances = pretop::enumerate_group_pretopologies(
                g, filter, dedup, pretop::enum_strategy::automatic, o.jobs);
            json row;
            row["group"] = g.name;
            row["count"] = static_cast<int>(instances.size());
            if (list_instances) {
              json items = json::array();
              for (const auto& inst : instances) {
                json item;
                item["name"] = inst.name;
                item["family"] = pretop::family_to_json(inst.instance.top.fam);
                item["flags"] = pretop::to_json(inst.instance, inst.cls)["flags"];
                items.push_back(std::move(item));
              }
              row["instances"] = std::move(items);
            }
            total += static_cast<int>(instances.size());
            rows.push_back(std::move(row));
          }
        report["orders"] = {lo, hi};
        report["groups"] = std::move(rows);
        report["total"] = total;
        report["dedup"] = dedup ? "automorphism" : "none";
      }
      return emit(report, o);
    }

    if (search_cmd->parsed()) {
      auto [lo, hi] = parse_orders(orders);
      pretop::search_task task;
      task.question = question;
      task.order_lo = lo;
      task.order_hi = hi;
      task.automorphism_dedup = dedup;
      task.jobs = o.jobs;
      pretop::search_result result = pretop::search_counterexample(task);
      emit(pretop::to_json(result), o);
      return (result.witness && result.refutes_proven) ? 1 : 0;
    }

    if (suite_cmd->parsed()) {
      auto [lo, hi] = parse_orders(orders);
      auto instances = pretop::suite_instances(lo, hi, dedup, o.jobs);
      pretop::suite_report report =
          pretop::run_theorem_suite(instances, pretop::default_registry(), o.jobs);
      report.certificate.dedup = dedup ? "automorphism" : "none";
      emit(pretop::to_json(report), o);
      return report.proven_violation ? 1 : 0;
    }

    if (questions_cmd->parsed()) {
      json report;
      report["questions"] = pretop::known_questions();
      return emit(report, o);
    }
  } catch (const pretop::error& ex) {
    std::cerr << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
