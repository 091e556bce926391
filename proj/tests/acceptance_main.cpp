// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Exercises the library directly and the CLI binary where the criterion is
// about the command-line surface.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pretop/explore.hpp"
#include "pretop/io.hpp"
#include "pretop/prenorm.hpp"
#include "pretop/quotient.hpp"
#include "pretop/separation.hpp"

using namespace pretop;
using acceptance_clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& why = "") {
  if (ok) {
    std::cout << "PASS criterion " << criterion << ": " << what << "\n";
  } else {
    ++failures;
    std::cout << "FAIL criterion " << criterion << ": " << what
              << (why.empty() ? "" : " -- " + why) << "\n";
  }
}

double seconds_since(acceptance_clock::time_point start) {
  return std::chrono::duration<double>(acceptance_clock::now() - start).count();
}

int run_cli(const std::string& args, const std::string& out_file) {
  std::string cmd = std::string(PRETOP_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  int rc = std::system(cmd.c_str());
  return rc < 0 ? rc : WEXITSTATUS(rc);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  json j;
  in >> j;
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<enumerated_instance> catalog_instances(int lo, int hi, bool dedup) {
  std::vector<enumerated_instance> out;
  for (int n = lo; n <= hi; ++n)
    for (const finite_group& g : groups_of_order(n))
      for (auto& inst : enumerate_group_pretopologies(g, "", dedup))
        out.push_back(std::move(inst));
  return out;
}

// independent minimum-translate-cover scan for criterion 8
int cover_oracle(const finite_group& g, mask_t u) {
  int n = g.order();
  for (int k = 1; k <= n; ++k) {
    for (mask_t f = 0; f < (mask_t{1} << n); ++f) {
      if (popcount(f) != k) continue;
      mask_t covered = 0;
      for (int a : mask_elements(f)) covered |= g.mul_left(a, u);
      if (covered == g.universe.all()) return k;
    }
  }
  return n;
}

void criterion_1() {
  auto start = acceptance_clock::now();
  pretop_group x = *fixture("P6");
  classification c = classify(x);
  bool flags = c.pretopological && c.strongly && c.symmetrically && c.almost &&
               !c.topological;
  bool witness_ok = false;
  if (auto it = c.witnesses.find("topological"); it != c.witnesses.end())
    witness_ok = it->second.sets.size() == 2 &&
                 x.top.is_open(it->second.sets[0]) &&
                 x.top.is_open(it->second.sets[1]) &&
                 !x.top.is_open(it->second.sets[0] & it->second.sets[1]);
  // the printed example pair: {1,4} n {0,2,4} = {4} is not open
  mask_t a = x.group.universe.mask_of({"1", "4"});
  mask_t b = x.group.universe.mask_of({"0", "2", "4"});
  bool paper_pair = ((a & b) == x.group.universe.mask_of({"4"})) &&
                    !x.top.is_open(a & b);
  bool t2 = separation_report(x.top).t2;
  double lib_elapsed = seconds_since(start);

  // the same answers through the CLI, timed
  std::string out = std::string(PRETOP_SOURCE_DIR) + "/build/acc1.json";
  auto cli_start = acceptance_clock::now();
  int rc1 = run_cli("classify --fixture P6 --format json", out);
  json jc = read_json(out);
  int rc2 = run_cli("separation --fixture P6 --format json", out);
  json js = read_json(out);
  double cli_elapsed = seconds_since(cli_start);
  bool cli_ok = rc1 == 0 && rc2 == 0 && jc["flags"]["pretopological"] == true &&
                jc["flags"]["strongly"] == true &&
                jc["flags"]["symmetrically"] == true &&
                jc["flags"]["almost"] == true &&
                jc["flags"]["topological"] == false && js["t2"] == true;

  report(1, flags && witness_ok && paper_pair && t2 && cli_ok &&
               lib_elapsed < 1.0 && cli_elapsed < 2.0,
         "P6 classification and separation match the worked example "
         "(pretopological/strongly/symmetrically/almost, not topological, T2)",
         "flags=" + std::to_string(flags) + " witness=" + std::to_string(witness_ok) +
             " pair=" + std::to_string(paper_pair) + " t2=" + std::to_string(t2) +
             " cli=" + std::to_string(cli_ok));
}

void criterion_2() {
  auto start = acceptance_clock::now();
  pretop_group x = *fixture("P4");
  classification c = classify(x);
  bool flags = c.quasi && !c.para;
  bool witness_ok = false;
  if (auto it = c.witnesses.find("para"); it != c.witnesses.end())
    witness_ok = it->second.sets.size() == 1 && it->second.points.size() == 2;
  // the printed example witness: W = {0,1,3} admits no open box at (0,0)
  mask_t w = x.group.universe.mask_of({"0", "1", "3"});
  bool paper_pair = true;
  for (mask_t u : x.opens_at(0))
    for (mask_t v : x.opens_at(0))
      if (subset_of(x.group.mul(u, v), w)) paper_pair = false;
  double elapsed = seconds_since(start);

  std::string out = std::string(PRETOP_SOURCE_DIR) + "/build/acc2.json";
  int rc = run_cli("classify --fixture P4 --format json", out);
  json j = read_json(out);
  bool cli_ok = rc == 0 && j["flags"]["quasi"] == true && j["flags"]["para"] == false;

  report(2, flags && witness_ok && paper_pair && cli_ok && elapsed < 1.0,
         "P4 classification matches the worked example (quasi, not para, "
         "witness W={0,1,3} at (0,0))");
}

void criterion_3() {
  auto start = acceptance_clock::now();
  bool ok = true;
  std::string why;
  for (const auto& inst : catalog_instances(1, 6, true)) {
    nbhd_system sys{inst.instance.group, inst.instance.opens_at(inst.instance.e())};
    if (!nbhd_axioms_report(sys).all()) {
      ok = false;
      why = inst.name + ": identity neighborhoods fail the generation axioms";
      break;
    }
    if (!(construct_from_nbhd_system(sys).top.fam == inst.instance.top.fam)) {
      ok = false;
      why = inst.name + ": regenerated topology differs";
      break;
    }
  }
  double elapsed = seconds_since(start);
  report(3, ok && elapsed < 300.0,
         "reconstruction round-trip reproduces every enumerated instance "
         "through order 6 (dedup on, " + std::to_string(elapsed).substr(0, 5) + "s)",
         why);
}

void criterion_4() {
  auto instances = suite_instances(2, 6, false, 1);
  suite_report rep = run_theorem_suite(instances, default_registry(), 1);
  int proven = 0, exercised = 0;
  bool violations = false;
  for (const auto& t : rep.theorems) {
    if (t.experimental) continue;
    ++proven;
    if (t.pass > 0) ++exercised;
    if (!t.violations.empty()) violations = true;
  }
  report(4, proven >= 15 && exercised == proven && !violations && !rep.proven_violation,
         "theorem suite over orders 2..6: " + std::to_string(proven) +
             " proven entries, every entry exercised, zero violations",
         violations ? "a proven entry has violations" : "");
}

void criterion_5() {
  auto start = acceptance_clock::now();
  bool ok = true;
  std::string why;
  int chains = 0;
  for (int order = 1; order <= 8 && ok; ++order)
    for (const finite_group& g : groups_of_order(order)) {
      for (const auto& inst : enumerate_group_pretopologies(g)) {
        if (!inst.cls.pretopological || !inst.cls.almost) continue;
        for (mask_t u : inst.instance.opens_at(g.identity)) {
          nbhd_chain chain = build_chain(inst.instance, u);
          prenorm_t n = construct_prenorm(inst.instance, chain);
          ++chains;
          const finite_group& grp = inst.instance.group;
          // axioms, exactly
          for (int p = 0; p < grp.order() && ok; ++p) {
            if (!(n.at(grp.inv(p)) == n.at(p))) ok = false;
            for (int q = 0; q < grp.order(); ++q)
              if (n.at(p) + n.at(q) < n.at(grp.op(p, q))) ok = false;
          }
          if (!n.at(grp.identity).is_zero()) ok = false;
          // sandwich, exactly, at every level
          for (int lvl = 0; lvl <= chain.depth() && ok; ++lvl)
            for (int p = 0; p < grp.order(); ++p) {
              if (n.at(p) < dyadic::half_pow(lvl) && !has_bit(chain.sets[lvl], p))
                ok = false;
              if (has_bit(chain.sets[lvl], p) && dyadic{2, lvl} < n.at(p)) ok = false;
            }
          // oracle equality through order 6
          if (ok && order <= 6) {
            auto oracle = oracles::prenorm_by_factorizations(
                grp, oracles::chain_costs(grp, chain.sets), grp.order());
            for (int p = 0; p < grp.order(); ++p)
              if (!(oracle[p] == n.at(p))) ok = false;
          }
          if (!ok) {
            why = inst.name + " at U=" + std::to_string(u);
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  double elapsed = seconds_since(start);
  report(5, ok && elapsed < 120.0,
         "prenorm axioms and the exact sandwich hold on all " +
             std::to_string(chains) + " chains through order 8; values equal "
             "the factorization oracle through order 6 (" +
             std::to_string(elapsed).substr(0, 5) + "s)",
         why);
}

void criterion_6() {
  auto start = acceptance_clock::now();
  bool ok = true;
  std::string why;
  for (int order = 1; order <= 6 && ok; ++order)
    for (const finite_group& g : groups_of_order(order)) {
      for (const auto& inst : enumerate_group_pretopologies(g)) {
        if (!inst.cls.pretopological || !inst.cls.almost) continue;
        for (mask_t u : inst.instance.opens_at(g.identity)) {
          prenorm_t n = markov_separation(inst.instance, u);
          if (!subset_of(ball(n, dyadic::whole(1)), u) ||
              !is_precontinuous_prenorm(inst.instance, n)) {
            ok = false;
            why = inst.name + ": unit ball or pre-continuity fails";
            break;
          }
        }
        if (ok && !markov_functional_separation(inst.instance)) {
          ok = false;
          why = inst.name + ": constructive level functions fail";
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
  double elapsed = seconds_since(start);
  report(6, ok && elapsed < 120.0,
         "separating prenorms give unit balls inside every identity "
         "neighborhood and pre-continuous level functions through order 6 (" +
             std::to_string(elapsed).substr(0, 5) + "s)",
         why);
}

void criterion_7() {
  std::uint64_t n1 = enumerate_pretopologies(1);
  std::uint64_t n2 = enumerate_pretopologies(2);
  std::uint64_t oracle3 = enumerate_pretopologies_oracle(3);
  std::uint64_t n3 = enumerate_pretopologies(3);
  // the oracle count is frozen as the regression constant
  const std::uint64_t stored_n3 = 45;
  auto z2 = enumerate_group_pretopologies(cyclic(2), "pretopological");
  report(7, n1 == 1 && n2 == 4 && oracle3 == stored_n3 && n3 == stored_n3 &&
             z2.size() == 2,
         "enumeration regression: counts 1, 4, 45 (oracle-pinned) and exactly "
         "two group pre-topologies on the two-element group");
}

void criterion_8() {
  pretop_group x = *fixture("P6");
  cardinal_report rep = cardinals(x.top);
  bool values = rep.weight == 5 && rep.character[0] == 2 && rep.cellularity == 3 &&
                rep.density == 3;
  bool oracle = oracles::weight(x.top) == 5 && oracles::character_at(x.top, 0) == 2 &&
                oracles::cellularity(x.top) == 3 && oracles::density(x.top) == 3;
  int ci = covering_index(x);
  int ci_oracle = 0;
  for (mask_t u : atoms_at(x.top, 0))
    ci_oracle = std::max(ci_oracle, cover_oracle(x.group, u));
  auto pair = resolvable_witness(x.top);
  bool res = pair.has_value() && oracles::resolvable(x.top);
  if (res)
    for (mask_t open : x.top.opens())
      if (open != 0)
        res = res && (open & pair->first) != 0 && (open & pair->second) != 0;
  report(8, values && oracle && ci == 3 && ci_oracle == 3 && res,
         "P6 cardinal functions: weight 5, character 2, cellularity 3, "
         "density 3, covering index 3, resolvable; all recomputed by "
         "independent scans");
}

void criterion_9() {
  pretop_group x = *fixture("P6");
  quotient_group_result q =
      quotient_group_pretop(x, x.group.universe.mask_of({"0", "3"}));
  bool fixture_ok = q.quotient.order() == 3 && q.cls.pretopological &&
                    q.quotient.top.opens().size() == 8 &&
                    isomorphic(q.quotient, *fixture("discrete:cyclic:3"));
  auto start = acceptance_clock::now();
  bool diocheck = true;
  std::string why;
  for (int order = 1; order <= 8 && diocheck; ++order)
    for (const finite_group& g : groups_of_order(order)) {
      for (const auto& inst : enumerate_group_pretopologies(g))
        for (mask_t h : enumerate_subgroups(g))
          if (!discrete_iff_open_check(inst.instance, h)) {
            diocheck = false;
            why = inst.name;
            break;
          }
      if (!diocheck) break;
    }
  double elapsed = seconds_since(start);
  report(9, fixture_ok && diocheck,
         "the order-6 fixture quotient by {0,3} is a discrete three-element "
         "instance; discrete-iff-open holds for every (instance, subgroup) "
         "pair through order 8 (" + std::to_string(elapsed).substr(0, 5) + "s)",
         why);
}

void criterion_10() {
  auto instances = suite_instances(2, 6, false, 1);
  suite_report rep = run_theorem_suite(instances, default_registry(), 1);
  bool found = false;
  for (const auto& f : rep.findings)
    found |= f.kind == "erratum-candidate" && f.id == "z6-015-subgroup";
  report(10, found && !rep.proven_violation,
         "the suite logs the {0,1,5} subgroup rejection as an "
         "erratum-candidate finding without failing the run");
}

void criterion_11() {
  std::string out1 = std::string(PRETOP_SOURCE_DIR) + "/build/acc11_a.json";
  std::string out2 = std::string(PRETOP_SOURCE_DIR) + "/build/acc11_b.json";
  int rc1 = run_cli("suite --orders 2..6 --jobs 1 --format json --out " + out1,
                    out1 + ".log");
  int rc2 = run_cli("suite --orders 2..6 --jobs 4 --format json --out " + out2,
                    out2 + ".log");
  bool identical = rc1 == 0 && rc2 == 0 && slurp(out1) == slurp(out2) &&
                   !slurp(out1).empty();
  report(11, identical,
         "full suite output is byte-identical across different --jobs settings");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures == 0) {
    std::cout << "acceptance: all 11 criteria pass\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return 1;
}
