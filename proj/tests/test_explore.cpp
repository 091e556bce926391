#include <doctest.h>

#include <set>

#include "pretop/caps.hpp"
#include "pretop/errors.hpp"
#include "pretop/explore.hpp"
#include "pretop/io.hpp"

using namespace pretop;

TEST_CASE("pre-topology enumeration counts") {
  CHECK(enumerate_pretopologies(1) == 1);
  CHECK(enumerate_pretopologies(2) == 4);
  CHECK(enumerate_pretopologies(3) == 45);
  CHECK(enumerate_pretopologies_oracle(1) == 1);
  CHECK(enumerate_pretopologies_oracle(2) == 4);
  CHECK(enumerate_pretopologies_oracle(3) == 45);
  CHECK(enumerate_pretopologies(4) == enumerate_pretopologies_oracle(4));
  int saved = caps().enum_points;
  caps().enum_points = 3;
  CHECK_THROWS_WITH_AS(enumerate_pretopologies(4), doctest::Contains("CapExceeded"),
                       error);
  caps().enum_points = saved;
}

TEST_CASE("enumerated families are pre-topologies, in a stable order") {
  std::vector<set_family> first, second;
  enumerate_pretopologies(3, [&](const pretopology& t) {
    CHECK_FALSE(is_pretopology(t.fam));
    first.push_back(t.fam);
  });
  enumerate_pretopologies(3, [&](const pretopology& t) { second.push_back(t.fam); });
  CHECK(first == second);
}

TEST_CASE("group pre-topology enumeration") {
  finite_group z2 = cyclic(2);
  auto insts = enumerate_group_pretopologies(z2, "pretopological");
  CHECK(insts.size() == 2);  // discrete and indiscrete

  finite_group z6 = cyclic(6);
  auto all6 = enumerate_group_pretopologies(z6);
  CHECK(all6.size() == 5);
  bool has_p6 = false;
  for (const auto& inst : all6)
    if (inst.instance.top.fam == fixture_p6_topology().fam) has_p6 = true;
  CHECK(has_p6);

  auto filtered = enumerate_group_pretopologies(z6, "pretopological,!topological");
  CHECK(filtered.size() == 1);  // exactly the 22-set family
  CHECK(filtered[0].instance.top.fam == fixture_p6_topology().fam);

  CHECK(enumerate_group_pretopologies(cyclic(1)).size() == 1);
}

TEST_CASE("generic and subgroup strategies agree through order six") {
  for (int n = 1; n <= 6; ++n)
    for (const finite_group& g : groups_of_order(n)) {
      auto generic = enumerate_group_pretopologies(g, "", false, enum_strategy::generic);
      auto subs = enumerate_group_pretopologies(g, "", false, enum_strategy::subgroups);
      REQUIRE(generic.size() == subs.size());
      for (size_t i = 0; i < generic.size(); ++i)
        CHECK(generic[i].instance.top.fam == subs[i].instance.top.fam);
    }
}

TEST_CASE("jobs do not change the enumeration") {
  finite_group g = direct_product(cyclic(2), cyclic(2));
  auto serial = enumerate_group_pretopologies(g, "", false, enum_strategy::automatic, 1);
  auto parallel = enumerate_group_pretopologies(g, "", false, enum_strategy::automatic, 4);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i)
    CHECK(serial[i].instance.top.fam == parallel[i].instance.top.fam);
}

TEST_CASE("automorphism dedup is sound at small orders") {
  for (int n = 1; n <= 4; ++n)
    for (const finite_group& g : groups_of_order(n)) {
      auto all = enumerate_group_pretopologies(g, "", false);
      auto dedup = enumerate_group_pretopologies(g, "", true);
      auto autos = automorphisms(g);
      // the orbits of the deduplicated representatives partition the stream
      std::set<std::vector<mask_t>> covered;
      for (const auto& rep : dedup)
        for (const auto& phi : autos) {
          std::vector<mask_t> moved;
          for (mask_t m : rep.instance.top.opens()) {
            mask_t img = 0;
            for (int p : mask_elements(m)) img |= mask_t{1} << phi[p];
            moved.push_back(img);
          }
          std::sort(moved.begin(), moved.end(), canonical_mask_less);
          covered.insert(moved);
        }
      CHECK(covered.size() == all.size());
      std::uint64_t orbit_total = 0;
      for (const auto& rep : dedup) {
        std::set<std::vector<mask_t>> orbit;
        for (const auto& phi : autos) {
          std::vector<mask_t> moved;
          for (mask_t m : rep.instance.top.opens()) {
            mask_t img = 0;
            for (int p : mask_elements(m)) img |= mask_t{1} << phi[p];
            moved.push_back(img);
          }
          std::sort(moved.begin(), moved.end(), canonical_mask_less);
          orbit.insert(moved);
        }
        orbit_total += orbit.size();
      }
      CHECK(orbit_total == all.size());  // exactly one representative per orbit
    }
}

TEST_CASE("theorem registry shape") {
  auto registry = default_registry();
  int proven = 0;
  std::set<std::string> ids;
  for (const auto& rec : registry) {
    CHECK(ids.insert(rec.id).second);
    CHECK_FALSE(rec.statement.empty());
    if (!rec.experimental) ++proven;
  }
  CHECK(proven >= 15);
  for (const char* required :
       {"t0-implies-regular", "open-subgroup-closed", "finite-square-roots",
        "finite-atom-powers", "finite-para-implies-almost",
        "subgroup-closure-is-subgroup", "closure-inside-AU",
        "quotient-projection-open", "quotient-discrete-iff-open",
        "quotient-space-regular", "quotient-group-pretopological",
        "first-isomorphism", "second-isomorphism", "third-isomorphism",
        "almost-iff-vv-inverse", "almost-completely-regular", "markov-unit-ball",
        "component-closed-invariant-subgroup", "connected-generation",
        "center-discrete-invariant"})
    CHECK(ids.count(required));
}

TEST_CASE("suite runs clean on orders two to five") {
  auto instances = suite_instances(2, 5, false, 1);
  suite_report report = run_theorem_suite(instances, default_registry(), 1);
  CHECK_FALSE(report.proven_violation);
  for (const auto& t : report.theorems)
    if (!t.experimental) CHECK(t.violations.empty());
  // P4 joins the stream and is skipped by pretopological-hypothesis entries
  bool found_p4 = false;
  for (const auto& inst : instances) found_p4 |= inst.name == "P4";
  CHECK(found_p4);
}

TEST_CASE("suite findings include the subgroup erratum probe") {
  auto instances = suite_instances(6, 6, true, 1);
  suite_report report = run_theorem_suite(instances, default_registry(), 1);
  bool found = false;
  for (const auto& f : report.findings)
    if (f.id == "z6-015-subgroup" && f.kind == "erratum-candidate") found = true;
  CHECK(found);
  CHECK_FALSE(report.proven_violation);
}

TEST_CASE("violations produce replayable witnesses") {
  // a deliberately false entry exercises the witness machinery
  std::vector<theorem_record> registry = default_registry();
  theorem_record bogus;
  bogus.id = "test-no-instance-is-almost";
  bogus.statement = "no instance is almost topological (deliberately false)";
  bogus.check = [](const enumerated_instance& e) -> std::optional<std::string> {
    if (!e.cls.pretopological) return std::nullopt;
    if (e.cls.almost) return "instance is almost topological";
    return std::string();
  };
  registry.push_back(bogus);
  auto instances = suite_instances(2, 3, false, 1);
  suite_report report = run_theorem_suite(instances, registry, 1);
  CHECK(report.proven_violation);
  const theorem_outcome* outcome = nullptr;
  for (const auto& t : report.theorems)
    if (t.id == bogus.id) outcome = &t;
  REQUIRE(outcome);
  REQUIRE_FALSE(outcome->violations.empty());
  for (const auto& w : outcome->violations) CHECK(replay_witness(w, registry));
  // the genuine entries replay as non-violations
  suite_witness fake;
  fake.theorem_id = "t0-implies-regular";
  fake.group_name = instances[0].instance.group.name;
  for (mask_t m : instances[0].instance.top.opens())
    fake.family.push_back(instances[0].instance.group.universe.mask_labels(m));
  CHECK_FALSE(replay_witness(fake, registry));
}

TEST_CASE("suite is deterministic across jobs") {
  auto instances = suite_instances(2, 4, false, 1);
  suite_report a = run_theorem_suite(instances, default_registry(), 1);
  suite_report b = run_theorem_suite(instances, default_registry(), 3);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("counterexample searches") {
  search_task task;
  task.order_hi = 5;

  task.question = "Q-SYM-STR";
  search_result r = search_counterexample(task);
  CHECK(r.exhausted);
  CHECK(r.refutes_proven);
  CHECK(r.instances_scanned > 0);

  task.question = "Q-PARA-T2-COMPACT";
  CHECK(search_counterexample(task).exhausted);

  task.question = "Q-DISCRETE-CLOSED";
  search_result rd = search_counterexample(task);
  CHECK_FALSE(rd.exhausted);
  REQUIRE(rd.witness.has_value());
  CHECK_FALSE(rd.refutes_proven);

  // the dihedral triple-reflection instance answers the VxV question
  task.question = "Q-VXV";
  task.order_hi = 6;
  search_result rv = search_counterexample(task);
  CHECK_FALSE(rv.exhausted);
  REQUIRE(rv.witness.has_value());
  CHECK(rv.witness->group_name == "D3");

  task.question = "Q-NO-SUCH";
  CHECK_THROWS_WITH_AS(search_counterexample(task), doctest::Contains("UnknownQuestion"),
                       error);
  CHECK(known_questions().size() == 6);
}
