// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <set>

#include "builders.hpp"
#include "oracle.hpp"
#include "rpafit/errors.hpp"
#include "rpafit/variants.hpp"

using namespace rpafit;
using testutil::seq_log;

namespace {

std::set<std::string> case_ids(const EventLog& log) {
  std::set<std::string> ids;
  for (const Case& c : log.cases) ids.insert(c.case_id);
  return ids;
}

/// 10 cases over three variants with counts 6, 3, 1.
EventLog ten_case_log() {
  std::vector<std::vector<std::string>> seqs;
  for (int i = 0; i < 6; ++i) seqs.push_back({"A", "B"});
  for (int i = 0; i < 3; ++i) seqs.push_back({"A", "C"});
  seqs.push_back({"A"});
  return seq_log(seqs);
}

}  // namespace

TEST_CASE("variant table counts and orders sequences") {
  const EventLog log = seq_log({{"A", "B"}, {"A", "B"}, {"A", "C"}});
  const VariantTable table = build_variant_table(log);
  CHECK(table.total_cases == 3);
  REQUIRE(table.variants.size() == 2);
  CHECK(table.variants[0].sequence == std::vector<std::string>{"A", "B"});
  CHECK(table.variants[0].count == 2);
  CHECK(table.variants[0].case_ids == std::vector<std::string>{"c1", "c2"});
  CHECK(table.variants[1].sequence == std::vector<std::string>{"A", "C"});
  CHECK(table.variants[1].count == 1);
}

TEST_CASE("single case gives a single variant") {
  const VariantTable table = build_variant_table(seq_log({{"A", "B", "C"}}));
  REQUIRE(table.variants.size() == 1);
  CHECK(table.variants[0].count == 1);
  CHECK(table.total_cases == 1);
}

TEST_CASE("equal counts are ordered by sequence") {
  const VariantTable table = build_variant_table(seq_log({{"B"}, {"A", "Z"}, {"A", "C"}}));
  REQUIRE(table.variants.size() == 3);
  CHECK(table.variants[0].sequence == std::vector<std::string>{"A", "C"});
  CHECK(table.variants[1].sequence == std::vector<std::string>{"A", "Z"});
  CHECK(table.variants[2].sequence == std::vector<std::string>{"B"});
}

TEST_CASE("every case lands in exactly one variant") {
  const EventLog log = ten_case_log();
  const VariantTable table = build_variant_table(log);

  std::uint64_t sum = 0;
  std::set<std::string> seen;
  for (const Variant& v : table.variants) {
    CHECK(v.count == v.case_ids.size());
    sum += v.count;
    for (const std::string& id : v.case_ids) CHECK(seen.insert(id).second);
  }
  CHECK(sum == table.total_cases);
  CHECK(seen == case_ids(log));

  const auto groups = oracle::variant_groups(log);
  CHECK(groups.size() == table.variants.size());
  for (const Variant& v : table.variants) {
    auto it = groups.find(v.sequence);
    REQUIRE(it != groups.end());
    CHECK(it->second == v.case_ids);
  }
}

TEST_CASE("coverage filter keeps the minimal prefix reaching the fraction") {
  const EventLog log = ten_case_log();
  const VariantTable table = build_variant_table(log);
  REQUIRE(table.variants.size() == 3);

  SUBCASE("0.9 keeps two variants, nine cases") {
    const EventLog kept = coverage_filter(table, log, 0.9);
    CHECK(kept.cases.size() == 9);
    CHECK(build_variant_table(kept).variants.size() == 2);
  }
  SUBCASE("0.5 keeps the top variant only") {
    const EventLog kept = coverage_filter(table, log, 0.5);
    CHECK(kept.cases.size() == 6);
    CHECK(build_variant_table(kept).variants.size() == 1);
  }
  SUBCASE("1.0 is the identity on the case set") {
    CHECK(case_ids(coverage_filter(table, log, 1.0)) == case_ids(log));
  }
  SUBCASE("monotone in the fraction") {
    std::set<std::string> prev;
    for (double f : {0.1, 0.3, 0.5, 0.61, 0.85, 0.9, 0.95, 1.0}) {
      const std::set<std::string> ids = case_ids(coverage_filter(table, log, f));
      CHECK(std::includes(ids.begin(), ids.end(), prev.begin(), prev.end()));
      prev = ids;
    }
  }
  SUBCASE("fractions outside (0, 1] are rejected") {
    CHECK_THROWS_AS(coverage_filter(table, log, 0.0), InvalidFractionError);
    CHECK_THROWS_AS(coverage_filter(table, log, -0.2), InvalidFractionError);
    CHECK_THROWS_AS(coverage_filter(table, log, 1.01), InvalidFractionError);
  }
}

TEST_CASE("variants containing an activity") {
  const VariantTable table = build_variant_table(seq_log({{"A", "B"}, {"A", "C", "B"}, {"A"}}));
  const auto with_b = variants_containing(table, "B");
  REQUIRE(with_b.size() == 2);
  for (const Variant& v : with_b)
    CHECK(std::count(v.sequence.begin(), v.sequence.end(), "B") >= 1);
  CHECK(variants_containing(table, "Q").empty());
}

TEST_CASE("empty log has no variant table") {
  CHECK_THROWS_AS(build_variant_table(EventLog{}), EmptyLogError);
}
