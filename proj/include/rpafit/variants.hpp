// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rpafit/event_log.hpp"

namespace rpafit {

/// One trace variant: the exact activity sequence shared by `count` cases.
struct Variant {
  std::vector<std::string> sequence;
  std::uint64_t count = 0;
  std::vector<std::string> case_ids;
};

/// Variants sorted by count descending, ties by lexicographic sequence.
/// Counts always sum to total_cases.
struct VariantTable {
  std::vector<Variant> variants;
  std::uint64_t total_cases = 0;
};

/// Throws EmptyLogError on an empty log.
VariantTable build_variant_table(const EventLog& log);

/// Sublog of the cases belonging to the minimal prefix of the variant list
/// whose cumulative case share reaches `fraction`. fraction must be in
/// (0, 1]; 1.0 keeps every case. Case order of the input log is preserved.
EventLog coverage_filter(const VariantTable& table, const EventLog& log, double fraction);

/// Variants whose sequence contains the activity at least once.
std::vector<Variant> variants_containing(const VariantTable& table, const std::string& activity);

}  // namespace rpafit
