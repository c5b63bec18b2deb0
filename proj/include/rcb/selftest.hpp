#pragma once

#include <cstdint>
#include <string>

namespace rcb {

struct SelftestReport {
  std::string text;
  bool ok = true;
};

/// Runs the seeded property suites. The report depends only on the seed.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace rcb
