#pragma once

#include <cstdint>
#include <string>

#include "mtheta/report.hpp"

namespace mtheta::verify {

// Named invariant suites: embed, heisenberg, characters, weyl, cocycle,
// orbits, or all. p is the working prime for randomized checks, iters the
// sample count for each randomized check.
report::Report run_suite(const std::string& suite, long p, std::uint64_t seed, long iters);

}  // namespace mtheta::verify
