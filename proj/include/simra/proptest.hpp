#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace simra {

struct SuiteResult {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    std::vector<std::string> messages; // first few failure payloads
};

// Seeded structural property suites over random integer subspaces
// (ambient dimension <= 9, entries in [-9, 9]):
//   heights     -- duality, Schmidt, saturation idempotence, wedge bound
//   profile     -- dimension-profile concavity/tail law and the (i)/(ii)
//                  min-inequalities
//   composition -- U^k(U^(l-k)(A)) = U^l(A)
//   avoid       -- avoiding-map witness bound, injectivity, escape
//   construct   -- C(V,x) zero/nonzero criterion against an independent
//                  rank computation, plus linearity in x
SuiteResult run_suite(const std::string& name, uint64_t seed, size_t cases);
const std::vector<std::string>& suite_names();

} // namespace simra
