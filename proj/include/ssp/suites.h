#ifndef SSP_SUITES_H
#define SSP_SUITES_H

#include <string>
#include <vector>

#include "ssp/rationality.h"

namespace ssp {

// Named golden/property suites behind `verify --suite <name>`.
const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name);

std::vector<long> primes_in(long lo, long hi);

}  // namespace ssp

#endif
