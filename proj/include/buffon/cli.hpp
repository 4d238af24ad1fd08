#pragma once

// Command-line front end: estimate, batch, render, validate.
//
// Exit codes: 0 success, 1 usage error, 2 runtime or validation failure.

#include <iosfwd>
#include <string>
#include <vector>

#include "buffon/estimators.hpp"

namespace buffon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "run,pi_estimate" header followed by one row per run in run order.
std::string batch_csv(const BatchResult& batch);

} // namespace buffon::cli
