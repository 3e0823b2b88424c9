#pragma once

// Command-line front end: coeffs, poly, convert, eval, verify, bench.
//
// Exit status: 0 success, 1 verification failure, 2 usage error. Data goes
// to `out`; diagnostics go to `err`, and nothing is written to `out` when a
// command fails with a usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include "faulhaber/oracle.hpp"

namespace faulhaber {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliHooks {
    VerifyOptions verify;  // forwarded to run_verification (fault injection in tests)
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace faulhaber
