#pragma once

#include <iosfwd>

namespace verify {

inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitConfig = 2;

/// verify <experiment> [--dim N] [--trials T] [--p 1.5,2] [--s S] [--a A] [--b B]
///        [--channels M] [--seed S] [--out PATH] [--format json|csv]
int cli_main(int argc, const char* const* argv, std::ostream& err);

}  // namespace verify
