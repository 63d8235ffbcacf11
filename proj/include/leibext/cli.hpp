#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leibext::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitMalformedInput = 2;
inline constexpr int kExitDomainError = 3;

/// args excludes the program name. `in` backs "--input -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace leibext::cli
