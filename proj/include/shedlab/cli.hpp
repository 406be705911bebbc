#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shedlab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;     // also: graph is not vertex decomposable (shed, witness)
inline constexpr int kNegative = 3;  // negative verdict (shed not dominating, h_k < 0, property false)

// args excludes the program name. `in` backs the "-" graph argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace shedlab::cli
