#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitInputError = 2;

// args excludes the program name. Report goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 14695981039346656037ULL);

}  // namespace qgraph::cli
