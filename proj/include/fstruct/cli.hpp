#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fstruct::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitMismatch = 3;

// `args` excludes the program name. Output JSON goes to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fstruct::cli
