#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace doodlekit::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;  // Distinct, not isomorphic, not separated
inline constexpr int unknown = 2;
inline constexpr int usage = 64;
inline constexpr int data = 65;
}  // namespace exit_code

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doodlekit::cli
