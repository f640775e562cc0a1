#pragma once

#include <optional>
#include <string_view>

namespace doodlekit {

// Execution backend for the data-parallel kernels. Both produce identical
// results; serial is the reference.
enum class Backend { serial, openmp };

std::string_view backend_name(Backend b);
std::optional<Backend> parse_backend(std::string_view name);
bool openmp_available() noexcept;
int openmp_threads() noexcept;

}  // namespace doodlekit
