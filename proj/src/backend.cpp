#include "doodlekit/backend.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace doodlekit {

std::string_view backend_name(Backend b) { return b == Backend::openmp ? "openmp" : "serial"; }

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "serial") return Backend::serial;
  if (name == "openmp") return Backend::openmp;
  return std::nullopt;
}

bool openmp_available() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int openmp_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace doodlekit
