#include "npspec/parallel.hpp"

#include <cstdlib>
#include <string>

namespace npspec {

int resolve_workers(int requested) {
  if (const char* env = std::getenv("NP_SPECTRA_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return requested < 1 ? 1 : requested;
}

}  // namespace npspec
