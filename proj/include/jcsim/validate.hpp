#pragma once

#include <ostream>

namespace jcsim {

// Built-in oracle suite: closed forms against the integrator, spectral
// identities, and Schmidt-decomposition sanity. Prints one line per check
// and returns the number of failures (0 = all good).
int run_validation(std::ostream& os);

}  // namespace jcsim
