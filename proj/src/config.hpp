#pragma once

#include "dense_matrix.hpp"

namespace convsolve {

/// Maximum m*n for which mn x mn operators may be materialized.
/// Defaults to 4096; the environment variable CONVSOLVE_SIZE_CAP
/// overrides the default at first use.
Index size_cap();

/// Overrides the cap for the rest of the process (mainly for tests).
void set_size_cap(Index cap);

}  // namespace convsolve
