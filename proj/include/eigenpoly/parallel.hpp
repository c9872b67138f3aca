#pragma once

namespace eigenpoly {

/// Worker cap for OpenMP regions: EIGENPOLY_THREADS when set and positive,
/// otherwise the OpenMP default. Results never depend on the value; only
/// wall time does.
int max_threads();

}  // namespace eigenpoly
