#pragma once

namespace unipat {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; the serial path is kept for testing and benchmarking.
enum class Exec { serial, parallel };

/// Threads OpenMP would use for a parallel region (1 without OpenMP).
int max_threads();

}  // namespace unipat
