#pragma once

#include <cstddef>
#include <string_view>

namespace dfilab {

/// Execution path for kernels that have both a serial reference and an
/// OpenMP implementation. Results are identical; only scheduling differs.
enum class Exec { Serial, Parallel };

/// Size limits. Exceeding one raises the matching structured error rather
/// than running unbounded.
struct Caps {
  std::size_t lattice_elements = 50000;    // LatticeTooLarge
  std::size_t oracle_generators = 12;      // OracleTooLarge (Taylor cells = 2^g)
  std::size_t complex_faces = 4000000;     // ComplexTooLarge (order complexes)
  std::size_t buchberger_steps = 200000;   // BudgetExceeded (pair reductions)
  std::size_t search_complexes = 4096;     // truncation point for necessity_search

  /// Parses "lattice=N,oracle=N,complex=N,budget=N,search=N" (any subset).
  /// Unknown keys or malformed numbers raise InvalidInput.
  static Caps parse(std::string_view spec);

  /// Defaults overridden by the DFILAB_CAPS environment variable, if set.
  static Caps from_env();
};

}  // namespace dfilab
