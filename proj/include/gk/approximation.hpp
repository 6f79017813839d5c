#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gk/core.hpp"
#include "gk/report.hpp"

namespace gk {

/// Exact rational accuracy parameter in (0, 1].
struct Epsilon {
  std::int64_t num = 1;
  std::int64_t den = 1;

  /// Accepts "a/b" or a bare integer. Throws BadEpsilon.
  static Epsilon parse(const std::string& text);
  std::string str() const;
  void check() const;
};

struct ScaledInstance {
  Instance base;
  Instance scaled;
  Epsilon eps;
  Value alpha_max = 0;
  bool zero_values = false;
};

/// a'(u) = floor(n a(u) / (eps a_max)) for vertices with relevant[u] set,
/// 0 for the others; a_max is taken over relevant vertices. With a_max = 0
/// the values are left untouched and zero_values is set.
ScaledInstance scale_values(const Instance& inst, Epsilon eps, const std::vector<char>& relevant);

/// Every vertex relevant.
ScaledInstance scale_values(const Instance& inst, Epsilon eps);

using ExactSolver = std::function<SolveReport(const Instance&)>;

/// Value-scaling approximation around an exact frontier solver. The result
/// frontier is the single pair of the returned witness, measured with the
/// original values; scaled_value holds its value under the scaled ones.
/// `used`, when given, receives the scaled instance handed to the solver.
SolveReport fptas_optimize(const Instance& inst, Epsilon eps, const ExactSolver& exact_solver,
                           ScaledInstance* used = nullptr);

}  // namespace gk
