#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gridspectra/spectrum.hpp"

namespace gridspectra {

/// det(theta I - A) in exact arithmetic (fraction-free Bareiss elimination),
/// i.e. the characteristic polynomial evaluated at theta.
inline boost::multiprecision::cpp_int characteristic_value(const Graph& g, std::int64_t theta) {
  using boost::multiprecision::cpp_int;
  const std::size_t n = g.order();
  if (n == 0) return 1;
  std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = theta;
    for (Vertex j : g.neighbors(i)) m[i][j] = -1;
  }
  cpp_int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// The spectrum of g if it is integral, nullopt otherwise.
///
/// Integer eigenvalues of a graph lie in [-maxdeg, maxdeg]; each candidate is
/// tested by evaluating the exact characteristic polynomial. Multiplicities
/// come from the trace system, and the result is re-certified with
/// verify_spectrum, which fails whenever a non-integral eigenvalue exists.
inline std::optional<Spectrum> find_integral_spectrum(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return Spectrum{};
  std::int64_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) max_degree = std::max<std::int64_t>(max_degree, g.degree(v));

  std::vector<std::int64_t> roots;
  for (std::int64_t theta = max_degree; theta >= -max_degree; --theta)
    if (characteristic_value(g, theta) == 0) roots.push_back(theta);
  if (roots.empty()) return std::nullopt;

  std::vector<Wide> traces;
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    if (r > 0) power = times_adjacency(power, g);
    traces.push_back(power.trace());
  }
  const auto mult = solve_multiplicities(roots, traces);
  if (!mult) return std::nullopt;

  std::vector<SpectrumEntry> entries;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if ((*mult)[i] <= 0) return std::nullopt;
    entries.push_back({roots[i], static_cast<std::uint64_t>((*mult)[i])});
  }
  Spectrum spec(std::move(entries));
  if (spec.total() != n || !verify_spectrum(g, spec).ok) return std::nullopt;
  return spec;
}

}  // namespace gridspectra
