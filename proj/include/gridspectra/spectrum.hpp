#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gridspectra/graph.hpp"
#include "gridspectra/matrix.hpp"

namespace gridspectra {

struct SpectrumEntry {
  std::int64_t theta = 0;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of integer eigenvalues, stored as distinct values in descending
/// order with positive multiplicities.
class Spectrum {
 public:
  Spectrum() = default;

  /// Sorts, merges repeated eigenvalues and rejects zero multiplicities.
  Spectrum(std::vector<SpectrumEntry> entries) {  // NOLINT: implicit from brace lists
    for (const auto& e : entries)
      if (e.multiplicity == 0)
        throw InvalidParameter("zero multiplicity for eigenvalue " + std::to_string(e.theta));
    std::sort(entries.begin(), entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.theta > b.theta; });
    for (const auto& e : entries) {
      if (!entries_.empty() && entries_.back().theta == e.theta)
        entries_.back().multiplicity += e.multiplicity;
      else
        entries_.push_back(e);
    }
  }

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  std::size_t distinct() const noexcept { return entries_.size(); }

  std::uint64_t total() const {
    std::uint64_t n = 0;
    for (const auto& e : entries_) n += e.multiplicity;
    return n;
  }

  std::uint64_t multiplicity_of(std::int64_t theta) const {
    for (const auto& e : entries_)
      if (e.theta == theta) return e.multiplicity;
    return 0;
  }

  /// One "theta multiplicity" line per eigenvalue, descending.
  std::string to_text() const {
    std::ostringstream out;
    for (const auto& e : entries_) out << e.theta << ' ' << e.multiplicity << '\n';
    return out.str();
  }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Inverse of Spectrum::to_text. Non-integral eigenvalues raise
/// UnsupportedClaim; anything else malformed raises ParseError.
inline Spectrum parse_spectrum(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<SpectrumEntry> entries;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string theta_tok, mult_tok, extra;
    if (!(fields >> theta_tok)) continue;
    if (!(fields >> mult_tok) || (fields >> extra)) throw ParseError(lineno, "expected \"theta multiplicity\"");
    std::size_t used = 0;
    long long theta = 0;
    try {
      theta = std::stoll(theta_tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != theta_tok.size()) {
      throw UnsupportedClaim("eigenvalue '" + theta_tok + "' on line " + std::to_string(lineno) +
                             " is not an integer; only integral spectra can be certified");
    }
    if (mult_tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(lineno, "multiplicity must be a non-negative integer");
    entries.push_back({theta, std::stoull(mult_tok)});
  }
  return Spectrum(std::move(entries));
}

/// Spectrum of the s-clique extension of the (t+1)x(t+1) grid:
/// {(s(2t+1)-1)^1, (st-1)^{2t}, (-1)^{(s-1)(t+1)^2}, (-s-1)^{t^2}}.
inline Spectrum expected_spectrum(const ExtensionParams& p) {
  p.validate();
  const auto s = p.s, t = p.t;
  return Spectrum({{s * (2 * t + 1) - 1, 1},
                   {s * t - 1, static_cast<std::uint64_t>(2 * t)},
                   {-1, static_cast<std::uint64_t>((s - 1) * (t + 1) * (t + 1))},
                   {-s - 1, static_cast<std::uint64_t>(t * t)}});
}

/// Spectrum of the m x m grid: {(2m-2)^1, (m-2)^{2(m-1)}, (-2)^{(m-1)^2}}.
inline Spectrum grid_spectrum(std::int64_t m) {
  if (m < 2) throw InvalidParameter("grid side must be at least 2");
  return Spectrum({{2 * m - 2, 1},
                   {m - 2, static_cast<std::uint64_t>(2 * (m - 1))},
                   {-2, static_cast<std::uint64_t>((m - 1) * (m - 1))}});
}

/// Each theta^m becomes (s(theta+1)-1)^m, and (-1) gains (s-1)n extra copies.
inline Spectrum clique_extension_spectrum(const Spectrum& base, std::int64_t s) {
  if (s <= 0) throw InvalidParameter("clique extension size must be positive");
  std::vector<SpectrumEntry> out;
  for (const auto& e : base.entries()) out.push_back({s * (e.theta + 1) - 1, e.multiplicity});
  const std::uint64_t extra = static_cast<std::uint64_t>(s - 1) * base.total();
  if (extra > 0) out.push_back({-1, extra});
  return Spectrum(std::move(out));
}

/// Exact solution m of sum_i m_i theta_i^r = traces[r], r = 0..d-1, for
/// distinct theta. Uses the closed-form inverse of the Vandermonde matrix:
/// m_i = (sum_r b_{i,r} traces[r]) / prod_{j != i}(theta_i - theta_j), where
/// b_{i,r} are the coefficients of prod_{j != i}(x - theta_j). Returns
/// nullopt when some division is inexact (no integral solution).
inline std::optional<std::vector<Wide>> solve_multiplicities(const std::vector<std::int64_t>& thetas,
                                                             const std::vector<Wide>& traces) {
  const std::size_t d = thetas.size();
  if (traces.size() < d) throw InvalidParameter("need one trace per distinct eigenvalue");
  std::vector<Wide> result(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Wide> poly{1};  // ascending coefficients
    Wide denom = 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == i) continue;
      if (thetas[i] == thetas[j]) throw InvalidParameter("eigenvalues must be distinct");
      std::vector<Wide> next(poly.size() + 1, 0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k + 1] = checked_add(next[k + 1], poly[k]);
        next[k] = checked_sub(next[k], checked_mul(poly[k], thetas[j]));
      }
      poly = std::move(next);
      denom = checked_mul(denom, static_cast<Wide>(thetas[i]) - thetas[j]);
    }
    Wide num = 0;
    for (std::size_t r = 0; r < poly.size(); ++r) num = checked_add(num, checked_mul(poly[r], traces[r]));
    if (num % denom != 0) return std::nullopt;
    result[i] = num / denom;
  }
  return result;
}

struct SpectrumCheck {
  bool ok = false;
  /// Human-readable description of the first failed check; empty on success.
  std::string witness;
};

/// Certifies that `claimed` is the spectrum of g, exactly.
///
/// Two checks: the product of (A - theta I) over the claimed eigenvalues is
/// the zero matrix, so every eigenvalue of A is among them (A is
/// diagonalizable); and the trace equations sum_i m_i theta_i^r = tr(A^r),
/// r = 0..d-1, which pin the multiplicities uniquely.
inline SpectrumCheck verify_spectrum(const Graph& g, const Spectrum& claimed) {
  const std::size_t n = g.order();
  const auto& entries = claimed.entries();
  if (entries.empty()) {
    if (n == 0) return {true, {}};
    return {false, "empty spectrum claimed for a graph of order " + std::to_string(n)};
  }

  // Traces of A^r for r < d, with A^r built by right-multiplication.
  std::vector<Wide> traces;
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (r > 0) power = times_adjacency(power, g);
    traces.push_back(power.trace());
  }
  for (std::size_t r = 0; r < entries.size(); ++r) {
    Wide lhs = 0;
    for (const auto& e : entries) {
      Wide term = static_cast<Wide>(e.multiplicity);
      for (std::size_t k = 0; k < r; ++k) term = checked_mul(term, e.theta);
      lhs = checked_add(lhs, term);
    }
    if (lhs != traces[r]) {
      return {false, "trace equation r=" + std::to_string(r) + ": sum m_i theta_i^r = " + to_string(lhs) +
                         " but tr(A^r) = " + to_string(traces[r])};
    }
  }

  IntMatrix product = IntMatrix::identity(n);
  for (const auto& e : entries) {
    IntMatrix next = times_adjacency(product, g);
    next.add_scaled(product, -static_cast<Wide>(e.theta));
    product = std::move(next);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (product(i, j) != 0)
        return {false, "annihilating product nonzero at (" + std::to_string(i) + "," + std::to_string(j) +
                           "): " + to_string(product(i, j))};
  return {true, {}};
}

/// Coefficients of the Hoffman polynomial of a connected k-regular graph with
/// four distinct eigenvalues k > theta_1 > theta_2 > theta_3:
///   A^3 + c2 A^2 + c1 A + c0 I = j J.
struct HoffmanPolynomial {
  Wide c2 = 0;
  Wide c1 = 0;
  Wide c0 = 0;
  Wide j = 0;
};

/// Builds the polynomial from a four-eigenvalue spectrum; j is
/// prod(k - theta_i) / n and must divide exactly.
inline HoffmanPolynomial hoffman_polynomial(const Spectrum& spec) {
  const auto& e = spec.entries();
  if (e.size() != 4) throw PreconditionError("Hoffman polynomial needs exactly four distinct eigenvalues");
  if (e[0].multiplicity != 1) throw PreconditionError("largest eigenvalue must be simple");
  const Wide k = e[0].theta, a = e[1].theta, b = e[2].theta, c = e[3].theta;
  HoffmanPolynomial h;
  h.c2 = -(a + b + c);
  h.c1 = a * b + a * c + b * c;
  h.c0 = -(a * b * c);
  const Wide num = checked_mul(checked_mul(k - a, k - b), k - c);
  const Wide n = static_cast<Wide>(spec.total());
  if (num % n != 0) throw PreconditionError("prod(k - theta_i) is not divisible by n");
  h.j = num / n;
  return h;
}

inline HoffmanPolynomial hoffman_polynomial(const ExtensionParams& p) {
  return hoffman_polynomial(expected_spectrum(p));
}

struct HoffmanCheck {
  bool ok = false;
  Wide max_deviation = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Checks A^3 + c2 A^2 + c1 A + c0 I = j J entrywise for the polynomial of
/// expected_spectrum(p). Reports the entry with the largest |deviation|.
inline HoffmanCheck verify_hoffman_identity(const Graph& g, const ExtensionParams& p) {
  if (g.order() == 0 || !is_regular(g)) throw PreconditionError("Hoffman identity needs a regular graph");
  if (!is_connected(g)) throw PreconditionError("Hoffman identity needs a connected graph");
  const HoffmanPolynomial h = hoffman_polynomial(p);
  const auto pw = adjacency_powers(g, 3);
  const std::size_t n = g.order();

  HoffmanCheck out;
  out.ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Wide lhs = pw[3](i, j);
      lhs = checked_add(lhs, checked_mul(h.c2, pw[2](i, j)));
      lhs = checked_add(lhs, checked_mul(h.c1, pw[1](i, j)));
      if (i == j) lhs = checked_add(lhs, h.c0);
      const Wide dev = checked_sub(lhs, h.j);
      const Wide mag = dev < 0 ? -dev : dev;
      if (mag > out.max_deviation) {
        out.max_deviation = mag;
        out.row = i;
        out.col = j;
      }
    }
  }
  out.ok = out.max_deviation == 0;
  return out;
}

struct WalkRegularityCheck {
  bool ok = false;
  /// diag(A^r) value for r = 2..; filled up to the first non-constant power.
  std::vector<Wide> diagonal;
  /// First r with non-constant diagonal, 0 if none.
  std::size_t failing_power = 0;
};

/// Checks that A^r has constant diagonal for 2 <= r <= r_max.
inline WalkRegularityCheck verify_walk_regularity(const Graph& g, std::size_t r_max) {
  if (r_max < 2) throw InvalidParameter("r_max must be at least 2");
  WalkRegularityCheck out;
  out.ok = true;
  const std::size_t n = g.order();
  IntMatrix power = IntMatrix::adjacency(g);
  for (std::size_t r = 2; r <= r_max; ++r) {
    power = times_adjacency(power, g);
    if (n == 0) continue;
    const Wide first = power(0, 0);
    for (std::size_t i = 1; i < n; ++i) {
      if (power(i, i) != first) {
        out.ok = false;
        out.failing_power = r;
        return out;
      }
    }
    out.diagonal.push_back(first);
  }
  return out;
}

/// Affine rule value = constant + slope * x.
struct AffineRule {
  Wide constant = 0;
  Wide slope = 0;

  Wide operator()(Wide x) const { return constant + slope * x; }
};

/// Closed forms for entries of A^3 on a graph cospectral with the
/// s-clique extension of the (t+1)x(t+1) grid:
///   diagonal      2s^2t^2 + 4s^2t - 6st + s^2 - 3s + 2
///   x ~ y         5s^2t + 2st + 2s^2 - 2s - 3 - (3 + s - st) lambda_xy
///   x !~ y        4s^2t + 2s^2 - (3 + s - st) mu_xy
struct A3Classification {
  Wide diag_value = 0;
  AffineRule edge_rule;
  AffineRule nonedge_rule;
};

inline A3Classification a3_classification(const ExtensionParams& p) {
  p.validate();
  const Wide s = p.s, t = p.t;
  A3Classification c;
  c.diag_value = 2 * s * s * t * t + 4 * s * s * t - 6 * s * t + s * s - 3 * s + 2;
  c.edge_rule = {5 * s * s * t + 2 * s * t + 2 * s * s - 2 * s - 3, -(3 + s - s * t)};
  c.nonedge_rule = {4 * s * s * t + 2 * s * s, -(3 + s - s * t)};
  return c;
}

struct A3Violation {
  std::size_t x = 0;
  std::size_t y = 0;
  Wide expected = 0;
  Wide actual = 0;
};

struct A3Check {
  bool ok = false;
  std::optional<A3Violation> first_violation;
};

/// Checks every entry of A^3 against a3_classification(p). Refuses (throws
/// PreconditionError) unless g certifiably has spectrum expected_spectrum(p),
/// since the closed forms are derived from that spectrum.
inline A3Check verify_a3_classification(const Graph& g, const ExtensionParams& p) {
  const SpectrumCheck spec = verify_spectrum(g, expected_spectrum(p));
  if (!spec.ok) throw PreconditionError("A^3 classification requires the extension spectrum: " + spec.witness);
  const A3Classification c = a3_classification(p);
  const auto pw = adjacency_powers(g, 3);
  const std::size_t n = g.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Wide expected;
      if (x == y)
        expected = c.diag_value;
      else if (g.adjacent(x, y))
        expected = c.edge_rule(pw[2](x, y));
      else
        expected = c.nonedge_rule(pw[2](x, y));
      if (pw[3](x, y) != expected) return {false, A3Violation{x, y, expected, pw[3](x, y)}};
    }
  }
  return {true, std::nullopt};
}

}  // namespace gridspectra
