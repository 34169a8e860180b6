#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nsg/factorizations.hpp"
#include "nsg/length_density.hpp"
#include "nsg/parallel.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// μS₁ + λS₂ for non-atoms λ ∈ S₁, μ ∈ S₂ with gcd(λ, μ) = 1.
struct GluingSpec {
  NumericalSemigroup s1;
  NumericalSemigroup s2;
  Int lambda = 0;
  Int mu = 0;
};

inline std::optional<std::string> gluing_problem(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda,
                                                 Int mu) {
  if (lambda <= 0 || mu <= 0) return "lambda and mu must be positive";
  if (!s1.contains(lambda)) return "lambda = " + std::to_string(lambda) + " is not in S1";
  if (s1.is_generator(lambda)) return "lambda = " + std::to_string(lambda) + " is an atom of S1";
  if (!s2.contains(mu)) return "mu = " + std::to_string(mu) + " is not in S2";
  if (s2.is_generator(mu)) return "mu = " + std::to_string(mu) + " is an atom of S2";
  if (std::gcd(lambda, mu) != 1) return "gcd(lambda, mu) != 1";
  return std::nullopt;
}

inline bool is_valid_gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda, Int mu) {
  return !gluing_problem(s1, s2, lambda, mu).has_value();
}

inline void validate(const GluingSpec& g) {
  if (auto why = gluing_problem(g.s1, g.s2, g.lambda, g.mu)) fail(ErrorKind::invalid_gluing, *why);
}

/// ⟨μn₁, …, μn_r, λn_{r+1}, …, λn_k⟩. The scaled union is always a minimal generating set;
/// a non-minimal result is reported as an invalid gluing.
inline NumericalSemigroup glue(const GluingSpec& g, const Limits& limits = {}) {
  validate(g);
  std::vector<Int> gens;
  for (Int x : g.s1.generators()) gens.push_back(checked_mul(g.mu, x));
  for (Int x : g.s2.generators()) gens.push_back(checked_mul(g.lambda, x));
  auto s = NumericalSemigroup::from_generators(gens, limits);
  if (s.embedding_dimension() != gens.size())
    fail(ErrorKind::invalid_gluing, "scaled generators of " + s.str() + " are not minimal");
  return s;
}

/// μBetti(S₁) ∪ λBetti(S₂) ∪ {λμ}, ascending.
inline std::vector<Int> betti_of_gluing(const GluingSpec& g) {
  validate(g);
  std::vector<Int> out;
  for (Int b : betti_values(g.s1)) out.push_back(g.mu * b);
  for (Int b : betti_values(g.s2)) out.push_back(g.lambda * b);
  out.push_back(g.lambda * g.mu);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// L_{S₁}(λ) ∪ L_{S₂}(μ), the length set of λμ in the gluing.
inline LengthSet lambda_mu_length_set(const GluingSpec& g, const Limits& limits = {}) {
  validate(g);
  const auto a = length_set(g.s1, g.lambda, limits).lengths;
  const auto b = length_set(g.s2, g.mu, limits).lengths;
  LengthSet out{g.lambda * g.mu, {}};
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.lengths));
  return out;
}

/// Length sets in a gluing from the length tables of its factors. Every factorization of
/// n in μS₁ + λS₂ splits as n = μx + λy with x ∈ S₁, y ∈ S₂, so
/// L(n) = ⋃ (L_{S₁}(x) + L_{S₂}(y)) over those splittings.
///
/// Tables are sized on construction; read-only use is thread-safe.
class GluingContext {
 public:
  GluingContext(NumericalSemigroup s1, NumericalSemigroup s2, Int bound1, Int bound2, const Limits& limits = {})
      : s1_(std::move(s1)),
        s2_(std::move(s2)),
        betti1_(betti_values(s1_)),
        betti2_(betti_values(s2_)),
        table1_(s1_, bound1, limits),
        table2_(s2_, bound2, limits) {}

  /// Context with tables large enough for the Betti elements of every gluing with
  /// λ ≤ lambda_max and μ ≤ mu_max.
  static GluingContext for_range(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda_max, Int mu_max,
                                 const Limits& limits = {}) {
    const auto b1 = betti_values(s1);
    const auto b2 = betti_values(s2);
    const Int max_b1 = b1.empty() ? 0 : b1.back();
    const Int max_b2 = b2.empty() ? 0 : b2.back();
    // Smallest non-atoms bound λ and μ from below.
    const Int lambda_min = 2 * s1.multiplicity();
    const Int mu_min = 2 * s2.multiplicity();
    const Int bound1 = std::max({max_b1, ceil_div(lambda_max * max_b2, mu_min), lambda_max});
    const Int bound2 = std::max({max_b2, ceil_div(mu_max * max_b1, lambda_min), mu_max});
    return GluingContext(s1, s2, bound1, bound2, limits);
  }

  const NumericalSemigroup& s1() const noexcept { return s1_; }
  const NumericalSemigroup& s2() const noexcept { return s2_; }
  std::span<const Int> betti1() const noexcept { return betti1_; }
  std::span<const Int> betti2() const noexcept { return betti2_; }

  LengthSet length_set(Int lambda, Int mu, Int n) const {
    if (n / mu > table1_.bound() || n / lambda > table2_.bound())
      fail(ErrorKind::cap_exceeded, "element " + std::to_string(n) + " outside the gluing tables");
    std::vector<Int> lens;
    for (Int x = 0; mu * x <= n; ++x) {
      const Int rest = n - mu * x;
      if (rest % lambda != 0) continue;
      const Int y = rest / lambda;
      if (!table1_.contains(x) || !table2_.contains(y)) continue;
      for (Int a : table1_.lengths(x))
        for (Int b : table2_.lengths(y)) lens.push_back(a + b);
    }
    if (lens.empty()) fail(ErrorKind::not_an_element, std::to_string(n) + " is not in the gluing");
    std::sort(lens.begin(), lens.end());
    lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
    return LengthSet{n, std::move(lens)};
  }

  std::vector<Int> betti(Int lambda, Int mu) const {
    std::vector<Int> out;
    for (Int b : betti1_) out.push_back(mu * b);
    for (Int b : betti2_) out.push_back(lambda * b);
    out.push_back(lambda * mu);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Betti-criterion classification of μS₁ + λS₂.
  Classification classify(Int lambda, Int mu) const {
    if (auto why = gluing_problem(s1_, s2_, lambda, mu)) fail(ErrorKind::invalid_gluing, *why);
    std::vector<LengthSet> ls;
    for (Int b : betti(lambda, mu)) ls.push_back(length_set(lambda, mu, b));
    return classify_from_betti_lengths(ls);
  }

 private:
  NumericalSemigroup s1_;
  NumericalSemigroup s2_;
  std::vector<Int> betti1_;
  std::vector<Int> betti2_;
  LengthTable table1_;
  LengthTable table2_;
};

/// Classification through the gluing structure: Betti elements from the gluing formula,
/// their length sets from the factors.
inline Classification classify_gluing(const GluingSpec& g, const Limits& limits = {}) {
  validate(g);
  return GluingContext::for_range(g.s1, g.s2, g.lambda, g.mu, limits).classify(g.lambda, g.mu);
}

/// Exact LD(S) of the glued semigroup from its certified periodic window.
inline Classification classify_gluing_exact(const GluingSpec& g, const CertifyOptions& opts = {}) {
  return ld_of_semigroup(glue(g, opts.limits), opts);
}

struct GluingRow {
  Int lambda = 0;
  Int mu = 0;
  Verdict verdict = Verdict::tasty;
  Int max_delta = 0;
};

struct GluingScan {
  std::vector<GluingRow> rows;  // ordered by (λ, μ)
  Int skipped = 0;              // pairs in range that are not valid gluings
};

/// Classifies every valid gluing with 1 ≤ λ ≤ lambda_max and 1 ≤ μ ≤ mu_max.
/// `keep` restricts the scan to a subset of pairs; excluded pairs are not counted as skipped.
template <typename Keep>
GluingScan scan_gluings_if(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda_max, Int mu_max,
                           Keep&& keep, unsigned jobs = 1, const Limits& limits = {}) {
  GluingScan out;
  for (Int l = 1; l <= lambda_max; ++l)
    for (Int m = 1; m <= mu_max; ++m) {
      if (!keep(l, m)) continue;
      if (is_valid_gluing(s1, s2, l, m))
        out.rows.push_back(GluingRow{l, m});
      else
        ++out.skipped;
    }
  if (out.rows.empty()) return out;
  const auto ctx = GluingContext::for_range(s1, s2, lambda_max, mu_max, limits);
  parallel_for(out.rows.size(), jobs, [&](std::size_t i) {
    auto& row = out.rows[i];
    const auto c = ctx.classify(row.lambda, row.mu);
    row.verdict = c.verdict;
    row.max_delta = c.max_delta;
  });
  return out;
}

inline GluingScan scan_gluings(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda_max, Int mu_max,
                               unsigned jobs = 1, const Limits& limits = {}) {
  return scan_gluings_if(s1, s2, lambda_max, mu_max, [](Int, Int) { return true; }, jobs, limits);
}

// ---------------------------------------------------------------------------
// Self-gluings of two-generated semigroups
// ---------------------------------------------------------------------------

enum class Region { below_floor, tasty, bland, undetermined };

constexpr std::string_view to_string(Region r) {
  switch (r) {
    case Region::below_floor: return "below-floor";
    case Region::tasty: return "tasty";
    case Region::bland: return "bland";
    case Region::undetermined: return "undetermined";
  }
  return "?";
}

/// Ruled regions for μS + λS with S = ⟨n₁, n₂⟩ and λ > μ > floor = 2n₁n₂ − n₁ − n₂:
/// tasty above λ = (n₂/n₁)μ + n₂(n₂ − n₁), bland below λ = (n₂/n₁)μ − n₂(n₂ − n₁).
struct SelfGlueRegions {
  Int floor = 0;
  Rational slope;
  Int offset = 0;  // tasty line intercept is +offset, bland line intercept is −offset

  Region classify(Int lambda, Int mu) const {
    if (!(lambda > mu && mu > floor)) return Region::below_floor;
    const Rational centre = slope * Rational(mu);
    if (Rational(lambda) > centre + Rational(offset)) return Region::tasty;
    if (Rational(lambda) < centre - Rational(offset)) return Region::bland;
    return Region::undetermined;
  }
};

inline SelfGlueRegions self_glue_region_bounds(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 2)
    fail(ErrorKind::wrong_embedding_dimension, s.str() + " does not have two generators");
  const Int n1 = s.generators()[0];
  const Int n2 = s.generators()[1];
  return SelfGlueRegions{2 * n1 * n2 - n1 - n2, Rational(n2, n1), n2 * (n2 - n1)};
}

struct TastyProportion {
  Int tasty = 0;
  Int total = 0;
  Rational ratio;
  GluingScan scan;  // rows with λ > μ
};

/// Counts tasty self-gluings μS + λS over unordered pairs λ > μ with λ, μ < bound.
inline TastyProportion tasty_proportion(const NumericalSemigroup& s, Int bound, unsigned jobs = 1,
                                        const Limits& limits = {}) {
  if (s.embedding_dimension() != 2)
    fail(ErrorKind::wrong_embedding_dimension, s.str() + " does not have two generators");
  TastyProportion out;
  out.scan = scan_gluings_if(s, s, bound - 1, bound - 1, [](Int l, Int m) { return l > m; }, jobs, limits);
  for (const auto& r : out.scan.rows) {
    ++out.total;
    out.tasty += r.verdict == Verdict::tasty;
  }
  if (out.total == 0) fail(ErrorKind::invalid_argument, "no valid self-gluings below " + std::to_string(bound));
  out.ratio = Rational(out.tasty, out.total);
  return out;
}

/// Gluings that must be tasty: a prime λ ∈ S₁ with at least two lengths and λ above
/// n₂, and μ = p·n_k for a prime p > λ with p ≥ max L(λ) + d + 1, where n_k is the
/// largest atom of S₂ and d the larger of max Δ(S₁), max Δ(S₂).
inline std::vector<GluingSpec> tasty_gluing_witnesses(const NumericalSemigroup& s1, const NumericalSemigroup& s2,
                                                      std::size_t count, const Limits& limits = {}) {
  Int d = 0;
  for (const auto& l : betti_length_sets(s1, limits)) d = std::max(d, l.delta().max());
  for (const auto& l : betti_length_sets(s2, limits)) d = std::max(d, l.delta().max());
  const Int n2 = s1.embedding_dimension() > 1 ? s1.generators()[1] : s1.generators()[0];
  const Int nk = s2.largest_generator();
  std::vector<GluingSpec> out;
  for (Int lambda = n2 + 1; out.size() < count; ++lambda) {
    if (!is_prime(lambda) || !s1.contains(lambda) || nk % lambda == 0) continue;
    const auto l = length_set(s1, lambda, limits);
    if (l.size() < 2) continue;
    Int p = std::max(lambda + 1, l.max() + d + 1);
    while (!is_prime(p) || std::gcd(lambda, p * nk) != 1) ++p;
    out.push_back(GluingSpec{s1, s2, lambda, p * nk});
  }
  return out;
}

}  // namespace nsg
