#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/factorizations.hpp"
#include "nsg/length_density.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// ---------------------------------------------------------------------------
// Supersymmetric semigroups ⟨s/t₁, …, s/t_k⟩, s = t₁⋯t_k
// ---------------------------------------------------------------------------

struct SupersymmetricResult {
  std::vector<Int> t;
  Int product = 0;  // s, the unique Betti element
  NumericalSemigroup semigroup;
  Rational ld;  // (k − 1)/(t₁ − t_k)
  Verdict verdict = Verdict::bland;
};

inline bool is_arithmetic_progression(std::span<const Int> v) {
  for (std::size_t i = 2; i < v.size(); ++i)
    if (v[i] - v[i - 1] != v[1] - v[0]) return false;
  return true;
}

/// Builds S from pairwise coprime t₁ > ⋯ > t_k and returns its closed-form LD.
/// S is tasty iff t is not an arithmetic progression.
inline SupersymmetricResult supersymmetric(std::span<const Int> t, const Limits& limits = {}) {
  if (t.size() < 2) fail(ErrorKind::invalid_argument, "need at least two parameters");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 1) fail(ErrorKind::invalid_argument, "parameters must be positive");
    if (i && t[i] >= t[i - 1]) fail(ErrorKind::invalid_argument, "parameters must be strictly decreasing");
    for (std::size_t j = 0; j < i; ++j)
      if (std::gcd(t[i], t[j]) != 1)
        fail(ErrorKind::not_coprime,
             std::to_string(t[j]) + " and " + std::to_string(t[i]) + " share a factor");
  }
  Int s = 1;
  for (Int x : t) s = checked_mul(s, x);
  std::vector<Int> gens;
  for (Int x : t) gens.push_back(s / x);
  auto sg = NumericalSemigroup::from_generators(gens, limits);
  if (sg.embedding_dimension() != t.size())
    fail(ErrorKind::not_minimal, "generators s/t_i are not minimal (is t_k = 1?)");
  const Int k = static_cast<Int>(t.size());
  return SupersymmetricResult{std::vector<Int>(t.begin(), t.end()), s, std::move(sg), Rational(k - 1, t.front() - t.back()),
                              is_arithmetic_progression(t) ? Verdict::bland : Verdict::tasty};
}

// ---------------------------------------------------------------------------
// Embedding dimension three
// ---------------------------------------------------------------------------

struct ThreeGenReport {
  std::vector<LengthSet> betti;  // ascending
  Verdict verdict = Verdict::bland;
};

/// Dispatch on the number of Betti elements: one is supersymmetric (tasty iff Δ(s) is
/// not a singleton), two is tasty iff max Δ(b₂) > max Δ(b₁) and b₂ − b₁ ∈ S, three is bland.
inline ThreeGenReport classify_threegen(const NumericalSemigroup& s, const Limits& limits = {}) {
  if (s.embedding_dimension() != 3)
    fail(ErrorKind::wrong_embedding_dimension, s.str() + " does not have three minimal generators");
  ThreeGenReport r;
  r.betti = betti_length_sets(s, limits);
  switch (r.betti.size()) {
    case 1:
      r.verdict = r.betti[0].delta().gaps.size() > 1 ? Verdict::tasty : Verdict::bland;
      break;
    case 2: {
      const auto& b1 = r.betti[0];
      const auto& b2 = r.betti[1];
      const bool tasty = b2.delta().max() > b1.delta().max() && s.contains(b2.element - b1.element);
      r.verdict = tasty ? Verdict::tasty : Verdict::bland;
      break;
    }
    case 3:
      r.verdict = Verdict::bland;
      break;
    default:
      fail(ErrorKind::invalid_argument, "unexpected Betti count " + std::to_string(r.betti.size()));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Maximal embedding dimension
// ---------------------------------------------------------------------------

inline bool med_check(const NumericalSemigroup& s) {
  return static_cast<Int>(s.embedding_dimension()) == s.multiplicity();
}

/// Generators relabelled by residue: result[i] is the generator ≡ i mod m for
/// 1 ≤ i < m, and result[0] = m.
inline std::vector<Int> med_labeling(const NumericalSemigroup& s) {
  if (!med_check(s)) fail(ErrorKind::not_med, s.str() + " is not MED");
  const Int m = s.multiplicity();
  std::vector<Int> out(static_cast<std::size_t>(m), 0);
  for (Int g : s.generators()) out[static_cast<std::size_t>(g % m)] = g;
  return out;
}

/// {nᵢ + nⱼ : 1 ≤ i ≤ j ≤ m − 1}, ascending.
inline std::vector<Int> med_betti_formula(const NumericalSemigroup& s) {
  const auto n = med_labeling(s);
  std::vector<Int> out;
  for (std::size_t i = 1; i < n.size(); ++i)
    for (std::size_t j = i; j < n.size(); ++j) out.push_back(n[i] + n[j]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct SmallBettiCheck {
  Int residue = 0;
  LengthSet lengths;       // of the smallest Betti element in the residue class
  bool qualifies = false;  // residue is 0 or a unit mod m
  bool holds = true;       // |L(b)| ≤ 2 whenever qualifies
};

/// For each residue class, the smallest Betti element and whether it obeys |L(b)| ≤ 2
/// when its residue is 0 or a unit.
inline std::vector<SmallBettiCheck> med_small_betti_check(const NumericalSemigroup& s, const Limits& limits = {}) {
  const Int m = s.multiplicity();
  const auto betti = med_betti_formula(s);
  const LengthTable table(s, betti.back(), limits);
  std::vector<SmallBettiCheck> out;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (Int b : betti) {
    const Int r = b % m;
    if (seen[static_cast<std::size_t>(r)]) continue;
    seen[static_cast<std::size_t>(r)] = true;
    SmallBettiCheck c;
    c.residue = r;
    c.lengths = table.at(b);
    c.qualifies = r == 0 || std::gcd(r, m) == 1;
    c.holds = !c.qualifies || c.lengths.size() <= 2;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.residue < b.residue; });
  return out;
}

/// MED with prime multiplicity m ≥ 3 is always bland.
inline Verdict med_prime_bland(const NumericalSemigroup& s) {
  if (!med_check(s)) fail(ErrorKind::not_med, s.str() + " is not MED");
  if (s.multiplicity() < 3 || !is_prime(s.multiplicity()))
    fail(ErrorKind::not_prime_multiplicity, "multiplicity " + std::to_string(s.multiplicity()) + " is not an odd prime");
  return Verdict::bland;
}

struct MedCompositePair {
  NumericalSemigroup bland;  // ⟨m, m+1, …, 2m−1⟩
  NumericalSemigroup tasty;  // nᵢ = m + i if p | i, else 2qm + i
};

inline MedCompositePair med_composite_construct(Int p, Int q, const Limits& limits = {}) {
  if (!is_prime(p) || q < 2) fail(ErrorKind::not_composite, "need a prime p and q ≥ 2");
  const Int m = checked_mul(p, q);
  std::vector<Int> arith{m};
  std::vector<Int> tasty{m};
  for (Int i = 1; i < m; ++i) {
    arith.push_back(m + i);
    tasty.push_back(i % p == 0 ? m + i : checked_add(checked_mul(2 * q, m), i));
  }
  auto a = NumericalSemigroup::from_generators(arith, limits);
  auto t = NumericalSemigroup::from_generators(tasty, limits);
  if (!med_check(a) || !med_check(t)) fail(ErrorKind::not_med, "construction is not MED");
  return {std::move(a), std::move(t)};
}

// ---------------------------------------------------------------------------
// Multiplicity four
// ---------------------------------------------------------------------------

struct Med4Params {
  Int n1 = 0;  // ≡ 1 mod 4
  Int n2 = 0;  // ≡ 2 mod 4
  Int n3 = 0;  // ≡ 3 mod 4
};

/// Congruences plus the Kunz inequalities 2n₁ > n₂, n₁ + n₂ > n₃, n₂ + n₃ > n₁, 2n₃ > n₂.
inline bool med4_valid(const Med4Params& p) {
  return p.n1 > 4 && p.n2 > 4 && p.n3 > 4 && p.n1 % 4 == 1 && p.n2 % 4 == 2 && p.n3 % 4 == 3 && 2 * p.n1 > p.n2 &&
         p.n1 + p.n2 > p.n3 && p.n2 + p.n3 > p.n1 && 2 * p.n3 > p.n2;
}

enum class Med4Provenance { bland_rule, tasty_rule, exact };

constexpr std::string_view to_string(Med4Provenance p) {
  switch (p) {
    case Med4Provenance::bland_rule: return "min-not-n2";
    case Med4Provenance::tasty_rule: return "parabola";
    case Med4Provenance::exact: return "exact";
  }
  return "?";
}

struct Med4Result {
  NumericalSemigroup semigroup;
  Verdict verdict = Verdict::bland;
  Med4Provenance provenance = Med4Provenance::exact;
};

inline NumericalSemigroup med4_semigroup(const Med4Params& p, const Limits& limits = {}) {
  if (!med4_valid(p))
    fail(ErrorKind::not_med4, "(" + std::to_string(p.n1) + ", " + std::to_string(p.n2) + ", " + std::to_string(p.n3) +
                                  ") violates the congruences or Kunz inequalities");
  return NumericalSemigroup::from_generators({4, p.n1, p.n2, p.n3}, limits);
}

/// Closed-form rule where one applies: min(n₁, n₂, n₃) ≠ n₂ gives bland, otherwise
/// 2n₁ + 2n₃ > n₂² gives tasty. Everything else is computed exactly.
inline Med4Result classify_med4(const Med4Params& p, const CertifyOptions& opts = {}) {
  auto s = med4_semigroup(p, opts.limits);
  if (std::min({p.n1, p.n2, p.n3}) != p.n2) return {std::move(s), Verdict::bland, Med4Provenance::bland_rule};
  if (2 * p.n1 + 2 * p.n3 > p.n2 * p.n2) return {std::move(s), Verdict::tasty, Med4Provenance::tasty_rule};
  const Verdict v = ld_of_semigroup(s, opts).verdict;
  return {std::move(s), v, Med4Provenance::exact};
}

/// The two elements at one of which max Δ(S) is attained for multiplicity four:
/// max(2n₂, n₁ + n₃) and min(2n₁, 2n₃).
inline std::pair<Int, Int> med4_max_delta_candidates(const Med4Params& p) {
  return {std::max(2 * p.n2, p.n1 + p.n3), std::min(2 * p.n1, 2 * p.n3)};
}

/// All valid (n₁, n₃) with the given n₂ and n₁, n₃ ≤ bound.
inline std::vector<Med4Params> med4_grid(Int n2, Int bound) {
  std::vector<Med4Params> out;
  for (Int n1 = 5; n1 <= bound; n1 += 4)
    for (Int n3 = 7; n3 <= bound; n3 += 4) {
      Med4Params p{n1, n2, n3};
      if (med4_valid(p)) out.push_back(p);
    }
  return out;
}

}  // namespace nsg
