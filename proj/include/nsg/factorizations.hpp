#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "nsg/length_sweep.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// Exponent vector z with n = Σ zᵢnᵢ over the minimal generators of a semigroup.
struct Factorization {
  std::vector<Int> exponents;

  Int length() const { return std::accumulate(exponents.begin(), exponents.end(), Int{0}); }

  Int value(const NumericalSemigroup& s) const {
    Int v = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) v = checked_add(v, checked_mul(exponents[i], s.generators()[i]));
    return v;
  }

  bool shares_support(const Factorization& o) const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > 0 && o.exponents[i] > 0) return true;
    return false;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
    return s + ")";
  }

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

/// Successive gaps of a length set, deduplicated and sorted.
struct DeltaSet {
  std::vector<Int> gaps;

  bool empty() const noexcept { return gaps.empty(); }
  Int max() const noexcept { return gaps.empty() ? 0 : gaps.back(); }
  Int min() const noexcept { return gaps.empty() ? 0 : gaps.front(); }
  bool contains(Int g) const { return std::binary_search(gaps.begin(), gaps.end(), g); }

  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
};

inline DeltaSet delta_of_lengths(std::span<const Int> sorted_lengths) {
  DeltaSet d;
  for (std::size_t i = 1; i < sorted_lengths.size(); ++i) d.gaps.push_back(sorted_lengths[i] - sorted_lengths[i - 1]);
  std::sort(d.gaps.begin(), d.gaps.end());
  d.gaps.erase(std::unique(d.gaps.begin(), d.gaps.end()), d.gaps.end());
  return d;
}

/// L(n) as a strictly increasing list.
struct LengthSet {
  Int element = 0;
  std::vector<Int> lengths;

  std::size_t size() const noexcept { return lengths.size(); }
  Int min() const { return lengths.front(); }
  Int max() const { return lengths.back(); }
  DeltaSet delta() const { return delta_of_lengths(lengths); }

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
};

/// Every factorization of n, in lexicographic order.
///
/// Throws budget_exceeded past limits.max_factorizations; callers that only need
/// lengths should use length_set instead.
inline std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int n, const Limits& limits = {}) {
  if (n < 0) fail(ErrorKind::invalid_argument, "negative element");
  std::vector<Factorization> out;
  if (!s.contains(n)) return out;
  const auto gens = s.generators();
  const std::size_t k = gens.size();
  std::vector<Int> z(k, 0);
  // Descend from the largest generator; the smallest absorbs the remainder exactly.
  auto rec = [&](auto&& self, std::size_t i, Int rem) -> void {
    if (i == 0) {
      if (rem % gens[0] != 0) return;
      z[0] = rem / gens[0];
      if (out.size() >= limits.max_factorizations)
        fail(ErrorKind::budget_exceeded, "more than " + std::to_string(limits.max_factorizations) +
                                             " factorizations of " + std::to_string(n));
      out.push_back(Factorization{z});
      return;
    }
    for (Int c = rem / gens[i]; c >= 0; --c) {
      const Int r = rem - c * gens[i];
      if (!s.contains(r)) continue;
      z[i] = c;
      self(self, i - 1, r);
    }
    z[i] = 0;
  };
  rec(rec, k - 1, n);
  std::sort(out.begin(), out.end());
  return out;
}

inline LengthSet length_set(const NumericalSemigroup& s, Int n, const Limits& limits = {}) {
  if (!s.contains(n)) fail(ErrorKind::not_an_element, std::to_string(n) + " is not in " + s.str());
  LengthSweep sweep(s, limits);
  LengthView v;
  while (sweep.next() <= n) v = sweep.advance();
  return LengthSet{n, v.lengths()};
}

inline DeltaSet delta_of(const NumericalSemigroup& s, Int n, const Limits& limits = {}) {
  return length_set(s, n, limits).delta();
}

/// Length sets of every element of S up to a bound, stored in one flat pool.
class LengthTable {
 public:
  LengthTable() = default;

  LengthTable(const NumericalSemigroup& s, Int bound, const Limits& limits = {}) : bound_(bound) {
    if (bound < 0) fail(ErrorKind::invalid_argument, "negative table bound");
    if (static_cast<std::size_t>(bound) + 1 > limits.max_table_entries)
      fail(ErrorKind::cap_exceeded, "table bound " + std::to_string(bound) + " exceeds cap");
    offsets_.reserve(static_cast<std::size_t>(bound) + 2);
    offsets_.push_back(0);
    LengthSweep sweep(s, limits);
    while (sweep.next() <= bound) {
      const LengthView v = sweep.advance();
      v.for_each([&](Int l) { pool_.push_back(l); });
      offsets_.push_back(pool_.size());
      if (pool_.size() > limits.max_table_entries * 4)
        fail(ErrorKind::cap_exceeded, "length table exceeds memory cap");
    }
  }

  Int bound() const noexcept { return bound_; }

  bool contains(Int n) const noexcept {
    return n >= 0 && n <= bound_ && offsets_[static_cast<std::size_t>(n) + 1] > offsets_[static_cast<std::size_t>(n)];
  }

  std::span<const Int> lengths(Int n) const {
    if (n < 0 || n > bound_) fail(ErrorKind::invalid_argument, "element outside table bound");
    const auto i = static_cast<std::size_t>(n);
    return std::span<const Int>(pool_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]);
  }

  LengthSet at(Int n) const {
    if (!contains(n)) fail(ErrorKind::not_an_element, std::to_string(n) + " not in table");
    auto l = lengths(n);
    return LengthSet{n, std::vector<Int>(l.begin(), l.end())};
  }

 private:
  Int bound_ = -1;
  std::vector<std::size_t> offsets_;
  std::vector<Int> pool_;
};

inline LengthTable length_set_table(const NumericalSemigroup& s, Int bound, const Limits& limits = {}) {
  return LengthTable(s, bound, limits);
}

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

/// Connected components of the factorization graph ∇_n, where two factorizations are
/// adjacent when their supports meet. Components are ordered by their lexicographically
/// smallest member; members are sorted.
inline std::vector<std::vector<Factorization>> factorization_graph_components(const NumericalSemigroup& s, Int n,
                                                                              const Limits& limits = {}) {
  if (!s.contains(n)) fail(ErrorKind::not_an_element, std::to_string(n) + " is not in " + s.str());
  const auto fs = factorizations(s, n, limits);
  const std::size_t k = s.embedding_dimension();
  detail::DisjointSets ds(fs.size());
  // Union through generators: every factorization using generator i joins the first one seen.
  std::vector<std::size_t> first_with(k, fs.size());
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (std::size_t i = 0; i < k; ++i)
      if (fs[f].exponents[i] > 0) {
        if (first_with[i] == fs.size())
          first_with[i] = f;
        else
          ds.unite(first_with[i], f);
      }
  std::vector<std::vector<Factorization>> comps;
  std::vector<std::size_t> slot(fs.size(), fs.size());
  for (std::size_t f = 0; f < fs.size(); ++f) {  // fs is sorted, so roots appear in lex order
    const std::size_t r = ds.find(f);
    if (slot[r] == fs.size()) {
      slot[r] = comps.size();
      comps.emplace_back();
    }
    comps[slot[r]].push_back(fs[f]);
  }
  return comps;
}

/// Number of components of ∇_n using membership queries only: components of ∇_n
/// correspond to components of the graph on {i : n − nᵢ ∈ S} with i ~ j when
/// n − nᵢ − nⱼ ∈ S.
inline std::size_t factorization_graph_component_count(const NumericalSemigroup& s, Int n) {
  if (n == 0) return 1;
  if (!s.contains(n)) return 0;
  const auto gens = s.generators();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (s.contains(n - gens[i])) support.push_back(i);
  detail::DisjointSets ds(support.size());
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (s.contains(n - gens[support[a]] - gens[support[b]])) ds.unite(a, b);
  std::size_t count = 0;
  for (std::size_t a = 0; a < support.size(); ++a) count += ds.find(a) == a;
  return count;
}

/// Search bound for Betti elements. If n > F(S) + 2n_k then n − nᵢ − nⱼ > F(S) for all
/// i, j, so every pair of generators in the support graph is adjacent and ∇_n is connected.
inline Int betti_search_bound(const NumericalSemigroup& s) { return s.frobenius() + 2 * s.largest_generator(); }

/// Betti elements, ascending.
inline std::vector<Int> betti_values(const NumericalSemigroup& s) {
  s.require_nontrivial("betti_values");
  std::vector<Int> out;
  const Int bound = betti_search_bound(s);
  for (Int b = s.multiplicity(); b <= bound; ++b)
    if (factorization_graph_component_count(s, b) >= 2) out.push_back(b);
  return out;
}

struct BettiData {
  Int element = 0;
  std::vector<std::vector<Factorization>> components;
  LengthSet lengths;
  DeltaSet delta;
};

inline std::vector<BettiData> betti_elements(const NumericalSemigroup& s, const Limits& limits = {}) {
  const auto values = betti_values(s);
  std::vector<BettiData> out;
  if (values.empty()) return out;
  const LengthTable table(s, values.back(), limits);
  for (Int b : values) {
    BettiData bd;
    bd.element = b;
    bd.components = factorization_graph_components(s, b, limits);
    bd.lengths = table.at(b);
    bd.delta = bd.lengths.delta();
    out.push_back(std::move(bd));
  }
  return out;
}

/// A relation z ~ z' between two factorizations of the same element.
struct Relation {
  Int element = 0;
  Factorization lhs;
  Factorization rhs;
};

/// One relation per extra component of each Betti element: every component is joined to
/// the first one (components ordered by their lexicographically smallest member), using
/// those smallest members as representatives.
inline std::vector<Relation> minimal_presentation(const NumericalSemigroup& s, const Limits& limits = {}) {
  std::vector<Relation> out;
  for (Int b : betti_values(s)) {
    const auto comps = factorization_graph_components(s, b, limits);
    for (std::size_t c = 1; c < comps.size(); ++c) out.push_back(Relation{b, comps[0].front(), comps[c].front()});
  }
  return out;
}

}  // namespace nsg
