#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nsg/arith.hpp"
#include "nsg/error.hpp"

namespace nsg {

/// Size caps shared by every module. Generators and queried elements are bounded so
/// Apéry tables and length-set sweeps stay in memory.
struct Limits {
  Int max_generator = 1'000'000;
  Int max_element = 1'000'000'000;
  std::size_t max_factorizations = 10'000'000;
  std::size_t max_table_entries = 20'000'000;
  std::size_t max_sweep_words = std::size_t{1} << 27;
};

/// Least element of S in each residue class modulo `modulus`.
struct AperyTable {
  Int modulus = 0;
  std::vector<Int> entries;
};

namespace detail {

// Dijkstra over residues mod m: dist[r] is the least element of S congruent to r.
inline std::vector<Int> apery_entries(std::span<const Int> gens, Int m) {
  constexpr Int unreached = INT64_MAX;
  std::vector<Int> dist(static_cast<std::size_t>(m), unreached);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [d, r] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : gens) {
      const Int nd = d + g;
      const Int nr = (r + g) % m;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        heap.emplace(nd, nr);
      }
    }
  }
  return dist;
}

struct SemigroupCache {
  std::once_flag once;
  AperyTable apery;
};

}  // namespace detail

/// A numerical semigroup given by its minimal generating set n_1 < ... < n_k.
///
/// Instances are immutable. The Apéry table with respect to n_1 is filled lazily on the
/// first membership query under a once-flag, so a constructed semigroup may be shared
/// freely between threads. Copies share the cache.
class NumericalSemigroup {
 public:
  /// Sorts, deduplicates and drops redundant generators.
  static NumericalSemigroup from_generators(std::span<const Int> raw, const Limits& limits = {}) {
    if (raw.empty()) fail(ErrorKind::empty_input, "no generators given");
    std::vector<Int> sorted(raw.begin(), raw.end());
    for (Int g : sorted) {
      if (g < 1) fail(ErrorKind::invalid_argument, "generators must be positive, got " + std::to_string(g));
      if (g > limits.max_generator)
        fail(ErrorKind::cap_exceeded, "generator " + std::to_string(g) + " exceeds cap " +
                                          std::to_string(limits.max_generator));
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Int g = 0;
    for (Int x : sorted) g = std::gcd(g, x);
    if (g != 1) fail(ErrorKind::gcd_not_one, "gcd of generators is " + std::to_string(g));

    // A generator is redundant iff it lies in the semigroup spanned by the smaller kept ones.
    // Residues mod the smallest generator make this an Apéry lookup.
    std::vector<Int> kept{sorted.front()};
    const Int m = sorted.front();
    std::vector<Int> apery = detail::apery_entries(kept, m);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      const Int x = sorted[i];
      if (x >= apery[static_cast<std::size_t>(x % m)]) continue;
      kept.push_back(x);
      apery = detail::apery_entries(kept, m);
    }
    return NumericalSemigroup(std::move(kept));
  }

  static NumericalSemigroup from_generators(std::initializer_list<Int> raw, const Limits& limits = {}) {
    return from_generators(std::span<const Int>(raw.begin(), raw.size()), limits);
  }

  std::span<const Int> generators() const noexcept { return gens_; }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  Int multiplicity() const noexcept { return gens_.front(); }
  Int largest_generator() const noexcept { return gens_.back(); }
  bool is_trivial() const noexcept { return gens_.size() < 2; }

  bool is_generator(Int n) const { return std::binary_search(gens_.begin(), gens_.end(), n); }

  const AperyTable& apery() const {
    std::call_once(cache_->once, [this] {
      cache_->apery.modulus = gens_.front();
      cache_->apery.entries = detail::apery_entries(gens_, gens_.front());
    });
    return cache_->apery;
  }

  /// n ∈ S iff n ≥ Ap(S, n_1)[n mod n_1].
  bool contains(Int n) const {
    if (n < 0) return false;
    const auto& ap = apery();
    return n >= ap.entries[static_cast<std::size_t>(n % ap.modulus)];
  }

  /// Largest integer outside S; −1 for S = ⟨1⟩.
  Int frobenius() const {
    const auto& ap = apery();
    return *std::max_element(ap.entries.begin(), ap.entries.end()) - ap.modulus;
  }

  /// gcd of consecutive generator differences, which equals min Δ(S).
  Int min_delta() const {
    require_nontrivial("min_delta");
    Int d = 0;
    for (std::size_t i = 1; i < gens_.size(); ++i) d = std::gcd(d, gens_[i] - gens_[i - 1]);
    return d;
  }

  /// Period lcm(n_1, n_k) and length-count growth (n_k − n_1)/(d·gcd(n_1, n_k)).
  struct PeriodConstants {
    Int period;
    Int growth;
  };

  PeriodConstants period_constants() const {
    require_nontrivial("period_constants");
    const Int n1 = gens_.front();
    const Int nk = gens_.back();
    const Int d = min_delta();
    const Int denom = d * std::gcd(n1, nk);
    return {checked_lcm(n1, nk), (nk - n1) / denom};
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(gens_[i]);
    }
    return s + ">";
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gens_ == b.gens_; }

  void require_nontrivial(const char* op) const {
    if (is_trivial()) fail(ErrorKind::trivial_semigroup, std::string(op) + " needs at least two generators");
  }

 private:
  explicit NumericalSemigroup(std::vector<Int> gens)
      : gens_(std::move(gens)), cache_(std::make_shared<detail::SemigroupCache>()) {}

  std::vector<Int> gens_;
  std::shared_ptr<detail::SemigroupCache> cache_;
};

}  // namespace nsg
