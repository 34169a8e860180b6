#pragma once

// Brute-force reference implementations. Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Int = std::int64_t;

inline std::vector<bool> members(const std::vector<Int>& gens, Int bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
  in[0] = true;
  for (Int n = 1; n <= bound; ++n)
    for (Int g : gens)
      if (g <= n && in[static_cast<std::size_t>(n - g)]) {
        in[static_cast<std::size_t>(n)] = true;
        break;
      }
  return in;
}

inline Int frobenius(const std::vector<Int>& gens) {
  const Int a = *std::min_element(gens.begin(), gens.end());
  const Int b = *std::max_element(gens.begin(), gens.end());
  const Int bound = a * b + b;
  const auto in = members(gens, bound);
  for (Int n = bound; n >= 0; --n)
    if (!in[static_cast<std::size_t>(n)]) return n;
  return -1;
}

inline void enumerate(const std::vector<Int>& gens, std::size_t i, Int rest, std::vector<Int>& cur,
                      std::vector<std::vector<Int>>& out) {
  if (i + 1 == gens.size()) {
    if (rest % gens[i] == 0) {
      cur[i] = rest / gens[i];
      out.push_back(cur);
      cur[i] = 0;
    }
    return;
  }
  for (Int c = 0; c * gens[i] <= rest; ++c) {
    cur[i] = c;
    enumerate(gens, i + 1, rest - c * gens[i], cur, out);
  }
  cur[i] = 0;
}

inline std::vector<std::vector<Int>> factorizations(const std::vector<Int>& gens, Int n) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(gens.size(), 0);
  enumerate(gens, 0, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Int> lengths(const std::vector<Int>& gens, Int n) {
  std::vector<Int> out;
  for (const auto& f : factorizations(gens, n)) out.push_back(std::accumulate(f.begin(), f.end(), Int{0}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Int> gaps(const std::vector<Int>& lens) {
  std::vector<Int> out;
  for (std::size_t i = 1; i < lens.size(); ++i) out.push_back(lens[i] - lens[i - 1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::size_t graph_components(const std::vector<std::vector<Int>>& fs) {
  std::vector<std::size_t> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a + 1; b < fs.size(); ++b)
      for (std::size_t i = 0; i < fs[a].size(); ++i)
        if (fs[a][i] > 0 && fs[b][i] > 0) {
          parent[find(a)] = find(b);
          break;
        }
  std::size_t roots = 0;
  for (std::size_t a = 0; a < fs.size(); ++a) roots += find(a) == a;
  return roots;
}

// Same count, linear in the number of factorizations: join each factorization to the first
// one seen using each generator.
inline std::size_t graph_components_fast(const std::vector<std::vector<Int>>& fs) {
  if (fs.empty()) return 0;
  std::vector<std::size_t> parent(fs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::ptrdiff_t> first(fs[0].size(), -1);
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t i = 0; i < fs[a].size(); ++i)
      if (fs[a][i] > 0) {
        if (first[i] < 0)
          first[i] = static_cast<std::ptrdiff_t>(a);
        else
          parent[find(a)] = find(static_cast<std::size_t>(first[i]));
      }
  std::size_t roots = 0;
  for (std::size_t a = 0; a < fs.size(); ++a) roots += find(a) == a;
  return roots;
}

inline std::vector<Int> betti(const std::vector<Int>& gens, Int bound) {
  std::vector<Int> out;
  for (Int n = 1; n <= bound; ++n)
    if (graph_components_fast(factorizations(gens, n)) > 1) out.push_back(n);
  return out;
}

struct Fraction {
  Int num, den;
  bool operator==(const Fraction&) const = default;
};

inline Fraction ld(const std::vector<Int>& lens) {
  Int num = static_cast<Int>(lens.size()) - 1, den = lens.back() - lens.front();
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

inline bool less(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }

// Minimum LD(n) over members n ≤ bound with at least two lengths.
inline Fraction min_ld(const std::vector<Int>& gens, Int bound) {
  Fraction best{2, 1};
  for (Int n = 1; n <= bound; ++n) {
    const auto l = lengths(gens, n);
    if (l.size() >= 2 && less(ld(l), best)) best = ld(l);
  }
  return best;
}

// Minimal generating set of a random numerical semigroup with k generators in [lo, hi].
inline std::vector<Int> random_semigroup(std::mt19937_64& rng, int k, Int lo, Int hi) {
  std::uniform_int_distribution<Int> pick(lo, hi);
  for (;;) {
    std::vector<Int> g;
    while (static_cast<int>(g.size()) < k) {
      const Int x = pick(rng);
      if (std::find(g.begin(), g.end(), x) == g.end()) g.push_back(x);
    }
    std::sort(g.begin(), g.end());
    Int d = 0;
    for (Int x : g) d = std::gcd(d, x);
    if (d != 1) continue;
    bool minimal = true;
    for (Int x : g) {
      std::vector<Int> others;
      for (Int y : g)
        if (y != x) others.push_back(y);
      if (members(others, x)[static_cast<std::size_t>(x)]) minimal = false;
    }
    if (minimal) return g;
  }
}

}  // namespace oracle
