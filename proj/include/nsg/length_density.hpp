#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsg/factorizations.hpp"
#include "nsg/length_sweep.hpp"
#include "nsg/rational.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class Verdict { tasty, bland };

constexpr std::string_view to_string(Verdict v) { return v == Verdict::tasty ? "tasty" : "bland"; }

/// How a classification was obtained: a full scan of a certified periodic window, or the
/// Betti-element criterion (max Δ(S) and blandness are both decided at Betti elements).
enum class Method { window, betti };

constexpr std::string_view to_string(Method m) { return m == Method::window ? "window" : "betti"; }

struct Classification {
  Verdict verdict = Verdict::tasty;
  std::optional<Rational> ld;  // LD(S); absent when only the verdict was derived
  std::optional<Int> witness;  // element attaining LD(S)
  Int max_delta = 0;
  Method method = Method::window;
};

/// (|L| − 1)/(max L − min L).
inline Rational ld_from_summary(Int count, Int min_len, Int max_len) {
  if (count < 2) fail(ErrorKind::unique_length, "length density needs at least two lengths");
  return Rational(count - 1, max_len - min_len);
}

inline Rational ld_of_lengths(const LengthSet& l) {
  if (l.size() < 2)
    fail(ErrorKind::unique_length, std::to_string(l.element) + " has a single factorization length");
  return ld_from_summary(static_cast<Int>(l.size()), l.min(), l.max());
}

inline Rational ld_of_element(const NumericalSemigroup& s, Int n, const Limits& limits = {}) {
  return ld_of_lengths(length_set(s, n, limits));
}

/// L(n) split into the top band L₁, the middle band L₂ and the bottom band L₃, using
/// `window_start` in place of the periodicity bound.
struct LengthPartition {
  std::vector<Int> upper;
  std::vector<Int> middle;
  std::vector<Int> lower;
};

inline LengthPartition partition_lengths(const NumericalSemigroup& s, const LengthSet& l, Int window_start) {
  s.require_nontrivial("partition_lengths");
  const auto g = s.generators();
  const Int n = l.element;
  const Int n1 = g.front();
  const Int n2 = g[1];
  const Int nk = g.back();
  const Int nk1 = g[g.size() - 2];
  const Int m = window_start;
  // n/n₁ + M(1/n₂ − 1/n₁) and n/n_k + M(1/n_{k−1} − 1/n_k).
  const Rational upper_cut = Rational(n - m, n1) + Rational(m, n2);
  const Rational lower_cut = Rational(n - m, nk) + Rational(m, nk1);
  LengthPartition p;
  for (Int len : l.lengths) {
    const Rational r(len);
    if (r > upper_cut)
      p.upper.push_back(len);
    else if (r >= lower_cut)
      p.middle.push_back(len);
    else
      p.lower.push_back(len);
  }
  return p;
}

enum class WindowFloor {
  conservative,  // max(n_k², F(S) + 1)
  frobenius,     // F(S) + 1
};

struct CertifyOptions {
  WindowFloor floor = WindowFloor::conservative;
  std::optional<Int> start_override;  // externally supplied periodicity bound
  int max_escalations = 256;
  int checked_spans = 2;
  Limits limits;
};

/// |L(n)|, min L(n), max L(n); count 0 when n ∉ S.
struct WindowEntry {
  Int count = 0;
  Int min = 0;
  Int max = 0;
};

/// Verified window [start, start + checked_spans·period) on which, for every n ∈ S,
/// |L(n+p)| = |L(n)| + growth, max L(n+p) = max L(n) + p/n₁, min L(n+p) = min L(n) + p/n_k
/// and Δ(n+p) = Δ(n). `base` holds the summaries of [start, start + period).
struct PeriodicityCertificate {
  Int start = 0;
  Int period = 0;
  Int growth = 0;
  Int min_delta = 0;
  Int checked_spans = 0;
  std::vector<WindowEntry> base;
};

struct DeltaWitness {
  Int gap = 0;
  Int element = 0;  // smallest element whose delta set contains the gap
};

struct WindowAnalysis {
  PeriodicityCertificate certificate;
  Rational ld;  // min LD(n) over n < start + period
  Int witness = 0;
  Rational ld_extended;  // same minimum over n < start + 3·period
  Int witness_extended = 0;
  std::vector<DeltaWitness> delta;  // Δ(S) over n < start + period
  std::vector<Int> delta_extended;  // Δ(S) over n < start + 3·period
  Int sweep_end = 0;

  Int max_delta() const { return delta.empty() ? 0 : delta.back().gap; }
};

namespace detail {

struct Summary {
  WindowEntry entry;
  std::vector<Int> gaps;
};

inline Summary summarize(const LengthView& v) {
  Summary s;
  if (v.empty()) return s;
  s.entry = WindowEntry{v.count(), v.min(), v.max()};
  s.gaps = v.gaps();
  return s;
}

struct Accumulator {
  std::optional<Rational> best;
  Int witness = 0;
  std::map<Int, Int> gaps;

  void add(Int n, const Summary& s) {
    if (s.entry.count < 2) return;
    const Rational ld = ld_from_summary(s.entry.count, s.entry.min, s.entry.max);
    if (!best || ld < *best) {
      best = ld;
      witness = n;
    }
    for (Int g : s.gaps) gaps.emplace(g, n);
  }
};

inline Int window_floor(const NumericalSemigroup& s, WindowFloor floor) {
  const Int f1 = s.frobenius() + 1;
  if (floor == WindowFloor::frobenius) return f1;
  return std::max(checked_mul(s.largest_generator(), s.largest_generator()), f1);
}

}  // namespace detail

/// Certifies eventual periodicity of length sets, then scans the certified window.
///
/// The window start is the least multiple of lcm(n₁, n_k) at or above the floor for
/// which every shift relation holds over `checked_spans` consecutive periods; on failure
/// the start moves up by one period. A supplied `start_override` is used verbatim and
/// never escalated.
inline WindowAnalysis analyze_window(const NumericalSemigroup& s, const CertifyOptions& opts = {}) {
  s.require_nontrivial("analyze_window");
  const auto [p, growth] = s.period_constants();
  const Int n1 = s.multiplicity();
  const Int nk = s.largest_generator();
  const Int spans = std::max(opts.checked_spans, 2);
  Int start = opts.start_override ? *opts.start_override : ceil_div(detail::window_floor(s, opts.floor), p) * p;
  if (start < 0) fail(ErrorKind::invalid_argument, "negative window start");

  LengthSweep sweep(s, opts.limits);
  detail::Accumulator prefix;         // n < start
  std::deque<detail::Summary> window;  // n ∈ [start, sweep.next())

  auto extend_to = [&](Int end) {
    while (sweep.next() < end) {
      const Int n = sweep.next();
      detail::Summary sm = detail::summarize(sweep.advance());
      if (n < start)
        prefix.add(n, sm);
      else
        window.push_back(std::move(sm));
    }
  };

  auto holds = [&]() {
    for (Int i = 0; i < spans * p; ++i) {
      const auto& a = window[static_cast<std::size_t>(i)];
      const auto& b = window[static_cast<std::size_t>(i + p)];
      if (a.entry.count == 0) continue;
      if (b.entry.count != a.entry.count + growth || b.entry.max != a.entry.max + p / n1 ||
          b.entry.min != a.entry.min + p / nk || b.gaps != a.gaps)
        return false;
    }
    return true;
  };

  for (int escalations = 0;; ++escalations) {
    extend_to(start + (spans + 1) * p);
    if (holds()) break;
    if (opts.start_override)
      fail(ErrorKind::certification_failed, "shift relations fail above supplied start " + std::to_string(start));
    if (escalations >= opts.max_escalations)
      fail(ErrorKind::certification_failed, "no periodic window found below " + std::to_string(start) + " for " +
                                                s.str());
    for (Int i = 0; i < p; ++i) {
      prefix.add(start + i, window.front());
      window.pop_front();
    }
    start += p;
  }

  WindowAnalysis out;
  out.sweep_end = sweep.next();
  auto& cert = out.certificate;
  cert.start = start;
  cert.period = p;
  cert.growth = growth;
  cert.min_delta = s.min_delta();
  cert.checked_spans = spans;
  for (Int i = 0; i < p; ++i) cert.base.push_back(window[static_cast<std::size_t>(i)].entry);

  detail::Accumulator first = prefix;
  for (Int i = 0; i < p; ++i) first.add(start + i, window[static_cast<std::size_t>(i)]);
  detail::Accumulator wide = first;
  for (Int i = p; i < 3 * p; ++i) wide.add(start + i, window[static_cast<std::size_t>(i)]);
  if (!first.best) fail(ErrorKind::certification_failed, "no element with two lengths in window");
  out.ld = *first.best;
  out.witness = first.witness;
  out.ld_extended = *wide.best;
  out.witness_extended = wide.witness;
  for (auto [g, n] : first.gaps) out.delta.push_back(DeltaWitness{g, n});
  for (auto [g, n] : wide.gaps) out.delta_extended.push_back(g);
  return out;
}

inline PeriodicityCertificate certify_periodicity(const NumericalSemigroup& s, const CertifyOptions& opts = {}) {
  return analyze_window(s, opts).certificate;
}

inline Classification classify_window(const WindowAnalysis& w) {
  Classification c;
  c.method = Method::window;
  c.ld = w.ld;
  c.witness = w.witness;
  c.max_delta = w.max_delta();
  c.verdict = w.ld > Rational(1, c.max_delta) ? Verdict::tasty : Verdict::bland;
  return c;
}

/// Exact LD(S) as the minimum of LD(n) over n ∈ S below the certified start plus one period.
inline Classification ld_of_semigroup(const NumericalSemigroup& s, const CertifyOptions& opts = {}) {
  return classify_window(analyze_window(s, opts));
}

struct SemigroupDelta {
  DeltaSet delta;
  std::vector<Int> attained_at;  // parallel to delta.gaps
};

/// Δ(S) as the union of Δ(n) over the certified window.
inline SemigroupDelta delta_of_semigroup(const NumericalSemigroup& s, const CertifyOptions& opts = {}) {
  const auto w = analyze_window(s, opts);
  SemigroupDelta out;
  for (const auto& dw : w.delta) {
    out.delta.gaps.push_back(dw.gap);
    out.attained_at.push_back(dw.element);
  }
  return out;
}

/// LD(n) for n ≥ cert.start without computing L(n): with n = r + j·p and r in the base
/// period, LD(n) = (|L(r)| − 1 + jL)/(max L(r) − min L(r) + j·d·L).
inline Rational ld_large_n(const PeriodicityCertificate& cert, Int n) {
  if (n < cert.start)
    fail(ErrorKind::invalid_argument, std::to_string(n) + " is below the certified start " + std::to_string(cert.start));
  const Int j = (n - cert.start) / cert.period;
  const WindowEntry& e = cert.base[static_cast<std::size_t>((n - cert.start) % cert.period)];
  if (e.count == 0) fail(ErrorKind::not_an_element, std::to_string(n) + " is not an element");
  const Int count = checked_add(e.count, checked_mul(j, cert.growth));
  const Int width = checked_add(e.max - e.min, checked_mul(checked_mul(j, cert.min_delta), cert.growth));
  return ld_from_summary(count, 0, width);
}

/// (n, LD(n)) for every n ∈ S with n ≤ bound and at least two lengths.
inline std::vector<std::pair<Int, Rational>> ld_profile(const NumericalSemigroup& s, Int bound, const Limits& limits = {}) {
  std::vector<std::pair<Int, Rational>> out;
  LengthSweep sweep(s, limits);
  while (sweep.next() <= bound) {
    const Int n = sweep.next();
    const LengthView v = sweep.advance();
    if (v.empty()) continue;
    const Int c = v.count();
    if (c >= 2) out.emplace_back(n, ld_from_summary(c, v.min(), v.max()));
  }
  return out;
}

/// Verdict from the length sets of the Betti elements alone: max Δ(S) is the largest gap
/// at a Betti element, and S is bland iff some Betti element has Δ(b) = {max Δ(S)}, in
/// which case LD(S) = 1/max Δ(S) is attained there.
inline Classification classify_from_betti_lengths(std::span<const LengthSet> betti_lengths) {
  Classification c;
  c.method = Method::betti;
  for (const auto& l : betti_lengths) c.max_delta = std::max(c.max_delta, l.delta().max());
  if (c.max_delta == 0) fail(ErrorKind::unique_length, "no Betti element has two lengths");
  for (const auto& l : betti_lengths) {
    const DeltaSet d = l.delta();
    if (d.gaps.size() == 1 && d.gaps.front() == c.max_delta) {
      c.verdict = Verdict::bland;
      c.ld = Rational(1, c.max_delta);
      c.witness = l.element;
      return c;
    }
  }
  c.verdict = Verdict::tasty;
  return c;
}

inline std::vector<LengthSet> betti_length_sets(const NumericalSemigroup& s, const Limits& limits = {}) {
  const auto values = betti_values(s);
  std::vector<LengthSet> out;
  if (values.empty()) return out;
  const LengthTable table(s, values.back(), limits);
  for (Int b : values) out.push_back(table.at(b));
  return out;
}

inline Classification classify_by_betti(const NumericalSemigroup& s, const Limits& limits = {}) {
  const auto ls = betti_length_sets(s, limits);
  return classify_from_betti_lengths(ls);
}

/// Smallest LD over Betti elements with at least two lengths, with the element attaining it.
inline std::optional<std::pair<Rational, Int>> min_betti_ld(const NumericalSemigroup& s, const Limits& limits = {}) {
  std::optional<std::pair<Rational, Int>> best;
  for (const auto& l : betti_length_sets(s, limits)) {
    if (l.size() < 2) continue;
    const Rational ld = ld_of_lengths(l);
    if (!best || ld < best->first) best = std::pair{ld, l.element};
  }
  return best;
}

}  // namespace nsg
