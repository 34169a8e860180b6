#pragma once

// Command-line front end. Lives in a header so the test suites can drive it in-process.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsg/nsg.hpp"

namespace nsg::cli {

using json = nlohmann::json;

enum class Format { json, csv };

struct GlobalOptions {
  std::string format;  // empty: per-command default
  std::optional<Int> ns_bound;
  std::string floor = "conservative";
  int jobs = 0;
  int precision = 12;
  std::string out_path;
  bool timing = false;
};

inline double rounded(const Rational& r, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, r.to_double());
  return std::strtod(buf, nullptr);
}

inline std::string float_text(const Rational& r, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, r.to_double());
  return buf;
}

inline json rational_json(const Rational& r, int precision) {
  return json{{"num", r.num()}, {"den", r.den()}, {"value", rounded(r, precision)}};
}

inline json ints(std::span<const Int> v) { return json(std::vector<Int>(v.begin(), v.end())); }

inline std::string joined(std::span<const Int> v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline json certificate_json(const PeriodicityCertificate& c) {
  return json{{"start", c.start},
              {"period", c.period},
              {"growth", c.growth},
              {"min_delta", c.min_delta},
              {"checked_spans", c.checked_spans}};
}

inline json classification_json(const Classification& c, int precision) {
  json j{{"verdict", std::string(to_string(c.verdict))},
         {"max_delta", c.max_delta},
         {"method", std::string(to_string(c.method))}};
  j["ld"] = c.ld ? rational_json(*c.ld, precision) : json(nullptr);
  j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
  return j;
}

inline json lengths_json(const LengthSet& l) {
  return json{{"element", l.element}, {"lengths", l.lengths}, {"delta", l.delta().gaps}};
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv) {
    CLI::App app{"Factorization invariants and length density of numerical semigroups", "semigroup-ld"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g_.format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--ns-bound", g_.ns_bound, "Use this periodicity start instead of certifying one");
    app.add_option("--floor", g_.floor, "Window floor for certification")
        ->check(CLI::IsMember({"conservative", "frobenius"}));
    app.add_option("--jobs", g_.jobs, "Worker threads for scans (default: SEMIGROUP_LD_JOBS or all cores)");
    app.add_option("--precision", g_.precision, "Significant digits of float columns")->check(CLI::Range(1, 17));
    app.add_option("--out", g_.out_path, "Write output to this file instead of stdout");
    app.add_flag("--timing", g_.timing, "Report elapsed time on stderr");

    std::vector<Int> gens;
    std::optional<Int> element;
    Int max_bound = 0;
    std::string method = "window";
    bool verify = false;

    auto with_gens = [&](CLI::App* sub) { sub->add_option("generators", gens, "Generators")->required(); };
    auto with_element = [&](CLI::App* sub, bool required) {
      auto* o = sub->add_option("-n,--element", element, "Element of the semigroup");
      if (required) o->required();
    };

    auto* invariants = app.add_subcommand("invariants", "Frobenius number, Apéry set, Betti elements, constants");
    with_gens(invariants);
    auto* lengths = app.add_subcommand("length-set", "Length set L(n)");
    with_gens(lengths);
    with_element(lengths, true);
    auto* facts = app.add_subcommand("factorizations", "All factorizations of n");
    with_gens(facts);
    with_element(facts, true);
    auto* betti = app.add_subcommand("betti", "Betti elements with factorization graph components");
    with_gens(betti);
    auto* delta = app.add_subcommand("delta", "Delta set of an element, or of the semigroup");
    with_gens(delta);
    with_element(delta, false);
    auto* ld = app.add_subcommand("ld", "Length density of an element, or of the semigroup");
    with_gens(ld);
    with_element(ld, false);
    auto* classify = app.add_subcommand("classify", "LD(S) and the tasty/bland verdict");
    with_gens(classify);
    classify->add_option("--method", method, "window (exact LD) or betti (verdict only)")
        ->check(CLI::IsMember({"window", "betti"}));
    auto* plot = app.add_subcommand("plot-ld", "Points (n, LD(n)) for n up to --max");
    with_gens(plot);
    plot->add_option("--max", max_bound, "Largest element")->required();
    auto* presentation = app.add_subcommand("presentation", "Minimal presentation");
    with_gens(presentation);

    auto* family = app.add_subcommand("family", "Families of semigroups");
    family->require_subcommand(1);
    std::vector<Int> params;
    auto* supersym = family->add_subcommand("supersym", "Supersymmetric semigroup from t1 > ... > tk");
    supersym->add_option("t", params, "Pairwise coprime parameters")->required();
    supersym->add_flag("--verify", verify, "Also compute LD(S) generically");
    auto* threegen = family->add_subcommand("threegen", "Betti-count classifier for three generators");
    with_gens(threegen);
    auto* med4 = family->add_subcommand("med4", "Multiplicity-4 MED classifier, or a grid with --n2/--max");
    med4->add_option("params", params, "n1 n2 n3")->expected(0, 3);
    Int grid_n2 = 0;
    med4->add_option("--n2", grid_n2, "Fixed n2 for a grid");
    med4->add_option("--max", max_bound, "Grid bound for n1 and n3");
    med4->add_flag("--verify", verify, "Recompute rule verdicts exactly");
    auto* med_prime = family->add_subcommand("med-prime", "MED semigroup of prime multiplicity");
    with_gens(med_prime);
    med_prime->add_flag("--verify", verify, "Also classify generically");
    auto* med_composite = family->add_subcommand("med-composite", "Bland and tasty MED pair of multiplicity p*q");
    med_composite->add_option("pq", params, "p q")->expected(2)->required();
    med_composite->add_flag("--verify", verify, "Classify both generically");

    auto* glue = app.add_subcommand("glue", "Gluings mu*S1 + lambda*S2");
    glue->require_subcommand(1);
    std::vector<Int> s1g, s2g, sg;
    Int lambda = 0, mu = 0, lambda_max = 0, mu_max = 0;
    auto* gclassify = glue->add_subcommand("classify", "Classify one gluing");
    gclassify->add_option("--s1", s1g, "Generators of S1")->delimiter(',')->required();
    gclassify->add_option("--s2", s2g, "Generators of S2")->delimiter(',')->required();
    gclassify->add_option("--lambda", lambda, "Element of S1")->required();
    gclassify->add_option("--mu", mu, "Element of S2")->required();
    bool exact = false;
    gclassify->add_flag("--exact", exact, "Compute LD(S) from the certified window");
    auto* gscan = glue->add_subcommand("scan", "Classify all gluings in a box");
    gscan->add_option("--s1", s1g, "Generators of S1")->delimiter(',')->required();
    gscan->add_option("--s2", s2g, "Generators of S2")->delimiter(',')->required();
    gscan->add_option("--max", max_bound, "Bound for both lambda and mu");
    gscan->add_option("--lambda-max", lambda_max, "Bound for lambda");
    gscan->add_option("--mu-max", mu_max, "Bound for mu");
    auto* gprop = glue->add_subcommand("proportion", "Tasty proportion of self-gluings with lambda > mu, both < --max");
    gprop->add_option("--s", sg, "Two generators")->delimiter(',')->required();
    gprop->add_option("--max", max_bound, "Exclusive bound N")->required();
    auto* gregions = glue->add_subcommand("regions", "Ruled regions for self-gluings; points with --max");
    gregions->add_option("--s", sg, "Two generators")->delimiter(',')->required();
    gregions->add_option("--max", max_bound, "Emit every valid pair below this bound");

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      out_ << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp& e) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err_ << e.what() << "\n" << app.help();
      return 64;
    }

    std::ostringstream buffer;
    const auto started = std::chrono::steady_clock::now();
    try {
      const CertifyOptions cert = certify_options();
      auto S = [&] { return NumericalSemigroup::from_generators(gens); };

      if (*invariants) {
        cmd_invariants(buffer, S());
      } else if (*lengths) {
        cmd_length_set(buffer, S(), *element);
      } else if (*facts) {
        cmd_factorizations(buffer, S(), *element);
      } else if (*betti) {
        cmd_betti(buffer, S());
      } else if (*delta) {
        cmd_delta(buffer, S(), element, cert);
      } else if (*ld) {
        cmd_ld(buffer, S(), element, cert);
      } else if (*classify) {
        cmd_classify(buffer, S(), method, cert);
      } else if (*plot) {
        cmd_plot(buffer, S(), max_bound);
      } else if (*presentation) {
        cmd_presentation(buffer, S());
      } else if (*family) {
        if (*supersym)
          cmd_supersym(buffer, params, verify, cert);
        else if (*threegen)
          cmd_threegen(buffer, S(), cert);
        else if (*med4)
          cmd_med4(buffer, params, grid_n2, max_bound, verify, cert);
        else if (*med_prime)
          cmd_med_prime(buffer, S(), verify, cert);
        else if (*med_composite)
          cmd_med_composite(buffer, params[0], params[1], verify, cert);
      } else if (*glue) {
        if (*gclassify) {
          cmd_glue_classify(buffer, s1g, s2g, lambda, mu, exact, cert);
        } else if (*gscan) {
          if (lambda_max == 0) lambda_max = max_bound;
          if (mu_max == 0) mu_max = max_bound;
          if (lambda_max <= 0 || mu_max <= 0) throw CLI::ValidationError("--max or --lambda-max/--mu-max required");
          cmd_glue_scan(buffer, s1g, s2g, lambda_max, mu_max);
        } else if (*gprop) {
          cmd_glue_proportion(buffer, sg, max_bound);
        } else if (*gregions) {
          cmd_glue_regions(buffer, sg, max_bound);
        }
      }
    } catch (const CLI::ValidationError& e) {
      err_ << e.what() << "\n" << app.help();
      return 64;
    } catch (const Error& e) {
      err_ << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
      return 2;
    } catch (const std::exception& e) {
      err_ << "internal error: " << e.what() << "\n";
      return 1;
    }

    if (g_.timing) {
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - started;
      err_ << "timing_ms " << ms.count() << "\n";
    }
    if (!g_.out_path.empty()) {
      std::ofstream f(g_.out_path, std::ios::binary);
      if (!f) {
        err_ << "cannot open " << g_.out_path << "\n";
        return 1;
      }
      f << buffer.str();
    } else {
      out_ << buffer.str();
    }
    return 0;
  }

 private:
  Format format_or(Format fallback) const {
    if (g_.format.empty()) return fallback;
    return g_.format == "csv" ? Format::csv : Format::json;
  }

  CertifyOptions certify_options() const {
    CertifyOptions o;
    o.floor = g_.floor == "frobenius" ? WindowFloor::frobenius : WindowFloor::conservative;
    o.start_override = g_.ns_bound;
    return o;
  }

  unsigned jobs() const { return resolve_jobs(g_.jobs); }

  static void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

  // Flat key/value CSV for record-shaped results.
  static void emit_kv(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << "," << v << "\n";
  }

  void cmd_invariants(std::ostream& os, const NumericalSemigroup& s) {
    const auto b = s.is_trivial() ? std::vector<Int>{} : betti_values(s);
    json j{{"generators", ints(s.generators())},
           {"embedding_dimension", s.embedding_dimension()},
           {"multiplicity", s.multiplicity()},
           {"frobenius", s.frobenius()},
           {"apery", s.apery().entries},
           {"betti", b}};
    if (!s.is_trivial()) {
      const auto pc = s.period_constants();
      j["min_delta"] = s.min_delta();
      j["period"] = pc.period;
      j["growth"] = pc.growth;
    }
    if (format_or(Format::json) == Format::json) return emit_json(os, j);
    std::vector<std::pair<std::string, std::string>> rows{
        {"generators", joined(s.generators())},
        {"embedding_dimension", std::to_string(s.embedding_dimension())},
        {"multiplicity", std::to_string(s.multiplicity())},
        {"frobenius", std::to_string(s.frobenius())},
        {"apery", joined(s.apery().entries)},
        {"betti", joined(b)}};
    if (!s.is_trivial()) {
      rows.emplace_back("min_delta", j["min_delta"].dump());
      rows.emplace_back("period", j["period"].dump());
      rows.emplace_back("growth", j["growth"].dump());
    }
    emit_kv(os, rows);
  }

  void cmd_length_set(std::ostream& os, const NumericalSemigroup& s, Int n) {
    const auto l = length_set(s, n);
    if (format_or(Format::json) == Format::csv) {
      os << "element,length\n";
      for (Int x : l.lengths) os << n << "," << x << "\n";
      return;
    }
    json j = lengths_json(l);
    j["generators"] = ints(s.generators());
    j["ld"] = l.size() >= 2 ? rational_json(ld_of_lengths(l), g_.precision) : json(nullptr);
    emit_json(os, j);
  }

  void cmd_factorizations(std::ostream& os, const NumericalSemigroup& s, Int n) {
    const auto fs = factorizations(s, n);
    if (format_or(Format::json) == Format::csv) {
      for (std::size_t i = 0; i < s.embedding_dimension(); ++i) os << "z" << (i + 1) << ",";
      os << "length\n";
      for (const auto& f : fs) os << joined(f.exponents, ',') << "," << f.length() << "\n";
      return;
    }
    json list = json::array();
    for (const auto& f : fs) list.push_back(f.exponents);
    emit_json(os, json{{"generators", ints(s.generators())}, {"element", n}, {"count", fs.size()}, {"factorizations", list}});
  }

  void cmd_betti(std::ostream& os, const NumericalSemigroup& s) {
    const auto bs = betti_elements(s);
    if (format_or(Format::json) == Format::csv) {
      os << "element,components,lengths,delta\n";
      for (const auto& b : bs)
        os << b.element << "," << b.components.size() << "," << joined(b.lengths.lengths) << "," << joined(b.delta.gaps)
           << "\n";
      return;
    }
    json list = json::array();
    for (const auto& b : bs) {
      json comps = json::array();
      for (const auto& c : b.components) {
        json members = json::array();
        for (const auto& f : c) members.push_back(f.exponents);
        comps.push_back(members);
      }
      list.push_back(json{{"element", b.element}, {"components", comps}, {"lengths", b.lengths.lengths}, {"delta", b.delta.gaps}});
    }
    emit_json(os, json{{"generators", ints(s.generators())}, {"betti", list}});
  }

  void cmd_delta(std::ostream& os, const NumericalSemigroup& s, std::optional<Int> n, const CertifyOptions& cert) {
    if (n) {
      const auto d = delta_of(s, *n);
      if (format_or(Format::json) == Format::csv) {
        os << "element,gap\n";
        for (Int g : d.gaps) os << *n << "," << g << "\n";
        return;
      }
      return emit_json(os, json{{"generators", ints(s.generators())}, {"element", *n}, {"delta", d.gaps}});
    }
    const auto w = analyze_window(s, cert);
    if (format_or(Format::json) == Format::csv) {
      os << "gap,attained_at\n";
      for (const auto& dw : w.delta) os << dw.gap << "," << dw.element << "\n";
      return;
    }
    json gaps = json::array(), at = json::array();
    for (const auto& dw : w.delta) {
      gaps.push_back(dw.gap);
      at.push_back(dw.element);
    }
    emit_json(os, json{{"generators", ints(s.generators())},
                       {"delta", gaps},
                       {"attained_at", at},
                       {"certificate", certificate_json(w.certificate)}});
  }

  void cmd_ld(std::ostream& os, const NumericalSemigroup& s, std::optional<Int> n, const CertifyOptions& cert) {
    if (!n) return cmd_classify(os, s, "window", cert);
    const auto l = length_set(s, *n);
    const Rational r = ld_of_lengths(l);
    if (format_or(Format::json) == Format::csv) {
      os << "n,num,den,ld\n" << *n << "," << r.num() << "," << r.den() << "," << float_text(r, g_.precision) << "\n";
      return;
    }
    emit_json(os, json{{"generators", ints(s.generators())}, {"element", *n}, {"ld", rational_json(r, g_.precision)}});
  }

  void cmd_classify(std::ostream& os, const NumericalSemigroup& s, const std::string& method, const CertifyOptions& cert) {
    json j{{"generators", ints(s.generators())}};
    Classification c;
    if (method == "betti") {
      c = classify_by_betti(s);
    } else {
      const auto w = analyze_window(s, cert);
      c = classify_window(w);
      j["certificate"] = certificate_json(w.certificate);
      json gaps = json::array();
      for (const auto& dw : w.delta) gaps.push_back(dw.gap);
      j["delta"] = gaps;
    }
    j.update(classification_json(c, g_.precision));
    if (format_or(Format::json) == Format::json) return emit_json(os, j);
    os << "generators,verdict,num,den,ld,witness,max_delta,method\n";
    os << joined(s.generators()) << "," << to_string(c.verdict) << ",";
    if (c.ld)
      os << c.ld->num() << "," << c.ld->den() << "," << float_text(*c.ld, g_.precision);
    else
      os << ",,";
    os << "," << (c.witness ? std::to_string(*c.witness) : "") << "," << c.max_delta << "," << to_string(c.method) << "\n";
  }

  void cmd_plot(std::ostream& os, const NumericalSemigroup& s, Int bound) {
    const auto pts = ld_profile(s, bound);
    if (format_or(Format::csv) == Format::csv) {
      os << "n,num,den,ld\n";
      for (const auto& [n, r] : pts) os << n << "," << r.num() << "," << r.den() << "," << float_text(r, g_.precision) << "\n";
      return;
    }
    json list = json::array();
    for (const auto& [n, r] : pts) list.push_back(json{{"n", n}, {"ld", rational_json(r, g_.precision)}});
    emit_json(os, json{{"generators", ints(s.generators())}, {"max", bound}, {"points", list}});
  }

  void cmd_presentation(std::ostream& os, const NumericalSemigroup& s) {
    const auto rel = minimal_presentation(s);
    if (format_or(Format::json) == Format::csv) {
      os << "element,lhs,rhs\n";
      for (const auto& r : rel) os << r.element << "," << joined(r.lhs.exponents) << "," << joined(r.rhs.exponents) << "\n";
      return;
    }
    json list = json::array();
    for (const auto& r : rel)
      list.push_back(json{{"element", r.element}, {"lhs", r.lhs.exponents}, {"rhs", r.rhs.exponents}});
    emit_json(os, json{{"generators", ints(s.generators())}, {"count", rel.size()}, {"relations", list}});
  }

  void cmd_supersym(std::ostream& os, const std::vector<Int>& t, bool verify, const CertifyOptions& cert) {
    const auto r = supersymmetric(t);
    json j{{"t", r.t},
           {"generators", ints(r.semigroup.generators())},
           {"betti", r.product},
           {"ld", rational_json(r.ld, g_.precision)},
           {"verdict", std::string(to_string(r.verdict))}};
    if (verify) j["generic"] = classification_json(ld_of_semigroup(r.semigroup, cert), g_.precision);
    if (format_or(Format::json) == Format::json) return emit_json(os, j);
    emit_kv(os, {{"t", joined(r.t)},
                 {"generators", joined(r.semigroup.generators())},
                 {"betti", std::to_string(r.product)},
                 {"ld", r.ld.str()},
                 {"verdict", std::string(to_string(r.verdict))}});
  }

  void cmd_threegen(std::ostream& os, const NumericalSemigroup& s, const CertifyOptions&) {
    const auto r = classify_threegen(s);
    if (format_or(Format::json) == Format::csv) {
      os << "element,lengths,delta,verdict\n";
      for (const auto& b : r.betti)
        os << b.element << "," << joined(b.lengths) << "," << joined(b.delta().gaps) << "," << to_string(r.verdict) << "\n";
      return;
    }
    json list = json::array();
    for (const auto& b : r.betti) list.push_back(lengths_json(b));
    emit_json(os, json{{"generators", ints(s.generators())},
                       {"betti_count", r.betti.size()},
                       {"betti", list},
                       {"verdict", std::string(to_string(r.verdict))}});
  }

  void cmd_med4(std::ostream& os, const std::vector<Int>& params, Int n2, Int bound, bool verify,
                const CertifyOptions& cert) {
    if (params.size() == 3) {
      const Med4Params p{params[0], params[1], params[2]};
      const auto r = classify_med4(p, cert);
      json j{{"n1", p.n1},
             {"n2", p.n2},
             {"n3", p.n3},
             {"generators", ints(r.semigroup.generators())},
             {"verdict", std::string(to_string(r.verdict))},
             {"provenance", std::string(to_string(r.provenance))}};
      if (verify) j["exact_verdict"] = std::string(to_string(ld_of_semigroup(r.semigroup, cert).verdict));
      if (format_or(Format::json) == Format::json) return emit_json(os, j);
      emit_kv(os, {{"generators", joined(r.semigroup.generators())},
                   {"verdict", j["verdict"].get<std::string>()},
                   {"provenance", j["provenance"].get<std::string>()}});
      return;
    }
    if (!params.empty() || n2 <= 0 || bound <= 0)
      throw CLI::ValidationError("med4 needs either n1 n2 n3 or --n2 and --max");
    const auto grid = med4_grid(n2, bound);
    struct Cell {
      Med4Result r;
      std::optional<Verdict> exact;
    };
    std::vector<std::optional<Cell>> cells(grid.size());
    parallel_for(grid.size(), jobs(), [&](std::size_t i) {
      auto r = classify_med4(grid[i], cert);
      std::optional<Verdict> ex;
      if (verify) ex = r.provenance == Med4Provenance::exact ? r.verdict : ld_of_semigroup(r.semigroup, cert).verdict;
      cells[i] = Cell{std::move(r), ex};
    });
    if (format_or(Format::csv) == Format::csv) {
      os << "n1,n2,n3,verdict,provenance" << (verify ? ",exact_verdict" : "") << "\n";
      for (std::size_t i = 0; i < grid.size(); ++i) {
        os << grid[i].n1 << "," << grid[i].n2 << "," << grid[i].n3 << "," << to_string(cells[i]->r.verdict) << ","
           << to_string(cells[i]->r.provenance);
        if (verify) os << "," << to_string(*cells[i]->exact);
        os << "\n";
      }
      return;
    }
    json list = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      json p{{"n1", grid[i].n1},
             {"n3", grid[i].n3},
             {"verdict", std::string(to_string(cells[i]->r.verdict))},
             {"provenance", std::string(to_string(cells[i]->r.provenance))}};
      if (verify) p["exact_verdict"] = std::string(to_string(*cells[i]->exact));
      list.push_back(p);
    }
    emit_json(os, json{{"n2", n2}, {"max", bound}, {"points", list}});
  }

  void cmd_med_prime(std::ostream& os, const NumericalSemigroup& s, bool verify, const CertifyOptions& cert) {
    const Verdict v = med_prime_bland(s);
    json j{{"generators", ints(s.generators())}, {"multiplicity", s.multiplicity()}, {"verdict", std::string(to_string(v))}};
    if (verify) j["generic"] = classification_json(ld_of_semigroup(s, cert), g_.precision);
    if (format_or(Format::json) == Format::json) return emit_json(os, j);
    emit_kv(os, {{"generators", joined(s.generators())}, {"verdict", std::string(to_string(v))}});
  }

  void cmd_med_composite(std::ostream& os, Int p, Int q, bool verify, const CertifyOptions& cert) {
    const auto pair = med_composite_construct(p, q);
    json j{{"p", p},
           {"q", q},
           {"multiplicity", p * q},
           {"bland", ints(pair.bland.generators())},
           {"tasty", ints(pair.tasty.generators())}};
    if (verify) {
      j["bland_generic"] = classification_json(ld_of_semigroup(pair.bland, cert), g_.precision);
      j["tasty_generic"] = classification_json(ld_of_semigroup(pair.tasty, cert), g_.precision);
    }
    if (format_or(Format::json) == Format::json) return emit_json(os, j);
    emit_kv(os, {{"bland", joined(pair.bland.generators())}, {"tasty", joined(pair.tasty.generators())}});
  }

  void cmd_glue_classify(std::ostream& os, const std::vector<Int>& a, const std::vector<Int>& b, Int lambda, Int mu,
                         bool exact, const CertifyOptions& cert) {
    const GluingSpec spec{NumericalSemigroup::from_generators(a), NumericalSemigroup::from_generators(b), lambda, mu};
    const auto glued = glue(spec);
    const Classification c = exact ? classify_gluing_exact(spec, cert) : classify_gluing(spec);
    json j{{"s1", ints(spec.s1.generators())},
           {"s2", ints(spec.s2.generators())},
           {"lambda", lambda},
           {"mu", mu},
           {"generators", ints(glued.generators())},
           {"betti", betti_of_gluing(spec)},
           {"lambda_mu_lengths", lambda_mu_length_set(spec).lengths}};
    j.update(classification_json(c, g_.precision));
    if (format_or(Format::json) == Format::json) return emit_json(os, j);
    os << "lambda,mu,verdict,max_delta\n" << lambda << "," << mu << "," << to_string(c.verdict) << "," << c.max_delta << "\n";
  }

  void cmd_glue_scan(std::ostream& os, const std::vector<Int>& a, const std::vector<Int>& b, Int lambda_max, Int mu_max) {
    const auto s1 = NumericalSemigroup::from_generators(a);
    const auto s2 = NumericalSemigroup::from_generators(b);
    const auto scan = scan_gluings(s1, s2, lambda_max, mu_max, jobs());
    if (format_or(Format::csv) == Format::csv) {
      os << "lambda,mu,verdict,max_delta\n";
      for (const auto& r : scan.rows) os << r.lambda << "," << r.mu << "," << to_string(r.verdict) << "," << r.max_delta << "\n";
      return;
    }
    json rows = json::array(), bland = json::array();
    for (const auto& r : scan.rows) {
      rows.push_back(json{{"lambda", r.lambda}, {"mu", r.mu}, {"verdict", std::string(to_string(r.verdict))}, {"max_delta", r.max_delta}});
      if (r.verdict == Verdict::bland) bland.push_back(json{r.lambda, r.mu});
    }
    emit_json(os, json{{"s1", ints(s1.generators())},
                       {"s2", ints(s2.generators())},
                       {"lambda_max", lambda_max},
                       {"mu_max", mu_max},
                       {"valid", scan.rows.size()},
                       {"skipped", scan.skipped},
                       {"bland", bland},
                       {"rows", rows}});
  }

  void cmd_glue_proportion(std::ostream& os, const std::vector<Int>& g, Int bound) {
    const auto s = NumericalSemigroup::from_generators(g);
    const auto r = tasty_proportion(s, bound, jobs());
    const Rational target(s.generators()[0], s.generators()[1]);
    if (format_or(Format::json) == Format::csv) {
      os << "tasty,total,num,den,ratio,limit\n"
         << r.tasty << "," << r.total << "," << r.ratio.num() << "," << r.ratio.den() << "," << float_text(r.ratio, g_.precision)
         << "," << float_text(target, g_.precision) << "\n";
      return;
    }
    emit_json(os, json{{"generators", ints(s.generators())},
                       {"bound", bound},
                       {"tasty", r.tasty},
                       {"total", r.total},
                       {"skipped", r.scan.skipped},
                       {"ratio", rational_json(r.ratio, g_.precision)},
                       {"limit", rational_json(target, g_.precision)}});
  }

  void cmd_glue_regions(std::ostream& os, const std::vector<Int>& g, Int bound) {
    const auto s = NumericalSemigroup::from_generators(g);
    const auto reg = self_glue_region_bounds(s);
    if (bound <= 0) {
      json j{{"generators", ints(s.generators())},
             {"floor", reg.floor},
             {"tasty_line", json{{"slope", rational_json(reg.slope, g_.precision)}, {"intercept", reg.offset}}},
             {"bland_line", json{{"slope", rational_json(reg.slope, g_.precision)}, {"intercept", -reg.offset}}}};
      if (format_or(Format::json) == Format::json) return emit_json(os, j);
      emit_kv(os, {{"floor", std::to_string(reg.floor)},
                   {"slope", reg.slope.str()},
                   {"tasty_intercept", std::to_string(reg.offset)},
                   {"bland_intercept", std::to_string(-reg.offset)}});
      return;
    }
    const auto scan = scan_gluings(s, s, bound - 1, bound - 1, jobs());
    if (format_or(Format::csv) == Format::csv) {
      os << "lambda,mu,verdict,region\n";
      for (const auto& r : scan.rows)
        os << r.lambda << "," << r.mu << "," << to_string(r.verdict) << "," << to_string(reg.classify(r.lambda, r.mu)) << "\n";
      return;
    }
    json rows = json::array();
    for (const auto& r : scan.rows)
      rows.push_back(json{{"lambda", r.lambda},
                          {"mu", r.mu},
                          {"verdict", std::string(to_string(r.verdict))},
                          {"region", std::string(to_string(reg.classify(r.lambda, r.mu)))}});
    emit_json(os, json{{"generators", ints(s.generators())}, {"floor", reg.floor}, {"points", rows}});
  }

  std::ostream& out_;
  std::ostream& err_;
  GlobalOptions g_;
};

/// Entry point shared by the executable and the tests. Exit codes: 0 success, 1 internal
/// error, 2 domain error, 64 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Runner r(out, err);
  return r.run(argc, argv);
}

}  // namespace nsg::cli
