#include "padic/cli.hpp"

#include "padic/io.hpp"
#include "padic/oracle.hpp"
#include "padic/spectrum.hpp"
#include "padic/tree.hpp"
#include "padic/zeta.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace padic::cli {

namespace {

constexpr unsigned kMinDigits = 6;
constexpr unsigned kMaxDigits = 200;

unsigned parse_unsigned_env(const char* name, const char* text) {
  char* end = nullptr;
  const unsigned long value = std::strtoul(text, &end, 10);
  if (end == text || *end != '\0' || value == 0 || value > 1000000)
    throw ConfigError(std::string(name) + ": expected a positive integer, got '" + text + "'");
  return static_cast<unsigned>(value);
}

ComplexS parse_s(const std::string& text) {
  const auto comma = text.find(',');
  ComplexS s;
  s.re = to_real<Real>(parse_rational(text.substr(0, comma)));
  if (comma != std::string::npos) s.im = to_real<Real>(parse_rational(text.substr(comma + 1)));
  return s;
}

Rational parse_positive(const std::string& text, const char* what) {
  Rational x;
  try {
    x = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(what) + ": " + e.what());
  }
  if (x <= 0) throw ConfigError(std::string(what) + " must be positive");
  return x;
}

SpectrumOptions options_for(const Config& c) {
  SpectrumOptions o;
  o.budget.max_terms = c.term_budget;
  return o;
}

void print_json(std::ostream& out, const io::Json& j) { out << j.dump(2) << '\n'; }

int eigenvalues(const Config& c, std::ostream& out) {
  const auto records = refine_eigenvalues(Prime(c.p), c.count, c.digits, options_for(c));
  switch (c.format) {
    case Format::Json: {
      io::Json j;
      j["p"] = std::to_string(c.p);
      j["digits"] = c.digits;
      io::Json list = io::Json::array();
      for (const auto& r : records) list.push_back(io::to_json(r, c.digits));
      j["eigenvalues"] = list;
      print_json(out, j);
      break;
    }
    case Format::Csv: io::write_csv(out, records, c.digits); break;
    default:
      for (const auto& r : records)
        out << "lambda_" << r.index << " = " << to_decimal(r.midpoint(), c.digits) << "  in ["
            << to_decimal(r.lo, c.digits + 2, Rounding::Down) << ", " << to_decimal(r.hi, c.digits + 2, Rounding::Up)
            << "]\n";
  }
  return kExitOk;
}

int eigenvector(const Config& c, std::ostream& out) {
  const Prime p(c.p);
  const EigenvalueRecord rec = refine_eigenvalue(p, c.index, std::max(c.digits, 20u), options_for(c));
  const EigenvectorExpansion exp = eigenvector_coefficients(rec.midpoint(), p, c.terms);
  const EigenResidual res = eigen_residual(exp, c.samples);
  switch (c.format) {
    case Format::Json: {
      io::Json j = io::eigenvector_json(exp, res, c.digits);
      j["index"] = c.index;
      print_json(out, j);
      break;
    }
    case Format::Csv: io::write_csv(out, exp, res, c.digits); break;
    default:
      out << "lambda_" << c.index << " = " << to_decimal(exp.lambda, c.digits) << '\n';
      for (std::size_t k = 0; k < exp.coefficients.size(); ++k)
        out << "c(" << 2 * (k + 1) << ") = " << to_decimal(exp.coefficients[k], c.digits) << '\n';
      out << "relative residual = " << io::real_string(res.relative_residual, 4) << '\n';
      out << "initial condition = " << io::real_string(res.initial_condition, 4) << '\n';
  }
  return kExitOk;
}

int spectrum(const Config& c, std::ostream& out) {
  const Rational cutoff = parse_positive(c.cutoff, "--cutoff");
  const auto entries = dstar_d_spectrum(Prime(c.p), cutoff, c.digits, options_for(c));
  switch (c.format) {
    case Format::Json: {
      io::Json j;
      j["p"] = std::to_string(c.p);
      j["cutoff"] = c.cutoff;
      io::Json list = io::Json::array();
      for (const auto& e : entries) list.push_back(io::to_json(e, c.digits));
      j["entries"] = list;
      print_json(out, j);
      break;
    }
    case Format::Csv: io::write_csv(out, entries, c.digits); break;
    default:
      for (const auto& e : entries)
        out << "p^" << 2 * e.m << " lambda_" << e.n << " = " << to_decimal(e.value.center, c.digits)
            << "  multiplicity " << e.multiplicity << '\n';
  }
  return kExitOk;
}

int zeta(const Config& c, std::ostream& out) {
  const Prime p(c.p);
  const ComplexS s = parse_s(c.s);
  const Rational eps = parse_positive(c.eps, "--eps");
  const bool paper = c.mode == "paper";
  const PrefactorMode prefactor_mode = paper ? PrefactorMode::Paper : PrefactorMode::Totient;
  const ReferenceMode reference_mode = paper ? ReferenceMode::Paper : ReferenceMode::Asymptotic;

  // Bracket widths must sit well below eps.
  const long eps_digits = -decimal_exponent(eps);
  const unsigned digits = static_cast<unsigned>(std::max<long>(c.digits, eps_digits + 8));
  EigenvalueCache cache(p, digits, options_for(c));

  std::optional<ZetaResult> d0, d, continued;
  if (s.re > 0) d0 = zeta_D0(s, eps, cache);
  if (s.re > Real(1) / 2) d = zeta_D(s, eps, prefactor_mode, cache);
  if (s.re <= 0 || paper) continued = zeta_D0_continued(s, reference_mode, eps, cache);
  const auto poles = pole_list(p, reference_mode);

  switch (c.format) {
    case Format::Json: {
      io::Json j;
      j["p"] = std::to_string(c.p);
      j["mode"] = c.mode;
      j["zeta_D0"] = d0 ? io::to_json(*d0, c.digits) : io::Json();
      j["zeta_D"] = d ? io::to_json(*d, c.digits) : io::Json();
      j["zeta_D0_continued"] = continued ? io::to_json(*continued, c.digits) : io::Json();
      io::Json list = io::Json::array();
      for (const Pole& pole : poles) list.push_back(io::to_json(pole, c.digits));
      j["poles"] = list;
      print_json(out, j);
      break;
    }
    case Format::Csv: {
      out << "quantity,";
      bool header = true;
      auto row = [&](const char* name, const std::optional<ZetaResult>& z) {
        if (!z) return;
        std::ostringstream line;
        io::write_csv(line, *z, c.digits);
        const std::string text = line.str();
        const auto split = text.find('\n');
        if (header) {
          out << text.substr(0, split + 1);
          header = false;
        }
        out << name << ',' << text.substr(split + 1);
      };
      row("zeta_D0", d0);
      row("zeta_D", d);
      row("zeta_D0_continued", continued);
      if (header) out << '\n';
      break;
    }
    default: {
      auto line = [&](const char* name, const std::optional<ZetaResult>& z) {
        if (!z) return;
        out << name << "(s) = " << io::real_string(z->value.real(), c.digits) << " + "
            << io::real_string(z->value.imag(), c.digits) << " i  +/- " << io::real_string(z->error, 3)
            << (z->tail_rigorous ? "" : "  (heuristic tail)")
            << (z->reference_mismatch ? "  (reference sequence mismatch)" : "") << '\n';
      };
      line("zeta_D0", d0);
      line("zeta_D", d);
      line("zeta_D0_continued", continued);
    }
  }
  return kExitOk;
}

int tree(const Config& c, std::ostream& out) {
  const Prime p(c.p);
  if (vertex_count(p, c.depth) > kDefaultDimensionLimit)
    throw ConfigError("--depth: tree has more than " + std::to_string(kDefaultDimensionLimit) + " vertices");
  if (c.format == Format::Dot) {
    out << tree_to_dot(p, c.depth);
    return kExitOk;
  }
  if (c.format == Format::Json) {
    io::Json j;
    j["p"] = std::to_string(c.p);
    j["depth"] = c.depth;
    io::Json vertices = io::Json::array();
    io::Json edges = io::Json::array();
    for (unsigned n = 0; n <= c.depth; ++n)
      for (std::uint64_t k = 0; k < level_size(p, n); ++k) {
        const Vertex v{n, k};
        const PruferPoint g = to_prufer(p, v);
        vertices.push_back({{"level", n},
                            {"index", std::to_string(k)},
                            {"weight", to_decimal(weight(p, v), 20)},
                            {"prufer", {{"r", std::to_string(g.r)}, {"m", g.m}, {"l", g.l}}}});
        if (n > 0) {
          const Vertex up = parent(p, v);
          edges.push_back({std::to_string(up.level) + ":" + std::to_string(up.index),
                           std::to_string(n) + ":" + std::to_string(k)});
        }
      }
    j["vertices"] = vertices;
    j["edges"] = edges;
    print_json(out, j);
    return kExitOk;
  }
  const char sep = c.format == Format::Csv ? ',' : ' ';
  out << "level" << sep << "index" << sep << "weight" << sep << "r" << sep << "m" << sep << "l" << '\n';
  for (unsigned n = 0; n <= c.depth; ++n)
    for (std::uint64_t k = 0; k < level_size(p, n); ++k) {
      const PruferPoint g = to_prufer(p, {n, k});
      out << n << sep << k << sep << to_decimal(weight(p, {n, k}), 20) << sep << g.r << sep << g.m << sep << g.l
          << '\n';
    }
  return kExitOk;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

int verify(const Config& c, std::ostream& out) {
  const Prime p(c.p);
  const unsigned count = std::min(c.count, c.N - 10);
  std::vector<Check> checks;

  const TruncMatrix<Rational> matrix = truncated_matrix(OperatorId::D0StarD0, p, c.N);
  if (!c.dump_matrix.empty()) {
    std::ofstream file(c.dump_matrix);
    if (!file) throw ConfigError("--dump-matrix: cannot open " + c.dump_matrix);
    write_matrix_market(file, matrix);
  }

  const OracleReport d0 = truncated_d0_spectrum(p, c.N, count, 16, options_for(c));
  {
    const bool pass = d0.max_relative_deviation <= Real("1e-10");
    checks.push_back({"certified eigenvalues vs Sturm oracle (N=" + std::to_string(c.N) + ")", pass,
                      "max relative deviation " + io::real_string(d0.max_relative_deviation, 3)});
  }
  {
    bool pass = true;
    Rational previous_hi(0);
    for (unsigned n = 1; n <= count; ++n) {
      const auto [lo, hi] = transported_bracket(p, n);
      const Rational mid = d0.comparisons[n - 1].certified;
      const int expected_lo = n % 2 == 1 ? 1 : -1;
      pass = pass && lo <= mid && mid <= hi && lo >= previous_hi &&
             char_function_sign(lo, p.q()).sign == expected_lo && char_function_sign(hi, p.q()).sign == -expected_lo;
      previous_hi = hi;
    }
    checks.push_back({"transported brackets hold and are disjoint", pass, "n <= " + std::to_string(count)});
  }
  {
    EigenvalueCache cache(p, 20, options_for(c));
    const ZetaResult z = zeta_D0({Real(1), Real(0)}, Rational(1, 1000000000000LL), cache);
    const Real trace = to_real<Real>(tridiag_inverse_trace(matrix));
    const Real dev = abs(z.value.real() - trace);
    checks.push_back({"zeta_D0(1) vs oracle trace of the inverse", dev <= Real("1e-8"),
                      "difference " + io::real_string(dev, 3)});
  }
  if (vertex_count(p, c.depth) <= kDefaultDimensionLimit && c.depth >= 3) {
    const OracleReport tree = truncated_tree_spectrum(p, c.depth, 1e-4);
    const unsigned m_max = std::min(3u, c.depth - 2);
    const auto rows = multiplicity_check(p, tree, m_max, 1, 1e-4);
    const bool pass = std::all_of(rows.begin(), rows.end(), [](const MultiplicityRow& r) { return r.pass; });
    std::string detail = "counts";
    for (const auto& r : rows) detail += " " + std::to_string(r.cluster_count);
    checks.push_back({"tree D*D cluster multiplicities (depth " + std::to_string(c.depth) + ")", pass, detail});
    checks.push_back({"Jacobi trace invariance", tree.trace_discrepancy <= Real("1e-40"),
                      "relative discrepancy " + io::real_string(tree.trace_discrepancy, 3)});
  }

  const bool all = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass; });
  if (c.format == Format::Json) {
    io::Json j;
    j["p"] = std::to_string(c.p);
    io::Json list = io::Json::array();
    for (const Check& k : checks) list.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
    j["checks"] = list;
    j["oracle"] = io::to_json(d0, c.digits);
    j["pass"] = all;
    print_json(out, j);
  } else if (c.format == Format::Csv) {
    out << "check,pass,detail\n";
    for (const Check& k : checks) out << '"' << k.name << "\"," << (k.pass ? "true" : "false") << ",\"" << k.detail << "\"\n";
  } else {
    for (const Check& k : checks) out << (k.pass ? "PASS " : "FAIL ") << k.name << ": " << k.detail << '\n';
  }
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

Command command_from_string(const std::string& name) {
  if (name == "eigenvalues") return Command::Eigenvalues;
  if (name == "eigenvector") return Command::Eigenvector;
  if (name == "spectrum") return Command::Spectrum;
  if (name == "zeta") return Command::Zeta;
  if (name == "tree") return Command::Tree;
  if (name == "verify") return Command::Verify;
  throw ConfigError("unknown command '" + name + "'");
}

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  if (name == "dot") return Format::Dot;
  throw ConfigError("unknown format '" + name + "'");
}

void apply_environment(Config& config) {
  if (const char* budget = std::getenv("PADIC_TERM_BUDGET"))
    config.term_budget = parse_unsigned_env("PADIC_TERM_BUDGET", budget);
  if (const char* digits = std::getenv("PADIC_DIGITS")) config.digits = parse_unsigned_env("PADIC_DIGITS", digits);
}

void validate(const Config& c) {
  try {
    Prime{c.p};
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--p: ") + e.what());
  }
  if (c.digits < kMinDigits || c.digits > kMaxDigits)
    throw ConfigError("--digits must lie in [" + std::to_string(kMinDigits) + ", " + std::to_string(kMaxDigits) + "]");
  if (c.term_budget < 8) throw ConfigError("term budget must be at least 8");
  if (c.format == Format::Dot && c.command != Command::Tree) throw ConfigError("--format dot is only valid for tree");
  if (c.mode != "paper" && c.mode != "verified") throw ConfigError("--mode must be paper or verified");
  switch (c.command) {
    case Command::Eigenvalues:
      if (c.count < 1 || c.count > 64) throw ConfigError("--count must lie in [1, 64]");
      break;
    case Command::Eigenvector:
      if (c.index < 1 || c.index > 32) throw ConfigError("--index must lie in [1, 32]");
      if (c.terms < 2 || c.terms > 200) throw ConfigError("--terms must lie in [2, 200]");
      if (c.samples < 2 || c.samples > 2000) throw ConfigError("--samples must lie in [2, 2000]");
      break;
    case Command::Spectrum: {
      const Rational cutoff = parse_positive(c.cutoff, "--cutoff");
      if (cutoff > pow(Rational(10), 12)) throw ConfigError("--cutoff must not exceed 1e12");
      break;
    }
    case Command::Zeta: {
      ComplexS s;
      try {
        s = parse_s(c.s);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("--s: ") + e.what());
      }
      if (!(s.re > -2)) throw ConfigError("--s: Re s must exceed -2");
      const Rational eps = parse_positive(c.eps, "--eps");
      if (eps < pow(Rational(10), -60)) throw ConfigError("--eps must be at least 1e-60");
      break;
    }
    case Command::Tree:
      if (vertex_count(Prime(c.p), c.depth) > kDefaultDimensionLimit)
        throw ConfigError("--depth: tree exceeds " + std::to_string(kDefaultDimensionLimit) + " vertices");
      break;
    case Command::Verify:
      if (c.N < 11 || c.N > 400) throw ConfigError("--N must lie in [11, 400]");
      if (c.count < 1) throw ConfigError("--count must be positive");
      if (vertex_count(Prime(c.p), c.depth) > kDefaultDimensionLimit)
        throw ConfigError("--depth: tree exceeds " + std::to_string(kDefaultDimensionLimit) + " vertices");
      break;
  }
}

int run(const Config& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  try {
    switch (config.command) {
      case Command::Eigenvalues: return eigenvalues(config, out);
      case Command::Eigenvector: return eigenvector(config, out);
      case Command::Spectrum: return spectrum(config, out);
      case Command::Zeta: return zeta(config, out);
      case Command::Tree: return tree(config, out);
      case Command::Verify: return verify(config, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace padic::cli
