#include "padic/io.hpp"


namespace padic::io {

namespace {

std::string lower(const Rational& x, unsigned digits) { return to_decimal(x, digits + 2, Rounding::Down); }
std::string upper(const Rational& x, unsigned digits) { return to_decimal(x, digits + 2, Rounding::Up); }
std::string nearest(const Rational& x, unsigned digits) { return to_decimal(x, digits, Rounding::Nearest); }

std::string operator_name(OperatorId op) { return to_string(op); }

}  // namespace

std::string real_string(const Real& x, unsigned digits) {
  if (isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0) return "0";
  return x.str(static_cast<std::streamsize>(digits > 1 ? digits - 1 : 0), std::ios::scientific);
}

Json to_json(const EigenvalueRecord& r, unsigned digits) {
  Json j;
  j["p"] = std::to_string(r.p);
  j["index"] = r.index;
  j["lo"] = lower(r.lo, digits);
  j["hi"] = upper(r.hi, digits);
  j["digits"] = r.digits;
  j["value"] = nearest(r.midpoint(), digits);
  return j;
}

Json to_json(const SpectrumEntry& e, unsigned digits) {
  Json j;
  j["m"] = e.m;
  j["n"] = e.n;
  j["lo"] = lower(e.value.lower(), digits);
  j["hi"] = upper(e.value.upper(), digits);
  j["value"] = nearest(e.value.center, digits);
  j["multiplicity"] = std::to_string(e.multiplicity);
  return j;
}

Json to_json(const ZetaResult& z, unsigned digits) {
  Json j;
  j["s"] = {{"re", real_string(z.s.re, digits)}, {"im", real_string(z.s.im, digits)}};
  j["value"] = {{"re", real_string(z.value.real(), digits)}, {"im", real_string(z.value.imag(), digits)}};
  j["error"] = real_string(z.error, 6);
  j["terms_used"] = z.terms_used;
  j["tail_rigorous"] = z.tail_rigorous;
  j["reference_mismatch"] = z.reference_mismatch;
  return j;
}

Json to_json(const OracleReport& report, unsigned digits) {
  Json j;
  j["operator"] = operator_name(report.op);
  j["p"] = std::to_string(report.p);
  j["size"] = report.size;
  Json values = Json::array();
  for (const Real& v : report.eigenvalues) values.push_back(real_string(v, digits));
  j["eigenvalues"] = values;
  Json table = Json::array();
  for (const OracleComparison& c : report.comparisons)
    table.push_back({{"index", c.index},
                     {"certified", nearest(c.certified, digits)},
                     {"oracle", real_string(c.oracle, digits)},
                     {"relative_deviation", real_string(c.relative_deviation, 4)}});
  j["comparisons"] = table;
  if (!report.clusters.empty()) {
    Json clusters = Json::array();
    for (const OracleCluster& c : report.clusters)
      clusters.push_back({{"center", real_string(c.center, digits)}, {"count", c.count}});
    j["clusters"] = clusters;
    j["trace_discrepancy"] = real_string(report.trace_discrepancy, 4);
  }
  j["max_relative_deviation"] = real_string(report.max_relative_deviation, 4);
  return j;
}

Json to_json(const Pole& pole, unsigned digits) {
  return {{"re", real_string(pole.re, digits)},
          {"im", real_string(pole.im, digits)},
          {"k", pole.k},
          {"provenance", pole.provenance}};
}

Json eigenvector_json(const EigenvectorExpansion& expansion, const EigenResidual& residual, unsigned digits) {
  Json j;
  j["p"] = std::to_string(expansion.p);
  j["lambda"] = nearest(expansion.lambda, digits);
  Json coefficients = Json::array();
  for (const Rational& c : expansion.coefficients) coefficients.push_back(nearest(c, digits));
  j["coefficients"] = coefficients;
  j["tail_bound"] = upper(expansion.tail_bound, 4);
  j["relative_residual"] = real_string(residual.relative_residual, 4);
  j["initial_condition"] = real_string(residual.initial_condition, 4);
  return j;
}

void write_csv(std::ostream& out, const std::vector<EigenvalueRecord>& records, unsigned digits) {
  out << "p,index,lo,hi,digits,value\n";
  for (const EigenvalueRecord& r : records)
    out << r.p << ',' << r.index << ',' << lower(r.lo, digits) << ',' << upper(r.hi, digits) << ',' << r.digits
        << ',' << nearest(r.midpoint(), digits) << '\n';
}

void write_csv(std::ostream& out, const std::vector<SpectrumEntry>& entries, unsigned digits) {
  out << "m,n,lo,hi,value,multiplicity\n";
  for (const SpectrumEntry& e : entries)
    out << e.m << ',' << e.n << ',' << lower(e.value.lower(), digits) << ',' << upper(e.value.upper(), digits)
        << ',' << nearest(e.value.center, digits) << ',' << e.multiplicity << '\n';
}

void write_csv(std::ostream& out, const ZetaResult& z, unsigned digits) {
  out << "s_re,s_im,value_re,value_im,error,terms_used,tail_rigorous,reference_mismatch\n";
  out << real_string(z.s.re, digits) << ',' << real_string(z.s.im, digits) << ','
      << real_string(z.value.real(), digits) << ',' << real_string(z.value.imag(), digits) << ','
      << real_string(z.error, 6) << ',' << z.terms_used << ',' << (z.tail_rigorous ? "true" : "false") << ','
      << (z.reference_mismatch ? "true" : "false") << '\n';
}

void write_csv(std::ostream& out, const EigenvectorExpansion& expansion, const EigenResidual& residual,
               unsigned digits) {
  out << "field,value\n";
  out << "lambda," << nearest(expansion.lambda, digits) << '\n';
  out << "relative_residual," << real_string(residual.relative_residual, 4) << '\n';
  out << "initial_condition," << real_string(residual.initial_condition, 4) << '\n';
  out << "tail_bound," << upper(expansion.tail_bound, 4) << '\n';
  for (std::size_t i = 0; i < expansion.coefficients.size(); ++i)
    out << "c(" << 2 * (i + 1) << ")," << nearest(expansion.coefficients[i], digits) << '\n';
}

}  // namespace padic::io
