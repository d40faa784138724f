#ifndef PADIC_IO_HPP
#define PADIC_IO_HPP

// JSON and CSV views of results. Every number is a decimal string so that
// certified digits survive the round trip; lower ends are rounded down and
// upper ends up.

#include "padic/oracle.hpp"
#include "padic/spectrum.hpp"
#include "padic/zeta.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace padic::io {

using Json = nlohmann::ordered_json;

/// Scientific notation with `digits` significant digits; "0" and "inf" verbatim.
std::string real_string(const Real& x, unsigned digits);

Json to_json(const EigenvalueRecord& r, unsigned digits);
Json to_json(const SpectrumEntry& e, unsigned digits);
Json to_json(const ZetaResult& z, unsigned digits);
Json to_json(const OracleReport& report, unsigned digits);
Json to_json(const Pole& pole, unsigned digits);
Json eigenvector_json(const EigenvectorExpansion& expansion, const EigenResidual& residual, unsigned digits);

void write_csv(std::ostream& out, const std::vector<EigenvalueRecord>& records, unsigned digits);
void write_csv(std::ostream& out, const std::vector<SpectrumEntry>& entries, unsigned digits);
void write_csv(std::ostream& out, const ZetaResult& z, unsigned digits);
void write_csv(std::ostream& out, const EigenvectorExpansion& expansion, const EigenResidual& residual,
               unsigned digits);

}  // namespace padic::io

#endif  // PADIC_IO_HPP
