#ifndef PERIPLECTIC_REPORT_HPP
#define PERIPLECTIC_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "periplectic/maxvec.hpp"
#include "periplectic/theorem.hpp"

namespace peri {

enum class Format { Json, Csv, Markdown };
Format parse_format(const std::string& s);

/// GF(p) elements become integers, others their to_string form.
nlohmann::ordered_json fe_json(const Field& f, Fe x);
nlohmann::ordered_json weight_json(const Field& f, const Weight& w);
nlohmann::ordered_json chi_json(const PChar& chi);

nlohmann::ordered_json series_json(const Setting& s, const CompositionReport& r);
nlohmann::ordered_json maxvec_json(const KacModule& k, const std::vector<MaximalVector>& vs);
nlohmann::ordered_json verify_json(const VerifySummary& sum);

std::string series_text(const Setting& s, const CompositionReport& r, Format fmt);
std::string maxvec_text(const KacModule& k, const std::vector<MaximalVector>& vs, Format fmt);
std::string verify_text(const VerifySummary& sum, Format fmt);

/// [K(lambda)] = [L(mu1)] + 2[L(mu2)] ...
std::string bracket_notation(const Field& f, const Weight& lambda, const std::vector<FactorEntry>& factors);

}  // namespace peri

#endif
