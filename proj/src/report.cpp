#include "periplectic/report.hpp"

#include <sstream>
#include <stdexcept>

namespace peri {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown" || s == "md") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, markdown)");
}

json fe_json(const Field& f, Fe x) {
  if (f.in_prime_field(x)) return f.to_int(x);
  return f.to_string(x);
}

json weight_json(const Field& f, const Weight& w) {
  json out = json::array();
  for (Fe x : w) out.push_back(fe_json(f, x));
  return out;
}

json chi_json(const PChar& chi) { return {{"kind", chi_kind_name(chi.kind)}, {"params", chi.params}}; }

namespace {

std::string csv_weight(const Field& f, const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ";" : "") + f.to_string(w[i]);
  return s;
}

std::string factors_inline(const Field& f, const std::vector<FactorEntry>& fs) {
  std::string s;
  for (const auto& e : fs) {
    if (!s.empty()) s += ", ";
    s += weight_to_string(f, e.label) + ":" + std::to_string(e.mult);
  }
  return s;
}

json factors_json(const Field& f, const std::vector<FactorEntry>& fs) {
  json out = json::array();
  for (const auto& e : fs) out.push_back({{"label", weight_json(f, e.label)}, {"dim", e.dim}, {"mult", e.mult}});
  return out;
}

}  // namespace

std::string bracket_notation(const Field& f, const Weight& lambda, const std::vector<FactorEntry>& factors) {
  std::string s = "[K" + weight_to_string(f, lambda) + "] = ";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " + ";
    if (factors[i].mult != 1) s += std::to_string(factors[i].mult);
    s += "[L" + weight_to_string(f, factors[i].label) + "]";
  }
  return s;
}

json series_json(const Setting& s, const CompositionReport& r) {
  const Field& f = *s.field;
  json j = {{"p", f.p()},
            {"chi", chi_json(r.chi)},
            {"lambda", weight_json(f, r.lambda)},
            {"delta", fe_json(f, r.delta)},
            {"typical", r.typical},
            {"factors", factors_json(f, r.factors)},
            {"length", r.length},
            {"runtime_ms", r.runtime_ms}};
  j["checks"] = {{"dims", r.dims_ok},
                 {"character", r.character_ok},
                 {"cross_check", r.cross_check_ok},
                 {"unique_max", r.unique_max_ok},
                 {"head", r.head_confirmed}};
  j["notes"] = r.notes;
  return j;
}

json maxvec_json(const KacModule& k, const std::vector<MaximalVector>& vs) {
  const Field& f = k.rep.field();
  const auto& labels = k.rep.labels();
  json out = json::array();
  for (const auto& v : vs) {
    json support = json::array(), coeffs = json::array();
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      if (!v.coords[i].v) continue;
      if (i < labels.size()) support.push_back(labels[i]);
      else support.push_back(i);
      coeffs.push_back(fe_json(f, v.coords[i]));
    }
    out.push_back({{"weight", weight_json(f, v.weight)},
                   {"degree", v.degree},
                   {"support", support},
                   {"coefficients", coeffs}});
  }
  return out;
}

json verify_json(const VerifySummary& sum) {
  json rows = json::array();
  for (const auto& r : sum.rows) {
    const Field& f = *Setting::make(sum.p, r.kind).field;
    json row = {{"chi", chi_kind_name(r.kind)},
                {"lambda", weight_json(f, r.lambda)},
                {"status", row_status_name(r.status)},
                {"typical", r.report.typical},
                {"length", r.report.length},
                {"factors", factors_json(f, r.report.factors)},
                {"reasons", r.reasons}};
    if (r.expected) {
      row["rule"] = r.expected->rule;
      row["expected"] = factors_json(f, r.expected->factors);
      row["collision"] = r.expected->collision;
    }
    rows.push_back(std::move(row));
  }
  return {{"p", sum.p},
          {"table_version", sum.table_version},
          {"passed", sum.passed},
          {"failed", sum.failed},
          {"uncovered", sum.uncovered},
          {"rows", rows}};
}

std::string series_text(const Setting& s, const CompositionReport& r, Format fmt) {
  const Field& f = *s.field;
  std::ostringstream os;
  switch (fmt) {
    case Format::Json:
      os << series_json(s, r).dump(2) << '\n';
      break;
    case Format::Csv:
      os << "p,chi,lambda,label,dim,mult\n";
      for (const auto& e : r.factors)
        os << f.p() << ',' << chi_kind_name(r.chi.kind) << ',' << csv_weight(f, r.lambda) << ','
           << csv_weight(f, e.label) << ',' << e.dim << ',' << e.mult << '\n';
      break;
    case Format::Markdown:
      os << "`" << bracket_notation(f, r.lambda, r.factors) << "`\n\n";
      os << "| label | dim | mult |\n|---|---:|---:|\n";
      for (const auto& e : r.factors)
        os << "| " << weight_to_string(f, e.label) << " | " << e.dim << " | " << e.mult << " |\n";
      os << "\n" << chi_kind_name(r.chi.kind) << ", p = " << f.p() << ", dim K = " << r.dim
         << ", delta = " << f.to_string(r.delta) << (r.typical ? " (typical)" : " (atypical)") << '\n';
      for (const auto& n : r.notes) os << "\n> " << n << '\n';
      break;
  }
  return os.str();
}

std::string maxvec_text(const KacModule& k, const std::vector<MaximalVector>& vs, Format fmt) {
  const Field& f = k.rep.field();
  const json j = maxvec_json(k, vs);
  std::ostringstream os;
  switch (fmt) {
    case Format::Json:
      os << j.dump(2) << '\n';
      break;
    case Format::Csv:
      os << "weight,degree,basis,coefficient\n";
      for (std::size_t n = 0; n < vs.size(); ++n) {
        const auto& v = j[n];
        for (std::size_t i = 0; i < v["support"].size(); ++i) {
          const auto& b = v["support"][i];
          const auto& c = v["coefficients"][i];
          os << csv_weight(f, vs[n].weight) << ',' << vs[n].degree << ",\""
             << (b.is_string() ? b.get<std::string>() : b.dump()) << "\","
             << (c.is_string() ? c.get<std::string>() : c.dump()) << '\n';
        }
      }
      break;
    case Format::Markdown:
      os << "| weight | degree | vector |\n|---|---:|---|\n";
      for (std::size_t n = 0; n < vs.size(); ++n) {
        std::string terms;
        const auto& v = j[n];
        for (std::size_t i = 0; i < v["support"].size(); ++i) {
          if (i) terms += " + ";
          const auto& c = v["coefficients"][i];
          const std::string cs = c.is_string() ? "(" + c.get<std::string>() + ")" : c.dump();
          if (cs != "1") terms += cs + " ";
          terms += v["support"][i].is_string() ? v["support"][i].get<std::string>() : v["support"][i].dump();
        }
        os << "| " << weight_to_string(f, vs[n].weight) << " | " << vs[n].degree << " | " << terms << " |\n";
      }
      break;
  }
  return os.str();
}

std::string verify_text(const VerifySummary& sum, Format fmt) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Json:
      os << verify_json(sum).dump(2) << '\n';
      break;
    case Format::Csv:
      os << "chi,lambda,status,rule,length,factors,expected\n";
      for (const auto& r : sum.rows) {
        const Field& f = *Setting::make(sum.p, r.kind).field;
        os << chi_kind_name(r.kind) << ',' << csv_weight(f, r.lambda) << ',' << row_status_name(r.status) << ','
           << (r.expected ? r.expected->rule : "") << ',' << r.report.length << ",\""
           << factors_inline(f, r.report.factors) << "\",\""
           << (r.expected ? factors_inline(f, r.expected->factors) : "") << "\"\n";
      }
      break;
    case Format::Markdown: {
      os << "p = " << sum.p << ", table version " << sum.table_version << ": " << sum.passed << " pass, "
         << sum.failed << " fail, " << sum.uncovered << " uncovered\n\n";
      os << "| chi | lambda | status | rule | factors | expected |\n|---|---|---|---|---|---|\n";
      for (const auto& r : sum.rows) {
        const Field& f = *Setting::make(sum.p, r.kind).field;
        os << "| " << chi_kind_name(r.kind) << " | " << weight_to_string(f, r.lambda) << " | "
           << row_status_name(r.status) << " | " << (r.expected ? r.expected->rule : "") << " | `"
           << bracket_notation(f, r.lambda, r.report.factors) << "` | "
           << (r.expected ? "`" + bracket_notation(f, r.lambda, r.expected->factors) + "`" : "") << " |\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace peri
