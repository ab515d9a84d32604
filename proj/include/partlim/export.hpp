#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "partlim/asymptotics.hpp"
#include "partlim/format.hpp"
#include "partlim/laplace.hpp"
#include "partlim/limit_function.hpp"
#include "partlim/triangle.hpp"

namespace partlim {

using Json = nlohmann::ordered_json;

// ---- table ----------------------------------------------------------

// Rows n = 1..n_max, k = 1..n.  Exact columns are empty for rows beyond
// the exact table (or when no exact table is given); the float column is
// empty when no float table is given.
inline void write_table_csv(std::ostream& os, const ExactTriangle* exact,
                            const FloatTriangle* flt) {
  if (exact == nullptr && flt == nullptr)
    throw std::invalid_argument("write_table_csv: need at least one table");
  const int n_max = std::max(exact ? exact->n_max() : 0, flt ? flt->n_max() : 0);
  os << "n,k,value_exact_num,value_exact_den,value_float\n";
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      os << n << ',' << k << ',';
      if (exact && n <= exact->n_max()) {
        const Rational& v = exact->value(n, k);
        os << boost::multiprecision::numerator(v).str() << ','
           << boost::multiprecision::denominator(v).str() << ',';
      } else {
        os << ",,";
      }
      if (flt && n <= flt->n_max()) os << format_double(flt->value(n, k));
      os << '\n';
    }
  }
}

inline Json table_json(const ExactTriangle* exact, const FloatTriangle* flt) {
  if (exact == nullptr && flt == nullptr)
    throw std::invalid_argument("table_json: need at least one table");
  const int n_max = std::max(exact ? exact->n_max() : 0, flt ? flt->n_max() : 0);
  Json rows = Json::array();
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      Json row;
      row["n"] = n;
      row["k"] = k;
      if (exact && n <= exact->n_max()) {
        const Rational& v = exact->value(n, k);
        row["value_exact_num"] = boost::multiprecision::numerator(v).str();
        row["value_exact_den"] = boost::multiprecision::denominator(v).str();
      } else {
        row["value_exact_num"] = nullptr;
        row["value_exact_den"] = nullptr;
      }
      if (flt && n <= flt->n_max())
        row["value_float"] = flt->value(n, k);
      else
        row["value_float"] = nullptr;
      rows.push_back(std::move(row));
    }
  }
  Json out;
  out["rows"] = std::move(rows);
  return out;
}

// ---- limit function -------------------------------------------------

struct LimitRow {
  double x;
  int r;
  double f_quadrature;
  std::optional<double> f_ode;
  std::optional<double> closed_form;  // f1 / f2 where they exist
};

inline std::vector<LimitRow> limit_rows(const PiecewiseLimit& pw, const std::vector<double>& xs,
                                        bool with_ode) {
  std::vector<LimitRow> rows;
  rows.reserve(xs.size());
  for (double x : xs) {
    LimitRow row;
    row.x = x;
    row.r = interval_index(x);
    row.f_quadrature = eval_F(pw, x);
    if (with_ode) row.f_ode = eval_F_ode(pw, x);
    if (row.r == 1)
      row.closed_form = f1(x);
    else if (row.r == 2)
      row.closed_form = f2(x);
    rows.push_back(row);
  }
  return rows;
}

inline void write_limit_csv(std::ostream& os, const std::vector<LimitRow>& rows) {
  os << "x,r,F_quadrature,F_ode,closed_form_or_empty\n";
  for (const auto& row : rows) {
    os << format_double(row.x) << ',' << row.r << ',' << format_double(row.f_quadrature) << ',';
    if (row.f_ode) os << format_double(*row.f_ode);
    os << ',';
    if (row.closed_form) os << format_double(*row.closed_form);
    os << '\n';
  }
}

inline Json limit_json(const std::vector<LimitRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["x"] = row.x;
    j["r"] = row.r;
    j["F_quadrature"] = row.f_quadrature;
    if (row.f_ode)
      j["F_ode"] = *row.f_ode;
    else
      j["F_ode"] = nullptr;
    if (row.closed_form)
      j["closed_form_or_empty"] = *row.closed_form;
    else
      j["closed_form_or_empty"] = nullptr;
    arr.push_back(std::move(j));
  }
  Json out;
  out["rows"] = std::move(arr);
  return out;
}

// ---- asymptotics ----------------------------------------------------

inline void write_lehmer_csv(std::ostream& os, const LehmerReport& report) {
  os << "n,b_n,ratio\n";
  for (const auto& row : report.rows)
    os << row.n << ',' << format_double(row.b_n) << ',' << format_double(row.ratio) << '\n';
}

inline Json lehmer_json(const LehmerReport& report) {
  Json arr = Json::array();
  for (const auto& row : report.rows) {
    Json j;
    j["n"] = row.n;
    j["b_n"] = row.b_n;
    j["ratio"] = row.ratio;
    arr.push_back(std::move(j));
  }
  Json out;
  out["rows"] = std::move(arr);
  return out;
}

inline void write_convergence_csv(std::ostream& os, const ConvergenceReport& report) {
  os << "x,n,k,scaled,limit,abs_error\n";
  for (const auto& row : report.rows) {
    os << format_double(row.x) << ',' << row.n << ',' << row.k << ','
       << format_double(row.scaled) << ',' << format_double(row.limit) << ','
       << format_double(row.abs_error) << '\n';
  }
}

inline Json convergence_json(const ConvergenceReport& report) {
  Json arr = Json::array();
  for (const auto& row : report.rows) {
    Json j;
    j["x"] = row.x;
    j["n"] = row.n;
    j["k"] = row.k;
    j["scaled"] = row.scaled;
    j["limit"] = row.limit;
    j["abs_error"] = row.abs_error;
    arr.push_back(std::move(j));
  }
  Json out;
  out["rows"] = std::move(arr);
  if (!report.warnings.empty()) out["warnings"] = report.warnings;
  return out;
}

// ---- laplace --------------------------------------------------------

inline void write_laplace_csv(std::ostream& os, const LaplaceCheck& check) {
  os << "t,g_hat,invariant_ratio\n";
  for (const auto& row : check.rows)
    os << format_double(row.t) << ',' << format_double(row.g_hat) << ','
       << format_double(row.invariant_ratio) << '\n';
}

inline Json laplace_summary_json(const LaplaceCheck& check) {
  Json out;
  out["empirical_K"] = check.empirical_k;
  out["max_rel_spread"] = check.max_rel_spread;
  out["x_max"] = check.x_max;
  out["r_max"] = check.r_max;
  return out;
}

inline Json laplace_json(const LaplaceCheck& check) {
  Json arr = Json::array();
  for (const auto& row : check.rows) {
    Json j;
    j["t"] = row.t;
    j["g_hat"] = row.g_hat;
    j["invariant_ratio"] = row.invariant_ratio;
    arr.push_back(std::move(j));
  }
  Json out;
  out["rows"] = std::move(arr);
  out["summary"] = laplace_summary_json(check);
  return out;
}

}  // namespace partlim
