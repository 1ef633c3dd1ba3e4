// Machine-readable reports: JSON (sorted keys, complex as {"re","im"}) and
// CSV matrix/vector dumps with 17 significant digits.
#pragma once

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dnq/linalg.hpp"
#include "dnq/verdict.hpp"

namespace dnq {

using Json = nlohmann::json;

inline Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Complex complex_from_json(const Json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

inline Json to_json(const ComplexMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

inline ComplexMatrix matrix_from_json(const Json& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.at(0).size());
  ComplexMatrix a(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != m) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = complex_from_json(row.at(static_cast<std::size_t>(j)));
  }
  return a;
}

inline Json to_json(const Verdict& v) {
  Json j{{"name", v.name},
         {"pass", v.pass},
         {"max_deviation", v.max_deviation},
         {"tolerance", v.tolerance}};
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

struct ReportDocument {
  std::string command;
  Json parameters = Json::object();
  double tolerance = 0.0;
  std::vector<Verdict> verdicts;
  Json payload;  // null when absent

  bool all_pass() const {
    for (const auto& v : verdicts) {
      if (!v.pass) return false;
    }
    return true;
  }

  Json to_json() const {
    Json verdict_list = Json::array();
    for (const auto& v : verdicts) verdict_list.push_back(dnq::to_json(v));
    Json j{{"command", command},
           {"parameters", parameters},
           {"tolerance", tolerance},
           {"verdicts", verdict_list},
           {"all_pass", all_pass()}};
    if (!payload.is_null()) j["payload"] = payload;
    return j;
  }

  std::string dump() const { return to_json().dump(2); }
};

// ---------------------------------------------------------------------------
// CSV. Each matrix row is one line of 2n fields: re_0,im_0,re_1,im_1,...

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string dump_matrix_csv(const ComplexMatrix& a) {
  std::string out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(a(i, j).real());
      out += ',';
      out += format_double(a(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

inline std::string dump_vector_csv(const ComplexVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out += format_double(v[i].real()) + "," + format_double(v[i].imag()) + "\n";
  }
  return out;
}

namespace detail {
inline std::vector<double> parse_csv_line(const std::string& line) {
  std::vector<double> fields;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    const double x = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument("bad CSV field '" + cell + "'");
    fields.push_back(x);
  }
  return fields;
}
}  // namespace detail

inline ComplexMatrix parse_matrix_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    rows.push_back(detail::parse_csv_line(line));
  }
  if (rows.empty()) return ComplexMatrix(0, 0);
  const std::size_t width = rows.front().size();
  if (width % 2 != 0) throw std::invalid_argument("CSV row has an odd number of fields");
  ComplexMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width / 2));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw std::invalid_argument("ragged CSV matrix");
    for (std::size_t j = 0; j < width / 2; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {rows[i][2 * j],
                                                                        rows[i][2 * j + 1]};
    }
  }
  return a;
}

}  // namespace dnq
