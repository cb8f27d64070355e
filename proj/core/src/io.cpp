#include "fekete/io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace fekete {

using nlohmann::json;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string series_to_csv(const TruncatedSeries& s) {
  std::ostringstream out;
  out << "index,re,im\n";
  for (int n = 0; n <= s.order(); ++n)
    out << n << ',' << fmt_double(s[n].real()) << ',' << fmt_double(s[n].imag()) << '\n';
  return out.str();
}

namespace {

bool parse_double(std::string_view token, double* out) {
  while (!token.empty() && (token.back() == '\r' || token.back() == ' ')) token.remove_suffix(1);
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), *out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool parse_int(std::string_view token, int* out) {
  while (!token.empty() && (token.back() == '\r' || token.back() == ' ')) token.remove_suffix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), *out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

TruncatedSeries series_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<int, Complex>> rows;
  int max_index = -1;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream ls(line);
    std::string idx, re, im;
    const bool shaped =
        std::getline(ls, idx, ',') && std::getline(ls, re, ',') && std::getline(ls, im);
    int n = -1;
    double vr = 0.0, vi = 0.0;
    if (!shaped || !parse_int(idx, &n) || !parse_double(re, &vr) || !parse_double(im, &vi) ||
        n < 0) {
      if (first && idx == "index") {  // header line
        first = false;
        continue;
      }
      throw std::invalid_argument("series_from_csv: malformed row: " + line);
    }
    first = false;
    rows.emplace_back(n, Complex(vr, vi));
    max_index = std::max(max_index, n);
  }
  if (max_index < 0) throw std::invalid_argument("series_from_csv: no rows");
  TruncatedSeries s(max_index);
  for (const auto& [n, c] : rows) s.set(n, c);
  return s;
}

std::string series_to_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (int n = 0; n <= s.order(); ++n) arr.push_back({s[n].real(), s[n].imag()});
  return arr.dump();
}

TruncatedSeries series_from_json(std::string_view text) {
  const json arr = json::parse(text);
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("series_from_json: expected a non-empty array of [re, im] pairs");
  std::vector<Complex> coeffs;
  coeffs.reserve(arr.size());
  for (const json& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("series_from_json: each entry must be [re, im]");
    coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return TruncatedSeries(std::move(coeffs));
}

std::string measure_to_json(const HerglotzMeasure& h) {
  json obj;
  obj["weights"] = h.weights;
  obj["angles"] = h.angles;
  return obj.dump();
}

HerglotzMeasure measure_from_json(std::string_view text) {
  const json obj = json::parse(text);
  return HerglotzMeasure(obj.at("weights").get<std::vector<double>>(),
                         obj.at("angles").get<std::vector<double>>());
}

std::string membership_report_to_json(const MembershipReport& r) {
  json obj;
  obj["accepted"] = r.accepted;
  obj["worst_value"] = r.worst_value;
  obj["worst_z"] = {r.worst_r, r.worst_theta};
  return obj.dump();
}

std::string verification_report_to_json(const VerificationReport& r) {
  json obj;
  obj["alpha"] = r.alpha;
  obj["k"] = r.k;
  obj["mu"] = r.mu;
  obj["bound"] = r.bound;
  obj["max_observed"] = r.max_observed;
  obj["argmax"] = r.argmax;
  obj["violations"] = r.violations;
  obj["sharpness_gap"] = r.sharpness_gap;
  return obj.dump();
}

std::string verification_report_csv_header() {
  return "alpha,k,mu,bound,max_observed,violations,sharpness_gap";
}

std::string verification_report_csv_row(const VerificationReport& r) {
  std::ostringstream out;
  out << fmt_double(r.alpha) << ',' << r.k << ',' << fmt_double(r.mu) << ','
      << fmt_double(r.bound) << ',' << fmt_double(r.max_observed) << ',' << r.violations << ','
      << fmt_double(r.sharpness_gap);
  return out.str();
}

std::string fs_record_csv_header() { return "k,mu,b_low_re,b_low_im,b_high_re,b_high_im,value"; }

std::string fs_record_csv_row(const FSRecord& r) {
  std::ostringstream out;
  out << r.k << ',' << fmt_double(r.mu) << ',' << fmt_double(r.b_low.real()) << ','
      << fmt_double(r.b_low.imag()) << ',' << fmt_double(r.b_high.real()) << ','
      << fmt_double(r.b_high.imag()) << ',' << fmt_double(r.value);
  return out.str();
}

}  // namespace fekete
