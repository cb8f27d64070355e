#pragma once

#include <string>
#include <string_view>

#include "fekete/mclass.hpp"
#include "fekete/transforms.hpp"
#include "fekete/verify.hpp"

namespace fekete {

/// Shortest text form that parses back to the identical double
/// (17 significant digits).
std::string fmt_double(double v);

// Series wire formats. CSV rows are `index,re,im` under a header line;
// JSON is an array of [re, im] pairs. Both round-trip bit-exactly.
std::string series_to_csv(const TruncatedSeries& s);
TruncatedSeries series_from_csv(std::string_view text);
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(std::string_view text);

std::string measure_to_json(const HerglotzMeasure& h);
HerglotzMeasure measure_from_json(std::string_view text);

/// {"accepted": ..., "worst_value": ..., "worst_z": [r, theta]}
std::string membership_report_to_json(const MembershipReport& r);

std::string verification_report_to_json(const VerificationReport& r);
std::string verification_report_csv_header();
std::string verification_report_csv_row(const VerificationReport& r);

std::string fs_record_csv_header();
std::string fs_record_csv_row(const FSRecord& r);

}  // namespace fekete
