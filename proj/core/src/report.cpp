#include "mrbound/report.hpp"

#include <sstream>

namespace mrbound {

namespace {

constexpr int kDigits = 12;

void put_interval(std::ostream& os, const std::optional<RealInterval>& value) {
  if (value) {
    os << ',' << format_decimal(value->lower(), kDigits) << ',' << format_decimal(value->upper(), kDigits);
  } else {
    os << ",NA,NA";
  }
}

}  // namespace

std::string scan_csv(const ScanResult& result) {
  std::ostringstream os;
  os << kScanCsvHeader << '\n';
  for (const auto& s : result.shells) {
    os << s.N;
    put_interval(os, s.min_ratio);
    os << ',' << (s.min_ratio ? s.argmin.to_string() : "NA") << ',' << s.points_total << ',' << s.skipped_vanishing
       << ',' << s.skipped_zero_f << ',' << s.undecided << '\n';
  }
  return os.str();
}

std::string probe_csv(const ProbeResult& result) {
  std::ostringstream os;
  os << kProbeCsvHeader << '\n';
  for (const auto& s : result.shells) {
    os << s.N;
    put_interval(os, s.min_value);
    os << ',' << (s.min_value ? s.argmin.to_string() : "NA");
    put_interval(os, s.running_min);
    os << ',' << s.points_total << ',' << s.skipped << ',' << s.undecided << '\n';
  }
  return os.str();
}

}  // namespace mrbound
