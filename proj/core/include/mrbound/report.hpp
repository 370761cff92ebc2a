#pragma once

#include <string>

#include "mrbound/verifier.hpp"

namespace mrbound {

inline constexpr const char* kScanCsvHeader =
    "N,min_ratio_lo,min_ratio_hi,argmin,points_total,skipped_vanishing,skipped_zero_f,undecided";
inline constexpr const char* kProbeCsvHeader =
    "N,cemp_min_lo,cemp_min_hi,argmin,running_min_lo,running_min_hi,points_total,skipped,undecided";

/// One row per shell. Decimals carry 12 significant digits, round-to-nearest;
/// shells without an evaluated point print NA in the value columns.
std::string scan_csv(const ScanResult& result);
std::string probe_csv(const ProbeResult& result);

}  // namespace mrbound
