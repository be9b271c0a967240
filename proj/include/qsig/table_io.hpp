#ifndef QSIG_TABLE_IO_HPP
#define QSIG_TABLE_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsig/analysis.hpp"

namespace qsig {

// Deterministic, locale-independent number formatting for the CSV outputs:
// shortest round-trip representation, forced to scientific notation below
// 1e-3 so small probabilities stay readable.
std::string format_value(double v);
std::string format_value(std::int64_t v);

// Figure-data CSV for the tradeoff sweep (header + one line per row).
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Histogram CSV with columns (z, count); zero-count rows are omitted.
std::string histogram_csv(const std::vector<std::int64_t>& tally_histogram);

void write_file(const std::string& path, const std::string& content);

} // namespace qsig

#endif
