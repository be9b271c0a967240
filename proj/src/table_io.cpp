#include "qsig/table_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "qsig/errors.hpp"

namespace qsig {

std::string format_value(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    const auto fmt = std::abs(v) < 1e-3 ? std::chars_format::scientific
                                        : std::chars_format::general;
    const auto res = std::to_chars(buf, buf + sizeof buf, v, fmt);
    return std::string(buf, res.ptr);
}

std::string format_value(std::int64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "alpha,d,theta,N,p1,gap,qubits_per_bit,gc_qubits_per_bit,admissible,d_requested\n";
    for (const auto& r : rows) {
        out += format_value(r.alpha);
        out += ',';
        out += format_value(r.d);
        out += ',';
        out += format_value(r.theta);
        out += ',';
        out += r.n_codeword >= 0 ? format_value(r.n_codeword) : "";
        out += ',';
        out += std::isnan(r.p1) ? "" : format_value(r.p1);
        out += ',';
        out += std::isnan(r.gap) ? "" : format_value(r.gap);
        out += ',';
        out += std::isnan(r.qubits_per_bit) ? "" : format_value(r.qubits_per_bit);
        out += ',';
        out += std::isnan(r.gc_qubits_per_bit) ? "" : format_value(r.gc_qubits_per_bit);
        out += ',';
        // Quote the marker: inadmissibility reasons may contain commas.
        out += '"';
        for (char c : r.admissible) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        out += ',';
        out += format_value(r.d_requested);
        out += '\n';
    }
    return out;
}

std::string histogram_csv(const std::vector<std::int64_t>& tally_histogram) {
    std::string out = "z,count\n";
    for (std::size_t z = 0; z < tally_histogram.size(); ++z) {
        if (tally_histogram[z] == 0) continue;
        out += format_value(static_cast<std::int64_t>(z));
        out += ',';
        out += format_value(tally_histogram[z]);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error("cannot open output file: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw error("failed writing output file: " + path);
}

} // namespace qsig
