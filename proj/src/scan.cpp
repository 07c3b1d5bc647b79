#include "fdpi/scan.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <thread>

#include "fdpi/sieve.hpp"

namespace fdpi {

namespace {

constexpr std::uint64_t kPmaxCap = std::uint64_t{1} << 40;
constexpr std::uint64_t kSegmentSize = std::uint64_t{1} << 16;

unsigned resolve_jobs(unsigned jobs) {
    if (jobs == 0) {
        unsigned hw = std::thread::hardware_concurrency();
        jobs = hw > 0 ? hw : 1;
    }
    return std::min(jobs, 1024u);
}

std::string join_u64(const std::vector<std::uint64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(values[i]);
    }
    return out;
}

const char* bool_word(bool v) { return v ? "true" : "false"; }

// One sieve segment rendered to its final byte form by a worker thread.
std::string render_segment(const BiquadraticField& field,
                           const SegmentedSieve& sieve,
                           const PrincipalIdealSpec* annotate,
                           std::uint64_t lo, std::uint64_t hi,
                           ScanFormat format) {
    std::string out;
    for (std::uint64_t p : sieve.primes_in(lo, hi)) {
        const ScanRow row = scan_row(field, p, annotate);
        out += format == ScanFormat::Csv ? format_row_csv(row)
                                         : format_row_json(row);
        out += '\n';
    }
    return out;
}

} // namespace

ScanRow scan_row(const BiquadraticField& field, std::uint64_t p,
                 const PrincipalIdealSpec* annotate) {
    ScanRow row;
    row.p = p;
    for (const FdpIdeal& ideal : fdpi_quadratic(field.alpha_field(), p))
        row.qa.push_back(ideal.r);
    for (const FdpIdeal& ideal : fdpi_quadratic(field.beta_field(), p))
        row.qb.push_back(ideal.r);
    for (const FdpIdeal& ideal : fdpi_biquadratic(field, p)) {
        ScanRow::BiEntry entry;
        entry.t = ideal.r;
        if (annotate) {
            entry.divides = divides_biquad(*annotate, ideal);
            entry.exceptional = p != 2 &&
                                mod_reduce(annotate->n(), p) == 0 &&
                                ideal.r != 0;
        }
        row.bi.push_back(entry);
    }
    return row;
}

std::string scan_csv_header() { return "p,qa,qb,bi,divides,exceptional"; }

std::string format_row_csv(const ScanRow& row) {
    std::string out = std::to_string(row.p);
    out += ',';
    out += join_u64(row.qa);
    out += ',';
    out += join_u64(row.qb);
    std::string ts, ds, es;
    for (std::size_t i = 0; i < row.bi.size(); ++i) {
        if (i > 0) {
            ts += ';';
            if (row.bi[i].divides) ds += ';';
            if (row.bi[i].exceptional) es += ';';
        }
        ts += std::to_string(row.bi[i].t);
        if (row.bi[i].divides) ds += bool_word(*row.bi[i].divides);
        if (row.bi[i].exceptional) es += bool_word(*row.bi[i].exceptional);
    }
    out += ',';
    out += ts;
    out += ',';
    out += ds;
    out += ',';
    out += es;
    return out;
}

std::string format_row_json(const ScanRow& row) {
    nlohmann::ordered_json j;
    j["p"] = row.p;
    j["qa"] = row.qa;
    j["qb"] = row.qb;
    auto bi = nlohmann::ordered_json::array();
    for (const ScanRow::BiEntry& entry : row.bi) {
        nlohmann::ordered_json e;
        e["t"] = entry.t;
        e["divides"] = entry.divides ? nlohmann::ordered_json(*entry.divides)
                                     : nlohmann::ordered_json(nullptr);
        e["exceptional"] = entry.exceptional
                               ? nlohmann::ordered_json(*entry.exceptional)
                               : nlohmann::ordered_json(nullptr);
        bi.push_back(e);
    }
    j["bi"] = bi;
    return j.dump();
}

void scan(const BiquadraticField& field, const ScanOptions& options,
          std::ostream& out) {
    if (options.pmax > kPmaxCap)
        throw InvalidInput("scan: pmax must be at most 2^40");

    std::optional<PrincipalIdealSpec> annotate;
    if (options.nm)
        annotate.emplace(field, options.nm->first, options.nm->second);
    const PrincipalIdealSpec* annotate_ptr = annotate ? &*annotate : nullptr;

    const unsigned jobs = resolve_jobs(options.jobs);
    const SegmentedSieve sieve(options.pmax);

    if (options.format == ScanFormat::Csv) out << scan_csv_header() << '\n';
    if (options.format == ScanFormat::Json) out << "[\n";

    // Fixed-size segments processed in waves of `jobs`; buffers are written
    // back in segment order, so the byte stream is independent of both the
    // job count and thread scheduling.
    bool first_row = true;
    std::uint64_t wave_lo = 2;
    while (wave_lo <= options.pmax) {
        std::vector<std::string> buffers(jobs);
        std::vector<std::thread> workers;
        for (unsigned k = 0; k < jobs; ++k) {
            const std::uint64_t lo = wave_lo + std::uint64_t{k} * kSegmentSize;
            if (lo > options.pmax) break;
            const std::uint64_t hi =
                std::min(options.pmax, lo + kSegmentSize - 1);
            workers.emplace_back([&, k, lo, hi] {
                buffers[k] = render_segment(field, sieve, annotate_ptr, lo, hi,
                                            options.format);
            });
        }
        for (std::thread& t : workers) t.join();

        for (const std::string& buf : buffers) {
            if (buf.empty()) continue;
            if (options.format == ScanFormat::Json) {
                // Rows inside the buffer are newline-separated; a JSON array
                // needs commas between all rows across buffer boundaries.
                std::istringstream lines(buf);
                std::string line;
                while (std::getline(lines, line)) {
                    if (!first_row) out << ",\n";
                    out << line;
                    first_row = false;
                }
            } else {
                out << buf;
            }
        }
        wave_lo += std::uint64_t{jobs} * kSegmentSize;
    }

    if (options.format == ScanFormat::Json) out << "\n]\n";
    out.flush();
}

} // namespace fdpi
