#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fdpi/divisibility.hpp"
#include "fdpi/fields.hpp"

namespace fdpi {

enum class ScanFormat { Jsonl, Csv, Json };

struct ScanOptions {
    std::uint64_t pmax = 2;
    /// When set, each biquadratic root is annotated with divisibility of
    /// <n + m*gamma> and the exceptional-case flag.
    std::optional<std::pair<std::int64_t, std::int64_t>> nm;
    ScanFormat format = ScanFormat::Jsonl;
    /// Worker threads; 0 picks the hardware concurrency. The output is
    /// byte-identical for any value.
    unsigned jobs = 0;
};

/// One factor-base row: the first-degree prime ideals of norm p in both
/// quadratic rings and in Z[gamma], with optional divisibility flags.
struct ScanRow {
    struct BiEntry {
        std::uint64_t t = 0;
        std::optional<bool> divides;
        std::optional<bool> exceptional;
    };

    std::uint64_t p = 2;
    std::vector<std::uint64_t> qa;
    std::vector<std::uint64_t> qb;
    std::vector<BiEntry> bi;
};

ScanRow scan_row(const BiquadraticField& field, std::uint64_t p,
                 const PrincipalIdealSpec* annotate);

std::string scan_csv_header();
std::string format_row_csv(const ScanRow& row);
std::string format_row_json(const ScanRow& row);

/// Emits one row per prime p <= pmax in ascending order. Rows are computed
/// by a pool of workers over sieve segments and re-assembled in order, so
/// output bytes do not depend on the job count. pmax is capped at 2^40.
void scan(const BiquadraticField& field, const ScanOptions& options,
          std::ostream& out);

} // namespace fdpi
