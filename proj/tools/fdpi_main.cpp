// fdpi: first-degree prime ideals of quadratic and biquadratic rings.
//
// Subcommands: ideals, combine, decompose, divides, scan.
// Exit codes: 0 success, 2 invalid parameters, 3 non-prime p,
// 4 domain precondition failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fdpi/combination.hpp"
#include "fdpi/divisibility.hpp"
#include "fdpi/fields.hpp"
#include "fdpi/scan.hpp"

namespace {

using nlohmann::ordered_json;

struct Args {
    bool quad = false;
    bool biquad = false;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::uint64_t p = 0;
    std::int64_t r = 0;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::uint64_t pmax = 0;
    std::string format = "jsonl";
    unsigned jobs = 0;
    std::string output;

    bool has_r = false, has_s = false, has_t = false;
    bool has_n = false, has_m = false, has_b = false;
};

std::ostream& open_output(const Args& args, std::ofstream& file) {
    if (args.output.empty()) return std::cout;
    file.open(args.output, std::ios::binary);
    if (!file) throw fdpi::InvalidInput("cannot open output file: " + args.output);
    return file;
}

fdpi::FdpIdeal make_pair(std::int64_t root, std::uint64_t p) {
    return {fdpi::mod_reduce(root, p), p};
}

int run_ideals(const Args& args) {
    if (args.quad == args.biquad)
        throw fdpi::InvalidInput("ideals: exactly one of --quad / --biquad is required");
    if (args.biquad && !args.has_b)
        throw fdpi::InvalidInput("ideals: --biquad requires -b");

    std::vector<fdpi::FdpIdeal> ideals;
    if (args.quad) {
        fdpi::QuadraticField field(args.a);
        fdpi::require_prime(args.p);
        ideals = fdpi_quadratic(field, args.p);
    } else {
        fdpi::BiquadraticField field(args.a, args.b);
        fdpi::require_prime(args.p);
        ideals = fdpi_biquadratic(field, args.p);
    }

    auto roots = ordered_json::array();
    for (const fdpi::FdpIdeal& ideal : ideals) roots.push_back(ideal.r);

    std::ofstream file;
    open_output(args, file) << roots.dump() << '\n';
    return 0;
}

int run_combine(const Args& args) {
    fdpi::BiquadraticField field(args.a, args.b);
    fdpi::require_prime(args.p);
    fdpi::FdpIdeal out = combine(field, make_pair(args.r, args.p),
                                 make_pair(args.s, args.p));
    ordered_json j;
    j["t"] = out.r;
    std::ofstream file;
    open_output(args, file) << j.dump() << '\n';
    return 0;
}

int run_decompose(const Args& args) {
    fdpi::BiquadraticField field(args.a, args.b);
    fdpi::require_prime(args.p);
    fdpi::DecomposeOutcome out = decompose(field, make_pair(args.t, args.p));

    ordered_json j;
    if (out.kind == fdpi::DecomposeKind::Unique) {
        j["kind"] = "unique";
        j["r"] = out.pair->first.r;
        j["s"] = out.pair->second.r;
    } else {
        j["kind"] = "zero";
        j["nu"] = out.zero_info->nu;
        auto pairs = ordered_json::array();
        for (const auto& [ra, sb] : out.zero_info->pairs) {
            ordered_json e;
            e["r"] = ra.r;
            e["s"] = sb.r;
            pairs.push_back(e);
        }
        j["pairs"] = pairs;
    }
    std::ofstream file;
    open_output(args, file) << j.dump() << '\n';
    return 0;
}

int run_divides(const Args& args) {
    fdpi::BiquadraticField field(args.a, args.b);
    fdpi::require_prime(args.p);
    fdpi::PrincipalIdealSpec ideal(field, args.n, args.m);

    const bool has_pair = args.has_r || args.has_s;
    if (args.has_t == has_pair)
        throw fdpi::InvalidInput("divides: give either -t or both -r and -s");
    if (has_pair && !(args.has_r && args.has_s))
        throw fdpi::InvalidInput("divides: -r and -s must be given together");

    ordered_json j;
    if (args.has_t) {
        fdpi::FdpIdeal tc = make_pair(args.t, args.p);
        j["divides"] = divides_biquad(ideal, tc);
        j["exceptional"] = args.p != 2 &&
                           fdpi::mod_reduce(args.n, args.p) == 0 && tc.r != 0;
    } else {
        fdpi::CombineDivisorOutcome out = combine_divisors(
            ideal, make_pair(args.r, args.p), make_pair(args.s, args.p));
        j["t"] = out.ideal.r;
        j["divides"] = out.divides;
        j["exceptional"] = out.exceptional;
    }
    std::ofstream file;
    open_output(args, file) << j.dump() << '\n';
    return 0;
}

unsigned jobs_from_env() {
    const char* env = std::getenv("FDPI_JOBS");
    if (env == nullptr || *env == '\0') return 0;
    unsigned value = 0;
    const char* end = env + std::string_view(env).size();
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0)
        throw fdpi::InvalidInput("FDPI_JOBS must be a positive integer");
    return value;
}

int run_scan(const Args& args) {
    fdpi::BiquadraticField field(args.a, args.b);
    if (args.has_n != args.has_m)
        throw fdpi::InvalidInput("scan: -n and -m must be given together");

    fdpi::ScanOptions options;
    options.pmax = args.pmax;
    if (args.has_n) options.nm = {{args.n, args.m}};
    if (args.format == "jsonl")
        options.format = fdpi::ScanFormat::Jsonl;
    else if (args.format == "csv")
        options.format = fdpi::ScanFormat::Csv;
    else if (args.format == "json")
        options.format = fdpi::ScanFormat::Json;
    else
        throw fdpi::InvalidInput("scan: --format must be json, jsonl or csv");
    options.jobs = args.jobs != 0 ? args.jobs : jobs_from_env();

    std::ofstream file;
    scan(field, options, open_output(args, file));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"first-degree prime ideals of quadratic and biquadratic rings"};
    app.require_subcommand(1);
    Args args;

    auto add_field = [&](CLI::App* cmd, bool with_b) {
        cmd->add_option("-a", args.a, "alpha^2 (nonzero non-square)")->required();
        auto* b = cmd->add_option("-b", args.b, "beta^2 (nonzero non-square)");
        if (with_b) b->required();
        b->each([&](const std::string&) { args.has_b = true; });
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", args.output, "output path (default stdout)");
    };

    CLI::App* ideals = app.add_subcommand(
        "ideals", "enumerate first-degree prime ideals of norm p");
    ideals->add_flag("--quad", args.quad, "the quadratic ring Z[alpha]");
    ideals->add_flag("--biquad", args.biquad, "the biquadratic ring Z[gamma]");
    add_field(ideals, false);
    ideals->add_option("-p", args.p, "prime norm")->required();
    add_output(ideals);

    CLI::App* comb = app.add_subcommand(
        "combine", "combine quadratic ideals (r,p) and (s,p) into (r+s,p)");
    add_field(comb, true);
    comb->add_option("-p", args.p, "prime norm")->required();
    comb->add_option("-r", args.r, "root of x^2-a mod p")->required();
    comb->add_option("-s", args.s, "root of x^2-b mod p")->required();
    add_output(comb);

    CLI::App* dec = app.add_subcommand(
        "decompose", "recover the source pair of a biquadratic ideal (t,p)");
    add_field(dec, true);
    dec->add_option("-p", args.p, "prime norm")->required();
    dec->add_option("-t", args.t, "root of the biquadratic polynomial mod p")
        ->required();
    add_output(dec);

    CLI::App* div = app.add_subcommand(
        "divides", "test divisibility of <n + m*gamma> by ideals of norm p");
    add_field(div, true);
    div->add_option("-n", args.n, "constant coefficient of the generator")
        ->required();
    div->add_option("-m", args.m, "gamma coefficient of the generator")
        ->required();
    div->add_option("-p", args.p, "prime norm")->required();
    div->add_option("-t", args.t, "biquadratic root to test")
        ->each([&](const std::string&) { args.has_t = true; });
    div->add_option("-r", args.r, "alpha-side root")
        ->each([&](const std::string&) { args.has_r = true; });
    div->add_option("-s", args.s, "beta-side root")
        ->each([&](const std::string&) { args.has_s = true; });
    add_output(div);

    CLI::App* scan_cmd = app.add_subcommand(
        "scan", "factor-base scan over all primes up to a bound");
    add_field(scan_cmd, true);
    scan_cmd->add_option("--pmax", args.pmax, "largest prime to include (<= 2^40)")
        ->required();
    scan_cmd->add_option("-n", args.n, "annotate divisibility: constant coefficient")
        ->each([&](const std::string&) { args.has_n = true; });
    scan_cmd->add_option("-m", args.m, "annotate divisibility: gamma coefficient")
        ->each([&](const std::string&) { args.has_m = true; });
    scan_cmd->add_option("--format", args.format, "json | jsonl | csv (default jsonl)");
    scan_cmd->add_option("--jobs", args.jobs,
                         "worker threads (default: FDPI_JOBS or hardware)");
    add_output(scan_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ideals->parsed()) return run_ideals(args);
        if (comb->parsed()) return run_combine(args);
        if (dec->parsed()) return run_decompose(args);
        if (div->parsed()) return run_divides(args);
        if (scan_cmd->parsed()) return run_scan(args);
    } catch (const fdpi::NonPrimeModulus& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const fdpi::PreconditionFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const fdpi::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
