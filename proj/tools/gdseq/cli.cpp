#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "gdseq/alloc_model.hpp"
#include "gdseq/bounds.hpp"
#include "gdseq/counting.hpp"
#include "gdseq/ensemble.hpp"
#include "gdseq/errors.hpp"
#include "gdseq/estimator.hpp"
#include "gdseq/oracle.hpp"
#include "gdseq/ragged_table.hpp"
#include "gdseq/rect_table.hpp"
#include "gdseq/report_io.hpp"
#include "reference_alloc.hpp"

namespace gdseq::cli {

namespace {

// Largest N for which `pnkls` asks the brute-force oracle.
constexpr long long kOracleMaxN = 30;

struct CommonConfig {
    std::string format = "csv";
    std::string output;
    std::optional<unsigned> threads;
    bool verbose = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned resolve_thread_flag(const CommonConfig& cfg) {
    if (cfg.threads) {
        return *cfg.threads;
    }
    if (const char* env = std::getenv("GDSEQ_THREADS"); env != nullptr && *env != '\0') {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw UsageError(std::string("GDSEQ_THREADS is not a number: ") + env);
        }
    }
    return 0;
}

io::Format parse_format(const std::string& name) {
    if (name == "csv") {
        return io::Format::Csv;
    }
    if (name == "jsonl" || name == "json-lines") {
        return io::Format::JsonLines;
    }
    throw UsageError("unknown format: " + name);
}

FillOptions fill_options(const CommonConfig& cfg, std::ostream& err) {
    FillOptions opts;
    opts.threads = resolve_thread_flag(cfg);
    if (cfg.verbose) {
        opts.on_progress = [&err](const ProgressEvent& e) {
            err << "slab " << e.slab << '/' << e.l_max << " elapsed " << e.elapsed_seconds << "s resident "
                << e.resident_bytes << " bytes\n";
        };
    }
    return opts;
}

// Writes through `emit` either to the --output file or to `out`.
void emit_to(const CommonConfig& cfg, std::ostream& out, const std::function<void(std::ostream&)>& emit) {
    if (cfg.output.empty() || cfg.output == "-") {
        emit(out);
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file: " + cfg.output);
    }
    emit(file);
}

void add_common(CLI::App* cmd, CommonConfig& cfg, bool with_threads) {
    cmd->add_option("--format", cfg.format, "Output format: csv or jsonl")->capture_default_str();
    cmd->add_option("-o,--output", cfg.output, "Output file (default: standard output)");
    if (with_threads) {
        cmd->add_option("--threads", cfg.threads, "Worker threads (default: $GDSEQ_THREADS or all cores)");
    }
    cmd->add_flag("-v,--verbose", cfg.verbose, "Progress messages on standard error");
}

// ---- count -------------------------------------------------------------

struct CountConfig {
    CommonConfig common;
    int n = 0;
    std::string algorithm = "improved";
    bool single = false;
};

int cmd_count(const CountConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n < 2) {
        throw UsageError("count needs --n >= 2");
    }
    const io::Format format = parse_format(cfg.common.format);
    const FillOptions opts = fill_options(cfg.common, err);
    CountReport report;
    if (cfg.algorithm == "improved") {
        report = count_all_improved(cfg.n, opts);
    } else if (cfg.algorithm == "baseline") {
        report = count_all_baseline(cfg.n, opts);
    } else {
        throw UsageError("unknown algorithm: " + cfg.algorithm);
    }
    if (const auto problem = check_report_identities(report)) {
        err << "consistency check failed: " << *problem << '\n';
        return kMismatch;
    }
    if (cfg.single) {
        report.rows.erase(report.rows.begin(), report.rows.end() - 1);
    }
    emit_to(cfg.common, out, [&](std::ostream& os) { io::write_count(os, report, format); });
    return kOk;
}

// ---- verify ------------------------------------------------------------

struct VerifyConfig {
    CommonConfig common;
    long long max_N = 16;
    int max_kl = 6;
    long long max_s = 18;
    int max_n = 8;
    bool inject_fault = false;
};

struct Check {
    std::string name;
    std::uint64_t comparisons = 0;
    std::optional<std::string> failure;

    void compare(const BigCount& got, const BigCount& want, const std::string& where) {
        ++comparisons;
        if (!failure && got != want) {
            failure = where + " got " + got.to_string() + " expected " + want.to_string();
        }
    }
};

std::string tuple(long long N, int k, int l, long long s) {
    std::ostringstream os;
    os << "(N=" << N << ",k=" << k << ",l=" << l << ",s=" << s << ")";
    return os.str();
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.max_N < 0 || cfg.max_kl < 0 || cfg.max_s < 0 || cfg.max_n < 2) {
        throw UsageError("verify caps must be nonnegative and --max-n >= 2");
    }
    const FillOptions opts = fill_options(cfg.common, err);
    bool fault_pending = cfg.inject_fault;
    auto maybe_corrupt = [&](BigCount v) {
        if (fault_pending) {
            fault_pending = false;
            v += BigCount(1);
        }
        return v;
    };

    std::vector<Check> checks;

    // Ragged table against the corank definition.
    {
        Check c{"ragged P(N,k,l,s) vs brute force", 0, std::nullopt};
        RaggedSlabTable table(RaggedShape{cfg.max_kl, cfg.max_kl, cfg.max_N}, opts.memory_budget);
        table.fill(opts, [&](const SlabView& slab) {
            const int l = slab.l();
            for (int k = 0; k <= cfg.max_kl; ++k) {
                for (long long N = 0; N <= cfg.max_N; ++N) {
                    for (long long s = -1; s <= cfg.max_s; ++s) {
                        c.compare(maybe_corrupt(slab.at(k, N, s)), oracle::p_nkls_bruteforce(N, k, l, s),
                                  tuple(N, k, l, s));
                    }
                }
            }
        });
        checks.push_back(std::move(c));
    }
    // Rectangular table against the same definition.
    {
        Check c{"rectangular P(N,k,l,s) vs brute force", 0, std::nullopt};
        RectangularTable table(RectShape{cfg.max_N, cfg.max_kl, cfg.max_kl}, opts.memory_budget);
        table.fill(opts, [&](const RectSlabView& slab) {
            const int l = slab.l();
            for (int k = 0; k <= cfg.max_kl; ++k) {
                for (long long N = 0; N <= cfg.max_N; ++N) {
                    for (long long s = 0; s <= cfg.max_s; ++s) {
                        c.compare(slab.at(k, N, s), oracle::p_nkls_bruteforce(N, k, l, s), tuple(N, k, l, s));
                    }
                }
            }
        });
        checks.push_back(std::move(c));
    }
    // Helper bounds: zero below m'(N,l), saturated from M'(N,k).
    {
        Check c{"helper bounds m'(N,l) and M'(N,k)", 0, std::nullopt};
        for (long long N = 1; N <= cfg.max_N; ++N) {
            for (int k = 1; k <= cfg.max_kl; ++k) {
                for (int l = 1; l <= cfg.max_kl; ++l) {
                    for (long long s = 0; s < m_lower(N, l); ++s) {
                        c.compare(oracle::p_nkls_bruteforce(N, k, l, s), BigCount(0), tuple(N, k, l, s));
                    }
                    const BigCount full = oracle::p_nkl_bruteforce(N, k, l);
                    for (long long s = m_upper(N, k); s <= std::max(cfg.max_s, m_upper(N, k)); ++s) {
                        c.compare(oracle::p_nkls_bruteforce(N, k, l, s), full, tuple(N, k, l, s));
                    }
                }
            }
        }
        checks.push_back(std::move(c));
    }
    {
        Check c{"three-variate P(N,k,l) vs brute force", 0, std::nullopt};
        for (long long N = 0; N <= cfg.max_N; ++N) {
            for (int k = 0; k <= cfg.max_kl; ++k) {
                for (int l = 0; l <= cfg.max_kl; ++l) {
                    c.compare(p_nkl_dp(N, k, l), oracle::p_nkl_bruteforce(N, k, l), tuple(N, k, l, -1));
                }
            }
        }
        checks.push_back(std::move(c));
    }
    // Degree-sequence counts.
    {
        Check c{"D(n), E(n) vs brute force", 0, std::nullopt};
        const CountReport report = count_all_improved(cfg.max_n, opts);
        if (const auto problem = check_report_identities(report)) {
            c.failure = *problem;
        }
        for (const CountRow& row : report.rows) {
            c.compare(row.D, oracle::d_bruteforce(row.n), "D(" + std::to_string(row.n) + ")");
            c.compare(e_count(row.n), oracle::e_bruteforce(row.n), "E(" + std::to_string(row.n) + ")");
        }
        checks.push_back(std::move(c));
    }

    bool ok = true;
    for (const Check& c : checks) {
        if (c.failure) {
            ok = false;
            out << "FAIL " << c.name << ": first mismatch " << *c.failure << '\n';
        } else {
            out << "PASS " << c.name << " (" << c.comparisons << " comparisons)\n";
        }
    }
    out << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
    return ok ? kOk : kMismatch;
}

// ---- table -------------------------------------------------------------

struct TableConfig {
    CommonConfig common;
    std::vector<int> ns;
    bool check_paper = false;
};

int cmd_table(const TableConfig& cfg, std::ostream& out, std::ostream& err) {
    const io::Format format = parse_format(cfg.common.format);
    std::vector<int> ns = cfg.ns;
    if (ns.empty()) {
        for (const auto& row : reference::kPublishedAllocTable) {
            ns.push_back(row.n);
        }
    }
    for (const int n : ns) {
        if (n < 4) {
            throw UsageError("table needs every n >= 4");
        }
    }
    const auto rows = alloc_table(ns);
    emit_to(cfg.common, out, [&](std::ostream& os) { io::write_alloc(os, rows, format); });
    if (!cfg.check_paper) {
        return kOk;
    }
    int mismatches = 0;
    for (const AllocRow& row : rows) {
        const auto it = std::find_if(reference::kPublishedAllocTable.begin(), reference::kPublishedAllocTable.end(),
                                     [&](const auto& ref) { return ref.n == row.n; });
        if (it == reference::kPublishedAllocTable.end()) {
            err << "n=" << row.n << ": no published row to compare against\n";
            continue;
        }
        if (row.f1.to_string() != it->f1 || row.f4.to_string() != it->f4 || row.ratio != it->ratio) {
            ++mismatches;
            err << "n=" << row.n << ": computed " << row.f1 << ',' << row.f4 << ',' << row.ratio << " published "
                << it->f1 << ',' << it->f4 << ',' << it->ratio << '\n';
        }
    }
    return mismatches == 0 ? kOk : kMismatch;
}

// ---- estimate ----------------------------------------------------------

struct EstimateConfig {
    CommonConfig common;
    int n = 0;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::vector<std::string> conjectures;
    double burns_c = 1.0;
    double scale_c = 1.0;
};

int cmd_estimate(const EstimateConfig& cfg, std::ostream& out, std::ostream&) {
    if (cfg.n < 2) {
        throw UsageError("estimate needs --n >= 2");
    }
    if (cfg.samples < 1) {
        throw UsageError("estimate needs --samples >= 1");
    }
    const io::Format format = parse_format(cfg.common.format);
    EstimateOptions opts;
    opts.threads = resolve_thread_flag(cfg.common);
    opts.params.burns_c = cfg.burns_c;
    opts.params.scale_c = cfg.scale_c;
    for (const std::string& name : cfg.conjectures) {
        const auto c = parse_conjecture(name);
        if (!c) {
            throw UsageError("unknown conjecture: " + name);
        }
        opts.conjectures.push_back(*c);
    }
    const EstimateReport report = estimate_ratio(cfg.n, cfg.samples, cfg.seed, opts);
    emit_to(cfg.common, out, [&](std::ostream& os) { io::write_estimate(os, report, format); });
    return kOk;
}

// ---- pnkls -------------------------------------------------------------

struct PnklsConfig {
    CommonConfig common;
    long long N = 0;
    int k = 0;
    int l = 0;
    long long s = 0;
    bool both = false;
};

int cmd_pnkls(const PnklsConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.k < 0 || cfg.l < 0) {
        throw UsageError("pnkls needs k, l >= 0");
    }
    const FillOptions opts = fill_options(cfg.common, err);
    if (cfg.both) {
        const BigCount brute = oracle::p_nkls_bruteforce(cfg.N, cfg.k, cfg.l, cfg.s);
        const BigCount dp = p_nkls_dp(cfg.N, cfg.k, cfg.l, cfg.s, opts);
        out << "oracle " << brute << "\ndp " << dp << '\n';
        if (brute != dp) {
            err << "oracle and dynamic program disagree\n";
            return kMismatch;
        }
        return kOk;
    }
    const BigCount value = cfg.N <= kOracleMaxN ? oracle::p_nkls_bruteforce(cfg.N, cfg.k, cfg.l, cfg.s)
                                                : p_nkls_dp(cfg.N, cfg.k, cfg.l, cfg.s, opts);
    out << value << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of graphical degree sequences"};
    app.name("gdseq");
    app.require_subcommand(1);

    CountConfig count_cfg;
    auto* count = app.add_subcommand("count", "Count zero-free graphical degree sequences up to length n");
    count->add_option("--n", count_cfg.n, "Largest sequence length")->required();
    count->add_option("--algorithm", count_cfg.algorithm, "improved or baseline")->capture_default_str();
    count->add_flag("--single", count_cfg.single, "Only print the row for n");
    add_common(count, count_cfg.common, true);

    VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "Check the dynamic programs against brute force");
    verify->add_option("--max-N", verify_cfg.max_N, "Largest N in the P(N,k,l,s) sweep")->capture_default_str();
    verify->add_option("--max-kl", verify_cfg.max_kl, "Largest k and l in the sweep")->capture_default_str();
    verify->add_option("--max-s", verify_cfg.max_s, "Largest s in the sweep")->capture_default_str();
    verify->add_option("--max-n", verify_cfg.max_n, "Largest length for D(n) checks")->capture_default_str();
    verify->add_flag("--inject-fault", verify_cfg.inject_fault, "Corrupt one value (negative control)");
    add_common(verify, verify_cfg.common, true);

    TableConfig table_cfg;
    auto* table = app.add_subcommand("table", "Allocation sizes of the rectangular and ragged tables");
    table->add_option("--n", table_cfg.ns, "Lengths (repeat or comma-separate)")->delimiter(',');
    table->add_flag("--check-paper", table_cfg.check_paper, "Compare against the stored reference table");
    add_common(table, table_cfg.common, false);

    EstimateConfig est_cfg;
    auto* estimate = app.add_subcommand("estimate", "Monte-Carlo estimate of D(n)/E(n)");
    estimate->add_option("--n", est_cfg.n, "Sequence length")->required();
    estimate->add_option("--samples", est_cfg.samples, "Number of samples")->capture_default_str();
    estimate->add_option("--seed", est_cfg.seed, "RNG seed")->capture_default_str();
    estimate->add_option("--conjecture", est_cfg.conjectures,
                         "Asymptotic form to evaluate: burns-lower, burns-upper, power-log, pittel-form, g-ratio")
        ->delimiter(',');
    estimate->add_option("--burns-c", est_cfg.burns_c, "Exponent c of the log factor in burns-upper")
        ->capture_default_str();
    estimate->add_option("--scale-c", est_cfg.scale_c, "Constant factor c in power-log")->capture_default_str();
    add_common(estimate, est_cfg.common, true);

    PnklsConfig pnkls_cfg;
    auto* pnkls = app.add_subcommand("pnkls", "Print a single P(N,k,l,s)");
    pnkls->add_option("N", pnkls_cfg.N)->required();
    pnkls->add_option("k", pnkls_cfg.k)->required();
    pnkls->add_option("l", pnkls_cfg.l)->required();
    pnkls->add_option("s", pnkls_cfg.s)->required();
    pnkls->add_flag("--both", pnkls_cfg.both, "Compute with oracle and dynamic program and compare");
    add_common(pnkls, pnkls_cfg.common, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "gdseq: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (count->parsed()) {
            return cmd_count(count_cfg, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_cfg, out, err);
        }
        if (table->parsed()) {
            return cmd_table(table_cfg, out, err);
        }
        if (estimate->parsed()) {
            return cmd_estimate(est_cfg, out, err);
        }
        if (pnkls->parsed()) {
            return cmd_pnkls(pnkls_cfg, out, err);
        }
    } catch (const UsageError& e) {
        err << "gdseq: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "gdseq: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        err << "gdseq: out of memory budget: " << e.what() << '\n';
        return kRuntimeFailure;
    } catch (const std::exception& e) {
        err << "gdseq: " << e.what() << '\n';
        return kRuntimeFailure;
    }
    return kUsage;
}

}  // namespace gdseq::cli
