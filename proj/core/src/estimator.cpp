#include "gdseq/estimator.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gdseq/ensemble.hpp"
#include "gdseq/partition.hpp"
#include "gdseq/thread_pool.hpp"

namespace gdseq {

namespace {

constexpr std::array<std::pair<Conjecture, std::string_view>, 5> kNames{{
    {Conjecture::BurnsLower, "burns-lower"},
    {Conjecture::BurnsUpper, "burns-upper"},
    {Conjecture::PowerLog, "power-log"},
    {Conjecture::PittelForm, "pittel-form"},
    {Conjecture::GRatio, "g-ratio"},
}};

Rng stream_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

}  // namespace

std::string_view conjecture_name(Conjecture which) {
    for (const auto& [c, name] : kNames) {
        if (c == which) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Conjecture> parse_conjecture(std::string_view name) {
    for (const auto& [c, n] : kNames) {
        if (n == name) {
            return c;
        }
    }
    return std::nullopt;
}

std::vector<Conjecture> all_conjectures() {
    std::vector<Conjecture> out;
    for (const auto& entry : kNames) {
        out.push_back(entry.first);
    }
    return out;
}

double conjecture_eval(long long n, Conjecture which, const ConjectureParams& params) {
    if (n < 1) {
        throw std::invalid_argument("conjecture_eval needs n >= 1");
    }
    const double x = static_cast<double>(n);
    const double ln_n = std::log(x);
    const bool needs_loglog = which == Conjecture::PittelForm || which == Conjecture::GRatio;
    if (needs_loglog && n <= 2) {
        throw std::invalid_argument("form needs ln ln n > 0 (n >= 3)");
    }
    const bool needs_log = which == Conjecture::BurnsUpper || which == Conjecture::PowerLog;
    if (needs_log && n < 2) {
        throw std::invalid_argument("form needs ln n > 0 (n >= 2)");
    }
    switch (which) {
        case Conjecture::BurnsLower:
            return 2.0 * x - std::log2(x);
        case Conjecture::BurnsUpper:
            return 2.0 * x - params.burns_c * std::log2(ln_n) - 0.5 * std::log2(x);
        case Conjecture::PowerLog:
            return std::log2(params.scale_c) + 2.0 * x - 1.5 * std::log2(ln_n) - 0.5 * std::log2(x);
        case Conjecture::PittelForm:
            return 2.0 * x - 0.7 * (ln_n / std::log(ln_n)) / std::numbers::ln2 -
                   std::log2(8.0 * std::sqrt(std::numbers::pi * x));
        case Conjecture::GRatio:
            return -0.3 * (ln_n / std::log(ln_n)) / std::numbers::ln2;
    }
    throw std::invalid_argument("unknown conjecture");
}

EstimateReport estimate_ratio(int n, std::uint64_t samples, std::uint64_t seed,
                              const EstimateOptions& options) {
    if (n < 2) {
        throw std::invalid_argument("estimate needs n >= 2");
    }
    if (samples < 1) {
        throw std::invalid_argument("estimate needs at least one sample");
    }
    const EnsembleTable table(n);
    const std::uint64_t streams = (samples + kSamplesPerStream - 1) / kSamplesPerStream;
    std::vector<std::uint64_t> stream_hits(streams, 0);

    ThreadPool pool(options.threads);
    pool.parallel_for(0, static_cast<std::int64_t>(streams), [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) {
            const auto stream = static_cast<std::uint64_t>(i);
            Rng rng = stream_rng(seed, stream);
            const std::uint64_t first = stream * kSamplesPerStream;
            const std::uint64_t count = std::min(kSamplesPerStream, samples - first);
            std::uint64_t hits = 0;
            for (std::uint64_t t = 0; t < count; ++t) {
                if (is_graphical(table.sample(rng))) {
                    ++hits;
                }
            }
            stream_hits[stream] = hits;
        }
    });

    EstimateReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    for (const std::uint64_t h : stream_hits) {
        report.hits += h;
    }
    report.ratio = static_cast<double>(report.hits) / static_cast<double>(samples);
    report.stderr_ = std::sqrt(report.ratio * (1.0 - report.ratio) / static_cast<double>(samples));
    for (const Conjecture c : options.conjectures) {
        report.conjecture_values.emplace_back(std::string(conjecture_name(c)),
                                              conjecture_eval(n, c, options.params));
    }
    return report;
}

BigCount unrestricted_p(long long N) {
    if (N < 0) {
        return BigCount(0);
    }
    std::vector<BigCount> p(static_cast<std::size_t>(N) + 1);
    p[0] = 1;
    for (long long m = 1; m <= N; ++m) {
        BigCount plus;
        BigCount minus;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            if (g1 > m) {
                break;
            }
            BigCount term = p[static_cast<std::size_t>(m - g1)];
            const long long g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) {
                term += p[static_cast<std::size_t>(m - g2)];
            }
            (k % 2 == 1 ? plus : minus) += term;
        }
        p[static_cast<std::size_t>(m)] = plus - minus;
    }
    return p[static_cast<std::size_t>(N)];
}

}  // namespace gdseq
