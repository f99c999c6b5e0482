#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdseq/bigcount.hpp"

namespace gdseq {

/// Asymptotic forms that can be evaluated alongside an estimate. All are
/// returned as log2 of the expression; logarithms inside are natural.
enum class Conjecture {
    BurnsLower,   ///< 4^n / n
    BurnsUpper,   ///< 4^n / ((ln n)^c sqrt(n)), c = burns_c
    PowerLog,     ///< c 4^n / ((ln n)^1.5 sqrt(n)), c = scale_c
    PittelForm,   ///< 4^n exp(-0.7 ln n / ln ln n) / (8 sqrt(pi n))
    GRatio,       ///< exp(-0.3 ln N / ln ln N), the G(N)/P(N) form
};

struct ConjectureParams {
    double burns_c = 1.0;
    double scale_c = 1.0;
};

std::string_view conjecture_name(Conjecture which);
std::optional<Conjecture> parse_conjecture(std::string_view name);
std::vector<Conjecture> all_conjectures();

/// log2 of the selected form at n. Throws std::invalid_argument when n is too
/// small for the logarithms in the form (n <= 2 for the ln ln n forms).
double conjecture_eval(long long n, Conjecture which, const ConjectureParams& params = {});

struct EstimateReport {
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
    double ratio = 0.0;
    double stderr_ = 0.0;
    /// conjecture name -> log2 value, in the order requested
    std::vector<std::pair<std::string, double>> conjecture_values;

    friend bool operator==(const EstimateReport&, const EstimateReport&) = default;
};

struct EstimateOptions {
    unsigned threads = 0;
    std::vector<Conjecture> conjectures;
    ConjectureParams params;
};

/// Samples handled by one RNG stream. Stream i is seeded from (seed, i), so
/// results do not depend on how streams are spread over threads.
inline constexpr std::uint64_t kSamplesPerStream = 4096;

/// Monte-Carlo estimate of D(n)/E(n) from uniform samples of E(n).
EstimateReport estimate_ratio(int n, std::uint64_t samples, std::uint64_t seed,
                              const EstimateOptions& options = {});

/// Partition number p(N) by Euler's pentagonal recurrence.
BigCount unrestricted_p(long long N);

}  // namespace gdseq
