#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "gdseq/alloc_model.hpp"
#include "gdseq/counting.hpp"
#include "gdseq/estimator.hpp"

// Machine-readable output. CSV files carry a fixed header line; JSON lines
// use the same field names. Big integers are written as decimal strings in
// both formats so no precision is lost.
namespace gdseq::io {

enum class Format { Csv, JsonLines };

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

void write_count(std::ostream& os, const CountReport& report, Format format);
CountReport read_count(std::istream& is, Format format);

void write_alloc(std::ostream& os, const std::vector<AllocRow>& rows, Format format);
std::vector<AllocRow> read_alloc(std::istream& is, Format format);

void write_estimate(std::ostream& os, const EstimateReport& report, Format format);
EstimateReport read_estimate(std::istream& is, Format format);

}  // namespace gdseq::io
