#include "gdseq/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace gdseq::io {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::vector<std::vector<std::string>> read_csv(std::istream& is, const std::vector<std::string>& fixed_prefix) {
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("missing CSV header");
    }
    const auto header = split_csv(line);
    if (header.size() < fixed_prefix.size() ||
        !std::equal(fixed_prefix.begin(), fixed_prefix.end(), header.begin())) {
        throw std::runtime_error("unexpected CSV header: " + line);
    }
    std::vector<std::vector<std::string>> rows{header};
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        auto fields = split_csv(line);
        if (fields.size() != header.size()) {
            throw std::runtime_error("CSV row has wrong field count: " + line);
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

long long parse_int(const std::string& s) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("not an integer: " + s);
    }
    return v;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("not an unsigned integer: " + s);
    }
    return v;
}

double parse_double(const std::string& s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::runtime_error("not a number: " + s);
    }
    return v;
}

std::vector<json> read_json_lines(std::istream& is) {
    std::vector<json> out;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty()) {
            out.push_back(json::parse(line));
        }
    }
    return out;
}

BigCount big(const json& j, const char* key) { return BigCount::from_string(j.at(key).get<std::string>()); }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::runtime_error("cannot format double");
    }
    return std::string(buf, ptr);
}

void write_count(std::ostream& os, const CountReport& report, Format format) {
    if (format == Format::Csv) {
        os << "n,L,H,D,D0\n";
        for (const CountRow& r : report.rows) {
            os << r.n << ',' << r.L << ',' << r.H << ',' << r.D << ',' << r.D0 << '\n';
        }
        return;
    }
    for (const CountRow& r : report.rows) {
        const json j{{"n", r.n},
                     {"L", r.L.to_string()},
                     {"H", r.H.to_string()},
                     {"D", r.D.to_string()},
                     {"D0", r.D0.to_string()}};
        os << j.dump() << '\n';
    }
}

CountReport read_count(std::istream& is, Format format) try {
    CountReport report;
    if (format == Format::Csv) {
        const auto rows = read_csv(is, {"n", "L", "H", "D", "D0"});
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& f = rows[i];
            report.rows.push_back(CountRow{static_cast<int>(parse_int(f[0])), BigCount::from_string(f[1]),
                                           BigCount::from_string(f[2]), BigCount::from_string(f[3]),
                                           BigCount::from_string(f[4])});
        }
        return report;
    }
    for (const json& j : read_json_lines(is)) {
        report.rows.push_back(CountRow{j.at("n").get<int>(), big(j, "L"), big(j, "H"), big(j, "D"), big(j, "D0")});
    }
    return report;
} catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed JSON report: ") + e.what());
}

void write_alloc(std::ostream& os, const std::vector<AllocRow>& rows, Format format) {
    if (format == Format::Csv) {
        os << "n,f1,f4,ratio\n";
        for (const AllocRow& r : rows) {
            os << r.n << ',' << r.f1 << ',' << r.f4 << ',' << r.ratio << '\n';
        }
        return;
    }
    for (const AllocRow& r : rows) {
        const json j{{"n", r.n}, {"f1", r.f1.to_string()}, {"f4", r.f4.to_string()}, {"ratio", r.ratio}};
        os << j.dump() << '\n';
    }
}

std::vector<AllocRow> read_alloc(std::istream& is, Format format) try {
    std::vector<AllocRow> out;
    if (format == Format::Csv) {
        const auto rows = read_csv(is, {"n", "f1", "f4", "ratio"});
        for (std::size_t i = 1; i < rows.size(); ++i) {
            const auto& f = rows[i];
            out.push_back(AllocRow{static_cast<int>(parse_int(f[0])), BigCount::from_string(f[1]),
                                   BigCount::from_string(f[2]), f[3]});
        }
        return out;
    }
    for (const json& j : read_json_lines(is)) {
        out.push_back(AllocRow{j.at("n").get<int>(), big(j, "f1"), big(j, "f4"), j.at("ratio").get<std::string>()});
    }
    return out;
} catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed JSON report: ") + e.what());
}

void write_estimate(std::ostream& os, const EstimateReport& r, Format format) {
    if (format == Format::Csv) {
        os << "n,samples,seed,hits,ratio,stderr";
        for (const auto& [name, value] : r.conjecture_values) {
            os << ',' << name;
        }
        os << '\n'
           << r.n << ',' << r.samples << ',' << r.seed << ',' << r.hits << ',' << format_double(r.ratio) << ','
           << format_double(r.stderr_);
        for (const auto& [name, value] : r.conjecture_values) {
            os << ',' << format_double(value);
        }
        os << '\n';
        return;
    }
    // Field order is fixed by hand so output stays byte-stable.
    std::ostringstream line;
    line << "{\"n\":" << r.n << ",\"samples\":" << r.samples << ",\"seed\":" << r.seed << ",\"hits\":" << r.hits
         << ",\"ratio\":" << format_double(r.ratio) << ",\"stderr\":" << format_double(r.stderr_);
    for (const auto& [name, value] : r.conjecture_values) {
        line << ',' << json(name).dump() << ':' << format_double(value);
    }
    line << "}\n";
    os << line.str();
}

EstimateReport read_estimate(std::istream& is, Format format) try {
    static const std::vector<std::string> fixed{"n", "samples", "seed", "hits", "ratio", "stderr"};
    EstimateReport r;
    if (format == Format::Csv) {
        const auto rows = read_csv(is, fixed);
        if (rows.size() != 2) {
            throw std::runtime_error("estimate CSV must hold exactly one data row");
        }
        const auto& h = rows[0];
        const auto& f = rows[1];
        r.n = static_cast<int>(parse_int(f[0]));
        r.samples = parse_u64(f[1]);
        r.seed = parse_u64(f[2]);
        r.hits = parse_u64(f[3]);
        r.ratio = parse_double(f[4]);
        r.stderr_ = parse_double(f[5]);
        for (std::size_t i = fixed.size(); i < h.size(); ++i) {
            r.conjecture_values.emplace_back(h[i], parse_double(f[i]));
        }
        return r;
    }
    std::string line;
    while (line.empty() && std::getline(is, line)) {
    }
    // ordered_json keeps the conjecture keys in document order.
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(line);
    r.n = j.at("n").get<int>();
    r.samples = j.at("samples").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.hits = j.at("hits").get<std::uint64_t>();
    r.ratio = j.at("ratio").get<double>();
    r.stderr_ = j.at("stderr").get<double>();
    for (const auto& [key, value] : j.items()) {
        if (std::find(fixed.begin(), fixed.end(), key) == fixed.end()) {
            r.conjecture_values.emplace_back(key, value.get<double>());
        }
    }
    return r;
} catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed JSON report: ") + e.what());
}

}  // namespace gdseq::io
