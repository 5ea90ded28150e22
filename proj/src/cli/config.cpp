#include "fluxqm/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fluxqm/errors.hpp"

namespace fluxqm::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, const std::string& key) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) throw UsageError("config: '" + key + "' is not a number: " + std::string(text));
    return v;
}

}  // namespace

RunConfig RunConfig::parse(std::string_view text, std::string_view origin) {
    RunConfig config;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError(std::string(origin) + ":" + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) throw UsageError(std::string(origin) + ":" + std::to_string(line_no) + ": empty key");
        config.values_[key] = std::string(trim(line.substr(eq + 1)));
    }
    return config;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.string());
}

void RunConfig::set(std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw UsageError("--set expects key=value, got " + std::string(assignment));
    const std::string key(trim(assignment.substr(0, eq)));
    if (key.empty()) throw UsageError("--set: empty key");
    values_[key] = std::string(trim(assignment.substr(eq + 1)));
}

std::string RunConfig::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_double(it->second, key);
}

std::int64_t RunConfig::get_int(const std::string& key, std::int64_t fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const double v = parse_double(it->second, key);
    if (!(std::fabs(v) < 9.0e15) || v != std::trunc(v)) {
        throw UsageError("config: '" + key + "' must be an integer, got " + it->second);
    }
    return static_cast<std::int64_t>(v);
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw UsageError("config: '" + key + "' must be true or false");
}

std::vector<int> RunConfig::get_int_list(const std::string& key, const std::vector<int>& fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<int> out;
    std::string_view rest = it->second;
    while (true) {
        const auto sep = rest.find(';');
        const std::string_view item = trim(rest.substr(0, sep));
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw UsageError("config: '" + key + "' must be a ';'-separated integer list");
        }
        out.push_back(v);
        if (sep == std::string_view::npos) break;
        rest = rest.substr(sep + 1);
    }
    return out;
}

void RunConfig::require_known(std::span<const std::string_view> allowed) const {
    for (const auto& [key, value] : values_) {
        if (key.rfind("scan.", 0) == 0) continue;
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw UsageError("config: unknown key '" + key + "' for this command");
        }
    }
}

std::vector<double> ScanAxis::points() const {
    std::vector<double> out(steps);
    for (int i = 0; i < steps; ++i) {
        out[i] = steps == 1 ? min : min + (max - min) * static_cast<double>(i) / (steps - 1);
    }
    if (steps > 1) out.back() = max;
    return out;
}

std::optional<ScanAxis> scan_axis(const RunConfig& config, std::span<const std::string_view> allowed) {
    for (const auto& [key, value] : config.values()) {
        if (key.rfind("scan.", 0) == 0 && key != "scan.param" && key != "scan.min" && key != "scan.max" &&
            key != "scan.steps") {
            throw UsageError("config: unknown key '" + key + "'");
        }
    }
    if (!config.has("scan.param")) {
        if (config.has("scan.min") || config.has("scan.max") || config.has("scan.steps")) {
            throw UsageError("config: scan.min/max/steps given without scan.param");
        }
        return std::nullopt;
    }
    ScanAxis axis;
    axis.param = config.get_string("scan.param", "");
    if (std::find(allowed.begin(), allowed.end(), axis.param) == allowed.end()) {
        throw UsageError("config: scan.param '" + axis.param + "' is not a parameter of this command");
    }
    if (!config.has("scan.min") || !config.has("scan.max")) throw UsageError("config: scan needs scan.min and scan.max");
    axis.min = config.get_double("scan.min", 0.0);
    axis.max = config.get_double("scan.max", 0.0);
    const auto steps = config.get_int("scan.steps", 1);
    if (steps < 1 || steps > 10'000'000) throw UsageError("config: scan.steps must be >= 1");
    axis.steps = static_cast<int>(steps);
    if (!(axis.min <= axis.max)) throw UsageError("config: scan.min must not exceed scan.max");
    return axis;
}

}  // namespace fluxqm::cli
