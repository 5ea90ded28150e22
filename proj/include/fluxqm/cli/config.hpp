#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fluxqm::cli {

/// Flat key = value run configuration. Lines starting with '#' are comments.
/// Values stay text until a typed getter reads them; every parse failure is a
/// UsageError.
class RunConfig {
public:
    static RunConfig parse(std::string_view text, std::string_view origin = "<config>");
    static RunConfig load(const std::filesystem::path& path);

    /// Applies a `key=value` override.
    void set(std::string_view assignment);
    void set(const std::string& key, const std::string& value) { values_[key] = value; }

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::map<std::string, std::string>& values() const { return values_; }

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    /// Accepts integral decimal text ("3" or "3.0").
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    /// Semicolon-separated integers, e.g. "-1;0;1".
    std::vector<int> get_int_list(const std::string& key, const std::vector<int>& fallback) const;

    /// Throws UsageError naming the first key outside `allowed` (scan.* keys
    /// are always allowed).
    void require_known(std::span<const std::string_view> allowed) const;

private:
    std::map<std::string, std::string> values_;
};

struct ScanAxis {
    std::string param;
    double min = 0.0;
    double max = 0.0;
    int steps = 1;

    /// min + i (max - min)/(steps - 1); a single point at min when steps == 1.
    std::vector<double> points() const;
};

/// Reads scan.param / scan.min / scan.max / scan.steps. Returns nullopt when
/// scan.param is absent; throws UsageError on steps < 1, min > max, or a
/// parameter not in `allowed`.
std::optional<ScanAxis> scan_axis(const RunConfig& config, std::span<const std::string_view> allowed);

}  // namespace fluxqm::cli
