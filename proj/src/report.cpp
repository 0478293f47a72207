#include "fermat/report.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fermat::cli {

namespace {

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

} // namespace

json stripped_report(const json& report) {
    json out = report;
    out.erase("timing_ms");
    out.erase("content_hash");
    return out;
}

std::string dump_report(const json& report) {
    // nlohmann keeps object keys sorted by default, so this is canonical.
    return report.dump(2) + "\n";
}

std::string content_hash(const json& report) {
    return "fnv1a64:" + hex64(fnv1a64(dump_report(stripped_report(report))));
}

void finalize_report(json& report, long long elapsed_ms) {
    report["timing_ms"] = std::to_string(elapsed_ms);
    report["content_hash"] = content_hash(report);
}

std::string cache_key(const std::string& command, const json& inputs) {
    json key_doc;
    key_doc["command"] = command;
    key_doc["inputs"] = inputs;
    key_doc["version"] = artifact_version;
    return hex64(fnv1a64(dump_report(key_doc)));
}

namespace {

std::filesystem::path cache_path(const std::string& cache_dir,
                                 const std::string& key) {
    return std::filesystem::path(cache_dir) / (key + ".json");
}

} // namespace

std::optional<json> cache_load(const std::string& cache_dir,
                               const std::string& key) {
    if (cache_dir.empty()) return std::nullopt;
    std::ifstream in(cache_path(cache_dir, key));
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    json report = json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false);
    if (report.is_discarded() || !report.is_object()) return std::nullopt;
    // A stale or corrupted entry must read as a miss, never as an answer.
    auto stored = report.find("content_hash");
    if (stored == report.end() || !stored->is_string() ||
        stored->get<std::string>() != content_hash(report))
        return std::nullopt;
    return report;
}

void cache_store(const std::string& cache_dir, const std::string& key,
                 const json& report) {
    if (cache_dir.empty()) return;
    std::filesystem::create_directories(cache_dir);
    const auto target = cache_path(cache_dir, key);
    auto temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::trunc);
        out << dump_report(report);
        if (!out) {
            std::filesystem::remove(temp);
            return;
        }
    }
    std::filesystem::rename(temp, target);
}

} // namespace fermat::cli
