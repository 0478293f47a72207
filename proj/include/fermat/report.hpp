#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace fermat::cli {

using json = nlohmann::json;

inline constexpr const char* artifact_version = "0.1.0";
inline constexpr const char* report_schema = "1";

/* Reports are single JSON documents.  Every integer value is rendered as a
 * decimal string so 64-bit JSON consumers never truncate; object keys are
 * serialized sorted, so the dump is byte-stable.  timing_ms is the only
 * field allowed to differ between runs with equal inputs; content_hash
 * covers everything except itself and timing_ms.
 */

// FNV-1a (64-bit) over the canonical dump with timing_ms/content_hash
// removed, rendered as "fnv1a64:<hex>".
std::string content_hash(const json& report);

// Stamps timing_ms and content_hash.
void finalize_report(json& report, long long elapsed_ms);

// Serialized form used everywhere (2-space indent, trailing newline).
std::string dump_report(const json& report);

// The report with volatile fields removed: the comparison key for
// determinism checks.
json stripped_report(const json& report);

// Cache key for (command, canonical inputs, artifact version).
std::string cache_key(const std::string& command, const json& inputs);

/* Plain-file cache, one file per key.  Loads verify the stored content hash
 * and miss on any corruption.  Stores are atomic (temp file + rename);
 * a single process is assumed to own the directory.
 */
std::optional<json> cache_load(const std::string& cache_dir,
                               const std::string& key);
void cache_store(const std::string& cache_dir, const std::string& key,
                 const json& report);

} // namespace fermat::cli
