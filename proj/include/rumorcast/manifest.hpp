#pragma once

// Run manifests: resolved configuration plus input digests, written beside
// every CLI output so artifacts are reproducible from the manifest alone.
// No timestamps — reruns with identical inputs must be byte-identical.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace rumorcast {

inline constexpr const char* kToolName = "rumorcast";
inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a over the file bytes, hex-encoded.
std::string file_digest(const std::filesystem::path& path);

void write_manifest(const std::filesystem::path& path, const std::string& command,
                    const nlohmann::json& config,
                    const std::vector<std::filesystem::path>& inputs);

}  // namespace rumorcast
