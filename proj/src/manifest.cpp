#include "rumorcast/manifest.hpp"

#include <cstdio>
#include <fstream>

namespace rumorcast {

using nlohmann::json;

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string() + " for digest");
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001B3ULL;
        }
        if (got < static_cast<std::streamsize>(sizeof(buf))) break;
    }
    char hex[32];
    std::snprintf(hex, sizeof(hex), "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

void write_manifest(const std::filesystem::path& path, const std::string& command,
                    const json& config, const std::vector<std::filesystem::path>& inputs) {
    json inputs_json = json::object();
    for (const auto& p : inputs) inputs_json[p.string()] = file_digest(p);

    json manifest{{"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
                  {"command", command},
                  {"config", config},
                  {"inputs", inputs_json}};

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest " + path.string());
    out << manifest.dump(2) << '\n';
}

}  // namespace rumorcast
