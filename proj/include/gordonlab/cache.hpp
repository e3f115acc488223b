#pragma once

#include "gordonlab/json_io.hpp"
#include "gordonlab/series.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace gordonlab {

inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

struct SeriesCacheKey {
    std::string which;
    int r = 0;
    int i = 0;
    int trunc = 0;
    std::string interp;  // "" when the series does not depend on it

    std::string filename() const {
        std::ostringstream name;
        name << which << "_r" << r << "_i" << i << "_n" << trunc;
        if (!interp.empty()) name << "_" << interp;
        name << ".json";
        return name.str();
    }
};

/// Directory of cached series, one JSON file per key. Entries carry a
/// checksum over the coefficient payload; a stale or corrupted entry is
/// treated as a miss. GORDONLAB_CACHE overrides the configured directory.
class SeriesCache {
public:
    explicit SeriesCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        if (const char* env = std::getenv("GORDONLAB_CACHE")) dir_ = env;
    }

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<TruncatedSeries> load(const SeriesCacheKey& key) const {
        std::ifstream in(dir_ / key.filename());
        if (!in) return std::nullopt;
        try {
            Json j = Json::parse(in);
            if (j.at("which") != key.which || j.at("r") != key.r || j.at("i") != key.i ||
                j.at("trunc") != key.trunc || j.at("interp") != key.interp)
                return std::nullopt;
            TruncatedSeries s = series_from_json(j);
            if (j.at("checksum").get<std::string>() != checksum(s)) return std::nullopt;
            return s;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void store(const SeriesCacheKey& key, const TruncatedSeries& s) const {
        std::filesystem::create_directories(dir_);
        Json j{{"which", key.which}, {"r", key.r},         {"i", key.i},
               {"trunc", key.trunc}, {"interp", key.interp}};
        Json payload = series_to_json(s);
        j["coeffs"] = payload["coeffs"];
        j["checksum"] = checksum(s);

        // Write to a temporary then rename, so a torn write never leaves a
        // half-entry behind.
        std::filesystem::path final_path = dir_ / key.filename();
        std::filesystem::path tmp_path = final_path;
        tmp_path += ".tmp";
        {
            std::ofstream out(tmp_path);
            out << j.dump(2) << '\n';
        }
        std::filesystem::rename(tmp_path, final_path);
    }

    static std::string checksum(const TruncatedSeries& s) {
        std::ostringstream payload;
        payload << s.trunc();
        for (const Integer& c : s.coeffs()) payload << ',' << c;
        std::ostringstream hex;
        hex << std::hex << fnv1a(payload.str());
        return hex.str();
    }

private:
    std::filesystem::path dir_;
};

}  // namespace gordonlab
