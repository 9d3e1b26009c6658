#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace tt_test {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(TT_FIXTURE_DIR) / name;
}

inline std::filesystem::path data_file(const std::string& name) {
    return std::filesystem::path(TT_DATA_DIR) / name;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// fresh scratch dir per test binary run
inline std::filesystem::path scratch_dir(const std::string& tag) {
    auto dir = std::filesystem::temp_directory_path() / ("techtrend_test_" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

// deterministic generator for property-style tests
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 16;
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    double uniform() { return static_cast<double>(next() % 1000000) / 1000000.0; }

private:
    std::uint64_t state_;
};

}  // namespace tt_test
