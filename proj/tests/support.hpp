#pragma once

#include "qbounds/additive_code.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(QBOUNDS_FIXTURE_DIR) / name;
}

inline std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline qbounds::AdditiveCode load_fixture(const std::string& name) {
    return qbounds::parse_code(read_text(fixture_path(name)));
}
