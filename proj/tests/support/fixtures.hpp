#pragma once

#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

inline std::string src_path(const std::string& relative) {
    return std::string(ODSL_SOURCE_DIR) + "/" + relative;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("fixture missing: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil
