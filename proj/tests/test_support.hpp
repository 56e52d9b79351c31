#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "tracelink/corpus.hpp"

namespace testsupport {

inline std::filesystem::path data_dir() { return TRACELINK_TEST_DATA_DIR; }
inline std::filesystem::path repo_dir() { return TRACELINK_SOURCE_DIR; }

// Fresh scratch directory under the build tree.
inline std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::path(TRACELINK_BINARY_DIR) / "scratch" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write(const std::filesystem::path& path, const std::string& text) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << text;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline tracelink::corpus::Document doc(std::string id, tracelink::corpus::TermBag terms) {
    tracelink::corpus::Document d;
    d.artifact_id = std::move(id);
    d.terms = std::move(terms);
    return d;
}

}  // namespace testsupport
