#include "fixtures.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace testsupport {

std::filesystem::path source_dir() { return CA2OO_SOURCE_DIR; }
std::filesystem::path corpus_path() { return source_dir() / "corpus" / "superstationery.carm"; }
std::filesystem::path golden_dir() { return source_dir() / "tests" / "golden"; }
std::filesystem::path cli_path() { return CA2OO_CLI_PATH; }

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

const std::string& corpus_text() {
    static const std::string text = read_text(corpus_path());
    return text;
}

const ca2oo::PipelineResult& corpus_result() {
    static const ca2oo::PipelineResult result = ca2oo::run_pipeline(corpus_text(), {std::string("SALE")});
    return result;
}

std::filesystem::path scratch_dir(const std::string& tag) {
    std::random_device rd;
    const auto dir = std::filesystem::temp_directory_path() / ("ca2oo-" + tag + "-" + std::to_string(rd()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testsupport
