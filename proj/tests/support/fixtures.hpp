#pragma once

#include <filesystem>
#include <string>

#include "ca2oo/pipeline.hpp"

namespace testsupport {

std::filesystem::path source_dir();
std::filesystem::path corpus_path();
std::filesystem::path golden_dir();
std::filesystem::path cli_path();

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

const std::string& corpus_text();
/// Full pipeline over the checked-in corpus, computed once.
const ca2oo::PipelineResult& corpus_result();

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& tag);

}  // namespace testsupport
