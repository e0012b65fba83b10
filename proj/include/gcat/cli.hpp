#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace gcat::cli {

/// Exit codes: 0 yes/success, 1 no/failure, 2 unknown/budget, 3 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the example complexes, maps, bundles and facts files; returns the paths.
std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir);

}  // namespace gcat::cli
