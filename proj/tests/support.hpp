#ifndef EPGRAPH_TESTS_SUPPORT_HPP
#define EPGRAPH_TESTS_SUPPORT_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(EPGRAPH_FIXTURE_DIR) + "/" + name;
}

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout only
};

/// Runs the CLI with the given argument string; stderr is left on the
/// terminal so failures stay visible in test logs.
inline CliResult run_cli(const std::string& args) {
    const std::string command = std::string(EPGRAPH_CLI_PATH) + " " + args;
    CliResult result;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

/// Writes content to a fresh file under the test temp directory.
inline std::string write_temp_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "epgraph_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

} // namespace testsupport

#endif
