#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace modgal::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kNotFound = 3;
inline constexpr int kIo = 4;
inline constexpr int kVerificationFailed = 5;
} // namespace exit_code

enum class Format { Text, Json };

struct RunConfig {
    std::string command;
    std::uint64_t weight = 0;
    std::uint64_t ell = 0;
    std::uint64_t terms = 100;
    std::uint64_t pmax = 1000;
    std::uint64_t pbound = 200;
    std::uint64_t extended = 1000;
    std::string poly_file;
    std::filesystem::path data_dir;
    Format format = Format::Text;
    bool full = false;
};

/// Location of the bundled polynomial files for (k, ell).
std::filesystem::path bundled_poly_path(const std::filesystem::path& data_dir, std::uint64_t k, std::uint64_t ell);

int cmd_qexp(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_twist_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_poly(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_screen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_tables(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace modgal::cli
