#pragma once

// Command-line front end. parse_args() builds a RunConfig from argv (plus an
// optional key=value config file); run() executes it and writes one artifact.
//
// Exit codes: 0 success, 1 invalid parameters or domain violations, 2 I/O.

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwh::cli {

enum class Command { spectrum, rep_check, truncate, cs_perelomov, cs_bg, cs_grassmann, measure, bargmann_growth, schwarz };
enum class Format { json, csv };

const char* command_name(Command command);

struct RunConfig {
    Command command = Command::spectrum;
    std::vector<std::string> kappas;  // "p/q" literals
    std::vector<long> ells;           // alternative: kappa_i = 1/ell_i
    double phi = 0.0;
    std::complex<double> z{};
    std::optional<std::complex<double>> w;  // schwarz: f = normalized BG state at w
    std::size_t window = 0;
    std::size_t s = 0;
    std::size_t nmax = 0;
    std::size_t levels = 0;
    double tail_tolerance = 1e-14;
    bool normalize = false;
    std::string kind = "bg";  // measure: bg | perelomov
    bool allow_signed = false;
    double grid_radius = 3.0;
    std::size_t grid_radial = 13;
    std::size_t grid_angular = 16;
    std::string output;  // empty: stdout
    Format format = Format::json;
};

// Bad flags, unreadable config, malformed values.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& what, int exit_code) : std::runtime_error(what), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

// "1+0.5i", "-2i", "3", "0.5-1e-3i".
std::complex<double> parse_complex(const std::string& text);

// Throws UsageError. Help requests throw UsageError with exit code 0 after
// printing to `out`.
RunConfig parse_args(int argc, const char* const* argv, std::ostream& out);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with error reporting; the body of main().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pwh::cli
