#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace tbwt::cli {

// exit codes shared by all subcommands
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitCorrupt = 4;

struct MinimizeArgs {
    std::string path;
    bool strip_nul = false;
    bool no_early_term = false;
    bool json = false;
};

struct AnalyzeArgs {
    std::string path;
    uint32_t max_k = 0; // 0 = min(100, n-1)
    std::string out_path; // empty = stdout
    bool strip_nul = false;
};

struct TunnelArgs {
    std::string path;
    std::string out_path;
    bool strip_nul = false;
};

struct UntunnelArgs {
    std::string path;
    std::string out_path;
};

struct BenchArgs {
    std::string dir;
    std::string out_path; // empty = stdout
    bool strip_nul = true; // corpus files routinely contain null bytes
};

int run_minimize(const MinimizeArgs& args, std::ostream& out, std::ostream& err);
int run_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int run_tunnel(const TunnelArgs& args, std::ostream& out, std::ostream& err);
int run_untunnel(const UntunnelArgs& args, std::ostream& out, std::ostream& err);
int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

} // namespace tbwt::cli
