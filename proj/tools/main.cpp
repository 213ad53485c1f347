#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"de Bruijn graph edge minimization and BWT tunneling"};
    app.require_subcommand(1);

    tbwt::cli::MinimizeArgs minimize_args;
    auto* minimize = app.add_subcommand(
        "minimize", "find the order k minimizing the edge-reduced de Bruijn graph");
    minimize->add_option("path", minimize_args.path, "input file")->required();
    minimize->add_flag("--strip-nul", minimize_args.strip_nul, "strip 0x00 bytes from the input");
    minimize->add_flag("--no-early-term", minimize_args.no_early_term,
                       "disable early termination of the level loop");
    minimize->add_flag("--json", minimize_args.json, "emit JSON instead of text");

    tbwt::cli::AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "edge counts per order, as TSV");
    analyze->add_option("path", analyze_args.path, "input file")->required();
    analyze->add_option("--max-k", analyze_args.max_k, "largest order to report (default min(100, n-1))");
    analyze->add_option("--out", analyze_args.out_path, "write TSV here instead of stdout");
    analyze->add_flag("--strip-nul", analyze_args.strip_nul, "strip 0x00 bytes from the input");

    tbwt::cli::TunnelArgs tunnel_args;
    auto* tunnel = app.add_subcommand("tunnel", "write the minimum-length tunneled BWT");
    tunnel->add_option("path", tunnel_args.path, "input file")->required();
    tunnel->add_option("--out", tunnel_args.out_path, "output .tbwt file")->required();
    tunnel->add_flag("--strip-nul", tunnel_args.strip_nul, "strip 0x00 bytes from the input");

    tbwt::cli::UntunnelArgs untunnel_args;
    auto* untunnel = app.add_subcommand("untunnel", "recover the original file from a .tbwt");
    untunnel->add_option("path", untunnel_args.path, "input .tbwt file")->required();
    untunnel->add_option("--out", untunnel_args.out_path, "recovered output file")->required();

    tbwt::cli::BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "run the pipeline over a directory of files");
    bench->add_option("dir", bench_args.dir, "directory of input files")->required();
    bench->add_option("--out", bench_args.out_path, "write TSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : tbwt::cli::kExitUsage;
    }

    if (minimize->parsed()) return tbwt::cli::run_minimize(minimize_args, std::cout, std::cerr);
    if (analyze->parsed()) return tbwt::cli::run_analyze(analyze_args, std::cout, std::cerr);
    if (tunnel->parsed()) return tbwt::cli::run_tunnel(tunnel_args, std::cout, std::cerr);
    if (untunnel->parsed()) return tbwt::cli::run_untunnel(untunnel_args, std::cout, std::cerr);
    if (bench->parsed()) return tbwt::cli::run_bench(bench_args, std::cout, std::cerr);
    return tbwt::cli::kExitUsage;
}
