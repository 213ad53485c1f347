#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "tbwt/edge_minimize.hpp"
#include "tbwt/errors.hpp"
#include "tbwt/fm_index.hpp"
#include "tbwt/text.hpp"
#include "tbwt/tunnel.hpp"
#include "tbwt_file.hpp"

namespace tbwt::cli {

namespace {

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot open: " + path);
    auto size = in.tellg();
    in.seekg(0);
    std::vector<uint8_t> data(static_cast<size_t>(size));
    in.read(reinterpret_cast<char*>(data.data()), size);
    if (!in) throw IoError("read failed: " + path);
    return data;
}

void write_file(const std::string& path, std::span<const uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("write failed: " + path);
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const CorruptFileError*>(&e)) return kExitCorrupt;
    if (dynamic_cast<const IoError*>(&e)) return kExitIo;
    return kExitValidation;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

int run_minimize(const MinimizeArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Text text = ingest(std::span<const uint8_t>(read_file(args.path)), args.strip_nul);
        FMIndex fm = FMIndex::build(text);
        MinimizeOptions options;
        options.early_termination = !args.no_early_term;
        EdgeMinResult result = minimize_edges(fm, options);

        double ratio = static_cast<double>(result.m_star) / static_cast<double>(text.size());
        if (args.json) {
            nlohmann::ordered_json j;
            j["file"] = args.path;
            j["n"] = text.size();
            j["k_star"] = result.k_star;
            j["m_star"] = result.m_star;
            j["edge_ratio"] = ratio;
            j["node_count"] = result.node_count;
            j["intervals_generated"] = result.intervals_generated;
            out << j.dump() << "\n";
        } else {
            out << "file: " << args.path << "\n"
                << "n: " << text.size() << "\n"
                << "k_star: " << result.k_star << "\n"
                << "m_star: " << result.m_star << "\n"
                << "edge_ratio: " << std::setprecision(6) << std::fixed << ratio << "\n"
                << "node_count: " << result.node_count << "\n"
                << "intervals_generated: " << result.intervals_generated << "\n";
        }
        return kExitOk;
    });
}

int run_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Text text = ingest(std::span<const uint8_t>(read_file(args.path)), args.strip_nul);
        if (text.size() < 2)
            throw ValidationError("analyze needs at least one non-sentinel symbol");
        uint32_t max_k = args.max_k;
        if (max_k == 0)
            max_k = static_cast<uint32_t>(std::min<uint64_t>(100, text.size() - 1));

        FMIndex fm = FMIndex::build(text);
        std::vector<LevelEdgeCount> rows = edge_count_per_level(fm, max_k);

        std::ostringstream tsv;
        tsv << "k\tm_k\tn_T\n";
        for (const LevelEdgeCount& row : rows)
            tsv << row.k << "\t" << row.edges << "\t" << row.nodes << "\n";

        if (args.out_path.empty()) {
            out << tsv.str();
        } else {
            std::string s = tsv.str();
            write_file(args.out_path,
                       std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
        }
        return kExitOk;
    });
}

int run_tunnel(const TunnelArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Text text = ingest(std::span<const uint8_t>(read_file(args.path)), args.strip_nul);
        FMIndex fm = FMIndex::build(text);
        EdgeMinResult result = minimize_edges(fm);
        TunneledBWT tunneled = build_tunneled(fm, result.boundaries, result.k_star);
        write_tbwt_file(tunneled, args.out_path);
        out << "file: " << args.path << "\n"
            << "n: " << text.size() << "\n"
            << "k_star: " << result.k_star << "\n"
            << "m_star: " << result.m_star << "\n"
            << "tunneled_length: " << tunneled.p() << "\n"
            << "out: " << args.out_path << "\n";
        return kExitOk;
    });
}

int run_untunnel(const UntunnelArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        TunneledBWT tunneled = read_tbwt_file(args.path);
        Text text = invert_tunneled(tunneled);
        // sentinel is an artifact of the transform, not of the user's data
        write_file(args.out_path,
                   std::span<const uint8_t>(text.bytes.data(), text.bytes.size() - 1));
        out << "recovered " << text.bytes.size() - 1 << " bytes to " << args.out_path << "\n";
        return kExitOk;
    });
}

int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    namespace fs = std::filesystem;
    return guarded(err, [&] {
        if (!fs::is_directory(args.dir)) throw IoError("not a directory: " + args.dir);
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(args.dir))
            if (entry.is_regular_file()) files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());

        std::ostringstream tsv;
        tsv << "file\tinput_length\tk_star\tm_star\tedge_ratio\ttfm_size_bytes\tfm_size_bytes"
            << "\tingest_ms\tindex_ms\tminimize_ms\ttunnel_ms\n";
        for (const std::string& file : files) {
            try {
                auto t0 = std::chrono::steady_clock::now();
                Text text = ingest(std::span<const uint8_t>(read_file(file)), args.strip_nul);
                double ingest_ms = ms_since(t0);

                t0 = std::chrono::steady_clock::now();
                FMIndex fm = FMIndex::build(text);
                double index_ms = ms_since(t0);

                t0 = std::chrono::steady_clock::now();
                EdgeMinResult result = minimize_edges(fm);
                double minimize_ms = ms_since(t0);

                t0 = std::chrono::steady_clock::now();
                TunneledBWT tunneled = build_tunneled(fm, result.boundaries, result.k_star);
                double tunnel_ms = ms_since(t0);

                double ratio = static_cast<double>(result.m_star) / static_cast<double>(text.size());
                tsv << fs::path(file).filename().string() << "\t" << text.size() << "\t"
                    << result.k_star << "\t" << result.m_star << "\t" << std::setprecision(6)
                    << std::fixed << ratio << "\t" << tunneled.serialized_size_bytes() << "\t"
                    << fm.serialized_size_bytes() << "\t" << std::setprecision(3) << ingest_ms
                    << "\t" << index_ms << "\t" << minimize_ms << "\t" << tunnel_ms << "\n";
            } catch (const Error& e) {
                err << "bench: skipping " << file << ": " << e.what() << "\n";
            }
        }

        if (args.out_path.empty()) {
            out << tsv.str();
        } else {
            std::string s = tsv.str();
            write_file(args.out_path,
                       std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
        }
        return kExitOk;
    });
}

} // namespace tbwt::cli
