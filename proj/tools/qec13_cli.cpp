// Command-line front end: structural verification, table printing,
// distance computation, Monte-Carlo simulation, and preset listing.
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qec13/channel.hpp"

using namespace qec13;

namespace {

enum class Format { csv, text, human };

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    if (s == "human") return Format::human;
    throw CLI::ValidationError("--format", "unknown format: " + s);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QEC13_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

// Largest horizon keeping the exhaustive input enumeration below ~2^16
// combinations, capped at 6; ample for these memory-1/2 codes.
int free_distance_horizon(const ConvCodeSpec& c) {
    const int bits_per_block =
        static_cast<int>(c.basic_generators.size()) * (c.field == Field::GF4 ? 2 : 1);
    return std::min(6, std::max(3, 16 / bits_per_block));
}

int free_dist(const ConvCodeSpec& c) { return free_distance(c, free_distance_horizon(c)); }

std::string sym_str(Sym s, Format fmt) {
    return fmt == Format::human ? std::string(1, f4_char(s)) : std::to_string(int(s));
}

std::string tuple_str(std::span<const Sym> v, Format fmt, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += sym_str(v[i], fmt);
    }
    return out;
}

// ---------------------------------------------------------------------------
// verify

struct CheckRecorder {
    Format fmt;
    int failures = 0;

    void record(const std::string& name, bool ok) {
        if (!ok) ++failures;
        if (fmt == Format::csv)
            std::cout << name << ',' << (ok ? "pass" : "FAIL") << '\n';
        else
            std::cout << (ok ? "pass  " : "FAIL  ") << name << '\n';
    }
};

// Expected single-error tables for the bundled convolutional codes, in
// canonical scan order: error 3-tuple, syndrome window, anchor offset.
const std::vector<SingleErrorRow>& expected_f4_table() {
    static const std::vector<SingleErrorRow> rows = {
        {{1, 0, 0}, {1, 1}, 0},         {{kOmega, 0, 0}, {kOmega, kOmega}, 0},
        {{kOmegaBar, 0, 0}, {kOmegaBar, kOmegaBar}, 0},
        {{0, 1, 0}, {kOmegaBar, 1}, 0}, {{0, kOmega, 0}, {1, kOmega}, 0},
        {{0, kOmegaBar, 0}, {kOmega, kOmegaBar}, 0},
        {{0, 0, 1}, {kOmega, 1}, 0},    {{0, 0, kOmega}, {kOmegaBar, kOmega}, 0},
        {{0, 0, kOmegaBar}, {1, kOmegaBar}, 0},
    };
    return rows;
}

const std::vector<SingleErrorRow>& expected_css_table() {
    static const std::vector<SingleErrorRow> rows = {
        {{1, 0, 0}, {1, 1, 1}, 0},
        {{0, 1, 0}, {1, 0, 1}, 0},
        {{0, 0, 1}, {1, 0, 0}, -2},
    };
    return rows;
}

bool same_table(const std::vector<SingleErrorRow>& a, const std::vector<SingleErrorRow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].error != b[i].error || a[i].window != b[i].window ||
            a[i].block_offset != b[i].block_offset)
            return false;
    return true;
}

bool check_tb_singles(const CodePair& pair) {
    const auto& stab = *pair.stabilizer_block;
    const auto& norm = *pair.normalizer_block;
    const int n = stab.length;
    const int memory = pair.name == "tb9" ? 1 : 2;
    RowSpan stab_span(stab.field, stab.generators);
    for (int q = 0; q < n; ++q) {
        for (Sym label : {kOne, kOmega, kOmegaBar}) {
            std::vector<Sym> e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(q)] = label;
            FVec est(Field::GF4, {}, 3);
            if (pair.name == "tb9") {
                est = decode_tb9(syndromes_tb(e, stab, memory)).estimate;
            } else {
                PauliErrorSeq err(e);
                auto [bit, phase] = split_planes(err);
                auto ob = decode_tb15(syndromes_tb(bit.symbols, stab, memory));
                auto op = decode_tb15(syndromes_tb(phase.symbols, stab, memory));
                est = merge_planes(ob.estimate, op.estimate).labels;
            }
            auto residual = add_vec(e, est.symbols);
            bool harmless;
            if (stab.field == Field::GF4) {
                harmless = stab_span.contains(residual);
            } else {
                PauliErrorSeq r(residual);
                auto [rb, rp] = split_planes(r);
                harmless = stab_span.contains(rb.symbols) && stab_span.contains(rp.symbols);
            }
            (void)norm;
            if (!harmless) return false;
        }
    }
    return true;
}

bool check_conv_singles(const CodePair& pair, int L) {
    const auto& stab = *pair.stabilizer_conv;
    const int nu = stab.memory;
    for (int b = nu; b < L - nu; ++b) {
        for (int pos = 0; pos < 3; ++pos) {
            for (Sym label : {kOne, kOmega, kOmegaBar}) {
                if (stab.field == Field::GF2 && label != kOne) continue;
                std::vector<Sym> e(static_cast<std::size_t>(3 * L), 0);
                e[static_cast<std::size_t>(3 * b + pos)] = label;
                std::vector<Sym> est;
                if (stab.field == Field::GF4) {
                    est = decode_conv_f4(syndromes_conv(e, stab)).estimate.symbols;
                } else {
                    est = decode_conv_css(syndromes_conv(e, stab)).estimate.symbols;
                }
                if (est != e) return false;
            }
        }
    }
    return true;
}

int cmd_verify(Format fmt, const std::string& only, const std::string& file) {
    CheckRecorder rec{fmt};
    if (fmt == Format::csv) std::cout << "check,result\n";

    if (!file.empty()) {
        try {
            auto pair = parse_pair_file(file);
            bool ok = true;
            if (pair.stabilizer_block) pair.stabilizer_block->validate();
            if (pair.normalizer_block) pair.normalizer_block->validate();
            if (pair.stabilizer_conv) pair.stabilizer_conv->validate();
            if (pair.normalizer_conv) pair.normalizer_conv->validate();
            ok = verify_dual_pair(pair);
            rec.record(pair.name + ": file structure and dual pairing", ok);
        } catch (const std::exception& e) {
            rec.record(std::string("file check (") + e.what() + ")", false);
        }
        return rec.failures ? 1 : 0;
    }

    for (const auto& name : preset_names()) {
        if (!only.empty() && name != only) continue;
        auto pair = preset(name);
        bool valid = true;
        try {
            if (pair.stabilizer_block) pair.stabilizer_block->validate();
            if (pair.normalizer_block) pair.normalizer_block->validate();
            if (pair.stabilizer_conv) pair.stabilizer_conv->validate();
            if (pair.normalizer_conv) pair.normalizer_conv->validate();
        } catch (const std::exception&) {
            valid = false;
        }
        rec.record(name + ": generator structure", valid);
        rec.record(name + ": dual pairing", verify_dual_pair(pair));
        if (pair.stabilizer_block && pair.stabilizer_block->role_tag == RoleTag::stabilizer_label)
            rec.record(name + ": stabilizer self-orthogonality",
                       check_self_orthogonal(*pair.stabilizer_block));
        if (pair.stabilizer_conv)
            rec.record(name + ": stabilizer self-orthogonality",
                       check_self_orthogonal(*pair.stabilizer_conv));
    }

    auto want = [&](const std::string& name) { return only.empty() || only == name; };

    if (want("f4_conv")) {
        auto pair = preset("f4_conv");
        rec.record("f4_conv: derived 9-entry single-error table",
                   same_table(single_error_table(*pair.stabilizer_conv), expected_f4_table()));
        rec.record("f4_conv: normalizer free distance 3",
                   free_dist(*pair.normalizer_conv) == 3);
        rec.record("f4_conv: interior single errors decode exactly", check_conv_singles(pair, 12));
    }
    if (want("css_conv")) {
        auto pair = preset("css_conv");
        rec.record("css_conv: derived 3-entry single-error table",
                   same_table(single_error_table(*pair.stabilizer_conv), expected_css_table()));
        rec.record("css_conv: normalizer free distance 3",
                   free_dist(*pair.normalizer_conv) == 3);
        rec.record("css_conv: interior single errors decode exactly", check_conv_singles(pair, 12));
    }
    if (want("five_qubit"))
        rec.record("five_qubit: normalizer minimum distance 3",
                   min_distance(*preset("five_qubit").normalizer_block) == 3);
    if (want("steane"))
        rec.record("steane: normalizer minimum distance 3",
                   min_distance(*preset("steane").normalizer_block) == 3);
    if (want("tb9")) {
        auto pair = preset("tb9");
        rec.record("tb9: normalizer minimum distance 3",
                   min_distance(*pair.normalizer_block) == 3);
        rec.record("tb9: all 27 single-qubit errors corrected", check_tb_singles(pair));
    }
    if (want("tb15")) {
        auto pair = preset("tb15");
        rec.record("tb15: normalizer minimum distance 3",
                   min_distance(*pair.normalizer_block) == 3);
        rec.record("tb15: all 45 single-qubit errors corrected", check_tb_singles(pair));
    }
    if (want("terminated_f4(3)"))
        rec.record("terminated_f4(3): (9,5) code with minimum distance 3",
                   [] {
                       auto c = terminate(*preset("f4_conv").normalizer_conv, 3);
                       return c.dimension() == 5 && min_distance(c) == 3;
                   }());

    if (fmt != Format::csv)
        std::cout << (rec.failures ? "FAILED: " + std::to_string(rec.failures) + " check(s)\n"
                                   : "all checks passed\n");
    return rec.failures ? 1 : 0;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const std::string& code, Format fmt) {
    auto pair = preset(code);
    if (pair.is_conv()) {
        auto rows = single_error_table(*pair.stabilizer_conv);
        for (const auto& r : rows) {
            std::cout << tuple_str(r.error, fmt) << " -> (" << tuple_str(r.window, fmt, ", ")
                      << ")";
            if (r.block_offset != 0) std::cout << " [error " << -r.block_offset
                                               << " block(s) before the anchor]";
            std::cout << '\n';
        }
        return 0;
    }
    auto table = coset_leader_table(pair);
    for (const auto& [syndrome, leader] : table)
        std::cout << tuple_str(syndrome, fmt) << " -> " << tuple_str(leader, fmt) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// distance

int cmd_distance(const std::string& code, Format fmt) {
    auto pair = preset(code);
    auto emit = [&](const std::string& what, int d) {
        if (fmt == Format::csv)
            std::cout << code << ',' << what << ',' << d << '\n';
        else
            std::cout << what << ' ' << d << '\n';
    };
    if (pair.is_conv()) {
        emit("normalizer_free_distance", free_dist(*pair.normalizer_conv));
        emit("stabilizer_free_distance", free_dist(*pair.stabilizer_conv));
    } else {
        emit("normalizer_min_distance", min_distance(*pair.normalizer_block));
        emit("stabilizer_min_distance", min_distance(*pair.stabilizer_block));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
    std::string code = "tb9";
    std::string decoder = "table";
    std::string p_list = "0.002";
    std::uint64_t trials = 100000;
    int frame_blocks = 12;
    std::uint64_t seed = default_seed();
    int threads = 0;
};

std::vector<double> parse_p_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("--p: at least one value required");
    for (double p : out)
        if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("--p: values must lie in (0,1)");
    return out;
}

// Optional key-value config file; flags given on the command line override it.
void apply_config(const std::string& path, const CLI::App* sub, SimulateArgs& args) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string key, value;
    auto unset = [&](const std::string& flag) { return sub->count(flag) == 0; };
    while (in >> key >> value) {
        if (key == "code" && unset("--code")) args.code = value;
        else if (key == "decoder" && unset("--decoder")) args.decoder = value;
        else if (key == "p" && unset("--p")) args.p_list = value;
        else if (key == "trials" && unset("--trials")) args.trials = std::stoull(value);
        else if (key == "frame_blocks" && unset("--frame-blocks"))
            args.frame_blocks = std::stoi(value);
        else if (key == "seed" && unset("--seed")) args.seed = std::stoull(value);
        else if (key == "threads" && unset("--threads")) args.threads = std::stoi(value);
        else if (key == "code" || key == "decoder" || key == "p" || key == "trials" ||
                 key == "frame_blocks" || key == "seed" || key == "threads")
            continue;  // overridden by a flag
        else
            throw std::invalid_argument("unknown config key: " + key);
    }
}

int cmd_simulate(const SimulateArgs& args, Format fmt) {
    auto pair = preset(args.code);
    DecoderId decoder = decoder_from_name(args.decoder);
    auto p_values = parse_p_list(args.p_list);

    ChannelParams params;
    params.frame_blocks = args.frame_blocks;
    params.seed = args.seed;

    if (fmt == Format::csv) std::cout << trial_report_csv_header() << '\n';
    std::vector<TrialReport> reports;
    for (double p : p_values) {
        params.p = p;
        auto rep = monte_carlo(pair, decoder, params, args.trials, args.threads);
        reports.push_back(rep);
        if (fmt == Format::csv) {
            std::cout << trial_report_csv_row(rep) << '\n';
        } else if (fmt == Format::text) {
            std::cout << trial_report_text(rep) << '\n';
        } else {
            std::cout << args.code << " p=" << p << ": " << rep.logical_failures << '/'
                      << rep.trials << " failures, rate " << rep.rate << ", c " << rep.c << " ["
                      << rep.c_lo << ", " << rep.c_hi << "]\n";
        }
        std::cout.flush();
    }
    if (reports.size() >= 2) {
        try {
            auto fit = fit_coefficient(reports);
            if (fmt == Format::csv)
                std::cout << "fit," << fit.slope << ',' << fit.coefficient << '\n';
            else
                std::cout << "fit slope " << fit.slope << "\nfit coefficient " << fit.coefficient
                          << '\n';
        } catch (const std::exception& e) {
            std::cout << "fit unavailable: " << e.what() << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// codes

int cmd_codes(Format fmt) {
    if (fmt == Format::csv) std::cout << "name,n,k,d,field,kind\n";
    for (const auto& name : preset_names()) {
        auto pair = preset(name);
        const char* field = pair.field() == Field::GF4 ? "GF4" : "GF2";
        const char* kind = pair.is_conv() ? "convolutional" : "block";
        if (fmt == Format::csv)
            std::cout << name << ',' << pair.params.n << ',' << pair.params.k << ','
                      << pair.params.d << ',' << field << ',' << kind << '\n';
        else
            std::cout << name << "  [" << pair.params.n << ',' << pair.params.k << ','
                      << pair.params.d << "]  " << field << "  " << kind << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum error-correcting code toolbox: verification, tables, "
                 "distances, and Monte-Carlo simulation"};
    app.require_subcommand(1);
    std::string format_name = "human";
    app.add_option("--format", format_name, "Output format: csv, text, or human")
        ->check(CLI::IsMember({"csv", "text", "human"}));

    auto* verify = app.add_subcommand("verify", "Run the structural verification suite");
    std::string only, file;
    verify->add_option("--only", only, "Restrict checks to one preset");
    verify->add_option("--file", file, "Verify a serialized code pair file instead of the presets");

    auto* table = app.add_subcommand("table", "Print a derived syndrome -> error table");
    std::string table_code;
    table->add_option("code", table_code, "Preset name")->required();

    auto* distance = app.add_subcommand("distance", "Compute exhaustive code distances");
    std::string distance_code;
    distance->add_option("code", distance_code, "Preset name")->required();

    auto* simulate = app.add_subcommand("simulate", "Run Monte-Carlo depolarizing-channel trials");
    SimulateArgs sim;
    std::string config_file;
    simulate->add_option("--code", sim.code, "Preset name");
    simulate->add_option("--decoder", sim.decoder, "table, viterbi, or coset_lookup");
    simulate->add_option("--p", sim.p_list, "Comma-separated error probabilities");
    simulate->add_option("--trials", sim.trials, "Trials per probability");
    simulate->add_option("--frame-blocks", sim.frame_blocks, "Frame length for convolutional codes");
    simulate->add_option("--seed", sim.seed, "RNG seed (default from QEC13_SEED)");
    simulate->add_option("--threads", sim.threads, "Worker threads (0 = hardware)");
    simulate->add_option("--config", config_file, "Key-value config file; flags override");

    auto* codes = app.add_subcommand("codes", "List bundled code presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Format fmt = parse_format(format_name);
        if (verify->parsed()) return cmd_verify(fmt, only, file);
        if (table->parsed()) return cmd_table(table_code, fmt);
        if (distance->parsed()) return cmd_distance(distance_code, fmt);
        if (simulate->parsed()) {
            if (!config_file.empty()) apply_config(config_file, simulate, sim);
            return cmd_simulate(sim, fmt);
        }
        if (codes->parsed()) return cmd_codes(fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
