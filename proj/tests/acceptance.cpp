// Acceptance gate: eight end-to-end criteria, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qec13/channel.hpp"

using namespace qec13;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("%s: criterion %d — %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. structural verification

void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    for (const char* name : {"f4_conv", "css_conv", "tb9", "tb15"}) {
        auto pair = preset(name);
        bool so = pair.is_conv() ? check_self_orthogonal(*pair.stabilizer_conv)
                                 : check_self_orthogonal(*pair.stabilizer_block);
        if (!so) { ok = false; detail = std::string(name) + " not self-orthogonal"; }
    }
    for (const auto& name : preset_names()) {
        auto pair = preset(name);
        if (!verify_dual_pair(pair)) { ok = false; detail = name + " dual pairing failed"; }
        if (!pair.is_conv()) {
            int n = pair.stabilizer_block->length;
            int s = pair.stabilizer_block->dimension();
            int nd = pair.normalizer_block->dimension();
            if (pair.params.n != n || pair.params.k != n - 2 * s || nd != n - s) {
                ok = false;
                detail = name + " dimension bookkeeping failed";
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 1.0) { ok = false; detail = "runtime " + std::to_string(dt) + "s >= 1s"; }
    report(1, "structural verification (self-orthogonality, dual pairing, dimensions)", ok,
           detail);
}

// ---------------------------------------------------------------------------
// 2. exhaustive distances

void criterion2() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    auto expect = [&](const char* what, int got, int want) {
        if (got != want) {
            ok = false;
            detail = std::string(what) + " = " + std::to_string(got);
        }
    };
    expect("five_qubit dual distance", min_distance(*preset("five_qubit").normalizer_block), 3);
    expect("tb9 dual distance", min_distance(*preset("tb9").normalizer_block), 3);
    expect("tb15 dual distance", min_distance(*preset("tb15").normalizer_block), 3);
    auto term = terminate(*preset("f4_conv").normalizer_conv, 3);
    expect("terminated (9,5) dimension", term.dimension(), 5);
    expect("terminated (9,5) distance", min_distance(term), 3);
    expect("f4_conv dual free distance", free_distance(*preset("f4_conv").normalizer_conv, 4), 3);
    expect("css_conv dual free distance", free_distance(*preset("css_conv").normalizer_conv, 6),
           3);
    double dt = seconds_since(t0);
    if (dt >= 10.0) { ok = false; detail = "runtime " + std::to_string(dt) + "s >= 10s"; }
    report(2, "exhaustive minimum and free distances", ok, detail);
}

// ---------------------------------------------------------------------------
// 3. derived single-error tables

void criterion3() {
    const std::vector<SingleErrorRow> f4_expected = {
        {{1, 0, 0}, {1, 1}, 0},         {{kOmega, 0, 0}, {kOmega, kOmega}, 0},
        {{kOmegaBar, 0, 0}, {kOmegaBar, kOmegaBar}, 0},
        {{0, 1, 0}, {kOmegaBar, 1}, 0}, {{0, kOmega, 0}, {1, kOmega}, 0},
        {{0, kOmegaBar, 0}, {kOmega, kOmegaBar}, 0},
        {{0, 0, 1}, {kOmega, 1}, 0},    {{0, 0, kOmega}, {kOmegaBar, kOmega}, 0},
        {{0, 0, kOmegaBar}, {1, kOmegaBar}, 0},
    };
    const std::vector<SingleErrorRow> css_expected = {
        {{1, 0, 0}, {1, 1, 1}, 0},
        {{0, 1, 0}, {1, 0, 1}, 0},
        {{0, 0, 1}, {1, 0, 0}, -2},
    };
    auto same = [](const std::vector<SingleErrorRow>& a, const std::vector<SingleErrorRow>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].error != b[i].error || a[i].window != b[i].window ||
                a[i].block_offset != b[i].block_offset)
                return false;
        return true;
    };
    bool ok = same(single_error_table(*preset("f4_conv").stabilizer_conv), f4_expected) &&
              same(single_error_table(*preset("css_conv").stabilizer_conv), css_expected);
    report(3, "derived 9-entry and 3-entry single-error tables match row-for-row", ok);
}

// ---------------------------------------------------------------------------
// 4. exhaustive single and spaced-double error correction

std::vector<Sym> decode_css_planes(const ConvCodeSpec& stab, const std::vector<Sym>& labels) {
    PauliErrorSeq e(labels);
    auto [bit, phase] = split_planes(e);
    auto ob = decode_conv_css(syndromes_conv(bit.symbols, stab));
    auto op = decode_conv_css(syndromes_conv(phase.symbols, stab));
    return merge_planes(ob.estimate, op.estimate).labels.symbols;
}

void criterion4() {
    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& d) {
        if (ok) detail = d;
        ok = false;
    };

    // tail-biting codes: every single-qubit Pauli error decodes exactly
    {
        auto pair = preset("tb9");
        const auto& stab = *pair.stabilizer_block;
        for (int q = 0; q < 9; ++q)
            for (Sym a : {kOne, kOmega, kOmegaBar}) {
                std::vector<Sym> e(9, 0);
                e[static_cast<std::size_t>(q)] = a;
                if (decode_tb9(syndromes_tb(e, stab, 1)).estimate.symbols != e)
                    fail("tb9 single error q=" + std::to_string(q));
            }
    }
    {
        auto pair = preset("tb15");
        const auto& stab = *pair.stabilizer_block;
        for (int q = 0; q < 15; ++q)
            for (Sym a : {kOne, kOmega, kOmegaBar}) {
                std::vector<Sym> e(15, 0);
                e[static_cast<std::size_t>(q)] = a;
                PauliErrorSeq err(e);
                auto [bit, phase] = split_planes(err);
                auto ob = decode_tb15(syndromes_tb(bit.symbols, stab, 2));
                auto op = decode_tb15(syndromes_tb(phase.symbols, stab, 2));
                if (merge_planes(ob.estimate, op.estimate).labels.symbols != e)
                    fail("tb15 single error q=" + std::to_string(q));
            }
    }

    const int L = 12;
    // convolutional single errors, interior blocks
    {
        auto pair = preset("f4_conv");
        const auto& stab = *pair.stabilizer_conv;
        for (int b = 1; b <= L - 2; ++b)
            for (int pos = 0; pos < 3; ++pos)
                for (Sym a : {kOne, kOmega, kOmegaBar}) {
                    std::vector<Sym> e(3 * L, 0);
                    e[static_cast<std::size_t>(3 * b + pos)] = a;
                    if (decode_conv_f4(syndromes_conv(e, stab)).estimate.symbols != e)
                        fail("f4 single error block " + std::to_string(b));
                }
    }
    {
        auto pair = preset("css_conv");
        const auto& stab = *pair.stabilizer_conv;
        for (int b = 2; b <= L - 3; ++b)
            for (int pos = 0; pos < 3; ++pos)
                for (Sym a : {kOne, kOmega, kOmegaBar}) {
                    std::vector<Sym> e(3 * L, 0);
                    e[static_cast<std::size_t>(3 * b + pos)] = a;
                    if (decode_css_planes(stab, e) != e)
                        fail("css single error block " + std::to_string(b));
                }
    }

    // spaced double errors: gap 2 blocks (F4), gap 3 blocks (CSS)
    {
        auto pair = preset("f4_conv");
        const auto& stab = *pair.stabilizer_conv;
        for (int b = 1; b + 2 <= L - 2; ++b)
            for (int p1 = 0; p1 < 3; ++p1)
                for (int p2 = 0; p2 < 3; ++p2)
                    for (Sym a : {kOne, kOmega, kOmegaBar})
                        for (Sym c : {kOne, kOmega, kOmegaBar}) {
                            std::vector<Sym> e(3 * L, 0);
                            e[static_cast<std::size_t>(3 * b + p1)] = a;
                            e[static_cast<std::size_t>(3 * (b + 2) + p2)] = c;
                            if (decode_conv_f4(syndromes_conv(e, stab)).estimate.symbols != e)
                                fail("f4 double error blocks " + std::to_string(b) + "," +
                                     std::to_string(b + 2));
                        }
    }
    {
        auto pair = preset("css_conv");
        const auto& stab = *pair.stabilizer_conv;
        for (int b = 2; b + 3 <= L - 3; ++b)
            for (int p1 = 0; p1 < 3; ++p1)
                for (int p2 = 0; p2 < 3; ++p2)
                    for (Sym a : {kOne, kOmega, kOmegaBar})
                        for (Sym c : {kOne, kOmega, kOmegaBar}) {
                            std::vector<Sym> e(3 * L, 0);
                            e[static_cast<std::size_t>(3 * b + p1)] = a;
                            e[static_cast<std::size_t>(3 * (b + 3) + p2)] = c;
                            if (decode_css_planes(stab, e) != e)
                                fail("css double error blocks " + std::to_string(b) + "," +
                                     std::to_string(b + 3));
                        }
    }
    report(4, "exhaustive single and spaced-double error correction", ok, detail);
}

// ---------------------------------------------------------------------------
// 5. weight-2 same-block detection for the F4 convolutional code

void criterion5() {
    auto pair = preset("f4_conv");
    const auto& stab = *pair.stabilizer_conv;
    const int L = 12;
    int exceptions = 0, patterns = 0;
    for (int b = 2; b <= L - 3; ++b) {
        for (int p1 = 0; p1 < 3; ++p1)
            for (int p2 = p1 + 1; p2 < 3; ++p2)
                for (Sym a : {kOne, kOmega, kOmegaBar})
                    for (Sym c : {kOne, kOmega, kOmegaBar}) {
                        std::vector<Sym> e(3 * L, 0);
                        e[static_cast<std::size_t>(3 * b + p1)] = a;
                        e[static_cast<std::size_t>(3 * b + p2)] = c;
                        ++patterns;
                        auto out = decode_conv_f4(syndromes_conv(e, stab));
                        bool detected = false;
                        for (const auto& ev : out.events)
                            if (ev.kind == EventKind::detected_uncorrectable) detected = true;
                        if (!detected) ++exceptions;
                    }
    }
    report(5, "weight-2 single-block errors always raise a detection event",
           exceptions == 0,
           std::to_string(exceptions) + " of " + std::to_string(patterns) +
               " patterns produced a syndrome pair identical to a single-error window and "
               "were corrected as single errors instead");
}

// ---------------------------------------------------------------------------
// 6. oracle equivalence

void criterion6() {
    bool ok = true;
    std::string detail;
    const int L = 12, trials = 10000;
    SplitMix64 rng(20260824);

    // table decoders vs the Viterbi minimum-weight oracle on random
    // weight-<=1-per-frame errors. CSS single errors at position 2 of
    // blocks L-4 and L-3 share their reduced syndrome with an
    // equal-weight error two blocks later, so placement stops at L-5.
    auto f4_pair = preset("f4_conv");
    const auto& f4 = *f4_pair.stabilizer_conv;
    for (int t = 0; t < trials; ++t) {
        std::vector<Sym> e(3 * L, 0);
        if (rng.uniform() > 0.1) {
            int b = 1 + static_cast<int>(rng.uniform() * (L - 2));
            int pos = static_cast<int>(rng.uniform() * 3);
            e[static_cast<std::size_t>(3 * b + pos)] = static_cast<Sym>(1 + rng.next() % 3);
        }
        auto s = syndromes_conv(e, f4);
        if (decode_conv_f4(s).estimate.symbols != viterbi_coset_leader(f4, s)) {
            ok = false;
            detail = "f4 table/viterbi mismatch";
        }
    }
    auto css_pair = preset("css_conv");
    const auto& css = *css_pair.stabilizer_conv;
    for (int t = 0; t < trials; ++t) {
        std::vector<Sym> e(3 * L, 0);
        if (rng.uniform() > 0.1) {
            int b = 2 + static_cast<int>(rng.uniform() * (L - 7));
            int pos = static_cast<int>(rng.uniform() * 3);
            e[static_cast<std::size_t>(3 * b + pos)] = 1;
        }
        auto s = syndromes_conv(e, css);
        if (decode_conv_css(s).estimate.symbols != viterbi_coset_leader(css, s)) {
            ok = false;
            detail = "css table/viterbi mismatch";
        }
    }

    // tb9 decoder vs the brute-force 64-entry coset-leader table
    auto pair = preset("tb9");
    auto table = coset_leader_table(pair);
    if (table.size() != 64) { ok = false; detail = "tb9 coset table size"; }
    const auto& stab = *pair.stabilizer_block;
    for (int q = -1; q < 9; ++q)
        for (Sym a : {kOne, kOmega, kOmegaBar}) {
            std::vector<Sym> e(9, 0);
            if (q >= 0) e[static_cast<std::size_t>(q)] = a;
            auto syndrome = block_syndrome(stab, e);
            if (decode_tb9(syndromes_tb(e, stab, 1)).estimate.symbols !=
                decode_block_lookup(table, syndrome)) {
                ok = false;
                detail = "tb9 table/brute-force mismatch";
            }
            if (q < 0) break;
        }
    report(6, "table decoders agree with minimum-weight oracles", ok, detail);
}

// ---------------------------------------------------------------------------
// 7 & 8. Monte-Carlo scaling and coefficients

void criteria7and8() {
    const std::uint64_t kSeed = 7;
    const std::vector<double> ps = {0.002, 0.004, 0.008};
    struct Entry {
        const char* code;
        DecoderId decoder;
        double paper_c;
    };
    const std::vector<Entry> entries = {
        {"five_qubit", DecoderId::coset_lookup, 10.0}, {"f4_conv", DecoderId::table, 12.0},
        {"tb9", DecoderId::table, 12.0},               {"steane", DecoderId::coset_lookup, 21.0},
        {"css_conv", DecoderId::table, 21.0},          {"tb15", DecoderId::table, 21.0},
    };

    bool slopes_ok = true, bands_ok = true;
    std::string slope_detail, band_detail;
    std::map<std::string, double> c_at_p0;
    for (const auto& entry : entries) {
        auto pair = preset(entry.code);
        ChannelParams params;
        params.seed = kSeed;
        std::vector<TrialReport> reports;
        for (double p : ps) {
            params.p = p;
            std::uint64_t trials = p == ps.front() ? 4000000 : 1000000;
            reports.push_back(monte_carlo(pair, entry.decoder, params, trials));
        }
        auto fit = fit_coefficient(reports);
        c_at_p0[entry.code] = fit.coefficient;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%s: slope %.3f, c %.2f (band [%.2f, %.2f])", entry.code,
                      fit.slope, fit.coefficient, 0.3 * entry.paper_c, 1.15 * entry.paper_c);
        std::printf("  %s\n", buf);
        std::fflush(stdout);
        if (fit.slope < 1.7 || fit.slope > 2.3) {
            slopes_ok = false;
            slope_detail = std::string(entry.code) + " slope " + std::to_string(fit.slope);
        }
        if (fit.coefficient < 0.3 * entry.paper_c || fit.coefficient > 1.15 * entry.paper_c) {
            bands_ok = false;
            band_detail = std::string(entry.code) + " c " + std::to_string(fit.coefficient);
        }
    }
    report(7, "log-log failure-rate slope in [1.7, 2.3] for all six presets", slopes_ok,
           slope_detail);

    double ratio = c_at_p0["css_conv"] / c_at_p0["f4_conv"];
    bool ratio_ok = ratio >= 1.3 && ratio <= 2.7;
    if (!ratio_ok && band_detail.empty()) {
        char buf[320];
        std::snprintf(buf, sizeof(buf),
                      "css_conv/f4_conv coefficient ratio %.2f outside [1.3, 2.7]; the factor-two "
                      "claim holds for the union-bound estimates, but a real decoder corrects "
                      "many cross-plane weight-2 patterns the bound counts as failures",
                      ratio);
        band_detail = buf;
    }
    report(8, "fitted coefficients within the reference bands and css/f4 ratio in [1.3, 2.7]",
           bands_ok && ratio_ok, band_detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criteria7and8();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    else std::printf("all criteria passed\n");
    return g_failures ? 1 : 0;
}
