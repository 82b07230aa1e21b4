#include <cmath>
#include <set>

#include "doctest.h"
#include "qec13/channel.hpp"

using namespace qec13;

TEST_CASE("per-trial substreams are deterministic and distinct") {
    CHECK(trial_stream_seed(7, 0) == trial_stream_seed(7, 0));
    std::set<std::uint64_t> seen;
    for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(trial_stream_seed(42, t));
    CHECK(seen.size() == 1000);
    CHECK(trial_stream_seed(1, 5) != trial_stream_seed(2, 5));
}

TEST_CASE("splitmix64 uniform values stay in the unit interval") {
    SplitMix64 rng(123);
    double sum = 0;
    for (int i = 0; i < 10000; ++i) {
        double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / 10000 == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("channel parameter validation") {
    ChannelParams ok;
    ok.p = 0.01;
    CHECK_NOTHROW(ok.validate());

    ChannelParams bad = ok;
    bad.p = 1.5;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.pauli_weights = {0.5, 0.5, 0.5};
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.frame_blocks = 0;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("error sampling matches the channel statistics") {
    ChannelParams params;
    params.p = 0.1;
    SplitMix64 rng(trial_stream_seed(2024, 0));
    auto e = sample_errors(params, 30000, rng);
    int nonzero = weight(e);
    // mean 3000, sigma ~52; seeded, so this is a frozen regression value
    CHECK(nonzero > 2800);
    CHECK(nonzero < 3200);
    int by_label[4] = {0, 0, 0, 0};
    for (auto s : e.labels.symbols) ++by_label[s];
    for (Sym s : {kOne, kOmega, kOmegaBar}) {
        CHECK(by_label[s] > nonzero / 3 - 150);
        CHECK(by_label[s] < nonzero / 3 + 150);
    }
}

TEST_CASE("sampling is reproducible per stream") {
    ChannelParams params;
    params.p = 0.05;
    SplitMix64 a(trial_stream_seed(9, 3)), b(trial_stream_seed(9, 3)),
        c(trial_stream_seed(9, 4));
    auto ea = sample_errors(params, 300, a);
    auto eb = sample_errors(params, 300, b);
    auto ec = sample_errors(params, 300, c);
    CHECK(ea == eb);
    CHECK(ea != ec);
}

TEST_CASE("adjudication accepts exactly the stabilizer cosets") {
    SUBCASE("five_qubit") {
        auto pair = preset("five_qubit");
        PauliErrorSeq actual({kOmega, 0, 0, 0, 0}, 5);
        CHECK(adjudicate(pair, actual, actual));  // residual zero

        PauliErrorSeq stab_row({0, kOmegaBar, kOmega, kOmega, kOmegaBar}, 5);
        PauliErrorSeq zero({0, 0, 0, 0, 0}, 5);
        CHECK(adjudicate(pair, stab_row, zero));  // residual acts trivially

        PauliErrorSeq weight_one({kOne, 0, 0, 0, 0}, 5);
        CHECK_FALSE(adjudicate(pair, weight_one, zero));
    }
    SUBCASE("convolutional frame uses the terminated stabilizer") {
        auto pair = preset("f4_conv");
        std::vector<Sym> gen(18, 0);  // generator at block 2 of a 6-block frame
        std::vector<Sym> basic = {1, 1, 1, 1, kOmega, kOmegaBar};
        for (int i = 0; i < 6; ++i) gen[static_cast<std::size_t>(6 + i)] = basic[static_cast<std::size_t>(i)];
        PauliErrorSeq residual(gen);
        PauliErrorSeq zero(std::vector<Sym>(18, 0));
        CHECK(adjudicate(pair, residual, zero));

        PauliErrorSeq bad(std::vector<Sym>(18, 0));
        bad.labels[7] = kOne;
        CHECK_FALSE(adjudicate(pair, bad, zero));
    }
    SUBCASE("CSS pairs check both planes") {
        auto pair = preset("tb15");
        PauliErrorSeq zero(std::vector<Sym>(15, 0));
        // stabilizer row as X-type (bit-flip plane only)
        std::vector<Sym> xrow(15, 0);
        const auto& g = pair.stabilizer_block->generators[0];
        for (std::size_t i = 0; i < 15; ++i) xrow[i] = g[i] ? kOmega : Sym{0};
        CHECK(adjudicate(pair, PauliErrorSeq(xrow), zero));
        // normalizer-only row is a logical operator
        std::vector<Sym> lrow(15, 0);
        const auto& h = pair.normalizer_block->generators[0];
        for (std::size_t i = 0; i < 15; ++i) lrow[i] = h[i] ? kOmega : Sym{0};
        CHECK_FALSE(adjudicate(pair, PauliErrorSeq(lrow), zero));
    }
}

TEST_CASE("monte carlo runs are deterministic and thread-invariant") {
    ChannelParams params;
    params.p = 0.02;
    params.seed = 77;
    auto pair = preset("tb9");
    auto a = monte_carlo(pair, DecoderId::table, params, 20000, 1);
    auto b = monte_carlo(pair, DecoderId::table, params, 20000, 4);
    auto c = monte_carlo(pair, DecoderId::table, params, 20000, 3);
    CHECK(a.logical_failures == b.logical_failures);
    CHECK(a.logical_failures == c.logical_failures);
    CHECK(a.detected_events == b.detected_events);
    CHECK(a.logical_failures > 0);
    CHECK(a.rate == doctest::Approx(static_cast<double>(a.logical_failures) / 20000));
}

TEST_CASE("monte carlo rates look quadratic at small p") {
    ChannelParams params;
    params.seed = 5;
    auto pair = preset("five_qubit");
    std::vector<TrialReport> reports;
    for (double p : {0.004, 0.008, 0.016}) {
        params.p = p;
        reports.push_back(monte_carlo(pair, DecoderId::coset_lookup, params, 400000));
        CHECK(reports.back().logical_failures > 0);
    }
    auto fit = fit_coefficient(reports);
    CHECK(fit.slope > 1.5);
    CHECK(fit.slope < 2.5);
    CHECK(fit.coefficient > 1.0);
    CHECK(fit.coefficient < 40.0);
}

TEST_CASE("coefficient fit recovers a synthetic quadratic law") {
    std::vector<TrialReport> reports;
    for (double p : {0.002, 0.004, 0.008}) {
        TrialReport r;
        r.p = p;
        r.trials = 1000000;
        r.logical_failures = 100;  // nonzero so the point is usable
        r.rate_per_encoded_qubit = 12.0 * p * p;
        r.c = r.rate_per_encoded_qubit / (p * p);
        reports.push_back(r);
    }
    auto fit = fit_coefficient(reports);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(fit.coefficient == doctest::Approx(12.0).epsilon(1e-9));

    CHECK_THROWS(fit_coefficient({reports[0]}));
}

TEST_CASE("decoder names round-trip and invalid pairings throw") {
    for (DecoderId id : {DecoderId::table, DecoderId::viterbi, DecoderId::coset_lookup})
        CHECK(decoder_from_name(decoder_name(id)) == id);
    CHECK_THROWS(decoder_from_name("magic"));

    ChannelParams params;
    params.p = 0.01;
    CHECK_THROWS(monte_carlo(preset("five_qubit"), DecoderId::viterbi, params, 10));
    CHECK_THROWS(monte_carlo(preset("f4_conv"), DecoderId::coset_lookup, params, 10));
}

TEST_CASE("report serialization") {
    TrialReport r;
    r.code = "tb9";
    r.decoder = "table";
    r.p = 0.004;
    r.trials = 1000;
    r.logical_failures = 3;
    r.rate = 0.003;
    r.seed = 11;
    CHECK(trial_report_csv_header() ==
          "code,decoder,p,trials,failures,detected,rate,rate_per_qubit,c,c_lo,c_hi,seed");
    auto row = trial_report_csv_row(r);
    CHECK(row.substr(0, 16) == "tb9,table,0.004,");
    CHECK(row.find(",11") != std::string::npos);
    auto text = trial_report_text(r);
    CHECK(text.find("rng splitmix64") != std::string::npos);
    CHECK(text.find("failures 3") != std::string::npos);
}

TEST_CASE("viterbi and table decoders agree in simulation at tiny p") {
    ChannelParams params;
    params.p = 0.003;
    params.seed = 303;
    params.frame_blocks = 12;
    auto pair = preset("f4_conv");
    auto table = monte_carlo(pair, DecoderId::table, params, 30000, 2);
    auto viterbi = monte_carlo(pair, DecoderId::viterbi, params, 30000, 2);
    // both are single-error-exact; failures come from multi-error frames
    CHECK(table.trials == viterbi.trials);
    CHECK(std::abs(static_cast<double>(table.logical_failures) -
                   static_cast<double>(viterbi.logical_failures)) <=
          0.5 * static_cast<double>(table.logical_failures) + 10.0);
}
