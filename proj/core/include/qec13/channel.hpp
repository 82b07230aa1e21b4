#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qec13/decode.hpp"

// Depolarizing-channel sampling, end-to-end trial execution with
// logical-failure adjudication, Monte-Carlo aggregation, and quadratic
// coefficient fitting.

namespace qec13 {

// splitmix64: the per-trial substream generator. Each trial seeds its
// own stream from (seed, trial index), so aggregates are independent of
// scheduling and merge order.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial);

struct ChannelParams {
    double p = 0.0;                                  // per-qubit error probability
    std::array<double, 3> pauli_weights = {1.0 / 3, 1.0 / 3, 1.0 / 3};  // X, Y, Z given an error
    int frame_blocks = 12;                           // convolutional frame length L
    std::uint64_t seed = 0;

    void validate() const;
};

enum class DecoderId { table, viterbi, coset_lookup };

std::string decoder_name(DecoderId id);
DecoderId decoder_from_name(const std::string& name);

struct TrialReport {
    std::string code;
    std::string decoder;
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t logical_failures = 0;
    std::uint64_t detected_events = 0;
    double rate = 0.0;
    double rate_per_encoded_qubit = 0.0;
    double std_error = 0.0;
    double c = 0.0;       // rate_per_encoded_qubit / p^2
    double c_lo = 0.0;    // 95% confidence bounds on c
    double c_hi = 0.0;
    std::uint64_t seed = 0;
    std::string rng = "splitmix64";
};

struct FitResult {
    double slope = 0.0;        // log-log scaling exponent, ~2 for these codes
    double coefficient = 0.0;  // c at the smallest p
};

// Independent depolarizing errors: each qubit nonzero with probability p,
// label drawn from pauli_weights. Reproducible from the rng stream.
PauliErrorSeq sample_errors(const ChannelParams& params, int qubits, SplitMix64& rng);

// Success iff actual + estimate lies in the stabilizer label code. For
// CSS (GF2) pairs both planes of the residual must lie in the binary
// stabilizer code.
bool adjudicate(const CodePair& pair, const PauliErrorSeq& actual, const PauliErrorSeq& estimate);

// Run sample -> syndromes -> decode -> adjudicate for `trials` trials.
// Deterministic for a fixed seed; trials run in parallel. For the
// convolutional codes, errors are placed on the frame's interior blocks
// (memory guard blocks at each end stay error-free) and the rate is
// normalized per interior block; block codes normalize per encoded qubit.
TrialReport monte_carlo(const CodePair& pair, DecoderId decoder, const ChannelParams& params,
                        std::uint64_t trials, int threads = 0);

// Least-squares fit of log(rate_per_encoded_qubit) against log(p).
// Requires at least two reports with nonzero failures.
FitResult fit_coefficient(const std::vector<TrialReport>& reports);

std::string trial_report_csv_header();
std::string trial_report_csv_row(const TrialReport& r);
std::string trial_report_text(const TrialReport& r);

}  // namespace qec13
