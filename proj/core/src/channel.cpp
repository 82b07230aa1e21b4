#include "qec13/channel.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qec13 {

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial) {
    SplitMix64 mix(seed ^ (trial * 0x9e3779b97f4a7c15ull));
    return mix.next();
}

void ChannelParams::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
    double sum = pauli_weights[0] + pauli_weights[1] + pauli_weights[2];
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("pauli_weights must sum to 1");
    for (double w : pauli_weights)
        if (w < 0.0) throw std::invalid_argument("pauli_weights must be nonnegative");
    if (frame_blocks < 1) throw std::invalid_argument("frame_blocks must be positive");
}

std::string decoder_name(DecoderId id) {
    switch (id) {
        case DecoderId::table: return "table";
        case DecoderId::viterbi: return "viterbi";
        case DecoderId::coset_lookup: return "coset_lookup";
    }
    return "?";
}

DecoderId decoder_from_name(const std::string& name) {
    if (name == "table") return DecoderId::table;
    if (name == "viterbi") return DecoderId::viterbi;
    if (name == "coset_lookup") return DecoderId::coset_lookup;
    throw std::invalid_argument("unknown decoder id: " + name);
}

namespace {

Sym draw_label(const ChannelParams& params, SplitMix64& rng) {
    double v = rng.uniform();
    if (v < params.pauli_weights[0]) return kOmega;     // X
    if (v < params.pauli_weights[0] + params.pauli_weights[1]) return kOne;  // Y
    return kOmegaBar;                                   // Z
}

// Fill labels[first, last) with independent depolarizing errors using
// geometric skips between error positions.
void sample_range(const ChannelParams& params, std::vector<Sym>& labels, int first, int last,
                  SplitMix64& rng) {
    if (params.p <= 0.0) return;
    if (params.p >= 1.0) {
        for (int i = first; i < last; ++i) labels[static_cast<std::size_t>(i)] = draw_label(params, rng);
        return;
    }
    const double log1mp = std::log1p(-params.p);
    int i = first;
    while (true) {
        double u = rng.uniform();
        if (u <= 0.0) u = 0x1.0p-53;
        i += static_cast<int>(std::log(u) / log1mp);
        if (i >= last || i < 0) break;
        labels[static_cast<std::size_t>(i)] = draw_label(params, rng);
        ++i;
    }
}

}  // namespace

PauliErrorSeq sample_errors(const ChannelParams& params, int qubits, SplitMix64& rng) {
    params.validate();
    std::vector<Sym> labels(static_cast<std::size_t>(qubits), 0);
    sample_range(params, labels, 0, qubits, rng);
    int width = qubits % 3 == 0 ? 3 : qubits;
    return PauliErrorSeq(std::move(labels), width);
}

namespace {

// Stabilizer label code membership, precomputed for the per-trial loop.
struct Adjudicator {
    Field field;
    RowSpan span;

    bool harmless(const PauliErrorSeq& residual) const {
        if (hamming_weight(residual.labels) == 0) return true;
        if (field == Field::GF4) return span.contains(residual.labels.symbols);
        auto [bit, phase] = split_planes(residual);
        return span.contains(bit.symbols) && span.contains(phase.symbols);
    }
};

Adjudicator make_adjudicator(const CodePair& pair, int frame_blocks) {
    if (pair.is_conv()) {
        BlockCodeSpec terminated = terminate(*pair.stabilizer_conv, frame_blocks);
        return Adjudicator{terminated.field, RowSpan(terminated.field, terminated.generators)};
    }
    const auto& stab = *pair.stabilizer_block;
    return Adjudicator{stab.field, RowSpan(stab.field, stab.generators)};
}

struct DecodeResult {
    PauliErrorSeq estimate;
    std::uint64_t detected = 0;
};

using DecodeFn = std::function<DecodeResult(const PauliErrorSeq&)>;

std::uint64_t count_detected(const DecodeOutcome& o) {
    std::uint64_t n = 0;
    for (const auto& e : o.events) n += e.kind == EventKind::detected_uncorrectable;
    return n;
}

PauliErrorSeq merge_plane_estimates(const DecodeOutcome& bit, const DecodeOutcome& phase) {
    return merge_planes(bit.estimate, phase.estimate);
}

DecodeFn make_decoder(const CodePair& pair, DecoderId id) {
    if (pair.is_conv()) {
        const ConvCodeSpec stab = *pair.stabilizer_conv;
        bool css = stab.field == Field::GF2;
        if (id == DecoderId::table) {
            if (!css)
                return [stab](const PauliErrorSeq& e) {
                    auto out = decode_conv_f4(syndromes_conv(e.labels.symbols, stab));
                    return DecodeResult{PauliErrorSeq(out.estimate.symbols), count_detected(out)};
                };
            return [stab](const PauliErrorSeq& e) {
                auto [bit, phase] = split_planes(e);
                auto ob = decode_conv_css(syndromes_conv(bit.symbols, stab));
                auto op = decode_conv_css(syndromes_conv(phase.symbols, stab));
                return DecodeResult{merge_plane_estimates(ob, op),
                                    count_detected(ob) + count_detected(op)};
            };
        }
        if (id == DecoderId::viterbi) {
            if (!css)
                return [stab](const PauliErrorSeq& e) {
                    auto est = viterbi_coset_leader(stab, syndromes_conv(e.labels.symbols, stab));
                    return DecodeResult{PauliErrorSeq(std::move(est)), 0};
                };
            return [stab](const PauliErrorSeq& e) {
                auto [bit, phase] = split_planes(e);
                auto eb = viterbi_coset_leader(stab, syndromes_conv(bit.symbols, stab));
                auto ep = viterbi_coset_leader(stab, syndromes_conv(phase.symbols, stab));
                FVec b(Field::GF2, std::move(eb), 3), q(Field::GF2, std::move(ep), 3);
                return DecodeResult{merge_planes(b, q), 0};
            };
        }
        throw std::invalid_argument("decoder " + decoder_name(id) + " not available for convolutional codes");
    }

    const BlockCodeSpec stab = *pair.stabilizer_block;
    if (id == DecoderId::viterbi)
        throw std::invalid_argument("viterbi decoder applies only to convolutional codes");
    if (id == DecoderId::table && pair.name == "tb9") {
        return [stab](const PauliErrorSeq& e) {
            auto out = decode_tb9(syndromes_tb(e.labels.symbols, stab, 1));
            return DecodeResult{PauliErrorSeq(out.estimate.symbols), count_detected(out)};
        };
    }
    if (id == DecoderId::table && pair.name == "tb15") {
        return [stab](const PauliErrorSeq& e) {
            auto [bit, phase] = split_planes(e);
            auto ob = decode_tb15(syndromes_tb(bit.symbols, stab, 2));
            auto op = decode_tb15(syndromes_tb(phase.symbols, stab, 2));
            return DecodeResult{merge_plane_estimates(ob, op), count_detected(ob) + count_detected(op)};
        };
    }
    // generic coset-leader lookup (also the "table" decoder for plain block codes)
    auto table = std::make_shared<CosetTable>(coset_leader_table(pair));
    if (stab.field == Field::GF4) {
        return [stab, table](const PauliErrorSeq& e) {
            auto leader = decode_block_lookup(*table, block_syndrome(stab, e.labels.symbols));
            return DecodeResult{PauliErrorSeq(std::move(leader), e.labels.block_width), 0};
        };
    }
    return [stab, table](const PauliErrorSeq& e) {
        auto [bit, phase] = split_planes(e);
        auto lb = decode_block_lookup(*table, block_syndrome(stab, bit.symbols));
        auto lp = decode_block_lookup(*table, block_syndrome(stab, phase.symbols));
        FVec b(Field::GF2, std::move(lb), bit.block_width), q(Field::GF2, std::move(lp), bit.block_width);
        return DecodeResult{merge_planes(b, q), 0};
    };
}

}  // namespace

bool adjudicate(const CodePair& pair, const PauliErrorSeq& actual, const PauliErrorSeq& estimate) {
    if (actual.qubits() != estimate.qubits()) throw std::invalid_argument("adjudicate: length mismatch");
    Adjudicator adj = make_adjudicator(pair, actual.blocks());
    PauliErrorSeq residual(add_vec(actual.labels.symbols, estimate.labels.symbols),
                           actual.labels.block_width);
    return adj.harmless(residual);
}

TrialReport monte_carlo(const CodePair& pair, DecoderId decoder, const ChannelParams& params,
                        std::uint64_t trials, int threads) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");

    const bool conv = pair.is_conv();
    const int L = conv ? params.frame_blocks : 1;
    const int nu = conv ? pair.stabilizer_conv->memory : 0;
    if (conv && L < 2 * nu + 2) throw std::invalid_argument("frame_blocks too small for this code");
    const int n = conv ? L * pair.stabilizer_conv->block_width : pair.params.n;
    const int width = conv ? 3 : pair.stabilizer_block->block_width;
    // errors land on interior blocks only (conv); block codes use all qubits
    const int first_qubit = conv ? nu * 3 : 0;
    const int last_qubit = conv ? (L - nu) * 3 : n;

    DecodeFn decode = make_decoder(pair, decoder);
    Adjudicator adj = make_adjudicator(pair, L);

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::clamp(nthreads, 1, 32);

    std::vector<std::uint64_t> failures(static_cast<std::size_t>(nthreads), 0);
    std::vector<std::uint64_t> detected(static_cast<std::size_t>(nthreads), 0);

    auto worker = [&](int tid) {
        std::uint64_t fail = 0, det = 0;
        std::vector<Sym> labels(static_cast<std::size_t>(n));
        for (std::uint64_t t = static_cast<std::uint64_t>(tid); t < trials;
             t += static_cast<std::uint64_t>(nthreads)) {
            SplitMix64 rng(trial_stream_seed(params.seed, t));
            std::fill(labels.begin(), labels.end(), 0);
            sample_range(params, labels, first_qubit, last_qubit, rng);
            if (std::all_of(labels.begin(), labels.end(), [](Sym s) { return s == 0; })) continue;
            PauliErrorSeq actual(labels, width);
            DecodeResult r = decode(actual);
            det += r.detected;
            PauliErrorSeq residual(add_vec(actual.labels.symbols, r.estimate.labels.symbols), width);
            if (!adj.harmless(residual)) ++fail;
        }
        failures[static_cast<std::size_t>(tid)] = fail;
        detected[static_cast<std::size_t>(tid)] = det;
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    TrialReport rep;
    rep.code = pair.name;
    rep.decoder = decoder_name(decoder);
    rep.p = params.p;
    rep.trials = trials;
    rep.seed = params.seed;
    for (auto f : failures) rep.logical_failures += f;
    for (auto d : detected) rep.detected_events += d;
    rep.rate = static_cast<double>(rep.logical_failures) / static_cast<double>(trials);
    const double k_norm = conv ? static_cast<double>(L - 2 * nu) : static_cast<double>(pair.params.k);
    rep.rate_per_encoded_qubit = rep.rate / k_norm;
    rep.std_error = std::sqrt(std::max(rep.rate * (1.0 - rep.rate), 0.0) / static_cast<double>(trials));
    if (params.p > 0.0) {
        const double p2 = params.p * params.p;
        rep.c = rep.rate_per_encoded_qubit / p2;
        rep.c_lo = std::max(0.0, rep.rate - 1.96 * rep.std_error) / k_norm / p2;
        rep.c_hi = (rep.rate + 1.96 * rep.std_error) / k_norm / p2;
    }
    return rep;
}

FitResult fit_coefficient(const std::vector<TrialReport>& reports) {
    std::vector<const TrialReport*> usable;
    for (const auto& r : reports)
        if (r.p > 0.0 && r.logical_failures > 0) usable.push_back(&r);
    std::sort(usable.begin(), usable.end(),
              [](const TrialReport* a, const TrialReport* b) { return a->p < b->p; });
    std::vector<const TrialReport*> distinct;
    for (auto* r : usable)
        if (distinct.empty() || distinct.back()->p != r->p) distinct.push_back(r);
    if (distinct.size() < 2)
        throw std::invalid_argument("fit_coefficient: need at least two distinct p values with failures");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(distinct.size());
    for (auto* r : distinct) {
        double x = std::log(r->p), y = std::log(r->rate_per_encoded_qubit);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    FitResult fit;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.coefficient = distinct.front()->c;
    return fit;
}

std::string trial_report_csv_header() {
    return "code,decoder,p,trials,failures,detected,rate,rate_per_qubit,c,c_lo,c_hi,seed";
}

namespace {
std::string fmt(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}
}  // namespace

std::string trial_report_csv_row(const TrialReport& r) {
    std::ostringstream os;
    os << r.code << ',' << r.decoder << ',' << fmt(r.p) << ',' << r.trials << ','
       << r.logical_failures << ',' << r.detected_events << ',' << fmt(r.rate) << ','
       << fmt(r.rate_per_encoded_qubit) << ',' << fmt(r.c) << ',' << fmt(r.c_lo) << ','
       << fmt(r.c_hi) << ',' << r.seed;
    return os.str();
}

std::string trial_report_text(const TrialReport& r) {
    std::ostringstream os;
    os << "code " << r.code << "\ndecoder " << r.decoder << "\np " << fmt(r.p) << "\ntrials "
       << r.trials << "\nfailures " << r.logical_failures << "\ndetected " << r.detected_events
       << "\nrate " << fmt(r.rate) << "\nrate_per_qubit " << fmt(r.rate_per_encoded_qubit) << "\nc "
       << fmt(r.c) << "\nc_lo " << fmt(r.c_lo) << "\nc_hi " << fmt(r.c_hi) << "\nseed " << r.seed
       << "\nrng " << r.rng << "\n";
    return os.str();
}

}  // namespace qec13
