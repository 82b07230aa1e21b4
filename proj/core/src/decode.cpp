#include "qec13/decode.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qec13 {

namespace {

// Syndrome window of a single-error tuple placed in an interior block:
// values S_b .. S_{b+memory} in the end-labeled indexing, where
// S_{b+m} = <e, B_{memory-m}> with B_m the m-th block of the generator.
std::vector<Sym> raw_window(const ConvCodeSpec& stab, std::span<const Sym> e) {
    std::vector<Sym> win(static_cast<std::size_t>(stab.memory + 1));
    for (int m = 0; m <= stab.memory; ++m)
        win[static_cast<std::size_t>(m)] = field_inner(stab.field, e, stab.block(0, stab.memory - m));
    return win;
}

}  // namespace

std::vector<SingleErrorRow> single_error_table(const ConvCodeSpec& stabilizer) {
    stabilizer.validate();
    if (stabilizer.basic_generators.size() != 1)
        throw std::invalid_argument("single_error_table: expected one basic generator row");
    int n = stabilizer.block_width;
    std::vector<Sym> nonzero =
        stabilizer.field == Field::GF4 ? std::vector<Sym>{1, kOmega, kOmegaBar} : std::vector<Sym>{1};
    std::vector<SingleErrorRow> rows;
    for (int pos = 0; pos < n; ++pos) {
        for (Sym v : nonzero) {
            SingleErrorRow row;
            row.error.assign(static_cast<std::size_t>(n), 0);
            row.error[static_cast<std::size_t>(pos)] = v;
            std::vector<Sym> win = raw_window(stabilizer, row.error);
            // Read the window from its first nonzero entry; the offset
            // from that anchor back to the errored block is what the
            // decoder needs to place the correction.
            std::size_t first = 0;
            while (first < win.size() && win[first] == 0) ++first;
            if (first == win.size())
                throw std::logic_error("weight-1 error with all-zero syndrome window");
            row.block_offset = -static_cast<int>(first);
            row.window.assign(win.begin() + static_cast<std::ptrdiff_t>(first), win.end());
            row.window.resize(win.size(), 0);  // pad with trailing zeros to fixed width
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

SyndromeSeq syndromes_conv(std::span<const Sym> labels, const ConvCodeSpec& stabilizer) {
    stabilizer.validate();
    int n = stabilizer.block_width;
    int nu = stabilizer.memory;
    if (labels.size() % static_cast<std::size_t>(n) != 0)
        throw std::invalid_argument("syndromes_conv: length not a multiple of block width");
    int L = static_cast<int>(labels.size()) / n;
    if (L < nu + 1) throw std::invalid_argument("syndromes_conv: frame too short");

    SyndromeSeq s;
    s.field = stabilizer.field;
    s.memory = nu;
    s.values.assign(static_cast<std::size_t>(L), 0);
    const auto& gen = stabilizer.basic_generators[0];
    for (int j = nu; j < L; ++j) {
        // generator shift starting at block j - nu
        auto window = labels.subspan(static_cast<std::size_t>((j - nu) * n), gen.size());
        s.values[static_cast<std::size_t>(j)] = field_inner(stabilizer.field, window, gen);
    }
    return s;
}

std::vector<Sym> syndromes_tb(std::span<const Sym> labels, const BlockCodeSpec& stabilizer,
                              int memory) {
    if (static_cast<int>(labels.size()) != stabilizer.length)
        throw std::invalid_argument("syndromes_tb: length mismatch");
    int N = stabilizer.dimension();  // one wrapped row per block
    std::vector<Sym> s(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        int row = ((j - memory) % N + N) % N;  // row starting at block j - memory ends at j
        s[static_cast<std::size_t>(j)] =
            field_inner(stabilizer.field, labels, stabilizer.generators[static_cast<std::size_t>(row)]);
    }
    return s;
}

DecodeOutcome decode_conv_f4(const SyndromeSeq& s) {
    static const std::vector<SingleErrorRow> table = single_error_table([] {
        ConvCodeSpec c;
        c.name = "f4_conv_stab";
        c.field = Field::GF4;
        c.memory = 1;
        c.basic_generators = {{1, 1, 1, 1, kOmega, kOmegaBar}};
        return c;
    }());
    static const auto lookup = [] {
        std::map<std::pair<Sym, Sym>, std::vector<Sym>> m;
        for (const auto& row : table) m[{row.window[0], row.window[1]}] = row.error;
        return m;
    }();

    int L = s.blocks();
    DecodeOutcome out;
    out.estimate = FVec(Field::GF4, std::vector<Sym>(static_cast<std::size_t>(3 * L), 0), 3);
    int j = 0;
    while (j < L) {
        Sym sj = s.values[static_cast<std::size_t>(j)];
        if (sj == 0) {
            ++j;
            continue;
        }
        Sym snext = j + 1 < L ? s.values[static_cast<std::size_t>(j + 1)] : Sym{0};
        if (snext == 0) {
            // isolated nonzero syndrome: a weight-2 error was detected
            out.events.push_back({j, EventKind::detected_uncorrectable});
            out.residual_syndrome_zero = false;
            ++j;
            continue;
        }
        const auto& e = lookup.at({sj, snext});  // all 9 nonzero pairs are present
        for (int i = 0; i < 3; ++i) out.estimate[static_cast<std::size_t>(3 * j + i)] = e[static_cast<std::size_t>(i)];
        out.events.push_back({j, EventKind::corrected});
        j += 2;  // the correction fully accounts for S_j and S_{j+1}
    }
    return out;
}

DecodeOutcome decode_conv_css(const SyndromeSeq& s) {
    int L = s.blocks();
    DecodeOutcome out;
    out.estimate = FVec(Field::GF2, std::vector<Sym>(static_cast<std::size_t>(3 * L), 0), 3);
    auto set = [&](int block, int pos) {
        if (block >= 0) out.estimate[static_cast<std::size_t>(3 * block + pos)] = 1;
    };
    auto correct = [&](int block, int pos) {
        set(block, pos);
        out.events.push_back({block, EventKind::corrected});
    };
    auto at = [&](int i) { return i < L ? s.values[static_cast<std::size_t>(i)] : Sym{0}; };
    int j = 0;
    while (j < L) {
        if (at(j) == 0) {
            ++j;
            continue;
        }
        // A position-2 error announces itself only on the generator ending
        // two blocks later, so its isolated syndrome can collide with the
        // leading run of an error three blocks after it. The two pair rules
        // below recognize exactly those overlaps; without them the advertised
        // one-error-every-third-block spacing fails when the first error sits
        // in position 2.
        Sym s1 = at(j + 1), s2 = at(j + 2), s3 = at(j + 3), s4 = at(j + 4), s5 = at(j + 5);
        if (s1 == 1 && s2 == 1) {
            if (s3 == 1 && s4 == 0 && s5 == 0) {  // (0,0,1) at j-2 plus (1,0,0) at j+1
                correct(j - 2, 2);
                correct(j + 1, 0);
                j += 4;
            } else {                              // (1,1,1): first position of block j
                correct(j, 0);
                j += 3;
            }
        } else if (s1 == 0 && s2 == 1) {          // (1,0,1): second position of block j
            correct(j, 1);
            j += 3;
        } else if (s1 == 0 && s2 == 0) {          // isolated 1: third position, two blocks back
            correct(j - 2, 2);
            ++j;                                  // consumed only s_j; the very next
                                                  // syndrome may anchor a new error
        } else if (s3 == 1 && s4 == 0 && s5 == 0) {  // (0,0,1) at j-2 plus (0,1,0) at j+1
            correct(j - 2, 2);
            correct(j + 1, 1);
            j += 4;
        } else {                                  // (1,1,0): no weight-1 error fits
            out.events.push_back({j, EventKind::detected_uncorrectable});
            out.residual_syndrome_zero = false;
            j += 2;
        }
    }
    return out;
}

DecodeOutcome decode_tb9(std::span<const Sym> s) {
    if (s.size() != 3) throw std::invalid_argument("decode_tb9: expected 3 syndromes");
    static const auto lookup = [] {
        ConvCodeSpec c;
        c.field = Field::GF4;
        c.memory = 1;
        c.name = "f4_conv_stab";
        c.basic_generators = {{1, 1, 1, 1, kOmega, kOmegaBar}};
        std::map<std::pair<Sym, Sym>, std::vector<Sym>> m;
        for (const auto& row : single_error_table(c)) m[{row.window[0], row.window[1]}] = row.error;
        return m;
    }();

    DecodeOutcome out;
    out.estimate = FVec(Field::GF4, std::vector<Sym>(9, 0), 3);
    int zeros = 0, zero_at = -1;
    for (int i = 0; i < 3; ++i)
        if (s[static_cast<std::size_t>(i)] == 0) {
            ++zeros;
            zero_at = i;
        }
    if (zeros == 3) return out;
    if (zeros != 1) {
        out.events.push_back({0, EventKind::detected_uncorrectable});
        out.residual_syndrome_zero = false;
        return out;
    }
    int j = (zero_at + 1) % 3;  // the zero syndrome tells which block the error is in
    const auto& e = lookup.at({s[static_cast<std::size_t>(j)], s[static_cast<std::size_t>((j + 1) % 3)]});
    for (int i = 0; i < 3; ++i) out.estimate[static_cast<std::size_t>(3 * j + i)] = e[static_cast<std::size_t>(i)];
    out.events.push_back({j, EventKind::corrected});
    return out;
}

DecodeOutcome decode_tb15(std::span<const Sym> s) {
    if (s.size() != 5) throw std::invalid_argument("decode_tb15: expected 5 syndromes");
    DecodeOutcome out;
    out.estimate = FVec(Field::GF2, std::vector<Sym>(15, 0), 3);
    if (std::all_of(s.begin(), s.end(), [](Sym v) { return v == 0; })) return out;

    auto at = [&](int i) { return s[static_cast<std::size_t>(((i % 5) + 5) % 5)]; };
    // the first syndrome 1 after two zeroes, on the circular axis
    std::vector<int> anchors;
    for (int j = 0; j < 5; ++j)
        if (at(j) == 1 && at(j - 1) == 0 && at(j - 2) == 0) anchors.push_back(j);

    auto detect = [&] {
        out.events.push_back({anchors.empty() ? 0 : anchors.front(), EventKind::detected_uncorrectable});
        out.residual_syndrome_zero = false;
        return out;
    };
    if (anchors.size() != 1) return detect();
    int j = anchors.front();
    Sym s1 = at(j + 1), s2 = at(j + 2);
    int block, pos;
    if (s1 == 1 && s2 == 1) { block = j; pos = 0; }
    else if (s1 == 0 && s2 == 1) { block = j; pos = 1; }
    else if (s1 == 0 && s2 == 0) { block = (j + 3) % 5; pos = 2; }
    else return detect();  // (1,0) matches no weight-1 error

    out.estimate[static_cast<std::size_t>(3 * block + pos)] = 1;
    // guard against multi-error patterns that mimic a single-error anchor
    static const Sym basic[9] = {1, 1, 1, 1, 0, 0, 1, 1, 0};
    for (int k = 0; k < 5; ++k) {
        Sym expect = 0;
        // wrapped generator ending at block k starts at block k-2
        for (int m = 0; m <= 2; ++m) {
            int b = ((k - 2 + m) % 5 + 5) % 5;
            for (int i = 0; i < 3; ++i)
                expect ^= static_cast<Sym>(out.estimate[static_cast<std::size_t>(3 * b + i)] & basic[3 * m + i]);
        }
        if (expect != at(k)) {
            out.estimate[static_cast<std::size_t>(3 * block + pos)] = 0;
            return detect();
        }
    }
    out.events.push_back({block, EventKind::corrected});
    return out;
}

std::vector<Sym> decode_block_lookup(const CosetTable& table, const std::vector<Sym>& syndrome) {
    auto it = table.find(syndrome);
    if (it == table.end()) throw std::invalid_argument("decode_block_lookup: syndrome outside table domain");
    return it->second;
}

std::vector<Sym> viterbi_coset_leader(const ConvCodeSpec& stabilizer, const SyndromeSeq& s) {
    stabilizer.validate();
    if (stabilizer.basic_generators.size() != 1)
        throw std::invalid_argument("viterbi_coset_leader: expected one basic generator row");
    const int n = stabilizer.block_width;
    const int nu = stabilizer.memory;
    const int q = stabilizer.field == Field::GF4 ? 4 : 2;
    const int L = s.blocks();
    if (L < nu + 1) throw std::invalid_argument("viterbi_coset_leader: frame too short");

    int num_states = 1;
    for (int i = 0; i < nu; ++i) num_states *= q;
    int num_tuples = 1;
    for (int i = 0; i < n; ++i) num_tuples *= q;

    // Precompute per-tuple weights and generator-block inner products.
    std::vector<int> tuple_weight(static_cast<std::size_t>(num_tuples));
    std::vector<std::vector<Sym>> tuple_inner(static_cast<std::size_t>(nu + 1),
                                              std::vector<Sym>(static_cast<std::size_t>(num_tuples)));
    std::vector<Sym> tuple(static_cast<std::size_t>(n));
    for (int t = 0; t < num_tuples; ++t) {
        int x = t;
        for (int i = n - 1; i >= 0; --i) {
            tuple[static_cast<std::size_t>(i)] = static_cast<Sym>(x % q);
            x /= q;
        }
        tuple_weight[static_cast<std::size_t>(t)] = hamming_weight(std::span<const Sym>(tuple));
        for (int m = 0; m <= nu; ++m)
            tuple_inner[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)] =
                field_inner(stabilizer.field, tuple, stabilizer.block(0, m));
    }

    // State after block b: partial sums of the nu syndromes still open,
    // state digit m = partial sum for the generator shift starting at
    // block b - m (completing at block b - m + nu).
    struct Path {
        int weight;
        std::vector<std::uint8_t> tuples;  // one tuple code per block
    };
    constexpr int kInf = 1 << 28;
    std::vector<Path> cur(static_cast<std::size_t>(num_states), Path{kInf, {}});
    cur[0] = Path{0, {}};

    auto digit = [&](int state, int m) {
        for (int i = 0; i < m; ++i) state /= q;
        return static_cast<Sym>(state % q);
    };

    for (int b = 0; b < L; ++b) {
        std::vector<Path> next(static_cast<std::size_t>(num_states), Path{kInf, {}});
        for (int state = 0; state < num_states; ++state) {
            const Path& p = cur[static_cast<std::size_t>(state)];
            if (p.weight >= kInf) continue;
            for (int t = 0; t < num_tuples; ++t) {
                // The shift starting at block b - nu completes on block b,
                // where its part is B_nu. Shifts with negative start are
                // not measured, so no constraint applies before block nu.
                if (b - nu >= 0) {
                    Sym completed = nu > 0 ? digit(state, nu - 1) : Sym{0};
                    completed = f4_add(
                        completed, tuple_inner[static_cast<std::size_t>(nu)][static_cast<std::size_t>(t)]);
                    if (completed != s.values[static_cast<std::size_t>(b)]) continue;
                }
                // After block b, digit m holds the partial sum of the shift
                // starting at block b - m.
                int new_state = 0;
                for (int m = nu - 1; m >= 0; --m) {
                    Sym v = m == 0 ? tuple_inner[0][static_cast<std::size_t>(t)]
                                   : f4_add(digit(state, m - 1),
                                            tuple_inner[static_cast<std::size_t>(m)][static_cast<std::size_t>(t)]);
                    new_state = new_state * q + v;
                }

                int wt = p.weight + tuple_weight[static_cast<std::size_t>(t)];
                Path& slot = next[static_cast<std::size_t>(new_state)];
                if (wt > slot.weight) continue;
                std::vector<std::uint8_t> cand = p.tuples;
                cand.push_back(static_cast<std::uint8_t>(t));
                if (wt < slot.weight || cand < slot.tuples) {
                    slot.weight = wt;
                    slot.tuples = std::move(cand);
                }
            }
        }
        cur = std::move(next);
    }

    // Shifts still open at the frame end overhang it and are unmeasured,
    // so every final state is admissible.
    const Path* best = nullptr;
    for (const auto& p : cur) {
        if (p.weight >= kInf) continue;
        if (!best || p.weight < best->weight ||
            (p.weight == best->weight && p.tuples < best->tuples))
            best = &p;
    }
    if (!best) throw std::logic_error("viterbi_coset_leader: no consistent path");

    std::vector<Sym> labels(static_cast<std::size_t>(L * n));
    for (int b = 0; b < L; ++b) {
        int x = best->tuples[static_cast<std::size_t>(b)];
        for (int i = n - 1; i >= 0; --i) {
            labels[static_cast<std::size_t>(b * n + i)] = static_cast<Sym>(x % q);
            x /= q;
        }
    }
    return labels;
}

}  // namespace qec13
