#pragma once

#include <vector>

#include "qec13/codes.hpp"
#include "qec13/pauli.hpp"

// Syndrome computation and the decoding algorithms: the sliding-window
// table decoders for both convolutional codes, the circular tail-biting
// decoders, the generic coset-leader block decoder, and a Viterbi
// minimum-weight oracle over the syndrome-former trellis.
//
// Syndrome indexing: S_j is the inner product of the error sequence with
// the stabilizer generator shift whose support ENDS at block j (the
// shift starting at block j - memory). Under this labeling the derived
// single-error tables read off in scan order exactly as displayed.

namespace qec13 {

struct SyndromeSeq {
    Field field = Field::GF4;
    int memory = 0;             // entries 0..memory-1 are structurally zero
    std::vector<Sym> values;    // one per block of the decoded frame

    int blocks() const { return static_cast<int>(values.size()); }
};

enum class EventKind { corrected, detected_uncorrectable };

struct DecodeEvent {
    int block = 0;
    EventKind kind = EventKind::corrected;
};

struct DecodeOutcome {
    FVec estimate;                    // GF4 labels, or a single GF2 plane
    std::vector<DecodeEvent> events;
    bool residual_syndrome_zero = true;
};

// One row of a derived single-error table: the error 3-tuple, the
// syndrome window read from the first nonzero syndrome onward, and the
// offset from that anchor index to the errored block.
struct SingleErrorRow {
    std::vector<Sym> error;
    std::vector<Sym> window;
    int block_offset = 0;
};

// The 9-entry GF(4) table (windows are (S_j, S_j+1) pairs) and the
// 3-entry CSS bit-plane table (windows are (s_j, s_j+1, s_j+2) triples),
// derived from the stabilizer generator.
std::vector<SingleErrorRow> single_error_table(const ConvCodeSpec& stabilizer);

// Syndromes of a label sequence over an L-block frame against all
// stabilizer generator shifts fully contained in the frame. Entries
// 0..memory-1 have no ending generator and are zero.
SyndromeSeq syndromes_conv(std::span<const Sym> labels, const ConvCodeSpec& stabilizer);

// Circular syndromes for a tail-biting block code, one per stabilizer
// row, labeled so that s_j belongs to the wrapped generator ending at
// block j. `memory` is the memory of the convolutional code the
// tail-biting code was derived from.
std::vector<Sym> syndromes_tb(std::span<const Sym> labels, const BlockCodeSpec& stabilizer,
                              int memory);

// Scanning 9-entry table decoder for the GF(4) convolutional code.
DecodeOutcome decode_conv_f4(const SyndromeSeq& s);

// Scanning 3-entry table decoder for one CSS plane.
DecodeOutcome decode_conv_css(const SyndromeSeq& s);

// Circular decoders for the tail-biting codes.
DecodeOutcome decode_tb9(std::span<const Sym> s);
DecodeOutcome decode_tb15(std::span<const Sym> s);

// Stored-leader lookup; throws if the syndrome is outside the table.
std::vector<Sym> decode_block_lookup(const CosetTable& table, const std::vector<Sym>& syndrome);

// Minimum-Hamming-weight label sequence consistent with the given
// syndromes, by shortest-path search over the stabilizer's
// syndrome-former trellis (q^memory states, q^block_width transitions
// per state and block). Ties broken lexicographically in canonical
// integer encoding.
std::vector<Sym> viterbi_coset_leader(const ConvCodeSpec& stabilizer, const SyndromeSeq& s);

}  // namespace qec13
