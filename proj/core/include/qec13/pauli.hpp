#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qec13/gf4.hpp"

// Pauli <-> label maps: I,X,Y,Z carry the GF(4) labels 0,w,1,W, or the
// CSS bit-pair labels 00,10,11,01 (bit-flip bit first). Phases are not
// tracked; decoding works purely at the label-code level.

namespace qec13 {

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

// I -> 0, X -> w, Y -> 1, Z -> W.
Sym pauli_to_label(Pauli p);
Pauli label_to_pauli(Sym s);

// A block-structured sequence of error labels, one GF(4) symbol per qubit.
struct PauliErrorSeq {
    FVec labels;  // field GF4, block_width 3

    PauliErrorSeq() : labels(Field::GF4, {}, 3) {}
    explicit PauliErrorSeq(std::vector<Sym> syms, int block_width = 3)
        : labels(Field::GF4, std::move(syms), block_width) {}

    std::size_t qubits() const { return labels.size(); }
    int blocks() const { return labels.blocks(); }
    bool operator==(const PauliErrorSeq&) const = default;
};

// Per-qubit plane decomposition: 0 -> (0,0), w -> (1,0), 1 -> (1,1), W -> (0,1).
std::pair<FVec, FVec> split_planes(const PauliErrorSeq& e);
PauliErrorSeq merge_planes(const FVec& bitflip, const FVec& phaseflip);

// Count of nonzero labels.
int weight(const PauliErrorSeq& e);

// "XIZ YII" style rendering, 3-character blocks separated by spaces.
std::string format_pauli(const PauliErrorSeq& e);
PauliErrorSeq parse_pauli(const std::string& s);

}  // namespace qec13
