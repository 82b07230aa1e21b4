#include "qec13/pauli.hpp"

#include <stdexcept>

namespace qec13 {

Sym pauli_to_label(Pauli p) {
    switch (p) {
        case Pauli::I: return kZero;
        case Pauli::X: return kOmega;
        case Pauli::Y: return kOne;
        case Pauli::Z: return kOmegaBar;
    }
    throw std::invalid_argument("invalid Pauli symbol");
}

Pauli label_to_pauli(Sym s) {
    switch (s) {
        case kZero: return Pauli::I;
        case kOmega: return Pauli::X;
        case kOne: return Pauli::Y;
        case kOmegaBar: return Pauli::Z;
    }
    throw std::invalid_argument("label out of range");
}

namespace {
// bit-flip bit, phase-flip bit per label value 0,1,w,W.
constexpr Sym kBitPlane[4] = {0, 1, 1, 0};
constexpr Sym kPhasePlane[4] = {0, 1, 0, 1};
}  // namespace

std::pair<FVec, FVec> split_planes(const PauliErrorSeq& e) {
    std::vector<Sym> bit(e.qubits()), phase(e.qubits());
    for (std::size_t i = 0; i < e.qubits(); ++i) {
        bit[i] = kBitPlane[e.labels[i]];
        phase[i] = kPhasePlane[e.labels[i]];
    }
    int w = e.labels.block_width;
    return {FVec(Field::GF2, std::move(bit), w), FVec(Field::GF2, std::move(phase), w)};
}

PauliErrorSeq merge_planes(const FVec& bitflip, const FVec& phaseflip) {
    if (bitflip.size() != phaseflip.size()) throw std::invalid_argument("merge_planes: length mismatch");
    // inverse of the plane map: (0,0)->0, (1,0)->w, (1,1)->1, (0,1)->W
    constexpr Sym merged[2][2] = {{kZero, kOmegaBar}, {kOmega, kOne}};
    std::vector<Sym> labels(bitflip.size());
    for (std::size_t i = 0; i < bitflip.size(); ++i) labels[i] = merged[bitflip[i]][phaseflip[i]];
    return PauliErrorSeq(std::move(labels), bitflip.block_width);
}

int weight(const PauliErrorSeq& e) { return hamming_weight(e.labels); }

std::string format_pauli(const PauliErrorSeq& e) {
    std::string out;
    for (std::size_t i = 0; i < e.qubits(); ++i) {
        if (i > 0 && i % static_cast<std::size_t>(e.labels.block_width) == 0) out += ' ';
        out += static_cast<char>(label_to_pauli(e.labels[i]));
    }
    return out;
}

PauliErrorSeq parse_pauli(const std::string& s) {
    std::vector<Sym> labels;
    for (char c : s) {
        if (c == ' ') continue;
        switch (c) {
            case 'I': labels.push_back(kZero); break;
            case 'X': labels.push_back(kOmega); break;
            case 'Y': labels.push_back(kOne); break;
            case 'Z': labels.push_back(kOmegaBar); break;
            default: throw std::invalid_argument(std::string("bad Pauli character: ") + c);
        }
    }
    return PauliErrorSeq(std::move(labels));
}

}  // namespace qec13
