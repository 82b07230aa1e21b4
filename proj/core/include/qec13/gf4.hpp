#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Arithmetic over GF(2) and GF(4) plus the small dense linear-algebra
// kernels (rank, membership, nullspace) everything else is built on.
//
// GF(4) elements use the canonical integer encoding
//   0 -> 0,  1 -> 1,  w (omega) -> 2,  W (omega-bar) -> 3.
// Addition is bitwise xor; conjugation is the Frobenius map x -> x^2.

namespace qec13 {

using Sym = std::uint8_t;

enum class Field : std::uint8_t { GF2 = 2, GF4 = 4 };

inline constexpr Sym kZero = 0;
inline constexpr Sym kOne = 1;
inline constexpr Sym kOmega = 2;
inline constexpr Sym kOmegaBar = 3;

inline constexpr Sym f4_add(Sym a, Sym b) { return a ^ b; }

inline constexpr Sym f4_mul(Sym a, Sym b) {
    // 4x4 product table in canonical encoding.
    constexpr Sym table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    return table[a][b];
}

// conj(x) = x^2: identity on {0,1}, swaps w <-> W.
inline constexpr Sym f4_conj(Sym a) { return a < 2 ? a : static_cast<Sym>(a ^ 1); }

inline constexpr Sym f4_inv(Sym a) {
    if (a == 0) throw std::domain_error("GF(4) inverse of zero");
    constexpr Sym inv[4] = {0, 1, 3, 2};
    return inv[a];
}

// Human-readable symbol alphabet {0, 1, w, W}; machine formats use 0..3.
char f4_char(Sym a);
Sym f4_from_char(char c);

// A vector over GF(2) or GF(4), carrying its block structure.
// GF(2) vectors use the subfield embedding {0,1} of GF(4), so the same
// storage serves both fields.
struct FVec {
    Field field = Field::GF4;
    std::vector<Sym> symbols;
    int block_width = 3;

    FVec() = default;
    FVec(Field f, std::vector<Sym> syms, int width = 3);

    std::size_t size() const { return symbols.size(); }
    int blocks() const { return static_cast<int>(symbols.size()) / block_width; }
    Sym operator[](std::size_t i) const { return symbols[i]; }
    Sym& operator[](std::size_t i) { return symbols[i]; }
    bool operator==(const FVec&) const = default;
};

int hamming_weight(std::span<const Sym> v);
inline int hamming_weight(const FVec& v) { return hamming_weight(std::span<const Sym>(v.symbols)); }

// Hermitian inner product over GF(4): sum_i a_i * conj(b_i).
// Conjugation is applied to the second argument.
Sym hermitian_inner(std::span<const Sym> a, std::span<const Sym> b);
Sym hermitian_inner(const FVec& a, const FVec& b);

// Binary inner product: sum_i a_i b_i mod 2.
Sym f2_inner(std::span<const Sym> a, std::span<const Sym> b);
Sym f2_inner(const FVec& a, const FVec& b);

// Inner product appropriate to the field: Hermitian for GF4, binary for GF2.
Sym field_inner(Field field, std::span<const Sym> a, std::span<const Sym> b);

// Row-echelon basis over the given field, for repeated membership tests.
class RowSpan {
  public:
    RowSpan(Field field, const std::vector<std::vector<Sym>>& rows);

    int rank() const { return static_cast<int>(echelon_.size()); }
    std::size_t length() const { return length_; }

    // True iff v is a linear combination of the original rows.
    bool contains(std::span<const Sym> v) const;

  private:
    Field field_;
    std::size_t length_ = 0;
    std::vector<std::vector<Sym>> echelon_;   // rows with strictly increasing pivots
    std::vector<std::size_t> pivots_;
};

bool membership(Field field, const std::vector<std::vector<Sym>>& rows, std::span<const Sym> v);
int rank(Field field, const std::vector<std::vector<Sym>>& rows);

// Basis of { v : <r_i, v> = 0 for all rows r_i } under the field's inner
// product (Hermitian for GF4, binary for GF2).
std::vector<std::vector<Sym>> orthogonal_complement(Field field,
                                                    const std::vector<std::vector<Sym>>& rows,
                                                    std::size_t length);

inline std::vector<Sym> add_vec(std::span<const Sym> a, std::span<const Sym> b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    std::vector<Sym> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f4_add(a[i], b[i]);
    return out;
}

inline std::vector<Sym> scale_vec(Sym c, std::span<const Sym> a) {
    std::vector<Sym> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f4_mul(c, a[i]);
    return out;
}

std::string format_vec(std::span<const Sym> v, int block_width = 3);

}  // namespace qec13
