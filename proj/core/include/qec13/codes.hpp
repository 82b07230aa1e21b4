#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qec13/gf4.hpp"

// Code models: shift-invariant convolutional codes given by basic
// per-block generator rows, finite block codes, and the paired
// stabilizer/normalizer structure. Includes the bundled code
// constructions, termination and tail-biting transforms, and the
// brute-force structural checks (self-orthogonality, distances,
// coset-leader tables).

namespace qec13 {

enum class RoleTag { stabilizer_label, normalizer_label, classical };

// A shift-invariant code: every codeword is a linear combination of
// block-shifts of the basic generator rows. Each row stores (memory+1)
// blocks of block_width symbols; the symbols of block m are the
// coefficients of D^m in the row's D-transform.
struct ConvCodeSpec {
    std::string name;
    Field field = Field::GF4;
    int block_width = 3;
    int memory = 0;  // nu, in blocks
    std::vector<std::vector<Sym>> basic_generators;

    int row_symbols() const { return (memory + 1) * block_width; }
    void validate() const;

    // Block m of row r, as a span of block_width symbols.
    std::span<const Sym> block(int row, int m) const;
};

struct BlockCodeSpec {
    std::string name;
    Field field = Field::GF4;
    int length = 0;
    int block_width = 3;
    RoleTag role_tag = RoleTag::classical;
    std::vector<std::vector<Sym>> generators;

    int dimension() const { return static_cast<int>(generators.size()); }
    void validate() const;  // independence, and self-orthogonality for stabilizer rows
};

struct QuantumParams {
    int n = 0, k = 0, d = 0;
    bool operator==(const QuantumParams&) const = default;
};

// Stabilizer label code C and normalizer label code C-perp, with the
// quantum [n,k,d] parameters they define. Exactly one of the
// block/conv alternatives is populated for each side.
struct CodePair {
    std::string name;
    QuantumParams params;
    std::optional<BlockCodeSpec> stabilizer_block, normalizer_block;
    std::optional<ConvCodeSpec> stabilizer_conv, normalizer_conv;

    bool is_conv() const { return stabilizer_conv.has_value(); }
    Field field() const;
};

// Bundled constructions. Names: five_qubit, steane, f4_conv, css_conv,
// tb9, tb15, terminated_f4(N), terminated_css(N); the parenthesized
// forms take a block-count argument, e.g. "terminated_f4(3)".
CodePair preset(const std::string& name);
std::vector<std::string> preset_names();

bool check_self_orthogonal(const ConvCodeSpec& code);
bool check_self_orthogonal(const BlockCodeSpec& code);
bool verify_dual_pair(const CodePair& pair);

// All shifts of the basic generators fully contained in an N-block
// window. Preserves distance, lowers rate.
BlockCodeSpec terminate(const ConvCodeSpec& conv, int N);

// All shifts starting in an N-block window, overhang wrapped cyclically
// to the beginning. Row order: start block ascending, then basic row
// index, matching the displayed tail-biting matrices.
BlockCodeSpec tailbite(const ConvCodeSpec& conv, int N);

// Minimum Hamming weight over all nonzero codewords, by exhaustive
// span enumeration. Throws if q^dim exceeds 2^20.
int min_distance(const BlockCodeSpec& code);

// Minimum weight over nonzero codewords generated by inputs supported
// on at most `horizon` consecutive blocks. Equals the free distance for
// these short-memory codes.
int free_distance(const ConvCodeSpec& conv, int horizon);

// Syndrome of a vector against the stabilizer rows of a block pair, one
// field element per stabilizer generator, in row order.
std::vector<Sym> block_syndrome(const BlockCodeSpec& stabilizer, std::span<const Sym> v);

// Syndrome tuple -> minimum-weight coset representative; ties broken by
// lexicographically smallest vector in canonical integer encoding.
using CosetTable = std::map<std::vector<Sym>, std::vector<Sym>>;
CosetTable coset_leader_table(const CodePair& pair);

// Structured text format: name/field/block_width/memory plus generator
// rows as integer lists. Round-trips exactly.
std::string serialize_code(const ConvCodeSpec& code);
std::string serialize_code(const BlockCodeSpec& code);
std::string serialize_pair(const CodePair& pair);
CodePair parse_pair(std::istream& in);
CodePair parse_pair_file(const std::string& path);

}  // namespace qec13
