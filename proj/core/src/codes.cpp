#include "qec13/codes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qec13 {

namespace {

int effective_span(const std::vector<Sym>& row, int block_width, int memory) {
    // index of the last nonzero block
    for (int m = memory; m >= 0; --m)
        for (int i = 0; i < block_width; ++i)
            if (row[static_cast<std::size_t>(m * block_width + i)] != 0) return m;
    return 0;
}

void check_symbols(Field field, const std::vector<Sym>& row) {
    for (Sym s : row)
        if (s > 3 || (field == Field::GF2 && s > 1))
            throw std::invalid_argument("generator symbol outside declared field");
}

}  // namespace

void ConvCodeSpec::validate() const {
    if (memory < 0 || block_width < 1) throw std::invalid_argument("bad conv code dimensions");
    for (const auto& row : basic_generators) {
        if (static_cast<int>(row.size()) != row_symbols())
            throw std::invalid_argument("conv generator row has wrong length");
        check_symbols(field, row);
    }
}

std::span<const Sym> ConvCodeSpec::block(int row, int m) const {
    const auto& r = basic_generators[static_cast<std::size_t>(row)];
    return std::span<const Sym>(r).subspan(static_cast<std::size_t>(m * block_width),
                                           static_cast<std::size_t>(block_width));
}

void BlockCodeSpec::validate() const {
    for (const auto& row : generators) {
        if (static_cast<int>(row.size()) != length)
            throw std::invalid_argument("block generator row has wrong length");
        check_symbols(field, row);
    }
    if (rank(field, generators) != dimension())
        throw std::invalid_argument(name + ": generator rows are not independent");
    if (role_tag == RoleTag::stabilizer_label && !check_self_orthogonal(*this))
        throw std::invalid_argument(name + ": stabilizer rows are not self-orthogonal");
}

Field CodePair::field() const {
    if (stabilizer_block) return stabilizer_block->field;
    if (stabilizer_conv) return stabilizer_conv->field;
    throw std::logic_error("empty code pair");
}

bool check_self_orthogonal(const BlockCodeSpec& code) {
    for (std::size_t i = 0; i < code.generators.size(); ++i)
        for (std::size_t j = i; j < code.generators.size(); ++j)
            if (field_inner(code.field, code.generators[i], code.generators[j]) != 0) return false;
    return true;
}

bool check_self_orthogonal(const ConvCodeSpec& code) {
    // By shift invariance it suffices to check every basic-row pair at
    // relative shifts 0..memory; we embed all placements in one frame.
    int frame_blocks = 2 * (code.memory + 1);
    std::size_t len = static_cast<std::size_t>(frame_blocks * code.block_width);
    auto place = [&](const std::vector<Sym>& row, int start) {
        std::vector<Sym> v(len, 0);
        std::copy(row.begin(), row.end(), v.begin() + start * code.block_width);
        return v;
    };
    int max_start = frame_blocks - (code.memory + 1);
    for (const auto& a : code.basic_generators)
        for (const auto& b : code.basic_generators)
            for (int i = 0; i <= max_start; ++i)
                for (int j = 0; j <= max_start; ++j)
                    if (field_inner(code.field, place(a, i), place(b, j)) != 0) return false;
    return true;
}

bool verify_dual_pair(const CodePair& pair) {
    if (pair.is_conv()) {
        const auto& stab = *pair.stabilizer_conv;
        const auto& norm = *pair.normalizer_conv;
        int frame_blocks = 2 * (stab.memory + norm.memory + 1);
        std::size_t len = static_cast<std::size_t>(frame_blocks * stab.block_width);
        auto place = [&](const std::vector<Sym>& row, int start, int span) {
            std::vector<Sym> v(len, 0);
            std::copy(row.begin(), row.end(), v.begin() + start * stab.block_width);
            (void)span;
            return v;
        };
        for (const auto& g : stab.basic_generators)
            for (const auto& h : norm.basic_generators)
                for (int i = 0; i + stab.memory < frame_blocks; ++i)
                    for (int j = 0; j + norm.memory < frame_blocks; ++j)
                        if (field_inner(stab.field, place(g, i, stab.memory),
                                        place(h, j, norm.memory)) != 0)
                            return false;
        return true;
    }
    const auto& stab = *pair.stabilizer_block;
    const auto& norm = *pair.normalizer_block;
    for (const auto& g : stab.generators)
        for (const auto& h : norm.generators)
            if (field_inner(stab.field, g, h) != 0) return false;
    return stab.dimension() + norm.dimension() == stab.length;
}

BlockCodeSpec terminate(const ConvCodeSpec& conv, int N) {
    conv.validate();
    if (N < conv.memory + 1) throw std::invalid_argument("terminate: N must be at least memory+1");
    BlockCodeSpec out;
    out.name = conv.name + "_term" + std::to_string(N);
    out.field = conv.field;
    out.block_width = conv.block_width;
    out.length = N * conv.block_width;
    out.role_tag = RoleTag::classical;
    for (int start = 0; start < N; ++start) {
        for (const auto& row : conv.basic_generators) {
            int span = effective_span(row, conv.block_width, conv.memory);
            if (start + span >= N) continue;  // shift would overhang the window
            std::vector<Sym> v(static_cast<std::size_t>(out.length), 0);
            for (int m = 0; m <= span; ++m)
                for (int i = 0; i < conv.block_width; ++i)
                    v[static_cast<std::size_t>((start + m) * conv.block_width + i)] =
                        row[static_cast<std::size_t>(m * conv.block_width + i)];
            out.generators.push_back(std::move(v));
        }
    }
    return out;
}

BlockCodeSpec tailbite(const ConvCodeSpec& conv, int N) {
    conv.validate();
    if (N < conv.memory + 1) throw std::invalid_argument("tailbite: N must be at least memory+1");
    BlockCodeSpec out;
    out.name = conv.name + "_tb" + std::to_string(N);
    out.field = conv.field;
    out.block_width = conv.block_width;
    out.length = N * conv.block_width;
    out.role_tag = RoleTag::classical;
    for (int start = 0; start < N; ++start) {
        for (const auto& row : conv.basic_generators) {
            std::vector<Sym> v(static_cast<std::size_t>(out.length), 0);
            for (int m = 0; m <= conv.memory; ++m) {
                int b = (start + m) % N;
                for (int i = 0; i < conv.block_width; ++i)
                    v[static_cast<std::size_t>(b * conv.block_width + i)] = f4_add(
                        v[static_cast<std::size_t>(b * conv.block_width + i)],
                        row[static_cast<std::size_t>(m * conv.block_width + i)]);
            }
            out.generators.push_back(std::move(v));
        }
    }
    return out;
}

int min_distance(const BlockCodeSpec& code) {
    int q = code.field == Field::GF4 ? 4 : 2;
    double count = 1;
    for (int i = 0; i < code.dimension(); ++i) count *= q;
    if (count > (1 << 20)) throw std::invalid_argument("min_distance: code too large for enumeration");

    int best = code.length + 1;
    std::vector<Sym> coeff(static_cast<std::size_t>(code.dimension()), 0);
    std::vector<Sym> word(static_cast<std::size_t>(code.length), 0);
    // Gray-less odometer enumeration of the span.
    std::size_t total = static_cast<std::size_t>(count);
    for (std::size_t idx = 1; idx < total; ++idx) {
        // increment odometer, updating the running codeword incrementally
        std::size_t pos = 0;
        while (true) {
            Sym old = coeff[pos];
            Sym next = static_cast<Sym>((old + 1) % q);
            coeff[pos] = next;
            // word += (next - old) * g_pos ; char 2: delta = old ^ next
            Sym delta = f4_add(old, next);
            const auto& g = code.generators[pos];
            for (int i = 0; i < code.length; ++i)
                word[static_cast<std::size_t>(i)] =
                    f4_add(word[static_cast<std::size_t>(i)], f4_mul(delta, g[static_cast<std::size_t>(i)]));
            if (next != 0) break;
            ++pos;
        }
        best = std::min(best, hamming_weight(std::span<const Sym>(word)));
        if (best == 1) break;
    }
    return best;
}

int free_distance(const ConvCodeSpec& conv, int horizon) {
    conv.validate();
    if (horizon < 2 * conv.memory + 2) throw std::invalid_argument("free_distance: horizon too small");
    // All codewords from inputs supported on `horizon` consecutive start
    // blocks; shift invariance makes the window position irrelevant.
    BlockCodeSpec window = terminate(conv, horizon + conv.memory);
    // keep only shifts starting within the first `horizon` blocks
    BlockCodeSpec bounded = window;
    bounded.generators.clear();
    for (int start = 0; start < horizon; ++start)
        for (const auto& row : conv.basic_generators) {
            int span = effective_span(row, conv.block_width, conv.memory);
            if (start + span >= horizon + conv.memory) continue;
            std::vector<Sym> v(static_cast<std::size_t>(window.length), 0);
            for (int m = 0; m <= span; ++m)
                for (int i = 0; i < conv.block_width; ++i)
                    v[static_cast<std::size_t>((start + m) * conv.block_width + i)] =
                        row[static_cast<std::size_t>(m * conv.block_width + i)];
            bounded.generators.push_back(std::move(v));
        }
    return min_distance(bounded);
}

std::vector<Sym> block_syndrome(const BlockCodeSpec& stabilizer, std::span<const Sym> v) {
    std::vector<Sym> s;
    s.reserve(stabilizer.generators.size());
    for (const auto& g : stabilizer.generators) s.push_back(field_inner(stabilizer.field, v, g));
    return s;
}

CosetTable coset_leader_table(const CodePair& pair) {
    if (pair.is_conv()) throw std::invalid_argument("coset_leader_table: block pairs only");
    const auto& stab = *pair.stabilizer_block;
    int q = stab.field == Field::GF4 ? 4 : 2;
    double count = 1;
    for (int i = 0; i < stab.length; ++i) count *= q;
    if (count > (1 << 22)) throw std::invalid_argument("coset_leader_table: code too large");

    CosetTable table;
    std::vector<Sym> v(static_cast<std::size_t>(stab.length), 0);
    std::size_t total = static_cast<std::size_t>(count);
    // Lexicographic enumeration (leftmost symbol most significant);
    // first hit at a given weight is the lexicographic minimum.
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t x = idx;
        for (int i = stab.length - 1; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = static_cast<Sym>(x % q);
            x /= q;
        }
        auto s = block_syndrome(stab, v);
        int w = hamming_weight(std::span<const Sym>(v));
        auto it = table.find(s);
        if (it == table.end())
            table.emplace(std::move(s), v);
        else if (w < hamming_weight(std::span<const Sym>(it->second)))
            it->second = v;
    }
    return table;
}

// ---------------------------------------------------------------------------
// Bundled constructions

namespace {

constexpr Sym w = kOmega;
constexpr Sym W = kOmegaBar;

ConvCodeSpec f4_conv_stabilizer() {
    ConvCodeSpec c;
    c.name = "f4_conv_stab";
    c.field = Field::GF4;
    c.memory = 1;
    c.basic_generators = {{1, 1, 1, 1, w, W}};
    return c;
}

ConvCodeSpec f4_conv_normalizer() {
    ConvCodeSpec c;
    c.name = "f4_conv_norm";
    c.field = Field::GF4;
    c.memory = 1;
    c.basic_generators = {{W, w, 1, 0, 0, 0}, {1, 1, 1, 1, w, W}};
    return c;
}

ConvCodeSpec css_conv_stabilizer() {
    ConvCodeSpec c;
    c.name = "css_conv_stab";
    c.field = Field::GF2;
    c.memory = 2;
    c.basic_generators = {{1, 1, 1, 1, 0, 0, 1, 1, 0}};
    return c;
}

ConvCodeSpec css_conv_normalizer() {
    ConvCodeSpec c;
    c.name = "css_conv_norm";
    c.field = Field::GF2;
    c.memory = 1;
    c.basic_generators = {{1, 1, 0, 0, 1, 1}, {0, 0, 1, 1, 1, 0}};
    return c;
}

CodePair block_pair_from_stabilizer(std::string name, BlockCodeSpec stab, int d) {
    stab.role_tag = RoleTag::stabilizer_label;
    stab.validate();
    BlockCodeSpec norm;
    norm.name = name + "_norm";
    norm.field = stab.field;
    norm.length = stab.length;
    norm.block_width = stab.block_width;
    norm.role_tag = RoleTag::normalizer_label;
    norm.generators = orthogonal_complement(stab.field, stab.generators,
                                            static_cast<std::size_t>(stab.length));
    norm.validate();

    CodePair pair;
    pair.name = std::move(name);
    pair.params = {stab.length, stab.length - 2 * stab.dimension(), d};
    pair.stabilizer_block = std::move(stab);
    pair.normalizer_block = std::move(norm);
    return pair;
}

CodePair tailbite_pair(std::string name, const ConvCodeSpec& stab_conv,
                       const ConvCodeSpec& norm_conv, int N, int d) {
    BlockCodeSpec stab = tailbite(stab_conv, N);
    stab.name = name + "_stab";
    stab.role_tag = RoleTag::stabilizer_label;
    stab.validate();
    BlockCodeSpec norm = tailbite(norm_conv, N);
    norm.name = name + "_norm";
    norm.role_tag = RoleTag::normalizer_label;
    norm.validate();

    CodePair pair;
    pair.name = std::move(name);
    pair.params = {stab.length, stab.length - 2 * stab.dimension(), d};
    pair.stabilizer_block = std::move(stab);
    pair.normalizer_block = std::move(norm);
    return pair;
}

CodePair terminated_pair(std::string name, const ConvCodeSpec& norm_conv, int N, int d) {
    BlockCodeSpec norm = terminate(norm_conv, N);
    norm.name = name + "_norm";
    norm.role_tag = RoleTag::normalizer_label;
    norm.validate();
    // The stabilizer side is the full dual of the terminated normalizer.
    // Unlike the tail-biting case, truncation at the window boundary
    // breaks self-orthogonality of that dual, so it is tagged classical:
    // the pair records the classical dual bookkeeping (and the derived
    // [n, k] parameters), not a decodable stabilizer group.
    BlockCodeSpec stab;
    stab.name = name + "_stab";
    stab.field = norm.field;
    stab.length = norm.length;
    stab.block_width = norm.block_width;
    stab.role_tag = RoleTag::classical;
    stab.generators = orthogonal_complement(norm.field, norm.generators,
                                            static_cast<std::size_t>(norm.length));
    stab.validate();

    CodePair pair;
    pair.name = std::move(name);
    pair.params = {stab.length, stab.length - 2 * stab.dimension(), d};
    pair.stabilizer_block = std::move(stab);
    pair.normalizer_block = std::move(norm);
    return pair;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"five_qubit", "steane", "f4_conv", "css_conv", "tb9", "tb15",
            "terminated_f4(3)", "terminated_css(5)"};
}

CodePair preset(const std::string& name) {
    if (name == "five_qubit") {
        BlockCodeSpec stab;
        stab.name = "five_qubit_stab";
        stab.field = Field::GF4;
        stab.length = 5;
        stab.block_width = 5;
        stab.generators = {{0, W, w, w, W}, {W, 0, W, w, w}};
        return block_pair_from_stabilizer("five_qubit", std::move(stab), 3);
    }
    if (name == "steane") {
        // (7,3) self-orthogonal code = rows of the Hamming parity-check
        // matrix whose columns are the nonzero 3-bit vectors.
        BlockCodeSpec stab;
        stab.name = "steane_stab";
        stab.field = Field::GF2;
        stab.length = 7;
        stab.block_width = 7;
        stab.generators = {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}};
        return block_pair_from_stabilizer("steane", std::move(stab), 3);
    }
    if (name == "f4_conv") {
        CodePair pair;
        pair.name = "f4_conv";
        pair.params = {3, 1, 3};
        pair.stabilizer_conv = f4_conv_stabilizer();
        pair.normalizer_conv = f4_conv_normalizer();
        return pair;
    }
    if (name == "css_conv") {
        CodePair pair;
        pair.name = "css_conv";
        pair.params = {3, 1, 3};
        pair.stabilizer_conv = css_conv_stabilizer();
        pair.normalizer_conv = css_conv_normalizer();
        return pair;
    }
    if (name == "tb9") return tailbite_pair("tb9", f4_conv_stabilizer(), f4_conv_normalizer(), 3, 3);
    if (name == "tb15") return tailbite_pair("tb15", css_conv_stabilizer(), css_conv_normalizer(), 5, 3);

    auto parse_arg = [&](const std::string& prefix) -> std::optional<int> {
        if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return std::nullopt;
        return std::stoi(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2));
    };
    if (auto N = parse_arg("terminated_f4")) return terminated_pair(name, f4_conv_normalizer(), *N, 3);
    if (auto N = parse_arg("terminated_css")) return terminated_pair(name, css_conv_normalizer(), *N, 3);

    throw std::invalid_argument("unknown preset: " + name);
}

// ---------------------------------------------------------------------------
// Structured text serialization

namespace {

void write_rows(std::ostream& out, const std::vector<std::vector<Sym>>& rows) {
    out << "rows " << rows.size() << "\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << int(r[i]);
        out << "\n";
    }
}

std::vector<std::vector<Sym>> read_rows(std::istream& in, int count, int len) {
    std::vector<std::vector<Sym>> rows;
    for (int r = 0; r < count; ++r) {
        std::vector<Sym> row;
        for (int i = 0; i < len; ++i) {
            int x;
            if (!(in >> x)) throw std::runtime_error("truncated generator rows");
            row.push_back(static_cast<Sym>(x));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string role_str(RoleTag t) {
    switch (t) {
        case RoleTag::stabilizer_label: return "stabilizer_label";
        case RoleTag::normalizer_label: return "normalizer_label";
        case RoleTag::classical: return "classical";
    }
    return "classical";
}

RoleTag role_from(const std::string& s) {
    if (s == "stabilizer_label") return RoleTag::stabilizer_label;
    if (s == "normalizer_label") return RoleTag::normalizer_label;
    if (s == "classical") return RoleTag::classical;
    throw std::runtime_error("bad role tag: " + s);
}

}  // namespace

std::string serialize_code(const ConvCodeSpec& code) {
    std::ostringstream out;
    out << "conv " << code.name << "\n";
    out << "field " << int(code.field) << "\n";
    out << "block_width " << code.block_width << "\n";
    out << "memory " << code.memory << "\n";
    write_rows(out, code.basic_generators);
    return out.str();
}

std::string serialize_code(const BlockCodeSpec& code) {
    std::ostringstream out;
    out << "block " << code.name << "\n";
    out << "field " << int(code.field) << "\n";
    out << "block_width " << code.block_width << "\n";
    out << "length " << code.length << "\n";
    out << "role " << role_str(code.role_tag) << "\n";
    write_rows(out, code.generators);
    return out.str();
}

std::string serialize_pair(const CodePair& pair) {
    std::ostringstream out;
    out << "pair " << pair.name << "\n";
    out << "params " << pair.params.n << " " << pair.params.k << " " << pair.params.d << "\n";
    if (pair.is_conv()) {
        out << serialize_code(*pair.stabilizer_conv);
        out << serialize_code(*pair.normalizer_conv);
    } else {
        out << serialize_code(*pair.stabilizer_block);
        out << serialize_code(*pair.normalizer_block);
    }
    return out.str();
}

namespace {

void parse_one_code(std::istream& in, const std::string& kind, const std::string& name, CodePair& pair) {
    std::string key;
    int field_int = 4, block_width = 3, memory = 0, length = 0, nrows = 0;
    RoleTag role = RoleTag::classical;
    while (in >> key) {
        if (key == "field") in >> field_int;
        else if (key == "block_width") in >> block_width;
        else if (key == "memory") in >> memory;
        else if (key == "length") in >> length;
        else if (key == "role") { std::string r; in >> r; role = role_from(r); }
        else if (key == "rows") { in >> nrows; break; }
        else throw std::runtime_error("unexpected key in code spec: " + key);
    }
    Field field = field_int == 4 ? Field::GF4 : Field::GF2;
    if (field_int != 2 && field_int != 4) throw std::runtime_error("field must be 2 or 4");
    if (kind == "conv") {
        ConvCodeSpec c;
        c.name = name;
        c.field = field;
        c.block_width = block_width;
        c.memory = memory;
        c.basic_generators = read_rows(in, nrows, (memory + 1) * block_width);
        c.validate();
        if (!pair.stabilizer_conv) pair.stabilizer_conv = std::move(c);
        else pair.normalizer_conv = std::move(c);
    } else {
        BlockCodeSpec c;
        c.name = name;
        c.field = field;
        c.block_width = block_width;
        c.length = length;
        c.role_tag = role;
        c.generators = read_rows(in, nrows, length);
        c.validate();
        if (!pair.stabilizer_block) pair.stabilizer_block = std::move(c);
        else pair.normalizer_block = std::move(c);
    }
}

}  // namespace

CodePair parse_pair(std::istream& in) {
    CodePair pair;
    std::string key;
    if (!(in >> key) || key != "pair") throw std::runtime_error("expected 'pair' header");
    in >> pair.name;
    if (!(in >> key) || key != "params") throw std::runtime_error("expected 'params'");
    in >> pair.params.n >> pair.params.k >> pair.params.d;
    for (int i = 0; i < 2; ++i) {
        std::string kind, name;
        if (!(in >> kind >> name)) throw std::runtime_error("expected two code specs");
        if (kind != "conv" && kind != "block") throw std::runtime_error("expected conv or block, got " + kind);
        parse_one_code(in, kind, name, pair);
    }
    return pair;
}

CodePair parse_pair_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file: " + path);
    return parse_pair(in);
}

}  // namespace qec13
