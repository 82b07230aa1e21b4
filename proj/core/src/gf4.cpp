#include "qec13/gf4.hpp"

#include <algorithm>

namespace qec13 {

char f4_char(Sym a) {
    constexpr char chars[4] = {'0', '1', 'w', 'W'};
    if (a > 3) throw std::invalid_argument("GF(4) symbol out of range");
    return chars[a];
}

Sym f4_from_char(char c) {
    switch (c) {
        case '0': return 0;
        case '1': return 1;
        case 'w': return 2;
        case 'W': return 3;
        default: throw std::invalid_argument(std::string("bad GF(4) symbol character: ") + c);
    }
}

FVec::FVec(Field f, std::vector<Sym> syms, int width) : field(f), symbols(std::move(syms)), block_width(width) {
    if (width < 1) throw std::invalid_argument("block_width must be positive");
    for (Sym s : symbols) {
        if (s > 3 || (field == Field::GF2 && s > 1))
            throw std::invalid_argument("symbol outside declared field");
    }
}

int hamming_weight(std::span<const Sym> v) {
    int w = 0;
    for (Sym s : v) w += (s != 0);
    return w;
}

Sym hermitian_inner(std::span<const Sym> a, std::span<const Sym> b) {
    if (a.size() != b.size()) throw std::invalid_argument("hermitian_inner: length mismatch");
    Sym acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f4_add(acc, f4_mul(a[i], f4_conj(b[i])));
    return acc;
}

Sym hermitian_inner(const FVec& a, const FVec& b) {
    if (a.field != Field::GF4 || b.field != Field::GF4)
        throw std::invalid_argument("hermitian_inner: both vectors must be over GF4");
    return hermitian_inner(std::span<const Sym>(a.symbols), std::span<const Sym>(b.symbols));
}

Sym f2_inner(std::span<const Sym> a, std::span<const Sym> b) {
    if (a.size() != b.size()) throw std::invalid_argument("f2_inner: length mismatch");
    Sym acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= (a[i] & b[i] & 1);
    return acc;
}

Sym f2_inner(const FVec& a, const FVec& b) {
    if (a.field != Field::GF2 || b.field != Field::GF2)
        throw std::invalid_argument("f2_inner: both vectors must be over GF2");
    return f2_inner(std::span<const Sym>(a.symbols), std::span<const Sym>(b.symbols));
}

Sym field_inner(Field field, std::span<const Sym> a, std::span<const Sym> b) {
    return field == Field::GF4 ? hermitian_inner(a, b) : f2_inner(a, b);
}

RowSpan::RowSpan(Field field, const std::vector<std::vector<Sym>>& rows) : field_(field) {
    if (!rows.empty()) length_ = rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != length_) throw std::invalid_argument("RowSpan: ragged rows");
        std::vector<Sym> v = row;
        // Reduce against existing echelon rows, then insert if nonzero.
        for (std::size_t r = 0; r < echelon_.size(); ++r) {
            Sym c = v[pivots_[r]];
            if (c != 0) {
                Sym factor = field_ == Field::GF4 ? f4_mul(c, f4_inv(echelon_[r][pivots_[r]])) : c;
                for (std::size_t i = 0; i < length_; ++i)
                    v[i] = f4_add(v[i], f4_mul(factor, echelon_[r][i]));
            }
        }
        auto pivot = std::find_if(v.begin(), v.end(), [](Sym s) { return s != 0; });
        if (pivot == v.end()) continue;
        std::size_t p = static_cast<std::size_t>(pivot - v.begin());
        // Insert keeping pivots sorted.
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        echelon_.insert(echelon_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
    }
}

bool RowSpan::contains(std::span<const Sym> v) const {
    if (v.size() != length_) throw std::invalid_argument("RowSpan::contains: length mismatch");
    std::vector<Sym> r(v.begin(), v.end());
    for (std::size_t k = 0; k < echelon_.size(); ++k) {
        Sym c = r[pivots_[k]];
        if (c != 0) {
            Sym factor = field_ == Field::GF4 ? f4_mul(c, f4_inv(echelon_[k][pivots_[k]])) : c;
            for (std::size_t i = 0; i < length_; ++i)
                r[i] = f4_add(r[i], f4_mul(factor, echelon_[k][i]));
        }
    }
    return std::all_of(r.begin(), r.end(), [](Sym s) { return s == 0; });
}

bool membership(Field field, const std::vector<std::vector<Sym>>& rows, std::span<const Sym> v) {
    return RowSpan(field, rows).contains(v);
}

int rank(Field field, const std::vector<std::vector<Sym>>& rows) {
    return RowSpan(field, rows).rank();
}

std::vector<std::vector<Sym>> orthogonal_complement(Field field,
                                                    const std::vector<std::vector<Sym>>& rows,
                                                    std::size_t length) {
    // Solve <r_i, v> = 0. For GF4 Hermitian, <r, v> = sum r_j conj(v_j);
    // conjugating the whole equation gives sum conj(r_j) v_j = 0, an
    // ordinary linear system in v with coefficient rows conj(r).
    std::vector<std::vector<Sym>> coeff;
    coeff.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != length) throw std::invalid_argument("orthogonal_complement: length mismatch");
        std::vector<Sym> c(length);
        for (std::size_t i = 0; i < length; ++i) c[i] = field == Field::GF4 ? f4_conj(r[i]) : r[i];
        coeff.push_back(std::move(c));
    }

    // Gaussian elimination to reduced row-echelon form.
    std::vector<std::vector<Sym>> mat = coeff;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < length && row < mat.size(); ++col) {
        std::size_t sel = row;
        while (sel < mat.size() && mat[sel][col] == 0) ++sel;
        if (sel == mat.size()) continue;
        std::swap(mat[row], mat[sel]);
        Sym inv = field == Field::GF4 ? f4_inv(mat[row][col]) : Sym{1};
        for (std::size_t i = 0; i < length; ++i) mat[row][i] = f4_mul(inv, mat[row][i]);
        for (std::size_t r2 = 0; r2 < mat.size(); ++r2) {
            if (r2 == row) continue;
            Sym c = mat[r2][col];
            if (c != 0)
                for (std::size_t i = 0; i < length; ++i)
                    mat[r2][i] = f4_add(mat[r2][i], f4_mul(c, mat[row][i]));
        }
        pivot_cols.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(length, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Sym>> basis;
    for (std::size_t free_col = 0; free_col < length; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Sym> v(length, 0);
        v[free_col] = 1;
        for (std::size_t r2 = 0; r2 < pivot_cols.size(); ++r2)
            v[pivot_cols[r2]] = mat[r2][free_col];  // char 2: negation is identity
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string format_vec(std::span<const Sym> v, int block_width) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0 && block_width > 0 && i % static_cast<std::size_t>(block_width) == 0) out += ' ';
        out += f4_char(v[i]);
    }
    return out;
}

}  // namespace qec13
