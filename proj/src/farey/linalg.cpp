#include "linalg.hpp"

#include <algorithm>
#include <sstream>

namespace farey {

MatZ MatZ::identity(std::size_t n) {
    MatZ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ MatZ::from_columns(const std::vector<IntVec>& cols) {
    if (cols.empty()) return MatZ();
    MatZ m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw Error("ragged columns");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

MatZ MatZ::from_rows(const std::vector<IntVec>& rows) {
    if (rows.empty()) return MatZ();
    MatZ m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw Error("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec MatZ::column(std::size_t j) const {
    IntVec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

IntVec MatZ::row(std::size_t i) const {
    IntVec v(c_);
    for (std::size_t j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

void MatZ::set_column(std::size_t j, const IntVec& v) {
    if (v.size() != r_) throw Error("column length mismatch");
    for (std::size_t i = 0; i < r_; ++i) at(i, j) = v[i];
}

MatZ MatZ::operator*(const MatZ& o) const {
    if (c_ != o.r_) throw Error("matrix shape mismatch");
    MatZ m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) m.at(i, j) += at(i, k) * o.at(k, j);
        }
    return m;
}

MatZ MatZ::transposed() const {
    MatZ m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Int MatZ::determinant() const {
    if (r_ != c_) throw Error("determinant of non-square matrix");
    std::size_t n = r_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

MatZ MatZ::unimodular_inverse() const {
    Int d = determinant();
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
    std::size_t n = r_;
    MatZ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MatZ minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mr, mc) = at(r, c);
                    ++mc;
                }
                ++mr;
            }
            Int cof = minor.determinant();
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(j, i) = cof * d;
        }
    return inv;
}

std::string MatZ::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < r_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < c_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
    }
    os << ']';
    return os.str();
}

namespace {

// Diagonalizes m by unimodular row/column operations. Column operations are
// mirrored on *cotransform (rows), so that after the run the row space of the
// input equals the span of the first rank rows of *cotransform.
std::vector<Int> smith_reduce(MatZ& m, MatZ* cotransform) {
    std::size_t r = m.rows(), c = m.cols();
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < r; ++i) std::swap(m.at(i, a), m.at(i, b));
        if (cotransform)
            for (std::size_t j = 0; j < cotransform->cols(); ++j)
                std::swap(cotransform->at(a, j), cotransform->at(b, j));
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        // m: col_dst -= q * col_src; cotransform: row_src += q * row_dst
        for (std::size_t i = 0; i < r; ++i) m.at(i, dst) -= q * m.at(i, src);
        if (cotransform)
            for (std::size_t j = 0; j < cotransform->cols(); ++j)
                cotransform->at(src, j) += q * cotransform->at(dst, j);
    };
    std::vector<Int> divisors;
    std::size_t top = 0;
    while (top < r && top < c) {
        std::size_t pi = top, pj = top;
        bool found = false;
        for (std::size_t i = top; i < r && !found; ++i)
            for (std::size_t j = top; j < c && !found; ++j)
                if (m.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        for (std::size_t j = 0; j < c; ++j) std::swap(m.at(top, j), m.at(pi, j));
        if (pj != top) col_swap(top, pj);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = top + 1; i < r; ++i) {
                while (m.at(i, top) != 0) {
                    Int q = floor_div(m.at(i, top), m.at(top, top));
                    for (std::size_t j = top; j < c; ++j) m.at(i, j) -= q * m.at(top, j);
                    if (m.at(i, top) != 0) {
                        for (std::size_t j = top; j < c; ++j) std::swap(m.at(top, j), m.at(i, j));
                        dirty = true;
                    }
                }
            }
            for (std::size_t j = top + 1; j < c; ++j) {
                while (m.at(top, j) != 0) {
                    Int q = floor_div(m.at(top, j), m.at(top, top));
                    col_sub(j, top, q);
                    if (m.at(top, j) != 0) {
                        col_swap(top, j);
                        dirty = true;
                    }
                }
            }
        }
        divisors.push_back(abs(m.at(top, top)));
        ++top;
    }
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            Int g = gcd(divisors[i], divisors[j]);
            if (g == 0) continue;
            Int l = divisors[i] / g * divisors[j];
            divisors[i] = g;
            divisors[j] = l;
        }
    return divisors;
}

} // namespace

std::vector<Int> smith_invariant_factors(MatZ m) {
    return smith_reduce(m, nullptr);
}

std::size_t rank_of(const MatZ& m) {
    MatZ copy = m;
    return smith_reduce(copy, nullptr).size();
}

HermiteResult hermite_normal_form(const MatZ& m) {
    if (m.rows() != m.cols()) throw Error("hermite form expects a square matrix");
    std::size_t n = m.rows();
    MatZ h = m;
    MatZ u = MatZ::identity(n);
    auto row_sub = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < n; ++j) {
            h.at(dst, j) -= q * h.at(src, j);
            u.at(dst, j) -= q * u.at(src, j);
        }
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(h.at(a, j), h.at(b, j));
            std::swap(u.at(a, j), u.at(b, j));
        }
    };
    auto row_neg = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j) {
            h.at(i, j) = -h.at(i, j);
            u.at(i, j) = -u.at(i, j);
        }
    };
    for (std::size_t col = 0; col < n; ++col) {
        while (true) {
            std::size_t p = n;
            for (std::size_t i = col; i < n; ++i)
                if (h.at(i, col) != 0 && (p == n || abs(h.at(i, col)) < abs(h.at(p, col)))) p = i;
            if (p == n) throw Error("singular matrix has no hermite normal form");
            if (p != col) row_swap(col, p);
            bool clean = true;
            for (std::size_t i = col + 1; i < n; ++i)
                if (h.at(i, col) != 0) {
                    Int q = floor_div(h.at(i, col), h.at(col, col));
                    row_sub(i, col, q);
                    if (h.at(i, col) != 0) clean = false;
                }
            if (clean) break;
        }
        if (h.at(col, col) < 0) row_neg(col);
    }
    for (std::size_t col = 1; col < n; ++col)
        for (std::size_t i = 0; i < col; ++i) {
            Int q = floor_div(h.at(i, col), h.at(col, col));
            if (q != 0) row_sub(i, col, q);
        }
    return {h, u};
}

std::vector<IntVec> saturation_basis(const std::vector<IntVec>& vectors) {
    if (vectors.empty()) return {};
    MatZ m = MatZ::from_rows(vectors);
    MatZ w = MatZ::identity(m.cols());
    std::size_t rank = smith_reduce(m, &w).size();
    std::vector<IntVec> basis;
    basis.reserve(rank);
    for (std::size_t t = 0; t < rank; ++t) basis.push_back(w.row(t));
    return basis;
}

namespace {

struct Echelon {
    std::vector<std::vector<Rat>> rows;
    std::vector<std::size_t> pivots;
};

Echelon rational_echelon(std::vector<std::vector<Rat>> a) {
    Echelon e;
    if (a.empty()) return e;
    std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        Rat inv = a[rank][col];
        for (std::size_t j = 0; j < cols; ++j) a[rank][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        e.pivots.push_back(col);
        ++rank;
    }
    a.resize(rank);
    e.rows = std::move(a);
    return e;
}

} // namespace

std::optional<std::vector<Int>> coords_in_basis(const std::vector<IntVec>& basis, const IntVec& v) {
    if (basis.empty()) return std::nullopt;
    auto x = solve_columns(basis, v); // treats basis vectors as columns of the system
    if (!x) return std::nullopt;
    std::vector<Int> out(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if ((*x)[j].get_den() != 1) return std::nullopt;
        out[j] = (*x)[j].get_num();
    }
    return out;
}

MatZ complete_unimodular(const std::vector<Int>& c) {
    std::size_t k = c.size();
    MatZ m(1, k);
    for (std::size_t j = 0; j < k; ++j) m.at(0, j) = c[j];
    MatZ w = MatZ::identity(k);
    std::size_t rank = smith_reduce(m, &w).size();
    if (rank != 1 || abs(m.at(0, 0)) != 1)
        throw Error("row content must be 1 for unimodular completion");
    // Row space of the input is spanned by row 0 of w, so row 0 of w = +-c; fix the
    // sign and the remaining rows of w complete it to a basis of Z^k.
    bool matches = true;
    for (std::size_t j = 0; j < k; ++j)
        if (w.at(0, j) != c[j]) matches = false;
    if (!matches) {
        for (std::size_t j = 0; j < k; ++j) w.at(0, j) = -w.at(0, j);
        for (std::size_t j = 0; j < k; ++j)
            if (w.at(0, j) != c[j]) throw Error("internal: completion mismatch");
        // Keep the determinant's magnitude 1; negating one row is fine.
    }
    return w;
}

std::optional<std::vector<Rat>> solve_columns(const std::vector<IntVec>& cols, const IntVec& rhs) {
    if (cols.empty()) return std::nullopt;
    std::size_t n = cols[0].size(), k = cols.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(cols[j][i]);
        a[i][k] = Rat(rhs[i]);
    }
    Echelon e = rational_echelon(std::move(a));
    for (std::size_t t = 0; t < e.pivots.size(); ++t)
        if (e.pivots[t] == k) return std::nullopt; // inconsistent
    if (e.pivots.size() != k) return std::nullopt;  // not a unique solution
    std::vector<Rat> x(k, Rat(0));
    for (std::size_t t = 0; t < e.pivots.size(); ++t) x[e.pivots[t]] = e.rows[t][k];
    return x;
}

} // namespace farey
