#include "lattice.hpp"

#include <algorithm>
#include <array>

namespace farey {

Int content(const IntVec& v) {
    if (v.is_zero()) throw Error("undefined content: zero vector");
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
    return g;
}

Int integer_length(const IntVec& p, const IntVec& q) {
    if (p == q) throw Error("degenerate segment");
    return content(q - p);
}

Int integer_volume(const std::vector<IntVec>& vs) {
    if (vs.empty() || vs.size() > vs[0].size()) throw Error("rank deficient");
    MatZ m = MatZ::from_rows(vs);
    auto d = smith_invariant_factors(m);
    if (d.size() != vs.size()) throw Error("rank deficient");
    Int vol = 1;
    for (const auto& x : d) vol *= x;
    return vol;
}

Rat integer_sine(const std::vector<IntVec>& v_extra, const std::vector<IntVec>& u_extra,
                 const std::vector<IntVec>& w_shared) {
    std::vector<IntVec> all;
    all.insert(all.end(), v_extra.begin(), v_extra.end());
    all.insert(all.end(), u_extra.begin(), u_extra.end());
    all.insert(all.end(), w_shared.begin(), w_shared.end());
    if (all.empty()) throw Error("integer sine needs at least one vector");
    Int num = integer_volume(all);
    Int den = 1;
    if (!v_extra.empty()) den *= integer_volume(v_extra);
    if (!u_extra.empty()) den *= integer_volume(u_extra);
    if (!w_shared.empty()) den *= integer_volume(w_shared);
    return make_rat(num, den);
}

namespace {

std::vector<IntVec> face_directions(const std::vector<IntVec>& face) {
    if (face.size() < 2) return {};
    std::vector<IntVec> dirs;
    for (std::size_t i = 1; i < face.size(); ++i) dirs.push_back(face[i] - face[0]);
    return dirs;
}

// Basis of the intersection of two saturated direction lattices.
std::vector<IntVec> intersect_lattices(const std::vector<IntVec>& b1, const std::vector<IntVec>& b2) {
    if (b1.empty() || b2.empty()) return {};
    std::size_t n = b1[0].size();
    // x = B1^T s = B2^T t. Solve over Q for the nullspace of [B1^T | -B2^T], take the
    // B1-part, map back, saturate.
    std::size_t k1 = b1.size(), k2 = b2.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k1 + k2));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k1; ++j) a[i][j] = Rat(b1[j][i]);
        for (std::size_t j = 0; j < k2; ++j) a[i][k1 + j] = -Rat(b2[j][i]);
    }
    // Rational kernel by echelon.
    std::vector<std::vector<Rat>> rows = a;
    // reduce
    std::vector<std::size_t> pivots;
    std::size_t rank = 0, cols = k1 + k2;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        Rat inv = rows[rank][col];
        for (std::size_t j = 0; j < cols; ++j) rows[rank][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<IntVec> gens;
    for (std::size_t col = 0; col < cols; ++col) {
        if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
        // free column -> kernel vector
        std::vector<Rat> kv(cols, Rat(0));
        kv[col] = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t) kv[pivots[t]] = -rows[t][col];
        RatVec x(n);
        for (std::size_t j = 0; j < k1; ++j)
            for (std::size_t i = 0; i < n; ++i) x[i] += kv[j] * Rat(b1[j][i]);
        if (!x.is_zero()) gens.push_back(x.primitive_direction());
    }
    if (gens.empty()) return {};
    return saturation_basis(gens);
}

// Completes the sublattice spanned by `inner` to a basis of the saturated lattice
// spanned by `outer_basis`; returns only the added vectors.
std::vector<IntVec> complete_in_lattice(const std::vector<IntVec>& outer_basis,
                                        const std::vector<IntVec>& inner) {
    std::size_t k = outer_basis.size();
    if (inner.empty()) return outer_basis;
    if (inner.size() == k) return {};
    if (inner.size() != 1 || k != inner.size() + 1)
        throw Error("unsupported completion shape");
    auto coords = coords_in_basis(outer_basis, inner[0]);
    if (!coords) throw Error("vector is not in the lattice");
    // inner[0] primitive in the saturated lattice -> content of coords is 1.
    MatZ c = complete_unimodular(*coords);
    std::vector<IntVec> added;
    for (std::size_t r = 1; r < k; ++r) {
        IntVec v(outer_basis[0].size());
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c.at(r, j) * outer_basis[j][i];
        added.push_back(v);
    }
    return added;
}

} // namespace

Rat integer_sine_of_faces(const std::vector<IntVec>& face1, const std::vector<IntVec>& face2) {
    auto d1 = face_directions(face1);
    auto d2 = face_directions(face2);
    if (d1.empty() || d2.empty()) throw Error("faces must have positive dimension");
    auto l1 = saturation_basis(d1);
    auto l2 = saturation_basis(d2);
    auto w = intersect_lattices(l1, l2);
    if (w.size() == l1.size() && w.size() == l2.size()) return Rat(0); // same plane
    auto u = complete_in_lattice(l1, w);
    auto v = complete_in_lattice(l2, w);
    return integer_sine(v, u, w);
}

Cone3 ::Cone3(IntVec a, IntVec b, IntVec c) : e1(std::move(a)), e2(std::move(b)), e3(std::move(c)) {
    if (e1.size() != 3 || e2.size() != 3 || e3.size() != 3) throw Error("cone edges must be 3d");
    for (auto* e : {&e1, &e2, &e3}) {
        Int g = content(*e);
        if (g != 1)
            for (std::size_t i = 0; i < 3; ++i) (*e)[i] /= g;
    }
    if (MatZ::from_columns({e1, e2, e3}).determinant() == 0) throw Error("degenerate cone");
}

Arctangent integer_arctangent(const Cone3& cone) {
    std::array<IntVec, 3> e = {cone.e1, cone.e2, cone.e3};
    std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::vector<MatZ> strict, weak;
    for (const auto& p : perms) {
        MatZ m = MatZ::from_columns({e[p[0]], e[p[1]], e[p[2]]});
        MatZ h = hermite_normal_form(m).h;
        if (h.at(0, 0) != 1) continue;
        const Int &a1 = h.at(0, 1), &a2 = h.at(1, 1);
        const Int &b1 = h.at(0, 2), &b2 = h.at(1, 2), &b3 = h.at(2, 2);
        bool weak_ok = a2 > a1 && a1 >= 0 && b3 > b1 && b1 >= 0 && b3 > b2 && b2 >= 0;
        if (!weak_ok) continue;
        if (a1 > 0)
            strict.push_back(h);
        else
            weak.push_back(h);
    }
    auto dedup = [](std::vector<MatZ>& ms) {
        std::sort(ms.begin(), ms.end(), [](const MatZ& x, const MatZ& y) { return x.str() < y.str(); });
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    };
    dedup(strict);
    dedup(weak);
    if (strict.size() == 1) return {strict[0]};
    if (strict.size() > 1) throw Error("ambiguous integer arctangent");
    if (weak.empty()) throw Error("cone admits no normalized arctangent");
    // Degenerate orderings: accept a unique non-identity weak form, reject the
    // fully degenerate identity cone.
    if (weak.size() > 1) throw Error("ambiguous integer arctangent");
    if (weak[0] == MatZ::identity(3)) throw Error("degenerate cone: arctangent is the identity");
    return {weak[0]};
}

bool is_empty_polytope(const std::vector<IntVec>& verts, unsigned long budget) {
    if (verts.empty()) throw Error("empty vertex list");
    std::size_t n = verts[0].size();
    // Bounding box size check.
    std::vector<Int> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = verts[0][i];
        hi[i] = verts[0][i];
        for (const auto& v : verts) {
            if (v[i] < lo[i]) lo[i] = v[i];
            if (v[i] > hi[i]) hi[i] = v[i];
        }
    }
    Int count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= hi[i] - lo[i] + 1;
    if (count > Int(budget)) throw Error("budget exceeded");

    // Membership in conv(verts): x is in the hull iff it lies in the hull of some
    // affinely independent subset of d+1 vertices (Caratheodory), tested with
    // exact barycentric signs.
    auto dirs = face_directions(verts);
    std::size_t dim = dirs.empty() ? 0 : MatZ::from_rows(dirs).rows() ? rank_of(MatZ::from_rows(dirs)) : 0;
    if (dim > 3) throw Error("polytope dimension exceeds 3");

    std::vector<std::vector<std::size_t>> simplices;
    std::vector<std::size_t> idx(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) idx[i] = i;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == dim + 1) {
            std::vector<IntVec> ds;
            for (std::size_t t = 1; t < pick.size(); ++t)
                ds.push_back(verts[pick[t]] - verts[pick[0]]);
            if (ds.empty() || rank_of(MatZ::from_rows(ds)) == dim) simplices.push_back(pick);
            return;
        }
        for (std::size_t i = start; i < verts.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    auto in_simplex = [&](const std::vector<std::size_t>& s, const IntVec& x) {
        // Solve x - v0 = sum t_i (v_i - v0), need t_i >= 0 and sum <= 1, and exact span membership.
        std::vector<IntVec> cols;
        for (std::size_t t = 1; t < s.size(); ++t) cols.push_back(verts[s[t]] - verts[s[0]]);
        IntVec rhs = x - verts[s[0]];
        if (cols.empty()) return rhs.is_zero();
        auto sol = solve_columns(cols, rhs);
        if (!sol) return false;
        Rat sum(0);
        for (const auto& t : *sol) {
            if (t < 0) return false;
            sum += t;
        }
        if (sum > 1) return false;
        // Verify exactness (solve_columns only solved the echelon system).
        RatVec check(x.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < x.size(); ++i) check[i] += (*sol)[j] * Rat(cols[j][i]);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (check[i] != Rat(rhs[i])) return false;
        return true;
    };

    std::vector<Int> cur(lo);
    while (true) {
        IntVec x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = cur[i];
        bool is_vertex = false;
        for (const auto& v : verts)
            if (v == x) {
                is_vertex = true;
                break;
            }
        if (!is_vertex) {
            for (const auto& s : simplices)
                if (in_simplex(s, x)) return false;
        }
        // advance odometer
        std::size_t i = 0;
        while (i < n) {
            if (cur[i] < hi[i]) {
                ++cur[i];
                break;
            }
            cur[i] = lo[i];
            ++i;
        }
        if (i == n) break;
    }
    return true;
}

} // namespace farey
