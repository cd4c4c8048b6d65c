#include "reconstruct.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace farey {

NoseStretch nose_stretch(const FareyCF& cf, int n) {
    if (n < 2) throw Error("dimension must be at least 2");
    NoseStretch out;
    MatZ state = MatZ::identity(static_cast<std::size_t>(n));
    out.chain.push_back({state, "start"});

    std::map<std::size_t, std::vector<int>> groups;
    for (const auto& d : cf.drops) {
        if (d.coord < 1 || d.coord > n) throw Error("malformed cf: drop coordinate out of range");
        groups[d.step].push_back(d.coord);
    }

    SlotWalker w(n);
    auto column_zero = [&](int col) {
        bool was = false;
        for (int i = 0; i < n; ++i) {
            if (state.at(static_cast<std::size_t>(i), static_cast<std::size_t>(col - 1)) != 0) was = true;
            state.at(static_cast<std::size_t>(i), static_cast<std::size_t>(col - 1)) = 0;
        }
        if (!was) throw Error("malformed cf: drop on an erased coordinate");
        w.kill(col);
    };
    auto erase_group = [&](const std::vector<int>& cols) {
        std::vector<int> sorted = cols;
        std::sort(sorted.begin(), sorted.end());
        for (int c : sorted) column_zero(c);
        std::ostringstream label;
        label << "|_";
        if (sorted.size() == 1) {
            label << sorted[0];
        } else {
            label << '{';
            for (std::size_t i = 0; i < sorted.size(); ++i) label << (i ? "," : "") << sorted[i];
            label << '}';
        }
        out.chain.push_back({state, label.str()});
    };
    auto nonzero_columns = [&] {
        std::vector<IntVec> cols;
        for (int j = 0; j < n; ++j) {
            IntVec c = state.column(static_cast<std::size_t>(j));
            if (!c.is_zero()) cols.push_back(c);
        }
        return cols;
    };

    if (auto it = groups.find(0); it != groups.end()) erase_group(it->second);

    int last_col = 0;
    for (std::size_t m = 1; m <= cf.length(); ++m) {
        const Int& a = cf.elements[m - 1];
        if (a < 0) throw Error("malformed cf: negative element");
        int j = w.next();
        last_col = j;
        out.element_cols.push_back(j);
        if (a != 0) {
            IntVec sum(static_cast<std::size_t>(n));
            for (int c = 1; c <= n; ++c) {
                if (c == j) continue;
                IntVec col = state.column(static_cast<std::size_t>(c - 1));
                if (!col.is_zero()) sum = sum + col;
            }
            IntVec vj = state.column(static_cast<std::size_t>(j - 1));
            state.set_column(static_cast<std::size_t>(j - 1), vj + sum * a);
        }
        {
            std::ostringstream label;
            label << a;
            out.chain.push_back({state, label.str()});
        }
        if (auto it = groups.find(m); it != groups.end()) erase_group(it->second);
        out.yards.push_back(nonzero_columns());
    }

    if (last_col == 0) last_col = w.peek();
    out.pennant = state.column(static_cast<std::size_t>(last_col - 1));
    if (out.pennant.is_zero()) throw Error("malformed cf: pennant column erased");
    if (cf.terminated) {
        std::vector<int> rest;
        for (int c = 1; c <= n; ++c)
            if (c != last_col && !state.column(static_cast<std::size_t>(c - 1)).is_zero()) rest.push_back(c);
        if (!rest.empty()) {
            erase_group(rest);
            if (!out.yards.empty()) out.yards.back() = nonzero_columns();
        }
    }
    return out;
}

MatZ generator_a(int i) {
    if (i < 1 || i > 3) throw Error("stage-1 generator index out of range");
    MatZ m = MatZ::identity(3);
    for (int r = 0; r < 3; ++r)
        if (r != i - 1) m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i - 1)) = 1;
    return m;
}

MatZ generator_b(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw Error("stage-2 generator index out of range");
    MatZ m = MatZ::identity(3);
    m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
    return m;
}

namespace {

MatZ int_power(const MatZ& g, const Int& e) {
    if (e < 0) throw Error("negative power");
    MatZ acc = MatZ::identity(g.rows());
    Int k = e;
    MatZ base = g;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

} // namespace

CFMatrix cf_matrix(const FareyForm& form) {
    CFMatrix out;
    out.m = MatZ::identity(3);
    out.partials.push_back(out.m);
    for (std::size_t i = 0; i < form.a.size(); ++i) {
        MatZ f = int_power(generator_a(cyclic_coord(i + 1, 3)), form.a[i]);
        out.factors.push_back(f);
        out.m = out.m * f;
        out.partials.push_back(out.m);
    }
    for (std::size_t i = 0; i < form.b.size(); ++i) {
        // b1 changes column t (factor B_st), b2 changes column s, alternating.
        int from = (i % 2 == 0) ? form.s : form.t;
        int to = (i % 2 == 0) ? form.t : form.s;
        MatZ f = int_power(generator_b(from, to), form.b[i]);
        out.factors.push_back(f);
        out.m = out.m * f;
        out.partials.push_back(out.m);
    }
    return out;
}

CFMatrix cf_matrix(const FareyCF& cf) {
    return cf_matrix(to_farey_form(cf));
}

std::vector<std::vector<Rat>> real_power_a(int i, const Rat& t) {
    if (t < 0) throw Error("negative power");
    if (i < 1 || i > 3) throw Error("stage-1 generator index out of range");
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3, Rat(0)));
    for (int r = 0; r < 3; ++r) m[r][r] = 1;
    for (int r = 0; r < 3; ++r)
        if (r != i - 1) m[r][i - 1] = t;
    return m;
}

std::vector<std::vector<Rat>> real_power_b(int i, int j, const Rat& t) {
    if (t < 0) throw Error("negative power");
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw Error("stage-2 generator index out of range");
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3, Rat(0)));
    for (int r = 0; r < 3; ++r) m[r][r] = 1;
    m[i - 1][j - 1] = t;
    return m;
}

} // namespace farey
