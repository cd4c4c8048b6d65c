#include "cf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace farey {

int SlotWalker::scan(int from) const {
    int j = from;
    for (int tries = 0; tries < n_; ++tries) {
        if (alive_[static_cast<std::size_t>(j)]) return j + 1;
        j = (j + 1) % n_;
    }
    throw Error("all coordinates dead");
}

int SlotWalker::next() {
    int coord = scan(pos_);
    pos_ = coord % n_;
    return coord;
}

int SlotWalker::peek() const {
    return scan(pos_);
}

int SlotWalker::alive_count() const {
    int k = 0;
    for (bool b : alive_)
        if (b) ++k;
    return k;
}

std::vector<int> FareyCF::element_coords() const {
    SlotWalker w(dimension);
    std::size_t di = 0;
    while (di < drops.size() && drops[di].step == 0) {
        if (!w.alive(drops[di].coord)) throw Error("malformed cf: repeated drop");
        w.kill(drops[di].coord);
        ++di;
    }
    std::vector<int> coords;
    coords.reserve(elements.size());
    for (std::size_t m = 1; m <= elements.size(); ++m) {
        coords.push_back(w.next());
        while (di < drops.size() && drops[di].step == m) {
            if (!w.alive(drops[di].coord)) throw Error("malformed cf: drop on dead coordinate");
            w.kill(drops[di].coord);
            ++di;
        }
    }
    if (di != drops.size()) throw Error("malformed cf: drop beyond the last element");
    return coords;
}

void FareyCF::infer_terminal_drops(int pennant_coord_hint) {
    if (!terminated) return;
    if (drops.size() >= static_cast<std::size_t>(dimension) - 1) return;
    auto coords = element_coords();
    SlotWalker w(dimension);
    for (const auto& d : drops) w.kill(d.coord);
    int pennant = coords.empty() ? (pennant_coord_hint > 0 ? pennant_coord_hint : w.peek())
                                 : coords.back();
    for (int c = 1; c <= dimension; ++c)
        if (w.alive(c) && c != pennant)
            drops.push_back({elements.size(), c});
    std::sort(drops.begin(), drops.end());
}

namespace {

std::map<std::size_t, std::vector<int>> drop_groups(const FareyCF& cf) {
    std::map<std::size_t, std::vector<int>> g;
    for (const auto& d : cf.drops) g[d.step].push_back(d.coord);
    for (auto& [step, coords] : g) std::sort(coords.begin(), coords.end());
    return g;
}

std::string marker_str(const std::vector<int>& coords) {
    std::ostringstream os;
    os << "|_";
    if (coords.size() == 1) {
        os << coords[0];
    } else {
        os << '{';
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) os << ',';
            os << coords[i];
        }
        os << '}';
    }
    return os.str();
}

} // namespace

std::string meester_str(const FareyCF& cf) {
    auto groups = drop_groups(cf);
    // The final drop of a finite run is implied; suppress a singleton group at the
    // last element. Simultaneous terminal drops stay visible.
    if (cf.terminated && !groups.empty()) {
        auto last = std::prev(groups.end());
        if (last->first == cf.length() && last->second.size() == 1) groups.erase(last);
    }
    std::ostringstream os;
    os << '[';
    bool sep_semicolon = true; // first separator is ';'
    auto g0 = groups.find(0);
    if (g0 != groups.end()) {
        os << marker_str(g0->second);
        if (!cf.elements.empty()) os << ' ';
        sep_semicolon = false;
    }
    for (std::size_t m = 1; m <= cf.length(); ++m) {
        if (m > 1) {
            auto g = groups.find(m - 1);
            if (g != groups.end())
                os << ' ' << marker_str(g->second) << ' ';
            else
                os << (sep_semicolon ? ';' : ':');
            if (m == 2) sep_semicolon = false;
        }
        os << cf.elements[m - 1];
    }
    auto gend = groups.find(cf.length());
    if (gend != groups.end() && cf.length() > 0) os << ' ' << marker_str(gend->second);
    os << ']';
    return os.str();
}

FareyForm to_farey_form(const FareyCF& cf) {
    if (cf.dimension != 3)
        throw Error("the two-stage tabulation is defined for dimension 3 only");
    FareyForm f;
    const std::size_t n = cf.length();
    // Locate the stage transition: a drop at the terminal element of a finite run
    // is implied and opens no second stage; anything earlier does.
    std::optional<Drop> transition;
    auto groups = drop_groups(cf);
    for (const auto& [step, coords] : groups) {
        if (step == n && cf.terminated) continue;
        if (coords.size() > 1) throw Error("simultaneous non-terminal drops are impossible in 3d");
        transition = Drop{step, coords[0]};
        break;
    }
    if (!transition) {
        f.a = cf.elements;
        return f;
    }
    const std::size_t d = transition->step;
    const int u = transition->coord;
    f.dropped = u;
    f.a.assign(cf.elements.begin(), cf.elements.begin() + static_cast<long>(d));
    // Pad with zero slots until the slot cycle excludes the dropped coordinate:
    // slot k must sit on u, so k == u (mod 3).
    std::size_t k = d;
    while (k % 3 != static_cast<std::size_t>(u) % 3) {
        f.a.push_back(0);
        ++k;
    }
    f.s = cyclic_coord(k + 1, 3);
    f.t = cyclic_coord(k + 2, 3);
    auto coords = cf.element_coords();
    std::vector<Int> tail(cf.elements.begin() + static_cast<long>(d), cf.elements.end());
    std::vector<int> tail_coords(coords.begin() + static_cast<long>(d), coords.end());
    if (!tail.empty() && tail_coords[0] == f.s) {
        if (tail[0] == 0) {
            tail.erase(tail.begin());
            tail_coords.erase(tail_coords.begin());
        } else {
            tail.insert(tail.begin(), Int(0));
            tail_coords.insert(tail_coords.begin(), f.t);
        }
    }
    for (std::size_t i = 0; i < tail_coords.size(); ++i) {
        int expect = (i % 2 == 0) ? f.t : f.s;
        if (tail_coords[i] != expect) throw Error("internal: stage-2 alternation broke");
    }
    f.b = std::move(tail);
    return f;
}

FareyCF from_farey_form(const std::vector<Int>& a, const std::vector<Int>& b) {
    FareyCF cf;
    cf.dimension = 3;
    if (b.empty()) {
        cf.elements = a;
        cf.infer_terminal_drops();
        return cf;
    }
    const std::size_t k = a.size();
    const int u = k == 0 ? 3 : cyclic_coord(k, 3);
    std::size_t k0 = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) k0 = i + 1;
    for (std::size_t i = k0; i < a.size(); ++i)
        if (a[i] != 0) throw Error("malformed farey form: nonzero padding");
    cf.elements.assign(a.begin(), a.begin() + static_cast<long>(k0));
    cf.drops.push_back({k0, u});
    const int s = cyclic_coord(k + 1, 3);
    const int t = cyclic_coord(k + 2, 3);
    // Materialize the subtractive tail. The walker may visit s before t after the
    // drop; in that case either the tail's phantom zero at s was elided from b
    // (b starts with a positive change of t), or b itself starts with a zero at t
    // that only padded the alternation.
    std::vector<Int> tail = b;
    {
        SlotWalker w(3);
        for (std::size_t m = 0; m < k0; ++m) w.next();
        w.kill(u);
        int j0 = w.peek();
        if (j0 == s) {
            if (!tail.empty() && tail[0] == 0)
                tail.erase(tail.begin());
            else
                tail.insert(tail.begin(), Int(0));
        } else if (j0 != t) {
            throw Error("internal: farey stage-2 pair mismatch");
        }
    }
    cf.elements.insert(cf.elements.end(), tail.begin(), tail.end());
    cf.infer_terminal_drops();
    return cf;
}

std::string farey_str(const FareyForm& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.a.size(); ++i) {
        if (i == 1) os << ';';
        else if (i > 1) os << ':';
        os << f.a[i];
    }
    os << " | ";
    for (std::size_t i = 0; i < f.b.size(); ++i) {
        if (i) os << ':';
        os << f.b[i];
    }
    os << ']';
    return os.str();
}

std::string farey_str(const FareyCF& cf) {
    return farey_str(to_farey_form(cf));
}

namespace {

struct Token {
    enum Kind { Number, Sep, FareyBar, Marker } kind;
    Int value;
    std::vector<int> coords;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw Error("cf text must start with '['");
    ++i;
    bool closed = false;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (c == ']') {
            closed = true;
            ++i;
            break;
        }
        if (c == ';' || c == ':') {
            out.push_back({Token::Sep, 0, {}});
            ++i;
            continue;
        }
        if (c == '|') {
            ++i;
            if (i < text.size() && text[i] == '_') {
                ++i;
                Token t{Token::Marker, 0, {}};
                if (i < text.size() && text[i] == '{') {
                    ++i;
                    while (i < text.size() && text[i] != '}') {
                        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                            t.coords.push_back(text[i] - '0');
                            ++i;
                        } else if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
                            ++i;
                        } else {
                            throw Error("bad drop marker");
                        }
                    }
                    if (i >= text.size()) throw Error("unterminated drop marker");
                    ++i;
                } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    t.coords.push_back(text[i] - '0');
                    ++i;
                } else {
                    throw Error("bad drop marker");
                }
                out.push_back(std::move(t));
            } else {
                out.push_back({Token::FareyBar, 0, {}});
            }
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Number, Int(text.substr(i, j - i)), {}});
            i = j;
            continue;
        }
        throw Error(std::string("unexpected character '") + c + "' in cf text");
    }
    if (!closed) throw Error("cf text must end with ']'");
    return out;
}

} // namespace

FareyCF parse_cf(const std::string& text) {
    auto tokens = tokenize(text);
    bool has_farey_bar = false, has_marker = false;
    for (const auto& t : tokens) {
        if (t.kind == Token::FareyBar) has_farey_bar = true;
        if (t.kind == Token::Marker) has_marker = true;
    }
    if (has_farey_bar && has_marker) throw Error("cf text mixes the two notations");
    if (has_farey_bar) {
        std::vector<Int> a, b;
        bool after = false;
        for (const auto& t : tokens) {
            if (t.kind == Token::FareyBar) {
                if (after) throw Error("cf text has two bars");
                after = true;
            } else if (t.kind == Token::Number) {
                (after ? b : a).push_back(t.value);
            }
        }
        return from_farey_form(a, b);
    }
    FareyCF cf;
    int maxcoord = 3;
    for (const auto& t : tokens) {
        if (t.kind == Token::Number) {
            if (t.value < 0) throw Error("cf elements are non-negative");
            cf.elements.push_back(t.value);
        } else if (t.kind == Token::Marker) {
            for (int c : t.coords) {
                cf.drops.push_back({cf.elements.size(), c});
                maxcoord = std::max(maxcoord, c);
            }
        }
    }
    cf.dimension = maxcoord;
    std::sort(cf.drops.begin(), cf.drops.end());
    cf.infer_terminal_drops();
    return cf;
}

std::vector<FareyCF> extended_forms(const FareyCF& cf) {
    if (!cf.terminated) throw Error("only finite fractions can be extended");
    if (cf.elements.empty()) throw Error("not extendable");
    const Int last = cf.elements.back();
    if (last == 0) throw Error("not extendable");
    if (cf.elements.size() == 1 && last == 1)
        throw Error("not extendable: would create a degenerate leading form");
    const std::size_t n = cf.length();
    std::size_t dead_before_last = 0;
    for (const auto& d : cf.drops)
        if (d.step < n) ++dead_before_last;
    const std::size_t arity = static_cast<std::size_t>(cf.dimension) - dead_before_last;
    std::vector<FareyCF> out;
    for (std::size_t z = 0; z + 2 <= arity; ++z) {
        FareyCF e = cf;
        e.elements.back() = last - 1;
        for (std::size_t i = 0; i < z; ++i) e.elements.push_back(0);
        e.elements.push_back(1);
        // The terminal drops are implied by the new final element; recompute them.
        std::erase_if(e.drops, [&](const Drop& d) { return d.step == n; });
        e.infer_terminal_drops();
        out.push_back(std::move(e));
    }
    return out;
}

bool is_admissible_3d(const FareyForm& f, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const auto& a = f.a;
    const auto& b = f.b;
    for (const auto& x : a)
        if (x < 0) return fail("negative element");
    for (const auto& x : b)
        if (x < 0) return fail("negative element");
    const std::size_t k = a.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
        if (a[i] != 0 || a[i + 1] != 0) continue;
        bool head_exception = (i == 0 && k >= 3 && a[2] != 0);
        bool tail_exception = (i + 2 == k && i >= 1 && a[i - 1] != 0 && !b.empty() &&
                               std::any_of(b.begin(), b.end(), [](const Int& x) { return x > 0; }));
        if (!head_exception && !tail_exception) return fail("two consecutive zeroes in the first stage");
    }
    if (b.empty() && !a.empty() && a.back() == 0) return fail("trailing zero with empty second stage");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] == 0 && !(i == 0 && b.size() >= 2)) return fail("zero inside the second stage");
    return true;
}

} // namespace farey
