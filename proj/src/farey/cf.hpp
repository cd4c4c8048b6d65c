#pragma once

#include "intvec.hpp"

#include <optional>
#include <vector>

namespace farey {

// Records that a coordinate became zero right after the given element.
// step is the 1-based element index; step 0 marks a coordinate dead on input.
struct Drop {
    std::size_t step = 0;
    int coord = 0; // 1-based
    bool operator==(const Drop& o) const { return step == o.step && coord == o.coord; }
    bool operator<(const Drop& o) const { return step != o.step ? step < o.step : coord < o.coord; }
};

// Farey summation continued fraction in the subtractive (Meester) indexing:
// elements in order, plus the dimension-drop events.
struct FareyCF {
    int dimension = 3;
    std::vector<Int> elements;
    std::vector<Drop> drops;  // sorted
    bool terminated = true;

    std::size_t length() const { return elements.size(); }
    bool operator==(const FareyCF& o) const {
        return dimension == o.dimension && elements == o.elements && drops == o.drops &&
               terminated == o.terminated;
    }

    // 1-based coordinate subtracted at each element, replayed from the drop data.
    std::vector<int> element_coords() const;

    // Adds the implied terminal drops of a finite run (they are suppressed in
    // notation). No effect on unterminated fractions.
    void infer_terminal_drops(int pennant_coord_hint = 0);
};

// Cyclic pointer over coordinates 1..n that skips dead ones; this is the shared
// indexing rule of the Meester algorithm and of nose stretching.
class SlotWalker {
public:
    explicit SlotWalker(int n) : n_(n), alive_(static_cast<std::size_t>(n), true), pos_(0) {}

    // Coordinate (1-based) consumed by the next element; advances the pointer.
    int next();
    // Coordinate the next element would use, without advancing.
    int peek() const;
    void kill(int coord) { alive_[static_cast<std::size_t>(coord - 1)] = false; }
    bool alive(int coord) const { return alive_[static_cast<std::size_t>(coord - 1)]; }
    int alive_count() const;

private:
    int n_;
    std::vector<bool> alive_;
    int pos_; // 0-based next position to try

    int scan(int from) const;
};

// Farey-summation tabulation of a 3d fraction: [a | b] with the stage-2 pair.
struct FareyForm {
    std::vector<Int> a;
    std::vector<Int> b;
    int dropped = 0; // coordinate that vanished between the stages (0 if none)
    int s = 0, t = 0; // stage-2 pair; elements b1, b3, ... change t, b2, b4, ... change s
};

FareyForm to_farey_form(const FareyCF& cf);
FareyCF from_farey_form(const std::vector<Int>& a, const std::vector<Int>& b);

std::string meester_str(const FareyCF& cf);
std::string farey_str(const FareyForm& f);
std::string farey_str(const FareyCF& cf);

// Parses either notation ("[1;1:2 |_2 1]" or "[1;1:2:0:0 | 1]").
FareyCF parse_cf(const std::string& text);

// All equivalent rewritings of the last element a_N -> (a_N - 1, 0...0, 1).
std::vector<FareyCF> extended_forms(const FareyCF& cf);

// Checks the 3d realizability rules on a finite fraction in Farey tabulation.
bool is_admissible_3d(const FareyForm& f, std::string* why = nullptr);

inline int cyclic_coord(std::size_t slot_1based, int n) {
    return static_cast<int>((slot_1based - 1) % static_cast<std::size_t>(n)) + 1;
}

} // namespace farey
