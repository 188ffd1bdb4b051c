#pragma once

#include <cstdint>
#include <optional>

namespace lpf {

// The three truth values. The numeric order F < B < T is the truth order:
// conjunction is min, disjunction is max, and the quantifiers fold these
// over the instance values.
enum class Tv : std::uint8_t { F = 0, B = 1, T = 2 };

// A formula holds iff its value is designated (t or b).
constexpr bool designated(Tv v) { return v != Tv::F; }

constexpr Tv tv_min(Tv a, Tv b) { return a < b ? a : b; }
constexpr Tv tv_max(Tv a, Tv b) { return a < b ? b : a; }

// Negation swaps t and f and fixes b.
constexpr Tv tv_not(Tv v) {
  switch (v) {
    case Tv::T: return Tv::F;
    case Tv::F: return Tv::T;
    default: return Tv::B;
  }
}

// Implication is t whenever the antecedent is f, otherwise it takes the
// value of the consequent.
constexpr Tv tv_imp(Tv a, Tv b) { return designated(a) ? b : Tv::T; }

constexpr char tv_char(Tv v) {
  switch (v) {
    case Tv::T: return 't';
    case Tv::F: return 'f';
    default: return 'b';
  }
}

constexpr std::optional<Tv> tv_from_char(char c) {
  switch (c) {
    case 't': return Tv::T;
    case 'f': return Tv::F;
    case 'b': return Tv::B;
    default: return std::nullopt;
  }
}

// All values in enumeration order; enumerators iterate tables in this order.
inline constexpr Tv kAllTv[3] = {Tv::F, Tv::B, Tv::T};

}  // namespace lpf
