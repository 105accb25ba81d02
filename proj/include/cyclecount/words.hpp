#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclecount {

/// A signed generator a_i or a_i^-1. Generators are 1-based.
struct Letter {
  std::uint32_t generator = 1;
  int sign = 1;

  Letter inverse() const { return Letter{generator, -sign}; }
  bool is_inverse_of(Letter other) const {
    return generator == other.generator && sign == -other.sign;
  }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A finite sequence of letters. Reducedness is a checkable property, not
/// an invariant of the type.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses the text syntax: lowercase letter = generator, uppercase = its
  /// inverse, and "a<k>" / "A<k>" for generator k (needed past 26).
  /// Whitespace and '.' separators are ignored.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Largest generator index used, 0 for the empty word.
  std::uint32_t max_generator() const;

  std::string to_string() const;

  Word operator*(const Word& rhs) const;
  Word pow(std::size_t exponent) const;
  /// Cyclic rotation: letters [k, n) followed by [0, k).
  Word rotate(std::size_t k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

std::string letter_to_string(Letter l);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word free_reduce(const Word& w);
Word invert(const Word& w);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// w = conjugator * core * conjugator^-1 after free reduction, with core
/// cyclically reduced.
CyclicReduction cyclic_reduce(const Word& w);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

/// Writes a nonempty cyclically reduced w as root^exponent with exponent
/// maximal. Throws PreconditionViolation otherwise.
PrimitiveRoot primitive_root(const Word& w);

/// True iff w is not a proper power. Requires the same input as
/// primitive_root.
bool is_simple(const Word& w);

}  // namespace cyclecount
