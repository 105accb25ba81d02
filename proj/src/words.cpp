#include "cyclecount/words.hpp"

#include <algorithm>
#include <cctype>

#include "cyclecount/error.hpp"

namespace cyclecount {

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw InvalidInput("unexpected character '" + std::string(1, c) +
                         "' in word \"" + std::string(text) + "\"");
    }
    const bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    ++i;
    std::uint32_t generator = static_cast<std::uint32_t>(lower - 'a') + 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (lower != 'a') {
        throw InvalidInput("indexed generators must use 'a<k>' or 'A<k>' in word \"" +
                           std::string(text) + "\"");
      }
      std::uint64_t index = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        index = index * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (index > 1'000'000) throw InvalidInput("generator index too large");
        ++i;
      }
      if (index == 0) throw InvalidInput("generator indices are 1-based");
      generator = static_cast<std::uint32_t>(index);
    }
    letters.push_back(Letter{generator, upper ? -1 : 1});
  }
  return Word(std::move(letters));
}

std::string letter_to_string(Letter l) {
  if (l.generator >= 1 && l.generator <= 26) {
    const char base = l.sign > 0 ? 'a' : 'A';
    return std::string(1, static_cast<char>(base + l.generator - 1));
  }
  return (l.sign > 0 ? "a" : "A") + std::to_string(l.generator);
}

std::uint32_t Word::max_generator() const {
  std::uint32_t m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.generator);
  return m;
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Letter l = letters_[i];
    // An indexed token followed by a plain letter is unambiguous, but two
    // adjacent indexed tokens need a separator so the digits do not merge.
    if (l.generator > 26 && i + 1 < letters_.size() && letters_[i + 1].generator > 26) {
      out += letter_to_string(l) + ".";
    } else {
      out += letter_to_string(l);
    }
  }
  return out;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

Word Word::pow(std::size_t exponent) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * exponent);
  for (std::size_t k = 0; k < exponent; ++k) {
    out.insert(out.end(), letters_.begin(), letters_.end());
  }
  return Word(std::move(out));
}

Word Word::rotate(std::size_t k) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out = letters_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return Word(std::move(out));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].is_inverse_of(w[i - 1])) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || !w[0].is_inverse_of(w[w.size() - 1]);
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

CyclicReduction cyclic_reduce(const Word& w) {
  const Word reduced = free_reduce(w);
  const auto& ls = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = ls.size();
  while (hi - lo >= 2 && ls[lo].is_inverse_of(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return CyclicReduction{
      Word(std::vector<Letter>(ls.begin() + static_cast<std::ptrdiff_t>(lo),
                               ls.begin() + static_cast<std::ptrdiff_t>(hi))),
      Word(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(lo)))};
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw PreconditionViolation("primitive_root: empty word");
  if (!is_cyclically_reduced(w)) {
    throw PreconditionViolation("primitive_root: \"" + w.to_string() +
                                "\" is not cyclically reduced; normalize it first");
  }
  const std::size_t n = w.size();
  for (std::size_t period = 1; period <= n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) {
      periodic = w[i] == w[i - period];
    }
    if (periodic) {
      return PrimitiveRoot{
          Word(std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period))),
          n / period};
    }
  }
  return PrimitiveRoot{w, 1};  // unreachable: period n always matches
}

bool is_simple(const Word& w) { return primitive_root(w).exponent == 1; }

}  // namespace cyclecount
