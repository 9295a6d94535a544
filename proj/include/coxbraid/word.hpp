#ifndef COXBRAID_WORD_HPP
#define COXBRAID_WORD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace coxbraid {

/// A finite sequence of 1-based generator indices, possibly empty.
///
/// Letters are stored one byte each, so words of up to 15 letters live
/// entirely in the small-string buffer and hash sets of words stay cheap.
class Word {
 public:
  Word() = default;

  static Word from_letters(const std::vector<int>& letters);

  /// Parses a word literal: a digit string ("1321434") when no comma is
  /// present, otherwise comma-separated indices ("1,3,2,1,4,3,4").
  /// The empty string (or "-") denotes the empty word.
  static Word parse(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  /// Letter at 1-based position `pos`.
  int letter(int pos) const {
    return static_cast<unsigned char>(letters_[static_cast<std::size_t>(pos - 1)]);
  }

  /// Contiguous factor over 1-based positions i..j, 1 <= i <= j <= size().
  Word factor(int i, int j) const;

  /// Word with the letter `g` appended.
  Word appended(int g) const;

  /// Word with the two letters at 1-based positions pos, pos+1 removed.
  Word without_pair(int pos) const;

  bool has_adjacent_repeat() const;

  /// Largest letter value, 0 for the empty word.
  int max_letter() const;

  /// Canonical literal: digit string when every letter is <= 9,
  /// comma-separated otherwise.
  std::string str() const;

  std::vector<int> letters() const;

  auto operator<=>(const Word&) const = default;

  const std::string& bytes() const { return letters_; }

  // Mutating primitives reserved for coxeter.cpp; sites are validated there.
  void swap_at(int pos);         // swap letters at pos, pos+1
  void braid_at(int pos);        // sts -> tst at pos..pos+2

 private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string>{}(w.bytes());
  }
};

}  // namespace coxbraid

#endif  // COXBRAID_WORD_HPP
