#include "coxbraid/word.hpp"

#include <algorithm>
#include <cctype>

#include "coxbraid/errors.hpp"

namespace coxbraid {

namespace {

int parse_index(std::string_view text) {
  if (text.empty()) throw ValidationError("empty generator index in word literal");
  int value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ValidationError("bad generator index '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
    if (value > 255) throw ValidationError("generator index out of range (max 255)");
  }
  if (value == 0) throw ValidationError("generator indices are 1-based; got 0");
  return value;
}

}  // namespace

Word Word::from_letters(const std::vector<int>& letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (int g : letters) {
    if (g < 1 || g > 255)
      throw ValidationError("generator index " + std::to_string(g) + " out of range 1..255");
    w.letters_.push_back(static_cast<char>(g));
  }
  return w;
}

Word Word::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty() || text == "-") return Word{};

  Word w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw ValidationError("digit-string word literal may only contain 1..9; got '" +
                              std::string(1, c) + "' (use comma-separated form for larger indices)");
      w.letters_.push_back(static_cast<char>(c - '0'));
    }
    return w;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view field = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    w.letters_.push_back(static_cast<char>(parse_index(field)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

Word Word::factor(int i, int j) const {
  if (i < 1 || j < i || j > size())
    throw ValidationError("factor positions " + std::to_string(i) + ".." + std::to_string(j) +
                          " out of range for word of length " + std::to_string(size()));
  Word w;
  w.letters_ = letters_.substr(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - i + 1));
  return w;
}

Word Word::appended(int g) const {
  Word w = *this;
  if (g < 1 || g > 255)
    throw ValidationError("generator index " + std::to_string(g) + " out of range 1..255");
  w.letters_.push_back(static_cast<char>(g));
  return w;
}

Word Word::without_pair(int pos) const {
  if (pos < 1 || pos + 1 > size())
    throw ValidationError("pair position out of range");
  Word w = *this;
  w.letters_.erase(static_cast<std::size_t>(pos - 1), 2);
  return w;
}

bool Word::has_adjacent_repeat() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == letters_[i - 1]) return true;
  return false;
}

int Word::max_letter() const {
  int best = 0;
  for (char c : letters_) best = std::max(best, static_cast<int>(static_cast<unsigned char>(c)));
  return best;
}

std::string Word::str() const {
  if (max_letter() <= 9) {
    std::string out;
    out.reserve(letters_.size());
    for (char c : letters_) out.push_back(static_cast<char>('0' + static_cast<unsigned char>(c)));
    return out;
  }
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(static_cast<unsigned char>(letters_[i]));
  }
  return out;
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (char c : letters_) out.push_back(static_cast<unsigned char>(c));
  return out;
}

void Word::swap_at(int pos) {
  std::swap(letters_[static_cast<std::size_t>(pos - 1)], letters_[static_cast<std::size_t>(pos)]);
}

void Word::braid_at(int pos) {
  std::size_t i = static_cast<std::size_t>(pos - 1);
  char s = letters_[i], t = letters_[i + 1];
  letters_[i] = t;
  letters_[i + 1] = s;
  letters_[i + 2] = t;
}

}  // namespace coxbraid
