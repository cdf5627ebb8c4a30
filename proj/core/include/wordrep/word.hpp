#ifndef WORDREP_WORD_HPP
#define WORDREP_WORD_HPP

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "wordrep/alphabet.hpp"

namespace wordrep {

/// A finite word over a declared alphabet.
///
/// The letters are stored as their display characters; the alphabet is shared
/// between a word and the factors cut from it. Equality compares letters only,
/// so the same letter sequence over two different declared alphabets compares
/// equal.
class Word {
 public:
  /// The empty word over the empty alphabet.
  Word();

  /// Parses `text` (one character per letter); the alphabet is the sorted set
  /// of letters that occur.
  explicit Word(std::string_view text);

  /// Parses `text` over a declared alphabet. Throws ParseError naming the
  /// first letter that is not in `alphabet`.
  Word(std::string_view text, Alphabet alphabet);

  Word(std::string_view text, std::shared_ptr<const Alphabet> alphabet);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const noexcept { return letters_[i]; }

  const std::string& str() const noexcept { return letters_; }
  std::string_view view() const noexcept { return letters_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& shared_alphabet() const noexcept { return alphabet_; }

  /// The set of letters that actually occur, sorted.
  Alphabet letters() const { return Alphabet::of(letters_); }
  std::size_t count(char letter) const noexcept;

  Word factor(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return factor(0, len); }
  Word suffix(std::size_t len) const;

  /// `*this` repeated `times` times.
  Word power(std::size_t times) const;
  /// The prefix of length `len` of this word repeated forever. Requires a
  /// nonempty word.
  Word periodic_prefix(std::size_t len) const;

  /// Concatenation; the result is over the union of both alphabets.
  friend Word operator+(const Word& a, const Word& b);

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const Word& a, const Word& b) noexcept {
    return a.letters_ <=> b.letters_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.letters_;
  }

 private:
  struct Unchecked {};
  Word(Unchecked, std::string letters, std::shared_ptr<const Alphabet> alphabet)
      : letters_(std::move(letters)), alphabet_(std::move(alphabet)) {}

  std::string letters_;
  std::shared_ptr<const Alphabet> alphabet_;
};

}  // namespace wordrep

#endif  // WORDREP_WORD_HPP
