#ifndef WORDREP_ALPHABET_HPP
#define WORDREP_ALPHABET_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wordrep {

/// A finite, ordered alphabet of printable ASCII symbols.
///
/// Letters are identified by their display character; `index_of` gives the
/// small integer rank used for enumeration order. The order of symbols is the
/// order they were declared in, which fixes every deterministic enumeration
/// performed over the alphabet.
class Alphabet {
 public:
  Alphabet() { index_.fill(-1); }

  /// Declares the symbols in the given order. Throws ParseError on a
  /// duplicate or on a character that cannot be a letter.
  explicit Alphabet(std::string_view symbols);

  /// The sorted set of distinct letters occurring in `text`.
  static Alphabet of(std::string_view text);

  /// `{0, 1, ..., size-1}` for size <= 10, continuing with `a..z` after that.
  static Alphabet numbered(std::size_t size);

  /// True when `c` may be used as a letter: printable, not blank, and not one
  /// of the separators used by the text formats (`,` `=` `;` `|`).
  static bool is_letter_char(char c) noexcept;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::string_view symbols() const noexcept { return symbols_; }
  char symbol(std::size_t index) const { return symbols_.at(index); }

  bool contains(char c) const noexcept {
    auto u = static_cast<unsigned char>(c);
    return u < index_.size() && index_[u] >= 0;
  }
  std::optional<std::size_t> index_of(char c) const noexcept {
    if (!contains(c)) return std::nullopt;
    return static_cast<std::size_t>(index_[static_cast<unsigned char>(c)]);
  }

  /// True when every symbol of `other` is a symbol of this alphabet.
  bool includes(const Alphabet& other) const noexcept;
  /// True when every character of `text` is a symbol of this alphabet.
  bool covers(std::string_view text) const noexcept;

  /// This alphabet followed by the symbols of `other` not already present.
  Alphabet united(const Alphabet& other) const;
  Alphabet without(char c) const;
  Alphabet with(char c) const;

  /// The first letter character (in the order a-z, A-Z, 0-9, then remaining
  /// punctuation) that is not a symbol of this alphabet.
  char fresh_symbol() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) noexcept {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::string symbols_;
  std::array<std::int16_t, 128> index_{};
};

}  // namespace wordrep

#endif  // WORDREP_ALPHABET_HPP
