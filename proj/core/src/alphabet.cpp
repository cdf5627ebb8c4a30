#include "wordrep/alphabet.hpp"

#include <algorithm>
#include <bitset>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

constexpr std::string_view kFreshOrder =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
    "!\"#$%&'()*+-./:<>?@[\\]^_`{}~";

}  // namespace

bool Alphabet::is_letter_char(char c) noexcept {
  auto u = static_cast<unsigned char>(c);
  if (u <= 0x20 || u >= 0x7f) return false;
  return c != ',' && c != '=' && c != ';' && c != '|';
}

Alphabet::Alphabet(std::string_view symbols) : Alphabet() {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    char c = symbols[i];
    if (!is_letter_char(c)) {
      throw ParseError("invalid letter character", i);
    }
    if (contains(c)) {
      throw ParseError(std::string("duplicate letter '") + c + "' in alphabet", i);
    }
    index_[static_cast<unsigned char>(c)] = static_cast<std::int16_t>(symbols_.size());
    symbols_.push_back(c);
  }
}

Alphabet Alphabet::of(std::string_view text) {
  std::bitset<128> seen;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_letter_char(text[i])) throw ParseError("invalid letter character", i);
    seen.set(static_cast<unsigned char>(text[i]));
  }
  std::string sorted;
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen.test(c)) sorted.push_back(static_cast<char>(c));
  }
  return Alphabet(sorted);
}

Alphabet Alphabet::numbered(std::size_t size) {
  constexpr std::string_view digits = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (size > digits.size()) {
    throw PreconditionError("numbered alphabet larger than " +
                            std::to_string(digits.size()) + " letters");
  }
  return Alphabet(digits.substr(0, size));
}

bool Alphabet::includes(const Alphabet& other) const noexcept {
  return covers(other.symbols_);
}

bool Alphabet::covers(std::string_view text) const noexcept {
  return std::all_of(text.begin(), text.end(), [this](char c) { return contains(c); });
}

Alphabet Alphabet::united(const Alphabet& other) const {
  std::string merged = symbols_;
  for (char c : other.symbols_) {
    if (!contains(c)) merged.push_back(c);
  }
  return Alphabet(merged);
}

Alphabet Alphabet::without(char c) const {
  std::string rest;
  for (char s : symbols_) {
    if (s != c) rest.push_back(s);
  }
  return Alphabet(rest);
}

Alphabet Alphabet::with(char c) const {
  if (contains(c)) return *this;
  return Alphabet(symbols_ + c);
}

char Alphabet::fresh_symbol() const {
  for (char c : kFreshOrder) {
    if (!contains(c)) return c;
  }
  throw PreconditionError("no fresh letter available: alphabet is full");
}

}  // namespace wordrep
