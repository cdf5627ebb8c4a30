#include "wordrep/word.hpp"

#include <algorithm>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

const std::shared_ptr<const Alphabet>& empty_alphabet() {
  static const auto empty = std::make_shared<const Alphabet>();
  return empty;
}

}  // namespace

Word::Word() : alphabet_(empty_alphabet()) {}

Word::Word(std::string_view text)
    : letters_(text), alphabet_(std::make_shared<const Alphabet>(Alphabet::of(text))) {}

Word::Word(std::string_view text, Alphabet alphabet)
    : Word(text, std::make_shared<const Alphabet>(std::move(alphabet))) {}

Word::Word(std::string_view text, std::shared_ptr<const Alphabet> alphabet)
    : letters_(text), alphabet_(std::move(alphabet)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!alphabet_->contains(letters_[i])) {
      throw ParseError(std::string("letter '") + letters_[i] + "' is not in the alphabet", i);
    }
  }
}

std::size_t Word::count(char letter) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw PreconditionError("factor out of range");
  }
  return Word(Unchecked{}, letters_.substr(pos, len), alphabet_);
}

Word Word::suffix(std::size_t len) const {
  if (len > size()) throw PreconditionError("suffix longer than word");
  return factor(size() - len, len);
}

Word Word::power(std::size_t times) const {
  std::string out;
  out.reserve(letters_.size() * times);
  for (std::size_t i = 0; i < times; ++i) out += letters_;
  return Word(Unchecked{}, std::move(out), alphabet_);
}

Word Word::periodic_prefix(std::size_t len) const {
  if (empty()) throw PreconditionError("empty input");
  std::string out(len, '\0');
  for (std::size_t i = 0; i < len; ++i) out[i] = letters_[i % letters_.size()];
  return Word(Unchecked{}, std::move(out), alphabet_);
}

Word operator+(const Word& a, const Word& b) {
  auto alphabet = a.alphabet_ == b.alphabet_ || a.alphabet().includes(b.alphabet())
                      ? a.alphabet_
                      : std::make_shared<const Alphabet>(a.alphabet().united(b.alphabet()));
  return Word(Word::Unchecked{}, a.letters_ + b.letters_, std::move(alphabet));
}

}  // namespace wordrep
