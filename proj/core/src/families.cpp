#include "wordrep/error.hpp"
#include "wordrep/feinj.hpp"

namespace wordrep {

namespace {

std::string repeat(std::string_view s, std::size_t times) {
  std::string out;
  out.reserve(s.size() * times);
  for (std::size_t i = 0; i < times; ++i) out += s;
  return out;
}

}  // namespace

FamilyInstance lowpower_morphism(std::size_t n, std::size_t k) {
  if (n < 2) throw PreconditionError("lowpower family needs n >= 2");
  Word w(repeat("ab", n) + "ba", Alphabet("ab"));
  Morphism h(Alphabet("ab"), Alphabet("cd"), {repeat("cd", k) + "c", "dc"});
  auto ni = static_cast<std::int64_t>(n);
  auto ki = static_cast<std::int64_t>(k);
  Rational expected = Rational(1) + Rational(4 * ki + 4, (2 * ki + 3) * (ni - 1) + 2);
  return {std::move(w), std::move(h), expected};
}

Rational lowpower_limit(std::size_t n) {
  if (n < 2) throw PreconditionError("lowpower family needs n >= 2");
  return Rational(1) + Rational(2, static_cast<std::int64_t>(n) - 1);
}

Alphabet paired_alphabet(std::size_t n) {
  if (n < 1 || n > 26) throw PreconditionError("paired alphabet supports 1..26 letter pairs");
  std::string symbols;
  for (std::size_t i = 0; i < n; ++i) {
    symbols.push_back(static_cast<char>('a' + i));
    symbols.push_back(static_cast<char>('A' + i));
  }
  return Alphabet(symbols);
}

Morphism interleave_morphism(std::size_t n) {
  Alphabet domain = paired_alphabet(n);
  std::vector<std::string> images;
  for (std::size_t i = 1; i <= n; ++i) {
    std::string before(i - 1, 'c');
    std::string after(n - i, 'c');
    images.push_back(before + 'a' + after);
    images.push_back(before + 'b' + after);
  }
  return Morphism(std::move(domain), Alphabet("abc"), std::move(images));
}

FamilyInstance highpower_word(std::size_t n) {
  if (n < 2) throw PreconditionError("highpower family needs n >= 2");
  Alphabet alphabet = paired_alphabet(n);
  std::string text;
  for (std::size_t i = 0; i < n; ++i) {
    char a = static_cast<char>('a' + i);
    char b = static_cast<char>('A' + i);
    text += {a, a, b, a, b, b};
  }
  auto ni = static_cast<std::int64_t>(n);
  Rational expected = Rational(ni) - Rational(ni, 6 * ni + 1);
  return {Word(text, std::move(alphabet)), interleave_morphism(n), expected};
}

}  // namespace wordrep
