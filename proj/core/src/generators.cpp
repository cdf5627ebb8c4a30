#include <limits>

#include "wordrep/error.hpp"
#include "wordrep/feinj.hpp"
#include "wordrep/infinite.hpp"

namespace wordrep {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) throw Error("block length overflow");
  return a * b;
}

void require_binary_base(const GeneratorPtr& base) {
  if (!base) throw PreconditionError("missing base generator");
  if (base->alphabet().size() != 2) throw PreconditionError("base generator must be over a binary alphabet");
}

// Renames a binary base word letter by letter: first base letter -> `first`.
std::string rename(std::string_view text, const Alphabet& base, char first, char second) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) out.push_back(base.index_of(c) == 0 ? first : second);
  return out;
}

std::string run(char c, std::size_t count) { return std::string(count, c); }

Morphism optimal_coding(std::size_t n, std::size_t k, std::size_t m) {
  if (n < 1) throw PreconditionError("constraint n >= 1 violated");
  if (k < 2) throw PreconditionError("constraint k >= 2 violated");
  if (m <= 2 + 2 * k) throw PreconditionError("constraint m > 2 + 2k violated");
  return Morphism(Alphabet("123456"), Alphabet("ab"),
                  {"a" + run('b', m - 1), "aa" + run('b', m - 2), run('a', m - 2) + "bb", run('a', m - 1) + "b",
                   run('a', m - 3) + "bbb", run('a', m - 4) + "bbbb"});
}

}  // namespace

WordGenerator::WordGenerator(std::string kind, Alphabet alphabet)
    : kind_(std::move(kind)), alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))) {}

std::string_view WordGenerator::prefix_view(std::size_t n) const {
  while (cache_.size() < n) {
    auto before = cache_.size();
    extend(cache_, n);
    if (cache_.size() == before) throw Error(kind_ + " generator stopped producing letters");
  }
  return std::string_view(cache_).substr(0, n);
}

Word WordGenerator::prefix(std::size_t n) const { return Word(prefix_view(n), alphabet_); }

PeriodicGenerator::PeriodicGenerator(Word v) : WordGenerator("periodic", v.letters()), v_(std::move(v)) {
  if (v_.empty()) throw PreconditionError("periodic generator needs a nonempty word");
}

void PeriodicGenerator::extend(std::string& out, std::size_t want) const {
  while (out.size() < want) out.push_back(v_[out.size() % v_.size()]);
}

MorphicGenerator::MorphicGenerator(Morphism g, char seed)
    : WordGenerator("morphic", g.domain()), g_(std::move(g)), seed_(seed) {
  if (!g_.domain().contains(seed_)) throw PreconditionError(std::string("seed '") + seed_ + "' not in domain");
  for (const auto& image : g_.images()) {
    if (!g_.domain().covers(image)) throw PreconditionError("morphism is not an endomorphism");
  }
  const auto& first = g_.image(seed_);
  if (first.size() < 2 || first.front() != seed_) {
    throw PreconditionError(std::string("morphism is not prolongable on '") + seed_ + "'");
  }
}

void MorphicGenerator::extend(std::string& out, std::size_t want) const {
  if (out.empty()) {
    out = g_.image(seed_);
    expanded_ = 1;
  }
  while (out.size() < want) {
    if (expanded_ >= out.size()) throw Error("fixed point is finite");
    out += g_.image(out[expanded_++]);
  }
}

StreamGenerator::StreamGenerator(Alphabet alphabet, std::function<char(std::size_t)> letter_at)
    : WordGenerator("custom", std::move(alphabet)), letter_at_(std::move(letter_at)) {
  if (!letter_at_) throw PreconditionError("missing letter function");
}

void StreamGenerator::extend(std::string& out, std::size_t want) const {
  while (out.size() < want) {
    char c = letter_at_(out.size());
    if (!alphabet().contains(c)) throw Error("stream produced a letter outside its alphabet");
    out.push_back(c);
  }
}

BigAceiGenerator::BigAceiGenerator(std::size_t n, GeneratorPtr base)
    : WordGenerator("big-acei", paired_alphabet(n)), n_(n), base_(std::move(base)), h_(interleave_morphism(n)) {
  require_binary_base(base_);
}

Word BigAceiGenerator::copy_block(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n_ || j < 1) throw PreconditionError("block index out of range");
  std::size_t start = checked_mul(j - 1, j) / 2;
  auto text = base_->prefix_view(start + j).substr(start);
  return Word(rename(text, base_->alphabet(), alphabet().symbol(2 * (i - 1)), alphabet().symbol(2 * i - 1)),
              alphabet());
}

Word BigAceiGenerator::round(std::size_t j) const {
  std::string text;
  for (std::size_t i = 1; i <= n_; ++i) text += copy_block(i, j).str();
  return Word(text, alphabet());
}

void BigAceiGenerator::extend(std::string& out, std::size_t) const { out += round(++rounds_).str(); }

OptimalBinaryGenerator::OptimalBinaryGenerator(std::size_t n, std::size_t k, std::size_t m, GeneratorPtr base)
    : WordGenerator("optimal-binary", Alphabet("ab")), n_(n), k_(k), m_(m), base_(std::move(base)),
      h_(optimal_coding(n, k, m)) {
  require_binary_base(base_);
}

std::size_t OptimalBinaryGenerator::u_length(std::size_t i, std::size_t k) {
  if (i < 1) throw PreconditionError("block index starts at 1");
  std::size_t len = k + 1;
  for (std::size_t t = 1; t < i; ++t) len = checked_mul(checked_mul(t * t, k + 1), len);
  return len;
}

std::size_t OptimalBinaryGenerator::v_length(std::size_t i, std::size_t k) {
  return checked_mul(k, u_length(i, k) + 1) - 1;
}

std::size_t OptimalBinaryGenerator::base_offset_u(std::size_t i) const {
  std::size_t offset = 0;
  for (std::size_t t = 1; t < i; ++t) offset += u_length(t, k_);
  return offset;
}

std::size_t OptimalBinaryGenerator::base_offset_v(std::size_t i) const {
  std::size_t offset = 0;
  for (std::size_t t = 1; t < i; ++t) offset += v_length(t, k_);
  return offset;
}

Word OptimalBinaryGenerator::u_block(std::size_t i) const {
  auto start = base_offset_u(i);
  auto text = base_->prefix_view(start + u_length(i, k_)).substr(start);
  return Word(rename(text, base_->alphabet(), '1', '2'), h_.domain());
}

Word OptimalBinaryGenerator::v_block(std::size_t i) const {
  auto start = base_offset_v(i);
  auto text = base_->prefix_view(start + v_length(i, k_)).substr(start);
  return Word(rename(text, base_->alphabet(), '3', '4'), h_.domain());
}

Word OptimalBinaryGenerator::repetition_block(std::size_t i) const {
  auto u = u_block(i).str();
  auto v = v_block(i).str();
  std::string text;
  for (std::size_t r = 0; r < n_; ++r) text += u + '5' + v + '5';
  text += u + '5';
  return Word(text, h_.domain());
}

Word OptimalBinaryGenerator::intermediate_block(std::size_t i) const {
  return Word(repetition_block(i).str() + '6', h_.domain());
}

Word OptimalBinaryGenerator::intermediate_prefix(std::size_t len) const {
  std::string text;
  for (std::size_t i = 1; text.size() < len; ++i) text += intermediate_block(i).str();
  text.resize(len);
  return Word(text, h_.domain());
}

Rational OptimalBinaryGenerator::ace_claim() const {
  return Rational(static_cast<std::int64_t>(n_)) + Rational(1, static_cast<std::int64_t>(k_ + 1));
}

Rational OptimalBinaryGenerator::claim2_bound() const {
  return Rational(static_cast<std::int64_t>(n_)) +
         Rational(static_cast<std::int64_t>(m_ - 2), static_cast<std::int64_t>(m_ + 2 * k_));
}

Rational OptimalBinaryGenerator::implied_delta() const {
  if (m_ <= 2 * k_ + 6) throw PreconditionError("constraint m > 2k + 6 violated");
  return Rational(static_cast<std::int64_t>(2 + 2 * k_), static_cast<std::int64_t>(m_ - 2 * k_ - 6));
}

Morphism OptimalBinaryGenerator::psi(std::size_t l) {
  if (l < 1) throw PreconditionError("psi needs l >= 1");
  return Morphism(Alphabet("ab"), Alphabet("ab"), {"a", run('b', l)});
}

void OptimalBinaryGenerator::extend(std::string& out, std::size_t) const {
  out += h_.apply(intermediate_block(++blocks_).view());
}

GeneratorPtr periodic_generator(const Word& v) { return std::make_shared<PeriodicGenerator>(v); }

GeneratorPtr morphic_generator(const Morphism& g, char seed) { return std::make_shared<MorphicGenerator>(g, seed); }

GeneratorPtr thue_morse_generator() {
  return morphic_generator(Morphism(Alphabet("01"), Alphabet("01"), {"01", "10"}), '0');
}

std::shared_ptr<BigAceiGenerator> big_acei_generator(std::size_t n, GeneratorPtr base) {
  return std::make_shared<BigAceiGenerator>(n, std::move(base));
}

std::shared_ptr<OptimalBinaryGenerator> optimal_binary_generator(std::size_t n, std::size_t k, std::size_t m,
                                                                 GeneratorPtr base) {
  return std::make_shared<OptimalBinaryGenerator>(n, k, m, std::move(base));
}

Morphism cassaigne_family_morphism(std::size_t d, const std::vector<std::size_t>& f, std::size_t m) {
  if (d < 1) throw PreconditionError("d must be at least 1");
  if (f.size() != d) throw PreconditionError("f must have d values");
  auto numbered = Alphabet::numbered(d + 1);
  if (numbered.size() != d + 1) throw PreconditionError("too many letters");
  std::vector<std::string> images;
  for (std::size_t i = 0; i < d; ++i) {
    if (m < f[i] + 1) throw PreconditionError("m too small: need m >= max f(i) + 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (f[i] == f[j]) throw PreconditionError("f is not injective");
    }
    images.push_back(run('a', m - f[i]) + run('b', f[i]));
  }
  return Morphism(numbered.without('0'), Alphabet("ab"), std::move(images));
}

}  // namespace wordrep
