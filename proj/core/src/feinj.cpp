#include "wordrep/feinj.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "wordrep/error.hpp"
#include "wordrep/periodicity.hpp"

namespace wordrep {

namespace {

// Splits [0, total) into `threads` contiguous chunks and runs `body(begin,
// end, chunk)` on each, on the calling thread when threads <= 1.
template <class Body>
void for_each_chunk(std::uint64_t total, std::size_t threads, Body&& body) {
  threads = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  if (threads == 1) {
    body(std::uint64_t{0}, total, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    std::uint64_t begin = total * t / threads;
    std::uint64_t end = total * (t + 1) / threads;
    pool.emplace_back([&body, begin, end, t] { body(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

std::string letters_without(const Word& w, char a) {
  std::string out;
  for (char c : w.letters().symbols()) {
    if (c != a) out.push_back(c);
  }
  return out;
}

Rational default_target(const Word& w) { return Rational(2 * static_cast<std::int64_t>(w.size())); }

// First candidate index in the enumeration whose images are injective and
// satisfy both comparabilities for `fact`.
std::optional<std::uint64_t> search_certificate(const AFactorization& fact,
                                                const InjectiveMorphismEnumerator& space,
                                                std::size_t threads) {
  constexpr auto kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> found{kNone};
  const auto& domain = space.domain();
  auto image_of = [&domain](const std::vector<std::string>& images, const Word& u) {
    std::string out;
    for (char c : u.view()) out += images[*domain.index_of(c)];
    return out;
  };
  for_each_chunk(space.candidate_count(), threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
    for (std::uint64_t i = begin; i < end; ++i) {
      if (i >= found.load(std::memory_order_relaxed)) return;
      auto images = space.candidate_images(i);
      auto p = image_of(images, fact.w1);
      auto q = image_of(images, fact.w2);
      auto r = image_of(images, fact.w3);
      if (!suffix_comparable(p, q) || !prefix_comparable(q, r)) continue;
      if (find_ambiguity(images)) continue;
      auto current = found.load();
      while (i < current && !found.compare_exchange_weak(current, i)) {
      }
      return;
    }
  });
  if (found.load() == kNone) return std::nullopt;
  return found.load();
}

}  // namespace

Word AFactorization::assemble() const {
  std::string out = w1.str();
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(letter);
    out += w2.str();
  }
  out.push_back(letter);
  out += w3.str();
  auto alphabet = w1.alphabet().united(w2.alphabet()).united(w3.alphabet()).with(letter);
  return Word(out, std::move(alphabet));
}

std::optional<AFactorization> a_factorization(const Word& w, char a) {
  if (w.empty()) throw PreconditionError("empty input");
  auto text = w.view();
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == a) at.push_back(i);
  }
  if (at.empty()) return std::nullopt;
  AFactorization f;
  f.letter = a;
  f.w1 = w.prefix(at.front());
  f.w3 = w.factor(at.back() + 1, w.size() - at.back() - 1);
  f.k = at.size() - 1;
  f.w2 = w.factor(0, 0);
  if (at.size() > 1) {
    auto gap = text.substr(at[0] + 1, at[1] - at[0] - 1);
    for (std::size_t i = 2; i < at.size(); ++i) {
      if (text.substr(at[i - 1] + 1, at[i] - at[i - 1] - 1) != gap) return std::nullopt;
    }
    f.w2 = w.factor(at[0] + 1, gap.size());
  }
  return f;
}

std::vector<AFactorization> a_factorizations(const Word& w) {
  std::vector<AFactorization> out;
  for (char c : w.letters().symbols()) {
    if (auto f = a_factorization(w, c)) out.push_back(std::move(*f));
  }
  return out;
}

const char* to_string(FeInjTag tag) noexcept {
  switch (tag) {
    case FeInjTag::Infinite:
      return "Infinite";
    case FeInjTag::Finite:
      return "Finite";
    case FeInjTag::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Witness pump_witness(const Word& w, const AFactorization& fact, const Morphism& base,
                     const Rational& target, const PumpOptions& options) {
  if (target < Rational(1)) throw PreconditionError("target exponent must be at least 1");
  const char a = fact.letter;
  if (fact.assemble() != w) throw PreconditionError("factorization does not reassemble the word");
  for (const Word* part : {&fact.w1, &fact.w2, &fact.w3}) {
    if (part->count(a) != 0) throw PreconditionError("factorization parts must avoid the letter");
  }

  // Witness domain: letters of w's alphabet that the base maps, plus `a`.
  std::string others;
  for (char c : w.alphabet().symbols()) {
    if (c != a && base.domain().contains(c)) others.push_back(c);
  }
  for (char c : (fact.w1 + fact.w2 + fact.w3).letters().symbols()) {
    if (!base.domain().contains(c)) {
      throw PreconditionError(std::string("base morphism does not map letter '") + c + "'");
    }
  }
  Morphism rest = base.restricted_to(Alphabet(others));
  if (!others.empty() && !rest.is_injective()) {
    throw PreconditionError("base morphism is not injective on the letters other than the pumped one");
  }

  const std::string P = rest.apply(fact.w1.view());
  const std::string Q = rest.apply(fact.w2.view());
  const std::string R = rest.apply(fact.w3.view());
  if (!suffix_comparable(P, Q)) throw PreconditionError("images of w1 and w2 are not suffix-comparable");
  if (!prefix_comparable(Q, R)) throw PreconditionError("images of w2 and w3 are not prefix-comparable");

  // P is a suffix of p Q and R a prefix of Q s.
  const std::string p = P.size() > Q.size() ? P.substr(0, P.size() - Q.size()) : std::string();
  const std::string s = R.size() > Q.size() ? R.substr(Q.size()) : std::string();
  // p Q = t P.
  const std::string t = (p + Q).substr(0, p.size() + Q.size() - P.size());

  const char c = rest.codomain().fresh_symbol();
  Alphabet codomain = rest.codomain().with(c);

  // Under a -> s c p the image of w is a fractional power of x = u c v with
  // u = P s and v = t, and x contains c exactly once. Pumping c -> c (v u c)^(N-1)
  // turns x into x^N, so the exponent is multiplied by at least N.
  const std::string u = P + s;
  const std::string& v = t;
  std::int64_t copies = std::max<std::int64_t>(1, target.ceil());
  std::string domain_symbols;
  for (char letter : w.alphabet().symbols()) {
    if (letter == a || others.find(letter) != std::string::npos) domain_symbols.push_back(letter);
  }
  Alphabet domain(domain_symbols);
  for (;;) {
    std::string pumped(1, c);
    for (std::int64_t i = 1; i < copies; ++i) pumped += v + u + c;
    std::vector<std::string> images;
    for (char letter : domain.symbols()) {
      images.push_back(letter == a ? s + pumped + p : rest.image(letter));
    }
    Morphism witness(domain, codomain, std::move(images));
    if (options.binary_codomain) witness = compose(binary_embedding(codomain), witness);
    Rational achieved = exponent_of(witness.apply(w.view()));
    if (achieved >= target) return {std::move(witness), achieved};
    ++copies;
  }
}

FeInjVerdict classify_binary(const Word& w) {
  if (w.empty()) throw PreconditionError("empty input");
  if (w.letters().size() > 2) throw PreconditionError("classify_binary needs a word over at most two letters");
  FeInjVerdict verdict;
  auto facts = a_factorizations(w);
  if (facts.empty()) {
    verdict.tag = FeInjTag::Finite;
    verdict.provenance = "no letter admits an a-factorization";
    return verdict;
  }
  // Over two letters w1, w2, w3 are powers of the other letter, hence always
  // suffix- and prefix-comparable.
  const auto& fact = facts.front();
  verdict.tag = FeInjTag::Infinite;
  verdict.certificate = Morphism::identity(w.letters());
  verdict.witness = pump_witness(w, fact, *verdict.certificate, default_target(w));
  verdict.factorization = fact;
  verdict.provenance = std::string("binary pattern on letter '") + fact.letter + "'";
  return verdict;
}

FeInjVerdict classify_general(const Word& w, const ClassifyOptions& options) {
  if (w.empty()) throw PreconditionError("empty input");
  if (options.max_image_len < 1) throw PreconditionError("max_image_len must be at least 1");
  FeInjVerdict verdict;
  auto facts = a_factorizations(w);
  if (facts.empty()) {
    verdict.tag = FeInjTag::Finite;
    verdict.provenance = "no letter admits an a-factorization";
    return verdict;
  }

  for (const auto& fact : facts) {
    if (suffix_comparable(fact.w1, fact.w2) && prefix_comparable(fact.w2, fact.w3)) {
      verdict.tag = FeInjTag::Infinite;
      verdict.certificate = Morphism::identity(w.letters());
      verdict.witness = pump_witness(w, fact, *verdict.certificate, default_target(w));
      verdict.factorization = fact;
      verdict.provenance = std::string("identity on letter '") + fact.letter + "'";
      return verdict;
    }
  }

  for (const auto& fact : facts) {
    InjectiveMorphismEnumerator space(Alphabet(letters_without(w, fact.letter)), options.codomain,
                                      options.max_image_len);
    if (auto index = search_certificate(fact, space, options.threads)) {
      verdict.tag = FeInjTag::Infinite;
      verdict.certificate = space.candidate(*index);
      verdict.witness = pump_witness(w, fact, *verdict.certificate, default_target(w));
      verdict.factorization = fact;
      verdict.provenance =
          std::string("enumeration #") + std::to_string(*index) + " on letter '" + fact.letter + "'";
      return verdict;
    }
  }

  verdict.tag = FeInjTag::Unknown;
  verdict.search_bound = options.max_image_len;
  verdict.provenance = "no comparability certificate with images up to length " +
                       std::to_string(options.max_image_len);
  return verdict;
}

LowerBound fe_inj_lower_bound(const Word& w, std::size_t max_image_len, std::size_t codomain_size,
                              std::size_t threads) {
  if (w.empty()) throw PreconditionError("empty input");
  if (max_image_len < 1 || codomain_size < 1) throw PreconditionError("bounds must be at least 1");
  InjectiveMorphismEnumerator space(w.letters(), Alphabet::numbered(codomain_size), max_image_len);
  const auto& domain = space.domain();

  struct Best {
    Rational exponent{0};
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t examined = 0;
  };
  std::vector<Best> partial(std::max<std::size_t>(threads, 1));
  for_each_chunk(space.candidate_count(), threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t t) {
    Best& best = partial[t];
    std::string image;
    for (std::uint64_t i = begin; i < end; ++i) {
      auto images = space.candidate_images(i);
      if (find_ambiguity(images)) continue;
      ++best.examined;
      image.clear();
      for (char c : w.view()) image += images[*domain.index_of(c)];
      Rational e = exponent_of(image);
      if (best.index == std::numeric_limits<std::uint64_t>::max() || e > best.exponent) {
        best.exponent = e;
        best.index = i;
      }
    }
  });

  Best overall;
  for (const auto& b : partial) {
    overall.examined += b.examined;
    if (b.index == std::numeric_limits<std::uint64_t>::max()) continue;
    if (overall.index == std::numeric_limits<std::uint64_t>::max() || b.exponent > overall.exponent ||
        (b.exponent == overall.exponent && b.index < overall.index)) {
      overall.exponent = b.exponent;
      overall.index = b.index;
    }
  }
  if (overall.index == std::numeric_limits<std::uint64_t>::max()) {
    throw PreconditionError("no injective morphism within the given bounds");
  }
  return {overall.exponent, space.candidate(overall.index), overall.examined};
}

}  // namespace wordrep
