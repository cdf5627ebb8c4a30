#ifndef WORDREP_INFINITE_HPP
#define WORDREP_INFINITE_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/alphabet.hpp"
#include "wordrep/morphism.hpp"
#include "wordrep/rational.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Produces prefixes of a right-infinite word on demand.
///
/// Letters are produced once and cached, so prefix(n) is always a prefix of
/// prefix(m) for n <= m. A generator is a single-consumer object: the cache
/// is not synchronised.
class WordGenerator {
 public:
  virtual ~WordGenerator() = default;
  WordGenerator(const WordGenerator&) = delete;
  WordGenerator& operator=(const WordGenerator&) = delete;

  const std::string& kind() const noexcept { return kind_; }
  const Alphabet& alphabet() const noexcept { return *alphabet_; }

  Word prefix(std::size_t n) const;
  /// Same as prefix(n) but without building a Word.
  std::string_view prefix_view(std::size_t n) const;

 protected:
  WordGenerator(std::string kind, Alphabet alphabet);

  /// Appends at least one letter to `out`. `want` is the length the caller is
  /// trying to reach and may be used to produce letters in bulk.
  virtual void extend(std::string& out, std::size_t want) const = 0;

 private:
  std::string kind_;
  std::shared_ptr<const Alphabet> alphabet_;
  mutable std::string cache_;
};

using GeneratorPtr = std::shared_ptr<WordGenerator>;

class PeriodicGenerator final : public WordGenerator {
 public:
  explicit PeriodicGenerator(Word v);
  const Word& period_word() const noexcept { return v_; }

 private:
  void extend(std::string& out, std::size_t want) const override;
  Word v_;
};

/// The fixed point of a prolongable endomorphism g starting with `seed`.
class MorphicGenerator final : public WordGenerator {
 public:
  MorphicGenerator(Morphism g, char seed);
  const Morphism& morphism() const noexcept { return g_; }

 private:
  void extend(std::string& out, std::size_t want) const override;
  Morphism g_;
  char seed_;
  mutable std::size_t expanded_ = 0;
};

/// Letters supplied by a callable mapping a position to a letter.
class StreamGenerator final : public WordGenerator {
 public:
  StreamGenerator(Alphabet alphabet, std::function<char(std::size_t)> letter_at);

 private:
  void extend(std::string& out, std::size_t want) const override;
  std::function<char(std::size_t)> letter_at_;
};

/// n renamed copies of a binary base word, cut into chunks of lengths
/// 1, 2, 3, ... and interleaved round by round:
/// u_{1,1} ... u_{n,1} u_{1,2} ... u_{n,2} ...
///
/// Copy i uses the letter pair (a_i, b_i) of paired_alphabet(n); the first
/// base letter maps to a_i and the second to b_i.
class BigAceiGenerator final : public WordGenerator {
 public:
  BigAceiGenerator(std::size_t n, GeneratorPtr base);

  std::size_t copies() const noexcept { return n_; }
  /// u_{i,j} for 1 <= i <= n, j >= 1.
  Word copy_block(std::size_t i, std::size_t j) const;
  /// u_{1,j} u_{2,j} ... u_{n,j}.
  Word round(std::size_t j) const;
  /// a_i -> c^{i-1} a c^{n-i}, b_i -> c^{i-1} b c^{n-i}.
  const Morphism& morphism() const noexcept { return h_; }

 private:
  void extend(std::string& out, std::size_t want) const override;
  std::size_t n_;
  GeneratorPtr base_;
  Morphism h_;
  mutable std::size_t rounds_ = 0;
};

/// Emits h(w) for the six-letter word
/// w = prod_{i>=1} (u_i c5 v_i c5)^n u_i c5 c6,
/// where u_1 u_2 ... is the base word over {c1, c2}, v_1 v_2 ... is its copy
/// over {c3, c4}, |u_1| = k+1, |u_{i+1}| = i^2 (k+1) |u_i| and
/// |v_i| = k (|u_i| + 1) - 1. Intermediate letters are written '1'..'6'.
class OptimalBinaryGenerator final : public WordGenerator {
 public:
  OptimalBinaryGenerator(std::size_t n, std::size_t k, std::size_t m, GeneratorPtr base);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t m() const noexcept { return m_; }

  static std::size_t u_length(std::size_t i, std::size_t k);
  static std::size_t v_length(std::size_t i, std::size_t k);

  Word u_block(std::size_t i) const;
  Word v_block(std::size_t i) const;
  /// (u_i c5 v_i c5)^n u_i c5, the repetition carrying the exponent.
  Word repetition_block(std::size_t i) const;
  /// repetition_block(i) followed by c6.
  Word intermediate_block(std::size_t i) const;
  /// Prefix of the intermediate word w itself.
  Word intermediate_prefix(std::size_t len) const;

  /// The binary coding of '1'..'6'; every image has length m.
  const Morphism& morphism() const noexcept { return h_; }

  /// n + 1/(k+1).
  Rational ace_claim() const;
  /// n + (m-2)/(m+2k).
  Rational claim2_bound() const;
  /// The delta for which m = (2+2k)/delta + 2k + 6 (m must exceed 2k+6).
  Rational implied_delta() const;
  /// a -> a, b -> b^l.
  static Morphism psi(std::size_t l);

 private:
  void extend(std::string& out, std::size_t want) const override;
  std::size_t base_offset_u(std::size_t i) const;
  std::size_t base_offset_v(std::size_t i) const;

  std::size_t n_, k_, m_;
  GeneratorPtr base_;
  Morphism h_;
  mutable std::size_t blocks_ = 0;
};

GeneratorPtr periodic_generator(const Word& v);
GeneratorPtr morphic_generator(const Morphism& g, char seed);
/// Fixed point of 0 -> 01, 1 -> 10.
GeneratorPtr thue_morse_generator();
std::shared_ptr<BigAceiGenerator> big_acei_generator(std::size_t n, GeneratorPtr base = thue_morse_generator());
std::shared_ptr<OptimalBinaryGenerator> optimal_binary_generator(std::size_t n, std::size_t k, std::size_t m,
                                                                 GeneratorPtr base = thue_morse_generator());

/// c_i -> a^{m - f(i)} b^{f(i)} for i = 1..d, domain letters '1', '2', ...
Morphism cassaigne_family_morphism(std::size_t d, const std::vector<std::size_t>& f, std::size_t m);

struct LengthMaximum {
  std::size_t length = 0;
  Rational exponent;
  std::size_t offset = 0;
};

struct AceEstimate {
  std::size_t prefix_len = 0;
  std::size_t tail = 0;
  /// One entry per factor length in [tail, prefix_len].
  std::vector<LengthMaximum> curve;
  Rational estimate;
  /// Shortest factor attaining the estimate, leftmost among those.
  Word factor;
  std::size_t offset = 0;
};

/// Maximal exponent over factors of length >= tail of the prefix of length
/// prefix_len. A lower bound for the critical exponent, never a limit.
AceEstimate ace_estimate(const WordGenerator& gen, std::size_t prefix_len, std::size_t tail);

/// factor_length,max_exponent_num,max_exponent_den,witness_offset
void write_ace_csv(std::ostream& os, const AceEstimate& estimate);

/// Distinct factors of length n in the prefix of length prefix_len.
std::size_t factor_complexity(const WordGenerator& gen, std::size_t prefix_len, std::size_t n);

}  // namespace wordrep

#endif  // WORDREP_INFINITE_HPP
