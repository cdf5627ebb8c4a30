#ifndef WORDREP_FEINJ_HPP
#define WORDREP_FEINJ_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/morphism.hpp"
#include "wordrep/rational.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// The shape `w = w1 (a w2)^k a w3` with `a` absent from w1, w2, w3.
/// When `a` occurs once, k == 0 and w2 is empty.
struct AFactorization {
  char letter = 0;
  Word w1;
  Word w2;
  Word w3;
  std::size_t k = 0;

  Word assemble() const;
};

/// The factorization of `w` around `a`, if `a` occurs and every gap between
/// consecutive occurrences of `a` is the same word.
std::optional<AFactorization> a_factorization(const Word& w, char a);

/// a_factorization for every letter occurring in `w`, in sorted letter order.
std::vector<AFactorization> a_factorizations(const Word& w);

enum class FeInjTag { Infinite, Finite, Unknown };
const char* to_string(FeInjTag tag) noexcept;

/// An injective morphism together with the exact exponent of its image of the
/// classified word.
struct Witness {
  Morphism morphism;
  Rational exponent;
};

/// Three-valued classification of the mapped exponent of a finite word.
///
/// - Infinite: `witness` is present and `factorization` records the shape it
///   was pumped from.
/// - Finite: no letter admits an a-factorization, so every injective image has
///   exponent at most |w|.
/// - Unknown: some letter admits an a-factorization but no comparability
///   certificate was found among morphisms with images up to `search_bound`.
struct FeInjVerdict {
  FeInjTag tag = FeInjTag::Unknown;
  std::optional<Witness> witness;
  std::optional<std::size_t> search_bound;
  std::optional<AFactorization> factorization;
  /// The comparability certificate the witness was pumped from.
  std::optional<Morphism> certificate;
  /// How the verdict was reached, e.g. "identity", "enumeration #12".
  std::string provenance;
};

/// Exact decision for words using at most two letters. Throws
/// PreconditionError for three or more letters. Witnesses are pumped to
/// exponent 2|w|.
FeInjVerdict classify_binary(const Word& w);

struct ClassifyOptions {
  std::size_t max_image_len = 3;
  /// Codomain searched for comparability certificates.
  Alphabet codomain = Alphabet("01");
  std::size_t threads = 1;
};

/// Finite / Infinite / Unknown by a-factorization, the identity shortcut, then
/// bounded search over injective morphisms on the remaining letters.
FeInjVerdict classify_general(const Word& w, const ClassifyOptions& options = {});
inline FeInjVerdict classify_general(const Word& w, std::size_t max_image_len) {
  ClassifyOptions options;
  options.max_image_len = max_image_len;
  return classify_general(w, options);
}

struct PumpOptions {
  /// Re-embed the witness into {0, 1} with binary_embedding.
  bool binary_codomain = false;
};

/// Builds an injective morphism whose image of `w` has exponent >= `target`.
///
/// `base` must be injective on the letters of w1 w2 w3 (its image of `a`, if
/// any, is ignored) with base(w1), base(w2) suffix-comparable and base(w2),
/// base(w3) prefix-comparable. The letter `a` is sent to `s c p` for a fresh
/// letter `c`, which makes the image a power of a word containing `c` once;
/// that power is then pumped by replacing `c`. The returned exponent is
/// recomputed exactly from the final image.
Witness pump_witness(const Word& w, const AFactorization& fact, const Morphism& base,
                     const Rational& target, const PumpOptions& options = {});

struct LowerBound {
  Rational best;
  Morphism argmax;
  std::uint64_t morphisms_examined = 0;
};

/// Exact maximum of E(h(w)) over all injective h from the letters of `w` into
/// a `codomain_size`-letter alphabet (see Alphabet::numbered) with images of
/// length <= max_image_len. The argmax is the first maximiser in enumeration
/// order, independent of `threads`.
LowerBound fe_inj_lower_bound(const Word& w, std::size_t max_image_len, std::size_t codomain_size,
                              std::size_t threads = 1);

/// A word, a morphism, and the exact exponent its image is expected to have.
struct FamilyInstance {
  Word word;
  Morphism morphism;
  Rational expected;
};

/// w = (ab)^n ba, h_k(a) = (cd)^k c, h_k(b) = dc, and
/// expected = 1 + (4k+4) / ((2k+3)(n-1) + 2). Requires n >= 2.
FamilyInstance lowpower_morphism(std::size_t n, std::size_t k);

/// The supremum approached by lowpower_morphism(n, k) as k grows: 1 + 2/(n-1).
Rational lowpower_limit(std::size_t n);

/// Letters a_i (lowercase) and b_i (uppercase) for i = 1..n, declared in the
/// order a_1 b_1 a_2 b_2 ...
Alphabet paired_alphabet(std::size_t n);

/// h(a_i) = c^{i-1} a c^{n-i}, h(b_i) = c^{i-1} b c^{n-i} over {a, b, c}.
Morphism interleave_morphism(std::size_t n);

/// w_n = prod_{i=1..n} a_i a_i b_i a_i b_i b_i with interleave_morphism(n) and
/// expected = n - n/(6n+1). Requires n >= 2.
FamilyInstance highpower_word(std::size_t n);

}  // namespace wordrep

#endif  // WORDREP_FEINJ_HPP
