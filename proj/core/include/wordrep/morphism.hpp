#ifndef WORDREP_MORPHISM_HPP
#define WORDREP_MORPHISM_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordrep/alphabet.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Outcome of the unique-decodability test on the letter images.
struct InjectivityVerdict {
  bool injective = false;
  /// Two distinct domain words with equal images, of minimal total length.
  std::optional<std::pair<Word, Word>> counterexample;
};

namespace detail {
struct InjectivityCache;
}

/// A morphism between free monoids, given by the images of the letters of its
/// domain alphabet.
///
/// Values are immutable. The injectivity verdict is computed on first request
/// and shared between copies; computing it is thread-safe.
class Morphism {
 public:
  /// `images[i]` is the image of `domain.symbol(i)`; every image must be a word
  /// over `codomain`. Empty images are accepted here but make is_injective
  /// throw.
  Morphism(Alphabet domain, Alphabet codomain, std::vector<std::string> images);

  /// Parses `a=cdc,b=dc`. The domain keeps the order written; the codomain is
  /// the sorted set of letters used by the images unless one is supplied.
  static Morphism parse(std::string_view text);
  static Morphism parse(std::string_view text, const Alphabet& codomain);

  static Morphism identity(const Alphabet& alphabet);

  const Alphabet& domain() const noexcept { return *domain_; }
  const Alphabet& codomain() const noexcept { return *codomain_; }
  const std::vector<std::string>& images() const noexcept { return images_; }

  /// Image of a domain letter. Throws PreconditionError if `letter` is not in
  /// the domain.
  const std::string& image(char letter) const;
  Word image_word(char letter) const;

  std::size_t max_image_length() const noexcept;
  std::size_t min_image_length() const noexcept;
  bool is_erasing() const noexcept;

  /// Concatenation of the letter images. Throws PreconditionError naming the
  /// first letter of `w` outside the domain.
  Word apply(const Word& w) const;
  std::string apply(std::string_view w) const;

  /// True iff distinct words over the domain always have distinct images.
  /// Throws PreconditionError("erasing morphism") when some image is empty.
  bool is_injective() const { return injectivity().injective; }
  const InjectivityVerdict& injectivity() const;

  /// The same letter images restricted to a sub-alphabet of the domain.
  Morphism restricted_to(const Alphabet& letters) const;

  /// `a=cdc,b=dc` in domain order.
  std::string str() const;

  friend bool operator==(const Morphism& a, const Morphism& b) noexcept {
    return a.domain() == b.domain() && a.images_ == b.images_;
  }

 private:
  std::shared_ptr<const Alphabet> domain_;
  std::shared_ptr<const Alphabet> codomain_;
  std::vector<std::string> images_;
  std::shared_ptr<detail::InjectivityCache> cache_;
};

/// Decides unique decodability of `images` with the dangling-suffix closure
/// and returns a shortest pair of distinct index sequences with equal
/// concatenations when it fails. Images must be nonempty.
std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
find_ambiguity(const std::vector<std::string>& images);

/// (g o h)(a) = g(h(a)). Requires codomain(h) to be covered by domain(g).
Morphism compose(const Morphism& g, const Morphism& h);

/// c_i -> 0^{n+1-i} 1^i over the codomain {0, 1}, where c_1..c_n are the
/// symbols of `source` in order.
Morphism binary_embedding(const Alphabet& source);

/// Enumerates every injective morphism from `domain` to `codomain` whose
/// images have length in [1, max_image_len], each exactly once.
///
/// Order: the image tuple is compared lexicographically with the first domain
/// letter most significant; single images are ordered by length, then
/// lexicographically by codomain order. Single consumer.
class InjectiveMorphismEnumerator {
 public:
  InjectiveMorphismEnumerator(Alphabet domain, Alphabet codomain, std::size_t max_image_len);

  /// The next injective morphism, or nothing when exhausted.
  std::optional<Morphism> next();

  /// Position of the last returned morphism among all candidate image tuples
  /// (injective or not).
  std::uint64_t candidate_index() const noexcept { return index_ - 1; }
  /// Total number of candidate image tuples.
  std::uint64_t candidate_count() const noexcept { return total_; }

  /// The candidate at a given position in the order above, injective or not.
  Morphism candidate(std::uint64_t index) const;
  std::vector<std::string> candidate_images(std::uint64_t index) const;

  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<std::string> words_;  // all codomain words of length 1..max, shortlex
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
};

/// Codomain words of length 1..max_len in length-then-lexicographic order.
std::vector<std::string> shortlex_words(const Alphabet& alphabet, std::size_t max_len);

}  // namespace wordrep

#endif  // WORDREP_MORPHISM_HPP
