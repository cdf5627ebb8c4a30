#ifndef WORDREP_CODES_HPP
#define WORDREP_CODES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/morphism.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// A finite set of distinct nonempty words, kept in the order given.
class CodeSet {
 public:
  explicit CodeSet(std::vector<Word> words);

  /// Parses `ab,ba` or `X=ab,ba`.
  static CodeSet parse(std::string_view text);

  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t max_len() const noexcept { return max_len_; }

  bool contains(std::string_view w) const noexcept;
  /// `w` is a suffix (resp. prefix) of some element, possibly the whole
  /// element.
  bool has_suffix(std::string_view w) const noexcept;
  bool has_prefix(std::string_view w) const noexcept;

  /// The morphism sending the i-th domain letter to the i-th word.
  Morphism induced_morphism() const;
  /// X is uniquely decodable.
  bool is_code() const;

  std::string str() const;

 private:
  std::vector<Word> words_;
  std::size_t max_len_ = 0;
};

/// A factorization w = w_1 ... w_n where w_1 is a suffix of an element of X,
/// w_n a prefix of an element, and w_2 .. w_{n-1} are elements.
///
/// Pieces are nonempty, so an interpretation is determined by its cut offsets
/// (the positions |w_1 ... w_i| for 1 <= i < n, all strictly inside w).
struct Interpretation {
  std::vector<Word> pieces;
  std::vector<std::size_t> cuts;

  /// `(b|cab|a)@[1,4]` style rendering.
  std::string str() const;
};

/// All X-interpretations of `w`, ordered lexicographically by cut offsets (the
/// single-piece interpretation, if any, first).
std::vector<Interpretation> x_interpretations(const Word& w, const CodeSet& x);

/// Number of X-interpretations, without materialising them.
std::uint64_t x_interpretation_count(const Word& w, const CodeSet& x);

/// Maximal number of X-interpretations of `w` with pairwise disjoint cut sets.
///
/// Interpretations are source-to-sink paths in the DAG of admissible cuts, so
/// this is the maximum number of internally vertex-disjoint paths, computed
/// exactly by unit-capacity max-flow.
std::size_t x_degree(const Word& w, const CodeSet& x);

/// Number of ways to write `w` as a concatenation of elements of X.
std::uint64_t x_factorization_count(const Word& w, const CodeSet& x);

/// Default probe length 4 (|w| + max_len(X)).
std::size_t default_probe_length(const Word& w, const CodeSet& x);

/// Smallest split t in [0, |w|] such that, for every v in X* with |v| <=
/// probe_len and every occurrence v = p w s, the prefix p w[0..t) lies in X*
/// (equivalently, the factorization of v has a boundary there). Returns
/// nothing when no split qualifies. Throws PreconditionError if X is not a
/// code.
std::optional<std::size_t> is_synchronizing(const Word& w, const CodeSet& x,
                                            std::optional<std::size_t> probe_len = std::nullopt);

/// One way an occurrence of `w` can sit inside a word of X*: the positions
/// in [0, |w|] where that word's factorization has a boundary, and the length
/// of the shortest v in X* realising it.
struct OccurrenceContext {
  std::vector<std::size_t> boundaries;
  std::size_t shortest_realisation = 0;
};

/// Every occurrence context of `w` in X*, ordered by boundary list.
std::vector<OccurrenceContext> occurrence_contexts(const Word& w, const CodeSet& x);

}  // namespace wordrep

#endif  // WORDREP_CODES_HPP
