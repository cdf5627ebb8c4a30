#ifndef WORDREP_PERIODICITY_HPP
#define WORDREP_PERIODICITY_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "wordrep/rational.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// `w = base^exponent` with `base` primitive and `exponent = |w| / |base|`.
struct FractionalPower {
  Word base;
  Rational exponent;
};

/// `w = root^count` with `root` primitive and `count` maximal.
struct IntegerPower {
  std::size_t count = 0;
  Word root;
};

/// Border (failure) array: `border[i]` is the length of the longest proper
/// border of `text[0..i]`.
std::vector<std::size_t> border_array(std::string_view text);

/// Least p >= 1 with text[i] == text[i + p] for every valid i.
/// Throws PreconditionError("empty input") for the empty word.
std::size_t smallest_period(std::string_view text);
inline std::size_t smallest_period(const Word& w) { return smallest_period(w.view()); }

/// The exact fractional exponent `|w| / smallest_period(w)` together with the
/// primitive base of that length.
FractionalPower fractional_exponent(const Word& w);
Rational exponent_of(std::string_view text);

IntegerPower integer_exponent(const Word& w);

bool is_primitive(std::string_view text);
inline bool is_primitive(const Word& w) { return is_primitive(w.view()); }

/// |u| == |v| and v occurs in uu. Both words must be nonempty.
bool is_conjugate(const Word& u, const Word& v);

/// One of u, v is a prefix of the other. Empty words are comparable with
/// everything.
bool prefix_comparable(std::string_view u, std::string_view v) noexcept;
/// One of u, v is a suffix of the other.
bool suffix_comparable(std::string_view u, std::string_view v) noexcept;
inline bool prefix_comparable(const Word& u, const Word& v) noexcept {
  return prefix_comparable(u.view(), v.view());
}
inline bool suffix_comparable(const Word& u, const Word& v) noexcept {
  return suffix_comparable(u.view(), v.view());
}

/// Length of the longest common prefix of u^omega and v^omega, capped at
/// `limit`.
std::size_t common_power_prefix(std::string_view u, std::string_view v, std::size_t limit);

/// If u^omega and v^omega agree on |u| + |v| - gcd(|u|, |v|) letters, the
/// common primitive root of u and v; otherwise nothing.
std::optional<Word> fine_wilf_root(const Word& u, const Word& v);

struct ExponentFactor {
  Word factor;
  std::size_t offset = 0;
  Rational exponent;
};

/// Among the factors of `w` of length >= min_len, one of maximal exponent.
/// Ties go to the shortest factor, then to the leftmost occurrence.
/// O(|w|^2) time, O(|w|) memory.
ExponentFactor max_exponent_factor(const Word& w, std::size_t min_len);

/// For every length n in [1, |text|], the least smallest-period over all
/// factors of length n and the leftmost offset achieving it. Index 0 is
/// unused. The maximal exponent among length-n factors is n / period[n].
struct PeriodProfile {
  std::vector<std::size_t> period;
  std::vector<std::size_t> offset;
};
PeriodProfile min_period_profile(std::string_view text);

}  // namespace wordrep

#endif  // WORDREP_PERIODICITY_HPP
