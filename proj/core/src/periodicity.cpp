#include "wordrep/periodicity.hpp"

#include <numeric>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

void require_nonempty(std::string_view text) {
  if (text.empty()) throw PreconditionError("empty input");
}

// Incremental failure-function builder over a growing pattern. Appending one
// letter costs amortised O(1).
class BorderBuilder {
 public:
  explicit BorderBuilder(std::string_view text) : text_(text) { border_.reserve(text.size()); }

  // Extends the pattern by text_[length()] and returns the new border length.
  std::size_t push() {
    std::size_t i = border_.size();
    if (i == 0) {
      border_.push_back(0);
      return 0;
    }
    std::size_t b = border_[i - 1];
    while (b > 0 && text_[i] != text_[b]) b = border_[b - 1];
    if (text_[i] == text_[b]) ++b;
    border_.push_back(b);
    return b;
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> border_;
};

}  // namespace

std::vector<std::size_t> border_array(std::string_view text) {
  BorderBuilder builder(text);
  std::vector<std::size_t> out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) out[i] = builder.push();
  return out;
}

std::size_t smallest_period(std::string_view text) {
  require_nonempty(text);
  return text.size() - border_array(text).back();
}

Rational exponent_of(std::string_view text) {
  auto p = smallest_period(text);
  return Rational(static_cast<std::int64_t>(text.size()), static_cast<std::int64_t>(p));
}

FractionalPower fractional_exponent(const Word& w) {
  auto p = smallest_period(w.view());
  return {w.prefix(p), Rational(static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(p))};
}

IntegerPower integer_exponent(const Word& w) {
  auto p = smallest_period(w.view());
  // The primitive root has length p exactly when p divides |w|; otherwise the
  // word is primitive (a period dividing |w| would be a multiple of p).
  if (w.size() % p == 0) return {w.size() / p, w.prefix(p)};
  return {1, w};
}

bool is_primitive(std::string_view text) {
  require_nonempty(text);
  auto p = smallest_period(text);
  return p == text.size() || text.size() % p != 0;
}

bool is_conjugate(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw PreconditionError("empty input");
  if (u.size() != v.size()) return false;
  std::string doubled = u.str() + u.str();
  return doubled.find(v.view()) != std::string::npos;
}

bool prefix_comparable(std::string_view u, std::string_view v) noexcept {
  return u.size() <= v.size() ? v.starts_with(u) : u.starts_with(v);
}

bool suffix_comparable(std::string_view u, std::string_view v) noexcept {
  return u.size() <= v.size() ? v.ends_with(u) : u.ends_with(v);
}

std::size_t common_power_prefix(std::string_view u, std::string_view v, std::size_t limit) {
  if (u.empty() || v.empty()) return 0;
  std::size_t i = 0;
  while (i < limit && u[i % u.size()] == v[i % v.size()]) ++i;
  return i;
}

std::optional<Word> fine_wilf_root(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw PreconditionError("empty input");
  std::size_t bound = u.size() + v.size() - std::gcd(u.size(), v.size());
  if (common_power_prefix(u.view(), v.view(), bound) < bound) return std::nullopt;
  return integer_exponent(u).root;
}

ExponentFactor max_exponent_factor(const Word& w, std::size_t min_len) {
  const std::size_t n = w.size();
  if (n == 0) throw PreconditionError("empty input");
  if (min_len < 1 || min_len > n) {
    throw PreconditionError("min_len must lie in [1, " + std::to_string(n) + "]");
  }
  // Best so far as (length, period, offset); compared by length/period.
  std::size_t best_len = 0, best_period = 1, best_offset = 0;
  auto text = w.view();
  for (std::size_t start = 0; start + min_len <= n; ++start) {
    BorderBuilder builder(text.substr(start));
    for (std::size_t len = 1; start + len <= n; ++len) {
      std::size_t period = len - builder.push();
      if (len < min_len) continue;
      // len / period  vs  best_len / best_period
      auto lhs = len * best_period;
      auto rhs = best_len * period;
      if (best_len == 0 || lhs > rhs || (lhs == rhs && len < best_len)) {
        best_len = len;
        best_period = period;
        best_offset = start;
      }
    }
  }
  return {w.factor(best_offset, best_len),
          best_offset,
          Rational(static_cast<std::int64_t>(best_len), static_cast<std::int64_t>(best_period))};
}

PeriodProfile min_period_profile(std::string_view text) {
  const std::size_t n = text.size();
  PeriodProfile profile;
  profile.period.assign(n + 1, 0);
  profile.offset.assign(n + 1, 0);
  for (std::size_t len = 1; len <= n; ++len) profile.period[len] = len;
  for (std::size_t start = 0; start < n; ++start) {
    BorderBuilder builder(text.substr(start));
    for (std::size_t len = 1; start + len <= n; ++len) {
      std::size_t period = len - builder.push();
      if (period < profile.period[len]) {
        profile.period[len] = period;
        profile.offset[len] = start;
      }
    }
  }
  return profile;
}

}  // namespace wordrep
