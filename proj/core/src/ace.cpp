#include <ostream>
#include <unordered_set>

#include "wordrep/error.hpp"
#include "wordrep/infinite.hpp"
#include "wordrep/periodicity.hpp"

namespace wordrep {

AceEstimate ace_estimate(const WordGenerator& gen, std::size_t prefix_len, std::size_t tail) {
  if (tail < 1 || tail > prefix_len) throw PreconditionError("need 1 <= tail <= prefix_len");
  auto text = gen.prefix_view(prefix_len);
  auto profile = min_period_profile(text);

  AceEstimate out;
  out.prefix_len = prefix_len;
  out.tail = tail;
  out.curve.reserve(prefix_len - tail + 1);
  std::size_t best = 0;
  for (std::size_t len = tail; len <= prefix_len; ++len) {
    Rational e(static_cast<std::int64_t>(len), static_cast<std::int64_t>(profile.period[len]));
    out.curve.push_back({len, e, profile.offset[len]});
    if (best == 0 || e > out.estimate) {
      best = len;
      out.estimate = e;
    }
  }
  out.offset = profile.offset[best];
  out.factor = Word(text.substr(out.offset, best), gen.alphabet());
  return out;
}

void write_ace_csv(std::ostream& os, const AceEstimate& estimate) {
  os << "factor_length,max_exponent_num,max_exponent_den,witness_offset\n";
  for (const auto& row : estimate.curve) {
    os << row.length << ',' << row.exponent.num() << ',' << row.exponent.den() << ',' << row.offset << '\n';
  }
}

std::size_t factor_complexity(const WordGenerator& gen, std::size_t prefix_len, std::size_t n) {
  if (n > prefix_len) throw PreconditionError("factor length exceeds prefix length");
  auto text = gen.prefix_view(prefix_len);
  std::unordered_set<std::string_view> factors;
  for (std::size_t i = 0; i + n <= text.size(); ++i) factors.insert(text.substr(i, n));
  return factors.size();
}

}  // namespace wordrep
