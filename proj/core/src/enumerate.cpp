#include <limits>

#include "wordrep/error.hpp"
#include "wordrep/morphism.hpp"

namespace wordrep {

std::vector<std::string> shortlex_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    next.reserve(layer.size() * alphabet.size());
    for (const auto& prefix : layer) {
      for (char c : alphabet.symbols()) next.push_back(prefix + c);
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

InjectiveMorphismEnumerator::InjectiveMorphismEnumerator(Alphabet domain, Alphabet codomain,
                                                         std::size_t max_image_len)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (max_image_len < 1) throw PreconditionError("max_image_len must be at least 1");
  if (codomain_.empty()) throw PreconditionError("empty codomain");
  words_ = shortlex_words(codomain_, max_image_len);
  total_ = 1;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (total_ > std::numeric_limits<std::uint64_t>::max() / words_.size()) {
      throw PreconditionError("morphism search space too large");
    }
    total_ *= words_.size();
  }
}

std::vector<std::string> InjectiveMorphismEnumerator::candidate_images(std::uint64_t index) const {
  std::vector<std::string> images(domain_.size());
  for (std::size_t i = domain_.size(); i-- > 0;) {
    images[i] = words_[index % words_.size()];
    index /= words_.size();
  }
  return images;
}

Morphism InjectiveMorphismEnumerator::candidate(std::uint64_t index) const {
  return Morphism(domain_, codomain_, candidate_images(index));
}

std::optional<Morphism> InjectiveMorphismEnumerator::next() {
  while (index_ < total_) {
    auto images = candidate_images(index_++);
    if (!find_ambiguity(images)) return Morphism(domain_, codomain_, std::move(images));
  }
  return std::nullopt;
}

}  // namespace wordrep
