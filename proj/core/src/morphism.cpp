#include "wordrep/morphism.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <mutex>

#include "wordrep/error.hpp"

namespace wordrep {

namespace detail {
struct InjectivityCache {
  std::once_flag once;
  InjectivityVerdict verdict;
};
}  // namespace detail

namespace {

Word word_from_indices(const std::vector<std::size_t>& indices,
                       const std::shared_ptr<const Alphabet>& alphabet) {
  std::string text;
  for (auto i : indices) text.push_back(alphabet->symbol(i));
  return Word(text, alphabet);
}

}  // namespace

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<std::string> images)
    : domain_(std::make_shared<const Alphabet>(std::move(domain))),
      codomain_(std::make_shared<const Alphabet>(std::move(codomain))),
      images_(std::move(images)),
      cache_(std::make_shared<detail::InjectivityCache>()) {
  if (images_.size() != domain_->size()) {
    throw PreconditionError("morphism needs exactly one image per domain letter");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (char c : images_[i]) {
      if (!codomain_->contains(c)) {
        throw PreconditionError(std::string("image of '") + domain_->symbol(i) +
                                "' uses letter '" + c + "' outside the codomain");
      }
    }
  }
}

Morphism Morphism::parse(std::string_view text) { return parse(text, Alphabet()); }

Morphism Morphism::parse(std::string_view text, const Alphabet& codomain) {
  std::string domain_symbols;
  std::vector<std::string> images;
  std::string used;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty morphism", 0);
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(pos, end - pos);
    if (item.size() < 2 || item[1] != '=') {
      throw ParseError("expected letter=image", pos + std::min<std::size_t>(item.size(), 1));
    }
    char letter = item[0];
    if (!Alphabet::is_letter_char(letter)) throw ParseError("invalid letter character", pos);
    if (domain_symbols.find(letter) != std::string::npos) {
      throw ParseError(std::string("letter '") + letter + "' defined twice", pos);
    }
    auto image = item.substr(2);
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (!Alphabet::is_letter_char(image[i])) throw ParseError("invalid letter character", pos + 2 + i);
      if (!codomain.empty() && !codomain.contains(image[i])) {
        throw ParseError(std::string("letter '") + image[i] + "' is not in the codomain", pos + 2 + i);
      }
    }
    domain_symbols.push_back(letter);
    images.emplace_back(image);
    used += image;
    if (end == text.size()) break;
    pos = end + 1;
  }
  Alphabet target = codomain.empty() ? Alphabet::of(used) : codomain;
  return Morphism(Alphabet(domain_symbols), std::move(target), std::move(images));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<std::string> images;
  for (char c : alphabet.symbols()) images.emplace_back(1, c);
  return Morphism(alphabet, alphabet, std::move(images));
}

const std::string& Morphism::image(char letter) const {
  auto idx = domain_->index_of(letter);
  if (!idx) throw PreconditionError(std::string("letter '") + letter + "' is not in the morphism domain");
  return images_[*idx];
}

Word Morphism::image_word(char letter) const { return Word(image(letter), codomain_); }

std::size_t Morphism::max_image_length() const noexcept {
  std::size_t m = 0;
  for (const auto& img : images_) m = std::max(m, img.size());
  return m;
}

std::size_t Morphism::min_image_length() const noexcept {
  if (images_.empty()) return 0;
  std::size_t m = images_.front().size();
  for (const auto& img : images_) m = std::min(m, img.size());
  return m;
}

bool Morphism::is_erasing() const noexcept {
  return std::any_of(images_.begin(), images_.end(), [](const std::string& img) { return img.empty(); });
}

std::string Morphism::apply(std::string_view w) const {
  std::size_t total = 0;
  for (char c : w) total += image(c).size();
  std::string out;
  out.reserve(total);
  for (char c : w) out += images_[*domain_->index_of(c)];
  return out;
}

Word Morphism::apply(const Word& w) const { return Word(apply(w.view()), codomain_); }

const InjectivityVerdict& Morphism::injectivity() const {
  if (is_erasing()) throw PreconditionError("erasing morphism");
  std::call_once(cache_->once, [this] {
    auto ambiguity = find_ambiguity(images_);
    cache_->verdict.injective = !ambiguity.has_value();
    if (ambiguity) {
      cache_->verdict.counterexample.emplace(word_from_indices(ambiguity->first, domain_),
                                             word_from_indices(ambiguity->second, domain_));
    }
  });
  return cache_->verdict;
}

Morphism Morphism::restricted_to(const Alphabet& letters) const {
  std::vector<std::string> images;
  for (char c : letters.symbols()) images.push_back(image(c));
  return Morphism(letters, *codomain_, std::move(images));
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(domain_->symbol(i));
    out.push_back('=');
    out += images_[i];
  }
  return out;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
find_ambiguity(const std::vector<std::string>& images) {
  using Sequence = std::vector<std::size_t>;
  for (const auto& img : images) {
    if (img.empty()) throw PreconditionError("erasing morphism");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) return std::pair{Sequence{i}, Sequence{j}};
    }
  }

  // Breadth-first search over dangling suffixes. A state records the two
  // partial index sequences; `ahead`'s image exceeds `behind`'s by `rest`.
  // Every step appends one index, so the first equal-image pair reached has
  // minimal total length.
  struct State {
    std::string rest;
    Sequence ahead;
    Sequence behind;
  };
  std::deque<State> queue;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (i == j || images[i].size() >= images[j].size()) continue;
      if (!std::string_view(images[j]).starts_with(images[i])) continue;
      auto rest = images[j].substr(images[i].size());
      if (seen.insert(rest).second) queue.push_back({rest, Sequence{j}, Sequence{i}});
    }
  }
  while (!queue.empty()) {
    State state = std::move(queue.front());
    queue.pop_front();
    for (std::size_t c = 0; c < images.size(); ++c) {
      const auto& img = images[c];
      std::string_view rest = state.rest;
      if (img == rest) {
        Sequence behind = state.behind;
        behind.push_back(c);
        return std::pair{state.ahead, behind};
      }
      if (img.size() < rest.size() && rest.starts_with(img)) {
        auto next_rest = std::string(rest.substr(img.size()));
        if (!seen.insert(next_rest).second) continue;
        Sequence behind = state.behind;
        behind.push_back(c);
        queue.push_back({std::move(next_rest), state.ahead, std::move(behind)});
      } else if (rest.size() < img.size() && std::string_view(img).starts_with(rest)) {
        auto next_rest = img.substr(rest.size());
        if (!seen.insert(next_rest).second) continue;
        Sequence behind = state.behind;
        behind.push_back(c);
        queue.push_back({std::move(next_rest), std::move(behind), state.ahead});
      }
    }
  }
  return std::nullopt;
}

Morphism compose(const Morphism& g, const Morphism& h) {
  if (!g.domain().includes(h.codomain())) {
    throw PreconditionError("cannot compose: codomain of the inner morphism is not covered by the outer domain");
  }
  std::vector<std::string> images;
  images.reserve(h.images().size());
  for (const auto& img : h.images()) images.push_back(g.apply(img));
  return Morphism(h.domain(), g.codomain(), std::move(images));
}

Morphism binary_embedding(const Alphabet& source) {
  const std::size_t n = source.size();
  if (n == 0) throw PreconditionError("binary embedding needs a nonempty alphabet");
  std::vector<std::string> images;
  for (std::size_t i = 1; i <= n; ++i) {
    images.push_back(std::string(n + 1 - i, '0') + std::string(i, '1'));
  }
  return Morphism(source, Alphabet("01"), std::move(images));
}

}  // namespace wordrep
