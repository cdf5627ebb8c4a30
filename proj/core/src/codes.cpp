#include "wordrep/codes.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

void require_nonempty(const Word& w) {
  if (w.empty()) throw PreconditionError("empty input");
}

// Admissible cuts of `w` for X. Internal nodes are offsets 1..n-1.
struct CutGraph {
  std::size_t n = 0;
  bool whole = false;                      // single-piece interpretation
  std::vector<bool> from_source;           // w[0..c) suffix of an element
  std::vector<bool> to_sink;               // w[c..n) prefix of an element
  std::vector<std::vector<std::size_t>> next;  // c -> d with w[c..d) in X
  std::vector<bool> reaches_sink;

  CutGraph(std::string_view w, const CodeSet& x) : n(w.size()) {
    whole = x.has_suffix(w) && x.has_prefix(w);
    from_source.assign(n + 1, false);
    to_sink.assign(n + 1, false);
    next.assign(n + 1, {});
    for (std::size_t c = 1; c < n; ++c) {
      from_source[c] = x.has_suffix(w.substr(0, c));
      to_sink[c] = x.has_prefix(w.substr(c));
      for (std::size_t d = c + 1; d < n && d - c <= x.max_len(); ++d) {
        if (x.contains(w.substr(c, d - c))) next[c].push_back(d);
      }
    }
    reaches_sink.assign(n + 1, false);
    for (std::size_t c = n; c-- > 1;) {
      bool ok = to_sink[c];
      for (auto d : next[c]) ok = ok || reaches_sink[d];
      reaches_sink[c] = ok;
    }
  }
};

// Dinic-free unit-capacity max flow: repeated BFS augmentation over a small
// residual graph.
class UnitFlow {
 public:
  explicit UnitFlow(std::size_t nodes) : adj_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, int capacity) {
    adj_[from].push_back(edges_.size());
    edges_.push_back({to, capacity});
    adj_[to].push_back(edges_.size());
    edges_.push_back({from, 0});
  }

  std::size_t max_flow(std::size_t source, std::size_t sink) {
    std::size_t flow = 0;
    for (;;) {
      std::vector<std::size_t> via(adj_.size(), kNone);
      std::vector<bool> seen(adj_.size(), false);
      std::queue<std::size_t> queue;
      queue.push(source);
      seen[source] = true;
      while (!queue.empty() && !seen[sink]) {
        auto u = queue.front();
        queue.pop();
        for (auto e : adj_[u]) {
          auto v = edges_[e].to;
          if (edges_[e].capacity > 0 && !seen[v]) {
            seen[v] = true;
            via[v] = e;
            queue.push(v);
          }
        }
      }
      if (!seen[sink]) return flow;
      for (auto v = sink; v != source;) {
        auto e = via[v];
        edges_[e].capacity -= 1;
        edges_[e ^ 1].capacity += 1;
        v = edges_[e ^ 1].to;
      }
      ++flow;
    }
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Edge {
    std::size_t to;
    int capacity;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
};

Interpretation make_interpretation(const Word& w, const std::vector<std::size_t>& cuts) {
  Interpretation out;
  out.cuts = cuts;
  std::size_t from = 0;
  for (auto c : cuts) {
    out.pieces.push_back(w.factor(from, c - from));
    from = c;
  }
  out.pieces.push_back(w.factor(from, w.size() - from));
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw Error("count overflow");
  return a + b;
}

}  // namespace

CodeSet::CodeSet(std::vector<Word> words) : words_(std::move(words)) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].empty()) throw PreconditionError("code words must be nonempty");
    for (std::size_t j = 0; j < i; ++j) {
      if (words_[i] == words_[j]) throw PreconditionError("duplicate code word '" + words_[i].str() + "'");
    }
    max_len_ = std::max(max_len_, words_[i].size());
  }
}

CodeSet CodeSet::parse(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with("X=")) base = 2;
  std::vector<Word> words;
  std::size_t pos = base;
  if (pos >= text.size()) throw ParseError("empty code", pos);
  for (;;) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(pos, end - pos);
    if (item.empty()) throw ParseError("empty code word", pos);
    for (std::size_t i = 0; i < item.size(); ++i) {
      if (!Alphabet::is_letter_char(item[i])) throw ParseError("invalid letter character", pos + i);
    }
    for (const auto& existing : words) {
      if (existing.view() == item) throw ParseError("duplicate code word", pos);
    }
    words.emplace_back(item);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return CodeSet(std::move(words));
}

bool CodeSet::contains(std::string_view w) const noexcept {
  return std::any_of(words_.begin(), words_.end(), [w](const Word& x) { return x.view() == w; });
}

bool CodeSet::has_suffix(std::string_view w) const noexcept {
  return std::any_of(words_.begin(), words_.end(), [w](const Word& x) { return x.view().ends_with(w); });
}

bool CodeSet::has_prefix(std::string_view w) const noexcept {
  return std::any_of(words_.begin(), words_.end(), [w](const Word& x) { return x.view().starts_with(w); });
}

Morphism CodeSet::induced_morphism() const {
  std::string codomain_text;
  std::vector<std::string> images;
  for (const auto& x : words_) {
    codomain_text += x.str();
    images.push_back(x.str());
  }
  return Morphism(Alphabet::numbered(words_.size()), Alphabet::of(codomain_text), std::move(images));
}

bool CodeSet::is_code() const { return !find_ambiguity([this] {
  std::vector<std::string> images;
  for (const auto& x : words_) images.push_back(x.str());
  return images;
}()); }

std::string CodeSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out.push_back(',');
    out += words_[i].str();
  }
  return out;
}

std::string Interpretation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out.push_back('|');
    out += pieces[i].str();
  }
  out += ")@[";
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(cuts[i]);
  }
  out += "]";
  return out;
}

std::vector<Interpretation> x_interpretations(const Word& w, const CodeSet& x) {
  require_nonempty(w);
  CutGraph graph(w.view(), x);
  std::vector<Interpretation> out;
  if (graph.whole) out.push_back(make_interpretation(w, {}));
  std::vector<std::size_t> path;
  // Depth-first in increasing cut order gives lexicographic cut lists.
  auto visit = [&](auto&& self, std::size_t c) -> void {
    path.push_back(c);
    if (graph.to_sink[c]) out.push_back(make_interpretation(w, path));
    for (auto d : graph.next[c]) {
      if (graph.reaches_sink[d]) self(self, d);
    }
    path.pop_back();
  };
  for (std::size_t c = 1; c < graph.n; ++c) {
    if (graph.from_source[c] && graph.reaches_sink[c]) visit(visit, c);
  }
  return out;
}

std::uint64_t x_interpretation_count(const Word& w, const CodeSet& x) {
  require_nonempty(w);
  CutGraph graph(w.view(), x);
  std::vector<std::uint64_t> paths(graph.n + 1, 0);  // paths from c to the sink
  for (std::size_t c = graph.n; c-- > 1;) {
    std::uint64_t total = graph.to_sink[c] ? 1 : 0;
    for (auto d : graph.next[c]) total = checked_add(total, paths[d]);
    paths[c] = total;
  }
  std::uint64_t total = graph.whole ? 1 : 0;
  for (std::size_t c = 1; c < graph.n; ++c) {
    if (graph.from_source[c]) total = checked_add(total, paths[c]);
  }
  return total;
}

std::size_t x_degree(const Word& w, const CodeSet& x) {
  require_nonempty(w);
  CutGraph graph(w.view(), x);
  const std::size_t n = graph.n;
  // Node layout: source, sink, then (in, out) per internal offset.
  const std::size_t source = 0, sink = 1;
  auto in = [](std::size_t c) { return 2 * c; };
  auto out = [](std::size_t c) { return 2 * c + 1; };
  UnitFlow flow(2 * (n + 1));
  if (graph.whole) flow.add_edge(source, sink, 1);
  for (std::size_t c = 1; c < n; ++c) {
    flow.add_edge(in(c), out(c), 1);
    if (graph.from_source[c]) flow.add_edge(source, in(c), 1);
    if (graph.to_sink[c]) flow.add_edge(out(c), sink, 1);
    for (auto d : graph.next[c]) flow.add_edge(out(c), in(d), 1);
  }
  return flow.max_flow(source, sink);
}

std::uint64_t x_factorization_count(const Word& w, const CodeSet& x) {
  require_nonempty(w);
  auto text = w.view();
  std::vector<std::uint64_t> ways(text.size() + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 1; i <= text.size(); ++i) {
    for (const auto& element : x.words()) {
      auto len = element.size();
      if (len <= i && ways[i - len] != 0 && text.substr(i - len, len) == element.view()) {
        ways[i] = checked_add(ways[i], ways[i - len]);
      }
    }
  }
  return ways[text.size()];
}

std::size_t default_probe_length(const Word& w, const CodeSet& x) { return 4 * (w.size() + x.max_len()); }

std::vector<OccurrenceContext> occurrence_contexts(const Word& w, const CodeSet& x) {
  require_nonempty(w);
  auto text = w.view();
  const std::size_t n = text.size();
  constexpr auto kNone = std::numeric_limits<std::size_t>::max();

  // Extra letters needed before the occurrence when its first boundary is b.
  auto head_cost = [&](std::size_t b) -> std::size_t {
    if (b == 0) return 0;
    std::size_t best = kNone;
    auto head = text.substr(0, b);
    for (const auto& e : x.words()) {
      if (e.size() > b && e.view().ends_with(head)) best = std::min(best, e.size() - b);
    }
    return best;
  };
  auto tail_cost = [&](std::size_t b) -> std::size_t {
    if (b == n) return 0;
    std::size_t best = kNone;
    auto tail = text.substr(b);
    for (const auto& e : x.words()) {
      if (e.size() > tail.size() && e.view().starts_with(tail)) best = std::min(best, e.size() - tail.size());
    }
    return best;
  };

  std::vector<OccurrenceContext> out;
  // No boundary inside [0, n]: w strictly inside a single element.
  std::size_t inside = kNone;
  for (const auto& e : x.words()) {
    auto view = e.view();
    for (std::size_t o = 1; o + n < view.size(); ++o) {
      if (view.substr(o, n) == text) {
        inside = std::min(inside, view.size());
        break;
      }
    }
  }
  if (inside != kNone) out.push_back({{}, inside});

  std::vector<std::size_t> path;
  auto extend = [&](auto&& self, std::size_t b, std::size_t head) -> void {
    path.push_back(b);
    auto tail = tail_cost(b);
    if (tail != kNone) out.push_back({path, n + head + tail});
    for (std::size_t d = b + 1; d <= n && d - b <= x.max_len(); ++d) {
      if (x.contains(text.substr(b, d - b))) self(self, d, head);
    }
    path.pop_back();
  };
  for (std::size_t b = 0; b <= n; ++b) {
    auto head = head_cost(b);
    if (head != kNone) extend(extend, b, head);
  }
  std::sort(out.begin(), out.end(),
            [](const OccurrenceContext& a, const OccurrenceContext& b) { return a.boundaries < b.boundaries; });
  return out;
}

std::optional<std::size_t> is_synchronizing(const Word& w, const CodeSet& x, std::optional<std::size_t> probe_len) {
  require_nonempty(w);
  if (!x.is_code()) throw PreconditionError("X is not a code");
  const std::size_t probe = probe_len.value_or(default_probe_length(w, x));
  auto contexts = occurrence_contexts(w, x);
  for (std::size_t t = 0; t <= w.size(); ++t) {
    bool ok = std::all_of(contexts.begin(), contexts.end(), [&](const OccurrenceContext& ctx) {
      if (ctx.shortest_realisation > probe) return true;
      return std::binary_search(ctx.boundaries.begin(), ctx.boundaries.end(), t);
    });
    if (ok) return t;
  }
  return std::nullopt;
}

}  // namespace wordrep
