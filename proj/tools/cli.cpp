#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "wordrep/codes.hpp"
#include "wordrep/error.hpp"
#include "wordrep/feinj.hpp"
#include "wordrep/periodicity.hpp"

namespace wordrep::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

// What a subcommand produced: a structured record plus its text rendering.
// `csv` overrides the default one-row CSV rendering of the record.
struct Report {
  Json record = Json::object();
  std::string text;
  std::string csv;
  int status = kSuccess;
};

std::string csv_field(const Json& value) {
  std::string s = value.is_string() ? value.get<std::string>() : value.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  return quoted + "\"";
}

void emit(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text:
      out << report.text << '\n';
      break;
    case Format::Json:
      out << report.record.dump(2) << '\n';
      break;
    case Format::Csv: {
      if (!report.csv.empty()) {
        out << report.csv;
        break;
      }
      std::string header, row;
      for (const auto& [key, value] : report.record.items()) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += key;
        row += csv_field(value);
      }
      out << header << '\n' << row << '\n';
      break;
    }
  }
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  if (text.empty()) throw ParseError("empty value for " + std::string(what), 0);
  std::size_t value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') throw ParseError("expected a nonnegative integer for " + std::string(what), i);
    if (value > (std::numeric_limits<std::size_t>::max() - 9) / 10) {
      throw ParseError("integer too large for " + std::string(what), i);
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

// `key=value;key=value`, split at the first '=' of each item so values may
// contain '=' (morphism literals).
class Params {
 public:
  explicit Params(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto end = text.find(';', pos);
      if (end == std::string_view::npos) end = text.size();
      auto item = text.substr(pos, end - pos);
      auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) throw ParseError("expected key=value", pos);
      values_[std::string(item.substr(0, eq))] = {std::string(item.substr(eq + 1)), pos};
      pos = end + 1;
    }
  }

  std::optional<std::string> get(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    used_.insert(key);
    return it->second.first;
  }

  std::string get_or(const std::string& key, std::string fallback) { return get(key).value_or(std::move(fallback)); }

  std::size_t size_or(const std::string& key, std::size_t fallback) {
    auto value = get(key);
    return value ? parse_size(*value, key) : fallback;
  }

  std::string require(const std::string& key) {
    auto value = get(key);
    if (!value) throw ParseError("missing parameter '" + key + "'", 0);
    return *value;
  }

  void reject_unused() const {
    for (const auto& [key, value] : values_) {
      if (!used_.contains(key)) throw ParseError("unknown parameter '" + key + "'", value.second);
    }
  }

 private:
  std::map<std::string, std::pair<std::string, std::size_t>> values_;
  std::set<std::string> used_;
};

GeneratorPtr make_base(std::string_view name) {
  if (name == "thue-morse") return thue_morse_generator();
  if (name == "fibonacci") return morphic_generator(Morphism(Alphabet("ab"), Alphabet("ab"), {"ab", "a"}), 'a');
  throw ParseError("unknown base generator '" + std::string(name) + "'", 0);
}

Json verdict_json(const FeInjVerdict& verdict) {
  Json j;
  j["tag"] = to_string(verdict.tag);
  j["provenance"] = verdict.provenance;
  if (verdict.factorization) {
    const auto& f = *verdict.factorization;
    j["factorization"] = {{"letter", std::string(1, f.letter)},
                          {"w1", f.w1.str()},
                          {"w2", f.w2.str()},
                          {"k", f.k},
                          {"w3", f.w3.str()}};
  }
  if (verdict.certificate) j["certificate"] = verdict.certificate->str();
  if (verdict.witness) {
    j["witness"] = {{"morphism", verdict.witness->morphism.str()}, {"exponent", verdict.witness->exponent.str()}};
  }
  if (verdict.search_bound) j["search_bound"] = *verdict.search_bound;
  return j;
}

FeInjVerdict classify(const Word& w, const std::string& method, const ClassifyOptions& options) {
  if (method == "binary" || (method == "auto" && w.letters().size() <= 2)) return classify_binary(w);
  if (method == "general" || method == "auto") return classify_general(w, options);
  throw ParseError("unknown method '" + method + "'", 0);
}

}  // namespace

GeneratorPtr make_generator(std::string_view name, std::string_view params_text) {
  Params params(params_text);
  GeneratorPtr gen;
  if (name == "periodic") {
    gen = periodic_generator(Word(params.require("v")));
  } else if (name == "thue-morse" || name == "fibonacci") {
    gen = make_base(name);
  } else if (name == "morphic") {
    auto g = Morphism::parse(params.require("g"));
    auto seed = params.require("seed");
    if (seed.size() != 1) throw ParseError("seed must be a single letter", 0);
    gen = morphic_generator(g, seed.front());
  } else if (name == "big-acei") {
    gen = big_acei_generator(params.size_or("n", 2), make_base(params.get_or("base", "thue-morse")));
  } else if (name == "optimal-binary") {
    auto n = params.size_or("n", 2);
    auto k = params.size_or("k", 2);
    auto m = params.size_or("m", 11);
    gen = optimal_binary_generator(n, k, m, make_base(params.get_or("base", "thue-morse")));
  } else {
    throw ParseError("unknown generator '" + std::string(name) + "'", 0);
  }
  params.reject_unused();
  return gen;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Repetitions in words and their injective morphic images", "wordrep"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::size_t threads = 1;
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", threads, "Worker threads for searches")->check(CLI::PositiveNumber);

  std::string word_text, code_text, target_text, gen_name, gen_params, method = "auto", family;
  std::size_t max_image_len = 3, codomain_size = 2, prefix = 0, tail = 1, n = 2, k = 0, probe = 0, length = 1;
  bool binary_codomain = false, list = false;

  auto* exp_cmd = app.add_subcommand("exp", "Fractional and integer exponent of a word");
  exp_cmd->add_option("word", word_text)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Decide whether a word has unbounded injective images");
  classify_cmd->add_option("word", word_text)->required();
  classify_cmd->add_option("--max-image-len", max_image_len)->check(CLI::PositiveNumber);
  classify_cmd->add_option("--codomain", codomain_size, "Codomain size for the certificate search")
      ->check(CLI::Range(1, 36));
  classify_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "binary", "general"}));

  auto* witness_cmd = app.add_subcommand("witness", "Injective morphism reaching a target exponent");
  witness_cmd->add_option("word", word_text)->required();
  witness_cmd->add_option("--target", target_text)->required();
  witness_cmd->add_option("--max-image-len", max_image_len)->check(CLI::PositiveNumber);
  witness_cmd->add_flag("--binary-codomain", binary_codomain, "Re-embed the witness into {0,1}");

  auto* lower_cmd = app.add_subcommand("lower-bound", "Exhaustive maximum over bounded injective morphisms");
  lower_cmd->add_option("word", word_text)->required();
  lower_cmd->add_option("--max-image-len", max_image_len)->required()->check(CLI::PositiveNumber);
  lower_cmd->add_option("--codomain", codomain_size)->required()->check(CLI::Range(1, 36));

  auto* xdegree_cmd = app.add_subcommand("xdegree", "X-degree of a word");
  xdegree_cmd->add_option("word", word_text)->required();
  xdegree_cmd->add_option("--code", code_text)->required();
  xdegree_cmd->add_flag("--list", list, "List every X-interpretation");

  auto* sync_cmd = app.add_subcommand("sync", "Synchronizing split of a word for a code");
  sync_cmd->add_option("word", word_text)->required();
  sync_cmd->add_option("--code", code_text)->required();
  auto* probe_opt = sync_cmd->add_option("--probe", probe, "Longest word of X* examined");

  auto* ace_cmd = app.add_subcommand("ace", "Maximal exponents over long factors of a generated prefix");
  ace_cmd->add_option("--gen", gen_name)->required();
  ace_cmd->add_option("--params", gen_params);
  ace_cmd->add_option("--prefix", prefix)->required()->check(CLI::PositiveNumber);
  ace_cmd->add_option("--tail", tail)->check(CLI::PositiveNumber);

  auto* generate_cmd = app.add_subcommand("generate", "Print a prefix of a generated word");
  generate_cmd->add_option("--gen", gen_name)->required();
  generate_cmd->add_option("--params", gen_params);
  generate_cmd->add_option("--prefix", prefix)->required();

  auto* complexity_cmd = app.add_subcommand("complexity", "Distinct factors of one length in a prefix");
  complexity_cmd->add_option("--gen", gen_name)->required();
  complexity_cmd->add_option("--params", gen_params);
  complexity_cmd->add_option("--prefix", prefix)->required();
  complexity_cmd->add_option("--n", length)->required();

  auto* family_cmd = app.add_subcommand("family", "Check a parametrised family against its closed form");
  family_cmd->add_option("name", family)->required()->check(CLI::IsMember({"lowpower", "highpower"}));
  family_cmd->add_option("--n", n)->required();
  family_cmd->add_option("--k", k);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;
  Report report;
  try {
    if (*exp_cmd) {
      Word w(word_text);
      if (w.empty()) throw PreconditionError("empty input");
      auto fractional = fractional_exponent(w);
      auto integer = integer_exponent(w);
      report.record["word"] = w.str();
      report.record["exponent"] = fractional.exponent.str();
      report.record["base"] = fractional.base.str();
      report.record["integer_exponent"] = integer.count;
      report.record["root"] = integer.root.str();
      report.text = "E = " + fractional.exponent.str() + " (base " + fractional.base.str() + "); IE = " +
                    std::to_string(integer.count) + " (root " + integer.root.str() + ")";
    } else if (*classify_cmd) {
      Word w(word_text);
      ClassifyOptions options;
      options.max_image_len = max_image_len;
      options.codomain = Alphabet::numbered(codomain_size);
      options.threads = threads;
      auto verdict = classify(w, method, options);
      report.record["word"] = w.str();
      auto fields = verdict_json(verdict);
      for (const auto& [key, value] : fields.items()) report.record[key] = value;
      report.text = std::string(to_string(verdict.tag)) + " (" + verdict.provenance + ")";
      if (verdict.witness) {
        report.text += "; witness " + verdict.witness->morphism.str() + " with E = " + verdict.witness->exponent.str();
      }
    } else if (*witness_cmd) {
      Word w(word_text);
      auto target = Rational::parse(target_text);
      ClassifyOptions options;
      options.max_image_len = max_image_len;
      options.threads = threads;
      auto verdict = classify(w, "auto", options);
      if (verdict.tag != FeInjTag::Infinite) {
        err << "no witness: " << to_string(verdict.tag) << " (" << verdict.provenance << ")\n";
        return kAnalysisError;
      }
      PumpOptions pump;
      pump.binary_codomain = binary_codomain;
      auto witness = pump_witness(w, *verdict.factorization, *verdict.certificate, target, pump);
      auto image = witness.morphism.apply(w);
      report.record["word"] = w.str();
      report.record["target"] = target.str();
      report.record["morphism"] = witness.morphism.str();
      report.record["image_length"] = image.size();
      report.record["exponent"] = witness.exponent.str();
      report.text = "h = " + witness.morphism.str() + "; E(h(w)) = " + witness.exponent.str();
    } else if (*lower_cmd) {
      Word w(word_text);
      auto bound = fe_inj_lower_bound(w, max_image_len, codomain_size, threads);
      report.record["word"] = w.str();
      report.record["bound"] = bound.best.str();
      report.record["morphism"] = bound.argmax.str();
      report.record["morphisms_examined"] = bound.morphisms_examined;
      report.text = "max E(h(w)) = " + bound.best.str() + " (h = " + bound.argmax.str() + "; " +
                    std::to_string(bound.morphisms_examined) + " injective morphisms)";
    } else if (*xdegree_cmd) {
      Word w(word_text);
      auto code = CodeSet::parse(code_text);
      auto degree = x_degree(w, code);
      auto count = x_interpretation_count(w, code);
      report.record["word"] = w.str();
      report.record["code"] = code.str();
      report.record["degree"] = degree;
      report.record["interpretations"] = count;
      report.text = "X-degree = " + std::to_string(degree) + " (" + std::to_string(count) + " interpretations)";
      if (list) {
        Json all = Json::array();
        for (const auto& interpretation : x_interpretations(w, code)) {
          all.push_back(interpretation.str());
          report.text += "\n" + interpretation.str();
        }
        report.record["interpretation_list"] = all;
      }
    } else if (*sync_cmd) {
      Word w(word_text);
      auto code = CodeSet::parse(code_text);
      std::optional<std::size_t> probe_len;
      if (probe_opt->count() > 0) probe_len = probe;
      auto split = is_synchronizing(w, code, probe_len);
      report.record["word"] = w.str();
      report.record["code"] = code.str();
      report.record["probe"] = probe_len.value_or(default_probe_length(w, code));
      report.record["synchronizing"] = split.has_value();
      report.record["split"] = split ? Json(*split) : Json(nullptr);
      report.text = split ? "synchronizing at " + std::to_string(*split) : std::string("not synchronizing");
    } else if (*ace_cmd) {
      auto gen = make_generator(gen_name, gen_params);
      auto estimate = ace_estimate(*gen, prefix, tail);
      report.record["generator"] = gen_name;
      report.record["params"] = gen_params;
      report.record["prefix"] = estimate.prefix_len;
      report.record["tail"] = estimate.tail;
      report.record["estimate"] = estimate.estimate.str();
      report.record["factor_length"] = estimate.factor.size();
      report.record["offset"] = estimate.offset;
      Json curve = Json::array();
      for (const auto& row : estimate.curve) {
        curve.push_back({{"length", row.length}, {"exponent", row.exponent.str()}, {"offset", row.offset}});
      }
      report.record["curve"] = curve;
      report.text = "estimate = " + estimate.estimate.str() + " (factor of length " +
                    std::to_string(estimate.factor.size()) + " at offset " + std::to_string(estimate.offset) + ")";
      std::ostringstream csv;
      write_ace_csv(csv, estimate);
      report.csv = csv.str();
    } else if (*generate_cmd) {
      auto gen = make_generator(gen_name, gen_params);
      auto text = gen->prefix(prefix).str();
      report.record["generator"] = gen_name;
      report.record["params"] = gen_params;
      report.record["prefix"] = prefix;
      report.record["word"] = text;
      report.text = text;
    } else if (*complexity_cmd) {
      auto gen = make_generator(gen_name, gen_params);
      auto count = factor_complexity(*gen, prefix, length);
      report.record["generator"] = gen_name;
      report.record["params"] = gen_params;
      report.record["prefix"] = prefix;
      report.record["n"] = length;
      report.record["factors"] = count;
      report.text = "factors of length " + std::to_string(length) + ": " + std::to_string(count);
    } else if (*family_cmd) {
      auto instance = family == "lowpower" ? lowpower_morphism(n, k) : highpower_word(n);
      auto actual = exponent_of(instance.morphism.apply(instance.word.view()));
      bool verified = actual == instance.expected;
      report.record["family"] = family;
      report.record["n"] = n;
      if (family == "lowpower") report.record["k"] = k;
      report.record["word"] = instance.word.str();
      report.record["morphism"] = instance.morphism.str();
      report.record["exponent"] = actual.str();
      report.record["expected"] = instance.expected.str();
      report.record["verified"] = verified;
      report.text = "w = " + instance.word.str() + "; h = " + instance.morphism.str() + "; E(h(w)) = " +
                    actual.str() + "; expected " + instance.expected.str() + (verified ? " (ok)" : " (MISMATCH)");
      if (!verified) report.status = kAnalysisError;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kAnalysisError;
  }

  emit(report, format, out);
  return report.status;
}

}  // namespace wordrep::cli
