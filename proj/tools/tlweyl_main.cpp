// tlweyl: inspect fully commutative elements, their strand diagrams, dense
// reflection sets, and the line-set oracle, from the command line.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlweyl/categorify.hpp"
#include "tlweyl/coxeter.hpp"
#include "tlweyl/dense.hpp"
#include "tlweyl/errors.hpp"
#include "tlweyl/json_io.hpp"
#include "tlweyl/render.hpp"
#include "tlweyl/tl_element.hpp"
#include "tlweyl/weyl_lines.hpp"

namespace {

using nlohmann::json;
using namespace tlweyl;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

Word parse_word(const std::string& text) {
  Word w;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::exception&) {
      throw InputError("cannot parse word letter '" + tok + "'");
    }
  }
  return w;
}

std::string word_str(const Word& w) {
  std::string s = "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s + "]";
}

json laurent_json(const LaurentPoly& p) {
  json obj = json::object();
  for (auto [e, c] : p.terms()) obj[std::to_string(e)] = c;
  return obj;
}

json reflections_json(const ReflectionSet& set) {
  json arr = json::array();
  for (const Reflection& t : set.members()) arr.push_back({t.a, t.b});
  return arr;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot open output file " + out_path);
  f << text;
}

void check_command_cap(int n, int cap, const std::string& cmd) {
  check_rank(n);
  if (n > cap)
    throw CapacityError(cmd + " supports rank at most " + std::to_string(cap));
}

int cmd_fc_list(int n, const std::string& format, const std::string& out) {
  check_rank(n);
  std::vector<Permutation> elements = enumerate_fully_commutative(n);
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const Permutation& p : elements) {
      json row;
      row["word"] = lex_min_reduced_word(p);
      row["one_line"] = std::vector<int>(p.one_line().begin(), p.one_line().end());
      row["length"] = p.length();
      arr.push_back(std::move(row));
    }
    os << arr.dump(2) << "\n";
  } else {
    for (const Permutation& p : elements)
      os << word_str(lex_min_reduced_word(p)) << "  " << p.to_string()
         << "  length " << p.length() << "\n";
  }
  emit(os.str(), out);
  return kExitOk;
}

int cmd_dense(int n, const Word& w, const std::string& format,
              const std::string& out) {
  AnnihilatorPair ann = annihilator_varieties(w, n);
  std::ostringstream os;
  if (format == "json") {
    json row;
    row["word"] = w;
    row["left"] = reflections_json(ann.left.reflections());
    row["right"] = reflections_json(ann.right.reflections());
    json lb = json::array(), rb = json::array();
    for (auto [a, b] : ann.left.blocks()) lb.push_back({a, b});
    for (auto [a, b] : ann.right.blocks()) rb.push_back({a, b});
    row["left_blocks"] = std::move(lb);
    row["right_blocks"] = std::move(rb);
    os << row.dump(2) << "\n";
  } else {
    auto show = [&](const char* side, const DenseSet& q) {
      os << side << ": " << q.reflections().to_string() << "  blocks";
      for (auto [a, b] : q.blocks()) os << " [" << a << "," << b << "]";
      os << "\n";
    };
    os << "word: " << word_str(w) << "\n";
    show("left", ann.left);
    show("right", ann.right);
  }
  emit(os.str(), out);
  return kExitOk;
}

int cmd_verify(int n, bool force_oracle, const std::string& format,
               const std::string& out) {
  check_command_cap(n, 8, "verify");
  CorrespondenceReport report = verify_correspondence(n, force_oracle ? n : 6);
  std::ostringstream os;
  if (format == "json") {
    json row;
    row["rank"] = report.rank;
    row["elements"] = report.elements;
    row["words"] = report.words;
    row["oracle_words"] = report.oracle_words;
    row["failures"] = report.failures;
    os << row.dump(2) << "\n";
  } else {
    os << "rank " << report.rank << ": " << report.elements << " elements, "
       << report.words << " reduced words, " << report.oracle_words
       << " oracle checks, " << report.failures.size() << " failures\n";
    for (const std::string& f : report.failures) os << "  FAIL " << f << "\n";
  }
  emit(os.str(), out);
  return report.ok() ? kExitOk : kExitVerifyFail;
}

int cmd_table(int n, const std::string& format, const std::string& out) {
  check_command_cap(n, 8, "table");
  std::vector<TableRecord> records = build_annihilator_table(n);
  std::ostringstream os;
  if (format == "text") {
    for (const TableRecord& rec : records)
      os << word_str(rec.element) << "  left " << rec.left.to_string()
         << "  right " << rec.right.to_string() << "\n";
  } else {
    os << table_to_json(records, n);
  }
  emit(os.str(), out);
  return kExitOk;
}

int cmd_decompose(int n, const Word& w, const std::string& format,
                  const std::string& out) {
  DecompositionRecord rec = decompose_product(w, n);
  Word ew = lex_min_reduced_word(rec.element);
  std::ostringstream os;
  if (format == "json") {
    json row;
    row["word"] = w;
    row["element"] = ew;
    row["circles"] = rec.circles;
    row["scalar"] = laurent_json(rec.scalar);
    json summands = json::array();
    for (auto [shift, mult] : rec.summands)
      summands.push_back({{"shift", shift}, {"multiplicity", mult}});
    row["summands"] = std::move(summands);
    os << row.dump(2) << "\n";
  } else {
    os << "product " << word_str(w) << " = (" << rec.scalar.to_string()
       << ") * b" << word_str(ew) << "\n";
    for (auto [shift, mult] : rec.summands)
      os << "  shift " << shift << " x" << mult << "\n";
  }
  emit(os.str(), out);
  return kExitOk;
}

int cmd_render(int n, const Word& w, const std::string& format,
               const std::string& out) {
  GeneratorProduct gp = generator_product(w, n);
  std::string text;
  if (format == "svg") {
    text = render_svg(gp.diagram);
  } else if (format == "tikz") {
    text = render_tikz(gp.diagram);
  } else {
    std::ostringstream os;
    if (gp.circles > 0)
      os << "scalar: (1 + t^-2)^" << gp.circles << "\n";
    os << render_text(gp.diagram);
    text = os.str();
  }
  emit(text, out);
  return kExitOk;
}

int cmd_oracle_check(int n, unsigned seed, const std::string& format,
                     const std::string& out) {
  check_rank(n);
  long checked = 0;
  std::vector<std::string> failures;
  auto check_word_oracle = [&](const Word& w) {
    ++checked;
    ReflectionSet fast = dense_of_sequence(w, n);
    ReflectionSet oracle(reflections_of(sequence_variety(w, n)));
    if (fast != oracle)
      failures.push_back("word " + word_str(w) + ": " + fast.to_string() +
                         " vs oracle " + oracle.to_string());
  };

  if (n <= 5) {
    // Exhaustive over all words of length 1..6.
    Word w;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (!w.empty()) check_word_oracle(w);
      if (remaining == 0) return;
      for (int i = 1; i <= n; ++i) {
        w.push_back(i);
        self(self, remaining - 1);
        w.pop_back();
      }
    };
    rec(rec, 6);
  }
  // Randomized longer words (seeded, deterministic).
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> letter(1, n), length(7, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    Word w(length(rng));
    for (int& v : w) v = letter(rng);
    check_word_oracle(w);
  }

  std::ostringstream os;
  if (format == "json") {
    json row;
    row["rank"] = n;
    row["seed"] = seed;
    row["words"] = checked;
    row["failures"] = failures;
    os << row.dump(2) << "\n";
  } else {
    os << "rank " << n << ": " << checked << " words checked, "
       << failures.size() << " failures\n";
    for (const std::string& f : failures) os << "  FAIL " << f << "\n";
  }
  emit(os.str(), out);
  return failures.empty() ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb diagram and dense reflection set toolkit"};
  app.require_subcommand(1);

  int rank = 0;
  std::string word_text, format = "text", out_path;
  unsigned seed = 0;
  bool force_oracle = false;

  auto add_common = [&](CLI::App* cmd, bool needs_word) {
    cmd->add_option("--rank", rank, "Coxeter rank n")->required();
    auto* w = cmd->add_option("--word", word_text,
                              "comma-separated generator letters, e.g. 2,1,3");
    if (needs_word) w->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "svg", "tikz"}));
    cmd->add_option("--out", out_path, "write output to a file");
    return cmd;
  };

  CLI::App* fc = add_common(app.add_subcommand("fc-list", "list fully commutative elements"), false);
  CLI::App* dense = add_common(app.add_subcommand("dense", "left/right dense sets of a word"), true);
  CLI::App* verify = add_common(app.add_subcommand("verify", "check diagram vs update-rule correspondence"), false);
  verify->add_flag("--oracle", force_oracle, "force the line-set oracle at any rank");
  CLI::App* table = add_common(app.add_subcommand("table", "annihilator table for all fully commutative elements"), false);
  CLI::App* decompose = add_common(app.add_subcommand("decompose", "expand a generator product in the diagram basis"), true);
  CLI::App* render = add_common(app.add_subcommand("render", "draw the diagram of a generator product"), true);
  CLI::App* oracle = add_common(app.add_subcommand("oracle-check", "compare update rule against the line-set oracle"), false);
  oracle->add_option("--seed", seed, "seed for randomized words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (fc->parsed()) return cmd_fc_list(rank, format, out_path);
    if (dense->parsed()) return cmd_dense(rank, parse_word(word_text), format, out_path);
    if (verify->parsed()) return cmd_verify(rank, force_oracle, format, out_path);
    if (table->parsed()) {
      if (format == "text") return cmd_table(rank, "text", out_path);
      return cmd_table(rank, "json", out_path);
    }
    if (decompose->parsed()) return cmd_decompose(rank, parse_word(word_text), format, out_path);
    if (render->parsed()) return cmd_render(rank, parse_word(word_text), format, out_path);
    if (oracle->parsed()) return cmd_oracle_check(rank, seed, format, out_path);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
