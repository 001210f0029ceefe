#pragma once

// Line-oriented instance files. The first non-comment line is
// "problem <tag> version 1"; each further line is a key followed by values.
// Rationals are written "p/q" (or "p"); '#' starts a comment line.
// CNF formulas use DIMACS instead.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kernelcut/errors.hpp"
#include "kernelcut/few_sizes.hpp"
#include "kernelcut/numbers.hpp"
#include "kernelcut/numeric_kernels.hpp"
#include "kernelcut/oracles.hpp"
#include "kernelcut/polyprog.hpp"
#include "kernelcut/set_systems.hpp"

namespace kernelcut {

namespace io {

struct Line {
  std::size_t number = 0;
  std::string key;
  std::vector<std::string> values;
};

struct Document {
  std::string tag;
  std::size_t header_line = 0;
  std::vector<Line> lines;
};

inline std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

/// Splits the text into header and keyed lines; comments and blanks dropped.
inline Document read_document(std::string_view text) {
  Document doc;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto words = split_words(raw);
    if (words.empty() || words[0][0] == '#') continue;
    if (!have_header) {
      if (words.size() != 4 || words[0] != "problem" || words[2] != "version")
        throw ValidationError("expected header 'problem <tag> version 1'", number);
      if (words[3] != "1") throw ValidationError("unsupported format version " + words[3], number);
      doc.tag = words[1];
      doc.header_line = number;
      have_header = true;
      continue;
    }
    Line line{number, words[0], {words.begin() + 1, words.end()}};
    doc.lines.push_back(std::move(line));
  }
  if (!have_header) throw ValidationError("missing header line", number == 0 ? 1 : number);
  return doc;
}

inline Integer integer_at(const Line& line, const std::string& text) {
  Integer x;
  if (!parse_integer(text, x)) throw ValidationError("'" + text + "' is not an integer", line.number);
  return x;
}

inline Rational rational_at(const Line& line, const std::string& text) {
  Rational x;
  if (!parse_rational(text, x)) throw ValidationError("'" + text + "' is not a rational p/q", line.number);
  return x;
}

inline std::uint64_t count_at(const Line& line, const std::string& text) {
  Integer x = integer_at(line, text);
  if (x < 0 || !x.fits_ulong_p()) throw ValidationError("'" + text + "' is not a valid count", line.number);
  return x.get_ui();
}

inline const std::string& single(const Line& line) {
  if (line.values.size() != 1)
    throw ValidationError("'" + line.key + "' takes exactly one value", line.number);
  return line.values[0];
}

/// Values before and after a lone ':' token.
inline std::pair<std::vector<std::string>, std::vector<std::string>> split_colon(const Line& line) {
  std::vector<std::string> left, right;
  bool seen = false;
  for (const auto& v : line.values) {
    if (v == ":") {
      if (seen) throw ValidationError("more than one ':'", line.number);
      seen = true;
    } else {
      (seen ? right : left).push_back(v);
    }
  }
  if (!seen) throw ValidationError("'" + line.key + "' needs 'values : value'", line.number);
  return {left, right};
}

/// Tracks which single-valued keys appeared, rejecting repeats and reporting
/// missing ones.
class Seen {
 public:
  explicit Seen(const Document& doc) : doc_(doc) {}
  void mark(const Line& line) {
    if (!keys_.emplace(line.key, line.number).second)
      throw ValidationError("'" + line.key + "' given twice", line.number);
  }
  void require(std::initializer_list<const char*> keys) const {
    for (const char* k : keys)
      if (!keys_.count(k)) throw ValidationError(std::string("missing '") + k + "'", doc_.header_line);
  }

 private:
  const Document& doc_;
  std::map<std::string, std::size_t> keys_;
};

inline void expect_tag(const Document& doc, std::string_view tag) {
  if (doc.tag != tag)
    throw ValidationError("expected problem '" + std::string(tag) + "', found '" + doc.tag + "'", doc.header_line);
}

[[noreturn]] inline void unknown_key(const Line& line) {
  throw ValidationError("unknown key '" + line.key + "'", line.number);
}

/// Whole-instance checks; errors without a line point at the header.
template <typename Instance, typename... Options>
void validated(const Instance& inst, const Document& doc, Options... options) {
  try {
    validate(inst, options...);
  } catch (const ValidationError& e) {
    if (e.line() != 0) throw;
    throw ValidationError(e.what(), doc.header_line);
  }
}

inline std::string join(const RationalVector& xs) {
  std::string out;
  for (const auto& x : xs) out += ' ' + to_string(x);
  return out;
}

inline std::string join(const IntegerVector& xs) {
  std::string out;
  for (const auto& x : xs) out += ' ' + to_string(x);
  return out;
}

inline std::string header(std::string_view tag) { return "problem " + std::string(tag) + " version 1\n"; }

}  // namespace io

/// Tag of an instance file ("knapsack", "max-cut", ...), or "cnf" for DIMACS.
inline std::string problem_tag(std::string_view text) {
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    auto words = io::split_words(raw);
    if (words.empty() || words[0][0] == '#' || words[0] == "c") continue;
    if (words[0] == "p") return "cnf";
    break;
  }
  return io::read_document(text).tag;
}

// ---------------------------------------------------------------- vector

inline std::string serialize_vector(const RationalVector& w) { return io::header("vector") + "values" + io::join(w) + '\n'; }

inline RationalVector parse_vector(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "vector");
  io::Seen seen(doc);
  RationalVector w;
  for (const auto& line : doc.lines) {
    if (line.key != "values") io::unknown_key(line);
    seen.mark(line);
    for (const auto& v : line.values) w.push_back(io::rational_at(line, v));
  }
  seen.require({"values"});
  return w;
}

// ---------------------------------------------------------------- knapsack

inline std::string serialize(const KnapsackInstance& inst) {
  std::string out = io::header("knapsack");
  out += "n " + std::to_string(inst.w.size()) + '\n';
  out += "w" + io::join(inst.w) + '\n';
  out += "p" + io::join(inst.p) + '\n';
  out += "W " + to_string(inst.W) + '\n';
  out += "P " + to_string(inst.P) + '\n';
  return out;
}

inline KnapsackInstance parse_knapsack(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "knapsack");
  io::Seen seen(doc);
  KnapsackInstance inst;
  std::uint64_t n = 0;
  std::size_t w_line = 0, p_line = 0;
  for (const auto& line : doc.lines) {
    seen.mark(line);
    if (line.key == "n") {
      n = io::count_at(line, io::single(line));
    } else if (line.key == "w" || line.key == "p") {
      auto& target = line.key == "w" ? inst.w : inst.p;
      (line.key == "w" ? w_line : p_line) = line.number;
      for (const auto& v : line.values) target.push_back(io::rational_at(line, v));
    } else if (line.key == "W") {
      inst.W = io::rational_at(line, io::single(line));
    } else if (line.key == "P") {
      inst.P = io::rational_at(line, io::single(line));
    } else {
      io::unknown_key(line);
    }
  }
  seen.require({"n", "w", "p", "W", "P"});
  if (inst.w.size() != n) throw ValidationError("w has " + std::to_string(inst.w.size()) + " entries, n is " + std::to_string(n), w_line);
  if (inst.p.size() != n) throw ValidationError("p has " + std::to_string(inst.p.size()) + " entries, n is " + std::to_string(n), p_line);
  io::validated(inst, doc);
  return inst;
}

// ---------------------------------------------------------------- subset sum

inline std::string serialize(const SubsetSumInstance& inst) {
  return io::header("subset-sum") + "a" + io::join(inst.a) + "\nb " + to_string(inst.b) + '\n';
}

inline SubsetSumInstance parse_subset_sum(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "subset-sum");
  io::Seen seen(doc);
  SubsetSumInstance inst;
  for (const auto& line : doc.lines) {
    seen.mark(line);
    if (line.key == "a") {
      for (const auto& v : line.values) {
        inst.a.push_back(io::integer_at(line, v));
        if (inst.a.back() < 0) throw ValidationError("subset sum numbers must be non-negative", line.number);
      }
    } else if (line.key == "b") {
      inst.b = io::integer_at(line, io::single(line));
      if (inst.b < 0) throw ValidationError("target must be non-negative", line.number);
    } else {
      io::unknown_key(line);
    }
  }
  seen.require({"a", "b"});
  io::validated(inst, doc);
  return inst;
}

// ---------------------------------------------------------------- set systems

/// Hitting set: one "element <id> <weight>" line per universe element and
/// "set <ids>" per set. Set packing: "element <id>" lines and
/// "set <ids> : <weight>".
inline std::string serialize(const SetSystemInstance& inst) {
  const bool hitting = inst.variant == SetSystemVariant::kHittingSet;
  std::string out = io::header(hitting ? "hitting-set" : "set-packing");
  out += "d " + std::to_string(inst.d) + '\n';
  out += "k " + std::to_string(inst.k) + '\n';
  out += "W " + to_string(inst.W) + '\n';
  for (std::size_t i = 0; i < inst.universe.size(); ++i) {
    out += "element " + std::to_string(inst.universe[i]);
    if (hitting) out += ' ' + to_string(inst.weights[i]);
    out += '\n';
  }
  for (std::size_t f = 0; f < inst.family.size(); ++f) {
    out += "set";
    for (auto e : inst.family[f]) out += ' ' + std::to_string(e);
    if (!hitting) out += " : " + to_string(inst.weights[f]);
    out += '\n';
  }
  return out;
}

inline SetSystemInstance parse_set_system(std::string_view text) {
  auto doc = io::read_document(text);
  SetSystemInstance inst;
  if (doc.tag == "hitting-set")
    inst.variant = SetSystemVariant::kHittingSet;
  else if (doc.tag == "set-packing")
    inst.variant = SetSystemVariant::kSetPacking;
  else
    throw ValidationError("expected problem 'hitting-set' or 'set-packing', found '" + doc.tag + "'", doc.header_line);
  const bool hitting = inst.variant == SetSystemVariant::kHittingSet;
  io::Seen seen(doc);
  auto element_id = [](const io::Line& line, const std::string& v) {
    Integer x = io::integer_at(line, v);
    if (!x.fits_slong_p()) throw ValidationError("element id out of range", line.number);
    return static_cast<ElementId>(x.get_si());
  };
  for (const auto& line : doc.lines) {
    if (line.key == "element") {
      if (line.values.size() != (hitting ? 2u : 1u))
        throw ValidationError(hitting ? "'element' takes an id and a weight" : "'element' takes an id", line.number);
      inst.universe.push_back(element_id(line, line.values[0]));
      if (hitting) inst.weights.push_back(io::rational_at(line, line.values[1]));
    } else if (line.key == "set") {
      std::vector<std::string> ids = line.values;
      if (!hitting) {
        auto [left, right] = io::split_colon(line);
        if (right.size() != 1) throw ValidationError("set weight missing after ':'", line.number);
        inst.weights.push_back(io::rational_at(line, right[0]));
        ids = left;
      }
      ElementSet s;
      for (const auto& v : ids) s.push_back(element_id(line, v));
      std::sort(s.begin(), s.end());
      inst.family.push_back(std::move(s));
    } else {
      seen.mark(line);
      if (line.key == "d")
        inst.d = io::count_at(line, io::single(line));
      else if (line.key == "k")
        inst.k = io::count_at(line, io::single(line));
      else if (line.key == "W")
        inst.W = io::rational_at(line, io::single(line));
      else
        io::unknown_key(line);
    }
  }
  seen.require({"d", "k", "W"});
  io::validated(inst, doc);
  return inst;
}

// ---------------------------------------------------------------- max cut

inline std::string serialize(const MaxCutInstance& inst) {
  std::string out = io::header("max-cut");
  out += "vertices " + std::to_string(inst.vertices) + '\n';
  out += "W " + to_string(inst.W) + '\n';
  for (const auto& e : inst.edges)
    out += "edge " + std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' + to_string(e.w) + '\n';
  return out;
}

inline MaxCutInstance parse_max_cut(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "max-cut");
  io::Seen seen(doc);
  MaxCutInstance inst;
  for (const auto& line : doc.lines) {
    if (line.key == "edge") {
      if (line.values.size() != 3) throw ValidationError("'edge' takes u v weight", line.number);
      inst.edges.push_back({io::count_at(line, line.values[0]), io::count_at(line, line.values[1]),
                            io::rational_at(line, line.values[2])});
      continue;
    }
    seen.mark(line);
    if (line.key == "vertices")
      inst.vertices = io::count_at(line, io::single(line));
    else if (line.key == "W")
      inst.W = io::rational_at(line, io::single(line));
    else
      io::unknown_key(line);
  }
  seen.require({"vertices", "W"});
  io::validated(inst, doc);
  return inst;
}

// ---------------------------------------------------------------- bin packing

inline std::string serialize(const BinPackingInstance& inst) {
  return io::header("bin-packing") + "b " + to_string(inst.b) + "\nk " + std::to_string(inst.k) + "\nitems" +
         io::join(inst.items) + '\n';
}

inline BinPackingInstance parse_bin_packing(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "bin-packing");
  io::Seen seen(doc);
  BinPackingInstance inst;
  for (const auto& line : doc.lines) {
    seen.mark(line);
    if (line.key == "b")
      inst.b = io::integer_at(line, io::single(line));
    else if (line.key == "k")
      inst.k = io::count_at(line, io::single(line));
    else if (line.key == "items")
      for (const auto& v : line.values) inst.items.push_back(io::integer_at(line, v));
    else
      io::unknown_key(line);
  }
  seen.require({"b", "k", "items"});
  io::validated(inst, doc);
  return inst;
}

// ---------------------------------------------------------------- grouped knapsack

/// One "group <weight> : <values>" line per distinct weight.
inline std::string serialize(const GroupedKnapsack& inst) {
  std::string out = io::header("grouped-knapsack");
  out += "W " + to_string(inst.W) + '\n';
  out += "P " + to_string(inst.P) + '\n';
  for (const auto& g : inst.groups) out += "group " + to_string(g.weight) + " :" + io::join(g.values) + '\n';
  return out;
}

inline GroupedKnapsack parse_grouped_knapsack(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "grouped-knapsack");
  io::Seen seen(doc);
  GroupedKnapsack inst;
  for (const auto& line : doc.lines) {
    if (line.key == "group") {
      auto [left, right] = io::split_colon(line);
      if (left.size() != 1) throw ValidationError("'group' takes one weight before ':'", line.number);
      WeightGroup g{io::rational_at(line, left[0]), {}};
      for (const auto& v : right) g.values.push_back(io::rational_at(line, v));
      inst.groups.push_back(std::move(g));
      continue;
    }
    seen.mark(line);
    if (line.key == "W")
      inst.W = io::rational_at(line, io::single(line));
    else if (line.key == "P")
      inst.P = io::rational_at(line, io::single(line));
    else
      io::unknown_key(line);
  }
  seen.require({"W", "P"});
  io::validated(inst, doc);
  return inst;
}

// ---------------------------------------------------------------- grouped subset sum

inline std::string serialize(const GroupedSubsetSum& inst) {
  std::string out = io::header("grouped-subset-sum");
  out += "t " + to_string(inst.target) + '\n';
  for (const auto& c : inst.classes) out += "class " + to_string(c.size) + ' ' + to_string(c.multiplicity) + '\n';
  return out;
}

inline GroupedSubsetSum parse_grouped_subset_sum(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "grouped-subset-sum");
  io::Seen seen(doc);
  GroupedSubsetSum inst;
  for (const auto& line : doc.lines) {
    if (line.key == "class") {
      if (line.values.size() != 2) throw ValidationError("'class' takes size and multiplicity", line.number);
      inst.classes.push_back({io::integer_at(line, line.values[0]), io::integer_at(line, line.values[1])});
      continue;
    }
    seen.mark(line);
    if (line.key == "t")
      inst.target = io::integer_at(line, io::single(line));
    else
      io::unknown_key(line);
  }
  seen.require({"t"});
  io::validated(inst, doc);
  return inst;
}

// ---------------------------------------------------------------- polynomials

namespace io {

inline std::string term_line(const Monomial& t) {
  std::string out = "term";
  for (auto e : t.exponents) out += ' ' + std::to_string(e);
  return out + " : " + to_string(t.coefficient) + '\n';
}

inline Monomial parse_term(const Line& line, std::size_t variables) {
  auto [left, right] = split_colon(line);
  if (right.size() != 1) throw ValidationError("term coefficient missing after ':'", line.number);
  if (left.size() != variables)
    throw ValidationError("term has " + std::to_string(left.size()) + " exponents, expected " +
                              std::to_string(variables),
                          line.number);
  Monomial m;
  for (const auto& v : left) {
    std::uint64_t e = count_at(line, v);
    if (e > UINT32_MAX) throw ValidationError("exponent too large", line.number);
    m.exponents.push_back(static_cast<std::uint32_t>(e));
  }
  m.coefficient = rational_at(line, right[0]);
  return m;
}

}  // namespace io

inline std::string serialize(const Polynomial& f) {
  std::string out = io::header("polynomial");
  out += "variables " + std::to_string(f.variables) + '\n';
  out += "degree " + std::to_string(f.degree) + '\n';
  for (const auto& t : f.terms) out += io::term_line(t);
  return out;
}

inline Polynomial parse_polynomial(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "polynomial");
  io::Seen seen(doc);
  Polynomial f;
  bool have_variables = false;
  for (const auto& line : doc.lines) {
    if (line.key == "term") {
      if (!have_variables) throw ValidationError("'variables' must precede terms", line.number);
      f.terms.push_back(io::parse_term(line, f.variables));
      continue;
    }
    seen.mark(line);
    if (line.key == "variables") {
      f.variables = io::count_at(line, io::single(line));
      have_variables = true;
    } else if (line.key == "degree") {
      f.degree = io::count_at(line, io::single(line));
    } else {
      io::unknown_key(line);
    }
  }
  seen.require({"variables", "degree"});
  io::validated(f, doc, true);
  return f;
}

/// "objective <z>" and "constraint <b>" open blocks; the following term lines
/// belong to the most recent block.
inline std::string serialize(const IppInstance& inst) {
  std::string out = io::header("ipp");
  out += "variables " + std::to_string(inst.variables) + '\n';
  out += "degree " + std::to_string(inst.degree) + '\n';
  out += "u " + to_string(inst.u) + '\n';
  out += "objective " + to_string(inst.z) + '\n';
  for (const auto& t : inst.objective.terms) out += io::term_line(t);
  for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
    out += "constraint " + to_string(inst.bounds[i]) + '\n';
    for (const auto& t : inst.constraints[i].terms) out += io::term_line(t);
  }
  return out;
}

inline IppInstance parse_ipp(std::string_view text) {
  auto doc = io::read_document(text);
  io::expect_tag(doc, "ipp");
  io::Seen seen(doc);
  IppInstance inst;
  Polynomial* current = nullptr;
  bool have_variables = false, have_degree = false;
  for (const auto& line : doc.lines) {
    if (line.key == "term") {
      if (!current) throw ValidationError("term outside an objective or constraint block", line.number);
      current->terms.push_back(io::parse_term(line, inst.variables));
    } else if (line.key == "constraint") {
      if (!have_variables || !have_degree)
        throw ValidationError("'variables' and 'degree' must precede constraints", line.number);
      inst.bounds.push_back(io::rational_at(line, io::single(line)));
      inst.constraints.push_back({inst.variables, inst.degree, {}});
      current = &inst.constraints.back();
    } else {
      seen.mark(line);
      if (line.key == "variables") {
        inst.variables = io::count_at(line, io::single(line));
        have_variables = true;
      } else if (line.key == "degree") {
        inst.degree = io::count_at(line, io::single(line));
        have_degree = true;
      } else if (line.key == "u") {
        inst.u = io::integer_at(line, io::single(line));
      } else if (line.key == "objective") {
        if (!have_variables || !have_degree)
          throw ValidationError("'variables' and 'degree' must precede the objective", line.number);
        inst.z = io::rational_at(line, io::single(line));
        inst.objective = {inst.variables, inst.degree, {}};
        current = &inst.objective;
      } else {
        io::unknown_key(line);
      }
    }
  }
  seen.require({"variables", "degree", "u", "objective"});
  io::validated(inst, doc);
  return inst;
}

// ---------------------------------------------------------------- CNF (DIMACS)

inline std::string serialize(const CnfFormula& phi) {
  std::string out = "p cnf " + std::to_string(phi.variables) + ' ' + std::to_string(phi.clauses.size()) + '\n';
  for (const auto& c : phi.clauses)
    out += std::to_string(c[0]) + ' ' + std::to_string(c[1]) + ' ' + std::to_string(c[2]) + " 0\n";
  return out;
}

/// DIMACS with exactly three literals per clause; 'c' lines are comments.
inline CnfFormula parse_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0, header_line = 0;
  std::optional<std::uint64_t> declared_clauses;
  CnfFormula phi;
  std::vector<int> pending;
  std::size_t pending_line = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto words = io::split_words(raw);
    if (words.empty() || words[0] == "c" || words[0] == "%") continue;
    io::Line line{number, words[0], {words.begin() + 1, words.end()}};
    if (words[0] == "p") {
      if (declared_clauses) throw ValidationError("second 'p' line", number);
      if (words.size() != 4 || words[1] != "cnf") throw ValidationError("expected 'p cnf <vars> <clauses>'", number);
      phi.variables = io::count_at(line, words[2]);
      declared_clauses = io::count_at(line, words[3]);
      header_line = number;
      continue;
    }
    if (!declared_clauses) throw ValidationError("clause before 'p cnf' line", number);
    for (const auto& w : words) {
      Integer lit = io::integer_at(line, w);
      if (!lit.fits_sint_p()) throw ValidationError("literal out of range", number);
      if (lit == 0) {
        if (pending.size() != 3)
          throw ValidationError("clause has " + std::to_string(pending.size()) + " literals, expected 3", number);
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::abs(lit.get_si())) > phi.variables)
        throw ValidationError("literal " + w + " exceeds variable count", number);
      if (pending.empty()) pending_line = number;
      pending.push_back(static_cast<int>(lit.get_si()));
    }
  }
  if (!declared_clauses) throw ValidationError("missing 'p cnf' line", number == 0 ? 1 : number);
  if (!pending.empty()) throw ValidationError("clause not terminated by 0", pending_line);
  if (phi.clauses.size() != *declared_clauses)
    throw ValidationError("declared " + std::to_string(*declared_clauses) + " clauses, found " +
                              std::to_string(phi.clauses.size()),
                          header_line);
  return phi;
}

}  // namespace kernelcut
