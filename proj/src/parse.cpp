#include "syzlab/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "syzlab/error.hpp"

namespace syzlab {
namespace {

std::string at_line(int line) { return " (line " + std::to_string(line) + ")"; }

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct RawTerm {
  std::int64_t coefficient = 1;
  std::vector<std::string> arrows;
};

// term (('+'|'-') term)*, term = factor('*'factor)*, factor = integer | arrow
// name. Integer factors multiply into the coefficient.
std::vector<RawTerm> parse_relation_expr(const std::string& expr, int line) {
  std::vector<RawTerm> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
  };
  auto next_token = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[pos])) ||
                                 expr[pos] == '_')) {
      ++pos;
    }
    return expr.substr(start, pos - start);
  };

  skip_ws();
  if (pos == expr.size()) fail(Errc::parse_error, "empty relation" + at_line(line));
  std::int64_t sign = 1;
  if (expr[pos] == '+' || expr[pos] == '-') {
    sign = expr[pos] == '-' ? -1 : 1;
    ++pos;
  }
  for (;;) {
    RawTerm term;
    term.coefficient = sign;
    for (;;) {
      skip_ws();
      std::string tok = next_token();
      if (tok.empty()) {
        fail(Errc::parse_error, "expected an arrow name or integer in relation" + at_line(line));
      }
      if (is_integer(tok)) {
        term.coefficient *= std::stoll(tok);
      } else if (is_ident(tok)) {
        term.arrows.push_back(tok);
      } else {
        fail(Errc::parse_error, "bad relation token '" + tok + "'" + at_line(line));
      }
      skip_ws();
      if (pos < expr.size() && expr[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (term.arrows.empty()) {
      fail(Errc::parse_error, "relation term needs at least one arrow" + at_line(line));
    }
    terms.push_back(std::move(term));
    skip_ws();
    if (pos == expr.size()) break;
    if (expr[pos] == '+' || expr[pos] == '-') {
      sign = expr[pos] == '-' ? -1 : 1;
      ++pos;
    } else {
      fail(Errc::parse_error,
           std::string("expected '+' or '-' in relation, got '") + expr[pos] + "'" + at_line(line));
    }
  }
  return terms;
}

}  // namespace

AlgebraFile parse_algebra_text(const std::string& text) {
  AlgebraFile out;
  QuiverPresentation& p = out.presentation;

  bool have_field = false;
  bool have_nilpotency = false;
  std::map<std::string, int> vertex_index;
  std::map<std::string, int> arrow_index;
  struct RawArrow {
    std::string name, src, tgt;
    int line;
  };
  std::vector<RawArrow> raw_arrows;
  struct RawRelation {
    std::vector<RawTerm> terms;
    int line;
  };
  std::vector<RawRelation> raw_relations;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool saw_any = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> tok = split_ws(line);
    if (tok.empty()) continue;
    saw_any = true;
    const std::string& kw = tok[0];

    if (kw == "field") {
      if (have_field) fail(Errc::parse_error, "duplicate field directive" + at_line(lineno));
      if (tok.size() == 2 && tok[1] == "q") {
        out.field = Field::rationals();
      } else if (tok.size() == 3 && tok[1] == "gf" && is_integer(tok[2])) {
        std::int64_t ch = std::stoll(tok[2]);
        if (!is_prime(ch)) {
          fail(Errc::parse_error, "characteristic must be prime" + at_line(lineno));
        }
        out.field = Field::gf(ch);
      } else {
        fail(Errc::parse_error, "expected 'field gf <p>' or 'field q'" + at_line(lineno));
      }
      have_field = true;
    } else if (kw == "vertex") {
      if (tok.size() != 2) fail(Errc::parse_error, "expected 'vertex <id>'" + at_line(lineno));
      if (!is_ident(tok[1])) {
        fail(Errc::parse_error, "bad vertex id '" + tok[1] + "'" + at_line(lineno));
      }
      if (vertex_index.count(tok[1])) {
        fail(Errc::parse_error, "duplicate vertex '" + tok[1] + "'" + at_line(lineno));
      }
      vertex_index[tok[1]] = static_cast<int>(p.vertices.size());
      p.vertices.push_back(tok[1]);
    } else if (kw == "arrow") {
      if (tok.size() != 4) {
        fail(Errc::parse_error, "expected 'arrow <name> <src> <tgt>'" + at_line(lineno));
      }
      if (!is_ident(tok[1])) {
        fail(Errc::parse_error, "bad arrow name '" + tok[1] + "'" + at_line(lineno));
      }
      if (arrow_index.count(tok[1])) {
        fail(Errc::parse_error, "duplicate arrow '" + tok[1] + "'" + at_line(lineno));
      }
      arrow_index[tok[1]] = static_cast<int>(raw_arrows.size());
      raw_arrows.push_back({tok[1], tok[2], tok[3], lineno});
    } else if (kw == "relation") {
      std::size_t kw_end = line.find("relation") + std::string("relation").size();
      raw_relations.push_back({parse_relation_expr(line.substr(kw_end), lineno), lineno});
    } else if (kw == "nilpotency") {
      if (have_nilpotency) {
        fail(Errc::parse_error, "duplicate nilpotency directive" + at_line(lineno));
      }
      if (tok.size() != 2 || !is_integer(tok[1])) {
        fail(Errc::parse_error, "expected 'nilpotency <N>'" + at_line(lineno));
      }
      p.nilpotency_bound = static_cast<int>(std::stoll(tok[1]));
      if (p.nilpotency_bound < 1) {
        fail(Errc::parse_error, "nilpotency bound must be positive" + at_line(lineno));
      }
      have_nilpotency = true;
    } else {
      fail(Errc::parse_error, "unknown directive '" + kw + "'" + at_line(lineno));
    }
  }

  if (!saw_any) fail(Errc::parse_error, "empty algebra file (line 1)");
  if (!have_field) fail(Errc::parse_error, "missing field directive" + at_line(lineno + 1));
  if (p.vertices.empty()) fail(Errc::parse_error, "no vertices declared" + at_line(lineno + 1));

  for (const auto& ra : raw_arrows) {
    auto src = vertex_index.find(ra.src);
    auto tgt = vertex_index.find(ra.tgt);
    if (src == vertex_index.end() || tgt == vertex_index.end()) {
      fail(Errc::semantic_error, "arrow '" + ra.name + "' references an undeclared vertex" +
                                     at_line(ra.line));
    }
    p.arrows.push_back({ra.name, src->second, tgt->second});
  }
  for (const auto& rr : raw_relations) {
    Relation rel;
    for (const RawTerm& rt : rr.terms) {
      RelationTerm term;
      term.coefficient = rt.coefficient;
      for (const std::string& name : rt.arrows) {
        auto it = arrow_index.find(name);
        if (it == arrow_index.end()) {
          fail(Errc::semantic_error, "relation uses unknown arrow '" + name + "'" + at_line(rr.line));
        }
        term.arrows.push_back(it->second);
      }
      for (std::size_t i = 0; i + 1 < term.arrows.size(); ++i) {
        if (p.arrows[term.arrows[i]].tgt != p.arrows[term.arrows[i + 1]].src) {
          fail(Errc::semantic_error,
               "path '" + rt.arrows[i] + "*" + rt.arrows[i + 1] + "' is not composable" +
                   at_line(rr.line));
        }
      }
      rel.terms.push_back(std::move(term));
    }
    for (std::size_t i = 1; i < rel.terms.size(); ++i) {
      if (p.arrow_src(rel.terms[i]) != p.arrow_src(rel.terms[0]) ||
          p.arrow_tgt(rel.terms[i]) != p.arrow_tgt(rel.terms[0])) {
        fail(Errc::semantic_error, "relation terms are not parallel paths" + at_line(rr.line));
      }
    }
    p.relations.push_back(std::move(rel));
  }

  p.validate();
  return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_text(buf.str());
}

std::string serialize_algebra(const AlgebraFile& a) {
  const QuiverPresentation& p = a.presentation;
  std::ostringstream out;
  if (a.field.is_prime_field()) {
    out << "field gf " << a.field.characteristic() << "\n";
  } else {
    out << "field q\n";
  }
  for (const std::string& v : p.vertices) out << "vertex " << v << "\n";
  for (const Arrow& ar : p.arrows) {
    out << "arrow " << ar.name << " " << p.vertices[ar.src] << " " << p.vertices[ar.tgt] << "\n";
  }
  for (const Relation& rel : p.relations) {
    out << "relation ";
    for (std::size_t i = 0; i < rel.terms.size(); ++i) {
      const RelationTerm& t = rel.terms[i];
      std::int64_t c = t.coefficient;
      if (i == 0) {
        if (c < 0) out << "-";
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      std::int64_t abs = c < 0 ? -c : c;
      if (abs != 1) out << abs << "*";
      for (std::size_t j = 0; j < t.arrows.size(); ++j) {
        if (j > 0) out << "*";
        out << p.arrows[t.arrows[j]].name;
      }
    }
    out << "\n";
  }
  out << "nilpotency " << p.nilpotency_bound << "\n";
  return out.str();
}

Field field_from_name(const std::string& name) {
  if (name == "q") return Field::rationals();
  if (name.size() > 2 && name.compare(0, 2, "gf") == 0 && is_integer(name.substr(2))) {
    std::int64_t ch = std::stoll(name.substr(2));
    if (is_prime(ch)) return Field::gf(ch);
  }
  fail(Errc::usage_error, "unknown field '" + name + "', expected gf<p> or q");
}

}  // namespace syzlab
