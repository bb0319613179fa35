#include "factorum/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace factorum {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

int Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

bool all_single_char(const std::vector<std::string>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const std::string& g) { return g.size() == 1; });
}

bool valid_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line, int first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({std::string(line.substr(i, j - i)), first_column + static_cast<int>(i)});
    i = j;
  }
  return out;
}

}  // namespace

Word Presentation::word(std::string_view text) const {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  const bool compact = all_single_char(generators);
  while (in >> tok) {
    if (tok == "1") continue;
    int g = index_of(tok);
    if (g >= 0) {
      w.push_back(static_cast<char>(g));
      continue;
    }
    if (compact) {
      for (char c : tok) {
        int h = index_of(std::string_view(&c, 1));
        if (h < 0) throw Error(ErrorKind::UndeclaredGenerator, "undeclared generator '" + std::string(1, c) + "'");
        w.push_back(static_cast<char>(h));
      }
      continue;
    }
    throw Error(ErrorKind::UndeclaredGenerator, "undeclared generator '" + tok + "'");
  }
  return w;
}

std::string Presentation::show(const Word& w) const {
  if (w.empty()) return "1";
  const bool compact = all_single_char(generators);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out.push_back(' ');
    out += generators.at(static_cast<unsigned char>(w[i]));
  }
  return out;
}

bool Presentation::length_preserving() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const Relation& r) { return r.lhs.size() == r.rhs.size(); });
}

int Presentation::longest_side() const {
  std::size_t m = 0;
  for (const Relation& r : relations) m = std::max({m, r.lhs.size(), r.rhs.size()});
  return static_cast<int>(m);
}

void Presentation::validate_budget(const Budget& b) const {
  if (b.max_word_length <= 0 || b.max_ball_size == 0) {
    throw Error(ErrorKind::InvalidArgument, "budget values must be positive");
  }
  if (b.max_word_length < longest_side()) {
    throw Error(ErrorKind::InvalidArgument,
                "max_word_length " + std::to_string(b.max_word_length) +
                    " is shorter than a relation side of length " + std::to_string(longest_side()));
  }
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  bool have_budget = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(ErrorKind::Syntax, line_no, static_cast<int>(first) + 1, "expected 'gens:', 'rel:' or 'budget:'");
    }
    std::string key(line.substr(first, colon - first));
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    std::string_view rest = line.substr(colon + 1);
    const int rest_col = static_cast<int>(colon) + 2;

    if (key == "gens") {
      if (have_gens) throw ParseError(ErrorKind::Syntax, line_no, static_cast<int>(first) + 1, "duplicate 'gens:' line");
      if (!p.relations.empty()) {
        throw ParseError(ErrorKind::Syntax, line_no, static_cast<int>(first) + 1, "'gens:' must precede relations");
      }
      have_gens = true;
      for (const Token& t : tokenize(rest, rest_col)) {
        if (!valid_name(t.text)) throw ParseError(ErrorKind::Syntax, line_no, t.column, "invalid generator name '" + t.text + "'");
        if (p.index_of(t.text) >= 0) {
          throw ParseError(ErrorKind::DuplicateGenerator, line_no, t.column, "duplicate generator '" + t.text + "'");
        }
        if (p.generators.size() >= 255) throw ParseError(ErrorKind::Syntax, line_no, t.column, "too many generators");
        p.generators.push_back(t.text);
      }
      if (p.generators.empty()) throw ParseError(ErrorKind::Syntax, line_no, rest_col, "no generators declared");
    } else if (key == "rel") {
      std::size_t eq = rest.find('=');
      if (eq == std::string_view::npos || rest.find('=', eq + 1) != std::string_view::npos) {
        throw ParseError(ErrorKind::Syntax, line_no, rest_col, "relation must have the form '<word> = <word>'");
      }
      std::vector<Token> sides[2] = {tokenize(rest.substr(0, eq), rest_col),
                                     tokenize(rest.substr(eq + 1), rest_col + static_cast<int>(eq) + 1)};
      for (int s = 0; s < 2; ++s) {
        bool empty = sides[s].empty() || (sides[s].size() == 1 && sides[s][0].text == "1");
        if (empty) {
          int col = s == 0 ? rest_col : rest_col + static_cast<int>(eq) + 1;
          if (!sides[s].empty()) col = sides[s][0].column;
          throw ParseError(ErrorKind::EmptyRelationSide, line_no, col, "relation side is empty (reduced presentations only)");
        }
      }
      Relation r;
      Word* out[2] = {&r.lhs, &r.rhs};
      for (int s = 0; s < 2; ++s) {
        for (const Token& t : sides[s]) {
          int g = p.index_of(t.text);
          if (g < 0) throw ParseError(ErrorKind::UndeclaredGenerator, line_no, t.column, "undeclared generator '" + t.text + "'");
          out[s]->push_back(static_cast<char>(g));
        }
      }
      p.relations.push_back(std::move(r));
    } else if (key == "budget") {
      if (have_budget) throw ParseError(ErrorKind::Syntax, line_no, static_cast<int>(first) + 1, "duplicate 'budget:' line");
      have_budget = true;
      for (const Token& t : tokenize(rest, rest_col)) {
        std::size_t e = t.text.find('=');
        if (e == std::string::npos) throw ParseError(ErrorKind::Syntax, line_no, t.column, "expected key=value");
        std::string name = t.text.substr(0, e);
        std::string value = t.text.substr(e + 1);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size() || v <= 0) {
          throw ParseError(ErrorKind::Syntax, line_no, t.column + static_cast<int>(e) + 1, "expected a positive integer");
        }
        if (name == "max_word_length") {
          p.budget.max_word_length = static_cast<int>(v);
        } else if (name == "max_ball_size") {
          p.budget.max_ball_size = static_cast<std::size_t>(v);
        } else {
          throw ParseError(ErrorKind::Syntax, line_no, t.column, "unknown budget key '" + name + "'");
        }
      }
    } else {
      throw ParseError(ErrorKind::Syntax, line_no, static_cast<int>(first) + 1, "unknown directive '" + key + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_gens) throw ParseError(ErrorKind::Syntax, line_no, 1, "missing 'gens:' line");
  if (p.budget.max_word_length < p.longest_side()) {
    throw ParseError(ErrorKind::InvalidArgument, line_no, 1, "max_word_length is shorter than a relation side");
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

namespace {

// Union-find cycle detection on an undirected multigraph; self-loops and
// repeated edges count as cycles.
bool is_forest(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

AdyanReport check_adyan(const Presentation& p) {
  AdyanReport rep;
  for (const Relation& r : p.relations) {
    rep.left_edges.emplace_back(static_cast<unsigned char>(r.lhs.front()), static_cast<unsigned char>(r.rhs.front()));
    rep.right_edges.emplace_back(static_cast<unsigned char>(r.lhs.back()), static_cast<unsigned char>(r.rhs.back()));
  }
  rep.left_forest = is_forest(p.generators.size(), rep.left_edges);
  rep.right_forest = is_forest(p.generators.size(), rep.right_edges);
  rep.is_adyan = rep.left_forest && rep.right_forest;
  return rep;
}

CongruenceBall congruence_ball(const Presentation& p, const Word& w, const Budget& b) {
  CongruenceBall ball;
  ball.seed = w;
  ball.closed = true;
  std::unordered_set<Word> seen{w};
  std::deque<Word> queue{w};
  if (static_cast<int>(w.size()) > b.max_word_length) ball.closed = false;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for_each_rewrite(p, cur, [&](const Word& next) {
      if (seen.count(next)) return;
      if (static_cast<int>(next.size()) > b.max_word_length || seen.size() >= b.max_ball_size) {
        ball.closed = false;
        return;
      }
      seen.insert(next);
      queue.push_back(next);
    });
  }
  ball.members.assign(seen.begin(), seen.end());
  std::sort(ball.members.begin(), ball.members.end(), shortlex_less);
  return ball;
}

const char* to_string(Equality e) {
  switch (e) {
    case Equality::Equal: return "Equal";
    case Equality::NotEqual: return "NotEqual";
    case Equality::Unknown: return "Unknown";
  }
  return "Unknown";
}

Equality equal(const Presentation& p, const Word& w1, const Word& w2, const Budget& b) {
  if (w1 == w2) return Equality::Equal;
  CongruenceBall ball = congruence_ball(p, w1, b);
  if (std::binary_search(ball.members.begin(), ball.members.end(), w2, shortlex_less)) return Equality::Equal;
  return ball.closed ? Equality::NotEqual : Equality::Unknown;
}

}  // namespace factorum
