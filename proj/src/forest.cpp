#include "treehopf/forest.hpp"

#include <algorithm>
#include <cctype>

#include "treehopf/rational.hpp"

namespace treehopf {

Tree make_tree(Letter l, std::vector<Tree> children) {
  std::sort(children.begin(), children.end(), std::greater<>{});
  return Tree{l, std::move(children)};
}

Forest make_forest(std::vector<Tree> trees) {
  std::sort(trees.begin(), trees.end(), std::greater<>{});
  return Forest{std::move(trees)};
}

Tree canonicalize(const Tree& t) {
  std::vector<Tree> cs;
  cs.reserve(t.children.size());
  for (const auto& c : t.children) cs.push_back(canonicalize(c));
  return make_tree(t.letter, std::move(cs));
}

Forest canonicalize(const Forest& f) {
  std::vector<Tree> ts;
  ts.reserve(f.trees.size());
  for (const auto& t : f.trees) ts.push_back(canonicalize(t));
  return make_forest(std::move(ts));
}

Tree to_nonplanar(const PlanarTree& t) {
  std::vector<Tree> cs;
  cs.reserve(t.children.size());
  for (const auto& c : t.children) cs.push_back(to_nonplanar(c));
  return make_tree(t.letter, std::move(cs));
}

Forest to_nonplanar(const PlanarForest& f) {
  std::vector<Tree> ts;
  ts.reserve(f.trees.size());
  for (const auto& t : f.trees) ts.push_back(to_nonplanar(t));
  return make_forest(std::move(ts));
}

// -------------------------------------------------------------- rendering --

namespace {

template <class T>
void render_tree(std::string& out, const T& t, const Alphabet& a) {
  out += '[';
  if (a.decorated()) out += a.token(t.letter);
  for (const auto& c : t.children) render_tree(out, c, a);
  out += ']';
}

template <class F>
std::string render_forest(const F& f, const Alphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    render_tree(out, f.trees[i], a);
  }
  return out;
}

}  // namespace

std::string render(const PlanarTree& t, const Alphabet& a) {
  std::string out;
  render_tree(out, t, a);
  return out;
}
std::string render(const PlanarForest& f, const Alphabet& a) { return render_forest(f, a); }
std::string render(const Tree& t, const Alphabet& a) {
  std::string out;
  render_tree(out, t, a);
  return out;
}
std::string render(const Forest& f, const Alphabet& a) { return render_forest(f, a); }
std::string render(const Word& w, const Alphabet& a) {
  std::string out;
  for (Letter l : w.letters) out += a.token(l);
  return out;
}

std::string render_latex(const PlanarForest& f, const Alphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    out += "\\Forest{" + render(f.trees[i], a) + "}";
  }
  if (f.trees.empty()) out = "1";
  return out;
}
std::string render_latex(const Forest& f, const Alphabet& a) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i) out += ' ';
    out += "\\Forest{" + render(f.trees[i], a) + "}";
  }
  if (f.trees.empty()) out = "1";
  return out;
}
std::string render_latex(const Word& w, const Alphabet& a) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += "e_{" + a.token(w.letters[i]) + "}";
  }
  return out;
}

// ---------------------------------------------------------------- parsing --

namespace {

struct Cursor {
  const std::string& text;
  const Alphabet& alphabet;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }
  char peek() const { return text[pos]; }

  // Longest alphabet token starting here, or -1.
  Letter try_letter() {
    std::size_t best = 0;
    Letter found = -1;
    for (Letter l = 0; l < alphabet.size(); ++l) {
      const std::string& tok = alphabet.token(l);
      if (tok.size() > best && text.compare(pos, tok.size(), tok) == 0) {
        best = tok.size();
        found = l;
      }
    }
    if (found >= 0) pos += best;
    return found;
  }

  PlanarTree parse_tree() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '[')
      throw ParseError("expected '['", pos);
    ++pos;
    skip_ws();
    Letter l = try_letter();
    if (l < 0) {
      if (alphabet.decorated())
        throw ParseError("expected a letter after '['", pos);
      l = 0;  // implicit single letter
    }
    std::vector<PlanarTree> children;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated tree, expected ']'", pos);
      if (text[pos] == ']') {
        ++pos;
        return PlanarTree{l, std::move(children)};
      }
      children.push_back(parse_tree());
    }
  }
};

}  // namespace

PlanarForest parse_planar(const std::string& text, const Alphabet& a) {
  Cursor c{text, a};
  std::vector<PlanarTree> trees;
  while (!c.at_end()) {
    if (c.peek() != '[') throw ParseError("expected '[' at start of tree", c.pos);
    trees.push_back(c.parse_tree());
  }
  return PlanarForest{std::move(trees)};
}

Forest parse_forest(const std::string& text, const Alphabet& a) {
  return to_nonplanar(parse_planar(text, a));
}

Word parse_word(const std::string& text, const Alphabet& a) {
  Cursor c{text, a};
  std::vector<Letter> letters;
  while (!c.at_end()) {
    if (c.peek() == '.') {  // optional separator between multi-char tokens
      ++c.pos;
      continue;
    }
    Letter l = c.try_letter();
    if (l < 0) throw ParseError("unknown letter in word", c.pos);
    letters.push_back(l);
  }
  return Word{std::move(letters)};
}

// ------------------------------------------------------------ enumeration --

namespace {

void check_limit(std::size_t n, std::size_t limit) {
  if (n > limit) throw ResourceError("enumeration limit exceeded");
}

}  // namespace

std::vector<Word> words_of_degree(int degree, const Alphabet& a, std::size_t limit) {
  std::vector<Word> out{Word{}};
  for (int i = 0; i < degree; ++i) {
    std::vector<Word> next;
    check_limit(out.size() * static_cast<std::size_t>(a.size()), limit);
    for (const auto& w : out)
      for (Letter l = 0; l < a.size(); ++l) {
        Word e = w;
        e.letters.push_back(l);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PlanarTree> planar_trees_of_degree(int degree, const Alphabet& a,
                                               std::size_t limit) {
  if (degree <= 0) return {};
  std::vector<PlanarForest> fs = planar_forests_of_degree(degree - 1, a, limit);
  std::vector<PlanarTree> out;
  check_limit(fs.size() * static_cast<std::size_t>(a.size()), limit);
  for (Letter l = 0; l < a.size(); ++l)
    for (const auto& f : fs) out.push_back(PlanarTree{l, f.trees});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PlanarForest> planar_forests_of_degree(int degree, const Alphabet& a,
                                                   std::size_t limit) {
  if (degree == 0) return {PlanarForest{}};
  std::vector<PlanarForest> out;
  // first tree takes d vertices, rest is a forest of degree-d
  for (int d = 1; d <= degree; ++d) {
    auto heads = planar_trees_of_degree(d, a, limit);
    auto tails = planar_forests_of_degree(degree - d, a, limit);
    check_limit(out.size() + heads.size() * tails.size(), limit);
    for (const auto& h : heads)
      for (const auto& t : tails) {
        PlanarForest f;
        f.trees.reserve(1 + t.trees.size());
        f.trees.push_back(h);
        f.trees.insert(f.trees.end(), t.trees.begin(), t.trees.end());
        out.push_back(std::move(f));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tree> trees_of_degree(int degree, const Alphabet& a, std::size_t limit) {
  if (degree <= 0) return {};
  std::vector<Forest> fs = forests_of_degree(degree - 1, a, limit);
  std::vector<Tree> out;
  check_limit(fs.size() * static_cast<std::size_t>(a.size()), limit);
  for (Letter l = 0; l < a.size(); ++l)
    for (const auto& f : fs) out.push_back(Tree{l, f.trees});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> forests_of_degree(int degree, const Alphabet& a, std::size_t limit) {
  if (degree == 0) return {Forest{}};
  // Multisets as descending tree lists: pick the largest tree first, then a
  // forest of smaller-or-equal trees.
  std::vector<std::vector<Tree>> trees_by_deg(static_cast<std::size_t>(degree) + 1);
  for (int d = 1; d <= degree; ++d) trees_by_deg[static_cast<std::size_t>(d)] = trees_of_degree(d, a, limit);

  std::vector<Forest> out;
  // rec(remaining, bound): forests with all trees <= bound (canonical order)
  auto rec = [&](auto&& self, int remaining, const Tree* bound) -> std::vector<Forest> {
    if (remaining == 0) return {Forest{}};
    std::vector<Forest> res;
    for (int d = remaining; d >= 1; --d) {
      for (const auto& t : trees_by_deg[static_cast<std::size_t>(d)]) {
        if (bound && t > *bound) continue;
        for (const auto& rest : self(self, remaining - d, &t)) {
          Forest f;
          f.trees.reserve(1 + rest.trees.size());
          f.trees.push_back(t);
          f.trees.insert(f.trees.end(), rest.trees.begin(), rest.trees.end());
          check_limit(res.size() + 1, limit);
          res.push_back(std::move(f));
        }
      }
    }
    return res;
  };
  out = rec(rec, degree, nullptr);
  for (auto& f : out) {
    // rec emits descending-by-choice but re-sort keeps the invariant airtight
    std::sort(f.trees.begin(), f.trees.end(), std::greater<>{});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace treehopf
