#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace treehopf {

// Decoration letter: index into a declared finite alphabet.
using Letter = int;

class Alphabet {
 public:
  Alphabet() : Alphabet({"1"}) {}

  explicit Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw std::invalid_argument("alphabet must be nonempty");
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      if (tokens_[i].empty()) throw std::invalid_argument("empty alphabet token");
      for (char ch : tokens_[i])
        if (ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch)))
          throw std::invalid_argument("alphabet token contains delimiter: " + tokens_[i]);
      if (!index_.emplace(tokens_[i], static_cast<Letter>(i)).second)
        throw std::invalid_argument("duplicate alphabet token: " + tokens_[i]);
    }
  }

  // "1,2,3" -> {1,2,3}
  static Alphabet from_csv(const std::string& csv) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : csv) {
      if (ch == ',') {
        toks.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    toks.push_back(cur);
    return Alphabet(std::move(toks));
  }

  static Alphabet numeric(int n) {
    std::vector<std::string> toks;
    for (int i = 1; i <= n; ++i) toks.push_back(std::to_string(i));
    return Alphabet(std::move(toks));
  }

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(Letter l) const { return tokens_.at(static_cast<std::size_t>(l)); }
  const std::vector<std::string>& tokens() const { return tokens_; }

  // Letter decorations are omitted in rendered output for a one-letter
  // alphabet, matching the undecorated forests of the source notation.
  bool decorated() const { return tokens_.size() > 1; }

  bool contains(const std::string& tok) const { return index_.count(tok) != 0; }
  Letter id(const std::string& tok) const {
    auto it = index_.find(tok);
    if (it == index_.end()) throw std::invalid_argument("unknown letter: " + tok);
    return it->second;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.tokens_ == b.tokens_;
  }

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, Letter> index_;
};

}  // namespace treehopf
