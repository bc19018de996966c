#include "rover/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "rover/errors.hpp"

namespace rover {

namespace {

struct Token {
  enum class Kind { Gen, Perm, Inv } kind;
  char letter = 0;          // Gen
  int index = 0;            // Gen, 1-based
  std::vector<int> images;  // Perm, 1-based
  std::string sub;          // Inv
};

bool is_gen_letter(char c) { return c == 'x' || c == 's' || c == 'b' || c == 'c' || c == 'd'; }

// Body of a balanced parenthesized group starting at s[i] == '('.
std::string read_group(const std::string& s, size_t& i) {
  size_t start = ++i;
  int depth = 1;
  while (i < s.size()) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) {
      std::string body = s.substr(start, i - start);
      ++i;
      return body;
    }
    ++i;
  }
  fail(Errc::parse_error, "unbalanced parentheses");
}

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s.compare(i, 4, "inv(") == 0) {
      i += 3;
      Token t;
      t.kind = Token::Kind::Inv;
      t.sub = read_group(s, i);
      tokens.push_back(std::move(t));
      continue;
    }
    if (s[i] == 'p' && i + 1 < s.size() && s[i + 1] == '(') {
      ++i;
      std::string body = read_group(s, i);
      Token t;
      t.kind = Token::Kind::Perm;
      size_t j = 0;
      while (j < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[j])) || body[j] == ',') {
          ++j;
          continue;
        }
        require(std::isdigit(static_cast<unsigned char>(body[j])), Errc::parse_error,
                "permutation images must be integers");
        int v = 0;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j])))
          v = v * 10 + (body[j++] - '0');
        t.images.push_back(v);
      }
      require(!t.images.empty(), Errc::parse_error, "empty permutation");
      tokens.push_back(std::move(t));
      continue;
    }
    if (is_gen_letter(s[i])) {
      Token t;
      t.kind = Token::Kind::Gen;
      t.letter = s[i++];
      int v = 1;  // bare letter acts on component 1
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          v = v * 10 + (s[i++] - '0');
        require(v >= 1, Errc::parse_error, "component indices are 1-based");
      }
      t.index = v;
      tokens.push_back(std::move(t));
      continue;
    }
    fail(Errc::parse_error, std::string("unexpected character '") + s[i] + "' in expression");
  }
  return tokens;
}

Generator generator_of(char letter) {
  switch (letter) {
    case 'x': return Generator::X;
    case 's': return Generator::Sigma;
    case 'b': return Generator::B;
    case 'c': return Generator::C;
    case 'd': return Generator::D;
  }
  fail(Errc::unknown_generator, std::string("unknown generator letter '") + letter + "'");
}

// need < 0 means the factor picks its minimal arity.
GroupoidElement realize(const Token& t, int need) {
  switch (t.kind) {
    case Token::Kind::Gen: {
      int n = need < 0 ? t.index : need;
      require(t.index <= n, Errc::arity_mismatch, "generator index exceeds required arity");
      return from_generator(generator_of(t.letter), t.index - 1, n);
    }
    case Token::Kind::Perm: {
      int m = static_cast<int>(t.images.size());
      require(need < 0 || m == need, Errc::arity_mismatch,
              "permutation degree does not match required arity");
      std::vector<int> images(m);
      for (int k = 0; k < m; ++k) {
        require(t.images[k] >= 1 && t.images[k] <= m, Errc::parse_error,
                "permutation image out of range");
        images[k] = t.images[k] - 1;
      }
      return perm_element(Permutation(std::move(images)));
    }
    case Token::Kind::Inv: {
      GroupoidElement inner = parse_expression(t.sub);
      GroupoidElement inv = invert(inner);
      require(need < 0 || inv.domain_roots() == need, Errc::arity_mismatch,
              "inverse factor does not match required arity");
      return inv;
    }
  }
  fail(Errc::parse_error, "unhandled token");
}

}  // namespace

GroupoidElement parse_expression(const std::string& text) {
  std::vector<Token> tokens = lex(text);
  require(!tokens.empty(), Errc::parse_error, "empty expression");
  std::optional<GroupoidElement> acc;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    GroupoidElement f = realize(*it, acc ? acc->range_roots() : -1);
    acc = acc ? multiply(f, *acc) : std::move(f);
  }
  return *std::move(acc);
}

}  // namespace rover
