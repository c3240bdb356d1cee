#include "qme/expression.hpp"

#include <cctype>

namespace qme {

namespace {

class Parser {
public:
  Parser(const Space& space, std::string_view text, bool chains) : space_(space), s_(text), chains_(chains) {}

  ChainSum parse() {
    ChainSum out;
    skip();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      term(out, sign);
      first = false;
      skip();
    }
    return out;
  }

private:
  struct Piece {
    enum Kind { Nu, Word, Block } kind;
    std::vector<qme::Word> words;
  };

  void term(ChainSum& out, int sign) {
    Q coeff = rational() * sign;
    unsigned g = 0;
    std::vector<Piece> pieces;
    for (;;) {
      skip();
      if (at_end() || peek() == '+' || peek() == '-') break;
      if (peek() == '*') {
        ++pos_;
        skip();
      }
      factor(g, pieces);
    }
    if (chains_) {
      commit_chain(out, coeff, g, pieces);
    } else {
      std::vector<qme::Word> ws;
      for (const auto& pc : pieces) {
        if (pc.kind == Piece::Block) fail("blocks are only allowed in chains");
        ws.push_back(pc.kind == Piece::Nu ? qme::Word{} : pc.words.front());
      }
      TensorSum t;
      t.add_normalized(space_, g, 0, std::move(ws), coeff, true);
      for (const auto& [tt, c] : t.terms()) out.add(ChainTerm{tt.g, tt.n, {tt.factors}}, c);
    }
  }

  void commit_chain(ChainSum& out, Q coeff, unsigned g, const std::vector<Piece>& pieces) {
    const int nu = space_.nu_parity();
    unsigned n = 0;
    int acc = 0;
    std::vector<Block> blocks;
    for (const auto& pc : pieces) {
      if (pc.kind == Piece::Nu) {
        if (nu && acc) coeff = -coeff;
        ++n;
        continue;
      }
      if (pc.kind == Piece::Word) fail("words in a chain term must be grouped in blocks");
      auto st = normalize_tensor(space_, 0, 0, pc.words);
      if (!st) return;
      if (st->tensor.n) fail("empty word in a block");
      if (st->sign < 0) coeff = -coeff;
      acc ^= block_parity(space_, st->tensor.factors);
      blocks.push_back(st->tensor.factors);
    }
    out.add_normalized(space_, g, n, std::move(blocks), coeff);
  }

  void factor(unsigned& g, std::vector<Piece>& pieces) {
    const char c = peek();
    if (c == 'g' || c == 'v') {
      ++pos_;
      expect('^');
      const unsigned e = integer();
      if (c == 'g') g += e;
      else
        for (unsigned i = 0; i < e; ++i) pieces.push_back({Piece::Nu, {}});
    } else if (c == 'w') {
      pieces.push_back({Piece::Word, {word()}});
    } else if (c == '(' && chains_) {
      ++pos_;
      Piece b{Piece::Block, {}};
      for (;;) {
        skip();
        if (peek() != 'w') fail("expected a word in block");
        b.words.push_back(word());
        skip();
        if (peek() == ')') break;
        if (peek() == '*') ++pos_;
      }
      ++pos_;
      pieces.push_back(std::move(b));
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
  }

  qme::Word word() {
    expect('w');
    expect('[');
    qme::Word w;
    for (;;) {
      skip();
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      if (start == pos_) fail("expected a generator name");
      const std::string name(s_.substr(start, pos_ - start));
      auto idx = space_.index_of(name);
      if (!idx) fail("unknown generator '" + name + "'", start);
      w.push_back(*idx);
      skip();
      if (peek() == ']') break;
      expect(',');
    }
    ++pos_;
    return w;
  }

  Q rational() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a rational coefficient");
    std::size_t end = pos_;
    skip();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip();
      const std::size_t ds = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (ds == pos_) fail("expected a denominator");
      std::string text(s_.substr(start, end - start));
      text += '/';
      text += s_.substr(ds, pos_ - ds);
      try {
        return parse_rational(text);
      } catch (const Error& e) {
        fail(e.what(), start);
      }
    }
    return parse_rational(s_.substr(start, end - start));
  }

  unsigned integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_ || pos_ - start > 6) fail("expected a small exponent", start);
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  void expect(char c) {
    skip();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw Error(ErrorKind::Parse, "parse error at offset " + std::to_string(at) + ": " + msg);
  }

  const Space& space_;
  std::string_view s_;
  bool chains_;
  std::size_t pos_ = 0;
};

std::string join_terms(const std::vector<std::pair<Q, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, body] = terms[i];
    const bool neg = c < 0;
    if (i == 0) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += to_string(neg ? Q(-c) : c);
    if (!body.empty()) out += " * " + body;
  }
  return out;
}

std::string prefix(unsigned g, unsigned n) {
  std::string s;
  if (g) s += "g^" + std::to_string(g);
  if (n) s += std::string(s.empty() ? "" : " * ") + "v^" + std::to_string(n);
  return s;
}

std::string words_text(const Space& space, const std::vector<Word>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " * ") + render_word(space, w);
  return s;
}

}  // namespace

TensorSum parse_expression(const Space& space, std::string_view text) {
  TensorSum out;
  for (const auto& [t, c] : Parser(space, text, false).parse().terms()) {
    Tensor x{t.g, t.n, t.blocks.empty() ? std::vector<Word>{} : t.blocks.front()};
    out.add(x, c);
  }
  return out;
}

TensorSum parse_element(const Space& space, std::string_view text, std::optional<Variant> variant) {
  TensorSum x = parse_expression(space, text);
  if (variant) validate(*variant, x);
  return x;
}

ChainSum parse_chain(const Space& space, std::string_view text) { return Parser(space, text, true).parse(); }

std::string render(const Space& space, const TensorSum& x) {
  std::vector<std::pair<Q, std::string>> terms;
  for (const auto& [t, c] : x.terms()) {
    std::string body = prefix(t.g, t.n);
    const std::string ws = words_text(space, t.factors);
    if (!ws.empty()) body += (body.empty() ? "" : " * ") + ws;
    terms.emplace_back(c, body);
  }
  return join_terms(terms);
}

std::string render(const Space& space, const ChainSum& ch) {
  std::vector<std::pair<Q, std::string>> terms;
  for (const auto& [t, c] : ch.terms()) {
    std::string body = prefix(t.g, t.n);
    for (const auto& b : t.blocks) body += (body.empty() ? "(" : " * (") + words_text(space, b) + ")";
    terms.emplace_back(c, body);
  }
  return join_terms(terms);
}

std::string render(const Space& space, const Hamiltonian& h) {
  std::vector<std::pair<Q, std::string>> terms;
  if (h.scalar() != 0) terms.emplace_back(h.scalar(), "");
  for (const auto& [w, c] : h.terms()) terms.emplace_back(c, render_word(space, w));
  return join_terms(terms);
}

}  // namespace qme
