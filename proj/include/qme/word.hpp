#pragma once

#include "qme/space.hpp"

#include <utility>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qme {

// A cyclic word, stored as its canonical rotation.  The empty word appears
// only transiently (cobracket legs, brackets of letters).
using Word = std::vector<std::uint8_t>;

// Order on canonical words: by length, then lexicographically.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

int word_parity(const Space& space, std::span<const std::uint8_t> letters);
// Parity of a word as an element of the (shifted) symmetric algebra.
int factor_parity(const Space& space, const Word& w);

// Koszul sign of moving the first k letters to the end.
int rotation_sign(const Space& space, std::span<const std::uint8_t> letters, std::size_t k);

struct SignedWord {
  Word word;
  int sign = 1;
};

// Canonical rotation and the sign relating the input to it; nullopt when some
// rotation maps the word to minus itself.
std::optional<SignedWord> normalize_word(const Space& space, std::span<const std::uint8_t> letters);
bool is_canonical(const Space& space, const Word& w);

std::string render_word(const Space& space, const Word& w);

// Finite rational combination of cyclic words plus a scalar (length-0) part.
class Hamiltonian {
public:
  using Terms = std::map<Word, Q, WordLess>;

  Hamiltonian() = default;
  static Hamiltonian word(const Word& w, const Q& c = 1);

  // Adds c times the normalization of an arbitrary letter sequence.
  void add_sequence(const Space& space, std::span<const std::uint8_t> letters, const Q& c);
  void add(const Word& canonical, const Q& c);
  void add(const Hamiltonian& other, const Q& c = 1);
  void add_scalar(const Q& c) { scalar_ += c; }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  const Q& scalar() const { return scalar_; }
  bool is_zero() const { return terms_.empty() && scalar_ == 0; }
  std::size_t max_length() const;
  std::size_t min_length() const;
  bool in_h_geq(std::size_t i) const;
  Hamiltonian truncated(std::size_t max_len) const;
  Hamiltonian scaled(const Q& c) const;

  bool operator==(const Hamiltonian& o) const { return terms_ == o.terms_ && scalar_ == o.scalar_; }

private:
  Terms terms_;
  Q scalar_ = 0;
};

Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b);
Hamiltonian operator-(const Hamiltonian& a, const Hamiltonian& b);

}  // namespace qme
