#include "qme/word.hpp"

#include <algorithm>
#include <limits>

namespace qme {

int word_parity(const Space& space, std::span<const std::uint8_t> letters) {
  int p = 0;
  for (auto a : letters) p ^= space.parity(a);
  return p;
}

int factor_parity(const Space& space, const Word& w) { return word_parity(space, w) ^ space.shift(); }

int rotation_sign(const Space& space, std::span<const std::uint8_t> letters, std::size_t k) {
  const int head = word_parity(space, letters.first(k));
  const int tail = word_parity(space, letters.subspan(k));
  return sign_of(head * tail);
}

std::optional<SignedWord> normalize_word(const Space& space, std::span<const std::uint8_t> letters) {
  for (auto a : letters)
    if (a >= space.dim()) throw Error(ErrorKind::Config, "invalid generator index " + std::to_string(a));
  const std::size_t n = letters.size();
  if (n == 0) return SignedWord{};
  Word rot(n);
  std::optional<SignedWord> best;
  for (std::size_t k = 0; k < n; ++k) {
    std::rotate_copy(letters.begin(), letters.begin() + k, letters.end(), rot.begin());
    const int s = rotation_sign(space, letters, k);
    if (k > 0 && std::equal(rot.begin(), rot.end(), letters.begin())) {
      if (s < 0) return std::nullopt;
      continue;
    }
    if (!best || rot < best->word) best = SignedWord{rot, s};
  }
  return best;
}

bool is_canonical(const Space& space, const Word& w) {
  auto n = normalize_word(space, w);
  return n && n->word == w && n->sign == 1;
}

std::string render_word(const Space& space, const Word& w) {
  std::string s = "w[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += space.generator(w[i]).name;
  }
  return s + "]";
}

Hamiltonian Hamiltonian::word(const Word& w, const Q& c) {
  Hamiltonian h;
  if (w.empty()) h.add_scalar(c);
  else h.add(w, c);
  return h;
}

void Hamiltonian::add(const Word& canonical, const Q& c) {
  if (c == 0) return;
  if (canonical.empty()) {
    scalar_ += c;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(canonical, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Hamiltonian::add_sequence(const Space& space, std::span<const std::uint8_t> letters, const Q& c) {
  auto n = normalize_word(space, letters);
  if (!n) return;
  add(n->word, n->sign * c);
}

void Hamiltonian::add(const Hamiltonian& other, const Q& c) {
  for (const auto& [w, v] : other.terms_) add(w, c * v);
  scalar_ += c * other.scalar_;
}

std::size_t Hamiltonian::max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

std::size_t Hamiltonian::min_length() const {
  if (scalar_ != 0) return 0;
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

bool Hamiltonian::in_h_geq(std::size_t i) const {
  return scalar_ == 0 && (terms_.empty() || terms_.begin()->first.size() >= i);
}

Hamiltonian Hamiltonian::truncated(std::size_t max_len) const {
  Hamiltonian h;
  h.scalar_ = scalar_;
  for (const auto& [w, v] : terms_)
    if (w.size() <= max_len) h.terms_.emplace(w, v);
  return h;
}

Hamiltonian Hamiltonian::scaled(const Q& c) const {
  Hamiltonian h;
  h.add(*this, c);
  return h;
}

Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b) {
  Hamiltonian h = a;
  h.add(b);
  return h;
}

Hamiltonian operator-(const Hamiltonian& a, const Hamiltonian& b) {
  Hamiltonian h = a;
  h.add(b, -1);
  return h;
}

}  // namespace qme
