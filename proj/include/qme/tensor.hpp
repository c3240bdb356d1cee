#pragma once

#include "qme/word.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qme {

// gamma^g nu^n times a Koszul-sorted multiset of nonempty canonical words.
struct Tensor {
  unsigned g = 0;
  unsigned n = 0;
  std::vector<Word> factors;

  std::size_t k() const { return factors.size(); }
  bool operator==(const Tensor& o) const { return g == o.g && n == o.n && factors == o.factors; }
};

struct TensorLess {
  bool operator()(const Tensor& a, const Tensor& b) const;
};

struct Orders {
  std::size_t definition = 0;  // g + n + total length
  std::size_t filtration = 0;  // 2g + n + k - 1
};

Orders orders(const Tensor& t);
inline std::size_t filtration_order(const Tensor& t) { return orders(t).filtration; }
int tensor_parity(const Space& space, const Tensor& t);

struct SignedTensor {
  Tensor tensor;
  int sign = 1;
};

// Canonicalizes each word, turns empty words into nu, Koszul-sorts the
// factors.  nullopt when the product vanishes.
std::optional<SignedTensor> normalize_tensor(const Space& space, unsigned g, unsigned n, std::vector<Word> words);

class TensorSum {
public:
  using Terms = std::map<Tensor, Q, TensorLess>;

  TensorSum() = default;
  static TensorSum single(const Tensor& t, const Q& c = 1);

  void add(const Tensor& t, const Q& c);
  void add(const TensorSum& other, const Q& c = 1);
  // Normalizes and adds; products without word factors (pure gamma/nu
  // scalars) are dropped unless keep_scalars is set.
  void add_normalized(const Space& space, unsigned g, unsigned n, std::vector<Word> words, const Q& c,
                      bool keep_scalars = false);

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  TensorSum scaled(const Q& c) const;
  bool operator==(const TensorSum& o) const { return terms_ == o.terms_; }

private:
  Terms terms_;
};

TensorSum operator+(const TensorSum& a, const TensorSum& b);
TensorSum operator-(const TensorSum& a, const TensorSum& b);

// Graded-commutative product in S(h)[gamma,nu].
TensorSum product(const Space& space, const TensorSum& a, const TensorSum& b, bool keep_scalars = false);

// Single-word tensors of the words of h; the scalar part is dropped.
TensorSum embed(const Hamiltonian& h);
// Inverse of embed on single-factor gamma-free nu-free tensors.
Hamiltonian to_hamiltonian(const TensorSum& x);

}  // namespace qme
