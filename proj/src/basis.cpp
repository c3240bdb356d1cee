#include "qme/basis.hpp"

#include <functional>

namespace qme {

namespace {

// Fredricksen-Kessler-Maiorana generation of necklaces of length n.
void necklaces(std::size_t n, std::size_t alphabet, std::vector<Word>& out) {
  Word a(n + 1, 0);
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t t, std::size_t p) {
    if (t > n) {
      if (n % p == 0) out.emplace_back(a.begin() + 1, a.end());
      return;
    }
    a[t] = a[t - p];
    gen(t + 1, p);
    for (std::size_t j = a[t - p] + 1; j < alphabet; ++j) {
      a[t] = static_cast<std::uint8_t>(j);
      gen(t + 1, t);
    }
  };
  gen(1, 1);
}

}  // namespace

WordSlice enumerate_basis(const Space& space, const WordConstraints& c) {
  std::vector<Word> out;
  for (std::size_t n = std::max<std::size_t>(c.min_len, 1); n <= c.max_len; ++n) {
    std::vector<Word> ws;
    necklaces(n, space.dim(), ws);
    for (auto& w : ws) {
      if (!normalize_word(space, w)) continue;
      if (c.parity && factor_parity(space, w) != *c.parity) continue;
      out.push_back(std::move(w));
    }
  }
  return WordSlice(std::move(out));
}

TensorSlice enumerate_basis(const Space& space, const TensorConstraints& c) {
  const auto words = enumerate_basis(space, WordConstraints{c.min_len, c.L, std::nullopt}).elements();
  std::vector<Tensor> out;
  const unsigned n_max = space.nu_parity() ? std::min(c.N, 1u) : c.N;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k_left) {
    if (idx.size() >= c.min_k || (idx.empty() && c.min_k == 0)) {
      std::vector<Word> fs;
      bool zero = false;
      for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i && idx[i] == idx[i - 1] && factor_parity(space, words[idx[i]])) zero = true;
        fs.push_back(words[idx[i]]);
      }
      if (!zero) {
        for (unsigned g = 0; g <= c.G; ++g) {
          for (unsigned n = 0; n <= n_max; ++n) {
            Tensor t{g, n, fs};
            if (c.variant && !is_member(*c.variant, t)) continue;
            if (c.order && (t.k() == 0 || filtration_order(t) != *c.order)) continue;
            if (c.parity && tensor_parity(space, t) != *c.parity) continue;
            out.push_back(std::move(t));
          }
        }
      }
    }
    if (k_left == 0) return;
    for (std::size_t i = start; i < words.size(); ++i) {
      idx.push_back(i);
      rec(i, k_left - 1);
      idx.pop_back();
    }
  };
  rec(0, c.K);
  std::sort(out.begin(), out.end(), TensorLess{});
  return TensorSlice(std::move(out));
}

}  // namespace qme

namespace qme {

namespace {

std::string describe_tensor(const Tensor& t) {
  std::string s = "g^" + std::to_string(t.g) + " v^" + std::to_string(t.n);
  for (const auto& w : t.factors) {
    s += " [";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    s += "]";
  }
  return s;
}

}  // namespace

SparseVector coordinates(const TensorSum& x, const TensorSlice& slice, bool truncate) {
  SparseVector v;
  for (const auto& [t, c] : x.terms()) {
    auto i = slice.find(t);
    if (!i) {
      if (truncate) continue;
      throw Error(ErrorKind::Range, "component outside the slice: " + describe_tensor(t));
    }
    v[*i] = c;
  }
  return v;
}

TensorSum from_coordinates(const SparseVector& v, const TensorSlice& slice) {
  TensorSum x;
  for (const auto& [i, c] : v) x.add(slice[i], c);
  return x;
}

SparseVector coordinates(const Hamiltonian& h, const WordSlice& slice, bool truncate) {
  SparseVector v;
  if (h.scalar() != 0 && !truncate) throw Error(ErrorKind::Range, "scalar component outside the word slice");
  for (const auto& [w, c] : h.terms()) {
    auto i = slice.find(w);
    if (!i) {
      if (truncate) continue;
      std::string s;
      for (auto a : w) s += std::to_string(a) + ' ';
      throw Error(ErrorKind::Range, "word outside the slice: " + s);
    }
    v[*i] = c;
  }
  return v;
}

Hamiltonian from_coordinates(const SparseVector& v, const WordSlice& slice) {
  Hamiltonian h;
  for (const auto& [i, c] : v) h.add(slice[i], c);
  return h;
}

SparseMatrix matrix_of_operator(const TensorOp& op, const TensorSlice& domain, const TensorSlice& codomain,
                                bool truncate) {
  SparseMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) m.set_column(j, coordinates(op(domain[j]), codomain, truncate));
  return m;
}

SparseMatrix matrix_of_operator(const WordOp& op, const WordSlice& domain, const WordSlice& codomain, bool truncate) {
  SparseMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j) m.set_column(j, coordinates(op(domain[j]), codomain, truncate));
  return m;
}

SparseMatrix matrix_into(const TensorOp& op, const TensorSlice& domain, TensorSlice& codomain) {
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < domain.size(); ++j) {
    SparseVector v;
    for (const auto& [t, c] : op(domain[j]).terms()) v[codomain.intern(t)] = c;
    cols.push_back(std::move(v));
  }
  SparseMatrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, std::move(cols[j]));
  return m;
}

}  // namespace qme
