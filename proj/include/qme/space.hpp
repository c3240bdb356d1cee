#pragma once

#include "qme/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qme {

struct Generator {
  std::string name;
  int parity = 0;
};

// A Z/2-graded space V with a nondegenerate bilinear form.  Letters of words
// are indices into the generator list.
class Space {
public:
  Space(std::vector<Generator> generators, std::vector<std::vector<Q>> form, int form_parity);

  static Space from_json(const nlohmann::json& doc);
  static Space from_file(const std::string& path);
  nlohmann::json to_json() const;

  std::size_t dim() const { return generators_.size(); }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  int parity(std::uint8_t letter) const { return generators_[letter].parity; }
  std::optional<std::uint8_t> index_of(const std::string& name) const;

  int form_parity() const { return form_parity_; }
  // Parity shift between word parity and the grading used in symmetric
  // algebras: 0 for odd forms, 1 for even forms.  The parameter nu has this
  // parity.
  int shift() const { return (1 + form_parity_) & 1; }
  int nu_parity() const { return shift(); }

  const Q& form(std::size_t i, std::size_t j) const { return form_[i][j]; }
  const Q& dual(std::size_t i, std::size_t j) const { return dual_[i][j]; }

  bool operator==(const Space& other) const;

private:
  std::vector<Generator> generators_;
  std::vector<std::vector<Q>> form_;
  std::vector<std::vector<Q>> dual_;
  int form_parity_;
};

// Dual pairing on V*: entry (i,j) of the inverse form matrix.
Q dual_pairing(const Space& space, std::size_t i, std::size_t j);

// Inverse of a square rational matrix, or nullopt when singular.
std::optional<std::vector<std::vector<Q>>> invert(const std::vector<std::vector<Q>>& m);

}  // namespace qme
