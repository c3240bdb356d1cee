#include "qme/space.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qme {

Q parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
  bool slash = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (slash || i == start || i + 1 == s.size())
        throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
      slash = true;
    } else if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  Q q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::optional<std::vector<std::vector<Q>>> invert(const std::vector<std::vector<Q>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    Q inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Q f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Q>> out(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

Space::Space(std::vector<Generator> generators, std::vector<std::vector<Q>> form, int form_parity)
    : generators_(std::move(generators)), form_(std::move(form)), form_parity_(form_parity) {
  const std::size_t n = generators_.size();
  if (n == 0) throw Error(ErrorKind::Config, "space has no generators");
  if (n > 255) throw Error(ErrorKind::Config, "at most 255 generators are supported");
  if (form_parity_ != 0 && form_parity_ != 1) throw Error(ErrorKind::Config, "form_parity must be 0 or 1");
  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.parity != 0 && g.parity != 1)
      throw Error(ErrorKind::Config, "generator '" + g.name + "' has parity outside {0,1}");
    if (g.name.empty()) throw Error(ErrorKind::Config, "generator with empty name");
    for (char ch : g.name)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw Error(ErrorKind::Config, "generator name '" + g.name + "' is not an identifier");
    if (!names.insert(g.name).second) throw Error(ErrorKind::Config, "duplicate generator '" + g.name + "'");
  }
  if (form_.size() != n) throw Error(ErrorKind::Config, "form matrix has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (form_[i].size() != n) throw Error(ErrorKind::Config, "form matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const int pi = generators_[i].parity, pj = generators_[j].parity;
      if (form_[i][j] != 0 && ((pi + pj) & 1) != form_parity_) {
        std::ostringstream os;
        os << "form entry (" << i << "," << j << ") pairs generators of inconsistent parity";
        throw Error(ErrorKind::Config, os.str());
      }
      if (form_[i][j] != -sign_of(pi * pj) * form_[j][i]) {
        std::ostringstream os;
        os << "form is not graded skew-symmetric at (" << i << "," << j << ")";
        throw Error(ErrorKind::Config, os.str());
      }
    }
  }
  auto inv = invert(form_);
  if (!inv) throw Error(ErrorKind::Config, "form matrix is singular");
  dual_ = std::move(*inv);
}

std::optional<std::uint8_t> Space::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<std::uint8_t>(i);
  return std::nullopt;
}

bool Space::operator==(const Space& other) const {
  if (form_parity_ != other.form_parity_ || generators_.size() != other.generators_.size()) return false;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name != other.generators_[i].name || generators_[i].parity != other.generators_[i].parity)
      return false;
  return form_ == other.form_;
}

Space Space::from_json(const nlohmann::json& doc) {
  try {
    std::vector<Generator> gens;
    for (const auto& g : doc.at("generators")) gens.push_back({g.at("name").get<std::string>(), g.at("parity").get<int>()});
    std::vector<std::vector<Q>> form;
    for (const auto& row : doc.at("form")) {
      std::vector<Q> r;
      for (const auto& e : row) {
        if (e.is_string()) r.push_back(parse_rational(e.get<std::string>()));
        else if (e.is_number_integer()) r.emplace_back(e.get<long>());
        else throw Error(ErrorKind::Config, "form entries must be rational strings or integers");
      }
      form.push_back(std::move(r));
    }
    return Space(std::move(gens), std::move(form), doc.at("form_parity").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, std::string("malformed space document: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Config, e.what());
    throw;
  }
}

Space Space::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Config, "cannot open space file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, "space file '" + path + "' is not valid JSON: " + e.what());
  }
  return from_json(doc);
}

nlohmann::json Space::to_json() const {
  nlohmann::json doc;
  doc["generators"] = nlohmann::json::array();
  for (const auto& g : generators_) doc["generators"].push_back({{"name", g.name}, {"parity", g.parity}});
  doc["form"] = nlohmann::json::array();
  for (const auto& row : form_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    doc["form"].push_back(r);
  }
  doc["form_parity"] = form_parity_;
  return doc;
}

Q dual_pairing(const Space& space, std::size_t i, std::size_t j) {
  if (i >= space.dim() || j >= space.dim()) throw Error(ErrorKind::Usage, "generator index out of range");
  return space.dual(i, j);
}

}  // namespace qme
