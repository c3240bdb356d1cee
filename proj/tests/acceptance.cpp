// One line per acceptance criterion; exit status 0 iff all pass.

#include "oracles/oracles.hpp"

#include "qme/expression.hpp"
#include "qme/maurer_cartan.hpp"
#include "qme/obstruction.hpp"
#include "qme/one_dim.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using namespace qme;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Space odd2() { return Space({{"x", 0}, {"xi", 1}}, {{0, 1}, {-1, 0}}, 1); }
Space even2() { return Space({{"a", 1}, {"b", 1}}, {{1, 0}, {0, 1}}, 0); }
Space even2ev() { return Space({{"p", 0}, {"q", 0}}, {{0, 1}, {-1, 0}}, 0); }

Q dot(const TensorSum& a, const TensorSum& b) {
  Q s = 0;
  for (const auto& [t, c] : a.terms()) {
    auto it = b.terms().find(t);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

Q small_q(std::mt19937_64& rng) { return make_q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)); }

Verdict axioms() {
  Verdict v;
  for (const auto& s : {odd2(), even2()}) {
    const AxiomReport r = check_bialgebra_axioms(s, 5, 100, 1);
    for (const auto& a : r.results) {
      if (!a.pass) v.fail(a.name + ": " + a.witness);
      if (a.checked == 0) v.fail(a.name + " checked nothing");
    }
    std::size_t checked = 0;
    for (const auto& a : r.results) checked += a.checked;
    if (v.pass) v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(r.results.size()) + " axioms, " +
                            std::to_string(checked) + " instances";
  }
  return v;
}

Verdict d_squared() {
  Verdict v;
  std::size_t n = 0;
  for (const auto& s : {odd2(), even2()}) {
    const auto basis =
        enumerate_basis(s, TensorConstraints{4, 2, 2, 2, 1, 1, Variant::LambdaGammaNu, std::nullopt, std::nullopt});
    for (const auto& t : basis.elements()) {
      const TensorSum x = TensorSum::single(t);
      const std::string at = render(s, x);
      if (!differential(s, Variant::LambdaGammaNu, differential(s, Variant::LambdaGammaNu, x)).is_zero())
        v.fail("d^2 != 0 on " + at);
      if (!ce_delta(s, ce_delta(s, x)).is_zero()) v.fail("delta^2 != 0 on " + at);
      if (!extend_cobracket(s, extend_cobracket(s, x)).is_zero()) v.fail("Delta^2 != 0 on " + at);
      if (!(ce_delta(s, extend_cobracket(s, x)) + extend_cobracket(s, ce_delta(s, x))).is_zero())
        v.fail("delta Delta + Delta delta != 0 on " + at);
      ++n;
    }
    // coderivation: words of length >= 2 without gamma or nu
    const auto plain = enumerate_basis(s, TensorConstraints{4, 2, 0, 0, 2, 1, std::nullopt, std::nullopt, std::nullopt});
    for (const auto& t : plain.elements()) {
      const TensorSum x = TensorSum::single(t);
      PairSum lhs;
      for (const auto& [tt, c] : ce_delta(s, x).terms())
        for (const auto& [p, w] : coproduct(s, TensorSum::single(tt))) add_pair(lhs, p, c * w);
      if (!(lhs == delta_on_pairs(s, coproduct(s, x)))) v.fail("coderivation fails on " + render(s, x));
      ++n;
    }
  }
  if (v.pass) v.detail = std::to_string(n) + " basis elements on two 2-generator spaces";
  return v;
}

Verdict filtration() {
  Verdict v;
  const Space s = odd2();
  const auto basis =
      enumerate_basis(s, TensorConstraints{4, 2, 2, 2, 1, 1, Variant::LambdaGammaNu, std::nullopt, std::nullopt});
  std::size_t pairs = 0;
  for (const auto& a : basis.elements()) {
    const std::size_t p = filtration_order(a);
    const TensorSum xa = TensorSum::single(a);
    for (const auto& [t, c] : differential(s, Variant::LambdaGammaNu, xa).terms())
      if (filtration_order(t) < p + 1) v.fail("d leaves F_{p+1} on " + render(s, xa));
    for (const auto& b : basis.elements()) {
      const std::size_t q = filtration_order(b);
      for (const auto& [t, c] : lambda_bracket(s, Variant::LambdaGammaNu, xa, TensorSum::single(b)).terms())
        if (filtration_order(t) < p + q) v.fail("[F_p, F_q] leaves F_{p+q} at " + render(s, xa));
      ++pairs;
    }
  }
  if (v.pass) v.detail = std::to_string(basis.size()) + " basis elements, " + std::to_string(pairs) + " pairs";
  return v;
}

Verdict golden() {
  Verdict v;
  const Space s = one_dim_space();
  for (std::size_t n = 1; n <= 5; ++n) {
    const TensorSum d = extend_cobracket(s, TensorSum::single(Tensor{0, 0, {t_power(2 * n + 1)}}));
    const TensorSum want = TensorSum::single(Tensor{0, 1, {t_power(2 * n - 1)}}, static_cast<long>(2 * n + 1));
    if (!(d == want)) v.fail("Delta(t^" + std::to_string(2 * n + 1) + ") = " + render(s, d));
  }
  for (std::size_t k = 1; k <= 4; ++k)
    if (normalize_word(s, t_power(2 * k))) v.fail("t^" + std::to_string(2 * k) + " does not vanish");
  std::size_t pairs = 0;
  for (std::size_t a = 1; a <= 9; ++a)
    for (std::size_t b = 1; b <= 9; ++b) {
      const Hamiltonian br = bracket(s, t_power(a), t_power(b));
      ++pairs;
      if (!br.terms().empty()) v.fail("{t^" + std::to_string(a) + ", t^" + std::to_string(b) + "} = " + render(s, br));
      // the only constant is the pairing {t,t} = 1
      const Q want = (a == 1 && b == 1) ? 1 : 0;
      if (br.scalar() != want) v.fail("unexpected constant in {t^" + std::to_string(a) + ", t^" + std::to_string(b) + "}");
    }
  if (v.pass) v.detail = "Delta(t^3..t^11), t^2..t^8 = 0, " + std::to_string(pairs) + " bracket pairs zero mod constants";
  return v;
}

Verdict hochschild() {
  Verdict v;
  const Space s = one_dim_space();
  const Hamiltonian h = Hamiltonian::word(t_power(3));
  const auto words = enumerate_basis(s, WordConstraints{1, 7, std::nullopt});
  std::size_t nonzero = 0;
  for (const auto& w : words.elements())
    if (!hochschild_differential(s, h, Hamiltonian::word(w)).is_zero()) ++nonzero;
  if (nonzero) v.fail("ad(t^3) has " + std::to_string(nonzero) + " nonzero columns");
  const auto hc = hochschild_cohomology(s, h, WordConstraints{1, 7, std::nullopt});
  std::set<std::size_t> lengths;
  for (const auto& r : hc.representatives) {
    if (r.terms().size() != 1 || r.scalar() != 0) v.fail("representative is not a single power: " + render(s, r));
    else lengths.insert(r.terms().begin()->first.size());
  }
  if (lengths != std::set<std::size_t>{1, 3, 5, 7} || hc.representatives.size() != 4)
    v.fail("cohomology basis has " + std::to_string(hc.representatives.size()) + " elements");
  if (v.pass) v.detail = "ad(t^3) = 0 on " + std::to_string(words.size()) + " words; basis {t, t^3, t^5, t^7}";
  return v;
}

Verdict dichotomy() {
  Verdict v;
  const Space s = one_dim_space();
  const Profile p{7, 3, 3, 2, 6};
  const Hamiltonian h = Hamiltonian::word(t_power(3));
  const LiftResult bad = lift(s, h, 6, Variant::LambdaGammaNu, p);
  if (bad.success || !bad.failure) {
    v.fail("lift in Lambda_{gamma,nu} succeeded");
  } else {
    const ObstructionReport& r = *bad.failure;
    if (r.level != 1) v.fail("failure at level " + std::to_string(r.level));
    if (!(r.cocycle == parse_expression(s, "3 * v^1 * w[t]"))) v.fail("o_1 = " + render(s, r.cocycle));
    if (r.class_vanishes) v.fail("class reported as vanishing");
    if (dot(r.certificate, r.cocycle) == 0) v.fail("certificate does not detect o_1");
    const auto domain = enumerate_basis(
        s, TensorConstraints{p.L, p.K, p.G, p.N, 1, 1, Variant::LambdaGammaNu, std::size_t{1}, kCandidateParity});
    for (const auto& f : domain.elements())
      if (dot(r.certificate, lambda_bracket(s, Variant::LambdaGammaNu, TensorSum::single(f), embed(h))) != 0)
        v.fail("certificate does not annihilate [f, h] for f = " + render(s, TensorSum::single(f)));
  }
  const LiftResult ok = lift(s, h, 6, Variant::LambdaGamma, p);
  if (!ok.success) v.fail("lift in Lambda_gamma failed");
  else if (!ok.residual.is_zero() && min_filtration_order(ok.residual) < 7)
    v.fail("residual not in F_7: " + render(s, ok.residual));
  if (v.pass) v.detail = "lgv: o_1 = " + render(s, bad.failure->cocycle) + " certified; lg: order 6, residual " +
                         (ok.residual.is_zero() ? std::string("0") : "in F_" + std::to_string(min_filtration_order(ok.residual)));
  return v;
}

Verdict general_solutions() {
  Verdict v;
  const Profile p{7, 3, 2, 1, 6};
  const Space s = one_dim_space();
  std::size_t n = 0;
  for (std::uint64_t seed = 1; seed <= 24; ++seed) {
    const GeneralSample g = general_solution_sample(random_assignment(seed, p), p);
    if (g.element.is_zero()) continue;
    ++n;
    if (!mc_residual(s, Variant::LambdaGamma, g.element, p).is_zero()) v.fail("not MC: " + render(s, g.element));
    const ChainSum ch = char_class(s, Variant::LambdaGamma, g.element, p);
    const ChainSum d = chain_truncate(chain_max_blocks(chain_delta(s, Variant::LambdaGamma, ch), p.K - 1), p);
    if (!d.is_zero()) v.fail("delta_CE ch != 0 for " + render(s, g.element));
  }
  if (n < 20) v.fail("only " + std::to_string(n) + " nonzero samples");
  if (v.pass) v.detail = std::to_string(n) + " seeded assignments";
  return v;
}

std::vector<TensorSum> mc_words(const Space& s, const Profile& p) {
  std::vector<TensorSum> out;
  for (const auto& w : enumerate_basis(s, WordConstraints{2, 3, kCandidateParity}).elements()) {
    const TensorSum x = TensorSum::single(Tensor{0, 0, {w}});
    if (mc_residual(s, Variant::LambdaGammaNu, x, p).is_zero()) out.push_back(x);
  }
  return out;
}

TensorSum random_odd(const Space& s, std::mt19937_64& rng, std::size_t L) {
  const auto basis =
      enumerate_basis(s, TensorConstraints{L, 2, 1, 1, 1, 1, Variant::LambdaGammaNu, std::nullopt, kGaugeParity});
  std::vector<Tensor> pool;
  for (const auto& t : basis.elements())
    if (filtration_order(t) >= 1) pool.push_back(t);
  TensorSum y;
  for (int i = 0; i < 2 && !pool.empty(); ++i) y.add(pool[rng() % pool.size()], small_q(rng));
  return y;
}

Verdict gauge() {
  Verdict v;
  std::size_t one_d = 0, two_d = 0;
  std::mt19937_64 rng(11);
  auto run = [&](const Space& s, const TensorSum& y, const TensorSum& x, const Profile& p, std::size_t& count) {
    const HomotopyReport r = homotopy_check(s, Variant::LambdaGammaNu, y, x, p, 6, rng());
    if (!r.pass()) v.fail(r.witness);
    ++count;
  };
  {
    const Space s = one_dim_space();
    const Profile p{5, 3, 1, 1, 4};
    const auto basis =
        enumerate_basis(s, TensorConstraints{7, 2, 1, 1, 1, 1, Variant::LambdaGammaNu, std::nullopt, kGaugeParity});
    for (int i = 0; i < 8; ++i) {
      TensorSum y;
      for (int k = 0; k < 2; ++k) y.add(basis[rng() % basis.size()], small_q(rng));
      run(s, y, TensorSum{}, p, one_d);
    }
  }
  {
    const Space s = odd2();
    const Profile p{3, 3, 1, 1, 3};
    std::vector<TensorSum> xs = mc_words(s, p);
    const LiftResult l = lift(s, Hamiltonian::word(Word{0, 0}), 3, Variant::LambdaGammaNu, p);
    if (l.success) xs.push_back(l.state.total());
    for (int i = 0; i < 12 && !xs.empty(); ++i) run(s, random_odd(s, rng, 3), xs[i % xs.size()], p, two_d);
  }
  {
    // no single word is MC in Lambda_{gamma,nu} on the even 2-d space
    const Space s = even2();
    for (int i = 0; i < 4; ++i) run(s, random_odd(s, rng, 3), TensorSum{}, Profile{3, 3, 1, 1, 3}, two_d);
  }
  if (one_d + two_d < 20) v.fail("only " + std::to_string(one_d + two_d) + " instances");
  if (v.pass) v.detail = std::to_string(one_d) + " 1-d and " + std::to_string(two_d) + " 2-d instances";
  return v;
}

Verdict kunneth() {
  Verdict v;
  const Profile p{5, 2, 1, 1, 6};
  std::size_t cells = 0;
  const auto check = [&](const Space& s, const Hamiltonian& h, const std::string& name) {
    const KunnethReport r = kunneth_check(s, h, p);
    for (const auto& c : r.cells)
      if (c.direct != c.predicted)
        v.fail(name + ": order " + std::to_string(c.order) + " parity " + std::to_string(c.parity) + " direct " +
               std::to_string(c.direct) + " predicted " + std::to_string(c.predicted));
    if (!r.agree) v.fail(name + " disagrees");
    cells += r.cells.size();
  };
  check(one_dim_space(), Hamiltonian::word(t_power(3)), "1-d t^3");
  check(odd2(), Hamiltonian::word(Word{0, 0}), "odd 2-d [x x]");
  check(odd2(), Hamiltonian{}, "odd 2-d h = 0");
  if (v.pass) v.detail = std::to_string(cells) + " (order, parity) cells over 1-d and two 2-d instances";
  return v;
}

Verdict oracles() {
  Verdict v;
  std::mt19937_64 rng(99);
  std::size_t matrices = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    oracle::Dense d(rows, std::vector<Q>(cols, 0));
    const int density = 1 + static_cast<int>(rng() % 3);
    for (auto& row : d)
      for (auto& x : row)
        if (static_cast<int>(rng() % 4) < density) x = small_q(rng);
    if (rows > 1 && rng() % 2) d[rows - 1] = d[0];
    std::vector<Q> b(rows);
    SparseVector sb;
    for (std::size_t i = 0; i < rows; ++i) {
      b[i] = rng() % 3 ? small_q(rng) : Q(0);
      if (b[i] != 0) sb[i] = b[i];
    }
    const SolveResult r = solve_and_kernel(SparseMatrix::from_dense(d, cols), sb);
    const oracle::DenseResult o = oracle::dense_solve(d, b);
    if (r.rank != o.rank || r.kernel.size() != o.nullity || r.solvable != o.solvable)
      v.fail("solver disagrees on matrix " + std::to_string(trial));
    if (r.solvable) {
      std::vector<Q> x(cols, 0);
      for (const auto& [i, c] : r.solution) x[i] = c;
      if (oracle::dense_apply(d, x) != b) v.fail("wrong solution on matrix " + std::to_string(trial));
    } else {
      std::vector<Q> y(rows, 0);
      for (const auto& [i, c] : r.certificate) y[i] = c;
      Q yb = 0;
      for (std::size_t i = 0; i < rows; ++i) yb += y[i] * b[i];
      if (oracle::dense_left_apply(y, d) != std::vector<Q>(cols, 0) || yb != 1)
        v.fail("bad certificate on matrix " + std::to_string(trial));
    }
    ++matrices;
  }
  std::size_t pairs = 0;
  for (const auto& s : {odd2(), even2(), even2ev(), one_dim_space()}) {
    const auto words = enumerate_basis(s, WordConstraints{1, 3, std::nullopt}).elements();
    for (const auto& a : words) {
      oracle::PairMap cob;
      for (const auto& [pr, c] : cobracket(s, a).terms()) cob[{pr.first, pr.second}] = c;
      if (cob != oracle::cobracket(s, a)) v.fail("cobracket differs on " + render_word(s, a));
      for (const auto& b : words) {
        const Hamiltonian h = bracket(s, a, b);
        oracle::WordMap m;
        if (h.scalar() != 0) m[{}] = h.scalar();
        for (const auto& [w, c] : h.terms()) m[w] = c;
        if (m != oracle::bracket(s, a, b)) v.fail("bracket differs on " + render_word(s, a) + ", " + render_word(s, b));
        ++pairs;
      }
    }
  }
  if (v.pass) v.detail = std::to_string(matrices) + " matrices, " + std::to_string(pairs) + " word pairs";
  return v;
}

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run_cli(const std::vector<std::string>& args) {
  std::string cmd = quote(QME_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::set<std::string> kElementKeys{"residual", "cocycle", "solution", "certificate", "components",
                                         "bracket",  "cobracket", "differential", "result", "residual_before",
                                         "residual_after", "particular", "parameter_basis", "deficit"};

void reparse(const Space& s, const nlohmann::ordered_json& j, Verdict& v, std::size_t& count) {
  if (j.is_object()) {
    for (const auto& [k, x] : j.items()) {
      if (kElementKeys.count(k)) {
        const auto check = [&](const nlohmann::ordered_json& e) {
          const std::string text = e.get<std::string>();
          if (render(s, parse_expression(s, text)) != text) v.fail("'" + text + "' does not re-render identically");
          ++count;
        };
        if (x.is_array())
          for (const auto& e : x) check(e);
        else if (x.is_string())
          check(x);
      } else {
        reparse(s, x, v, count);
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) reparse(s, x, v, count);
  }
}

Verdict cli() {
  Verdict v;
  const Space s = Space::from_file(std::string(QME_DATA_DIR) + "/1d.json");
  const std::string space = std::string(QME_DATA_DIR) + "/1d.json";
  struct Case {
    std::vector<std::string> args;
    int code;
    std::string needle;
  };
  const std::vector<Case> cases{
      {{"lift", "--space", space, "--variant", "lg", "--order", "6", "1 * w[t,t,t]"}, 0, "\"success\": true"},
      {{"lift", "--space", space, "--variant", "lgv", "--order", "6", "1 * w[t,t,t]"}, 1, "3 * v^1 * w[t]"},
      {{"mc-check", "--space", space, "0"}, 0, "\"residual\": \"0\""},
  };
  std::size_t elements = 0;
  for (const auto& c : cases) {
    std::vector<std::string> args = c.args;
    args.insert(args.end(), {"--format", "json"});
    const Run a = run_cli(args);
    const Run b = run_cli(args);
    const std::string name = c.args[0] + " " + c.args[4 < c.args.size() ? 4 : 0];
    if (a.code != c.code) v.fail(name + ": exit " + std::to_string(a.code) + ", expected " + std::to_string(c.code));
    if (a.out != b.out) v.fail(name + ": reruns differ");
    if (a.out.find(c.needle) == std::string::npos) v.fail(name + ": output lacks " + c.needle);
    try {
      const auto j = nlohmann::ordered_json::parse(a.out);
      if (j.dump(2) + "\n" != a.out) v.fail(name + ": JSON does not round-trip byte for byte");
      reparse(s, j.at("outputs"), v, elements);
      if (j.at("pass").get<bool>() != (c.code == 0)) v.fail(name + ": pass flag disagrees with exit code");
    } catch (const std::exception& e) {
      v.fail(name + ": " + e.what());
    }
    args.back() = "text";
    if (run_cli(args).code != c.code) v.fail(name + ": text mode exit code differs");
  }
  if (run_cli({"mc-check", "--space", space, "1 * w[t,"}).code != 2) v.fail("parse error does not exit 2");
  if (v.pass) v.detail = "3 invocations, " + std::to_string(elements) + " rendered elements re-parsed";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {"bialgebra axiom suite", axioms, 120},
      {"d^2 = 0 and companion identities", d_squared, 300},
      {"filtration laws", filtration, 0},
      {"one-dimensional golden values", golden, 0},
      {"one-dimensional Hochschild cohomology", hochschild, 0},
      {"obstruction dichotomy", dichotomy, 120},
      {"general-solution family", general_solutions, 0},
      {"gauge and homotopy identities", gauge, 0},
      {"Kunneth cross-check", kunneth, 0},
      {"oracle equivalence", oracles, 0},
      {"CLI contract", cli, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) v.fail("took " + std::to_string(secs) + " s");
    all = all && v.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (v.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << v.detail << ", " << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
