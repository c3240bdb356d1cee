#include "qme/report.hpp"

#include "qme/expression.hpp"
#include "qme/obstruction.hpp"
#include "qme/one_dim.hpp"

#include <sstream>

namespace qme {

namespace {

const std::string& arg(const Request& req, std::size_t i) {
  if (i >= req.args.size())
    throw Error(ErrorKind::Usage, req.command + " expects " + std::to_string(i + 1) + " element argument(s)");
  return req.args[i];
}

void expect_args(const Request& req, std::size_t n) {
  if (req.args.size() != n)
    throw Error(ErrorKind::Usage, req.command + " expects " + std::to_string(n) + " element argument(s), got " +
                                      std::to_string(req.args.size()));
}

const Space& need(const Space* s) {
  if (!s) throw Error(ErrorKind::Config, "this command needs --space");
  return *s;
}

Hamiltonian parse_hamiltonian(const Space& space, const std::string& text) {
  return to_hamiltonian(parse_expression(space, text));
}

Json cells_json(const std::vector<CohomologyCell>& cells) {
  Json a = Json::array();
  for (const auto& c : cells)
    a.push_back({{"length", c.length}, {"parity", c.parity}, {"kernel", c.dim_kernel}, {"image", c.dim_image},
                 {"cohomology", c.dim_cohomology}});
  return a;
}

Json obstruction_json(const Space& space, const ObstructionReport& r) {
  Json j{{"level", r.level},
         {"cocycle", render(space, r.cocycle)},
         {"is_cocycle", r.is_cocycle},
         {"class_vanishes", r.class_vanishes},
         {"domain_dim", r.domain_dim}};
  if (r.class_vanishes) j["solution"] = render(space, r.solution);
  else j["certificate"] = render(space, r.certificate);
  return j;
}

Json components_json(const Space& space, const MCState& s) {
  Json a = Json::array();
  for (const auto& c : s.components) a.push_back(render(space, c));
  return a;
}

MCState state_at(const Space& space, const Hamiltonian& h, std::size_t level, Variant v, const Profile& p,
                 Json& out, bool& reached) {
  const LiftResult l = lift(space, h, level, v, p);
  reached = l.success;
  if (!l.success) out["failure"] = obstruction_json(space, *l.failure);
  return l.state;
}

}  // namespace

Outcome run_command(const Space* sp, const Request& req) {
  Outcome o;
  Json& r = o.report;
  const std::string& cmd = req.command;
  const Profile& p = req.profile;
  r["command"] = cmd;
  Json inputs{{"variant", variant_name(req.variant)}, {"trunc", render_profile(p)}, {"seed", req.seed}};
  if (req.order) inputs["order"] = *req.order;
  inputs["args"] = req.args;
  r["inputs"] = inputs;
  Json out = Json::object();

  if (cmd == "axioms") {
    expect_args(req, 0);
    const AxiomReport a = check_bialgebra_axioms(need(sp), p.L, 100, req.seed);
    Json checks = Json::array();
    for (const auto& x : a.results) {
      Json c{{"name", x.name}, {"pass", x.pass}, {"checked", x.checked}};
      if (!x.witness.empty()) c["witness"] = x.witness;
      checks.push_back(c);
    }
    out["checks"] = checks;
    o.pass = a.pass;
  } else if (cmd == "bracket") {
    expect_args(req, 2);
    const Space& space = need(sp);
    const TensorSum a = parse_element(space, arg(req, 0), req.variant);
    const TensorSum b = parse_element(space, arg(req, 1), req.variant);
    out["bracket"] = render(space, truncate(lambda_bracket(space, req.variant, a, b), p));
  } else if (cmd == "cobracket") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const TensorSum a = parse_expression(space, arg(req, 0));
    out["cobracket"] = render(space, truncate(extend_cobracket(space, a, true), p));
  } else if (cmd == "diff") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const TensorSum a = parse_element(space, arg(req, 0), req.variant);
    out["differential"] = render(space, truncate(differential(space, req.variant, a), p));
  } else if (cmd == "mc-check") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const TensorSum x = parse_element(space, arg(req, 0), req.variant);
    const TensorSum res = mc_residual(space, req.variant, x, p);
    out["residual"] = render(space, res);
    o.pass = res.is_zero();
  } else if (cmd == "gauge") {
    expect_args(req, 2);
    const Space& space = need(sp);
    const TensorSum y = parse_element(space, arg(req, 0), req.variant);
    const TensorSum x = parse_element(space, arg(req, 1), req.variant);
    const TensorSum gx = gauge_act(space, req.variant, y, x, p);
    const TensorSum before = mc_residual(space, req.variant, x, p);
    const TensorSum after = mc_residual(space, req.variant, gx, p);
    out["result"] = render(space, gx);
    out["residual_before"] = render(space, before);
    out["residual_after"] = render(space, after);
    o.pass = !before.is_zero() || after.is_zero();
  } else if (cmd == "ch") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const TensorSum x = parse_element(space, arg(req, 0), req.variant);
    const ChainSum ch = char_class(space, req.variant, x, p);
    const ChainSum d = chain_truncate(chain_max_blocks(chain_delta(space, req.variant, ch), p.K - 1), p);
    out["ch"] = render(space, ch);
    out["boundary"] = render(space, d);
    o.pass = d.is_zero();
  } else if (cmd == "hochschild") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const Hamiltonian h = parse_hamiltonian(space, arg(req, 0));
    const HochschildResult hc = hochschild_cohomology(space, h, WordConstraints{1, p.L, std::nullopt});
    Json reps = Json::array();
    for (const auto& x : hc.representatives) reps.push_back(render(space, x));
    out["cells"] = cells_json(hc.cells);
    out["dim_even"] = hc.dim_even;
    out["dim_odd"] = hc.dim_odd;
    out["representatives"] = reps;
    out["odd_vanishes"] = hc.odd_vanishes;
  } else if (cmd == "obstruct") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const Hamiltonian h = parse_hamiltonian(space, arg(req, 0));
    const std::size_t level = req.order.value_or(1);
    if (level == 0) throw Error(ErrorKind::Usage, "obstruction levels start at 1");
    bool reached = false;
    const MCState s = state_at(space, h, level - 1, req.variant, p, out, reached);
    if (reached) {
      const ObstructionReport ob = obstruction_class(space, s, p);
      out["obstruction"] = obstruction_json(space, ob);
      o.pass = ob.is_cocycle;
    } else {
      o.pass = false;
    }
  } else if (cmd == "lift") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const Hamiltonian h = parse_hamiltonian(space, arg(req, 0));
    const std::size_t target = req.order.value_or(p.P);
    const LiftResult l = lift(space, h, target, req.variant, p);
    out["success"] = l.success;
    out["reached_level"] = l.state.level();
    out["components"] = components_json(space, l.state);
    out["residual"] = render(space, l.residual);
    out["residual_min_order"] = l.residual.is_zero() ? Json(nullptr) : Json(min_filtration_order(l.residual));
    if (l.failure) out["failure"] = obstruction_json(space, *l.failure);
    o.pass = l.success;
  } else if (cmd == "extspace") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const Hamiltonian h = parse_hamiltonian(space, arg(req, 0));
    const std::size_t level = req.order.value_or(1);
    if (level == 0) throw Error(ErrorKind::Usage, "extension levels start at 1");
    bool reached = false;
    const MCState s = state_at(space, h, level - 1, req.variant, p, out, reached);
    if (reached) {
      const ObstructionReport ob = obstruction_class(space, s, p);
      if (ob.class_vanishes) {
        const ExtensionSpace e = extension_space(space, s, p);
        Json basis = Json::array();
        for (const auto& b : e.parameter_basis) basis.push_back(render(space, b));
        out["level"] = e.level;
        out["particular"] = render(space, e.particular);
        out["parameter_basis"] = basis;
        out["dim_cocycles"] = e.dim_cocycles;
        out["dim_coboundaries"] = e.dim_coboundaries;
      } else {
        out["obstruction"] = obstruction_json(space, ob);
        o.pass = false;
      }
    } else {
      o.pass = false;
    }
  } else if (cmd == "kunneth") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const Hamiltonian h = parse_hamiltonian(space, arg(req, 0));
    const KunnethReport k = kunneth_check(space, h, p);
    Json cells = Json::array();
    for (const auto& c : k.cells)
      cells.push_back({{"order", c.order}, {"parity", c.parity}, {"direct", c.direct}, {"predicted", c.predicted}});
    out["hc_even"] = k.hc_even;
    out["hc_odd"] = k.hc_odd;
    out["cells"] = cells;
    out["agree"] = k.agree;
    o.pass = k.agree;
  } else if (cmd == "constraint") {
    expect_args(req, 1);
    const Space& space = need(sp);
    const Hamiltonian h = parse_hamiltonian(space, arg(req, 0));
    const QuantumConstraint q = quantum_constraint_check(space, h, p);
    out["in_k"] = q.in_k;
    out["deficit"] = render(space, q.deficit);
    out["mc_certified"] = q.mc_certified;
    o.pass = q.in_k;
  } else if (cmd == "example-1d") {
    if (req.args.size() > 1) throw Error(ErrorKind::Usage, "example-1d takes at most one Hamiltonian");
    std::map<std::size_t, Q> coeffs{{3, 1}};
    if (!req.args.empty()) {
      coeffs.clear();
      for (const auto& [w, c] : parse_hamiltonian(one_dim_space(), req.args[0]).terms()) coeffs[w.size()] = c;
    }
    const SuiteReport s = verify_kontsevich_suite(p, coeffs);
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["checks"] = checks;
    o.pass = s.pass;
  } else {
    throw Error(ErrorKind::Usage, "unknown command '" + cmd + "'");
  }
  r["outputs"] = out;
  r["pass"] = o.pass;
  return o;
}

namespace {

void text_of(const Json& j, const std::string& indent, std::ostringstream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string head = j.is_object() ? it.key() + ":" : "-";
    if (v.is_structured() && !v.empty()) {
      os << indent << head << '\n';
      text_of(v, indent + "  ", os);
    } else {
      os << indent << head << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

}  // namespace

std::string report_text(const Json& report) {
  std::ostringstream os;
  text_of(report, "", os);
  return os.str();
}

}  // namespace qme
