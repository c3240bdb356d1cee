#include "qme/qme.h"

#include "qme/expression.hpp"
#include "qme/maurer_cartan.hpp"
#include "qme/one_dim.hpp"
#include "qme/report.hpp"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <memory>

struct qme_space {
  qme::Space space;
};

struct qme_element {
  std::shared_ptr<const qme::Space> space;
  qme::TensorSum value;
};

namespace {

thread_local std::string g_last_error;

qme_status status_of(qme::ErrorKind k) {
  switch (k) {
    case qme::ErrorKind::Config: return QME_ERR_CONFIG;
    case qme::ErrorKind::Usage: return QME_ERR_USAGE;
    case qme::ErrorKind::Parse: return QME_ERR_PARSE;
    case qme::ErrorKind::Range: return QME_ERR_RANGE;
    case qme::ErrorKind::Integrity: return QME_ERR_INTEGRITY;
    case qme::ErrorKind::Precondition: return QME_ERR_PRECONDITION;
  }
  return QME_ERR_INTERNAL;
}

struct NullArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
qme_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return QME_OK;
  } catch (const qme::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const NullArgument& e) {
    g_last_error = e.what();
    return QME_ERR_NULL;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return QME_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QME_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw NullArgument(std::string("null ") + what);
}

std::optional<qme::Variant> variant_of(const char* v) {
  if (!v) return std::nullopt;
  return qme::parse_variant(v);
}

qme::Variant variant_or_default(const char* v) { return variant_of(v).value_or(qme::Variant::LambdaGammaNu); }

qme::Profile profile_of(const char* t) { return t ? qme::parse_profile(t) : qme::Profile{}; }

void same_space(const qme_element* a, const qme_element* b) {
  if (!(*a->space == *b->space)) throw qme::Error(qme::ErrorKind::Usage, "elements live over different spaces");
}

qme_element* wrap(const qme_element* like, qme::TensorSum v) { return new qme_element{like->space, std::move(v)}; }

qme_status null_guard(const void* out) {
  if (out) return QME_OK;
  g_last_error = "null output pointer";
  return QME_ERR_NULL;
}

}  // namespace

extern "C" {

const char* qme_last_error(void) { return g_last_error.c_str(); }

const char* qme_status_name(qme_status s) {
  switch (s) {
    case QME_OK: return "ok";
    case QME_ERR_CONFIG: return "config";
    case QME_ERR_USAGE: return "usage";
    case QME_ERR_PARSE: return "parse";
    case QME_ERR_RANGE: return "range";
    case QME_ERR_INTEGRITY: return "integrity";
    case QME_ERR_PRECONDITION: return "precondition";
    case QME_ERR_NULL: return "null";
    case QME_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

qme_status qme_space_from_file(const char* path, qme_space** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(path, "path");
    *out = new qme_space{qme::Space::from_file(path)};
  });
}

qme_status qme_space_from_json(const char* json, qme_space** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(json, "json");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw qme::Error(qme::ErrorKind::Config, e.what());
    }
    *out = new qme_space{qme::Space::from_json(j)};
  });
}

qme_status qme_space_one_dim(qme_space** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] { *out = new qme_space{qme::one_dim_space()}; });
}

qme_status qme_space_dim(const qme_space* space, int* out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(space, "space");
    *out = static_cast<int>(space->space.dim());
  });
}

void qme_space_free(qme_space* space) { delete space; }

qme_status qme_element_parse(const qme_space* space, const char* text, const char* variant, qme_element** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(space, "space");
    require(text, "text");
    auto sp = std::make_shared<const qme::Space>(space->space);
    qme::TensorSum v = qme::parse_element(*sp, text, variant_of(variant));
    *out = new qme_element{std::move(sp), std::move(v)};
  });
}

qme_status qme_element_render(const qme_element* e, char** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(e, "element");
    *out = dup(qme::render(*e->space, e->value));
  });
}

qme_status qme_element_is_zero(const qme_element* e, int* out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(e, "element");
    *out = e->value.is_zero() ? 1 : 0;
  });
}

qme_status qme_element_equal(const qme_element* a, const qme_element* b, int* out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(a, "element");
    require(b, "element");
    same_space(a, b);
    *out = a->value == b->value ? 1 : 0;
  });
}

void qme_element_free(qme_element* e) { delete e; }

qme_status qme_bracket(const qme_element* a, const qme_element* b, const char* variant, const char* trunc,
                       qme_element** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(a, "element");
    require(b, "element");
    same_space(a, b);
    const auto v = variant_or_default(variant);
    *out = wrap(a, qme::truncate(qme::lambda_bracket(*a->space, v, a->value, b->value), profile_of(trunc)));
  });
}

qme_status qme_differential(const qme_element* a, const char* variant, const char* trunc, qme_element** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(a, "element");
    const auto v = variant_or_default(variant);
    *out = wrap(a, qme::truncate(qme::differential(*a->space, v, a->value), profile_of(trunc)));
  });
}

qme_status qme_mc_residual(const qme_element* x, const char* variant, const char* trunc, qme_element** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(x, "element");
    *out = wrap(x, qme::mc_residual(*x->space, variant_or_default(variant), x->value, profile_of(trunc)));
  });
}

qme_status qme_gauge_act(const qme_element* y, const qme_element* x, const char* variant, const char* trunc,
                         qme_element** out) {
  if (auto s = null_guard(out)) return s;
  return guarded([&] {
    require(y, "element");
    require(x, "element");
    same_space(x, y);
    *out = wrap(x, qme::gauge_act(*x->space, variant_or_default(variant), y->value, x->value, profile_of(trunc)));
  });
}

qme_status qme_run(const qme_space* space, const char* request, const char* format, char** out, int* verdict) {
  if (auto s = null_guard(out)) return s;
  if (auto s = null_guard(verdict)) return s;
  return guarded([&] {
    require(request, "request");
    const auto j = nlohmann::json::parse(request);
    qme::Request req;
    req.command = j.at("command").get<std::string>();
    if (j.contains("args")) req.args = j.at("args").get<std::vector<std::string>>();
    if (j.contains("variant")) req.variant = qme::parse_variant(j.at("variant").get<std::string>());
    if (j.contains("trunc")) req.profile = qme::parse_profile(j.at("trunc").get<std::string>());
    if (j.contains("seed")) req.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("order")) req.order = j.at("order").get<std::size_t>();
    const std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "text") throw qme::Error(qme::ErrorKind::Usage, "format must be json or text");
    const qme::Outcome o = qme::run_command(space ? &space->space : nullptr, req);
    *out = dup(fmt == "json" ? o.report.dump(2) + "\n" : qme::report_text(o.report));
    *verdict = o.pass ? 0 : 1;
  });
}

void qme_string_free(char* s) { std::free(s); }

}  // extern "C"
