#include "quatorder/quatorder.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>

#include "quatorder/serialize.hpp"
#include "quatorder/sweep.hpp"

using namespace quatorder;

struct qo_context {
  qo_format format = QO_FORMAT_JSON;
  SweepConfig sweep;
  std::string error;
  std::string error_kind;
};

namespace {

qo_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::PrecisionLoss: return QO_PRECISION;
    case ErrorCode::CaseMismatch:
    case ErrorCode::Unsupported:
    case ErrorCode::RamifiedPlace:
    case ErrorCode::SearchExhausted:
    case ErrorCode::NoSquareRoot:
    case ErrorCode::NotASquare:
    case ErrorCode::NotANorm: return QO_UNSUPPORTED;
    default: return QO_INVALID;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string emit(const qo_context* ctx, const Json& j, const std::string& text) {
  return ctx->format == QO_FORMAT_TEXT ? text : j.dump(2) + "\n";
}

template <class F>
qo_status run(qo_context* ctx, char** out, F&& body) {
  if (!ctx || !out) return QO_INVALID;
  *out = nullptr;
  ctx->error.clear();
  ctx->error_kind.clear();
  try {
    std::string text;
    qo_status st = body(text);
    *out = dup(text);
    if (!*out) {
      ctx->error = "out of memory";
      return QO_INTERNAL;
    }
    return st;
  } catch (const Error& e) {
    ctx->error = e.what();
    ctx->error_kind = error_code_name(e.code());
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->error = e.what();
    ctx->error_kind = "Internal";
    return QO_INTERNAL;
  }
}

Integer parse_place(const char* text, const AlgebraParams& params, bool allow_inf) {
  if (!text) fail(ErrorCode::InvalidParameters, "missing place");
  std::string s(text);
  if (s == "p") return Integer(static_cast<long>(params.p()));
  if (s == "inf" || s == "infinity" || s == "oo") {
    if (!allow_inf) fail(ErrorCode::InvalidParameters, "the real place is not allowed here");
    return Integer(0);
  }
  Integer q;
  if (s.empty() || q.set_str(s, 10) != 0) fail(ErrorCode::InvalidParameters, "cannot read place '" + s + "'");
  if (q < 2 || !is_prime(q)) fail(ErrorCode::NotAPrime, s + " is not a prime");
  return q;
}

void need_positive(long long v, const char* what) {
  if (v < 1) fail(ErrorCode::InvalidParameters, std::string(what) + " must be positive");
}

}  // namespace

extern "C" {

qo_context* qo_context_new(void) {
  try {
    return new qo_context();
  } catch (...) {
    return nullptr;
  }
}

void qo_context_free(qo_context* ctx) { delete ctx; }

const char* qo_last_error(const qo_context* ctx) { return ctx ? ctx->error.c_str() : ""; }
const char* qo_last_error_kind(const qo_context* ctx) { return ctx ? ctx->error_kind.c_str() : ""; }

const char* qo_status_name(qo_status status) {
  switch (status) {
    case QO_OK: return "ok";
    case QO_VERIFY_FAILED: return "verify-failed";
    case QO_INVALID: return "invalid";
    case QO_UNSUPPORTED: return "unsupported";
    case QO_PRECISION: return "precision-loss";
    case QO_INTERNAL: return "internal";
  }
  return "unknown";
}

qo_status qo_set_format(qo_context* ctx, qo_format format) {
  if (!ctx || (format != QO_FORMAT_JSON && format != QO_FORMAT_TEXT)) return QO_INVALID;
  ctx->format = format;
  return QO_OK;
}

qo_status qo_set_precision(qo_context* ctx, long digits) {
  if (!ctx || digits < 1) return QO_INVALID;
  ctx->sweep.precision = digits;
  return QO_OK;
}

qo_status qo_set_prime_bound(qo_context* ctx, int64_t bound) {
  if (!ctx || bound < 2) return QO_INVALID;
  ctx->sweep.prime_bound = bound;
  return QO_OK;
}

qo_status qo_set_conic_bound(qo_context* ctx, long bound) {
  if (!ctx || bound < 1) return QO_INVALID;
  ctx->sweep.conic_bound = bound;
  return QO_OK;
}

qo_status qo_set_aux_bound(qo_context* ctx, int64_t bound) {
  if (!ctx || bound < 2) return QO_INVALID;
  ctx->sweep.aux_bound = bound;
  return QO_OK;
}

qo_status qo_set_seed(qo_context* ctx, uint64_t seed) {
  if (!ctx) return QO_INVALID;
  ctx->sweep.seed = seed;
  return QO_OK;
}

qo_status qo_set_threads(qo_context* ctx, unsigned threads) {
  if (!ctx) return QO_INVALID;
  ctx->sweep.threads = threads;
  return QO_OK;
}

qo_status qo_set_flip_root_sign(qo_context* ctx, int flip) {
  if (!ctx) return QO_INVALID;
  ctx->sweep.flip_root_sign = flip != 0;
  return QO_OK;
}

qo_status qo_construct(qo_context* ctx, int64_t delta, int64_t level, char** out) {
  return run(ctx, out, [&](std::string& text) {
    AlgebraParams params = AlgebraParams::hashimoto(delta, level, ctx->sweep.prime_bound);
    text = emit(ctx, construct_json(params), construct_text(params));
    return QO_OK;
  });
}

qo_status qo_split(qo_context* ctx, int64_t delta, int64_t level, const char* place, char** out) {
  return run(ctx, out, [&](std::string& text) {
    AlgebraParams params = AlgebraParams::hashimoto(delta, level, ctx->sweep.prime_bound);
    SplitOptions o;
    o.flip_root_sign = ctx->sweep.flip_root_sign;
    LocalSplitting s = build_splitting(params, parse_place(place, params, true), ctx->sweep.precision, o);
    Report r = verify_splitting(s, hashimoto_order(params));
    Json j = splitting_json(s);
    j["checks"] = report_json(r, false)["checks"];
    text = emit(ctx, j, splitting_text(s) + report_text(r, false));
    return QO_OK;
  });
}

qo_status qo_degeneracy(qo_context* ctx, int64_t delta, int64_t level, const char* q, char** out) {
  return run(ctx, out, [&](std::string& text) {
    AlgebraParams params = AlgebraParams::hashimoto(delta, level, ctx->sweep.prime_bound);
    Integer place = parse_place(q, params, false);
    DegeneracyPair d = degeneracy_bases(params, place, ctx->sweep.precision);
    Report r = verify_degeneracy(d, build_splitting(params, place, ctx->sweep.precision));
    Json j = degeneracy_json(d);
    j["checks"] = report_json(r, false)["checks"];
    text = emit(ctx, j, degeneracy_text(d) + report_text(r, false));
    return QO_OK;
  });
}

qo_status qo_psi(qo_context* ctx, int64_t delta, int64_t from, int64_t to, char** out) {
  return run(ctx, out, [&](std::string& text) {
    need_positive(to, "target level");
    AlgebraParams params = AlgebraParams::hashimoto(delta, from, ctx->sweep.prime_bound);
    PsiMap m = build_psi(params, to, ctx->sweep.conic_bound);
    Report r = verify_psi(m);
    if (m.S) r.merge(verify_psi_inclusion(m));
    Json j = psi_json(m);
    j["checks"] = report_json(r, false)["checks"];
    text = emit(ctx, j, psi_text(m) + report_text(r, false));
    return QO_OK;
  });
}

qo_status qo_chain(qo_context* ctx, int64_t delta, const char* q, long depth, char** out) {
  return run(ctx, out, [&](std::string& text) {
    need_positive(depth, "oracle depth");
    AlgebraParams base = AlgebraParams::hashimoto(delta, 1, ctx->sweep.prime_bound);
    ChainBasis c = chain_closed_form(delta, parse_place(q, base, false), ctx->sweep.aux_bound,
                                     ctx->sweep.prime_bound);
    ZLattice4 oracle = chain_oracle(c, depth, ctx->sweep.precision);
    bool stabilized = oracle.contains(c.lattice) && lattice_intersect(oracle, chain_limit(c)) == c.lattice;
    text = emit(ctx, chain_json(c, depth, stabilized), chain_text(c, depth, stabilized));
    return QO_OK;
  });
}

qo_status qo_verify(qo_context* ctx, const int64_t* deltas, size_t n_deltas, const int64_t* levels,
                    size_t n_levels, const int64_t* places, size_t n_places, int include_p,
                    int include_inf, char** out) {
  return run(ctx, out, [&](std::string& text) {
    SweepConfig cfg = ctx->sweep;
    cfg.deltas.assign(deltas, deltas + (deltas ? n_deltas : 0));
    cfg.levels.assign(levels, levels + (levels ? n_levels : 0));
    cfg.places.assign(places, places + (places ? n_places : 0));
    for (auto q : cfg.places)
      if (q < 2 || !is_prime(Integer(static_cast<long>(q))))
        fail(ErrorCode::NotAPrime, std::to_string(q) + " is not a prime");
    cfg.include_p = include_p != 0;
    cfg.include_inf = include_inf != 0;
    SweepResult res = run_verify(cfg);
    Json j = report_json(res.report, res.vacuous());
    j["tuples"] = res.tuples;
    j["skipped"] = res.skipped;
    text = emit(ctx, j, report_text(res.report, res.vacuous()));
    if (res.report.first_failure()) {
      std::map<std::string, std::size_t> count;
      std::vector<const CheckResult*> first;
      for (const auto& c : res.report.checks)
        if (!c.pass && count[c.id]++ == 0) first.push_back(&c);
      ctx->error.clear();
      for (const auto* f : first)
        ctx->error += "\n  " + f->id + " (" + std::to_string(count[f->id]) + "x): " + f->anchor + " [" +
                      f->witness + "]";
      ctx->error_kind = "VerifyFailed";
      return QO_VERIFY_FAILED;
    }
    return QO_OK;
  });
}

void qo_string_free(char* s) { std::free(s); }

}  // extern "C"
