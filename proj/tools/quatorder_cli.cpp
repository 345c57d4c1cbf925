#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quatorder/quatorder.h"

namespace {

struct ContextDeleter {
  void operator()(qo_context* c) const { qo_context_free(c); }
};
using Context = std::unique_ptr<qo_context, ContextDeleter>;

int finish(qo_context* ctx, qo_status st, char* out) {
  if (out) {
    std::fputs(out, stdout);
    qo_string_free(out);
  }
  if (st == QO_VERIFY_FAILED)
    std::fprintf(stderr, "verify failed: %s\n", qo_last_error(ctx));
  else if (st != QO_OK)
    std::fprintf(stderr, "error (%s): %s\n", qo_last_error_kind(ctx), qo_last_error(ctx));
  return static_cast<int>(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hashimoto Eichler orders, local splittings, degeneracy maps and chains"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  long precision = 20;
  std::int64_t prime_bound = 100000;
  long conic_bound = 400;
  std::int64_t aux_bound = 200;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool flip = false;

  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  auto* prec_opt = app.add_option("--precision,-k", precision, "q-adic precision (default 20, or QUATORDER_PRECISION)")
                       ->check(CLI::PositiveNumber);
  app.add_option("--prime-bound", prime_bound, "Search bound for the Hashimoto prime")->check(CLI::Range(2L, 1L << 40));
  app.add_option("--conic-bound", conic_bound, "Denominator bound for the conic search")->check(CLI::PositiveNumber);
  app.add_option("--aux-bound", aux_bound, "Bound for the auxiliary level search")->check(CLI::Range(2L, 1L << 30));
  app.add_option("--seed", seed, "Seed for randomized property checks");
  app.add_option("--threads", threads, "Verify worker count (0: one per discriminant)");
  app.add_flag("--flip-root-sign", flip, "Test hook: use the other square root at p")->group("");

  std::int64_t delta = 0, level = 1, from = 0, to = 0;
  std::string place, q;
  long depth = 12;

  auto* construct = app.add_subcommand("construct", "Hashimoto prime, a and the order basis");
  construct->add_option("--delta", delta)->required();
  construct->add_option("--level,-N", level)->capture_default_str();

  auto* split = app.add_subcommand("split", "Local splitting at a place (prime, p or inf)");
  split->add_option("--delta", delta)->required();
  split->add_option("--level,-N", level)->capture_default_str();
  split->add_option("--place", place)->required();

  auto* degen = app.add_subcommand("degeneracy", "The two copies of R(Nq) inside R(N)");
  degen->add_option("--delta", delta)->required();
  degen->add_option("--level,-N", level)->capture_default_str();
  degen->add_option("--q", q)->required();

  auto* psi = app.add_subcommand("psi", "The map B(N, p) -> B(M, p)");
  psi->add_option("--delta", delta)->required();
  psi->add_option("--from", from)->required();
  psi->add_option("--to", to)->required();

  auto* chain = app.add_subcommand("chain", "Intersection of R(q^n) over n");
  chain->add_option("--delta", delta)->required();
  chain->add_option("--q", q)->required();
  chain->add_option("--depth", depth, "Oracle depth")->capture_default_str();

  std::vector<std::int64_t> deltas{1, 6, 10, 14, 15, 21, 22, 26, 34, 35};
  std::vector<std::int64_t> levels{1, 2, 3, 5, 7, 9, 11};
  std::vector<std::int64_t> places{2, 3, 5, 7, 11, 13};
  bool no_p = false, no_inf = false;
  auto* verify = app.add_subcommand("verify", "Run every check over a parameter sweep");
  auto* deltas_opt = verify->add_option("--deltas", deltas, "Comma list (default 1,6,10,14,15,21,22,26,34,35); empty when given alone")
                         ->expected(0, -1)
                         ->delimiter(',');
  auto* levels_opt = verify->add_option("--levels", levels, "Comma list (default 1,2,3,5,7,9,11); empty when given alone")
                         ->expected(0, -1)
                         ->delimiter(',');
  auto* places_opt = verify->add_option("--places", places, "Comma list (default 2,3,5,7,11,13); empty when given alone")
                         ->expected(0, -1)
                         ->delimiter(',');
  verify->add_flag("--no-p", no_p, "Leave out the Hashimoto prime of each algebra");
  verify->add_flag("--no-inf", no_inf, "Leave out the real place");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : QO_INVALID;
  }

  if (prec_opt->count() == 0) {
    if (const char* env = std::getenv("QUATORDER_PRECISION")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (!*env || *end || v < 1) {
        std::fprintf(stderr, "error (InvalidParameters): QUATORDER_PRECISION='%s' is not a positive integer\n", env);
        return QO_INVALID;
      }
      precision = v;
    }
  }

  // A list option given with no values means an empty list.
  for (auto [opt, vec] : {std::pair{deltas_opt, &deltas}, {levels_opt, &levels}, {places_opt, &places}})
    if (opt->count() > 0 && (opt->results().empty() || (opt->results().size() == 1 && opt->results()[0].empty())))
      vec->clear();

  Context ctx(qo_context_new());
  if (!ctx) return QO_INTERNAL;
  qo_context* c = ctx.get();
  qo_set_format(c, format == "text" ? QO_FORMAT_TEXT : QO_FORMAT_JSON);
  qo_set_precision(c, precision);
  qo_set_prime_bound(c, prime_bound);
  qo_set_conic_bound(c, conic_bound);
  qo_set_aux_bound(c, aux_bound);
  qo_set_seed(c, seed);
  qo_set_threads(c, threads);
  qo_set_flip_root_sign(c, flip ? 1 : 0);

  char* out = nullptr;
  qo_status st = QO_INTERNAL;
  if (*construct) {
    st = qo_construct(c, delta, level, &out);
  } else if (*split) {
    st = qo_split(c, delta, level, place.c_str(), &out);
  } else if (*degen) {
    st = qo_degeneracy(c, delta, level, q.c_str(), &out);
  } else if (*psi) {
    st = qo_psi(c, delta, from, to, &out);
  } else if (*chain) {
    st = qo_chain(c, delta, q.c_str(), depth, &out);
  } else if (*verify) {
    st = qo_verify(c, deltas.data(), deltas.size(), levels.data(), levels.size(), places.data(), places.size(),
                   no_p ? 0 : 1, no_inf ? 0 : 1, &out);
  }
  return finish(c, st, out);
}
