#include "quatorder/sweep.hpp"

#include <future>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "quatorder/degeneracy.hpp"

namespace quatorder {

namespace {

std::string params_witness(const AlgebraParams& p) {
  std::ostringstream os;
  os << "delta=" << p.delta() << ", N=" << p.level() << ", p=" << p.p() << ", a=" << p.a();
  return os.str();
}

struct Partial {
  Report report;
  std::size_t tuples = 0;
  std::size_t skipped = 0;
};

bool skippable(const Error& e) {
  return e.code() == ErrorCode::RamifiedPlace || e.code() == ErrorCode::Unsupported;
}

/// Runs `body`; skippable errors count as skipped, others become a failed check.
template <class F>
void guarded(Partial& out, const std::string& id, const std::string& witness, F&& body) {
  ++out.tuples;
  try {
    body();
  } catch (const Error& e) {
    if (skippable(e)) {
      ++out.skipped;
      return;
    }
    out.report.add(id, std::string("completed without ") + error_code_name(e.code()), false,
                   witness + ": " + e.what());
  }
}

std::vector<Integer> places_for(const SweepConfig& cfg, const AlgebraParams& params, bool with_inf) {
  std::set<Integer> seen;
  std::vector<Integer> out;
  auto push = [&](const Integer& q) {
    if (seen.insert(q).second) out.push_back(q);
  };
  for (auto q : cfg.places) push(Integer(static_cast<long>(q)));
  if (cfg.include_p && params.p() > 1) push(Integer(static_cast<long>(params.p())));
  if (with_inf && cfg.include_inf) push(Integer(0));
  return out;
}

std::string rank_witness(const ZLattice4& l, const std::string& what) {
  std::string s = what + ", rank " + std::to_string(l.rank()) + ", basis";
  for (const auto& u : l.basis()) s += " " + format_quat(u);
  return s;
}

Partial verify_delta(const SweepConfig& cfg, std::int64_t delta) {
  Partial out;
  const std::string dw = "delta=" + std::to_string(delta);
  if (!is_indefinite_discriminant(delta)) {
    out.report.add("construct.discriminant", "delta is squarefree with an even number of primes", false,
                   dw);
    return out;
  }
  for (std::int64_t n : cfg.levels) {
    if (n < 1 || std::gcd(n, delta) != 1) continue;
    const std::string nw = dw + ", N=" + std::to_string(n);
    std::optional<AlgebraParams> params;
    guarded(out, "construct.error", nw, [&] {
      params = AlgebraParams::hashimoto(delta, n, cfg.prime_bound);
      out.report.merge(verify_construct(*params, cfg.prime_bound));
    });
    if (!params) continue;
    const ZLattice4 order = hashimoto_order(*params);

    for (const Integer& q : places_for(cfg, *params, true)) {
      const std::string qw = params_witness(*params) + ", place " + (q == 0 ? "inf" : q.get_str());
      guarded(out, "split.error", qw, [&] {
        SplitOptions o;
        o.flip_root_sign = cfg.flip_root_sign;
        LocalSplitting s = build_splitting(*params, q, cfg.precision, o);
        out.report.merge(verify_splitting(s, order));
      });
    }
    for (const Integer& q : places_for(cfg, *params, false)) {
      const std::string qw = params_witness(*params) + ", q=" + q.get_str();
      guarded(out, "degeneracy.error", qw, [&] {
        DegeneracyPair d = degeneracy_bases(*params, q, cfg.precision);
        LocalSplitting s = build_splitting(*params, q, cfg.precision);
        out.report.merge(verify_degeneracy(d, s));
      });
    }
    for (std::int64_t m : cfg.levels) {
      if (m < 1 || m == n || n % m != 0) continue;
      guarded(out, "psi.error", params_witness(*params) + " -> M=" + std::to_string(m), [&] {
        PsiMap psi = build_psi(*params, m, cfg.conic_bound);
        out.report.merge(verify_psi(psi));
        out.report.merge(verify_psi_inclusion(psi));
        std::seed_seq seq{cfg.seed, static_cast<std::uint64_t>(delta), static_cast<std::uint64_t>(n),
                          static_cast<std::uint64_t>(m)};
        std::mt19937_64 rng(seq);
        out.report.merge(verify_psi_norms(psi, rng(), cfg.psi_samples));
      });
    }
  }

  if (delta == 1) return out;
  std::vector<ChainBasis> chains;
  std::optional<AlgebraParams> base;
  guarded(out, "chain.error", dw, [&] { base = AlgebraParams::hashimoto(delta, 1, cfg.prime_bound); });
  if (!base) return out;
  std::vector<long> depths;
  for (long d : cfg.chain_depths)
    if (d >= 1 && d + 4 < cfg.precision) depths.push_back(d);
  for (const Integer& q : places_for(cfg, *base, false)) {
    guarded(out, "chain.error", dw + ", q=" + q.get_str(), [&] {
      ChainBasis c = chain_closed_form(delta, q, cfg.aux_bound, cfg.prime_bound);
      out.report.merge(verify_chain(c, depths, cfg.precision));
      chains.push_back(std::move(c));
    });
  }
  out.report.merge(verify_intersections(delta, chains));
  return out;
}

}  // namespace

Report verify_substrate(std::uint64_t seed, int hilbert_samples) {
  Report rep;
  std::mt19937_64 rng(seed);
  std::vector<Integer> primes;
  for (long q = 2; q < 100; ++q)
    if (is_prime(Integer(q))) primes.push_back(Integer(q));

  std::string bad;
  for (const auto& q : primes) {
    if (q == 2) continue;
    std::vector<bool> square(q.get_ui(), false);
    for (unsigned long x = 1; x < q.get_ui(); ++x) square[(x * x) % q.get_ui()] = true;
    for (unsigned long a = 0; a < q.get_ui(); ++a) {
      int expect = a == 0 ? 0 : (square[a] ? 1 : -1);
      if (legendre(Integer(a), q) != expect) bad += " (" + std::to_string(a) + "/" + q.get_str() + ")";
      if (expect == 1) {
        Integer r = sqrt_mod(Integer(a), q);
        if (floor_mod(r * r - a, q) != 0 || 2 * r > q) bad += " sqrt(" + std::to_string(a) + ")";
      }
    }
  }
  rep.add("numth.legendre", "Legendre symbol and sqrt_mod agree with enumeration for q < 100", bad.empty(),
          bad.empty() ? "primes 3..97" : bad);

  std::uniform_int_distribution<long> coeff(-2000, 2000);
  std::size_t tried = 0;
  bad.clear();
  while (static_cast<int>(tried) < hilbert_samples) {
    long a = coeff(rng), b = coeff(rng);
    if (a == 0 || b == 0) continue;
    ++tried;
    int prod = hilbert_symbol(Rational(a), Rational(b), 0);
    std::set<std::int64_t> ps{2};
    for (auto q : prime_factors(std::labs(a))) ps.insert(q);
    for (auto q : prime_factors(std::labs(b))) ps.insert(q);
    for (auto q : ps) prod *= hilbert_symbol(Rational(a), Rational(b), Integer(static_cast<long>(q)));
    if (prod != 1) bad += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  rep.add("numth.hilbert_product", "product of Hilbert symbols over all places is 1", bad.empty(),
          std::to_string(tried) + " pairs, seed " + std::to_string(seed) + bad);

  const long k = 24;
  bad.clear();
  std::size_t roots = 0;
  for (const auto& q : primes) {
    const Integer qk = ipow(q, k);
    for (int t = 0; t < 4; ++t) {
      Integer x0 = Integer(static_cast<long>(rng() % 1000000)) * q + 1 + static_cast<long>(rng() % (q.get_ui() - 1));
      if (q == 2) x0 = 2 * x0 + 1;
      Integer a = x0 * x0 + qk * static_cast<long>(rng() % 1000);
      PadicNum r = hensel_sqrt(PadicNum::from_integer(a, q, k + 2), k);
      Integer rr = r.residue(k);
      ++roots;
      if (floor_mod(rr * rr - a, qk) != 0) bad += " " + a.get_str() + " mod " + q.get_str();
    }
  }
  rep.add("numth.hensel", "Hensel roots square back mod q^24", bad.empty(),
          std::to_string(roots) + " roots" + bad);

  std::int64_t p = find_hashimoto_prime(35, 3);
  rep.add("numth.hashimoto_prime", "smallest admissible prime for (35, 3) is 13", p == 13,
          "found " + std::to_string(p));
  return rep;
}

Report verify_psi_norms(const PsiMap& m, std::uint64_t seed, int samples) {
  Report rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-50, 50);
  auto e = hashimoto_basis(m.source);
  std::string bad;
  for (int t = 0; t < samples; ++t) {
    std::vector<Integer> c;
    for (int h = 0; h < 4; ++h) c.push_back(Integer(coeff(rng)));
    QuatElem u = combine(e, c);
    QuatElem v = apply_psi(m, u);
    if (v.reduced_norm() != u.reduced_norm() || v.reduced_trace() != u.reduced_trace())
      bad = " first at " + format_quat(u);
    if (!bad.empty()) break;
  }
  rep.add("psi.norm_preserved", "reduced norm and trace are preserved", bad.empty(),
          "delta=" + std::to_string(m.source.delta()) + ", N=" + std::to_string(m.source.level()) +
              " -> M=" + std::to_string(m.target.level()) + ", " + std::to_string(samples) + " elements" + bad);
  return rep;
}

Report verify_construct(const AlgebraParams& params, std::int64_t prime_bound) {
  Report rep;
  const std::string wit = params_witness(params);
  const auto delta = params.delta(), n = params.level(), p = params.p();
  if (params.is_split_case()) {
    rep.add("construct.conditions", "delta = 1 uses p = 1 and a = 0", p == 1 && params.a() == 0, wit);
  } else {
    rep.add("construct.conditions", "p satisfies every congruence condition",
            satisfies_hashimoto_conditions(delta, n, p), wit);
    rep.add("construct.minimal_prime", "p is the smallest admissible prime",
            find_hashimoto_prime(delta, n, prime_bound) == p, wit);
    const Integer a(static_cast<long>(params.a()));
    rep.add("construct.a_congruence", "a^2*delta*N + 1 = 0 mod p",
            floor_mod(a * a * params.delta_level() + 1, Integer(static_cast<long>(p))) == 0, wit);
    bool ram = true;
    std::vector<std::int64_t> bad = prime_factors(2 * delta * n * p);
    const Rational ia(params.algebra().i_sq), jb(params.algebra().j_sq);
    for (auto q : bad) {
      const bool expect = delta % q == 0;
      ram = ram && ((hilbert_symbol(ia, jb, Integer(static_cast<long>(q))) == -1) == expect);
    }
    ram = ram && hilbert_symbol(ia, jb, 0) == 1;
    rep.add("construct.ramification", "{-delta*N, p} ramifies exactly at the primes of delta", ram, wit);
  }
  auto e = hashimoto_basis(params);
  ZLattice4 order = hashimoto_order(params);
  rep.add("construct.discriminant", "reduced discriminant of R(N) is delta*N",
          reduced_discriminant(e) == params.delta_level(), wit);
  rep.add("construct.order", "R(N) contains 1 and is closed under multiplication",
          order.contains(QuatElem::one(params.algebra())) && order.is_multiplicatively_closed(), wit);
  return rep;
}

Report verify_intersections(std::int64_t delta, const std::vector<ChainBasis>& chains) {
  Report rep;
  const std::string dw = "delta=" + std::to_string(delta);
  const ChainBasis* at_p = nullptr;
  for (const auto& c : chains)
    if (c.kind == ChainCase::AtP) at_p = &c;
  auto is_nonsquare = [](const ChainBasis& c) {
    return c.kind == ChainCase::NonsquareDirect || c.kind == ChainCase::NonsquareAuxiliary;
  };
  auto check_pair = [&](const ChainBasis& a, const ChainBasis& b) {
    ZLattice4 meet = pairwise_intersection(a, b);
    std::string w = dw + ", " + a.q.get_str() + " (" + chain_case_name(a.kind) + ") with " + b.q.get_str() +
                    " (" + chain_case_name(b.kind) + ")";
    rep.add("chain.pairwise.rank", "pairwise intersection of chains is Z*1",
            meet.rank() == 1 && meet.contains(QuatElem::one(a.base.algebra())), rank_witness(meet, w));
    if (meet.rank() <= 2) {
      auto units = norm_one_elements(meet);
      rep.add("chain.pairwise.norm_one", "norm-one elements of the intersection are exactly +-1",
              units.size() == 2 && units[0].coeffs()[0] * units[0].coeffs()[0] == 1 &&
                  units[0] == -units[1] && units[0].coeffs()[1] == 0 && units[0].coeffs()[2] == 0 &&
                  units[0].coeffs()[3] == 0,
              w + ", " + std::to_string(units.size()) + " elements");
    }
  };
  for (const auto& q : chains) {
    if (q.kind != ChainCase::Square) continue;
    for (const auto& s : chains) {
      if (!is_nonsquare(s) || !at_p) continue;
      check_pairwise_hypotheses(q, s, *at_p);
      check_pair(q, s);
    }
    if (at_p) check_pair(q, *at_p);
  }
  if (at_p)
    for (const auto& s : chains)
      if (is_nonsquare(s)) check_pair(s, *at_p);
  if (chains.size() >= 2) {
    ZLattice4 all = global_intersection(chains);
    std::string w = dw + ", primes";
    for (const auto& c : chains) w += " " + c.q.get_str();
    rep.add("chain.global.rank", "intersection of all chains is Z*1",
            all.rank() == 1 && all.contains(QuatElem::one(chains[0].base.algebra())), rank_witness(all, w));
  }
  return rep;
}

SweepResult run_verify(const SweepConfig& cfg) {
  std::vector<Partial> parts(cfg.deltas.size());
  if (cfg.threads == 1) {
    for (std::size_t n = 0; n < cfg.deltas.size(); ++n) parts[n] = verify_delta(cfg, cfg.deltas[n]);
  } else {
    const std::size_t width = cfg.threads == 0 ? cfg.deltas.size() : cfg.threads;
    for (std::size_t start = 0; start < cfg.deltas.size(); start += width) {
      std::vector<std::future<Partial>> jobs;
      for (std::size_t n = start; n < std::min(cfg.deltas.size(), start + width); ++n)
        jobs.push_back(std::async(std::launch::async, verify_delta, std::cref(cfg), cfg.deltas[n]));
      for (std::size_t n = 0; n < jobs.size(); ++n) parts[start + n] = jobs[n].get();
    }
  }
  SweepResult res;
  if (cfg.substrate && !cfg.deltas.empty()) res.report.merge(verify_substrate(cfg.seed, cfg.hilbert_samples));
  for (const auto& p : parts) {
    res.report.merge(p.report);
    res.tuples += p.tuples;
    res.skipped += p.skipped;
  }
  res.report.sort();
  return res;
}

}  // namespace quatorder
