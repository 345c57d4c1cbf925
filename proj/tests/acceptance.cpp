#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "quatorder/degeneracy.hpp"
#include "quatorder/isomap.hpp"
#include "quatorder/sweep.hpp"

using namespace quatorder;

namespace {

using Clock = std::chrono::steady_clock;

struct Line {
  int id;
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Summary of the checks whose id starts with `prefix`.
Line summarize(int id, const Report& r, const std::string& prefix, std::size_t min_checks) {
  std::size_t total = 0, failed = 0;
  std::map<std::string, std::size_t> failing;
  const CheckResult* first = nullptr;
  for (const auto& c : r.checks) {
    if (c.id.rfind(prefix, 0) != 0) continue;
    ++total;
    if (!c.pass) {
      ++failed;
      ++failing[c.id];
      if (!first) first = &c;
    }
  }
  std::string d = std::to_string(total - failed) + "/" + std::to_string(total) + " checks";
  for (const auto& [k, n] : failing) d += "; " + k + " failed " + std::to_string(n) + "x";
  if (first) d += "; first: " + first->witness;
  if (total < min_checks) d += "; too few checks (wanted >= " + std::to_string(min_checks) + ")";
  return {id, failed == 0 && total >= min_checks, d};
}

Line criterion1() {
  const auto t0 = Clock::now();
  std::string why;
  AlgebraParams P = AlgebraParams::hashimoto(35, 3);
  const Algebra B = P.algebra();
  if (P.p() != 13 || P.a() != 5 || format_quat(hashimoto_basis(P)[3]) != "(525j+k)/13")
    why += " construct mismatch;";

  DegeneracyPair d = degeneracy_bases(P, 11);
  auto quats = [&](std::initializer_list<const char*> v) {
    std::vector<QuatElem> out;
    for (const char* s : v) out.push_back(parse_quat(s, B));
    return out;
  };
  auto f = quats({"1", "(-5+i-5j+k)/2", "(-40950-40425j+k)/13", "(11+11j)/2"});
  auto g = quats({"1", "(5+i+5j+k)/2", "(-40950-40425j+k)/13", "(11+11j)/2"});
  if (!(ZLattice4(B, d.f) == ZLattice4(B, f))) why += " f-lattice HNF differs;";
  if (!(ZLattice4(B, d.g) == ZLattice4(B, g))) why += " g-lattice HNF differs;";

  PsiMap m = build_psi(P, 17);
  if (conic_residual(17, 13, 3, {m.beta, m.delta}) != 0) why += " conic residual nonzero;";
  PsiMap given = m;
  given.beta = Rational(8, 17);
  given.delta = Rational(1, 17);
  if (!verify_psi(given).all_pass()) why += " (8/17, 1/17) rejected;";

  const double t = seconds_since(t0);
  if (t >= 1.0) why += " took " + std::to_string(t) + " s;";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f s", t);
  return {1, why.empty(),
          why.empty() ? std::string("p=13, a=5, e4=(525j+k)/13; f/g HNFs equal; beta=") + to_string(m.beta) +
                            ", delta=" + to_string(m.delta) + ", residual 0; " + buf
                      : why};
}

}  // namespace

int main() {
  std::vector<Line> lines;
  try {
    lines.push_back(criterion1());
  } catch (const std::exception& e) {
    lines.push_back({1, false, std::string("exception: ") + e.what()});
  }

  SweepConfig cfg;
  const auto t0 = Clock::now();
  SweepResult res = run_verify(cfg);
  const double t = seconds_since(t0);

  Line split = summarize(2, res.report, "split.", 1);
  std::set<std::string> cases;
  for (const auto& c : res.report.checks)
    if (c.id.rfind("split.", 0) == 0) cases.insert(c.id.substr(6, c.id.find('.', 6) - 6));
  for (const char* need : {"rational", "unram-nonsquare", "unram-square", "at-p", "ramified", "archimedean"})
    if (!cases.count(need)) {
      split.pass = false;
      split.detail += std::string("; no ") + need + " splittings";
    }
  if (t >= 30.0) split.pass = false;
  char buf[96];
  std::snprintf(buf, sizeof buf, "; sweep %.2f s, %zu tuples, %zu skipped (ramified or unsupported)", t,
                res.tuples, res.skipped);
  split.detail += buf;
  lines.push_back(split);
  lines.push_back(summarize(3, res.report, "degeneracy.", 1));
  lines.push_back(summarize(4, res.report, "psi.", 1));
  lines.push_back(summarize(5, res.report, "chain.", 1));
  lines.push_back(summarize(6, res.report, "numth.", 4));

  bool all = true;
  for (const auto& l : lines) {
    std::printf("criterion %d: %s  %s\n", l.id, l.pass ? "PASS" : "FAIL", l.detail.c_str());
    all = all && l.pass;
  }
  return all ? 0 : 1;
}
