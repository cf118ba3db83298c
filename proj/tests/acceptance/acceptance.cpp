// Acceptance suite: one PASS/FAIL line per criterion. argv[1] is the CLI.

#include <sys/wait.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "../oracle.hpp"
#include "debruijn/asymptotics.hpp"
#include "debruijn/bijections.hpp"
#include "debruijn/samplers.hpp"

using namespace debruijn;

namespace {

std::string g_cli;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = detail.empty() ? why : why + " [" + detail + "]";
    ok = false;
  }
};

int g_failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) o.fail("runtime " + std::to_string(s) + " s over the " + std::to_string(limit_s) + " s limit");
  if (!o.ok) ++g_failures;
  std::printf("%s %2d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), s, o.detail.empty() ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

double critical(std::size_t dof) {
  return boost::math::quantile(boost::math::complement(boost::math::chi_squared(double(dof)), 1e-3));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

template <class Pred>
std::uint64_t brute(std::uint64_t n, Pred&& p) {
  std::uint64_t c = 0;
  for (const auto& t : oracle::terms(n)) c += p(t) ? 1 : 0;
  return c;
}

// Chi-square of `draws` samples against the uniform law on `universe`.
template <class Draw>
void uniform_fit(Outcome& o, const std::string& label, const std::vector<std::string>& universe, std::uint64_t draws,
                 Draw&& draw) {
  std::map<std::string, std::uint64_t> freq;
  for (const auto& u : universe) freq[u] = 0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    auto it = freq.find(draw());
    if (it == freq.end()) return o.fail(label + ": draw outside the class");
    ++it->second;
  }
  const double e = double(draws) / double(universe.size());
  double stat = 0;
  for (const auto& [k, c] : freq) {
    if (c == 0) return o.fail(label + ": outcome never observed: " + k);
    stat += (double(c) - e) * (double(c) - e) / e;
  }
  const double crit = critical(universe.size() - 1);
  o.detail += (o.detail.empty() ? "" : "; ") + label + " chi2 " + fmt(stat) + " < " + fmt(crit);
  if (stat >= crit) o.fail(label + " chi2 " + fmt(stat) + " >= " + fmt(crit));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 1;
  }
  g_cli = argv[1];

  criterion(1, "sequence reproduction", 1.0, [](Outcome& o) {
    const auto [code, out] = run_cli("count --class plain --to 14");
    const std::string want = "0\n1\n2\n4\n9\n22\n57\n154\n429\n1223\n3550\n10455\n31160\n93802\n284789\n";
    if (code != 0) o.fail("exit status " + std::to_string(code));
    if (out != want) o.fail("output differs: " + out);
  });

  criterion(2, "three-route equality to 200", 5.0, [](Outcome& o) {
    const auto conv = plain_counts(200);
    const auto hol = plain_counts_holonomic(200);  // throws on an inexact division
    for (std::uint64_t n = 1; n <= 200; ++n)
      if (conv[n] != hol[n] || conv[n] != count_plain_explicit(n)) return o.fail("routes differ at n=" + std::to_string(n));
  });

  criterion(3, "oracle equivalence to 11", 60.0, [](Outcome& o) {
    const std::vector<Term> pats = {parse_term("\\\\0"), parse_term("\\1"), parse_term("0 0"), parse_term("\\0 0")};
    std::vector<std::vector<BigNat>> by_pat;
    for (const auto& p : pats) by_pat.push_back(containing_counts(11, p));
    for (std::uint64_t n = 1; n <= 11; ++n) {
      const std::string at = " at n=" + std::to_string(n);
      if (count_nf(n) != brute(n, [](const Term& t) { return !oracle::has_redex(t); })) o.fail("nf" + at);
      if (count_neutral(n) != brute(n, oracle::neutral)) o.fail("neutral" + at);
      if (count_hnf(n) != brute(n, oracle::hnf)) o.fail("hnf" + at);
      if (count_nhnf(n) != brute(n, oracle::nhnf)) o.fail("nhnf" + at);
      for (std::uint64_t m = 0; m <= 4; ++m)
        if (count_m_open(n, m) != brute(n, [m](const Term& t) { return oracle::open_bound(t) <= m; }))
          o.fail("m-open m=" + std::to_string(m) + at);
      for (std::size_t i = 0; i < pats.size(); ++i) {
        const auto hits = brute(n, [&](const Term& t) { return oracle::contains(t, pats[i]); });
        if (by_pat[i][n] != hits || count_containing(n, size(pats[i])) != hits)
          o.fail("containing " + print(pats[i]) + at);
      }
    }
  });

  criterion(4, "bijection suites to 11", 0, [](Outcome& o) {
    const Term omega = parse_term("(\\0 0) (\\0 0)");
    if (print(lam_to_bw(omega)) != "B(W(W(W(_,B(W(W(_,_),B(_,_)),_)),_),B(_,_)),_)") o.fail("lam_to_bw(omega)");
    if (print(bw_to_bz(lam_to_bw(omega))) != "N(N(N(N(_,_),N(N(N(_,_),_),N(_,_))),_),N(_,_))")
      o.fail("bw_to_bz(lam_to_bw(omega))");
    if (motzkin_to_neutral(parse_motzkin("U(U(B(L,B(L,U(L)))))")) != parse_term("0 (\\\\0 1)"))
      o.fail("motzkin_to_neutral(P tree)");
    for (std::uint64_t n = 1; n <= 11; ++n) {
      const std::string at = " at n=" + std::to_string(n);
      std::uint64_t neutral = 0;
      for (const auto& t : oracle::terms(n)) {
        const BwTree b = lam_to_bw(t);
        if (b.size() != n || !is_valid_bw(b) || bw_to_lam(b) != t) o.fail("lam/bw" + at);
        if (oracle::neutral(t)) {
          ++neutral;
          const MotzkinTree m = neutral_to_motzkin(t);
          if (m.size() != n || motzkin_to_neutral(m) != t) o.fail("neutral/motzkin" + at);
        }
        const Term h = plain_to_nhnf(t);
        if (size(h) != n + 1 || !oracle::nhnf(h) || nhnf_to_plain(h) != t) o.fail("plain/nhnf" + at);
      }
      std::uint64_t bw = 0, bz = 0, mz = 0, nh = 0;
      for_each_bw(n, Color::Black, [&](const BwTree& b) {
        ++bw;
        const BzTree z = bw_to_bz(b);
        if (z.size() != n || !is_zigzag_free(z) || bz_to_bw(z) != b) o.fail("bw/bz" + at);
        if (lam_to_bw(bw_to_lam(b)) != b) o.fail("bw/lam" + at);
        return true;
      });
      for_each_bz(n, [&](const BzTree& z) {
        ++bz;
        const BwTree b = bz_to_bw(z);
        if (b.size() != n || !is_valid_bw(b) || bw_to_bz(b) != z) o.fail("bz/bw" + at);
        return true;
      });
      for_each_motzkin(n, [&](const MotzkinTree& m) {
        ++mz;
        const Term t = motzkin_to_neutral(m);
        if (size(t) != n || !oracle::neutral(t) || neutral_to_motzkin(t) != m) o.fail("motzkin/neutral" + at);
        return true;
      });
      for (const auto& h : oracle::terms(n + 1)) {
        if (!oracle::nhnf(h) || h == Term::index(0)) continue;
        ++nh;
        const Term t = nhnf_to_plain(h);
        if (size(t) != n || plain_to_nhnf(t) != h) o.fail("nhnf/plain" + at);
      }
      const auto total = oracle::terms(n).size();
      if (bw != total || bz != total || nh != total || mz != neutral) o.fail("family sizes" + at);
    }
  });

  criterion(5, "neutral counts are Motzkin numbers to 200", 0, [](Outcome& o) {
    const auto m = normal_form_counts(200).neutral;
    for (std::uint64_t n = 1; n <= 200; ++n)
      if (m[n] != oracle::motzkin(n - 1)) return o.fail("differs at n=" + std::to_string(n));
  });

  criterion(6, "asymptotic constants", 0, [](Outcome& o) {
    auto near = [&](const char* name, long double v, long double want, long double tol) {
      if (!(std::fabs(v - want) <= tol)) {
        std::ostringstream os;
        os.precision(20);
        os << name << " = " << v << " vs " << want;
        o.fail(os.str());
      }
    };
    const auto [lo, hi] = closed_density_bounds();
    near("rho", dominant_singularity_plain(), 0.29559774252208393L, 1e-14L);
    near("1/rho", plain_profile().growth, 3.38298L, 1e-5L);
    near("C", growth_constant_plain(), 0.60676L, 5e-5L);
    near("C_H", growth_constant_hnf(), 0.254625911836762946L, 1e-12L);
    near("hnf density", density(DensityClass::HeadNormal), 0.41964337760707887L, 1e-12L);
    near("closed lower", lo, 0.1284032445447953L, 1e-12L);
    near("closed upper", hi, 0.1284032933779419L, 1e-12L);
  });

  criterion(7, "finite-n convergence at 1000", 30.0, [](Outcome& o) {
    const double c = empirical_constant(1000, CountClass::Plain);
    const double r = exact_density(1000, CountClass::NeutralHeadNormal);
    o.detail = "constant " + fmt(c) + ", nhnf ratio " + fmt(r);
    if (std::fabs(c / 0.60676 - 1) >= 0.02) o.fail("constant " + fmt(c));
    if (std::fabs(r - 0.29559774252208393) >= 1e-3) o.fail("nhnf ratio " + fmt(r));
  });

  criterion(8, "sampler uniformity", 0, [](Outcome& o) {
    std::vector<std::string> neutral, plain;
    for (const auto& t : oracle::terms(8))
      if (oracle::neutral(t)) neutral.push_back(print(t));
    for (const auto& t : oracle::terms(6)) plain.push_back(print(t));
    if (neutral.size() != 127) return o.fail("neutral class at 8 has " + std::to_string(neutral.size()));
    Rng rng(20240808);
    uniform_fit(o, "neutral n=8", neutral, 127000, [&] { return print(sample_neutral_exact(8, rng)); });
    uniform_fit(o, "plain n=6", plain, 1000 * plain.size(), [&] { return print(sample_plain_exact(6, rng)); });
    const std::string args = "sample --class neutral --n 40 --count 200 --seed 31337 --stats";
    const auto a = run_cli(args), b = run_cli(args);
    if (a.first != 0 || a.second.empty() || a.second != b.second) o.fail("fixed-seed CLI output not reproducible");
  });

  criterion(9, "rejection statistics", 0, [](Outcome& o) {
    Rng rng(9);
    const int runs = 20000;
    double hnf = 0, nhnf = 0;
    for (int i = 0; i < runs; ++i) {
      hnf += sample_rejection(300, RejectionTarget::HeadNormal, rng).trials;
      nhnf += sample_rejection(300, RejectionTarget::NeutralHeadNormal, rng).trials;
    }
    hnf /= runs;
    nhnf /= runs;
    std::uint64_t accepted = 0, trials = 0;
    while (accepted < 10000) {
      trials += sample_rejection(256, RejectionTarget::Closed, rng).trials;
      ++accepted;
    }
    const double measured = double(accepted) / double(trials);
    const double exact = exact_density(256, CountClass::MOpen, 0);
    const auto [lo, hi] = closed_density_bounds();
    o.detail = "hnf mean " + fmt(hnf) + ", nhnf mean " + fmt(nhnf) + ", closed acceptance " + fmt(measured) +
               " (exact " + fmt(exact) + ")";
    if (hnf < 2.2 || hnf > 2.6) o.fail("hnf mean trials " + fmt(hnf));
    if (nhnf < 3.1 || nhnf > 3.7) o.fail("nhnf mean trials " + fmt(nhnf));
    const double se = std::sqrt(exact * (1 - exact) / double(trials));
    if (std::fabs(measured - exact) > 5 * se) o.fail("measured closed acceptance " + fmt(measured) + " far from exact " + fmt(exact));
    if (measured < double(lo) - 0.005 || measured > double(hi) + 0.005)
      o.fail("closed acceptance " + fmt(measured) + " (exact table ratio " + fmt(exact) + ") outside [" +
             fmt(double(lo) - 0.005) + ", " + fmt(double(hi) + 0.005) + "]; the finite-n ratio is still decreasing toward the bounds");
  });

  criterion(10, "containment density for a size-4 subterm", 0, [](Outcome& o) {
    double prev = 0;
    for (std::uint64_t n = 6; n <= 2000; ++n) {
      const double r = containment_ratio(n, 4);
      if (r < prev) return o.fail("decreases at n=" + std::to_string(n));
      prev = r;
    }
    o.detail = "ratio at 2000 " + fmt(prev);
    if (prev <= 0.999) o.fail("ratio at 2000 is " + fmt(prev));
  });

  criterion(11, "alternate size models", 0, [](Outcome& o) {
    const auto b = plain_counts_model(SizeModel::model_b(), 100);
    const auto nat = plain_counts(101);
    for (std::uint64_t n = 0; n <= 100; ++n)
      if (b[n] != nat[n + 1]) return o.fail("model B shift fails at n=" + std::to_string(n));
    const std::vector<long> want = {1, 3, 10, 40, 181, 884, 4539};
    const auto c = plain_counts_model(SizeModel::model_c(), 6);
    for (std::size_t n = 0; n < want.size(); ++n)
      if (c[n] != want[n]) o.fail("model C value at n=" + std::to_string(n));
  });

  std::printf("%d of 11 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
