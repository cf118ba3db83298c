#include "debruijn/verify.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include "debruijn/asymptotics.hpp"
#include "debruijn/bijections.hpp"
#include "debruijn/counting.hpp"
#include "debruijn/enumerate.hpp"
#include "debruijn/samplers.hpp"
#include "debruijn/trees.hpp"

namespace debruijn {

namespace {

// A check returns the witness of its first failure, or nothing.
using Witness = std::optional<std::string>;
using Check = std::function<Witness(std::uint64_t max_size)>;

struct Property {
  const char* module;
  const char* name;
  Check check;
};

std::string str(const BigNat& x) { return x.get_str(); }

std::string mismatch(std::uint64_t n, const std::string& what, const BigNat& got, const BigNat& want) {
  return "n=" + std::to_string(n) + ": " + what + " " + str(got) + ", expected " + str(want);
}

// Enumeration cardinality of a class against a count vector, sizes 0..max.
Witness enumerated_matches(std::uint64_t max, const TermClass& cls, const std::vector<BigNat>& counts) {
  for (std::uint64_t n = 0; n <= max; ++n) {
    BigNat seen = 0;
    for_each_term(n, SizeModel::natural(), cls, [&](const Term&) {
      ++seen;
      return true;
    });
    if (seen != counts[n]) return mismatch(n, "enumerated " + cls.name(), seen, counts[n]);
  }
  return std::nullopt;
}

Witness containment_matches(std::uint64_t max, const char* pattern) {
  const Term m = parse_term(pattern);
  const auto counts = containing_counts(max, m);
  for (std::uint64_t n = 0; n <= max; ++n) {
    BigNat seen = 0;
    for_each_term(n, SizeModel::natural(), TermClass::plain(), [&](const Term& t) {
      if (contains_subterm(t, m)) ++seen;
      return true;
    });
    if (seen != counts[n]) return mismatch(n, std::string("terms containing ") + pattern, seen, counts[n]);
  }
  return std::nullopt;
}

// Visits every plain term of size 1..max; the visitor returns a witness on failure.
Witness over_terms(std::uint64_t max, const TermClass& cls, const std::function<Witness(const Term&)>& f) {
  Witness bad;
  for (std::uint64_t n = 1; n <= max && !bad; ++n) {
    for_each_term(n, SizeModel::natural(), cls, [&](const Term& t) {
      bad = f(t);
      return !bad;
    });
  }
  return bad;
}

Witness near(const char* what, long double got, long double want, long double tol) {
  if (std::fabs(got - want) <= tol) return std::nullopt;
  std::ostringstream os;
  os.precision(18);
  os << what << " = " << got << ", expected " << want << " +- " << tol;
  return os.str();
}

std::vector<Property> properties() {
  std::vector<Property> ps;

  // --- term_core --------------------------------------------------------------
  ps.push_back({"term_core", "size-minimum", [](std::uint64_t max) {
                  return over_terms(max, TermClass::plain(), [](const Term& t) -> Witness {
                    const auto s = size(t);
                    if (s < 1 || ((s == 1) != (t == Term::index(0)))) return print(t);
                    return std::nullopt;
                  });
                }});
  ps.push_back({"term_core", "zeros-equal-applications-plus-one", [](std::uint64_t max) {
                  return over_terms(max, TermClass::plain(), [](const Term& t) -> Witness {
                    if (count_zeros(t) != count_applications(t) + 1) return print(t);
                    if (size(t) != size(t, SizeModel::model_b()) + 1) return print(t);
                    return std::nullopt;
                  });
                }});
  ps.push_back({"term_core", "neutral-nf-hnf-inclusion", [](std::uint64_t max) {
                  return over_terms(max, TermClass::plain(), [](const Term& t) -> Witness {
                    if (is_neutral(t) && !is_normal_form(t)) return print(t);
                    if (is_normal_form(t) && !is_head_normal(t)) return print(t);
                    if (is_neutral_head_normal(t) && !is_head_normal(t)) return print(t);
                    return std::nullopt;
                  });
                }});
  ps.push_back({"term_core", "print-parse-round-trip", [](std::uint64_t max) {
                  return over_terms(max, TermClass::plain(), [](const Term& t) -> Witness {
                    const std::string s = print(t);
                    if (parse_term(s) != t || print(parse_term(s)) != s) return s;
                    return std::nullopt;
                  });
                }});
  ps.push_back({"term_core", "plain-enumeration-cardinality", [](std::uint64_t max) {
                  return enumerated_matches(max, TermClass::plain(), plain_counts(max));
                }});

  // --- trees --------------------------------------------------------------------
  ps.push_back({"trees", "bw-bz-cardinality", [](std::uint64_t max) -> Witness {
                  const auto l = plain_counts(max);
                  for (std::uint64_t n = 1; n <= max; ++n) {
                    BigNat bw = 0, bz = 0;
                    for_each_bw(n, Color::Black, [&](const BwTree& t) {
                      if (is_valid_bw(t)) ++bw;
                      return true;
                    });
                    for_each_bz(n, [&](const BzTree& t) {
                      if (is_zigzag_free(t)) ++bz;
                      return true;
                    });
                    if (bw != l[n]) return mismatch(n, "valid black-rooted trees", bw, l[n]);
                    if (bz != l[n]) return mismatch(n, "zigzag-free trees", bz, l[n]);
                  }
                  return std::nullopt;
                }});
  ps.push_back({"trees", "motzkin-cardinality", [](std::uint64_t max) -> Witness {
                  const auto m = normal_form_counts(max).neutral;
                  for (std::uint64_t n = 1; n <= max; ++n) {
                    BigNat seen = enumerate_motzkin(n).size();
                    if (seen != m[n]) return mismatch(n, "Motzkin trees", seen, m[n]);
                  }
                  return std::nullopt;
                }});
  ps.push_back({"trees", "zigzag-predicates-agree", [](std::uint64_t max) -> Witness {
                  Witness bad;
                  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(max, 9) && !bad; ++n) {
                    for_each_binary(n, [&](const BzTree& t) {
                      if (is_zigzag_free(t) == has_zigzag_pattern(t)) bad = print(t);
                      return !bad;
                    });
                  }
                  return bad;
                }});

  // --- bijections ---------------------------------------------------------------
  ps.push_back({"bijections", "lam-bw-round-trip", [](std::uint64_t max) {
                  return over_terms(max, TermClass::plain(), [](const Term& t) -> Witness {
                    const BwTree b = lam_to_bw(t);
                    if (!is_valid_bw(b) || b.color() != Color::Black || b.size() != size(t) || bw_to_lam(b) != t)
                      return print(t);
                    return std::nullopt;
                  });
                }});
  ps.push_back({"bijections", "bw-bz-round-trip", [](std::uint64_t max) {
                  return over_terms(max, TermClass::plain(), [](const Term& t) -> Witness {
                    const BwTree b = lam_to_bw(t);
                    const BzTree z = bw_to_bz(b);
                    if (!is_zigzag_free(z) || z.size() != b.size() || bz_to_bw(z) != b) return print(b);
                    return std::nullopt;
                  });
                }});
  ps.push_back({"bijections", "motzkin-neutral-round-trip", [](std::uint64_t max) -> Witness {
                  for (std::uint64_t n = 1; n <= max; ++n) {
                    Witness bad;
                    for_each_motzkin(n, [&](const MotzkinTree& m) {
                      const Term t = motzkin_to_neutral(m);
                      if (!is_neutral(t) || size(t) != n || neutral_to_motzkin(t) != m) bad = print(m);
                      return !bad;
                    });
                    if (bad) return bad;
                  }
                  return over_terms(max, TermClass::neutral(), [](const Term& t) -> Witness {
                    if (motzkin_to_neutral(neutral_to_motzkin(t)) != t) return print(t);
                    return std::nullopt;
                  });
                }});
  ps.push_back({"bijections", "nhnf-plain-round-trip", [](std::uint64_t max) {
                  return over_terms(max, TermClass::plain(), [](const Term& t) -> Witness {
                    const Term h = plain_to_nhnf(t);
                    if (!is_neutral_head_normal(h) || size(h) != size(t) + 1 || nhnf_to_plain(h) != t) return print(t);
                    return std::nullopt;
                  });
                }});

  // --- counting ----------------------------------------------------------------
  ps.push_back({"counting", "plain-three-routes", [](std::uint64_t) -> Witness {
                  const auto a = plain_counts(200);
                  const auto b = plain_counts_holonomic(200);
                  for (std::uint64_t n = 0; n <= 200; ++n) {
                    if (a[n] != b[n]) return mismatch(n, "holonomic", b[n], a[n]);
                    if (n >= 1 && count_plain_explicit(n) != a[n])
                      return mismatch(n, "explicit sum", count_plain_explicit(n), a[n]);
                  }
                  return std::nullopt;
                }});
  ps.push_back({"counting", "holonomic-exact-division", [](std::uint64_t) -> Witness {
                  try {
                    plain_counts_holonomic(10000);
                  } catch (const std::logic_error& e) {
                    return std::string(e.what());
                  }
                  return std::nullopt;
                }});
  ps.push_back({"counting", "nf-neutral-oracle", [](std::uint64_t max) -> Witness {
                  const auto c = normal_form_counts(max);
                  if (auto w = enumerated_matches(max, TermClass::neutral(), c.neutral)) return w;
                  return enumerated_matches(max, TermClass::normal_form(), c.normal_form);
                }});
  ps.push_back({"counting", "hnf-nhnf-oracle", [](std::uint64_t max) -> Witness {
                  const auto c = head_normal_counts(max);
                  if (auto w = enumerated_matches(max, TermClass::neutral_head_normal(), c.neutral_head)) return w;
                  if (auto w = enumerated_matches(max, TermClass::head_normal(), c.head)) return w;
                  const auto k = nhnf_counts_closed_form(max);
                  for (std::uint64_t n = 0; n <= max; ++n)
                    if (k[n] != c.neutral_head[n]) return mismatch(n, "nhnf closed form", k[n], c.neutral_head[n]);
                  return std::nullopt;
                }});
  ps.push_back({"counting", "m-open-oracle", [](std::uint64_t max) -> Witness {
                  for (std::uint64_t m = 0; m <= 4; ++m)
                    if (auto w = enumerated_matches(max, TermClass::m_open(m), m_open_counts(max, m))) return w;
                  return std::nullopt;
                }});
  ps.push_back({"counting", "containment-oracle", [](std::uint64_t max) -> Witness {
                  for (const char* m : {"\\\\0", "\\1", "0 0", "\\0 0"})
                    if (auto w = containment_matches(max, m)) return w;
                  return std::nullopt;
                }});
  ps.push_back({"counting", "class-inclusion-counts", [](std::uint64_t max) -> Witness {
                  const auto nf = normal_form_counts(max);
                  const auto h = head_normal_counts(max);
                  const auto l = plain_counts(max);
                  for (std::uint64_t n = 0; n <= max; ++n) {
                    if (!(nf.neutral[n] <= nf.normal_form[n] && nf.normal_form[n] <= h.head[n] && h.head[n] <= l[n]))
                      return "n=" + std::to_string(n);
                    for (std::uint64_t m = 0; m < n; ++m)
                      if (count_m_open(n, m) > count_m_open(n, m + 1)) return "n=" + std::to_string(n) + " m=" + std::to_string(m);
                  }
                  return std::nullopt;
                }});
  ps.push_back({"counting", "motzkin-numbers", [](std::uint64_t) -> Witness {
                  const auto m = normal_form_counts(200).neutral;
                  const auto mk = motzkin_numbers(199);
                  for (std::uint64_t n = 1; n <= 200; ++n)
                    if (m[n] != mk[n - 1]) return mismatch(n, "neutral count", m[n], mk[n - 1]);
                  return std::nullopt;
                }});
  ps.push_back({"counting", "model-b-shift", [](std::uint64_t) -> Witness {
                  const auto b = plain_counts_model(SizeModel::model_b(), 100);
                  const auto l = plain_counts(101);
                  for (std::uint64_t n = 0; n <= 100; ++n)
                    if (b[n] != l[n + 1]) return mismatch(n, "model B", b[n], l[n + 1]);
                  return std::nullopt;
                }});
  ps.push_back({"counting", "model-c-values", [](std::uint64_t) -> Witness {
                  const std::vector<BigNat> want{1, 3, 10, 40, 181, 884, 4539};
                  const auto c = plain_counts_model(SizeModel::model_c(), 6);
                  for (std::uint64_t n = 0; n <= 6; ++n)
                    if (c[n] != want[n]) return mismatch(n, "model C", c[n], want[n]);
                  return std::nullopt;
                }});

  // --- samplers ----------------------------------------------------------------
  ps.push_back({"samplers", "exact-size-and-class", [](std::uint64_t) -> Witness {
                  Rng rng(1);
                  for (std::uint64_t n = 1; n <= 40; ++n) {
                    const Term p = sample_plain_exact(n, rng);
                    const Term f = sample_nf_exact(n, rng);
                    const Term u = sample_neutral_exact(n, rng);
                    if (size(p) != n) return "plain n=" + std::to_string(n) + ": " + print(p);
                    if (size(f) != n || !is_normal_form(f)) return "nf n=" + std::to_string(n) + ": " + print(f);
                    if (size(u) != n || !is_neutral(u)) return "neutral n=" + std::to_string(n) + ": " + print(u);
                    if (sample_motzkin_exact(n, rng).size() != n) return "motzkin n=" + std::to_string(n);
                  }
                  for (auto target : {RejectionTarget::Closed, RejectionTarget::HeadNormal, RejectionTarget::NeutralHeadNormal}) {
                    const auto rep = sample_rejection(30, target, rng);
                    if (!accepts(target, std::get<Term>(rep.object))) return rejection_target_name(target);
                  }
                  return std::nullopt;
                }});
  ps.push_back({"samplers", "seed-determinism", [](std::uint64_t) -> Witness {
                  Rng a(7), b(7);
                  for (int i = 0; i < 200; ++i)
                    if (sample_plain_exact(25, a) != sample_plain_exact(25, b)) return "draw " + std::to_string(i);
                  return std::nullopt;
                }});
  ps.push_back({"samplers", "small-class-coverage", [](std::uint64_t) -> Witness {
                  Rng rng(3);
                  const auto all = enumerate_terms(5, SizeModel::natural(), TermClass::neutral());
                  std::vector<bool> hit(all.size());
                  for (int i = 0; i < 2000; ++i) {
                    const Term t = sample_neutral_exact(5, rng);
                    for (std::size_t k = 0; k < all.size(); ++k)
                      if (all[k] == t) hit[k] = true;
                  }
                  for (std::size_t k = 0; k < all.size(); ++k)
                    if (!hit[k]) return print(all[k]);
                  return std::nullopt;
                }});

  // --- asymptotics -------------------------------------------------------------
  ps.push_back({"asymptotics", "constants", [](std::uint64_t) -> Witness {
                  const Real r = dominant_singularity_plain();
                  if (auto w = near("rho", r, 0.29559774252208393L, 1e-14L)) return w;
                  if (auto w = near("1/rho", 1 / r, 3.38298L, 1e-5L)) return w;
                  if (auto w = near("residual", 1 - 3 * r - r * r - r * r * r, 0, 1e-14L)) return w;
                  if (auto w = near("C", growth_constant_plain(), 0.60676L, 5e-5L)) return w;
                  if (auto w = near("C_H", growth_constant_hnf(), 0.254625911836762946L, 1e-12L)) return w;
                  if (auto w = near("hnf density", density(DensityClass::HeadNormal), 0.41964337760707887L, 1e-12L)) return w;
                  const auto [lo, hi] = closed_density_bounds();
                  if (auto w = near("closed lower", lo, 0.1284032445447953L, 1e-12L)) return w;
                  if (auto w = near("closed upper", hi, 0.1284032933779419L, 1e-12L)) return w;
                  return near("model C rho", dominant_singularity_model_c(), 0.152292401860433L, 1e-14L);
                }});
  ps.push_back({"asymptotics", "finite-n-convergence", [](std::uint64_t) -> Witness {
                  if (auto w = near("plain constant at 1000", empirical_constant(1000, CountClass::Plain), 0.60676L, 0.02L * 0.60676L))
                    return w;
                  if (auto w = near("hnf constant at 1000", empirical_constant(1000, CountClass::HeadNormal), 0.2546259L,
                                    0.02L * 0.2546259L))
                    return w;
                  if (auto w = near("nhnf/plain at 1000", exact_density(1000, CountClass::NeutralHeadNormal),
                                    dominant_singularity_plain(), 1e-3L))
                    return w;
                  return near("hnf/plain at 1000", exact_density(1000, CountClass::HeadNormal), 0.41964L, 1e-2L);
                }});
  ps.push_back({"asymptotics", "containment-density", [](std::uint64_t) -> Witness {
                  for (std::uint64_t p : {3, 4}) {
                    double prev = 0;
                    for (std::uint64_t n = p + 2; n <= 2000; ++n) {
                      const double r = containment_ratio(n, p);
                      if (r < prev) return "p=" + std::to_string(p) + " n=" + std::to_string(n);
                      prev = r;
                    }
                    if (prev <= 0.999) return "p=" + std::to_string(p) + " ratio at 2000 is " + std::to_string(prev);
                  }
                  return std::nullopt;
                }});
  return ps;
}

}  // namespace

std::vector<std::string> verification_modules() {
  return {"term_core", "trees", "bijections", "counting", "samplers", "asymptotics"};
}

std::vector<PropertyResult> run_verification(const VerifyOptions& options, const PropertySink& sink) {
  std::vector<PropertyResult> out;
  for (const auto& p : properties()) {
    if (!options.module.empty() && options.module != p.module) continue;
    PropertyResult r{p.module, p.name, false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Witness w = p.check(options.max_size);
      r.passed = !w;
      if (w) r.witness = *w;
    } catch (const std::exception& e) {
      r.witness = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (sink) sink(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace debruijn
