#include "debruijn.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <sstream>
#include <string>

#include "debruijn/asymptotics.hpp"
#include "debruijn/bijections.hpp"
#include "debruijn/counting.hpp"
#include "debruijn/enumerate.hpp"
#include "debruijn/samplers.hpp"
#include "debruijn/verify.hpp"

using namespace debruijn;

struct dbj_term {
  Term value;
};

struct dbj_count_table {
  CountTable value;
};

struct dbj_sampler {
  enum class Mode { Plain, NormalForm, Neutral, Motzkin, Rejection } mode;
  RejectionTarget target = RejectionTarget::Closed;
  std::uint64_t n;
  std::optional<std::uint64_t> max_trials;
  Rng rng;
};

namespace {

thread_local std::string g_error;
thread_local std::int64_t g_error_offset = -1;

dbj_status fail(dbj_status s, const std::string& msg, std::int64_t offset = -1) {
  g_error = msg;
  g_error_offset = offset;
  return s;
}

template <class F>
dbj_status guard(F&& f) {
  try {
    f();
    g_error.clear();
    g_error_offset = -1;
    return DBJ_OK;
  } catch (const ParseError& e) {
    return fail(DBJ_ERR_PARSE, e.what(), static_cast<std::int64_t>(e.offset()));
  } catch (const DomainError& e) {
    return fail(DBJ_ERR_USAGE, e.what());
  } catch (const UnsatisfiableError& e) {
    return fail(DBJ_ERR_UNSATISFIABLE, e.what());
  } catch (const std::exception& e) {
    return fail(DBJ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DBJ_ERR_INTERNAL, "unknown failure");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
void need(const T* p, const char* what) {
  if (!p) throw DomainError(std::string(what) + " must not be null");
}

SizeModel model_of(const char* model) {
  const SizeModel m = model && *model ? SizeModel::parse(model) : SizeModel::natural();
  m.require_finitary();
  return m;
}

Term require_pattern(const dbj_term* subterm) {
  need(subterm, "subterm");
  if (subterm->value.is_index())
    throw DomainError("containment of an index subterm is not modelled by the counting equation");
  return subterm->value;
}

std::string convert(const std::string& map, const std::string& in) {
  if (map == "lam-to-bw") return print(lam_to_bw(parse_term(in)));
  if (map == "bw-to-lam") return print(bw_to_lam(parse_bw(in)));
  if (map == "bw-to-bz") return print(bw_to_bz(parse_bw(in)));
  if (map == "lam-to-bz") return print(bw_to_bz(lam_to_bw(parse_term(in))));
  if (map == "bz-to-bw" || map == "bz-to-lam") {
    const BzTree t = parse_bz(in);
    if (!is_zigzag_free(t)) throw DomainError("'" + print(t) + "' contains a zigzag");
    const BwTree b = bz_to_bw(t);
    return map == "bz-to-bw" ? print(b) : print(bw_to_lam(b));
  }
  if (map == "motzkin-to-neutral") return print(motzkin_to_neutral(parse_motzkin(in)));
  if (map == "neutral-to-motzkin") return print(neutral_to_motzkin(parse_term(in)));
  if (map == "nhnf-to-plain") return print(nhnf_to_plain(parse_term(in)));
  if (map == "plain-to-nhnf") return print(plain_to_nhnf(parse_term(in)));
  throw DomainError("unknown map '" + map + "'");
}

std::optional<RejectionTarget> rejection_target(std::string_view cls) {
  if (cls == "closed") return RejectionTarget::Closed;
  if (cls == "hnf") return RejectionTarget::HeadNormal;
  if (cls == "nhnf") return RejectionTarget::NeutralHeadNormal;
  return std::nullopt;
}

}  // namespace

extern "C" {

const char* dbj_version(void) { return "0.1.0"; }
const char* dbj_last_error(void) { return g_error.c_str(); }
int64_t dbj_last_error_offset(void) { return g_error_offset; }
void dbj_string_free(char* s) { std::free(s); }

// --- terms -------------------------------------------------------------------

dbj_status dbj_term_parse(const char* text, dbj_term** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new dbj_term{parse_term(text)};
  });
}

void dbj_term_free(dbj_term* t) { delete t; }

dbj_status dbj_term_print(const dbj_term* t, char** out) {
  return guard([&] {
    need(t, "term");
    need(out, "out");
    *out = dup(print(t->value));
  });
}

dbj_status dbj_term_size(const dbj_term* t, const char* model, uint64_t* out) {
  return guard([&] {
    need(t, "term");
    need(out, "out");
    *out = size(t->value, model_of(model));
  });
}

dbj_status dbj_term_in_class(const dbj_term* t, const char* cls, int* out) {
  return guard([&] {
    need(t, "term");
    need(cls, "class");
    need(out, "out");
    *out = TermClass::parse(cls).contains(t->value) ? 1 : 0;
  });
}

dbj_status dbj_term_contains(const dbj_term* t, const dbj_term* pattern, int* out) {
  return guard([&] {
    need(t, "term");
    need(pattern, "pattern");
    need(out, "out");
    *out = contains_subterm(t->value, pattern->value) ? 1 : 0;
  });
}

dbj_status dbj_model_check(const char* model) {
  return guard([&] {
    need(model, "model");
    model_of(model);
  });
}

// --- counting ----------------------------------------------------------------

dbj_status dbj_count_table_build(const char* cls, const char* model, uint64_t param, uint64_t n_max,
                                 dbj_count_table** out) {
  return guard([&] {
    need(cls, "class");
    need(out, "out");
    const CountClass c = parse_count_class(cls);
    *out = new dbj_count_table{*cached_table(c, n_max, param, model_of(model))};
    if ((*out)->value.max_size() != n_max) {
      std::vector<BigNat> v((*out)->value.values().begin(), (*out)->value.values().begin() + n_max + 1);
      (*out)->value = CountTable(c, (*out)->value.model(), param, std::move(v));
    }
  });
}

dbj_status dbj_count_table_containing(const dbj_term* subterm, uint64_t n_max, dbj_count_table** out) {
  return guard([&] {
    need(out, "out");
    const Term m = require_pattern(subterm);
    *out = new dbj_count_table{
        CountTable(CountClass::Containing, SizeModel::natural(), size(m), containing_counts(n_max, m))};
  });
}

dbj_status dbj_count_table_plain_route(const char* route, uint64_t n_max, dbj_count_table** out) {
  return guard([&] {
    need(route, "route");
    need(out, "out");
    const std::string r = route;
    std::vector<BigNat> v;
    if (r == "convolution") {
      v = plain_counts(n_max);
    } else if (r == "holonomic") {
      v = plain_counts_holonomic(n_max);
    } else if (r == "explicit") {
      v.push_back(0);
      for (std::uint64_t n = 1; n <= n_max; ++n) v.push_back(count_plain_explicit(n));
    } else {
      throw DomainError("unknown route '" + r + "' (convolution, holonomic, explicit)");
    }
    *out = new dbj_count_table{CountTable(CountClass::Plain, SizeModel::natural(), 0, std::move(v))};
  });
}

dbj_status dbj_count_table_load(const char* path, dbj_count_table** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new dbj_count_table{CountTable::load(path)};
  });
}

dbj_status dbj_count_table_save(const dbj_count_table* t, const char* path) {
  return guard([&] {
    need(t, "table");
    need(path, "path");
    t->value.save(path);
  });
}

void dbj_count_table_free(dbj_count_table* t) { delete t; }

uint64_t dbj_count_table_max_size(const dbj_count_table* t) { return t ? t->value.max_size() : 0; }

dbj_status dbj_count_table_get(const dbj_count_table* t, uint64_t n, char** out) {
  return guard([&] {
    need(t, "table");
    need(out, "out");
    *out = dup(t->value[n].get_str());
  });
}

dbj_status dbj_count_table_describe(const dbj_count_table* t, char** out) {
  return guard([&] {
    need(t, "table");
    need(out, "out");
    const CountClass c = t->value.count_class();
    std::string s = count_class_name(c);
    if (c == CountClass::MOpen || c == CountClass::Containing) s += ":" + std::to_string(t->value.param());
    *out = dup(s + " " + t->value.model().name());
  });
}

// --- enumeration and conversion ---------------------------------------------

dbj_status dbj_enumerate(const char* family, uint64_t n, const char* model, uint64_t cap, dbj_text_sink sink,
                         void* ctx) {
  return guard([&] {
    need(family, "family");
    if (!sink) throw DomainError("sink must not be null");
    const std::string f = family;
    const std::uint64_t limit = cap ? cap : 14;
    const auto emit = [&](const std::string& s) { return sink(ctx, s.c_str()) == 0; };
    if (f == "bw" || f == "bw-white") {
      for_each_bw(n, f == "bw" ? Color::Black : Color::White, [&](const BwTree& t) { return emit(print(t)); },
                  TreeLimits{limit});
    } else if (f == "bz") {
      for_each_bz(n, [&](const BzTree& t) { return emit(print(t)); }, TreeLimits{limit});
    } else if (f == "motzkin") {
      for_each_motzkin(n, [&](const MotzkinTree& t) { return emit(print(t)); }, TreeLimits{limit});
    } else {
      for_each_term(n, model_of(model), TermClass::parse(f), [&](const Term& t) { return emit(print(t)); },
                    EnumerationLimits{limit});
    }
  });
}

dbj_status dbj_convert(const char* map, const char* in, char** out) {
  return guard([&] {
    need(map, "map");
    need(in, "input");
    need(out, "out");
    *out = dup(convert(map, in));
  });
}

// --- sampling ----------------------------------------------------------------

dbj_status dbj_sampler_new(const char* cls, uint64_t n, uint64_t seed, uint64_t stream, uint64_t max_trials,
                           dbj_sampler** out) {
  return guard([&] {
    need(cls, "class");
    need(out, "out");
    if (n == 0) throw DomainError("sample size must be at least 1");
    const std::string c = cls;
    using Mode = dbj_sampler::Mode;
    Mode mode;
    RejectionTarget target = RejectionTarget::Closed;
    if (c == "plain")
      mode = Mode::Plain;
    else if (c == "nf")
      mode = Mode::NormalForm;
    else if (c == "neutral")
      mode = Mode::Neutral;
    else if (c == "motzkin")
      mode = Mode::Motzkin;
    else if (auto t = rejection_target(c)) {
      mode = Mode::Rejection;
      target = *t;
      expected_rejection_trials(n, target);  // rejects classes empty at n
    } else {
      throw DomainError("unknown sampling class '" + c + "' (plain, nf, neutral, motzkin, closed, hnf, nhnf)");
    }
    std::optional<std::uint64_t> budget;
    if (max_trials) budget = max_trials;
    *out = new dbj_sampler{mode, target, n, budget, Rng::derived(seed, stream)};
  });
}

dbj_status dbj_sampler_draw(dbj_sampler* s, char** text, dbj_sample_info* info) {
  return guard([&] {
    need(s, "sampler");
    need(text, "text");
    using Mode = dbj_sampler::Mode;
    const auto start = std::chrono::steady_clock::now();
    std::string out;
    std::uint64_t trials = 1;
    switch (s->mode) {
      case Mode::Plain:
        out = print(sample_plain_exact(s->n, s->rng));
        break;
      case Mode::NormalForm:
        out = print(sample_nf_exact(s->n, s->rng));
        break;
      case Mode::Neutral:
        out = print(sample_neutral_exact(s->n, s->rng));
        break;
      case Mode::Motzkin:
        out = print(sample_motzkin_exact(s->n, s->rng));
        break;
      case Mode::Rejection: {
        const SampleReport rep = sample_rejection(s->n, s->target, s->rng, s->max_trials);
        out = print(std::get<Term>(rep.object));
        trials = rep.trials;
        break;
      }
    }
    if (info) {
      info->size = s->n;
      info->trials = trials;
      info->seed = s->rng.seed();
      info->elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    *text = dup(out);
  });
}

void dbj_sampler_free(dbj_sampler* s) { delete s; }

dbj_status dbj_expected_trials(const char* cls, uint64_t n, double* out) {
  return guard([&] {
    need(cls, "class");
    need(out, "out");
    if (n == 0) throw DomainError("sample size must be at least 1");
    const std::string c = cls;
    if (auto t = rejection_target(c))
      *out = expected_rejection_trials(n, *t);
    else if (c == "plain" || c == "nf" || c == "neutral" || c == "motzkin")
      *out = 1.0;
    else
      throw DomainError("unknown sampling class '" + c + "'");
  });
}

// --- asymptotics -------------------------------------------------------------

dbj_status dbj_constant(const char* name, long double* out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    const std::string n = name;
    if (n == "rho")
      *out = dominant_singularity_plain();
    else if (n == "growth")
      *out = 1 / dominant_singularity_plain();
    else if (n == "q-at-rho")
      *out = q_at_rho();
    else if (n == "C")
      *out = growth_constant_plain();
    else if (n == "C_H")
      *out = growth_constant_hnf();
    else if (n == "density-nhnf")
      *out = density(DensityClass::NeutralHeadNormal);
    else if (n == "density-hnf")
      *out = density(DensityClass::HeadNormal);
    else if (n == "closed-lower")
      *out = closed_density_bounds().first;
    else if (n == "closed-upper")
      *out = closed_density_bounds().second;
    else if (n == "rho-model-c")
      *out = dominant_singularity_model_c();
    else if (n == "growth-model-c")
      *out = 1 / dominant_singularity_model_c();
    else
      throw DomainError("unknown constant '" + n + "'");
  });
}

dbj_status dbj_empirical(const char* what, uint64_t n, uint64_t param, double* out) {
  return guard([&] {
    need(what, "what");
    need(out, "out");
    const std::string w = what;
    if (n == 0) throw DomainError("n must be at least 1");
    if (w == "plain-constant")
      *out = empirical_constant(n, CountClass::Plain);
    else if (w == "hnf-constant")
      *out = empirical_constant(n, CountClass::HeadNormal);
    else if (w == "growth-ratio")
      *out = growth_ratio(n);
    else if (w == "closed")
      *out = exact_density(n, CountClass::MOpen, 0);
    else if (w == "containing") {
      if (param < 2) throw DomainError("containing needs a subterm size p >= 2");
      *out = containment_ratio(n, param);
    } else {
      const CountClass c = parse_count_class(w);
      if (c == CountClass::Plain || c == CountClass::Motzkin) throw DomainError("no density for '" + w + "'");
      *out = exact_density(n, c, param);
    }
  });
}

dbj_status dbj_empirical_containing(const dbj_term* subterm, uint64_t n, double* out) {
  return guard([&] {
    need(out, "out");
    const Term m = require_pattern(subterm);
    if (n == 0) throw DomainError("n must be at least 1");
    *out = containment_ratio(n, size(m));
  });
}

// --- verification ------------------------------------------------------------

dbj_status dbj_verify(const char* module, uint64_t max_size, dbj_property_sink sink, void* ctx) {
  bool all = true;
  const dbj_status s = guard([&] {
    VerifyOptions opt;
    if (max_size) opt.max_size = max_size;
    if (module && *module) {
      const auto mods = verification_modules();
      if (std::find(mods.begin(), mods.end(), module) == mods.end())
        throw DomainError(std::string("unknown module '") + module + "'");
      opt.module = module;
    }
    run_verification(opt, [&](const PropertyResult& r) {
      all = all && r.passed;
      if (!sink) return;
      const dbj_property_result c{r.module.c_str(), r.name.c_str(), r.passed ? 1 : 0, r.witness.c_str(), r.seconds};
      sink(ctx, &c);
    });
  });
  if (s != DBJ_OK) return s;
  return all ? DBJ_OK : fail(DBJ_ERR_VERIFY, "verification failed");
}

}  // extern "C"
