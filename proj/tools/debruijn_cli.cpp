// Command-line front end over the C interface.

#include <CLI11.hpp>
#include <debruijn.h>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitUsage = 1;

// Carries an exit status and its one-line diagnostic out of a subcommand.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void raise(dbj_status s) { throw Failure{static_cast<int>(s), dbj_last_error()}; }
[[noreturn]] void usage(const std::string& msg) { throw Failure{kExitUsage, msg}; }

void check(dbj_status s) {
  if (s != DBJ_OK) raise(s);
}

std::string take(char* s) {
  std::string out(s);
  dbj_string_free(s);
  return out;
}

struct TermDeleter {
  void operator()(dbj_term* t) const { dbj_term_free(t); }
};
struct TableDeleter {
  void operator()(dbj_count_table* t) const { dbj_count_table_free(t); }
};
struct SamplerDeleter {
  void operator()(dbj_sampler* s) const { dbj_sampler_free(s); }
};
using TermPtr = std::unique_ptr<dbj_term, TermDeleter>;
using TablePtr = std::unique_ptr<dbj_count_table, TableDeleter>;
using SamplerPtr = std::unique_ptr<dbj_sampler, SamplerDeleter>;

TermPtr parse_term(const std::string& text) {
  dbj_term* t = nullptr;
  if (dbj_term_parse(text.c_str(), &t) != DBJ_OK) {
    throw Failure{DBJ_ERR_PARSE, "cannot parse '" + text + "': " + dbj_last_error()};
  }
  return TermPtr(t);
}

// --- count -------------------------------------------------------------------

struct CountArgs {
  std::string cls = "plain";
  std::string model = "natural";
  std::string route;
  std::string subterm;
  std::string format = "text";
  std::optional<std::uint64_t> m;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
};

std::optional<std::filesystem::path> cache_path(const std::string& cls, std::uint64_t param, const std::string& model) {
  const char* dir = std::getenv("DEBRUIJN_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::string name = cls;
  if (cls == "m-open" || cls == "containing") name += "-" + std::to_string(param);
  name += "-" + model + ".tbl";
  for (auto& c : name)
    if (c == ',') c = '_';
  return std::filesystem::path(dir) / name;
}

TablePtr cached_or_built(const std::string& cls, std::uint64_t param, const std::string& model, std::uint64_t to) {
  const auto path = cache_path(cls, param, model);
  if (path && std::filesystem::exists(*path)) {
    dbj_count_table* t = nullptr;
    if (dbj_count_table_load(path->c_str(), &t) == DBJ_OK) {
      TablePtr held(t);
      char* desc = nullptr;
      check(dbj_count_table_describe(t, &desc));
      const std::string want =
          cls + ((cls == "m-open" || cls == "containing") ? ":" + std::to_string(param) : std::string()) + " ";
      const std::string got = take(desc);
      if (dbj_count_table_max_size(t) >= to && got.rfind(want, 0) == 0) return held;
    }
  }
  dbj_count_table* t = nullptr;
  check(dbj_count_table_build(cls.c_str(), model.c_str(), param, to, &t));
  TablePtr held(t);
  if (path) {
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    // A cache that cannot be written is not an error for the query itself.
    if (dbj_count_table_save(t, path->c_str()) != DBJ_OK)
      std::cerr << "debruijn: warning: " << dbj_last_error() << "\n";
  }
  return held;
}

int run_count(const CountArgs& a) {
  if (a.from > a.to) usage("--from must not exceed --to");
  check(dbj_model_check(a.model.c_str()));
  std::string cls = a.cls;
  std::uint64_t param = 0;
  if (cls == "closed") {
    cls = "m-open";
  } else if (cls == "m-open") {
    if (!a.m) usage("--class m-open needs --m");
    param = *a.m;
  } else if (a.m) {
    usage("--m only applies to --class m-open");
  }
  if (!a.subterm.empty() && cls != "containing") usage("--subterm only applies to --class containing");
  if (!a.route.empty() && (cls != "plain" || a.model != "natural"))
    usage("--route applies to plain counts in the natural model");
  if (cls != "plain" && a.model != "natural") usage("size models other than natural apply to --class plain only");

  TablePtr table;
  if (!a.route.empty()) {
    dbj_count_table* t = nullptr;
    check(dbj_count_table_plain_route(a.route.c_str(), a.to, &t));
    table.reset(t);
  } else if (cls == "containing") {
    if (a.subterm.empty()) usage("--class containing needs --subterm");
    const TermPtr m = parse_term(a.subterm);
    dbj_count_table* t = nullptr;
    check(dbj_count_table_containing(m.get(), a.to, &t));
    table.reset(t);
  } else {
    table = cached_or_built(cls, param, a.model, a.to);
  }

  for (std::uint64_t n = a.from; n <= a.to; ++n) {
    char* v = nullptr;
    check(dbj_count_table_get(table.get(), n, &v));
    if (a.format == "tsv") std::cout << n << '\t';
    std::cout << take(v) << '\n';
  }
  return 0;
}

// --- enumerate ---------------------------------------------------------------

struct EnumerateArgs {
  std::string cls = "plain";
  std::string model = "natural";
  std::uint64_t n = 0;
  std::uint64_t cap = 14;
};

int run_enumerate(const EnumerateArgs& a) {
  auto sink = [](void*, const char* text) -> int {
    std::cout << text << '\n';
    return std::cout ? 0 : 1;
  };
  check(dbj_enumerate(a.cls.c_str(), a.n, a.model.c_str(), a.cap, sink, nullptr));
  return 0;
}

// --- convert -----------------------------------------------------------------

struct ConvertArgs {
  std::string map;
  std::vector<std::string> inputs;
};

int run_convert(const ConvertArgs& a) {
  auto one = [&](const std::string& in, std::uint64_t line) {
    char* out = nullptr;
    const dbj_status s = dbj_convert(a.map.c_str(), in.c_str(), &out);
    if (s != DBJ_OK) throw Failure{s, "line " + std::to_string(line) + ": " + dbj_last_error()};
    std::cout << take(out) << '\n';
  };
  if (!a.inputs.empty()) {
    for (std::size_t i = 0; i < a.inputs.size(); ++i) one(a.inputs[i], i + 1);
    return 0;
  }
  std::string line;
  std::uint64_t k = 0;
  while (std::getline(std::cin, line)) {
    ++k;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    one(line, k);
  }
  return 0;
}

// --- sample ------------------------------------------------------------------

struct SampleArgs {
  std::string cls = "plain";
  std::uint64_t n = 0;
  std::uint64_t count = 1;
  std::uint64_t seed = 0;
  std::uint64_t jobs = 1;
  std::uint64_t max_trials = 0;
  bool stats = false;
};

struct Draw {
  std::string text;
  std::uint64_t trials = 0;
  int status = DBJ_OK;
  std::string error;
};

int run_sample(const SampleArgs& a) {
  if (a.jobs == 0) usage("--jobs must be at least 1");
  // Worker w owns draws w, w + k, w + 2k, ... on stream w; output keeps draw order.
  std::vector<SamplerPtr> workers;
  for (std::uint64_t w = 0; w < a.jobs; ++w) {
    dbj_sampler* s = nullptr;
    check(dbj_sampler_new(a.cls.c_str(), a.n, a.seed, w, a.max_trials, &s));
    workers.emplace_back(s);
  }
  auto draw = [](dbj_sampler* s, Draw& d) {
    char* text = nullptr;
    dbj_sample_info info{};
    d.status = dbj_sampler_draw(s, &text, &info);
    if (d.status != DBJ_OK) {
      d.error = dbj_last_error();
      return;
    }
    d.text = take(text);
    d.trials = info.trials;
  };

  const std::uint64_t batch = a.jobs == 1 ? 1 : 64 * a.jobs;
  std::vector<Draw> slots;
  long double trials = 0;
  for (std::uint64_t base = 0; base < a.count; base += batch) {
    const std::uint64_t len = std::min(batch, a.count - base);
    slots.assign(len, Draw{});
    if (a.jobs == 1) {
      for (std::uint64_t i = 0; i < len; ++i) draw(workers[0].get(), slots[i]);
    } else {
      std::vector<std::thread> pool;
      for (std::uint64_t w = 0; w < a.jobs; ++w) {
        pool.emplace_back([&, w] {
          for (std::uint64_t i = w; i < len; i += a.jobs) {
            draw(workers[w].get(), slots[i]);
            if (slots[i].status != DBJ_OK) return;
          }
        });
      }
      for (auto& t : pool) t.join();
    }
    for (const auto& d : slots) {
      if (d.status != DBJ_OK) throw Failure{d.status, d.error};
      std::cout << d.text << '\n';
      trials += d.trials;
    }
  }
  if (a.stats) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << (a.count ? trials / a.count : 0.0L);
    std::cout << "{\"size\": " << a.n << ", \"draws\": " << a.count << ", \"mean_trials\": " << os.str()
              << ", \"seed\": " << a.seed << "}\n";
  }
  return 0;
}

// --- density -----------------------------------------------------------------

struct DensityArgs {
  std::string cls = "hnf";
  bool empirical = false;
  std::uint64_t from = 1;
  std::uint64_t to = 0;
  std::uint64_t step = 1;
  std::optional<std::uint64_t> m;
  std::string subterm;
};

std::string real(long double v, int digits = 18) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

long double constant(const char* name) {
  long double v = 0;
  check(dbj_constant(name, &v));
  return v;
}

int run_density(const DensityArgs& a) {
  if (!a.empirical) {
    if (a.cls == "hnf") {
      std::cout << "hnf\t" << real(constant("density-hnf")) << '\n';
    } else if (a.cls == "nhnf") {
      std::cout << "nhnf\t" << real(constant("density-nhnf")) << '\n';
    } else if (a.cls == "closed") {
      std::cout << "closed-lower\t" << real(constant("closed-lower")) << '\n';
      std::cout << "closed-upper\t" << real(constant("closed-upper")) << '\n';
    } else if (a.cls == "containing") {
      std::cout << "containing\t1\n";
    } else {
      usage("no analytic density for '" + a.cls + "'; use --empirical");
    }
    return 0;
  }
  if (a.to == 0) usage("--empirical needs --to");
  if (a.step == 0) usage("--step must be at least 1");
  if (a.from == 0 || a.from > a.to) usage("need 1 <= --from <= --to");
  TermPtr pattern;
  std::uint64_t param = 0;
  if (a.cls == "containing") {
    if (a.subterm.empty()) usage("--class containing needs --subterm");
    pattern = parse_term(a.subterm);
  } else if (a.cls == "m-open") {
    if (!a.m) usage("--class m-open needs --m");
    param = *a.m;
  }
  for (std::uint64_t n = a.from; n <= a.to; n += a.step) {
    double r = 0;
    if (pattern)
      check(dbj_empirical_containing(pattern.get(), n, &r));
    else
      check(dbj_empirical(a.cls.c_str(), n, param, &r));
    std::cout << n << '\t' << real(r, 17) << '\n';
  }
  return 0;
}

// --- asymptotics -------------------------------------------------------------

struct AsymptoticsArgs {
  std::string format = "text";
};

int run_asymptotics(const AsymptoticsArgs& a) {
  struct Row {
    const char* label;
    long double value;
    const char* target;
  };
  const std::vector<Row> rows{
      {"rho", constant("rho"), "0.29559774252208393"},
      {"1/rho", constant("growth"), "3.38298"},
      {"Q(rho)", constant("q-at-rho"), "3.85321718036529"},
      {"C", constant("C"), "0.60676"},
      {"C_H", constant("C_H"), "0.254625911836762946"},
      {"density-nhnf", constant("density-nhnf"), "0.29559774252208393"},
      {"density-hnf", constant("density-hnf"), "0.41964337760707887"},
      {"closed-lower", constant("closed-lower"), "0.1284032445447953"},
      {"closed-upper", constant("closed-upper"), "0.1284032933779419"},
      {"rho-model-C", constant("rho-model-c"), "0.152292401860433"},
  };
  if (a.format == "tsv") {
    std::cout << "constant\tvalue\ttarget\tdeviation\n";
    for (const auto& r : rows) {
      const long double dev = std::fabs(r.value - std::strtold(r.target, nullptr));
      std::cout << r.label << '\t' << real(r.value) << '\t' << r.target << '\t' << real(dev, 3) << '\n';
    }
    return 0;
  }
  std::printf("%-14s %-24s %-24s %s\n", "constant", "value", "target", "deviation");
  for (const auto& r : rows) {
    const long double dev = std::fabs(r.value - std::strtold(r.target, nullptr));
    std::printf("%-14s %-24s %-24s %s\n", r.label, real(r.value).c_str(), r.target, real(dev, 3).c_str());
  }
  return 0;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string module;
  std::uint64_t max_size = 11;
};

int run_verify(const VerifyArgs& a) {
  auto sink = [](void*, const dbj_property_result* r) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << r->seconds;
    std::cout << (r->passed ? "PASS " : "FAIL ") << r->module << '/' << r->name;
    if (!r->passed) std::cout << "  witness: " << r->witness;
    std::cout << "  (" << os.str() << "s)" << std::endl;
  };
  const dbj_status s = dbj_verify(a.module.c_str(), a.max_size, sink, nullptr);
  if (s == DBJ_ERR_VERIFY) {
    std::cerr << "debruijn: verification failed\n";
    return DBJ_ERR_VERIFY;
  }
  check(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Count, enumerate, convert and sample de Bruijn lambda terms", "debruijn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dbj_version()));

  CountArgs count;
  auto* c = app.add_subcommand("count", "Exact counts for a size range");
  c->add_option("--class", count.cls, "plain, nf, neutral, hnf, nhnf, closed, m-open, containing, motzkin")
      ->check(CLI::IsMember({"plain", "nf", "neutral", "hnf", "nhnf", "closed", "m-open", "containing", "motzkin"}));
  c->add_option("--from", count.from, "First size");
  c->add_option("--to", count.to, "Last size")->required();
  c->add_option("--model", count.model, "natural, A, B, C or abs,app,succ,zero");
  c->add_option("--m", count.m, "Free-index bound for m-open");
  c->add_option("--subterm", count.subterm, "Fixed subterm for containing");
  c->add_option("--route", count.route, "Plain-count route")->check(CLI::IsMember({"convolution", "holonomic", "explicit"}));
  c->add_option("--format", count.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "Stream every object of one size");
  e->add_option("--class", en.cls, "term class (plain, nf, neutral, hnf, nhnf, closed, m-open:<m>) or bw, bw-white, bz, motzkin");
  e->add_option("--n", en.n, "Size")->required();
  e->add_option("--model", en.model, "Size model for term classes");
  e->add_option("--cap", en.cap, "Largest natural size whose universe may be enumerated");

  ConvertArgs conv;
  auto* v = app.add_subcommand("convert", "Apply a bijection to terms or trees (arguments or stdin lines)");
  v->add_option("--map", conv.map, "Bijection")
      ->required()
      ->check(CLI::IsMember({"lam-to-bw", "bw-to-lam", "bw-to-bz", "bz-to-bw", "lam-to-bz", "bz-to-lam",
                             "motzkin-to-neutral", "neutral-to-motzkin", "nhnf-to-plain", "plain-to-nhnf"}));
  v->add_option("inputs", conv.inputs, "Inputs; read from stdin when absent");

  SampleArgs sam;
  auto* s = app.add_subcommand("sample", "Uniform samples of an exact size");
  s->add_option("--class", sam.cls, "plain, nf, neutral, motzkin, closed, hnf, nhnf")
      ->check(CLI::IsMember({"plain", "nf", "neutral", "motzkin", "closed", "hnf", "nhnf"}));
  s->add_option("--n", sam.n, "Size")->required();
  s->add_option("--count", sam.count, "Number of samples");
  s->add_option("--seed", sam.seed, "64-bit seed");
  s->add_option("--jobs", sam.jobs, "Worker threads (the output depends on seed and jobs only)");
  s->add_option("--max-trials", sam.max_trials, "Rejection budget per sample (default 50x expected)");
  s->add_flag("--stats", sam.stats, "Print a statistics footer");

  DensityArgs den;
  auto* d = app.add_subcommand("density", "Analytic densities or exact finite-n ratios");
  d->add_option("--class", den.cls, "hnf, nhnf, closed, nf, neutral, m-open, containing")
      ->check(CLI::IsMember({"hnf", "nhnf", "closed", "nf", "neutral", "m-open", "containing"}));
  d->add_flag("--empirical", den.empirical, "Print n<TAB>ratio from exact counts");
  d->add_option("--from", den.from, "First size");
  d->add_option("--to", den.to, "Last size");
  d->add_option("--step", den.step, "Size step");
  d->add_option("--m", den.m, "Free-index bound for m-open");
  d->add_option("--subterm", den.subterm, "Fixed subterm for containing");

  AsymptoticsArgs as;
  auto* a = app.add_subcommand("asymptotics", "Constants with targets and deviations");
  a->add_option("--format", as.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));

  VerifyArgs ver;
  auto* r = app.add_subcommand("verify", "Run the agreement suites");
  r->add_option("--module", ver.module, "Restrict to one module");
  r->add_option("--max-size", ver.max_size, "Bound for the exhaustive checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForVersion& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    std::cerr << "debruijn: usage: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*c) return run_count(count);
    if (*e) return run_enumerate(en);
    if (*v) return run_convert(conv);
    if (*s) return run_sample(sam);
    if (*d) return run_density(den);
    if (*a) return run_asymptotics(as);
    if (*r) return run_verify(ver);
  } catch (const Failure& f) {
    std::cout.flush();
    std::cerr << "debruijn: error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& ex) {
    std::cout.flush();
    std::cerr << "debruijn: error: " << ex.what() << "\n";
    return DBJ_ERR_INTERNAL;
  }
  return kExitUsage;
}
