#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "debruijn/counting.hpp"

namespace debruijn {

std::string count_class_name(CountClass c) {
  switch (c) {
    case CountClass::Plain:
      return "plain";
    case CountClass::NormalForm:
      return "nf";
    case CountClass::Neutral:
      return "neutral";
    case CountClass::HeadNormal:
      return "hnf";
    case CountClass::NeutralHeadNormal:
      return "nhnf";
    case CountClass::MOpen:
      return "m-open";
    case CountClass::Containing:
      return "containing";
    case CountClass::Motzkin:
      return "motzkin";
  }
  return "?";
}

CountClass parse_count_class(const std::string& name) {
  for (auto c : {CountClass::Plain, CountClass::NormalForm, CountClass::Neutral, CountClass::HeadNormal,
                 CountClass::NeutralHeadNormal, CountClass::MOpen, CountClass::Containing, CountClass::Motzkin}) {
    if (count_class_name(c) == name) return c;
  }
  throw DomainError("unknown count class '" + name + "'");
}

namespace {

bool has_param(CountClass c) { return c == CountClass::MOpen || c == CountClass::Containing; }

}  // namespace

CountTable::CountTable(CountClass cls, SizeModel model, std::uint64_t param, std::vector<BigNat> values)
    : cls_(cls), model_(model), param_(param), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("count table needs at least the n = 0 entry");
}

const BigNat& CountTable::operator[](std::uint64_t n) const {
  if (n >= values_.size())
    throw DomainError("count table for " + count_class_name(cls_) + " covers n <= " + std::to_string(max_size()) +
                      ", asked for " + std::to_string(n));
  return values_[n];
}

void CountTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << count_class_name(cls_);
  if (has_param(cls_)) out << ':' << param_;
  out << ' ' << model_.name() << ' ' << max_size() << '\n';
  for (const auto& v : values_) out << v.get_str() << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

CountTable CountTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string cls_text, model_text;
  std::uint64_t n_max = 0;
  if (!(hs >> cls_text >> model_text >> n_max)) throw ParseError(0, "bad count table header in " + path.string());
  std::uint64_t param = 0;
  if (auto colon = cls_text.find(':'); colon != std::string::npos) {
    param = std::stoull(cls_text.substr(colon + 1));
    cls_text.resize(colon);
  }
  const CountClass cls = parse_count_class(cls_text);
  const SizeModel model = SizeModel::parse(model_text);
  std::vector<BigNat> values;
  values.reserve(n_max + 1);
  std::string line;
  while (values.size() <= n_max && std::getline(in, line)) {
    BigNat v;
    if (v.set_str(line, 10) != 0 || v < 0)
      throw ParseError(values.size() + 1, "bad count value on line " + std::to_string(values.size() + 2));
    values.push_back(std::move(v));
  }
  if (values.size() != n_max + 1) throw ParseError(values.size() + 1, "truncated count table " + path.string());
  return CountTable(cls, model, param, std::move(values));
}

std::shared_ptr<const CountTable> cached_table(CountClass cls, std::uint64_t n_max, std::uint64_t param,
                                               const SizeModel& model) {
  using Key = std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const CountTable>> cache;

  const Key key{static_cast<int>(cls), model.abs_w, model.app_w, model.succ_w, model.zero_w, param};
  std::shared_ptr<const CountTable> old;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) {
      if (it->second->max_size() >= n_max) return it->second;
      old = it->second;
    }
  }
  // Grow geometrically so repeated single-value queries stay near linear.
  std::uint64_t target = std::max<std::uint64_t>(n_max, 16);
  if (old) target = std::max(target, 2 * old->max_size());
  auto built = std::make_shared<const CountTable>(build_count_table(cls, target, param, model));
  std::lock_guard lock(mu);
  auto& slot = cache[key];
  if (!slot || slot->max_size() < built->max_size()) slot = built;
  return slot;
}

}  // namespace debruijn
