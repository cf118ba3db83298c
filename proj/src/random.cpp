#include "debruijn/random.hpp"

#include <vector>

namespace debruijn {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below: empty range");
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

BigNat Rng::uniform_below(const BigNat& bound) {
  if (bound <= 0) throw DomainError("uniform_below: empty range");
  if (mpz_fits_ulong_p(bound.get_mpz_t())) return BigNat(uniform_below(static_cast<std::uint64_t>(bound.get_ui())));

  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;

  std::vector<std::uint64_t> buf(words);
  BigNat out;
  for (;;) {
    for (auto& w : buf) w = engine_();
    buf[0] &= top_mask;
    // order = 1: most significant word first; native endianness within words.
    mpz_import(out.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buf.data());
    if (out < bound) return out;
  }
}

}  // namespace debruijn
