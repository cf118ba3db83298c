#include "debruijn/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace debruijn {

namespace {

void require_natural(CountClass cls, const SizeModel& model) {
  if (!(model == SizeModel::natural()))
    throw DomainError(count_class_name(cls) + " counts are only defined for the natural size model");
}

// sum_{i+j=n} a_i * b_j over the available prefix.
BigNat convolve(const std::vector<BigNat>& a, const std::vector<BigNat>& b, std::uint64_t n) {
  BigNat acc = 0;
  for (std::uint64_t i = 0; i <= n; ++i) {
    if (a[i] == 0 || b[n - i] == 0) continue;
    mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
  }
  return acc;
}

}  // namespace

std::vector<BigNat> plain_counts(std::uint64_t n_max) {
  std::vector<BigNat> l(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) l[n] = convolve(l, l, n - 1) + l[n - 1] + 1;
  return l;
}

std::vector<BigNat> plain_counts_holonomic(std::uint64_t n_max) {
  std::vector<BigNat> l = {0, 1, 2, 4};
  l.resize(std::max<std::uint64_t>(n_max + 1, 4));
  BigNat numer;
  for (std::uint64_t n = 4; n <= n_max; ++n) {
    numer = (4 * n - 1) * l[n - 1];
    numer -= (2 * n - 1) * l[n - 2];
    numer -= l[n - 3];
    numer -= (n - 4) * l[n - 4];
    if (!mpz_divisible_ui_p(numer.get_mpz_t(), n + 1))
      throw std::logic_error("holonomic recurrence: inexact division at n = " + std::to_string(n));
    mpz_divexact_ui(l[n].get_mpz_t(), numer.get_mpz_t(), n + 1);
  }
  l.resize(n_max + 1);
  return l;
}

BigNat count_plain_explicit(std::uint64_t n) {
  if (n == 0) throw DomainError("explicit formula needs n >= 1");
  mpq_class sum = 0;
  BigNat b1, b2;
  for (std::uint64_t k = 0; k <= (n - 1) / 2; ++k) {
    mpz_bin_uiui(b1.get_mpz_t(), n - k, k);
    mpz_bin_uiui(b2.get_mpz_t(), 2 * n - 3 * k, n - 2 * k - 1);
    mpq_class term(b1 * b2, n - k);
    term.canonicalize();
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  if (sum.get_den() != 1) throw std::logic_error("explicit formula produced a non-integer");
  return sum.get_num();
}

BigNat count_plain(std::uint64_t n) { return (*cached_table(CountClass::Plain, n))[n]; }

BigNat count_plain_holonomic(std::uint64_t n) { return plain_counts_holonomic(n)[n]; }

std::vector<BigNat> plain_counts_model(const SizeModel& m, std::uint64_t n_max) {
  m.require_finitary();
  std::vector<BigNat> c(n_max + 1, 0);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    BigNat v = 0;
    if (n >= m.zero_w && (n - m.zero_w) % m.succ_w == 0) v += 1;
    if (n >= m.abs_w) v += c[n - m.abs_w];
    if (n >= m.app_w) {
      const std::uint64_t rest = n - m.app_w;
      // With free applications the i = 0 and i = rest terms involve c[n]
      // itself, but then c[0] = 0 because zero carries weight.
      for (std::uint64_t i = 0; i <= rest; ++i) {
        if (i == n || rest - i == n) continue;
        if (c[i] == 0 || c[rest - i] == 0) continue;
        mpz_addmul(v.get_mpz_t(), c[i].get_mpz_t(), c[rest - i].get_mpz_t());
      }
    }
    c[n] = std::move(v);
  }
  return c;
}

BigNat count_plain_model(const SizeModel& model, std::uint64_t n) {
  return (*cached_table(CountClass::Plain, n, 0, model))[n];
}

NormalFormCounts normal_form_counts(std::uint64_t n_max) {
  NormalFormCounts r{std::vector<BigNat>(n_max + 1, 0), std::vector<BigNat>(n_max + 1, 0)};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    r.neutral[n] = convolve(r.neutral, r.normal_form, n - 1) + 1;
    r.normal_form[n] = r.neutral[n] + r.normal_form[n - 1];
  }
  return r;
}

BigNat count_neutral(std::uint64_t n) { return (*cached_table(CountClass::Neutral, n))[n]; }
BigNat count_nf(std::uint64_t n) { return (*cached_table(CountClass::NormalForm, n))[n]; }

HeadNormalCounts head_normal_counts(std::uint64_t n_max) {
  const auto l = plain_counts(n_max);
  HeadNormalCounts r{std::vector<BigNat>(n_max + 1, 0), std::vector<BigNat>(n_max + 1, 0)};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    r.neutral_head[n] = convolve(r.neutral_head, l, n - 1) + 1;
    r.head[n] = r.neutral_head[n] + r.head[n - 1];
  }
  return r;
}

std::vector<BigNat> nhnf_counts_closed_form(std::uint64_t n_max) {
  const auto l = plain_counts_holonomic(n_max);
  std::vector<BigNat> k(n_max + 1, 0);
  if (n_max >= 1) k[1] = 1;
  for (std::uint64_t n = 2; n <= n_max; ++n) k[n] = l[n - 1];
  return k;
}

BigNat count_nhnf(std::uint64_t n) { return (*cached_table(CountClass::NeutralHeadNormal, n))[n]; }
BigNat count_hnf(std::uint64_t n) { return (*cached_table(CountClass::HeadNormal, n))[n]; }

std::vector<std::vector<BigNat>> m_open_table(std::uint64_t n_max) {
  const auto l = plain_counts(n_max);
  std::vector<std::vector<BigNat>> c(n_max + 1, std::vector<BigNat>(n_max + 1, 0));
  // Column-major scratch so each convolution walks contiguous memory.
  std::vector<std::vector<BigNat>> col(n_max + 1, std::vector<BigNat>(n_max + 1, 0));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t m = 0; m <= n_max; ++m) {
      if (m >= n) {
        // Every index in a term of size n has value below n.
        c[n][m] = l[n];
      } else {
        BigNat v = convolve(col[m], col[m], n - 1);
        // The index summand [1 <= n <= m] vanishes for m < n.
        v += c[n - 1][std::min(m + 1, n_max)];
        c[n][m] = std::move(v);
      }
      col[m][n] = c[n][m];
    }
  }
  return c;
}

std::vector<BigNat> m_open_counts(std::uint64_t n_max, std::uint64_t m) {
  const auto table = m_open_table(n_max);
  std::vector<BigNat> out(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) out[n] = table[n][std::min(m, n_max)];
  return out;
}

BigNat count_m_open(std::uint64_t n, std::uint64_t m) {
  if (m >= n) return count_plain(n);
  return (*cached_table(CountClass::MOpen, n, m))[n];
}

std::vector<BigNat> containing_counts(std::uint64_t n_max, std::uint64_t p) {
  if (p < 2) throw DomainError("containment counts need a non-index subterm, so p >= 2");
  const auto l = plain_counts(n_max);
  std::vector<BigNat> t(n_max + 1, 0);
  std::vector<BigNat> u(n_max + 1, 0);  // u_j = 2 l_j - t_j
  for (std::uint64_t j = 0; j <= n_max; ++j) u[j] = 2 * l[j];
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    BigNat v = convolve(t, u, n - 1) + t[n - 1];
    if (n == p) v += 1;
    if (v < 0) throw std::logic_error("containment count turned negative at n = " + std::to_string(n));
    t[n] = std::move(v);
    u[n] = 2 * l[n] - t[n];
  }
  return t;
}

std::vector<BigNat> containing_counts(std::uint64_t n_max, const Term& subterm) {
  if (subterm.is_index())
    throw DomainError("containment counts are not modelled for index-shaped subterms ('" + print(subterm) + "')");
  return containing_counts(n_max, subterm.natural_size());
}

BigNat count_containing(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw DomainError("containment counts need a non-index subterm, so p >= 2");
  return (*cached_table(CountClass::Containing, n, p))[n];
}

std::vector<BigNat> motzkin_tree_counts(std::uint64_t n_max) {
  std::vector<BigNat> t(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    t[n] = convolve(t, t, n - 1) + t[n - 1];
    if (n == 1) t[n] += 1;
  }
  return t;
}

BigNat count_motzkin(std::uint64_t n) { return (*cached_table(CountClass::Motzkin, n))[n]; }

std::vector<BigNat> motzkin_numbers(std::uint64_t k_max) {
  std::vector<BigNat> mz(std::max<std::uint64_t>(k_max + 1, 2));
  mz[0] = 1;
  mz[1] = 1;
  for (std::uint64_t k = 2; k <= k_max; ++k) {
    BigNat numer = (2 * k + 1) * mz[k - 1] + 3 * (k - 1) * mz[k - 2];
    mpz_divexact_ui(mz[k].get_mpz_t(), numer.get_mpz_t(), k + 2);
  }
  mz.resize(k_max + 1);
  return mz;
}

std::pair<std::vector<BigNat>, std::vector<BigNat>> black_white_counts(std::uint64_t n_max) {
  std::vector<BigNat> b(n_max + 1, 0), w(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    b[n] = b[n - 1] + w[n - 1];
    w[n] = w[n - 1] + b[n - 1] + convolve(w, b, n - 1);
    if (n == 1) {
      b[n] += 1;
      w[n] += 1;
    }
  }
  return {b, w};
}

std::vector<BigNat> zigzag_free_counts(std::uint64_t n_max) {
  std::vector<BigNat> z1(n_max + 1, 0), z2(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    z2[n] = z2[n - 1] + convolve(z2, z1, n - 1);
    if (n == 1) z2[n] += 1;
    z1[n] = z1[n - 1] + z2[n];
  }
  return z1;
}

CountTable build_count_table(CountClass cls, std::uint64_t n_max, std::uint64_t param, const SizeModel& model) {
  if (cls != CountClass::Plain) require_natural(cls, model);
  std::vector<BigNat> values;
  switch (cls) {
    case CountClass::Plain:
      values = model == SizeModel::natural() ? plain_counts(n_max) : plain_counts_model(model, n_max);
      break;
    case CountClass::NormalForm:
      values = normal_form_counts(n_max).normal_form;
      break;
    case CountClass::Neutral:
      values = normal_form_counts(n_max).neutral;
      break;
    case CountClass::HeadNormal:
      values = head_normal_counts(n_max).head;
      break;
    case CountClass::NeutralHeadNormal:
      values = head_normal_counts(n_max).neutral_head;
      break;
    case CountClass::MOpen:
      values = m_open_counts(n_max, param);
      break;
    case CountClass::Containing:
      values = containing_counts(n_max, param);
      break;
    case CountClass::Motzkin:
      values = motzkin_tree_counts(n_max);
      break;
  }
  return CountTable(cls, model, param, std::move(values));
}

}  // namespace debruijn
