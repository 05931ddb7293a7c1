#include "balword/words.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace balword::words {

namespace {

long long checked_mul_div_floor(long long a, long long k, long long d) {
  __int128 t = static_cast<__int128>(a) * k;
  __int128 q = t / d;
  if (t % d != 0 && t < 0) --q;
  return static_cast<long long>(q);
}

}  // namespace

Word Word::from_string(std::string_view s) {
  Word w;
  w.letters.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("Word::from_string: letter must be 0 or 1");
    w.letters.push_back(static_cast<uint8_t>(c - '0'));
  }
  return w;
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters.size());
  for (uint8_t l : letters) s.push_back(static_cast<char>('0' + l));
  return s;
}

long long Word::zeros() const {
  return static_cast<long long>(
      std::count(letters.begin(), letters.end(), uint8_t{0}));
}

BalanceSpec::BalanceSpec(long long p_, long long n_, long long r_)
    : p(p_), n(n_), r(r_) {
  if (n <= 0 || p <= 0 || p >= n)
    throw std::invalid_argument("BalanceSpec: need 0 < p < n");
  if (std::gcd(p, n) != 1)
    throw std::invalid_argument("BalanceSpec: p/n must be in lowest terms");
  if (r < 1) throw std::invalid_argument("BalanceSpec: need r >= 1");
}

long long BalanceSpec::floor_alpha(long long k) const {
  if (k < 0) throw std::invalid_argument("BalanceSpec: negative length");
  return checked_mul_div_floor(p, k, n);
}

mpz_class CountVector::total() const {
  mpz_class sum = 0;
  for (const auto& x : b) sum += x;
  return sum;
}

const mpz_class& CountVector::at_deviation(long long d) const {
  long long i = d + r - 1;
  if (i < 0 || i >= static_cast<long long>(b.size()))
    throw std::out_of_range("CountVector: deviation outside window");
  return b[static_cast<size_t>(i)];
}

DeviationProfile deviation(const Word& w, const BalanceSpec& spec) {
  DeviationProfile prof;
  prof.d.reserve(w.letters.size());
  long long zeros = 0;
  for (long long k = 1; k <= w.size(); ++k) {
    if (w.letters[static_cast<size_t>(k - 1)] == 0) ++zeros;
    prof.d.push_back(zeros - spec.floor_alpha(k));
  }
  return prof;
}

bool is_balanced(const Word& w, const BalanceSpec& spec) {
  long long zeros = 0;
  for (long long k = 1; k <= w.size(); ++k) {
    if (w.letters[static_cast<size_t>(k - 1)] == 0) ++zeros;
    long long d = zeros - spec.floor_alpha(k);
    if (d < spec.window_lo() || d > spec.window_hi()) return false;
  }
  return true;
}

std::vector<Word> enumerate_balanced(long long n, const BalanceSpec& spec) {
  if (n < 0) throw std::invalid_argument("enumerate_balanced: negative n");
  if (n > 24)
    throw std::invalid_argument("enumerate_balanced: refuses n > 24");
  std::vector<Word> out;
  const uint32_t limit = n == 0 ? 1u : (1u << n);
  for (uint32_t mask = 0; mask < limit; ++mask) {
    long long zeros = 0;
    bool ok = true;
    for (long long k = 1; k <= n && ok; ++k) {
      // Bit n-k of mask is letter k, so ascending masks give
      // lexicographic word order.
      int letter = (mask >> (n - k)) & 1u;
      if (letter == 0) ++zeros;
      long long d = zeros - spec.floor_alpha(k);
      ok = d >= spec.window_lo() && d <= spec.window_hi();
    }
    if (!ok) continue;
    Word w;
    w.letters.resize(static_cast<size_t>(n));
    for (long long k = 1; k <= n; ++k)
      w.letters[static_cast<size_t>(k - 1)] =
          static_cast<uint8_t>((mask >> (n - k)) & 1u);
    out.push_back(std::move(w));
  }
  return out;
}

CountVector count_balanced_dp(long long n, const BalanceSpec& spec) {
  if (n < 0) throw std::invalid_argument("count_balanced_dp: negative n");
  const size_t states = static_cast<size_t>(2 * spec.r);
  std::vector<mpz_class> cur(states, mpz_class(0));
  cur[static_cast<size_t>(spec.r - 1)] = 1;  // empty word, deviation 0
  std::vector<mpz_class> next(states);
  for (long long k = 1; k <= n; ++k) {
    long long delta = spec.floor_alpha(k) - spec.floor_alpha(k - 1);
    for (size_t i = 0; i < states; ++i) {
      if (delta == 0) {
        // A 0 raises the deviation, a 1 keeps it.
        next[i] = cur[i];
        if (i > 0) next[i] += cur[i - 1];
      } else {
        // A 0 keeps the deviation, a 1 lowers it.
        next[i] = cur[i];
        if (i + 1 < states) next[i] += cur[i + 1];
      }
    }
    cur.swap(next);
  }
  CountVector cv;
  cv.length = n;
  cv.r = spec.r;
  cv.b = std::move(cur);
  return cv;
}

mpz_class count_unconstrained(long long n, const BalanceSpec& spec) {
  if (n < 0) throw std::invalid_argument("count_unconstrained: negative n");
  long long f = spec.floor_alpha(n);
  long long k_lo = std::max<long long>(0, f - spec.r + 1);
  long long k_hi = std::min<long long>(n, f + spec.r);
  mpz_class sum = 0;
  mpz_class term;
  for (long long k = k_lo; k <= k_hi; ++k) {
    mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    sum += term;
  }
  return sum;
}

Word complement(const Word& w) {
  Word out = w;
  for (auto& l : out.letters) l = static_cast<uint8_t>(1 - l);
  return out;
}

int prolong(const Word& w, const BalanceSpec& spec) {
  if (!is_balanced(w, spec))
    throw std::invalid_argument("prolong: word is not balanced");
  long long m = w.size();
  long long d = w.zeros() - spec.floor_alpha(m);
  long long delta = spec.floor_alpha(m + 1) - spec.floor_alpha(m);
  long long with_zero = d + 1 - delta;
  if (with_zero >= spec.window_lo() && with_zero <= spec.window_hi()) return 0;
  long long with_one = d - delta;
  if (with_one >= spec.window_lo() && with_one <= spec.window_hi()) return 1;
  throw std::logic_error("prolong: no balanced extension");
}

Word complete_to_length(const Word& w, const BalanceSpec& spec,
                        long long target_length) {
  if (target_length < w.size())
    throw std::invalid_argument("complete_to_length: target shorter than word");
  Word out = w;
  if (!is_balanced(out, spec))
    throw std::invalid_argument("complete_to_length: word is not balanced");
  long long zeros = out.zeros();
  long long m = out.size();
  while (m < target_length) {
    long long d = zeros - spec.floor_alpha(m);
    long long delta = spec.floor_alpha(m + 1) - spec.floor_alpha(m);
    long long with_zero = d + 1 - delta;
    int letter =
        (with_zero >= spec.window_lo() && with_zero <= spec.window_hi()) ? 0
                                                                         : 1;
    out.letters.push_back(static_cast<uint8_t>(letter));
    if (letter == 0) ++zeros;
    ++m;
  }
  return out;
}

long long jmax(long long n, Rational alpha, Rational alpha_prime) {
  if (n < 0) throw std::invalid_argument("jmax: negative n");
  if (!alpha.in_open_unit_interval() || !alpha_prime.in_open_unit_interval())
    throw std::invalid_argument("jmax: slopes must lie in (0, 1)");
  if (!(alpha < alpha_prime))
    throw std::invalid_argument("jmax: requires alpha < alpha_prime");
  long long f = alpha.floor_mul(n);
  // (alpha'*n - f) / (1 - alpha') = (p'*n - f*q') / (q' - p'), exactly.
  __int128 numer = static_cast<__int128>(alpha_prime.num) * n -
                   static_cast<__int128>(f) * alpha_prime.den;
  __int128 denom = alpha_prime.den - alpha_prime.num;
  assert(numer >= 0 && denom > 0);
  return static_cast<long long>(numer / denom);
}

Word reproject(const Word& w, Rational alpha, Rational alpha_prime,
               long long r) {
  if (!(alpha < alpha_prime))
    throw std::invalid_argument("reproject: requires alpha < alpha_prime");
  BalanceSpec from(alpha.num, alpha.den, r);
  BalanceSpec to(alpha_prime.num, alpha_prime.den, r);
  if (!is_balanced(w, from))
    throw std::invalid_argument("reproject: input word is not balanced");

  Word out;
  out.letters.reserve(w.letters.size());
  long long out_len = 0;
  long long out_zeros = 0;
#ifndef NDEBUG
  long long in_zeros = 0;
  long long in_len = 0;
#endif
  for (uint8_t letter : w.letters) {
    // Find the least k >= 0 such that appending 0^k and then the letter
    // keeps the output balanced. Adding a 0 never lowers the deviation,
    // so k only needs to grow until the letter's deviation re-enters the
    // window from below; the run itself must stay under the ceiling.
    long long k = 0;
    for (;;) {
      long long run_dev = (out_zeros + k) - to.floor_alpha(out_len + k);
      if (run_dev > to.window_hi())
        throw std::logic_error("reproject: zero run left the window");
      long long letter_dev = out_zeros + k + (letter == 0 ? 1 : 0) -
                             to.floor_alpha(out_len + k + 1);
      if (letter_dev >= to.window_lo()) {
        if (letter_dev > to.window_hi())
          throw std::logic_error("reproject: letter overshoots the window");
        break;
      }
      ++k;
    }
    out.letters.insert(out.letters.end(), static_cast<size_t>(k), uint8_t{0});
    out.letters.push_back(letter);
    out_zeros += k + (letter == 0 ? 1 : 0);
    out_len += k + 1;
#ifndef NDEBUG
    ++in_len;
    if (letter == 0) ++in_zeros;
    // Scan invariant: the input prefix dominates the output prefix.
    assert(in_zeros - from.floor_alpha(in_len) >=
           out_zeros - to.floor_alpha(out_len));
#endif
  }
  if (!is_balanced(out, to))
    throw std::logic_error("reproject: output failed the balance check");
  return out;
}

namespace {

mpz_class one_sided_bound(long long n, Rational alpha, Rational alpha_prime,
                          long long r) {
  long long j = jmax(n, alpha, alpha_prime);
  long long n_prime = n + j;
  long long f = alpha_prime.floor_mul(n_prime);
  mpz_class sum = 0;
  mpz_class term;
  for (long long t = 0; t <= j; ++t) {
    mpz_bin_uiui(term.get_mpz_t(), static_cast<unsigned long>(f + r),
                 static_cast<unsigned long>(t));
    sum += term;
  }
  mpz_class k;
  mpz_ui_pow_ui(k.get_mpz_t(), 2, static_cast<unsigned long>(j));
  return k * sum;
}

}  // namespace

mpz_class continuity_bound(long long n, Rational alpha, Rational alpha_prime,
                           long long r) {
  if (r < 1) throw std::invalid_argument("continuity_bound: need r >= 1");
  mpz_class up = one_sided_bound(n, alpha, alpha_prime, r);
  mpz_class down =
      one_sided_bound(n, alpha_prime.complement(), alpha.complement(), r);
  return std::max(up, down);
}

}  // namespace balword::words
