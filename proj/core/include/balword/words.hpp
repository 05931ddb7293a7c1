#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "balword/rational.hpp"

namespace balword::words {

// A finite word over the alphabet {0, 1}.
struct Word {
  std::vector<uint8_t> letters;

  Word() = default;
  explicit Word(std::vector<uint8_t> ls) : letters(std::move(ls)) {}

  static Word from_string(std::string_view s);
  std::string str() const;

  long long size() const { return static_cast<long long>(letters.size()); }
  long long zeros() const;

  bool operator==(const Word&) const = default;
};

// Balance window: alpha = p/n in lowest terms, half-width r >= 1.
// A word w is (alpha, r)-balanced when every prefix w[:k] satisfies
//   alpha*k - r < |w[:k]|_0 <= alpha*k + r,
// equivalently the deviation d_k = |w[:k]|_0 - floor(alpha*k) stays in
// {-r+1, ..., r}. All floors are exact integer divisions.
struct BalanceSpec {
  long long p;
  long long n;
  long long r;

  BalanceSpec(long long p_, long long n_, long long r_);

  long long floor_alpha(long long k) const;
  Rational alpha() const { return Rational(p, n); }
  long long window_lo() const { return -r + 1; }
  long long window_hi() const { return r; }
  BalanceSpec complemented() const { return BalanceSpec(n - p, n, r); }
};

// Deviations d_1..d_m of a word of length m.
struct DeviationProfile {
  std::vector<long long> d;
};

// Exact counts of balanced words of one length, split by final deviation.
// b[i] counts words whose final deviation equals i - r + 1, so the index
// range 0..2r-1 covers the window {-r+1, ..., r} and the deviation-zero
// slot sits at index r - 1.
struct CountVector {
  long long length = 0;
  long long r = 0;
  std::vector<mpz_class> b;

  mpz_class total() const;
  const mpz_class& at_deviation(long long d) const;
};

DeviationProfile deviation(const Word& w, const BalanceSpec& spec);
bool is_balanced(const Word& w, const BalanceSpec& spec);

// Every balanced word of length n, in lexicographic order, by exhaustive
// scan over all 2^n candidates. Deliberately unoptimized so it can serve
// as an oracle for the dynamic program; refuses n > 24.
std::vector<Word> enumerate_balanced(long long n, const BalanceSpec& spec);

// Counts balanced words of length n by the deviation-state dynamic
// program, one window shift per letter.
CountVector count_balanced_dp(long long n, const BalanceSpec& spec);

// Counts words of length n whose total zero count alone lands in the
// window (no prefix constraint): sum of C(n, k) over
// alpha*n - r < k <= alpha*n + r.
mpz_class count_unconstrained(long long n, const BalanceSpec& spec);

// Letter-wise 0 <-> 1 flip. Against the complemented spec the deviations
// transform as d'_k = -d_k + [n does not divide k], so the window
// {-r+1, ..., r} maps onto itself except at prefix lengths divisible by
// the period n, where it reflects to {-r, ..., r-1}. Counts at slopes
// alpha and 1 - alpha therefore differ by boundary words and only obey
// the sandwich |B(1-alpha, r-1)| <= |B(alpha, r)| <= |B(1-alpha, r+1)|,
// not the naive equality.
Word complement(const Word& w);

// The letter (0 or 1) whose appending keeps w balanced, preferring 0 when
// both work. Such a letter always exists; throws if w itself is not
// balanced.
int prolong(const Word& w, const BalanceSpec& spec);

// Extends w to the requested length by repeatedly appending prolong's
// letter. Preferring 0 at every step yields the lexicographically least
// balanced completion.
Word complete_to_length(const Word& w, const BalanceSpec& spec,
                        long long target_length);

// Upper bound on how many zeros a reprojection from window slope alpha to
// the steeper slope alpha' can insert into a word of length n:
//   jmax = floor((alpha'*n - floor(alpha*n)) / (1 - alpha')).
// Requires 0 < alpha < alpha' < 1.
long long jmax(long long n, Rational alpha, Rational alpha_prime);

// Rebalances an (alpha, r)-balanced word against the steeper slope alpha'
// by scanning the letters left to right and inserting, before each letter,
// the minimal number of 0s that keeps the output (alpha', r)-balanced.
// The input is a subsequence of the output and only 0s are inserted.
Word reproject(const Word& w, Rational alpha, Rational alpha_prime,
               long long r);

// Two-sided counting constant K relating balanced counts at slopes alpha
// and alpha' (the larger of the constants for the two scan directions):
//   |B_{n,alpha',r}| <= K * |B_{n,alpha,r}|  and
//   |B_{n,alpha,r}|  <= K * |B_{n,alpha',r}|.
mpz_class continuity_bound(long long n, Rational alpha, Rational alpha_prime,
                           long long r);

}  // namespace balword::words
