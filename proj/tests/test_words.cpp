#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <balword/words.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

using namespace balword;
using words::BalanceSpec;
using words::Word;

namespace {

// Independent tally: final deviations of the enumerated words, bucketed
// the same way CountVector indexes them.
std::vector<mpz_class> tally_by_deviation(const std::vector<Word>& ws,
                                          const BalanceSpec& spec) {
  std::vector<mpz_class> out(static_cast<size_t>(2 * spec.r), 0);
  for (const auto& w : ws) {
    long long d = w.zeros() - spec.floor_alpha(w.size());
    out[static_cast<size_t>(d + spec.r - 1)] += 1;
  }
  return out;
}

bool is_subsequence(const Word& sub, const Word& sup) {
  size_t i = 0;
  for (uint8_t c : sup.letters)
    if (i < sub.letters.size() && sub.letters[i] == c) ++i;
  return i == sub.letters.size();
}

}  // namespace

TEST_CASE("word round trip and zero count") {
  Word w = Word::from_string("010011");
  CHECK(w.str() == "010011");
  CHECK(w.size() == 6);
  CHECK(w.zeros() == 3);
  CHECK(Word::from_string("").size() == 0);
  CHECK_THROWS_AS(Word::from_string("012"), std::invalid_argument);
}

TEST_CASE("balance spec validation") {
  CHECK_THROWS_AS(BalanceSpec(2, 4, 1), std::invalid_argument);  // not reduced
  CHECK_THROWS_AS(BalanceSpec(0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(BalanceSpec(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(BalanceSpec(1, 2, 0), std::invalid_argument);
  BalanceSpec s(2, 5, 3);
  CHECK(s.floor_alpha(0) == 0);
  CHECK(s.floor_alpha(5) == 2);
  CHECK(s.floor_alpha(7) == 2);
  CHECK(s.window_lo() == -2);
  CHECK(s.window_hi() == 3);
}

TEST_CASE("deviation profile matches hand computation") {
  BalanceSpec s(1, 2, 1);
  auto prof = words::deviation(Word::from_string("0110"), s);
  // zeros prefix counts 1,1,1,2 minus floors 0,1,1,2.
  CHECK(prof.d == std::vector<long long>{1, 0, 0, 0});
  CHECK(words::is_balanced(Word::from_string("0110"), s));
}

TEST_CASE("explicit small violations") {
  BalanceSpec s(1, 2, 1);
  // "11": d_2 = 0 - 1 = -1 < -r+1 = 0.
  CHECK_FALSE(words::is_balanced(Word::from_string("11"), s));
  // "000": d_3 = 3 - 1 = 2 > r = 1.
  CHECK_FALSE(words::is_balanced(Word::from_string("000"), s));
}

TEST_CASE("dp equals enumeration, totals and per-state") {
  const long long params[4][2] = {{1, 2}, {1, 3}, {2, 5}, {3, 7}};
  for (auto& pq : params)
    for (long long r = 1; r <= 3; ++r) {
      BalanceSpec spec(pq[0], pq[1], r);
      for (long long n = 0; n <= 12; ++n) {
        auto ws = words::enumerate_balanced(n, spec);
        auto cv = words::count_balanced_dp(n, spec);
        CHECK(cv.total() == mpz_class(static_cast<long>(ws.size())));
        CHECK(cv.b == tally_by_deviation(ws, spec));
      }
    }
}

TEST_CASE("enumeration is lexicographic and refuses big n") {
  BalanceSpec s(1, 2, 2);
  auto ws = words::enumerate_balanced(6, s);
  CHECK(std::is_sorted(ws.begin(), ws.end(), [](const Word& a, const Word& b) {
    return a.letters < b.letters;
  }));
  CHECK_THROWS_AS(words::enumerate_balanced(25, s), std::invalid_argument);
}

TEST_CASE("unconstrained count dominates and matches a pascal oracle") {
  // Pascal triangle built by the addition rule only; no gmp binomials.
  const long long N = 20;
  std::vector<std::vector<mpz_class>> pas(N + 1);
  for (long long i = 0; i <= N; ++i) {
    pas[i].assign(static_cast<size_t>(i + 1), 1);
    for (long long j = 1; j < i; ++j)
      pas[i][static_cast<size_t>(j)] =
          pas[i - 1][static_cast<size_t>(j - 1)] + pas[i - 1][static_cast<size_t>(j)];
  }
  const long long params[3][3] = {{1, 2, 1}, {2, 5, 2}, {1, 3, 3}};
  for (auto& pr : params) {
    BalanceSpec spec(pr[0], pr[1], pr[2]);
    for (long long n = 0; n <= N; ++n) {
      mpz_class want = 0;
      for (long long k = 0; k <= n; ++k) {
        long long d = k - spec.floor_alpha(n);
        if (d >= spec.window_lo() && d <= spec.window_hi())
          want += pas[n][static_cast<size_t>(k)];
      }
      CHECK(words::count_unconstrained(n, spec) == want);
      CHECK(words::count_balanced_dp(n, spec).total() <= want);
    }
  }
}

TEST_CASE("complement is an involution that reflects the window") {
  CHECK(words::complement(Word::from_string("0110")).str() == "1001");
  BalanceSpec s(2, 5, 2);
  BalanceSpec sc = s.complemented();
  CHECK(sc.p == 3);
  // The 0<->1 flip sends deviation d_k to -d_k + [n does not divide k],
  // so the image window is position dependent: it reflects to [-r, r-1]
  // exactly at prefix lengths divisible by the period, and stays the
  // native (-r+1..r] elsewhere.
  auto image_lo = [&](long long k) { return k % sc.n == 0 ? -s.r : -s.r + 1; };
  auto image_hi = [&](long long k) { return k % sc.n == 0 ? s.r - 1 : s.r; };
  for (long long n = 0; n <= 10; ++n) {
    auto ws = words::enumerate_balanced(n, s);
    long long reflected = 0;
    for (long long bits = 0; bits < (1LL << n); ++bits) {
      std::vector<uint8_t> letters(static_cast<size_t>(n));
      for (long long i = 0; i < n; ++i)
        letters[static_cast<size_t>(i)] = static_cast<uint8_t>((bits >> i) & 1);
      Word v(letters);
      auto prof = words::deviation(v, sc);
      bool inside = true;
      for (size_t idx = 0; idx < prof.d.size(); ++idx) {
        long long k = static_cast<long long>(idx) + 1;
        if (prof.d[idx] < image_lo(k) || prof.d[idx] > image_hi(k))
          inside = false;
      }
      reflected += inside;
    }
    CHECK(static_cast<long long>(ws.size()) == reflected);
    for (const auto& w : ws) {
      Word c = words::complement(w);
      CHECK(words::complement(c) == w);
      auto prof = words::deviation(c, sc);
      for (size_t idx = 0; idx < prof.d.size(); ++idx) {
        long long k = static_cast<long long>(idx) + 1;
        CHECK(prof.d[idx] >= image_lo(k));
        CHECK(prof.d[idx] <= image_hi(k));
      }
    }
  }
}

TEST_CASE("complemented counts are sandwiched one window step apart") {
  for (auto& pq : {std::pair<long long, long long>{2, 5}, {1, 3}})
    for (long long r = 2; r <= 3; ++r) {
      BalanceSpec s(pq.first, pq.second, r);
      BalanceSpec below(pq.second - pq.first, pq.second, r - 1);
      BalanceSpec above(pq.second - pq.first, pq.second, r + 1);
      for (long long n = 0; n <= 12; ++n) {
        auto mid = words::count_balanced_dp(n, s).total();
        CHECK(words::count_balanced_dp(n, below).total() <= mid);
        CHECK(mid <= words::count_balanced_dp(n, above).total());
      }
    }
}

TEST_CASE("prolong and complete_to_length stay balanced") {
  BalanceSpec s(2, 5, 1);
  Word w;  // empty
  for (int i = 0; i < 30; ++i) {
    int letter = words::prolong(w, s);
    w.letters.push_back(static_cast<uint8_t>(letter));
    REQUIRE(words::is_balanced(w, s));
  }
  Word done = words::complete_to_length(Word(), s, 25);
  CHECK(done.size() == 25);
  CHECK(words::is_balanced(done, s));
  // Preferring 0 gives the lexicographically least balanced completion.
  auto all = words::enumerate_balanced(10, s);
  Word least = words::complete_to_length(Word(), s, 10);
  REQUIRE(!all.empty());
  CHECK(least == all.front());
  CHECK_THROWS_AS(words::prolong(Word::from_string("11111"), s),
                  std::invalid_argument);
}

TEST_CASE("jmax formula on hand cases") {
  // alpha = 1/2 -> 3/5, n = 40: floor((3/5*40 - 20)/(2/5)) = 10.
  CHECK(words::jmax(40, Rational(1, 2), Rational(3, 5)) == 10);
  CHECK(words::jmax(0, Rational(1, 2), Rational(3, 5)) == 0);
  CHECK_THROWS_AS(words::jmax(10, Rational(3, 5), Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("reproject output: balanced, zero-inserting, bounded") {
  const Rational a(1, 2), ap(3, 5);
  const long long r = 3;
  BalanceSpec from(1, 2, r), to(3, 5, r);
  for (long long n : {6, 8, 10}) {
    auto ws = words::enumerate_balanced(n, from);
    for (const auto& w : ws) {
      Word out = words::reproject(w, a, ap, r);
      CHECK(words::is_balanced(out, to));
      CHECK(is_subsequence(w, out));
      long long inserted = out.size() - w.size();
      CHECK(inserted >= 0);
      CHECK(inserted <= words::jmax(n, a, ap));
      CHECK(out.zeros() == w.zeros() + inserted);  // only zeros go in
    }
  }
}

TEST_CASE("continuity bound is two-sided on exhaustive counts") {
  const Rational a(1, 2), ap(3, 5);
  const long long r = 3;
  BalanceSpec sa(1, 2, r), sb(3, 5, r);
  for (long long n = 0; n <= 12; ++n) {
    mpz_class K = words::continuity_bound(n, a, ap, r);
    CHECK(K >= 1);
    mpz_class ca(static_cast<long>(words::enumerate_balanced(n, sa).size()));
    mpz_class cb(static_cast<long>(words::enumerate_balanced(n, sb).size()));
    CHECK(ca <= K * cb);
    CHECK(cb <= K * ca);
  }
}

TEST_CASE("count vector window accessor") {
  BalanceSpec s(1, 2, 2);
  auto cv = words::count_balanced_dp(8, s);
  mpz_class sum = 0;
  for (long long d = s.window_lo(); d <= s.window_hi(); ++d)
    sum += cv.at_deviation(d);
  CHECK(sum == cv.total());
  CHECK_THROWS_AS(cv.at_deviation(s.window_hi() + 1), std::out_of_range);
}
