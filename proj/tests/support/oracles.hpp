#pragma once

// Independent reference implementations. None of these call into the library's
// algorithms; they work on plain letter vectors and explicit sums.

#include "mdtds/rational.hpp"
#include "mdtds/word.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Letters = std::vector<std::pair<int, int>>; // (generator, ±1)

inline Letters reduce(Letters const &in)
{
  Letters out;
  for (auto const &l : in) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Letters expand(mdt::Word const &w)
{
  Letters out;
  for (auto const &r : w.runs()) {
    int const s = r.exp > 0 ? 1 : -1;
    for (long k = 0; k < (r.exp > 0 ? r.exp : -r.exp); ++k) { out.emplace_back(r.gen.index, s); }
  }
  return out;
}

inline Letters concat(Letters a, Letters const &b)
{
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Letters invert(Letters const &a)
{
  Letters out(a.rbegin(), a.rend());
  for (auto &l : out) { l.second = -l.second; }
  return out;
}

inline std::string key(Letters const &a)
{
  std::string s;
  for (auto const &[g, e] : a) { s += std::to_string(g) + (e > 0 ? "+" : "-") + "."; }
  return s;
}

// Breadth-first ball built by extending words one level at a time.
inline std::vector<Letters> ball(int rank, long n)
{
  std::vector<Letters> all{{}};
  std::vector<Letters> frontier{{}};
  for (long d = 1; d <= n; ++d) {
    std::vector<Letters> next;
    for (auto const &w : frontier) {
      for (int g = 1; g <= rank; ++g) {
        for (int s : {1, -1}) {
          if (!w.empty() && w.back().first == g && w.back().second == -s) { continue; }
          Letters v = w;
          v.emplace_back(g, s);
          next.push_back(v);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

inline std::set<std::string> ball_keys(int rank, long n)
{
  std::set<std::string> out;
  for (auto const &w : ball(rank, n)) { out.insert(key(w)); }
  return out;
}

inline long exp_sum(Letters const &a, int g)
{
  long s = 0;
  for (auto const &l : a) {
    if (l.first == g) { s += l.second; }
  }
  return s;
}

inline long occurrences(Letters const &a, int g)
{
  return std::count_if(a.begin(), a.end(), [g](auto const &l) { return l.first == g; });
}

// f_M applied as a homomorphism: each letter maps to itself or to e, and the images are multiplied in order.
inline bool in_kernel(Letters const &a, std::set<int> const &M)
{
  Letters image;
  for (auto const &l : a) {
    Letters const piece = M.contains(l.first) ? Letters{l} : Letters{};
    image = reduce(concat(image, piece));
  }
  return image.empty();
}

// Σ_{t ∈ V_n} (−1)^{|t|}, by walking the explicit ball.
inline mdt::Integer sign_sum(int rank, long n)
{
  mdt::Integer s = 0;
  for (auto const &w : ball(rank, n)) { s += w.size() % 2 == 0 ? 1 : -1; }
  return s;
}

// x · Π_i Σ_{|e| ≤ n} q_i^e, summed over every exponent vector of the box.
inline mdt::Rational box_sum(std::vector<mdt::Rational> const &q, mdt::Rational const &x, long n)
{
  std::vector<long> e(q.size(), -n);
  mdt::Rational total = 0;
  while (true) {
    mdt::Rational term = x;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (long k = 0; k < (e[i] > 0 ? e[i] : -e[i]); ++k) {
        if (e[i] > 0) {
          term *= q[i];
        } else {
          term /= q[i];
        }
      }
    }
    total += term;
    std::size_t i = 0;
    while (i < e.size() && e[i] == n) { e[i++] = -n; }
    if (i == e.size()) { break; }
    ++e[i];
  }
  return total;
}

inline mdt::Rational k_sum(mdt::Rational const &x, long n)
{
  mdt::Rational s = 0;
  mdt::Rational p = 1;
  for (long k = 1; k <= n; ++k) {
    p *= x;
    s += mdt::Rational(k) * p;
  }
  return s;
}

// Letter-by-letter evaluation with caller-supplied maps and inverses.
using Step = std::function<mdt::Rational(mdt::Rational const &)>;

inline mdt::Rational run(std::vector<Step> const &fwd, std::vector<Step> const &bwd, Letters const &t, mdt::Rational x)
{
  for (auto const &[g, s] : t) { x = s > 0 ? fwd[static_cast<std::size_t>(g - 1)](x) : bwd[static_cast<std::size_t>(g - 1)](x); }
  return x;
}

inline mdt::Rational mod1(mdt::Rational const &x)
{
  mdt::Integer f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - mdt::Rational(f);
}

} // namespace oracle
