#pragma once

#include "mdtds/ball.hpp"
#include "mdtds/family.hpp"
#include "mdtds/subgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

namespace mdt {

namespace detail {

template <typename Scalar>
Scalar step(MapFamily<Scalar> const &family, Scalar const &v, SignedLetter s, Word const &at)
{
  Scalar out;
  try {
    out = family.apply(s.gen.index, v, s.sign);
  } catch (NotRepresentable const &e) {
    throw NotRepresentable(e.detail(), to_string(at));
  }
  if (!family.domain().contains(out)) {
    throw DomainViolation("value " + ScalarTraits<Scalar>::str(out) + " escapes X = " + family.domain().str(),
                          to_string(at));
  }
  return out;
}

} // namespace detail

/// D_t(x): the letters of t are applied left to right, so that
/// D_{t1 t2}(x) = D_{t2}(D_{t1}(x)). Each letter is one map application and
/// every intermediate value is checked against X; a violation reports the
/// prefix of t where the value escaped.
template <typename Scalar>
Scalar evaluate(MapFamily<Scalar> const &family, Word const &t, Scalar const &x)
{
  if (max_generator(t) > family.rank()) { throw InvalidArgument("word uses a generator the family does not have"); }
  if (!family.domain().contains(x)) {
    throw DomainViolation("start point " + ScalarTraits<Scalar>::str(x) + " is outside X", "e");
  }
  Scalar v = x;
  Word   prefix;
  for (Run const &r : t.runs()) {
    SignedLetter const s{r.gen, r.exp > 0 ? +1 : -1};
    for (long j = 0; j < std::labs(r.exp); ++j) {
      prefix.push_back(s);
      v = detail::step(family, v, s, prefix);
    }
  }
  return v;
}

/// Walks a cursor over the ball (or one subtree of it), handing
/// visitor(word, depth, D_word(x)) to the caller. Each visited non-root word
/// costs one map application on the value of its parent, which is kept on a
/// per-depth stack. Returns the number of map applications.
template <typename Scalar, typename Visitor>
std::uint64_t walk_orbit(MapFamily<Scalar> const &family, Scalar const &x, BallCursor &cursor, Visitor &&visit)
{
  std::vector<Scalar> stack{x};
  std::uint64_t       applications = 0;
  while (cursor.next()) {
    auto const d = static_cast<std::size_t>(cursor.depth());
    if (d > 0) {
      stack.resize(d + 1);
      stack[d] = detail::step(family, stack[d - 1], cursor.appended(), cursor.word());
      ++applications;
    }
    visit(cursor.word(), cursor.depth(), stack[d]);
  }
  return applications;
}

/// Orbit of x restricted to V_n, in traversal order.
template <typename Scalar>
struct OrbitBall
{
  long                                               radius = 0;
  Scalar                                             base;
  std::vector<std::pair<Word, Scalar>>               entries;
  std::unordered_map<Word, std::size_t, WordHash>    index;
  std::uint64_t                                      applications = 0;

  Scalar const &at(Word const &t) const { return entries.at(index.at(t)).second; }
  std::size_t   size() const { return entries.size(); }
};

template <typename Scalar>
OrbitBall<Scalar> orbit_ball(MapFamily<Scalar> const &family, Scalar const &x, long n, std::uint64_t cap = kDefaultNodeCap)
{
  if (!family.domain().contains(x)) {
    throw DomainViolation("start point " + ScalarTraits<Scalar>::str(x) + " is outside X", "e");
  }
  OrbitBall<Scalar> out;
  out.radius = n;
  out.base   = x;
  BallCursor cursor(family.rank(), n, cap);
  out.applications = walk_orbit(family, x, cursor, [&](Word const &w, long, Scalar const &v) {
    out.index.emplace(w, out.entries.size());
    out.entries.emplace_back(w, v);
  });
  return out;
}

/// max_i |f_i(x) - x|. x is a fixed point of the whole system iff it is a
/// fixed point of every generator map.
template <typename Scalar>
Scalar fixed_point_residual(MapFamily<Scalar> const &family, Scalar const &x)
{
  Scalar worst = ScalarTraits<Scalar>::zero();
  for (int i = 1; i <= family.rank(); ++i) {
    Scalar const v = detail::step(family, x, SignedLetter{GeneratorId{i}, +1}, Word::generator(i));
    Scalar const d = ScalarTraits<Scalar>::abs(Scalar(v - x));
    if (d > worst) { worst = d; }
  }
  return worst;
}

template <typename Scalar>
bool is_fixed(MapFamily<Scalar> const &family, Scalar const &x)
{
  Scalar const r = fixed_point_residual(family, x);
  if constexpr (is_exact_v<Scalar>) {
    return r == 0;
  } else {
    return r <= family.tolerance();
  }
}

struct VerifiedUpTo
{
  long depth_t = 0;
  long depth_r = 0;
  friend bool operator==(VerifiedUpTo const &, VerifiedUpTo const &) = default;
};

// D_{rt}(x) = lhs differs from D_t(x) = rhs, with r ∈ H.
template <typename Scalar>
struct Counterexample
{
  Word   t;
  Word   r;
  Scalar lhs;
  Scalar rhs;
  friend bool operator==(Counterexample const &, Counterexample const &) = default;
};

/// Outcome of a bounded check. Definitions quantify over all of G and H, so a
/// passing check only ever certifies the window it looked at.
template <typename Scalar>
using PeriodicityVerdict = std::variant<VerifiedUpTo, Counterexample<Scalar>>;

template <typename Scalar>
bool verified(PeriodicityVerdict<Scalar> const &v)
{
  return std::holds_alternative<VerifiedUpTo>(v);
}

/// D_y(x) = x for every y ∈ H ∩ V_depth. A counterexample has t = e.
template <typename Scalar>
PeriodicityVerdict<Scalar> is_H_fixed(MapFamily<Scalar> const &family, SubgroupSpec const &spec, Scalar const &x,
                                      long depth, std::uint64_t cap = kDefaultNodeCap)
{
  if (depth < 1) { throw InvalidArgument("is_H_fixed needs depth >= 1"); }
  for (Word const &y : subgroup_ball(spec, depth, cap)) {
    Scalar const v = evaluate(family, y, x);
    if (!ScalarTraits<Scalar>::close(v, x, family.tolerance())) { return Counterexample<Scalar>{Word{}, y, v, x}; }
  }
  return VerifiedUpTo{0, depth};
}

/// D_{rt}(x) = D_t(x) for t ∈ V_{depth_t}, r ∈ H ∩ V_{depth_r}. The product
/// rt is reduced and evaluated as a word. Pairs are scanned with t in ball
/// order and r in ball order, so the reported counterexample is the first one
/// in that order.
template <typename Scalar>
PeriodicityVerdict<Scalar> is_H_periodic(MapFamily<Scalar> const &family, SubgroupSpec const &spec, Scalar const &x,
                                         long depth_t, long depth_r, std::uint64_t cap = kDefaultNodeCap)
{
  if (depth_t < 1 || depth_r < 1) { throw InvalidArgument("is_H_periodic needs depth_t, depth_r >= 1"); }
  auto const H = subgroup_ball(spec, depth_r, cap);
  std::optional<Counterexample<Scalar>> found;
  BallCursor cursor(family.rank(), depth_t, cap);
  std::vector<Scalar> stack;
  while (!found && cursor.next()) {
    auto const d = static_cast<std::size_t>(cursor.depth());
    stack.resize(d + 1);
    stack[d] = d == 0 ? x : detail::step(family, stack[d - 1], cursor.appended(), cursor.word());
    for (Word const &r : H) {
      Scalar const lhs = evaluate(family, r * cursor.word(), x);
      if (!ScalarTraits<Scalar>::close(lhs, stack[d], family.tolerance())) {
        found = Counterexample<Scalar>{cursor.word(), r, lhs, stack[d]};
        break;
      }
    }
  }
  if (found) { return *found; }
  return VerifiedUpTo{depth_t, depth_r};
}

/// Sequence t_1 < t_2 < ... along which D is sampled: either t_n = prefix · period^n,
/// or t_n = the first n letters of an explicit stream.
struct PeriodicRay
{
  Word prefix;
  Word period;
};
struct LetterRay
{
  std::vector<SignedLetter> letters;
};
using Ray = std::variant<PeriodicRay, LetterRay>;

template <typename Scalar>
struct OmegaSample
{
  bool                monotone = true;  // false: the ray is not strictly increasing and was skipped
  bool                diverged = false; // |D_{t_n}(x)| exceeded the divergence bound
  long                steps    = 0;     // number of t_n evaluated
  std::vector<Scalar> clusters;         // representatives of the tail clusters, ascending
};

/// Approximates part of ω(x): evaluates D at t_1..t_N, then clusters the
/// second half of the values greedily with radius cluster_eps.
template <typename Scalar>
OmegaSample<Scalar> omega_sample(MapFamily<Scalar> const &family, Scalar const &x, Ray const &ray, long N,
                                 Scalar const &cluster_eps, Scalar const &divergence_bound = Scalar(1000000))
{
  if (N < 1) { throw InvalidArgument("omega_sample needs N >= 1"); }
  using T = ScalarTraits<Scalar>;
  OmegaSample<Scalar> out;
  std::vector<Scalar> values;
  Word                t;
  Scalar              v = x;

  auto extend = [&](Word const &next_t, Scalar next_v) {
    if (!(is_prefix(t, next_t) && next_t.length() > t.length())) {
      out.monotone = false;
      return false;
    }
    t = next_t;
    v = std::move(next_v);
    values.push_back(v);
    ++out.steps;
    if (T::abs(v) > divergence_bound) {
      out.diverged = true;
      return false;
    }
    return true;
  };

  if (auto const *p = std::get_if<PeriodicRay>(&ray)) {
    if (p->period.is_identity()) { throw InvalidArgument("periodic ray needs a nontrivial period"); }
    t = p->prefix;
    v = evaluate(family, p->prefix, x);
    for (long n = 1; n <= N; ++n) {
      if (!extend(t * p->period, evaluate(family, p->period, v))) { break; }
    }
  } else {
    auto const &ls = std::get<LetterRay>(ray).letters;
    for (long n = 0; n < N && n < static_cast<long>(ls.size()); ++n) {
      Word next = t;
      next.push_back(ls[static_cast<std::size_t>(n)]);
      Scalar nv = next.length() > t.length() ? detail::step(family, v, ls[static_cast<std::size_t>(n)], next) : v;
      if (!extend(next, std::move(nv))) { break; }
    }
  }
  if (!out.monotone || out.diverged) { return out; }

  std::vector<Scalar> tail(values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2), values.end());
  std::sort(tail.begin(), tail.end());
  for (Scalar const &s : tail) {
    if (out.clusters.empty() || T::abs(Scalar(s - out.clusters.back())) > cluster_eps) {
      out.clusters.push_back(s);
    }
  }
  return out;
}

template <typename Scalar>
struct StableSetResult
{
  bool                asymptotic = false;
  std::optional<Word> generator; // h such that D_{h^step}(y) is within eps of x
  long                step = 0;

  explicit operator bool() const { return asymptotic; }
};

/// Looks for t_n = h^n ∈ H (h taken from the spec: u and u^-1 for a cyclic
/// subgroup, otherwise the nontrivial elements of H ∩ V_ray_depth) with
/// D_{t_n}(y) within eps of x by step N. Rays that are not strictly
/// increasing, or that leave X, are skipped. A negative answer only means
/// nothing was found within the bound.
template <typename Scalar>
StableSetResult<Scalar> stable_set_check(MapFamily<Scalar> const &family, SubgroupSpec const &spec,
                                         Scalar const &x_periodic, Scalar const &y, long N, Scalar const &eps,
                                         long ray_depth = 2)
{
  using T = ScalarTraits<Scalar>;
  if (T::abs(Scalar(y - x_periodic)) <= eps) { return {true, Word{}, 0}; }

  std::vector<Word> gens;
  if (auto const *c = std::get_if<subgroup::Cyclic>(&spec.variant())) {
    gens = {c->u, inverse(c->u)};
  } else {
    for (Word const &h : subgroup_ball(spec, ray_depth)) {
      if (!h.is_identity()) { gens.push_back(h); }
    }
  }
  for (Word const &h : gens) {
    if (!is_prefix(h, h * h)) { continue; }
    Scalar v = y;
    try {
      for (long n = 1; n <= N; ++n) {
        v = evaluate(family, h, v);
        if (T::abs(Scalar(v - x_periodic)) <= eps) { return {true, h, n}; }
      }
    } catch (DomainViolation const &) {
      continue;
    }
  }
  return {};
}

} // namespace mdt
