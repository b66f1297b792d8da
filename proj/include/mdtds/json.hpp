#pragma once

#include "mdtds/bank.hpp"
#include "mdtds/circle.hpp"
#include "mdtds/engine.hpp"

#include <json.hpp>

#include <limits>

namespace mdt::io {

using json = nlohmann::json;

// Words are stored in word text format, rationals as "p/q" strings and
// doubles as JSON numbers (printed with round-trip precision).
Word word_from_json(json const &j);

template <typename Scalar>
json scalar_to_json(Scalar const &v)
{
  if constexpr (is_exact_v<Scalar>) {
    return to_string(v);
  } else {
    return v;
  }
}

template <typename Scalar>
Scalar scalar_from_json(json const &j)
{
  if constexpr (is_exact_v<Scalar>) {
    return parse_rational(j.get<std::string>());
  } else {
    return j.get<double>();
  }
}

template <typename Scalar>
json to_json(PeriodicityVerdict<Scalar> const &v)
{
  if (auto const *ok = std::get_if<VerifiedUpTo>(&v)) {
    return {{"verdict", "verified_up_to"}, {"depth_t", ok->depth_t}, {"depth_r", ok->depth_r}};
  }
  auto const &c = std::get<Counterexample<Scalar>>(v);
  return {{"verdict", "counterexample"},
          {"t", to_string(c.t)},
          {"r", to_string(c.r)},
          {"lhs", scalar_to_json(c.lhs)},
          {"rhs", scalar_to_json(c.rhs)}};
}

template <typename Scalar>
PeriodicityVerdict<Scalar> periodicity_from_json(json const &j)
{
  if (j.at("verdict") == "verified_up_to") { return VerifiedUpTo{j.at("depth_t").get<long>(), j.at("depth_r").get<long>()}; }
  if (j.at("verdict") != "counterexample") { throw ParseError("unknown periodicity verdict"); }
  return Counterexample<Scalar>{word_from_json(j.at("t")), word_from_json(j.at("r")), scalar_from_json<Scalar>(j.at("lhs")),
                                scalar_from_json<Scalar>(j.at("rhs"))};
}

json            to_json(BankPeriodicity const &v);
BankPeriodicity bank_periodicity_from_json(json const &j);

json             to_json(CircleSetVerdict const &v);
CircleSetVerdict circle_verdict_from_json(json const &j);

json       to_json(Trichotomy const &t);
Trichotomy trichotomy_from_json(json const &j);

} // namespace mdt::io
