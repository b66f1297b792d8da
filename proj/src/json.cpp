#include "mdtds/json.hpp"

namespace mdt::io {

Word word_from_json(json const &j) { return parse_word(j.get<std::string>(), std::numeric_limits<int>::max()); }

namespace {

json optional_word(std::optional<Word> const &w) { return w ? json(to_string(*w)) : json(nullptr); }

std::optional<Word> optional_word_from(json const &j)
{
  if (j.is_null()) { return std::nullopt; }
  return word_from_json(j);
}

} // namespace

json to_json(BankPeriodicity const &v)
{
  return {{"verdict", to_string(v.kind)},
          {"witness", optional_word(v.witness)},
          {"witness_multiplier", to_string(v.witness_multiplier)},
          {"depth", v.depth},
          {"reason", v.reason}};
}

BankPeriodicity bank_periodicity_from_json(json const &j)
{
  using K = BankPeriodicity::Kind;
  BankPeriodicity v;
  auto const kind = j.at("verdict").get<std::string>();
  if (kind == "all_positive_reals") {
    v.kind = K::all_positive_reals;
  } else if (kind == "empty") {
    v.kind = K::empty;
  } else if (kind == "undecided") {
    v.kind = K::undecided;
  } else {
    throw ParseError("unknown bank verdict '" + kind + "'");
  }
  v.witness            = optional_word_from(j.at("witness"));
  v.witness_multiplier = parse_rational(j.at("witness_multiplier").get<std::string>());
  v.depth              = j.at("depth").get<long>();
  v.reason             = j.at("reason").get<std::string>();
  return v;
}

json to_json(CircleSetVerdict const &v)
{
  return {{"verdict", to_string(v.kind)}, {"witness", optional_word(v.witness)}, {"depth", v.depth}, {"note", v.note}};
}

CircleSetVerdict circle_verdict_from_json(json const &j)
{
  using K = CircleSetVerdict::Kind;
  CircleSetVerdict v;
  auto const kind = j.at("verdict").get<std::string>();
  if (kind == "full_circle") {
    v.kind = K::full_circle;
  } else if (kind == "empty") {
    v.kind = K::empty;
  } else if (kind == "undecided") {
    v.kind = K::undecided;
  } else {
    throw ParseError("unknown circle verdict '" + kind + "'");
  }
  v.witness = optional_word_from(j.at("witness"));
  v.depth   = j.at("depth").get<long>();
  v.note    = j.at("note").get<std::string>();
  return v;
}

json to_json(Trichotomy const &t)
{
  static char const *names[] = {"zero", "finite", "infinite"};
  return {{"limit", names[static_cast<int>(t.kind)]}, {"coefficient", to_string(t.coefficient)}};
}

Trichotomy trichotomy_from_json(json const &j)
{
  auto const k = j.at("limit").get<std::string>();
  Trichotomy t;
  if (k == "zero") {
    t.kind = Trichotomy::Kind::zero;
  } else if (k == "finite") {
    t.kind = Trichotomy::Kind::finite;
  } else if (k == "infinite") {
    t.kind = Trichotomy::Kind::infinite;
  } else {
    throw ParseError("unknown trichotomy '" + k + "'");
  }
  t.coefficient = parse_rational(j.at("coefficient").get<std::string>());
  return t;
}

} // namespace mdt::io
