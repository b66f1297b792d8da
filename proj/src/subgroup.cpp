#include "mdtds/subgroup.hpp"

#include "mdtds/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace mdt {

namespace subgroup {

bool operator==(Intersection const &a, Intersection const &b) { return a.parts == b.parts; }

} // namespace subgroup

namespace {

template <class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};

void check_gens(std::set<int> const &gens, int rank, char const *what)
{
  for (int g : gens) {
    if (g < 1 || g > rank) {
      throw InvalidArgument(std::string(what) + ": generator " + std::to_string(g) + " out of range 1.." +
                            std::to_string(rank));
    }
  }
}

Word from_letters(std::vector<SignedLetter>::const_iterator first, std::vector<SignedLetter>::const_iterator last)
{
  std::vector<Run> runs;
  for (auto it = first; it != last; ++it) { runs.push_back({it->gen, it->sign}); }
  return Word(std::move(runs));
}

} // namespace

SubgroupSpec::SubgroupSpec(int rank, Variant v) : rank_(rank), v_(std::move(v))
{
  if (rank < 1) { throw InvalidArgument("subgroup of a free group needs |S| >= 1"); }
  std::visit(overloaded{
               [](subgroup::FullGroup const &) {},
               [&](subgroup::Cyclic const &c) {
                 if (c.u.is_identity()) { throw InvalidArgument("cyclic subgroup generator must not be e"); }
                 if (max_generator(c.u) > rank) { throw InvalidArgument("cyclic generator uses s_i beyond |S|"); }
               },
               [&](subgroup::Balanced const &b) {
                 if (b.gens.empty()) { throw InvalidArgument("balanced subgroup needs a nonempty generator set"); }
                 check_gens(b.gens, rank, "balanced");
               },
               [&](subgroup::EvenCount const &e) {
                 if (e.gens.empty()) { throw InvalidArgument("even-count subgroup needs a nonempty set A"); }
                 check_gens(e.gens, rank, "even-count");
               },
               [&](subgroup::Kernel const &k) {
                 if (k.gens.size() < 2) { throw InvalidArgument("kernel subgroup K_M needs |M| > 1"); }
                 check_gens(k.gens, rank, "kernel");
               },
               [&](subgroup::Intersection const &i) {
                 if (i.parts.empty()) { throw InvalidArgument("intersection needs at least one subgroup"); }
                 for (auto const &p : i.parts) {
                   if (p.rank() != rank) { throw InvalidArgument("intersection of subgroups of different groups"); }
                 }
               },
             },
             v_);
}

SubgroupSpec SubgroupSpec::balanced_all(int rank)
{
  std::set<int> all;
  for (int i = 1; i <= rank; ++i) { all.insert(i); }
  return balanced(rank, std::move(all));
}

SubgroupSpec SubgroupSpec::intersection(int rank, std::vector<SubgroupSpec> parts)
{
  return {rank, subgroup::Intersection{std::move(parts)}};
}

bool SubgroupSpec::is_balanced_all() const
{
  auto const *b = std::get_if<subgroup::Balanced>(&v_);
  return b != nullptr && static_cast<int>(b->gens.size()) == rank_;
}

CyclicDecomposition cyclic_decomposition(Word const &u)
{
  auto const L = letters(u);
  std::size_t i = 0;
  std::size_t j = L.size();
  while (j - i >= 2 && L[i] == L[j - 1].inverse()) {
    ++i;
    --j;
  }
  return {from_letters(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(i)),
          from_letters(L.begin() + static_cast<std::ptrdiff_t>(i), L.begin() + static_cast<std::ptrdiff_t>(j))};
}

namespace {

// For u = w c w^-1 with c cyclically reduced, |u^n| = 2|w| + |n||c|, so the
// only candidate exponents are ±(|t| - 2|w|)/|c|.
bool cyclic_member(Word const &u, Word const &t)
{
  if (t.is_identity()) { return true; }
  auto const [w, c] = cyclic_decomposition(u);
  long const rest = t.length() - 2 * w.length();
  if (rest <= 0 || rest % c.length() != 0) { return false; }
  long const n = rest / c.length();
  Word const winv = inverse(w);
  return t == w * power(c, n) * winv || t == w * power(c, -n) * winv;
}

} // namespace

bool member(SubgroupSpec const &spec, Word const &t)
{
  return std::visit(overloaded{
                      [](subgroup::FullGroup const &) { return true; },
                      [&](subgroup::Cyclic const &c) { return cyclic_member(c.u, t); },
                      [&](subgroup::Balanced const &b) {
                        return std::all_of(b.gens.begin(), b.gens.end(),
                                           [&](int g) { return exponent_sum(t, GeneratorId{g}) == 0; });
                      },
                      [&](subgroup::EvenCount const &e) {
                        long total = 0;
                        for (Run const &r : t.runs()) {
                          if (e.gens.contains(r.gen.index)) { total += std::labs(r.exp); }
                        }
                        return total % 2 == 0;
                      },
                      [&](subgroup::Kernel const &k) {
                        std::vector<Run> kept;
                        for (Run const &r : t.runs()) {
                          if (k.gens.contains(r.gen.index)) { kept.push_back(r); }
                        }
                        return Word(std::move(kept)).is_identity();
                      },
                      [&](subgroup::Intersection const &i) {
                        return std::all_of(i.parts.begin(), i.parts.end(),
                                           [&](SubgroupSpec const &p) { return member(p, t); });
                      },
                    },
                    spec.variant());
}

namespace {

void flatten(SubgroupSpec const &spec, std::vector<SubgroupSpec const *> &out)
{
  if (auto const *i = std::get_if<subgroup::Intersection>(&spec.variant())) {
    for (auto const &p : i->parts) { flatten(p, out); }
  } else {
    out.push_back(&spec);
  }
}

// Rank over GF(2) of the indicator vectors of the sets.
int gf2_rank(std::vector<std::vector<std::uint8_t>> rows)
{
  int rank = 0;
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols; ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](auto const &r) { return r[col] != 0; });
    if (pivot == rows.end()) { continue; }
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) != rank && rows[r][col] != 0) {
        for (std::size_t k = 0; k < cols; ++k) { rows[r][k] ^= rows[static_cast<std::size_t>(rank)][k]; }
      }
    }
    ++rank;
  }
  return rank;
}

SubgroupIndex leaf_index(SubgroupSpec const &spec)
{
  using K = SubgroupIndex::Kind;
  return std::visit(overloaded{
                      [](subgroup::FullGroup const &) { return SubgroupIndex{K::finite, 1}; },
                      [&](subgroup::Cyclic const &c) {
                        // In ℤ (|S| = 1), <s^k> has index |k|.
                        if (spec.rank() == 1) { return SubgroupIndex{K::finite, Integer(std::labs(c.u.runs()[0].exp))}; }
                        return SubgroupIndex{K::infinite, 0};
                      },
                      [](subgroup::Balanced const &) { return SubgroupIndex{K::infinite, 0}; },
                      [](subgroup::EvenCount const &) { return SubgroupIndex{K::finite, 2}; },
                      [](subgroup::Kernel const &) { return SubgroupIndex{K::infinite, 0}; },
                      [](subgroup::Intersection const &) { return SubgroupIndex{K::unknown, 0}; },
                    },
                    spec.variant());
}

} // namespace

SubgroupMeta meta(SubgroupSpec const &spec)
{
  using K = SubgroupIndex::Kind;
  SubgroupMeta out;

  std::vector<SubgroupSpec const *> leaves;
  flatten(spec, leaves);
  if (leaves.size() == 1) {
    out.index = leaf_index(*leaves.front());
  } else {
    // Intersections: any infinite-index part makes the whole infinite. If
    // every part is G or some H_A, the intersection is the kernel of the
    // parity map G -> (ℤ/2)^m, whose image has size 2^rank.
    bool infinite = false;
    bool parity_only = true;
    std::vector<std::vector<std::uint8_t>> rows;
    for (auto const *leaf : leaves) {
      SubgroupIndex const li = leaf_index(*leaf);
      if (li.kind == K::infinite) { infinite = true; }
      if (std::holds_alternative<subgroup::FullGroup>(leaf->variant())) { continue; }
      if (auto const *e = std::get_if<subgroup::EvenCount>(&leaf->variant())) {
        std::vector<std::uint8_t> row(static_cast<std::size_t>(spec.rank()), 0);
        for (int g : e->gens) { row[static_cast<std::size_t>(g - 1)] = 1; }
        rows.push_back(std::move(row));
        continue;
      }
      parity_only = false;
    }
    if (infinite) {
      out.index = {K::infinite, 0};
    } else if (parity_only) {
      Integer idx;
      mpz_ui_pow_ui(idx.get_mpz_t(), 2, static_cast<unsigned long>(gf2_rank(rows)));
      out.index = {K::finite, idx};
    } else {
      out.index = {K::unknown, 0};
    }
  }

  for (int i = 1; i <= spec.rank(); ++i) {
    if (member(spec, Word::generator(i))) {
      out.generator_in_S = GeneratorId{i};
      break;
    }
  }
  return out;
}

std::vector<Word> subgroup_ball(SubgroupSpec const &spec, long n, std::uint64_t cap)
{
  std::vector<Word> out;
  for_each_in_ball(
    spec.rank(), n,
    [&](Word const &w, long) {
      if (member(spec, w)) { out.push_back(w); }
    },
    cap);
  return out;
}

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) { s.remove_prefix(1); }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) { s.remove_suffix(1); }
  return s;
}

std::set<int> parse_gen_list(std::string_view s, std::string_view whole)
{
  std::set<int> out;
  s = trim(s);
  if (s.empty()) { return out; }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    auto item  = trim(s.substr(pos, comma == s.npos ? s.npos : comma - pos));
    int v{};
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw ParseError("bad generator list in subgroup '" + std::string(whole) + "'");
    }
    out.insert(v);
    if (comma == s.npos) { break; }
    pos = comma + 1;
  }
  return out;
}

std::string join(std::set<int> const &s)
{
  std::string out;
  for (int g : s) {
    if (!out.empty()) { out += ','; }
    out += std::to_string(g);
  }
  return out;
}

} // namespace

SubgroupSpec parse_subgroup(std::string_view text, int rank)
{
  auto s = trim(text);
  try {
    if (s == "full") { return SubgroupSpec::full(rank); }
    if (s.starts_with("cyclic:")) { return SubgroupSpec::cyclic(rank, parse_word(s.substr(7), rank)); }
    if (s.starts_with("bal:")) {
      auto gens = parse_gen_list(s.substr(4), text);
      return gens.empty() ? SubgroupSpec::balanced_all(rank) : SubgroupSpec::balanced(rank, std::move(gens));
    }
    if (s.starts_with("even:")) { return SubgroupSpec::even(rank, parse_gen_list(s.substr(5), text)); }
    if (s.starts_with("ker:")) { return SubgroupSpec::kernel(rank, parse_gen_list(s.substr(4), text)); }
    if (s.starts_with("and(") && s.ends_with(")")) {
      auto body = s.substr(4, s.size() - 5);
      std::vector<SubgroupSpec> parts;
      int depth = 0;
      std::size_t start = 0;
      for (std::size_t k = 0; k <= body.size(); ++k) {
        if (k == body.size() || (body[k] == ';' && depth == 0)) {
          parts.push_back(parse_subgroup(body.substr(start, k - start), rank));
          start = k + 1;
        } else if (body[k] == '(') {
          ++depth;
        } else if (body[k] == ')') {
          --depth;
        }
      }
      return SubgroupSpec::intersection(rank, std::move(parts));
    }
  } catch (InvalidArgument const &e) {
    throw ParseError(e.what());
  }
  throw ParseError("unrecognised subgroup spec '" + std::string(text) + "'");
}

std::string to_string(SubgroupSpec const &spec)
{
  return std::visit(overloaded{
                      [](subgroup::FullGroup const &) { return std::string("full"); },
                      [](subgroup::Cyclic const &c) { return "cyclic:" + to_string(c.u); },
                      [&](subgroup::Balanced const &b) {
                        return spec.is_balanced_all() ? std::string("bal:") : "bal:" + join(b.gens);
                      },
                      [](subgroup::EvenCount const &e) { return "even:" + join(e.gens); },
                      [](subgroup::Kernel const &k) { return "ker:" + join(k.gens); },
                      [](subgroup::Intersection const &i) {
                        std::string out = "and(";
                        for (std::size_t k = 0; k < i.parts.size(); ++k) {
                          if (k > 0) { out += ';'; }
                          out += to_string(i.parts[k]);
                        }
                        return out + ")";
                      },
                    },
                    spec.variant());
}

} // namespace mdt
