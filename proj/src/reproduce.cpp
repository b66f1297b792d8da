#include "mdtds/reproduce.hpp"

#include "mdtds/bank.hpp"
#include "mdtds/cesaro.hpp"
#include "mdtds/circle.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace mdt {

bool ReproReport::pass() const
{
  for (auto const &c : checks) {
    if (!c.pass) { return false; }
  }
  return !checks.empty();
}

namespace {

using Q = Rational;

std::string verdict_str(PeriodicityVerdict<Q> const &v)
{
  if (auto const *ok = std::get_if<VerifiedUpTo>(&v)) {
    return "verified up to (" + std::to_string(ok->depth_t) + ", " + std::to_string(ok->depth_r) + ")";
  }
  auto const &c = std::get<Counterexample<Q>>(v);
  return "counterexample t = " + to_string(c.t) + ", r = " + to_string(c.r) + ": D_rt = " + to_string(c.lhs) +
         ", D_t = " + to_string(c.rhs);
}

std::string set_str(std::vector<Q> const &xs)
{
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) { out += (i ? ", " : "") + to_string(xs[i]); }
  return out + "}";
}

ReproReport sign_study(ReproOptions const &o)
{
  ReproReport r{"sign-sums", {}, {}};
  int const  q    = o.q;
  long const nmax = o.n_max;
  auto const scan = cesaro_scan(sign_family<Q>(q / 2), Q(1), nmax, o.threads);
  bool       exact = true;
  r.table.push_back("n, sum_Vn(-1)^|t|, closed form, C_n");
  for (auto const &rec : scan.records) {
    Integer const closed = sign_ball_sum(rec.n, q);
    exact = exact && rec.ball_sum == Q(closed);
    r.table.push_back(std::to_string(rec.n) + ", " + to_string(rec.ball_sum) + ", " + to_string(closed) + ", " +
                      to_string(rec.mean) + " (" + to_string(rec.mean.get_d()) + ")");
  }
  r.checks.push_back({"enumerated sums equal (-1)^n (q-1)^n", exact, "n = 0.." + std::to_string(nmax)});
  if (nmax >= 12) {
    long const ne = nmax % 2 == 0 ? nmax : nmax - 1;
    long const no = nmax % 2 == 1 ? nmax : nmax - 1;
    Q const    tol(1, 100000);
    Q const    de = abs(sign_cesaro(ne, q) - sign_cesaro_even_limit(q));
    Q const    dd = abs(sign_cesaro(no, q) - sign_cesaro_odd_limit(q));
    r.checks.push_back({"even subsequence near (q-2)/q", de < tol, "|C_" + std::to_string(ne) + " - limit| = " + to_string(de.get_d())});
    r.checks.push_back({"odd subsequence near -(q-2)/q", dd < tol, "|C_" + std::to_string(no) + " - limit| = " + to_string(dd.get_d())});
    Q const gap = abs(sign_cesaro(nmax, q) - sign_cesaro(nmax - 1, q));
    Q const bound = Q(9, 10) * 2 * sign_cesaro_even_limit(q);
    r.checks.push_back({"successive gap stays large (no limit)", gap > bound, "|C_n - C_{n-1}| = " + to_string(gap.get_d())});
  }
  return r;
}

ReproReport affine_square(ReproOptions const &o)
{
  ReproReport r{"affine-square", {}, {}};
  auto const  f = affine_square_family<Q>();
  int const   S = 2;
  SubgroupSpec const H = SubgroupSpec::cyclic(S, parse_word("s1 s2", S));

  // Common fixed points of f1 and f2 among the candidates 0, 1/9, 1/3, 1.
  std::vector<Q> const candidates{Q(0), Q(1, 9), Q(1, 3), Q(1)};
  std::vector<Q>       fixed;
  for (auto const &x : candidates) {
    if (is_fixed(f, x)) { fixed.push_back(x); }
  }
  r.checks.push_back({"Fix(f1) ∩ Fix(f2) = {1}", fixed == std::vector<Q>{Q(1)}, set_str(fixed)});

  // Roots of f1(f2(x)) = x: 3x^2 - 4x + 1 = 0.
  std::vector<Q> const roots{Q(1, 3), Q(1)};
  std::vector<Q>       h_fixed;
  for (auto const &x : roots) {
    auto const v = is_H_fixed(f, H, x, 6);
    r.table.push_back("is_H_fixed(<s1 s2>, " + to_string(x) + ", 6): " + verdict_str(v));
    if (verified(v)) { h_fixed.push_back(x); }
  }
  r.checks.push_back({"Fix(D^H) contains both roots {1/3, 1} of f1(f2(x)) = x", h_fixed == roots,
                      "accepted " + set_str(h_fixed) +
                        "; with letters applied left to right D_{s1 s2} = f2∘f1, whose fixed points are {1/9, 1}"});

  std::vector<Q> const roots21{Q(1, 9), Q(1)};
  std::vector<Q>       h_fixed21;
  for (auto const &x : roots21) {
    if (verified(is_H_fixed(f, H, x, 6))) { h_fixed21.push_back(x); }
  }
  r.table.push_back("is_H_fixed(<s1 s2>) on the roots {1/9, 1} of f2(f1(x)) = x accepts " + set_str(h_fixed21));

  auto const per1 = is_H_periodic(f, H, Q(1), o.depth, o.depth);
  r.checks.push_back({"1 is H-periodic", verified(per1), verdict_str(per1)});
  auto const per3 = is_H_periodic(f, H, Q(1, 3), o.depth, o.depth);
  r.checks.push_back({"1/3 is not H-periodic", !verified(per3), verdict_str(per3)});

  Word const t  = parse_word("s1^2", S);
  Word const y  = parse_word("s1 s2", S);
  Q const    dt = evaluate(f, t, Q(1, 3));
  Q const    dyt = evaluate(f, y * t, Q(1, 3));
  r.checks.push_back({"t = s1^2, r = s1 s2: D_rt(1/3) != D_t(1/3)", dt == Q(5, 8) && dyt == Q(37, 64),
                      "D_t = " + to_string(dt) + ", D_rt = " + to_string(dyt)});
  return r;
}

ReproReport bank_verdicts(ReproOptions const &o)
{
  ReproReport r{"bank-verdicts", {}, {}};
  BankParams const p(o.bank_q);
  auto const       f = bank_family(p);
  int const        S = p.rank();
  std::vector<SubgroupSpec> specs{SubgroupSpec::balanced_all(S), SubgroupSpec::cyclic(S, Word::generator(1)),
                                  SubgroupSpec::even(S, [&] {
                                    std::set<int> all;
                                    for (int i = 1; i <= S; ++i) { all.insert(i); }
                                    return all;
                                  }())};
  bool ok = true;
  for (auto const &spec : specs) {
    auto const v = bank_classify_periodicity(p, spec, 3);
    std::string line = to_string(spec) + ": " + to_string(v.kind);
    if (v.kind == BankPeriodicity::Kind::empty) {
      Q const moved = evaluate(f, *v.witness, Q(1));
      ok = ok && moved != Q(1);
      line += ", witness " + to_string(*v.witness) + " moves 1 to " + to_string(moved);
    } else if (v.kind == BankPeriodicity::Kind::all_positive_reals) {
      for (Q const &x : {Q(1), Q(7, 3)}) {
        auto const per = is_H_periodic(f, spec, x, 3, 3);
        ok = ok && verified(per);
      }
      line += ", engine check at (3, 3) passes";
    }
    r.table.push_back(line);
  }
  r.checks.push_back({"set-level verdicts agree with the generic engine", ok, ""});
  return r;
}

ReproReport bank_cyclic(ReproOptions const &o)
{
  ReproReport r{"bank-cyclic", {}, {}};
  BankParams const p(o.bank_q);
  auto const v = bank_classify_periodicity(p, SubgroupSpec::cyclic(p.rank(), Word::generator(1)), 3);
  bool const ok = v.kind == BankPeriodicity::Kind::empty && v.witness == Word::generator(1);
  r.checks.push_back({"I(<s1>) nonempty gives Per_H = ∅", ok,
                      "witness " + (v.witness ? to_string(*v.witness) : "-") + ", multiplier " + to_string(v.witness_multiplier)});
  return r;
}

ReproReport bank_balanced(ReproOptions const &o)
{
  ReproReport r{"bank-balanced", {}, {}};
  BankParams const p(o.bank_q);
  auto const spec = SubgroupSpec::balanced_all(p.rank());
  auto const ball = subgroup_ball(spec, 5);
  bool all_one = true;
  for (Word const &y : ball) { all_one = all_one && bank_word_multiplier(p, y) == 1; }
  r.checks.push_back({"every y in H^(=) ∩ V_5 has multiplier 1", all_one, std::to_string(ball.size()) + " elements"});
  auto const v = bank_classify_periodicity(p, spec, 3);
  r.checks.push_back({"Per_{H^(=)} = (0, +inf)", v.kind == BankPeriodicity::Kind::all_positive_reals, v.reason});
  return r;
}

ReproReport bank_even(ReproOptions const &o)
{
  ReproReport r{"bank-even", {}, {}};
  BankParams const p(o.bank_q);
  std::set<int> all;
  for (int i = 1; i <= p.rank(); ++i) { all.insert(i); }
  auto const v = bank_classify_periodicity(p, SubgroupSpec::even(p.rank(), all), 3);
  r.checks.push_back({"Per_{H_S} = ∅ with a witness at depth <= 3",
                      v.kind == BankPeriodicity::Kind::empty && v.witness && v.witness->length() <= 3,
                      "witness " + (v.witness ? to_string(*v.witness) : "-") + ", multiplier " + to_string(v.witness_multiplier)});
  return r;
}

ReproReport bank_ball_sums(ReproOptions const &o)
{
  ReproReport r{"bank-ball-sums", {}, {}};
  BankParams const p(o.bank_q);
  auto const lim = bank_cesaro_limit(p);
  r.checks.push_back({"limit from the product formula", true, to_string(lim)});
  r.table.push_back("n, product-formula, free-group-brute, |V_n|, C_n(brute) ~");
  bool differs = true;
  long const nmax = std::min<long>(o.n_max, 8);
  for (long n = 0; n <= nmax; ++n) {
    Q const product = bank_ball_sum_product(p, Q(1), n);
    Q const brute = bank_ball_sum_brute(p, Q(1), n);
    Q const mean  = brute / Q(ball_size(n, p.rank()));
    if (n >= 1) { differs = differs && product != brute; }
    r.table.push_back(std::to_string(n) + ", " + to_string(product) + ", " + to_string(brute) + ", " +
                      to_string(ball_size(n, p.rank())) + ", " + to_string(mean.get_d()) +
                      (product != brute ? "  MISMATCH" : ""));
  }
  r.checks.push_back({"box-sum formula differs from the free-group ball sum for n >= 1", differs,
                      "the Cesàro limit above is derived from the box sum, not from V_n"});
  return r;
}

ReproReport circle_fixed(ReproOptions const &)
{
  ReproReport r{"circle-fixed", {}, {}};
  auto const a = circle_fixed_set(CircleParams<Q>({Q(1), Q(2)}));
  auto const b = circle_fixed_set(CircleParams<Q>({Q(1, 2), Q(1)}));
  r.checks.push_back({"theta = (1, 2): Fix = [0, 1)", a.kind == CircleSetVerdict::Kind::full_circle, a.note});
  r.checks.push_back({"theta = (1/2, 1): Fix = ∅", b.kind == CircleSetVerdict::Kind::empty && b.witness == Word::generator(1), b.note});
  return r;
}

ReproReport circle_periodic(ReproOptions const &o)
{
  ReproReport r{"circle-periodic", {}, {}};
  CircleParams<Q> const p({Q(1, 2), Q(1, 3)});
  auto const f = circle_family(p);
  struct Case
  {
    std::string            text;
    CircleSetVerdict::Kind expected;
  };
  std::vector<Case> const cases{{"cyclic:s1^2", CircleSetVerdict::Kind::full_circle},
                                {"cyclic:s1", CircleSetVerdict::Kind::empty},
                                {"bal:", CircleSetVerdict::Kind::full_circle}};
  for (auto const &c : cases) {
    auto const spec = parse_subgroup(c.text, 2);
    auto const v    = circle_periodic_set(p, spec, o.depth);
    bool engine_agrees = true;
    for (Q const &x : {Q(0), Q(1, 5), Q(2, 3)}) {
      bool const per = verified(is_H_periodic(f, spec, x, o.depth, o.depth));
      engine_agrees = engine_agrees && per == (c.expected == CircleSetVerdict::Kind::full_circle);
    }
    r.checks.push_back({c.text + " -> " + to_string(c.expected), v.kind == c.expected && engine_agrees,
                        v.note + (engine_agrees ? "; engine agrees" : "; engine disagrees")});
  }
  return r;
}

ReproReport circle_period_subgroup(ReproOptions const &o)
{
  ReproReport r{"circle-period-subgroup", {}, {}};
  CircleParams<Q> const p({Q(1, 2), Q(1, 3)});
  auto const H0 = rational_period_subgroup(p, 1);
  auto const H1 = rational_period_subgroup(p, 2);
  auto const v0 = circle_periodic_set(p, H0, o.depth);
  auto const v1 = circle_periodic_set(p, H1, o.depth);
  r.checks.push_back({"theta1 = 1/2 gives H0 = <s1^2> with Per = [0, 1)",
                      to_string(H0) == "cyclic:s1^2" && v0.kind == CircleSetVerdict::Kind::full_circle, to_string(H0)});
  r.checks.push_back({"theta2 = 1/3 gives a second periodicity H' = <s2^3>",
                      to_string(H1) == "cyclic:s2^3" && v1.kind == CircleSetVerdict::Kind::full_circle, to_string(H1)});
  return r;
}

} // namespace

std::vector<std::string> repro_items()
{
  return {"sign-sums", "affine-square", "bank-verdicts", "bank-cyclic", "bank-balanced", "bank-even", "bank-ball-sums", "circle-fixed", "circle-periodic", "circle-period-subgroup"};
}

ReproReport reproduce(std::string const &item, ReproOptions const &opt)
{
  static std::map<std::string, std::function<ReproReport(ReproOptions const &)>> const table{
    {"sign-sums", sign_study},     {"affine-square", affine_square},  {"bank-verdicts", bank_verdicts},  {"bank-cyclic", bank_cyclic},
    {"bank-balanced", bank_balanced},  {"bank-even", bank_even},        {"bank-ball-sums", bank_ball_sums},  {"circle-fixed", circle_fixed},
    {"circle-periodic", circle_periodic},  {"circle-period-subgroup", circle_period_subgroup},
  };
  auto it = table.find(item);
  if (it == table.end()) { throw InvalidArgument("unknown reproduction item '" + item + "'"); }
  return it->second(opt);
}

std::string format(ReproReport const &r)
{
  std::ostringstream os;
  os << (r.pass() ? "PASS" : "FAIL") << "  " << r.item << "\n";
  for (auto const &c : r.checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) { os << " -- " << c.detail; }
    os << "\n";
  }
  for (auto const &line : r.table) { os << "    " << line << "\n"; }
  return os.str();
}

} // namespace mdt
