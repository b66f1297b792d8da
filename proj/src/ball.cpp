#include "mdtds/ball.hpp"

#include "mdtds/error.hpp"

namespace mdt {

Integer sphere_size(long n, int rank)
{
  if (n < 0 || rank < 1) { throw InvalidArgument("sphere_size needs n >= 0 and |S| >= 1"); }
  if (n == 0) { return 1; }
  unsigned long const q = 2UL * static_cast<unsigned long>(rank);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), q - 1, static_cast<unsigned long>(n - 1));
  return Integer(q) * p;
}

Integer ball_size(long n, int rank)
{
  if (n < 0 || rank < 1) { throw InvalidArgument("ball_size needs n >= 0 and |S| >= 1"); }
  if (rank == 1) { return Integer(2 * n + 1); }
  unsigned long const q = 2UL * static_cast<unsigned long>(rank);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), q - 1, static_cast<unsigned long>(n));
  Integer const num = Integer(q) * p - 2;
  return num / Integer(q - 2);
}

void check_node_cap(long n, int rank, std::uint64_t cap)
{
  Integer const size = ball_size(n, rank);
  if (size > Integer(std::to_string(cap))) {
    throw ResourceLimit("|V_" + std::to_string(n) + "| = " + size.get_str() + " exceeds node cap " +
                        std::to_string(cap));
  }
}

BallCursor::BallCursor(int rank, long radius, std::uint64_t node_cap)
  : rank_(rank), radius_(radius), floor_(0)
{
  if (rank < 1 || radius < 0) { throw InvalidArgument("ball traversal needs |S| >= 1 and n >= 0"); }
  check_node_cap(radius, rank, node_cap);
  cursor_.push_back(0);
}

BallCursor::BallCursor(int rank, long radius, SignedLetter first, std::uint64_t node_cap)
  : rank_(rank), radius_(radius), floor_(1)
{
  if (rank < 1 || radius < 0) { throw InvalidArgument("ball traversal needs |S| >= 1 and n >= 0"); }
  if (first.gen.index < 1 || first.gen.index > rank) { throw InvalidArgument("first letter out of range"); }
  check_node_cap(radius, rank, node_cap);
  if (radius == 0) {
    done_ = true;
    return;
  }
  path_.push_back(first.code());
  word_.push_back(first);
  cursor_.push_back(0);
  cursor_.push_back(0);
}

bool BallCursor::next()
{
  if (done_) { return false; }
  if (!started_) {
    started_ = true;
    return true;
  }
  int const q = 2 * rank_;
  while (true) {
    auto const d = static_cast<std::size_t>(path_.size());
    if (static_cast<long>(d) < radius_) {
      int const forbidden = d == 0 ? -1 : (path_.back() ^ 1);
      int c = cursor_[d];
      if (c == forbidden) { ++c; }
      if (c < q) {
        cursor_[d] = c + 1;
        path_.push_back(c);
        word_.push_back(SignedLetter::from_code(c));
        if (cursor_.size() <= d + 1) {
          cursor_.push_back(0);
        } else {
          cursor_[d + 1] = 0;
        }
        return true;
      }
    }
    if (static_cast<long>(d) <= floor_) {
      done_ = true;
      return false;
    }
    path_.pop_back();
    word_.pop_back();
  }
}

Word BallCursor::parent() const
{
  if (path_.empty()) { throw InvalidArgument("the root has no parent"); }
  Word p = word_;
  p.pop_back();
  return p;
}

std::vector<Word> ball_words(int rank, long n, std::uint64_t cap)
{
  std::vector<Word> out;
  for_each_in_ball(rank, n, [&](Word const &w, long) { out.push_back(w); }, cap);
  return out;
}

std::size_t BallDecomposition::total() const
{
  std::size_t n = 1;
  for (auto const &c : rays) { n += c.words.size(); }
  return n;
}

BallDecomposition ball_decompose(long n, int rank, std::uint64_t cap)
{
  if (n < 1) { throw InvalidArgument("ball_decompose needs n >= 1"); }
  check_node_cap(n, rank, cap);
  BallDecomposition out{n, {}};
  int const q = 2 * rank;

  auto ray = [](Word const &base, SignedLetter s, long count) {
    BallComponent c{base, s, {}};
    c.words.reserve(static_cast<std::size_t>(count));
    Word const step = Word::letter(s);
    Word w = base;
    for (long j = 1; j <= count; ++j) {
      w = w * step;
      c.words.push_back(w);
    }
    return c;
  };

  for (int code = 0; code < q; ++code) {
    out.rays.push_back(ray(Word{}, SignedLetter::from_code(code), n));
  }
  // t ranges over W_k for k = 1..n-1; |t| = n would give empty blocks.
  for (long k = 1; k < n; ++k) {
    BallCursor c(rank, k, cap);
    while (c.next()) {
      if (c.depth() != k) { continue; }
      SignedLetter const last = last_letter(c.word());
      for (int code = 0; code < q; ++code) {
        SignedLetter const s = SignedLetter::from_code(code);
        if (s.gen == last.gen) { continue; }
        out.rays.push_back(ray(c.word(), s, n - k));
      }
    }
  }
  return out;
}

} // namespace mdt
