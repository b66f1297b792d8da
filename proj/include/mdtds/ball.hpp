#pragma once

#include "mdtds/rational.hpp"
#include "mdtds/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mdt {

inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

// |W_n| and |V_n| in the free group of the given rank, q = 2|S|.
Integer sphere_size(long n, int rank);
Integer ball_size(long n, int rank);

// Throws ResourceLimit if |V_n| exceeds the cap.
void check_node_cap(long n, int rank, std::uint64_t cap);

/// Streaming depth-first traversal of the ball V_n of the Cayley tree.
///
/// Children are ordered by generator index, then s_i before s_i^-1, and the
/// inverse of the last letter is never appended, so every reduced word of
/// length <= n is visited exactly once and after its parent. The current
/// word is updated in place; nothing but the current path is stored.
///
/// A cursor can be restricted to the subtree below one first letter, which
/// is how traversals are split across threads. Such a cursor does not visit e.
class BallCursor
{
public:
  BallCursor(int rank, long radius, std::uint64_t node_cap = kDefaultNodeCap);
  BallCursor(int rank, long radius, SignedLetter first, std::uint64_t node_cap = kDefaultNodeCap);

  // Moves to the next word; false once the traversal is exhausted.
  bool next();

  Word const  &word() const { return word_; }
  long         depth() const { return static_cast<long>(path_.size()); }
  // Letter appended to the parent (undefined at the root).
  SignedLetter appended() const { return SignedLetter::from_code(path_.back()); }
  Word         parent() const;
  int          rank() const { return rank_; }
  long         radius() const { return radius_; }

private:
  int              rank_;
  long             radius_;
  long             floor_;  // depth the traversal never pops below
  bool             started_ = false;
  bool             done_    = false;
  Word             word_;
  std::vector<int> path_;   // letter codes from the root
  std::vector<int> cursor_; // next child code to try, per depth
};

// Visits V_n in cursor order; visitor(word, depth).
template <typename Visitor>
void for_each_in_ball(int rank, long n, Visitor &&visit, std::uint64_t cap = kDefaultNodeCap)
{
  BallCursor c(rank, n, cap);
  while (c.next()) { visit(c.word(), c.depth()); }
}

std::vector<Word> ball_words(int rank, long n, std::uint64_t cap = kDefaultNodeCap);

/// One block of the decomposition
///   V_n = {e} ∪ ⋃_s S_n(s) ∪ ⋃_{k,t∈W_k} ⋃_{s ≠ ν(t)^{±1}} V_{n,t}(s)
/// where S_n(s) = {s, ..., s^n} (base = e) and V_{n,t}(s) = {ts, ..., ts^{n-|t|}}.
struct BallComponent
{
  Word              base;
  SignedLetter      letter;
  std::vector<Word> words;
};

struct BallDecomposition
{
  long                       radius;
  std::vector<BallComponent> rays;     // S_n(s) blocks first, then V_{n,t}(s)
  std::size_t                total() const; // 1 + Σ |component|
};

// Builds the blocks from the definition (powers of a letter behind a base
// word), not by grouping enumerated words. Empty blocks are omitted.
BallDecomposition ball_decompose(long n, int rank, std::uint64_t cap = kDefaultNodeCap);

} // namespace mdt
