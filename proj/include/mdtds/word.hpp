#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mdt {

// Index of a free generator s_i, 1-based.
struct GeneratorId
{
  int index = 1;

  friend auto operator<=>(GeneratorId, GeneratorId) = default;
};

// s_i or s_i^{-1}.
struct SignedLetter
{
  GeneratorId gen;
  int         sign = +1;

  SignedLetter inverse() const { return {gen, -sign}; }
  // Position among the 2|S| letters in enumeration order: s1, s1^-1, s2, ...
  int code() const { return 2 * (gen.index - 1) + (sign < 0 ? 1 : 0); }
  static SignedLetter from_code(int code) { return {GeneratorId{code / 2 + 1}, code % 2 == 0 ? +1 : -1}; }

  friend auto operator<=>(SignedLetter, SignedLetter) = default;
};

// s_gen^exp with exp != 0.
struct Run
{
  GeneratorId gen;
  long        exp = 1;

  friend auto operator<=>(Run, Run) = default;
};

/// Reduced word of the free group on |S| generators, stored run-length
/// encoded. Adjacent runs always carry distinct generators and no run has a
/// zero exponent, so the representation of each group element is unique and
/// structural equality is group equality. The empty word is the identity e.
class Word
{
public:
  Word() = default;
  // Reduces the given runs (merging equal neighbours, dropping zeros).
  explicit Word(std::vector<Run> runs);
  static Word letter(SignedLetter s) { return Word(std::vector<Run>{{s.gen, s.sign}}); }
  static Word generator(int index, long exp = 1) { return Word(std::vector<Run>{{GeneratorId{index}, exp}}); }

  std::vector<Run> const &runs() const { return runs_; }
  bool                    is_identity() const { return runs_.empty(); }
  long                    length() const { return length_; }

  // Right multiplication by one letter / removal of the last letter. These
  // keep the word reduced and are what the ball traversal uses.
  void push_back(SignedLetter s);
  void pop_back();

  friend bool operator==(Word const &a, Word const &b) { return a.runs_ == b.runs_; }
  friend auto operator<=>(Word const &a, Word const &b) { return a.runs_ <=> b.runs_; }

private:
  std::vector<Run> runs_;
  long             length_ = 0;
};

Word operator*(Word const &a, Word const &b);
Word inverse(Word const &t);
Word power(Word const &t, long n);

inline long length(Word const &t) { return t.length(); }

// Last letter ν(t), sign included. Throws InvalidArgument on e.
SignedLetter last_letter(Word const &t);

// n_t(s): occurrences of the signed letter in the expanded reduced word.
long letter_count(Word const &t, SignedLetter s);

// Exponent sum of one generator, n_t(s_i) - n_t(s_i^-1).
long exponent_sum(Word const &t, GeneratorId g);

// t1 <= t2 in the geodesic (prefix) order of the Cayley tree.
bool is_prefix(Word const &t1, Word const &t2);

// Expanded letter sequence.
std::vector<SignedLetter> letters(Word const &t);

// Largest generator index used (0 for e).
int max_generator(Word const &t);

// Grammar: `e` | token (sep token)*, token = s<i>^<k> | s<i>, sep = whitespace or '*'.
Word        parse_word(std::string_view text, int rank);
std::string to_string(Word const &t);
std::string to_string(SignedLetter s);

struct WordHash
{
  std::size_t operator()(Word const &t) const noexcept;
};

} // namespace mdt
