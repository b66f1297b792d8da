#include "mdtds/word.hpp"

#include "mdtds/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace mdt {

Word::Word(std::vector<Run> runs)
{
  for (Run const &r : runs) {
    if (r.exp == 0) { continue; }
    if (!runs_.empty() && runs_.back().gen == r.gen) {
      length_ -= std::labs(runs_.back().exp);
      runs_.back().exp += r.exp;
      if (runs_.back().exp == 0) {
        runs_.pop_back();
      } else {
        length_ += std::labs(runs_.back().exp);
      }
    } else {
      runs_.push_back(r);
      length_ += std::labs(r.exp);
    }
  }
}

void Word::push_back(SignedLetter s)
{
  if (!runs_.empty() && runs_.back().gen == s.gen) {
    Run &last = runs_.back();
    if ((last.exp > 0) == (s.sign > 0)) {
      last.exp += s.sign;
      ++length_;
    } else {
      last.exp += s.sign;
      --length_;
      if (last.exp == 0) { runs_.pop_back(); }
    }
    return;
  }
  runs_.push_back({s.gen, s.sign});
  ++length_;
}

void Word::pop_back()
{
  if (runs_.empty()) { throw InvalidArgument("pop_back on the identity word"); }
  Run &last = runs_.back();
  last.exp += last.exp > 0 ? -1 : 1;
  --length_;
  if (last.exp == 0) { runs_.pop_back(); }
}

// Cancellation only happens at the seam, so the work is proportional to the
// number of runs that cancel plus one copy.
Word operator*(Word const &a, Word const &b)
{
  auto const &ar = a.runs();
  auto const &br = b.runs();
  std::size_t i = ar.size();
  std::size_t j = 0;
  Run         seam{};
  bool        has_seam = false;
  while (i > 0 && j < br.size() && ar[i - 1].gen == br[j].gen) {
    long const e = ar[i - 1].exp + br[j].exp;
    --i;
    ++j;
    if (e != 0) {
      seam     = {br[j - 1].gen, e};
      has_seam = true;
      break;
    }
  }
  std::vector<Run> out;
  out.reserve(i + (br.size() - j) + 1);
  out.insert(out.end(), ar.begin(), ar.begin() + static_cast<std::ptrdiff_t>(i));
  if (has_seam) { out.push_back(seam); }
  out.insert(out.end(), br.begin() + static_cast<std::ptrdiff_t>(j), br.end());
  return Word(std::move(out));
}

Word inverse(Word const &t)
{
  std::vector<Run> out(t.runs().rbegin(), t.runs().rend());
  for (Run &r : out) { r.exp = -r.exp; }
  return Word(std::move(out));
}

Word power(Word const &t, long n)
{
  Word base = n < 0 ? inverse(t) : t;
  Word out;
  for (long k = 0; k < std::labs(n); ++k) { out = out * base; }
  return out;
}

SignedLetter last_letter(Word const &t)
{
  if (t.is_identity()) { throw InvalidArgument("last letter of the identity word"); }
  Run const &r = t.runs().back();
  return {r.gen, r.exp > 0 ? +1 : -1};
}

long letter_count(Word const &t, SignedLetter s)
{
  long n = 0;
  for (Run const &r : t.runs()) {
    if (r.gen == s.gen && (r.exp > 0) == (s.sign > 0)) { n += std::labs(r.exp); }
  }
  return n;
}

long exponent_sum(Word const &t, GeneratorId g)
{
  long n = 0;
  for (Run const &r : t.runs()) {
    if (r.gen == g) { n += r.exp; }
  }
  return n;
}

bool is_prefix(Word const &t1, Word const &t2)
{
  auto const &a = t1.runs();
  auto const &b = t2.runs();
  if (a.size() > b.size()) { return false; }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) { continue; }
    // Only the last run of t1 may be a strict part of the matching run of t2.
    bool const last = k + 1 == a.size();
    bool const same_direction = a[k].gen == b[k].gen && (a[k].exp > 0) == (b[k].exp > 0);
    return last && same_direction && std::labs(a[k].exp) <= std::labs(b[k].exp);
  }
  return true;
}

std::vector<SignedLetter> letters(Word const &t)
{
  std::vector<SignedLetter> out;
  out.reserve(static_cast<std::size_t>(t.length()));
  for (Run const &r : t.runs()) {
    SignedLetter const s{r.gen, r.exp > 0 ? +1 : -1};
    out.insert(out.end(), static_cast<std::size_t>(std::labs(r.exp)), s);
  }
  return out;
}

int max_generator(Word const &t)
{
  int m = 0;
  for (Run const &r : t.runs()) { m = std::max(m, r.gen.index); }
  return m;
}

namespace {

long parse_long(std::string_view s, std::string_view whole)
{
  long v{};
  auto const *first = s.data();
  if (!s.empty() && s.front() == '+') { ++first; }
  auto [end, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size() || first == s.data() + s.size()) {
    throw ParseError("malformed integer '" + std::string(s) + "' in word '" + std::string(whole) + "'");
  }
  return v;
}

} // namespace

Word parse_word(std::string_view text, int rank)
{
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == '*' || std::isspace(static_cast<unsigned char>(c)); };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) { ++pos; }
    std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos])) { ++pos; }
    if (pos > start) { tokens.push_back(text.substr(start, pos - start)); }
  }
  if (tokens.empty()) { throw ParseError("empty word text"); }
  if (tokens.size() == 1 && tokens.front() == "e") { return Word{}; }

  std::vector<Run> runs;
  for (std::string_view tok : tokens) {
    if (tok.size() < 2 || tok.front() != 's') {
      throw ParseError("bad token '" + std::string(tok) + "' in word '" + std::string(text) + "'");
    }
    auto caret = tok.find('^');
    long const index = parse_long(tok.substr(1, caret == std::string_view::npos ? tok.npos : caret - 1), text);
    long exp = 1;
    if (caret != std::string_view::npos) { exp = parse_long(tok.substr(caret + 1), text); }
    if (index < 1 || index > rank) {
      throw ParseError("generator s" + std::to_string(index) + " out of range 1.." + std::to_string(rank));
    }
    if (exp == 0) { throw ParseError("zero exponent in token '" + std::string(tok) + "'"); }
    runs.push_back({GeneratorId{static_cast<int>(index)}, exp});
  }
  return Word(std::move(runs));
}

std::string to_string(Word const &t)
{
  if (t.is_identity()) { return "e"; }
  std::string out;
  for (Run const &r : t.runs()) {
    if (!out.empty()) { out += ' '; }
    out += 's' + std::to_string(r.gen.index);
    if (r.exp != 1) { out += '^' + std::to_string(r.exp); }
  }
  return out;
}

std::string to_string(SignedLetter s)
{
  return "s" + std::to_string(s.gen.index) + (s.sign < 0 ? "^-1" : "");
}

std::size_t WordHash::operator()(Word const &t) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Run const &r : t.runs()) {
    h ^= static_cast<std::size_t>(r.gen.index) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(r.exp);
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace mdt
