#pragma once

#include "mdtds/rational.hpp"

#include <string>
#include <vector>

namespace mdt {

// A named reproduction run: each check is one claim tested at a fixed bound,
// `table` holds supporting rows printed alongside.
struct ReproCheck
{
  std::string name;
  bool        pass = false;
  std::string detail;
};

struct ReproReport
{
  std::string              item;
  std::vector<ReproCheck>  checks;
  std::vector<std::string> table;

  bool pass() const;
};

struct ReproOptions
{
  int                   q = 4;         // 2|S| for the sign-sequence study
  long                  n_max = 12;    // largest radius for scans
  std::vector<Rational> bank_q{2, 3};  // bank rates
  long                  depth = 4;     // verification depth
  unsigned              threads = 1;
};

// Items: sign-sums affine-square bank-verdicts bank-cyclic bank-balanced bank-even
// bank-ball-sums circle-fixed circle-period-subgroup circle-periodic
std::vector<std::string> repro_items();
ReproReport              reproduce(std::string const &item, ReproOptions const &opt);

std::string format(ReproReport const &r);

} // namespace mdt
