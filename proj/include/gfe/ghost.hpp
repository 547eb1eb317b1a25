#pragma once

#include "gfe/conductor.hpp"

namespace gfe {

// A tuple (a, c, s, l, m, n, u, v, sign) with
//   q^s r^l a^q + sign * q^m r^n + q^u r^v c^r = 0,
// gcd(a, qr) = gcd(c, qr) = 1, min(s, m, u) = 0 and min(l, n, v) = 0.
struct GhostSolution {
  BigInt a, c;
  unsigned s = 0, l = 0, m = 0, n = 0, u = 0, v = 0;
  int sign = 1;
  unsigned q = 5, r = 3;
  unsigned two_exp = 0;  // power of 2 on the middle term (allow_two searches)

  BigRat t0() const;
  bool verify() const;  // re-check the defining equation with big integers
  std::string to_string() const;
};

struct SearchBox {
  BigInt a_bound = 10000;
  BigInt c_bound = 10000;
  unsigned exp_bound = 30;
};

// Exhaustive search over the box; deterministic output sorted by t0 and
// deduplicated by t0. allow_two adds a power-of-two column to the equation
// (used by the minus-family variant).
std::vector<GhostSolution> ghost_search(unsigned q, unsigned r, const SearchBox& box,
                                        bool allow_two = false);
std::vector<GhostSolution> ghost_search_serial(unsigned q, unsigned r, const SearchBox& box,
                                               bool allow_two = false);

struct GhostClassification {
  ConductorProfile profile;
  std::string source;  // "catalan", "tables", "unclassified"
};
GhostClassification classify_ghost(const GhostSolution& g);

// The named small families: the (q,3) pair t0 = -1/8, 9/8 and the (q,2)
// Catalan pair t0 = 1/9, 8/9.
std::vector<GhostSolution> example_catalog(unsigned q);

std::string ghost_tsv(const std::vector<GhostSolution>& sols);

}  // namespace gfe
