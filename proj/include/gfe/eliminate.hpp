#pragma once

#include <map>

#include "gfe/conductor.hpp"
#include "gfe/ghost.hpp"
#include "gfe/hgm.hpp"

namespace gfe {

// ---- newform records (ingested eigenvalue data) ----

struct SlotKey {
  std::uint32_t ell = 0;
  std::uint32_t root5 = 0;  // 0 for inert/ramified slots
  bool operator<(const SlotKey& o) const {
    return ell < o.ell || (ell == o.ell && root5 < o.root5);
  }
};

struct Eigenvalue {
  bool exact = false;  // exact value in a real quadratic field available
  bool non_k = false;  // known to lie outside K
  // value (u + v sqrt(D))/2; D = 5 for K-rational entries
  BigInt u, v;
  unsigned D = 5;

  KElt as_K() const {
    if (!exact || D != 5) throw data_error("eigenvalue is not K-exact");
    return KElt(u, v);
  }
};

struct NewformRecord {
  std::string label;
  int level_i = 0, level_j = 0;  // level 3^i (sqrt5)^j
  int field_degree = 1;
  std::string cm;  // empty when no CM annotation
  std::map<SlotKey, Eigenvalue> eigenvalues;
};

struct RunConfig {
  BigInt norm_cap = 400;
  BigInt hyp_field_budget = 1000000;
  bool cross_check_hyp = true;  // run the character-sum route next to counting
  std::string cache_dir;
  unsigned threads = 0;  // 0 = library default
};

// ---- per-slot case values ----

struct CaseValues {
  PrimeSlotK slot;
  // residue -> one member of the K-conjugate trace pair
  std::map<std::uint32_t, KElt> case1;
  // degenerate values at the prime of Q(zeta15) above the slot, as K-pairs
  std::vector<KElt> case2;
  std::vector<ZPoly> case2_polys;
  // +-(N(l)+1)
  std::vector<BigInt> case3;
};

// Case-1 map over all residues: point-counting route, cross-checked against
// the hypergeometric sum when the residue field fits the budget. Both routes
// must agree (oracle_error otherwise).
CaseValues case_values(const PrimeSlotK& slot, const RunConfig& cfg = {});

// ---- elimination ----

struct Witness {
  std::string slot;
  std::string kind;   // "case1", "case2", "case3", "perfect", "non_k"
  std::string value;  // matched or compared value
  BigInt norm;        // |norm of the difference| (0 for perfect matches)
};

struct FormResult {
  std::string label;
  std::string cm;             // annotation carried from the record
  bool survives_all = false;  // some case value matches exactly at every slot
  bool non_k_shortcut = false;
  std::set<BigInt> surviving;  // always contains 2, 3, 5
  std::vector<Witness> witnesses;
};

// Survivors at one slot: primes dividing some difference norm (union over
// cases and conjugate choices); nullopt = everything survives (an exact
// match occurred).
std::optional<std::set<BigInt>> slot_survivors(const NewformRecord& f, const CaseValues& cv,
                                               std::vector<Witness>* witnesses);

FormResult eliminate_form(const NewformRecord& f, const std::vector<CaseValues>& slots);

struct EliminationReport {
  int level_i = 0, level_j = 0;
  std::vector<FormResult> forms;
  std::vector<std::string> non_discardable;  // labels
  std::set<BigInt> union_surviving;          // over discardable forms
  std::string to_tsv() const;
  std::string to_json() const;
};

EliminationReport run_space(int level_i, int level_j, const std::vector<NewformRecord>& records,
                            const std::vector<CaseValues>& slots);

// ---- irreducibility bound ----

struct IrreducibilityBound {
  BigInt largest_prime;           // C(ell)
  BigInt product;                 // the full resultant product (ell = 2 only)
  std::vector<BigInt> support;    // prime support of the resultant norms
};
IrreducibilityBound irreducibility_bound(std::uint32_t ell);

}  // namespace gfe
