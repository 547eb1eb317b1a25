#include "gfe/eliminate.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace gfe {

CaseValues case_values(const PrimeSlotK& slot, const RunConfig& cfg) {
  if (slot.ell == 2 || slot.ell == 3 || slot.ell == 5)
    throw domain_error("case_values: slot must avoid primes dividing 30");
  if (slot.norm > cfg.norm_cap) throw domain_error("case_values: slot norm exceeds the cap");
  CaseValues out;
  out.slot = slot;
  std::uint32_t ell = slot.ell;

  // Case 1, counting route: the curve realizes the residue labelled t0 at
  // parameter 1/t0 mod ell.
  auto F1 = Fq::make(ell, slot.f_K);
  auto F2 = Fq::make(ell, 2 * slot.f_K);
  BigInt qnorm = slot.norm;
  for (std::uint32_t t0 = 2; t0 < ell; ++t0) {
    std::uint32_t tcurve =
        static_cast<std::uint32_t>(inv_mod(BigInt(t0), BigInt(ell)).get_ui());
    SexticModel model = c53(BigRat(tcurve));
    std::int64_t n1 = count_points(model, *F1);
    std::int64_t n2 = count_points(model, *F2);
    LPoly2 L;
    L.q = qnorm;
    L.a1 = qnorm + 1 - n1;
    BigInt s2 = qnorm * qnorm + 1 - n2;
    L.a2 = (L.a1 * L.a1 - s2) / 2;
    auto pair = split_over_K(L);
    if (!weil_ok(pair.first, qnorm))
      throw oracle_error("case_values: Weil bound failure at t0 = " + std::to_string(t0));
    out.case1.emplace(t0, pair.first);
  }

  // cross route: hypergeometric sums over the residue field of lambda
  if (cfg.cross_check_hyp) {
    BigInt lambda_size = pow_int(BigInt(ell), slot.f_F);
    if (lambda_size <= cfg.hyp_field_budget) {
      HGMParams params(make_rat(1, 5), make_rat(-1, 5), make_rat(1, 3), make_rat(-1, 3));
      auto field = Fq::make_cyclotomic(ell, 15, 0);
      auto gauss = gauss_sum_table(*field);
      HypOptions opt;
      opt.field_budget = cfg.hyp_field_budget;
      for (auto& [t0, kval] : out.case1) {
        TraceValue tv = hyp_trace_with(params, *field, gauss, t0, opt);
        KElt lift1 = lift_trace(kval, qnorm, slot.rel_deg_F());
        KElt lift2 = lift_trace(kval.conj(), qnorm, slot.rel_deg_F());
        if (!(tv.value == lift1) && !(tv.value == lift2) && !(tv.value == lift1.conj()) &&
            !(tv.value == lift2.conj()))
          throw oracle_error("case_values: route disagreement at ell = " + std::to_string(ell) +
                             ", t0 = " + std::to_string(t0) + " (count lift " +
                             lift1.to_string() + ", sum " + tv.value.to_string() + ")");
      }
    }
  }

  // Case 2: degenerate value sets at the lambda above the slot
  auto d0 = degenerate0(ell);
  auto di = degenerate_inf(ell);
  for (auto* dv : {&d0, &di}) {
    for (std::size_t i = 0; i < dv->pairs.size(); ++i) {
      out.case2.push_back(dv->pairs[i].first);
      out.case2_polys.push_back(dv->min_polys[i]);
    }
  }
  if (out.case2.size() > 8) throw oracle_error("case_values: degenerate sets exceed their bound");

  // Case 3: level-lowering values
  out.case3 = {qnorm + 1, -(qnorm + 1)};
  return out;
}

namespace {

// |N_{K/Q}| of the difference between an eigenvalue (possibly in another
// real quadratic field) and a K-value; 0 marks an exact match.
BigInt diff_norm(const Eigenvalue& e, const KElt& v) {
  if (e.exact && e.D == 5) {
    KElt d = e.as_K() - v;
    BigInt n = d.norm();
    return n < 0 ? BigInt(-n) : n;
  }
  if (e.exact) {
    // e = (u + v sqrt(D))/2 with D != 5: the difference is nonzero; its norm
    // over the compositum is N_{K/Q}(P_e(v)) with P_e the minimal polynomial
    // x^2 - u x + (u^2 - D v^2)/4 of e.
    BigInt tr = e.u;
    BigInt nm = (e.u * e.u - BigInt(e.D) * e.v * e.v) / 4;
    KElt val = v * v - v * BigInt(tr) + KElt::from_int(nm);
    BigInt n = val.norm();
    return n < 0 ? BigInt(-n) : n;
  }
  throw data_error("diff_norm: eigenvalue carries no exact value");
}

void add_support(std::set<BigInt>& out, const BigInt& n) {
  if (n == 0) return;
  for (auto& p : prime_support(n)) out.insert(p);
}

}  // namespace

std::optional<std::set<BigInt>> slot_survivors(const NewformRecord& f, const CaseValues& cv,
                                               std::vector<Witness>* witnesses) {
  SlotKey key{cv.slot.ell, cv.slot.kind == SlotKind::split ? cv.slot.root5 : 0};
  auto it = f.eigenvalues.find(key);
  if (it == f.eigenvalues.end())
    throw data_error("slot_survivors: form " + f.label + " has no eigenvalue at " +
                     cv.slot.to_string());
  const Eigenvalue& e = it->second;
  std::string slotname = cv.slot.to_string();

  if (!e.exact) {
    if (!e.non_k)
      throw data_error("slot_survivors: eigenvalue without value or non-K flag");
    // eigenvalue provably outside K: every difference against a K-value is
    // nonzero, so only finitely many p survive; without the value the set is
    // unknown and contributes nothing beyond the always-kept {2,3,5}
    if (witnesses)
      witnesses->push_back({slotname, "non_k", "(value outside K)", BigInt(0)});
    return std::set<BigInt>{};
  }

  std::set<BigInt> survivors;
  bool perfect = false;

  // Case 1 (K-level)
  for (auto& [t0, v] : cv.case1) {
    for (const KElt& w : {v, v.conj()}) {
      BigInt n = diff_norm(e, w);
      if (n == 0) {
        perfect = true;
        if (witnesses)
          witnesses->push_back(
              {slotname, "perfect", "case1 t0=" + std::to_string(t0) + " " + w.to_string(),
               BigInt(0)});
      } else {
        add_support(survivors, n);
      }
    }
  }
  // Case 2 (lambda-level: lift the eigenvalue)
  unsigned d = cv.slot.rel_deg_F();
  Eigenvalue lifted = e;
  if (e.exact) {
    if (e.D == 5) {
      KElt le = lift_trace(e.as_K(), cv.slot.norm, d);
      lifted.u = le.u();
      lifted.v = le.v();
    } else {
      // lift inside Q(sqrt D): a^2 - 2q keeps the field
      if (d == 2) {
        BigInt uu = (e.u * e.u + BigInt(e.D) * e.v * e.v) / 2 - 4 * cv.slot.norm;
        BigInt vv = e.u * e.v;
        lifted.u = uu;
        lifted.v = vv;
      } else if (d != 1) {
        throw data_error("slot_survivors: unsupported relative degree for non-K eigenvalue");
      }
    }
  }
  for (std::size_t i = 0; i < cv.case2.size(); ++i) {
    const KElt& v = cv.case2[i];
    for (const KElt& w : {v, v.conj()}) {
      BigInt n = diff_norm(lifted, w);
      if (n == 0) {
        perfect = true;
        if (witnesses)
          witnesses->push_back(
              {slotname, "perfect", "case2 " + cv.case2_polys[i].to_string(), BigInt(0)});
      } else {
        add_support(survivors, n);
      }
    }
  }
  // Case 3
  for (auto& c3 : cv.case3) {
    KElt v = KElt::from_int(c3);
    BigInt n = diff_norm(e, v);
    if (n == 0) {
      perfect = true;
      if (witnesses)
        witnesses->push_back({slotname, "perfect", "case3 " + c3.get_str(), BigInt(0)});
    } else {
      add_support(survivors, n);
    }
  }
  if (perfect) return std::nullopt;
  if (witnesses) {
    // record the largest surviving prime as the slot witness
    BigInt big = survivors.empty() ? BigInt(0) : *survivors.rbegin();
    witnesses->push_back({slotname, "bound", "largest surviving prime", big});
  }
  return survivors;
}

FormResult eliminate_form(const NewformRecord& f, const std::vector<CaseValues>& slots) {
  if (slots.empty()) throw domain_error("eliminate_form: empty slot list");
  FormResult out;
  out.label = f.label;
  out.cm = f.cm;
  bool first = true;
  std::set<BigInt> inter;
  bool all_perfect = true;
  for (auto& cv : slots) {
    auto s = slot_survivors(f, cv, &out.witnesses);
    if (!s) continue;  // perfect match: this slot removes no prime
    all_perfect = false;
    SlotKey key{cv.slot.ell, cv.slot.kind == SlotKind::split ? cv.slot.root5 : 0};
    if (!f.eigenvalues.at(key).exact) out.non_k_shortcut = true;
    if (first) {
      inter = *s;
      first = false;
    } else {
      std::set<BigInt> keep;
      for (auto& p : inter)
        if (s->count(p)) keep.insert(p);
      inter = std::move(keep);
    }
  }
  out.survives_all = all_perfect;
  out.surviving = inter;
  out.surviving.insert(BigInt(2));
  out.surviving.insert(BigInt(3));
  out.surviving.insert(BigInt(5));
  return out;
}

EliminationReport run_space(int level_i, int level_j, const std::vector<NewformRecord>& records,
                            const std::vector<CaseValues>& slots) {
  EliminationReport rep;
  rep.level_i = level_i;
  rep.level_j = level_j;
  rep.forms.resize(records.size());
  for (auto& r : records)
    if (r.level_i != level_i || r.level_j != level_j)
      throw data_error("run_space: record " + r.label + " is at a different level");
  std::string error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(records.size()); ++i) {
    try {
      rep.forms[i] = eliminate_form(records[i], slots);
    } catch (const std::exception& ex) {
#pragma omp critical
      error = ex.what();
    }
  }
  if (!error.empty()) throw data_error("run_space: " + error);
  for (auto& fr : rep.forms) {
    if (fr.survives_all) {
      rep.non_discardable.push_back(fr.label);
    } else {
      for (auto& p : fr.surviving) rep.union_surviving.insert(p);
    }
  }
  return rep;
}

std::string EliminationReport::to_tsv() const {
  std::ostringstream os;
  os << "form_label\tsurviving_primes\twitness_slot\twitness_case\twitness_value\n";
  for (auto& f : forms) {
    os << f.label << "\t";
    if (f.survives_all) {
      os << "ALL";
    } else {
      bool first = true;
      for (auto& p : f.surviving) {
        if (!first) os << ",";
        first = false;
        os << p.get_str();
      }
    }
    std::string ws, wc, wv;
    for (auto& w : f.witnesses)
      if (w.kind == "perfect") {
        ws = w.slot;
        wc = w.kind;
        wv = w.value;
        break;
      }
    if (ws.empty() && !f.witnesses.empty()) {
      ws = f.witnesses.back().slot;
      wc = f.witnesses.back().kind;
      wv = f.witnesses.back().value;
    }
    os << "\t" << ws << "\t" << wc << "\t" << wv << "\n";
  }
  return os.str();
}

IrreducibilityBound irreducibility_bound(std::uint32_t ell) {
  IrreducibilityBound out;
  std::set<BigInt> support;
  if (ell == 2) {
    // good reduction over K at 2 (inert, norm 4), f = c_J = 1; the local
    // factors have a_J in {-1, -8}
    BigInt prod = 1;
    for (long aJ : {-1L, -8L}) {
      KElt res = resultant_cyclo_quadratic(1, KElt::from_int(aJ), BigInt(4));
      BigInt n = res.norm();
      prod *= abs(n);
      add_support(support, n);
    }
    out.product = prod;
  } else if (ell == 3 || ell == 5) {
    BigInt Nl = (ell == 3) ? 9 : 5;
    // Weil box over the residue field of norm Nl: trace alpha and the
    // F_{Nl^2}-trace constraint
    long amax = isqrt(16 * Nl).get_si();
    long bmax = isqrt(16 * Nl).get_si() + 2;
    for (long alpha = -amax; alpha <= amax; ++alpha) {
      for (long beta = -bmax; beta <= bmax; ++beta) {
        if (((alpha - beta) % 2) != 0) continue;
        BigInt tr2 = BigInt(alpha) * alpha + 5 * BigInt(beta) * beta;
        if (tr2 % 2 != 0) continue;
        tr2 /= 2;
        if (BigInt(alpha) * alpha > 16 * Nl) continue;
        if (abs(tr2 - 4 * Nl) > 4 * Nl) continue;
        KElt aJ{BigInt(alpha), BigInt(beta)};
        for (unsigned f = 1; f <= 2; ++f) {
          KElt res = resultant_cyclo_quadratic(4, aJ, pow_int(Nl, f));
          BigInt n = res.norm();
          if (n == 0) continue;
          add_support(support, n);
        }
      }
    }
  } else {
    throw domain_error("irreducibility_bound: ell must be 2, 3 or 5");
  }
  out.support.assign(support.begin(), support.end());
  out.largest_prime = out.support.empty() ? BigInt(0) : out.support.back();
  return out;
}

}  // namespace gfe
