#include <string>

#include "ffzeta/identities.hpp"

namespace ffzeta {

namespace {

std::string verdict(bool holds) { return holds ? "holds" : "fails"; }

CheckedFact fact(std::string name, std::string expected, std::string observed) {
  const bool ok = expected == observed;
  return CheckedFact{std::move(name), std::move(expected), std::move(observed), ok};
}

Polynomial product_of_powers(const FieldPtr& f, std::initializer_list<std::pair<Polynomial, std::uint64_t>> parts) {
  Polynomial out = Polynomial::one(f);
  for (const auto& [base, e] : parts) out = out * pow(base, e);
  return out;
}

Polynomial poly(const FieldPtr& f, std::initializer_list<std::uint8_t> codes) {
  std::vector<FieldElement> c;
  for (auto x : codes) c.push_back(FieldElement{x});
  return Polynomial(f, std::move(c));
}

std::string degree_string(const Polynomial& p) {
  const auto d = p.degree();
  return d ? std::to_string(*d) : "-inf";
}

// Delta_2(4, 9) over F_2 against the conjectured four-term right side.
CounterexampleReport lae_report() {
  const FieldPtr f = Field::make(2, 1);
  MemoCache cache(f);
  CounterexampleReport rep;
  rep.which = CounterexampleId::lae;
  rep.q = f->prime_power();

  const IdentityInstance conj{IdentityTag::conj_iv_original, rep.q, 3, 2, std::nullopt};
  rep.facts.push_back(fact("conjectured Delta_2(4,9) = S_2(2,11) - S_2(3,10) - S_2(4,11) - S_2(5,12)", "fails",
                           verdict(verify(cache, conj).holds)));

  TermList expected_chen(rep.q);
  for (const Index& idx : {Index{2, 11}, Index{3, 10}, Index{4, 9}, Index{5, 8}, Index{9, 4}}) expected_chen.add(1, idx);
  const TermList chen = chen_terms(rep.q, 4, 9);
  rep.facts.push_back(fact("Chen terms for Delta(4,9) over F_2", format(expected_chen, "2"), format(chen, "2")));
  rep.facts.push_back(fact("Delta_2(4,9) = evaluated Chen terms", "holds", verdict(verify_chen(cache, 4, 9, 2).holds)));

  // S_2(4,11) + S_2(5,12) - S_2(4,9) - S_2(5,8) - S_2(9,4) regrouped mod 2.
  auto S = [&](std::int64_t d, std::int64_t s) { return power_sum(cache, d, s); };
  auto S2 = [&](std::int64_t i, std::int64_t j) {
    const std::int64_t idx[] = {i, j};
    return multi_power_sum(cache, 2, idx);
  };
  const RationalFunction part1 = S2(9, 4);
  const RationalFunction part2 = S(2, 5) * (S(1, 12) + S(1, 8));
  const RationalFunction part3 = S(2, 4) * (S(1, 11) + S(1, 9));
  const RationalFunction residual = S2(4, 11) + S2(5, 12) - S2(4, 9) - S2(5, 8) - S2(9, 4);
  rep.facts.push_back(fact("residual regroups as S_2(9,4) + S_2(5)(S_1(12)+S_1(8)) + S_2(4)(S_1(11)+S_1(9))", "equal",
                           residual == part1 + part2 + part3 ? "equal" : "different"));
  rep.facts.push_back(fact("residual", "nonzero", residual.is_zero() ? "zero" : "nonzero"));

  const Polynomial t = Polynomial::monomial(f, Field::one(), 1);
  const Polynomial t1 = poly(f, {1, 1});
  const Polynomial t2t1 = poly(f, {1, 1, 1});
  const Polynomial t2p1 = poly(f, {1, 0, 1});
  const Polynomial common = product_of_powers(f, {{t, 22}, {t1, 19}, {t2t1, 9}, {t2p1, 5}});
  const char* names[] = {"S_2(9,4)", "S_2(5)(S_1(12)+S_1(8))", "S_2(4)(S_1(11)+S_1(9))"};
  const std::int64_t stated_degrees[] = {49, 39, 41};
  const RationalFunction* parts[] = {&part1, &part2, &part3};
  for (std::size_t k = 0; k < 3; ++k) {
    std::string observed;
    try {
      const Polynomial num = rescale_to_denominator(*parts[k], common);
      observed = degree_string(num);
      rep.numerator_degrees.push_back(num.degree() ? static_cast<std::int64_t>(*num.degree()) : -1);
    } catch (const std::domain_error&) {
      observed = "denominator does not divide the common denominator";
      rep.numerator_degrees.push_back(-1);
    }
    rep.facts.push_back(fact(std::string("numerator degree of ") + names[k] + " over t^22(t+1)^19(t^2+t+1)^9(t^2+1)^5",
                             std::to_string(stated_degrees[k]), observed));
  }
  const auto& nd = rep.numerator_degrees;
  const bool distinct = nd[0] >= 0 && nd[1] >= 0 && nd[2] >= 0 && nd[0] != nd[1] && nd[0] != nd[2] && nd[1] != nd[2];
  rep.facts.push_back(fact("the three numerator degrees", "pairwise distinct", distinct ? "pairwise distinct" : "not distinct"));
  return rep;
}

// Delta_1(9, 28) over F_3 against the sign-corrected right side.
CounterexampleReport vi_report() {
  const FieldPtr f = Field::make(3, 1);
  MemoCache cache(f);
  CounterexampleReport rep;
  rep.which = CounterexampleId::vi;
  rep.q = f->prime_power();

  const IdentityInstance conj{IdentityTag::conj_iv_signfixed, rep.q, 3, 1, std::nullopt};
  rep.facts.push_back(fact("conjectured Delta_1(9,28) = -S_1(3) - S_1(5) - S_1(7) - S_1(9)", "fails",
                           verdict(verify(cache, conj).holds)));

  TermList expected_chen(rep.q);
  for (const Index& idx : {Index{3, 34}, Index{5, 32}, Index{7, 30}, Index{9, 28}}) expected_chen.add(-1, idx);
  expected_chen.add(1, Index{19, 18});
  rep.facts.push_back(fact("Chen terms for Delta(9,28) over F_3", format(expected_chen), format(chen_terms(rep.q, 9, 28))));

  TermList collapsed(rep.q);
  for (std::int64_t s : {3, 5, 7, 9}) collapsed.add(-1, Index{s});
  collapsed.add(1, Index{19});
  const bool vii = delta(cache, 1, 9, 28) == eval_terms(cache, collapsed, 1);
  rep.facts.push_back(fact("Delta_1(9,28) = " + format(collapsed, "1"), "holds", verdict(vii)));

  const RationalFunction s19 = power_sum(cache, 1, 19);
  rep.facts.push_back(fact("S_1(19)", "nonzero", s19.is_zero() ? "zero" : "nonzero"));

  const Polynomial common = product_of_powers(
      f, {{poly(f, {0, 1}), 19}, {poly(f, {1, 1}), 19}, {poly(f, {2, 1}), 19}});
  const Polynomial num = rescale_to_denominator(s19, common);
  rep.constant_term = num.coeff(0).code;
  rep.facts.push_back(fact("constant term of S_1(19) numerator over t^19(t+1)^19(t+2)^19", "2",
                           std::to_string(*rep.constant_term)));
  return rep;
}

}  // namespace

std::string_view to_string(CounterexampleId id) { return id == CounterexampleId::lae ? "lae" : "vi"; }

std::optional<CounterexampleId> parse_counterexample(std::string_view s) {
  if (s == "lae") return CounterexampleId::lae;
  if (s == "vi") return CounterexampleId::vi;
  return std::nullopt;
}

bool CounterexampleReport::all_match() const {
  for (const auto& f : facts) {
    if (!f.matches) return false;
  }
  return !facts.empty();
}

CounterexampleReport counterexample_report(CounterexampleId which) {
  return which == CounterexampleId::lae ? lae_report() : vi_report();
}

}  // namespace ffzeta
