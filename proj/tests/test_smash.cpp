#include <doctest.h>

#include <hopfq/loops.hpp>
#include <hopfq/smash.hpp>

using namespace hopfq;

namespace {

HopfQuasigroupData kc(std::size_t n, const FieldDesc& f) {
  return loop_algebra(gen_cyclic(n), f);
}

LinearMap inversion_action(std::size_t n, const FieldDesc& f) {
  LinearMap act({2, n}, {n}, f);
  const Scalar one = Scalar::one(f);
  for (std::size_t x = 0; x < n; ++x) {
    act.set(x, 0 * n + x, one);
    act.set((n - x) % n, 1 * n + x, one);
  }
  return act;
}

QuasimoduleAction inversion_module(std::size_t n, const FieldDesc& f) {
  return QuasimoduleAction(kc(2, f), kc(n, f), inversion_action(n, f));
}

}  // namespace

TEST_CASE("the inversion action is a quasimodule") {
  const FieldDesc Q = FieldDesc::rationals();
  for (std::size_t n : {3, 4, 6}) {
    AxiomReport r = check_quasimodule(inversion_module(n, Q));
    CHECK(r.all_passed());
    CHECK(r.passed("quasi_ass_cocommute"));
    CHECK(r.passed("quasi_ass_antipode"));
  }
}

TEST_CASE("non-actions are rejected when inducing a twist") {
  const FieldDesc Q = FieldDesc::rationals();
  // "act by shifting regardless of h": not unital, not a module
  LinearMap bogus({2, 3}, {3}, Q);
  const Scalar one = Scalar::one(Q);
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t x = 0; x < 3; ++x) bogus.set((x + 1) % 3, h * 3 + x, one);
  QuasimoduleAction q(kc(2, Q), kc(3, Q), bogus);
  CHECK_FALSE(check_quasimodule(q).all_passed());
  CHECK_THROWS_AS(twist_from_action(q), QuasimoduleAxiomError);
}

TEST_CASE("induced twist matches the hand computation") {
  const FieldDesc Q = FieldDesc::rationals();
  TwistMap r = twist_from_action(inversion_module(3, Q));
  // on group-likes, R(h (x) a) = h.a (x) h; with h group-like both coproduct
  // legs are h itself
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t a = 0; a < 3; ++a) {
      const std::size_t image_a = h == 0 ? a : (3 - a) % 3;
      CHECK(r.map.at(image_a * 2 + h, h * 3 + a).is_one());
    }
  CHECK(r.map.entries().size() == 6);
}

TEST_CASE("flip smash is the direct product") {
  const FieldDesc Q = FieldDesc::rationals();
  HopfQuasigroupData a = kc(3, Q), h = kc(2, Q);
  SmashCandidate cand = build_r_smash(a, h, twist_from_flip(h, a));
  REQUIRE(cand.product.dim == 6);
  // oracle: C3 x C2 with basis (x, y) |-> 2x + y
  for (std::size_t x1 = 0; x1 < 3; ++x1)
    for (std::size_t y1 = 0; y1 < 2; ++y1)
      for (std::size_t x2 = 0; x2 < 3; ++x2)
        for (std::size_t y2 = 0; y2 < 2; ++y2) {
          const std::size_t row = 2 * ((x1 + x2) % 3) + (y1 + y2) % 2;
          const std::size_t col = (2 * x1 + y1) * 6 + (2 * x2 + y2);
          CHECK(cand.product.mul.at(row, col).is_one());
        }
  CHECK(cand.product.mul.entries().size() == 36);
  CHECK(check_hopf_quasigroup(cand.product).all_passed());
}

TEST_CASE("flip smash equals the directly-built tensor structure") {
  const FieldDesc Q = FieldDesc::rationals();
  HopfQuasigroupData a = kc(4, Q), h = kc(3, Q);
  HopfQuasigroupData got = build_r_smash(a, h, twist_from_flip(h, a)).product;
  // reference: the tensor-product Hopf structure assembled by hand
  const std::size_t d = 12;
  const LinearMap id_a = a.id(), id_h = h.id();
  LinearMap mul = tensor(a.mul, h.mul)
                      .compose(tensor(id_a, flip_map(h.dim, a.dim, Q), id_h))
                      .reshaped({d, d}, {d});
  LinearMap comul = tensor(id_a, flip_map(a.dim, h.dim, Q), id_h)
                        .compose(tensor(a.comul, h.comul))
                        .reshaped({d}, {d, d});
  CHECK(got.mul.same_entries(mul));
  CHECK(got.comul.same_entries(comul));
  CHECK(got.unit.same_entries(tensor(a.unit, h.unit).reshaped({1}, {d})));
  CHECK(got.counit.same_entries(tensor(a.counit, h.counit).reshaped({d}, {1})));
  CHECK(got.antipode.same_entries(tensor(a.antipode, h.antipode).reshaped({d}, {d})));
}

TEST_CASE("inversion smash is the s3 group algebra") {
  const FieldDesc Q = FieldDesc::rationals();
  TwistMap r = twist_from_action(inversion_module(3, Q));
  SmashCandidate cand = build_r_smash(kc(3, Q), kc(2, Q), r);
  REQUIRE(cand.product.dim == 6);
  // oracle: a^i g^j with basis (i, j) |-> 2i + j and g a = a^{-1} g, i.e.
  // (a^i g^j)(a^k g^l) = a^{i + (-1)^j k} g^{j + l}
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const std::size_t ii = j == 0 ? (i + k) % 3 : (i + 3 - k) % 3;
          const std::size_t row = 2 * ii + (j + l) % 2;
          const std::size_t col = (2 * i + j) * 6 + (2 * k + l);
          CHECK(cand.product.mul.at(row, col).is_one());
        }
  CHECK(cand.product.mul.entries().size() == 36);
  // the result is a bona fide (associative) Hopf quasigroup
  AxiomReport suite = check_hopf_quasigroup(cand.product);
  CHECK(suite.all_passed());
  CHECK(suite.passed("associative"));
}

TEST_CASE("theorem holds in both directions on the bundled instances") {
  const FieldDesc Q = FieldDesc::rationals();
  HopfQuasigroupData a = kc(3, Q), h = kc(2, Q);
  TwistMap r = twist_from_action(inversion_module(3, Q));
  CHECK(theorem_forward(a, h, r).all_passed());
  CHECK(theorem_backward(a, h, r).all_passed());
  TwistMap fl = twist_from_flip(h, a);
  CHECK(theorem_forward(a, h, fl).all_passed());
  CHECK(theorem_backward(a, h, fl).all_passed());
}

TEST_CASE("forward and backward directions always agree") {
  const FieldDesc Q = FieldDesc::rationals();
  HopfQuasigroupData a = kc(3, Q), h = kc(2, Q);
  std::vector<TwistMap> instances = {twist_from_action(inversion_module(3, Q)),
                                     twist_from_flip(h, a)};
  // a perturbed twist: both directions must reject it together
  LinearMap bad = instances[0].map;
  bad.set(1, 2, Scalar::rational(1, 3));
  instances.emplace_back(h, a, bad);
  for (const TwistMap& r : instances) {
    CHECK(theorem_forward(a, h, r).all_passed() == theorem_backward(a, h, r).all_passed());
  }
  CHECK_FALSE(theorem_forward(a, h, instances.back()).all_passed());
}

TEST_CASE("theorem staging") {
  const FieldDesc Q = FieldDesc::rationals();
  HopfQuasigroupData a = kc(3, Q), h = kc(2, Q);
  TwistMap r = twist_from_action(inversion_module(3, Q));
  AxiomReport fwd = theorem_forward(a, h, r);
  bool saw_hyp = false, saw_cond = false, saw_cand = false;
  for (const auto& e : fwd.entries) {
    saw_hyp |= e.name.rfind("hypotheses:", 0) == 0;
    saw_cond |= e.name.rfind("conditions:", 0) == 0;
    saw_cand |= e.name.rfind("candidate:", 0) == 0;
  }
  CHECK(saw_hyp);
  CHECK(saw_cond);
  CHECK(saw_cand);

  // a broken twist stops the forward direction before the candidate stage
  LinearMap bad = r.map;
  bad.set(3, 4, Scalar::rational(1, 1));
  AxiomReport broken = theorem_forward(a, h, TwistMap(h, a, bad));
  CHECK_FALSE(broken.all_passed());
  for (const auto& e : broken.entries) CHECK(e.name.rfind("candidate:", 0) != 0);
}

TEST_CASE("factor mismatch is rejected") {
  const FieldDesc Q = FieldDesc::rationals();
  TwistMap fl = twist_from_flip(kc(2, Q), kc(3, Q));
  CHECK_THROWS_AS(build_r_smash(kc(4, Q), kc(2, Q), fl), FactorMismatchError);
}

TEST_CASE("dual twist preserves condition names") {
  const FieldDesc Q = FieldDesc::rationals();
  TwistMap r = twist_from_action(inversion_module(3, Q));
  CoTwistMap w = dual_twist(r);
  // dualization pairs each condition with its co-counterpart, handedness kept
  const std::vector<std::pair<std::string, std::string>> pairing = {
      {"left_normal", "left_conormal"},
      {"right_normal", "right_conormal"},
      {"normal", "conormal"},
      {"left_multiplicative", "left_comultiplicative"},
      {"right_SH_multiplicative", "right_SH_comultiplicative"},
      {"right_SH_normal", "right_SH_conormal"},
      {"coalgebra_map", "algebra_map"}};
  for (const auto& [primal, co] : pairing) {
    CHECK(twist_condition_holds(r, primal) == twist_condition_holds(w, co));
    CHECK(twist_condition_holds(r, co) == twist_condition_holds(w, primal));
  }
  // involution
  CHECK(dual_twist(w).map.same_entries(r.map));
}

TEST_CASE("dual theorem on the dualized instance") {
  const FieldDesc Q = FieldDesc::rationals();
  TwistMap r = twist_from_action(inversion_module(3, Q));
  CoTwistMap w = dual_twist(r);
  CHECK(theorem_forward_dual(w.H, w.A, w).all_passed());
  CHECK(theorem_backward_dual(w.H, w.A, w).all_passed());
}

TEST_CASE("duality coherence: dual of smash equals cosmash of duals") {
  const FieldDesc Q = FieldDesc::rationals();
  auto check_coherence = [&](const HopfQuasigroupData& a, const HopfQuasigroupData& h,
                             const TwistMap& r) {
    HopfCoquasigroupData lhs = dualize(build_r_smash(a, h, r).product);
    HopfCoquasigroupData rhs =
        build_w_cosmash(dualize(a), dualize(h), transposed_twist(r)).product;
    CHECK(lhs.mul.same_entries(rhs.mul));
    CHECK(lhs.unit.same_entries(rhs.unit));
    CHECK(lhs.comul.same_entries(rhs.comul));
    CHECK(lhs.counit.same_entries(rhs.counit));
    CHECK(lhs.antipode.same_entries(rhs.antipode));
  };
  HopfQuasigroupData a = kc(3, Q), h = kc(2, Q);
  check_coherence(a, h, twist_from_action(inversion_module(3, Q)));
  check_coherence(a, h, twist_from_flip(h, a));
  CHECK(transposed_twist(transposed_twist(twist_from_flip(h, a)))
            .map.same_entries(flip_map(2, 3, Q)));
}

TEST_CASE("transport by the identity is trivial") {
  const FieldDesc Q = FieldDesc::rationals();
  HopfQuasigroupData x = kc(4, Q);
  LinearMap id = x.id();
  CHECK(transport_structure(x, id, id) == x);
}
