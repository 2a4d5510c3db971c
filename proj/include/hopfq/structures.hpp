#pragma once

#include <string>
#include <vector>

#include "hopfq/linear_map.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

namespace detail {

inline void check_structure_shapes(std::size_t dim, const FieldDesc& field,
                                   const LinearMap& mul, const LinearMap& unit,
                                   const LinearMap& comul, const LinearMap& counit,
                                   const LinearMap& antipode) {
  if (dim == 0) throw ShapeMismatchError("structure dimension must be >= 1");
  auto want = [&](const LinearMap& m, Shape dom, Shape cod, const char* which) {
    if (m.domain_shape() != dom || m.codomain_shape() != cod || !(m.field() == field)) {
      throw ShapeMismatchError(std::string("structure map ") + which + " has wrong shape or field");
    }
  };
  want(mul, {dim, dim}, {dim}, "mul");
  want(unit, {1}, {dim}, "unit");
  want(comul, {dim}, {dim, dim}, "comul");
  want(counit, {dim}, {1}, "counit");
  want(antipode, {dim}, {dim}, "antipode");
}

}  // namespace detail

/// Structure constants for (mul, unit, comul, counit, antipode) on one space.
/// Shape validity is enforced at construction; algebraic axioms are only ever
/// checked by the check_* operations, never assumed.
struct HopfQuasigroupData {
  std::size_t dim;
  FieldDesc field;
  LinearMap mul;       // [dim,dim] -> [dim]
  LinearMap unit;      // [1] -> [dim]
  LinearMap comul;     // [dim] -> [dim,dim]
  LinearMap counit;    // [dim] -> [1]
  LinearMap antipode;  // [dim] -> [dim]
  std::vector<std::string> basis_labels;
  std::string name;

  HopfQuasigroupData(std::size_t d, FieldDesc f, LinearMap m, LinearMap u, LinearMap cm,
                     LinearMap cu, LinearMap s, std::vector<std::string> labels = {},
                     std::string nm = {})
      : dim(d), field(f), mul(std::move(m)), unit(std::move(u)), comul(std::move(cm)),
        counit(std::move(cu)), antipode(std::move(s)), basis_labels(std::move(labels)),
        name(std::move(nm)) {
    detail::check_structure_shapes(dim, field, mul, unit, comul, counit, antipode);
  }

  LinearMap id() const { return LinearMap::identity({dim}, field); }

  friend bool operator==(const HopfQuasigroupData& a, const HopfQuasigroupData& b) {
    return a.dim == b.dim && a.field == b.field && a.mul == b.mul && a.unit == b.unit &&
           a.comul == b.comul && a.counit == b.counit && a.antipode == b.antipode;
  }
};

/// Identical layout; the intended axiom set differs (associative product,
/// possibly non-coassociative coproduct).
struct HopfCoquasigroupData {
  std::size_t dim;
  FieldDesc field;
  LinearMap mul;
  LinearMap unit;
  LinearMap comul;
  LinearMap counit;
  LinearMap antipode;
  std::vector<std::string> basis_labels;
  std::string name;

  HopfCoquasigroupData(std::size_t d, FieldDesc f, LinearMap m, LinearMap u, LinearMap cm,
                       LinearMap cu, LinearMap s, std::vector<std::string> labels = {},
                       std::string nm = {})
      : dim(d), field(f), mul(std::move(m)), unit(std::move(u)), comul(std::move(cm)),
        counit(std::move(cu)), antipode(std::move(s)), basis_labels(std::move(labels)),
        name(std::move(nm)) {
    detail::check_structure_shapes(dim, field, mul, unit, comul, counit, antipode);
  }

  LinearMap id() const { return LinearMap::identity({dim}, field); }

  friend bool operator==(const HopfCoquasigroupData& a, const HopfCoquasigroupData& b) {
    return a.dim == b.dim && a.field == b.field && a.mul == b.mul && a.unit == b.unit &&
           a.comul == b.comul && a.counit == b.counit && a.antipode == b.antipode;
  }
};

/// Unit laws plus an informational associativity flag.
template <typename S>
AxiomReport check_unital_algebra(const S& x) {
  const LinearMap id = x.id();
  AxiomReport r;
  r.entries.push_back(compare_maps("unit_left", x.mul.compose(tensor(x.unit, id)), id));
  r.entries.push_back(compare_maps("unit_right", x.mul.compose(tensor(id, x.unit)), id));
  r.entries.push_back(compare_maps("associative", x.mul.compose(tensor(x.mul, id)),
                                   x.mul.compose(tensor(id, x.mul)),
                                   /*informational=*/true));
  return r;
}

/// Counit laws plus an informational coassociativity flag.
template <typename S>
AxiomReport check_counital_coalgebra(const S& x) {
  const LinearMap id = x.id();
  AxiomReport r;
  r.entries.push_back(compare_maps("counit_left", tensor(x.counit, id).compose(x.comul), id));
  r.entries.push_back(compare_maps("counit_right", tensor(id, x.counit).compose(x.comul), id));
  r.entries.push_back(compare_maps("coassociative", tensor(x.comul, id).compose(x.comul),
                                   tensor(id, x.comul).compose(x.comul),
                                   /*informational=*/true));
  return r;
}

/// Coproduct and counit are algebra morphisms.
template <typename S>
AxiomReport check_bialgebra_compat(const S& x) {
  const LinearMap id = x.id();
  const LinearMap mid_flip = tensor(id, flip_map(x.dim, x.dim, x.field), id);
  AxiomReport r;
  r.entries.push_back(compare_maps(
      "comul_multiplicative", x.comul.compose(x.mul),
      tensor(x.mul, x.mul).compose(mid_flip).compose(tensor(x.comul, x.comul))));
  r.entries.push_back(compare_maps("comul_unital", x.comul.compose(x.unit),
                                   tensor(x.unit, x.unit)));
  r.entries.push_back(compare_maps("counit_multiplicative", x.counit.compose(x.mul),
                                   tensor(x.counit, x.counit)));
  r.entries.push_back(compare_maps("counit_unital", x.counit.compose(x.unit),
                                   LinearMap::identity({1}, x.field)));
  return r;
}

/// The four Hopf quasigroup identities over all basis pairs, plus the
/// required coassociativity, (co)unit laws and bialgebra compatibility.
/// Associativity stays informational.
inline AxiomReport check_hopf_quasigroup(const HopfQuasigroupData& h) {
  const LinearMap id = h.id();
  const LinearMap s = h.antipode;
  AxiomReport r = check_unital_algebra(h);
  AxiomReport co = check_counital_coalgebra(h);
  for (auto& e : co.entries)
    if (e.name == "coassociative") e.informational = false;
  r.append(co);
  r.append(check_bialgebra_compat(h));

  // domain (h, g), shape [dim, dim]
  const LinearMap eps_g = tensor(h.counit, id);          // h (x) g -> eps(h) g
  const LinearMap g_eps = tensor(id, h.counit);          // g (x) h -> eps(h) g
  const LinearMap dl = tensor(h.comul, id);              // h (x) g -> h1 (x) h2 (x) g
  const LinearMap dr = tensor(id, h.comul);              // g (x) h -> g (x) h1 (x) h2
  r.entries.push_back(compare_maps(
      "quasi_SL",  // S(h1)(h2 g) = eps(h) g
      h.mul.compose(tensor(s, id)).compose(tensor(id, h.mul)).compose(dl), eps_g));
  r.entries.push_back(compare_maps(
      "quasi_LS",  // h1 (S(h2) g) = eps(h) g
      h.mul.compose(tensor(id, h.mul)).compose(tensor(id, s, id)).compose(dl), eps_g));
  r.entries.push_back(compare_maps(
      "quasi_RS",  // (g h1) S(h2) = eps(h) g
      h.mul.compose(tensor(h.mul, s)).compose(dr), g_eps));
  r.entries.push_back(compare_maps(
      "quasi_SR",  // (g S(h1)) h2 = eps(h) g
      h.mul.compose(tensor(h.mul, id)).compose(tensor(id, s, id)).compose(dr), g_eps));
  return r;
}

/// The four Hopf coquasigroup antipode identities, required associativity,
/// (co)unit laws and bialgebra compatibility. Coassociativity informational.
inline AxiomReport check_hopf_coquasigroup(const HopfCoquasigroupData& h) {
  const LinearMap id = h.id();
  const LinearMap s = h.antipode;
  AxiomReport alg = check_unital_algebra(h);
  for (auto& e : alg.entries)
    if (e.name == "associative") e.informational = false;
  AxiomReport r = alg;
  r.append(check_counital_coalgebra(h));
  r.append(check_bialgebra_compat(h));

  const LinearMap dd_l = tensor(h.comul, id).compose(h.comul);  // h -> h11 (x) h12 (x) h2
  const LinearMap dd_r = tensor(id, h.comul).compose(h.comul);  // h -> h1 (x) h21 (x) h22
  const LinearMap one_h = tensor(h.unit, id);                   // h -> 1 (x) h
  const LinearMap h_one = tensor(id, h.unit);                   // h -> h (x) 1
  r.entries.push_back(compare_maps(
      "coquasi_SL",  // S(h1) h21 (x) h22 = 1 (x) h
      tensor(h.mul, id).compose(tensor(s, id, id)).compose(dd_r), one_h));
  r.entries.push_back(compare_maps(
      "coquasi_LS",  // h1 S(h21) (x) h22 = 1 (x) h
      tensor(h.mul, id).compose(tensor(id, s, id)).compose(dd_r), one_h));
  r.entries.push_back(compare_maps(
      "coquasi_RS",  // h11 (x) h12 S(h2) = h (x) 1
      tensor(id, h.mul).compose(tensor(id, id, s)).compose(dd_l), h_one));
  r.entries.push_back(compare_maps(
      "coquasi_SR",  // h11 (x) S(h12) h2 = h (x) 1
      tensor(id, h.mul).compose(tensor(id, s, id)).compose(dd_l), h_one));
  return r;
}

/// Antimultiplicativity, anticomultiplicativity and unit/counit behaviour of
/// the antipode. These follow from the axioms, so they double as cross-checks
/// of the checker itself. The standard antipode property is informational.
template <typename S>
AxiomReport antipode_diagnostics(const S& x) {
  const LinearMap id = x.id();
  const LinearMap s = x.antipode;
  const LinearMap fl = flip_map(x.dim, x.dim, x.field);
  const LinearMap unit_eps = x.unit.compose(x.counit);
  AxiomReport r;
  r.entries.push_back(compare_maps("antimultiplicative", s.compose(x.mul),
                                   x.mul.compose(tensor(s, s)).compose(fl)));
  r.entries.push_back(compare_maps("anticomultiplicative", tensor(s, s).compose(x.comul),
                                   fl.compose(x.comul).compose(s)));
  r.entries.push_back(compare_maps("antipode_unit", s.compose(x.unit), x.unit));
  r.entries.push_back(compare_maps("antipode_counit", x.counit.compose(s), x.counit));
  r.entries.push_back(compare_maps("antipode_property_left",
                                   x.mul.compose(tensor(s, id)).compose(x.comul), unit_eps,
                                   /*informational=*/true));
  r.entries.push_back(compare_maps("antipode_property_right",
                                   x.mul.compose(tensor(id, s)).compose(x.comul), unit_eps,
                                   /*informational=*/true));
  return r;
}

/// Left division h \ g = S(h) g.
template <typename S>
std::vector<Scalar> left_divide(const S& x, const std::vector<Scalar>& h,
                                const std::vector<Scalar>& g) {
  if (h.size() != x.dim || g.size() != x.dim) throw ShapeMismatchError("left_divide: bad vector dim");
  std::vector<Scalar> sh = x.antipode.apply(h);
  std::vector<Scalar> t(x.dim * x.dim, Scalar::zero(x.field));
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j) t[i * x.dim + j] = sh[i] * g[j];
  return x.mul.apply(t);
}

/// Right division g / h = g S(h).
template <typename S>
std::vector<Scalar> right_divide(const S& x, const std::vector<Scalar>& g,
                                 const std::vector<Scalar>& h) {
  if (h.size() != x.dim || g.size() != x.dim) throw ShapeMismatchError("right_divide: bad vector dim");
  std::vector<Scalar> sh = x.antipode.apply(h);
  std::vector<Scalar> t(x.dim * x.dim, Scalar::zero(x.field));
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j) t[i * x.dim + j] = g[i] * sh[j];
  return x.mul.apply(t);
}

/// Finite-dimensional dual: plain matrix transposes in the same basis
/// ordering, so dualize of dualize is literal equality.
inline HopfCoquasigroupData dualize(const HopfQuasigroupData& x) {
  return HopfCoquasigroupData(
      x.dim, x.field, x.comul.transpose(), x.counit.transpose(), x.mul.transpose(),
      x.unit.transpose(), x.antipode.transpose(), x.basis_labels, x.name);
}

inline HopfQuasigroupData dualize(const HopfCoquasigroupData& x) {
  return HopfQuasigroupData(
      x.dim, x.field, x.comul.transpose(), x.counit.transpose(), x.mul.transpose(),
      x.unit.transpose(), x.antipode.transpose(), x.basis_labels, x.name);
}

}  // namespace hopfq
