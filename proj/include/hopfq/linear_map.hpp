#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hopfq/errors.hpp"
#include "hopfq/scalar.hpp"

namespace hopfq {

/// Ordered list of tensor-factor dimensions.
using Shape = std::vector<std::size_t>;

inline std::size_t total_dim(const Shape& s) {
  std::size_t d = 1;
  for (std::size_t f : s) d *= f;
  return d;
}

/// Left-factor-major flat index of a multi-index.
inline std::size_t flat_index(const Shape& shape, const std::vector<std::size_t>& multi) {
  if (multi.size() != shape.size()) throw ShapeMismatchError("multi-index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    if (multi[k] >= shape[k]) throw ShapeMismatchError("multi-index out of range");
    flat = flat * shape[k] + multi[k];
  }
  return flat;
}

inline std::vector<std::size_t> multi_index(const Shape& shape, std::size_t flat) {
  std::vector<std::size_t> multi(shape.size(), 0);
  for (std::size_t k = shape.size(); k-- > 0;) {
    multi[k] = flat % shape[k];
    flat /= shape[k];
  }
  return multi;
}

/// Sparse exact matrix between tensor-power basis spaces.
///
/// Entries are keyed (column, row) so column slices are contiguous; zero
/// entries are never stored, which makes structural equality exact equality.
class LinearMap {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // (col, row)

  LinearMap(Shape domain, Shape codomain, FieldDesc field)
      : dom_(std::move(domain)), cod_(std::move(codomain)), field_(field) {
    for (std::size_t f : dom_)
      if (f == 0) throw ShapeMismatchError("zero-dimensional tensor factor");
    for (std::size_t f : cod_)
      if (f == 0) throw ShapeMismatchError("zero-dimensional tensor factor");
  }

  const Shape& domain_shape() const { return dom_; }
  const Shape& codomain_shape() const { return cod_; }
  std::size_t domain_dim() const { return total_dim(dom_); }
  std::size_t codomain_dim() const { return total_dim(cod_); }
  const FieldDesc& field() const { return field_; }
  const std::map<Key, Scalar>& entries() const { return entries_; }

  void set(std::size_t row, std::size_t col, const Scalar& v) {
    check_index(row, col);
    if (v.is_zero()) {
      entries_.erase({col, row});
    } else {
      entries_.insert_or_assign({col, row}, v);
    }
  }

  void add_to(std::size_t row, std::size_t col, const Scalar& v) {
    check_index(row, col);
    auto it = entries_.find({col, row});
    if (it == entries_.end()) {
      if (!v.is_zero()) entries_.emplace(Key{col, row}, v);
      return;
    }
    Scalar s = it->second + v;
    if (s.is_zero()) {
      entries_.erase(it);
    } else {
      it->second = s;
    }
  }

  Scalar at(std::size_t row, std::size_t col) const {
    auto it = entries_.find({col, row});
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
  }

  static LinearMap zero(Shape domain, Shape codomain, FieldDesc field) {
    return LinearMap(std::move(domain), std::move(codomain), field);
  }

  static LinearMap identity(Shape shape, FieldDesc field) {
    LinearMap m(shape, shape, field);
    Scalar one = Scalar::one(field);
    for (std::size_t i = 0; i < m.domain_dim(); ++i) m.set(i, i, one);
    return m;
  }

  /// e_i ⊗ f_j (shape [dx,dy]) to f_j ⊗ e_i (shape [dy,dx]).
  static LinearMap flip(std::size_t dx, std::size_t dy, FieldDesc field) {
    LinearMap m(Shape{dx, dy}, Shape{dy, dx}, field);
    Scalar one = Scalar::one(field);
    for (std::size_t i = 0; i < dx; ++i)
      for (std::size_t j = 0; j < dy; ++j) m.set(j * dx + i, i * dy + j, one);
    return m;
  }

  /// Composition this ∘ g.
  LinearMap compose(const LinearMap& g) const {
    if (!(field_ == g.field_)) throw MixedFieldsError(field_.str(), g.field_.str());
    if (domain_dim() != g.codomain_dim()) {
      throw ShapeMismatchError("compose: domain dim " + std::to_string(domain_dim()) +
                               " vs codomain dim " + std::to_string(g.codomain_dim()));
    }
    LinearMap out(g.dom_, cod_, field_);
    for (auto it = g.entries_.begin(); it != g.entries_.end(); ++it) {
      const auto [c, m] = it->first;
      const Scalar& v = it->second;
      auto lo = entries_.lower_bound({m, 0});
      auto hi = entries_.lower_bound({m + 1, 0});
      for (auto jt = lo; jt != hi; ++jt) {
        out.add_to(jt->first.second, c, jt->second * v);
      }
    }
    return out;
  }

  /// Kronecker product, left-factor-major: domain/codomain shapes concatenate.
  LinearMap tensor(const LinearMap& g) const {
    if (!(field_ == g.field_)) throw MixedFieldsError(field_.str(), g.field_.str());
    Shape dom = dom_, cod = cod_;
    dom.insert(dom.end(), g.dom_.begin(), g.dom_.end());
    cod.insert(cod.end(), g.cod_.begin(), g.cod_.end());
    LinearMap out(std::move(dom), std::move(cod), field_);
    const std::size_t gd = g.domain_dim(), gc = g.codomain_dim();
    for (const auto& [kf, vf] : entries_) {
      for (const auto& [kg, vg] : g.entries_) {
        out.set(kf.second * gc + kg.second, kf.first * gd + kg.first, vf * vg);
      }
    }
    return out;
  }

  LinearMap transpose() const {
    LinearMap out(cod_, dom_, field_);
    for (const auto& [k, v] : entries_) out.set(k.first, k.second, v);
    return out;
  }

  /// Same matrix with reinterpreted factorizations (total dims must agree).
  LinearMap reshaped(Shape domain, Shape codomain) const {
    if (total_dim(domain) != domain_dim() || total_dim(codomain) != codomain_dim()) {
      throw ShapeMismatchError("reshape changes total dimension");
    }
    LinearMap out(std::move(domain), std::move(codomain), field_);
    out.entries_ = entries_;
    return out;
  }

  LinearMap operator+(const LinearMap& o) const {
    if (domain_dim() != o.domain_dim() || codomain_dim() != o.codomain_dim()) {
      throw ShapeMismatchError("sum of maps with different dimensions");
    }
    LinearMap out = *this;
    for (const auto& [k, v] : o.entries_) out.add_to(k.second, k.first, v);
    return out;
  }

  std::vector<std::pair<std::size_t, Scalar>> column(std::size_t col) const {
    std::vector<std::pair<std::size_t, Scalar>> out;
    auto lo = entries_.lower_bound({col, 0});
    auto hi = entries_.lower_bound({col + 1, 0});
    for (auto it = lo; it != hi; ++it) out.emplace_back(it->first.second, it->second);
    return out;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    if (v.size() != domain_dim()) throw ShapeMismatchError("apply: vector dim mismatch");
    std::vector<Scalar> out(codomain_dim(), Scalar::zero(field_));
    for (const auto& [k, val] : entries_) out[k.second] += val * v[k.first];
    return out;
  }

  /// Entry equality ignoring factorization (total dims must agree).
  bool same_entries(const LinearMap& o) const {
    return domain_dim() == o.domain_dim() && codomain_dim() == o.codomain_dim() &&
           entries_ == o.entries_;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.field_ == b.field_ &&
           a.entries_ == b.entries_;
  }

 private:
  void check_index(std::size_t row, std::size_t col) const {
    if (row >= codomain_dim() || col >= domain_dim()) {
      throw ShapeMismatchError("entry index out of range");
    }
  }

  Shape dom_, cod_;
  FieldDesc field_;
  std::map<Key, Scalar> entries_;
};

inline LinearMap compose(const LinearMap& f, const LinearMap& g) { return f.compose(g); }
inline LinearMap tensor(const LinearMap& f, const LinearMap& g) { return f.tensor(g); }

template <typename... Rest>
LinearMap tensor(const LinearMap& f, const LinearMap& g, const Rest&... rest) {
  return tensor(f.tensor(g), rest...);
}

inline LinearMap flip_map(std::size_t dx, std::size_t dy, FieldDesc field) {
  return LinearMap::flip(dx, dy, field);
}

}  // namespace hopfq
