#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/structures.hpp"

namespace hopfq {

/// Cayley table of a finite loop; identity pinned at index 0.
struct LoopTable {
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;
  std::string name;

  std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
};

/// Validates Latin-square and identity conditions; returns the table.
inline LoopTable validate_loop(std::vector<std::vector<std::size_t>> table,
                               std::string name = {}) {
  const std::size_t n = table.size();
  if (n == 0) throw LoopValidationError("empty table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw LoopValidationError("table is not square at row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw LoopValidationError("entry out of range at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (table[0][j] != j) {
      throw LoopValidationError("identity is not index 0: row 0 column " + std::to_string(j));
    }
    if (table[j][0] != j) {
      throw LoopValidationError("identity is not index 0: column 0 row " + std::to_string(j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (row_seen[table[i][j]]) {
        throw LoopValidationError("not a Latin square: repeated value " +
                                  std::to_string(table[i][j]) + " in row " + std::to_string(i));
      }
      row_seen[table[i][j]] = true;
      if (col_seen[table[j][i]]) {
        throw LoopValidationError("not a Latin square: repeated value " +
                                  std::to_string(table[j][i]) + " in column " + std::to_string(i));
      }
      col_seen[table[j][i]] = true;
    }
  }
  return LoopTable{n, std::move(table), std::move(name)};
}

struct LoopPropertyReport {
  bool has_two_sided_inverses = true;
  bool left_inverse_property = true;
  bool right_inverse_property = true;
  bool moufang = true;
  bool associative = true;
  std::vector<std::size_t> inverse;  // valid when has_two_sided_inverses
  std::optional<std::size_t> inverse_witness;
  std::optional<std::array<std::size_t, 2>> left_ip_witness;
  std::optional<std::array<std::size_t, 2>> right_ip_witness;
  std::optional<std::array<std::size_t, 3>> moufang_witness;
  std::optional<std::array<std::size_t, 3>> associativity_witness;

  bool is_ip() const {
    return has_two_sided_inverses && left_inverse_property && right_inverse_property;
  }
};

/// Exhaustive inverse-property, Moufang and associativity checks.
/// Witnesses are the lexicographically smallest failing tuples.
inline LoopPropertyReport loop_properties(const LoopTable& loop) {
  const std::size_t n = loop.order;
  LoopPropertyReport r;
  r.inverse.assign(n, 0);
  for (std::size_t x = 0; x < n && r.has_two_sided_inverses; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n; ++y) {
      if (loop.mul(x, y) == 0 && loop.mul(y, x) == 0) {
        r.inverse[x] = y;
        found = true;
        break;
      }
    }
    if (!found) {
      r.has_two_sided_inverses = false;
      r.inverse_witness = x;
    }
  }
  if (r.has_two_sided_inverses) {
    for (std::size_t x = 0; x < n && r.left_inverse_property; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (loop.mul(r.inverse[x], loop.mul(x, y)) != y) {
          r.left_inverse_property = false;
          r.left_ip_witness = {x, y};
          break;
        }
      }
    }
    for (std::size_t x = 0; x < n && r.right_inverse_property; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (loop.mul(loop.mul(y, x), r.inverse[x]) != y) {
          r.right_inverse_property = false;
          r.right_ip_witness = {x, y};
          break;
        }
      }
    }
  } else {
    r.left_inverse_property = r.right_inverse_property = false;
  }
  for (std::size_t x = 0; x < n && r.moufang; ++x)
    for (std::size_t y = 0; y < n && r.moufang; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        // ((xy)x)z = x(y(xz))
        if (loop.mul(loop.mul(loop.mul(x, y), x), z) !=
            loop.mul(x, loop.mul(y, loop.mul(x, z)))) {
          r.moufang = false;
          r.moufang_witness = {x, y, z};
          break;
        }
      }
  for (std::size_t x = 0; x < n && r.associative; ++x)
    for (std::size_t y = 0; y < n && r.associative; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (loop.mul(loop.mul(x, y), z) != loop.mul(x, loop.mul(y, z))) {
          r.associative = false;
          r.associativity_witness = {x, y, z};
          break;
        }
      }
  return r;
}

inline LoopTable gen_cyclic(std::size_t n) {
  if (n == 0) throw LoopValidationError("cyclic group order must be >= 1");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return validate_loop(std::move(t), "c" + std::to_string(n));
}

/// S3 with elements ordered e, r, r^2, s, sr, sr^2 (r = (123), s = (12)).
inline LoopTable gen_s3() {
  auto mul = [](std::size_t a, std::size_t b) -> std::size_t {
    // element i<3 is r^i, element 3+i is s r^i
    std::size_t ai = a % 3, bi = b % 3;
    bool as = a >= 3, bs = b >= 3;
    // r^a * s = s r^{-a}; (s r^a)(s r^b) = r^{b-a}
    if (!as && !bs) return (ai + bi) % 3;
    if (!as && bs) return 3 + (bi + 3 - ai) % 3;
    if (as && !bs) return 3 + (ai + bi) % 3;
    return (bi + 3 - ai) % 3;
  };
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) t[i][j] = mul(i, j);
  return validate_loop(std::move(t), "s3");
}

/// Chein double M(G,2): order doubles, G first then Gu (gu at n + index(g)).
/// g h = gh, g (hu) = (hg)u, (gu) h = (g h^-1)u, (gu)(hu) = h^-1 g.
inline LoopTable gen_chein_double(const LoopTable& g) {
  LoopPropertyReport props = loop_properties(g);
  if (!props.associative) {
    throw NotAGroupError("chein double input is not a group (associativity fails at (" +
                         std::to_string((*props.associativity_witness)[0]) + "," +
                         std::to_string((*props.associativity_witness)[1]) + "," +
                         std::to_string((*props.associativity_witness)[2]) + "))");
  }
  const std::size_t n = g.order;
  const auto& inv = props.inverse;
  std::vector<std::vector<std::size_t>> t(2 * n, std::vector<std::size_t>(2 * n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      t[x][y] = g.mul(x, y);
      t[x][n + y] = n + g.mul(y, x);
      t[n + x][y] = n + g.mul(x, inv[y]);
      t[n + x][n + y] = g.mul(inv[y], x);
    }
  }
  return validate_loop(std::move(t), "m(" + (g.name.empty() ? "?" : g.name) + ",2)");
}

/// Linearization of an IP loop: basis = loop elements, group-like coproduct,
/// antipode from loop inversion.
inline HopfQuasigroupData loop_algebra(const LoopTable& loop, const FieldDesc& field) {
  LoopPropertyReport props = loop_properties(loop);
  if (!props.is_ip()) {
    std::string why = !props.has_two_sided_inverses
                          ? "element " + std::to_string(*props.inverse_witness) +
                                " has no two-sided inverse"
                      : !props.left_inverse_property
                          ? "left inverse property fails at (" +
                                std::to_string((*props.left_ip_witness)[0]) + "," +
                                std::to_string((*props.left_ip_witness)[1]) + ")"
                          : "right inverse property fails at (" +
                                std::to_string((*props.right_ip_witness)[0]) + "," +
                                std::to_string((*props.right_ip_witness)[1]) + ")";
    throw NotIPLoopError("not an IP loop: " + why);
  }
  const std::size_t n = loop.order;
  const Scalar one = Scalar::one(field);
  LinearMap mul({n, n}, {n}, field);
  LinearMap unit({1}, {n}, field);
  LinearMap comul({n}, {n, n}, field);
  LinearMap counit({n}, {1}, field);
  LinearMap antipode({n}, {n}, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mul.set(loop.mul(i, j), i * n + j, one);
    comul.set(i * n + i, i, one);
    counit.set(0, i, one);
    antipode.set(props.inverse[i], i, one);
  }
  unit.set(0, 0, one);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return HopfQuasigroupData(n, field, std::move(mul), std::move(unit), std::move(comul),
                            std::move(counit), std::move(antipode), std::move(labels),
                            loop.name.empty() ? "" : "k[" + loop.name + "]");
}

}  // namespace hopfq
