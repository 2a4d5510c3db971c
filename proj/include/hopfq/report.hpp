#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hopfq/linear_map.hpp"

namespace hopfq {

/// Number of workers used by exhaustive checkers. Results are identical for
/// any worker count; partitions merge by minimum witness.
inline int& worker_count() {
  static int w = 1;
  return w;
}

/// One named check: an exact equality of two composed maps, with the
/// lexicographically smallest failing basis tuple as witness.
struct CheckEntry {
  std::string name;
  bool passed = true;
  bool informational = false;
  std::optional<std::vector<std::size_t>> witness;
  std::string lhs;  // full coefficient column at the witness
  std::string rhs;

  std::string witness_str() const {
    if (!witness) return "";
    std::string s = "(";
    for (std::size_t k = 0; k < witness->size(); ++k) {
      if (k) s += ",";
      s += std::to_string((*witness)[k]);
    }
    return s + ")";
  }
};

struct AxiomReport {
  std::vector<CheckEntry> entries;

  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.informational && !e.passed) return false;
    return true;
  }

  const CheckEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const CheckEntry* e = find(name);
    if (!e) throw Error("no check named " + name);
    return e->passed;
  }

  void append(const AxiomReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
};

using ConditionReport = AxiomReport;

namespace detail {

inline std::string column_str(const LinearMap& m, std::size_t col) {
  std::string s = "[";
  bool first = true;
  for (const auto& [row, v] : m.column(col)) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(row) + ":" + v.str();
  }
  return s + "]";
}

inline bool columns_equal(const LinearMap& a, const LinearMap& b, std::size_t col) {
  return a.column(col) == b.column(col);
}

/// First column where the two maps differ, scanning in ascending order.
inline std::optional<std::size_t> first_differing_column(const LinearMap& a,
                                                         const LinearMap& b) {
  const std::size_t n = a.domain_dim();
  const int workers = std::max(1, worker_count());
  if (workers == 1 || n < 16) {
    for (std::size_t c = 0; c < n; ++c)
      if (!columns_equal(a, b, c)) return c;
    return std::nullopt;
  }
  std::vector<std::optional<std::size_t>> local(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = static_cast<std::size_t>(w) * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      for (std::size_t c = lo; c < hi; ++c) {
        if (!columns_equal(a, b, c)) {
          local[w] = c;
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& r : local)
    if (r) return r;
  return std::nullopt;
}

}  // namespace detail

/// Exact equality of two composed maps, quantified over the domain basis.
/// Factorizations may differ by singleton factors; total dims must agree.
inline CheckEntry compare_maps(const std::string& name, const LinearMap& lhs,
                               const LinearMap& rhs, bool informational = false) {
  if (lhs.domain_dim() != rhs.domain_dim() || lhs.codomain_dim() != rhs.codomain_dim()) {
    throw ShapeMismatchError("compare " + name + ": dimension mismatch");
  }
  CheckEntry e;
  e.name = name;
  e.informational = informational;
  auto col = detail::first_differing_column(lhs, rhs);
  if (col) {
    e.passed = false;
    Shape witness_shape;
    for (std::size_t f : lhs.domain_shape())
      if (f > 1) witness_shape.push_back(f);
    e.witness = multi_index(witness_shape, *col);
    e.lhs = detail::column_str(lhs, *col);
    e.rhs = detail::column_str(rhs, *col);
  }
  return e;
}

}  // namespace hopfq
