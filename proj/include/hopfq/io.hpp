#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "hopfq/loops.hpp"
#include "hopfq/smash.hpp"

namespace hopfq {

using json = nlohmann::ordered_json;

/// FNV-1a 64-bit over raw bytes, hex-encoded. Binds twist/action files to the
/// exact factor files they were generated against.
inline std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path.string());
  out << bytes;
}

namespace detail {

inline FieldDesc parse_field(const std::string& s) {
  if (s == "rational") return FieldDesc::rationals();
  if (s.rfind("prime ", 0) == 0) {
    try {
      return FieldDesc::prime(std::stoull(s.substr(6)));
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad field descriptor: " + s);
    }
  }
  throw ParseError("bad field descriptor: " + s);
}

inline json entries_to_json(const LinearMap& m) {
  // canonical order: sorted by (row, col)
  std::map<std::pair<std::size_t, std::size_t>, const Scalar*> by_row;
  for (const auto& [k, v] : m.entries()) by_row.emplace(std::make_pair(k.second, k.first), &v);
  json arr = json::array();
  for (const auto& [rc, v] : by_row) {
    arr.push_back(json::array({rc.first, rc.second, v->str()}));
  }
  return arr;
}

inline LinearMap entries_from_json(const json& arr, Shape dom, Shape cod,
                                   const FieldDesc& field) {
  LinearMap m(std::move(dom), std::move(cod), field);
  std::pair<std::size_t, std::size_t> prev{0, 0};
  bool first = true;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned() || !e[2].is_string()) {
      throw ParseError("bad sparse entry " + e.dump());
    }
    std::size_t row = e[0].get<std::size_t>(), col = e[1].get<std::size_t>();
    if (row >= m.codomain_dim() || col >= m.domain_dim()) {
      throw ParseError("entry index out of range: " + e.dump());
    }
    std::pair<std::size_t, std::size_t> key{row, col};
    if (!first && key <= prev) throw ParseError("entries not sorted or duplicated at " + e.dump());
    prev = key;
    first = false;
    Scalar v = Scalar::parse(e[2].get<std::string>(), field);
    if (v.is_zero()) throw ParseError("explicit zero entry at " + e.dump());
    m.set(row, col, v);
  }
  return m;
}

inline json require(const json& j, const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing key: " + key);
  return j.at(key);
}

}  // namespace detail

inline std::string serialize_loop(const LoopTable& loop) {
  json j;
  j["kind"] = "loop";
  j["name"] = loop.name;
  j["order"] = loop.order;
  j["table"] = loop.table;
  return j.dump(1) + "\n";
}

template <typename S>
std::string serialize_structure(const S& x) {
  json j;
  j["kind"] = std::is_same_v<S, HopfQuasigroupData> ? "hopf_quasigroup" : "hopf_coquasigroup";
  j["name"] = x.name;
  j["field"] = x.field.str();
  j["dim"] = x.dim;
  if (!x.basis_labels.empty()) j["basis_labels"] = x.basis_labels;
  j["mul"] = detail::entries_to_json(x.mul);
  j["unit"] = detail::entries_to_json(x.unit);
  j["comul"] = detail::entries_to_json(x.comul);
  j["counit"] = detail::entries_to_json(x.counit);
  j["antipode"] = detail::entries_to_json(x.antipode);
  return j.dump(1) + "\n";
}

/// Reference to a factor structure file plus the hash of its bytes.
struct StructRef {
  std::string path;
  std::string hash;
};

/// A twist or action file as stored: map entries plus bound factor refs.
struct TwistFileData {
  std::string kind;  // "twist" or "action"
  std::string name;
  FieldDesc field;
  StructRef h_ref;
  StructRef a_ref;
  json map_entries;
};

inline std::string serialize_twist_file(const std::string& kind, const std::string& name,
                                        const StructRef& h_ref, const StructRef& a_ref,
                                        const FieldDesc& field, const LinearMap& map) {
  json j;
  j["kind"] = kind;
  j["name"] = name;
  j["field"] = field.str();
  j["h_ref"] = json{{"path", h_ref.path}, {"hash", h_ref.hash}};
  j["a_ref"] = json{{"path", a_ref.path}, {"hash", a_ref.hash}};
  j["map"] = detail::entries_to_json(map);
  return j.dump(1) + "\n";
}

struct ParsedLoop {
  LoopTable loop;
};
struct ParsedQuasigroup {
  HopfQuasigroupData data;
};
struct ParsedCoquasigroup {
  HopfCoquasigroupData data;
};

using ParsedStructure =
    std::variant<ParsedLoop, ParsedQuasigroup, ParsedCoquasigroup, TwistFileData>;

namespace detail {

template <typename S>
S parse_hopf_structure(const json& j) {
  FieldDesc field = parse_field(require(j, "field").get<std::string>());
  std::size_t dim = require(j, "dim").get<std::size_t>();
  if (dim == 0) throw ParseError("dim must be >= 1");
  std::vector<std::string> labels;
  if (j.contains("basis_labels")) labels = j.at("basis_labels").get<std::vector<std::string>>();
  return S(dim, field,
           entries_from_json(require(j, "mul"), {dim, dim}, {dim}, field),
           entries_from_json(require(j, "unit"), {1}, {dim}, field),
           entries_from_json(require(j, "comul"), {dim}, {dim, dim}, field),
           entries_from_json(require(j, "counit"), {dim}, {1}, field),
           entries_from_json(require(j, "antipode"), {dim}, {dim}, field), std::move(labels),
           j.value("name", std::string{}));
}

}  // namespace detail

inline ParsedStructure parse_structure_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const std::string kind = detail::require(j, "kind").get<std::string>();
  if (kind == "loop") {
    auto table = detail::require(j, "table").get<std::vector<std::vector<std::size_t>>>();
    LoopTable loop = validate_loop(std::move(table), j.value("name", std::string{}));
    if (j.contains("order") && j.at("order").get<std::size_t>() != loop.order) {
      throw ParseError("declared order does not match table size");
    }
    return ParsedLoop{std::move(loop)};
  }
  if (kind == "hopf_quasigroup") {
    return ParsedQuasigroup{detail::parse_hopf_structure<HopfQuasigroupData>(j)};
  }
  if (kind == "hopf_coquasigroup") {
    return ParsedCoquasigroup{detail::parse_hopf_structure<HopfCoquasigroupData>(j)};
  }
  if (kind == "twist" || kind == "action") {
    TwistFileData t;
    t.kind = kind;
    t.name = j.value("name", std::string{});
    t.field = detail::parse_field(detail::require(j, "field").get<std::string>());
    json h = detail::require(j, "h_ref");
    json a = detail::require(j, "a_ref");
    t.h_ref = {detail::require(h, "path").get<std::string>(),
               detail::require(h, "hash").get<std::string>()};
    t.a_ref = {detail::require(a, "path").get<std::string>(),
               detail::require(a, "hash").get<std::string>()};
    t.map_entries = detail::require(j, "map");
    return t;
  }
  throw ParseError("unknown kind: " + kind);
}

inline ParsedStructure parse_structure_file(const std::filesystem::path& path) {
  return parse_structure_text(read_file(path));
}

/// Resolves a twist/action file's factor references (hash-checked) and builds
/// the typed object. Factors must both be hopf_quasigroup files, or both
/// hopf_coquasigroup for a cotwist.
struct ResolvedTwist {
  std::string kind;
  std::string name;
  std::variant<std::monostate, TwistMap, CoTwistMap, QuasimoduleAction> value;
};

inline ResolvedTwist resolve_twist_file(const TwistFileData& t,
                                        const std::filesystem::path& base_dir) {
  auto load_ref = [&](const StructRef& ref) -> ParsedStructure {
    std::filesystem::path p = base_dir / ref.path;
    std::string bytes = read_file(p);
    std::string h = content_hash(bytes);
    if (h != ref.hash) {
      throw HashMismatchError("hash mismatch for " + ref.path + ": file has " + h +
                              ", reference expects " + ref.hash);
    }
    return parse_structure_text(bytes);
  };
  ParsedStructure hs = load_ref(t.h_ref);
  ParsedStructure as = load_ref(t.a_ref);
  ResolvedTwist out;
  out.kind = t.kind;
  out.name = t.name;
  if (std::holds_alternative<ParsedQuasigroup>(hs) && std::holds_alternative<ParsedQuasigroup>(as)) {
    HopfQuasigroupData h = std::get<ParsedQuasigroup>(hs).data;
    HopfQuasigroupData a = std::get<ParsedQuasigroup>(as).data;
    if (!(h.field == t.field)) throw ParseError("twist field does not match factors");
    if (t.kind == "action") {
      LinearMap m = detail::entries_from_json(t.map_entries, {h.dim, a.dim}, {a.dim}, t.field);
      out.value = QuasimoduleAction(std::move(h), std::move(a), std::move(m));
    } else {
      LinearMap m =
          detail::entries_from_json(t.map_entries, {h.dim, a.dim}, {a.dim, h.dim}, t.field);
      out.value = TwistMap(std::move(h), std::move(a), std::move(m));
    }
    return out;
  }
  if (std::holds_alternative<ParsedCoquasigroup>(hs) &&
      std::holds_alternative<ParsedCoquasigroup>(as) && t.kind == "twist") {
    HopfCoquasigroupData h = std::get<ParsedCoquasigroup>(hs).data;
    HopfCoquasigroupData a = std::get<ParsedCoquasigroup>(as).data;
    if (!(h.field == t.field)) throw ParseError("twist field does not match factors");
    LinearMap m =
        detail::entries_from_json(t.map_entries, {h.dim, a.dim}, {a.dim, h.dim}, t.field);
    out.value = CoTwistMap(std::move(h), std::move(a), std::move(m));
    return out;
  }
  throw ParseError("twist factor files must both be hopf structures of the same kind");
}

inline StructRef make_ref(const std::filesystem::path& file,
                          const std::filesystem::path& base_dir) {
  return StructRef{std::filesystem::relative(file, base_dir).generic_string(),
                   content_hash(read_file(file))};
}

}  // namespace hopfq
