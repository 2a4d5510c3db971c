// hopfq command-line driver: structure generation, validation, twist-condition
// checking, smash/cosmash construction and theorem verification over exact
// structure-constant files.

#include <CLI11.hpp>

#include <hopfq/hopfq.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "hopfq 1.0.0";

using namespace hopfq;

/// Deterministic report: human-readable table followed by a machine-readable
/// JSON section. No timestamps; ordering is fixed by construction.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, hash
  std::vector<std::pair<std::string, std::string>> meta;    // key, value
  AxiomReport checks;

  bool verdict() const { return checks.all_passed(); }

  void print(std::ostream& os) const {
    os << kVersion << "\n";
    os << "command: " << command << "\n";
    for (const auto& [path, hash] : inputs) os << "input: " << path << " fnv1a=" << hash << "\n";
    for (const auto& [k, v] : meta) os << k << ": " << v << "\n";
    if (!checks.entries.empty()) os << "\n";
    for (const auto& e : checks.entries) {
      os << "  " << (e.passed ? "PASS  " : "FAIL  ") << e.name;
      if (e.informational) os << " (informational)";
      if (!e.passed && e.witness) {
        os << " witness=" << e.witness_str();
        if (!e.lhs.empty() || !e.rhs.empty()) {
          os << "\n        lhs=" << e.lhs << "\n        rhs=" << e.rhs;
        }
      }
      os << "\n";
    }
    os << "\nverdict: " << (verdict() ? "PASS" : "FAIL") << "\n";
    os << "--- machine ---\n";
    json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["inputs"] = json::array();
    for (const auto& [path, hash] : inputs) {
      j["inputs"].push_back(json{{"path", path}, {"hash", hash}});
    }
    json meta_obj = json::object();
    for (const auto& [k, v] : meta) meta_obj[k] = v;
    j["meta"] = meta_obj;
    j["checks"] = json::array();
    for (const auto& e : checks.entries) {
      json c;
      c["name"] = e.name;
      c["passed"] = e.passed;
      c["informational"] = e.informational;
      if (e.witness) c["witness"] = *e.witness;
      if (!e.passed && !e.lhs.empty()) {
        c["lhs"] = e.lhs;
        c["rhs"] = e.rhs;
      }
      j["checks"].push_back(std::move(c));
    }
    j["verdict"] = verdict() ? "PASS" : "FAIL";
    os << j.dump(1) << "\n";
  }
};

void add_input(Report& r, const std::string& path) {
  r.inputs.emplace_back(path, content_hash(read_file(path)));
}

CheckEntry plain_entry(const std::string& name, bool passed, bool informational = false,
                       std::optional<std::vector<std::size_t>> witness = std::nullopt) {
  CheckEntry e;
  e.name = name;
  e.passed = passed;
  e.informational = informational;
  e.witness = std::move(witness);
  return e;
}

AxiomReport loop_suite(const LoopTable& loop) {
  LoopPropertyReport p = loop_properties(loop);
  AxiomReport r;
  auto w1 = [](std::optional<std::size_t> w) -> std::optional<std::vector<std::size_t>> {
    if (!w) return std::nullopt;
    return std::vector<std::size_t>{*w};
  };
  auto w2 = [](const std::optional<std::array<std::size_t, 2>>& w)
      -> std::optional<std::vector<std::size_t>> {
    if (!w) return std::nullopt;
    return std::vector<std::size_t>{(*w)[0], (*w)[1]};
  };
  auto w3 = [](const std::optional<std::array<std::size_t, 3>>& w)
      -> std::optional<std::vector<std::size_t>> {
    if (!w) return std::nullopt;
    return std::vector<std::size_t>{(*w)[0], (*w)[1], (*w)[2]};
  };
  r.entries.push_back(plain_entry("latin_square", true));
  r.entries.push_back(plain_entry("identity_element", true));
  r.entries.push_back(
      plain_entry("two_sided_inverses", p.has_two_sided_inverses, false, w1(p.inverse_witness)));
  r.entries.push_back(
      plain_entry("left_inverse_property", p.left_inverse_property, false, w2(p.left_ip_witness)));
  r.entries.push_back(plain_entry("right_inverse_property", p.right_inverse_property, false,
                                  w2(p.right_ip_witness)));
  r.entries.push_back(plain_entry("moufang", p.moufang, true, w3(p.moufang_witness)));
  r.entries.push_back(plain_entry("associative", p.associative, true, w3(p.associativity_witness)));
  return r;
}

struct LoadedTwist {
  TwistFileData file;
  ResolvedTwist resolved;
};

LoadedTwist load_twist(const std::string& path, const std::string& expect_kind) {
  ParsedStructure ps = parse_structure_file(path);
  if (!std::holds_alternative<TwistFileData>(ps)) {
    throw ParseError(path + ": expected a " + expect_kind + " file");
  }
  TwistFileData t = std::get<TwistFileData>(ps);
  if (t.kind != expect_kind) {
    throw ParseError(path + ": expected kind " + expect_kind + ", found " + t.kind);
  }
  ResolvedTwist r = resolve_twist_file(t, std::filesystem::path(path).parent_path());
  return LoadedTwist{std::move(t), std::move(r)};
}

/// Checks that the twist file's factor references name the same bytes as the
/// explicitly supplied factor files.
void check_factor_binding(const TwistFileData& t, const std::string& h_path,
                          const std::string& a_path) {
  if (content_hash(read_file(h_path)) != t.h_ref.hash) {
    throw FactorMismatchError("--H file does not match the twist's H reference hash");
  }
  if (content_hash(read_file(a_path)) != t.a_ref.hash) {
    throw FactorMismatchError("--A file does not match the twist's A reference hash");
  }
}

template <typename S>
S load_structure(const std::string& path) {
  ParsedStructure ps = parse_structure_file(path);
  if constexpr (std::is_same_v<S, HopfQuasigroupData>) {
    if (auto* p = std::get_if<ParsedQuasigroup>(&ps)) return p->data;
    throw ParseError(path + ": expected a hopf_quasigroup file");
  } else {
    if (auto* p = std::get_if<ParsedCoquasigroup>(&ps)) return p->data;
    throw ParseError(path + ": expected a hopf_coquasigroup file");
  }
}

int run(int argc, char** argv) {
  CLI::App app{std::string(kVersion) + " — exact checks for twisted products of "
               "non-associative Hopf structures"};
  app.require_subcommand(1);
  int workers = 1;
  app.add_option("--workers", workers, "worker threads for exhaustive scans")
      ->check(CLI::PositiveNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a loop table file");
  std::string gen_kind, gen_group, gen_out;
  std::size_t gen_n = 0;
  gen->add_option("--kind", gen_kind, "cyclic | s3 | chein-double")->required();
  gen->add_option("--n", gen_n, "order (cyclic)");
  gen->add_option("--group", gen_group, "group loop file (chein-double)");
  gen->add_option("-o,--out", gen_out, "output path")->required();

  // loop-algebra
  auto* la = app.add_subcommand("loop-algebra", "linearize an IP loop");
  std::string la_in, la_field = "rational", la_out;
  la->add_option("loop", la_in, "loop table file")->required();
  la->add_option("--field", la_field, "rational | 'prime p'");
  la->add_option("-o,--out", la_out, "output path")->required();

  // dualize
  auto* du = app.add_subcommand("dualize", "transpose all structure constants");
  std::string du_in, du_out;
  du->add_option("input", du_in, "structure file")->required();
  du->add_option("-o,--out", du_out, "output path")->required();

  // validate
  auto* va = app.add_subcommand("validate", "run an axiom suite on a file");
  std::string va_in, va_suite;
  va->add_option("input", va_in, "structure or loop file")->required();
  va->add_option("--suite", va_suite,
                 "algebra | coalgebra | hopf-quasigroup | hopf-coquasigroup | loop")
      ->required();

  // check-twist
  auto* ct = app.add_subcommand("check-twist", "evaluate twisting-map conditions");
  std::string ct_h, ct_a, ct_r, ct_conditions;
  ct->add_option("--H", ct_h, "H factor file")->required();
  ct->add_option("--A", ct_a, "A factor file")->required();
  ct->add_option("--R", ct_r, "twist file")->required();
  ct->add_option("--conditions", ct_conditions, "comma-separated subset (default: all)");

  // smash
  auto* sm = app.add_subcommand("smash", "build the twisted product on A (x) H");
  std::string sm_h, sm_a, sm_r, sm_out;
  bool sm_verify = false;
  sm->add_option("--H", sm_h)->required();
  sm->add_option("--A", sm_a)->required();
  sm->add_option("--R", sm_r)->required();
  sm->add_option("-o,--out", sm_out, "output structure file")->required();
  sm->add_flag("--verify", sm_verify, "require the forward verification to pass");

  // cosmash
  auto* cs = app.add_subcommand("cosmash", "build the twisted coproduct on H (x) A");
  std::string cs_h, cs_a, cs_w, cs_out;
  bool cs_verify = false;
  cs->add_option("--H", cs_h)->required();
  cs->add_option("--A", cs_a)->required();
  cs->add_option("--W", cs_w)->required();
  cs->add_option("-o,--out", cs_out, "output structure file")->required();
  cs->add_flag("--verify", cs_verify, "require the forward verification to pass");

  // theorem
  auto* th = app.add_subcommand("theorem", "verify both directions of the equivalence");
  std::string th_h, th_a, th_r;
  bool th_dual = false;
  th->add_option("--H", th_h)->required();
  th->add_option("--A", th_a)->required();
  th->add_option("--R", th_r)->required();
  th->add_flag("--dual", th_dual, "coquasigroup factors and the dual statement");

  // action-twist
  auto* at = app.add_subcommand("action-twist", "induce a twist from a quasimodule action");
  std::string at_in, at_out;
  at->add_option("--action", at_in, "action file")->required();
  at->add_option("-o,--out", at_out, "output twist file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; any usage error exits 2
  }
  worker_count() = workers;

  if (gen->parsed()) {
    LoopTable loop = [&] {
      if (gen_kind == "cyclic") {
        if (gen_n == 0) throw ParseError("gen --kind cyclic requires --n");
        return gen_cyclic(gen_n);
      }
      if (gen_kind == "s3") return gen_s3();
      if (gen_kind == "chein-double") {
        if (gen_group.empty()) throw ParseError("gen --kind chein-double requires --group");
        ParsedStructure ps = parse_structure_file(gen_group);
        if (!std::holds_alternative<ParsedLoop>(ps)) {
          throw ParseError(gen_group + ": expected a loop file");
        }
        return gen_chein_double(std::get<ParsedLoop>(ps).loop);
      }
      throw ParseError("unknown gen kind: " + gen_kind);
    }();
    write_file(gen_out, serialize_loop(loop));
    Report rep;
    rep.command = "gen";
    rep.meta = {{"kind", gen_kind}, {"name", loop.name}, {"order", std::to_string(loop.order)},
                {"output", gen_out}};
    rep.print(std::cout);
    return 0;
  }

  if (la->parsed()) {
    ParsedStructure ps = parse_structure_file(la_in);
    if (!std::holds_alternative<ParsedLoop>(ps)) throw ParseError(la_in + ": expected a loop file");
    HopfQuasigroupData x =
        loop_algebra(std::get<ParsedLoop>(ps).loop, detail::parse_field(la_field));
    write_file(la_out, serialize_structure(x));
    Report rep;
    rep.command = "loop-algebra";
    add_input(rep, la_in);
    rep.meta = {{"name", x.name}, {"dim", std::to_string(x.dim)}, {"field", x.field.str()},
                {"output", la_out}};
    rep.print(std::cout);
    return 0;
  }

  if (du->parsed()) {
    ParsedStructure ps = parse_structure_file(du_in);
    Report rep;
    rep.command = "dualize";
    add_input(rep, du_in);
    if (auto* q = std::get_if<ParsedQuasigroup>(&ps)) {
      write_file(du_out, serialize_structure(dualize(q->data)));
    } else if (auto* c = std::get_if<ParsedCoquasigroup>(&ps)) {
      write_file(du_out, serialize_structure(dualize(c->data)));
    } else {
      throw ParseError(du_in + ": expected a hopf structure file");
    }
    rep.meta = {{"output", du_out}};
    rep.print(std::cout);
    return 0;
  }

  if (va->parsed()) {
    Report rep;
    rep.command = "validate";
    add_input(rep, va_in);
    rep.meta.emplace_back("suite", va_suite);
    if (va_suite == "loop") {
      ParsedStructure ps = [&]() -> ParsedStructure {
        try {
          return parse_structure_file(va_in);
        } catch (const LoopValidationError& e) {
          // semantic table failure: report as a failed check, not a usage error
          Report bad;
          bad.command = "validate";
          add_input(bad, va_in);
          bad.meta = {{"suite", "loop"}};
          bad.checks.entries.push_back(plain_entry(std::string("table: ") + e.what(), false));
          bad.print(std::cout);
          std::exit(1);
        }
      }();
      if (!std::holds_alternative<ParsedLoop>(ps)) throw ParseError(va_in + ": expected a loop file");
      const LoopTable& loop = std::get<ParsedLoop>(ps).loop;
      rep.meta.emplace_back("order", std::to_string(loop.order));
      rep.checks = loop_suite(loop);
    } else {
      ParsedStructure ps = parse_structure_file(va_in);
      auto run_suite = [&](const auto& x, bool is_quasigroup) {
        rep.meta.emplace_back("dim", std::to_string(x.dim));
        rep.meta.emplace_back("field", x.field.str());
        if (va_suite == "algebra") {
          rep.checks = check_unital_algebra(x);
        } else if (va_suite == "coalgebra") {
          rep.checks = check_counital_coalgebra(x);
        } else if (va_suite == "hopf-quasigroup") {
          if (!is_quasigroup) throw ParseError(va_in + ": expected a hopf_quasigroup file");
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, HopfQuasigroupData>) {
            rep.checks = check_hopf_quasigroup(x);
            rep.checks.append(antipode_diagnostics(x));
          }
        } else if (va_suite == "hopf-coquasigroup") {
          if (is_quasigroup) throw ParseError(va_in + ": expected a hopf_coquasigroup file");
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, HopfCoquasigroupData>) {
            rep.checks = check_hopf_coquasigroup(x);
            rep.checks.append(antipode_diagnostics(x));
          }
        } else {
          throw ParseError("unknown suite: " + va_suite);
        }
      };
      if (auto* q = std::get_if<ParsedQuasigroup>(&ps)) {
        run_suite(q->data, true);
      } else if (auto* c = std::get_if<ParsedCoquasigroup>(&ps)) {
        run_suite(c->data, false);
      } else {
        throw ParseError(va_in + ": expected a hopf structure file");
      }
    }
    rep.print(std::cout);
    return rep.verdict() ? 0 : 1;
  }

  if (ct->parsed()) {
    LoadedTwist lt = load_twist(ct_r, "twist");
    check_factor_binding(lt.file, ct_h, ct_a);
    std::set<std::string> which;
    if (ct_conditions.empty()) {
      which.insert(twist_condition_names().begin(), twist_condition_names().end());
    } else {
      std::size_t pos = 0;
      while (pos <= ct_conditions.size()) {
        std::size_t comma = ct_conditions.find(',', pos);
        if (comma == std::string::npos) comma = ct_conditions.size();
        if (comma > pos) which.insert(ct_conditions.substr(pos, comma - pos));
        pos = comma + 1;
      }
      if (which.empty()) throw UnknownConditionError("(empty condition list)");
    }
    Report rep;
    rep.command = "check-twist";
    add_input(rep, ct_h);
    add_input(rep, ct_a);
    add_input(rep, ct_r);
    rep.meta = {{"name", lt.file.name}};
    if (auto* r = std::get_if<TwistMap>(&lt.resolved.value)) {
      rep.checks = check_twist_conditions(*r, which);
    } else if (auto* w = std::get_if<CoTwistMap>(&lt.resolved.value)) {
      rep.checks = check_twist_conditions(*w, which);
    } else {
      throw ParseError(ct_r + ": not a twist file");
    }
    rep.print(std::cout);
    return rep.verdict() ? 0 : 1;
  }

  if (sm->parsed()) {
    LoadedTwist lt = load_twist(sm_r, "twist");
    check_factor_binding(lt.file, sm_h, sm_a);
    auto* r = std::get_if<TwistMap>(&lt.resolved.value);
    if (!r) throw ParseError(sm_r + ": factors must be hopf_quasigroup files");
    SmashCandidate cand = build_r_smash(r->A, r->H, *r);
    write_file(sm_out, serialize_structure(cand.product));
    Report rep;
    rep.command = "smash";
    add_input(rep, sm_h);
    add_input(rep, sm_a);
    add_input(rep, sm_r);
    rep.meta = {{"name", cand.product.name}, {"dim", std::to_string(cand.product.dim)},
                {"output", sm_out}};
    if (sm_verify) rep.checks = theorem_forward(r->A, r->H, *r);
    rep.print(std::cout);
    return rep.verdict() ? 0 : 1;
  }

  if (cs->parsed()) {
    LoadedTwist lt = load_twist(cs_w, "twist");
    check_factor_binding(lt.file, cs_h, cs_a);
    auto* w = std::get_if<CoTwistMap>(&lt.resolved.value);
    if (!w) throw ParseError(cs_w + ": factors must be hopf_coquasigroup files");
    CosmashCandidate cand = build_w_cosmash(w->H, w->A, *w);
    write_file(cs_out, serialize_structure(cand.product));
    Report rep;
    rep.command = "cosmash";
    add_input(rep, cs_h);
    add_input(rep, cs_a);
    add_input(rep, cs_w);
    rep.meta = {{"name", cand.product.name}, {"dim", std::to_string(cand.product.dim)},
                {"output", cs_out}};
    if (cs_verify) rep.checks = theorem_forward_dual(w->H, w->A, *w);
    rep.print(std::cout);
    return rep.verdict() ? 0 : 1;
  }

  if (th->parsed()) {
    LoadedTwist lt = load_twist(th_r, "twist");
    check_factor_binding(lt.file, th_h, th_a);
    Report rep;
    rep.command = th_dual ? "theorem --dual" : "theorem";
    add_input(rep, th_h);
    add_input(rep, th_a);
    add_input(rep, th_r);
    if (th_dual) {
      auto* w = std::get_if<CoTwistMap>(&lt.resolved.value);
      if (!w) throw ParseError(th_r + ": --dual requires hopf_coquasigroup factors");
      AxiomReport fwd = theorem_forward_dual(w->H, w->A, *w);
      detail::stage_entries(rep.checks, "forward", fwd);
      detail::stage_entries(rep.checks, "backward", theorem_backward_dual(w->H, w->A, *w));
    } else {
      auto* r = std::get_if<TwistMap>(&lt.resolved.value);
      if (!r) throw ParseError(th_r + ": factors must be hopf_quasigroup files");
      AxiomReport fwd = theorem_forward(r->A, r->H, *r);
      detail::stage_entries(rep.checks, "forward", fwd);
      detail::stage_entries(rep.checks, "backward", theorem_backward(r->A, r->H, *r));
    }
    rep.print(std::cout);
    return rep.verdict() ? 0 : 1;
  }

  if (at->parsed()) {
    LoadedTwist lt = load_twist(at_in, "action");
    auto* q = std::get_if<QuasimoduleAction>(&lt.resolved.value);
    if (!q) throw ParseError(at_in + ": not an action file");
    TwistMap r = twist_from_action(*q);
    // the induced twist binds to the same factor files as the action
    write_file(at_out, serialize_twist_file("twist", lt.file.name + ".induced", lt.file.h_ref,
                                            lt.file.a_ref, r.H.field, r.map));
    Report rep;
    rep.command = "action-twist";
    add_input(rep, at_in);
    rep.meta = {{"output", at_out}};
    rep.print(std::cout);
    return 0;
  }

  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hopfq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
