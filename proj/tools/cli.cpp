#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "taumut/central_quotient.hpp"
#include "taumut/export.hpp"
#include "taumut/grothendieck.hpp"
#include "taumut/nakayama.hpp"
#include "taumut/presets.hpp"
#include "taumut/properties.hpp"
#include "taumut/smc.hpp"

namespace taumut::cli {

namespace {

const std::pair<const char*, const char*> kVerbs[] = {
    {"explore", "build the brick-labeled exchange quiver"},
    {"semibricks", "list the semibrick of every support tau-tilting pair"},
    {"smc", "list the 2-term simple-minded collection of every vertex"},
    {"gvectors", "print g- and c-matrices and check their duality"},
    {"count", "tabulate semibrick counts of Nakayama algebras"},
    {"verify", "run the structural property suite"},
    {"quotient", "compare the quiver with that of a central quotient"},
    {"restrict", "restrict to pairs containing a tau-rigid U"},
};

bool needs_algebra(const std::string& verb) { return verb != "count"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

AlgebraPtr load_algebra(const Command& cmd) {
  std::optional<Field> field;
  if (cmd.field) {
    field = Field::parse(*cmd.field);
  } else if (const char* env = std::getenv("TAUMUT_FIELD"); env && *env) {
    field = Field::parse(env);
  }
  AlgebraSpec spec;
  if (cmd.preset) {
    spec = presets::by_name(*cmd.preset, field.value_or(Field{}));
  } else {
    try {
      spec = AlgebraSpec::parse(read_file(*cmd.algebra_file));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError("malformed algebra file: " + std::string(e.what()));
    }
    if (field) spec.field = *field;
  }
  return build_algebra(spec);
}

ExploreOptions explore_options(const Command& cmd) {
  ExploreOptions o;
  if (cmd.max_depth) o.max_depth = *cmd.max_depth;
  return o;
}

std::string summary(const ExchangeQuiver& q) {
  return std::to_string(q.vertices.size()) + " vertices, " + std::to_string(q.arrows.size()) +
         " arrows, " + (q.complete ? "complete" : "incomplete");
}

std::string join_dims(TauTiltingEngine& e, const std::vector<std::size_t>& ids) {
  std::string s;
  for (auto id : ids) s += (s.empty() ? "" : " ") + e.registry().module(id).dim_string();
  return s.empty() ? "-" : s;
}

// Writes --dot / --out side files and returns what goes to stdout for the
// records format.
void emit_files(const Command& cmd, TauTiltingEngine& e, const ExchangeQuiver& q,
                const ExportOptions& opts, std::ostream& out) {
  if (cmd.dot_path) write_file(*cmd.dot_path, export_dot(e, q));
  std::string body;
  if (cmd.format == "dot") body = export_dot(e, q);
  else if (cmd.format == "records") body = export_records(e, q, opts);
  if (body.empty()) return;
  if (cmd.out_path) write_file(*cmd.out_path, body);
  else out << body;
}

std::string matrix_text(const IntMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t k = 0; k < m.size(); ++k) s += (k ? " " : "") + std::to_string(m.at(i, k));
  }
  return "[" + s + "]";
}

int finish(const ExchangeQuiver& q) { return q.complete ? kOk : kIncomplete; }

int run_explore(const Command& cmd, std::ostream& out) {
  TauTiltingEngine e(load_algebra(cmd));
  auto q = e.explore(explore_options(cmd));
  if (cmd.format == "text") out << summary(q) << "\n";
  emit_files(cmd, e, q, {}, out);
  return finish(q);
}

int run_semibricks(const Command& cmd, std::ostream& out) {
  TauTiltingEngine e(load_algebra(cmd));
  auto q = e.explore(explore_options(cmd));
  if (cmd.format == "text") {
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
      out << "v" << v << "  " << join_dims(e, q.vertices[v].summands) << "  semibrick "
          << join_dims(e, e.semibrick_of(q.vertices[v])) << "\n";
    out << summary(q) << "\n";
  }
  emit_files(cmd, e, q, {}, out);
  return finish(q);
}

int run_smc(const Command& cmd, std::ostream& out) {
  TauTiltingEngine e(load_algebra(cmd));
  auto q = e.explore(explore_options(cmd));
  if (cmd.format == "text") {
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      out << "v" << v << " ";
      for (const auto& sb : e.smc_of(q.vertices[v]))
        out << " " << e.registry().module(sb.brick).dim_string() << (sb.shifted ? "[1]" : "");
      out << "\n";
    }
    out << summary(q) << "\n";
  }
  emit_files(cmd, e, q, {true, false}, out);
  return finish(q);
}

int run_gvectors(const Command& cmd, std::ostream& out) {
  TauTiltingEngine e(load_algebra(cmd));
  auto q = e.explore(explore_options(cmd));
  bool all_ok = true;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    auto r = check_duality_at(e, q.vertices[v]);
    all_ok = all_ok && r.ok();
    if (cmd.format == "text")
      out << "v" << v << "  G " << matrix_text(g_matrix(e, q.vertices[v])) << "  C "
          << matrix_text(c_matrix(e, q.vertices[v]).c) << "  " << (r.ok() ? "ok" : "FAIL")
          << (r.diagonal_mismatch ? " (D != D')" : "") << "\n";
  }
  if (cmd.format == "text") out << summary(q) << "\n";
  emit_files(cmd, e, q, {false, true}, out);
  if (!all_ok) return kVerifyFailed;
  return finish(q);
}

int run_count(const Command& cmd, std::ostream& out) {
  nakayama::Kind kind;
  if (cmd.kind == "linear") kind = nakayama::Kind::linear;
  else if (cmd.kind == "cyclic") kind = nakayama::Kind::cyclic;
  else throw UsageError("--kind must be linear or cyclic");
  auto value = [&](std::size_t n, std::size_t l) {
    return kind == nakayama::Kind::linear ? nakayama::a_count(n, l) : nakayama::b_count(n, l);
  };
  const char* letter = kind == nakayama::Kind::linear ? "a" : "b";
  if (cmd.format == "records") {
    std::ostringstream js;
    js << "{\"kind\": \"" << cmd.kind << "\", \"rows\": [";
    for (std::size_t l = 1; l <= cmd.l; ++l) {
      js << (l > 1 ? ", " : "") << "{\"l\": " << l << ", \"values\": [";
      for (std::size_t n = 1; n <= cmd.n; ++n) js << (n > 1 ? ", " : "") << value(n, l).get_str();
      js << "]}";
    }
    js << "]}\n";
    if (cmd.out_path) write_file(*cmd.out_path, js.str());
    else out << js.str();
  } else {
    std::size_t width = value(cmd.n, cmd.l).get_str().size() + 2;
    for (std::size_t n = 1; n <= cmd.n; ++n) width = std::max(width, value(n, cmd.l).get_str().size() + 2);
    for (std::size_t l = 1; l <= cmd.l; ++l)
      for (std::size_t n = 1; n <= cmd.n; ++n)
        width = std::max(width, value(n, l).get_str().size() + 2);
    out << std::setw(6) << "l\\n";
    for (std::size_t n = 1; n <= cmd.n; ++n) out << std::setw(static_cast<int>(width)) << n;
    out << "\n";
    for (std::size_t l = 1; l <= cmd.l; ++l) {
      out << std::setw(6) << l;
      for (std::size_t n = 1; n <= cmd.n; ++n)
        out << std::setw(static_cast<int>(width)) << value(n, l).get_str();
      out << "\n";
    }
    out << letter << "(" << cmd.n << "," << cmd.l << ") = " << value(cmd.n, cmd.l).get_str() << "\n";
  }
  if (!cmd.check) return kOk;
  // Brute force and exploration against the recurrence.
  nakayama::Shape shape{kind, cmd.n, cmd.l};
  auto rec = value(cmd.n, cmd.l);
  auto brute = nakayama::count_semibricks_bruteforce(shape);
  TauTiltingEngine e(build_algebra(nakayama::make_nakayama(shape)));
  auto q = e.explore();
  out << "check " << shape.name() << ": recurrence " << rec.get_str() << ", semibricks "
      << brute.get_str() << ", exchange quiver " << q.vertices.size() << "\n";
  return (rec == brute && rec == q.vertices.size() && q.complete) ? kOk : kVerifyFailed;
}

int run_verify(const Command& cmd, std::ostream& out) {
  TauTiltingEngine e(load_algebra(cmd));
  auto q = e.explore(explore_options(cmd));
  out << summary(q) << "\n";
  auto rep = check_properties(e, q);
  for (const auto& r : rep.results)
    out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.detail) << "\n";
  if (!q.complete) return kIncomplete;
  return rep.ok() ? kOk : kVerifyFailed;
}

int run_quotient(const Command& cmd, std::ostream& out) {
  auto alg = load_algebra(cmd);
  std::vector<AlgElem> gens;
  for (const auto& g : cmd.generators) {
    try {
      gens.push_back(alg->reduce(parse_path_expression(*alg, g)));
    } catch (const std::exception& ex) {
      throw UsageError("bad generator '" + g + "': " + ex.what());
    }
  }
  std::optional<CentralQuotient> cq;
  try {
    cq.emplace(alg, gens);
  } catch (const std::invalid_argument& ex) {
    out << "not a central quotient: " << ex.what() << "\n";
    return kVerifyFailed;
  }
  auto r = verify_ejr(*cq, explore_options(cmd));
  out << "algebra dimension " << alg->dimension() << " -> " << cq->quotient()->dimension() << "\n";
  out << "source: " << r.source_vertices << " vertices, " << r.source_arrows << " arrows\n";
  out << "quotient: " << r.quotient_vertices << " vertices, " << r.quotient_arrows << " arrows\n";
  auto flag = [&](const char* name, bool v) { out << (v ? "PASS " : "FAIL ") << name << "\n"; };
  flag("vertex bijection", r.vertex_bijection);
  flag("arrow bijection", r.arrow_bijection);
  flag("labels fixed", r.labels_fixed);
  flag("summand counts preserved", r.summand_counts_preserved);
  flag("semibricks preserved", r.semibricks_preserved);
  if (!r.complete) return kIncomplete;
  return r.ok() ? kOk : kVerifyFailed;
}

int run_restrict(const Command& cmd, std::ostream& out) {
  TauTiltingEngine e(load_algebra(cmd));
  auto q = e.explore(explore_options(cmd));
  if (!q.complete) {
    out << summary(q) << "\n";
    return kIncomplete;
  }
  // Candidates: every indecomposable that occurs as a summand somewhere.
  std::map<std::string, std::vector<std::size_t>> by_dims;
  {
    std::set<std::size_t> ids;
    for (const auto& v : q.vertices) ids.insert(v.summands.begin(), v.summands.end());
    for (auto id : ids) by_dims[e.registry().module(id).dim_string()].push_back(id);
  }
  std::vector<std::size_t> u;
  for (const auto& d : cmd.rigid) {
    auto it = by_dims.find(d);
    if (it == by_dims.end()) throw UsageError("no tau-rigid indecomposable with dimension vector " + d);
    if (it->second.size() > 1) throw UsageError("dimension vector " + d + " is ambiguous");
    u.push_back(it->second.front());
  }
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (!e.is_tau_rigid_set(u)) {
    out << "U is not tau-rigid\n";
    return kVerifyFailed;
  }
  auto sub = restrict_quiver(q, u);
  auto bongartz = e.bongartz_completion(u);
  out << summary(sub) << "\n";
  out << "Bongartz completion: " << join_dims(e, bongartz.summands) << "\n";

  bool ok = true;
  std::vector<std::size_t> sources, sinks;
  for (std::size_t v = 0; v < sub.vertices.size(); ++v) {
    if (sub.in_arrows(v).empty()) sources.push_back(v);
    if (sub.out_arrows(v).empty()) sinks.push_back(v);
    if (sub.in_arrows(v).size() + sub.out_arrows(v).size() != e.rank() - u.size()) ok = false;
  }
  bool unique_ends = sources.size() == 1 && sinks.size() == 1;
  bool source_is_bongartz = unique_ends && sub.vertices[sources[0]] == bongartz;
  Module um = direct_sum(e.algebra(), [&] {
                std::vector<Module> parts;
                for (auto id : u) parts.push_back(e.registry().module(id));
                return parts;
              }()).sum;
  Module tau_u = tau(um);
  bool labels_ok = true;
  for (const auto& a : sub.arrows) {
    const Module& s = e.registry().module(a.label);
    if (hom_dim(um, s) != 0 || hom_dim(s, tau_u) != 0) labels_ok = false;
  }
  auto flag = [&](const char* name, bool v) { out << (v ? "PASS " : "FAIL ") << name << "\n"; };
  flag("unique source and sink", unique_ends);
  flag("source is the Bongartz completion", source_is_bongartz);
  flag("inner degree n - |U|", ok);
  flag("labels in U-perp and perp-tau U", labels_ok);
  emit_files(cmd, e, sub, {}, out);
  return (ok && unique_ends && source_is_bongartz && labels_ok) ? kOk : kVerifyFailed;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Exact tau-tilting exploration", "taumut"};
  app.require_subcommand(1);
  std::string depth_text;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--preset", cmd.preset, "named algebra (a-path:n, nakayama:linear|cyclic:n:l, preproj-a:n, msex, a3-figure)");
    sub->add_option("--algebra", cmd.algebra_file, "algebra spec file");
    sub->add_option("--max-depth", cmd.max_depth, "BFS depth limit");
    sub->add_option("--field", cmd.field, "q or fp:<p>");
    sub->add_option("--dot", cmd.dot_path, "write DOT here");
    sub->add_option("--out", cmd.out_path, "write --format output here");
    sub->add_option("--format", cmd.format, "text, dot or records")
        ->check(CLI::IsMember({"text", "dot", "records"}));
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [v, about] : kVerbs) subs[v] = app.add_subcommand(v, about);
  for (const char* v : {"explore", "semibricks", "smc", "gvectors", "verify", "quotient", "restrict"})
    add_common(subs[v]);
  auto* count = subs["count"];
  count->add_option("--kind", cmd.kind, "linear or cyclic")->check(CLI::IsMember({"linear", "cyclic"}));
  count->add_option("--n", cmd.n, "largest n")->check(CLI::Range(1, 200));
  count->add_option("--l", cmd.l, "largest l")->check(CLI::Range(1, 200));
  count->add_flag("--check", cmd.check, "compare with brute force and exploration at (n, l)");
  count->add_option("--format", cmd.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  count->add_option("--out", cmd.out_path, "write output here");
  subs["quotient"]->add_option("--generator", cmd.generators, "central generator, e.g. 'a1.a2'");
  subs["restrict"]->add_option("--rigid", cmd.rigid, "summand of U by dimension vector, e.g. 010")
      ->required();

  std::vector<std::string> argv_store{"taumut"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    cmd.help = true;
    cmd.help_text = app.help();
    return cmd;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) cmd.verb = name;
  if (needs_algebra(cmd.verb)) {
    if (cmd.preset.has_value() == cmd.algebra_file.has_value())
      throw UsageError(cmd.verb + " needs exactly one of --preset and --algebra");
    if (cmd.preset) {
      try {
        presets::by_name(*cmd.preset);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }
  if (cmd.field) {
    try {
      Field::parse(*cmd.field);
    } catch (const std::exception& e) {
      throw UsageError("bad --field: " + std::string(e.what()));
    }
  }
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.help) {
    out << cmd.help_text;
    return kOk;
  }
  try {
    if (cmd.verb == "explore") return run_explore(cmd, out);
    if (cmd.verb == "semibricks") return run_semibricks(cmd, out);
    if (cmd.verb == "smc") return run_smc(cmd, out);
    if (cmd.verb == "gvectors") return run_gvectors(cmd, out);
    if (cmd.verb == "count") return run_count(cmd, out);
    if (cmd.verb == "verify") return run_verify(cmd, out);
    if (cmd.verb == "quotient") return run_quotient(cmd, out);
    if (cmd.verb == "restrict") return run_restrict(cmd, out);
    throw UsageError("unknown verb " + cmd.verb);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int main_with(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  }
  return run(cmd, out, err);
}

}  // namespace taumut::cli
