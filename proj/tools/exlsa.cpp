// Command-line driver: verification suites, decompositions, Hodge table and
// structure-constant export.
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exlsa/errors.hpp"
#include "exlsa/report.hpp"

using namespace exlsa;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

// drops the "Name: " prefix of a library error
std::string bare(const Error &e) {
  const std::string w = e.what();
  const auto colon = w.find(": ");
  return colon == std::string::npos ? w : w.substr(colon + 2);
}

struct ParamFlags {
  std::string alpha = "symbolic", beta, at;
  bool compact = false, split = false;

  void attach(CLI::App *cmd, bool family) {
    if (family) {
      cmd->add_option("--alpha", alpha, "alpha: a rational or \"symbolic\"");
      cmd->add_option("--beta", beta, "beta (default -1 - alpha)");
    }
    auto *c = cmd->add_flag("--compact", compact, "l1 = l2 = l3 = 1");
    auto *s = cmd->add_flag("--split", split, "l1 = l2 = 1, l3 = -1");
    auto *a = cmd->add_option("--at", at, "l1=..,l2=..,l3=..");
    c->excludes(s)->excludes(a);
    s->excludes(a);
  }

  Options build() const {
    Options o;
    try {
      o = compact ? Options::compact() : split ? Options::split() : !at.empty() ? Options::at(at) : Options{};
    } catch (const Error &e) {
      throw ParseError("--at: " + bare(e));
    }
    try {
      o.alpha = Options::parse_parameter(alpha);
    } catch (const Error &e) {
      throw ParseError("--alpha: " + bare(e));
    }
    if (!beta.empty()) {
      try {
        o.beta = Options::parse_parameter(beta);
      } catch (const Error &e) {
        throw ParseError("--beta: " + bare(e));
      }
    }
    return o;
  }
};

void emit(const std::string &text, const std::string &out) {
  if (out.empty())
    std::cout << text;
  else
    write_json(out, text);
}

int cmd_verify(const std::string &suite, const ParamFlags &p, bool json, bool timing, const std::string &out) {
  Options o = p.build();
  o.timing = timing;
  Context ctx(o);
  const Report r = run_suite(suite, ctx);
  emit(json ? render_json(r) : render_text(r), out);
  if (!out.empty())
    std::cout << (r.ok() ? "PASS" : "FAIL") << " " << r.suite << " -> " << out << "\n";
  return r.ok() ? kPass : kFail;
}

int cmd_decompose(const std::string &target, const ParamFlags &p, bool json) {
  Context ctx(p.build());
  const auto rows = decompose(target, ctx);
  if (!json) {
    std::cout << render_decomposition(target, rows);
  } else {
    nlohmann::ordered_json j;
    j["target"] = target;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto &r : rows)
      j["terms"].push_back({{"index", r.label}, {"coeff", r.coeff.to_string()}, {"annotation", r.annotation}});
    std::cout << j.dump(2) << "\n";
  }
  return kPass;
}

int cmd_hodge(const ParamFlags &p, bool json) {
  Context ctx(p.build());
  const auto rows = hodge_report(ctx);
  bool ok = true;
  for (const auto &r : rows)
    ok = ok && r.status == Verdict::pass && r.property_holds;
  if (!json) {
    std::cout << render_hodge(rows);
  } else {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto &r : rows)
      j.push_back({{"id", r.id},
                   {"relation", r.relation},
                   {"computed", r.computed ? r.computed->to_string() : "not proportional"},
                   {"expected", r.expected ? r.expected->to_string() : "no published value"},
                   {"property", r.property_holds},
                   {"status", to_string(r.status)}});
    std::cout << j.dump(2) << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_export(const std::string &algebra, const ParamFlags &p, const std::string &out) {
  Context ctx(p.build());
  SuperAlgebra s;
  if (algebra == "g2")
    s = lie_algebra_of(ctx.g2().rep);
  else if (algebra == "so7")
    s = lie_algebra_of(ctx.spinor().rep);
  else if (algebra == "g3")
    s = ctx.g3();
  else if (algebra == "f4")
    s = ctx.f4();
  else
    s = ctx.d21();
  const auto jac = super_jacobi_check(s);
  const auto inv = form_invariance_check(s);
  emit(export_json(s, std::make_pair(jac, inv)), out);
  if (!out.empty())
    std::cout << s.name << " " << s.even_dim << "|" << s.odd_dim << " -> " << out << "\n";
  return jac.holds && inv.holds ? kPass : kFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification of special orthogonal representations and their Lie superalgebras"};
  app.require_subcommand(1);

  ParamFlags vp, dp, hp, ep;
  std::string suite, target, algebra, out;
  bool json = false, timing = false;

  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "g2, f4, d21, mathews, hodge, decompositions or all")->required();
  vp.attach(verify, true);
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--timing", timing, "record elapsed time per check");
  verify->add_option("--out", out, "write the report to a file");

  auto *dec = app.add_subcommand("decompose", "print eta^-1 of phi, Q_Im or Q_O");
  dec->add_option("target", target, "phi, q-im or q-oct")->required()->check(CLI::IsMember({"phi", "q-im", "q-oct"}));
  dp.attach(dec, false);
  dec->add_flag("--json", json, "JSON output");

  auto *hodge = app.add_subcommand("hodge", "Hodge proportionality constants");
  hp.attach(hodge, false);
  hodge->add_flag("--json", json, "JSON output");

  auto *exp = app.add_subcommand("export", "export structure constants as JSON");
  exp->add_option("--algebra", algebra, "g2, so7, d21, g3 or f4")
      ->required()
      ->check(CLI::IsMember({"g2", "so7", "d21", "g3", "f4"}));
  ep.attach(exp, true);
  exp->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify)
      return cmd_verify(suite, vp, json, timing, out);
    if (*dec)
      return cmd_decompose(target, dp, json);
    if (*hodge)
      return cmd_hodge(hp, json);
    return cmd_export(algebra, ep, out);
  } catch (const UnknownSuite &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
