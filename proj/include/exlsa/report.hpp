#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exlsa/family.hpp"
#include "exlsa/superalg.hpp"

namespace exlsa {

/// Parameters of a run. Unset values stay symbolic.
struct Options {
  std::optional<Scalar> alpha, beta;
  std::optional<std::array<Scalar, 3>> lambdas;
  /// "symbolic", "compact", "split" or "at".
  std::string mode = "symbolic";
  /// Records elapsed seconds per check (breaks byte-identical output).
  bool timing = false;

  static Options compact();
  static Options split();
  /// "l1=2,l2=3,l3=5"; unnamed parameters stay symbolic. Throws ParseError.
  static Options at(const std::string &text);
  /// Rational or "symbolic"; throws ParseError.
  static std::optional<Scalar> parse_parameter(const std::string &text);

  Scalar alpha_value() const;
  /// beta, or -1 - alpha.
  Scalar beta_value() const;
  std::string describe() const;
};

/// Lazily built objects shared by the suites.
class Context {
public:
  explicit Context(Options opts);
  ~Context();
  Context(const Context &) = delete;
  Context &operator=(const Context &) = delete;

  const Options &options() const { return opts_; }
  const OctonionAlgebra &octonions();
  const CliffordAlgebra &clifford();
  const CliffordRep &g2();
  const CliffordRep &spinor();
  const CovariantSet &cov_im();
  const CovariantSet &cov_oct();
  /// phi ^ Q_Im and Q_O ^ Q_O.
  const AltMap &volume_im();
  const AltMap &volume_oct();
  const FamilyRep &family();
  const SuperAlgebra &g3();
  const SuperAlgebra &f4();
  /// Built with force when the family is not special.
  const SuperAlgebra &d21();

private:
  struct Cache;
  Options opts_;
  std::unique_ptr<Cache> cache_;
};

enum class Verdict { pass, fail, vacuous };
std::string to_string(Verdict v);

struct Check {
  std::string id;
  std::string statement;
  Verdict status = Verdict::pass;
  /// Witness, constant or other evidence.
  std::string detail;
  std::optional<double> elapsed;
};

struct Report {
  std::string suite;
  std::string parameters;
  std::vector<Check> checks;
  /// True when every check passes or is vacuous.
  bool ok() const;
  const Check *find(const std::string &id) const;
};

const std::vector<std::string> &suite_names();
/// Throws UnknownSuite.
Report run_suite(const std::string &name, Context &ctx);
std::string render_text(const Report &r);
std::string render_json(const Report &r);

struct DecompositionRow {
  Mask mask;
  std::string label;
  Scalar coeff;
  /// Fano line, its complement, or affine plane of the cube.
  std::string annotation;
};
/// target: phi, q-im or q-oct. Throws UnknownSuite for other targets.
std::vector<DecompositionRow> decompose(const std::string &target, Context &ctx);
/// The displayed closed-form decomposition for a target, in terms of the
/// parameters of the octonions.
std::vector<std::pair<Mask, Scalar>> expected_decomposition(const std::string &target, const OctonionAlgebra &o);
std::string render_decomposition(const std::string &target, const std::vector<DecompositionRow> &rows);

struct HodgeRow {
  std::string id;
  std::string relation;
  std::optional<Scalar> computed;
  /// Unset for proportionality claims without a published constant.
  std::optional<Scalar> expected;
  bool property_holds = false;
  Verdict status = Verdict::fail;
};
std::vector<HodgeRow> hodge_report(Context &ctx);
std::string render_hodge(const std::vector<HodgeRow> &rows);

/// The algebra of a representation as a purely even superalgebra (for export).
SuperAlgebra lie_algebra_of(const QuadLieRep &rep);

} // namespace exlsa
