#include "qvira/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "qvira/classifier.hpp"
#include "qvira/errors.hpp"
#include "qvira/expr.hpp"
#include "qvira/families.hpp"
#include "qvira/lie_algebra.hpp"
#include "qvira/presentation.hpp"
#include "qvira/selftest.hpp"
#include "qvira/table_format.hpp"

namespace qvira {

namespace {

// Thrown for malformed input that is not an algebra error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TableDocument load_table(const std::string& path) { return parse_table(read_file(path)); }

Rational parse_rational(const std::string& text) {
  static const std::regex kRational(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, kRational)) throw UsageError("not a rational number: " + text);
  Rational r(text);
  if (r.get_den() == 0) throw UsageError("zero denominator: " + text);
  r.canonicalize();
  return r;
}

int cmd_bracket(const std::string& x, const std::string& y, std::ostream& out) {
  out << to_string(bracket(parse_element(x), parse_element(y))) << '\n';
  return kExitOk;
}

struct GenOptions {
  std::string family;
  std::string a = "a";
  int h = 0;
  int j = 0;
  int k = 0;
  std::string mode = "symbolic";
  std::string q;
  std::string a_val;
  std::string output;
};

int cmd_gen_table(const GenOptions& o, std::ostream& out) {
  FieldContext ctx = FieldContext::symbolic();
  if (o.mode == "numeric") {
    if (o.q.empty() || o.a_val.empty()) throw UsageError("numeric mode needs --q and --a-val");
    ctx = FieldContext::numeric(parse_rational(o.q), parse_rational(o.a_val));
  } else if (!o.q.empty() || !o.a_val.empty()) {
    throw UsageError("--q and --a-val need --mode numeric");
  }
  const std::string text = write_table(gen_table(parse_family(o.family), evaluate(parse_expr(o.a)), o.h, o.j, o.k, ctx));
  if (o.output.empty() || o.output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!(file << text)) throw UsageError("cannot write " + o.output);
  return kExitOk;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const ValidationReport r = validate_table(ActionTable::from_document(load_table(path)), 1);
  if (r.valid()) {
    out << "valid: " << r.checked << " relations checked\n";
    return kExitOk;
  }
  out << "invalid: " << describe(r.violations.front()) << '\n';
  return kExitNegative;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const ClassificationResult r = classify(load_table(path));
  out << describe(r);
  return std::holds_alternative<Inconsistent>(r) ? kExitNegative : kExitOk;
}

int cmd_check_axioms(const std::string& family, const std::string& a, int bound, int kmax, std::ostream& out) {
  if (bound < 1 || kmax < 0) throw UsageError("--bound must be at least 1 and --kmax non-negative");
  const AxiomSweep s = sweep_axioms(FamilyModule(parse_family(family), evaluate(parse_expr(a))), bound, kmax);
  out << "checked: " << s.checked << "\nfailures: " << s.failures << '\n';
  if (!s.first_failure) return kExitOk;
  const AxiomWitness& w = *s.first_failure;
  out << "x: " << to_string(w.x) << "\ny: " << to_string(w.y) << "\nv: " << to_string(w.v)
      << "\nlhs: " << to_string(w.lhs) << "\nrhs: " << to_string(w.rhs) << '\n';
  return kExitNegative;
}

int cmd_relations(const std::string& path, std::ostream& out) {
  const NormalizedTable nt = omega_normalize(ActionTable::from_document(load_table(path)));
  const auto extracted = extract_invariants(nt);
  if (const auto* nc = std::get_if<NotConstant>(&extracted)) {
    out << nc->quantity << " not constant at k=" << nc->k << ": " << print_canonical(nc->expected) << " then "
        << print_canonical(nc->found) << '\n';
    return kExitNegative;
  }
  const auto& inv = std::get<InvariantTriple>(extracted);
  out << "p: " << print_canonical(inv.p) << "\nb: " << print_canonical(inv.b) << "\na: " << print_canonical(inv.a)
      << '\n';
  bool ok = true;
  for (const RelationCheck& rc : verify_structure_relations(nt, inv)) {
    out << rc.name << ": " << to_string(rc.status) << " (" << rc.checked << " checked";
    if (rc.failed) out << ", " << rc.failed << " failed; " << rc.witness;
    out << ")\n";
    ok = ok && rc.status != RelationCheck::Status::Fail;
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_irreducible(const std::string& path, std::ostream& out) {
  const auto r = check_graded_irreducible(load_table(path));
  if (std::holds_alternative<Irreducible>(r)) {
    out << "Irreducible\n";
    return kExitOk;
  }
  const auto& red = std::get<Reducible>(r);
  out << "Reducible at degree " << red.degree << " (" << red.reason << ")\n";
  return kExitNegative;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intermediate-series modules of the q-analog Virasoro-like algebra", "qvira"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string x, y, path, family, a = "a";
  int bound = 2, kmax = 4;
  GenOptions gen;

  auto* br = app.add_subcommand("bracket", "Lie bracket of two elements such as \"q*t[1,1] - t[2,0]\"");
  br->add_option("x", x)->required();
  br->add_option("y", y)->required();
  br->callback([&] { action = [&] { return cmd_bracket(x, y, out); }; });

  auto* gt = app.add_subcommand("gen-table", "Write the action table of a family on a finite window");
  gt->set_help_flag("--help", "Print this help message and exit");  // --h is the h bound
  gt->add_option("--family", gen.family, "I, II, III or IV")->required();
  gt->add_option("--a", gen.a, "module parameter expression");
  gt->add_option("--h", gen.h, "|h| bound")->required();
  gt->add_option("--j", gen.j, "|j| bound")->required();
  gt->add_option("--k", gen.k, "|k| bound")->required();
  gt->add_option("--mode", gen.mode)->check(CLI::IsMember({"symbolic", "numeric"}));
  gt->add_option("--q", gen.q, "numeric value of q");
  gt->add_option("--a-val", gen.a_val, "numeric value of a");
  gt->add_option("-o,--output", gen.output, "output path (stdout when omitted)");
  gt->callback([&] { action = [&] { return cmd_gen_table(gen, out); }; });

  auto* va = app.add_subcommand("validate", "Check the bracket relation on every admissible index");
  va->add_option("table", path)->required();
  va->callback([&] { action = [&] { return cmd_validate(path, out); }; });

  auto* cl = app.add_subcommand("classify", "Decide the isomorphism class presented by a table");
  cl->add_option("table", path)->required();
  cl->callback([&] { action = [&] { return cmd_classify(path, out); }; });

  auto* ax = app.add_subcommand("check-axioms", "Sweep the module axiom over homogeneous pairs");
  ax->add_option("--family", family, "I, II, III or IV")->required();
  ax->add_option("--a", a, "module parameter expression");
  ax->add_option("--bound", bound, "index bound for both elements");
  ax->add_option("--kmax", kmax, "|k| bound for basis vectors");
  ax->callback([&] { action = [&] { return cmd_check_axioms(family, a, bound, kmax, out); }; });

  auto* re = app.add_subcommand("relations", "Check the normalized structure relations");
  re->add_option("table", path)->required();
  re->callback([&] { action = [&] { return cmd_relations(path, out); }; });

  auto* ir = app.add_subcommand("irreducible", "Check graded irreducibility on the window");
  ir->add_option("table", path)->required();
  ir->callback([&] { action = [&] { return cmd_irreducible(path, out); }; });

  auto* st = app.add_subcommand("selftest", "Run the acceptance suite");
  st->callback([&] { action = [&] { return run_acceptance(out) ? kExitOk : kExitNegative; }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::SyntaxError:
      case ErrorCode::SemanticError:
      case ErrorCode::IndexZero:
      case ErrorCode::BadParameter:
      case ErrorCode::InvalidContext:
        return kExitUsage;
      default:
        return kExitNegative;
    }
  }
}

}  // namespace qvira
