#include "cli.hpp"

#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "lorentzvol/bernoulli.hpp"
#include "lorentzvol/coxeter.hpp"
#include "lorentzvol/errors.hpp"
#include "lorentzvol/gram.hpp"
#include "lorentzvol/mass.hpp"
#include "lorentzvol/selfcheck.hpp"
#include "lorentzvol/volume.hpp"
#include "records.hpp"

namespace lorentzvol::cli {
namespace {

constexpr long kDefaultPrecision = 128;
constexpr long kMaxPrecision = 1 << 16;
// Bernoulli numbers up to B_{n} are needed; keep requests interactive.
constexpr long kMaxDimension = 513;

struct Options {
  std::string format = "text";
  long precision = kDefaultPrecision;
  bool exact_only = false;

  long n = 0;
  std::string group = "smallest";
  std::string kind;
  std::optional<long> lattice_n;
  std::optional<unsigned long> fault_index;
};

void check_dimension(long n, const char* what) {
  if (n > kMaxDimension) {
    throw DomainError(std::string(what) + " above " + std::to_string(kMaxDimension) + " is not supported");
  }
}

Json base_record(const std::string& command, Json input) {
  Json record;
  record["command"] = command;
  record["input"] = std::move(input);
  return record;
}

Json volume_command(const Options& o) {
  check_dimension(o.n, "dimension");
  Json input;
  input["n"] = o.n;
  input["group"] = o.group;
  if (!o.exact_only) input["precision_bits"] = o.precision;
  Json record = base_record("volume", std::move(input));

  VolumeExpression expr = VolumeExpression::one();
  if (o.group == "smallest") {
    expr = covolume_smallest_orbifold(o.n);
  } else if (o.group == "po-even") {
    expr = covolume_PO_even_unimodular(o.n);
  } else {
    expr = covolume_PSO_odd_unimodular(o.n);
  }
  record["exact"] = expression_record(expr);
  if (!o.exact_only) record["decimal"] = decimal_record(evaluate(expr, o.precision), o.precision);
  record["status"] = "ok";
  return record;
}

Json coxeter17_command(const Options& o) {
  Json input = Json::object();
  if (!o.exact_only) input["precision_bits"] = o.precision;
  Json record = base_record("coxeter17", std::move(input));
  const VolumeExpression expr = coxeter_polytope_volume_17();
  record["exact"] = expression_record(expr);
  if (!o.exact_only) record["decimal"] = decimal_record(evaluate(expr, o.precision), o.precision);
  record["diagram"] = diagram_record(diagram_II17());
  record["status"] = "ok";
  return record;
}

Json mass_command(const Options& o) {
  check_dimension(o.n, "dimension");
  Json input;
  input["m"] = o.n;
  if (!o.exact_only) input["precision_bits"] = o.precision;
  Json record = base_record("mass", std::move(input));
  const ExactRational mass = mass_even_unimodular(o.n);
  record["exact"] = Json{{"value", rational_record(mass)}};
  if (!o.exact_only) {
    const ApproxReal value = ApproxReal::from_rational(mass, o.precision + 32);
    record["decimal"] = decimal_record(value, o.precision);
  }
  record["status"] = "ok";
  return record;
}

Json ratio_command(const Options& o) {
  check_dimension(o.n, "dimension");
  Json input;
  input["n"] = o.n;
  if (!o.exact_only) input["precision_bits"] = o.precision;
  Json record = base_record("ratio", std::move(input));
  const VolumeExpression expr = volume_mass_ratio(o.n);
  record["exact"] = expression_record(expr);
  if (!o.exact_only) record["decimal"] = decimal_record(evaluate(expr, o.precision), o.precision);
  record["status"] = "ok";
  return record;
}

Json lattice_command(const Options& o) {
  Json input;
  input["kind"] = o.kind;
  if (o.lattice_n) input["n"] = *o.lattice_n;
  Json record = base_record("lattice", std::move(input));

  const bool needs_n = o.kind == "II" || o.kind == "I" || o.kind == "f";
  if (needs_n && !o.lattice_n) throw DomainError("lattice " + o.kind + " requires a dimension n");
  if (!needs_n && o.lattice_n) throw DomainError("lattice " + o.kind + " takes no dimension");
  if (o.lattice_n) check_dimension(*o.lattice_n, "dimension");

  GramMatrix g(1);
  if (o.kind == "II") {
    g = gram_II(*o.lattice_n);
  } else if (o.kind == "I") {
    g = gram_identity_lorentzian(*o.lattice_n);
  } else if (o.kind == "f") {
    g = gram_form_f(*o.lattice_n);
  } else if (o.kind == "E8") {
    g = gram_E8();
  } else {
    g = gram_hyperbolic_plane();
  }
  record["lattice"] = lattice_record(g);
  record["status"] = "ok";
  return record;
}

Json selfcheck_command(const Options& o) {
  Json input = Json::object();
  BernoulliTable table = BernoulliTable::standard();
  if (o.fault_index) {
    input["inject_bernoulli_fault"] = *o.fault_index;
    const ExactRational original = table(*o.fault_index);
    table = table.with_override(*o.fault_index, original + ExactRational(1));
  }
  Json record = base_record("selfcheck", std::move(input));
  Json checks = Json::array();
  bool all = true;
  for (const CheckResult& r : run_selfcheck(table)) {
    checks.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  record["checks"] = std::move(checks);
  record["status"] = all ? "ok" : "fail";
  return record;
}

void emit(const Json& record, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << record.dump(2) << "\n";
  } else {
    out << render_text(record);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and rigorous numeric covolumes of unimodular Lorentzian lattices"};
  app.name("lorentzvol");
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--prec", o.precision, "Evaluation precision in bits")
        ->envname("LORENTZVOL_PREC")
        ->check(CLI::Range(16L, kMaxPrecision));
    sub->add_flag("--exact", o.exact_only, "Print only the exact symbolic result");
  };

  auto* volume = app.add_subcommand("volume", "Covolume of an arithmetic group acting on H^n");
  volume->add_option("n", o.n, "Odd dimension n")->required();
  volume->add_option("--group", o.group, "smallest | po-even | pso-odd")
      ->check(CLI::IsMember({"smallest", "po-even", "pso-odd"}));
  add_precision(volume);
  add_format(volume);

  auto* coxeter = app.add_subcommand("coxeter17", "Volume and certificate of the 19-facet Coxeter polytope in H^17");
  add_precision(coxeter);
  add_format(coxeter);

  auto* mass = app.add_subcommand("mass", "Mass of the even unimodular genus in dimension m");
  mass->add_option("m", o.n, "Dimension m, divisible by 8")->required();
  add_precision(mass);
  add_format(mass);

  auto* ratio = app.add_subcommand("ratio", "Covolume of PO(II_{n,1}) divided by the mass in dimension n-1");
  ratio->add_option("n", o.n, "Dimension n = 1 mod 8")->required();
  add_precision(ratio);
  add_format(ratio);

  auto* lattice = app.add_subcommand("lattice", "Determinant, parity and signature of a Gram matrix");
  lattice->add_option("kind", o.kind, "II | I | f | E8 | U")
      ->required()
      ->check(CLI::IsMember({"II", "I", "f", "E8", "U"}));
  lattice->add_option("n", o.lattice_n, "Dimension n (for II, I and f)");
  add_format(lattice);

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the exact identity suite");
  selfcheck->add_option("--inject-bernoulli-fault", o.fault_index, "Corrupt B_k before checking")
      ->group("");
  add_format(selfcheck);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  std::function<Json(const Options&)> command;
  std::string name;
  if (volume->parsed()) {
    command = volume_command;
    name = "volume";
  } else if (coxeter->parsed()) {
    command = coxeter17_command;
    name = "coxeter17";
  } else if (mass->parsed()) {
    command = mass_command;
    name = "mass";
  } else if (ratio->parsed()) {
    command = ratio_command;
    name = "ratio";
  } else if (lattice->parsed()) {
    command = lattice_command;
    name = "lattice";
  } else {
    command = selfcheck_command;
    name = "selfcheck";
  }

  try {
    const Json record = command(o);
    emit(record, o.format, out);
    return record["status"] == "ok" ? kSuccess : kCheckFailed;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    if (o.format == "json") {
      emit(Json{{"command", name}, {"status", "error"}, {"error", e.what()}}, "json", out);
    }
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace lorentzvol::cli
