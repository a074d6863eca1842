#include "commands.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "symdeg/andor.hpp"
#include "symdeg/budget.hpp"
#include "symdeg/json_io.hpp"
#include "symdeg/oracle.hpp"
#include "symdeg/rangexfer.hpp"
#include "symdeg/symmetrize.hpp"

namespace symdeg::cli {

namespace {

struct PropertyArgs {
  std::string name;
  std::string file;

  void add_to(CLI::App* cmd) {
    auto* by_name = cmd->add_option("--property", name, "Built-in property: ed, collision, modified-ed, always-one");
    auto* by_file = cmd->add_option("--property-file", file, "JSON file with a labelled class table");
    by_name->excludes(by_file);
    by_file->excludes(by_name);
  }

  [[nodiscard]] PropertySpec resolve() const {
    if (!file.empty()) return io::property_from_json(io::read_file(file));
    if (name.empty()) throw std::invalid_argument("one of --property or --property-file is required");
    return builtin_property(name);
  }
};

struct Options {
  PropertyArgs property;
  int n = 0;
  int m = 0;
  std::string eps = "1/3";
  std::string m_range;
  std::string input;
  std::string output;
  bool json = false;
  bool assert_flat = false;
};

void write_output(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  file << text;
}

Rational parse_eps(const std::string& text) {
  Rational eps = Rational::parse(text);
  if (eps.sign() < 0 || eps >= Rational(1, 2)) throw std::invalid_argument("--eps must satisfy 0 <= eps < 1/2");
  return eps;
}

void print_certificate(std::ostream& out, const DegreeCertificate& cert) {
  out << "property " << cert.property << "  n=" << cert.n << "  m=" << cert.m << "  eps=" << cert.epsilon << '\n';
  out << "d\teps_min\n";
  for (const DegreeRecord& rec : cert.records) out << rec.degree << '\t' << rec.eps_min << '\n';
  out << "degree " << cert.degree << ", query lower bound " << cert.query_lower_bound << '\n';
  out << "optimal: " << cert.optimal().optimum << '\n';
}

void print_report(std::ostream& out, const Report& report) {
  out << (report.pass ? "PASS" : "FAIL") << " (" << report.violations.size() << " violations)\n";
  for (const Violation& v : report.violations) {
    out << (v.kind == Violation::Kind::Class ? "class (" : "f=(");
    for (std::size_t k = 0; k < v.input.size(); ++k) out << (k ? "," : "") << v.input[k];
    out << ") " << label_name(v.label) << ": value " << v.value << (v.bound == Bound::Lower ? " < " : " > ")
        << v.limit << '\n';
  }
}

// Emits a polynomial result: JSON to --output when given, JSON or text on stdout.
template <typename Poly>
void emit_polynomial(const Options& opt, std::ostream& out, const Poly& poly) {
  const std::string doc = io::dump(io::to_json(poly));
  if (!opt.output.empty()) write_output(opt.output, doc);
  if (opt.json) {
    out << doc;
  } else {
    out << poly << '\n';
  }
}

int cmd_degree(const Options& opt, std::ostream& out) {
  const PropertySpec prop = opt.property.resolve();
  const DegreeCertificate cert = approx_degree(prop, opt.n, opt.m, parse_eps(opt.eps));
  if (opt.json) {
    out << io::dump(io::to_json(cert));
  } else {
    print_certificate(out, cert);
  }
  return kOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  const PropertySpec prop = opt.property.resolve();
  const Rational eps = parse_eps(opt.eps);
  const auto [lo, hi] = parse_range(opt.m_range);
  std::vector<DegreeCertificate> rows;
  for (int m = lo; m <= hi; ++m) rows.push_back(approx_degree(prop, opt.n, m, eps));

  bool flat = true;
  for (const auto& row : rows) flat = flat && row.degree == rows.front().degree;

  std::string text;
  if (opt.json) {
    Report report;
    report.pass = flat;
    for (const auto& cert : rows) {
      RangeRow row{cert.m, cert.degree, {}};
      for (const auto& rec : cert.records) row.eps_min.push_back(rec.eps_min);
      report.table.push_back(std::move(row));
    }
    text = io::dump(io::to_json(report));
  } else {
    text = sweep_csv(rows);
  }
  if (opt.output.empty()) {
    out << text;
  } else {
    write_output(opt.output, text);
  }
  return opt.assert_flat && !flat ? kCheckFailed : kOk;
}

int cmd_symmetrize(const Options& opt, std::ostream& out) {
  const YPolynomial p = io::y_polynomial_from_json(io::read_file(opt.input));
  emit_polynomial(opt, out, symmetrize(p));
  return kOk;
}

int cmd_extend(const Options& opt, std::ostream& out) {
  const SymPolynomial q = io::sym_polynomial_from_json(io::read_file(opt.input));
  emit_polynomial(opt, out, extend_range(q, opt.m));
  return kOk;
}

int cmd_restrict(const Options& opt, std::ostream& out) {
  const SymPolynomial q = io::sym_polynomial_from_json(io::read_file(opt.input));
  emit_polynomial(opt, out, restrict_range(q, opt.n));
  return kOk;
}

int cmd_andor_reduce(const Options& opt, std::ostream& out) {
  const XPolynomial p = io::x_polynomial_from_json(io::read_file(opt.input));
  if (opt.n != 0 && opt.n != p.n()) {
    throw std::invalid_argument("--n " + std::to_string(opt.n) + " does not match the file's n=" + std::to_string(p.n()));
  }
  emit_polynomial(opt, out, substitute(p));
  return kOk;
}

int cmd_andor_bound(const Options& opt, std::ostream& out) {
  const AndOrBound bound = andor_degree_bound(opt.n, parse_eps(opt.eps));
  if (opt.json) {
    out << io::dump(io::to_json(bound));
  } else {
    out << "AND-OR on " << bound.variables << " variables: degree >= " << bound.andor_degree_lower_bound
        << " (element distinctness n=m=" << bound.n << ", eps=" << bound.epsilon << ")\n";
  }
  return kOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const PropertySpec prop = opt.property.resolve();
  const Rational eps = parse_eps(opt.eps);
  const io::AnyPolynomial poly = io::polynomial_from_json(io::read_file(opt.input));
  Report report;
  if (const auto* y = std::get_if<YPolynomial>(&poly)) {
    report = verify_approximation(*y, prop, eps);
  } else if (const auto* z = std::get_if<SymPolynomial>(&poly)) {
    if (opt.n < 1) throw std::invalid_argument("verify: --n is required for a z-polynomial");
    report = verify_approximation(*z, prop, opt.n, eps);
  } else {
    throw std::invalid_argument("verify: x-polynomials are not properties of f; run andor-reduce first");
  }
  if (opt.json) {
    out << io::dump(io::to_json(report));
  } else {
    print_report(out, report);
  }
  return report.pass ? kOk : kCheckFailed;
}

int cmd_transfer(const Options& opt, std::ostream& out) {
  const PropertySpec prop = opt.property.resolve();
  const YPolynomial p = io::y_polynomial_from_json(io::read_file(opt.input));
  const TransferResult result = transfer_approximation(p, prop, opt.m, parse_eps(opt.eps));
  const std::string doc = io::dump(io::to_json(result.polynomial));
  if (!opt.output.empty()) write_output(opt.output, doc);
  if (opt.json) {
    out << io::dump(io::to_json(result));
  } else {
    out << result.polynomial << '\n'
        << (result.status == TransferStatus::Verified ? "verified"
            : result.status == TransferStatus::Failed ? "FAILED verification"
                                                      : "unverified (beyond enumeration budget)")
        << '\n';
  }
  return result.status == TransferStatus::Failed ? kCheckFailed : kOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument("trailing characters");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument("trailing characters");
    if (lo > hi) throw std::invalid_argument("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad range '" + text + "': " + e.what());
  }
}

std::string sweep_csv(const std::vector<DegreeCertificate>& rows) {
  std::ostringstream os;
  os << "m,degree,query_lower_bound,eps_min\n";
  for (const auto& cert : rows) {
    os << cert.m << ',' << cert.degree << ',' << cert.query_lower_bound << ',';
    for (std::size_t k = 0; k < cert.records.size(); ++k) os << (k ? ";" : "") << cert.records[k].eps_min;
    os << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact approximate-degree computations for symmetric properties of f:[n]->[m]", "symdeg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "symdeg 0.1.0");
  Options opt;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", opt.json, "Machine-readable JSON output"); };
  auto add_eps = [&](CLI::App* cmd) { cmd->add_option("--eps", opt.eps, "Error bound p/q with 0 <= eps < 1/2")->capture_default_str(); };

  auto* degree = app.add_subcommand("degree", "Minimum degree of an eps-approximating polynomial");
  opt.property.add_to(degree);
  degree->add_option("--n", opt.n, "Domain size")->required();
  degree->add_option("--m", opt.m, "Range size")->required();
  add_eps(degree);
  add_json(degree);

  auto* sweep = app.add_subcommand("sweep", "Degree table over a range of m (CSV)");
  opt.property.add_to(sweep);
  sweep->add_option("--n", opt.n, "Domain size")->required();
  sweep->add_option("--m", opt.m_range, "Range sizes, a..b")->required();
  add_eps(sweep);
  sweep->add_option("--output,-o", opt.output, "Write to this file instead of stdout");
  sweep->add_flag("--assert-flat", opt.assert_flat, "Exit 1 unless the degree is the same for every m");
  add_json(sweep);

  auto* symm = app.add_subcommand("symmetrize", "y-polynomial file -> symmetric z-polynomial");
  symm->add_option("--input,-i", opt.input, "y-polynomial JSON")->required();
  symm->add_option("--output,-o", opt.output, "z-polynomial JSON output file");
  add_json(symm);

  auto* extend = app.add_subcommand("extend", "Reinterpret a z-polynomial over more variables");
  extend->add_option("--input,-i", opt.input, "z-polynomial JSON")->required();
  extend->add_option("--m", opt.m, "Target variable count")->required();
  extend->add_option("--output,-o", opt.output, "z-polynomial JSON output file");
  add_json(extend);

  auto* restrict_cmd = app.add_subcommand("restrict", "Set trailing z variables to zero");
  restrict_cmd->add_option("--input,-i", opt.input, "z-polynomial JSON")->required();
  restrict_cmd->add_option("--n", opt.n, "Target variable count")->required();
  restrict_cmd->add_option("--output,-o", opt.output, "z-polynomial JSON output file");
  add_json(restrict_cmd);

  auto* reduce = app.add_subcommand("andor-reduce", "x-polynomial on n^2 variables -> y-polynomial on (n, n)");
  reduce->add_option("--input,-i", opt.input, "x-polynomial JSON")->required();
  reduce->add_option("--n", opt.n, "Group count (must match the file)");
  reduce->add_option("--output,-o", opt.output, "y-polynomial JSON output file");
  add_json(reduce);

  auto* bound = app.add_subcommand("andor-bound", "AND-OR degree lower bound via element distinctness");
  bound->add_option("--n", opt.n, "Group count")->required();
  add_eps(bound);
  add_json(bound);

  auto* verify = app.add_subcommand("verify", "Check a polynomial against a property");
  verify->add_option("--input,-i", opt.input, "y- or z-polynomial JSON")->required();
  opt.property.add_to(verify);
  verify->add_option("--n", opt.n, "Domain size (z-polynomials only)");
  add_eps(verify);
  add_json(verify);

  auto* transfer = app.add_subcommand("transfer", "Lift a y-polynomial approximator to a larger range");
  transfer->add_option("--input,-i", opt.input, "y-polynomial JSON")->required();
  opt.property.add_to(transfer);
  transfer->add_option("--m", opt.m, "Target range size")->required();
  add_eps(transfer);
  transfer->add_option("--output,-o", opt.output, "y-polynomial JSON output file");
  add_json(transfer);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (degree->parsed()) return cmd_degree(opt, out);
    if (sweep->parsed()) return cmd_sweep(opt, out);
    if (symm->parsed()) return cmd_symmetrize(opt, out);
    if (extend->parsed()) return cmd_extend(opt, out);
    if (restrict_cmd->parsed()) return cmd_restrict(opt, out);
    if (reduce->parsed()) return cmd_andor_reduce(opt, out);
    if (bound->parsed()) return cmd_andor_bound(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (transfer->parsed()) return cmd_transfer(opt, out);
  } catch (const BudgetExceeded& e) {
    err << "symdeg: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "symdeg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "symdeg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "symdeg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "symdeg: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace symdeg::cli
