// circbut: construct, verify, dualize, classify and tabulate circulant
// Butson-type complex Hadamard matrices.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "circbut/circulant.hpp"
#include "circbut/constructions.hpp"
#include "circbut/duality.hpp"
#include "circbut/obstructions.hpp"
#include "circbut/row_io.hpp"
#include "circbut/search.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace circbut;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

EquivalenceGroup parse_group(const std::string& name) {
  if (name == "rotate-constant") return EquivalenceGroup::RotateAndConstant;
  if (name == "rotate-constant-reversal") return EquivalenceGroup::RotateConstantAndReversal;
  if (name == "rotate-constant-galois") return EquivalenceGroup::RotateConstantAndGalois;
  if (name == "rotate-constant-galois-reversal")
    return EquivalenceGroup::RotateConstantGaloisReversal;
  throw CLI::ValidationError("--group", "unknown equivalence group: " + name);
}

int cmd_verify(const std::string& in_path) {
  const RowFile file = parse_row_file(read_input(in_path));
  json out = json::array();
  bool all_hadamard = true;
  for (const auto& row : file.exponent_rows()) {
    json entry;
    entry["n"] = row.n;
    entry["l"] = row.l;
    entry["hadamard"] = is_hadamard(row);
    entry["hermitian"] = is_hermitian(row);
    all_hadamard = all_hadamard && entry["hadamard"].get<bool>();
    out.push_back(entry);
  }
  std::cout << (out.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
  return all_hadamard ? 0 : kExitVerifyFailed;
}

int cmd_construct(const std::string& family, int n, int m, int p, int a, int b, int c,
                  const std::string& out_path) {
  ExponentRow row;
  if (family == "fourier") {
    row = fourier_circulant(n);
  } else if (family == "backelin") {
    row = backelin_circulant({n, m});
  } else if (family == "quadratic") {
    row = quadratic_row({p, a, b, c});
  } else {
    throw CLI::ValidationError("--family", "unknown family: " + family);
  }
  write_output(out_path, write_row_file(row));
  return 0;
}

int cmd_search(int n, int l, bool hermitian, int workers, std::uint64_t budget,
               const std::string& group_name, const std::string& out_path, bool timing) {
  SearchConfig config;
  config.equivalence_group = parse_group(group_name);
  config.worker_count = workers;
  config.node_budget = budget;
  const SearchReport report = hermitian ? classify_hermitian(n, l, config)
                                        : classify_cell(n, l, config);
  json out;
  out["n"] = report.n;
  out["l"] = report.l;
  out["hermitian"] = report.hermitian_only;
  out["group"] = equivalence_group_name(report.group);
  out["class_count"] = report.class_count;
  json reps = json::array();
  for (const auto& rep : report.representatives) reps.push_back(json(rep.e));
  out["representatives"] = reps;
  out["nodes"] = report.nodes_visited;
  out["pruned"] = report.pruned;
  if (timing) out["seconds"] = report.wall_seconds;
  std::cout << out.dump(2) << "\n";

  if (!out_path.empty()) {
    RowFile file;
    file.n = n;
    file.l = l;
    for (const auto& rep : report.representatives) file.rows.push_back(rep.e);
    write_output(out_path, write_row_file(file));
  }
  return 0;
}

int cmd_dualize(const std::string& in_path, const std::string& out_path) {
  const std::string text = read_input(in_path);
  json out = json::array();
  ComplexRowFile duals;
  auto process = [&](const ComplexRow& x, int index) {
    const ComplexRow y = dual(x);
    bool unimodular = true, hermitian = true;
    for (int k = 0; k < y.n; ++k) {
      if (std::abs(std::abs(y.values[k]) - 1.0) > 1e-9) unimodular = false;
      if (std::abs(std::conj(y.values[(y.n - k) % y.n]) - y.values[k]) > 1e-9) hermitian = false;
    }
    json entry;
    entry["row"] = index;
    entry["n"] = y.n;
    entry["unimodular"] = unimodular;
    entry["hermitian"] = hermitian;
    json values = json::array();
    for (const auto& v : y.values) values.push_back(json::array({v.real(), v.imag()}));
    entry["dual"] = values;
    out.push_back(entry);
    duals.rows.push_back(y.values);
    duals.n = y.n;
  };

  if (is_complex_row_text(text)) {
    const ComplexRowFile file = parse_complex_row_file(text);
    int index = 0;
    for (const auto& row : file.rows) process(ComplexRow(row), index++);
  } else {
    const RowFile file = parse_row_file(text);
    int index = 0;
    for (const auto& row : file.exponent_rows()) process(complex_row(row), index++);
  }
  std::cout << (out.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
  if (!out_path.empty()) write_output(out_path, write_complex_row_file(duals));
  return 0;
}

int cmd_obstruct(int n, int l) {
  const ObstructionVerdict verdict = check_obstructions(n, l);
  json out;
  out["n"] = n;
  out["l"] = l;
  out["status"] = verdict.obstructed() ? "obstructed" : "no_known_obstruction";
  if (verdict.obstructed()) out["reason"] = obstruction_name(verdict.reason);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_table(int n_max, int l_max, double volume, const std::string& group_name) {
  SearchConfig config;
  config.equivalence_group = parse_group(group_name);
  std::cout << render_table(sweep_table(n_max, l_max, config, volume));
  return 0;
}

int cmd_audit(bool planar, bool intersection, bool vanishing, bool prime_uniqueness, int p,
              int q, int n) {
  json out;
  if (planar) {
    const auto audit = planar_theorem_audit(p);
    out["p"] = audit.p;
    out["planar_count"] = audit.planar_count;
    out["all_quadratic"] = audit.planar_iff_quadratic;
    out["planar_iff_hadamard"] = audit.planar_iff_hadamard;
  } else if (intersection) {
    long checked = 0, literal_violations = 0, squared_violations = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> A;
      for (int x = 0; x < n; ++x)
        if (mask & (1u << x)) A.push_back(x);
      const auto r = intersection_bound_check(A, n);
      ++checked;
      if (!r.literal_all) ++literal_violations;
      if (!r.squared_all || !r.squared_nonzero) ++squared_violations;
    }
    out["n"] = n;
    out["subsets"] = checked;
    out["literal_violations"] = literal_violations;
    out["squared_violations"] = squared_violations;
  } else if (vanishing) {
    const int l = p * q;
    const int terms = p + q;
    long vanishing_count = 0, failures = 0;
    std::vector<int> v(terms, 0);
    while (true) {
      CycPoly s = CycPoly::zero(l);
      for (int x : v) ++s.coeffs[x];
      if (is_zero_sum(s)) {
        ++vanishing_count;
        try {
          (void)decompose_vanishing_sum(v, p, q);
        } catch (const std::exception&) {
          ++failures;
        }
      }
      int i = terms - 1;
      while (i >= 0 && v[i] == l - 1) --i;
      if (i < 0) break;
      ++v[i];
      for (int j = i + 1; j < terms; ++j) v[j] = v[i];
    }
    out["p"] = p;
    out["q"] = q;
    out["vanishing_multisets"] = vanishing_count;
    out["decomposition_failures"] = failures;
  } else if (prime_uniqueness) {
    const auto r = prime_uniqueness_audit(p);
    out["p"] = r.p;
    out["circulant_class_count"] = r.circulant_class_count;
    out["all_quadratic"] = r.all_quadratic;
    out["all_reduce_to_fourier"] = r.all_reduce_to_fourier;
    out["fourier_class_count"] = r.fourier_class_count;
    out["unique"] = r.unique;
  } else {
    throw CLI::ValidationError(
        "audit", "choose one of --planar, --intersection, --vanishing, --prime-uniqueness");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circulant Butson Hadamard matrix toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path;
  std::string family = "fourier", group_name = "rotate-constant";
  int n = 0, l = 0, m = 1, p = 3, a = 1, b = 0, c = 0, q = 3, workers = 1;
  int n_max = 8, l_max = 12;
  std::uint64_t budget = 500000000ULL;
  double volume = 2e7;
  bool hermitian = false, timing = false;
  bool planar = false, intersection = false, vanishing = false, prime_uniqueness = false;

  auto* verify = app.add_subcommand("verify", "check rows from a row file (stdin by default)");
  verify->add_option("--in", in_path, "input row file, '-' for stdin");

  auto* construct = app.add_subcommand("construct", "emit a known circulant Hadamard row");
  construct->add_option("--family", family, "fourier | backelin | quadratic");
  construct->add_option("--n", n, "matrix order (fourier) or base order (backelin)");
  construct->add_option("--m", m, "backelin divisor of n");
  construct->add_option("--p", p, "prime for quadratic rows");
  construct->add_option("--a", a, "quadratic coefficient, nonzero");
  construct->add_option("--b", b, "linear coefficient");
  construct->add_option("--c", c, "constant coefficient");
  construct->add_option("--out", out_path, "write the row file here instead of stdout");

  auto* search = app.add_subcommand("search", "classify one (n, l) cell exhaustively");
  search->add_option("--n", n, "matrix order")->required();
  search->add_option("--l", l, "root-of-unity order")->required();
  search->add_flag("--hermitian", hermitian, "restrict to Hermitian rows");
  search->add_option("--workers", workers, "parallel workers");
  search->add_option("--budget", budget, "node budget");
  search->add_option("--group", group_name,
                     "equivalence group: rotate-constant (default), rotate-constant-reversal, "
                     "rotate-constant-galois, rotate-constant-galois-reversal");
  search->add_option("--out", out_path, "also write representatives as a row file");
  search->add_flag("--timing", timing, "include wall time in the JSON payload");

  auto* dualize = app.add_subcommand("dualize", "apply the Fourier duality to rows");
  dualize->add_option("--in", in_path, "input row file (exponent or complex), '-' for stdin");
  dualize->add_option("--out", out_path, "write dual rows as a complex row file");

  auto* obstruct = app.add_subcommand("obstruct", "existence obstructions for a cell");
  obstruct->add_option("--n", n, "matrix order")->required();
  obstruct->add_option("--l", l, "root-of-unity order")->required();

  auto* table = app.add_subcommand("table", "obstruction/count table over a range of cells");
  table->add_option("--n-max", n_max, "largest order");
  table->add_option("--l-max", l_max, "largest root order");
  table->add_option("--volume", volume, "skip cells with raw volume l^(n-1) above this");
  table->add_option("--group", group_name, "equivalence group");

  auto* audit = app.add_subcommand("audit", "run one of the verification audits");
  audit->add_flag("--planar", planar, "planar-function sweep for prime p");
  audit->add_flag("--intersection", intersection, "intersection bound over all subsets of Z/nZ");
  audit->add_flag("--vanishing", vanishing, "vanishing-sum decompositions for primes p, q");
  audit->add_flag("--prime-uniqueness", prime_uniqueness, "Fourier uniqueness audit for prime p");
  audit->add_option("--p", p, "prime parameter");
  audit->add_option("--q", q, "second prime (vanishing audit)");
  audit->add_option("--n", n, "modulus (intersection audit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(in_path);
    if (*construct) return cmd_construct(family, n, m, p, a, b, c, out_path);
    if (*search) return cmd_search(n, l, hermitian, workers, budget, group_name, out_path, timing);
    if (*dualize) return cmd_dualize(in_path, out_path);
    if (*obstruct) return cmd_obstruct(n, l);
    if (*table) return cmd_table(n_max, l_max, volume, group_name);
    if (*audit) return cmd_audit(planar, intersection, vanishing, prime_uniqueness, p, q, n);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
