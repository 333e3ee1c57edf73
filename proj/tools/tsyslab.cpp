#include "tsyslab/beta.hpp"
#include "tsyslab/casorati.hpp"
#include "tsyslab/diffop.hpp"
#include "tsyslab/poly_text.hpp"
#include "tsyslab/report.hpp"
#include "tsyslab/screening.hpp"
#include "tsyslab/tsystem.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace tsyslab;

struct Options {
  std::string algebra = "a2even";
  int n = 1;
  int cutoff = 8;
  int m_max = 3;
  int a_max = 0; // 0 = n
  std::uint64_t seed = 1;
  int trials = 20;
  std::string precision; // empty = auto (double; high for N >= 5)
  bool theta_zero = false;
  std::string format = "text";
};

// Plain key=value config pointed to by TSYSLAB_CONFIG; flags override.
void load_config(Options &o) {
  const char *path = std::getenv("TSYSLAB_CONFIG");
  if (!path)
    return;
  std::ifstream in(path);
  if (!in)
    throw CLI::ValidationError("config", std::string("cannot read ") + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos)
      continue;
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      auto last = s.find_last_not_of(" \t\r");
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "algebra")
      o.algebra = value;
    else if (key == "n")
      o.n = std::stoi(value);
    else if (key == "cutoff")
      o.cutoff = std::stoi(value);
    else if (key == "m_max")
      o.m_max = std::stoi(value);
    else if (key == "a_max")
      o.a_max = std::stoi(value);
    else if (key == "seed")
      o.seed = std::stoull(value);
    else if (key == "trials")
      o.trials = std::stoi(value);
    else if (key == "precision")
      o.precision = value;
    else if (key == "theta_zero")
      o.theta_zero = value == "1" || value == "true";
    else if (key == "format")
      o.format = value;
  }
}

void add_common(CLI::App *cmd, Options &o) {
  cmd->add_option("--algebra", o.algebra, "a2even, a2odd, d2 or d3_4")
      ->check(CLI::IsMember({"a2even", "a2odd", "d2", "d3_4"}));
  cmd->add_option("--n", o.n, "orbit count of the algebra");
  cmd->add_option("--cutoff", o.cutoff, "series cutoff for infinite-order operators");
  cmd->add_option("--m-max", o.m_max, "largest m checked");
  cmd->add_option("--a-max", o.a_max, "largest a checked (0 = n)");
  cmd->add_option("--seed", o.seed, "base seed for numeric trials");
  cmd->add_option("--trials", o.trials, "number of numeric trials");
  cmd->add_option("--precision", o.precision, "double or high")
      ->check(CLI::IsMember({"double", "high"}));
  cmd->add_flag("--theta-zero", o.theta_zero, "formally set pi*i/(r*hbar) = 0");
  cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

AlgebraKind parse_kind(const std::string &name) {
  if (name == "a2even")
    return AlgebraKind::A2Even;
  if (name == "a2odd")
    return AlgebraKind::A2Odd;
  if (name == "d2")
    return AlgebraKind::D2;
  if (name == "d3_4")
    return AlgebraKind::D34;
  throw std::invalid_argument("unknown algebra: " + name);
}

CasoratiParams casorati_params(const Options &o, const AlgebraSpec &spec) {
  CasoratiParams p;
  p.kind = spec.kind;
  p.n = spec.n;
  p.seed = o.seed;
  p.trials = o.trials;
  p.m_max = o.m_max;
  p.a_max = o.a_max;
  // The Casoratian cancellation outgrows double-backed frames at N >= 5;
  // unless the user pinned a precision, switch to the high path there.
  if (o.precision.empty())
    p.precision = spec.N >= 5 ? Precision::High : Precision::Double;
  else
    p.precision = o.precision == "high" ? Precision::High : Precision::Double;
  return p;
}

int emit_reports(const Options &o, std::vector<CheckReport> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport &a, const CheckReport &b) { return a.name < b.name; });
  bool all_ok = true;
  for (const auto &r : reports)
    if (r.status() == CheckReport::Status::Fail)
      all_ok = false;
  if (o.format == "json") {
    std::cout << report_json(reports) << "\n";
  } else {
    for (const auto &r : reports)
      std::cout << report_text(r);
    std::cout << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_ok ? 0 : 1;
}

int run_expand(const Options &o) {
  AlgebraSpec spec = make_algebra(parse_kind(o.algebra), o.n);
  TTable table = extract_T(spec, build_L(spec, o.cutoff));
  int top = spec.is_A2() ? spec.N + 1 : o.cutoff;
  if (o.format == "json") {
    nlohmann::ordered_json out;
    out["algebra"] = o.algebra;
    out["n"] = o.n;
    if (!spec.is_A2())
      out["cutoff"] = o.cutoff;
    nlohmann::ordered_json ts = nlohmann::ordered_json::object();
    for (int a = 0; a <= top; ++a)
      ts["T^" + std::to_string(a)] = to_string(table.T_upper(a));
    out["T"] = ts;
    std::cout << out.dump(2) << "\n";
  } else {
    for (int a = 0; a <= top; ++a)
      std::cout << "T^" << a << "(u) = " << to_string(table.T_upper(a)) << "\n";
  }
  return 0;
}

VarLabel parse_label(const std::string &text, bool &is_x, int &x_pos) {
  is_x = false;
  if (text.size() >= 2 && text[0] == 'x') {
    is_x = true;
    x_pos = std::stoi(text.substr(1));
    return VarLabel::plain(1);
  }
  if (text == "z0")
    return VarLabel::zero();
  if (text.rfind("zbar", 0) == 0)
    return VarLabel::bar(std::stoi(text.substr(4)));
  if (text.rfind("z", 0) == 0)
    return VarLabel::plain(std::stoi(text.substr(1)));
  throw std::invalid_argument("label must look like z2, zbar1, z0 or x3");
}

int run_vars(const Options &o, const std::string &label_text) {
  AlgebraSpec spec = make_algebra(parse_kind(o.algebra), o.n);
  bool is_x = false;
  int x_pos = 0;
  VarLabel label = parse_label(label_text, is_x, x_pos);
  LaurentPoly v = is_x ? x_var(spec, x_pos, Shift()) : z_var(spec, label, Shift());
  if (o.format == "json") {
    nlohmann::ordered_json out;
    out["algebra"] = o.algebra;
    out["n"] = o.n;
    out["label"] = label_text;
    out["value"] = to_string(v);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << label_text << "(u) = " << to_string(v) << "\n";
  }
  return 0;
}

int run_tableaux(const Options &o, const std::string &indices_text) {
  AlgebraSpec spec = make_algebra(parse_kind(o.algebra), o.n);
  std::vector<int> indices;
  std::stringstream ss(indices_text);
  std::string part;
  while (std::getline(ss, part, ','))
    indices.push_back(std::stoi(part));
  YoungData data = YoungData::from_indices(indices);
  LaurentPoly sum = tableaux_sum(spec, data, Shift());
  long count = count_tableaux(spec, data);
  if (o.format == "json") {
    nlohmann::ordered_json out;
    out["algebra"] = o.algebra;
    out["n"] = o.n;
    out["indices"] = indices;
    out["mu"] = data.mu;
    out["cells"] = data.cell_count();
    out["tableaux"] = count;
    out["sum"] = to_string(sum);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "mu = (";
    for (std::size_t i = 0; i < data.mu.size(); ++i)
      std::cout << (i ? "," : "") << data.mu[i];
    std::cout << "), cells = " << data.cell_count() << ", tableaux = " << count
              << "\n";
    std::cout << to_string(sum) << "\n";
  }
  return 0;
}

int run_beta(const Options &o, int a) {
  AlgebraSpec spec = make_algebra(parse_kind(o.algebra), o.n);
  TTable table = extract_T(spec, build_L(spec, o.cutoff));
  WeightPoly w = beta_project(spec, table.T_upper(a));
  if (o.format == "json") {
    nlohmann::ordered_json out;
    out["algebra"] = o.algebra;
    out["n"] = o.n;
    out["a"] = a;
    out["beta"] = weight_poly_str(w);
    out["integral"] = w.all_exponents_integral();
    out["coefficient_sum"] = w.coefficient_sum().str();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "beta(T^" << a << ") = " << weight_poly_str(w) << "\n";
  }
  return 0;
}

int run_check(const Options &o, const std::string &what) {
  AlgebraSpec spec = make_algebra(parse_kind(o.algebra), o.n);
  const bool a2 = spec.is_A2();
  std::vector<std::function<CheckReport()>> tasks;

  auto make_table = [&spec, &o]() {
    return extract_T(spec, build_L(spec, o.cutoff));
  };

  bool all = what == "all";
  auto want = [&](const std::string &name, bool applicable) {
    if (what == name && !applicable)
      throw CLI::ValidationError("check", name + " does not apply to " + o.algebra);
    return applicable && (all || what == name);
  };

  if (want("screening", true)) {
    tasks.push_back([=]() { return check_S_functional(spec); });
    tasks.push_back([=]() {
      TTable t = make_table();
      int b_max = a2 ? spec.N + 1 : std::min(o.cutoff, 6);
      return check_screening_annihilation(spec, t, b_max);
    });
  }
  if (want("tt", true)) {
    tasks.push_back([=]() {
      TTable t = make_table();
      int m_max = a2 ? 6 : std::min(o.cutoff, o.m_max);
      solve_lower(t, m_max);
      return check_TT2(t, m_max);
    });
  }
  if (want("tq", a2)) {
    tasks.push_back([=]() { return check_TQ1(spec, build_L(spec, 0)); });
    tasks.push_back([=]() { return check_TQ2(make_table()); });
  }
  if (want("duality", a2))
    tasks.push_back([=]() { return check_duality(make_table()); });
  if (want("rewrite", a2))
    tasks.push_back([=]() { return check_rewrite(spec); });
  if (want("d34", spec.kind == AlgebraKind::D34)) {
    tasks.push_back([=]() { return check_d34_lemmas(std::max(o.cutoff, 4)); });
    tasks.push_back([]() { return check_HK_annihilation(); });
  }
  if (want("tsystem", a2)) {
    tasks.push_back([=]() {
      TTable t = make_table();
      int a_max = o.a_max > 0 ? o.a_max : spec.n;
      return check_tsystem_symbolic(t, a_max, o.m_max);
    });
  }
  if (want("beta", true))
    tasks.push_back([=]() { return check_top_term(make_table()); });
  if (want("casorati", a2)) {
    CasoratiParams p = casorati_params(o, spec);
    tasks.push_back([=]() { return check_casorati_structure(p); });
    tasks.push_back([=]() { return check_triple_agreement(p); });
    tasks.push_back([=]() { return check_tsystem_numeric(p); });
  }

  if (tasks.empty())
    throw CLI::ValidationError("check", "nothing to run for " + what + " on " +
                                            o.algebra);

  std::vector<std::future<CheckReport>> futures;
  futures.reserve(tasks.size());
  for (auto &task : tasks)
    futures.push_back(std::async(std::launch::async, task));
  std::vector<CheckReport> reports;
  reports.reserve(futures.size());
  for (auto &f : futures)
    reports.push_back(f.get());
  return emit_reports(o, reports);
}

} // namespace

int main(int argc, char **argv) {
  Options o;
  try {
    load_config(o);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"exact and numeric verification of twisted T-system identities"};
  app.require_subcommand(1);

  CLI::App *expand = app.add_subcommand("expand", "print the T functions of L(u)");
  add_common(expand, o);

  CLI::App *vars = app.add_subcommand("vars", "print a z/x variable");
  add_common(vars, o);
  std::string label;
  vars->add_option("--label", label, "z2, zbar1, z0 or x3")->required();

  CLI::App *tableaux = app.add_subcommand("tableaux", "skew tableaux sum for an index set");
  add_common(tableaux, o);
  std::string indices;
  tableaux->add_option("--indices", indices, "comma list, e.g. 0,1,3,4")->required();

  CLI::App *beta = app.add_subcommand("beta", "weight projection of T^a");
  add_common(beta, o);
  int beta_a = 1;
  beta->add_option("--a", beta_a, "orbit index")->required();

  CLI::App *check = app.add_subcommand("check", "run identity checks");
  add_common(check, o);
  std::string what;
  check
      ->add_option("what", what,
                   "screening, tq, tt, duality, rewrite, d34, tsystem, beta, "
                   "casorati or all")
      ->required()
      ->check(CLI::IsMember({"screening", "tq", "tt", "duality", "rewrite", "d34",
                             "tsystem", "beta", "casorati", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  set_theta_zero_mode(o.theta_zero);

  try {
    if (expand->parsed())
      return run_expand(o);
    if (vars->parsed())
      return run_vars(o, label);
    if (tableaux->parsed())
      return run_tableaux(o, indices);
    if (beta->parsed())
      return run_beta(o, beta_a);
    if (check->parsed())
      return run_check(o, what);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
