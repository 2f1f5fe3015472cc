// Command-line driver: every pipeline stage (index enumeration, patch
// matrices, Pfaffians, generators, Groebner bases, initial ideals,
// Stanley-Reisner complexes, new forms) plus the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap hit.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "otc/antiskew.hpp"
#include "otc/chains.hpp"
#include "otc/field.hpp"
#include "otc/groebner.hpp"
#include "otc/io.hpp"
#include "otc/limits.hpp"
#include "otc/patch.hpp"
#include "otc/sr_complex.hpp"
#include "otc/verify.hpp"

namespace {

using namespace otc;

struct JobSpec {
  int d = 0;
  std::string v_str, w_str, tau_str;
  std::string order = "hlex";
  std::string field = "rat";
  std::string out = "table";
  int max_degree = 0;
  std::size_t max_terms = 500000;
  std::size_t max_basis = 5000;
  std::uint64_t seed = 12345;
  int workers = 0;
};

IsotropicIndex parse_isotropic(int d, const std::string& s,
                               const char* what) {
  try {
    return IsotropicIndex(Dim(d), parse_int_list(s));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

TermOrder order_of(const JobSpec& job, const RootSet& rs) {
  if (job.order == "hlex") return make_hlex(rs);
  if (job.order == "rlex") return make_rlex(rs);
  if (job.order == "diagproj") return make_diagproj(rs);
  throw std::invalid_argument("unknown order: " + job.order);
}

GBLimits limits_of(const JobSpec& job) {
  GBLimits lim;
  lim.max_basis = job.max_basis;
  lim.max_terms = job.max_terms;
  lim.max_degree = job.max_degree;
  return lim;
}

// Dispatch on the --field flag; fn receives the field context.
template <class Fn>
int with_field(const JobSpec& job, Fn fn) {
  if (job.field == "rat") return fn(RatField{});
  if (job.field.rfind("fp:", 0) == 0) {
    std::uint64_t p = std::stoull(job.field.substr(3));
    return fn(PrimeField(p));
  }
  throw std::invalid_argument("unknown field: " + job.field +
                              " (expected rat or fp:<p>)");
}

void emit(const JobSpec& job, const json& j,
          const std::function<void()>& table_fn,
          const std::function<void()>& csv_fn = nullptr) {
  if (job.out == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (job.out == "csv") {
    if (csv_fn)
      csv_fn();
    else
      throw std::invalid_argument("csv output not available for this command");
  } else if (job.out == "table") {
    table_fn();
  } else {
    throw std::invalid_argument("unknown output format: " + job.out);
  }
}

int cmd_enum_id(const JobSpec& job) {
  auto all = enumerate_isotropic(Dim(job.d));
  json j = json::array();
  for (const auto& v : all) j.push_back(index_to_json(v.tuple()));
  emit(
      job, j,
      [&] {
        for (const auto& v : all) {
          for (int i = 1; i <= v.size(); ++i)
            std::cout << (i > 1 ? "," : "") << v.entry(i);
          std::cout << "\n";
        }
      },
      [&] {
        for (const auto& v : all) {
          for (int i = 1; i <= v.size(); ++i)
            std::cout << (i > 1 ? "," : "") << v.entry(i);
          std::cout << "\n";
        }
      });
  return 0;
}

int cmd_patch_matrix(const JobSpec& job) {
  RootSet rs(parse_isotropic(job.d, job.v_str, "--v"));
  PatchMatrix pm(rs);
  emit(job, patch_to_json(pm), [&] {
    for (int r = 1; r <= pm.row_count(); ++r) {
      for (int ci = 1; ci <= rs.dim().d; ++ci) {
        int c = rs.v().entry(ci);
        std::cout << (ci > 1 ? "\t" : "") << patch_entry_text(pm.at(r, c));
      }
      std::cout << "\n";
    }
  });
  return 0;
}

template <class F>
int run_f_tau(const F& f, const JobSpec& job) {
  RootSet rs(parse_isotropic(job.d, job.v_str, "--v"));
  IsotropicIndex tau = parse_isotropic(job.d, job.tau_str, "--tau");
  auto p = f_tau(f, rs, tau);
  TermOrder ord = order_of(job, rs);
  emit(job, poly_to_json(f, p, rs, ord), [&] {
    std::cout << poly_text(f, p, rs, ord, letters_available(rs)) << "\n";
  });
  return 0;
}

int cmd_pfaffian(const JobSpec& job, const std::string& matrix_file,
                 int expand_row) {
  if (!matrix_file.empty()) {
    std::ifstream in(matrix_file);
    if (!in) throw std::invalid_argument("cannot open " + matrix_file);
    json j;
    in >> j;
    std::vector<std::vector<BigRat>> rows;
    for (const auto& jr : j) {
      std::vector<BigRat> row;
      for (const auto& e : jr)
        row.emplace_back(e.is_string() ? BigRat(e.get<std::string>())
                                       : BigRat(e.get<long long>()));
      rows.push_back(std::move(row));
    }
    RatField f;
    auto a = AntiSkewMatrix<RatField>::from_rows(f, std::move(rows));
    BigRat q = pfaffian(f, a, expand_row);
    json out = {{"n", a.half()}, {"pfaffian", q.str()}};
    emit(job, out, [&] { std::cout << q.str() << "\n"; });
    return 0;
  }
  return with_field(job, [&](auto f) { return run_f_tau(f, job); });
}

template <class F>
int run_generators(const F& f, const JobSpec& job) {
  RootSet rs(parse_isotropic(job.d, job.v_str, "--v"));
  IsotropicIndex w = parse_isotropic(job.d, job.w_str, "--w");
  auto gens = generators(f, rs, w);
  TermOrder ord = order_of(job, rs);
  json j = json::array();
  for (const auto& [tau, p] : gens)
    j.push_back({{"tau", index_to_json(tau.tuple())},
                 {"f_tau", poly_to_json(f, p, rs, ord)}});
  emit(job, j, [&] {
    for (const auto& [tau, p] : gens) {
      for (int i = 1; i <= tau.size(); ++i)
        std::cout << (i > 1 ? "," : "") << tau.entry(i);
      std::cout << ": " << poly_text(f, p, rs, ord, letters_available(rs))
                << "\n";
    }
  });
  return 0;
}

template <class F>
int run_groebner(const F& f, const JobSpec& job, bool initial_only,
                 bool complex_out) {
  RootSet rs(parse_isotropic(job.d, job.v_str, "--v"));
  IsotropicIndex w = parse_isotropic(job.d, job.w_str, "--w");
  TermOrder ord = order_of(job, rs);
  std::vector<Poly<F>> polys;
  for (auto& [tau, p] : generators(f, rs, w)) polys.push_back(p);
  auto gb = buchberger(f, polys, ord, limits_of(job));
  if (!initial_only && !complex_out) {
    json j = json::array();
    for (const auto& p : gb) j.push_back(poly_to_json(f, p, rs, ord));
    emit(job, j, [&] {
      for (const auto& p : gb)
        std::cout << poly_text(f, p, rs, ord, letters_available(rs)) << "\n";
    });
    return 0;
  }
  auto ingens = initial_ideal(gb, ord);
  if (initial_only) {
    json j = json::array();
    for (const Monomial& m : ingens) j.push_back(monomial_to_json(m));
    emit(
        job, j,
        [&] {
          for (const Monomial& m : ingens)
            std::cout << monomial_text(m, rs, letters_available(rs)) << "\n";
        },
        [&] {
          for (const Monomial& m : ingens)
            std::cout << monomial_text(m, rs, letters_available(rs)) << "\n";
        });
    return 0;
  }
  // Stanley-Reisner output.
  SimplicialComplex sc =
      SimplicialComplex::from_initial_ideal(rs.or_roots().size(), ingens);
  auto facets = sc.maximal_faces(make_order1(rs).by_rank);
  auto fvec = sc.f_vector();
  json j = {{"facets", complex_faces_to_json(rs, facets)},
            {"f_vector", fvec}};
  emit(
      job, j,
      [&] {
        std::cout << "f-vector:";
        for (long x : fvec) std::cout << " " << x;
        std::cout << "\nfacets (" << facets.size() << "):\n";
        for (const auto& face : facets) {
          for (std::size_t k = 0; k < face.size(); ++k) {
            const Root& a = rs.or_roots()[face[k]];
            std::cout << (k ? " " : "") << "(" << a.row << "," << a.col
                      << ")";
          }
          std::cout << "\n";
        }
      },
      [&] {
        for (std::size_t k = 0; k < fvec.size(); ++k)
          std::cout << k << "," << fvec[k] << "\n";
      });
  return 0;
}

int cmd_newform(const JobSpec& job, const std::string& chain_str, int cutoff,
                const std::string& choice_str, bool all) {
  RootSet rs(parse_isotropic(job.d, job.v_str, "--v"));
  VChain e = VChain::make(rs, parse_root_list(chain_str));
  if (all) {
    json j = json::array();
    for (int c = 1; c <= e.size(); ++c) {
      auto forms = all_new_forms(rs, e, c);
      for (const auto& nf : forms)
        j.push_back({{"cutoff", c}, {"form", newform_to_json(nf)}});
    }
    emit(job, j, [&] { std::cout << j.dump(2) << "\n"; });
    return 0;
  }
  std::optional<Root> choice;
  if (!choice_str.empty()) {
    auto pr = parse_int_list(choice_str);
    if (pr.size() != 2)
      throw std::invalid_argument("--choice expects r,c");
    choice = Root{pr[0], pr[1]};
  }
  NewForm nf = new_form(rs, e, cutoff, choice);
  emit(job, newform_to_json(nf), [&] {
    if (!nf.defined) {
      std::cout << "undefined\n";
      return;
    }
    for (int i = 1; i <= nf.chain.size(); ++i)
      std::cout << (i > 1 ? " > " : "") << "(" << nf.chain.at(i).row << ","
                << nf.chain.at(i).col << ")";
    std::cout << "\n";
  });
  return 0;
}

// Flat key=value config support: pull --config FILE out of the raw argument
// list and append "--key value" for every config pair the active subcommand
// understands and the command line did not already set.
void inject_config_defaults(const CLI::App& app,
                            std::vector<std::string>& args) {
  std::string path;
  std::string subname;
  for (std::size_t i = 0; i < args.size();) {
    if (subname.empty() && !args[i].empty() && args[i][0] != '-') {
      subname = args[i];
      ++i;
    } else if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i),
                 args.begin() + static_cast<long>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  if (path.empty()) return;
  const CLI::App* sub = nullptr;
  const std::function<bool(const CLI::App*)> by_name =
      [&](const CLI::App* a) { return a->get_name() == subname; };
  for (const CLI::App* s : app.get_subcommands(by_name)) sub = s;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    const std::string flag = "--" + key;
    if (sub != nullptr && sub->get_option_no_throw(flag) == nullptr)
      continue;  // not an option of this subcommand
    bool present = false;
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
    if (!present) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
}

int cmd_verify(const JobSpec& job, const std::string& suite) {
  VerifyOptions opts;
  opts.seed = job.seed;
  opts.workers = job.workers;
  if (opts.workers == 0) {
    if (const char* env = std::getenv("OTC_WORKERS"))
      opts.workers = std::atoi(env);
  }
  SuiteResult sr = run_suite(suite, opts);
  json j = json::array();
  for (const CheckResult& c : sr.checks) {
    j.push_back({{"id", c.id},
                 {"name", c.name},
                 {"pass", c.pass},
                 {"detail", c.detail}});
    std::cerr << "# " << (c.id.empty() ? c.name : c.id) << " took "
              << c.seconds << "s\n";
  }
  emit(
      job, j,
      [&] {
        for (const CheckResult& c : sr.checks)
          std::cout << (c.pass ? "[PASS] " : "[FAIL] ")
                    << (c.id.empty() ? std::string("--") : c.id) << " "
                    << c.name << ": " << c.detail << "\n";
      },
      [&] {
        for (const CheckResult& c : sr.checks)
          std::cout << c.id << "," << c.name << "," << (c.pass ? 1 : 0)
                    << "\n";
      });
  return sr.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian tangent-cone ideals of orthogonal-Grassmannian "
               "Schubert varieties: generators, Groebner bases, initial "
               "ideals, Stanley-Reisner complexes, v-chain new forms"};
  app.require_subcommand(1);

  JobSpec job;
  std::string matrix_file, chain_str, choice_str, suite, config_file;
  int cutoff = 1, expand_row = 0;
  bool all_forms = false;

  const auto add_common = [&](CLI::App* sub, bool need_d) {
    sub->add_option("--config", config_file,
                    "key=value file with defaults (flags win)");
    auto* d = sub->add_option("--d", job.d, "half-dimension d");
    d->check(CLI::PositiveNumber);
    if (need_d) d->required();
    sub->add_option("--order", job.order, "term order: hlex, rlex, diagproj")
        ->default_val("hlex");
    sub->add_option("--field", job.field, "coefficient field: rat or fp:<p>")
        ->default_val("rat");
    sub->add_option("--max-degree", job.max_degree,
                    "degree cap for the Groebner engine (0 = none)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--max-terms", job.max_terms, "term-count cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-basis", job.max_basis, "basis-size cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", job.seed, "seed for randomized suites");
    sub->add_option("--out", job.out, "output format: table, json, csv")
        ->default_val("table");
    sub->add_option("--workers", job.workers,
                    "worker threads (0 = all cores; env OTC_WORKERS)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* enum_id = app.add_subcommand("enum-id", "list I(d)");
  add_common(enum_id, true);

  auto* patch = app.add_subcommand("patch-matrix", "print the generic patch matrix");
  add_common(patch, true);
  patch->add_option("--v", job.v_str, "isotropic index v")->required();

  auto* pfaff = app.add_subcommand(
      "pfaffian", "f_tau for --tau, or the Pfaffian of a JSON matrix");
  add_common(pfaff, false);
  pfaff->add_option("--v", job.v_str, "isotropic index v");
  pfaff->add_option("--tau", job.tau_str, "isotropic index tau");
  pfaff->add_option("--matrix", matrix_file,
                    "JSON file with a 2n x 2n anti-skew matrix");
  pfaff->add_option("--expand-row", expand_row,
                    "expansion row m (1-based; 0 = default)");

  auto* gens = app.add_subcommand("generators", "tangent-cone ideal generators");
  add_common(gens, true);
  gens->add_option("--v", job.v_str, "isotropic index v")->required();
  gens->add_option("--w", job.w_str, "isotropic index w")->required();

  auto* groeb = app.add_subcommand("groebner", "reduced Groebner basis");
  add_common(groeb, true);
  groeb->add_option("--v", job.v_str, "isotropic index v")->required();
  groeb->add_option("--w", job.w_str, "isotropic index w")->required();

  auto* initial = app.add_subcommand("initial-ideal",
                                     "minimal monomial generators of in(I)");
  add_common(initial, true);
  initial->add_option("--v", job.v_str, "isotropic index v")->required();
  initial->add_option("--w", job.w_str, "isotropic index w")->required();

  auto* cplx = app.add_subcommand("complex",
                                  "Stanley-Reisner complex of in(I)");
  add_common(cplx, true);
  cplx->add_option("--v", job.v_str, "isotropic index v")->required();
  cplx->add_option("--w", job.w_str, "isotropic index w")->required();

  auto* nform = app.add_subcommand("newform", "new form of a v-chain");
  add_common(nform, true);
  nform->add_option("--v", job.v_str, "isotropic index v")->required();
  nform->add_option("--chain", chain_str, "chain as r,c;r,c;...")->required();
  nform->add_option("--cutoff", cutoff, "cut-off index (1-based)");
  nform->add_option("--choice", choice_str,
                    "diagonal point r,c for the even case");
  nform->add_flag("--all", all_forms, "emit all new forms over all cut-offs");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, false);
  std::string suites_help = "suite: ";
  for (const auto& s : verify_suite_names()) suites_help += s + " ";
  verify->add_option("suite", suite, suites_help)->required();

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    inject_config_defaults(app, args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*enum_id) return cmd_enum_id(job);
    if (*patch) return cmd_patch_matrix(job);
    if (*pfaff) {
      if (matrix_file.empty() && (job.d == 0 || job.v_str.empty() ||
                                  job.tau_str.empty()))
        throw std::invalid_argument(
            "pfaffian needs either --matrix or --d/--v/--tau");
      return cmd_pfaffian(job, matrix_file, expand_row);
    }
    if (*gens)
      return with_field(job, [&](auto f) { return run_generators(f, job); });
    if (*groeb)
      return with_field(job,
                        [&](auto f) { return run_groebner(f, job, false, false); });
    if (*initial)
      return with_field(job,
                        [&](auto f) { return run_groebner(f, job, true, false); });
    if (*cplx)
      return with_field(job,
                        [&](auto f) { return run_groebner(f, job, false, true); });
    if (*nform) return cmd_newform(job, chain_str, cutoff, choice_str, all_forms);
    if (*verify) return cmd_verify(job, suite);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const NonSquarefreeError& e) {
    std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
