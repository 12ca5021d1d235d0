// Command-line front end: dumps the combinatorial data (patterns, triangles,
// minors), generates crystal graphs, and runs the coincidence checks.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dncrystal/coincidence.hpp"
#include "dncrystal/crystal.hpp"
#include "dncrystal/minors.hpp"
#include "dncrystal/patterns.hpp"
#include "dncrystal/weyl.hpp"

namespace {

using json = nlohmann::json;  // object keys serialize sorted

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInvalidInput = 2;

dncrystal::DominantWeight parse_lambda(const std::string& text, int n) {
  std::vector<long long> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed weight entry: " + item);
    coeffs.push_back(v);
  }
  if (static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " weight entries");
  return dncrystal::DominantWeight(coeffs);
}

// Single atomic write: stage next to the target, then rename over it.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output path: " + tmp);
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::invalid_argument("cannot move output into place: " + path);
}

std::size_t node_budget_from_env() {
  if (const char* v = std::getenv("DNCRYSTAL_NODE_BUDGET")) {
    long long b = std::stoll(v);
    if (b > 0) return static_cast<std::size_t>(b);
  }
  return dncrystal::kDefaultNodeBudget;
}

int run_patterns(int n, const std::string& out_path) {
  json doc;
  doc["n"] = n;
  doc["patterns"] = json::array();
  doc["F"] = json::array();
  for (const auto& mu : dncrystal::enumerate_patterns(n)) {
    doc["patterns"].push_back(mu);
    doc["F"].push_back(dncrystal::map_F(mu, n).s);
  }
  json xi = json::object(), xi_prime = json::object();
  for (int k = 1; k <= n; ++k) {
    json fs = json::array(), gs = json::array();
    for (const auto& f : dncrystal::xi_set(n, k)) fs.push_back(dncrystal::to_string(f));
    for (const auto& g : dncrystal::xi_prime_set(n, k)) gs.push_back(dncrystal::to_string(g));
    xi[std::to_string(k)] = fs;
    xi_prime[std::to_string(k)] = gs;
  }
  doc["xi"] = xi;
  doc["xi_prime"] = xi_prime;
  emit(out_path, doc.dump(2) + "\n");
  return kExitOk;
}

int run_triangles(int n, const std::string& out_path) {
  json doc;
  doc["n"] = n;
  doc["triangles"] = json::array();
  for (const auto& t : dncrystal::enumerate_triangles(n)) {
    dncrystal::Monomial m = dncrystal::monomial(t, n);
    json entry;
    entry["rows"] = dncrystal::to_string(t);
    entry["label"] = dncrystal::to_string(dncrystal::label(t));
    entry["monomial"] = dncrystal::to_string(m);
    entry["bar_monomial"] = dncrystal::to_string(dncrystal::involution_bar(m, n));
    doc["triangles"].push_back(entry);
  }
  emit(out_path, doc.dump(2) + "\n");
  return kExitOk;
}

int run_minors(int n, int k, bool tropical, const std::string& out_path) {
  dncrystal::LaurentPoly upper = dncrystal::minor_upper(n, k);
  dncrystal::LaurentPoly lower = dncrystal::minor_lower(n, k);
  std::ostringstream os;
  if (tropical) {
    os << "upper: " << dncrystal::to_string(dncrystal::tropicalize(upper, n)) << "\n";
    os << "lower: " << dncrystal::to_string(dncrystal::tropicalize(lower, n)) << "\n";
  } else {
    os << "upper: " << dncrystal::to_string(upper) << "\n";
    os << "lower: " << dncrystal::to_string(lower) << "\n";
  }
  emit(out_path, os.str());
  return kExitOk;
}

int run_enumerate(int n, const dncrystal::DominantWeight& lambda, const std::string& format,
                  const std::string& out_path) {
  dncrystal::CrystalGraph g = dncrystal::generate(n, lambda, node_budget_from_env());
  std::string content;
  if (format == "json")
    content = dncrystal::to_json(g) + "\n";
  else if (format == "dot")
    content = dncrystal::to_dot(g);
  else
    content = dncrystal::to_text(g);
  emit(out_path, content);
  return kExitOk;
}

int run_check(int n, const dncrystal::DominantWeight& lambda, const std::string& out_path) {
  dncrystal::CoincidenceReport rep =
      dncrystal::check_coincidence(n, lambda, node_budget_from_env());
  emit(out_path, dncrystal::to_json(rep) + "\n");
  return rep.success() ? kExitOk : kExitVerificationFailure;
}

int run_dims(int n, const dncrystal::DominantWeight& lambda, const std::string& out_path) {
  json doc;
  doc["n"] = n;
  doc["lambda"] = lambda.coeffs;
  doc["dim"] = dncrystal::weyl_dim(n, lambda);
  emit(out_path, doc.dump(2) + "\n");
  return kExitOk;
}

int run_lemma54(int n, const std::string& out_path) {
  dncrystal::SpinIdentityReport rep = dncrystal::check_spin_identities(n);
  json doc;
  doc["n"] = n;
  doc["ok"] = rep.ok;
  doc["failures"] = json::array();
  for (const auto& mu : rep.failures) doc["failures"].push_back(mu);
  emit(out_path, doc.dump(2) + "\n");
  return rep.ok ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type D_n crystal bases: polyhedral and tropical-minor realizations"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  bool tropical = false;
  std::string lambda_text, out_path, format = "text";

  auto add_n = [&n](CLI::App* cmd) {
    cmd->add_option("--n", n, "rank (>= 3)")->required();
  };
  auto add_out = [&out_path](CLI::App* cmd) {
    cmd->add_option("--output,-o", out_path, "output path (default stdout)");
  };

  CLI::App* patterns = app.add_subcommand("patterns", "dump admissible patterns, F images, inequality systems");
  add_n(patterns);
  add_out(patterns);

  CLI::App* triangles = app.add_subcommand("triangles", "dump triangles, labels, monomials");
  add_n(triangles);
  add_out(triangles);

  CLI::App* minors = app.add_subcommand("minors", "print a minor pair in fraction notation");
  add_n(minors);
  minors->add_option("--k", k, "minor index in [1, n]")->required();
  minors->add_flag("--tropical", tropical, "print the ultra-discretization instead");
  add_out(minors);

  CLI::App* enumerate = app.add_subcommand("enumerate", "generate the crystal graph of B(lambda)");
  add_n(enumerate);
  enumerate->add_option("--lambda", lambda_text, "comma-separated lambda_1,...,lambda_n")->required();
  enumerate->add_option("--format", format, "json | dot | text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  add_out(enumerate);

  CLI::App* check = app.add_subcommand("check", "exhaustive coincidence check for one weight");
  add_n(check);
  check->add_option("--lambda", lambda_text, "comma-separated lambda_1,...,lambda_n")->required();
  add_out(check);

  CLI::App* dims = app.add_subcommand("dims", "Weyl dimension of V(lambda)");
  add_n(dims);
  dims->add_option("--lambda", lambda_text, "comma-separated lambda_1,...,lambda_n")->required();
  add_out(dims);

  CLI::App* lemma54 = app.add_subcommand("lemma54", "spin monomial / linear form identities");
  add_n(lemma54);
  add_out(lemma54);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (n < 3) throw std::invalid_argument("rank must be at least 3");
    if (app.got_subcommand(patterns)) return run_patterns(n, out_path);
    if (app.got_subcommand(triangles)) return run_triangles(n, out_path);
    if (app.got_subcommand(minors)) return run_minors(n, k, tropical, out_path);
    if (app.got_subcommand(enumerate))
      return run_enumerate(n, parse_lambda(lambda_text, n), format, out_path);
    if (app.got_subcommand(check)) return run_check(n, parse_lambda(lambda_text, n), out_path);
    if (app.got_subcommand(dims)) return run_dims(n, parse_lambda(lambda_text, n), out_path);
    if (app.got_subcommand(lemma54)) return run_lemma54(n, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitInvalidInput;
}
