// Command line front end: subcommands over the JSON encodings, with exact
// arithmetic throughout. Exit 0 on success, 1 on bad input, 2 when a
// verification subcommand finds a violation.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stdmon/characters.hpp"
#include "stdmon/flags.hpp"
#include "stdmon/json_io.hpp"
#include "stdmon/straightening.hpp"

using namespace stdmon;

namespace {

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw error(std::string("malformed json: ") + e.what());
  }
}

// Payload comes from --input when given, otherwise from stdin.
json read_payload(const std::string& inline_input) {
  if (!inline_input.empty()) return parse_json_text(inline_input);
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  if (text.empty()) throw error("no input: pass --input or pipe json on stdin");
  return parse_json_text(text);
}

// Tabloids on the command line may omit "n"; the smallest workable n is
// filled in, never below min_n.
Tabloid tabloid_payload(const json& j, int min_n = 2) {
  if (!j.is_object() || !j.contains("columns")) throw error("tabloid json needs columns");
  if (j.contains("n")) return tabloid_from_json(j);
  auto cols = j.at("columns").get<std::vector<std::vector<int>>>();
  int n = std::max(2, min_n);
  for (const auto& col : cols) {
    n = std::max(n, (int)col.size());
    for (int v : col) n = std::max(n, v);
  }
  json filled = j;
  filled["n"] = n;
  return tabloid_from_json(filled);
}

QChain chain_arg(const std::string& chain_flag, const json* payload) {
  if (!chain_flag.empty()) return chain_from_json(parse_json_text(chain_flag));
  if (payload) {
    if (payload->is_object() && payload->contains("chain"))
      return chain_from_json(payload->at("chain"));
    return chain_from_json(*payload);
  }
  throw error("chain required: pass --chain or include it in the input");
}

std::uint64_t resolve_seed(bool given, std::uint64_t value) {
  if (given) return value;
  const char* env = std::getenv("STDMON_SEED");
  if (!env || !*env) throw error("seed required: pass --seed or set STDMON_SEED");
  return std::strtoull(env, nullptr, 10);
}

RationalMatrix random_rational_matrix(Rng& rng, int n) {
  RationalMatrix f(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) f.set(i, j, Rat(rng.uniform_int(-9, 9), rng.uniform_int(1, 4)));
  return f;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

struct Options {
  std::string input;
  std::string chain;
  std::vector<int> shape;
  std::vector<int> q;
  std::string kind = "tableaux";
  std::string format = "text";
  std::string t = "1/4";
  bool with_paths = false;
  bool at_ones = false;
  int i = 0;
  int j = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

Partition shape_arg(const Options& opt) {
  if (opt.shape.empty()) throw error("--shape required");
  return Partition((int)opt.shape.size(), opt.shape);
}

int run_scan(const Options& opt) {
  Tabloid t = tabloid_payload(read_payload(opt.input));
  emit(scan_to_json(scan(t), opt.with_paths));
  return 0;
}

int run_key(const Options& opt) {
  json payload;
  const json* pp = nullptr;
  if (opt.chain.empty()) {
    payload = read_payload(opt.input);
    pp = &payload;
  }
  QChain pi = chain_arg(opt.chain, pp);
  Tabloid key = opt.shape.empty() ? key_of(pi) : lambda_key(shape_arg(opt), pi);
  emit(tabloid_to_json(key));
  return 0;
}

int run_demtest(const Options& opt) {
  json payload = read_payload(opt.input);
  json tj = payload.is_object() && payload.contains("tabloid") ? payload.at("tabloid") : payload;
  QChain pi = chain_arg(opt.chain, &payload);
  Tabloid t = tabloid_payload(tj, pi.n());
  ScanResult res = scan(t);
  bool dem = dominance_leq(res.scan_tableau, lambda_key(t.shape(), pi));
  emit(json{{"demazure", dem}, {"scan", res.scan_tableau.columns()}});
  return 0;
}

int run_enum(const Options& opt) {
  Partition sh = shape_arg(opt);
  std::vector<Tabloid> items;
  if (opt.kind == "tabloids") {
    items = enumerate_tabloids(sh);
  } else if (opt.kind == "tableaux") {
    items = enumerate_tableaux(sh);
  } else {
    json payload;
    const json* pp = nullptr;
    if (opt.chain.empty()) {
      payload = read_payload(opt.input);
      pp = &payload;
    }
    items = enumerate_demazure(sh, chain_arg(opt.chain, pp));
  }
  json cols = json::array();
  for (const auto& t : items) cols.push_back(t.columns());
  emit(json{{"count", items.size()}, {"items", std::move(cols)}});
  return 0;
}

int run_straighten(const Options& opt) {
  LinearCombination combo = combo_from_json(read_payload(opt.input));
  emit(combo_to_json(straighten(combo)));
  return 0;
}

int run_reduce(const Options& opt) {
  json payload = read_payload(opt.input);
  json cj = payload.is_object() && payload.contains("combo") ? payload.at("combo") : payload;
  LinearCombination combo = combo_from_json(cj);
  QChain pi = chain_arg(opt.chain, &payload);
  emit(combo_to_json(reduce_mod(combo, pi)));
  return 0;
}

int run_keypoly(const Options& opt) {
  Partition sh = shape_arg(opt);
  json payload;
  const json* pp = nullptr;
  if (opt.chain.empty()) {
    payload = read_payload(opt.input);
    pp = &payload;
  }
  Polynomial p = key_polynomial(sh, chain_arg(opt.chain, pp));
  if (opt.at_ones)
    std::cout << p.at_ones().str() << "\n";
  else if (opt.format == "json")
    emit(polynomial_to_json(p));
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

int run_cell_of(const Options& opt) {
  RationalMatrix f = matrix_from_json(read_payload(opt.input));
  if (opt.q.empty()) throw error("--q required");
  emit(chain_to_json(cell_of(f, QSet(f.rows(), opt.q))));
  return 0;
}

int run_sample_cell(const Options& opt) {
  json payload;
  const json* pp = nullptr;
  if (opt.chain.empty()) {
    payload = read_payload(opt.input);
    pp = &payload;
  }
  QChain pi = chain_arg(opt.chain, pp);
  emit(matrix_to_json(sample_cell(pi, resolve_seed(opt.seed_given, opt.seed))));
  return 0;
}

int run_gamma(const Options& opt) {
  json payload;
  const json* pp = nullptr;
  if (opt.chain.empty()) {
    payload = read_payload(opt.input);
    pp = &payload;
  }
  QChain pi = chain_arg(opt.chain, pp);
  emit(matrix_to_json(gamma_path(pi, opt.i, opt.j, parse_rational(opt.t))));
  return 0;
}

int run_verify_independence(const Options& opt) {
  Partition sh = shape_arg(opt);
  json payload;
  const json* pp = nullptr;
  if (opt.chain.empty()) {
    payload = read_payload(opt.input);
    pp = &payload;
  }
  QChain pi = chain_arg(opt.chain, pp);
  std::uint64_t seed = resolve_seed(opt.seed_given, opt.seed);
  std::vector<Tabloid> basis = enumerate_demazure(sh, pi);
  int samples = opt.samples > 0 ? opt.samples : 2 * (int)basis.size();
  RationalMatrix m(samples, (int)basis.size());
  for (int s = 0; s < samples; ++s) {
    MonomialEvaluator ev(sample_cell(pi, seed + s));
    for (size_t b = 0; b < basis.size(); ++b) m.set(s + 1, (int)b + 1, ev.eval(basis[b]));
  }
  int r = rank(m);
  bool ok = r == (int)basis.size();
  emit(json{{"basis", basis.size()}, {"samples", samples}, {"rank", r}, {"ok", ok}});
  return ok ? 0 : 2;
}

int run_verify_master(const Options& opt) {
  json payload = read_payload(opt.input);
  if (!payload.is_object() || !payload.contains("tabloid") || !payload.contains("region"))
    throw error("verify-master needs {tabloid, region}");
  Tabloid t = tabloid_payload(payload.at("tabloid"));
  Region mu = region_from_json(payload.at("region"));
  std::uint64_t seed = resolve_seed(opt.seed_given, opt.seed);
  int samples = opt.samples > 0 ? opt.samples : 20;
  Rng rng(seed);
  bool ok = true;
  int sign = 0;
  for (int s = 0; s < samples && ok; ++s) {
    MasterIdentityResult res = verify_master_identity(t, mu, random_rational_matrix(rng, t.n()));
    if (!res.holds) ok = false;
    if (res.sign_determined) {
      if (sign == 0) sign = res.resolved_sign;
      if (sign != res.resolved_sign) ok = false;
    }
  }
  emit(json{{"holds", ok}, {"samples", samples}, {"sign", sign}});
  return ok ? 0 : 2;
}

int run_verify_vanishing(const Options& opt) {
  Partition sh = shape_arg(opt);
  json payload;
  const json* pp = nullptr;
  if (opt.chain.empty()) {
    payload = read_payload(opt.input);
    pp = &payload;
  }
  QChain pi = chain_arg(opt.chain, pp);
  std::uint64_t seed = resolve_seed(opt.seed_given, opt.seed);
  int samples = opt.samples > 0 ? opt.samples : 50;
  Tabloid bound = lambda_key(sh, pi);
  bool key_nonzero = true;
  for (int s = 0; s < samples; ++s) {
    MonomialEvaluator ev(sample_cell(pi, seed + s));
    if (ev.eval(bound) == 0) key_nonzero = false;
  }
  int checked = 0;
  bool vanish = true;
  for (int s = 0; s < samples; ++s) {
    MonomialEvaluator ev(sample_schubert(pi, seed + s));
    for (const Tabloid& t : enumerate_tabloids(sh)) {
      if (dominance_leq(t, bound)) continue;
      ++checked;
      if (ev.eval(t) != 0) vanish = false;
    }
  }
  bool ok = key_nonzero && vanish;
  emit(json{{"checked", checked}, {"key_nonzero", key_nonzero}, {"ok", ok}, {"samples", samples}});
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"standard monomial toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "inline json payload (default: stdin)");
  };
  auto add_chain = [&](CLI::App* sub) {
    sub->add_option("--chain", opt.chain, "chain as inline json");
  };
  auto add_shape = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--shape", opt.shape, "partition parts, comma separated")
                  ->delimiter(',');
    if (required) o->required();
  };
  CLI::Option* seed_opts[4] = {};
  auto add_seed = [&](CLI::App* sub, int slot) {
    seed_opts[slot] = sub->add_option("--seed", opt.seed, "rng seed (or STDMON_SEED)");
  };
  auto add_samples = [&](CLI::App* sub) {
    sub->add_option("--samples", opt.samples, "number of sampled matrices");
  };

  auto* scan_cmd = app.add_subcommand("scan", "scanning tableau of a tabloid");
  add_input(scan_cmd);
  scan_cmd->add_flag("--paths", opt.with_paths, "include scanning paths");

  auto* key_cmd = app.add_subcommand("key", "key of a chain, or its lambda-key for a shape");
  add_input(key_cmd);
  add_chain(key_cmd);
  add_shape(key_cmd, false);

  auto* demtest_cmd = app.add_subcommand("demtest", "test demazure membership");
  add_input(demtest_cmd);
  add_chain(demtest_cmd);

  auto* enum_cmd = app.add_subcommand("enum", "enumerate fillings of a shape");
  add_input(enum_cmd);
  add_chain(enum_cmd);
  add_shape(enum_cmd, true);
  enum_cmd->add_option("--kind", opt.kind, "tabloids, tableaux, or demazure")
      ->check(CLI::IsMember({"tabloids", "tableaux", "demazure"}));

  auto* straighten_cmd = app.add_subcommand("straighten", "rewrite into the tableau basis");
  add_input(straighten_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "rewrite into the demazure basis");
  add_input(reduce_cmd);
  add_chain(reduce_cmd);

  auto* keypoly_cmd = app.add_subcommand("keypoly", "key polynomial of a shape and chain");
  add_input(keypoly_cmd);
  add_chain(keypoly_cmd);
  add_shape(keypoly_cmd, true);
  keypoly_cmd->add_flag("--at-ones", opt.at_ones, "print the dimension instead");
  keypoly_cmd->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cell_cmd = app.add_subcommand("cell-of", "bruhat cell of an invertible matrix");
  add_input(cell_cmd);
  cell_cmd->add_option("--q", opt.q, "carrel boundaries, comma separated")
      ->delimiter(',')
      ->required();

  auto* sample_cmd = app.add_subcommand("sample-cell", "random matrix in a cell");
  add_input(sample_cmd);
  add_chain(sample_cmd);
  add_seed(sample_cmd, 0);

  auto* gamma_cmd = app.add_subcommand("gamma", "degeneration path matrix");
  add_input(gamma_cmd);
  add_chain(gamma_cmd);
  gamma_cmd->add_option("--i", opt.i, "reflection index i")->required();
  gamma_cmd->add_option("--j", opt.j, "reflection index j")->required();
  gamma_cmd->add_option("--t", opt.t, "path parameter in [0, 1/2)");

  auto* indep_cmd = app.add_subcommand("verify-independence",
                                       "rank of the demazure evaluation matrix at cell samples");
  add_input(indep_cmd);
  add_chain(indep_cmd);
  add_shape(indep_cmd, true);
  add_samples(indep_cmd);
  add_seed(indep_cmd, 1);

  auto* master_cmd = app.add_subcommand("verify-master",
                                        "shuffle identity for a tabloid and region");
  add_input(master_cmd);
  add_samples(master_cmd);
  add_seed(master_cmd, 2);

  auto* vanish_cmd = app.add_subcommand("verify-vanishing",
                                        "key monomial nonzero on its cell, undominated "
                                        "monomials zero on the schubert variety");
  add_input(vanish_cmd);
  add_chain(vanish_cmd);
  add_shape(vanish_cmd, true);
  add_samples(vanish_cmd);
  add_seed(vanish_cmd, 3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  opt.seed_given = false;
  for (CLI::Option* o : seed_opts)
    if (o && o->count() > 0) opt.seed_given = true;

  try {
    if (scan_cmd->parsed()) return run_scan(opt);
    if (key_cmd->parsed()) return run_key(opt);
    if (demtest_cmd->parsed()) return run_demtest(opt);
    if (enum_cmd->parsed()) return run_enum(opt);
    if (straighten_cmd->parsed()) return run_straighten(opt);
    if (reduce_cmd->parsed()) return run_reduce(opt);
    if (keypoly_cmd->parsed()) return run_keypoly(opt);
    if (cell_cmd->parsed()) return run_cell_of(opt);
    if (sample_cmd->parsed()) return run_sample_cell(opt);
    if (gamma_cmd->parsed()) return run_gamma(opt);
    if (indep_cmd->parsed()) return run_verify_independence(opt);
    if (master_cmd->parsed()) return run_verify_master(opt);
    if (vanish_cmd->parsed()) return run_verify_vanishing(opt);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
