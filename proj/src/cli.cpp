#include "compound/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "compound/identity.hpp"
#include "compound/oracle.hpp"
#include "compound/search.hpp"
#include "compound/semigroup.hpp"
#include "compound/sylvester.hpp"
#include "compound/weierstrass.hpp"

namespace compound::cli {

namespace {

using nlohmann::json;

json json_int(const Int& v) {
  static const Int kSafe = (Int(1) << 53) - 1;
  if (v <= kSafe && v >= -kSafe) return json(v.get_si());
  return json(v.get_str());
}

json json_ints(const std::vector<Int>& vs) {
  json a = json::array();
  for (const Int& v : vs) a.push_back(json_int(v));
  return a;
}

Int parse_entry(const std::string& token) {
  Int v;
  if (mpz_set_str(v.get_mpz_t(), token.c_str(), 10) != 0) {
    throw ValidationError("not an integer: '" + token + "'");
  }
  if (v < 1) throw ValidationError("entries must be positive: " + token);
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw ValidationError("entry exceeds 64 bits: " + token);
  }
  return v;
}

std::vector<std::string> split(const std::string& csv) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) out.push_back(token);
  return out;
}

Tuple parse_tuple(const std::string& csv) {
  std::vector<Int> entries;
  if (!csv.empty()) {
    for (const std::string& token : split(csv)) {
      entries.push_back(parse_entry(token));
    }
  }
  return Tuple(std::move(entries));
}

std::vector<Rat> parse_rationals(const std::string& csv) {
  std::vector<Rat> out;
  for (const std::string& token : split(csv)) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), token.c_str(), 10) != 0) {
      throw ValidationError("not a rational: '" + token + "'");
    }
    if (r.get_den() == 0) {
      throw ValidationError("zero denominator: '" + token + "'");
    }
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

struct GeoParams {
  Int a, b;
  unsigned long k = 0;
};

GeoParams parse_geo(const std::string& csv) {
  auto tokens = split(csv);
  if (tokens.size() != 3) {
    throw ValidationError("--geo expects a,b,k");
  }
  GeoParams g;
  g.a = parse_entry(tokens[0]);
  g.b = parse_entry(tokens[1]);
  Int k;
  if (mpz_set_str(k.get_mpz_t(), tokens[2].c_str(), 10) != 0 || k < 0 ||
      !k.fits_ulong_p()) {
    throw ValidationError("bad tuple length: '" + tokens[2] + "'");
  }
  g.k = k.get_ui();
  return g;
}

void emit(const json& j, const std::string& format, std::ostream& out) {
  if (format == "text") {
    for (auto it = j.begin(); it != j.end(); ++it) {
      out << it.key() << ": " << it.value().dump() << '\n';
    }
  } else {
    out << j.dump(2) << '\n';
  }
}

// Tabulated f for the identity subcommand: whitespace-separated integers,
// f(n) = n-th value (0-based).
IntFn table_fn(const std::string& path) {
  auto table = std::make_shared<std::vector<Int>>();
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open table file: " + path);
  std::string token;
  while (in >> token) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), token.c_str(), 10) != 0) {
      throw ValidationError("bad table entry: '" + token + "'");
    }
    table->push_back(v);
  }
  return [table, path](const Int& n) -> Int {
    if (n < 0 || n >= Int(static_cast<unsigned long>(table->size()))) {
      throw ValidationError("table " + path + " has no entry for argument " +
                            n.get_str());
    }
    return (*table)[n.get_ui()];
  };
}

struct Options {
  std::string a_csv, b_csv, geo_csv, c_csv;
  std::string format = "json";
  std::uint64_t budget_cap = Budget{}.cap;

  Budget budget() const { return Budget{budget_cap}; }
  SuitablePair pair() const {
    return SuitablePair(parse_tuple(a_csv), parse_tuple(b_csv));
  }
  SuitablePair geo_pair() const {
    GeoParams g = parse_geo(geo_csv);
    std::vector<Int> av(g.k, g.a), bv(g.k, g.b);
    return SuitablePair(Tuple(std::move(av)), Tuple(std::move(bv)));
  }
};

void add_common(CLI::App* cmd, Options& opt, bool with_pair = true) {
  if (with_pair) {
    cmd->add_option("--a", opt.a_csv, "comma-separated a-tuple");
    cmd->add_option("--b", opt.b_csv, "comma-separated b-tuple");
  }
  cmd->add_option("--format", opt.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--budget", opt.budget_cap, "enumeration cap");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"numerical semigroups from compound sequences"};
  app.require_subcommand(1);

  Options opt;

  auto* info = app.add_subcommand(
      "info", "generators, Frobenius number, genus, gaps, symmetry");
  add_common(info, opt);

  auto* sylvester = app.add_subcommand(
      "sylvester", "Sylvester power sum S_m by one or all methods");
  add_common(sylvester, opt);
  unsigned m = 0;
  std::string method = "all";
  sylvester->add_option("--m", m, "power");
  sylvester->add_option("--geo", opt.geo_csv, "geometric parameters a,b,k");
  sylvester->add_option("--method", method,
                        "closed|bernoulli|enumerated|all")
      ->check(CLI::IsMember({"closed", "bernoulli", "enumerated", "all"}));

  auto* identity = app.add_subcommand(
      "identity", "evaluate both sides of the gap-set identity");
  add_common(identity, opt);
  std::size_t pivot = 0;
  unsigned power_m = 1;
  std::string table_path;
  bool exclude_zero = false;
  identity->add_option("--j", pivot, "pivot index, 0..k");
  identity->add_option("--power", power_m, "use f(n) = n^power");
  identity->add_option("--table", table_path, "tabulated f from file");
  identity->add_flag("--exclude-zero", exclude_zero,
                     "drop the n = 0 terms on the right-hand side");

  auto* weight = app.add_subcommand(
      "weight", "q-Weierstrass weight of the point at infinity");
  add_common(weight, opt);
  unsigned q = 1;
  weight->add_option("--q", q, "differential order, >= 1");
  weight->add_option("--geo", opt.geo_csv, "geometric parameters a,b,k");

  auto* tower = app.add_subcommand(
      "tower-check", "validate superelliptic tower parameters");
  add_common(tower, opt);
  tower->add_option("--c", opt.c_csv, "comma-separated rational shifts c_i");

  auto* search = app.add_subcommand(
      "search", "scan for distinct sets with colliding Sylvester sums");
  add_common(search, opt, /*with_pair=*/false);
  SearchParams sp;
  std::uint64_t search_lo = 2, search_hi = 49;
  std::string out_path, export_format = "jsonl";
  std::size_t search_k = 2;
  search->add_option("--k", search_k, "tuple length");
  search->add_option("--lo", search_lo, "smallest entry");
  search->add_option("--hi", search_hi, "largest entry");
  search->add_option("--match-through", sp.match_through,
                     "require S_0..S_m equal");
  search->add_option("--differ-at", sp.differ_at, "require S_m different");
  search->add_option("--threads", sp.threads, "worker count");
  search->add_option("--out", out_path, "write one record per line here");
  search->add_option("--export", export_format, "jsonl|csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force reachability spot check");
  add_common(oracle_cmd, opt, /*with_pair=*/false);
  std::string gens_csv;
  long long oracle_limit = 0;
  oracle_cmd->add_option("--gens", gens_csv, "comma-separated generators")
      ->required();
  oracle_cmd->add_option("--limit", oracle_limit, "scan 0..limit")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    app.exit(e, out, err);
    return 2;
  }

  if (info->parsed()) {
    SuitablePair p = opt.pair();
    SemigroupSummary s = summarize(p, opt.budget());
    json j{{"a", json_ints(p.a().entries())},
           {"b", json_ints(p.b().entries())},
           {"k", p.length()},
           {"generators", json_ints(build_sequence(p).generators())},
           {"sigma", json_int(sigma(p))},
           {"frobenius", json_int(s.frobenius)},
           {"genus", json_int(s.genus)},
           {"symmetric", s.symmetric},
           {"gaps", json_ints(s.gaps)}};
    emit(j, opt.format, out);
    return 0;
  }

  if (sylvester->parsed()) {
    json j{{"m", m}, {"method", method}};
    const bool geo = !opt.geo_csv.empty();
    SuitablePair p = geo ? opt.geo_pair() : opt.pair();
    // In geometric mode the closed route is the geometric corollary, which
    // cross-checks both S_0 formulas internally.
    auto closed = [&](unsigned mm) {
      if (!geo) return s_closed(p, mm);
      GeoParams g = parse_geo(opt.geo_csv);
      return s_geometric(g.a, g.b, g.k, mm);
    };
    if (geo) {
      GeoParams g = parse_geo(opt.geo_csv);
      j["geo"] = {{"a", json_int(g.a)}, {"b", json_int(g.b)}, {"k", g.k}};
    } else {
      j["a"] = json_ints(p.a().entries());
      j["b"] = json_ints(p.b().entries());
    }
    if (method == "closed") {
      j["value"] = json_int(closed(m));
    } else if (method == "bernoulli") {
      j["value"] =
          json_int(s_bernoulli(p, m, BernoulliCache::shared(), opt.budget()));
    } else if (method == "enumerated") {
      j["value"] = json_int(s_enumerated(p, m, opt.budget()));
    } else {
      Int vb = s_bernoulli(p, m, BernoulliCache::shared(), opt.budget());
      Int ve = s_enumerated(p, m, opt.budget());
      bool agree = (vb == ve);
      j["bernoulli"] = json_int(vb);
      j["enumerated"] = json_int(ve);
      if (m <= 3) {
        Int vc = closed(m);
        j["closed"] = json_int(vc);
        agree = agree && (vc == ve);
      }
      j["agree"] = agree;
      j["value"] = json_int(ve);
    }
    emit(j, opt.format, out);
    return 0;
  }

  if (identity->parsed()) {
    SuitablePair p = opt.pair();
    IntFn f;
    std::string fname;
    if (!table_path.empty()) {
      f = table_fn(table_path);
      fname = "table:" + table_path;
    } else {
      unsigned e = power_m;
      f = [e](const Int& n) { return pow_ui(n, e); };
      fname = "n^" + std::to_string(e);
    }
    TuenterCheck c = tuenter_check(p, pivot, f, exclude_zero, opt.budget());
    json j{{"a", json_ints(p.a().entries())},
           {"b", json_ints(p.b().entries())},
           {"j", pivot},
           {"f", fname},
           {"exclude_zero", exclude_zero},
           {"lhs", json_int(c.lhs)},
           {"rhs", json_int(c.rhs)},
           {"equal", c.equal}};
    emit(j, opt.format, out);
    return 0;
  }

  if (weight->parsed()) {
    WeightReport r = [&] {
      if (!opt.geo_csv.empty()) {
        GeoParams g = parse_geo(opt.geo_csv);
        return q_weight_geometric(g.a, g.b, g.k, q);
      }
      return q_weight(validate_tower(opt.pair()), q);
    }();
    json j{{"q", r.q},
           {"genus", json_int(r.genus)},
           {"dimension", json_int(r.dimension)},
           {"weight", json_int(r.weight)}};
    emit(j, opt.format, out);
    return 0;
  }

  if (tower->parsed()) {
    std::optional<std::vector<Rat>> shifts;
    if (!opt.c_csv.empty()) shifts = parse_rationals(opt.c_csv);
    TowerSpec t = validate_tower(opt.pair(), std::move(shifts));
    json j{{"valid", true},
           {"k", t.pair.length()},
           {"genus", json_int(s0_closed(t.pair))}};
    if (t.shifts) {
      json cs = json::array();
      for (const Rat& c : *t.shifts) cs.push_back(c.get_str());
      j["c"] = cs;
    }
    emit(j, opt.format, out);
    return 0;
  }

  if (search->parsed()) {
    sp.k = search_k;
    sp.lo = Int(static_cast<unsigned long>(search_lo));
    sp.hi = Int(static_cast<unsigned long>(search_hi));
    sp.budget = opt.budget();
    SearchResult r = find_collisions(sp);
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw ValidationError("cannot open output file: " + out_path);
      if (export_format == "csv") {
        write_csv(r, f);
      } else {
        write_jsonl(r, f);
      }
    }
    json records = json::array();
    for (const CollisionRecord& rec : r.records) {
      records.push_back(json::parse(to_json_line(rec)));
    }
    json j{{"k", sp.k},
           {"lo", search_lo},
           {"hi", search_hi},
           {"match_through", sp.match_through},
           {"differ_at", sp.differ_at},
           {"set_pairs", r.set_pair_count},
           {"witness_pairs", r.witness_pair_count},
           {"records", records}};
    emit(j, opt.format, out);
    return 0;
  }

  if (oracle_cmd->parsed()) {
    std::vector<long long> gens;
    for (const std::string& token : split(gens_csv)) {
      Int v = parse_entry(token);
      if (!v.fits_slong_p()) {
        throw ValidationError("oracle generator too large: " + token);
      }
      gens.push_back(v.get_si());
    }
    auto gaps = oracle::oracle_gaps(gens, oracle_limit, opt.budget());
    json unreachable = json::array();
    for (long long n : gaps) unreachable.push_back(n);
    json j{{"generators", json(gens)},
           {"limit", oracle_limit},
           {"unreachable", unreachable}};
    emit(j, opt.format, out);
    return 0;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace

}  // namespace compound::cli
