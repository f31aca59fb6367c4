#include "dbgf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbgf/formula.hpp"
#include "dbgf/mtt.hpp"
#include "dbgf/oracle.hpp"

namespace dbgf::cli {

using json = nlohmann::ordered_json;

namespace {

json coefficient_json(const BigInt& c) {
  if (c.fits_slong_p()) return json(c.get_si());
  return json(c.get_str());
}

struct Source {
  FeedbackFunction function;
  std::optional<LinearSpec> linear;
  std::string name;
};

Source resolve_source(const RunConfig& c, int n, bool required = true) {
  if (c.taps && c.table) throw Error(ErrorKind::parse, "give either --taps or --table, not both");
  if (c.taps) {
    LinearSpec spec{n, parse_taps(*c.taps), c.constant};
    spec.validate();
    std::sort(spec.taps.begin(), spec.taps.end());
    return Source{make_linear(spec), spec, describe(spec)};
  }
  if (c.table) {
    if (c.constant) throw Error(ErrorKind::parse, "--constant only applies to --taps");
    auto f = FeedbackFunction::from_hex(n, *c.table);
    return Source{f, std::nullopt, "0x" + f.to_hex()};
  }
  if (required) throw Error(ErrorKind::parse, "this command needs a function: --taps or --table");
  return Source{FeedbackFunction(n), std::nullopt, ""};
}

int single_order(const RunConfig& c) {
  if (c.n_min != c.n_max) throw Error(ErrorKind::parse, "this command takes a single order, not a range");
  return c.n_min;
}

std::string render_necklaces(int n, Format format) {
  json rows = json::array();
  json es = json::array();
  std::ostringstream os;
  if (format == Format::csv) os << "table,d,i,value\n";
  for (int d = 1; d <= n; ++d) {
    for (int i = 0; i <= d; ++i) {
      const BigInt l = primitive_necklace_count(static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(i));
      rows.push_back({{"d", d}, {"i", i}, {"count", coefficient_json(l)}});
      if (format == Format::csv) os << "L," << d << "," << i << "," << l.get_str() << "\n";
      if (format == Format::text) os << "L(" << d << "," << i << ") = " << l.get_str() << "\n";
    }
  }
  for (int i = 0; i <= n; ++i) {
    const BigInt e = e_coefficient(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
    es.push_back({{"i", i}, {"count", coefficient_json(e)}});
    if (format == Format::csv) os << "e," << n << "," << i << "," << e.get_str() << "\n";
    if (format == Format::text) os << "e(" << n << "," << i << ") = " << e.get_str() << "\n";
  }
  if (format == Format::json) return json{{"n", n}, {"necklaces", rows}, {"e", es}}.dump() + "\n";
  return os.str();
}

std::string render_histogram(const DistanceHistogram& h, const std::string& source, Format format) {
  if (format != Format::csv) return render_polynomial(h.to_polynomial(), h.n, source, format);
  std::ostringstream os;
  os << "distance,count\n";
  for (std::size_t k = 0; k < h.counts.size(); ++k) os << k << "," << h.counts[k] << "\n";
  return os.str();
}

std::string render_matrix(const WeightedAdjacency& w, Format format) {
  if (format == Format::text) return w.to_text();
  if (format == Format::csv) {
    std::string grid = w.to_text();
    std::replace(grid.begin(), grid.end(), ' ', ',');
    return grid;
  }
  json rows = json::array();
  std::istringstream is(w.to_text());
  std::string line;
  while (std::getline(is, line)) {
    json row = json::array();
    std::istringstream ls(line);
    std::string cell;
    while (ls >> cell) row.push_back(cell);
    rows.push_back(row);
  }
  return json{{"n", w.order()}, {"matrix", rows}}.dump() + "\n";
}

std::string render_partition(const PartitionReport& p, Format format) {
  if (format == Format::json) {
    json j = json::parse(render_report(p.report, Format::json));
    j["n"] = p.n;
    j["intree_count"] = p.intree_count;
    j["hamiltonian_count"] = p.hamiltonian_count;
    j["omega_size"] = p.omega_size;
    return j.dump() + "\n";
  }
  std::ostringstream os;
  if (format == Format::text) {
    os << "n = " << p.n << ": |Lambda_n| = " << p.intree_count << ", |H_n| = " << p.hamiltonian_count
       << ", |Omega(H)| = " << p.omega_size << "\n";
  }
  os << render_report(p.report, format);
  return os.str();
}

std::string run_command(const RunConfig& c, bool& failed) {
  failed = false;
  const Format fmt = c.format;
  const std::string& cmd = c.command;

  if (cmd == "formula") {
    const int n = single_order(c);
    if (c.kind == "zero") return render_polynomial(g_zero(n), n, "0", fmt);
    if (c.kind == "fryers") return render_polynomial(g_fryers(n), n, "maximal-period", fmt);
    if (c.kind != "linear") throw Error(ErrorKind::parse, "unknown formula kind '" + c.kind + "'");
    if (c.table) throw Error(ErrorKind::parse, "the formula route needs a linear function (--taps)");
    const Source src = resolve_source(c, n);
    return render_polynomial(g_any_linear(*src.linear), n, src.name, fmt);
  }

  if (cmd == "oracle") {
    const int n = single_order(c);
    const Source src = resolve_source(c, n);
    if (c.list) {
      std::ostringstream os;
      write_debruijn_csv(os, src.function, c.workers);
      return os.str();
    }
    if (c.distance) {
      return render_functions(search_at_distance(src.function, *c.distance, c.limit, c.workers), src.function, fmt);
    }
    return render_histogram(distance_histogram(src.function, c.workers), src.name, fmt);
  }

  if (cmd == "mtt") {
    const int n = single_order(c);
    if (n > kMaxMatrixOrder) {
      throw Error(ErrorKind::order_too_large, "the mtt route needs n <= " + std::to_string(kMaxMatrixOrder) +
                                                  "; use `formula` for linear functions");
    }
    const Source src = resolve_source(c, n, !c.dump_matrix);
    if (c.dump_matrix) return render_matrix(weighted_adjacency(src.function), fmt);
    if (c.determinant) {
      return render_polynomial(reduced_determinant(weighted_adjacency(src.function), c.workers), n, src.name, fmt);
    }
    return render_polynomial(g_mtt(src.function, c.workers), n, src.name, fmt);
  }

  if (cmd == "cycles") {
    const int n = single_order(c);
    if (c.necklaces) return render_necklaces(n, fmt);
    const Source src = resolve_source(c, n);
    if (c.galois) {
      if (!src.linear) throw Error(ErrorKind::parse, "Galois cycles need a linear function (--taps)");
      return render_profile(galois_cycles(*src.linear), fmt);
    }
    return render_profile(fibonacci_cycles(src.function), fmt);
  }

  if (cmd == "trees") {
    const int n = single_order(c);
    if (n > kMaxTreeEnumOrder) {
      throw Error(ErrorKind::order_too_large, "tree enumeration needs n <= " + std::to_string(kMaxTreeEnumOrder) +
                                                  "; use `mtt --determinant` for the tree sum");
    }
    if (c.taps || c.table) {
      const Source src = resolve_source(c, n);
      return render_polynomial(weighted_tree_sum(n, src.function, c.workers), n, src.name, fmt);
    }
    const PartitionReport p = verify_partition(n, c.workers);
    failed = !p.report.passed();
    return render_partition(p, fmt);
  }

  if (cmd == "verify") {
    const Report r = verify_suite(c.n_min, c.n_max, c.samples, c.seed, c.workers);
    failed = !r.passed();
    return render_report(r, fmt);
  }

  if (cmd == "sequence") {
    const int n = single_order(c);
    const Source src = resolve_source(c, n);
    const std::string bits = bits_to_string(debruijn_sequence(src.function));
    if (fmt == Format::json) return json{{"n", n}, {"source", src.name}, {"sequence", bits}}.dump() + "\n";
    if (fmt == Format::csv) return "sequence\n" + bits + "\n";
    return bits + "\n";
  }

  throw Error(ErrorKind::parse, "unknown command '" + cmd + "'");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw Error(ErrorKind::parse, "unknown format '" + name + "' (text, json, csv)");
}

std::pair<int, int> parse_order_range(const std::string& text) {
  auto to_int = [&text](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::parse, "bad order '" + text + "'");
    }
    return std::stoi(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  const int lo = to_int(text.substr(0, dots));
  const int hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw Error(ErrorKind::parse, "empty order range '" + text + "'");
  return {lo, hi};
}

std::vector<int> parse_taps(const std::string& text) {
  std::vector<int> taps;
  if (text.empty() || text == "none") return taps;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::parse, "bad tap list '" + text + "'");
    }
    taps.push_back(std::stoi(item));
  }
  return taps;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig c;
  std::string order;
  std::string format;
  if (const char* env = std::getenv(kFormatEnv)) format = env;
  int constant = 0;
  std::size_t distance = 0;
  std::string out_path;
  std::string taps;
  std::string table;

  CLI::App app{"Generating functions for De Bruijn feedback functions near a linear recursion", "dbgf"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"formula", "closed-form G(l; y) for linear l (or --kind zero | fryers)"},
      {"oracle", "brute-force G(f; y), distance search, or CSV listing (n <= 5)"},
      {"mtt", "G(f; y) through the weighted Matrix Tree determinant, or the matrix itself"},
      {"cycles", "Fibonacci / Galois cycle profiles, or necklace count tables"},
      {"trees", "in-tree partition check, or the weighted tree sum for a function (n <= 4)"},
      {"verify", "cross-route verification suite over an order range"},
      {"sequence", "one period of the De Bruijn sequence generated by a function"},
  };
  std::vector<CLI::App*> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    apps.push_back(sub);
    sub->add_option("--n", order, "order n, or a range lo..hi for verify")->required();
    sub->add_option("--format", format, "text | json | csv");
    sub->add_option("--workers", c.workers, "worker threads, 0 = all cores");
    sub->add_option("--out", out_path, "write output to this file");
    sub->add_option("--seed", c.seed, "seed for randomized samples");
    const std::string sn = s.name;
    if (sn != "verify") {
      sub->add_option("--taps", taps, "comma-separated tap indices of a linear function ('' or none for zero)");
      sub->add_option("--constant", constant, "constant term of the linear function (0 or 1)")
          ->check(CLI::Range(0, 1));
      sub->add_option("--table", table, "hex truth table, entry 0 in the least significant bit");
    }
    if (sn == "formula") sub->add_option("--kind", c.kind, "linear | zero | fryers");
    if (sn == "oracle") {
      sub->add_option("--distance", distance, "list functions at this Hamming distance");
      sub->add_option("--limit", c.limit, "maximum number of listed functions");
      sub->add_flag("--list", c.list, "CSV of every De Bruijn function with weight and distance");
    }
    if (sn == "mtt") {
      sub->add_flag("--dump-matrix", c.dump_matrix, "print the weighted adjacency matrix");
      sub->add_flag("--determinant", c.determinant, "print the reduced determinant instead of G");
    }
    if (sn == "cycles") {
      sub->add_flag("--galois", c.galois, "Galois-stepping profile of a linear function");
      sub->add_flag("--necklaces", c.necklaces, "tables of L(d,i) for d <= n and e(n,i)");
    }
    if (sn == "verify") sub->add_option("--samples", c.samples, "random functions per order");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorKind::parse, e.what());
  }

  for (auto* sub : apps) {
    if (sub->parsed()) {
      c.command = sub->get_name();
      auto given = [sub](const char* name) {
        const CLI::Option* opt = sub->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
      };
      if (given("--taps")) c.taps = taps;
      if (given("--table")) c.table = table;
      if (given("--distance")) c.distance = distance;
    }
  }
  std::tie(c.n_min, c.n_max) = parse_order_range(order);
  c.constant = constant != 0;
  if (!format.empty()) c.format = parse_format(format);
  if (!out_path.empty()) c.out_path = out_path;
  return c;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  bool failed = false;
  std::string text;
  try {
    text = run_command(config, failed);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::parse ? kExitUsage : kExitError;
  }
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.out_path << " for writing\n";
      return kExitError;
    }
    file << text;
  } else {
    out << text;
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(argc, argv, out);
  } catch (const Error& e) {
    err << "usage error: " << e.what() << "\n(run with --help for usage)\n";
    return kExitUsage;
  }
  if (!config) return kExitOk;
  return dispatch(*config, out, err);
}

std::string render_polynomial(const IntPolynomial& p, int n, const std::string& source, Format format) {
  if (format == Format::json) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(coefficient_json(c));
    return json{{"n", n}, {"source", source}, {"coeffs", coeffs}}.dump() + "\n";
  }
  if (format == Format::csv) {
    std::ostringstream os;
    os << "power,coefficient\n";
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << k << "," << p.coeffs()[k].get_str() << "\n";
    return os.str();
  }
  return p.to_pretty_string() + "\n";
}

std::string render_profile(const CycleProfile& profile, Format format) {
  std::ostringstream os;
  json rows = json::array();
  if (format == Format::csv) os << "r,d,multiplicity\n";
  for (const auto& [key, mult] : profile.entries()) {
    rows.push_back({{"r", key.first}, {"d", key.second}, {"multiplicity", mult}});
    if (format == Format::csv) os << key.first << "," << key.second << "," << mult << "\n";
    if (format == Format::text) os << "r=" << key.first << " d=" << key.second << " multiplicity=" << mult << "\n";
  }
  if (format == Format::json) return rows.dump() + "\n";
  return os.str();
}

std::string render_report(const Report& report, Format format) {
  if (format == Format::json) {
    json rows = json::array();
    for (const auto& a : report.assertions) rows.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    return json{{"assertions", rows}}.dump() + "\n";
  }
  std::ostringstream os;
  if (format == Format::csv) {
    os << "name,pass,detail\n";
    for (const auto& a : report.assertions) {
      std::string detail = a.detail;
      std::replace(detail.begin(), detail.end(), '"', '\'');
      os << a.name << "," << (a.pass ? "true" : "false") << ",\"" << detail << "\"\n";
    }
    return os.str();
  }
  for (const auto& a : report.assertions) os << (a.pass ? "PASS " : "FAIL ") << a.name << ": " << a.detail << "\n";
  os << (report.passed() ? "all assertions passed" : "verification FAILED") << "\n";
  return os.str();
}

std::string render_functions(const std::vector<FeedbackFunction>& fs, const FeedbackFunction& reference,
                             Format format) {
  std::ostringstream os;
  json rows = json::array();
  if (format == Format::csv) os << "table,weight,distance\n";
  for (const auto& f : fs) {
    const auto w = f.weight();
    const auto d = hamming_distance(reference, f);
    rows.push_back({{"table", "0x" + f.to_hex()}, {"weight", w}, {"distance", d}});
    if (format == Format::csv) os << "0x" << f.to_hex() << "," << w << "," << d << "\n";
    if (format == Format::text) os << "0x" << f.to_hex() << " weight=" << w << " distance=" << d << "\n";
  }
  if (format == Format::json) return rows.dump() + "\n";
  return os.str();
}

IntPolynomial polynomial_from_json(const std::string& json_text) {
  const json j = json::parse(json_text);
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) {
      coeffs.emplace_back(c.get<std::string>());
    } else {
      coeffs.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    }
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace dbgf::cli
