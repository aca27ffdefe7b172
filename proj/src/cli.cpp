#include "ssot/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ssot/analysis.hpp"
#include "ssot/correspondences.hpp"
#include "ssot/json_io.hpp"

namespace ssot {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition parse_partition(std::string s) {
  std::string body;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  if (body.size() >= 2 && ((body.front() == '(' && body.back() == ')') ||
                           (body.front() == '[' && body.back() == ']')))
    body = body.substr(1, body.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.size() > 6 ||
          !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw UsageError("malformed partition '" + s + "': expected comma-separated nonnegative parts, e.g. 2,1");
      parts.push_back(std::stoi(item));
    }
    if (body.back() == ',') throw UsageError("malformed partition '" + s + "'");
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed partition '" + s + "': parts must be weakly decreasing");
  }
}

void require_admissible(const Partition& lambda, int n) {
  if (!admissible_length(lambda, n))
    throw std::domain_error("n = " + std::to_string(n) + " is not in N(" + lambda.to_string() +
                            "): need n >= |lambda| = " + std::to_string(lambda.size()) +
                            " and n - |lambda| even");
}

void require_positive(int k, const char* what) {
  if (k < 1) throw UsageError(std::string(what) + " must be positive");
}

/// Inline JSON when the argument starts with '{', otherwise a file path.
json load_json_arg(const std::string& arg) {
  try {
    if (!arg.empty() && arg.front() == '{') return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open '" + arg + "'");
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

std::string compact(const json& j) { return j.dump(); }

std::string display_text(const Ssot& s) {
  std::string out;
  for (const auto& row : display_rows(s)) {
    if (!out.empty()) out += " / ";
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? " " : "") + row[i];
  }
  return out.empty() ? "∅" : out;
}

struct Options {
  bool as_json = false;
  int limit = -1;
  int threads = 1;
};

void cmd_enumerate_qyot(const Options& o, const Partition& lambda, int n, int k, std::ostream& out) {
  require_admissible(lambda, n);
  require_positive(k, "k");
  const std::vector<Ssot> qs = enumerate_qyot(lambda, n, k);
  const std::size_t shown =
      o.limit < 0 ? qs.size() : std::min(qs.size(), static_cast<std::size_t>(o.limit));
  if (o.as_json) {
    json records = json::array();
    for (std::size_t i = 0; i < shown; ++i) {
      records.push_back(json{{"ssot", qs[i]},
                             {"display", display_json(qs[i])},
                             {"run", run_of(qs[i]).to_string()},
                             {"des", descent_data(qs[i]).des}});
    }
    out << json{{"lambda", lambda}, {"n", n}, {"k", k}, {"count", qs.size()}, {"records", records}}.dump(2)
        << '\n';
    return;
  }
  out << "QYOT with shape " << lambda << ", length " << n << ", step <= " << k << ": " << qs.size()
      << '\n';
  for (std::size_t i = 0; i < shown; ++i) {
    out << std::setw(4) << i + 1 << "  " << std::left << std::setw(16) << run_of(qs[i]).to_string()
        << std::setw(8) << descent_data(qs[i]).des.to_string() << display_text(qs[i]) << std::right
        << '\n';
  }
}

void cmd_expand_f(const Options& o, const Partition& lambda, int n, int k, std::ostream& out) {
  require_admissible(lambda, n);
  require_positive(k, "k");
  const auto e = f_expansion(lambda, n, k);
  if (o.as_json) {
    json terms = json::array();
    for (const auto& [a, c] : e) terms.push_back(json{{"composition", a}, {"coef", c}});
    out << json{{"lambda", lambda}, {"n", n}, {"k", k}, {"terms", terms}}.dump(2) << '\n';
    return;
  }
  for (const auto& [a, c] : e) out << "F_" << a.to_string() << ": " << c << '\n';
}

void cmd_expand_schur(const Options& o, const Partition& lambda, int n, std::ostream& out) {
  require_admissible(lambda, n);
  const SchurExpansion e = ssot_schur(lambda, n);
  if (o.as_json) {
    out << json{{"lambda", lambda}, {"n", n}, {"degree", e.degree}, {"coefficients", schur_json(e.coefficients)}}
               .dump(2)
        << '\n';
    return;
  }
  for (const auto& [nu, c] : e.coefficients) out << "s_" << nu << ": " << c << '\n';
}

void cmd_ssot_poly(const Options& o, const Partition& lambda, int n, int k, std::ostream& out) {
  require_admissible(lambda, n);
  require_positive(k, "k");
  const SparsePoly f = ssot_poly(lambda, n, k);
  if (o.as_json)
    out << json(f).dump(2) << '\n';
  else
    out << f.to_string() << '\n';
}

void cmd_burge(const Options& o, const std::string& arg, std::ostream& out) {
  const TwoRowArray l = load_json_arg(arg).get<TwoRowArray>();
  if (!l.is_burge()) throw std::domain_error("array is not Burge: need lexicographic order and top > bottom");
  const TwoRowArray sym = symmetrize(l);
  const Tableau t = burge_map(l);
  if (o.as_json) {
    out << json{{"burge", l}, {"symmetrized", sym}, {"tableau", t}}.dump(2) << '\n';
    return;
  }
  out << "2L: " << compact(json(sym)["pairs"]) << '\n';
  out << "Bur(L): " << compact(json(t)) << '\n';
}

const char* kind_name(EventKind k) { return k == EventKind::addition ? "add" : "del"; }

void cmd_sundaram(const Options& o, const std::string& arg, bool trace, std::ostream& out) {
  Ssot s;
  try {
    s = load_json_arg(arg).get<Ssot>();
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(std::string("invalid SSOT: ") + e.what());
  }
  const std::vector<SundaramStep> steps = sundaram_trace(s);
  const SundaramPair pair = sundaram(s);
  if (o.as_json) {
    json j{{"ssot", s}, {"pair", pair}};
    if (trace) {
      json rows = json::array();
      for (std::size_t m = 0; m < steps.size(); ++m) {
        const SundaramStep& st = steps[m];
        json row{{"m", m + 1}, {"letter", st.letter}, {"kind", kind_name(st.kind)}, {"box", st.box},
                 {"tableau", st.tableau}, {"burge", st.burge}};
        if (st.kind == EventKind::deletion) row["ejected"] = st.ejected;
        rows.push_back(std::move(row));
      }
      j["trace"] = std::move(rows);
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (trace) {
    out << std::left << std::setw(4) << "m" << std::setw(4) << "u" << std::setw(6) << "kind"
        << std::setw(8) << "box" << std::setw(26) << "T_m" << "L_m" << '\n';
    for (std::size_t m = 0; m < steps.size(); ++m) {
      const SundaramStep& st = steps[m];
      const std::string box = "(" + std::to_string(st.box.row) + "," + std::to_string(st.box.col) + ")";
      out << std::setw(4) << m + 1 << std::setw(4) << st.letter << std::setw(6) << kind_name(st.kind)
          << std::setw(8) << box << std::setw(26) << compact(json(st.tableau))
          << compact(json(st.burge)["pairs"]) << '\n';
    }
    out << std::right;
  }
  out << "L: " << compact(json(pair.burge)["pairs"]) << '\n';
  out << "T: " << compact(json(pair.tableau)) << '\n';
}

void cmd_inner(const Options& o, const Partition& lambda, const Partition& mu, int n, std::ostream& out) {
  if (lambda.size() != mu.size())
    throw std::domain_error("|lambda| = " + std::to_string(lambda.size()) + " differs from |mu| = " +
                            std::to_string(mu.size()));
  require_admissible(lambda, n);
  const BigInt v = hall_inner(lambda, mu, n);
  if (o.as_json)
    out << json{{"lambda", lambda}, {"mu", mu}, {"n", n}, {"value", v.str()}}.dump(2) << '\n';
  else
    out << v << '\n';
}

void cmd_n0(const Options& o, const Partition& lambda, const Partition& mu, std::ostream& out) {
  if (lambda.size() != mu.size())
    throw std::domain_error("|lambda| = " + std::to_string(lambda.size()) + " differs from |mu| = " +
                            std::to_string(mu.size()));
  const int n0 = n_zero(lambda, mu);
  const std::vector<Partition> shapes = similarity_shapes(lambda, mu, n0);
  if (o.as_json) {
    out << json{{"lambda", lambda}, {"mu", mu}, {"n0", n0}, {"shapes", shapes}}.dump(2) << '\n';
    return;
  }
  out << "n0 = " << n0 << '\n';
  for (const Partition& p : shapes) out << p << '\n';
}

void cmd_independence(const Options& o, int m, int n, std::ostream& out) {
  if (m < 0) throw UsageError("m must be nonnegative");
  if (!admissible_length(m, n))
    throw std::domain_error("n = " + std::to_string(n) + " is not in N(" + std::to_string(m) +
                            "): need n >= m and n - m even");
  const int rank = independence_rank(m, n);
  const auto count = partitions_of(m).size();
  if (o.as_json)
    out << json{{"m", m}, {"n", n}, {"rank", rank}, {"partitions", count}, {"independent", rank == static_cast<int>(count)}}
               .dump(2)
        << '\n';
  else
    out << "rank " << rank << " of " << count << '\n';
}

void cmd_snp(const Options& o, const Partition& lambda, int n, int k, std::ostream& out) {
  require_admissible(lambda, n);
  require_positive(k, "k");
  const SparsePoly f = ssot_poly(lambda, n, k);
  if (f.is_zero()) throw std::domain_error("ss_{lambda,n} vanishes in " + std::to_string(k) + " variables");
  const LatticePolytopeCheck c = has_snp(f);
  if (o.as_json) {
    out << json{{"lambda", lambda}, {"n", n}, {"k", k}, {"support", c.support},
                {"polytope_points", c.polytope_points}, {"snp", c.snp}}
               .dump(2)
        << '\n';
    return;
  }
  out << "support " << c.support.size() << ", lattice points " << c.polytope_points.size() << ", snp "
      << (c.snp ? "true" : "false") << '\n';
}

void cmd_vset(const Options& o, const Partition& lambda, int n, std::ostream& out) {
  require_admissible(lambda, n);
  const std::vector<Partition> v = v_set(lambda, n);
  if (o.as_json) {
    out << json{{"lambda", lambda}, {"n", n}, {"shapes", v}, {"lambda_bar", lambda_bar(lambda, n)}}.dump(2)
        << '\n';
    return;
  }
  for (const Partition& p : v) out << p << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semistandard oscillating tableaux toolkit", "ssot"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.as_json, "JSON output");
  app.add_option("--limit", o.limit, "maximum number of records to print");
  app.add_option("--threads", o.threads, "thread hint (computation is single threaded)");

  std::string lam, mu, arg;
  int n = 0, k = 0, m = 0;
  bool trace = false;
  std::function<void()> action;

  auto add_lambda_n = [&](CLI::App* sub) {
    sub->add_option("lambda", lam, "partition, e.g. 2,1")->required();
    sub->add_option("n", n, "length")->required();
  };

  auto* qyot = app.add_subcommand("enumerate-qyot", "list quasi-Yamanouchi SSOT with step <= k");
  add_lambda_n(qyot);
  qyot->add_option("k", k, "maximum step")->required();
  qyot->callback([&] { action = [&] { cmd_enumerate_qyot(o, parse_partition(lam), n, k, out); }; });

  auto* ef = app.add_subcommand("expand-f", "fundamental quasi-symmetric expansion");
  add_lambda_n(ef);
  ef->add_option("k", k, "maximum step")->required();
  ef->callback([&] { action = [&] { cmd_expand_f(o, parse_partition(lam), n, k, out); }; });

  auto* es = app.add_subcommand("expand-schur", "Schur expansion via LR coefficients");
  add_lambda_n(es);
  es->callback([&] { action = [&] { cmd_expand_schur(o, parse_partition(lam), n, out); }; });

  auto* sp = app.add_subcommand("ssot-poly", "SSOT generating polynomial in k variables");
  add_lambda_n(sp);
  sp->add_option("k", k, "number of variables")->required();
  sp->callback([&] { action = [&] { cmd_ssot_poly(o, parse_partition(lam), n, k, out); }; });

  auto* bu = app.add_subcommand("burge", "Burge correspondence of a two-row array");
  bu->add_option("L", arg, "JSON file or inline JSON {\"pairs\":[[top,bottom],...]}")->required();
  bu->callback([&] { action = [&] { cmd_burge(o, arg, out); }; });

  auto* su = app.add_subcommand("sundaram", "Sundaram pair of an SSOT");
  su->add_option("S", arg, "JSON file or inline JSON {\"steps\":[{\"deleted\":[],\"reached\":[]},...]}")
      ->required();
  su->add_flag("--trace", trace, "print every intermediate (T_m, L_m)");
  su->callback([&] { action = [&] { cmd_sundaram(o, arg, trace, out); }; });

  auto* ip = app.add_subcommand("inner-product", "Hall inner product of two SSOT functions");
  ip->add_option("lambda", lam)->required();
  ip->add_option("mu", mu)->required();
  ip->add_option("n", n)->required();
  ip->callback([&] { action = [&] { cmd_inner(o, parse_partition(lam), parse_partition(mu), n, out); }; });

  auto* nz = app.add_subcommand("n0", "least n at which lambda and mu are n-similar");
  nz->add_option("lambda", lam)->required();
  nz->add_option("mu", mu)->required();
  nz->callback([&] { action = [&] { cmd_n0(o, parse_partition(lam), parse_partition(mu), out); }; });

  auto* in = app.add_subcommand("independence", "rank of the SSOT functions of size m at length n");
  in->add_option("m", m)->required();
  in->add_option("n", n)->required();
  in->callback([&] { action = [&] { cmd_independence(o, m, n, out); }; });

  auto* sn = app.add_subcommand("snp", "saturated Newton polytope check");
  add_lambda_n(sn);
  sn->add_option("k", k, "number of variables")->required();
  sn->callback([&] { action = [&] { cmd_snp(o, parse_partition(lam), n, k, out); }; });

  auto* vs = app.add_subcommand("vset", "shapes reachable by even vertical strips");
  add_lambda_n(vs);
  vs->callback([&] { action = [&] { cmd_vset(o, parse_partition(lam), n, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (o.threads < 1) throw UsageError("--threads must be positive");
    action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ssot
