// Command-line surface for 1D random geometric graph construction,
// enumeration, counting, coding, distributions, and entropy estimation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgg/codec.hpp"
#include "rgg/core.hpp"
#include "rgg/entropy.hpp"
#include "rgg/enumeration.hpp"
#include "rgg/errors.hpp"
#include "rgg/selftest.hpp"
#include "rgg/structure.hpp"

namespace {

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Tabular output in csv (default), json (array of row objects), or text
// (space-aligned) form. Cells are already-rendered tokens.
struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

  void emit(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      os << "[";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? ",{" : "{");
        for (std::size_t j = 0; j < cols.size(); ++j)
          os << (j ? ",\"" : "\"") << cols[j] << "\":" << rows[i][j];
        os << '}';
      }
      os << "]\n";
      return;
    }
    const char sep = format == "text" ? ' ' : ',';
    for (std::size_t j = 0; j < cols.size(); ++j) os << (j ? std::string(1, sep) : "") << cols[j];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? std::string(1, sep) : "") << row[j];
      os << '\n';
    }
  }
};

// Single-result output: json object (default), csv (header + one row), or
// key=value text lines. String values carry their own quotes for json.
struct Record {
  std::vector<std::tuple<std::string, std::string, bool>> kv; // key, value, quoted

  void add(const std::string& k, const std::string& v, bool quoted = false) {
    kv.emplace_back(k, v, quoted);
  }

  void emit(std::ostream& os, const std::string& format) const {
    if (format == "csv") {
      for (std::size_t j = 0; j < kv.size(); ++j) os << (j ? "," : "") << std::get<0>(kv[j]);
      os << '\n';
      for (std::size_t j = 0; j < kv.size(); ++j) os << (j ? "," : "") << std::get<1>(kv[j]);
      os << '\n';
    } else if (format == "text") {
      for (const auto& [k, v, q] : kv) os << k << '=' << v << '\n';
    } else {
      os << '{';
      for (std::size_t j = 0; j < kv.size(); ++j) {
        const auto& [k, v, q] = kv[j];
        os << (j ? ",\"" : "\"") << k << "\":";
        if (q) os << '"' << v << '"';
        else os << v;
      }
      os << "}\n";
    }
  }
};

struct GridSpec {
  double from = 0.0, to = 0.0, step = 1.0;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  char colon1 = 0, colon2 = 0;
  std::istringstream is(s);
  if (!(is >> g.from >> colon1 >> g.to >> colon2 >> g.step) || colon1 != ':' || colon2 != ':' ||
      g.step <= 0.0 || g.to < g.from)
    throw CLI::ValidationError("--grid", "expected a:b:step with step > 0");
  return g;
}

std::vector<int> parse_l_vector(const std::string& s) {
  std::vector<int> l;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) l.push_back(std::stoi(item));
  return l;
}

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D random geometric graph structure toolkit"};
  app.require_subcommand(1);

  int n = 0;
  double r = 0.0;
  std::uint64_t seed = 0;
  long long samples = 100000;
  long long trials = 10000;
  int threads = 1;
  std::string format; // per-subcommand default: csv for tables, json for records
  std::string out_path;
  std::string in_path;
  bool connected_only = false;
  bool count_only = false;
  bool binary = false;
  std::string emit = "ordered";
  std::string regime = "c-over-n";
  double coef = 1.0;
  std::string grid_spec;
  std::string which = "l";
  int index_i = 2;
  int delta_a = 0;
  long long catalan_n = -1;
  bool narayana = false;
  bool pq = false;
  std::string target = "structure";
  std::string estimator = "plug-in";
  std::string l_vector;
  std::string r_grid;

  auto* gen = app.add_subcommand("gen", "sample a graph and emit it");
  gen->add_option("--n", n)->required();
  gen->add_option("--r", r)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--emit", emit)->check(CLI::IsMember({"points", "edges", "ordered"}));
  gen->add_option("--out", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "stream the interval-clique family");
  enumerate->add_option("--n", n)->required();
  enumerate->add_flag("--connected-only", connected_only);
  enumerate->add_flag("--count-only", count_only);
  bool covers = false;
  enumerate->add_flag("--covers", covers, "emit clique covers instead of L-vectors");
  enumerate->add_option("--out", out_path);

  auto* count = app.add_subcommand("count", "exact counting tables");
  count->add_option("--catalan", catalan_n, "print the n-th Catalan number");
  count->add_flag("--narayana", narayana, "emit n,k,count rows");
  count->add_flag("--pq", pq, "emit m,n,k,p,q rows");
  count->add_option("--n", n);
  count->add_flag("--connected-only", connected_only);
  count->add_option("--out", out_path);
  count->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

  auto* enc = app.add_subcommand("encode", "encode a clique cover file");
  enc->add_option("--in", in_path)->required();
  enc->add_flag("--binary", binary);
  enc->add_option("--out", out_path);

  auto* dec = app.add_subcommand("decode", "decode a structure code");
  dec->add_option("--in", in_path)->required();
  dec->add_flag("--binary", binary);
  dec->add_option("--out", out_path);

  auto* pmf = app.add_subcommand("pmf", "exact distribution tables");
  pmf->add_option("--which", which)->check(CLI::IsMember({"l", "joint", "delta"}));
  pmf->add_option("--n", n)->required();
  pmf->add_option("--r", r)->required();
  pmf->add_option("--i", index_i);
  pmf->add_option("--a", delta_a);
  pmf->add_option("--out", out_path);
  pmf->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

  auto* bounds = app.add_subcommand("bounds", "normalized entropy bound curves");
  bounds->add_option("--grid", grid_spec, "a:b:step")->required();
  bounds->add_option("--out", out_path);
  bounds->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

  auto* entropy = app.add_subcommand("entropy", "Monte Carlo entropy estimate");
  entropy->add_option("--n", n)->required();
  entropy->add_option("--r", r)->required();
  entropy->add_option("--samples", samples);
  entropy->add_option("--seed", seed);
  entropy->add_option("--target", target)->check(CLI::IsMember({"structure", "ordered-graph"}));
  entropy->add_flag("--connected-only", connected_only);
  entropy->add_option("--estimator", estimator)
      ->check(CLI::IsMember({"plug-in", "miller-madow"}));
  entropy->add_option("--threads", threads);
  entropy->add_option("--out", out_path);
  entropy->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

  auto* conn = app.add_subcommand("connectivity", "connectivity probability estimate");
  conn->add_option("--n", n)->required();
  conn->add_option("--r", r);
  conn->add_option("--r-grid", r_grid, "sweep a:b:step of r values");
  conn->add_option("--trials", trials);
  conn->add_option("--seed", seed);
  conn->add_option("--threads", threads);
  conn->add_option("--regime", regime)->check(CLI::IsMember({"c-over-n", "log", "const"}));
  conn->add_option("--coef", coef);
  conn->add_option("--out", out_path);
  conn->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

  auto* real = app.add_subcommand("realizable", "realizability witness query");
  real->add_option("--n", n)->required();
  real->add_option("--r", r)->required();
  real->add_option("--l", l_vector, "comma-separated L_2..L_n")->required();
  real->add_option("--out", out_path);
  real->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "text"}));

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    OutputTarget sink;
    sink.open(out_path);
    std::ostream& os = *sink.os;

    if (gen->parsed()) {
      auto sample = rgg::sample_points(n, r, seed);
      if (emit == "points") {
        rgg::write_points_csv(os, sample);
      } else if (emit == "edges") {
        rgg::write_edge_list(os, rgg::build_labeled_graph(sample));
      } else {
        auto og = rgg::build_ordered_graph(sample);
        for (std::size_t i = 0; i < og.left.size(); ++i)
          os << (i ? " " : "") << og.left[i];
        os << '\n';
      }
    } else if (enumerate->parsed()) {
      if (count_only) {
        long long c = 0;
        rgg::for_each_ordered_graph(n, connected_only, [&](const rgg::OrderedGraph&) { ++c; });
        os << c << '\n';
      } else {
        rgg::for_each_ordered_graph(n, connected_only, [&](const rgg::OrderedGraph& og) {
          if (covers) {
            auto cover = rgg::maximal_cliques(og);
            for (std::size_t t = 0; t < cover.intervals.size(); ++t)
              os << (t ? " " : "") << cover.intervals[t].first << ':'
                 << cover.intervals[t].second;
            os << '\n';
          } else {
            for (std::size_t i = 0; i < og.left.size(); ++i) os << (i ? " " : "") << og.left[i];
            os << '\n';
          }
        });
      }
    } else if (count->parsed()) {
      if (catalan_n >= 0) {
        os << rgg::catalan(static_cast<int>(catalan_n)) << '\n';
      } else if (narayana) {
        if (n < 1) throw std::invalid_argument("count --narayana requires --n");
        Table table{{"n", "k", "count"}, {}};
        int hi = connected_only ? (n == 1 ? 1 : n - 1) : n;
        for (int k = 1; k <= hi; ++k)
          table.add({std::to_string(n), std::to_string(k),
                     rgg::count_with_k_cliques(n, k, connected_only).str()});
        table.emit(os, format.empty() ? "csv" : format);
      } else if (pq) {
        if (n < 1) throw std::invalid_argument("count --pq requires --n");
        Table table{{"m", "n", "k", "p", "q"}, {}};
        for (int k = 1; k <= n; ++k) {
          int lo = k == 1 ? 1 : k;
          int hi = k == 1 ? 1 : n;
          for (int m = lo; m <= hi; ++m) {
            rgg::BigInt pv = rgg::p_count(m, n, k, rgg::CountMethod::Formula);
            rgg::BigInt qv = 0;
            if (k == 1 ? m == 1 : m <= n - 1) qv = rgg::q_count(m, n, k, rgg::CountMethod::Formula);
            table.add({std::to_string(m), std::to_string(n), std::to_string(k), pv.str(),
                       qv.str()});
          }
        }
        table.emit(os, format.empty() ? "csv" : format);
      } else {
        throw std::invalid_argument("count: choose one of --catalan, --narayana, --pq");
      }
    } else if (enc->parsed()) {
      std::ifstream in(in_path);
      if (!in) throw std::runtime_error("cannot open input file: " + in_path);
      auto cover = rgg::read_cover(in);
      auto code = rgg::encode(rgg::og_from_cliques(cover));
      if (binary) {
        auto bytes = rgg::serialize(code);
        os.write(reinterpret_cast<const char*>(bytes.data()),
                 static_cast<std::streamsize>(bytes.size()));
      } else {
        os << rgg::to_text(code);
      }
    } else if (dec->parsed()) {
      std::ifstream in(in_path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open input file: " + in_path);
      rgg::StructureCode code;
      if (binary) {
        std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                        std::istreambuf_iterator<char>()};
        code = rgg::parse(bytes);
      } else {
        std::stringstream ss;
        ss << in.rdbuf();
        code = rgg::from_text(ss.str());
      }
      auto og = rgg::decode(code);
      rgg::write_cover(os, rgg::maximal_cliques(og));
    } else if (pmf->parsed()) {
      Table table;
      if (which == "l") {
        auto p = rgg::pmf_L(n, r, index_i);
        table.cols = {"a", "prob"};
        for (std::size_t j = 0; j < p.support.size(); ++j)
          table.add({std::to_string(p.support[j]), fmt_num(p.prob[j])});
      } else if (which == "joint") {
        auto jp = rgg::joint_pmf_L(n, r, index_i);
        table.cols = {"a", "b", "prob"};
        for (int a = 0; a <= jp.a_max; ++a)
          for (int b = 0; b <= a + 1; ++b)
            table.add({std::to_string(a), std::to_string(b), fmt_num(jp.at(a, b))});
      } else {
        auto p = rgg::delta_pmf(n, r, delta_a);
        table.cols = {"k", "prob"};
        for (std::size_t j = 0; j < p.support.size(); ++j)
          table.add({std::to_string(p.support[j]), fmt_num(p.prob[j])});
      }
      table.emit(os, format.empty() ? "csv" : format);
    } else if (bounds->parsed()) {
      GridSpec g = parse_grid(grid_spec);
      std::vector<double> xs;
      for (double x = g.from; x <= g.to + 1e-12; x += g.step) xs.push_back(x);
      auto curve = rgg::bound_curve(xs);
      Table table{{"x", "h_upper", "h_lower"}, {}};
      for (std::size_t j = 0; j < curve.x.size(); ++j)
        table.add({fmt_num(curve.x[j]), fmt_num(curve.upper[j]), fmt_num(curve.lower[j])});
      table.emit(os, format.empty() ? "csv" : format);
    } else if (entropy->parsed()) {
      auto est = rgg::mc_entropy(
          n, r,
          target == "structure" ? rgg::EntropyTarget::Structure : rgg::EntropyTarget::OrderedGraph,
          connected_only, samples, seed,
          estimator == "plug-in" ? rgg::Estimator::PlugIn : rgg::Estimator::MillerMadow, threads);
      Record rec;
      rec.add("n", std::to_string(n));
      rec.add("r", fmt_num(r));
      rec.add("target", connected_only ? target + "-connected" : target, true);
      rec.add("estimator", estimator, true);
      rec.add("samples", std::to_string(samples));
      rec.add("bits", fmt_num(est.bits));
      rec.add("std_error", fmt_num(est.std_error));
      if (connected_only) rec.add("acceptance_rate", fmt_num(est.acceptance_rate));
      rec.emit(os, format.empty() ? "json" : format);
    } else if (conn->parsed()) {
      if (!r_grid.empty()) {
        GridSpec g = parse_grid(r_grid);
        Table table{{"r", "estimate", "std_error"}, {}};
        for (double rv = g.from; rv <= g.to + 1e-12; rv += g.step) {
          auto est = rgg::connectivity_probability(n, rv, trials, seed, threads);
          table.add({fmt_num(rv), fmt_num(est.probability), fmt_num(est.std_error)});
        }
        table.emit(os, format.empty() ? "csv" : format);
      } else {
        double rv = r;
        if (rv <= 0.0) {
          rgg::RegimeSpec spec;
          spec.kind = regime == "c-over-n" ? rgg::RegimeKind::LinearReciprocal
                      : regime == "log"    ? rgg::RegimeKind::CriticalLog
                                           : rgg::RegimeKind::ConstantRange;
          spec.coefficient = coef;
          rv = spec.range_at(n);
        }
        auto est = rgg::connectivity_probability(n, rv, trials, seed, threads);
        Record rec;
        rec.add("n", std::to_string(n));
        rec.add("r", fmt_num(rv));
        rec.add("trials", std::to_string(trials));
        rec.add("estimate", fmt_num(est.probability));
        rec.add("std_error", fmt_num(est.std_error));
        rec.emit(os, format.empty() ? "json" : format);
      }
    } else if (real->parsed()) {
      rgg::OrderedGraph og;
      og.n = n;
      og.left = parse_l_vector(l_vector);
      auto w = rgg::realizable(og, r);
      Record rec;
      rec.add("feasible", w.feasible ? "true" : "false");
      if (w.feasible) {
        rec.add("slack", fmt_num(*w.slack));
        std::string locs = "[";
        for (std::size_t j = 0; j < w.locations->size(); ++j)
          locs += (j ? "," : "") + fmt_num((*w.locations)[j]);
        rec.add("locations", locs + "]");
      }
      rec.emit(os, format.empty() ? "json" : format);
    } else if (selftest->parsed()) {
      auto results = rgg::selftest::run_all(std::cout, threads);
      for (const auto& res : results)
        if (!res.passed) return 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const rgg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
