#include "incpar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "incpar/bstsort.hpp"
#include "incpar/closestpair2d.hpp"
#include "incpar/datasets.hpp"
#include "incpar/delaunay2d.hpp"
#include "incpar/exec.hpp"
#include "incpar/geomkit.hpp"
#include "incpar/graphcore.hpp"
#include "incpar/lelists.hpp"
#include "incpar/lp2d.hpp"
#include "incpar/order.hpp"
#include "incpar/scc.hpp"
#include "incpar/seb2d.hpp"

namespace incpar::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t tag) {
  return order::Rng(seed).split(tag).next_u64();
}

constexpr std::uint64_t kDataTag = 0;
constexpr std::uint64_t kPermTag = 1;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T>
T load_file(const std::string& path, T (*parse)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

std::vector<double> parse_keys(std::istream& in) {
  std::vector<double> keys;
  double v;
  while (in >> v) keys.push_back(v);
  return keys;
}

std::vector<lp2d::Halfplane> parse_halfplanes(std::istream& in) {
  std::vector<lp2d::Halfplane> hs;
  double a, b, c;
  while (in >> a >> b >> c) hs.push_back(lp2d::Halfplane{a, b, c});
  return hs;
}

std::vector<geomkit::Point2D> parse_points_stream(std::istream& in) {
  return geomkit::parse_points(in);
}

graphcore::Graph parse_graph_stream(std::istream& in) { return graphcore::parse_edge_list(in); }

// ---- canonical output serializers ----

std::string text_sorted(const std::vector<double>& keys) {
  std::ostringstream os;
  for (const double k : keys) os << fmt(k) << '\n';
  return os.str();
}

std::string text_triangles(const delaunay2d::Triangulation& tri) {
  std::ostringstream os;
  for (const auto& t : delaunay2d::interior_triangles(tri))
    os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  return os.str();
}

std::string text_lp(const lp2d::LpResult& r) {
  std::ostringstream os;
  switch (r.status) {
    case lp2d::LpStatus::Infeasible:
      os << "infeasible\n";
      break;
    case lp2d::LpStatus::UnboundedRejected:
      os << "unbounded-rejected\n";
      break;
    case lp2d::LpStatus::Optimal: {
      os << "optimal " << fmt(r.x) << ' ' << fmt(r.y) << "\ntight";
      for (const auto id : r.tight) os << ' ' << id;
      os << '\n';
      break;
    }
  }
  return os.str();
}

std::string text_pair(const closestpair2d::CpResult& r) {
  std::ostringstream os;
  os << r.a << ' ' << r.b << ' ' << fmt(r.dist) << '\n';
  return os.str();
}

std::string text_seb(const seb2d::SebState& s) {
  std::ostringstream os;
  os << fmt(s.disk.cx) << ' ' << fmt(s.disk.cy) << ' ' << fmt(s.disk.radius) << "\nsupport";
  for (std::uint8_t i = 0; i < s.support_size; ++i) os << ' ' << s.support[i];
  os << '\n';
  return os.str();
}

std::string text_lelists(const lelists::LeListsResult& r) {
  std::ostringstream os;
  for (std::size_t u = 0; u < r.lists.size(); ++u) {
    os << u << ':';
    for (const auto& e : r.lists[u]) os << " (" << e.source << ',' << fmt(e.dist) << ')';
    os << '\n';
  }
  return os.str();
}

std::vector<std::uint32_t> canonical_labels(const std::vector<std::uint32_t>& labels) {
  std::vector<std::uint32_t> remap(labels.size(), 0xFFFFFFFFu), out(labels.size());
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (remap[labels[v]] == 0xFFFFFFFFu) remap[labels[v]] = next++;
    out[v] = remap[labels[v]];
  }
  return out;
}

std::string text_scc(const std::vector<std::uint32_t>& labels) {
  std::ostringstream os;
  const auto canon = canonical_labels(labels);
  for (std::size_t v = 0; v < canon.size(); ++v) os << v << ' ' << canon[v] << '\n';
  return os.str();
}

// ---- validation oracles (desk-scale, invoked by --validate) ----

bool validate_lp_against_vertices(const std::vector<lp2d::Halfplane>& user,
                                  std::pair<double, double> objective,
                                  const lp2d::LpResult& got) {
  // Reconstruct the augmented system (user constraints plus the two
  // bounding halfplanes the solver injects) and enumerate feasible vertices.
  std::vector<lp2d::Halfplane> all(user);
  const double px = -objective.second, py = objective.first;
  all.push_back(lp2d::Halfplane{objective.first + px, objective.second + py, 1e9});
  all.push_back(lp2d::Halfplane{objective.first - px, objective.second - py, 1e9});
  const double slack = 1e-9;
  bool any_feasible = false;
  double best = 0.0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const double det = all[i].a * all[j].b - all[j].a * all[i].b;
      if (det == 0.0) continue;
      const double x = (all[i].c * all[j].b - all[j].c * all[i].b) / det;
      const double y = (all[i].a * all[j].c - all[j].a * all[i].c) / det;
      bool ok = true;
      for (const auto& h : all) {
        if (h.a * x + h.b * y > h.c + slack * std::max(1.0, std::fabs(h.c))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const double val = objective.first * x + objective.second * y;
      if (!any_feasible || val > best) best = val;
      any_feasible = true;
    }
  }
  if (!any_feasible) return got.status == lp2d::LpStatus::Infeasible;
  if (got.status == lp2d::LpStatus::Infeasible) return false;
  const double val = objective.first * got.x + objective.second * got.y;
  return std::fabs(val - best) <= 1e-9 * std::max(1.0, std::fabs(best));
}

bool lp_point_feasible(const std::vector<lp2d::Halfplane>& user, const lp2d::LpResult& got) {
  if (got.status == lp2d::LpStatus::Infeasible) return true;  // nothing cheap to check
  for (const auto& h : user)
    if (h.a * got.x + h.b * got.y > h.c + 1e-9 * std::max(1.0, std::fabs(h.c))) return false;
  return true;
}

bool validate_cp_brute(std::span<const geomkit::Point2D> pts, const closestpair2d::CpResult& got) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
      best = std::min(best, dx * dx + dy * dy);
    }
  }
  return got.dist * got.dist == best || std::fabs(got.dist - std::sqrt(best)) <= 1e-12;
}

bool validate_seb_containment(std::span<const geomkit::Point2D> pts, const seb2d::SebState& s) {
  const double slack = 1e-9 * std::max(1.0, s.disk.radius);
  for (const auto& p : pts) {
    const double d = std::hypot(p.x - s.disk.cx, p.y - s.disk.cy);
    if (d > s.disk.radius + slack) return false;
  }
  if (s.support_size < 2 || s.support_size > 3) return false;
  for (std::uint8_t i = 0; i < s.support_size; ++i) {
    const auto& p = pts[s.support[i]];
    const double d = std::hypot(p.x - s.disk.cx, p.y - s.disk.cy);
    if (std::fabs(d - s.disk.radius) > slack) return false;
  }
  return true;
}

bool validate_lelists_definition(const graphcore::Graph& g, const order::Permutation& perm,
                                 const lelists::LeListsResult& got) {
  std::vector<std::vector<lelists::LeEntry>> expect(g.n);
  std::vector<double> delta(g.n, graphcore::kUnreachable);
  for (std::uint32_t step = 0; step < perm.size(); ++step) {
    const auto dist = graphcore::oracle_sssp(g, perm.order[step]);
    for (std::uint32_t u = 0; u < g.n; ++u) {
      if (dist[u] < delta[u]) {
        delta[u] = dist[u];
        expect[u].push_back(lelists::LeEntry{perm.order[step], dist[u]});
      }
    }
  }
  return expect == got.lists;
}

// ---- run dispatch ----

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
};

RunOutcome run_sort(const RunSpec& spec, exec::ThreadPool& pool) {
  std::vector<double> keys;
  if (!spec.keys_path.empty())
    keys = load_file(spec.keys_path, parse_keys);
  else
    keys = datasets::random_keys(static_cast<std::uint32_t>(spec.n), derived_seed(spec.seed, kDataTag));

  RunOutcome out;
  out.report.n = keys.size();
  Timer timer;
  bstsort::SortResult result;
  dagmeter::IterationDag meter;
  if (spec.mode == "par") {
    result = bstsort::sort_par(keys, pool);
    out.report.rounds = result.rounds;
  } else {
    result = bstsort::sort_seq(keys, spec.meter_depth ? &meter : nullptr);
  }
  out.report.wall_ms = timer.ms();
  out.report.counters["height"] = bstsort::height(result.tree);
  if (spec.meter_depth) {
    if (spec.mode == "par") bstsort::sort_seq(keys, &meter);  // depth comes from a sequential replay
    out.report.depth = meter.longest_path();
  }
  out.text = text_sorted(result.sorted);

  if (spec.validate) {
    auto expected = keys;
    std::sort(expected.begin(), expected.end());
    const auto other = spec.mode == "par" ? bstsort::sort_seq(keys) : bstsort::sort_par(keys, pool);
    bool same_tree = result.tree.root == other.tree.root &&
                     result.tree.nodes.size() == other.tree.nodes.size();
    for (std::size_t i = 0; same_tree && i < result.tree.nodes.size(); ++i)
      same_tree = result.tree.nodes[i].left == other.tree.nodes[i].left &&
                  result.tree.nodes[i].right == other.tree.nodes[i].right;
    out.validation_ok = same_tree && result.sorted == expected;
  }
  return out;
}

RunOutcome run_delaunay(const RunSpec& spec, exec::ThreadPool& pool) {
  std::vector<geomkit::Point2D> pts;
  if (!spec.points_path.empty())
    pts = load_file(spec.points_path, parse_points_stream);
  else
    pts = datasets::random_points(static_cast<std::uint32_t>(spec.n), derived_seed(spec.seed, kDataTag));
  const auto perm = order::seeded_permutation(static_cast<std::uint32_t>(pts.size()),
                                              derived_seed(spec.seed, kPermTag));

  RunOutcome out;
  out.report.n = pts.size();
  Timer timer;
  dagmeter::IterationDag meter;
  delaunay2d::DtResult result = spec.mode == "par"
                                    ? delaunay2d::triangulate_par(pts, perm, pool)
                                    : delaunay2d::triangulate_seq(pts, perm,
                                                                  spec.meter_depth ? &meter : nullptr);
  out.report.wall_ms = timer.ms();
  out.report.rounds = result.rounds;
  out.report.counters["incircle_count"] = result.incircle_count;
  if (spec.meter_depth) {
    if (spec.mode == "par") delaunay2d::triangulate_seq(pts, perm, &meter);
    out.report.depth = meter.longest_path();
  }
  out.text = text_triangles(result.tri);

  if (spec.validate) {
    out.validation_ok = delaunay2d::validate_delaunay(result, pts).first;
    if (out.validation_ok) {
      const auto other = spec.mode == "par" ? delaunay2d::triangulate_seq(pts, perm)
                                            : delaunay2d::triangulate_par(pts, perm, pool);
      out.validation_ok = delaunay2d::interior_triangles(result.tri) ==
                              delaunay2d::interior_triangles(other.tri) &&
                          result.incircle_count == other.incircle_count;
    }
  }
  return out;
}

RunOutcome run_lp(const RunSpec& spec, exec::ThreadPool& pool) {
  std::vector<lp2d::Halfplane> hs;
  if (!spec.constraints_path.empty())
    hs = load_file(spec.constraints_path, parse_halfplanes);
  else
    hs = datasets::tangent_halfplanes(static_cast<std::uint32_t>(spec.n),
                                      derived_seed(spec.seed, kDataTag));
  const auto perm = order::seeded_permutation(static_cast<std::uint32_t>(hs.size()),
                                              derived_seed(spec.seed, kPermTag));

  RunOutcome out;
  out.report.n = hs.size();
  Timer timer;
  const lp2d::LpResult result = spec.mode == "par" ? lp2d::lp_par(hs, spec.objective, perm, pool)
                                                   : lp2d::lp_seq(hs, spec.objective, perm);
  out.report.wall_ms = timer.ms();
  out.report.rounds = result.trace.rounds;
  out.report.counters["special_steps"] = result.special_steps;
  out.text = text_lp(result);

  if (spec.validate) {
    const auto other = spec.mode == "par" ? lp2d::lp_seq(hs, spec.objective, perm)
                                          : lp2d::lp_par(hs, spec.objective, perm, pool);
    out.validation_ok = text_lp(result) == text_lp(other);
    if (out.validation_ok) {
      out.validation_ok = hs.size() <= 1000 ? validate_lp_against_vertices(hs, spec.objective, result)
                                            : lp_point_feasible(hs, result);
    }
  }
  return out;
}

RunOutcome run_closest_pair(const RunSpec& spec, exec::ThreadPool& pool) {
  std::vector<geomkit::Point2D> pts;
  if (!spec.points_path.empty())
    pts = load_file(spec.points_path, parse_points_stream);
  else
    pts = datasets::random_points(static_cast<std::uint32_t>(spec.n), derived_seed(spec.seed, kDataTag));
  const auto perm = order::seeded_permutation(static_cast<std::uint32_t>(pts.size()),
                                              derived_seed(spec.seed, kPermTag));

  RunOutcome out;
  out.report.n = pts.size();
  Timer timer;
  const auto result = spec.mode == "par" ? closestpair2d::closest_pair_par(pts, perm, pool)
                                         : closestpair2d::closest_pair_seq(pts, perm);
  out.report.wall_ms = timer.ms();
  out.report.rounds = result.trace.rounds;
  out.report.counters["rebuilds"] = result.rebuilds;
  out.text = text_pair(result);

  if (spec.validate) {
    const auto other = spec.mode == "par" ? closestpair2d::closest_pair_seq(pts, perm)
                                          : closestpair2d::closest_pair_par(pts, perm, pool);
    out.validation_ok = result.a == other.a && result.b == other.b && result.dist == other.dist;
    if (out.validation_ok && pts.size() <= 5000) out.validation_ok = validate_cp_brute(pts, result);
  }
  return out;
}

RunOutcome run_seb(const RunSpec& spec, exec::ThreadPool& pool) {
  std::vector<geomkit::Point2D> pts;
  if (!spec.points_path.empty())
    pts = load_file(spec.points_path, parse_points_stream);
  else
    pts = datasets::random_points(static_cast<std::uint32_t>(spec.n), derived_seed(spec.seed, kDataTag));
  const auto perm = order::seeded_permutation(static_cast<std::uint32_t>(pts.size()),
                                              derived_seed(spec.seed, kPermTag));

  RunOutcome out;
  out.report.n = pts.size();
  Timer timer;
  const auto result = spec.mode == "par" ? seb2d::seb_par(pts, perm, pool)
                                         : seb2d::seb_seq(pts, perm);
  out.report.wall_ms = timer.ms();
  out.report.rounds = result.trace.rounds;
  out.report.counters["update1_calls"] = result.update1_calls;
  out.report.counters["update2_calls"] = result.update2_calls;
  out.text = text_seb(result);

  if (spec.validate) {
    const auto other = spec.mode == "par" ? seb2d::seb_seq(pts, perm) : seb2d::seb_par(pts, perm, pool);
    out.validation_ok = text_seb(result) == text_seb(other) && validate_seb_containment(pts, result);
  }
  return out;
}

graphcore::Graph load_graph(const RunSpec& spec) {
  if (!spec.graph_path.empty()) return load_file(spec.graph_path, parse_graph_stream);
  if (spec.n == 0) throw std::runtime_error("need --graph or --n/--m to generate one");
  return graphcore::gen_random_graph(static_cast<std::uint32_t>(spec.n), spec.m,
                                     derived_seed(spec.seed, kDataTag), spec.weighted);
}

RunOutcome run_lelists(const RunSpec& spec, exec::ThreadPool& pool) {
  const auto g = load_graph(spec);
  const auto perm = order::seeded_permutation(g.n, derived_seed(spec.seed, kPermTag));

  RunOutcome out;
  out.report.n = g.n;
  out.report.m = g.m();
  Timer timer;
  const auto result = spec.mode == "par" ? lelists::le_lists_par(g, perm, pool)
                                         : lelists::le_lists_seq(g, perm);
  out.report.wall_ms = timer.ms();
  out.report.rounds = result.trace.rounds;
  out.report.counters["visits"] = result.visits;
  out.text = text_lelists(result);

  if (spec.validate) {
    const auto other = spec.mode == "par" ? lelists::le_lists_seq(g, perm)
                                          : lelists::le_lists_par(g, perm, pool);
    out.validation_ok = result.lists == other.lists;
    if (out.validation_ok && g.n <= 200)
      out.validation_ok = validate_lelists_definition(g, perm, result);
  }
  return out;
}

RunOutcome run_scc(const RunSpec& spec, exec::ThreadPool& pool) {
  const auto g = load_graph(spec);
  const auto perm = order::seeded_permutation(g.n, derived_seed(spec.seed, kPermTag));

  RunOutcome out;
  out.report.n = g.n;
  out.report.m = g.m();
  Timer timer;
  const auto result = spec.mode == "par" ? scc::scc_par(g, perm, pool) : scc::scc_seq(g, perm);
  out.report.wall_ms = timer.ms();
  out.report.rounds = result.trace.rounds;
  out.report.counters["visits"] = result.visits;
  out.report.counters["components"] = result.components;
  out.text = text_scc(result.labels);

  if (spec.validate)
    out.validation_ok = scc::same_partition(result.labels, graphcore::oracle_scc(g));
  return out;
}

}  // namespace

RunOutcome run_algorithm(const RunSpec& spec) {
  exec::ThreadPool pool(spec.mode == "par" ? spec.threads : 1);
  RunOutcome out;
  if (spec.algo == "sort")
    out = run_sort(spec, pool);
  else if (spec.algo == "delaunay")
    out = run_delaunay(spec, pool);
  else if (spec.algo == "lp")
    out = run_lp(spec, pool);
  else if (spec.algo == "closest-pair")
    out = run_closest_pair(spec, pool);
  else if (spec.algo == "seb")
    out = run_seb(spec, pool);
  else if (spec.algo == "le-lists")
    out = run_lelists(spec, pool);
  else if (spec.algo == "scc")
    out = run_scc(spec, pool);
  else
    throw std::runtime_error("unknown algorithm '" + spec.algo + "'");

  out.report.algo = spec.algo;
  out.report.seed = spec.seed;
  out.report.mode = spec.mode;
  out.report.threads = spec.mode == "par" ? (spec.threads ? spec.threads
                                                          : exec::ThreadPool::default_threads())
                                          : 1;
  if (spec.validate) out.report.validated = out.validation_ok;
  return out;
}

std::vector<BenchRow> bench_sweep(const RunSpec& base, const std::vector<std::uint64_t>& sizes,
                                  const std::vector<std::uint64_t>& seeds,
                                  const std::vector<std::string>& modes) {
  std::vector<BenchRow> rows;
  for (const std::uint64_t n : sizes) {
    for (const std::uint64_t seed : seeds) {
      for (const std::string& mode : modes) {
        RunSpec spec = base;
        spec.n = n;
        if (spec.m == 0) spec.m = 4 * n;  // default edge count for generated graphs
        spec.seed = seed;
        spec.mode = mode;
        BenchRow row;
        try {
          row.report = run_algorithm(spec).report;
          row.status = "ok";
        } catch (const std::exception& e) {
          row.report.algo = spec.algo;
          row.report.n = n;
          row.report.seed = seed;
          row.report.mode = mode;
          row.status = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  static const char* kCounters[] = {"height",        "incircle_count", "special_steps",
                                    "rebuilds",      "update1_calls",  "update2_calls",
                                    "visits",        "components"};
  std::ostringstream os;
  os << "algo,n,m,seed,mode,threads,rounds,depth";
  for (const char* c : kCounters) os << ',' << c;
  os << ",wall_ms,validated,status\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    os << r.algo << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.mode << ','
       << r.threads << ',' << r.rounds << ',';
    if (r.depth) os << *r.depth;
    for (const char* c : kCounters) {
      os << ',';
      const auto it = r.counters.find(c);
      if (it != r.counters.end()) os << it->second;
    }
    os << ',' << fmt(r.wall_ms) << ',';
    if (r.validated) os << (*r.validated ? "true" : "false");
    std::string status = row.status;
    std::replace(status.begin(), status.end(), ',', ';');
    os << ',' << status << '\n';
  }
  return os.str();
}

namespace {

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t lo = std::stoull(text.substr(0, dots));
    const std::uint64_t hi = std::stoull(text.substr(dots + 2));
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ','))
    if (!item.empty()) out.push_back(std::stoull(item));
  return out;
}

std::pair<double, double> parse_objective(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::runtime_error("objective must be 'a,b'");
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

void write_output(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"randomized incremental algorithms, sequential and parallel"};
  app.require_subcommand(1);

  RunSpec spec;
  std::string metrics_out, output_path, objective_text = "1,0";

  auto add_common = [&](CLI::App* cmd, bool geometric) {
    cmd->add_option("--seed", spec.seed, "run seed");
    cmd->add_option("--mode", spec.mode, "seq or par")
        ->check(CLI::IsMember({"seq", "par"}));
    cmd->add_option("--threads", spec.threads, "worker threads for par mode (0 = auto)");
    cmd->add_flag("--validate", spec.validate, "run the module's oracle");
    cmd->add_option("--metrics-out", metrics_out, "append a one-line JSON metrics record");
    cmd->add_option("--out", output_path, "write the algorithm output here instead of stdout");
    if (geometric) cmd->add_option("--points", spec.points_path, "input points file");
  };

  auto* sort_cmd = app.add_subcommand("sort", "BST insertion sort");
  sort_cmd->add_option("--n", spec.n, "generated key count");
  sort_cmd->add_option("--keys", spec.keys_path, "keys file, one per line");
  sort_cmd->add_flag("--depth", spec.meter_depth, "record the dependence depth (sequential replay)");
  add_common(sort_cmd, false);

  auto* dt_cmd = app.add_subcommand("delaunay", "2D Delaunay triangulation");
  dt_cmd->add_option("--n", spec.n, "generated point count");
  dt_cmd->add_flag("--depth", spec.meter_depth, "record the sub-step dependence depth");
  add_common(dt_cmd, true);

  auto* lp_cmd = app.add_subcommand("lp", "2D linear programming");
  lp_cmd->add_option("--n", spec.n, "generated constraint count");
  lp_cmd->add_option("--constraints", spec.constraints_path, "constraint file, 'a b c' per line");
  lp_cmd->add_option("--objective", objective_text, "objective direction 'a,b'");
  add_common(lp_cmd, false);

  auto* cp_cmd = app.add_subcommand("closest-pair", "closest pair of points");
  cp_cmd->add_option("--n", spec.n, "generated point count");
  add_common(cp_cmd, true);

  auto* seb_cmd = app.add_subcommand("seb", "smallest enclosing disk");
  seb_cmd->add_option("--n", spec.n, "generated point count");
  add_common(seb_cmd, true);

  auto* le_cmd = app.add_subcommand("le-lists", "least-element lists");
  le_cmd->add_option("--graph", spec.graph_path, "edge list file");
  le_cmd->add_option("--n", spec.n, "generated vertex count");
  le_cmd->add_option("--m", spec.m, "generated edge count");
  le_cmd->add_flag("--weighted", spec.weighted, "generate weighted edges");
  add_common(le_cmd, false);

  auto* scc_cmd = app.add_subcommand("scc", "strongly connected components");
  scc_cmd->add_option("--graph", spec.graph_path, "edge list file");
  scc_cmd->add_option("--n", spec.n, "generated vertex count");
  scc_cmd->add_option("--m", spec.m, "generated edge count");
  add_common(scc_cmd, false);

  auto* gen_cmd = app.add_subcommand("gen", "dataset generation");
  auto* gen_graph = gen_cmd->add_subcommand("graph", "random directed graph");
  std::uint64_t gen_n = 0, gen_m = 0, gen_seed = 1;
  bool gen_weighted = false;
  std::string gen_out;
  gen_graph->add_option("--n", gen_n, "vertex count")->required();
  gen_graph->add_option("--m", gen_m, "edge count")->required();
  gen_graph->add_option("--seed", gen_seed, "seed");
  gen_graph->add_flag("--weighted", gen_weighted, "uniform (0,1] weights");
  gen_graph->add_option("--out", gen_out, "output file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "multi-seed sweeps to CSV");
  std::string bench_algo, bench_sizes = "1000", bench_seeds = "1..5", bench_modes = "both";
  std::string bench_out;
  std::uint64_t bench_m = 0;
  bool bench_weighted = false;
  bench_cmd->add_option("--algo", bench_algo, "algorithm name")->required();
  bench_cmd->add_option("--n", bench_sizes, "sizes, comma list or a..b");
  bench_cmd->add_option("--m", bench_m, "edge count for generated graphs (default 4n)");
  bench_cmd->add_option("--seeds", bench_seeds, "seeds, comma list or a..b");
  bench_cmd->add_option("--mode", bench_modes, "seq, par, or both")
      ->check(CLI::IsMember({"seq", "par", "both"}));
  bench_cmd->add_option("--threads", spec.threads, "worker threads for par runs");
  bench_cmd->add_flag("--weighted", bench_weighted, "weighted generated graphs");
  bench_cmd->add_option("--out", bench_out, "CSV path (default stdout)");

  try {
    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (gen_graph->parsed()) {
      const auto g = graphcore::gen_random_graph(static_cast<std::uint32_t>(gen_n), gen_m,
                                                 gen_seed, gen_weighted);
      write_output(gen_out, graphcore::to_edge_list(g), out);
      return 0;
    }
    if (bench_cmd->parsed()) {
      spec.algo = bench_algo;
      spec.m = bench_m;
      spec.weighted = bench_weighted;
      const auto sizes = parse_u64_list(bench_sizes);
      const auto seeds = parse_u64_list(bench_seeds);
      std::vector<std::string> modes;
      if (bench_modes == "both")
        modes = {"seq", "par"};
      else
        modes = {bench_modes};
      const auto rows = bench_sweep(spec, sizes, seeds, modes);
      write_output(bench_out, bench_csv(rows), out);
      return 0;
    }

    for (auto* cmd : {sort_cmd, dt_cmd, lp_cmd, cp_cmd, seb_cmd, le_cmd, scc_cmd}) {
      if (cmd->parsed()) {
        spec.algo = cmd->get_name();
        break;
      }
    }
    if (spec.algo.empty()) {
      err << "unknown subcommand\n";
      return 2;
    }
    spec.objective = parse_objective(objective_text);

    const RunOutcome outcome = run_algorithm(spec);
    write_output(output_path, outcome.text, out);
    if (!metrics_out.empty()) {
      std::ofstream mf(metrics_out, std::ios::app);
      if (!mf) throw std::runtime_error("cannot open " + metrics_out);
      mf << outcome.report.to_json() << '\n';
    }
    if (spec.validate && !outcome.validation_ok) {
      err << "validation FAILED\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace incpar::cli
