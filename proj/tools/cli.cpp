#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "colnum/admissibility.hpp"
#include "colnum/augmentation.hpp"
#include "colnum/centered.hpp"
#include "colnum/cover.hpp"
#include "colnum/exact.hpp"
#include "colnum/exact_distance.hpp"
#include "colnum/games.hpp"
#include "colnum/generate.hpp"
#include "colnum/io.hpp"
#include "colnum/minor_density.hpp"
#include "colnum/partition.hpp"
#include "colnum/profile.hpp"
#include "colnum/reach.hpp"
#include "colnum/tree_decomposition.hpp"
#include "colnum/util.hpp"
#include "colnum/wideness.hpp"

namespace colnum::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Common {
  std::string graph_path;
  std::string order_path;
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
};

Graph load_graph(const Common& c) {
  if (c.graph_path.empty()) throw Error("--graph is required");
  return read_graph_file(c.graph_path);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> read_vertex_set(const std::string& path, int n) {
  std::istringstream in(slurp(path));
  std::vector<int> out;
  int v;
  while (in >> v) {
    if (v < 0 || v >= n) throw Error("set vertex " + std::to_string(v) + " out of range");
    out.push_back(v);
  }
  return out;
}

std::optional<VertexOrder> load_order(const Common& c, int n) {
  if (c.order_path.empty()) return std::nullopt;
  return VertexOrder::parse(slurp(c.order_path), n);
}

std::string order_line(const VertexOrder& o) {
  auto s = o.serialize();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string json_ints(const std::vector<int>& xs) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  out << "]";
  return out.str();
}

Strategy make_strategy(const std::string& name, std::uint64_t seed,
                       const std::optional<VertexOrder>& order) {
  if (name == "order") {
    if (!order) throw Error("order-based strategy needs --order");
    return Strategy::order_based(*order);
  }
  if (name == "random") return Strategy::random(seed);
  if (name == "greedy") return Strategy::greedy();
  if (name == "minimax") return Strategy::minimax();
  throw Error("unknown strategy '" + name + "' (order|random|greedy|minimax)");
}

// text mode renders each flat JSON object line as "key=value" pairs
std::string render_text(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() != '{') {
      out << line << "\n";
      continue;
    }
    std::string flat;
    int depth = 0;
    for (char ch : line) {
      if (ch == '{' || ch == '[') {
        ++depth;
        if (depth > 1) flat += ch;
      } else if (ch == '}' || ch == ']') {
        --depth;
        if (depth >= 1) flat += ch;
      } else if (ch == '"' && depth == 1) {
        // drop quotes around top-level keys and values
      } else if (ch == ':' && depth == 1) {
        flat += '=';
      } else if (ch == ',' && depth == 1) {
        flat += ' ';
      } else {
        flat += ch;
      }
    }
    out << flat << "\n";
  }
  return out.str();
}

void emit(const Common& c, const std::string& text, std::string& out) {
  std::string rendered = c.format == "text" ? render_text(text) : text;
  if (c.out_path.empty()) {
    out += rendered;
  } else {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + c.out_path + "'");
    f << rendered;
  }
}

void add_common(CLI::App* cmd, Common& c, bool needs_graph = true) {
  if (needs_graph) cmd->add_option("--graph", c.graph_path, "input graph file");
  cmd->add_option("--order", c.order_path, "vertex order file (permutation line)");
  cmd->add_option("--out", c.out_path, "output file (default stdout)");
  cmd->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", c.seed, "seed for all randomness");
  cmd->add_option("--threads", c.threads, "internal parallelism bound");
}

// ----------------------------------------------------------------- compute

int cmd_compute(const Common& c, const std::string& measure, std::string r_text, int ell,
                bool exact, int cap, int rmax, std::string& out) {
  auto g = load_graph(c);
  std::ostringstream res;

  if (measure == "profile") {
    auto pi = load_order(c, g.vertex_count());
    VertexOrder order = pi ? *pi : default_order(g, Radius(std::max(rmax, 1)));
    auto p = order_profile(g, order, std::max(rmax, 1), ell > 0 ? std::vector<int>{ell}
                                                                : std::vector<int>{});
    res << order.serialize();
    res << "{\"measure\":\"profile\",\"table\":" << p.to_json() << "}\n";
    emit(c, res.str(), out);
    return 0;
  }
  if (measure == "nabla") {
    Radius rr = Radius::parse(r_text);
    if (rr.is_infinite()) throw Error("nabla needs a finite rank");
    int rank = rr.value();
    auto w = nabla_exact(g, rank, cap > 0 ? cap : 8);
    res << "{\"measure\":\"nabla\",\"r\":" << rank << ",\"value\":\"" << w.density.str()
        << "\",\"branch_sets\":[";
    for (size_t i = 0; i < w.branch_sets.size(); ++i) {
      if (i) res << ",";
      res << json_ints(w.branch_sets[i]);
    }
    res << "]}\n";
    emit(c, res.str(), out);
    return 0;
  }
  if (measure == "degeneracy") {
    auto d = degeneracy_order(g);
    for (int pos = 0; pos < d.order.size(); ++pos) {
      int v = d.order.vertex_at(pos), back = 0;
      for (int u : g.neighbors(v))
        if (d.order.less(u, v)) ++back;
      if (back > d.degeneracy)
        throw ContractViolation("degeneracy order exceeds its back-degree bound");
    }
    res << "{\"measure\":\"degeneracy\",\"value\":" << d.degeneracy << ",\"order\":\""
        << order_line(d.order) << "\",\"verified\":true}\n";
    emit(c, res.str(), out);
    return 0;
  }

  Radius r = Radius::parse(r_text);
  Measure m = parse_measure(measure);
  if (!r.is_infinite() && r.value() < 1 &&
      (m == Measure::col || m == Measure::wcol || m == Measure::gcol || m == Measure::adm))
    throw Error("radius must be >= 1 (or inf)");
  auto pi = load_order(c, g.vertex_count());
  if (exact) {
    auto result = exact_parameter(g, r, m, ell, cap > 0 ? cap : kDefaultExactCap);
    int attained = 0;
    switch (m) {
      case Measure::col: attained = col_of_order(g, result.witness, r); break;
      case Measure::wcol: attained = wcol_of_order(g, result.witness, r); break;
      case Measure::gcol: attained = gcol_of_order(g, result.witness, r, ell); break;
      case Measure::adm: attained = adm_of_order(g, result.witness, r); break;
      case Measure::treewidth:
        attained = col_of_order(g, result.witness, Radius::infinity()) - 1;
        break;
      case Measure::treedepth:
        attained = wcol_of_order(g, result.witness, Radius::infinity());
        break;
    }
    if (attained != result.value)
      throw ContractViolation("exact witness does not attain the reported value");
    res << "{\"measure\":\"" << measure << "\",\"r\":\"" << r.str()
        << "\",\"value\":" << result.value << ",\"witness\":\""
        << order_line(result.witness) << "\",\"verified\":true}";
  } else {
    VertexOrder order = pi ? *pi : default_order(g, r);
    int value = 0;
    switch (m) {
      case Measure::col: value = col_of_order(g, order, r); break;
      case Measure::wcol: value = wcol_of_order(g, order, r); break;
      case Measure::gcol: value = gcol_of_order(g, order, r, ell); break;
      case Measure::adm: value = adm_of_order(g, order, r); break;
      case Measure::treewidth: value = col_of_order(g, order, Radius::infinity()) - 1; break;
      case Measure::treedepth: value = wcol_of_order(g, order, Radius::infinity()); break;
    }
    res << "{\"measure\":\"" << measure << "\",\"r\":\"" << r.str()
        << "\",\"value\":" << value << ",\"of_order\":true}";
  }
  res << "\n";
  emit(c, res.str(), out);
  return 0;
}

// ------------------------------------------------------------------- order

int cmd_order(const Common& c, const std::string& method, std::string r_text, int rmax,
              bool approx, int cap, const std::string& arcs_path, std::string& out) {
  auto g = load_graph(c);
  std::ostringstream res;
  if (method == "greedy-adm") {
    Radius r = Radius::parse(r_text);
    auto res_order =
        greedy_adm_order(g, r, approx ? FanMode::approx : FanMode::exact,
                         cap > 0 ? cap : kDefaultInteriorCap);
    res << res_order.order.serialize();
    bool verified = false;
    if (!approx) {
      if (adm_of_order(g, res_order.order, r, cap > 0 ? cap : kDefaultInteriorCap) !=
          res_order.value)
        throw ContractViolation("greedy order does not attain its reported value");
      verified = true;
    }
    res << "{\"method\":\"greedy-adm\",\"r\":\"" << r.str() << "\",\"mode\":\""
        << (approx ? "approx" : "exact") << "\",\"value\":" << res_order.value
        << ",\"verified\":" << (verified ? "true" : "false") << "}\n";
  } else if (method == "universal") {
    auto u = universal_order(g, std::max(rmax, 1), {}, cap > 0 ? cap : kDefaultInteriorCap);
    res << u.order.serialize();
    res << "{\"method\":\"universal\",\"r_max\":" << std::max(rmax, 1) << ",\"achieved\":"
        << json_ints(u.achieved) << ",\"doublings\":" << u.doublings
        << ",\"verified\":true}\n";
  } else if (method == "degeneracy") {
    auto d = degeneracy_order(g);
    res << d.order.serialize();
    res << "{\"method\":\"degeneracy\",\"value\":" << d.degeneracy << "}\n";
  } else if (method == "augmentation") {
    Radius r = Radius::parse(r_text);
    if (r.is_infinite() || r.value() < 1) throw Error("augmentation order needs finite r >= 1");
    auto seq = fraternal_augment(g, r.value());
    auto res_order = order_from_augmentation(g, seq);
    res << res_order.order.serialize();
    if (!arcs_path.empty()) {
      std::ofstream f(arcs_path, std::ios::binary);
      if (!f) throw Error("cannot write '" + arcs_path + "'");
      f << seq.serialize_arcs() << seq.summary_json() << "\n";
    }
    res << "{\"method\":\"augmentation\",\"r\":" << r.value()
        << ",\"delta\":" << res_order.delta << ",\"bound\":" << res_order.certified_bound
        << ",\"wcol\":" << res_order.achieved_wcol << ",\"verified\":true}\n";
  } else {
    throw Error("unknown order method '" + method + "'");
  }
  emit(c, res.str(), out);
  return 0;
}

// ------------------------------------------------------------------- color

int cmd_color(const Common& c, const std::string& kind, int p, std::string r_text,
              std::string& out) {
  auto g = load_graph(c);
  auto pi = load_order(c, g.vertex_count());
  std::ostringstream res;
  if (kind == "centered") {
    auto col = p_centered_zhu(g, p, pi);
    res << col.serialize();
    res << "{\"kind\":\"centered\",\"p\":" << p << ",\"palette\":" << col.palette()
        << ",\"verified\":true}\n";
  } else if (kind == "exact-distance") {
    auto col = exact_distance_color(g, p, pi);
    res << col.serialize();
    res << "{\"kind\":\"exact-distance\",\"p\":" << p << ",\"palette\":" << col.palette()
        << ",\"verified\":true}\n";
  } else if (kind == "reach") {
    Radius r = Radius::parse(r_text);
    VertexOrder order = pi ? *pi : default_order(g, r);
    auto col = reach_graph_coloring(g, order, r);
    bool proper = col.proper_on(reach_graph(g, order, r));
    if (!proper) throw ContractViolation("reach graph coloring not proper");
    res << col.serialize();
    res << "{\"kind\":\"reach\",\"r\":\"" << r.str() << "\",\"palette\":" << col.palette()
        << ",\"verified\":true}\n";
  } else {
    throw Error("unknown coloring kind '" + kind + "'");
  }
  emit(c, res.str(), out);
  return 0;
}

// --------------------------------------------------------------- partition

int cmd_partition(const Common& c, const std::string& policy, int rmax, std::string& out) {
  auto g = load_graph(c);
  auto p = isometric_peel(g, policy == "bfs_vertical" ? PeelPolicy::bfs_vertical
                                                      : PeelPolicy::diameter_path);
  auto q = quotient(g, p);
  auto schedule = [](int r) { return 2 * r + 1; };
  auto violation = flatness_check(g, p, schedule, std::max(rmax, 1));
  std::ostringstream res;
  for (const auto& part : p.parts) {
    for (size_t i = 0; i < part.size(); ++i) res << (i ? " " : "") << part[i];
    res << "\n";
  }
  res << "{\"policy\":\"" << policy << "\",\"parts\":" << p.part_count()
      << ",\"width\":" << q.width << ",\"flat\":" << (violation ? "false" : "true")
      << ",\"schedule\":\"2r+1\"}\n";
  emit(c, res.str(), out);
  return 0;
}

// --------------------------------------------------------------- decompose

int cmd_decompose(const Common& c, const std::string& what, const std::string& td_path,
                  int rmax, std::string& out) {
  auto g = load_graph(c);
  if (td_path.empty()) throw Error("--td is required");
  auto t = TreeDecomposition::parse(slurp(td_path));
  t.validate(g);
  std::ostringstream res;
  if (what == "validate") {
    res << "{\"valid\":true,\"nodes\":" << t.node_count
        << ",\"adhesion\":" << t.adhesion_width() << "}\n";
  } else if (what == "order") {
    std::vector<VertexOrder> torso_orders;
    for (int x = 0; x < t.node_count; ++x)
      torso_orders.push_back(degeneracy_order(t.torso(g, x)).order);
    auto pi = compose_td_order(g, t, torso_orders);
    res << pi.serialize();
    int k = t.adhesion_width();
    auto p = order_profile(g, pi, std::max(rmax, 1));
    bool within = true;
    for (int r = 1; r <= std::max(rmax, 1); ++r) {
      int torso_wcol = 0;
      for (int x = 0; x < t.node_count; ++x)
        torso_wcol = std::max(torso_wcol,
                              wcol_of_order(t.torso(g, x), torso_orders[x], Radius(r)));
      within &= p.wcol_at(r) <= binomial(k + r, k) * (torso_wcol + k);
    }
    if (!within) throw ContractViolation("composed order exceeds the decomposition bound");
    res << "{\"what\":\"order\",\"adhesion\":" << k << ",\"profile\":" << p.to_json()
        << ",\"verified\":true}\n";
  } else {
    throw Error("unknown decompose action '" + what + "'");
  }
  emit(c, res.str(), out);
  return 0;
}

// -------------------------------------------------------------------- play

int cmd_play(const Common& c, const std::string& game, std::string r_text, int cops,
             const std::string& variant, const std::string& cop_name,
             const std::string& robber_name, const std::string& splitter_name,
             const std::string& connector_name, int rounds, std::string& out) {
  auto g = load_graph(c);
  Radius r = Radius::parse(r_text);
  auto pi = load_order(c, g.vertex_count());
  std::ostringstream res;
  auto emit_transcript = [&res](const GameTranscript& a, const GameTranscript& b) {
    if (a.to_jsonl() != b.to_jsonl())
      throw ContractViolation("transcript replay diverged");
    res << a.to_jsonl() << "{\"verified\":{\"deterministic\":true}}\n";
  };
  if (game == "counter") {
    VertexOrder order = pi ? *pi : default_order(g, r);
    emit_transcript(counter_game_transcript(g, r, order),
                    counter_game_transcript(g, r, order));
  } else if (game == "splitter") {
    if (r.is_infinite()) throw Error("splitter game needs finite r");
    VertexOrder order = pi ? *pi : default_order(g, Radius(2 * r.value()));
    Strategy split = splitter_name == "order" || splitter_name.empty()
                         ? Strategy::order_based(order)
                         : make_strategy(splitter_name, c.seed, order);
    Strategy conn = make_strategy(connector_name.empty() ? "random" : connector_name,
                                  c.seed + 1, order);
    emit_transcript(splitter_game(g, r.value(), split, conn, rounds),
                    splitter_game(g, r.value(), split, conn, rounds));
  } else if (game == "pursuit") {
    if (r.is_infinite()) throw Error("pursuit game needs finite r");
    PursuitVariant var = variant == "inert" ? PursuitVariant::inert : PursuitVariant::agile;
    VertexOrder order = pi ? *pi : default_order(g, Radius(2 * r.value()));
    int budget = cops;
    if (budget <= 0) budget = wcol_of_order(g, order, Radius(2 * r.value()));
    Strategy cop = cop_name == "order" || cop_name.empty()
                       ? Strategy::order_based(order)
                       : make_strategy(cop_name, c.seed, order);
    Strategy rob = make_strategy(robber_name.empty() ? "random" : robber_name, c.seed + 2,
                                 order);
    emit_transcript(pursuit_game(g, r.value(), var, budget, cop, rob, rounds),
                    pursuit_game(g, r.value(), var, budget, cop, rob, rounds));
  } else {
    throw Error("unknown game '" + game + "'");
  }
  emit(c, res.str(), out);
  return 0;
}

// ------------------------------------------------------------------- cover

int cmd_cover(const Common& c, std::string r_text, std::string& out) {
  auto g = load_graph(c);
  Radius r = Radius::parse(r_text);
  if (r.is_infinite() || r.value() < 1) throw Error("cover needs finite r >= 1");
  auto pi = load_order(c, g.vertex_count());
  VertexOrder order = pi ? *pi : default_order(g, Radius(2 * r.value()));
  auto cover = neighborhood_cover(g, order, r.value());
  std::ostringstream res;
  res << cover.serialize() << cover.summary_json() << "\n";
  emit(c, res.str(), out);
  return 0;
}

// ---------------------------------------------------------------- wideness

int cmd_wideness(const Common& c, const std::string& what, const std::string& set_path,
                 std::string r_text, int m, int s_budget, std::string& out) {
  auto g = load_graph(c);
  Radius rr = Radius::parse(r_text);
  if (rr.is_infinite()) throw Error("wideness needs finite r");
  int r = rr.value();
  std::vector<int> A;
  if (set_path.empty() || set_path == "all") {
    for (int v = 0; v < g.vertex_count(); ++v) A.push_back(v);
  } else {
    A = read_vertex_set(set_path, g.vertex_count());
  }
  std::ostringstream res;
  if (what == "uqw") {
    auto result = uqw_extract(g, A, r, m, s_budget);
    if (auto* cert = std::get_if<WidenessCertificate>(&result)) {
      std::string why;
      if (!cert->verify(g, &why)) throw ContractViolation("uqw certificate invalid: " + why);
      res << "{\"found\":true,\"certificate\":" << cert->to_json() << ",\"verified\":true}\n";
    } else {
      auto& f = std::get<WidenessFailure>(result);
      res << "{\"found\":false,\"best_b\":" << f.best_b << ",\"used_s\":" << f.used_s
          << "}\n";
    }
  } else if (what == "traces") {
    auto pi = load_order(c, g.vertex_count());
    auto rep = neighborhood_complexity(g, A, r, pi ? &*pi : nullptr);
    res << "{\"distinct\":" << rep.distinct << ",\"wcol_2r\":" << rep.wcol_2r
        << ",\"bound\":" << rep.bound << ",\"within\":" << (rep.within ? "true" : "false")
        << "}\n";
  } else {
    throw Error("unknown wideness action '" + what + "'");
  }
  emit(c, res.str(), out);
  return 0;
}

// ----------------------------------------------------------------- certify

int cmd_certify(const Common& c, const std::string& what, const std::string& set_path,
                int k, std::string r_text, std::string& out) {
  if (what != "fanset") throw Error("unknown certify kind '" + what + "'");
  auto g = load_graph(c);
  if (set_path.empty()) throw Error("--set is required");
  auto A = read_vertex_set(set_path, g.vertex_count());
  Radius r = Radius::parse(r_text);
  auto result = verify_fan_set(g, A, k, r);
  std::ostringstream res;
  if (auto* cert = std::get_if<FanSetCertificate>(&result)) {
    std::string why;
    if (!cert->verify(g, &why)) throw ContractViolation("fan-set certificate invalid: " + why);
    res << "{\"certified\":true,\"certificate\":" << cert->to_json()
        << ",\"verified\":true}\n";
  } else {
    res << "{\"certified\":false,\"refutation\":" << std::get<int>(result) << "}\n";
  }
  emit(c, res.str(), out);
  return 0;
}

// --------------------------------------------------------------------- gen

int cmd_gen(const Common& c, const std::string& family, const std::vector<double>& params,
            std::string& out) {
  auto g = generate(family, params, c.seed);
  emit(c, serialize_edge_list(g), out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::string& out, std::string& err) {
  CLI::App app{"generalized coloring numbers toolkit"};
  app.require_subcommand(1);

  Common c;
  std::string noun, r_text = "1", variant = "agile";
  std::string td_path, set_path, arcs_path;
  std::string cop_name, robber_name, splitter_name, connector_name;
  std::vector<double> params;
  int ell = 0, cap = 0, rmax = 4, p = 2, m = 1, s_budget = 0, cops = 0, rounds = 64;
  bool exact = false, approx = false;

  auto* compute = app.add_subcommand("compute", "graph parameters");
  compute->add_option("measure", noun)->required();
  add_common(compute, c);
  compute->add_option("--r", r_text);
  compute->add_option("--ell", ell);
  compute->add_flag("--exact", exact, "brute-force minimum over all orders");
  compute->add_option("--cap", cap, "override exponential-size cap");
  compute->add_option("--rmax", rmax);

  auto* order = app.add_subcommand("order", "construct vertex orders");
  order->add_option("method", noun)->required();
  add_common(order, c);
  order->add_option("--r", r_text);
  order->add_option("--rmax", rmax);
  order->add_flag("--approx", approx);
  order->add_option("--cap", cap);
  order->add_option("--arcs", arcs_path, "also write the augmentation arc list here");

  auto* color = app.add_subcommand("color", "structural colorings");
  color->add_option("kind", noun)->required();
  add_common(color, c);
  color->add_option("--p", p);
  color->add_option("--r", r_text);

  auto* partition = app.add_subcommand("partition", "isometric path peeling");
  partition->add_option("policy", noun)->required();
  add_common(partition, c);
  partition->add_option("--rmax", rmax);

  auto* decompose = app.add_subcommand("decompose", "tree decompositions");
  decompose->add_option("action", noun)->required();
  add_common(decompose, c);
  decompose->add_option("--td", td_path, "tree decomposition file");
  decompose->add_option("--rmax", rmax);

  auto* play = app.add_subcommand("play", "pursuit and deletion games");
  play->add_option("game", noun)->required();
  add_common(play, c);
  play->add_option("--r", r_text);
  play->add_option("--cops", cops);
  play->add_option("--variant", variant)->check(CLI::IsMember({"agile", "inert"}));
  play->add_option("--cop", cop_name);
  play->add_option("--robber", robber_name);
  play->add_option("--splitter", splitter_name);
  play->add_option("--connector", connector_name);
  play->add_option("--rounds", rounds);

  auto* cover = app.add_subcommand("cover", "neighborhood covers");
  cover->add_option("kind", noun)->required();
  add_common(cover, c);
  cover->add_option("--r", r_text);

  auto* wideness = app.add_subcommand("wideness", "quasi-wideness and traces");
  wideness->add_option("action", noun)->required();
  add_common(wideness, c);
  wideness->add_option("--set", set_path, "vertex set file or 'all'");
  wideness->add_option("--r", r_text);
  wideness->add_option("--m", m);
  wideness->add_option("--s-budget", s_budget);

  auto* certify = app.add_subcommand("certify", "machine-checkable certificates");
  certify->add_option("kind", noun)->required();
  add_common(certify, c);
  certify->add_option("--set", set_path);
  certify->add_option("--k", m);
  certify->add_option("--r", r_text);

  auto* certify_fanset =
      app.add_subcommand("certify-fanset", "alias for 'certify fanset'");
  add_common(certify_fanset, c);
  certify_fanset->add_option("--set", set_path);
  certify_fanset->add_option("--k", m);
  certify_fanset->add_option("--r", r_text);

  auto* gen = app.add_subcommand("gen", "test-family generators");
  gen->add_option("family", noun)->required();
  add_common(gen, c, false);
  gen->add_option("--params", params, "family parameters");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    if (e.get_exit_code() == 0) {
      out += app.help();
      return 0;
    }
    err += std::string(e.what()) + "\n" + app.help();
    return 1;
  }

  try {
    set_threads(c.threads);
    if (compute->parsed()) return cmd_compute(c, noun, r_text, ell, exact, cap, rmax, out);
    if (order->parsed()) return cmd_order(c, noun, r_text, rmax, approx, cap, arcs_path, out);
    if (color->parsed()) return cmd_color(c, noun, p, r_text, out);
    if (partition->parsed()) return cmd_partition(c, noun, rmax, out);
    if (decompose->parsed()) return cmd_decompose(c, noun, td_path, rmax, out);
    if (play->parsed())
      return cmd_play(c, noun, r_text, cops, variant, cop_name, robber_name, splitter_name,
                      connector_name, rounds, out);
    if (cover->parsed()) return cmd_cover(c, r_text, out);
    if (wideness->parsed()) return cmd_wideness(c, noun, set_path, r_text, m, s_budget, out);
    if (certify->parsed()) return cmd_certify(c, noun, set_path, m, r_text, out);
    if (certify_fanset->parsed()) return cmd_certify(c, "fanset", set_path, m, r_text, out);
    if (gen->parsed()) return cmd_gen(c, noun, params, out);
    err += "no subcommand\n";
    return 1;
  } catch (const ContractViolation& e) {
    err += std::string("internal contract violation: ") + e.what() + "\n";
    return 2;
  } catch (const Error& e) {
    err += std::string("error: ") + e.what() + "\n";
    return 1;
  }
}

}  // namespace colnum::cli
