#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it with string streams.
//
// Exit codes: 0 ok, 1 usage, 2 invalid input or unmet precondition,
// 3 degree cap, truncation, budget or overflow, 4 a repro row failed.

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <vca/vca.hpp>

namespace vca::cli {

using nlohmann::json;

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalid = 2;
inline constexpr int kLimit = 3;
inline constexpr int kReproFailed = 4;

inline constexpr const char* kBoundText = "(n+1)^((n+3)/2)/2^n";

struct Settings {
  bool json = false;
  std::optional<Int> cap;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

inline std::uint64_t default_budget() {
  const char* env = std::getenv("VCA_BUDGET");
  if (env == nullptr || *env == '\0') return DecomposeOptions{}.budget;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || env[used] != '\0' || v == 0) throw InvalidInput("VCA_BUDGET must be a positive integer");
  return v;
}

// Complex from a file or from --family m k, never both.
inline WeightedComplex load_complex(const std::string& path, const std::vector<Int>& family) {
  if (!family.empty() && !path.empty()) throw UsageError("give either a complex file or --family, not both");
  if (!family.empty()) return counterexample_family(family[0], family[1]).complex;
  if (path.empty()) throw UsageError("a complex file or --family m k is required");
  return io::complex_from_json(io::read_json_file(path));
}

inline WeightedGraph load_graph(const std::string& path, const std::vector<Int>& family) {
  if (!family.empty() && path.empty()) return counterexample_family(family[0], family[1]).graph;
  WeightedComplex c = load_complex(path, family);
  if (!c.is_graph()) throw InvalidInput("this command needs a graph: every facet must have two vertices");
  return WeightedGraph::from_complex(c);
}

inline std::string vector_string(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + 1);
  return s;
}

inline json one_based(const std::vector<int>& v) {
  json out = json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

inline AlgebraPresentation compute_basis(const WeightedComplex& c, const Settings& s) {
  GeneratorOptions opts;
  opts.degree_cap = s.cap;
  opts.threads = s.threads;
  return generators(c, opts);
}

inline json basis_summary(const WeightedComplex& c, const AlgebraPresentation& p) {
  json sum;
  if (p.truncated) {
    sum["max_degree"] = nullptr;
    sum["standard_graded"] = nullptr;
    sum["bound_n"] = std::string(kBoundText) + " unknown (truncated)";
  } else {
    const Int d = max_degree(p);
    sum["max_degree"] = d;
    sum["standard_graded"] = d <= 1;
    const bool ok = degree_bound(static_cast<Int>(c.n())).holds(d);
    sum["bound_n"] = std::string(kBoundText) + (ok ? " satisfied" : " violated");
  }
  try {
    sum["gorenstein"] = is_gorenstein(c).gorenstein;
  } catch (const PreconditionViolation&) {
    sum["gorenstein"] = nullptr;
  }
  return sum;
}

inline int cmd_basis(const WeightedComplex& c, bool with_units, const Settings& s, std::ostream& out,
                     std::ostream& err) {
  const AlgebraPresentation p = compute_basis(c, s);
  if (s.json) {
    json j = io::presentation_to_json(p);
    if (with_units) {
      json units = json::array();
      for (std::size_t i = 0; i < c.n(); ++i) {
        ExponentVector e(c.n(), 0);
        e[i] = 1;
        units.push_back(io::cover_point_to_json({e, 0}));
      }
      j["units"] = units;
    }
    j["summary"] = basis_summary(c, p);
    emit(out, j);
  } else {
    if (with_units)
      for (std::size_t i = 0; i < c.n(); ++i) out << "x" << i + 1 << "\n";
    out << io::presentation_to_text(p);
  }
  if (p.truncated) {
    err << "truncated: generators above degree " << (s.cap ? *s.cap : default_degree_cap(c.n()))
        << " were dropped\n";
    return kLimit;
  }
  return kOk;
}

inline int cmd_symbolic(const MonomialIdeal& i, Int k, const std::optional<MonomialIdeal>& wrt, const Settings& s,
                        std::ostream& out) {
  if (k < 1) throw InvalidArgument("-n must be positive");
  MonomialIdeal r = MonomialIdeal::zero(i.n());
  if (wrt) {
    r = symbolic_power_wrt(i, *wrt, k);
  } else {
    if (!i.is_squarefree())
      throw NotSquarefree("ideal is not squarefree; pass --wrt J to saturate I^n by J instead");
    r = squarefree_symbolic_power(i, k);
  }
  if (s.json)
    emit(out, io::ideal_to_json(r));
  else
    out << io::render_ideal(r) << "\n";
  return kOk;
}

inline int cmd_power(const MonomialIdeal& i, Int k, const Settings& s, std::ostream& out) {
  if (k < 0) throw InvalidArgument("-n must be non-negative");
  const MonomialIdeal r = power(i, k);
  if (s.json)
    emit(out, io::ideal_to_json(r));
  else
    out << io::render_ideal(r) << "\n";
  return kOk;
}

inline int cmd_compare(const MonomialIdeal& i, Int k, const Settings& s, std::ostream& out) {
  const PowerComparison c = compare_powers(i, k);
  if (s.json) {
    json j{{"k", k}, {"equal", c.equal}};
    j["witness"] = c.witness ? json(*c.witness) : json(nullptr);
    emit(out, j);
  } else if (c.equal) {
    out << "equal\n";
  } else {
    out << "proper, witness " << io::render_monomial(*c.witness) << "\n";
  }
  return kOk;
}

inline int cmd_check(const std::string& what, const WeightedComplex& c, const Settings& s, std::ostream& out,
                     std::ostream& err) {
  json j{{"check", what}};
  std::ostringstream text;
  int code = kOk;
  if (what == "bipartite") {
    if (!c.is_graph()) throw InvalidInput("bipartite check needs a graph: every facet must have two vertices");
    const Bipartition b = bipartition(WeightedGraph::from_complex(c));
    j["result"] = b.bipartite;
    text << "bipartite: " << (b.bipartite ? "true" : "false") << "\n";
    if (b.bipartite) {
      j["u"] = one_based(b.u);
      j["v"] = one_based(b.v);
      text << "U: " << vector_string(b.u) << "\nV: " << vector_string(b.v) << "\n";
    } else {
      j["odd_cycle"] = one_based(b.odd_cycle);
      text << "odd cycle: " << vector_string(b.odd_cycle) << "\n";
    }
  } else if (what == "standard") {
    const AlgebraPresentation p = compute_basis(c, s);
    if (p.truncated) {
      err << "truncated: cannot decide standard grading\n";
      return kLimit;
    }
    const Int d = max_degree(p);
    j["result"] = d <= 1;
    j["max_degree"] = d;
    text << "standard graded: " << (d <= 1 ? "true" : "false") << "\n";
    j["witness"] = nullptr;
    for (const auto& g : p.generators) {
      if (g.k < 2) continue;
      j["witness"] = io::cover_point_to_json(g);
      text << "witness: " << io::render_cover_point(g) << "\n";
      break;
    }
  } else if (what == "gorenstein") {
    const GorensteinVerdict v = is_gorenstein(c);
    j["result"] = v.gorenstein;
    json stripped = json::array();
    text << "gorenstein: " << (v.gorenstein ? "true" : "false") << "\n";
    for (const auto& [vertex, w] : v.stripped) {
      stripped.push_back({{"vertex", vertex + 1}, {"weight", w}});
      text << "stripped facet: {" << vertex + 1 << "} weight " << w << "\n";
    }
    j["stripped"] = stripped;
  } else if (what == "bound") {
    const AlgebraPresentation p = compute_basis(c, s);
    if (p.truncated) {
      err << "truncated: the degree cap dropped generators\n";
      return kLimit;
    }
    const Int d = max_degree(p);
    const DegreeBound b = degree_bound(static_cast<Int>(c.n()));
    const bool ok = b.holds(d);
    j["result"] = ok;
    j["max_degree"] = d;
    j["largest_admissible"] = b.largest_admissible().str();
    j["bound_n"] = std::string(kBoundText) + (ok ? " satisfied" : " violated");
    text << "max degree: " << d << "\n"
         << "bound " << kBoundText << ": " << (ok ? "satisfied" : "violated") << " (largest admissible degree "
         << b.largest_admissible() << ")\n";
  } else {
    throw UsageError("unknown check \"" + what + "\"; use bipartite, standard, gorenstein or bound");
  }
  if (s.json)
    emit(out, j);
  else
    out << text.str();
  return code;
}

inline int cmd_decompose(const WeightedComplex& c, const CoverPoint& p, const Settings& s, std::ostream& out) {
  if (p.a.size() != c.n()) throw InvalidInput("cover length differs from the vertex count");
  DecomposeOptions opts;
  opts.budget = s.budget ? *s.budget : default_budget();
  opts.threads = s.threads;
  const auto w = decompose(c, p.a, p.k, opts);
  if (s.json) {
    json j{{"cover", io::cover_point_to_json(p)}, {"budget", opts.budget}, {"indecomposable", !w.has_value()}};
    if (w) j["witness"] = {io::cover_point_to_json(w->first), io::cover_point_to_json(w->second)};
    emit(out, j);
  } else if (w) {
    out << "decomposable: " << io::render_cover_point(w->first) << " + " << io::render_cover_point(w->second) << "\n";
  } else {
    out << "indecomposable (exhaustive, budget=" << opts.budget << ")\n";
  }
  return kOk;
}

inline int cmd_split(const WeightedGraph& g, const CoverPoint& p, const Settings& s, std::ostream& out) {
  if (p.a.size() != g.n()) throw InvalidInput("cover length differs from the vertex count");
  std::vector<CoverPoint> parts;
  std::string method;
  if (bipartition(g).bipartite) {
    parts = bipartite_chain(g, p.a, p.k);
    method = "bipartite";
  } else {
    if (p.k < 3) throw PreconditionViolation("non-bipartite split needs order k >= 3");
    const CoverSplit sp = split_order2(g, p.a, p.k);
    parts = {sp.first, sp.second};
    method = "order2";
  }
  if (s.json) {
    json arr = json::array();
    for (const auto& q : parts) arr.push_back(io::cover_point_to_json(q));
    emit(out, json{{"method", method}, {"parts", arr}});
  } else {
    for (const auto& q : parts) out << io::render_cover_point(q) << "\n";
  }
  return kOk;
}

inline int cmd_skeleton(Int n, Int j, const Settings& s, std::ostream& out) {
  const AlgebraPresentation p = skeleton_generators(n, j);
  if (s.json)
    emit(out, io::presentation_to_json(p));
  else
    out << io::presentation_to_text(p);
  return kOk;
}

inline int cmd_family(Int m, Int k, const Settings& s, std::ostream& out) {
  const CounterexampleFamily f = counterexample_family(m, k);
  if (s.json) {
    json j = io::complex_to_json(f.complex);
    json edges = json::array();
    for (std::size_t e = 0; e < f.graph.edge_count(); ++e)
      edges.push_back({f.graph.edge(e).first + 1, f.graph.edge(e).second + 1});
    j["graph_edges"] = edges;
    j["cover"] = io::cover_point_to_json(f.cover);
    emit(out, j);
  } else {
    out << "n: " << f.complex.n() << "\n";
    out << "cover: " << io::render_cover_point(f.cover) << "\n";
    for (const auto& fc : f.complex.facets()) out << "facet: " << vca::detail::facet_string(fc) << "\n";
  }
  return kOk;
}

inline int cmd_bound(Int n, const Settings& s, std::ostream& out) {
  const DegreeBound d = degree_bound(n);
  const DeterminantBound v = fs_determinant_bound(n);
  if (s.json) {
    emit(out, json{{"n", n},
                   {"degree_bound", kBoundText},
                   {"largest_degree", d.largest_admissible().str()},
                   {"determinant_bound", "(n+1)^((n+1)/2)/2^n"},
                   {"largest_determinant", v.largest_admissible().str()}});
  } else {
    out << "generator degree < " << kBoundText << ": largest admissible " << d.largest_admissible() << "\n";
    out << "|det| of 0/1 matrices <= (n+1)^((n+1)/2)/2^n: largest admissible " << v.largest_admissible() << "\n";
  }
  return kOk;
}

struct ReproRow {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

inline std::vector<ReproRow> repro_rows(const Settings& s) {
  std::vector<ReproRow> rows;
  auto listing = [](const AlgebraPresentation& p) {
    std::string t;
    for (const auto& g : p.generators) t += (t.empty() ? "" : ", ") + io::render_cover_point(g);
    return t;
  };
  auto add = [&](std::string name, std::string expected, std::string got) {
    const bool pass = expected == got;
    rows.push_back({std::move(name), std::move(expected), std::move(got), pass});
  };

  const WeightedComplex tri(3, {{0, 1}, {0, 2}, {1, 2}});
  add("triangle generators", "x1*x2*t, x1*x3*t, x2*x3*t, x1*x2*x3*t^2", listing(compute_basis(tri, s)));
  add("triangle x1*x2*x3*t^2", "indecomposable", decompose(tri, {1, 1, 1}, 2) ? "decomposable" : "indecomposable");

  const WeightedComplex sq(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  add("square generators", "x1*x3*t, x2*x4*t", listing(compute_basis(sq, s)));

  add("skeleton 3 1", listing(skeleton_generators(3, 1)), listing(compute_basis(skeleton(3, 1), s)));

  {
    const CounterexampleFamily f = counterexample_family(2, 2);
    HilbertBasisOptions opts;
    opts.threads = s.threads;
    const HilbertBasis hb = hilbert_basis(build_cone(f.complex), opts);
    Int top = 0;
    for (const auto& pt : hb.points) top = std::max(top, pt.back());
    std::string tops;
    for (const auto& pt : hb.degree_slice(top))
      tops += (tops.empty() ? "" : ", ") + io::render_cover_point({ExponentVector(pt.begin(), pt.end() - 1), top});
    add("family 2 2 basis size", "52", std::to_string(hb.points.size()));
    add("family 2 2 top generator", io::render_cover_point(f.cover), tops);
  }
  {
    const CounterexampleFamily f = counterexample_family(4, 2);
    DecomposeOptions opts;
    opts.budget = s.budget ? *s.budget : default_budget();
    opts.threads = s.threads;
    const bool indec = !decompose(f.complex, f.cover.a, f.cover.k, opts).has_value();
    add("family 4 2 cover", "indecomposable, order 11 > 8",
        std::string(indec ? "indecomposable" : "decomposable") + ", order " + std::to_string(f.cover.k) +
            (f.cover.k > static_cast<Int>(f.complex.n()) - 1 ? " > " : " <= ") + std::to_string(f.complex.n() - 1));
  }
  {
    std::vector<MonomialIdeal> primes{prime_power(3, std::vector<int>{0, 1}, 1), prime_power(3, std::vector<int>{1, 2}, 1),
                                      prime_power(3, std::vector<int>{0, 2}, 1)};
    const VeroneseSearch v = find_veronese_d(primes, 3, 6);
    add("triangle primes Veronese d", "2", v.d ? std::to_string(*v.d) : "none");
    const MonomialIdeal i1 = cover_ideal(tri);
    const ExponentVector cube{3, 3, 3};
    const bool in6 = squarefree_symbolic_power(i1, 6).contains(cube);
    const bool in3sq = power(squarefree_symbolic_power(i1, 3), 2).contains(cube);
    add("(x1*x2*x3)^3 in I_6, not in I_3^2", "true, false",
        std::string(in6 ? "true" : "false") + ", " + (in3sq ? "true" : "false"));
  }
  add("triangle gorenstein", "true", is_gorenstein(tri).gorenstein ? "true" : "false");
  return rows;
}

inline int cmd_repro(const Settings& s, std::ostream& out) {
  const auto rows = repro_rows(s);
  bool all = true;
  if (s.json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"name", r.name}, {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}});
      all = all && r.pass;
    }
    emit(out, arr);
  } else {
    for (const auto& r : rows) {
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(36) << r.name << r.got;
      if (!r.pass) out << "  (expected " << r.expected << ")";
      out << "\n";
      all = all && r.pass;
    }
  }
  return all ? kOk : kReproFailed;
}

// Maps library exceptions to exit codes.
inline int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidComplex& e) {
    err << "invalid complex (" << to_string(e.defect()) << "): " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const TruncatedPresentation& e) {
    err << "truncated: " << e.what() << "\n";
    return kLimit;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex cover algebras of weighted simplicial complexes", "vca"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "vca 1.0.0");

  Settings s;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", s.json, "JSON output");
    sub->add_option("--threads", s.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };

  std::string path, wrt_path, cover_text, check_kind;
  std::vector<Int> family;
  Int order = 0, n_arg = 0, j_arg = 0, m_arg = 0, k_arg = 0;
  bool with_units = false;
  Int cap_value = 0;
  std::uint64_t budget_value = 0;

  auto* basis = app.add_subcommand("basis", "minimal algebra generators of a complex");
  basis->add_option("file", path, "complex JSON file");
  basis->add_option("--family", family, "use the counterexample family with parameters m k")->expected(2);
  basis->add_option("--cap", cap_value, "drop generators above this degree")->check(CLI::PositiveNumber);
  basis->add_flag("--all", with_units, "also list the degree-0 unit vectors");
  add_common(basis);

  auto* symbolic = app.add_subcommand("symbolic", "symbolic power of a monomial ideal");
  symbolic->add_option("file", path, "ideal JSON file")->required();
  symbolic->add_option("-n", order, "power")->required();
  symbolic->add_option("--wrt", wrt_path, "saturate I^n by the ideal in this file");
  add_common(symbolic);

  auto* pw = app.add_subcommand("power", "ordinary power of a monomial ideal");
  pw->add_option("file", path, "ideal JSON file")->required();
  pw->add_option("-n", order, "power")->required();
  add_common(pw);

  auto* compare = app.add_subcommand("compare", "compare ordinary and symbolic powers of a squarefree ideal");
  compare->add_option("file", path, "ideal JSON file")->required();
  compare->add_option("-n", order, "power")->required();
  add_common(compare);

  auto* check = app.add_subcommand("check", "bipartite, standard, gorenstein or bound verdicts");
  check->add_option("kind", check_kind, "bipartite|standard|gorenstein|bound")
      ->required()
      ->check(CLI::IsMember({"bipartite", "standard", "gorenstein", "bound"}));
  check->add_option("file", path, "complex JSON file");
  check->add_option("--family", family, "use the counterexample family with parameters m k")->expected(2);
  check->add_option("--cap", cap_value, "degree cap for the generator computation")->check(CLI::PositiveNumber);
  add_common(check);

  auto* dec = app.add_subcommand("decompose", "exhaustive decomposability search for one cover");
  dec->add_option("file", path, "complex JSON file");
  dec->add_option("--family", family, "use the counterexample family with parameters m k")->expected(2);
  dec->add_option("--cover", cover_text, "cover as \"a1,...,an;k\" (default with --family: the distinguished one)");
  dec->add_option("--budget", budget_value, "maximal search space (default $VCA_BUDGET or 1e8)")
      ->check(CLI::PositiveNumber);
  add_common(dec);

  auto* split = app.add_subcommand("split", "split a graph cover into covers of smaller order");
  split->add_option("file", path, "graph JSON file");
  split->add_option("--family", family, "use the counterexample family graph with parameters m k")->expected(2);
  split->add_option("--cover", cover_text, "cover as \"a1,...,an;k\"")->required();
  add_common(split);

  auto* skel = app.add_subcommand("skeleton", "closed-form generators of the j-skeleton of the simplex");
  skel->add_option("n", n_arg, "vertices")->required();
  skel->add_option("j", j_arg, "dimension")->required();
  add_common(skel);

  auto* fam = app.add_subcommand("family", "the counterexample family complex and its distinguished cover");
  fam->add_option("m", m_arg, "m >= 2")->required();
  fam->add_option("k", k_arg, "k >= 2")->required();
  add_common(fam);

  auto* bound = app.add_subcommand("bound", "degree and determinant bounds for n vertices");
  bound->add_option("n", n_arg, "vertices")->required();
  add_common(bound);

  auto* repro = app.add_subcommand("repro", "run the worked examples and print a pass/fail table");
  repro->add_option("--budget", budget_value, "decomposition budget")->check(CLI::PositiveNumber);
  add_common(repro);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  }
  if (cap_value > 0) s.cap = cap_value;
  if (budget_value > 0) s.budget = budget_value;

  auto load_ideal = [](const std::string& p) { return io::ideal_from_json(io::read_json_file(p)); };
  return guarded(
      [&]() -> int {
        if (*basis) return cmd_basis(load_complex(path, family), with_units, s, out, err);
        if (*symbolic) {
          std::optional<MonomialIdeal> j;
          if (!wrt_path.empty()) j = load_ideal(wrt_path);
          return cmd_symbolic(load_ideal(path), order, j, s, out);
        }
        if (*pw) return cmd_power(load_ideal(path), order, s, out);
        if (*compare) return cmd_compare(load_ideal(path), order, s, out);
        if (*check) return cmd_check(check_kind, load_complex(path, family), s, out, err);
        if (*dec) {
          if (!family.empty() && path.empty() && cover_text.empty()) {
            const CounterexampleFamily f = counterexample_family(family[0], family[1]);
            return cmd_decompose(f.complex, f.cover, s, out);
          }
          if (cover_text.empty()) throw UsageError("--cover is required");
          return cmd_decompose(load_complex(path, family), io::parse_cover(cover_text), s, out);
        }
        if (*split) return cmd_split(load_graph(path, family), io::parse_cover(cover_text), s, out);
        if (*skel) return cmd_skeleton(n_arg, j_arg, s, out);
        if (*fam) return cmd_family(m_arg, k_arg, s, out);
        if (*bound) return cmd_bound(n_arg, s, out);
        if (*repro) return cmd_repro(s, out);
        throw UsageError("no subcommand");
      },
      err);
}

}  // namespace vca::cli
