// tmpr: command-line front end. Every subcommand except selftest prints one
// JSON object on stdout; diagnostics go to stderr.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "tmpr/selftest.hpp"
#include "tmpr/tmpr.hpp"

using json = nlohmann::ordered_json;
using namespace tmpr;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_contract = 2;
constexpr int exit_indeterminate = 3;
constexpr int exit_usage = 64;

struct Report {
  std::string subcommand;
  json inputs = json::object();
  json result = json::object();
  std::string status = "ok";
};

int emit(Report const& r, std::optional<double> wall_ms) {
  json out;
  out["format"] = 1;
  out["subcommand"] = r.subcommand;
  out["status"] = r.status;
  out["inputs"] = r.inputs;
  out["result"] = r.result;
  if (wall_ms) out["wall_ms"] = *wall_ms;
  std::cout << out.dump() << '\n';
  if (r.status == "contract-error") return exit_contract;
  if (r.status == "indeterminate") return exit_indeterminate;
  return exit_ok;
}

// Whitespace-separated tokens from --word, a file, or stdin. Lines starting
// with '#' and a leading "format=1" token are skipped.
std::vector<std::string> read_tokens(std::string const& inline_word, std::string const& path) {
  std::string text;
  if (!inline_word.empty()) {
    text = inline_word;
  } else if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ContractError("cannot open word file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::vector<std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    for (std::string t; ls >> t;) out.push_back(t);
  }
  if (!out.empty() && out.front() == "format=1") out.erase(out.begin());
  if (out.empty()) throw ContractError("empty word");
  return out;
}

std::vector<std::int64_t> as_numbers(std::vector<std::string> const& tokens) {
  std::vector<std::int64_t> out;
  for (auto const& t : tokens) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used != t.size()) throw ContractError("--numeric: token '" + t + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

template <typename T>
json tokens_json(std::span<T const> s) {
  json a = json::array();
  for (auto const& x : s) a.push_back(x);
  return a;
}

json pattern_json(Pattern const& p) {
  json a = json::array();
  for (auto r : p.ranks()) a.push_back(r);
  return a;
}

json witness_json(PeriodicityWitness const& w) { return {{"a", w.head_cut}, {"b", w.tail_cut}, {"r", w.period}}; }

json path_json(PathWitness const& w) {
  return {{"vertices", w.vertices}, {"colors", w.colors}, {"complexity", w.complexity()}};
}

json report_json(BoundReport const& r) {
  json out;
  out["theorem"] = r.theorem;
  json pre = json::array();
  for (auto const& c : r.preconditions) pre.push_back({{"name", c.name}, {"met", c.met}, {"detail", c.detail}});
  out["preconditions"] = pre;
  out["emitted"] = r.emitted();
  out["lower"] = r.lower ? json(r.lower->str()) : json(nullptr);
  out["upper"] = r.upper ? json(r.upper->str()) : json(nullptr);
  if (r.lower) out["lower_numeric"] = r.lower->str(true);
  if (r.upper) out["upper_numeric"] = r.upper->str(true);
  out["formula"] = r.formula;
  json extras = json::object();
  for (auto const& [k, v] : r.extras) extras[k] = v;
  out["extras"] = extras;
  return out;
}

OrderedColoring load_coloring(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open coloring file '" + path + "'");
  return read_coloring(in);
}

void save_coloring(std::string const& path, OrderedColoring const& chi) {
  std::ofstream out(path);
  if (!out) throw ContractError("cannot write coloring file '" + path + "'");
  write_coloring(out, chi);
}

OrderedColoring random_coloring(std::mt19937_64& rng, std::size_t n, std::size_t k, Color q) {
  constexpr std::uint64_t limit = 1 << 24;
  if (binomial(n, k) > limit) throw ContractError("surrogate base coloring has more than 2^24 edges");
  std::vector<Color> t(binomial(n, k));
  for (auto& c : t) c = rng() % q + 1;
  return OrderedColoring(n, k, q, std::move(t));
}

std::vector<BitVector> parse_edge(std::string const& text) {
  std::vector<BitVector> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(BitVector::parse(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight monotone path Ramsey toolkit"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall_ms to the report (breaks byte-identical output)");

  // word
  auto* word = app.add_subcommand("word", "Block and pattern analysis of a word");
  word->require_subcommand(1);
  std::string word_text, word_file;
  bool numeric = false;
  auto word_input = [&](CLI::App* sub) {
    sub->add_option("--word", word_text, "Tokens separated by spaces (default: stdin)");
    sub->add_option("--in", word_file, "Read tokens from a file");
    sub->add_flag("--numeric", numeric, "Parse tokens as integers over an ordered alphabet");
  };
  std::size_t wp = 1, wl = 1, wr = 1, wa = 0, wb = 0;
  auto* w_complexity = word->add_subcommand("complexity", "C(S;p)");
  w_complexity->add_option("--p", wp)->required();
  auto* w_blocks = word->add_subcommand("blocks", "Distinct p-blocks");
  w_blocks->add_option("--p", wp)->required();
  auto* w_patterns = word->add_subcommand("patterns", "p-pattern sequence (ordered alphabets)");
  w_patterns->add_option("--p", wp)->required();
  auto* w_pcomp = word->add_subcommand("pattern-complexity", "P(S;p) (ordered alphabets)");
  w_pcomp->add_option("--p", wp)->required();
  auto* w_digraph = word->add_subcommand("digraph", "Factor digraph of order l");
  w_digraph->add_option("--l", wl)->required();
  auto* w_periodic = word->add_subcommand("periodic", "Periodicity with period r");
  w_periodic->add_option("--r", wr)->required();
  auto* w_reduce = word->add_subcommand("reduce", "Drop a symbols from the front and b from the back");
  w_reduce->add_option("--a", wa)->required();
  w_reduce->add_option("--b", wb)->required();
  for (auto* s : {w_complexity, w_blocks, w_patterns, w_pcomp, w_digraph, w_periodic, w_reduce}) word_input(s);

  // mh
  auto* mh = app.add_subcommand("mh", "Finite Morse-Hedlund witness and exhaustive scan");
  std::size_t mh_m = 1, mh_p = 1;
  mh->add_option("--m", mh_m)->required();
  mh->add_option("--p", mh_p)->required();
  word_input(mh);

  // delta
  auto* delta_cmd = app.add_subcommand("delta", "Delta-sequence of a run of bit vectors");
  std::vector<std::string> bitstrings;
  delta_cmd->add_option("vectors", bitstrings, "Bitstrings, least index first")->required();

  // stepup
  auto* stepup = app.add_subcommand("stepup", "Stepping-up coloring on {0,1}^m");
  std::size_t su_p = 2, su_q = 2, su_k = 9, su_m = 5;
  std::uint64_t su_seed = selftest::Options{}.seed;
  Color su_top_q = 2;
  std::string su_top, su_base, su_out;
  std::vector<std::string> su_edges;
  stepup->add_option("--p", su_p);
  stepup->add_option("--q", su_q);
  stepup->add_option("--k", su_k);
  stepup->add_option("--m", su_m);
  stepup->add_option("--seed", su_seed, "Seed for surrogate base colorings");
  stepup->add_option("--top-q", su_top_q, "Palette of the surrogate (k-1)-uniform base coloring");
  stepup->add_option("--top", su_top, "Coloring file for the (k-1)-uniform base");
  stepup->add_option("--base", su_base, "Coloring file for the lowest lower-uniformity base");
  stepup->add_option("--edge", su_edges, "k comma-separated bitstrings in increasing order");
  stepup->add_option("-o", su_out, "Write the materialized coloring");

  // search
  auto* search = app.add_subcommand("search", "Tight monotone path with at most p colors");
  std::string s_coloring;
  std::size_t s_n = 1, s_p = 1;
  bool s_lex = false;
  unsigned s_workers = 1;
  std::optional<std::uint64_t> s_cap;
  search->add_option("--coloring", s_coloring)->required();
  search->add_option("--n", s_n, "Path length in edges")->required();
  search->add_option("--p", s_p)->required();
  search->add_flag("--lex-minimal", s_lex);
  search->add_option("--workers", s_workers);
  search->add_option("--node-cap", s_cap);

  // exact-a
  auto* exact = app.add_subcommand("exact-a", "Exact A_k(n;q,p) by backtracking");
  std::size_t e_k = 2, e_n = 2, e_q = 2, e_p = 1, e_nmax = 6;
  std::optional<std::uint64_t> e_cap;
  exact->add_option("--k", e_k)->required();
  exact->add_option("--n", e_n)->required();
  exact->add_option("--q", e_q)->required();
  exact->add_option("--p", e_p)->required();
  exact->add_option("--nmax", e_nmax)->required();
  exact->add_option("--node-cap", e_cap);
  std::string e_witness_dir;
  exact->add_option("--witness-prefix", e_witness_dir, "Write good colorings to PREFIX<N>.txt");

  // h-exact
  auto* hex = app.add_subcommand("h-exact", "h_{q,p}(N) by full enumeration");
  std::size_t h_q = 2, h_p = 1, h_n = 4;
  hex->add_option("--q", h_q)->required();
  hex->add_option("--p", h_p)->required();
  hex->add_option("--N", h_n)->required();
  std::optional<std::size_t> h_s;
  hex->add_option("--fsw-s", h_s, "Also check h_{q,p}(s^q) < s^p");

  // es2, lift
  auto* es2 = app.add_subcommand("es2", "Erdos-Szekeres 2-coloring of K_{n^2}");
  std::size_t es_n = 2;
  std::string es_out;
  es2->add_option("--n", es_n)->required();
  es2->add_option("-o", es_out)->required();
  auto* lift = app.add_subcommand("lift", "Lift a k-uniform coloring to (k+1)-uniform");
  std::string lift_in, lift_out;
  lift->add_option("--in", lift_in)->required();
  lift->add_option("-o", lift_out)->required();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Symbolic bound reports");
  std::string b_theorem;
  std::size_t b_k = 3, b_p = 1;
  std::string b_n = "1", b_q = "2", b_n0, b_c = "1", b_a1, b_a2;
  bounds->add_option("--theorem", b_theorem)->required()->check(CLI::IsMember({"1", "2", "3", "4", "obs9"}));
  bounds->add_option("--k", b_k);
  bounds->add_option("--n", b_n);
  bounds->add_option("--q", b_q);
  bounds->add_option("--p", b_p);
  bounds->add_option("--n0", b_n0);
  bounds->add_option("--big-o-c", b_c);
  bounds->add_option("--a1", b_a1, "Theorem 3: bound for A_{floor(k/p)-1}(n;q,ceil(p/2))");
  bounds->add_option("--a2", b_a2, "Theorem 3: bound for A_{k-1}(n;(4pq)^(4p),p)");

  // selftest
  auto* st = app.add_subcommand("selftest", "Exhaustive small-instance suites");
  selftest::Options st_opts;
  std::optional<int> st_only;
  st->add_option("--seed", st_opts.seed);
  st->add_flag("--corrupt-es", st_opts.corrupt_es, "Negative control: mutate one ES edge color");
  st->add_option("--suite", st_only, "Run only this suite (1-10)")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  auto const start = std::chrono::steady_clock::now();
  auto wall = [&]() -> std::optional<double> {
    if (!timing) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  Report rep;
  try {
    if (st->parsed()) {
      bool all = true;
      auto suites = selftest::suites();
      int ran = 0;
      for (int i = 1; i <= static_cast<int>(suites.size()); ++i) {
        if (st_only && *st_only != i) continue;
        auto r = suites[i - 1](st_opts);
        std::cout << selftest::format_line(r) << std::endl;
        all = all && r.pass;
        ++ran;
      }
      std::cout << (all ? "selftest: all " + std::to_string(ran) + " suites passed" : std::string("selftest: FAILED"))
                << std::endl;
      return all ? exit_ok : 1;
    }

    if (word->parsed()) {
      rep.subcommand = "word";
      auto tokens = read_tokens(word_text, word_file);
      rep.inputs["word"] = tokens;
      rep.inputs["numeric"] = numeric;
      auto run = [&](auto const& w) {
        using T = typename std::decay_t<decltype(w)>::value_type;
        if (w_complexity->parsed()) {
          rep.inputs["p"] = wp;
          rep.result["C"] = block_complexity(w, wp);
        } else if (w_blocks->parsed()) {
          rep.inputs["p"] = wp;
          json a = json::array();
          for (auto const& b : blocks(w, wp)) a.push_back(tokens_json(std::span<T const>(b.symbols)));
          rep.result["blocks"] = a;
        } else if (w_patterns->parsed()) {
          rep.inputs["p"] = wp;
          json a = json::array();
          for (auto const& pt : pattern_sequence(w, wp)) a.push_back(pattern_json(pt));
          rep.result["patterns"] = a;
        } else if (w_pcomp->parsed()) {
          rep.inputs["p"] = wp;
          rep.result["P"] = pattern_complexity(w, wp);
        } else if (w_digraph->parsed()) {
          rep.inputs["l"] = wl;
          auto g = factor_digraph(w, wl);
          json v = json::array();
          for (auto const& b : g.vertices) v.push_back(tokens_json(std::span<T const>(b.symbols)));
          rep.result["vertices"] = v;
          rep.result["arcs"] = g.arcs;
          rep.result["walk"] = g.walk;
        } else if (w_periodic->parsed()) {
          rep.inputs["r"] = wr;
          rep.result["periodic"] = is_periodic(w, wr);
        } else if (w_reduce->parsed()) {
          rep.inputs["a"] = wa;
          rep.inputs["b"] = wb;
          rep.result["word"] = tokens_json(reduction(w, wa, wb).symbols());
        }
      };
      if (numeric)
        run(Word<std::int64_t>(as_numbers(tokens), true));
      else
        run(Word<std::string>(tokens, false));
    } else if (mh->parsed()) {
      rep.subcommand = "mh";
      auto tokens = read_tokens(word_text, word_file);
      rep.inputs = {{"word", tokens}, {"m", mh_m}, {"p", mh_p}};
      auto run = [&](auto const& w) {
        rep.result["witness"] = witness_json(finite_morse_hedlund(w, mh_m, mh_p));
        auto s = mh_witness_search(w, mh_p);
        rep.result["search"] = s ? witness_json(*s) : json(nullptr);
      };
      if (numeric)
        run(Word<std::int64_t>(as_numbers(tokens), true));
      else
        run(Word<std::string>(tokens, false));
    } else if (delta_cmd->parsed()) {
      rep.subcommand = "delta";
      rep.inputs["vectors"] = bitstrings;
      std::vector<BitVector> run;
      for (auto const& b : bitstrings) run.push_back(BitVector::parse(b));
      auto d = delta_sequence(run);
      rep.result["delta_sequence"] = d.values;
      rep.result["unique_max"] = has_unique_max_property(d);
      bool const mono = is_monotone_run(run);
      rep.result["monotone_run"] = mono;
      if (mono) rep.result["prop_ump"] = check_prop_ump(run);
    } else if (stepup->parsed()) {
      rep.subcommand = "stepup";
      rep.inputs = {{"p", su_p}, {"q", su_q}, {"k", su_k}, {"m", su_m}, {"seed", su_seed}};
      std::mt19937_64 rng(su_seed);
      std::size_t const h0 = std::min(su_k / std::max<std::size_t>(su_p, 1) - 1, alpha(std::max<std::size_t>(su_p, 1), su_k));
      auto surrogate = [&](std::size_t uniformity, Color palette) {
        if (su_m < uniformity) return OrderedColoring(su_m, uniformity, palette, std::vector<Color>{});
        return random_coloring(rng, su_m, uniformity, palette);
      };
      OrderedColoring top = su_top.empty() ? surrogate(su_k - 1, su_top_q) : load_coloring(su_top);
      OrderedColoring base = su_base.empty() ? surrogate(h0, su_q) : load_coloring(su_base);
      rep.inputs["top"] = su_top.empty() ? json("random") : json(su_top);
      rep.inputs["base"] = su_base.empty() ? json("random") : json(su_base);
      auto ctx = StepUpContext::chained(su_p, su_q, su_k, su_m, top, base);
      rep.result["palette"] = std::to_string(ctx.palette());
      rep.result["tuple_count"] = std::to_string(ctx.tuple_count());
      rep.result["pattern_count"] = std::to_string(ctx.pattern_count());
      rep.result["lower_uniformities"] = {ctx.min_lower(), su_k - 2};
      json colors = json::array();
      for (auto const& text : su_edges) {
        auto edge = parse_edge(text);
        json c;
        std::vector<std::string> shown;
        for (auto const& v : edge) shown.push_back(v.to_string());
        c["edge"] = shown;
        auto color = step_up_color(edge, ctx);
        c["id"] = std::to_string(ctx.palette_id(color));
        if (auto const* b = std::get_if<BaseColor>(&color)) {
          c["rule"] = "base";
          c["base"] = b->value;
        } else {
          auto const& t = std::get<TupleColor>(color);
          c["rule"] = "tuple";
          c["coords"] = t.coords;
          c["pattern"] = pattern_json(t.pattern);
        }
        colors.push_back(c);
      }
      rep.result["colors"] = colors;
      if (!su_out.empty()) {
        auto chi = build_stepup_coloring(ctx);
        if (chi.edge_count() > (1u << 22)) throw ContractError("stepup -o: more than 2^22 edges to write");
        save_coloring(su_out, chi);
        rep.result["written"] = su_out;
      }
    } else if (search->parsed()) {
      rep.subcommand = "search";
      rep.inputs = {{"coloring", s_coloring}, {"n", s_n}, {"p", s_p}, {"lex_minimal", s_lex}};
      if (s_cap) rep.inputs["node_cap"] = *s_cap;
      auto chi = load_coloring(s_coloring);
      SearchBudget b;
      b.max_colors = s_p;
      b.lex_minimal = s_lex;
      b.workers = std::max(1u, s_workers);
      b.node_cap = s_cap;
      auto r = find_path(chi, s_n, b);
      rep.result["outcome"] = to_string(r.status);
      rep.result["witness"] = r.witness ? path_json(*r.witness) : json(nullptr);
      if (r.status == SearchStatus::indeterminate) rep.status = "indeterminate";
    } else if (exact->parsed()) {
      rep.subcommand = "exact-a";
      rep.inputs = {{"k", e_k}, {"n", e_n}, {"q", e_q}, {"p", e_p}, {"nmax", e_nmax}};
      ExactOptions opts;
      if (e_cap) {
        opts.node_cap = *e_cap;
        rep.inputs["node_cap"] = *e_cap;
      }
      auto r = exact_A(e_k, e_n, e_q, e_p, e_nmax, opts);
      json entries = json::array();
      bool indeterminate = false;
      for (auto const& e : r.entries) {
        json j = {{"N", e.vertices}, {"verdict", to_string(e.verdict)}, {"inferred", e.inferred}};
        if (e.witness && !e_witness_dir.empty()) {
          std::string const path = e_witness_dir + std::to_string(e.vertices) + ".txt";
          save_coloring(path, *e.witness);
          j["witness"] = path;
        }
        indeterminate = indeterminate || e.verdict == Verdict::indeterminate;
        entries.push_back(j);
      }
      rep.result["entries"] = entries;
      rep.result["value"] = r.value ? json(*r.value) : json(nullptr);
      if (indeterminate && !r.value) rep.status = "indeterminate";
    } else if (hex->parsed()) {
      rep.subcommand = "h-exact";
      rep.inputs = {{"q", h_q}, {"p", h_p}, {"N", h_n}};
      rep.result["h"] = h_exact(h_q, h_p, h_n);
      if (h_s) {
        auto f = check_fsw_inequality(h_q, h_p, *h_s);
        rep.inputs["fsw_s"] = *h_s;
        rep.result["fsw"] = {{"N", f.vertices}, {"h", f.h}, {"bound", f.bound}, {"holds", f.holds}};
      }
    } else if (es2->parsed()) {
      rep.subcommand = "es2";
      rep.inputs = {{"n", es_n}, {"out", es_out}};
      auto chi = es_coloring_2(es_n);
      save_coloring(es_out, chi);
      rep.result = {{"N", chi.vertex_count()}, {"edges", chi.edge_count()}, {"written", es_out}};
    } else if (lift->parsed()) {
      rep.subcommand = "lift";
      rep.inputs = {{"in", lift_in}, {"out", lift_out}};
      auto chi = lift_coloring(load_coloring(lift_in));
      save_coloring(lift_out, chi);
      rep.result = {{"k", chi.uniformity()}, {"N", chi.vertex_count()}, {"edges", chi.edge_count()},
                    {"written", lift_out}};
    } else if (bounds->parsed()) {
      rep.subcommand = "bounds";
      rep.inputs = {{"theorem", b_theorem}, {"k", b_k}, {"n", b_n}, {"q", b_q}, {"p", b_p}};
      auto big = [](std::string const& s, char const* what) {
        try {
          BigInt v(s);
          return v;
        } catch (std::exception const&) {
          throw ContractError(std::string("--") + what + " must be an integer, got '" + s + "'");
        }
      };
      BigInt const n = big(b_n, "n"), q = big(b_q, "q");
      auto small_q = [&]() {
        if (q < 0 || q > 1'000'000) throw ContractError("--q must lie in [0, 10^6] for this theorem");
        return static_cast<std::size_t>(q);
      };
      BoundReport r;
      if (b_theorem == "1") {
        std::optional<BigInt> n0;
        if (!b_n0.empty()) n0 = big(b_n0, "n0");
        r = theorem1_ms_bounds(b_k, n, q, n0);
      } else if (b_theorem == "2") {
        Rational c;
        try {
          c = Rational(b_c);
        } catch (std::exception const&) {
          throw ContractError("--big-o-c must be a rational such as 3 or 5/2");
        }
        rep.inputs["big_o_c"] = b_c;
        r = theorem2_upper(b_k, n, small_q(), b_p, c);
      } else if (b_theorem == "3") {
        if (b_a1.empty() || b_a2.empty()) throw ContractError("theorem 3 needs --a1 and --a2");
        rep.inputs["a1"] = b_a1;
        rep.inputs["a2"] = b_a2;
        r = theorem3_rhs(b_k, n, small_q(), b_p, big(b_a1, "a1"), big(b_a2, "a2"));
      } else if (b_theorem == "4") {
        BigInt const n0 = b_n0.empty() ? BigInt(1) : big(b_n0, "n0");
        rep.inputs["n0"] = n0.str();
        r = theorem4_bound(b_k, n, q, b_p, n0);
      } else {
        r = obs9_bound(n, small_q(), b_p);
      }
      rep.result = report_json(r);
      // Theorem 4 reports unmet preconditions as part of an ok report; the
      // other theorems treat them as a contract error.
      if (b_theorem != "4" && !r.all_met()) rep.status = "contract-error";
    }
  } catch (IndeterminateError const& e) {
    std::cerr << "indeterminate: " << e.what() << '\n';
    rep.status = "indeterminate";
    rep.result = {{"error", e.what()}};
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    rep.status = "contract-error";
    rep.result = {{"error", e.what()}};
  }
  return emit(rep, wall());
}
