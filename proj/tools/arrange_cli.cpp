// Command-line driver for the arrangement/obstruction library.
//
// Verbs: gen {pp|bpab|nk-search}, code {basis|minweight},
// obstruct {pp|deletion|custom}, wiring {canon|homotopy|from-order|svg},
// plumbing {matrix|gs}, symplectic {area|epsilon}.
//
// Exit codes: 0 = report produced (including negative verdicts), 2 = input
// error, 1 = internal invariant violation.  All integer and rational output
// is exact; floating-point output carries 12 significant digits.  Identical
// inputs produce byte-identical output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrange/arrangement.hpp"
#include "arrange/blowup.hpp"
#include "arrange/cover.hpp"
#include "arrange/errors.hpp"
#include "arrange/fp.hpp"
#include "arrange/obstruct.hpp"
#include "arrange/plumbing.hpp"
#include "arrange/symplectic.hpp"
#include "arrange/wiring.hpp"
#include "json_io.hpp"

namespace {

using cli_io::Json;
using namespace arrange;

struct GlobalOpts {
  bool json = false;
  std::string out;
  int threads = 1;
  long long seed = 0;  // reserved for randomized drivers; accepted everywhere
};

void deliver(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open \"" + g.out + "\" for writing");
  f << text;
  if (!f) throw std::invalid_argument("failed writing \"" + g.out + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("\"" + path + "\" is not valid JSON: " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Shared arrangement source: exactly one of --in / --pp / --bpab.

struct ArrSource {
  std::string in;
  int pp = 0;
  std::vector<int> bpab;
  int cls = 0;
  CLI::Option* in_opt = nullptr;
  CLI::Option* pp_opt = nullptr;
  CLI::Option* bpab_opt = nullptr;
};

void add_source_options(CLI::App* cmd, ArrSource& s) {
  s.in_opt = cmd->add_option(
      "--in", s.in,
      "arrangement JSON file; a search document with \"classes\" also works");
  s.pp_opt = cmd->add_option("--pp", s.pp,
                             "use the projective plane of this prime order");
  s.bpab_opt = cmd->add_option("--bpab", s.bpab,
                               "use the two-pencil arrangement p,alpha,beta")
                   ->delimiter(',')
                   ->expected(3);
  cmd->add_option("--class", s.cls,
                  "class index when --in holds a search document");
  s.in_opt->excludes(s.pp_opt)->excludes(s.bpab_opt);
  s.pp_opt->excludes(s.bpab_opt);
}

Arrangement resolve_source(const ArrSource& s) {
  const int given = (s.in_opt->count() > 0) + (s.pp_opt->count() > 0) +
                    (s.bpab_opt->count() > 0);
  if (given != 1)
    throw std::invalid_argument(
        "choose exactly one arrangement source: --in, --pp, or --bpab");
  if (s.in_opt->count()) return cli_io::arrangement_from_json(parse_json_file(s.in), s.cls);
  if (s.pp_opt->count()) return projective_plane(s.pp);
  return two_pencil(s.bpab[0], s.bpab[1], s.bpab[2]);
}

// --blown: "all", "multi", "image" (obstruct custom only), or index list.
std::vector<int> resolve_blown(const Arrangement& arr, const std::string& mode,
                               const std::vector<int>* image) {
  if (mode == "all") {
    std::vector<int> all(arr.points());
    for (int j = 0; j < arr.points(); ++j) all[j] = j;
    return all;
  }
  if (mode == "multi") {
    std::vector<int> multi;
    for (int j = 0; j < arr.points(); ++j)
      if (arr.multiplicity(j) >= 3) multi.push_back(j);
    return multi;
  }
  if (mode == "image") {
    if (!image)
      throw std::invalid_argument("--blown image is only valid for obstruct custom");
    return *image;
  }
  std::vector<int> ids;
  std::stringstream ss(mode);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      ids.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("--blown expects all|multi|image or a comma list of point indices, got \"" + tok + "\"");
    }
  }
  if (ids.empty())
    throw std::invalid_argument("--blown index list must not be empty");
  return ids;
}

// ---------------------------------------------------------------------------
// Wiring word input: either a full "n=4; ..." word or a bare letter list
// with --n supplying the wire count.

WiringDiagram word_from_flags(const std::string& word, int n) {
  const bool has_head = word.find("n=") != std::string::npos;
  if (!has_head && n <= 0)
    throw std::invalid_argument(
        "--n is required when --word has no \"n=<wires>;\" header");
  WiringDiagram w =
      parse_word(has_head ? word : "n=" + std::to_string(n) + "; " + word);
  if (n > 0 && w.n != n)
    throw std::invalid_argument("--n " + std::to_string(n) +
                                " disagrees with the word header n=" +
                                std::to_string(w.n));
  return w;
}

std::string describe_event(const HomotopyEvent& e) {
  using Kind = HomotopyEvent::Kind;
  const std::string at = " at position " + std::to_string(e.position);
  switch (e.kind) {
    case Kind::BraidMove1:
      return "yang-baxter: rewrite the crossing triple" + at;
    case Kind::BraidMove2:
      return "commutation: swap the distant crossings" + at;
    case Kind::SplitMulti:
      return "split the multiple point" + at + " into its crossing staircase";
    case Kind::MergeMulti:
      return "merge the " + std::to_string(e.k) + "-wire staircase" + at +
             " into one multiple point";
    case Kind::PlanarIsotopy:
      return "planar isotopy" +
             (e.description.empty() ? "" : ": " + e.description);
  }
  return "";
}

std::string describe_events(const std::vector<HomotopyEvent>& events) {
  std::ostringstream out;
  for (std::size_t i = 0; i < events.size(); ++i)
    out << "  " << (i + 1) << ". " << describe_event(events[i]) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Obstruction human report.

std::string human_report(const ObstructionReport& r) {
  std::ostringstream out;
  out << "arrangement " << r.arrangement_hash << ": "
      << (r.obstructed ? "obstructed" : "not obstructed") << "\n";
  out << "branch: two-pencil p=" << r.p << " alpha=" << r.alpha
      << " beta=" << r.beta << ", lines [";
  for (std::size_t i = 0; i < r.branch_embedding.line_map.size(); ++i)
    out << (i ? " " : "") << r.branch_embedding.line_map[i];
  out << "], " << r.blown_points.size() << " blown points, "
      << r.outside_lines.size() << " outside lines\n";
  out << "cover: d=" << r.cover.d << " chi=" << r.cover.chi_total
      << " b1=" << r.cover.b1 << " b2=";
  long long b2_total = 0, b2m_total = 0;
  for (long long v : r.cover.b2) b2_total += v;
  for (long long v : r.cover.b2_minus) b2m_total += v;
  out << b2_total << "\n";
  out << "b2- per eigenspace:";
  for (int i = 0; i < r.cover.d; ++i)
    out << " r=" << i << ":" << r.cover.b2_minus[i];
  out << " (total " << b2m_total << ")\n";
  out << "outside form: rank " << r.outside_rank << ", inertia n+="
      << r.outside_inertia.n_plus << " n0=" << r.outside_inertia.n_zero
      << " n-=" << r.outside_inertia.n_minus << "\n";
  out << "routes:\n";
  for (const auto& rc : r.routes) {
    out << "  " << rc.route;
    if (rc.route == "eigenspace") out << " r=" << rc.r;
    out << ": needed " << rc.needed << " vs available " << rc.available
        << (rc.fires ? "  FIRES" : "") << "\n";
  }
  if (r.witness) {
    out << "witness: " << r.witness->route;
    if (r.witness->route == "eigenspace") out << " r=" << r.witness->r;
    out << " (needed " << r.witness->needed << " > available "
        << r.witness->available << ")\n";
  }
  out << "verdict: " << (r.obstructed ? "obstructed" : "not-obstructed")
      << (r.obstructed ? "; associated contact manifold not strongly fillable"
                       : "")
      << "\n";
  return out.str();
}

std::string emit_report(const GlobalOpts& g, const ObstructionReport& r) {
  return g.json ? cli_io::dump_doc(cli_io::report_to_json(r)) : human_report(r);
}

// ---------------------------------------------------------------------------
// obstruct custom: find a strict branch embedding that satisfies the blow-up
// hypotheses, preferring the lexicographically first one.

ObstructionReport obstruct_custom(const Arrangement& host, int p, int alpha,
                                  int beta, const std::string& blown_mode,
                                  const std::vector<int>& line_map) {
  const Arrangement pattern = two_pencil(p, alpha, beta);
  std::vector<SubArrangementEmbedding> candidates;
  if (!line_map.empty()) {
    // Trust the caller's line map; locate it among the strict embeddings so
    // point_map and strictness are filled in consistently.
    for (auto& e : find_subarrangement(host, pattern, /*strict_only=*/false))
      if (e.line_map == line_map) {
        candidates.push_back(std::move(e));
        break;
      }
    if (candidates.empty())
      throw std::invalid_argument(
          "--lines is not an embedding of the requested two-pencil");
  } else {
    candidates = find_subarrangement(host, pattern, /*strict_only=*/true);
    if (candidates.empty())
      throw std::invalid_argument(
          "host has no strict two-pencil(p=" + std::to_string(p) +
          ", alpha=" + std::to_string(alpha) +
          ", beta=" + std::to_string(beta) + ") sub-arrangement");
  }
  std::string first_failure;
  for (const auto& emb : candidates) {
    std::vector<int> blown = resolve_blown(host, blown_mode, &emb.point_map);
    try {
      return obstruct_arrangement(host, p, alpha, beta, emb, std::move(blown));
    } catch (const HypothesisViolation& e) {
      if (first_failure.empty()) first_failure = e.what();
    } catch (const BranchNotStrictlyEmbedded& e) {
      if (first_failure.empty()) first_failure = e.what();
    }
  }
  throw std::invalid_argument(
      "no candidate embedding satisfies the blow-up hypotheses (first "
      "failure: " +
      first_failure + ")");
}

// ---------------------------------------------------------------------------
// Strand inputs shared by the symplectic verbs.

struct StrandOpts {
  std::vector<std::string> exprs;
  std::vector<std::string> csvs;
  double t_lo = -1.0;
  double t_hi = 1.0;
};

void add_strand_options(CLI::App* cmd, StrandOpts& s) {
  cmd->add_option("--expr", s.exprs,
                  "closed-form strand q(r, t); repeatable");
  cmd->add_option("--csv", s.csvs, "CSV file of r,t,q samples; repeatable");
  cmd->add_option("--t-lo", s.t_lo, "lower end of the t interval for --expr");
  cmd->add_option("--t-hi", s.t_hi, "upper end of the t interval for --expr");
}

std::vector<StrandFunction> resolve_strands(const StrandOpts& s) {
  std::vector<StrandFunction> strands;
  for (const auto& e : s.exprs)
    strands.push_back(StrandFunction::from_expression(e, s.t_lo, s.t_hi));
  for (const auto& path : s.csvs)
    strands.push_back(StrandFunction::from_csv(read_file(path)));
  if (strands.empty())
    throw std::invalid_argument("provide at least one strand via --expr or --csv");
  return strands;
}

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Combinatorial line arrangements: generators, branched-cover "
      "obstructions, wiring diagrams, plumbing positivity, and symplectic "
      "area checks"};
  app.set_version_flag("--version", "arrange 1.0.0");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit a JSON document instead of text");
  app.add_option("--out", g.out, "write output to FILE instead of stdout");
  app.add_option("--threads", g.threads, "worker cap for grid sweeps")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed,
                 "seed for randomized property-test drivers; the verbs here "
                 "are deterministic and ignore it");

  std::string output;  // every verb writes its report here

  // ---- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "arrangement generators (JSON output)");
  gen->require_subcommand(1);
  gen->fallthrough();

  {
    auto* pp = gen->add_subcommand("pp", "projective plane of prime order p");
    pp->fallthrough();
    static int p = 2;
    pp->add_option("--p", p, "prime order")->required();
    pp->callback([&] {
      output = cli_io::dump_doc(cli_io::arrangement_to_json(projective_plane(p)));
    });
  }
  {
    auto* bp = gen->add_subcommand("bpab", "two pencils of p*alpha and p*beta lines");
    bp->fallthrough();
    static int p = 2, alpha = 1, beta = 1;
    bp->add_option("--p", p, "pencil parameter p >= 2")->required();
    bp->add_option("--alpha", alpha, "first pencil multiplier")->required();
    bp->add_option("--beta", beta, "second pencil multiplier")->required();
    bp->callback([&] {
      output = cli_io::dump_doc(
          cli_io::arrangement_to_json(two_pencil(p, alpha, beta)));
    });
  }
  {
    auto* nk = gen->add_subcommand(
        "nk-search", "exhaustive (n_k) configuration search up to isomorphism");
    nk->fallthrough();
    static int n = 0, k = 0;
    static long long limit = 0, budget = 0;
    static bool first = false;
    nk->add_option("--n", n, "number of lines and distinguished points")->required();
    nk->add_option("--k", k, "points per line")->required();
    nk->add_option("--limit", limit, "stop after this many classes (0 = all)");
    nk->add_option("--budget", budget,
                   "search node budget (0 = ARRANGE_SEARCH_CAP or built-in)");
    nk->add_flag("--first", first,
                 "emit only the first class as a bare arrangement document");
    nk->callback([&] {
      std::vector<Arrangement> classes =
          search_nk(n, k, static_cast<std::size_t>(limit), budget);
      if (first) {
        if (classes.empty())
          throw std::invalid_argument("no (" + std::to_string(n) + "_" +
                                      std::to_string(k) +
                                      ") configuration exists");
        output = cli_io::dump_doc(cli_io::arrangement_to_json(classes.front()));
        return;
      }
      Json doc;
      doc["schema"] = "nk-search/1";
      doc["n"] = n;
      doc["k"] = k;
      doc["count"] = classes.size();
      Json arr = Json::array();
      for (const auto& a : classes) arr.push_back(cli_io::arrangement_to_json(a));
      doc["classes"] = std::move(arr);
      output = cli_io::dump_doc(doc);
    });
  }

  // ---- code --------------------------------------------------------------
  auto* code = app.add_subcommand(
      "code", "mod-d relation code of blown-up line classes");
  code->require_subcommand(1);
  code->fallthrough();

  {
    auto* basis = code->add_subcommand("basis", "reduced-echelon basis of the code");
    basis->fallthrough();
    static ArrSource code_src;
    static int code_d = 2;
    static std::string code_blown = "all";
    add_source_options(basis, code_src);
    basis->add_option("--d", code_d, "prime modulus")->required();
    basis->add_option("--blown", code_blown,
                      "blown points: all, multi, or a comma list of indices");
    basis->callback([&] {
      Arrangement arr = resolve_source(code_src);
      BlowupModel model(arr, resolve_blown(arr, code_blown, nullptr));
      std::vector<FpVector> rows = relation_code(model, code_d);
      Json doc;
      doc["schema"] = "relation-code/1";
      doc["modulus"] = code_d;
      doc["lines"] = arr.lines();
      doc["blown_points"] = model.blown_points();
      doc["dimension"] = rows.size();
      Json basis_doc;
      basis_doc["modulus"] = code_d;
      basis_doc["rows"] = rows.size();
      basis_doc["cols"] = arr.lines();
      Json entries = Json::array();
      for (const auto& r : rows) entries.push_back(r);
      basis_doc["entries"] = std::move(entries);
      doc["basis"] = std::move(basis_doc);
      if (g.json) {
        output = cli_io::dump_doc(doc);
        return;
      }
      std::ostringstream out;
      out << "modulus: " << code_d << "\nlength: " << arr.lines()
          << "\ndimension: " << rows.size() << "\n";
      for (const auto& r : rows) {
        out << " ";
        for (int v : r) out << " " << v;
        out << "\n";
      }
      output = out.str();
    });
  }
  {
    auto* mw = code->add_subcommand(
        "minweight", "exhaustive minimum-weight search over the code");
    mw->fallthrough();
    static ArrSource code_src;
    static int code_d = 2;
    static std::string code_blown = "all";
    add_source_options(mw, code_src);
    mw->add_option("--d", code_d, "prime modulus")->required();
    mw->add_option("--blown", code_blown,
                   "blown points: all, multi, or a comma list of indices");
    static long long cap = 0;
    mw->add_option("--cap", cap,
                   "codeword enumeration cap (0 = ARRANGE_SEARCH_CAP or 2^22)");
    mw->callback([&] {
      Arrangement arr = resolve_source(code_src);
      BlowupModel model(arr, resolve_blown(arr, code_blown, nullptr));
      std::vector<FpVector> rows = relation_code(model, code_d);
      if (rows.empty())
        throw std::invalid_argument("the relation code is trivial (dimension 0)");
      long long effective_cap = cap;
      if (effective_cap == 0) {
        if (const char* env = std::getenv("ARRANGE_SEARCH_CAP"))
          effective_cap = std::atoll(env);
        if (effective_cap <= 0) effective_cap = 1LL << 22;
      }
      CodeSummary cs =
          min_weight(FpMatrix::from_rows(code_d, rows), effective_cap);
      std::vector<int> support;
      for (int j = 0; j < cs.length; ++j)
        if (cs.min_weight_witness[j] != 0) support.push_back(j);
      Json doc;
      doc["schema"] = "code-minweight/1";
      doc["modulus"] = cs.modulus;
      doc["length"] = cs.length;
      doc["dimension"] = cs.dimension;
      doc["min_weight"] = cs.min_weight;
      doc["witness"] = cs.min_weight_witness;
      doc["support"] = support;
      doc["enumerated"] = cs.enumerated;
      if (g.json) {
        output = cli_io::dump_doc(doc);
        return;
      }
      std::ostringstream out;
      out << "modulus: " << cs.modulus << "\nlength: " << cs.length
          << "\ndimension: " << cs.dimension
          << "\nminimum weight: " << cs.min_weight << "\nwitness:";
      for (int v : cs.min_weight_witness) out << " " << v;
      out << "\nsupport lines:";
      for (int v : support) out << " " << v;
      out << "\nenumerated: " << cs.enumerated << "\n";
      output = out.str();
    });
  }

  // ---- obstruct ----------------------------------------------------------
  auto* obstruct = app.add_subcommand(
      "obstruct", "branched-cover realization obstructions");
  obstruct->require_subcommand(1);
  obstruct->fallthrough();

  {
    auto* pp = obstruct->add_subcommand(
        "pp", "projective plane of order p, all points blown");
    pp->fallthrough();
    static int p = 2;
    pp->add_option("--p", p, "prime order")->required();
    pp->callback([&] { output = emit_report(g, obstruct_projective_plane(p)); });
  }
  {
    auto* del = obstruct->add_subcommand(
        "deletion", "projective plane with t lines away from the pencils deleted");
    del->fallthrough();
    static int p = 3, t = 0;
    del->add_option("--p", p, "odd prime order")->required();
    del->add_option("--t", t, "number of deleted lines")->required();
    del->callback([&] { output = emit_report(g, obstruct_deletion(p, t)); });
  }
  {
    auto* cus = obstruct->add_subcommand(
        "custom", "user-supplied host with a two-pencil branch embedding");
    cus->fallthrough();
    static ArrSource src;
    add_source_options(cus, src);
    static int p = 2, alpha = 1, beta = 1;
    static std::string blown = "image";
    static std::vector<int> lines;
    cus->add_option("--p", p, "branch two-pencil p")->required();
    cus->add_option("--alpha", alpha, "branch two-pencil alpha");
    cus->add_option("--beta", beta, "branch two-pencil beta");
    cus->add_option("--blown", blown,
                    "blown points: image (branch intersections), all, multi, "
                    "or a comma list");
    cus->add_option("--lines", lines,
                    "explicit host line map of the branch embedding")
        ->delimiter(',');
    cus->callback([&] {
      Arrangement host = resolve_source(src);
      output = emit_report(g, obstruct_custom(host, p, alpha, beta, blown, lines));
    });
  }

  // ---- wiring ------------------------------------------------------------
  auto* wiring = app.add_subcommand("wiring", "wiring diagrams and homotopies");
  wiring->require_subcommand(1);
  wiring->fallthrough();

  {
    auto* canon = wiring->add_subcommand(
        "canon", "canonicalize a crossing word with a move certificate");
    canon->fallthrough();
    static std::string word;
    static int n = 0;
    canon->add_option("--word", word, "word, e.g. \"t2 t1 t2\" or \"n=3; t2 t1 t2\"")
        ->required();
    canon->add_option("--n", n, "number of wires (when the word has no header)");
    canon->callback([&] {
      WiringDiagram w = word_from_flags(word, n);
      auto [canonical, moves] = canonicalize(w);
      if (g.json) {
        Json doc;
        doc["schema"] = "wiring-canon/1";
        doc["input"] = cli_io::word_to_json(w);
        doc["canonical"] = cli_io::word_to_json(canonical);
        doc["move_count"] = moves.size();
        doc["moves"] = cli_io::events_to_json(moves);
        output = cli_io::dump_doc(doc);
        return;
      }
      output = "canonical: " + format_word(canonical) + "\nmoves: " +
               std::to_string(moves.size()) + "\n" + describe_events(moves);
    });
  }
  {
    auto* hom = wiring->add_subcommand(
        "homotopy", "homotope a diagram to the pencil (one multiple point)");
    hom->fallthrough();
    static std::string word;
    static int n = 0;
    hom->add_option("--word", word, "word, optionally with \"n=...;\" header")
        ->required();
    hom->add_option("--n", n, "number of wires (when the word has no header)");
    hom->callback([&] {
      WiringDiagram w = word_from_flags(word, n);
      std::vector<HomotopyEvent> moves = homotopy_to_pencil(w);
      WiringDiagram final_diag = replay(w, moves);
      if (g.json) {
        Json doc;
        doc["schema"] = "wiring-homotopy/1";
        doc["input"] = cli_io::word_to_json(w);
        doc["final"] = cli_io::word_to_json(final_diag);
        doc["move_count"] = moves.size();
        doc["moves"] = cli_io::events_to_json(moves);
        output = cli_io::dump_doc(doc);
        return;
      }
      output = "final: " + format_word(final_diag) + "\nmoves: " +
               std::to_string(moves.size()) + "\n" + describe_events(moves);
    });
  }
  {
    auto* from = wiring->add_subcommand(
        "from-order", "wiring diagram of an arrangement from a line/point order");
    from->fallthrough();
    static ArrSource src;
    add_source_options(from, src);
    static std::vector<int> line_order, point_order;
    auto* lo = from->add_option("--line-order", line_order,
                                "host lines bottom wire first")
                   ->delimiter(',');
    auto* po = from->add_option("--point-order", point_order,
                                "points in crossing order")
                   ->delimiter(',');
    lo->needs(po);
    po->needs(lo);
    from->callback([&] {
      Arrangement arr = resolve_source(src);
      Json doc;
      doc["schema"] = "wiring-order/1";
      std::string human;
      if (!line_order.empty()) {
        try {
          WiringDiagram w = from_arrangement(arr, line_order, point_order);
          doc["wirable"] = true;
          doc["line_order"] = line_order;
          doc["point_order"] = point_order;
          doc["word"] = cli_io::word_to_json(w);
          human = "word: " + format_word(w) + "\n";
        } catch (const NotWirable& e) {
          doc["wirable"] = false;
          doc["message"] = e.what();
          human = std::string("not wirable with the given orders: ") + e.what() + "\n";
        }
      } else {
        auto found = find_wirable_order(arr);
        if (found) {
          WiringDiagram w = from_arrangement(arr, found->first, found->second);
          doc["wirable"] = true;
          doc["line_order"] = found->first;
          doc["point_order"] = found->second;
          doc["word"] = cli_io::word_to_json(w);
          std::ostringstream out;
          out << "line order:";
          for (int v : found->first) out << " " << v;
          out << "\npoint order:";
          for (int v : found->second) out << " " << v;
          out << "\nword: " << format_word(w) << "\n";
          human = out.str();
        } else {
          doc["wirable"] = false;
          doc["message"] = "no line/point order yields a wiring diagram";
          human = "not wirable: no line/point order yields a wiring diagram\n";
        }
      }
      output = g.json ? cli_io::dump_doc(doc) : human;
    });
  }
  {
    auto* svg = wiring->add_subcommand("svg", "render a word as SVG");
    svg->fallthrough();
    static std::string word;
    static int n = 0;
    svg->add_option("--word", word, "word, optionally with \"n=...;\" header")
        ->required();
    svg->add_option("--n", n, "number of wires (when the word has no header)");
    svg->callback([&] { output = to_svg(word_from_flags(word, n)); });
  }

  // ---- plumbing ----------------------------------------------------------
  auto* plumbing = app.add_subcommand(
      "plumbing", "plumbing intersection matrix and positivity criterion");
  plumbing->require_subcommand(1);
  plumbing->fallthrough();

  {
    auto* mat = plumbing->add_subcommand("matrix", "block plumbing matrix Q");
    mat->fallthrough();
    static ArrSource plumb_src;
    add_source_options(mat, plumb_src);
    mat->callback([&] {
      PlumbingMatrix pm = plumbing_matrix(resolve_source(plumb_src));
      if (g.json) {
        output = cli_io::dump_doc(cli_io::plumbing_to_json(pm));
        return;
      }
      std::ostringstream out;
      out << "lines: " << pm.k << "\nmultiple points: " << pm.N << "\nQ:\n";
      for (const auto& row : pm.q) {
        for (long long v : row) out << " " << v;
        out << "\n";
      }
      output = out.str();
    });
  }
  {
    auto* gs = plumbing->add_subcommand(
        "gs", "positivity criterion: z > 0 with Qz > 0");
    gs->fallthrough();
    static ArrSource plumb_src;
    add_source_options(gs, plumb_src);
    gs->callback([&] {
      PlumbingMatrix pm = plumbing_matrix(resolve_source(plumb_src));
      GsAllOnes ones = gs_all_ones(pm);
      bool feasible = false;
      std::vector<BigRational> cert;
      std::string infeasible_msg;
      try {
        cert = gs_criterion(pm);
        feasible = true;
      } catch (const Infeasible& e) {
        infeasible_msg = e.what();
      }
      if (g.json) {
        Json doc;
        doc["schema"] = "plumbing-gs/1";
        doc["k"] = pm.k;
        doc["N"] = pm.N;
        doc["multi_points"] = pm.multi_points;
        doc["line_coords"] = ones.line_coords;
        doc["point_coords"] = ones.point_coords;
        doc["all_ones_positive"] = ones.positive;
        doc["feasible"] = feasible;
        if (feasible) {
          Json c = Json::array();
          for (const auto& v : cert) c.push_back(cli_io::rational_to_json(v));
          doc["certificate"] = std::move(c);
        } else {
          doc["certificate"] = nullptr;
          doc["message"] = infeasible_msg;
        }
        output = cli_io::dump_doc(doc);
        return;
      }
      std::ostringstream out;
      out << "lines: " << pm.k << ", multiple points: " << pm.N << "\n";
      out << "Q * ones, line coordinates:";
      for (long long v : ones.line_coords) out << " " << v;
      out << "\nQ * ones, point coordinates:";
      for (long long v : ones.point_coords) out << " " << v;
      out << "\nall-ones positive: " << (ones.positive ? "yes" : "no") << "\n";
      if (feasible) {
        out << "criterion: satisfied, certificate z =";
        for (const auto& v : cert) out << " " << v;
        out << "\n";
      } else {
        out << "criterion: " << infeasible_msg << "\n";
      }
      output = out.str();
    });
  }

  // ---- symplectic --------------------------------------------------------
  auto* symp = app.add_subcommand(
      "symplectic", "area-form positivity of strand families");
  symp->require_subcommand(1);
  symp->fallthrough();

  {
    auto* area = symp->add_subcommand("area", "area form value at one sample");
    area->fallthrough();
    static StrandOpts strand;
    add_strand_options(area, strand);
    static double r = 0, t = 0, epsilon = 1;
    area->add_option("--r", r, "radial coordinate in [-1, 1]")->required();
    area->add_option("--t", t, "strand parameter")->required();
    area->add_option("--epsilon", epsilon, "stretch parameter > 0")->required();
    area->callback([&] {
      std::vector<StrandFunction> strands = resolve_strands(strand);
      if (strands.size() != 1)
        throw std::invalid_argument("area takes exactly one strand");
      double v = area_form_value(strands.front(), r, t, epsilon);
      if (g.json) {
        Json doc;
        doc["schema"] = "area-value/1";
        doc["r"] = cli_io::round12(r);
        doc["t"] = cli_io::round12(t);
        doc["epsilon"] = cli_io::round12(epsilon);
        doc["value"] = cli_io::round12(v);
        output = cli_io::dump_doc(doc);
        return;
      }
      output = format12(v) + "\n";
    });
  }
  {
    auto* eps = symp->add_subcommand(
        "epsilon", "largest schedule stretch keeping the area form positive");
    eps->fallthrough();
    static StrandOpts strand;
    add_strand_options(eps, strand);
    static int nr = 41, nt = 81;
    static double delta = 1e-6;
    eps->add_option("--nr", nr, "radial grid samples");
    eps->add_option("--nt", nt, "t grid samples");
    eps->add_option("--delta", delta, "positivity margin");
    eps->callback([&] {
      std::vector<StrandFunction> strands = resolve_strands(strand);
      GridSpec grid{nr, nt};
      Json doc;
      doc["schema"] = "epsilon-report/1";
      doc["grid"] = {{"nr", nr}, {"nt", nt}};
      doc["delta"] = cli_io::round12(delta);
      std::string human;
      try {
        EpsilonReport rep = find_epsilon_report(strands, grid, delta, g.threads);
        doc["found"] = true;
        doc["epsilon"] = cli_io::round12(rep.epsilon);
        Json arr = Json::array();
        for (const auto& s : rep.strands) {
          Json sd;
          sd["epsilon"] = cli_io::round12(s.epsilon);
          sd["min_value"] = cli_io::round12(s.min_value);
          sd["argmin_r"] = cli_io::round12(s.argmin_r);
          sd["argmin_t"] = cli_io::round12(s.argmin_t);
          arr.push_back(std::move(sd));
        }
        doc["strands"] = std::move(arr);
        std::ostringstream out;
        out << "epsilon: " << format12(rep.epsilon) << "\n";
        for (std::size_t i = 0; i < rep.strands.size(); ++i) {
          const auto& s = rep.strands[i];
          out << "strand " << i << ": epsilon " << format12(s.epsilon)
              << ", grid min " << format12(s.min_value) << " at (r, t) = ("
              << format12(s.argmin_r) << ", " << format12(s.argmin_t) << ")\n";
        }
        human = out.str();
      } catch (const NoEpsilonFound& e) {
        doc["found"] = false;
        doc["message"] = e.what();
        human = std::string("no epsilon found: ") + e.what() + "\n";
      }
      output = g.json ? cli_io::dump_doc(doc) : human;
    });
  }

  // ---- dispatch ----------------------------------------------------------
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const SearchSpaceTooLarge& e) {
    std::fprintf(stderr,
                 "error: %s (raise ARRANGE_SEARCH_CAP or the relevant cap "
                 "flag to search further)\n",
                 e.what());
    return 2;
  } catch (const NegativeBetti& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }

  try {
    deliver(g, output);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
