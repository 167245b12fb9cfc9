#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "goodstein/verifier.hpp"

using namespace gs;

namespace {

struct GlobalOpts {
  uint64_t max_bits = 65536;
  uint64_t max_term_nodes = 100000;
  uint64_t ncap = 8;
  bool json = false;

  EvalCaps caps() const {
    EvalCaps c;
    c.cap_bits = max_bits;
    c.node_budget = max_term_nodes;
    c.ncap = ncap;
    return c;
  }
};

BudgetedNat read_m(const std::string& s, const EvalCaps& caps) {
  return BudgetedNat::of(parse_bignat(s), caps.cap_bits);
}

void emit(const GlobalOpts& g, const nlohmann::ordered_json& j,
          const std::string& plain) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain << "\n";
}

int cmd_nf(const GlobalOpts& g, const std::string& ms, uint32_t k, int part) {
  AckEvaluator eng(g.caps());
  BudgetedNat m = read_m(ms, g.caps());
  if (m.is_zero()) {
    emit(g, {{"m", ms}, {"nf", "0"}}, "0");
    return 0;
  }
  AckTerm t = hereditary(m, k, part, eng);
  std::string nf = format_nf(t, k, eng);
  AckNF flat = part == 1 ? knf_fin(m, k, eng) : knf_ord(m, k, eng);
  nlohmann::ordered_json j;
  j["m"] = ms;
  j["k"] = k;
  j["part"] = part;
  j["index"] = format_ordix(flat.index, k, eng);
  j["b"] = flat.b.str();
  j["l"] = flat.l.str();
  j["nf"] = nf;
  j["bracket_certified"] = flat.bracket_lo && flat.bracket_hi;
  j["domain_complete"] = flat.domain_complete;
  emit(g, j, nf);
  return 0;
}

int cmd_bc(const GlobalOpts& g, const std::string& ms, uint32_t k,
           const std::string& op, int part) {
  AckEvaluator eng(g.caps());
  BudgetedNat m = read_m(ms, g.caps());
  BCOp o = op == "prime"    ? BCOp::Prime
           : op == "second" ? BCOp::Second
           : op == "first"  ? BCOp::First
           : op == "iter"   ? BCOp::Iter
                            : throw precondition_error("unknown op: " + op);
  AckTerm t = m.is_zero() ? ack_zero() : hereditary(m, k, part, eng);
  AckTerm img = bc(t, k, o, eng);
  BudgetedNat v = eval_term(img, k + 1, eng);
  nlohmann::ordered_json j;
  j["m"] = ms;
  j["k"] = k;
  j["op"] = op;
  j["value"] = v.str();
  j["nf"] = format_nf(img, k + 1, eng);
  emit(g, j, v.str() + " = " + format_nf(img, k + 1, eng));
  return 0;
}

int cmd_ord(const GlobalOpts& g, const std::string& ms, uint32_t k,
            const std::string& map, int part) {
  AckEvaluator eng(g.caps());
  BudgetedNat m = read_m(ms, g.caps());
  AckTerm t = m.is_zero() ? ack_zero() : hereditary(m, k, part, eng);
  std::string out;
  if (map == "simple") {
    out = format_e0(ord_simple(t, k, part, eng));
  } else if (part == 1) {
    MapKind mk = map == "psi"   ? MapKind::Psi
                 : map == "chi" ? MapKind::Chi
                 : map == "xi"  ? MapKind::Xi
                                : throw precondition_error("unknown map: " + map);
    out = format_e0(assign_part1(mk, t, k, eng));
  } else {
    if (map == "psi")
      out = format_hb(assign_part2_psi(t, k, eng));
    else if (map == "chi")
      out = format_e0(assign_part2_chi(t, k, eng));
    else if (map == "xi")
      out = format_hb(assign_part2_xi(t, k, eng));
    else
      throw precondition_error("unknown map: " + map);
  }
  emit(g, {{"m", ms}, {"k", k}, {"part", part}, {"map", map}, {"ordinal", out}},
       out);
  return 0;
}

int cmd_run(const GlobalOpts& g, const std::string& ms, const std::string& variant,
            int part, uint64_t max_steps, const std::string& trace_path,
            const std::string& csv_path) {
  AckEvaluator eng(g.caps());
  Trace tr = run_m(read_m(ms, g.caps()), variant_from_name(variant), part,
                   max_steps, eng);
  if (!trace_path.empty()) {
    std::ofstream f(trace_path);
    f << tr.to_json().dump(2) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    f << tr.to_csv();
  }
  std::string status = tr.status == Trace::Status::Zero      ? "zero"
                       : tr.status == Trace::Status::MaxSteps ? "max-steps"
                                                              : "budget";
  std::string plain = "status " + status;
  if (tr.status == Trace::Status::Zero)
    plain += " at l=" + std::to_string(tr.zero_at());
  else if (!tr.steps.empty())
    plain += " after l=" + std::to_string(tr.steps.back().l);
  plain += tr.all_descent_ok() ? ", descent ok" : ", DESCENT VIOLATION";
  if (g.json)
    std::cout << tr.to_json().dump(2) << "\n";
  else
    std::cout << plain << "\n";
  return tr.status == Trace::Status::Zero ? 0 : 2;
}

int cmd_fund(const GlobalOpts& g, const std::string& expr, uint64_t x,
             const std::string& system) {
  std::string out;
  if (system == "e0") {
    out = format_e0(fund_e0(parse_e0(expr), x));
  } else if (system == "ot" || system == "otp") {
    out = format_hb(fund_hb(parse_hb(expr), x));
  } else {
    throw precondition_error("unknown system: " + system);
  }
  emit(g, {{"expr", expr}, {"x", x}, {"system", system}, {"result", out}}, out);
  return 0;
}

int cmd_seed(const GlobalOpts& g, uint64_t r, int part, const std::string& map) {
  AckEvaluator eng(g.caps());
  AckTerm t = mr_seed(r, part, eng);
  std::string nf = format_nf(t, 3, eng);
  nlohmann::ordered_json j;
  j["r"] = r;
  j["part"] = part;
  j["seed"] = nf;
  std::string plain = nf;
  if (!map.empty()) {
    std::string img;
    if (part == 1)
      img = format_e0(assign_part1(map == "psi"   ? MapKind::Psi
                                   : map == "chi" ? MapKind::Chi
                                                  : MapKind::Xi,
                                   t, 3, eng));
    else if (map == "psi")
      img = format_hb(assign_part2_psi(t, 3, eng));
    else if (map == "chi")
      img = format_e0(assign_part2_chi(t, 3, eng));
    else
      img = format_hb(assign_part2_xi(t, 3, eng));
    j["ordinal"] = img;
    plain += "  ->  " + img;
  }
  emit(g, j, plain);
  return 0;
}

int cmd_check(const GlobalOpts& g, const std::string& suite, uint64_t m_max,
              uint32_t k_min, uint32_t k_max, uint64_t samples, uint64_t seed) {
  SuiteParams p;
  p.m_max = m_max;
  p.k_min = k_min;
  p.k_max = k_max;
  p.samples = samples;
  p.seed = seed;
  p.caps = g.caps();
  std::vector<std::string> ids =
      suite == "all" ? suite_ids() : std::vector<std::string>{suite};
  bool found_cx = false;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const std::string& id : ids) {
    Report r = run_suite(id, p);
    found_cx = found_cx || !r.ok();
    if (g.json) {
      out.push_back(r.to_json());
    } else {
      std::cout << id << ": " << (r.ok() ? "ok" : "COUNTEREXAMPLES") << " ("
                << r.cases << " cases, " << r.evaluable << " evaluable, "
                << r.inconclusive << " inconclusive)\n";
      for (const Counterexample& c : r.counterexamples)
        std::cout << "  " << c.input << ": " << c.detail << "\n";
    }
  }
  if (g.json) std::cout << out.dump(2) << "\n";
  return found_cx ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ackermann normal forms, base changes and Goodstein sequences"};
  app.require_subcommand(1);

  GlobalOpts g;
  if (const char* env = std::getenv("GOODSTEIN_MAX_BITS"))
    g.max_bits = std::strtoull(env, nullptr, 10);
  app.add_option("--max-bits", g.max_bits, "value budget in bits");
  app.add_option("--max-term-nodes", g.max_term_nodes, "symbolic term budget");
  app.add_option("--ncap", g.ncap, "ordinal index enumeration bound");
  app.add_flag("--json", g.json, "JSON output");

  std::string ms = "0", op = "prime", map = "psi", variant = "prime";
  std::string expr, system = "e0", suite = "all", trace_path, csv_path;
  uint32_t k = 3, k_min = 3, k_max = 4;
  int part = 1;
  uint64_t x = 1, r = 1, max_steps = 1000, m_max = 200, samples = 1000, seed = 1;

  auto* nf = app.add_subcommand("nf", "k-normal form of m");
  nf->add_option("--m", ms)->required();
  nf->add_option("--k", k);
  nf->add_option("--part", part);

  auto* bcc = app.add_subcommand("bc", "base change k -> k+1");
  bcc->add_option("--m", ms)->required();
  bcc->add_option("--k", k);
  bcc->add_option("--op", op)->check(CLI::IsMember({"prime", "second", "first", "iter"}));
  bcc->add_option("--part", part);

  auto* ord = app.add_subcommand("ord", "ordinal assignment of m");
  ord->add_option("--m", ms)->required();
  ord->add_option("--k", k);
  ord->add_option("--map", map)->check(CLI::IsMember({"psi", "chi", "xi", "simple"}));
  ord->add_option("--part", part);

  auto* rn = app.add_subcommand("run", "Goodstein sequence from a seed");
  rn->add_option("--m", ms)->required();
  rn->add_option("--variant", variant)
      ->check(CLI::IsMember({"prime", "second", "first", "iter"}));
  rn->add_option("--part", part);
  rn->add_option("--max-steps", max_steps);
  rn->add_option("--trace", trace_path, "write the JSON trace here");
  rn->add_option("--csv", csv_path, "write a CSV table here");

  auto* fd = app.add_subcommand("fund", "fundamental sequence element");
  fd->add_option("--expr", expr)->required();
  fd->add_option("--x", x);
  fd->add_option("--system", system)->check(CLI::IsMember({"e0", "ot", "otp"}));

  auto* sd = app.add_subcommand("seed", "m(r) seed constructors");
  sd->add_option("--r", r)->required();
  sd->add_option("--part", part);
  sd->add_option("--map", map);

  auto* ck = app.add_subcommand("check", "run a verification suite");
  ck->add_option("--suite", suite);
  ck->add_option("--m-max", m_max);
  ck->add_option("--k-min", k_min);
  ck->add_option("--k-max", k_max);
  ck->add_option("--samples", samples);
  ck->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (nf->parsed()) return cmd_nf(g, ms, k, part);
    if (bcc->parsed()) return cmd_bc(g, ms, k, op, part);
    if (ord->parsed()) return cmd_ord(g, ms, k, map, part);
    if (rn->parsed()) return cmd_run(g, ms, variant, part, max_steps, trace_path, csv_path);
    if (fd->parsed()) return cmd_fund(g, expr, x, system);
    if (sd->parsed()) return cmd_seed(g, r, part, map);
    if (ck->parsed()) return cmd_check(g, suite, m_max, k_min, k_max, samples, seed);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
