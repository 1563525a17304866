#include "hmds/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "hmds/io.hpp"
#include "hmds/listdec.hpp"
#include "hmds/rs.hpp"
#include "hmds/sizer.hpp"
#include "hmds/verifier.hpp"

namespace hmds::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool pretty = false;
  bool progress = false;
  bool no_timing = false;
  unsigned threads = 1;
};

struct Ctx {
  Globals g;
  std::ostream& out;
  std::ostream& err;

  verifier::Options options() const {
    verifier::Options o;
    o.threads = std::max(1u, g.threads);
    if (g.progress) o.progress = [this](std::uint64_t n) { err << "collections checked: " << n << '\n'; };
    return o;
  }
  void emit(const json& j) const { out << (g.pretty ? j.dump(2) : j.dump()) << '\n'; }
  json report(const verifier::VerificationReport& r) const { return io::report_to_json(r, !g.no_timing); }
};

verifier::VerificationReport run_verify(const io::CodeDescription& code, int ell, const std::string& method,
                                        const verifier::Options& opt) {
  if (ell < 1) throw UsageError("--ell must be at least 1");
  const auto& v = code.generator;
  if (method == "poly-det" && code.kind != io::CodeKind::RS) throw UsageError("poly-det needs an rs code");
  if (ell == 1) return verifier::is_mds(v);
  if (method == "subspace") return verifier::is_mds_ell(v, ell, verifier::Method::Subspace, opt);
  if (method == "block-det") return verifier::is_mds_ell(v, ell, verifier::Method::BlockDet, opt);
  if (method == "poly-det") return verifier::is_mds_ell(v, ell, rs::poly_det(*code.rs), opt);
  if (method == "reduced") return verifier::is_mds_ell_reduced(v, ell, verifier::Method::BlockDet, opt);
  if (method == "auto") {
    if (code.kind == io::CodeKind::RS) return verifier::is_mds_ell_reduced(v, ell, rs::poly_det(*code.rs), opt);
    return verifier::is_mds_ell_reduced(v, ell, verifier::Method::BlockDet, opt);
  }
  throw UsageError("unknown method " + method);
}

rs::RSCode apply_op(const rs::RSCode& code, const std::string& op) {
  auto column = [&](const std::string& prefix) {
    const std::string tail = op.substr(prefix.size());
    std::size_t used = 0;
    int j = 0;
    try {
      j = std::stoi(tail, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tail.size()) throw UsageError("bad column in --op " + op);
    return j - 1;
  };
  if (op == "expurgate") return rs::expurgate(code);
  if (op.rfind("puncture:", 0) == 0) return rs::puncture(code, column("puncture:"));
  if (op.rfind("pseudo-shorten:", 0) == 0) return rs::pseudo_shorten(code, column("pseudo-shorten:"));
  throw UsageError("unknown --op " + op);
}

std::pair<std::uint64_t, std::uint64_t> parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return {std::stoull(s), 1};
    return {std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
  } catch (const std::exception&) {
    throw UsageError("bad rational " + s);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher order MDS code toolkit", "hmds"};
  app.require_subcommand(1);
  app.fallthrough();
  Ctx ctx{{}, out, err};
  app.add_flag("--pretty", ctx.g.pretty, "Indent JSON output");
  app.add_flag("--progress", ctx.g.progress, "Collection-count heartbeats on stderr");
  app.add_flag("--no-timing", ctx.g.no_timing, "Omit elapsed_ms from reports");
  app.add_option("--threads", ctx.g.threads, "Worker threads for verification")->check(CLI::PositiveNumber);

  std::string file, method = "auto", op, rho;
  int ell = 2, L = 1, n = 0, k = 0, trials = 5;
  std::optional<int> verify_ell;
  std::uint64_t q = 0, seed = 0, max_trials = 10000, q_max = 0;
  std::string formula = "all";
  bool as_json = false, proof_form = false, definition = false, sweep = false;

  auto* verify = app.add_subcommand("verify", "Decide MDS(l) for a code file");
  verify->add_option("code", file, "Code JSON")->required();
  verify->add_option("--ell", ell, "Order l (1 = plain MDS)");
  verify->add_option("--method", method, "auto|subspace|block-det|poly-det|reduced")
      ->check(CLI::IsMember({"auto", "subspace", "block-det", "poly-det", "reduced"}));

  auto* transform = app.add_subcommand("transform", "Expurgate, puncture or pseudo-shorten an RS code");
  transform->add_option("code", file, "RS code JSON")->required();
  transform->add_option("--op", op, "expurgate | puncture:j | pseudo-shorten:j")->required();
  transform->add_option("--verify-ell", verify_ell, "Verify the result at this order");

  auto* ld = app.add_subcommand("ld-check", "Average-radius list decodability of a code");
  ld->add_option("code", file, "Code JSON")->required();
  ld->add_option("--L", L, "List size")->required();
  ld->add_option("--rho", rho, "Radius as a rational num/den instead of the LD-MDS radius");

  auto* dual = app.add_subcommand("dual", "Parity-check (dual) code");
  dual->add_option("code", file, "Code JSON")->required();

  auto* duality = app.add_subcommand("duality", "Compare MDS(l+1) with LD-MDS(<= l) of the dual");
  duality->add_option("code", file, "Code JSON")->required();
  duality->add_option("--ell", ell, "l")->required();

  auto* bound = app.add_subcommand("bound", "Field-size bounds");
  bound->add_option("--n", n, "Length");
  bound->add_option("--k", k, "Dimension");
  bound->add_option("--ell", ell, "Order");
  bound->add_option("--formula", formula, "new|prior|dependency|all")
      ->check(CLI::IsMember({"new", "prior", "dependency", "all"}));
  bound->add_flag("--json", as_json, "JSON output (always on)");
  bound->add_flag("--proof-form", proof_form, "Use the intermediate dependency sum instead of the closed form");
  bound->add_flag("--sweep", sweep, "Comparison table over n 10..100, k 2..5, l 2..4");

  auto* search = app.add_subcommand("search", "Random search for MDS(l) RS evaluation points");
  search->add_option("--n", n)->required();
  search->add_option("--k", k)->required();
  search->add_option("--ell", ell)->required();
  search->add_option("--q", q)->required();
  search->add_option("--seed", seed);
  search->add_option("--max-trials", max_trials);

  auto* minq = app.add_subcommand("min-q", "Smallest field admitting an MDS(l) RS code");
  minq->add_option("--n", n)->required();
  minq->add_option("--k", k)->required();
  minq->add_option("--ell", ell)->required();
  minq->add_option("--q-max", q_max)->required();

  auto* oracle = app.add_subcommand("oracle", "Cross-validate every verification route on one code");
  oracle->add_option("code", file, "Code JSON")->required();
  oracle->add_option("--ell", ell)->required();
  oracle->add_flag("--definition", definition, "Also run the definition-level sampling check");
  oracle->add_option("--trials", trials, "Samples for the definition check");
  oracle->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*verify) {
      const auto code = io::code_from_json(io::read_json_file(file));
      const auto r = run_verify(code, ell, method, ctx.options());
      ctx.emit(ctx.report(r));
      return r.holds ? kHolds : kViolated;
    }
    if (*transform) {
      const auto code = io::code_from_json(io::read_json_file(file));
      if (code.kind != io::CodeKind::RS) throw UsageError("transforms need an rs code");
      const auto next = apply_op(*code.rs, op);
      json j = {{"code", io::code_to_json(next)}};
      int rc = kHolds;
      if (verify_ell) {
        const auto r = run_verify(io::describe(next), *verify_ell, "auto", ctx.options());
        j["report"] = ctx.report(r);
        rc = r.holds ? kHolds : kViolated;
      }
      ctx.emit(j);
      return rc;
    }
    if (*ld) {
      const auto code = io::code_from_json(io::read_json_file(file));
      listdec::LDResult r;
      if (rho.empty()) {
        r = listdec::is_ld_mds(code.generator, L);
      } else {
        const auto [num, den] = parse_rational(rho);
        if (den == 0) throw UsageError("zero denominator in --rho");
        r = listdec::check_average_radius(code.generator, L, num, den);
      }
      json j = ctx.report(r.report);
      if (r.witness) j["ld_witness"] = io::witness_to_json(*r.witness);
      ctx.emit(j);
      return r.report.holds ? kHolds : kViolated;
    }
    if (*dual) {
      const auto code = io::code_from_json(io::read_json_file(file));
      ctx.emit(io::code_to_json(io::describe(linalg::dual(code.generator))));
      return kHolds;
    }
    if (*duality) {
      const auto code = io::code_from_json(io::read_json_file(file));
      const auto r = listdec::duality_check(code.generator, ell);
      ctx.emit(ctx.report(r));
      return r.holds ? kHolds : kViolated;
    }
    if (*bound) {
      (void)as_json;
      if (sweep) {
        json rows = json::array();
        for (const auto& r : sizer::compare_bounds(10, 100, 2, 5, 2, 4))
          rows.push_back({{"n", r.params.n},
                          {"k", r.params.k},
                          {"ell", r.params.ell},
                          {"log2_new", r.log2_new},
                          {"log2_prior", r.log2_prior},
                          {"delta_below_n", r.delta_below_n},
                          {"new_smaller", r.new_smaller},
                          {"first_branch", r.first_branch},
                          {"second_branch", r.second_branch}});
        ctx.emit({{"note", sizer::kEulerNote}, {"rows", rows}});
        return kHolds;
      }
      const sizer::BoundParams p{n, k, ell};
      p.validate();
      const auto form = proof_form ? sizer::Form::Proof : sizer::Form::Stated;
      json j = {{"n", n}, {"k", k}, {"ell", ell}, {"delta", p.delta()}, {"degree_bound", sizer::degree_bound(k, ell)}};
      if (formula == "new" || formula == "all") j["new"] = io::bound_to_json(sizer::bound_new(p, form));
      if (formula == "dependency" || formula == "all")
        j["dependency"] = io::bound_to_json(sizer::dependency_bound(p, form));
      if (formula == "prior" || formula == "all") j["prior"] = io::bound_to_json(sizer::bound_prior(p));
      ctx.emit(j);
      return kHolds;
    }
    if (*search) {
      const auto r = sizer::random_search(n, k, ell, q, seed, max_trials, ctx.options());
      json j = {{"found", r.code.has_value()}, {"trials", r.trials}, {"seed", seed}};
      if (r.code) {
        j["code"] = io::code_to_json(*r.code);
        j["report"] = ctx.report(*r.report);
      }
      ctx.emit(j);
      return r.code ? kHolds : kViolated;
    }
    if (*minq) {
      const auto r = sizer::exhaustive_min_q(n, k, ell, q_max, ctx.options());
      json attempts = json::array();
      for (const auto& a : r.attempts) attempts.push_back({{"q", a.q}, {"point_sets", a.point_sets}, {"found", a.found}});
      json j = {{"q", r.q ? json(*r.q) : json(nullptr)}, {"attempts", attempts}};
      j["witness"] = r.witness ? io::code_to_json(*r.witness) : json(nullptr);
      ctx.emit(j);
      return r.q ? kHolds : kViolated;
    }
    if (*oracle) {
      const auto code = io::code_from_json(io::read_json_file(file));
      std::vector<std::string> methods = {"subspace", "block-det", "reduced"};
      if (code.kind == io::CodeKind::RS) methods.push_back("poly-det");
      json verdicts = json::object();
      std::optional<bool> first;
      bool agree = true;
      for (const auto& m : methods) {
        const auto r = run_verify(code, ell, m, ctx.options());
        verdicts[m] = ctx.report(r);
        if (!first) first = r.holds;
        agree = agree && *first == r.holds;
        if (!r.holds && !verifier::witness_rechecks(code.generator, r)) agree = false;
      }
      if (definition) {
        const auto r = verifier::check_definition3(code.generator, ell, trials, seed);
        verdicts["definition"] = ctx.report(r);
        agree = agree && *first == r.holds;
      }
      ctx.emit({{"agree", agree}, {"verdicts", verdicts}});
      return agree ? kHolds : kViolated;
    }
  } catch (const listdec::CodeTooLarge& e) {
    ctx.emit({{"error", "size refusal"}, {"estimate", e.estimate()}, {"limit", listdec::kMaxCodewords}});
    err << e.what() << '\n';
    return kTooLarge;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hmds::cli
