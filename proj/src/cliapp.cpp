#include "qfold/cliapp.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qfold/crystal.hpp"
#include "qfold/dot.hpp"
#include "qfold/forms.hpp"
#include "qfold/module.hpp"
#include "qfold/oracle.hpp"
#include "qfold/quiver.hpp"
#include "qfold/suite.hpp"
#include "qfold/tensor.hpp"

namespace qf {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long parse_long(const std::string& tok) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  check(ec == std::errc() && p == tok.data() + tok.size(), "ConfigError",
        "not an integer: '" + tok + "'");
  return v;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string nu_key(const std::vector<long>& nu) {
  std::ostringstream os;
  for (size_t i = 0; i < nu.size(); ++i) {
    if (i) os << ",";
    os << nu[i];
  }
  return os.str();
}

Json report_of(const Report& rep) {
  Json out = Json::array();
  for (const auto& item : rep.items) {
    Json j;
    j["name"] = item.name;
    j["pass"] = item.pass;
    if (!item.detail.empty()) j["detail"] = item.detail;
    out.push_back(std::move(j));
  }
  return out;
}

void merge_checks(Report& all, const Report& rep) {
  for (const auto& item : rep.items) all.items.push_back(item);
}

Json conventions() {
  Json j;
  j["coproduct"] = "E:E@1+K@E F:F@Kinv+1@F";
  j["crystal-sign"] = "c_ij=1 iff i<j";
  j["quiver-layout"] = "cyclic-orbit-blocks-v1";
  j["braiding"] = "theta.pi.swap";
  j["basis"] = "graded-lex pivot F-monomials";
  return j;
}

Weight weight_from_coeffs(const CartanData& cd, const std::vector<long>& coeffs) {
  check(coeffs.size() == static_cast<size_t>(cd.rank), "ConfigError",
        "weight coefficient count does not match the Cartan rank");
  return Weight(coeffs);
}

} // namespace

JobConfig parse_config_text(const std::string& text) {
  JobConfig cfg;
  std::istringstream is(text);
  std::string line;
  bool in_matrix = false;
  bool saw_matrix = false;
  while (std::getline(is, line)) {
    line = strip_comment(line);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (in_matrix) {
      if (toks.size() == 1 && toks[0] == "}") {
        in_matrix = false;
        continue;
      }
      std::vector<long> row;
      for (const auto& t : toks) row.push_back(parse_long(t));
      cfg.cartan.push_back(std::move(row));
      continue;
    }
    if (toks[0] == "cartan" && toks.size() == 2 && toks[1] == "{") {
      check(!saw_matrix, "ConfigError", "duplicate cartan block");
      in_matrix = true;
      saw_matrix = true;
      continue;
    }
    check(toks.size() >= 3 && toks[1] == "=", "ConfigError",
          "expected 'key = values' or a cartan block, got: " + line);
    std::vector<long> vals;
    for (size_t k = 2; k < toks.size(); ++k) vals.push_back(parse_long(toks[k]));
    if (toks[0] == "symmetrizers") {
      cfg.symmetrizers = vals;
    } else if (toks[0] == "weight") {
      cfg.weights.push_back(vals);
    } else if (toks[0] == "depth") {
      check(vals.size() == 1, "ConfigError", "depth takes one value");
      cfg.depth = vals[0];
    } else {
      fail("ConfigError", "unknown key: " + toks[0]);
    }
  }
  check(!in_matrix, "ConfigError", "unterminated cartan block");
  check(saw_matrix && !cfg.cartan.empty(), "ConfigError", "missing cartan block");
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  check(in.good(), "ConfigError", "cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

struct CommandContext {
  JobConfig cfg;
  CartanData cd;
  long depth;
  std::filesystem::path out;
  int jobs;
  Json report;
  Report checks;

  Weight weight(size_t k) const {
    check(k < cfg.weights.size(), "ConfigError",
          "command needs at least " + std::to_string(k + 1) + " weight lines");
    return weight_from_coeffs(cd, cfg.weights[k]);
  }
  void write_file(const std::string& name, const std::string& payload) const {
    std::ofstream o(out / name, std::ios::binary);
    check(o.good(), "ConfigError", "cannot write " + (out / name).string());
    o << payload;
  }
};

void cmd_fold(CommandContext& ctx) {
  Quiver q = fold_from_cartan(ctx.cd);
  ctx.write_file("quiver.dot", quiver_dot(q));
  Report adm = validate_admissible(q);
  merge_checks(ctx.checks, adm);
  CartanData back = cartan_from_quiver(q);
  ctx.checks.add("round-trip", back.C == ctx.cd.C && back.s == ctx.cd.s);
  Json info;
  info["vertices"] = q.nv;
  info["unoriented-arrows"] = q.arrow_count() / 2;
  info["automorphism-order"] = q.order;
  ctx.report["quiver"] = std::move(info);
}

void cmd_module(CommandContext& ctx) {
  HWModule m = build_module(ctx.cd, ctx.weight(0), ctx.depth);
  Json ch = Json::object();
  for (const auto& [nu, dim] : m.character()) ch[nu_key(nu)] = dim;
  ctx.report["character"] = std::move(ch);
  ctx.report["saturated"] = m.saturated;
  merge_checks(ctx.checks, verify_defining_relations(m));
  for (int i = 0; i < ctx.cd.rank; ++i)
    for (long n = 1; n <= 3; ++n) {
      Report dp = verify_divided_power_relation(m, i, n);
      Report dq = verify_EF_commutation(m, i, n);
      std::string tag = " [i=" + std::to_string(i) + ",n=" + std::to_string(n) + "]";
      for (auto& item : dp.items) ctx.checks.add(item.name + tag, item.pass, item.detail);
      for (auto& item : dq.items) ctx.checks.add(item.name + tag, item.pass, item.detail);
    }
  CharacterTable oracle = freudenthal_character(ctx.cd, m.lambda, ctx.depth);
  ctx.checks.add("character equals recursion oracle", m.character() == oracle.mult);
}

void cmd_crystal(CommandContext& ctx) {
  Crystal b = build_crystal(ctx.cd, ctx.weight(0), ctx.depth);
  ctx.write_file("crystal.dot", crystal_dot(b));
  Json ch = Json::object();
  for (const auto& [nu, n] : b.character()) ch[nu_key(nu)] = n;
  ctx.report["counts"] = std::move(ch);
  ctx.report["vertices"] = b.size();
  Json dec = Json::object();
  for (const auto& [nu, n] : decompose_by_highest_weight(b)) dec[nu_key(nu)] = n;
  ctx.report["highest-weight-vertices"] = std::move(dec);
  CharacterTable oracle = freudenthal_character(ctx.cd, b.lambda, ctx.depth);
  ctx.checks.add("counts equal recursion oracle", b.character() == oracle.mult);
  ctx.checks.add("unique highest-weight vertex",
                 decompose_by_highest_weight(b).size() == 1);
}

void cmd_fold_crystal(CommandContext& ctx) {
  Quiver q = fold_from_cartan(ctx.cd);
  CartanData hat = unfolded_cartan(q);
  Weight lam = ctx.weight(0);
  Weight lam_hat(std::vector<long>(static_cast<size_t>(q.nv), 0));
  for (int v = 0; v < q.nv; ++v)
    lam_hat.c[static_cast<size_t>(v)] =
        lam.c[static_cast<size_t>(q.orbit_of[static_cast<size_t>(v)])];
  Crystal bhat = build_crystal(hat, lam_hat, ctx.depth);
  ctx.checks.add("unfolded crystal complete in the window", bhat.complete,
                 "raise depth if this fails");
  Crystal folded = fold_crystal(bhat, q.a_vertex);
  Crystal direct = build_crystal(ctx.cd, lam, ctx.depth);
  ctx.write_file("crystal_folded.dot", crystal_dot(folded));
  ctx.write_file("crystal_direct.dot", crystal_dot(direct));
  ctx.checks.add("folded crystal isomorphic to the direct one",
                 crystal_isomorphic(folded, direct).has_value());
  ctx.report["unfolded-vertices"] = bhat.size();
  ctx.report["folded-vertices"] = folded.size();
}

void cmd_tensor(CommandContext& ctx) {
  HWModule m1 = build_module(ctx.cd, ctx.weight(0), ctx.depth);
  HWModule m2 = build_module(ctx.cd, ctx.weight(1), ctx.depth);
  TensorModule t = tensor_module({&m1, &m2});
  auto mod_dec = decompose_tensor_module(t);
  Crystal b1 = build_crystal(ctx.cd, m1.lambda, ctx.depth);
  Crystal b2 = build_crystal(ctx.cd, m2.lambda, ctx.depth);
  auto cry_dec = decompose_by_highest_weight(tensor_crystal(b1, b2));
  Json jm = Json::object(), jc = Json::object();
  for (const auto& [nu, n] : mod_dec) jm[nu_key(nu)] = n;
  for (const auto& [nu, n] : cry_dec) jc[nu_key(nu)] = n;
  ctx.report["module-decomposition"] = std::move(jm);
  ctx.report["crystal-decomposition"] = std::move(jc);
  ctx.checks.add("decompositions agree", mod_dec == cry_dec);
  merge_checks(ctx.checks, verify_tensor_relations(t));
}

void cmd_theta(CommandContext& ctx) {
  HWModule m1 = build_module(ctx.cd, ctx.weight(0), ctx.depth);
  HWModule m2 = build_module(ctx.cd, ctx.weight(1), ctx.depth);
  TensorModule t = tensor_module({&m1, &m2});
  GradedOp theta = compute_theta(t, ctx.depth);
  Json blocks = Json::array();
  for (const auto& [k, blk] : theta.blocks) {
    if (k.first == k.second) continue; // identity stages
    Json j;
    const auto& sc = t.space->comps[static_cast<size_t>(k.first)];
    const auto& tc = t.space->comps[static_cast<size_t>(k.second)];
    j["from"] = nu_key(m1.blocks[static_cast<size_t>(sc.fblock[0])].nu) + "|" +
                nu_key(m2.blocks[static_cast<size_t>(sc.fblock[1])].nu);
    j["to"] = nu_key(m1.blocks[static_cast<size_t>(tc.fblock[0])].nu) + "|" +
              nu_key(m2.blocks[static_cast<size_t>(tc.fblock[1])].nu);
    Json rows = Json::array();
    for (int r = 0; r < blk.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < blk.cols(); ++c) row.push_back(blk.at(r, c).str());
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    blocks.push_back(std::move(j));
  }
  ctx.report["theta-blocks"] = std::move(blocks);
  GradedOp psi = psi_operator(t, theta);
  ctx.checks.add("Psi^2 = id", psi.compose(psi).is_identity());
  bool inter = true;
  for (int i = 0; i < ctx.cd.rank; ++i) {
    if (!psi.compose(t.deltaE(i)).equals(t.deltaE(i).compose(psi))) inter = false;
    if (!psi.compose(t.deltaF(i)).equals(t.deltaF(i).compose(psi))) inter = false;
  }
  ctx.checks.add("Psi intertwines the action", inter);
}

void cmd_ybe(CommandContext& ctx) {
  Report rep = verify_yang_baxter(ctx.cd, ctx.weight(0), ctx.weight(1), ctx.weight(2),
                                  ctx.depth);
  merge_checks(ctx.checks, rep);
}

void cmd_forms(CommandContext& ctx) {
  HWModule m = build_module(ctx.cd, ctx.weight(0), ctx.depth);
  GramTable g = contravariant_form(m);
  merge_checks(ctx.checks, verify_contravariance(m, g));
  OrthogonalityReport orep = almost_orthogonality(m, g);
  ctx.report["expansion-order"] = orep.order;
  ctx.checks.add("pivot basis almost orthogonal", orep.almost_orthogonal);
  Json blocks = Json::object();
  for (const auto& [nu, mat] : g.block) {
    Json rows = Json::array();
    for (int r = 0; r < mat.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < mat.cols(); ++c) row.push_back(mat.at(r, c).str());
      rows.push_back(std::move(row));
    }
    blocks[nu_key(nu)] = std::move(rows);
  }
  ctx.report["gram"] = std::move(blocks);
}

void cmd_all(CommandContext& ctx) {
  SuiteOptions sopt;
  sopt.jobs = ctx.jobs;
  SuiteResult res = run_full_suite(sopt);
  Json groups = Json::array();
  for (const auto& item : res.items) {
    Json j;
    j["id"] = item.id;
    j["pass"] = item.report.all_pass();
    j["checks"] = report_of(item.report);
    groups.push_back(std::move(j));
    for (const auto& c : item.report.items)
      ctx.checks.add(item.id + ": " + c.name, c.pass, c.detail);
  }
  ctx.report["groups"] = std::move(groups);
}

} // namespace

int run_command(const RunOptions& opt) {
  Json report;
  report["tool"] = "qfold";
  report["command"] = opt.command;
  report["conventions"] = conventions();
  try {
    CommandContext ctx;
    ctx.cfg = load_config(opt.config_path);
    ctx.cd = validate_cartan(ctx.cfg.cartan, ctx.cfg.symmetrizers);
    ctx.depth = opt.depth.value_or(ctx.cfg.depth);
    check(ctx.depth >= 0, "ConfigError", "depth must be nonnegative");
    ctx.out = opt.out_dir;
    ctx.jobs = opt.jobs;
    std::filesystem::create_directories(ctx.out);
    ctx.report = std::move(report);

    Json jc;
    jc["matrix"] = ctx.cfg.cartan;
    jc["symmetrizers"] = ctx.cd.s;
    jc["exponent-denominator"] = ctx.cd.d;
    ctx.report["cartan"] = std::move(jc);
    ctx.report["weights"] = ctx.cfg.weights;
    ctx.report["depth"] = ctx.depth;

    if (opt.command == "fold")
      cmd_fold(ctx);
    else if (opt.command == "module")
      cmd_module(ctx);
    else if (opt.command == "crystal")
      cmd_crystal(ctx);
    else if (opt.command == "fold-crystal")
      cmd_fold_crystal(ctx);
    else if (opt.command == "tensor")
      cmd_tensor(ctx);
    else if (opt.command == "theta")
      cmd_theta(ctx);
    else if (opt.command == "ybe")
      cmd_ybe(ctx);
    else if (opt.command == "forms")
      cmd_forms(ctx);
    else if (opt.command == "all")
      cmd_all(ctx);
    else
      fail("ConfigError", "unknown command: " + opt.command);

    ctx.report["checks"] = report_of(ctx.checks);
    bool pass = ctx.checks.all_pass();
    ctx.report["result"] = pass ? "pass" : "fail";
    if (!pass) {
      const CheckItem* f = ctx.checks.first_failure();
      Json jf;
      jf["name"] = f->name;
      if (!f->detail.empty()) jf["detail"] = f->detail;
      ctx.report["first-failure"] = std::move(jf);
    }
    std::ofstream out(ctx.out / "report.json", std::ios::binary);
    check(out.good(), "ConfigError", "cannot write report.json");
    out << ctx.report.dump(2) << "\n";
    return pass ? 0 : 1;
  } catch (const Error& e) {
    if (e.kind() == "ConfigError" || e.kind() == "NotGCM" ||
        e.kind() == "NotSymmetrizable" || e.kind() == "NotMinimalSymmetrizer" ||
        e.kind() == "NotDominant" || e.kind() == "BadArgument") {
      // configuration-level failure: no report
      fprintf(stderr, "error: %s\n", e.what());
      return 2;
    }
    report["result"] = "error";
    report["error"] = e.what();
    std::filesystem::create_directories(opt.out_dir);
    std::ofstream out(std::filesystem::path(opt.out_dir) / "report.json",
                      std::ios::binary);
    out << report.dump(2) << "\n";
    fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

} // namespace qf
