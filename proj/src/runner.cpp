#include "fernlab/runner.hpp"

#include <algorithm>

#include "fernlab/dimcalc.hpp"
#include "fernlab/errors.hpp"
#include "fernlab/lie.hpp"
#include "fernlab/steinberg.hpp"

namespace fernlab::cli {

using nlohmann::ordered_json;

namespace {

ordered_json json_rationals(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ordered_json json_matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(json_rationals(m.row(i)));
  return rows;
}

ordered_json json_set(const std::set<int>& s) {
  ordered_json a = ordered_json::array();
  for (int x : s) a.push_back(x);
  return a;
}

ordered_json json_perm(const weyl::Permutation& u) {
  ordered_json a = ordered_json::array();
  for (int x : u.one_line()) a.push_back(x);
  return a;
}

ordered_json json_report(const dimcalc::DimReport& rep) {
  ordered_json out = ordered_json::object();
  for (const auto& [name, entry] : rep) {
    ordered_json e;
    e["value"] = entry.value;
    e["oracle"] = entry.oracle ? ordered_json(*entry.oracle) : ordered_json(nullptr);
    e["anchor"] = entry.anchor;
    out[name] = std::move(e);
  }
  return out;
}

ordered_json echo_inputs(const ScenarioFile& sf) {
  ordered_json in = ordered_json::object();
  if (sf.n) in["n"] = *sf.n;
  if (sf.r) in["r"] = *sf.r;
  if (!sf.i0prime.empty()) in["i0prime"] = json_set(sf.i0prime);
  in["dL"] = sf.d_l;
  if (sf.weights) in["weights"] = *sf.weights;
  if (sf.g) in["g"] = json_matrix(*sf.g);
  if (sf.k) in["k"] = *sf.k;
  if (sf.k) in["cusp"] = sf.cusp;
  if (sf.j0) in["j0"] = json_set(*sf.j0);
  if (sf.j1) in["j1"] = json_set(*sf.j1);
  if (sf.gl4)
    in["gl4"] = {{"L12", sf.gl4->L12.str()}, {"L13", sf.gl4->L13.str()},
                 {"L14", sf.gl4->L14.str()}, {"L23", sf.gl4->L23.str()},
                 {"L34", sf.gl4->L34.str()}};
  return in;
}

struct Ctx {
  ScenarioFile sf;
  std::uint64_t seed = 0;
  Rng rng;
  std::vector<std::string> warnings;
  Ctx(const ScenarioFile& file, const RunOptions& opts)
      : sf(file), seed(opts.seed_override.value_or(file.seed.value_or(0))), rng(seed) {}

  Matrix flag_matrix(const weyl::BlockShape& shape) {
    if (sf.g) return *sf.g;
    warnings.push_back("g not supplied; sampled a generic g from the seed");
    return sample_generic_g(shape, rng);
  }
};

ordered_json cmd_dims(Ctx& ctx) {
  auto shape = ctx.sf.shape();
  dimcalc::Scenario scn{shape, ctx.sf.d_l, std::nullopt};
  const std::size_t s = shape.block_count();
  auto id = weyl::Permutation::identity(s);
  auto w0 = weyl::Permutation::longest(s);

  ordered_json out;
  out["ext_identity"] = json_report(dimcalc::ext_dims(scn, id));
  out["ext_longest"] = json_report(dimcalc::ext_dims(scn, w0));

  ordered_json hom = ordered_json::array();
  std::vector<weyl::Permutation> us =
      s <= 6 ? weyl::enumerate_weyl(s) : std::vector<weyl::Permutation>{id, w0};
  for (const auto& u : us) {
    ordered_json h;
    h["u"] = json_perm(u);
    h["dim"] = dimcalc::hom_u_dim(scn, u);
    h["anchor"] = "s(1+dL) - |effective R_u^+|";
    hom.push_back(std::move(h));
  }
  out["hom_u"] = std::move(hom);
  out["rep"] = json_report(dimcalc::rep_side_dims(scn));

  if (s >= 2) {
    auto cuts = shape.cuts();
    const std::int64_t t_prev = cuts[s - 2];
    const std::int64_t r_s = shape.r.back();
    ordered_json tc = ordered_json::array();
    for (std::int64_t h = 0; h <= r_s + 2; ++h) {
      ordered_json e;
      e["t_prev"] = t_prev;
      e["r_s"] = r_s;
      e["h"] = h;
      e["value"] = dimcalc::t_count(t_prev, r_s, h);
      e["oracle"] = dimcalc::t_count_brute(t_prev, r_s, h);
      e["anchor"] = "max(0,r_s-h)*(t_prev-(r_s+h-1)/2); oracle: pair enumeration";
      tc.push_back(std::move(e));
    }
    out["t_count"] = std::move(tc);
  }

  Matrix g = ctx.flag_matrix(shape);
  out["g_used"] = json_matrix(g);
  dimcalc::Scenario with_g{shape, ctx.sf.d_l, g};
  auto kernel = dimcalc::kernel_report(with_g);
  if (kernel.at("ker_dim").value < 0)
    ctx.warnings.push_back("envelope dimension exceeds 2^s - 1; ker_dim is negative");
  out["kernel"] = json_report(kernel);
  return out;
}

ordered_json envelope_entry(const Matrix& g, const weyl::BlockShape& shape) {
  ordered_json e;
  e["g"] = json_matrix(g);
  auto adgb =
      lie::ad_conj(g, lie::standard_subalgebra(shape.n, lie::SubalgebraKind::Borel));
  auto circ = lie::envelope(g, shape, lie::EnvelopeKind::Circ);
  auto full = lie::envelope(g, shape, lie::EnvelopeKind::Full);
  e["dim_adgb"] = adgb.dim();
  e["envelope_circ"] = circ.dim();
  e["envelope_full"] = full.dim();
  e["full_equals_adgb"] = (full == adgb);
  e["envelope_circ_basis"] = json_matrix(circ.space.basis());
  ordered_json summands = ordered_json::array();
  for (const auto& row : lie::summand_dims(g, shape)) {
    ordered_json s;
    s["u"] = json_perm(row.u);
    s["tau_dim"] = row.tau_dim;
    s["p_dim"] = row.p_dim;
    summands.push_back(std::move(s));
  }
  e["summands"] = std::move(summands);
  return e;
}

ordered_json cmd_envelope(Ctx& ctx, int samples) {
  auto shape = ctx.sf.shape();
  ordered_json out;
  ordered_json list = ordered_json::array();
  if (ctx.sf.g) {
    list.push_back(envelope_entry(*ctx.sf.g, shape));
  } else {
    ctx.warnings.push_back("g not supplied; sampling generic g per sample from the seed");
    for (int i = 0; i < std::max(1, samples); ++i)
      list.push_back(envelope_entry(sample_generic_g(shape, ctx.rng), shape));
  }
  out["samples"] = std::move(list);
  return out;
}

ordered_json cmd_fern(Ctx& ctx) {
  auto shape = ctx.sf.shape();
  Matrix b = Matrix::identity(0);
  if (ctx.sf.g) {
    if (!ctx.sf.g->is_upper_triangular())
      fail(ErrorKind::Validation, "fern needs an upper-triangular b in 'g'");
    b = *ctx.sf.g;
  } else {
    ctx.warnings.push_back("b not supplied; sampled unit upper-triangular from the seed");
    b = sample_unit_upper(shape.n, ctx.rng);
  }
  auto check = lie::fern_check(b, shape);
  ordered_json out;
  out["b"] = json_matrix(b);
  ordered_json ws = ordered_json::array();
  for (const auto& w : check.witnesses) {
    ordered_json e;
    e["i"] = w.i;
    e["j"] = w.j;
    e["u"] = json_perm(w.u);
    e["x"] = json_rationals(w.x);
    e["matrix"] = json_matrix(w.witness);
    e["member"] = w.member;
    ws.push_back(std::move(e));
  }
  out["witnesses"] = std::move(ws);
  out["all_members"] = check.all_members;
  out["spans"] = check.spans;

  Matrix g = b * weyl::Permutation::longest(static_cast<std::size_t>(shape.n)).matrix();
  auto adgb = lie::ad_conj(g, lie::standard_subalgebra(shape.n, lie::SubalgebraKind::Borel));
  out["envelope_full_equals_adgb"] =
      (lie::envelope(g, shape, lie::EnvelopeKind::Full) == adgb);
  return out;
}

ordered_json lines_payload(const hodge::HodgeFlag& flag, const weyl::BlockShape& shape) {
  ordered_json out;
  out["noncritical"] = hodge::is_noncritical(shape, flag);
  auto lines = hodge::extract_lines(flag);
  ordered_json ls = ordered_json::array();
  for (const auto& gen : lines.gens) ls.push_back(json_rationals(gen));
  out["lines"] = std::move(ls);
  return out;
}

ordered_json cmd_lines(Ctx& ctx) {
  auto shape = ctx.sf.shape();
  Matrix g = ctx.flag_matrix(shape);
  auto flag = hodge::flag_from_matrix(g, ctx.sf.flag_weights());
  ordered_json out;
  out["g_used"] = json_matrix(g);
  out.update(lines_payload(flag, shape));
  return out;
}

ordered_json cmd_flatten(Ctx& ctx) {
  auto shape = ctx.sf.shape();
  Matrix g = ctx.flag_matrix(shape);
  auto flag = hodge::flag_from_matrix(g, ctx.sf.flag_weights());
  auto lines = hodge::extract_lines(flag);
  auto report = weyl::index_report(shape);

  ordered_json out;
  out["g_used"] = json_matrix(g);
  out["delta_prime"] = json_set(report.delta_prime);
  ordered_json flats = ordered_json::array();
  for (int i : report.delta_prime) {
    auto flat = hodge::flatten_line(lines, i, shape);
    ordered_json e;
    e["i"] = flat.i;
    ordered_json kept = ordered_json::array();
    for (auto c : flat.kept_coords) kept.push_back(static_cast<int>(c) + 1);
    e["kept_coords"] = std::move(kept);
    e["line"] = json_rationals(flat.line);
    e["collapsed"] = flat.collapsed;
    auto wedge = hodge::pr_flat(hodge::fil_max_wedge(flag, i), shape, i);
    ordered_json coords = ordered_json::array();
    for (const auto& [subset, coeff] : wedge.coords) {
      ordered_json t;
      t["subset"] = subset;
      t["coeff"] = coeff.str();
      coords.push_back(std::move(t));
    }
    e["flat_wedge"] = std::move(coords);
    if (flat.collapsed)
      ctx.warnings.push_back("flat line " + std::to_string(i) + " collapsed to zero");
    flats.push_back(std::move(e));
  }
  out["flats"] = std::move(flats);
  return out;
}

ordered_json cmd_steinberg(Ctx& ctx, RunResult& result, bool want_dot) {
  if (!ctx.sf.k) fail(ErrorKind::Validation, "steinberg needs 'k'");
  const int k = *ctx.sf.k;
  steinberg::Segment seg(k, ctx.sf.cusp);

  ordered_json out;
  out["k"] = k;
  out["cusp"] = ctx.sf.cusp;
  out["m"] = seg.m();

  if (k <= 7) {
    // fibers over all labels, largest first ordering by subset
    std::vector<steinberg::FactorLabel> labels;
    std::vector<int> base;
    for (int j = 1; j < k; ++j) base.push_back(j);
    for (std::size_t mask = 0; mask < (1ull << base.size()); ++mask) {
      steinberg::FactorLabel J;
      for (std::size_t b = 0; b < base.size(); ++b)
        if (mask & (1ull << b)) J.insert(base[b]);
      labels.push_back(std::move(J));
    }
    std::sort(labels.begin(), labels.end());
    ordered_json fibers = ordered_json::array();
    for (const auto& J : labels) {
      auto fiber = steinberg::jacquet_fiber(seg, J);
      ordered_json e;
      e["J"] = json_set(J);
      e["size"] = fiber.size();
      auto witness = steinberg::realize_descent(k, J);
      e["descent_witness"] = json_perm(witness);
      if (k <= 5) {
        ordered_json members = ordered_json::array();
        for (const auto& u : fiber) members.push_back(json_perm(u));
        e["members"] = std::move(members);
      }
      fibers.push_back(std::move(e));
    }
    out["fibers"] = std::move(fibers);
  } else {
    ctx.warnings.push_back("fiber table omitted for k > 7");
  }

  steinberg::FactorLabel j0 = ctx.sf.j0.value_or(k >= 2 ? steinberg::FactorLabel{1}
                                                        : steinberg::FactorLabel{});
  steinberg::FactorLabel j1;
  if (ctx.sf.j1) {
    j1 = *ctx.sf.j1;
  } else {
    for (int j = 2; j < k; ++j) j1.insert(j);
  }
  auto iv = steinberg::q_interval(j0, j1);
  ordered_json ivj;
  ivj["j0"] = json_set(j0);
  ivj["j1"] = json_set(j1);
  ordered_json members = ordered_json::array();
  for (const auto& m : iv.members) members.push_back(json_set(m));
  ivj["members"] = std::move(members);
  ivj["size"] = iv.members.size();
  out["interval"] = std::move(ivj);

  ordered_json gc;
  gc["s"] = k;
  gc["dL"] = ctx.sf.d_l;
  gc["value"] = steinberg::generic_constituent_count(k, ctx.sf.d_l);
  if (k >= 2 && k <= 7) {
    std::int64_t total = 0;
    std::set<int> delta;
    for (int j = 1; j < k; ++j) delta.insert(j);
    for (int j = 1; j < k; ++j) {
      std::set<int> jhat = delta;
      jhat.erase(j);
      total += static_cast<std::int64_t>(
          weyl::min_coset_reps(static_cast<std::size_t>(k), jhat, {}).size());
    }
    gc["oracle"] = ctx.sf.d_l * total;
  } else {
    gc["oracle"] = nullptr;
  }
  gc["anchor"] = "dL*(2^s - 2); oracle: coset representative enumeration";
  out["generic_count"] = std::move(gc);

  if (want_dot) result.dot = steinberg::interval_dot(iv);
  return out;
}

ordered_json cmd_gl4(Ctx& ctx) {
  if (!ctx.sf.gl4) fail(ErrorKind::Validation, "gl4 needs the 'gl4' parameter object");
  ordered_json out;
  out["verdict"] = hodge::gl4_rebased_check(*ctx.sf.gl4);
  return out;
}

}  // namespace

RunResult run_command(const std::string& command, const ScenarioFile& sf,
                      const RunOptions& opts) {
  RunResult result;
  Ctx ctx(sf, opts);

  ordered_json outputs;
  if (command == "dims") {
    outputs = cmd_dims(ctx);
  } else if (command == "envelope") {
    outputs = cmd_envelope(ctx, opts.samples);
  } else if (command == "fern") {
    outputs = cmd_fern(ctx);
  } else if (command == "lines") {
    outputs = cmd_lines(ctx);
  } else if (command == "flatten") {
    outputs = cmd_flatten(ctx);
  } else if (command == "steinberg") {
    outputs = cmd_steinberg(ctx, result, opts.want_dot);
  } else if (command == "gl4") {
    outputs = cmd_gl4(ctx);
  } else {
    fail(ErrorKind::Parse, "unknown command '" + command + "'");
  }

  result.doc["command"] = command;
  result.doc["inputs"] = echo_inputs(sf);
  result.doc["seed"] = ctx.seed;
  result.doc["outputs"] = std::move(outputs);
  result.doc["warnings"] = ctx.warnings;
  return result;
}

}  // namespace fernlab::cli
