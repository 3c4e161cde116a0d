#include "isob_cli/cli.hpp"

#include <cstdlib>
#include <CLI11.hpp>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "isob/charclass.hpp"
#include "isob/classify.hpp"
#include "isob/config.hpp"
#include "isob/obstruction.hpp"
#include "isob/repthy.hpp"
#include "isob/root_system.hpp"
#include "isob/sympair.hpp"
#include "isob_cli/json_report.hpp"
#include "isob_cli/verify_paper.hpp"

namespace isob::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return kUsage;
    case ErrorKind::ConsistencyFault: return kVerificationFailed;
    default: return kDomainError;
  }
}

namespace {

struct RunConfig {
  Limits limits;
  std::string format = "text";
  bool json_flag = false;

  bool json() const { return json_flag || format == "json"; }
};

struct TypeArgs {
  std::string family;
  std::optional<int> rank;

  SimpleType resolve() const { return rank ? make_simple_type(family, *rank) : parse_simple_type(family); }
};

struct WeightArgs {
  std::optional<std::string> ambient;
  std::optional<std::string> fundamental;

  Weight resolve(const RootSystem& rs) const {
    if (!ambient && !fundamental) throw Error(ErrorKind::InvalidArgument, "give --ambient or --fundamental");
    Weight w = ambient ? Weight(Basis::Ambient, parse_rational_list(*ambient))
                       : Weight(Basis::Fundamental, parse_rational_list(*fundamental));
    rs.check(w);
    return ambient ? rs.canonical(w) : w;
  }
};

void add_type_args(CLI::App* sub, TypeArgs& t) {
  sub->add_option("family", t.family, "Family letter A-G, or a full name such as E8")->required();
  sub->add_option("rank", t.rank, "Rank, when the family is given alone");
}

void add_weight_args(CLI::App* sub, WeightArgs& w) {
  auto* a = sub->add_option("--ambient", w.ambient, "Comma-separated ambient coordinates");
  auto* f = sub->add_option("--fundamental", w.fundamental, "Comma-separated fundamental-weight coordinates");
  a->excludes(f);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void print_lines(std::ostream& out, const std::string& title, const std::vector<std::string>& lines) {
  if (lines.empty()) return;
  out << title << ":\n";
  for (const auto& l : lines) out << "  " << l << '\n';
}

std::string join_weights(std::span<const Weight> ws) {
  std::string out;
  for (const auto& w : ws) out += (out.empty() ? "" : " ") + to_string(w);
  return out;
}

int cmd_describe(const RunConfig& cfg, const TypeArgs& t, std::ostream& out) {
  const RootSystem rs = build_root_system(t.resolve());
  if (cfg.json()) {
    emit(out, to_json(rs));
    return kOk;
  }
  out << rs.type().name() << " (" << rs.label() << ")\n";
  out << "rank " << rs.rank() << ", ambient dimension " << rs.ambient_dim() << '\n';
  out << "dim " << to_string(algebra_dim(rs)) << ", |W| = " << to_string(rs.weyl_group_order()) << '\n';
  out << "positive roots " << rs.positive_roots().size() << ", highest root " << to_string(rs.highest_root()) << '\n';
  out << "simple roots " << join_weights(rs.simple_roots()) << '\n';
  out << "fundamental weights " << join_weights(rs.fundamental_weights()) << '\n';
  const SmallestRep s = smallest_nontrivial_dim(rs);
  out << "smallest nontrivial representation " << to_string(s.dim) << " (fundamental weight " << s.index + 1 << ")\n";
  return kOk;
}

int cmd_dim(const RunConfig& cfg, const TypeArgs& t, const WeightArgs& wa, std::ostream& out) {
  const RootSystem rs = build_root_system(t.resolve());
  const Weight w = wa.resolve(rs);
  const Integer d = weyl_dim(rs, w);
  if (cfg.json())
    emit(out, Json{{"type", rs.type().name()}, {"basis", to_string(w.basis)}, {"weight", to_json(w)}, {"dim", to_string(d)}});
  else
    out << to_string(d) << '\n';
  return kOk;
}

int cmd_orbit(const RunConfig& cfg, const TypeArgs& t, const WeightArgs& wa, bool count_only, std::ostream& out) {
  const RootSystem rs = build_root_system(t.resolve());
  const Weight w = wa.resolve(rs);
  const Integer size = orbit_size(rs, w);
  std::vector<Weight> orbit;
  if (!count_only) orbit = weyl_orbit(rs, w, cfg.limits.orbit_cap);
  if (cfg.json()) {
    Json j{{"type", rs.type().name()}, {"basis", to_string(w.basis)}, {"weight", to_json(w)}, {"size", to_string(size)}};
    if (!count_only) {
      Json ws = Json::array();
      for (const auto& x : orbit) ws.push_back(to_json(x));
      j["weights"] = std::move(ws);
    }
    emit(out, j);
    return kOk;
  }
  out << "size " << to_string(size) << '\n';
  for (const auto& x : orbit) out << to_string(x) << '\n';
  return kOk;
}

int cmd_freudenthal(const RunConfig& cfg, const TypeArgs& t, const WeightArgs& wa, std::ostream& out) {
  const RootSystem rs = build_root_system(t.resolve());
  const HighestWeightRep rep(rs, wa.resolve(rs));
  const WeightMultiset ws = freudenthal_multiplicities(rep, cfg.limits.freudenthal_cap);
  if (cfg.json()) {
    emit(out, Json{{"type", rs.type().name()},
                   {"basis", to_string(rep.highest_weight().basis)},
                   {"highest_weight", to_json(rep.highest_weight())},
                   {"dim", std::to_string(ws.total())},
                   {"weights", to_json(ws)}});
    return kOk;
  }
  out << "dim " << ws.total() << ", " << ws.distinct() << " distinct weights\n";
  for (const auto& [w, m] : ws) out << to_string(w) << ' ' << m << '\n';
  return kOk;
}

int cmd_pair_describe(const RunConfig& cfg, const std::string& spec, std::ostream& out) {
  const SymmetricPair pair = make_pair(parse_pair_id(spec));
  if (cfg.json()) {
    emit(out, to_json(pair));
    return kOk;
  }
  const Json j = to_json(pair);
  out << to_string(pair.id) << ": g = " << j["g"].get<std::string>() << ", k = " << pair.k.label() << '\n';
  out << "dim g " << j["dims"]["g"].get<std::string>() << ", dim k " << j["dims"]["k"].get<std::string>()
      << ", dim p " << to_string(pair.dim_p) << '\n';
  if (pair.isotropy_highest) {
    out << "isotropy highest weight " << to_string(*pair.isotropy_highest) << '\n';
    out << "isotropy weights " << to_string(isotropy_weights(pair)) << '\n';
  }
  print_lines(out, "notes", pair.notes);
  return kOk;
}

int cmd_pair_restrict(const RunConfig& cfg, const std::string& spec, const std::string& ambient, std::ostream& out) {
  const SymmetricPair pair = make_pair(parse_pair_id(spec));
  const Weight w(Basis::Ambient, parse_rational_list(ambient));
  const Weight r = restrict(pair, w);
  if (cfg.json())
    emit(out, Json{{"pair", to_string(pair.id)}, {"weight", to_json(w)}, {"restricted", to_json(r)}});
  else
    out << to_string(r) << '\n';
  return kOk;
}

int cmd_check(const RunConfig& cfg, const std::string& spec, bool audit, std::ostream& out) {
  const SymmetricPair pair = make_pair(parse_pair_id(spec));
  const ObstructionReport r = check_extension(pair, cfg.limits, audit);
  if (cfg.json()) {
    emit(out, to_json(r));
  } else {
    out << to_string(r.pair) << ": " << to_string(r.verdict) << " (" << to_string(r.method) << ")\n";
    out << "dim p " << to_string(r.dim_p) << '\n';
    for (const auto& c : r.candidates) {
      out << "candidate " << to_string(c.weight);
      if (c.direction) out << " + c" << to_string(*c.direction);
      out << " [" << c.parameter_range << "]";
      if (c.evidence)
        out << ": " << to_string(c.evidence->kind) << ' ' << to_string(c.evidence->value) << " vs dim p "
            << to_string(c.evidence->dim_p) << (c.eliminated() ? ", eliminated" : ", not eliminated");
      out << '\n';
      if (!c.detail.empty()) out << "  " << c.detail << '\n';
    }
    print_lines(out, "constraints", r.constraints_log);
    print_lines(out, "notes", r.notes);
    if (r.search_bound > 0) out << "audit: kernel search bound " << r.search_bound << '\n';
  }
  return r.verdict == Verdict::NoExtension ? kOk : kInconclusive;
}

WeightMultiset parse_weight_list(const std::string& text) {
  WeightMultiset out;
  std::size_t start = 0;
  std::optional<std::size_t> size;
  while (true) {
    const auto semi = text.find(';', start);
    const Weight w(Basis::Ambient, parse_rational_list(text.substr(start, semi == std::string::npos ? semi : semi - start)));
    if (size && *size != w.size()) throw Error(ErrorKind::BasisMismatch, "weights of different lengths");
    size = w.size();
    out.add(w);
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

int cmd_chern(const RunConfig& cfg, const std::optional<std::string>& weights, const std::optional<std::string>& against,
              const std::optional<int>& kernel, std::ostream& out) {
  if (kernel) {
    const auto k = flat_kernel(*kernel);
    if (cfg.json()) {
      emit(out, to_json(k));
      return kOk;
    }
    out << "kernel generators:";
    for (const auto& g : k.kernel_generators) out << ' ' << g.name << " (degree " << g.degree << ')';
    out << '\n';
    print_lines(out, "notes", k.notes);
    return kOk;
  }
  if (!weights) throw Error(ErrorKind::InvalidArgument, "give --weights or --flat-kernel");
  const WeightMultiset ws = parse_weight_list(*weights);
  const ChernPolynomial c = chern_polynomial(ws);
  std::optional<bool> equal;
  if (against) equal = reps_equal_by_chern(ws, parse_weight_list(*against));
  const bool closed = complexification_vanishing(ws);
  if (cfg.json()) {
    Json j{{"variables", c.variables}, {"pieces", to_json(c)}, {"negation_closed", closed}};
    if (equal) j["equal"] = *equal;
    emit(out, j);
    return kOk;
  }
  for (std::size_t d = 0; d < c.pieces.size(); ++d) out << "c_" << d << " = " << to_string(c.pieces[d]) << '\n';
  out << "negation closed: " << (closed ? "yes" : "no") << '\n';
  if (equal) out << "equal: " << (*equal ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_classify(const RunConfig& cfg, const std::vector<std::string>& names, std::ostream& out) {
  std::vector<GroupDescriptor> groups;
  for (const auto& n : names) groups.push_back(parse_group(n));
  if (groups.size() == 1) {
    const TypeLookup t = classify_group(groups.front());
    if (cfg.json()) {
      Json j{{"group", to_string(groups.front())}, {"type", to_string(t.type)}};
      if (!t.notes.empty()) j["notes"] = t.notes;
      emit(out, j);
    } else {
      out << to_string(groups.front()) << ": " << to_string(t.type) << '\n';
      print_lines(out, "notes", t.notes);
    }
    return kOk;
  }
  const GroupType t = product_type(groups);
  if (cfg.json()) {
    Json gs = Json::array();
    for (const auto& g : groups) gs.push_back(to_string(g));
    emit(out, Json{{"group", std::move(gs)}, {"type", to_string(t)}});
  } else {
    std::string label;
    for (const auto& g : groups) label += (label.empty() ? "" : " x ") + to_string(g);
    out << label << ": " << to_string(t) << '\n';
  }
  return kOk;
}

int cmd_milnor_wood(const RunConfig& cfg, int k, const std::string& euler_tm, const std::optional<std::string>& euler_e,
                    const std::optional<double>& volume, std::ostream& out) {
  auto integer = [](const std::string& s) {
    const Rational r = parse_rational(s);
    if (!is_integer(r)) throw Error(ErrorKind::InvalidArgument, "'" + s + "' is not an integer");
    return Integer(r.get_num());
  };
  const MilnorWoodQuery q{k, integer(euler_tm)};
  const Rational bound = milnor_wood_bound(q);
  std::optional<bool> obstructs;
  if (euler_e) obstructs = obstructs_flat(q, integer(*euler_e));
  std::optional<double> ratio;
  if (volume || k == 1) ratio = smillie_ratio(k, volume);
  if (cfg.json()) {
    Json j{{"k", k}, {"euler_tm", to_string(q.euler_tm)}, {"bound", to_string(bound)}};
    if (obstructs) j["obstructs_flat"] = *obstructs;
    if (ratio) j["smillie_ratio"] = *ratio;
    emit(out, j);
    return kOk;
  }
  out << "bound |eu(TM)| / 2^k = " << to_string(bound) << '\n';
  if (obstructs) out << "flat structure " << (*obstructs ? "obstructed" : "not obstructed") << '\n';
  if (ratio) {
    std::ostringstream r;
    r << std::setprecision(12) << *ratio;
    out << "smillie ratio " << r.str() << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::optional<std::string>& pairs, bool classify_sample, bool table,
               std::ostream& out) {
  std::vector<VerifyItem> items;
  auto append = [&](std::vector<VerifyItem> part) { items.insert(items.end(), part.begin(), part.end()); };
  if (!pairs && !classify_sample && !table) {
    items = verify_all(cfg.limits);
  } else {
    if (table) append(verify_table());
    if (pairs) append(verify_pairs(parse_pair_selection(*pairs), cfg.limits));
    if (classify_sample) append(verify_classify_sample());
  }
  std::size_t failed = 0;
  for (const auto& i : items) failed += !i.pass;
  if (cfg.json()) {
    Json list = Json::array();
    for (const auto& i : items)
      list.push_back({{"group", i.group}, {"item", i.item}, {"pass", i.pass}, {"detail", i.detail}});
    emit(out, Json{{"items", std::move(list)}, {"passed", items.size() - failed}, {"failed", failed}});
  } else {
    for (const auto& i : items)
      out << (i.pass ? "PASS " : "FAIL ") << i.group << ' ' << i.item << ": " << i.detail << '\n';
    out << items.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed ? kVerificationFailed : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Representation-theoretic obstructions for isotropy representations", "isob"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--orbit-cap", cfg.limits.orbit_cap, "Largest Weyl orbit to enumerate")
      ->envname("ISOB_ORBIT_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--freudenthal-cap", cfg.limits.freudenthal_cap, "Largest representation for Freudenthal")
      ->envname("ISOB_FREUDENTHAL_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--kernel-bound", cfg.limits.kernel_search_bound, "Coefficient bound for the candidate audit")
      ->envname("ISOB_KERNEL_BOUND")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->envname("ISOB_OUTPUT_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--json", cfg.json_flag, "Same as --format json");

  std::function<int()> action;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  TypeArgs type_args;
  WeightArgs weight_args;

  auto* describe = sub("describe", "Root system data for a simple type");
  add_type_args(describe, type_args);
  describe->callback([&] { action = [&] { return cmd_describe(cfg, type_args, out); }; });

  auto* dim = sub("dim", "Dimension of an irreducible representation");
  add_type_args(dim, type_args);
  add_weight_args(dim, weight_args);
  dim->callback([&] { action = [&] { return cmd_dim(cfg, type_args, weight_args, out); }; });

  bool count_only = false;
  auto* orbit = sub("orbit", "Weyl group orbit of a weight");
  add_type_args(orbit, type_args);
  add_weight_args(orbit, weight_args);
  orbit->add_flag("--count-only", count_only, "Print the orbit size only");
  orbit->callback([&] { action = [&] { return cmd_orbit(cfg, type_args, weight_args, count_only, out); }; });

  auto* freud = sub("freudenthal", "Weight multiplicities of an irreducible representation");
  add_type_args(freud, type_args);
  add_weight_args(freud, weight_args);
  freud->callback([&] { action = [&] { return cmd_freudenthal(cfg, type_args, weight_args, out); }; });

  std::string pair_spec, restrict_weight;
  auto* pair = sub("pair", "Symmetric pairs");
  pair->require_subcommand(1);
  auto* pair_describe = pair->add_subcommand("describe", "Dimensions and isotropy weights of a pair");
  pair_describe->fallthrough();
  pair_describe->add_option("pair", pair_spec, "sl-so:N, sl-sp:N, so-so:N, e6-f4 or complex:T")->required();
  pair_describe->callback([&] { action = [&] { return cmd_pair_describe(cfg, pair_spec, out); }; });
  auto* pair_restrict = pair->add_subcommand("restrict", "Restrict a weight of g to k");
  pair_restrict->fallthrough();
  pair_restrict->add_option("pair", pair_spec, "Pair specification")->required();
  pair_restrict->add_option("--ambient", restrict_weight, "Ambient coordinates of the g weight")->required();
  pair_restrict->callback([&] { action = [&] { return cmd_pair_restrict(cfg, pair_spec, restrict_weight, out); }; });

  bool audit = false;
  auto* check = sub("check", "Decide whether the isotropy representation extends");
  check->add_option("pair", pair_spec, "sl-so:N, sl-sp:N, so-so:N, e6-f4 or complex:T")->required();
  check->add_flag("--audit", audit, "Also run the brute-force candidate audit");
  check->callback([&] { action = [&] { return cmd_check(cfg, pair_spec, audit, out); }; });

  std::optional<std::string> chern_weights, chern_against;
  std::optional<int> flat;
  auto* chern = sub("chern", "Chern polynomial of a weight multiset");
  auto* w_opt = chern->add_option("--weights", chern_weights, "Weights separated by ';', coordinates by ','");
  chern->add_option("--against", chern_against, "Second multiset to compare with")->needs(w_opt);
  chern->add_option("--flat-kernel", flat, "Describe the flat kernel for bundle rank N")->excludes(w_opt);
  chern->callback([&] { action = [&] { return cmd_chern(cfg, chern_weights, chern_against, flat, out); }; });

  std::vector<std::string> group_names;
  auto* classify = sub("classify", "Type of a simple group, or of a product");
  classify->add_option("groups", group_names, "Group names such as SU(3,2) or E6(-26)")->required();
  classify->callback([&] { action = [&] { return cmd_classify(cfg, group_names, out); }; });

  int mw_k = 1;
  std::string euler_tm;
  std::optional<std::string> euler_e;
  std::optional<double> volume;
  auto* mw = sub("milnor-wood", "Milnor-Wood bound and the Smillie ratio");
  mw->add_option("--k", mw_k, "Number of surface factors")->default_val(1);
  mw->add_option("--euler-tm", euler_tm, "Euler number of the tangent bundle")->required();
  mw->add_option("--euler-e", euler_e, "Euler number of the bundle to test");
  mw->add_option("--volume", volume, "Volume of the regular ideal simplex (needed for k >= 2)");
  mw->callback([&] { action = [&] { return cmd_milnor_wood(cfg, mw_k, euler_tm, euler_e, volume, out); }; });

  std::optional<std::string> verify_pairs_sel;
  bool classify_sample = false, table = false;
  auto* verify = sub("verify-paper", "Run the full verification batch");
  verify->add_option("--pairs", verify_pairs_sel, "Pair selection such as sl-so:2..9");
  verify->add_flag("--classify-sample", classify_sample, "Classification sample only");
  verify->add_flag("--table", table, "Dimension table only");
  verify->callback([&] { action = [&] { return cmd_verify(cfg, verify_pairs_sel, classify_sample, table, out); }; });

  // CLI11 drops env values that fail validation; treat them as usage errors.
  const std::vector<std::pair<const char*, CLI::Validator>> env_checks{
      {"ISOB_ORBIT_CAP", CLI::PositiveNumber},
      {"ISOB_FREUDENTHAL_CAP", CLI::PositiveNumber},
      {"ISOB_KERNEL_BOUND", CLI::PositiveNumber},
      {"ISOB_OUTPUT_FORMAT", CLI::IsMember({"text", "json"})},
  };
  for (auto [name, check] : env_checks)
    if (const char* value = std::getenv(name); value && *value) {
      std::string v = value;
      if (const std::string why = check(v); !why.empty()) {
        err << "error: " << name << "=" << value << ": " << why << '\n';
        return kUsage;
      }
    }

  std::vector<const char*> argv{"isob"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    if (cfg.json())
      emit(out, Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace isob::cli
