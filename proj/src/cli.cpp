#include "hsym/cli.hpp"

#include "hsym/errors.hpp"
#include "hsym/format.hpp"
#include "hsym/invariants.hpp"
#include "hsym/parabolic.hpp"
#include "hsym/rep_dimension.hpp"
#include "hsym/report_json.hpp"
#include "hsym/root_system.hpp"
#include "hsym/weight_search.hpp"

#include <CLI11.hpp>

#include <array>
#include <optional>
#include <ostream>
#include <sstream>

namespace hsym::cli {

namespace {

struct Globals {
  std::string format = "table";
  bool decimal = false;

  bool json() const { return format == "json"; }
};

std::string subscript(int n) {
  static const std::array<const char*, 10> digits = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

// "ϖ₆", "2ϖ₁ + ϖ₃", "0"
std::string weight_label(const Weight& w) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    std::string coeff = w[i] == 1 ? "" : w[i] == -1 ? "-" : std::to_string(w[i]);
    terms.push_back(coeff + "ϖ" + subscript(static_cast<int>(i) + 1));
  }
  return terms.empty() ? "0" : join(terms, " + ");
}

// "8/3 a₁ + 2 a₂ + ..."
std::string linear_form(const std::vector<Rational>& coeffs) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    terms.push_back(to_string(coeffs[i]) + " a" + subscript(static_cast<int>(i) + 1));
  }
  return join(terms, " + ");
}

std::string rational_list(const std::vector<Rational>& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(to_string(v));
  return "(" + join(parts, ", ") + ")";
}

void key_value(std::ostream& out, std::string_view key, const std::string& value) {
  out << key << " = " << value << '\n';
}

void rational_value(std::ostream& out, const Globals& g, std::string_view key, const Rational& q) {
  key_value(out, key, to_string(q));
  if (g.decimal) key_value(out, std::string(key) + "_approx", to_decimal(q) + " (approximate, non-authoritative)");
}

// "<TYPE>" or "<TYPE>:x<k>..." on the command line.
struct SpaceArg {
  SimpleType type;
  std::vector<int> crossed;
};

SpaceArg parse_space(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    Parabolic p = Parabolic::parse(text);
    return {p.ambient, p.sigma};
  }
  return {SimpleType::parse(text), {}};
}

std::vector<int> crossed_nodes(const SpaceArg& space, const std::vector<int>& flag, std::string_view flag_name) {
  if (!space.crossed.empty() && !flag.empty()) {
    Parabolic from_flag(space.type, flag);
    if (from_flag.sigma != space.crossed) {
      throw InputError("crossed nodes given by both the space notation and " + std::string(flag_name) +
                       " disagree");
    }
  }
  const auto& nodes = flag.empty() ? space.crossed : flag;
  if (nodes.empty()) throw InputError("missing " + std::string(flag_name) + " (or '<TYPE>:x<k>' notation)");
  return nodes;
}

int single_node(const SpaceArg& space, const std::vector<int>& flag) {
  auto nodes = crossed_nodes(space, flag, "--node");
  Parabolic p(space.type, nodes);
  if (!p.is_maximal()) throw InputError("this command needs exactly one crossed node, got " + p.notation());
  return p.sigma.front();
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// --- roots ---------------------------------------------------------------

void cmd_roots(const Globals& g, const std::string& space_text, std::ostream& out) {
  const RootSystem rs(parse_space(space_text).type);
  const Weight top = highest_root_fw(rs);
  if (g.json()) {
    Json roots = Json::array();
    for (const Root& r : rs.positive_roots()) {
      roots.push_back(Json{{"coeffs", r.coeffs},
                           {"height", r.height()},
                           {"half_length_sq", r.half_length_sq},
                           {"weight", rs.to_weight(r).fw_coords}});
    }
    Json inverse = Json::array();
    for (const auto& row : rs.cartan_inverse()) {
      Json jr = Json::array();
      for (const auto& q : row) jr.push_back(to_string(q));
      inverse.push_back(std::move(jr));
    }
    emit_json(out, Json{{"type", rs.type().name()},
                        {"rank", rs.rank()},
                        {"cartan", rs.cartan()},
                        {"symmetrizer", rs.symmetrizer()},
                        {"cartan_inverse", std::move(inverse)},
                        {"positive_root_count", rs.positive_roots().size()},
                        {"highest_root", Json{{"coeffs", rs.highest_root().coeffs}, {"weight", top.fw_coords}}},
                        {"rho", rs.rho().fw_coords},
                        {"positive_roots", std::move(roots)}});
    return;
  }
  key_value(out, "type", rs.type().name());
  key_value(out, "rank", std::to_string(rs.rank()));
  key_value(out, "positive_roots", std::to_string(rs.positive_roots().size()));
  key_value(out, "highest_root", to_string(Weight(rs.highest_root().coeffs)) + " = " + weight_label(top));
  key_value(out, "rho", to_string(rs.rho()));
  key_value(out, "symmetrizer", to_string(Weight(rs.symmetrizer())));
  out << "\ncartan matrix\n";
  for (const auto& row : rs.cartan()) out << "  " << to_string(Weight(row)) << '\n';
  out << "\ninverse cartan matrix (row k: xi_k of each fundamental weight)\n";
  for (const auto& row : rs.cartan_inverse()) out << "  " << rational_list(row) << '\n';
  out << '\n';
  TextTable table({"#", "height", "coeffs", "length", "fw coords"});
  int idx = 0;
  for (const Root& r : rs.positive_roots()) {
    table.add_row({std::to_string(++idx), std::to_string(r.height()), to_string(Weight(r.coeffs)),
                   r.half_length_sq == 1 ? "short" : "long", to_string(rs.to_weight(r))});
  }
  table.render(out);
}

// --- levi ----------------------------------------------------------------

void cmd_levi(const Globals& g, const std::string& space_text, const std::vector<int>& sigma, std::ostream& out) {
  const SpaceArg space = parse_space(space_text);
  const Parabolic p(space.type, crossed_nodes(space, sigma, "--sigma"));
  const RootSystem rs(space.type);
  const LeviData ld = levi(rs, p);
  if (g.json()) {
    Json comps = Json::array();
    for (const auto& c : ld.components) comps.push_back(Json{{"type", c.type.name()}, {"nodes", c.nodes}});
    Json roots = Json::array();
    for (const auto& r : ld.levi_positive_roots) roots.push_back(r.coeffs);
    emit_json(out, Json{{"parabolic", p.notation()},
                        {"sigma", p.sigma},
                        {"components", std::move(comps)},
                        {"levi_positive_root_count", ld.levi_positive_roots.size()},
                        {"levi_positive_roots", std::move(roots)},
                        {"dim_x", ld.dim_x}});
    return;
  }
  key_value(out, "parabolic", p.notation());
  std::vector<std::string> comps;
  for (const auto& c : ld.components) comps.push_back(c.type.name() + " on nodes " + to_string(Weight(c.nodes)));
  key_value(out, "levi_semisimple", comps.empty() ? "trivial" : join(comps, ", "));
  key_value(out, "levi_positive_roots", std::to_string(ld.levi_positive_roots.size()));
  key_value(out, "dim_x", std::to_string(ld.dim_x));
}

// --- dim -----------------------------------------------------------------

void cmd_dim(const Globals& g, const std::string& space_text, const std::string& weight_text,
             const std::vector<int>& levi_nodes, std::ostream& out) {
  const SpaceArg space = parse_space(space_text);
  const RootSystem rs(space.type);
  const Weight lam = parse_weight(weight_text, rs.rank());
  std::optional<Parabolic> p;
  if (!levi_nodes.empty()) p.emplace(space.type, levi_nodes);
  if (!p && !space.crossed.empty()) p.emplace(space.type, space.crossed);
  const DimResult result = p ? weyl_dim_levi(rs, levi(rs, *p), lam) : weyl_dim_g(rs, lam);
  const std::string context = p ? "levi" : "full-group";
  if (g.json()) {
    Json j{{"type", rs.type().name()}, {"weight", lam.fw_coords}, {"context", context}};
    if (p) j["parabolic"] = p->notation();
    j["dim"] = integer_to_json(result.value);
    emit_json(out, j);
    return;
  }
  key_value(out, "type", rs.type().name());
  key_value(out, "weight", to_string(lam));
  key_value(out, "context", p ? "levi of " + p->notation() : context);
  key_value(out, "dim", to_string(result.value));
}

// --- h0 ------------------------------------------------------------------

void cmd_h0(const Globals& g, const std::string& space_text, const std::vector<int>& nodes,
            const std::string& weight_text, std::ostream& out) {
  const SpaceArg space = parse_space(space_text);
  const RootSystem rs(space.type);
  const Parabolic p(space.type, crossed_nodes(space, nodes, "--node"));
  const Weight lam = parse_weight(weight_text, rs.rank());
  const Integer h0 = h0_bbw(rs, p, lam);
  const Integer rank = weyl_dim_levi(rs, levi(rs, p), lam).value;
  if (g.json()) {
    emit_json(out, Json{{"parabolic", p.notation()},
                        {"weight", lam.fw_coords},
                        {"dominant_for_g", lam.is_dominant()},
                        {"rank", integer_to_json(rank)},
                        {"h0", integer_to_json(h0)}});
    return;
  }
  key_value(out, "parabolic", p.notation());
  key_value(out, "weight", to_string(lam));
  key_value(out, "dominant_for_g", lam.is_dominant() ? "true" : "false");
  key_value(out, "rank", to_string(rank));
  key_value(out, "h0", to_string(h0));
}

// --- j -------------------------------------------------------------------

void print_report(const Globals& g, const BundleReport& r, std::ostream& out) {
  key_value(out, "space", r.space.klein_label);
  key_value(out, "family", to_string(r.space.family));
  key_value(out, "weight", to_string(r.lam) + " = " + weight_label(r.lam));
  key_value(out, "rank", to_string(r.rank));
  key_value(out, "h0", to_string(r.h0));
  rational_value(out, g, "xi_k", r.xi_k_lam);
  rational_value(out, g, "xi_k_ad", r.xi_k_ad);
  rational_value(out, g, "c1_ratio", r.c1_ratio);
  if (r.j_value) {
    rational_value(out, g, "j", *r.j_value);
  } else {
    key_value(out, "j", "undefined");
  }
  key_value(out, "lambda1_reference", to_string(lambda1_reference()));
  key_value(out, "sharp", r.sharp() ? "true" : "false");
}

void cmd_j(const Globals& g, const std::string& space_text, const std::vector<int>& nodes,
           const std::string& weight_text, std::ostream& out) {
  const SpaceArg space = parse_space(space_text);
  const int k = single_node(space, nodes);
  const HermitianGeometry geometry(hermitian_space(space.type, k));
  const BundleReport report = geometry.j_hom(parse_weight(weight_text, space.type.rank));
  if (g.json()) {
    emit_json(out, to_json(report));
  } else {
    print_report(g, report, out);
  }
}

// --- search --------------------------------------------------------------

void print_outcome(const Globals& g, const SearchOutcome& s, std::ostream& out) {
  key_value(out, "space", s.space.klein_label);
  key_value(out, "family", to_string(s.space.family));
  rational_value(out, g, "best_j", s.best_j);
  key_value(out, "bound_kind", "best homogeneous-bundle bound");
  std::vector<std::string> mins;
  for (const auto& w : s.minimizers) mins.push_back(weight_label(w));
  key_value(out, "minimizers", join(mins, ", "));
  key_value(out, "incumbent_seed", weight_label(s.incumbent_seed));
  key_value(out, "pruning_bound_used", to_string(s.pruning_bound_used));
  key_value(out, "pruning_form", linear_form(s.pruning_coefficients));
  key_value(out, "candidates_examined", std::to_string(s.candidates_examined));
  key_value(out, "sharp", s.best_j == lambda1_reference() ? "true" : "false");
  out << '\n';
  std::vector<std::string> headers = {"weight", "lower bound", "J"};
  if (g.decimal) headers.push_back("J approx");
  TextTable table(headers);
  for (const auto& c : s.examined) {
    std::vector<std::string> row = {weight_label(c.lam), to_string(c.bound), to_string(c.j)};
    if (g.decimal) row.push_back(to_decimal(c.j));
    table.add_row(std::move(row));
  }
  table.render(out);
}

void cmd_search(const Globals& g, const std::string& space_text, const std::vector<int>& nodes, unsigned threads,
                std::ostream& out) {
  const SpaceArg space = parse_space(space_text);
  const int k = single_node(space, nodes);
  SearchOptions options;
  options.threads = threads;
  const SearchOutcome outcome = minimize_j(hermitian_space(space.type, k), options);
  if (g.json()) {
    emit_json(out, to_json(outcome));
  } else {
    print_outcome(g, outcome, out);
  }
}

// --- hermitian -----------------------------------------------------------

Json table_json(const std::vector<HermitianSpace>& table) {
  Json rows = Json::array();
  for (const auto& space : table) {
    const HermitianGeometry geo(space);
    Json j = to_json(space);
    j["dim_x"] = geo.levi_data().dim_x;
    j["lambda_ad"] = geo.lambda_ad().fw_coords;
    j["xi_k_ad"] = to_string(geo.xi_ad());
    rows.push_back(std::move(j));
  }
  return rows;
}

void print_table(const std::vector<HermitianSpace>& table, std::ostream& out) {
  TextTable t({"family", "space", "type", "node", "dim X", "λ_ad", "ξ_k(λ_ad)"});
  for (const auto& space : table) {
    const HermitianGeometry geo(space);
    t.add_row({to_string(space.family), space.klein_label, space.ambient.name(), std::to_string(space.node),
               std::to_string(geo.levi_data().dim_x), weight_label(geo.lambda_ad()), to_string(geo.xi_ad())});
  }
  t.render(out);
}

void cmd_hermitian(const Globals& g, int max_rank, std::ostream& out) {
  const auto table = hermitian_table(max_rank);
  if (g.json()) {
    emit_json(out, table_json(table));
  } else {
    print_table(table, out);
  }
}

// --- reproduce-paper -----------------------------------------------------

struct ClassicalCase {
  HermitianSpace space;
  Weight lam;
};

std::vector<ClassicalCase> classical_cases() {
  std::vector<ClassicalCase> cases;
  auto add = [&](char letter, int rank, int node, int weight_node) {
    SimpleType t{letter, rank};
    cases.push_back({hermitian_space(t, node), Weight::fundamental(rank, weight_node)});
  };
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= n - 1; ++k) add('A', n - 1, k, 1);
  for (int n = 2; n <= 6; ++n) add('B', n, 1, n);
  for (int n = 3; n <= 6; ++n) add('D', n, 1, n);
  for (int n = 2; n <= 6; ++n) add('C', n, n, 1);
  for (int n = 4; n <= 7; ++n) add('D', n, n, 1);
  return cases;
}

struct ExceptionalCase {
  HermitianSpace space;
  std::vector<Weight> named;  // weights whose J is reported individually
};

void cmd_reproduce(const Globals& g, int max_rank, std::ostream& out) {
  const auto table = hermitian_table(max_rank);
  const std::vector<ExceptionalCase> exceptional = {
      {hermitian_space({'E', 6}, 1), {Weight::fundamental(6, 6), Weight::fundamental(6, 2)}},
      {hermitian_space({'E', 7}, 7), {Weight::fundamental(7, 1)}},
  };

  if (g.json()) {
    Json classical = Json::array();
    for (const auto& c : classical_cases()) {
      const HermitianGeometry geo(c.space);
      Json row = to_json(geo.j_hom(c.lam));
      row["search_best_j"] = to_string(minimize_j(geo).best_j);
      classical.push_back(std::move(row));
    }
    Json exc = Json::array();
    for (const auto& e : exceptional) {
      const HermitianGeometry geo(e.space);
      Json reports = Json::array();
      for (const auto& w : e.named) reports.push_back(to_json(geo.j_hom(w)));
      exc.push_back(Json{{"space", to_json(e.space)}, {"reports", std::move(reports)}, {"search", to_json(minimize_j(geo))}});
    }
    emit_json(out, Json{{"hermitian_table", Json{{"max_rank", max_rank}, {"entries", table_json(table)}}},
                        {"classical_sharp_bounds", std::move(classical)},
                        {"exceptional_bounds", std::move(exc)},
                        {"lambda1_reference", to_string(lambda1_reference())}});
    return;
  }

  out << "== Irreducible Hermitian symmetric spaces of compact type (classical rank <= " << max_rank << ") ==\n\n";
  print_table(table, out);

  out << "\n== Classical families: J(E_λ, -K_X) = 2 = λ₁(g_KE) ==\n\n";
  std::vector<std::string> headers = {"family", "space", "λ", "rank", "h0", "ξ_k(λ)", "ξ_k(λ_ad)", "J", "min J", "sharp"};
  if (g.decimal) headers.push_back("J approx");
  TextTable classical(headers);
  for (const auto& c : classical_cases()) {
    const HermitianGeometry geo(c.space);
    const BundleReport r = geo.j_hom(c.lam);
    const SearchOutcome s = minimize_j(geo);
    std::vector<std::string> row = {to_string(c.space.family), c.space.klein_label, weight_label(c.lam),
                                    to_string(r.rank), to_string(r.h0), to_string(r.xi_k_lam),
                                    to_string(r.xi_k_ad), to_string(*r.j_value), to_string(s.best_j),
                                    r.sharp() ? "yes" : "no"};
    if (g.decimal) row.push_back(to_decimal(*r.j_value));
    classical.add_row(std::move(row));
  }
  classical.render(out);

  out << "\n== Exceptional spaces: best homogeneous-bundle bounds ==\n";
  for (const auto& e : exceptional) {
    const HermitianGeometry geo(e.space);
    const int k = e.space.node;
    out << '\n' << to_string(e.space.family) << "  " << e.space.klein_label << "  (λ_ad = " << weight_label(geo.lambda_ad())
        << ")\n";
    for (const auto& w : e.named) {
      const BundleReport r = geo.j_hom(w);
      out << "  J(E_" << weight_label(w) << ", -K_X) = " << to_string(*r.j_value) << "   (rank " << to_string(r.rank)
          << ", h0 " << to_string(r.h0) << ", ξ" << subscript(k) << " = " << to_string(r.xi_k_lam) << ")";
      if (g.decimal) out << "   ≈ " << to_decimal(*r.j_value);
      out << '\n';
    }
    out << "  lower bound 2ξ" << subscript(k) << "(λ)/ξ" << subscript(k) << "(λ_ad) = "
        << linear_form(geo.pruning_coefficients()) << '\n';
    const SearchOutcome s = minimize_j(geo);
    std::vector<std::string> below;
    for (const auto& c : s.examined) below.push_back(weight_label(c.lam));
    out << "  weights with lower bound < " << to_string(s.pruning_bound_used) << ": " << join(below, ", ") << '\n';
    std::vector<std::string> mins;
    for (const auto& w : s.minimizers) mins.push_back(weight_label(w));
    out << "  minimum J = " << to_string(s.best_j) << " at " << join(mins, ", ") << "  (" << s.candidates_examined
        << (s.candidates_examined == 1 ? " candidate" : " candidates") << " examined; λ₁(g_KE) = " << to_string(lambda1_reference()) << ")\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of homogeneous bundles on compact Hermitian symmetric spaces", "hsym"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--decimal", g.decimal, "Add approximate decimal values next to exact rationals");

  std::string space;
  std::string weight;
  std::vector<int> nodes;
  std::vector<int> sigma;
  std::vector<int> levi_nodes;
  int max_rank = 8;
  unsigned threads = 1;

  auto* roots = app.add_subcommand("roots", "Cartan data and positive roots");
  roots->add_option("space", space, "Lie type, e.g. E6")->required();

  auto* levi_cmd = app.add_subcommand("levi", "Levi decomposition of a parabolic");
  levi_cmd->add_option("space", space, "Lie type, e.g. E6 or E6:x1")->required();
  levi_cmd->add_option("--sigma", sigma, "Crossed nodes")->delimiter(',');

  auto* dim = app.add_subcommand("dim", "Dimension of an irreducible representation");
  dim->add_option("space", space, "Lie type")->required();
  dim->add_option("--weight", weight, "Fundamental-weight coordinates a1,...,al")->required();
  dim->add_option("--levi-node", levi_nodes, "Crossed node(s); gives the Levi representation V_lambda")
      ->delimiter(',');

  auto* h0 = app.add_subcommand("h0", "Global sections of E_lambda (Bott-Borel-Weil)");
  h0->add_option("space", space, "Lie type")->required();
  h0->add_option("--node", nodes, "Crossed node(s)")->delimiter(',');
  h0->add_option("--weight", weight, "Fundamental-weight coordinates")->required();

  auto* j = app.add_subcommand("j", "J(E_lambda, -K_X) on a Hermitian symmetric space");
  j->add_option("space", space, "Lie type")->required();
  j->add_option("--node", nodes, "Crossed node k")->delimiter(',');
  j->add_option("--weight", weight, "Fundamental-weight coordinates")->required();

  auto* search = app.add_subcommand("search", "Minimize J over nontrivial dominant weights");
  search->add_option("space", space, "Lie type")->required();
  search->add_option("--node", nodes, "Crossed node k")->delimiter(',');
  search->add_option("--threads", threads, "Evaluation threads")->check(CLI::Range(1u, 64u));

  auto* hermitian = app.add_subcommand("hermitian", "List Hermitian symmetric spaces");
  hermitian->add_option("--max-rank", max_rank, "Rank bound for the classical families")->check(CLI::Range(1, 64));

  auto* reproduce = app.add_subcommand("reproduce-paper", "Regenerate the classical and exceptional bound tables");
  reproduce->add_option("--max-rank", max_rank, "Rank bound for the classification table")->check(CLI::Range(1, 64));

  std::vector<const char*> argv{"hsym"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*roots) {
      cmd_roots(g, space, out);
    } else if (*levi_cmd) {
      cmd_levi(g, space, sigma, out);
    } else if (*dim) {
      cmd_dim(g, space, weight, levi_nodes, out);
    } else if (*h0) {
      cmd_h0(g, space, nodes, weight, out);
    } else if (*j) {
      cmd_j(g, space, nodes, weight, out);
    } else if (*search) {
      cmd_search(g, space, nodes, threads, out);
    } else if (*hermitian) {
      cmd_hermitian(g, max_rank, out);
    } else if (*reproduce) {
      cmd_reproduce(g, max_rank, out);
    }
  } catch (const InputError& e) {
    err << "hsym: invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "hsym: " << e.what() << '\n';
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "hsym: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace hsym::cli
