#include "xyk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "xyk/parse.hpp"
#include "xyk/verify.hpp"

namespace xyk::cli {
namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Session {
  std::string field_spec = "rat";
  std::string kind_str_ = "generic";
  int m = 0;  // 0 = same as n
  int n = 2;
  std::string order_spec = "grob";
  double budget_ms = 120000;
  std::uint64_t max_pairs = 1'000'000;
  std::size_t max_terms = 0;
  std::string format = "text";
  bool no_timing = false;

  MatrixKind kind() const { return kind_from_str(kind_str_); }
  int rows() const { return m > 0 ? m : n; }

  Budget budget() const {
    Budget b;
    b.max_pair_reductions = max_pairs;
    b.max_poly_terms = max_terms;
    return b.with_deadline_ms(budget_ms);
  }

  VerifyOptions verify_options() const {
    VerifyOptions opt;
    opt.budget.max_pair_reductions = max_pairs;
    opt.budget.max_poly_terms = max_terms;
    opt.wall_ms = budget_ms;
    return opt;
  }
};

void add_session_flags(CLI::App* cmd, Session& s) {
  cmd->add_option("--field", s.field_spec, "coefficient field: rat or gf:<p>");
  cmd->add_option("--kind", s.kind_str_, "matrix kind: generic, symmetric, skew");
  cmd->add_option("--m", s.m, "row count (defaults to n)");
  cmd->add_option("--n", s.n, "column count");
  cmd->add_option("--order", s.order_spec,
                  "order preset (grob, regseq-generic, regseq-skew, decl) or 'order lex: ...'");
  cmd->add_option("--budget-ms", s.budget_ms, "wall-clock budget per computation (ms)");
  cmd->add_option("--max-pairs", s.max_pairs, "pair-reduction cap for Buchberger runs");
  cmd->add_option("--max-terms", s.max_terms, "cap on intermediate polynomial length");
  cmd->add_option("--format", s.format, "output format: text or json");
  cmd->add_flag("--no-timing", s.no_timing, "omit timing fields from reports");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
MonomialOrder resolve_order(const Session& s, const RingPtr& ring) {
  if (s.order_spec == "grob") return MonomialOrder::grob(ring);
  if (s.order_spec == "regseq-generic" || s.order_spec == "regseq-skew" ||
      s.order_spec == "regseq") {
    bool skew_ring = ring->kind() == MatrixKind::Skew;
    if (s.order_spec == "regseq-generic" && skew_ring)
      throw std::invalid_argument("preset regseq-generic needs a generic or symmetric matrix");
    if (s.order_spec == "regseq-skew" && !skew_ring)
      throw std::invalid_argument("preset regseq-skew needs a skew-symmetric matrix");
    return MonomialOrder::regseq(ring);
  }
  if (s.order_spec == "decl" || s.order_spec == "declaration")
    return MonomialOrder::declaration(ring);
  if (s.order_spec.rfind("file:", 0) == 0) return parse_order(ring, slurp(s.order_spec.substr(5)));
  return parse_order(ring, s.order_spec);
}

/// Expands the convenience tokens det, minor[i] and g[i] into parenthesized
/// polynomial text before the grammar parser runs.
template <class F>
std::string expand_macros(const std::string& text, const SymbolicMatrix<F>& M) {
  std::string out;
  size_t i = 0;
  auto read_index = [&](size_t& pos) -> int {
    if (pos >= text.size() || text[pos] != '[')
      throw ParseError("expected '[' after macro token", 1, static_cast<int>(pos) + 1);
    size_t close = text.find(']', pos);
    if (close == std::string::npos)
      throw ParseError("unterminated index", 1, static_cast<int>(pos) + 1);
    int v = std::stoi(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    return v;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) == 0) {
      out += c;
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j])) != 0) ++j;
    std::string word = text.substr(i, j - i);
    if (word == "det") {
      out += "(" + M.determinant().str() + ")";
      i = j;
    } else if (word == "minor") {
      size_t pos = j;
      int idx = read_index(pos);
      out += "(" + M.row_deleted_minor(idx).str() + ")";
      i = pos;
    } else if (word == "g") {
      size_t pos = j;
      int idx = read_index(pos);
      auto g = M.xy_entries();
      if (idx < 1 || idx > static_cast<int>(g.size()))
        throw ParseError("no entry polynomial g[" + std::to_string(idx) + "]", 1,
                         static_cast<int>(i) + 1);
      out += "(" + g[static_cast<size_t>(idx - 1)].str() + ")";
      i = pos;
    } else if (word == "x" || word == "y") {
      out += word;
      i = j;
    } else {
      throw ParseError("unknown token '" + word + "'", 1, static_cast<int>(i) + 1);
    }
  }
  return out;
}

/// Semicolon- or newline-separated polynomial lists, as used for --gens and
/// for generator files.
template <class F>
std::vector<Polynomial<typename F::Element>> parse_list(const std::string& text,
                                                        const SymbolicMatrix<F>& M,
                                                        const F& field) {
  std::vector<Polynomial<typename F::Element>> out;
  std::string normalized = text;
  for (char& c : normalized)
    if (c == '\n') c = ';';
  std::stringstream ss(normalized);
  std::string piece;
  while (std::getline(ss, piece, ';')) {
    if (piece.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_polynomial(M.ring(), expand_macros(piece, M), field));
  }
  return out;
}

struct ConstructArgs {
  bool show_g = false, show_det = false, show_minors = false;
};

template <class F>
int cmd_construct(const F& field, const Session& s, const ConstructArgs& a, std::ostream& out) {
  SymbolicMatrix<F> M(field, s.kind(), s.rows(), s.n);
  MonomialOrder order = resolve_order<F>(s, M.ring());
  if (s.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "construct";
    j["ring"] = M.ring()->str();
    j["order"] = order.str();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= M.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int jc = 1; jc <= M.cols(); ++jc) row.push_back(M.entry(i, jc).str(order));
      rows.push_back(row);
    }
    j["matrix"] = rows;
    if (a.show_g) {
      nlohmann::ordered_json gs = nlohmann::ordered_json::array();
      for (const auto& g : M.xy_entries()) gs.push_back(g.str(order));
      j["g"] = gs;
    }
    if (a.show_det) j["det"] = M.determinant().str(order);
    if (a.show_minors) {
      nlohmann::ordered_json ms = nlohmann::ordered_json::array();
      for (int i = 1; i <= M.rows(); ++i) ms.push_back(M.row_deleted_minor(i).str(order));
      j["minors"] = ms;
    }
    out << j.dump() << "\n";
    return kOk;
  }
  out << "ring: " << M.ring()->str() << " over " << field.name() << "\n";
  out << order.str() << "\n";
  for (int i = 1; i <= M.rows(); ++i) {
    out << "[ ";
    for (int jc = 1; jc <= M.cols(); ++jc) out << M.entry(i, jc).str(order) << (jc < M.cols() ? ", " : " ");
    out << "]\n";
  }
  if (a.show_g) {
    auto g = M.xy_entries();
    for (size_t i = 0; i < g.size(); ++i)
      out << "g" << (i + 1) << " = " << g[i].str(order) << "\n";
  }
  if (a.show_det) out << "det = " << M.determinant().str(order) << "\n";
  if (a.show_minors)
    for (int i = 1; i <= M.rows(); ++i)
      out << "minor[" << i << "] = " << M.row_deleted_minor(i).str(order) << "\n";
  return kOk;
}

struct GbArgs {
  std::string gens;
  std::string gens_file;
  bool with_det = false;
};

template <class F>
int cmd_gb(const F& field, const Session& s, const GbArgs& a, std::ostream& out) {
  SymbolicMatrix<F> M(field, s.kind(), s.rows(), s.n);
  MonomialOrder order = resolve_order<F>(s, M.ring());
  std::string gens_text = a.gens;
  if (!a.gens_file.empty()) gens_text = slurp(a.gens_file);
  std::vector<Polynomial<typename F::Element>> gens =
      gens_text.empty() ? M.xy_entries() : parse_list(gens_text, M, field);
  if (a.with_det) gens.push_back(M.determinant());
  GroebnerBasis<typename F::Element> gb = buchberger(gens, order, s.budget());
  if (s.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "gb";
    j["order"] = order.str();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& b : gb.basis) basis.push_back(b.str(order));
    j["basis"] = basis;
    nlohmann::ordered_json stats;
    stats["pairs_considered"] = gb.stats.pairs_considered;
    stats["pairs_skipped_coprime"] = gb.stats.pairs_skipped_coprime;
    stats["pairs_reduced"] = gb.stats.pairs_reduced;
    stats["reduction_steps"] = gb.stats.reduction_steps;
    stats["max_poly_terms"] = gb.stats.max_poly_terms;
    stats["basis_size"] = gb.stats.basis_size;
    if (!s.no_timing) stats["elapsed_ms"] = gb.stats.elapsed_ms;
    j["stats"] = stats;
    out << j.dump() << "\n";
    return kOk;
  }
  out << order.str() << "\n";
  for (size_t i = 0; i < gb.basis.size(); ++i)
    out << "b" << (i + 1) << " = " << gb.basis[i].str(order) << "\n";
  out << "pairs considered " << gb.stats.pairs_considered << ", skipped coprime "
      << gb.stats.pairs_skipped_coprime << ", reduced " << gb.stats.pairs_reduced
      << ", reduction steps " << gb.stats.reduction_steps << ", max terms "
      << gb.stats.max_poly_terms << "\n";
  return kOk;
}

struct MemberArgs {
  std::string poly;
  std::string gens;
  std::string gens_file;
  bool with_det = false;
  std::string expect;  // "", "true", "false"
};

template <class F>
int cmd_member(const F& field, const Session& s, const MemberArgs& a, std::ostream& out) {
  SymbolicMatrix<F> M(field, s.kind(), s.rows(), s.n);
  std::string gens_text = a.gens;
  if (!a.gens_file.empty()) gens_text = slurp(a.gens_file);
  std::vector<Polynomial<typename F::Element>> gens =
      gens_text.empty() ? M.xy_entries() : parse_list(gens_text, M, field);
  if (a.with_det) gens.push_back(M.determinant());
  Ideal<typename F::Element> I(M.ring(), gens);
  Polynomial<typename F::Element> p =
      parse_polynomial(M.ring(), expand_macros(a.poly, M), field);
  bool is_member = member(p, I, s.budget());
  if (s.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "member";
    j["poly"] = p.str();
    j["member"] = is_member;
    out << j.dump() << "\n";
  } else {
    out << (is_member ? "true" : "false") << "\n";
  }
  if (!a.expect.empty()) {
    bool want = a.expect == "true";
    return is_member == want ? kOk : kRefuted;
  }
  return kOk;
}

struct TwoListArgs {
  std::string left, right, gens, by;
};

template <class F>
int cmd_intersect(const F& field, const Session& s, const TwoListArgs& a, std::ostream& out) {
  SymbolicMatrix<F> M(field, s.kind(), s.rows(), s.n);
  using K = typename F::Element;
  Ideal<K> I(M.ring(), parse_list(a.left, M, field));
  Ideal<K> J(M.ring(), parse_list(a.right, M, field));
  Ideal<K> cap = intersect(I, J, s.budget());
  MonomialOrder order = canonical_order(M.ring());
  if (s.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "intersect";
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : cap.generators()) gens.push_back(g.str(order));
    j["generators"] = gens;
    out << j.dump() << "\n";
  } else {
    for (const auto& g : cap.generators()) out << g.str(order) << "\n";
  }
  return kOk;
}

template <class F>
int cmd_saturate(const F& field, const Session& s, const TwoListArgs& a, std::ostream& out) {
  SymbolicMatrix<F> M(field, s.kind(), s.rows(), s.n);
  using K = typename F::Element;
  Ideal<K> I(M.ring(), parse_list(a.gens, M, field));
  Polynomial<K> f = parse_polynomial(M.ring(), expand_macros(a.by, M), field);
  Ideal<K> sat = saturate(I, f, s.budget());
  MonomialOrder order = canonical_order(M.ring());
  if (s.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "saturate";
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const auto& g : sat.generators()) gens.push_back(g.str(order));
    j["generators"] = gens;
    out << j.dump() << "\n";
  } else {
    for (const auto& g : sat.generators()) out << g.str(order) << "\n";
  }
  return kOk;
}

struct VerifyArgs {
  bool all = false;
  std::string claim;
  int max_n = 3;  // the default grid covers n in {1,2,3}
  int t = -1, k = -1, i = -1;
  int jobs = 1;
  std::string expect;
};

template <class F>
Report dispatch_claim(const F& field, const Session& s, const VerifyArgs& a) {
  VerifyOptions opt = s.verify_options();
  const std::string& c = a.claim;
  if (c == "regular-sequence")
    return check_regular_sequence(field, s.kind(), s.rows(), s.n);
  if (c == "saturated") return check_saturated(field, s.kind(), s.n, a.t, opt);
  if (c == "gb-structure") return check_gb_structure(field, s.n, opt);
  if (c == "quotient-stability")
    return check_quotient_stability(field, s.n, a.i < 0 ? s.n : a.i, opt);
  if (c == "decomposition-square")
    return check_decomposition_square(field, s.kind(), s.n, opt);
  if (c == "decomposition-rect") return check_decomposition_rect(field, s.n, opt);
  if (c == "nonprime-witness") return check_nonprime_witness(field, s.kind(), s.n, opt);
  if (c == "torsionfree-necessary")
    return check_torsionfree_necessary(field, s.kind(), s.n, a.k < 0 ? 1 : a.k, opt);
  if (c == "bracket-primality")
    return check_bracket_primality(field, s.kind(), s.n, a.t < 0 ? 1 : a.t, opt);
  throw std::invalid_argument("unknown claim: " + c);
}

void print_report(const Report& r, const Session& s, std::ostream& out) {
  if (s.format == "json")
    out << r.to_json(!s.no_timing).dump() << "\n";
  else
    out << r.summary_line() << "\n";
}

int status_exit(Status st) {
  switch (st) {
    case Status::Verified:
    case Status::VerifiedNecessary:
    case Status::PaperCited:
      return kOk;
    case Status::BudgetExceeded:
      return kBudget;
    default:
      return kRefuted;
  }
}

template <class F>
int cmd_verify(const F& field, const Session& s, const VerifyArgs& a, std::ostream& out,
               std::ostream& err) {
  if (a.all) {
    auto items = default_suite(field, a.max_n, s.verify_options());
    auto reports = run_suite(items, a.jobs);
    int bad = 0, budget_only = 0;
    for (size_t i = 0; i < items.size(); ++i) {
      print_report(reports[i], s, out);
      if (!status_acceptable(items[i], reports[i])) {
        err << "unexpected status for " << items[i].description << ": "
            << status_str(reports[i].status) << "\n";
        if (reports[i].status == Status::BudgetExceeded)
          ++budget_only;
        else
          ++bad;
      }
    }
    err << reports.size() << " checks, " << (bad + budget_only) << " unexpected\n";
    if (bad > 0) return kRefuted;
    if (budget_only > 0) return kBudget;
    return kOk;
  }
  Report r = dispatch_claim(field, s, a);
  print_report(r, s, out);
  if (!a.expect.empty())
    return status_from_str(a.expect) == r.status ? kOk : kRefuted;
  return status_exit(r.status);
}

struct ParsedField {
  bool rational = true;
  std::uint64_t p = PrimeField::kDefaultPrime;
};

ParsedField parse_field(const std::string& spec) {
  if (spec == "rat" || spec == "rational" || spec == "rationals" || spec == "q")
    return {true, 0};
  if (spec == "gf") return {false, PrimeField::kDefaultPrime};
  if (spec.rfind("gf:", 0) == 0) return {false, std::stoull(spec.substr(3))};
  throw std::invalid_argument("unknown field spec: " + spec);
}

template <class Fn>
int with_field(const Session& s, std::ostream& err, Fn&& fn) {
  try {
    ParsedField f = parse_field(s.field_spec);
    if (f.rational) {
      RationalField field;
      return fn(field);
    }
    PrimeField field(f.p);
    return fn(field);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact kernel for the determinantal ideals generated by the entries of XY"};
  app.require_subcommand(1);

  Session s;
  if (const char* env = std::getenv("XYK_BUDGET_MS")) s.budget_ms = std::atof(env);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "build the matrix, ring, and entry polynomials");
  add_session_flags(construct, s);
  construct->add_flag("--show-g", construct_args.show_g, "print g_1..g_m");
  construct->add_flag("--show-det", construct_args.show_det, "print det(X)");
  construct->add_flag("--show-minors", construct_args.show_minors, "print row-deleted minors");

  GbArgs gb_args;
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  add_session_flags(gb, s);
  gb->add_option("--gens", gb_args.gens, "semicolon-separated generators (default: g_1..g_m)");
  gb->add_option("--gens-file", gb_args.gens_file, "file with one generator per line");
  gb->add_flag("--with-det", gb_args.with_det, "append det(X) to the generators");

  MemberArgs member_args;
  auto* member_cmd = app.add_subcommand("member", "ideal membership test");
  add_session_flags(member_cmd, s);
  member_cmd->add_option("--poly", member_args.poly, "polynomial to test")->required();
  member_cmd->add_option("--gens", member_args.gens, "generators (default: g_1..g_m)");
  member_cmd->add_option("--gens-file", member_args.gens_file, "file with one generator per line");
  member_cmd->add_flag("--with-det", member_args.with_det, "append det(X)");
  member_cmd->add_option("--expect", member_args.expect, "true or false; mismatch exits 1");

  TwoListArgs intersect_args;
  auto* intersect_cmd = app.add_subcommand("intersect", "intersection of two ideals");
  add_session_flags(intersect_cmd, s);
  intersect_cmd->add_option("--left", intersect_args.left, "generators of the left ideal")->required();
  intersect_cmd->add_option("--right", intersect_args.right, "generators of the right ideal")->required();

  TwoListArgs saturate_args;
  auto* saturate_cmd = app.add_subcommand("saturate", "saturation of an ideal by a polynomial");
  add_session_flags(saturate_cmd, s);
  saturate_cmd->add_option("--gens", saturate_args.gens, "generators")->required();
  saturate_cmd->add_option("--by", saturate_args.by, "saturating polynomial")->required();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run theorem checks");
  add_session_flags(verify_cmd, s);
  verify_cmd->add_flag("--all", verify_args.all, "run the default instance grid");
  verify_cmd->add_option("--claim", verify_args.claim, "claim id");
  verify_cmd->add_option("--max-n", verify_args.max_n, "size bound for --all");
  verify_cmd->add_option("--t", verify_args.t, "tower length for saturated/bracket claims");
  verify_cmd->add_option("--k", verify_args.k, "power for torsionfree claims");
  verify_cmd->add_option("--i", verify_args.i, "index for quotient-stability");
  verify_cmd->add_option("--jobs", verify_args.jobs, "concurrent checks for --all");
  verify_cmd->add_option("--expect", verify_args.expect, "expected status; mismatch exits 1");

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  if (construct->parsed())
    return with_field(s, err, [&](const auto& f) { return cmd_construct(f, s, construct_args, out); });
  if (gb->parsed())
    return with_field(s, err, [&](const auto& f) { return cmd_gb(f, s, gb_args, out); });
  if (member_cmd->parsed())
    return with_field(s, err, [&](const auto& f) { return cmd_member(f, s, member_args, out); });
  if (intersect_cmd->parsed())
    return with_field(s, err, [&](const auto& f) { return cmd_intersect(f, s, intersect_args, out); });
  if (saturate_cmd->parsed())
    return with_field(s, err, [&](const auto& f) { return cmd_saturate(f, s, saturate_args, out); });
  if (verify_cmd->parsed()) {
    if (!verify_args.all && verify_args.claim.empty()) {
      err << "usage error: verify needs --all or --claim\n";
      return kUsage;
    }
    return with_field(s, err, [&](const auto& f) { return cmd_verify(f, s, verify_args, out, err); });
  }
  err << "usage error: no subcommand\n";
  return kUsage;
}

}  // namespace xyk::cli
