#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "bpd/bijection.hpp"
#include "bpd/error.hpp"
#include "bpd/symmetric.hpp"

namespace bpd::cli {

namespace {

// Double Schubert polynomials come from a divided-difference descent from
// the longest element, which is too slow past S_6.
constexpr int kMaxDoubleSize = 6;

std::string expansion_line(const SchurExpansion& e) {
  std::string out;
  for (const auto& [lambda, c] : e) {
    if (!out.empty()) out += ", ";
    out += to_string(lambda) + ": " + c.str();
  }
  return out.empty() ? "0" : out;
}

void print_chain(std::ostream& out, const std::vector<ChainStep>& steps, bool unicode) {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& step = steps[k];
    out << "step " << k << ": " << to_compact_string(step.perm) << "  " << to_string(step.word);
    if (step.move) out << "  p=" << step.move->p << " q=" << step.move->q << " i=" << step.move->i;
    out << "\n" << render(step.pipedream, unicode) << "\n";
  }
}

struct Options {
  std::string perm;
  std::string word;
  std::string tableau;
  std::string pipedream;
  std::string method = "tableaux";
  std::string kind = "mls";
  std::string format = "ascii";
  int k = 0;
  int v = 0;
  int ambient = 0;
  bool inverse = false;
  bool trace = false;
  bool double_poly = false;
  bool eg_only = false;
  bool render_grid = false;
  bool unicode = false;
};

int cmd_expand(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.perm);
  out << to_string(eg_coeffs(w, parse_eg_method(o.method)));
  return 0;
}

int cmd_schubert(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.perm);
  if (o.double_poly) {
    require(w.size() <= kMaxDoubleSize, "--double supports n <= " + std::to_string(kMaxDoubleSize));
    out << to_string(double_schubert(w)) << "\n";
  } else {
    out << to_string(schubert_bjs(w)) << "\n";
  }
  return 0;
}

int cmd_eg_insert(const Options& o, std::ostream& out) {
  const auto a = parse_word(o.word);
  require(is_reduced(a), "word " + to_string(a) + " is not reduced");
  const auto ins = eg_insert(a);
  out << "P: " << to_string(ins.p) << "\nQ: " << to_string(ins.q) << "\n";
  return 0;
}

int cmd_little(const Options& o, std::ostream& out) {
  const auto a = parse_word(o.word, o.ambient > 0 ? std::optional<int>(o.ambient) : std::nullopt);
  const int n = a.ambient_size();
  int v = o.v;
  if (v == 0) {
    // The inverse map is the forward map conjugated by complements, so the
    // value is inferred on the complemented permutation.
    const auto w = evaluate(a);
    const auto inferred = o.inverse ? infer_little_value(complement(w), n + 1 - o.k) : infer_little_value(w, o.k);
    require(inferred.has_value(), "cannot infer v for k=" + std::to_string(o.k) + "; pass --v");
    v = o.inverse ? n + 1 - *inferred : *inferred;
  }
  if (o.inverse) {
    out << to_string(little_map_inverse(a, o.k, v)) << "\n";
    return 0;
  }
  const auto result = little_map_trace(a, o.k, v);
  if (o.trace) {
    out << "v: " << v << "\nbumped:";
    for (auto t : result.bumped) out << " " << t;
    out << "\n";
  }
  out << to_string(result.word) << "\n";
  return 0;
}

int cmd_pipedreams(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.perm);
  bool first = true;
  for (const auto& p : enumerate_all(w)) {
    const auto shape = is_eg(p);
    if (o.eg_only && !shape) continue;
    if (o.render_grid) {
      if (!first) out << "\n";
      out << render(p, o.unicode) << "\n";
      if (shape) out << "shape " << to_string(*shape) << "\n";
    } else {
      out << render(p, o.unicode, "/");
      if (shape) out << "  " << to_string(*shape);
      out << "\n";
    }
    first = false;
  }
  return 0;
}

int cmd_tree(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.perm);
  const auto kind = parse_tree_kind(o.kind);
  const auto tree = kind == TreeKind::LS ? ls_tree(w) : kind == TreeKind::MLS ? mls_tree(w) : eg_tree(w);
  if (o.format == "json")
    out << to_json(tree);
  else
    out << render_ascii(tree);
  return 0;
}

int cmd_forward(const Options& o, std::ostream& out) {
  const auto trace = gamma_trace(parse_tableau(o.tableau), parse_permutation(o.perm));
  if (o.trace) print_chain(out, trace.steps, o.unicode);
  out << render(trace.result, o.unicode) << "\n";
  return 0;
}

int cmd_backward(const Options& o, std::ostream& out) {
  const auto trace = gamma_inverse_trace(parse_pipedream(o.pipedream));
  if (o.trace) print_chain(out, trace.steps, o.unicode);
  out << "w(P): " << to_string(trace.steps.front().word) << "\n" << to_string(trace.result) << "\n";
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.perm);
  bool ok = true;
  std::optional<SchurExpansion> reference;
  for (auto method : {EgMethod::Tableaux, EgMethod::Pipedreams, EgMethod::MlsLeaves, EgMethod::Monomial}) {
    const auto e = eg_coeffs(w, method);
    out << to_string(method) << ": " << expansion_line(e) << "\n";
    if (!reference) reference = e;
    ok = ok && e == *reference;
  }

  SparsePoly weights;
  for (const auto& p : enumerate_all(w)) weights = weights + weight(p);
  const bool single = drop_y(weights) == schubert_bjs(w);
  out << "pipedream weights at y=0 vs Schubert: " << (single ? "equal" : "DIFFERENT") << "\n";
  ok = ok && single;
  if (w.size() <= kMaxDoubleSize) {
    const bool dbl = weights == double_schubert(w);
    out << "pipedream weights vs double Schubert: " << (dbl ? "equal" : "DIFFERENT") << "\n";
    ok = ok && dbl;
  } else {
    out << "pipedream weights vs double Schubert: skipped (n > " << kMaxDoubleSize << ")\n";
  }
  out << "status: " << (ok ? "OK" : "MISMATCH") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert calculus, Edelman-Greene insertion and bumpless pipedreams"};
  app.name("bpd");
  app.require_subcommand(1);
  Options o;

  auto* expand = app.add_subcommand("expand", "Schur expansion of the Stanley symmetric function F_w");
  expand->add_option("w", o.perm, "permutation")->required();
  expand->add_option("--method", o.method, "tableaux, pipedreams, mls-leaves or monomial");

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of w");
  schubert->add_option("w", o.perm, "permutation")->required();
  schubert->add_flag("--double", o.double_poly, "double Schubert polynomial");

  auto* insert = app.add_subcommand("eg-insert", "Edelman-Greene insertion of a reduced word");
  insert->add_option("word", o.word, "reduced word, e.g. (2,3,1,6,4,3,2)")->required();

  auto* little = app.add_subcommand("little", "Little map theta_{k,v} on a reduced word");
  little->add_option("word", o.word, "reduced word")->required();
  little->add_option("-k,--k", o.k, "position k")->required()->check(CLI::PositiveNumber);
  little->add_option("-v,--v", o.v, "value v (inferred when unique)")->check(CLI::PositiveNumber);
  little->add_option("-n,--n", o.ambient, "ambient size (default: largest letter + 1)");
  little->add_flag("--inverse", o.inverse, "apply the inverse map");
  little->add_flag("--trace", o.trace, "show the bumped positions");

  auto* pipedreams = app.add_subcommand("pipedreams", "all bumpless pipedreams of w");
  pipedreams->add_option("w", o.perm, "permutation")->required();
  pipedreams->add_flag("--eg-only", o.eg_only, "only EG-pipedreams");
  pipedreams->add_flag("--render", o.render_grid, "draw each grid over several lines");
  pipedreams->add_flag("--unicode", o.unicode, "box-drawing characters");

  auto* tree = app.add_subcommand("tree", "LS-tree, modified LS-tree or EG-tree of w");
  tree->add_option("w", o.perm, "permutation")->required();
  tree->add_option("--kind", o.kind, "ls, mls or eg")->check(CLI::IsMember({"ls", "mls", "eg"}));
  tree->add_option("--format", o.format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  auto* bijection = app.add_subcommand("bijection", "reduced word tableaux <-> EG-pipedreams");
  bijection->require_subcommand(1);
  auto* forward = bijection->add_subcommand("forward", "tableau to EG-pipedream");
  forward->add_option("tableau", o.tableau, "tableau, e.g. 1,4,5/2/5")->required();
  forward->add_option("w", o.perm, "permutation")->required();
  auto* backward = bijection->add_subcommand("backward", "EG-pipedream to tableau");
  backward->add_option("pipedream", o.pipedream, "grid with rows separated by '/'")->required();
  for (auto* sub : {forward, backward}) {
    sub->add_flag("--trace", o.trace, "print the whole chain");
    sub->add_flag("--unicode", o.unicode, "box-drawing characters");
  }

  auto* verify = app.add_subcommand("verify", "cross-check coefficients and Schubert polynomials");
  verify->add_option("w", o.perm, "permutation")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*expand) return cmd_expand(o, out);
    if (*schubert) return cmd_schubert(o, out);
    if (*insert) return cmd_eg_insert(o, out);
    if (*little) return cmd_little(o, out);
    if (*pipedreams) return cmd_pipedreams(o, out);
    if (*tree) return cmd_tree(o, out);
    if (*forward) return cmd_forward(o, out);
    if (*backward) return cmd_backward(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace bpd::cli
