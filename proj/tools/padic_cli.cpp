#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "padic/oracle.hpp"
#include "padic/render.hpp"

namespace {

using padic::Int;
using padic::Quadratic;

struct PolyArgs {
  std::string p, a, b, c;
};

void add_poly_options(CLI::App* cmd, PolyArgs& args) {
  cmd->add_option("-p", args.p, "odd prime p")->required();
  cmd->add_option("-a", args.a, "coefficient a (nonzero)")->required();
  cmd->add_option("-b", args.b, "coefficient b")->required();
  cmd->add_option("-c", args.c, "coefficient c")->required();
}

Quadratic parse_poly(const PolyArgs& args) {
  return Quadratic(Int(args.a), Int(args.b), Int(args.c), Int(args.p));
}

padic::RenderFormat parse_format(const std::string& name) {
  if (name == "ascii") return padic::RenderFormat::Ascii;
  if (name == "dot") return padic::RenderFormat::Dot;
  if (name == "json") return padic::RenderFormat::Json;
  throw CLI::ValidationError("--format", "expected ascii, dot or json");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

void print_seq_table(const padic::ValuationSequence& seq, std::ostream& out) {
  const std::size_t chunk = 10;
  std::string nu_header = "nu_" + seq.quadratic.p.str() + "(f(n))";
  for (std::size_t start = 0; start < seq.terms.size(); start += chunk) {
    std::size_t stop = std::min(start + chunk, seq.terms.size());
    std::vector<std::size_t> widths;
    std::vector<std::string> values, vals_nu;
    for (std::size_t n = start; n < stop; ++n) {
      std::string fn = seq.quadratic.eval(Int(n)).str();
      std::string nu = seq.terms[n].str();
      widths.push_back(std::max({fn.size(), nu.size(),
                                 std::to_string(n).size()}));
      values.push_back(fn);
      vals_nu.push_back(nu);
    }
    auto row = [&](const std::string& head, auto cell) {
      out << head;
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << "  " << std::string(widths[i] - cell(i).size(), ' ') << cell(i);
      }
      out << "\n";
    };
    std::string pad(nu_header.size() - 1, ' ');
    row("n" + pad, [&](std::size_t i) { return std::to_string(start + i); });
    row("f(n)" + std::string(nu_header.size() - 4, ' '),
        [&](std::size_t i) { return values[i]; });
    row(nu_header, [&](std::size_t i) { return vals_nu[i]; });
    if (stop < seq.terms.size()) out << "\n";
  }
}

int run_classify(const PolyArgs& args, unsigned precision, bool as_json) {
  Quadratic f = parse_poly(args);
  padic::Classification cls = padic::classify(f, precision);
  if (as_json) {
    std::cout << padic::classification_to_json(cls).dump(2) << "\n";
  } else {
    std::cout << padic::render_report(cls);
  }
  return 0;
}

int run_tree(const PolyArgs& args, unsigned depth, const std::string& format,
             const std::string& labels, const std::string& out_path) {
  Quadratic f = parse_poly(args);
  padic::RenderOptions opts;
  opts.format = parse_format(format);
  if (labels == "congruence") opts.label_style = padic::LabelStyle::Congruence;
  padic::ValuationTree tree = padic::build_tree(f, depth);
  write_output(padic::render_tree(tree, opts), out_path);
  return 0;
}

int run_seq(const PolyArgs& args, std::size_t count, bool period) {
  Quadratic f = parse_poly(args);
  padic::ValuationSequence seq = padic::valuation_sequence(f, count);
  print_seq_table(seq, std::cout);
  if (period) {
    padic::Classification cls = padic::classify(f);
    if (cls.has_infinite_branch()) {
      std::cout << "period: none (unbounded sequence)\n";
    } else {
      unsigned ell =
          cls.kind == padic::TreeKind::Finite ? cls.finite->levels_ell : 0;
      std::size_t needed =
          static_cast<std::size_t>(2 * padic::pow_int(f.p, ell));
      padic::ValuationSequence window =
          count >= needed ? seq : padic::valuation_sequence(f, needed);
      auto detected = padic::detect_period(window, ell);
      std::cout << "period: " << (detected ? detected->str() : "none") << "\n";
    }
  }
  return 0;
}

int run_verify(const Quadratic& f, unsigned depth, std::ostream& out) {
  padic::Report report = padic::cross_check(f, depth);
  out << padic::render_checks(report);
  return report.all_pass() ? 0 : 1;
}

int run_batch(const std::string& input_path, const std::string& output_path) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "cannot open input file: " << input_path << "\n";
    return 2;
  }
  std::ostringstream out;
  std::string line;
  std::size_t line_no = 0;
  int exit_code = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line.substr(0, line.find('#'));
    std::istringstream fields(body);
    std::string p, a, b, c;
    if (!(fields >> p >> a >> b >> c)) {
      if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::cerr << "line " << line_no << ": expected `p a b c [depth]`\n";
      return 2;
    }
    unsigned depth = 4;
    fields >> depth;
    out << "# line " << line_no << ": p=" << p << " a=" << a << " b=" << b
        << " c=" << c << " depth=" << depth << "\n";
    try {
      Quadratic f{Int(a), Int(b), Int(c), Int(p)};
      padic::Classification cls = padic::classify(f);
      padic::Report report = padic::cross_check(f, depth);
      out << padic::render_report(cls, &report) << "\n";
      if (!report.all_pass()) exit_code = 1;
    } catch (const padic::InvalidPrime& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return 2;
    } catch (const padic::InvalidQuadratic& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return 2;
    }
  }
  write_output(out.str(), output_path);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic valuation trees of integer quadratics f(n)=an^2+bn+c"};
  app.require_subcommand(1);

  PolyArgs poly;
  unsigned precision = 8;
  unsigned depth = 8;
  std::size_t count = 20;
  bool period = false, as_json = false;
  std::string format = "ascii", labels = "residue", out_path, in_path;

  CLI::App* classify = app.add_subcommand("classify", "five-way tree classification");
  add_poly_options(classify, poly);
  classify->add_option("--precision", precision, "root precision in p-adic digits");
  classify->add_flag("--json", as_json, "machine-readable output");

  CLI::App* tree = app.add_subcommand("tree", "build and render the valuation tree");
  add_poly_options(tree, poly);
  tree->add_option("--depth", depth, "depth cap");
  tree->add_option("--format", format, "ascii|dot|json")
      ->check(CLI::IsMember({"ascii", "dot", "json"}));
  tree->add_option("--labels", labels, "residue|congruence")
      ->check(CLI::IsMember({"residue", "congruence"}));
  tree->add_option("-o,--output", out_path, "write to file instead of stdout");

  CLI::App* seq = app.add_subcommand("seq", "brute-force valuation sequence");
  add_poly_options(seq, poly);
  seq->add_option("--count", count, "number of terms");
  seq->add_flag("--period", period, "detect the minimal period");

  CLI::App* verify = app.add_subcommand("verify", "cross-check classifier, tree and oracle");
  add_poly_options(verify, poly);
  verify->add_option("--depth", depth, "tree depth for the checks");

  CLI::App* batch = app.add_subcommand("batch", "run one job per input line: p a b c [depth]");
  batch->add_option("--input", in_path, "job file")->required();
  batch->add_option("--output", out_path, "result file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) return run_classify(poly, precision, as_json);
    if (tree->parsed()) return run_tree(poly, depth, format, labels, out_path);
    if (seq->parsed()) return run_seq(poly, count, period);
    if (verify->parsed()) return run_verify(parse_poly(poly), depth, std::cout);
    if (batch->parsed()) return run_batch(in_path, out_path);
  } catch (const padic::InvalidPrime& e) {
    std::cerr << "invalid prime: " << e.what() << "\n";
    return 2;
  } catch (const padic::InvalidQuadratic& e) {
    std::cerr << "invalid quadratic: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
