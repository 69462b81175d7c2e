#include "tightframe/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>

#include "tightframe/error.hpp"
#include "tightframe/frames.hpp"
#include "tightframe/gu.hpp"
#include "tightframe/lsf.hpp"
#include "tightframe/matrix_file.hpp"
#include "tightframe/neumark.hpp"
#include "tightframe/quantum.hpp"

namespace tightframe::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string num(const Complex& z) {
  if (z.imag() == 0.0) return num(z.real());
  return num(z.real()) + (z.imag() < 0 ? "-" : "+") + num(std::abs(z.imag())) + "i";
}

template <typename Seq>
std::string list(const Seq& values) {
  std::string s = "(";
  bool first = true;
  for (const auto& v : values) {
    if (!first) s += ", ";
    s += num(v);
    first = false;
  }
  return s + ")";
}

std::string list(const RealVector& v) { return list(std::vector<double>(v.data(), v.data() + v.size())); }
std::string list(const ComplexVector& v) {
  return list(std::vector<Complex>(v.data(), v.data() + v.size()));
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError(std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  return values;
}

struct Options {
  std::string input;
  std::string second;
  std::string out;
  double beta = 1.0;
  std::optional<double> expand_beta;
  int order = 1;
  double tol = kDefaultTightTol;
  double rank_tol = kDefaultRankTol;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::string group;
  std::string map;
  bool project = false;
};

void maybe_write(const Options& o, const ComplexMatrix& A, std::ostream& out) {
  if (o.out.empty()) return;
  write_matrix_file(o.out, A);
  out << "wrote " << o.out << "\n";
}

void print_matrix(std::ostream& out, const ComplexMatrix& A) {
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    out << "  [";
    for (Eigen::Index j = 0; j < A.cols(); ++j) out << (j ? ", " : "") << num(A(i, j));
    out << "]\n";
  }
}

// ------------------------------------------------------------- subcommands

void cmd_verify(const Options& o, std::ostream& out) {
  const FrameReport rep = analyze_frame(read_matrix_file(o.input), o.tol, o.rank_tol);
  if (rep.is_tight) {
    out << "tight, beta=" << num(*rep.beta) << ", redundancy=" << num(rep.redundancy) << "\n";
  } else {
    out << "not tight, bounds=[" << num(rep.lower_bound) << ", " << num(rep.upper_bound)
        << "], redundancy=" << num(rep.redundancy) << "\n";
  }
  out << "rank: " << rep.rank << "\n";
  out << "singular values: " << list(rep.singular_values) << "\n";
}

void cmd_expand(const Options& o, std::ostream& out) {
  const ComplexMatrix F = read_matrix_file(o.input);
  const ComplexVector x = read_vector_file(o.second);
  double beta = 0.0;
  if (o.expand_beta) {
    beta = *o.expand_beta;
  } else {
    const FrameReport rep = analyze_frame(F, o.tol, o.rank_tol);
    if (!rep.is_tight) throw DomainError("expand: frame is not tight; pass --beta explicitly");
    beta = *rep.beta;
  }
  ExpansionOptions opts;
  opts.project = o.project;
  opts.rank_tol = o.rank_tol;
  const ComplexVector a = expansion_coefficients(F, beta, x, opts);
  const ComplexVector target = o.project ? ComplexVector(projector_onto_range(F, o.rank_tol) * x) : x;
  out << "beta: " << num(beta) << "\n";
  out << "coefficients: " << list(a) << "\n";
  out << "reconstruction error: " << num((reconstruct(F, a) - target).norm()) << "\n";
  maybe_write(o, a, out);
}

void cmd_neumark(const Options& o, std::ostream& out) {
  const ComplexMatrix F = read_matrix_file(o.input);
  const NeumarkExtension ext = extend(F, o.tol, o.rank_tol);
  const ExtensionCheck check = verify_extension(F, ext, 1e-9, o.rank_tol);
  if (!check) throw NumericalError("neumark: extension failed verification: " + check.diagnostic);
  out << "case: "
      << (ext.case_tag == ExtensionCase::WithinSpace ? "within-space" : "expanded-space") << "\n";
  out << "beta: " << num(ext.beta) << "\n";
  out << "extended: " << ext.extended.rows() << "x" << ext.extended.cols() << "\n";
  print_matrix(out, ext.extended);
  out << "check: " << check.diagnostic << "\n";
  maybe_write(o, ext.extended, out);
}

void print_lsf(const LsfResult& r, const char* scale_name, std::ostream& out) {
  out << scale_name << ": " << num(r.scale) << "\n";
  out << "rank: " << r.rank << "\n";
  out << "singular values: " << list(r.singular_values) << "\n";
  out << "E_min: " << num(r.residual) << "\n";
}

void cmd_clsf(const Options& o, std::ostream& out) {
  const LsfResult r = clsf(read_matrix_file(o.input), o.beta, o.rank_tol);
  print_lsf(r, "beta0", out);
  print_matrix(out, r.frame);
  maybe_write(o, r.frame, out);
}

void cmd_ulsf(const Options& o, std::ostream& out) {
  const LsfResult r = ulsf(read_matrix_file(o.input), o.rank_tol);
  print_lsf(r, "alpha", out);
  print_matrix(out, r.frame);
  maybe_write(o, r.frame, out);
}

void cmd_canonical(const Options& o, std::ostream& out) {
  const ComplexMatrix Phi = read_matrix_file(o.input);
  const LsfResult r = clsf(Phi, 1.0, o.rank_tol);
  out << "rank: " << r.rank << "\n";
  out << "squared error: " << num(r.residual) << "\n";
  print_matrix(out, r.frame);
  maybe_write(o, r.frame, out);
}

void cmd_polar(const Options& o, std::ostream& out) {
  const ComplexMatrix Phi = read_matrix_file(o.input);
  const PolarFactors f = polar(Phi, o.rank_tol);
  out << "isometry part H:\n";
  print_matrix(out, f.isometry_part);
  out << "hermitian part Y:\n";
  print_matrix(out, f.hermitian_part);
  out << "|HY - Phi|: " << num((f.isometry_part * f.hermitian_part - Phi).norm()) << "\n";
  maybe_write(o, f.isometry_part, out);
}

void cmd_tpd(const Options& o, std::ostream& out) {
  const ComplexMatrix Phi = read_matrix_file(o.input);
  const PolarFactors f = tpd(Phi, o.order, o.rank_tol);
  out << "order: " << o.order << "\n";
  out << "isometry part:\n";
  print_matrix(out, f.isometry_part);
  out << "hermitian part:\n";
  print_matrix(out, f.hermitian_part);
  maybe_write(o, f.isometry_part, out);
}

void cmd_gu_frame(const Options& o, std::ostream& out) {
  const ComplexMatrix Phi = read_matrix_file(o.input);
  const AbelianGroup G(parse_int_list(o.group, "--group"));
  const GroupMap map = o.map.empty() ? GroupMap::identity(G.order())
                                     : GroupMap{parse_int_list(o.map, "--map")};
  const GuSpectrum spec = gu_spectrum(Phi, G, map);
  const ComplexMatrix F = gu_canonical(Phi, G, map);
  out << "group order: " << G.order() << "\n";
  out << "s_hat: " << list(spec.s_hat) << "\n";
  out << "sigma: " << list(spec.sigma) << "\n";
  print_matrix(out, F);
  maybe_write(o, F, out);
}

void cmd_lsm(const Options& o, std::ostream& out) {
  const ComplexMatrix states = read_matrix_file(o.input);
  const MeasurementMatrix M = lsm(states, o.rank_tol);
  out << "measurement vectors:\n";
  print_matrix(out, M.matrix);
  bool unit = true;
  for (Eigen::Index i = 0; i < states.cols(); ++i) {
    unit = unit && std::abs(states.col(i).norm() - 1.0) <= 1e-9;
  }
  if (unit) out << "P_e: " << num(detection_error(M, states)) << "\n";
  maybe_write(o, M.matrix, out);
}

void cmd_probs(const Options& o, std::ostream& out) {
  const MeasurementMatrix M = povm_from_frame(read_matrix_file(o.input), o.tol, o.rank_tol);
  const std::vector<double> p = probabilities(M, read_vector_file(o.second));
  double total = 0.0;
  for (double v : p) total += v;
  out << "probabilities: " << list(p) << "\n";
  out << "sum: " << num(total) << "\n";
}

void cmd_sample(const Options& o, std::ostream& out) {
  const MeasurementMatrix M = povm_from_frame(read_matrix_file(o.input), o.tol, o.rank_tol);
  const auto counts = sample_outcomes(M, read_vector_file(o.second), o.trials, o.seed);
  out << "seed: " << o.seed << "\n";
  out << "trials: " << o.trials << "\n";
  out << "counts: (";
  for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? ", " : "") << counts[i];
  out << ")\n";
}

void cmd_detect_error(const Options& o, std::ostream& out) {
  const MeasurementMatrix M = povm_from_frame(read_matrix_file(o.input), o.tol, o.rank_tol);
  out << "P_e: " << num(detection_error(M, read_matrix_file(o.second))) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight frames and rank-one quantum measurements", "tightframe"};
  app.require_subcommand(1);
  Options o;
  std::function<void(const Options&, std::ostream&)> action;

  auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--tol", o.tol, "Relative tightness tolerance")->capture_default_str();
    sub->add_option("--rank-tol", o.rank_tol, "Relative rank tolerance")->capture_default_str();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto with_input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->required();
    return sub;
  };
  auto with_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the result matrix to this file");
    return sub;
  };

  with_input(add("verify", "Check whether the columns form a tight frame", cmd_verify),
             "Frame matrix file");

  auto* expand_cmd = with_out(with_input(
      add("expand", "Minimal-norm expansion coefficients of a vector", cmd_expand),
      "Frame matrix file"));
  expand_cmd->add_option("vector", o.second, "Vector file")->required();
  expand_cmd->add_option("--beta", o.expand_beta, "Frame scale (default: measured)");
  expand_cmd->add_flag("--project", o.project, "Project the vector onto the frame subspace first");

  with_out(with_input(add("neumark", "Orthogonal extension of a tight frame", cmd_neumark),
                      "Frame matrix file"));

  auto* clsf_cmd = with_out(with_input(
      add("clsf", "Constrained least-squares tight frame", cmd_clsf), "Vector set file"));
  clsf_cmd->add_option("--beta", o.beta, "Frame scale beta0")->capture_default_str();

  with_out(with_input(add("ulsf", "Unconstrained least-squares tight frame", cmd_ulsf),
                      "Vector set file"));
  with_out(with_input(add("canonical", "Canonical frame", cmd_canonical), "Vector set file"));
  with_out(with_input(add("polar", "Polar decomposition (rows >= cols)", cmd_polar),
                      "Matrix file"));

  auto* tpd_cmd = with_out(
      with_input(add("tpd", "Truncated polar decomposition", cmd_tpd), "Matrix file"));
  tpd_cmd->add_option("--order", o.order, "Truncation order p")->required();

  auto* gu_cmd = with_out(with_input(
      add("gu-frame", "Canonical frame of a geometrically uniform set via the group FT",
          cmd_gu_frame),
      "Vector set file"));
  gu_cmd->add_option("--group", o.group, "Cyclic factor orders n1,n2,...")->required();
  gu_cmd->add_option("--map", o.map, "Group element index of each column i0,i1,...");

  with_out(with_input(add("lsm", "Least-squares measurement for a set of states", cmd_lsm),
                      "State set file"));

  auto* probs_cmd = with_input(add("probs", "Outcome probabilities", cmd_probs),
                               "Measurement matrix file");
  probs_cmd->add_option("state", o.second, "State vector file")->required();

  auto* sample_cmd = with_input(add("sample", "Sample measurement outcomes", cmd_sample),
                                "Measurement matrix file");
  sample_cmd->add_option("state", o.second, "State vector file")->required();
  sample_cmd->add_option("--trials", o.trials, "Number of draws")->capture_default_str();
  sample_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();

  auto* detect_cmd = with_input(
      add("detect-error", "Probability of detection error", cmd_detect_error),
      "Measurement matrix file");
  detect_cmd->add_option("states", o.second, "State set file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    action(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace tightframe::cli
