// Command-line surface: load a measure spec, run one computation, emit a
// deterministic JSON or CSV report.  Exit codes: 0 success, 1 verification
// failure, 2 input error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clarkframes/frames.hpp"
#include "clarkframes/measure_io.hpp"
#include "clarkframes/verify.hpp"

using namespace clarkframes;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct CommonOpts {
  std::string measure_path;
  int terms = 64;
  double tol = 1e-9;
  double grid_radius = 0.9;
  int grid_count = 100;
  int depth = 0;  // 0 = keep the spec's depth
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* sub, CommonOpts& o, bool needs_measure) {
  CLI::Option* m = sub->add_option("--measure", o.measure_path, "measure spec file");
  if (needs_measure) m->required();
  sub->add_option("--terms", o.terms, "series / frame depth N");
  sub->add_option("--tol", o.tol, "tolerance");
  sub->add_option("--grid-radius", o.grid_radius, "evaluation grid radius");
  sub->add_option("--grid-count", o.grid_count, "evaluation grid size");
  sub->add_option("--depth", o.depth, "override the spec's product depth");
  sub->add_option("--output", o.output, "write the report here instead of stdout");
  sub->add_option("--format", o.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

void validate(const CommonOpts& o) {
  if (o.terms < 1) throw std::invalid_argument("--terms must be >= 1");
  if (!(o.tol > 0.0 && o.tol < 1.0))
    throw std::invalid_argument("--tol must lie strictly between 0 and 1");
  if (!(o.grid_radius > 0.0 && o.grid_radius < 1.0))
    throw std::invalid_argument("--grid-radius must lie strictly between 0 and 1");
  if (o.grid_count < 1) throw std::invalid_argument("--grid-count must be >= 1");
  if (o.depth < 0) throw std::invalid_argument("--depth must be >= 0");
}

cplx parse_cplx(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected RE,IM but got '" + text + "'");
  std::size_t used = 0;
  double re = std::stod(text.substr(0, comma), &used);
  if (used != comma) throw std::invalid_argument("bad real part in '" + text + "'");
  std::string imag_text = text.substr(comma + 1);
  double im = std::stod(imag_text, &used);
  if (used != imag_text.size())
    throw std::invalid_argument("bad imaginary part in '" + text + "'");
  return {re, im};
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Measure load(const CommonOpts& o) {
  Measure mu = load_measure_spec(o.measure_path);
  if (o.depth > 0)
    if (auto* ss = std::get_if<SelfSimilarMeasure>(&mu)) ss->product_depth = o.depth;
  return mu;
}

// Atomic stand-in used by the frame-side commands: self-similar measures are
// atomized at a bounded depth, densities get an even midpoint grid.
AtomicMeasure carrier_atoms(const Measure& mu, int carrier_depth = 6) {
  if (const AtomicMeasure* a = as_atomic(mu)) return *a;
  if (const auto* ss = std::get_if<SelfSimilarMeasure>(&mu))
    return atomize(*ss, std::min(ss->product_depth, carrier_depth));
  return quadrature_measure(std::get<DensityMeasure>(mu), 512);
}

ojson report_head(const std::string& command, const CommonOpts& o) {
  ojson r;
  r["schemaVersion"] = kSchemaVersion;
  r["command"] = command;
  if (!o.measure_path.empty()) {
    r["measure"]["path"] = o.measure_path;
    r["measure"]["hash"] = file_hash(o.measure_path);
  }
  ojson p;
  p["terms"] = o.terms;
  p["tol"] = o.tol;
  p["gridRadius"] = o.grid_radius;
  p["gridCount"] = o.grid_count;
  p["depth"] = o.depth;
  r["parameters"] = p;
  return r;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + o.output);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void emit_json(const CommonOpts& o, const ojson& r) { emit(o, r.dump(2) + "\n"); }

void emit_csv(const CommonOpts& o, const std::string& header,
              const std::vector<std::vector<std::string>>& rows) {
  std::string text = header + "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += row[i];
    }
    text += '\n';
  }
  emit(o, text);
}

int cmd_coeffs(const CommonOpts& o) {
  Measure mu = load(o);
  std::vector<cplx> fc = fourier_coeffs(mu, o.terms);
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= o.terms; ++n)
      rows.push_back({std::to_string(n), fmt17(fc[n].real()), fmt17(fc[n].imag())});
    emit_csv(o, "n,re,im", rows);
    return 0;
  }
  ojson r = report_head("coeffs", o);
  r["rows"] = ojson::array();
  for (int n = 0; n <= o.terms; ++n)
    r["rows"].push_back({{"n", n}, {"re", fc[n].real()}, {"im", fc[n].imag()}});
  emit_json(o, r);
  return 0;
}

int cmd_phi(const CommonOpts& o) {
  Measure mu = load(o);
  InnerFunction phi = InnerFunction::from_measure(mu, o.terms);
  const TruncatedSeries& taylor = phi.taylor();
  std::vector<cplx> grid = disc_grid(o.grid_radius, o.grid_count);
  double residual = 0.0;
  std::vector<cplx> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    cplx ratio = phi.eval(grid[i], PhiMode::ratio);
    values[i] = ratio;
    residual = std::max(residual,
                        std::abs(ratio - phi.eval(grid[i], PhiMode::series)));
  }
  int exit_code = residual <= o.tol ? 0 : 1;
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n < static_cast<int>(taylor.c.size()); ++n)
      rows.push_back(
          {std::to_string(n), fmt17(taylor.c[n].real()), fmt17(taylor.c[n].imag())});
    emit_csv(o, "n,re,im", rows);
    return exit_code;
  }
  ojson r = report_head("phi", o);
  r["coefficients"] = ojson::array();
  for (int n = 0; n < static_cast<int>(taylor.c.size()); ++n)
    r["coefficients"].push_back(
        {{"n", n}, {"re", taylor.c[n].real()}, {"im", taylor.c[n].imag()}});
  r["grid"] = ojson::array();
  for (std::size_t i = 0; i < grid.size(); ++i)
    r["grid"].push_back({{"zRe", grid[i].real()},
                         {"zIm", grid[i].imag()},
                         {"re", values[i].real()},
                         {"im", values[i].imag()}});
  r["twoPathResidual"] = residual;
  r["pass"] = exit_code == 0;
  emit_json(o, r);
  return exit_code;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

int cmd_verify(const CommonOpts& o, const std::vector<std::string>& phi_zeros,
               const std::string& phi_front) {
  Measure mu = load(o);
  VerifyOptions opt;
  opt.terms = o.terms;
  opt.boundary_tol = o.tol;
  opt.grid_radius = o.grid_radius;
  opt.grid_count = o.grid_count;
  if (o.depth > 0) opt.carrier_depth = o.depth;
  if (!phi_zeros.empty()) {
    std::vector<cplx> zeros;
    for (const std::string& z : phi_zeros) zeros.push_back(parse_cplx(z));
    opt.reference_phi = blaschke_product(zeros, parse_cplx(phi_front));
  }
  VerificationReport report = run_verification(mu, opt);
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const CheckResult& c : report.checks)
      rows.push_back({c.name, status_name(c.status), fmt17(c.max_residual),
                      fmt17(c.tolerance)});
    emit_csv(o, "check,status,max_residual,tolerance", rows);
    return report.all_passed ? 0 : 1;
  }
  ojson r = report_head("verify", o);
  r["checks"] = ojson::array();
  for (const CheckResult& c : report.checks)
    r["checks"].push_back({{"name", c.name},
                           {"status", status_name(c.status)},
                           {"maxResidual", c.max_residual},
                           {"tolerance", c.tolerance},
                           {"detail", c.detail}});
  r["allPassed"] = report.all_passed;
  emit_json(o, r);
  return report.all_passed ? 0 : 1;
}

int cmd_frame(const CommonOpts& o) {
  Measure mu = load(o);
  UCoefficients u = u_coefficients(mu, o.terms);
  AtomicMeasure carrier = carrier_atoms(mu);
  double deviation = frame_deviation(carrier, u_coefficients(Measure{carrier}, o.terms),
                                     o.terms);
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= o.terms; ++n) {
      FramePolynomial g = frame_polynomial(u, n);
      for (int k = 0; k <= n; ++k)
        rows.push_back({std::to_string(n), std::to_string(k), fmt17(g.c[k].real()),
                        fmt17(g.c[k].imag())});
    }
    emit_csv(o, "n,k,re,im", rows);
    return 0;
  }
  ojson r = report_head("frame", o);
  r["rows"] = ojson::array();
  for (int n = 0; n <= o.terms; ++n) {
    FramePolynomial g = frame_polynomial(u, n);
    ojson coeffs = ojson::array();
    for (int k = 0; k <= n; ++k)
      coeffs.push_back({{"k", k}, {"re", g.c[k].real()}, {"im", g.c[k].imag()}});
    r["rows"].push_back({{"n", n}, {"coefficients", coeffs}});
  }
  r["frameDeviation"] = deviation;
  emit_json(o, r);
  return 0;
}

int cmd_kaczmarz(const CommonOpts& o) {
  Measure mu = load(o);
  AtomicMeasure carrier = carrier_atoms(mu);
  L2Vector f(carrier.size(), cplx{0.0, 0.0});
  f[0] = cplx{1.0, 0.0};
  double norm = l2_norm(carrier, f);
  for (cplx& v : f) v /= norm;
  KaczmarzTrace trace = kaczmarz_run(carrier, f, o.terms);
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (int n = 0; n <= o.terms; ++n)
      rows.push_back({std::to_string(n), fmt17(trace.residual_norms[n])});
    emit_csv(o, "n,residual", rows);
    return 0;
  }
  ojson r = report_head("kaczmarz", o);
  r["rows"] = ojson::array();
  for (int n = 0; n <= o.terms; ++n)
    r["rows"].push_back({{"n", n},
                         {"residual", trace.residual_norms[n]},
                         {"coeffRe", trace.coefficients[n].real()},
                         {"coeffIm", trace.coefficients[n].imag()}});
  emit_json(o, r);
  return 0;
}

int cmd_clark(const CommonOpts& o, const std::vector<std::string>& zero_texts,
              const std::string& front_text, const std::string& alpha_text) {
  std::vector<cplx> zeros;
  for (const std::string& z : zero_texts) zeros.push_back(parse_cplx(z));
  BlaschkeProduct b = blaschke_product(zeros, parse_cplx(front_text));
  ClarkAtomSet clark = clark_measure(b, parse_cplx(alpha_text));
  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t j = 0; j < clark.measure.size(); ++j)
      rows.push_back(
          {fmt17(clark.measure.points[j].t), fmt17(clark.measure.weights[j])});
    emit_csv(o, "t,w", rows);
    return 0;
  }
  ojson r = report_head("clark", o);
  r["alpha"] = {{"re", clark.alpha.real()}, {"im", clark.alpha.imag()}};
  r["atoms"] = ojson::array();
  for (std::size_t j = 0; j < clark.measure.size(); ++j)
    r["atoms"].push_back(
        {{"t", clark.measure.points[j].t}, {"w", clark.measure.weights[j]}});
  r["certifiedResidual"] = clark.certified_residual;
  emit_json(o, r);
  return 0;
}

int cmd_kernel(const CommonOpts& o, const std::string& z_text,
               const std::string& w_text) {
  Measure mu = load(o);
  cplx z = parse_cplx(z_text);
  cplx w = parse_cplx(w_text);
  if (std::abs(z) >= 1.0 || std::abs(w) >= 1.0)
    throw std::invalid_argument("--z and --w must lie inside the open disc");
  AtomicMeasure carrier = carrier_atoms(mu);
  UCoefficients u = u_coefficients(Measure{carrier}, o.terms);
  GramMatrix gm = gram(carrier, u, o.terms);
  cplx series_value = kernel_double_series(gm, z, w);
  InnerFunction phi = InnerFunction::from_measure(Measure{carrier}, 512);
  cplx kernel_value = model_kernel(phi, z, w);
  double diff = std::abs(series_value - kernel_value);
  if (o.format == "csv") {
    emit_csv(o, "z_re,z_im,w_re,w_im,series_re,series_im,kernel_re,kernel_im,diff",
             {{fmt17(z.real()), fmt17(z.imag()), fmt17(w.real()), fmt17(w.imag()),
               fmt17(series_value.real()), fmt17(series_value.imag()),
               fmt17(kernel_value.real()), fmt17(kernel_value.imag()), fmt17(diff)}});
    return 0;
  }
  ojson r = report_head("kernel", o);
  r["z"] = {{"re", z.real()}, {"im", z.imag()}};
  r["w"] = {{"re", w.real()}, {"im", w.imag()}};
  r["doubleSeries"] = {{"re", series_value.real()}, {"im", series_value.imag()}};
  r["modelKernel"] = {{"re", kernel_value.real()}, {"im", kernel_value.imag()}};
  r["diff"] = diff;
  emit_json(o, r);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier frames for singular measures on the circle"};
  app.require_subcommand(1);

  CommonOpts coeffs_opts, phi_opts, verify_opts, frame_opts, kaczmarz_opts,
      clark_opts, kernel_opts;
  verify_opts.tol = 1e-6;  // boundary-limit tolerance; other checks are pinned

  CLI::App* coeffs = app.add_subcommand("coeffs", "Fourier coefficient table");
  add_common(coeffs, coeffs_opts, true);

  CLI::App* phi = app.add_subcommand(
      "phi", "inner-function Taylor coefficients and two-path agreement");
  add_common(phi, phi_opts, true);

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite");
  add_common(verify, verify_opts, true);
  std::vector<std::string> phi_zeros;
  std::string phi_front = "1,0";
  verify->add_option("--phi-zero", phi_zeros,
                     "zero RE,IM of a reference Blaschke product (repeatable)");
  verify->add_option("--phi-front", phi_front,
                     "unimodular front factor of the reference product");

  CLI::App* frame = app.add_subcommand("frame", "frame polynomial table");
  add_common(frame, frame_opts, true);

  CLI::App* kaczmarz = app.add_subcommand("kaczmarz", "iterative sweep residuals");
  add_common(kaczmarz, kaczmarz_opts, true);

  CLI::App* clark = app.add_subcommand("clark", "spectral measure of a Blaschke product");
  add_common(clark, clark_opts, false);
  std::vector<std::string> zero_texts;
  std::string front_text = "1,0";
  std::string alpha_text = "1,0";
  clark->add_option("--zero", zero_texts, "zero RE,IM (repeatable)")->required();
  clark->add_option("--front", front_text, "unimodular front factor RE,IM");
  clark->add_option("--alpha", alpha_text, "unimodular parameter RE,IM");

  CLI::App* kernel = app.add_subcommand("kernel", "double series vs model kernel");
  add_common(kernel, kernel_opts, true);
  std::string z_text = "0,0";
  std::string w_text = "0,0";
  kernel->add_option("--z", z_text, "first kernel argument RE,IM");
  kernel->add_option("--w", w_text, "second kernel argument RE,IM");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (coeffs->parsed()) {
      validate(coeffs_opts);
      return cmd_coeffs(coeffs_opts);
    }
    if (phi->parsed()) {
      validate(phi_opts);
      return cmd_phi(phi_opts);
    }
    if (verify->parsed()) {
      validate(verify_opts);
      return cmd_verify(verify_opts, phi_zeros, phi_front);
    }
    if (frame->parsed()) {
      validate(frame_opts);
      return cmd_frame(frame_opts);
    }
    if (kaczmarz->parsed()) {
      validate(kaczmarz_opts);
      return cmd_kaczmarz(kaczmarz_opts);
    }
    if (clark->parsed()) {
      validate(clark_opts);
      return cmd_clark(clark_opts, zero_texts, front_text, alpha_text);
    }
    if (kernel->parsed()) {
      validate(kernel_opts);
      return cmd_kernel(kernel_opts, z_text, w_text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
