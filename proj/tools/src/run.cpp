#include "rootforge_cli/run.hpp"

#include "rootforge/errors.hpp"
#include "rootforge/isolator.hpp"
#include "rootforge/oracle.hpp"
#include "rootforge/topology.hpp"
#include "rootforge_cli/parser.hpp"
#include "rootforge_cli/serialize.hpp"

namespace rootforge::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

IsolatorConfig isolator_config(const JobSpec& job) {
  IsolatorConfig cfg;
  if (job.b_max) cfg.b_max_cap = *job.b_max;
  cfg.prime_table_seed = job.seed;
  return cfg;
}

TopologyConfig topology_config(const JobSpec& job) {
  TopologyConfig cfg;
  cfg.seed = job.seed;
  if (job.shear) cfg.shear = BigInt(*job.shear);
  if (job.prime) cfg.prime = *job.prime;
  cfg.isolator = isolator_config(job);
  return cfg;
}

IntPoly2 as_bivariate(const ParsedPolynomial& p) {
  switch (p.kind) {
    case ParsedPolynomial::Kind::bivariate:
      return p.bivariate;
    case ParsedPolynomial::Kind::integer:
      return IntPoly2::from_x(p.univariate);
    case ParsedPolynomial::Kind::dyadic:
      break;
  }
  throw UsageError("curves need integer coefficients");
}

void emit(const JobSpec& job, std::ostream& out, const json& j, const std::string& text) {
  if (job.format == JobSpec::Format::json)
    out << j.dump(2) << "\n";
  else
    out << text << (j.contains("stats") ? "stats " + j["stats"].dump() + "\n" : "");
}

json stats_json(const OracleHandle& h) {
  OracleStats s = h.stats();
  return {{"oracle_queries", s.queries}, {"max_L", s.max_L}};
}

int run_univariate(const JobSpec& job, std::ostream& out) {
  if (job.inputs.size() != 1) throw UsageError("expected exactly one polynomial");
  ParsedPolynomial p = parse_polynomial(job.inputs[0]);
  if (p.kind == ParsedPolynomial::Kind::bivariate)
    throw UsageError("isolate and refine take a polynomial in x only");
  const bool refine_cmd = job.command == JobSpec::Command::refine;
  if (refine_cmd && !job.kappa) throw UsageError("refine needs --kappa");
  const IsolatorConfig cfg = isolator_config(job);

  OracleHandle h;
  RootResult r;
  if (p.kind == ParsedPolynomial::Kind::integer) {
    if (p.univariate.degree() < 1) throw UsageError("polynomial must have degree >= 1");
    h = OracleHandle::from_integer(p.univariate);
    if (job.k) {
      r = isolate(h, *job.k, cfg);
      if (refine_cmd) r = refine(h, r, *job.kappa, cfg);
    } else {
      r = isolate_integer(p.univariate, cfg);
      if (refine_cmd) r = refine_integer(p.univariate, r, *job.kappa, cfg);
    }
  } else {
    if (!job.k) throw UsageError("--k is required for non-integer coefficients");
    h = OracleHandle::from_dyadic(p.dyadic);
    r = isolate(h, *job.k, cfg);
    if (refine_cmd) r = refine(h, r, *job.kappa, cfg);
  }
  json j = root_result_to_json(r);
  if (job.stats) j["stats"] = stats_json(h);
  emit(job, out, j, root_result_to_text(r));
  return kOk;
}

int run_topology(const JobSpec& job, std::ostream& out) {
  if (job.inputs.size() != 1) throw UsageError("expected exactly one polynomial");
  Topology t = compute_topology(as_bivariate(parse_polynomial(job.inputs[0])), topology_config(job));
  json j = topology_to_json(t);
  if (job.stats) j["stats"] = {{"attempts", t.attempts}, {"K_plus", t.counts.K_plus}, {"K_minus", t.counts.K_minus}};
  emit(job, out, j, topology_to_text(t));
  return kOk;
}

int run_solve(const JobSpec& job, std::ostream& out) {
  if (job.inputs.size() != 2) throw UsageError("solve2 needs two polynomials");
  IntPoly2 g = as_bivariate(parse_polynomial(job.inputs[0]));
  IntPoly2 h = as_bivariate(parse_polynomial(job.inputs[1]));
  SolutionBoxes s = solve_system(g, h, topology_config(job));
  json j = solutions_to_json(s);
  if (job.stats) j["stats"] = {{"shear_s", s.shear_s.get_str()}, {"prime", s.prime}};
  emit(job, out, j, solutions_to_text(s));
  return kOk;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    switch (job.command) {
      case JobSpec::Command::isolate:
      case JobSpec::Command::refine:
        return run_univariate(job, out);
      case JobSpec::Command::topology:
        return run_topology(job, out);
      case JobSpec::Command::solve2:
        return run_solve(job, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const NonSquareFreeError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const PrecisionCapError& e) {
    err << "precision cap: " << e.what() << "\n";
    return kPrecisionCap;
  } catch (const NonCoprimeError& e) {
    err << "error: " << e.what() << "\n";
    return kNonCoprime;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace rootforge::cli
