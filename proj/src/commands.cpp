#include "kronmod/commands.hpp"

#include <functional>

#include "kronmod/campaign.hpp"

namespace kronmod {

namespace {

Field resolve_field(const json& input, const CommandOptions& options) {
  if (input.is_object() && input.contains("field")) {
    const json& spec = input.at("field");
    if (!spec.is_string()) throw std::invalid_argument("\"field\" must be a string");
    Field doc = Field::parse(spec.get<std::string>());
    if (options.field && *options.field != doc) {
      throw std::invalid_argument("--field " + options.field->name() + " conflicts with document field " +
                                  doc.name());
    }
    return doc;
  }
  return options.field.value_or(Field::rational());
}

// The payload under `key` when the input is a wrapping document, else the
// input itself minus its "field" header.
json payload(const json& input, const char* key) {
  if (!input.is_object()) return input;
  if (input.contains(key)) return input.at(key);
  json bare = input;
  bare.erase("field");
  return bare;
}

json header(const Field& f) { return {{"field", f.name()}}; }

using Handler = std::function<CommandResult(const json&, const Field&, const CommandOptions&)>;

CommandResult cmd_inv(const json& input, const Field& f, const CommandOptions&) {
  KModule phi = parse_module(payload(input, "module"), f);
  QuadForm det = det_semiinvariant(phi);
  Scalar e = epsilon(phi), r = rho(phi);
  json out = header(f);
  out["det"] = to_json(det);
  out["det_text"] = det.to_string();
  out["e"] = to_json(e_semiinvariant(phi));
  out["epsilon"] = to_json(e);
  out["rho"] = to_json(r);
  out["res"] = to_json(resultant(det));
  out["epsilon_squared_equals_rho"] = e * e == r;
  return {kExitOk, out, {}};
}

CommandResult cmd_stab(const json& input, const Field& f, const CommandOptions&) {
  KModule phi = parse_module(payload(input, "module"), f);
  StabilityVerdict oracle = king_oracle(phi);
  json out = header(f);
  out["semistable"] = is_semistable(phi);
  out["stable"] = is_stable(phi);
  out["witness"] = oracle.witness ? to_json(*oracle.witness) : json(nullptr);
  out["oracle_agrees"] = oracle.semistable == is_semistable(phi) && oracle.stable == is_stable(phi);
  return {out["oracle_agrees"].get<bool>() ? kExitOk : kExitViolation, out, {}};
}

CommandResult cmd_nf(const json& input, const Field& f, const CommandOptions& options) {
  KModule phi = parse_module(payload(input, "module"), f);
  NormalForm nf = normal_form(phi, {options.seed, 10'000});
  KModule m = nf.module();
  json out = header(f);
  out["normal_form"] = to_json(nf);
  out["module"] = to_json(m);
  out["epsilon"] = to_json(epsilon(m));
  out["rho"] = to_json(rho(m));
  out["replay_ok"] = nf.replay(phi) == m;
  return {kExitOk, out, {}};
}

CommandResult cmd_eta(const json& input, const Field& f, const CommandOptions& options) {
  json out = header(f);
  if (options.inverse) {
    WPoint point = parse_wpoint(payload(input, "point"), f);
    KModule phi = eta_inverse(point, {options.seed, 10'000});
    out["module"] = to_json(phi);
    out["point"] = to_json(eta(phi));
    return {kExitOk, out, {}};
  }
  WPoint point = eta(parse_module(payload(input, "module"), f));
  out["point"] = to_json(point);
  out["on_hypersurface"] = on_hypersurface(point);
  return {kExitOk, out, {}};
}

CommandResult cmd_fiber(const json& input, const Field& f, const CommandOptions&) {
  QuadForm q = parse_quad_form(payload(input, "q"), f);
  Fiber fiber = det_fiber(q);
  json out = header(f);
  out["q"] = to_json(q);
  out["res"] = to_json(resultant(q));
  out.update(to_json(fiber));
  if (fiber.needs_extension) {
    out["error"] = "needs_extension";
    out["message"] = "res(q) = " + resultant(q).to_string() + " is not a square in " + f.name();
    return {kExitNeedsExtension, out, {}};
  }
  return {kExitOk, out, {}};
}

CommandResult cmd_beta(const json& input, const Field& f, const CommandOptions&) {
  BigPsi psi = parse_psi(payload(input, "psi"), f);
  json out = header(f);
  out["region"] = region_name(classify(psi));
  KModule m = beta_matrix(psi);
  out["matrix"] = to_json(m);
  out["point"] = to_json(eta(m));
  return {kExitOk, out, {}};
}

CommandResult cmd_alpha(const json& input, const Field& f, const CommandOptions&) {
  BigPsi psi = parse_psi(payload(input, "psi"), f);
  KModule a = alpha(psi);
  PsiReduction red = reduce_psi(psi);
  json out = header(f);
  out["region"] = region_name(classify(psi));
  out["alpha"] = to_json(a);
  out["injective_on_quadric"] = is_injective_on_quadric(a);
  out["reduction"] = {{"g", to_json(red.gh.g())}, {"h", to_json(red.gh.h())}, {"reduced", to_json(red.reduced)}};
  return {kExitOk, out, {}};
}

CommandResult cmd_classify(const json& input, const Field& f, const CommandOptions&) {
  Region r = classify(parse_psi(payload(input, "psi"), f));
  json out = header(f);
  out["region"] = region_name(r);
  if (r == Region::Invalid) {
    out["error"] = "invalid_input";
    out["message"] = "psi lies in none of W0, W1, W2";
    return {kExitInvalid, out, {}};
  }
  return {kExitOk, out, {}};
}

CommandResult cmd_snake(const json& input, const Field& f, const CommandOptions&) {
  SnakeReport report = verify_snake(parse_psi(payload(input, "psi"), f));
  json out = header(f);
  out.update(to_json(report));
  return {report.ok() ? kExitOk : kExitViolation, out, {}};
}

CommandResult cmd_check(const json&, const Field& f, const CommandOptions& options) {
  CampaignConfig config{f, options.seed, options.trials, options.suite, options.workers};
  CampaignReport report = run_campaign(config);
  CommandResult result{report.violations() ? kExitViolation : kExitOk, report.summary(), {}};
  for (const auto& s : report.suites)
    for (const auto& d : s.details) result.lines.push_back(d);
  return result;
}

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> all = {
      {"inv", cmd_inv},     {"stab", cmd_stab},         {"nf", cmd_nf},       {"eta", cmd_eta},
      {"fiber", cmd_fiber}, {"beta", cmd_beta},         {"alpha", cmd_alpha}, {"classify", cmd_classify},
      {"snake", cmd_snake}, {"check", cmd_check},
  };
  return all;
}

CommandResult error(int code, const char* kind, const std::string& message) {
  return {code, {{"error", kind}, {"message", message}}, {}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_command(const std::string& name, const json& input, const CommandOptions& options) {
  for (const auto& [command, handler] : handlers()) {
    if (command != name) continue;
    try {
      return handler(input, resolve_field(input, options), options);
    } catch (const NeedsExtension& e) {
      return error(kExitNeedsExtension, "needs_extension", e.what());
    } catch (const std::invalid_argument& e) {
      return error(kExitInvalid, "invalid_input", e.what());
    } catch (const std::domain_error& e) {
      return error(kExitInvalid, "invalid_input", e.what());
    } catch (const json::exception& e) {
      return error(kExitInvalid, "invalid_input", e.what());
    } catch (const std::exception& e) {
      return error(kExitViolation, "internal", e.what());
    }
  }
  return error(kExitInvalid, "invalid_input", "unknown command \"" + name + "\"");
}

}  // namespace kronmod
