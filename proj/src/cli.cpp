// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rtrop/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rtrop/error.hpp"
#include "rtrop/json_io.hpp"

namespace rtrop {

namespace {

using json_io::json;

struct Context {
  std::istream* in = nullptr;
  std::string convention = "mult";
  std::uint64_t cap = kDefaultCap;
};

// "-" reads stdin, an existing path reads the file, anything else is taken
// as an inline literal.
std::string load_text(const Context& ctx, const std::string& arg) {
  if (arg == "-") {
    std::ostringstream s;
    s << ctx.in->rdbuf();
    return s.str();
  }
  std::error_code ec;
  if (!arg.empty() && arg.front() != '[' && arg.front() != '{' && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream f(arg);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }
  return arg;
}

json load_json(const Context& ctx, const std::string& arg) {
  std::string text = load_text(ctx, arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON: " + std::string(e.what()), e.byte == 0 ? 0 : e.byte - 1);
  }
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

PVector puiseux_list(const Context& ctx, const std::string& arg) {
  std::string text = trim(load_text(ctx, arg));
  if (!text.empty() && text.front() == '[') return json_io::pvector_from_json(load_json(ctx, text));
  PVector v;
  for (const auto& item : split_commas(text)) v.push_back(PuiseuxPoly::parse(item));
  return v;
}

// Signed-valuation pairs, or Puiseux coordinates to be tropicalized.
RealTropProjPoint load_point(const Context& ctx, const std::string& arg) {
  std::string text = trim(load_text(ctx, arg));
  if (!text.empty() && text.front() == '[') {
    json j = load_json(ctx, text);
    if (!j.empty() && (j[0].is_array() || j[0].is_object())) {
      return RealTropProjPoint(json_io::rt_vector_from_json(j));
    }
    return trop_r_point(json_io::pvector_from_json(j));
  }
  if (text.find(':') != std::string::npos) return RealTropProjPoint::parse(text);
  return trop_r_point(puiseux_list(ctx, text));
}

std::string display(const Context& ctx, const RealTropVal& x) {
  return ctx.convention == "val" ? x.str() : multiplicative_display(x);
}

json display(const Context& ctx, const RTVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(display(ctx, x));
  return a;
}

json point_json(const Context& ctx, const RealTropProjPoint& p) {
  return {{"point", json_io::to_pairs(p.coords())}, {"display", display(ctx, p.coords())}};
}

DiagonalSignedSeminorm as_diagonal(const SeminormExpr& s) {
  if (s.is_leaf() && s.as_leaf().is_trivially_valued()) return s.as_leaf();
  return diagonalize(s);
}

json cmd_circuits(const Context& ctx, const std::string& matrix) {
  auto circuits = circuits_from_matrix(json_io::matrix_from_json(load_json(ctx, matrix)));
  json c = json::array(), d = json::array();
  for (const auto& v : circuits) {
    c.push_back(json_io::to_pairs(v));
    d.push_back(display(ctx, v));
  }
  return {{"circuits", c}, {"display", d}};
}

json cmd_gp_check(const Context& ctx, const std::string& input, const std::string& hyperfield) {
  json j = load_json(ctx, input);
  json out;
  std::optional<GrassmannPluecker> phi;
  if (j.is_array()) {
    phi = gp_from_matrix(json_io::matrix_from_json(j), hyperfield_from_string(hyperfield), ctx.cap);
    out["gp"] = json_io::to_json(*phi);
  } else {
    phi = json_io::gp_from_json(j);
  }
  GpReport r = check_gp_relations(*phi, ctx.cap);
  out["ok"] = r.ok;
  out["relations_checked"] = r.relations_checked;
  out["violation"] = r.ok ? json(nullptr) : json{{"x", r.x}, {"y", r.y}};
  return out;
}

json cmd_covectors(const Context& ctx, const std::string& matrix) {
  PMatrix m = json_io::matrix_from_json(load_json(ctx, matrix));
  auto phi = gp_from_matrix(m, Hyperfield::real_tropical, ctx.cap);
  auto cocircuits = signed_cocircuits(phi, ctx.cap);
  auto poset = covector_closure(m.cols(), cocircuits, static_cast<std::size_t>(ctx.cap));
  auto report = check_covector_axioms(poset);
  json cc = json::array();
  for (const auto& x : cocircuits) cc.push_back(sign_string(x));
  return {{"cocircuits", cc},
          {"covectors", json_io::to_json(poset)},
          {"axioms", {{"ok", report.ok}, {"violations", report.violations}}}};
}

json cmd_bergman(const Context& ctx, const std::string& matrix) {
  PMatrix m = json_io::matrix_from_json(load_json(ctx, matrix));
  auto phi = gp_from_matrix(m, Hyperfield::real_tropical, ctx.cap);
  auto poset = covector_closure(m.cols(), signed_cocircuits(phi, ctx.cap), static_cast<std::size_t>(ctx.cap));
  return json_io::to_json(bergman_fan(poset));
}

json cmd_limit(const Context& ctx, const std::string& family, const std::string& probes) {
  auto fam = json_io::family_from_json(load_json(ctx, family));
  if (probes.empty()) {
    check_family(fam);
    return {{"consistent", true}, {"members", fam.members.size()}};
  }
  std::vector<PVector> ps;
  for (const auto& p : load_json(ctx, probes)) ps.push_back(json_io::pvector_from_json(p));
  json values = json::array();
  for (const auto& pv : reconstruct_from_family(fam, ps)) {
    values.push_back({{"probe", json_io::to_json(pv.probe)},
                      {"value", json_io::to_json(pv.value)},
                      {"display", display(ctx, pv.value)}});
  }
  return {{"consistent", true}, {"members", fam.members.size()}, {"values", values}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.in = &in;
  std::string output;
  std::function<json()> action;

  CLI::App app{"Exact computations in real tropical geometry", "rtrop"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--convention", ctx.convention, "display convention")->check(CLI::IsMember({"mult", "val"}));
  app.add_option("--cap", ctx.cap, "enumeration bound")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "output path (default stdout)");

  std::string a1, a2, hyperfield = "RT", probes;

  auto* circuits = app.add_subcommand("circuits", "signed valuated circuits of a matrix");
  circuits->add_option("matrix", a1)->required();
  circuits->callback([&] { action = [&] { return cmd_circuits(ctx, a1); }; });

  auto* gp = app.add_subcommand("gp-check", "check the Grassmann-Pluecker relations");
  gp->add_option("input", a1, "GP JSON or matrix")->required();
  gp->add_option("--hyperfield", hyperfield, "target hyperfield for matrix input")
      ->check(CLI::IsMember({"K", "S", "T", "RT"}));
  gp->callback([&] { action = [&] { return cmd_gp_check(ctx, a1, hyperfield); }; });

  auto* trop = app.add_subcommand("tropicalize", "signed valuation of a Puiseux point");
  trop->add_option("point", a1)->required();
  trop->callback([&] { action = [&] { return point_json(ctx, trop_r_point(puiseux_list(ctx, a1))); }; });

  auto* member = app.add_subcommand("member", "membership in a real tropical linear space");
  member->add_option("point", a1)->required();
  member->add_option("matrix", a2)->required();
  member->callback([&] {
    action = [&] {
      RealTropProjPoint y = load_point(ctx, a1);
      LinearEmbedding iota(json_io::matrix_from_json(load_json(ctx, a2)));
      return json{{"member", linear_space_member(y, iota)}};
    };
  });

  auto* cov = app.add_subcommand("covectors", "covector poset of a matrix");
  cov->add_option("matrix", a1)->required();
  cov->callback([&] { action = [&] { return cmd_covectors(ctx, a1); }; });

  auto* berg = app.add_subcommand("bergman", "real Bergman fan of a matrix");
  berg->add_option("matrix", a1)->required();
  berg->callback([&] { action = [&] { return cmd_bergman(ctx, a1); }; });

  auto* semi = app.add_subcommand("seminorm", "signed seminorms");
  semi->require_subcommand(1);
  auto* s_eval = semi->add_subcommand("eval", "evaluate on a vector");
  s_eval->add_option("seminorm", a1)->required();
  s_eval->add_option("vector", a2)->required();
  s_eval->callback([&] {
    action = [&] {
      RealTropVal v = json_io::seminorm_from_json(load_json(ctx, a1)).eval(puiseux_list(ctx, a2));
      return json{{"value", json_io::to_json(v)}, {"display", display(ctx, v)}};
    };
  });
  auto* s_comp = semi->add_subcommand("compose", "left-biased composition");
  s_comp->add_option("left", a1)->required();
  s_comp->add_option("right", a2)->required();
  s_comp->callback([&] {
    action = [&] {
      return json_io::to_json(SeminormExpr::compose(json_io::seminorm_from_json(load_json(ctx, a1)),
                                                    json_io::seminorm_from_json(load_json(ctx, a2))));
    };
  });
  auto* s_diag = semi->add_subcommand("diagonalize", "diagonal form of a composition");
  s_diag->add_option("seminorm", a1)->required();
  s_diag->callback([&] {
    action = [&] { return json_io::to_json(diagonalize(json_io::seminorm_from_json(load_json(ctx, a1)))); };
  });
  auto* s_flags = semi->add_subcommand("flags", "signed flag of a seminorm");
  s_flags->add_option("seminorm", a1)->required();
  s_flags->callback([&] {
    action = [&] {
      return json_io::to_json(flag_from_seminorm(as_diagonal(json_io::seminorm_from_json(load_json(ctx, a1)))));
    };
  });
  auto* s_phi = semi->add_subcommand("phi", "unsigned flag and fiber size");
  s_phi->add_option("seminorm", a1)->required();
  s_phi->callback([&] {
    action = [&] {
      UnsignedFlag f =
          phi_flag(flag_from_seminorm(as_diagonal(json_io::seminorm_from_json(load_json(ctx, a1)))));
      json fiber = f.is_complete() ? json(phi_fiber(f).size()) : json(nullptr);
      return json{{"flag", json_io::to_json(f)}, {"complete", f.is_complete()}, {"fiber_size", fiber}};
    };
  });
  auto* s_proj = semi->add_subcommand("project", "point of the embedded space");
  s_proj->add_option("seminorm", a1)->required();
  s_proj->add_option("matrix", a2)->required();
  s_proj->callback([&] {
    action = [&] {
      LinearEmbedding iota(json_io::matrix_from_json(load_json(ctx, a2)));
      return point_json(ctx, project_pi(json_io::seminorm_from_json(load_json(ctx, a1)), iota));
    };
  });

  auto* limit = app.add_subcommand("limit", "compatible families");
  limit->require_subcommand(1);
  auto* l_check = limit->add_subcommand("check", "check a family, optionally reading off probe values");
  l_check->add_option("family", a1)->required();
  l_check->add_option("--probes", probes, "JSON array of functionals");
  l_check->callback([&] { action = [&] { return cmd_limit(ctx, a1, probes); }; });

  auto* fixture = app.add_subcommand("fixture", "test fixtures");
  fixture->require_subcommand(1);
  auto* nondiag = fixture->add_subcommand("nondiag", "sign of the non-diagonalizable seminorm");
  nondiag->add_option("x", a1)->required();
  nondiag->add_option("y", a2)->required();
  nondiag->callback([&] {
    action = [&] {
      Sign s = nondiag_fixture(PuiseuxPoly::parse(trim(load_text(ctx, a1))),
                               PuiseuxPoly::parse(trim(load_text(ctx, a2))));
      return json{{"sign", std::string(1, to_char(s))}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "rtrop: " << e.what() << "\n";
    return 2;
  }

  json result;
  int status = 0;
  try {
    result = action();
  } catch (const ParseError& e) {
    result = {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}, {"position", e.position()}}}};
    status = 1;
  } catch (const Error& e) {
    result = {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
    status = 1;
  } catch (const json::exception& e) {
    result = {{"error", {{"kind", "syntax"}, {"message", e.what()}}}};
    status = 1;
  }

  std::string text = result.dump() + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "rtrop: cannot write " << output << "\n";
      return 2;
    }
    f << text;
  }
  return status;
}

}  // namespace rtrop
