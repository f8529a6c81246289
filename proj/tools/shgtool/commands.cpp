#include "shgtool/commands.hpp"

#include <ostream>

#include "shg/actions.hpp"
#include "shg/amenability.hpp"
#include "shg/constructors.hpp"
#include "shg/errors.hpp"
#include "shg/iteration.hpp"
#include "shg/rational.hpp"

namespace shgtool {

using shg::Index;
using shg::Rational;
using shg::Semihypergroup;

namespace {

int finish(Report& r, int code, const Stopwatch& clock, const CommonOptions& opt,
           std::ostream& out) {
  r.doc["exit_code"] = code;
  if (opt.timing) r.set_timing(clock.elapsed_ms());
  r.write(out, opt.format);
  return code;
}

std::string triple_label(const shg::PointSpace& sp, const shg::Triple& t) {
  return "(" + sp.label(t.x) + ", " + sp.label(t.y) + ", " + sp.label(t.z) + ")";
}

json triple_json(const shg::PointSpace& sp, const shg::Triple& t) {
  return json::array({sp.label(t.x), sp.label(t.y), sp.label(t.z)});
}

// Shared by check and construct, so a constructed file and its re-check
// produce the same report.
bool verification_report(Report& r, Semihypergroup& k) {
  const auto summary = shg::verify(k);
  const auto& sp = k.space();
  r.doc["structure"] = k.name();
  r.doc["points"] = sp.labels();
  r.line("structure", k.name());
  r.line("points", [&] {
    std::string s;
    for (const auto& l : sp.labels()) s += (s.empty() ? "" : ", ") + l;
    return s;
  }());

  json prob = {{"passed", summary.probability.passed}, {"violations", json::array()}};
  r.line("probability", summary.probability.passed ? "pass" : "fail");
  for (const auto& v : summary.probability.violations) {
    prob["violations"].push_back(
        {{"x", sp.label(v.x)}, {"y", sp.label(v.y)}, {"reason", v.reason}});
    r.line("violation", "(" + sp.label(v.x) + ", " + sp.label(v.y) + ") " + v.reason);
  }
  r.doc["probability"] = std::move(prob);

  const auto& assoc = summary.associativity;
  json aj = {{"passed", assoc.passed}};
  if (assoc.witness) {
    aj["witness"] = triple_json(sp, *assoc.witness);
    aj["lhs"] = measure_to_json(assoc.lhs, sp);
    aj["rhs"] = measure_to_json(assoc.rhs, sp);
    r.line("associativity", "fail at " + triple_label(sp, *assoc.witness));
    r.line("(p_x*p_y)*p_z", format_measure(assoc.lhs, sp));
    r.line("p_x*(p_y*p_z)", format_measure(assoc.rhs, sp));
  } else {
    r.line("associativity", "pass");
  }
  r.doc["associativity"] = std::move(aj);

  r.doc["identity"] = summary.identity ? json(sp.label(*summary.identity)) : json(nullptr);
  r.line("identity", summary.identity ? sp.label(*summary.identity) : "none");
  r.doc["commutative"] = summary.commutative;
  r.line("commutative", summary.commutative ? "true" : "false");
  r.doc["verdict"] = summary.passed() ? "pass" : "fail";
  r.line("verdict", summary.passed() ? "pass" : "fail");
  return summary.passed();
}

Semihypergroup load_structure(const std::filesystem::path& path) {
  return structure_from_json(read_json(path));
}

// Loads and verifies; lim and fixpoint refuse structures that fail the axioms.
Semihypergroup load_verified(const std::filesystem::path& path) {
  Semihypergroup k = load_structure(path);
  if (!shg::verify(k).passed())
    throw InputError("'" + path.string() + "' fails the semihypergroup axioms (see check)");
  return k;
}

Index index_of(const shg::PointSpace& sp, const std::string& label) {
  auto i = sp.find(label);
  if (!i) throw InputError("unknown point label '" + label + "'");
  return *i;
}

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const shg::UnknownLabel& e) {
    err << "error: " << e.what() << "\n";
  } catch (const shg::DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return input_error;
}

}  // namespace

std::vector<std::string> split_labels(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : list) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------

int cmd_check(const std::filesystem::path& structure, const CommonOptions& opt, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    Stopwatch clock;
    Semihypergroup k = load_structure(structure);
    Report r;
    const bool passed = verification_report(r, k);
    return finish(r, passed ? ok : negative, clock, opt, out);
  });
}

// ---------------------------------------------------------------------------

int cmd_lim(const std::filesystem::path& structure, const LimOptions& lim,
            const CommonOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Stopwatch clock;
    const Semihypergroup k = load_verified(structure);
    const auto& sp = k.space();
    const Index base = lim.base ? index_of(sp, *lim.base) : 0;

    Report r;
    r.doc["structure"] = k.name();
    r.line("structure", k.name());
    const char* method = lim.method == LimMethod::direct ? "direct"
                         : lim.method == LimMethod::dual ? "dual"
                                                         : "both";
    r.doc["method"] = method;
    r.line("method", method);

    std::optional<shg::Mean> direct, dual;
    bool direct_ok = true, dual_ok = true;

    if (lim.method != LimMethod::dual) {
      const auto s = shg::search_invariant_mean(k);
      direct = s.mean;
      json j = {{"mean", nullptr}};
      if (direct) {
        direct_ok = shg::verify_LIM(*direct, k).passed;
        j["mean"] = vector_to_json(direct->weights().weights());
        j["verified"] = direct_ok;
        r.line("direct", join_rationals(direct->weights().weights()));
      } else {
        j["certificate"] = vector_to_json(s.lp.certificate);
        r.line("direct", "none");
        r.line("direct certificate", join_rationals(s.lp.certificate));
      }
      r.doc["direct"] = std::move(j);
    }

    if (lim.method != LimMethod::direct) {
      const auto s = shg::search_lim_via_dual_action(k, base);
      dual = s.mean;
      json j = {{"mean", nullptr}, {"base", sp.label(base)}, {"consistent", s.consistent}};
      if (dual) {
        dual_ok = shg::verify_LIM(*dual, k).passed;
        j["mean"] = vector_to_json(dual->weights().weights());
        j["verified"] = dual_ok;
        r.line("dual", join_rationals(dual->weights().weights()));
      } else if (!s.consistent) {
        r.line("dual", "none (no trace-zero fixed point)");
      } else {
        j["certificate"] = vector_to_json(s.lp.certificate);
        r.line("dual", "none (fixed points miss the positive cone)");
        r.line("dual certificate", join_rationals(s.lp.certificate));
      }
      r.doc["dual"] = std::move(j);
    }

    const auto& found = lim.method == LimMethod::dual ? dual : direct;
    if (lim.method == LimMethod::both) {
      const bool agree = direct.has_value() == dual.has_value() && direct_ok && dual_ok;
      r.doc["agree"] = agree;
      r.line("oracles agree", agree ? "true" : "false");
      if (!agree) {
        r.doc["verdict"] = "oracles disagree";
        r.line("verdict", "oracles disagree");
        return finish(r, oracle_disagreement, clock, opt, out);
      }
    }
    if (found && !(direct_ok && dual_ok)) {
      r.doc["verdict"] = "witness failed verification";
      r.line("verdict", "witness failed verification");
      return finish(r, oracle_disagreement, clock, opt, out);
    }
    r.doc["mean"] = found ? vector_to_json(found->weights().weights()) : json(nullptr);
    r.line("mean", found ? join_rationals(found->weights().weights()) : "none");
    r.doc["verdict"] = found ? "left-invariant mean exists" : "no left-invariant mean";
    r.line("verdict", found ? "left-invariant mean exists" : "no left-invariant mean");
    return finish(r, found ? ok : negative, clock, opt, out);
  });
}

// ---------------------------------------------------------------------------

namespace {

json optional_rational(const std::optional<Rational>& q) {
  return q ? rational_to_json(*q) : json("unbounded");
}

std::string optional_text(const std::optional<Rational>& q) {
  return q ? shg::to_string(*q) : "unbounded";
}

void norm_section(Report& r, const shg::AffineAction& act) {
  const std::size_t d = act.dimension();
  const std::pair<const char*, shg::Seminorm> norms[] = {{"l1", shg::Seminorm::l1(d)},
                                                         {"linf", shg::Seminorm::linf(d)}};
  const auto bound = shg::equicontinuity_bound(act, shg::SeminormSpec::standard(d));
  json nj = json::object();
  for (const auto& [name, p] : norms) {
    const shg::SeminormSpec spec{{p}};
    const auto rep = shg::check_nonexpansive(act, spec);
    json restricted = json::array(), ambient = json::array();
    std::string rt, at;
    for (const auto& e : rep.norms) {
      restricted.push_back(optional_rational(e.restricted));
      ambient.push_back(optional_rational(e.ambient));
      rt += (rt.empty() ? "" : ", ") + optional_text(e.restricted);
      at += (at.empty() ? "" : ", ") + optional_text(e.ambient);
    }
    nj[name] = {{"restricted", std::move(restricted)},
                {"ambient", std::move(ambient)},
                {"nonexpansive", rep.passed}};
    r.line(std::string(name) + " operator norms on span(C-C)", rt);
    r.line(std::string(name) + " operator norms on the ambient space", at);
    r.line(std::string("nonexpansive ") + name, rep.passed ? "true" : "false");
  }
  r.doc["norms"] = std::move(nj);
  r.doc["equicontinuity_bound"] = optional_rational(bound);
  r.line("equicontinuity bound", optional_text(bound));
}

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (double x : v) out += (out.empty() ? "" : ", ") + format_double(x);
  return out;
}

}  // namespace

int cmd_fixpoint(const std::filesystem::path& structure, const std::filesystem::path& action,
                 const FixpointOptions& fp, const CommonOptions& opt, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    Stopwatch clock;
    const Semihypergroup k = load_verified(structure);
    auto data = action_from_json(read_json(action), k);
    shg::AffineAction act(k, std::move(data.carrier), std::move(data.maps));
    const auto& sp = k.space();

    Report r;
    r.doc["structure"] = k.name();
    r.line("structure", k.name());
    const bool simplex = act.carrier().kind() == shg::ConvexCarrier::Kind::simplex;
    r.doc["carrier"] = {{"kind", simplex ? "simplex" : "hull"}, {"dimension", act.dimension()}};
    r.line("carrier", std::string(simplex ? "simplex" : "hull") + ", dimension " +
                          std::to_string(act.dimension()));

    const auto v = shg::verify(act);
    json aj = {{"passed", v.axiom.passed}};
    if (v.axiom.passed) {
      r.line("action axiom", "pass");
    } else {
      const auto [s, t] = *v.axiom.witness;
      aj["witness"] = json::array({sp.label(s), sp.label(t)});
      aj["reason"] = v.axiom.reason;
      r.line("action axiom", "fail at (" + sp.label(s) + ", " + sp.label(t) + "): " + v.axiom.reason);
    }
    r.doc["action_axiom"] = std::move(aj);
    json ij = {{"passed", v.invariance.passed}};
    if (v.invariance.passed) {
      r.line("carrier invariance", "pass");
    } else {
      ij["s"] = sp.label(*v.invariance.s);
      ij["generator"] = *v.invariance.generator;
      ij["image"] = vector_to_json(v.invariance.image);
      r.line("carrier invariance", "fail: T_" + sp.label(*v.invariance.s) + " maps generator " +
                                       std::to_string(*v.invariance.generator) + " to " +
                                       join_rationals(v.invariance.image));
    }
    r.doc["carrier_invariance"] = std::move(ij);

    if (!v.passed()) {
      const char* detail = v.axiom.passed ? "carrier not invariant" : "action identity fails";
      r.doc["reason"] = "not an action";
      r.doc["detail"] = detail;
      r.doc["verdict"] = "not an action";
      r.line("reason", std::string("not an action (") + detail + ")");
      r.line("verdict", "not an action");
      return finish(r, negative, clock, opt, out);
    }

    norm_section(r, act);

    if (!fp.iterate) {
      r.doc["mode"] = "exact";
      r.line("mode", "exact");
      const auto s = shg::search_common_fixed_point(act);
      if (s.point) {
        r.doc["point"] = vector_to_json(*s.point);
        r.line("point", join_rationals(*s.point));
        r.doc["verdict"] = "common fixed point exists";
        r.line("verdict", "common fixed point exists");
        return finish(r, ok, clock, opt, out);
      }
      r.doc["point"] = nullptr;
      r.doc["certificate"] = vector_to_json(s.lp.certificate);
      r.line("point", "none");
      r.line("certificate", join_rationals(s.lp.certificate));
      r.doc["verdict"] = "no common fixed point";
      r.line("verdict", "no common fixed point");
      return finish(r, negative, clock, opt, out);
    }

    if (!(fp.tol > 0)) throw InputError("--iterate: tolerance must be positive");
    r.doc["mode"] = "iterate";
    r.line("mode", "iterate");
    r.doc["tolerance"] = fp.tol;
    r.doc["max_iterations"] = fp.max_iter;
    r.line("tolerance", format_double(fp.tol));
    r.line("max iterations", std::to_string(fp.max_iter));
    const auto it = shg::iterate_fixed_point(act, fp.tol, fp.max_iter);
    r.doc["converged"] = it.converged;
    r.doc["iterations"] = it.iterations;
    r.doc["residual"] = it.residual;
    r.doc["point"] = it.point;
    r.line("converged", it.converged ? "true" : "false");
    r.line("iterations", std::to_string(it.iterations));
    r.line("residual", format_double(it.residual));
    r.line("point", join_doubles(it.point));
    r.doc["verdict"] = it.converged ? "converged" : "did not converge";
    r.line("verdict", it.converged ? "converged" : "did not converge");
    return finish(r, it.converged ? ok : negative, clock, opt, out);
  });
}

// ---------------------------------------------------------------------------

namespace {

Semihypergroup build(const ConstructInputs& in) {
  auto need = [&](const std::optional<std::filesystem::path>& p, const char* flag) {
    if (!p) throw InputError("construct " + in.kind + ": " + flag + " is required");
    return *p;
  };
  if (in.kind == "semigroup") {
    return shg::from_semigroup(cayley_from_json(read_json(need(in.table, "--table"))),
                               in.name.value_or("semigroup"));
  }
  if (in.kind == "triple") {
    if (in.parameters.size() != 8)
      throw InputError("construct triple: expected 8 parameters x1 x2 x3 y1 y2 y3 z1 z2");
    shg::Vector q;
    for (const auto& s : in.parameters) {
      try {
        q.push_back(shg::parse_rational(s));
      } catch (const std::invalid_argument& e) {
        throw InputError("construct triple: " + std::string(e.what()));
      }
    }
    return shg::triple_hypergroup({q[0], q[1], q[2], q[3], q[4], q[5], q[6], q[7]},
                                  in.name.value_or("T3"));
  }
  if (in.kind == "coset" || in.kind == "doublecoset") {
    const auto g = cayley_from_json(read_json(need(in.group, "--group")));
    if (in.subgroup.empty()) throw InputError("construct " + in.kind + ": --subgroup is required");
    const auto h = shg::subgroup_from_labels(g, in.subgroup);
    return in.kind == "coset" ? shg::coset_space(g, h, in.name.value_or("G/H"))
                              : shg::double_coset_space(g, h, in.name.value_or("G//H"));
  }
  if (in.kind == "orbit") {
    shg::GroupAction a{cayley_from_json(read_json(need(in.acting, "--acting"))),
                       cayley_from_json(read_json(need(in.group, "--group"))),
                       act_table_from_json(read_json(need(in.act, "--act")))};
    return shg::orbit_space(a, in.name.value_or("G^H"));
  }
  throw InputError("unknown construction '" + in.kind + "'");
}

}  // namespace

int cmd_construct(const ConstructInputs& in, const CommonOptions& opt, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    Stopwatch clock;
    std::optional<Semihypergroup> k;
    try {
      k.emplace(build(in));
    } catch (const shg::InvalidStructure& e) {
      Report r;
      r.doc["kind"] = in.kind;
      r.line("kind", in.kind);
      json violated = json::array();
      if (const auto* t = dynamic_cast<const shg::TripleConstraintError*>(&e)) {
        for (const auto& v : t->violated()) {
          violated.push_back(v);
          r.line("violated", v);
        }
        if (t->associativity() && !t->associativity()->passed) {
          const shg::PointSpace sp({"e", "a", "b"});
          r.doc["associativity"] = {{"passed", false},
                                    {"witness", triple_json(sp, *t->associativity()->witness)}};
          r.line("associativity", "fail at " + triple_label(sp, *t->associativity()->witness));
        }
      }
      r.doc["violated"] = std::move(violated);
      r.doc["reason"] = e.what();
      r.line("reason", e.what());
      r.doc["verdict"] = "rejected";
      r.line("verdict", "rejected");
      return finish(r, negative, clock, opt, out);
    }

    write_text(in.out, dump(structure_to_json(*k)));
    // Report on the file as written, so construct and a later check agree.
    Semihypergroup written = load_structure(in.out);
    Report r;
    const bool passed = verification_report(r, written);
    return finish(r, passed ? ok : negative, clock, opt, out);
  });
}

}  // namespace shgtool
