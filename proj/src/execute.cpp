#include "sphereforge/execute.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "sphereforge/families.hpp"

namespace sphereforge {

namespace {

using nlohmann::json;

struct Env {
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, AffineScheme> schemes;
  std::map<std::string, CompleteIntersectionCenter> centers;
  std::map<std::string, ResolutionChange> matrices;
  std::map<std::string, RegularMap> maps;
  std::map<std::string, IsomorphismCertificate> certs;
  std::map<std::string, BundleTotalSpace> spaces;
  std::map<std::string, DiagonalFamily> families;
  RingPtr active_ring;
};

json poly_list_json(const std::vector<Polynomial>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

std::string ring_decl_text(const std::string& name, const RingPtr& ring) {
  std::string s = "ring " + name + " = Q[";
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (i) s += ", ";
    s += ring->variables()[i];
  }
  return s + "];\n";
}

std::string gens_text(const Ideal& ideal) {
  if (ideal.generators().empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i) s += ", ";
    s += ideal.generators()[i].str();
  }
  return s;
}

class Executor {
 public:
  Executor(const Script& script, const ExecOptions& options)
      : script_(script), options_(options) {
    budget_.max_pair_reductions = options.gb_steps;
    budget_.timeout = std::chrono::milliseconds(
        static_cast<std::int64_t>(options.timeout_seconds * 1000.0));
  }

  Report run() {
    for (std::size_t i = 0; i < script_.statements.size(); ++i) {
      const auto& st = script_.statements[i];
      CommandEntry entry;
      entry.index = i + 1;
      {
        Script one;
        one.statements.push_back(st);
        std::string printed = pretty_print(one);
        // strip trailing ";\n"
        entry.command = printed.substr(0, printed.size() - 2);
      }
      auto steps = std::make_shared<std::atomic<std::uint64_t>>(0);
      budget_.used_steps = steps;
      auto t0 = std::chrono::steady_clock::now();
      try {
        std::visit([&](const auto& node) { dispatch(node, entry); }, st.node);
      } catch (const BudgetExceeded& e) {
        entry.status = "indeterminate";
        entry.detail["error"] = e.what();
        budget_hit_ = true;
      } catch (const RejectedError& e) {
        entry.status = "failed";
        entry.detail["error"] = e.what();
      } catch (const std::exception& e) {
        entry.status = "error";
        entry.detail["error"] = e.what();
        usage_error_ = true;
      }
      entry.elapsed_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
      entry.gb_steps_used = steps->load();
      if (entry.status == "failed") any_failed_ = true;
      report_.entries.push_back(std::move(entry));
      if (usage_error_) break;  // execution state is no longer trustworthy
    }
    report_.exit_code = usage_error_ ? exit_usage
                        : budget_hit_ ? exit_budget
                        : any_failed_ ? exit_check_failed
                                      : exit_ok;
    return std::move(report_);
  }

 private:
  // --- lookup helpers ---

  template <typename M>
  const typename M::mapped_type& find(const M& m, const std::string& name,
                                      const char* what) const {
    auto it = m.find(name);
    if (it == m.end())
      throw ContractError(std::string("unknown ") + what + " '" + name + "'");
    return it->second;
  }

  Polynomial poly(const std::string& text, const RingPtr& ring) const {
    return parse_polynomial(text, ring);
  }

  RingPtr active_ring() const {
    if (!env_.active_ring) throw ContractError("no ring declared before use");
    return env_.active_ring;
  }

  // Scheme-like lookup: scheme, bundle total space, or diagonal family.
  const AffineScheme& scheme_like(const std::string& name) const {
    if (auto it = env_.schemes.find(name); it != env_.schemes.end())
      return it->second;
    if (auto it = env_.spaces.find(name); it != env_.spaces.end())
      return it->second.total;
    if (auto it = env_.families.find(name); it != env_.families.end())
      return it->second.total;
    throw ContractError("unknown scheme '" + name + "'");
  }

  MonomialOrder default_order() const {
    if (options_.default_order == "lex") return MonomialOrder::lex();
    if (options_.default_order == "grevlex") return MonomialOrder::grevlex();
    throw ContractError("unknown monomial order '" + options_.default_order +
                        "' (expected grevlex or lex)");
  }

  // --- declarations ---

  void dispatch(const ast::RingDecl& d, CommandEntry& entry) {
    RingPtr ring = make_ring(d.variables, default_order());
    env_.rings[d.name] = ring;
    env_.active_ring = ring;
    entry.status = "declared";
  }

  void dispatch(const ast::IdealDecl& d, CommandEntry& entry) {
    RingPtr ring = active_ring();
    std::vector<Polynomial> gens;
    for (const auto& text : d.generators) gens.push_back(poly(text, ring));
    env_.ideals.emplace(d.name, Ideal(ring, std::move(gens)));
    entry.status = "declared";
    entry.detail["generators"] =
        poly_list_json(env_.ideals.at(d.name).generators());
  }

  void dispatch(const ast::SchemeDecl& d, CommandEntry& entry) {
    RingPtr ring = active_ring();
    std::vector<Polynomial> gens;
    for (const auto& text : d.generators) gens.push_back(poly(text, ring));
    env_.schemes.emplace(d.name,
                         AffineScheme(ring, Ideal(ring, std::move(gens))));
    entry.status = "declared";
  }

  void dispatch(const ast::CenterDecl& d, CommandEntry& entry) {
    const AffineScheme& ambient = find(env_.schemes, d.scheme, "scheme");
    CompleteIntersectionCenter center{ambient, poly(d.f, ambient.ring()),
                                      poly(d.g, ambient.ring()), d.point, false};
    env_.centers.emplace(d.name, std::move(center));
    entry.status = "declared";
  }

  void dispatch(const ast::MatrixDecl& d, CommandEntry& entry) {
    RingPtr ring = active_ring();
    env_.matrices.emplace(d.name,
                          ResolutionChange{poly(d.a, ring), poly(d.b, ring),
                                           poly(d.c, ring), poly(d.d, ring)});
    entry.status = "declared";
  }

  void dispatch(const ast::MapDecl& d, CommandEntry& entry) {
    const AffineScheme& source = scheme_like(d.source);
    const AffineScheme& target = scheme_like(d.target);
    std::vector<Polynomial> comps;
    for (const auto& text : d.components)
      comps.push_back(poly(text, source.ring()));
    env_.maps.emplace(d.name, RegularMap(source, target, std::move(comps)));
    entry.status = "declared";
  }

  void dispatch(const ast::CertDecl& d, CommandEntry& entry) {
    const RegularMap& fwd = find(env_.maps, d.forward, "map");
    const RegularMap& inv = find(env_.maps, d.inverse, "map");
    env_.certs.emplace(d.name, IsomorphismCertificate{fwd, inv});
    entry.status = "declared";
  }

  // --- commands ---

  void dispatch(const ast::GroebnerCmd& c, CommandEntry& entry) {
    const Ideal& ideal = find(env_.ideals, c.ideal, "ideal");
    GroebnerBasis gb =
        ideal.generators().empty()
            ? GroebnerBasis{ideal.ring(), {}}
            : reduced_groebner_basis(ideal.generators(), ideal.ring()->order(),
                                     budget_);
    entry.status = "ok";
    entry.detail["basis"] = poly_list_json(gb.elements);
  }

  void dispatch(const ast::MemberCmd& c, CommandEntry& entry) {
    const Ideal& ideal = find(env_.ideals, c.ideal, "ideal");
    Polynomial h = poly(c.poly, ideal.ring());
    bool want_cert = options_.cert_out_dir.has_value();
    MembershipResult res = ideal_membership(h, ideal, want_cert, budget_);
    entry.status = res.member ? "ok" : "failed";
    entry.detail["member"] = res.member;
    if (res.certificate) {
      entry.detail["cofactors"] = poly_list_json(res.certificate->cofactors);
      persist_membership_certificate(c.ideal, ideal, *res.certificate,
                                     entry.index);
    }
  }

  void dispatch(const ast::RadicalMemberCmd& c, CommandEntry& entry) {
    const Ideal& ideal = find(env_.ideals, c.ideal, "ideal");
    bool member = radical_membership(poly(c.poly, ideal.ring()), ideal, budget_);
    entry.status = member ? "ok" : "failed";
    entry.detail["radical_member"] = member;
  }

  void dispatch(const ast::CertifyMemberCmd& c, CommandEntry& entry) {
    const Ideal& ideal = find(env_.ideals, c.ideal, "ideal");
    MembershipCertificate cert{poly(c.poly, ideal.ring()), {}};
    for (const auto& text : c.cofactors)
      cert.cofactors.push_back(poly(text, ideal.ring()));
    bool ok = cert.expand_and_check(ideal);
    entry.status = ok ? "ok" : "failed";
    entry.detail["certificate_valid"] = ok;
  }

  void dispatch(const ast::DimCmd& c, CommandEntry& entry) {
    int d;
    if (auto it = env_.ideals.find(c.target); it != env_.ideals.end())
      d = dimension(it->second, budget_);
    else
      d = scheme_like(c.target).dimension(budget_);
    entry.status = "ok";
    entry.detail["dimension"] = d;  // -1 encodes the empty variety
  }

  void dispatch(const ast::EqualCmd& c, CommandEntry& entry) {
    bool eq = ideal_equality(find(env_.ideals, c.lhs, "ideal"),
                             find(env_.ideals, c.rhs, "ideal"), budget_);
    entry.status = eq ? "ok" : "failed";
    entry.detail["equal"] = eq;
  }

  void dispatch(const ast::SmoothCmd& c, CommandEntry& entry) {
    SmoothnessVerdict verdict =
        [&] {
          if (auto it = env_.ideals.find(c.target); it != env_.ideals.end())
            return smoothness_check(it->second, it->second.ring()->nvars(),
                                    budget_);
          return scheme_like(c.target).smoothness(budget_);
        }();
    const char* name = verdict.kind == SmoothnessVerdict::Kind::smooth
                           ? "smooth"
                           : verdict.kind == SmoothnessVerdict::Kind::singular
                                 ? "singular"
                                 : "indeterminate";
    entry.detail["verdict"] = name;
    if (!verdict.detail.empty()) entry.detail["note"] = verdict.detail;
    if (verdict.witness)
      entry.detail["singular_locus_witness"] =
          poly_list_json(verdict.witness->generators());
    if (verdict.kind == SmoothnessVerdict::Kind::indeterminate) {
      entry.status = "indeterminate";
      budget_hit_ = true;
    } else {
      bool expected = c.expect_singular
                          ? verdict.kind == SmoothnessVerdict::Kind::singular
                          : verdict.kind == SmoothnessVerdict::Kind::smooth;
      entry.status = expected ? "ok" : "failed";
    }
  }

  void dispatch(const ast::SupportCmd& c, CommandEntry& entry) {
    auto it = env_.centers.find(c.center);
    if (it == env_.centers.end())
      throw ContractError("unknown center '" + c.center + "'");
    SupportReport rep = verify_support(it->second, budget_);
    switch (rep.status) {
      case CheckStatus::passed:
        entry.status = "ok";
        break;
      case CheckStatus::failed:
        entry.status = "failed";
        entry.detail["failed_check"] = rep.failed_check;
        break;
      case CheckStatus::indeterminate:
        entry.status = "indeterminate";
        entry.detail["note"] = rep.failed_check;
        budget_hit_ = true;
        break;
    }
  }

  void dispatch(const ast::BuildCmd& c, CommandEntry& entry) {
    const CompleteIntersectionCenter& center =
        find(env_.centers, c.center, "center");
    BundleTotalSpace space = build_total_space(center.ambient, center);
    entry.detail["total_ideal"] =
        poly_list_json(space.total.defining_ideal().generators());
    env_.spaces.emplace(c.name, std::move(space));
    entry.status = "ok";
  }

  void dispatch(const ast::GaCheckCmd& c, CommandEntry& entry) {
    GaActionReport rep =
        verify_ga_action(find(env_.spaces, c.space, "bundle"), budget_);
    entry.detail["invariance_identity"] = rep.invariance_identity;
    entry.detail["fixed_point_free"] =
        rep.fixed_point_free == CheckStatus::passed
            ? "passed"
            : rep.fixed_point_free == CheckStatus::failed ? "failed"
                                                          : "indeterminate";
    if (rep.fixed_point_free == CheckStatus::indeterminate) {
      entry.status = "indeterminate";
      budget_hit_ = true;
    } else {
      entry.status = rep.passed() ? "ok" : "failed";
    }
  }

  void dispatch(const ast::ResChangeCmd& c, CommandEntry& entry) {
    const CompleteIntersectionCenter& center =
        find(env_.centers, c.center, "center");
    const ResolutionChange& matrix = find(env_.matrices, c.matrix, "matrix");
    ResolutionChangeResult res =
        resolution_change(center.ambient, center, matrix, budget_);
    entry.detail["f_prime"] = res.f_prime.str();
    entry.detail["g_prime"] = res.g_prime.str();
    entry.detail["uv_map"] = json::array(
        {res.automorphism.components()[res.automorphism.components().size() - 2]
             .str(),
         res.automorphism.components().back().str()});
    entry.detail["defining_equation_matches"] = res.defining_equation_matches;
    entry.detail["center_ideal_equal"] = res.center_ideal_equal;
    entry.status = res.passed() ? "ok" : "failed";
    if (c.result_name) env_.centers.emplace(*c.result_name, res.new_center);
  }

  void dispatch(const ast::PairIsoCmd& c, CommandEntry& entry) {
    const CompleteIntersectionCenter& left =
        find(env_.centers, c.left, "center");
    const CompleteIntersectionCenter& right =
        find(env_.centers, c.right, "center");
    const IsomorphismCertificate& cert =
        find(env_.certs, c.certificate, "certificate");
    PairIsoVerdict verdict = verify_pair_isomorphism(
        left.ambient, left, right.ambient, right, cert, budget_);
    switch (verdict) {
      case PairIsoVerdict::pairs_isomorphic:
        entry.status = "ok";
        entry.detail["verdict"] = "pairs-isomorphic";
        persist_pair_certificate(c, left, right, cert, entry.index);
        break;
      case PairIsoVerdict::certificate_invalid:
        entry.status = "failed";
        entry.detail["verdict"] = "certificate-invalid";
        break;
      case PairIsoVerdict::center_mismatch:
        entry.status = "failed";
        entry.detail["verdict"] = "center-mismatch";
        break;
      case PairIsoVerdict::indeterminate:
        entry.status = "indeterminate";
        entry.detail["verdict"] = "indeterminate";
        budget_hit_ = true;
        break;
    }
  }

  void dispatch(const ast::BrieskornCmd& c, CommandEntry& entry) {
    AffineScheme scheme = brieskorn(c.p, c.q, c.r);
    entry.detail["equation"] = scheme.defining_ideal().generators()[0].str();
    entry.detail["singular_point"] = json::array({"0", "0", "0"});
    env_.active_ring = scheme.ring();
    env_.schemes.emplace(c.name, std::move(scheme));
    entry.status = "ok";
  }

  void dispatch(const ast::GmCheckCmd& c, CommandEntry& entry) {
    GmWeightReport rep = gm_weight_check(c.p, c.q, c.r, c.m, c.n);
    entry.detail["identity_holds"] = rep.identity_holds;
    entry.detail["lambda_exponent"] = rep.lambda_exponent;
    entry.detail["center_preserved"] = rep.center_preserved;
    entry.detail["z_weight_note"] = rep.z_weight_note;
    entry.status =
        rep.identity_holds && rep.center_preserved ? "ok" : "failed";
  }

  void dispatch(const ast::DiagFamilyCmd& c, CommandEntry& entry) {
    DiagonalFamily family = build_diagonal_family(budget_);
    entry.detail["dimension"] = family.dimension;
    entry.detail["smooth"] =
        family.smoothness.kind == SmoothnessVerdict::Kind::smooth;
    bool ok = family.dimension == 5 &&
              family.smoothness.kind == SmoothnessVerdict::Kind::smooth;
    env_.families.emplace(c.name, std::move(family));
    entry.status = ok ? "ok" : "failed";
  }

  void dispatch(const ast::TrivializeCmd& c, CommandEntry& entry) {
    TrivializationReport rep =
        verify_trivialization(find(env_.families, c.family, "family"));
    entry.detail["pullback_matches"] = rep.pullback_matches;
    entry.detail["compositions_identity"] = rep.compositions_identity;
    entry.detail["base_projection_commutes"] = rep.base_projection_commutes;
    entry.status = rep.passed() ? "ok" : "failed";
  }

  void dispatch(const ast::FiberCmd& c, CommandEntry& entry) {
    FiberRestriction fiber =
        restrict_fiber(find(env_.families, c.family, "family"), c.p1, c.p2,
                       budget_);
    entry.detail["fiber_ideal"] =
        poly_list_json(fiber.fiber.defining_ideal().generators());
    entry.detail["matches_direct_construction"] =
        fiber.matches_direct_construction;
    entry.status = fiber.matches_direct_construction ? "ok" : "failed";
  }

  // --- certificate persistence ---

  void persist_membership_certificate(const std::string& ideal_name,
                                      const Ideal& ideal,
                                      const MembershipCertificate& cert,
                                      std::size_t index) {
    if (!options_.cert_out_dir) return;
    std::ostringstream out;
    out << ring_decl_text("R", ideal.ring());
    out << "ideal " << ideal_name << " = " << gens_text(ideal) << ";\n";
    out << "certify-member " << cert.target.str() << " in " << ideal_name
        << " with (";
    for (std::size_t i = 0; i < cert.cofactors.size(); ++i)
      out << (i ? ", " : "") << cert.cofactors[i].str();
    out << ");\n";
    write_cert_file("member_" + std::to_string(index) + ".sf", out.str());
  }

  void persist_pair_certificate(const ast::PairIsoCmd& cmd,
                                const CompleteIntersectionCenter& left,
                                const CompleteIntersectionCenter& right,
                                const IsomorphismCertificate& cert,
                                std::size_t index) {
    if (!options_.cert_out_dir) return;
    std::ostringstream out;
    auto emit_side = [&](const std::string& suffix,
                         const CompleteIntersectionCenter& center) {
      out << ring_decl_text("R" + suffix, center.ambient.ring());
      out << "scheme S" << suffix << " = "
          << gens_text(center.ambient.defining_ideal()) << ";\n";
      out << "center C" << suffix << " = (" << center.f.str() << ", "
          << center.g.str() << ") on S" << suffix << " at (";
      for (std::size_t i = 0; i < center.support_point.size(); ++i)
        out << (i ? ", " : "") << to_string(center.support_point[i]);
      out << ");\n";
    };
    emit_side("1", left);
    emit_side("2", right);
    auto emit_map = [&](const std::string& name, const RegularMap& map,
                        const std::string& src, const std::string& tgt) {
      out << "map " << name << " : " << src << " -> " << tgt << " = (";
      for (std::size_t i = 0; i < map.components().size(); ++i)
        out << (i ? ", " : "") << map.components()[i].str();
      out << ");\n";
    };
    emit_map("F", cert.forward, "S1", "S2");
    emit_map("G", cert.inverse, "S2", "S1");
    out << "certificate K = (F, G);\n";
    out << "pair-iso C1 C2 via K;\n";
    (void)cmd;
    write_cert_file("pair_iso_" + std::to_string(index) + ".sf", out.str());
  }

  void write_cert_file(const std::string& filename, const std::string& body) {
    namespace fs = std::filesystem;
    fs::create_directories(*options_.cert_out_dir);
    std::ofstream out(fs::path(*options_.cert_out_dir) / filename);
    out << body;
  }

  const Script& script_;
  const ExecOptions& options_;
  Budget budget_;
  Env env_;
  Report report_;
  bool any_failed_ = false;
  bool budget_hit_ = false;
  bool usage_error_ = false;
};

}  // namespace

json Report::to_json(bool include_timing) const {
  json doc;
  doc["schema"] = "sphere-forge-report/1";
  json cmds = json::array();
  std::size_t passed = 0, failed = 0;
  for (const auto& e : entries) {
    json c;
    c["index"] = e.index;
    c["command"] = e.command;
    c["status"] = e.status;
    if (!e.detail.empty()) c["detail"] = e.detail;
    c["budget"] = {{"gb_steps_used", e.gb_steps_used}};
    if (include_timing) c["timing"] = {{"elapsed_ms", e.elapsed_ms}};
    if (e.status == "ok" || e.status == "declared") ++passed;
    if (e.status == "failed") ++failed;
    cmds.push_back(std::move(c));
  }
  doc["commands"] = std::move(cmds);
  doc["summary"] = {{"passed", passed},
                    {"failed", failed},
                    {"exit_code", exit_code}};
  return doc;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << "[" << std::setw(3) << e.index << "] " << std::left << std::setw(14)
        << e.status << std::right << " " << e.command << "\n";
    if (!e.detail.empty()) {
      for (auto it = e.detail.begin(); it != e.detail.end(); ++it)
        out << "      " << it.key() << " = " << it.value().dump() << "\n";
    }
  }
  out << "exit code: " << exit_code << "\n";
  return out.str();
}

Report execute(const Script& script, const ExecOptions& options) {
  return Executor(script, options).run();
}

}  // namespace sphereforge
