#include "toricdm/report.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "toricdm/cohomology.hpp"
#include "toricdm/graded_dmod.hpp"

namespace toricdm {

namespace {

Json degree_json(const Degree& a) { return Json(a); }

Json degrees_json(const std::vector<Degree>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(degree_json(a));
  return out;
}

Json matrix_json(const IntMatrix& A) {
  Json out = Json::array();
  for (std::size_t r = 0; r < A.rows(); ++r) out.push_back(A.row_int64(r));
  return out;
}

Json box_json(const FacetBox& b) {
  return Json{{"facet_lower", b.lower}, {"facet_upper", b.upper}, {"points", b.points}};
}

Json error_json(const Error& e) {
  return Json{{"status", "rejected"}, {"code", std::string(to_string(e.code()))}, {"message", e.what()}};
}

std::string face_set(const std::vector<std::size_t>& faces) {
  std::string s = "{";
  for (std::size_t i = 0; i < faces.size(); ++i) s += (i ? "," : "") + std::to_string(faces[i]);
  return s + "}";
}

PresentationOptions presentation_options(const ProblemFile& pf, const RunOptions& o) {
  PresentationOptions po;
  if (auto b = o.search_bound ? o.search_bound : pf.search_bound) po.search_bound = *b;
  return po;
}

EnumerationPolicy enumeration_policy(const ProblemFile& pf, const RunOptions& o) {
  EnumerationPolicy pol;
  if (auto r = o.box_radius ? o.box_radius : pf.box_radius) pol.initial_radius = *r;
  if (auto s = o.samples_per_class ? o.samples_per_class : pf.samples_per_class)
    pol.samples_per_class = static_cast<std::size_t>(*s);
  return pol;
}

Json presentation_json(const ToricPresentation& P) {
  Json j;
  j["d"] = P.d();
  j["n"] = P.n();
  j["search_bound"] = P.search_bound();
  Json facets = Json::array();
  for (const auto& f : P.facets())
    facets.push_back(Json{{"id", f.facet_id}, {"coefficients", f.coefficients}, {"vanishing_columns", f.vanishing_columns}});
  j["facets"] = facets;
  j["pointed"] = P.pointed();
  j["simplicial"] = P.simplicial();
  if (!P.pointed()) return j;
  Json faces = Json::array();
  for (const auto& f : P.face_lattice().faces())
    faces.push_back(Json{{"id", f.face_id}, {"dim", f.dim}, {"columns", f.column_indices}, {"facets", f.zero_facets}});
  j["faces"] = faces;
  const auto& c = P.classification();
  j["normal"] = c.normal;
  j["scored"] = c.scored;
  j["s2"] = c.s2;
  Json vb = box_json(c.box);
  vb["margin"] = c.margin;
  j["verification_box"] = vb;
  const auto& fp = P.fast_path();
  j["fast_path"] = Json{{"enabled", fp.enabled}, {"disagreement", fp.disagreement}, {"box", box_json(fp.box)},
                        {"checks", fp.checks}};
  Json images = Json::array();
  for (const auto& f : P.facets()) {
    const auto& N = P.numerical_image(f.facet_id);
    images.push_back(Json{{"facet", f.facet_id}, {"generators", N.generators()}, {"conductor", N.conductor()},
                          {"gaps", N.gaps()}});
  }
  j["facet_images"] = images;
  return j;
}

Json enumeration_json(const ClassEnumeration& E, const EnumerationPolicy& pol) {
  Json j;
  j["scan"] = Json{{"initial_radius", E.initial_radius}, {"final_radius", E.final_radius}, {"rounds", E.rounds},
                   {"stable_rounds", pol.stable_rounds}, {"max_rounds", pol.max_rounds},
                   {"samples_per_class", pol.samples_per_class}, {"points_scanned", E.points_scanned}};
  Json sectors = Json::array();
  for (std::size_t s = 0; s < E.sectors.size(); ++s) {
    const auto& sf = E.sectors[s];
    sectors.push_back(Json{{"id", s}, {"faces", sf.faces}, {"nonempty", sf.nonempty}, {"samples", degrees_json(sf.sample_points)}});
  }
  j["sectors"] = sectors;
  Json classes = Json::array();
  for (const auto& c : E.classes) {
    Json sig = Json::array();
    for (const auto& e : c.signature.per_face) sig.push_back(e);
    classes.push_back(Json{{"id", c.class_id}, {"sector", c.sector_id}, {"sector_faces", E.sectors[c.sector_id].faces},
                           {"signature", sig}, {"representative", degree_json(c.representative)},
                           {"samples", degrees_json(c.samples)}});
  }
  j["classes"] = classes;
  Json edges = Json::array();
  for (auto [hi, lo] : E.poset_edges) edges.push_back(Json::array({hi, lo}));
  std::vector<std::size_t> order;
  for (const auto& c : E.classes) order.push_back(c.class_id);
  j["poset"] = Json{{"edges", edges}, {"linear_extension", order}};
  return j;
}

Json module_json(const GradedModuleDescription& M, const ClassEnumeration& E) {
  Json j;
  j["method"] = M.method;
  j["samples_checked"] = M.samples_checked;
  Json idx = Json::array();
  for (const auto& m : M.modules) {
    Json series = Json::array();
    for (const auto& f : m.series)
      series.push_back(Json{{"class", f.class_id}, {"multiplicity", f.multiplicity},
                            {"sector_faces", E.sectors[E.classes[f.class_id].sector_id].faces}});
    idx.push_back(Json{{"index", m.index}, {"length", m.length}, {"series", series}});
  }
  j["indices"] = idx;
  return j;
}

Json gr_monomial_json(const GrMonomial& g) {
  return Json{{"degree", degree_json(g.degree)}, {"theta_exponents", g.theta_exponents}};
}

Json certificate_json(const FiberCertificate& c) {
  Json j;
  j["status"] = c.verified() ? "verified" : "failed";
  j["kind"] = std::string(to_string(c.kind));
  if (c.kind == FiberKind::OrbitFiber) j["face"] = c.face_id;
  j["target_semigroup"] = matrix_json(c.target_semigroup);
  j["poly_vars"] = c.poly_vars;
  Json gens = Json::array();
  for (const auto& g : c.generator_monomials) gens.push_back(gr_monomial_json(g));
  j["generator_monomials"] = gens;
  if (!c.lifts.empty()) j["lifts"] = degrees_json(c.lifts);
  if (!c.alpha.empty()) j["alpha"] = degree_json(c.alpha);
  j["checks"] = Json{{"seed", c.seed},
                     {"identity_checks", c.identity_checks},
                     {"identity_failures", c.identity_failures},
                     {"sums_checked", c.sums_checked},
                     {"relation_pairs", c.relation_pairs},
                     {"additivity_failures", c.additivity_failures},
                     {"injectivity_failures", c.injectivity_failures}};
  if (c.kind == FiberKind::CharVarietyMax) {
    j["step1"] = Json{{"checks", c.step1_checks}, {"failures", c.step1_failures}, {"max_n", c.step1_max_n},
                      {"n_bound", "ceil((conductor + F(alpha)) / F(a))"}};
    j["step2"] = Json{{"theta_eigenvalues", degree_json(negate(c.alpha))}};
    j["step4"] = Json{{"checks", c.step4_checks}, {"failures", c.step4_failures}};
  }
  return j;
}

template <class F>
Json attempt(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::HypothesisFailed:
      case ErrorCode::NotScored:
      case ErrorCode::IsNormal:
      case ErrorCode::DimensionUnsupported:
      case ErrorCode::InvalidInput:
        return error_json(e);
      default:
        throw;
    }
  }
}

std::vector<Degree> grd_table_degrees(const ToricPresentation& P) {
  std::set<Degree> s;
  for (const auto& c : P.columns()) {
    s.insert(c);
    s.insert(negate(c));
  }
  if (P.d() <= 3)
    for (const auto& a : box_shell(P.d(), -1, 1)) s.insert(a);
  return {s.begin(), s.end()};
}

int run_grd(const ToricPresentation& P, Json& rep) {
  const auto& cls = P.classification();
  const std::uint64_t seed = CertificateOptions{}.seed;
  if (!cls.scored) {
    rep["grd"] = Json{{"status", "rejected"}, {"code", "NotScored"}, {"message", "gr D_A exponents need a scored semigroup"}};
    return 2;
  }
  Json g;
  Json table = Json::array();
  for (const auto& a : grd_table_degrees(P)) {
    std::vector<std::int64_t> F;
    for (const auto& f : P.facets()) F.push_back(f(a));
    table.push_back(Json{{"degree", degree_json(a)}, {"facet_values", F}, {"n", gr_monomial(P, a).theta_exponents}});
  }
  g["n_table"] = table;

  std::mt19937_64 rng(seed);
  const std::int64_t R = 2 * P.max_abs_entry() + 2;
  std::uniform_int_distribution<std::int64_t> u(-R, R);
  std::vector<Degree> samples(100, Degree(P.d()));
  for (auto& a : samples)
    for (auto& x : a) x = u(rng);
  auto fl = verify_fiber_lemma(P, samples);
  Json clauses = Json::array();
  for (const auto& c : fl.clauses)
    clauses.push_back(Json{{"clause", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"failures", c.failures}});
  g["fiber_lemma"] = Json{{"status", fl.passed() ? "verified" : "failed"},
                          {"seed", seed},
                          {"samples", fl.samples},
                          {"sample_radius", R},
                          {"pairs", fl.pairs},
                          {"large_k", "conductor + |F(a)| + 1, checked at k and k + 1"},
                          {"clauses", clauses}};

  if (P.d() == 1) {
    Json d1;
    Json gens = Json::array();
    for (const auto& p : gr_generators_dim1(P)) gens.push_back(p);
    d1["generators"] = gens;
    d1["not_cm"] = attempt([&] {
      auto c = notcm_certificate(P);
      Json pairs = Json::array();
      for (const auto& p : c.gaps) pairs.push_back(p);
      Json out{{"status", c.not_cohen_macaulay ? "verified" : "failed"},
               {"holes", c.holes},
               {"ell", c.ell},
               {"strip", Json{{"from", c.ell}, {"to", c.ell + c.strip_width}, {"filled", c.strip_filled}}},
               {"gaps", pairs},
               {"gr_flags", Json{{"normal", c.flags.normal}, {"scored", c.flags.scored}, {"s2", c.flags.s2},
                                 {"verification_box", box_json(c.flags.box)}}}};
      out["s2_witness"] = c.has_s2_witness ? degree_json(c.s2_witness) : Json(nullptr);
      return out;
    });
    g["dim1"] = d1;
  }
  g["fiber_at_origin"] = attempt([&] { return certificate_json(fiber_at_origin(P)); });
  Json orbits = Json::array();
  const auto& L = P.face_lattice();
  for (std::size_t f = 0; f < L.top(); ++f) {
    Json c = attempt([&] { return certificate_json(fiber_at_orbit(P, f)); });
    c["face"] = f;
    orbits.push_back(c);
  }
  g["fiber_at_orbit"] = orbits;
  g["char_variety_max"] = attempt([&] { return certificate_json(char_variety_max(P)); });
  rep["grd"] = g;
  return 0;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFullDimensional:
    case ErrorCode::LatticeNotFull:
    case ErrorCode::NotPointed:
    case ErrorCode::DimensionUnsupported:
    case ErrorCode::NotScored:
    case ErrorCode::IsNormal:
    case ErrorCode::HypothesisFailed:
    case ErrorCode::NoInteriorPoint:
      return 2;
    case ErrorCode::SearchBoundExceeded:
    case ErrorCode::EnumerationIncomplete:
    case ErrorCode::ClassNotEnumerated:
    case ErrorCode::Overflow:
      return 3;
    case ErrorCode::Parse:
    case ErrorCode::InvalidInput:
    case ErrorCode::GeneratorNotInSemigroup:
      return 4;
    default:
      return 1;
  }
}

Json error_report(const RunOptions& options, const Error& e) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = options.command;
  j["source"] = options.source;
  j["error"] = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"exit_code", exit_code_for(e.code())}};
  return j;
}

RunResult run_command(const ProblemFile& pf, const RunOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  static const std::set<std::string> known{"analyze", "sectors", "lc", "grd"};
  if (!known.count(o.command)) fail(ErrorCode::InvalidInput, "unknown command '" + o.command + "'");
  RunResult res;
  Json& rep = res.report;
  rep["schema"] = kReportSchema;
  rep["command"] = o.command;
  rep["source"] = o.source;

  const PresentationOptions po = presentation_options(pf, o);
  const EnumerationPolicy pol = enumeration_policy(pf, o);
  Json input{{"matrix", matrix_json(pf.matrix)},
             {"options", Json{{"search_bound", po.search_bound}, {"box_radius", pol.initial_radius},
                              {"samples_per_class", pol.samples_per_class}, {"margin", po.margin}}}};
  const std::optional<IdealSpec> ideal = o.ideal ? o.ideal : pf.ideal;
  if (ideal) input["ideal"] = ideal->maximal ? Json("maximal") : degrees_json(ideal->generators);
  rep["input"] = input;

  ToricPresentation P(pf.matrix, po);
  if (o.command == "analyze" && !P.pointed()) {
    rep["presentation"] = presentation_json(P);
    res.exit_code = 2;
  } else {
    rep["presentation"] = presentation_json(P);
    if (!P.pointed()) fail(ErrorCode::NotPointed, "the cone contains a line");
  }

  if (o.command == "sectors" || o.command == "lc") {
    const ClassEnumeration E = enumerate_classes(P, pol);
    rep["enumeration"] = enumeration_json(E, pol);
    if (o.command == "lc") {
      if (!ideal) fail(ErrorCode::Parse, "lc needs an ideal (file directive, --ideal or --maximal)");
      const MonomialIdeal I = ideal->maximal ? maximal_ideal(P) : make_ideal(P, ideal->generators);
      const GradedModuleDescription M = assemble_module(P, I, E);
      Json lc{{"ideal", Json{{"maximal", I.maximal}, {"generators", degrees_json(I.generators)}}}};
      lc["module"] = module_json(M, E);
      if (I.maximal) {
        lc["ishida_agrees"] = ranks_agree(M, local_cohomology_max(P, E));
      }
      if (!o.socle_radii.empty()) {
        Json probes = Json::array();
        for (const auto& m : M.modules) {
          const auto sp = socle_probe(P, E, M, m.index, o.socle_radii);
          Json counts = Json::array();
          for (const auto& c : sp.counts) counts.push_back(Json{{"radius", c.radius}, {"count", c.count}});
          std::vector<Degree> shown(sp.degrees.begin(), sp.degrees.begin() + std::min<std::size_t>(sp.degrees.size(), 200));
          probes.push_back(Json{{"index", m.index}, {"counts", counts}, {"degrees", degrees_json(shown)},
                                {"degrees_total", sp.degrees.size()}});
        }
        lc["socle"] = probes;
      }
      rep["lc"] = lc;
    }
  } else if (o.command == "grd") {
    res.exit_code = run_grd(P, rep);
  }

  if (o.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep["timing"] = Json{{"wall_ms", ms}};
  }
  return res;
}

std::string render_machine(const Json& report) { return report.dump(2) + "\n"; }

namespace {

std::string join_ints(const Json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? "," : "") + arr[i].dump();
  return s;
}

std::string paren(const Json& arr) { return "(" + join_ints(arr) + ")"; }

void human_presentation(std::ostringstream& os, const Json& p) {
  os << "cone: d=" << p["d"] << " n=" << p["n"] << " pointed=" << p["pointed"] << " simplicial=" << p["simplicial"]
     << "\n";
  os << "facets:\n";
  for (const auto& f : p["facets"])
    os << "  F" << f["id"] << " = " << paren(f["coefficients"]) << "  vanishes on columns {" << join_ints(f["vanishing_columns"])
       << "}\n";
  if (!p.contains("faces")) return;
  os << "faces:\n";
  for (const auto& f : p["faces"])
    os << "  " << f["id"] << "  dim " << f["dim"] << "  columns {" << join_ints(f["columns"]) << "}\n";
  os << "flags: normal=" << p["normal"] << " scored=" << p["scored"] << " s2=" << p["s2"] << "\n";
  const auto& vb = p["verification_box"];
  os << "  verified on 0 <= F <= (" << join_ints(vb["facet_upper"]) << "), " << vb["points"] << " points, margin "
     << vb["margin"] << "\n";
  const auto& fp = p["fast_path"];
  os << "  facet fast path: " << (fp["enabled"].get<bool>() ? "on" : "off") << " (" << fp["checks"] << " checks on "
     << fp["box"]["points"] << " points)\n";
  os << "  search bound " << p["search_bound"] << "\n";
  for (const auto& im : p["facet_images"])
    os << "  F" << im["facet"] << "(NA) = <" << join_ints(im["generators"]) << ">, conductor " << im["conductor"] << "\n";
}

void human_enumeration(std::ostringstream& os, const Json& e) {
  const auto& s = e["scan"];
  os << "scan: radius " << s["initial_radius"] << " -> " << s["final_radius"] << ", " << s["rounds"] << " rounds, "
     << s["points_scanned"] << " points\n";
  os << "sectors:\n";
  for (const auto& sf : e["sectors"]) {
    std::vector<std::size_t> faces = sf["faces"];
    os << "  nabla" << face_set(faces) << (sf["nonempty"].get<bool>() ? "" : "  empty") << "\n";
  }
  os << "classes (linear extension order):\n";
  for (const auto& c : e["classes"]) {
    std::vector<std::size_t> faces = c["sector_faces"];
    os << "  [" << c["id"] << "]  sector nabla" << face_set(faces) << "  representative " << paren(c["representative"])
       << "\n";
  }
  os << "poset edges:";
  for (const auto& ed : e["poset"]["edges"]) os << " " << ed[0] << ">" << ed[1];
  os << "\n";
}

void human_lc(std::ostringstream& os, const Json& lc) {
  os << "ideal: ";
  if (lc["ideal"]["maximal"].get<bool>()) os << "maximal, ";
  os << "generators";
  for (const auto& g : lc["ideal"]["generators"]) os << " " << paren(g);
  os << "\n";
  const auto& m = lc["module"];
  os << "local cohomology (" << m["method"].get<std::string>() << ", " << m["samples_checked"] << " samples):\n";
  if (m["indices"].empty()) os << "  all H^i vanish\n";
  for (const auto& im : m["indices"]) {
    os << "  H^" << im["index"] << ": length " << im["length"] << "\n    0";
    std::size_t k = 0;
    for (const auto& f : im["series"])
      for (std::size_t r = 0; r < f["multiplicity"].get<std::size_t>(); ++r) os << " < M" << ++k;
    os << " = H^" << im["index"] << "\n";
    for (const auto& f : im["series"]) {
      std::vector<std::size_t> faces = f["sector_faces"];
      os << "    class [" << f["class"] << "] on nabla" << face_set(faces) << " x" << f["multiplicity"] << "\n";
    }
  }
  if (lc.contains("ishida_agrees")) os << "  Ishida complex agrees: " << lc["ishida_agrees"] << "\n";
  if (lc.contains("socle"))
    for (const auto& s : lc["socle"]) {
      os << "  socle of H^" << s["index"] << ":";
      for (const auto& c : s["counts"]) os << " R=" << c["radius"] << ":" << c["count"];
      os << "\n";
    }
}

void human_cert(std::ostringstream& os, const std::string& title, const Json& c) {
  os << title << ": " << c["status"].get<std::string>();
  if (c.contains("code")) {
    os << " (" << c["code"].get<std::string>() << ")\n";
    return;
  }
  os << ", B has " << c["target_semigroup"].size() << " rows, " << c["poly_vars"] << " polynomial variables\n";
  for (const auto& g : c["generator_monomials"])
    os << "    t^" << paren(g["degree"]) << "  n = (" << join_ints(g["theta_exponents"]) << ")\n";
  if (c.contains("alpha")) os << "    alpha = " << paren(c["alpha"]) << "\n";
  const auto& k = c["checks"];
  os << "    " << k["sums_checked"] << " sums (" << k["relation_pairs"] << " relations), seed " << k["seed"] << "\n";
}

void human_grd(std::ostringstream& os, const Json& g) {
  if (g.contains("status")) {
    os << "gr D_A: " << g["status"].get<std::string>() << " (" << g["code"].get<std::string>() << ")\n";
    return;
  }
  os << "n_{sigma,a}:\n";
  for (const auto& r : g["n_table"])
    os << "  a=" << paren(r["degree"]) << "  F=(" << join_ints(r["facet_values"]) << ")  n=(" << join_ints(r["n"]) << ")\n";
  const auto& fl = g["fiber_lemma"];
  os << "fiber lemma: " << fl["status"].get<std::string>() << " on " << fl["pairs"] << " pairs\n";
  for (const auto& c : fl["clauses"]) os << "  " << c["clause"].get<std::string>() << ": " << c["checked"] << " checked, " << c["failed"] << " failed\n";
  if (g.contains("dim1")) {
    os << "gr D_A generators:";
    for (const auto& p : g["dim1"]["generators"]) os << " t^" << p[0] << "xi^" << p[1];
    os << "\n";
    const auto& nc = g["dim1"]["not_cm"];
    os << "not Cohen-Macaulay: " << nc["status"].get<std::string>();
    if (nc.contains("gaps")) {
      os << ", ell " << nc["ell"] << ", gaps";
      for (const auto& p : nc["gaps"]) os << " " << paren(p);
      os << ", s2 " << nc["gr_flags"]["s2"];
    }
    os << "\n";
  }
  human_cert(os, "fiber at origin", g["fiber_at_origin"]);
  for (const auto& c : g["fiber_at_orbit"]) human_cert(os, "fiber at orbit " + c["face"].dump(), c);
  human_cert(os, "characteristic variety of H^d_m", g["char_variety_max"]);
}

}  // namespace

std::string render_human(const Json& r) {
  std::ostringstream os;
  os << "toricdm " << r["command"].get<std::string>() << " " << r["source"].get<std::string>() << "\n";
  if (r.contains("error")) {
    os << "error: " << r["error"]["message"].get<std::string>() << "\n";
    return os.str();
  }
  human_presentation(os, r["presentation"]);
  if (r.contains("enumeration")) human_enumeration(os, r["enumeration"]);
  if (r.contains("lc")) human_lc(os, r["lc"]);
  if (r.contains("grd")) human_grd(os, r["grd"]);
  if (r.contains("timing")) os << "wall time " << r["timing"]["wall_ms"] << " ms\n";
  return os.str();
}

}  // namespace toricdm
