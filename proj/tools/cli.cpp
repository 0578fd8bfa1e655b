#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "knotfib/certificate.hpp"
#include "knotfib/conway.hpp"
#include "knotfib/decide.hpp"
#include "knotfib/diagram.hpp"
#include "knotfib/seifert.hpp"

namespace knotfib::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Diagram load(const std::string& path) {
  try {
    return parse_pd(read_file(path));
  } catch (const DiagramError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string classification(const Diagram& d) {
  if (d.projection_component_count() > 1) return "split";
  return classify_alternation(d).describe();
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

json signs_json(const std::vector<int>& signs) {
  json a = json::array();
  for (int s : signs) a.push_back(sign_char(s));
  return a;
}

std::optional<ConwayPolynomial> try_conway(const Diagram& d) {
  try {
    return conway(d);
  } catch (const BoundExceeded&) {
    return std::nullopt;
  }
}

json witness_json(const Witness& w) {
  json j{{"kind", to_string(w.kind)}, {"fingerprint", w.fingerprint}};
  if (!w.data.empty()) j["data"] = w.data;
  if (w.kind == WitnessKind::alexander_obstruction) {
    j["conway"] = w.conway.coeffs();
    j["beta1"] = w.beta1;
  }
  return j;
}

struct DecideReport {
  Verdict verdict;
  SeifertStats stats;
  std::optional<ConwayPolynomial> poly;
  std::vector<int> hopf;
  std::string cls;
};

DecideReport decide_report(const Diagram& d) {
  DecideReport r;
  r.verdict = decide_fiber(d);
  r.stats = build_seifert(d).stats;
  r.poly = try_conway(d);
  r.cls = classification(d);
  if (r.verdict.certificate) r.hopf = hopf_sign_report(d, *r.verdict.certificate);
  return r;
}

json decide_json(const DecideReport& r) {
  json j{{"verdict", to_string(r.verdict.kind)},
         {"classification", r.cls},
         {"stats", {{"s", r.stats.s}, {"c", r.stats.c}, {"beta1", r.stats.beta1}}}};
  j["conway"] = r.poly ? json(r.poly->coeffs()) : json(nullptr);
  if (r.verdict.witness) j["witness"] = witness_json(*r.verdict.witness);
  if (!r.verdict.reason.empty()) j["reason"] = r.verdict.reason;
  if (!r.verdict.stuck_fingerprint.empty()) j["stuck"] = r.verdict.stuck_fingerprint;
  if (r.verdict.certificate) {
    j["certificate"] = json::parse(certificate_to_json(*r.verdict.certificate));
    j["hopf_count"] = r.hopf.size();
    j["hopf_signs"] = signs_json(r.hopf);
  }
  return j;
}

// ---- subcommands ------------------------------------------------------------

int cmd_parse(const std::string& file, bool as_json, std::ostream& out) {
  Diagram d = load(file);
  if (as_json) {
    out << json{{"crossings", d.crossing_count()},
                {"components", d.link_component_count()},
                {"projection_pieces", d.projection_component_count()},
                {"pd", serialize_pd(d)},
                {"fingerprint", fingerprint(d)}}
               .dump(2)
        << "\n";
  } else {
    out << "# " << d.crossing_count() << " crossings, " << d.link_component_count() << " component(s)\n"
        << serialize_pd(d);
  }
  return exit_ok;
}

int cmd_classify(const std::string& file, bool as_json, std::ostream& out) {
  Diagram d = load(file);
  AlternationClass c = classify_alternation(d);
  if (as_json) {
    json j{{"class", c.describe()}, {"switches", c.switches}};
    if (c.kind == AlternationKind::almost_alternating) {
      j["dealternator"] = c.dealternator();
      j["dealternator_sign"] = sign_char(d.sign(c.dealternator()));
      j["candidates"] = c.dealternator_candidates;
    }
    out << j.dump(2) << "\n";
  } else {
    out << c.describe();
    if (c.kind == AlternationKind::almost_alternating) out << " (dealternator " << c.dealternator() << ")";
    out << "\n";
  }
  return exit_ok;
}

int cmd_seifert(const std::string& file, std::ostream& out) {
  Diagram d = load(file);
  SeifertModel m = build_seifert(d);
  json circles = json::array();
  for (const auto& c : m.circles) circles.push_back(c);
  json graph = json::array();
  for (const auto& e : m.edges)
    graph.push_back({{"crossing", e.crossing}, {"u", e.u}, {"v", e.v}, {"sign", sign_char(e.sign)}});
  json pairs = json::array();
  for (const auto& p : parallel_pairs(m, d))
    pairs.push_back({{"x", p.x}, {"y", p.y}, {"adjacent", p.adjacent}, {"same_sign", p.same_sign}});
  json j{{"circles", circles},
         {"graph", graph},
         {"nested", nested_circles(m)},
         {"parallel_pairs", pairs},
         {"stats",
          {{"s", m.stats.s}, {"c", m.stats.c}, {"k", m.stats.k}, {"beta1", m.stats.beta1}, {"chi", m.stats.chi}}}};
  out << j.dump(2) << "\n";
  return exit_ok;
}

int cmd_decide(const std::string& file, bool as_json, const std::string& cert_path, std::ostream& out) {
  Diagram d = load(file);
  DecideReport r = decide_report(d);
  if (!cert_path.empty() && r.verdict.certificate) {
    std::ofstream cf(cert_path);
    if (!cf) throw InputError("cannot write " + cert_path);
    cf << certificate_to_json(*r.verdict.certificate) << "\n";
  }
  if (as_json) {
    out << decide_json(r).dump(2) << "\n";
  } else {
    out << "verdict: " << to_string(r.verdict.kind);
    if (r.verdict.witness) out << " (" << to_string(r.verdict.witness->kind) << ")";
    if (!r.verdict.reason.empty()) out << " (" << r.verdict.reason << ")";
    out << "\nclassification: " << r.cls << "\n";
    out << "s=" << r.stats.s << " c=" << r.stats.c << " beta1=" << r.stats.beta1 << "\n";
    out << "conway: " << (r.poly ? r.poly->to_string() : std::string("(bound exceeded)")) << "\n";
    if (r.verdict.certificate) {
      out << "hopf bands: " << r.hopf.size() << " (";
      for (std::size_t i = 0; i < r.hopf.size(); ++i) out << (i ? "," : "") << sign_char(r.hopf[i]);
      out << ")\n";
    }
  }
  return r.verdict.kind == VerdictKind::out_of_scope ? exit_out_of_scope : exit_ok;
}

int cmd_conway(const std::string& file, bool alexander, std::ostream& out) {
  Diagram d = load(file);
  ConwayPolynomial p = conway(d);
  json j{{"conway", p.coeffs()}, {"text", p.to_string()}};
  if (alexander) {
    AlexanderPolynomial a = alexander_from_conway(p);
    j["alexander"] = {{"min_half_power", a.min_power}, {"coeffs", a.coeffs}, {"text", a.to_string()}};
  }
  out << j.dump(2) << "\n";
  return exit_ok;
}

int cmd_mm_check(const std::string& file, std::ostream& out) {
  Diagram d = load(file);
  ConwayPolynomial p = conway(d);
  out << json{{"conway", p.coeffs()}, {"text", p.to_string()}, {"forbidden", mm_forbidden(p)}}.dump(2) << "\n";
  return exit_ok;
}

int cmd_verify(const std::string& file, const std::string& cert_file, std::ostream& out) {
  Diagram d = load(file);
  CertificateNode cert;
  try {
    cert = certificate_from_json(read_file(cert_file));
  } catch (const std::invalid_argument& e) {
    throw InputError(cert_file + ": " + e.what());
  }
  VerifyResult r = certificate_verify(d, cert);
  if (r) {
    out << "certificate verified; " << cert.beta1 << " Hopf bands\n";
    return exit_ok;
  }
  out << "certificate rejected at " << r.path << ": " << r.message << "\n";
  return exit_failure;
}

struct ManifestEntry {
  std::string name, file, expected_class, expected_verdict, note;
};

std::vector<ManifestEntry> read_manifest(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<ManifestEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() < 4) throw InputError(path + ":" + std::to_string(lineno) + ": expected at least 4 tab-separated fields");
    out.push_back({f[0], f[1], f[2], f[3], f.size() > 4 ? f[4] : ""});
  }
  return out;
}

struct EntryResult {
  bool ok = false;
  std::string line;
  json record;
};

EntryResult run_entry(const ManifestEntry& e, const fs::path& base) {
  EntryResult r;
  std::ostringstream os;
  try {
    Diagram d = load((base / e.file).string());
    DecideReport rep = decide_report(d);
    std::string verdict = to_string(rep.verdict.kind);
    std::string full = verdict;
    if (rep.verdict.witness) full += ":" + to_string(rep.verdict.witness->kind);
    bool class_ok = rep.cls == e.expected_class;
    bool verdict_ok = e.expected_verdict.find(':') == std::string::npos ? verdict == e.expected_verdict
                                                                        : full == e.expected_verdict;
    bool cert_ok = true;
    bool monic_ok = true;
    if (rep.verdict.certificate) {
      cert_ok = static_cast<bool>(certificate_verify(d, *rep.verdict.certificate));
      if (rep.poly) monic_ok = is_monic_of_degree(*rep.poly, rep.stats.beta1);
    }
    r.ok = class_ok && verdict_ok && cert_ok && monic_ok;
    os << (r.ok ? "OK       " : "MISMATCH ") << e.name << "  class=" << rep.cls << "  verdict=" << full
       << "  beta1=" << rep.stats.beta1 << "  conway=" << (rep.poly ? rep.poly->to_string() : "n/a");
    if (rep.verdict.certificate) {
      os << "  hopf=";
      for (int s : rep.hopf) os << sign_char(s);
    }
    if (!class_ok) os << "  [expected class " << e.expected_class << "]";
    if (!verdict_ok) os << "  [expected verdict " << e.expected_verdict << "]";
    if (!cert_ok) os << "  [certificate does not verify]";
    if (!monic_ok) os << "  [fibered but conway not monic of degree beta1]";
    r.record = decide_json(rep);
    r.record["name"] = e.name;
    r.record["ok"] = r.ok;
  } catch (const OracleFailure& ex) {
    os << "MISMATCH " << e.name << "  internal oracle failure: " << ex.what();
    r.record = {{"name", e.name}, {"ok", false}, {"error", ex.what()}};
  } catch (const std::exception& ex) {
    os << "MISMATCH " << e.name << "  error: " << ex.what();
    r.record = {{"name", e.name}, {"ok", false}, {"error", ex.what()}};
  }
  r.line = os.str();
  return r;
}

int cmd_corpus_run(const std::string& manifest, int jobs, bool as_json, std::ostream& out) {
  auto entries = read_manifest(manifest);
  fs::path base = fs::path(manifest).parent_path();
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<EntryResult> results(entries.size());
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= entries.size()) return;
        i = next++;
      }
      results[i] = run_entry(entries[i], base);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::size_t passed = 0;
  for (const auto& r : results) passed += r.ok ? 1 : 0;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(r.record);
    out << json{{"entries", arr}, {"passed", passed}, {"total", results.size()}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) out << r.line << "\n";
    out << passed << "/" << results.size() << " entries match\n";
  }
  return passed == results.size() ? exit_ok : exit_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seifert surface fiberedness decider for almost alternating diagrams", "knotfib"};
  app.require_subcommand(1);
  bool as_json = false;
  bool alexander = false;
  std::string file, cert_file, cert_out, manifest;
  int jobs = 0;

  auto* parse = app.add_subcommand("parse", "Validate a PD file and print its canonical form");
  parse->add_option("file", file, "PD file")->required();
  parse->add_flag("--json", as_json, "Machine-readable output");

  auto* classify = app.add_subcommand("classify", "Alternating / almost alternating / k-almost alternating");
  classify->add_option("file", file, "PD file")->required();
  classify->add_flag("--json", as_json, "Machine-readable output");

  auto* seifert = app.add_subcommand("seifert", "Seifert circles, graph, nesting and surface statistics (JSON)");
  seifert->add_option("file", file, "PD file")->required();

  auto* decide = app.add_subcommand("decide", "Decide whether the Seifert surface is a fiber surface");
  decide->add_option("file", file, "PD file")->required();
  decide->add_flag("--json", as_json, "Machine-readable output");
  decide->add_option("--cert", cert_out, "Write the certificate JSON here when fibered");

  auto* conway_cmd = app.add_subcommand("conway", "Conway polynomial coefficients (JSON)");
  conway_cmd->add_option("file", file, "PD file")->required();
  conway_cmd->add_flag("--alexander", alexander, "Also print the Alexander polynomial");

  auto* mm = app.add_subcommand("mm-check", "Genus-two Hopf-plumbing obstruction on the Conway polynomial");
  mm->add_option("file", file, "PD file")->required();

  auto* verify = app.add_subcommand("verify-cert", "Replay a certificate against a diagram");
  verify->add_option("file", file, "PD file")->required();
  verify->add_option("certificate", cert_file, "Certificate JSON")->required();

  auto* corpus = app.add_subcommand("corpus-run", "Run every manifest entry and compare with expectations");
  corpus->add_option("manifest", manifest, "Manifest TSV")->required();
  corpus->add_option("-j,--jobs", jobs, "Worker threads (default: hardware concurrency)");
  corpus->add_flag("--json", as_json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return exit_parse;
  }

  try {
    if (*parse) return cmd_parse(file, as_json, out);
    if (*classify) return cmd_classify(file, as_json, out);
    if (*seifert) return cmd_seifert(file, out);
    if (*decide) return cmd_decide(file, as_json, cert_out, out);
    if (*conway_cmd) return cmd_conway(file, alexander, out);
    if (*mm) return cmd_mm_check(file, out);
    if (*verify) return cmd_verify(file, cert_file, out);
    if (*corpus) return cmd_corpus_run(manifest, jobs, as_json, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const BoundExceeded& e) {
    err << "out of scope: " << e.what() << "\n";
    return exit_out_of_scope;
  } catch (const OracleFailure& e) {
    err << "internal oracle failure: " << e.what() << "\n";
    return exit_internal;
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  return exit_parse;
}

}  // namespace knotfib::cli
