#include "knotfib/certificate.hpp"

#include <json.hpp>

namespace knotfib {

using nlohmann::json;

namespace {

json node_to_json(const CertificateNode& n) {
  json mv{{"kind", to_string(n.move.kind)}, {"params", n.move.params}};
  if (n.move.kind == MoveKind::pattern_b) mv["variant"] = n.move.variant;
  json j{{"fingerprint", n.fingerprint}, {"beta1", n.beta1}, {"move", mv}};
  if (n.move.sign != 0) j["sign"] = n.move.sign;
  json kids = json::array();
  for (const auto& c : n.children) kids.push_back(node_to_json(c));
  j["children"] = kids;
  return j;
}

CertificateNode node_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate node must be an object");
  CertificateNode n;
  n.fingerprint = j.at("fingerprint").get<std::string>();
  n.beta1 = j.at("beta1").get<int>();
  const json& mv = j.at("move");
  n.move.kind = move_kind_from_string(mv.at("kind").get<std::string>());
  n.move.params = mv.value("params", std::vector<int>{});
  n.move.variant = mv.value("variant", 0);
  n.move.sign = j.value("sign", 0);
  for (const auto& c : j.value("children", json::array())) n.children.push_back(node_from_json(c));
  return n;
}

int terminal_band_count(const Move& mv) {
  switch (mv.kind) {
    case MoveKind::terminal_disk: return 0;
    case MoveKind::terminal_hopf_annulus: return 1;
    case MoveKind::terminal_pretzel: return mv.params.at(0) - 1;
    default: return -1;
  }
}

struct Verifier {
  const VerifyOptions& opts;

  std::optional<ConwayPolynomial> poly(const Diagram& d) const {
    if (d.crossing_count() > opts.conway.max_crossings) return std::nullopt;
    return conway(d, opts.conway);
  }

  VerifyResult fail(const std::string& path, const std::string& msg) const {
    return VerifyResult{false, msg, path.empty() ? std::string("root") : path};
  }

  VerifyResult node(const Diagram& raw, const CertificateNode& n, const std::string& path) const {
    Diagram d = canonical(raw);
    if (fingerprint(d) != n.fingerprint) return fail(path, "fingerprint mismatch");
    SeifertModel m = build_seifert(d);
    if (m.stats.beta1 != n.beta1) return fail(path, "beta1 is " + std::to_string(m.stats.beta1) + ", certificate says " + std::to_string(n.beta1));
    if (is_witness(n.move.kind)) return fail(path, "witness " + to_string(n.move.kind) + " inside a fiber certificate");

    std::vector<Diagram> kids;
    try {
      kids = apply_move(d, n.move);
    } catch (const DiagramError& e) {
      return fail(path, std::string("move does not replay: ") + e.what());
    }
    if (kids.size() != n.children.size())
      return fail(path, "move yields " + std::to_string(kids.size()) + " children, certificate lists " + std::to_string(n.children.size()));

    if (is_terminal(n.move.kind)) {
      if (terminal_band_count(n.move) != n.beta1) return fail(path, "terminal band count differs from beta1");
      return {true, {}, {}};
    }

    int child_sum = 0;
    for (const auto& c : n.children) child_sum += c.beta1;
    switch (n.move.kind) {
      case MoveKind::untwist:
        if (n.children[0].beta1 != n.beta1) return fail(path, "untwist changed beta1");
        break;
      case MoveKind::parallel_cut:
        if (n.children[0].beta1 != n.beta1 - 1) return fail(path, "parallel cut must lower beta1 by one");
        break;
      default:
        if (child_sum != n.beta1) return fail(path, "beta1 is not additive over the desum");
        break;
    }

    if (auto whole = poly(d)) {
      std::vector<ConwayPolynomial> cp;
      std::vector<int> betas;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        cp.push_back(*poly(kids[i]));
        betas.push_back(n.children[i].beta1);
      }
      if (!conway_relation_holds(n.move.kind, *whole, n.beta1, cp, betas))
        return fail(path, "Conway relation fails across " + to_string(n.move.kind));
    }

    for (std::size_t i = 0; i < kids.size(); ++i) {
      auto r = node(kids[i], n.children[i], path.empty() ? std::to_string(i) : path + "." + std::to_string(i));
      if (!r) return r;
    }
    return {true, {}, {}};
  }
};

}  // namespace

std::string certificate_to_json(const CertificateNode& root, int indent) { return node_to_json(root).dump(indent); }

CertificateNode certificate_from_json(const std::string& text) {
  try {
    return node_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<int> collect_hopf_signs(const CertificateNode& cert) {
  std::vector<int> out;
  if (cert.move.kind == MoveKind::parallel_cut) out.push_back(cert.move.sign);
  for (int s : terminal_hopf_signs(cert.move)) out.push_back(s);
  for (const auto& c : cert.children) {
    auto sub = collect_hopf_signs(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

VerifyResult certificate_verify(const Diagram& d, const CertificateNode& cert, const VerifyOptions& opts) {
  Verifier v{opts};
  VerifyResult r = v.node(d, cert, "");
  if (!r) return r;
  if (static_cast<int>(collect_hopf_signs(cert).size()) != cert.beta1)
    return VerifyResult{false, "Hopf band count differs from beta1", "root"};
  return r;
}

std::vector<int> hopf_sign_report(const Diagram& d, const CertificateNode& cert, const VerifyOptions& opts) {
  VerifyResult r = certificate_verify(d, cert, opts);
  if (!r) throw DiagramError("certificate does not verify at " + r.path + ": " + r.message);
  return collect_hopf_signs(cert);
}

}  // namespace knotfib
