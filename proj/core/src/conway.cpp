#include "knotfib/conway.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace knotfib {

ConwayPolynomial::ConwayPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void ConwayPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ConwayPolynomial ConwayPolynomial::operator+(const ConwayPolynomial& o) const {
  std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)[i] + o[i];
  return ConwayPolynomial(std::move(r));
}

ConwayPolynomial ConwayPolynomial::operator-() const {
  std::vector<std::int64_t> r = c_;
  for (auto& v : r) v = -v;
  return ConwayPolynomial(std::move(r));
}

ConwayPolynomial ConwayPolynomial::operator-(const ConwayPolynomial& o) const { return *this + (-o); }

ConwayPolynomial ConwayPolynomial::operator*(const ConwayPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return ConwayPolynomial(std::move(r));
}

namespace {

std::string render(int min_power, const std::vector<std::int64_t>& coeffs,
                   std::string (*mono)(int power)) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t c = coeffs[i];
    if (c == 0) continue;
    int p = min_power + static_cast<int>(i);
    std::string m = mono(p);
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.empty() || mag != 1) os << mag;
    os << m;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string z_mono(int p) {
  if (p == 0) return "";
  if (p == 1) return "z";
  return "z^" + std::to_string(p);
}

std::string t_mono(int p) {
  // p is the exponent of t^(1/2)
  if (p == 0) return "";
  if (p % 2 != 0) return "t^(" + std::to_string(p) + "/2)";
  if (p == 2) return "t";
  return "t^" + std::to_string(p / 2);
}

struct Cache {
  std::mutex mu;
  std::unordered_map<std::string, ConwayPolynomial> memo;
};

Cache& cache() {
  static Cache c;
  return c;
}

// The under-strand crossing first reached when walking every component from
// its lowest label, components by lowest label; -1 if the diagram descends.
CrossingId first_ascending(const Diagram& d) {
  std::vector<char> visited(static_cast<std::size_t>(d.crossing_count()), 0);
  std::set<EdgeLabel> walked;
  for (EdgeLabel start : d.labels()) {
    if (walked.count(start)) continue;
    EdgeLabel e = start;
    while (!walked.count(e)) {
      walked.insert(e);
      SlotRef h = d.head(e);
      auto& v = visited[static_cast<std::size_t>(h.crossing)];
      if (!v) {
        v = 1;
        if (!Diagram::is_over_slot(h.slot)) return h.crossing;
      }
      e = d.label_at({h.crossing, (h.slot + 2) % 4});
    }
  }
  return -1;
}

ConwayPolynomial evaluate(const Diagram& d, const ConwayOptions& opts);

ConwayPolynomial evaluate_uncached(const Diagram& d, const ConwayOptions& opts) {
  if (d.projection_component_count() > 1) return {};
  if (d.crossing_count() == 0) return ConwayPolynomial::constant(1);
  ConwayPolynomial acc;
  Diagram cur = d;
  for (CrossingId x = first_ascending(cur); x >= 0; x = first_ascending(cur)) {
    // standard skein sign is the opposite of the crossing's sign here
    const int standard = -cur.sign(x);
    ConwayPolynomial smoothed = evaluate(smooth_crossing(cur, x), opts) * ConwayPolynomial::z();
    acc = standard > 0 ? acc + smoothed : acc - smoothed;
    cur = switch_crossing(cur, x);
  }
  if (cur.link_component_count() == 1) acc = acc + ConwayPolynomial::constant(1);
  return acc;
}

ConwayPolynomial evaluate(const Diagram& d, const ConwayOptions& opts) {
  if (!opts.use_cache || d.crossing_count() < 3) return evaluate_uncached(d, opts);
  std::string key = fingerprint(d);
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().memo.find(key);
    if (it != cache().memo.end()) return it->second;
  }
  ConwayPolynomial p = evaluate_uncached(d, opts);
  std::lock_guard<std::mutex> lock(cache().mu);
  if (cache().memo.size() > 2'000'000) cache().memo.clear();
  cache().memo.emplace(std::move(key), p);
  return p;
}

}  // namespace

std::string ConwayPolynomial::to_string() const { return render(0, c_, z_mono); }

std::string AlexanderPolynomial::to_string() const { return render(min_power, coeffs, t_mono); }

ConwayPolynomial conway(const Diagram& d, const ConwayOptions& opts) {
  if (d.crossing_count() > opts.max_crossings)
    throw BoundExceeded("diagram has " + std::to_string(d.crossing_count()) + " crossings; the Conway bound is " +
                        std::to_string(opts.max_crossings));
  return evaluate(d, opts);
}

void clear_conway_cache() {
  std::lock_guard<std::mutex> lock(cache().mu);
  cache().memo.clear();
}

bool is_monic_of_degree(const ConwayPolynomial& p, int degree) {
  return p.degree() == degree && (p.leading() == 1 || p.leading() == -1);
}

std::int64_t seifert_determinant(const ConwayPolynomial& p, int beta1) {
  if (p.degree() > beta1)
    throw std::logic_error("Conway polynomial " + p.to_string() + " exceeds degree " + std::to_string(beta1));
  return p[static_cast<std::size_t>(beta1)];
}

bool mm_forbidden(const ConwayPolynomial& p) {
  if (p.degree() != 4 || p[0] != 1 || p[1] != 0 || p[3] != 0) return false;
  const std::int64_t c1 = ((p[2] % 4) + 4) % 4;
  return (p[4] == 1 && c1 == 0) || (p[4] == -1 && c1 == 2);
}

AlexanderPolynomial alexander_from_conway(const ConwayPolynomial& p) {
  AlexanderPolynomial a;
  const int d = p.degree();
  if (d < 0) return a;
  a.min_power = -d;
  a.coeffs.assign(static_cast<std::size_t>(2 * d + 1), 0);
  for (int k = 0; k <= d; ++k) {
    std::int64_t ck = p[static_cast<std::size_t>(k)];
    if (ck == 0) continue;
    std::int64_t binom = 1;
    for (int j = 0; j <= k; ++j) {
      int power = k - 2 * j;
      a.coeffs[static_cast<std::size_t>(power + d)] += ck * binom * (j % 2 ? -1 : 1);
      binom = binom * (k - j) / (j + 1);
    }
  }
  while (!a.coeffs.empty() && a.coeffs.front() == 0) {
    a.coeffs.erase(a.coeffs.begin());
    ++a.min_power;
  }
  while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
  return a;
}

}  // namespace knotfib
