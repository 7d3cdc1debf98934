#include "cospectra/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "cospectra/graph_io.hpp"
#include "cospectra/isomorphism.hpp"
#include "cospectra/parallel.hpp"
#include "cospectra/spectra.hpp"

namespace cospectra {

int resolve_worker_count(std::optional<int> requested) {
  if (const char* env = std::getenv("COSPECTRA_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (requested && *requested > 0) return *requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  const std::size_t threads =
      std::min(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string format_spectrum(const std::vector<double>& values) {
  std::string out = "{";
  char buf[32];
  for (std::size_t i = 0; i < values.size(); ++i) {
    // -0.0000 from tiny negatives prints as 0.
    double v = values[i];
    if (std::abs(v) < 5e-5) v = 0.0;
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (i > 0) out += ", ";
    out += s;
  }
  out += "}";
  return out;
}

namespace {

std::vector<std::string> coeff_strings(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).get_str());
  return out;
}

nlohmann::json rational_poly_json(const RationalPoly& p) {
  nlohmann::json j;
  j["numerator"] = coeff_strings(p.numerator());
  j["denominator"] = p.denominator().get_str();
  return j;
}

nlohmann::json verdict_json(const Verdict& v, bool enforced) {
  nlohmann::json j;
  j["claim"] = v.claim;
  j["holds"] = v.holds;
  j["witness"] = v.witness;
  j["enforced"] = enforced;
  if (!v.left_spectrum.empty() || !v.right_spectrum.empty()) {
    j["left_spectrum"] = v.left_spectrum;
    j["right_spectrum"] = v.right_spectrum;
    j["left_display"] = format_spectrum(v.left_spectrum);
    j["right_display"] = format_spectrum(v.right_spectrum);
  }
  if (v.witness_permutation) j["witness_permutation"] = *v.witness_permutation;
  return j;
}

/// Non-isomorphism verdict: exact search inside the bound, degree/charpoly
/// certificates beyond it.
Verdict non_isomorphic_verdict(const Graph& g, const Graph& h, int bound) {
  Verdict v;
  v.claim = "non-isomorphic";
  if (g.order() != h.order()) {
    v.holds = true;
    v.witness = "orders differ: " + std::to_string(g.order()) + " vs " + std::to_string(h.order());
    return v;
  }
  if (g.order() <= bound) {
    Verdict iso = is_isomorphic(g, h, IsoOptions{bound});
    v.holds = !iso.holds;
    v.witness = iso.holds ? "isomorphic: " + iso.witness : iso.witness;
    v.witness_permutation = iso.witness_permutation;
    return v;
  }
  const CertificateComparison cert = certificate_comparison(g, h);
  v.holds = cert.proved_nonisomorphic;
  v.witness = "order " + std::to_string(g.order()) + " above exact bound " +
              std::to_string(bound) + "; " + cert.text;
  return v;
}

nlohmann::json seed_params_json(const SeedInputs& params, Construction c) {
  nlohmann::json j;
  j["B"] = render_matrix_text(params.B);
  if (c == Construction::I || c == Construction::Fk || c == Construction::III)
    j["n"] = params.n;
  if (params.k > 0) j["k"] = params.k;
  if (params.G) j["G"] = render_matrix_text(*params.G);
  if (params.Gprime) j["Gprime"] = render_matrix_text(*params.Gprime);
  if (params.E) j["E"] = render_matrix_text(*params.E);
  if (params.F) j["F"] = render_matrix_text(*params.F);
  if (params.allow_zero_lines) j["allow_zero_lines"] = true;
  return j;
}

std::set<std::string> default_enforced(const std::set<SpectralClaim>& claims) {
  std::set<std::string> out;
  if (claims.count(SpectralClaim::Adjacency)) out.insert("adjacency-cospectral");
  if (claims.count(SpectralClaim::NormalizedLaplacian)) out.insert("normalized-cospectral");
  return out;
}

void push_verdict(Report& report, Verdict v) {
  if (report.enforced.count(v.claim) && !v.holds) report.all_claimed_hold = false;
  report.verdicts.push_back(std::move(v));
}

}  // namespace

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["construction"] = construction;
  j["params"] = params;
  j["orders"] = orders;
  j["degenerate"] = degenerate;
  if (degenerate) j["degenerate_reason"] = degenerate_reason;
  j["all_claimed_hold"] = all_claimed_hold;
  nlohmann::json vj = nlohmann::json::array();
  for (const Verdict& v : verdicts) vj.push_back(verdict_json(v, enforced.count(v.claim) > 0));
  j["verdicts"] = vj;
  j["adjacency_charpoly"] = adjacency_coeffs;
  j["normalized_charpoly"] = normalized_polys;
  nlohmann::json tj = nlohmann::json::object();
  for (const auto& [name, ms] : timings_ms) tj[name] = ms;
  j["timings_ms"] = tj;
  return j;
}

std::string Report::summary() const {
  std::ostringstream out;
  out << "construction " << construction << ", orders [";
  for (std::size_t i = 0; i < orders.size(); ++i) out << (i ? " " : "") << orders[i];
  out << "]";
  if (degenerate) out << " (degenerate: " << degenerate_reason << ")";
  out << "\n";
  for (const Verdict& v : verdicts) {
    out << "  " << v.claim << ": " << (v.holds ? "holds" : "FAILS");
    if (enforced.count(v.claim)) out << " [claimed]";
    out << " -- " << v.witness << "\n";
    if (!v.left_spectrum.empty())
      out << "    left  " << format_spectrum(v.left_spectrum) << "\n    right "
          << format_spectrum(v.right_spectrum) << "\n";
  }
  return out.str();
}

Report report_for_pair(const CospectralPair& pair, const ReportOptions& opts) {
  Report report;
  report.construction = construction_name(pair.construction);
  report.params = seed_params_json(pair.params, pair.construction);
  report.orders = {pair.left.order(), pair.right.order()};
  report.degenerate = pair.degenerate;
  report.degenerate_reason = pair.degenerate_reason;
  report.enforced = opts.enforced.empty() ? default_enforced(pair.claims) : opts.enforced;

  push_verdict(report, adjacency_cospectral(pair.left, pair.right));
  push_verdict(report, normalized_cospectral(pair.left, pair.right));
  if (opts.include_isomorphism)
    push_verdict(report, non_isomorphic_verdict(pair.left, pair.right, opts.iso_bound));

  report.adjacency_coeffs = {coeff_strings(adjacency_charpoly(pair.left)),
                             coeff_strings(adjacency_charpoly(pair.right))};
  report.normalized_polys = {rational_poly_json(normalized_laplacian_charpoly(pair.left)),
                             rational_poly_json(normalized_laplacian_charpoly(pair.right))};
  return report;
}

Report report_for_family(const CospectralFamily& family, const ReportOptions& opts) {
  Report report;
  report.construction = construction_name(Construction::Fk);
  report.params = seed_params_json(family.params, Construction::Fk);
  for (const Graph& g : family.members) report.orders.push_back(g.order());
  report.enforced = opts.enforced.empty() ? default_enforced(family.claims) : opts.enforced;

  const std::size_t count = family.members.size();
  for (std::size_t i = 1; i < count; ++i) {
    Verdict adj = adjacency_cospectral(family.members[0], family.members[i]);
    adj.claim = "adjacency-cospectral";
    adj.witness = "F_" + std::to_string(family.divisors[0]) + " vs F_" +
                  std::to_string(family.divisors[i]) + ": " + adj.witness;
    push_verdict(report, std::move(adj));
    Verdict norm = normalized_cospectral(family.members[0], family.members[i]);
    norm.witness = "F_" + std::to_string(family.divisors[0]) + " vs F_" +
                   std::to_string(family.divisors[i]) + ": " + norm.witness;
    push_verdict(report, std::move(norm));
  }
  if (opts.include_isomorphism) {
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        Verdict v = non_isomorphic_verdict(family.members[i], family.members[j], opts.iso_bound);
        v.witness = "F_" + std::to_string(family.divisors[i]) + " vs F_" +
                    std::to_string(family.divisors[j]) + ": " + v.witness;
        push_verdict(report, std::move(v));
      }
    }
  }
  for (const Graph& g : family.members)
    report.adjacency_coeffs.push_back(coeff_strings(adjacency_charpoly(g)));
  for (const Graph& g : family.members)
    report.normalized_polys.push_back(rational_poly_json(normalized_laplacian_charpoly(g)));
  return report;
}

Report report_for_graphs(const Graph& left, const Graph& right, const ReportOptions& opts) {
  Report report;
  report.construction = "(verify)";
  report.orders = {left.order(), right.order()};
  report.enforced = opts.enforced;

  if (opts.enforced.count("adjacency-cospectral"))
    push_verdict(report, adjacency_cospectral(left, right));
  if (opts.enforced.count("normalized-cospectral"))
    push_verdict(report, normalized_cospectral(left, right));
  if (opts.enforced.count("non-isomorphic"))
    push_verdict(report, non_isomorphic_verdict(left, right, opts.iso_bound));

  report.adjacency_coeffs = {coeff_strings(adjacency_charpoly(left)),
                             coeff_strings(adjacency_charpoly(right))};
  report.normalized_polys = {rational_poly_json(normalized_laplacian_charpoly(left)),
                             rational_poly_json(normalized_laplacian_charpoly(right))};
  return report;
}

}  // namespace cospectra
