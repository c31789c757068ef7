#include "mapwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mapwalk {

namespace {

int search_limit(const ProjectedSequence& seq, int t_max) {
  // Past the map period everything repeats, and B'_p = D excludes new
  // transfer pairs at t = p itself.
  if (seq.period()) return std::min(t_max, *seq.period());
  return std::min(t_max, seq.computed_to());
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::vector<PstPair> detect_pst(const ProjectedSequence& seq, int t_max) {
  const QMatrix& d = seq.degree();
  const int nv = static_cast<int>(d.rows());
  const int limit = search_limit(seq, t_max);
  std::vector<PstPair> pairs;
  std::vector<bool> paired(static_cast<size_t>(nv), false);
  for (int t = 1; t <= limit; ++t) {
    const QMatrix& b = seq.at(t);
    for (int u = 0; u < nv; ++u)
      for (int v = u + 1; v < nv; ++v) {
        if (d(u, u) != d(v, v) || b(u, v) != d(u, u)) continue;
        if (b(v, u) != d(u, u)) throw std::logic_error("projected sequence lost symmetry");
        bool known = std::any_of(pairs.begin(), pairs.end(),
                                 [&](const PstPair& p) { return p.u == u && p.v == v; });
        if (known) continue;
        if (paired[static_cast<size_t>(u)] || paired[static_cast<size_t>(v)])
          throw std::logic_error("a vertex admits perfect state transfer to two partners");
        // Periodicity at 2t, via B'_{2t} = 2 B'_t D^{-1} B'_t - D.
        for (int w : {u, v}) {
          Rational diag(0);
          for (int x = 0; x < nv; ++x) diag += b(w, x) * b(w, x) / d(x, x);
          if (2 * diag - d(w, w) != d(w, w))
            throw std::logic_error("perfect state transfer without periodicity at twice the time");
        }
        pairs.push_back({u, v, t});
        paired[static_cast<size_t>(u)] = paired[static_cast<size_t>(v)] = true;
      }
  }
  return pairs;
}

std::vector<PstPair> detect_general_pst(const WalkOperator& op, int t_max) {
  const Incidence& inc = op.inc;
  const int na = static_cast<int>(inc.N.rows());
  const int nv = static_cast<int>(inc.N.cols());
  std::vector<int> vertex_of(static_cast<size_t>(na));
  for (int a = 0; a < na; ++a)
    for (int v = 0; v < nv; ++v)
      if (inc.N(a, v) == 1) vertex_of[static_cast<size_t>(a)] = v;
  std::vector<PstPair> found;
  std::vector<std::vector<bool>> seen(static_cast<size_t>(nv),
                                      std::vector<bool>(static_cast<size_t>(nv), false));
  QMatrix columns = inc.N;
  for (int t = 1; t <= t_max; ++t) {
    columns = QMatrix(op.U * columns);
    for (int u = 0; u < nv; ++u) {
      int support_vertex = -1;
      bool single = true;
      for (int a = 0; a < na && single; ++a) {
        if (columns(a, u) == 0) continue;
        int v = vertex_of[static_cast<size_t>(a)];
        if (support_vertex < 0) support_vertex = v;
        single = support_vertex == v;
      }
      if (!single || support_vertex < 0 || support_vertex == u) continue;
      if (inc.D(u, u) == inc.D(support_vertex, support_vertex)) continue;  // ordinary PST
      if (!seen[static_cast<size_t>(u)][static_cast<size_t>(support_vertex)]) {
        seen[static_cast<size_t>(u)][static_cast<size_t>(support_vertex)] = true;
        found.push_back({u, support_vertex, t});
      }
    }
  }
  return found;
}

std::vector<VertexPeriod> detect_periodic_vertices(const ProjectedSequence& seq, int t_max) {
  const QMatrix& d = seq.degree();
  const int nv = static_cast<int>(d.rows());
  const int limit = search_limit(seq, t_max);
  std::vector<VertexPeriod> out;
  std::vector<bool> found(static_cast<size_t>(nv), false);
  for (int t = 1; t <= limit; ++t) {
    const QMatrix& b = seq.at(t);
    for (int v = 0; v < nv; ++v) {
      if (found[static_cast<size_t>(v)] || b(v, v) != d(v, v)) continue;
      found[static_cast<size_t>(v)] = true;
      out.push_back({v, t});
    }
  }
  return out;
}

PeriodicityReport detect_periodicity(const ProjectedSequence& seq, int t_max) {
  PeriodicityReport report;
  report.periodic_vertices = detect_periodic_vertices(seq, t_max);
  if (seq.period() && *seq.period() <= t_max) report.map_period = seq.period();
  return report;
}

std::optional<int> detect_identity_power(const ProjectedSequence& primal,
                                         const ProjectedSequence& dual_seq, int t_max) {
  if (!primal.period() || !dual_seq.period()) return std::nullopt;
  long s = std::lcm(*primal.period(), *dual_seq.period());
  if (s > t_max) return std::nullopt;
  int power = static_cast<int>(s);
  if (!primal.identity_at(power) || !dual_seq.identity_at(power))
    throw std::logic_error("periodicity times are not closing under lcm");
  return power;
}

std::optional<int> detect_identity_power(const Map& map, const Incidence& inc, int t_max) {
  WalkOperator op = build_operator(map, inc);
  Map dual_map = dual(map);
  Incidence dual_inc = incidence(dual_map);
  WalkOperator dual_op = build_operator(dual_map, dual_inc);
  ProjectedSequence primal(op, t_max);
  ProjectedSequence dseq(dual_op, t_max);
  return detect_identity_power(primal, dseq, t_max);
}

U2Report characterize_u2(const Map& map, const Incidence& inc, const WalkOperator& op) {
  U2Report rep;
  const int na = map.dart_count;
  const Rational inv_arcs = make_rational(1, na);

  rep.via_square = QMatrix(op.U * op.U) == QMatrix(QMatrix::Identity(na, na));

  rep.via_projectors = true;
  for (int a = 0; a < na && rep.via_projectors; ++a) {
    int fa = map.face_of[static_cast<size_t>(a)];
    for (int b = 0; b < na; ++b) {
      int vb = map.vertex_of[static_cast<size_t>(b)];
      Rational pq = inc.C(vb, fa) / Rational(map.face_degree(fa) * map.vertex_degree(vb));
      if (pq != inv_arcs) {
        rep.via_projectors = false;
        break;
      }
    }
  }

  rep.via_c_entries = true;
  for (int v = 0; v < map.vertex_count && rep.via_c_entries; ++v)
    for (int f = 0; f < map.face_count; ++f)
      if (inc.C(v, f) != Rational(map.vertex_degree(v) * map.face_degree(f)) * inv_arcs) {
        rep.via_c_entries = false;
        break;
      }

  QMatrix gram = inc.C;
  for (int f = 0; f < map.face_count; ++f) gram.col(f) /= inc.Delta(f, f);
  gram = QMatrix(gram * inc.C.transpose());
  rep.via_gram = true;
  for (int u = 0; u < map.vertex_count && rep.via_gram; ++u)
    for (int v = 0; v < map.vertex_count; ++v)
      if (gram(u, v) != Rational(map.vertex_degree(u) * map.vertex_degree(v)) * inv_arcs) {
        rep.via_gram = false;
        break;
      }

  rep.via_facial_walks = true;
  std::map<std::pair<int, int>, int> visits;
  for (const auto& walk : face_walks(map))
    for (int dart : walk)
      ++visits[{map.vertex_of[static_cast<size_t>(dart)], map.face_of[static_cast<size_t>(dart)]}];
  for (int v = 0; v < map.vertex_count && rep.via_facial_walks; ++v)
    for (int f = 0; f < map.face_count; ++f) {
      auto it = visits.find({v, f});
      Rational count(it == visits.end() ? 0 : it->second);
      if (count != Rational(map.vertex_degree(v) * map.face_degree(f)) * inv_arcs) {
        rep.via_facial_walks = false;
        rep.failing_visit = {v, f};
        break;
      }
    }

  if (rep.via_square != rep.via_projectors || rep.via_square != rep.via_c_entries ||
      rep.via_square != rep.via_gram || rep.via_square != rep.via_facial_walks)
    throw std::logic_error("the five characterizations of U^2 = I disagree");
  rep.holds = rep.via_square;
  return rep;
}

std::optional<bool> u2_type_kd_fast_path(const Map& map, const Incidence& inc) {
  MapProfile profile = map_profile(map);
  if (!profile.uniform_vertex_degree || !profile.uniform_face_degree) return std::nullopt;
  Rational expected = make_rational(*profile.uniform_face_degree, map.vertex_count);
  for (int v = 0; v < map.vertex_count; ++v)
    for (int f = 0; f < map.face_count; ++f)
      if (inc.C(v, f) != expected) return false;
  return true;
}

OddPrimeCase classify_odd_prime_power(const Map& map, const MapProfile& profile,
                           const ProjectedSequence& primal, const ProjectedSequence& dual_seq,
                           int p) {
  if (!profile.uniform_vertex_degree || !profile.uniform_face_degree ||
      !profile.incidence_multiplicity)
    throw std::invalid_argument("classify_odd_prime_power: map must have uniform type and multiplicity");
  if (!is_odd_prime(p)) throw std::invalid_argument("classify_odd_prime_power: p must be an odd prime");

  if (!primal.identity_at(p) || !dual_seq.identity_at(p)) return OddPrimeCase::not_applicable;

  const int d = *profile.uniform_vertex_degree;
  const int alpha = *profile.incidence_multiplicity;
  const bool case_i = d == alpha;
  const bool case_ii = d == 2 * alpha && map.vertex_count == p && map.face_count == p &&
                       alpha % 2 == 0;
  const bool case_iii = d == 3 * alpha && p == 3 && map.vertex_count == 9 &&
                        map.face_count == 9 && alpha % 4 == 0;
  const int matches = int(case_i) + int(case_ii) + int(case_iii);
  if (matches != 1)
    throw std::logic_error("classify_odd_prime_power: exactly one case must hold when U^p = I");
  if (case_i && !(map.vertex_count == 1 && map.face_count == 1))
    throw std::logic_error("classify_odd_prime_power: case (i) requires a quasi-tree bouquet");
  if (case_i) return OddPrimeCase::case_i;
  if (case_ii) return OddPrimeCase::case_ii;
  return OddPrimeCase::case_iii;
}

std::optional<std::vector<int>> rationality_period_constraint(const Incidence& inc) {
  if (rational_eigenvalues(chat_gram_similar(inc)).all_rational)
    return std::vector<int>{1, 2, 3, 4, 6, 12};
  return std::nullopt;
}

Tristate strong_cospectrality(const ProjectedSequence& seq, int u, int v, int d,
                              const CospectralityOptions& opts) {
  if (d < 1) throw std::invalid_argument("strong_cospectrality: divisor must be >= 1");
  const QMatrix& degree = seq.degree();
  const int nv = static_cast<int>(degree.rows());
  RealMatrix b = to_real(seq.at(d));
  RealVector dinv_sqrt(nv);
  for (int i = 0; i < nv; ++i) dinv_sqrt(i) = 1.0 / std::sqrt(to_double(degree(i, i)));
  b = dinv_sqrt.asDiagonal() * b * dinv_sqrt.asDiagonal();
  SymmetricEigs eigs = symmetric_eigs(b);

  std::vector<std::pair<int, int>> clusters;
  for (int i = 0; i < eigs.values.size();) {
    int j = i + 1;
    while (j < eigs.values.size() && eigs.values(j) - eigs.values(j - 1) <= opts.cluster_radius)
      ++j;
    clusters.emplace_back(i, j);
    i = j;
  }
  for (size_t k = 1; k < clusters.size(); ++k) {
    double gap = eigs.values(clusters[k].first) - eigs.values(clusters[k - 1].second - 1);
    if (gap < opts.min_gap) return Tristate::indeterminate;
  }
  for (auto [begin, end] : clusters) {
    RealMatrix basis = eigs.vectors.middleCols(begin, end - begin);
    RealVector eu = basis * RealVector(basis.row(u).transpose());
    RealVector ev = basis * RealVector(basis.row(v).transpose());
    double scale = std::max({1.0, eu.cwiseAbs().maxCoeff(), ev.cwiseAbs().maxCoeff()});
    double diff = (ev - eu).cwiseAbs().maxCoeff();
    double sum = (ev + eu).cwiseAbs().maxCoeff();
    if (std::min(diff, sum) > opts.compare_tol * scale) return Tristate::no;
  }
  return Tristate::yes;
}

VariantTransfers variant_transfers(const WalkOperator& op, int t_max) {
  VariantTransfers out;
  const Incidence& inc = op.inc;
  const int na = static_cast<int>(inc.N.rows());
  const int nv = static_cast<int>(inc.N.cols());
  const int nf = static_cast<int>(inc.M.cols());
  QMatrix reversed_n = QMatrix(inc.R * inc.N);
  std::vector<std::vector<bool>> seen_rev(static_cast<size_t>(nv),
                                          std::vector<bool>(static_cast<size_t>(nv), false));
  std::vector<std::vector<bool>> seen_vf(static_cast<size_t>(nv),
                                         std::vector<bool>(static_cast<size_t>(nf), false));
  QMatrix columns = inc.N;
  for (int t = 1; t <= t_max; ++t) {
    columns = QMatrix(op.U * columns);
    for (int u = 0; u < nv; ++u) {
      // Candidate targets are pinned by the first dart in the support; the
      // transferred state is a 0/1 vector when a transfer happens at all.
      int first = -1;
      for (int a = 0; a < na; ++a)
        if (columns(a, u) != 0) {
          first = a;
          break;
        }
      if (first < 0) continue;
      for (int v = 0; v < nv; ++v) {
        if (seen_rev[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
        if (reversed_n(first, v) == 0) continue;
        if (columns.col(u) == reversed_n.col(v)) {
          seen_rev[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
          out.reverse.push_back({u, v, t});
        }
      }
      for (int f = 0; f < nf; ++f) {
        if (seen_vf[static_cast<size_t>(u)][static_cast<size_t>(f)]) continue;
        if (inc.M(first, f) == 0) continue;
        if (columns.col(u) == inc.M.col(f)) {
          seen_vf[static_cast<size_t>(u)][static_cast<size_t>(f)] = true;
          out.vertex_face.push_back({u, f, t});
        }
      }
    }
  }
  return out;
}

Integer period_bound(int nv, int nf) {
  if (nv < 1 || nf < 1) throw std::invalid_argument("period_bound: counts must be >= 1");
  long m = std::min(nv, nf);
  Integer fact = factorial(static_cast<unsigned long>(8 * m * m));
  return fact / 2;
}

std::vector<PstPair> propagate_pst_by_symmetry(const Map& map,
                                               const std::vector<Automorphism>& autos,
                                               const PstPair& pair) {
  if (!vertex_transitive(map, autos))
    throw std::invalid_argument("propagate_pst_by_symmetry: map is not vertex-transitive");
  std::vector<PstPair> pairs;
  std::vector<int> partner(static_cast<size_t>(map.vertex_count), -1);
  for (const Automorphism& a : autos) {
    int x = a.vertex_perm[static_cast<size_t>(pair.u)];
    int y = a.vertex_perm[static_cast<size_t>(pair.v)];
    if (partner[static_cast<size_t>(x)] < 0 && partner[static_cast<size_t>(y)] < 0) {
      partner[static_cast<size_t>(x)] = y;
      partner[static_cast<size_t>(y)] = x;
      pairs.push_back({std::min(x, y), std::max(x, y), pair.time});
    } else if (partner[static_cast<size_t>(x)] != y) {
      throw std::logic_error("symmetry propagation produced conflicting partners");
    }
  }
  for (int v = 0; v < map.vertex_count; ++v)
    if (partner[static_cast<size_t>(v)] < 0)
      throw std::logic_error("symmetry propagation did not pair every vertex");
  std::sort(pairs.begin(), pairs.end(),
            [](const PstPair& a, const PstPair& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return pairs;
}

std::vector<int> primitive_orders_advisory(const SpectralData& spectral, int max_order,
                                           double tol) {
  std::vector<int> orders;
  for (const UEigenvalue& eig : spectral.u_eigs) {
    if (eig.value.imag() < 0) continue;
    double frac = std::atan2(eig.value.imag(), eig.value.real()) / (2.0 * M_PI);
    if (frac < 0) frac += 1.0;
    // Best rational approximation j/s with s <= max_order (Stern-Brocot walk).
    long a = 0, b = 1, c = 1, d = 1;
    long best_num = 0, best_den = 1;
    double best_err = std::abs(frac);
    while (b + d <= max_order) {
      long mn = a + c, md = b + d;
      double mediant = double(mn) / double(md);
      if (std::abs(frac - mediant) < best_err) {
        best_err = std::abs(frac - mediant);
        best_num = mn;
        best_den = md;
      }
      if (frac < mediant) {
        c = mn;
        d = md;
      } else {
        a = mn;
        b = md;
      }
    }
    if (best_err > tol) continue;
    long g = std::gcd(best_num, best_den);
    long order = best_den / std::max(1L, g);
    if (best_num == 0) order = 1;
    if (std::find(orders.begin(), orders.end(), static_cast<int>(order)) == orders.end())
      orders.push_back(static_cast<int>(order));
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

AnalysisReport analyze(const Map& map, const Incidence& inc, const WalkOperator& op,
                       const SpectralData& spectral, const AnalysisOptions& options) {
  AnalysisReport report;
  report.horizon = options.max_steps;

  Map dual_map = dual(map);
  Incidence dual_inc = incidence(dual_map);
  WalkOperator dual_op = build_operator(dual_map, dual_inc);
  ProjectedSequence seq(op, options.max_steps);
  ProjectedSequence dual_seq(dual_op, options.max_steps);

  report.pst_pairs = detect_pst(seq, options.max_steps);
  if (options.general_pst) report.general_pst_pairs = detect_general_pst(op, options.max_steps);
  report.periodic_vertices = detect_periodic_vertices(seq, options.max_steps);
  report.map_period = seq.period();
  report.identity_power = detect_identity_power(seq, dual_seq, options.max_steps);
  report.period_power_is_identity =
      report.map_period && report.identity_power && *report.map_period == *report.identity_power;

  if (report.map_period) {
    // Parity rule: an even period is the identity power; an odd period is
    // iff |V| = |F|, and otherwise the identity power is twice the period.
    const int tau = *report.map_period;
    const bool expect_identity = tau % 2 == 0 || map.vertex_count == map.face_count;
    if (tau % 2 == 1 && map.vertex_count > map.face_count)
      throw std::logic_error("odd period with more vertices than faces is impossible");
    if (expect_identity != report.period_power_is_identity)
      throw std::logic_error("identity power disagrees with the period parity rule");
    if (!expect_identity && report.identity_power && *report.identity_power != 2 * tau)
      throw std::logic_error("identity power must be twice an odd period");
  }

  report.identity_power_constraint = rationality_period_constraint(inc);
  report.rational_cc_spectrum = report.identity_power_constraint.has_value();
  if (report.rational_cc_spectrum && report.identity_power) {
    const auto& allowed = *report.identity_power_constraint;
    if (std::find(allowed.begin(), allowed.end(), *report.identity_power) == allowed.end())
      throw std::logic_error("identity power violates the rational-spectrum constraint");
  }

  report.quasi_tree_bouquet = map.vertex_count == 1 && map.face_count == 1;
  report.u2 = characterize_u2(map, inc, op);
  if (auto fast = u2_type_kd_fast_path(map, inc); fast && *fast != report.u2.holds)
    throw std::logic_error("type (k,d) fast path disagrees with the U^2 characterization");

  MapProfile profile = map_profile(map);
  if (profile.uniform_vertex_degree && profile.uniform_face_degree &&
      profile.incidence_multiplicity && report.identity_power) {
    int s = *report.identity_power;
    int p = s == 1 ? 3 : s;  // U = I satisfies U^p = I for every odd prime
    if (is_odd_prime(p) && p <= options.max_steps) {
      report.odd_prime_case = classify_odd_prime_power(map, profile, seq, dual_seq, p);
      report.odd_prime = p;
    }
  }

  for (const PstPair& pair : report.pst_pairs)
    for (int d : divisors(pair.time))
      report.cospectral_pairs.push_back(
          {pair.u, pair.v, d, strong_cospectrality(seq, pair.u, pair.v, d)});

  if (options.with_variants) {
    int limit = search_limit(seq, options.max_steps);
    report.variants = variant_transfers(op, limit);
  }

  report.period_time_bound = period_bound(map.vertex_count, map.face_count);
  report.primitive_orders = primitive_orders_advisory(spectral);

  if (options.with_automorphisms) {
    std::vector<Automorphism> autos = automorphisms(map);
    AutomorphismSummary summary;
    summary.order = static_cast<int>(autos.size());
    summary.vertex_transitive = vertex_transitive(map, autos);
    summary.reflexible = is_reflexible(map);
    report.automorphisms = summary;
    if (summary.vertex_transitive && !report.pst_pairs.empty()) {
      auto full = propagate_pst_by_symmetry(map, autos, report.pst_pairs.front());
      auto detected = report.pst_pairs;
      std::sort(detected.begin(), detected.end(), [](const PstPair& a, const PstPair& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
      });
      if (full.size() * 2 != static_cast<size_t>(map.vertex_count) || full != detected)
        throw std::logic_error("detected pairs disagree with symmetry propagation");
      const int tau = report.pst_pairs.front().time;
      const bool primal_reach = seq.period() || 2 * tau <= seq.computed_to();
      const bool dual_reach = dual_seq.period() || 2 * tau <= dual_seq.computed_to();
      if (primal_reach && !seq.identity_at(2 * tau))
        throw std::logic_error("transitive transfer must force periodicity at 2 tau");
      if (dual_reach && !dual_seq.identity_at(2 * tau))
        throw std::logic_error("transitive transfer must force U^{2 tau} = I");
    }
  }
  return report;
}

}  // namespace mapwalk
