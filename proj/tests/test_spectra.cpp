#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mapwalk/families.hpp"
#include "mapwalk/spectra.hpp"
#include "mapwalk/walk.hpp"
#include "support.hpp"

using namespace mapwalk;
using mapwalk::testing::small_battery;

TEST_CASE("symmetric_eigs on known diagonals") {
  RealMatrix a = RealMatrix::Zero(3, 3);
  a(1, 1) = 0.25;
  a(2, 2) = 1.0;
  SymmetricEigs eigs = symmetric_eigs(a);
  CHECK(eigs.values(0) == doctest::Approx(0.0));
  CHECK(eigs.values(1) == doctest::Approx(0.25));
  CHECK(eigs.values(2) == doctest::Approx(1.0));

  RealMatrix j2 = RealMatrix::Constant(2, 2, 0.5);
  SymmetricEigs half = symmetric_eigs(j2);
  CHECK(half.values(0) == doctest::Approx(0.0));
  CHECK(half.values(1) == doctest::Approx(1.0));
}

TEST_CASE("symmetric_eigs rejects asymmetric input") {
  RealMatrix a = RealMatrix::Zero(2, 2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(symmetric_eigs(a), std::invalid_argument);
}

TEST_CASE("the (2,3)-grid gram matrix has eigenvalues {0, 1/4, 1}") {
  Incidence inc = incidence(toroidal_grid(2, 3).map);
  SymmetricEigs eigs = symmetric_eigs(chat_gram(inc));
  std::vector<double> expected = {0, 0, 0, 0.25, 0.25, 1.0};
  REQUIRE(eigs.values.size() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(eigs.values(i) == doctest::Approx(expected[static_cast<size_t>(i)]).epsilon(1e-9));
}

TEST_CASE("u_spectrum of the (2,3)-grid matches the eigenspace dimensions") {
  Map m = toroidal_grid(2, 3).map;
  SpectralData data = u_spectrum(m, incidence(m));
  CHECK(data.dim_plus1 == 14);
  CHECK(data.dim_minus1 == 6);
  CHECK(data.rank_c == 3);
  int total = 0;
  int thirds = 0;
  for (const auto& e : data.u_eigs) {
    total += e.multiplicity;
    // roots of t^2 + t + 1 sit at -1/2 +- sqrt(3)/2 i
    if (std::abs(e.value.real() + 0.5) < 1e-9 &&
        std::abs(std::abs(e.value.imag()) - std::sqrt(3.0) / 2.0) < 1e-9) {
      thirds += e.multiplicity;
      CHECK(e.multiplicity == 2);
    }
  }
  CHECK(total == 24);
  CHECK(thirds == 4);
}

TEST_CASE("the digon walk has eigenvalues +-1 only") {
  Map m = dipole(2).map;
  SpectralData data = u_spectrum(m, incidence(m));
  CHECK(data.dim_plus1 == 2);
  CHECK(data.dim_minus1 == 2);
  REQUIRE(data.u_eigs.size() == 2);
  CHECK(data.u_eigs[0].value == std::complex<double>(-1.0, 0.0));
  CHECK(data.u_eigs[1].value == std::complex<double>(1.0, 0.0));
}

TEST_CASE("a quasi-tree bouquet has only the eigenvalue 1") {
  Map m = bouquet({0, 2, 1, 3}).map;
  SpectralData data = u_spectrum(m, incidence(m));
  CHECK(data.dim_plus1 == m.dart_count);
  CHECK(data.dim_minus1 == 0);
  REQUIRE(data.u_eigs.size() == 1);
  CHECK(data.u_eigs[0].value == std::complex<double>(1.0, 0.0));
}

TEST_CASE("dimension formulas and trace identities hold on the battery") {
  for (const auto& inst : small_battery()) {
    INFO(inst.name);
    const Map& m = inst.map;
    Incidence inc = incidence(m);
    SpectralData data = u_spectrum(m, inc);
    CHECK(data.dim_plus1 == m.edge_count + 2 * m.genus);
    CHECK(data.dim_minus1 == m.vertex_count + m.face_count - 2 * data.rank_c);
    int total = 0;
    for (const auto& e : data.u_eigs) total += e.multiplicity;
    CHECK(total == 2 * m.edge_count);

    WalkOperator op = build_operator(m, inc);
    Rational trace(0);
    for (int a = 0; a < m.dart_count; ++a) trace += op.U(a, a);
    double eig_sum = 0;
    for (const auto& e : data.u_eigs) eig_sum += e.value.real() * e.multiplicity;
    CHECK(std::abs(to_double(trace) - eig_sum) < 1e-9);

    MapProfile profile = map_profile(m);
    if (profile.uniform_vertex_degree && profile.uniform_face_degree &&
        profile.incidence_multiplicity) {
      // trace = 4 alpha |V| / k - 2|F| - 2|V| + |A| for type (k,d) maps.
      Rational expected = make_rational(4L * *profile.incidence_multiplicity * m.vertex_count,
                                        *profile.uniform_face_degree) -
                          2 * m.face_count - 2 * m.vertex_count + m.dart_count;
      CHECK(trace == expected);
    }

    // When -1 is not an eigenvalue, |V| = |F|.
    if (data.dim_minus1 == 0) CHECK(m.vertex_count == m.face_count);
  }
}

TEST_CASE("float gram eigenvalues agree with the exact rational roots") {
  for (const auto& inst : {toroidal_grid(2, 3), toroidal_grid(1, 4), dipole(4)}) {
    Incidence inc = incidence(inst.map);
    RationalSpectrum spec = rational_eigenvalues(chat_gram_similar(inc));
    REQUIRE(spec.all_rational);
    SymmetricEigs eigs = symmetric_eigs(chat_gram(inc));
    int i = 0;
    for (const auto& [value, mult] : spec.roots)
      for (int k = 0; k < mult; ++k, ++i)
        CHECK(std::abs(eigs.values(i) - to_double(value)) < 1e-9);
    CHECK(i == eigs.values.size());
  }
}

TEST_CASE("the (1,5)-grid has an irrational gram spectrum") {
  Incidence inc = incidence(toroidal_grid(1, 5).map);
  RationalSpectrum spec = rational_eigenvalues(chat_gram_similar(inc));
  CHECK(!spec.all_rational);
}
