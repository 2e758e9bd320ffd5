#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pvqe/chem/hartree_fock.hpp"
#include "pvqe/errors.hpp"
#include "pvqe/qubitop/dense.hpp"
#include "pvqe/qubitop/grouping.hpp"
#include "pvqe/qubitop/mapping.hpp"
#include "pvqe/qubitop/pauli_io.hpp"

using namespace pvqe;
using namespace pvqe::qubitop;

namespace {

chem::MoHamiltonian hamiltonian(const chem::SystemSpec& spec) {
  auto g = chem::build_geometry(spec);
  auto ints = chem::ao_integrals(g);
  return chem::mo_hamiltonian(ints, chem::hartree_fock(ints, g.n_alpha(), g.n_beta()));
}

/// Random real MoHamiltonian over two spatial orbitals with the spatial
/// permutational symmetries of real orbitals.
chem::MoHamiltonian random_toy(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = 2;
  Eigen::MatrixXd hs(n, n);
  hs << u(rng), u(rng), 0, u(rng);
  hs(1, 0) = hs(0, 1);
  chem::Tensor4 g(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * n + q < r * n + s) continue;
          double v = u(rng);
          for (auto [a, b, c, d] : {std::array{p, q, r, s}, {q, p, r, s}, {p, q, s, r}, {q, p, s, r},
                                    {r, s, p, q}, {s, r, p, q}, {r, s, q, p}, {s, r, q, p}})
            g(a, b, c, d) = v;
        }
  chem::MoHamiltonian h;
  h.one_body = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  h.one_body.topLeftCorner(n, n) = hs;
  h.one_body.bottomRightCorner(n, n) = hs;
  h.two_body = chem::Tensor4(2 * n);
  for (int p = 0; p < 2 * n; ++p)
    for (int q = 0; q < 2 * n; ++q)
      for (int r = 0; r < 2 * n; ++r)
        for (int s = 0; s < 2 * n; ++s)
          if (p / n == r / n && q / n == s / n) h.two_body(p, q, r, s) = g(p % n, r % n, q % n, s % n);
  h.constant = u(rng);
  h.n_alpha = h.n_beta = 1;
  return h;
}

}  // namespace

TEST(Pauli, LabelOrderingQubitZeroRightmost) {
  auto p = PauliString::from_label("XIZY");
  EXPECT_EQ(p.at(0), 'Y');
  EXPECT_EQ(p.at(1), 'Z');
  EXPECT_EQ(p.at(3), 'X');
  EXPECT_EQ(p.label(), "XIZY");
  EXPECT_EQ(PauliString::single(3, 0, 'X').label(), "IIX");
  EXPECT_THROW(PauliString::from_label("XQ"), ConfigError);
}

TEST(Pauli, ProductsMatchMatrices) {
  const char* letters = "IXYZ";
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      std::string la{letters[a / 4], letters[a % 4]}, lb{letters[b / 4], letters[b % 4]};
      auto [phase, prod] = multiply(PauliString::from_label(la), PauliString::from_label(lb));
      Eigen::MatrixXcd lhs = oracle::label_matrix(la) * oracle::label_matrix(lb);
      EXPECT_LT((lhs - phase * oracle::label_matrix(prod.label())).norm(), 1e-14) << la << "*" << lb;
      bool comm = (lhs - oracle::label_matrix(lb) * oracle::label_matrix(la)).norm() < 1e-12;
      EXPECT_EQ(commutes(PauliString::from_label(la), PauliString::from_label(lb)), comm);
    }
}

TEST(Pauli, QubitwiseCommutation) {
  EXPECT_TRUE(qubitwise_commutes(PauliString::from_label("XIZ"), PauliString::from_label("XZI")));
  EXPECT_FALSE(qubitwise_commutes(PauliString::from_label("XX"), PauliString::from_label("YY")));
  EXPECT_TRUE(commutes(PauliString::from_label("XX"), PauliString::from_label("YY")));
}

TEST(JordanWigner, NumberOperator) {
  auto n0 = jw_creation(0, 3) * jw_annihilation(0, 3);
  auto op = PauliSum::from_operator(n0);
  op.prune(kPruneThreshold);
  EXPECT_EQ(op.size(), 2u);
  EXPECT_DOUBLE_EQ(op.coefficient("III"), 0.5);
  EXPECT_DOUBLE_EQ(op.coefficient("IIZ"), -0.5);
}

TEST(JordanWigner, MatchesFockSpaceOnToyHamiltonians) {
  for (unsigned seed = 1; seed <= 5; ++seed) {
    auto h = random_toy(seed);
    Eigen::MatrixXd fock = oracle::fock_matrix(h);
    Eigen::MatrixXcd jw = to_matrix(jordan_wigner(h));
    EXPECT_LT((jw - fock.cast<cplx>()).norm(), 1e-12) << seed;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a(fock);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> b(jw);
    EXPECT_LT((a.eigenvalues() - b.eigenvalues()).norm(), 1e-12);
  }
}

TEST(JordanWigner, MatchesFockSpaceOnH3) {
  auto h = hamiltonian(chem::H3Spec{40.0, 1.43});
  Eigen::MatrixXcd jw = to_matrix(jordan_wigner(h));
  EXPECT_LT((jw - oracle::fock_matrix(h).cast<cplx>()).norm(), 1e-10);
}

TEST(JordanWigner, TermCounts) {
  EXPECT_EQ(jordan_wigner(hamiltonian(chem::H3Spec{60.0, 1.43})).size(), 62u);
  EXPECT_EQ(jordan_wigner(hamiltonian(chem::H4Spec{40.0, 1.8})).size(), 97u);
  EXPECT_EQ(jordan_wigner(hamiltonian(chem::H3Spec{60.0, 1.43})).n_qubits(), 6);
}

TEST(Parity, H2ReducesToFiveTerms) {
  auto red = parity_map_reduce_h2(hamiltonian(chem::H2Spec{0.74}));
  ASSERT_EQ(red.op.size(), 5u);
  std::set<std::string> labels;
  for (const auto& [p, c] : red.op.terms()) labels.insert(p.label());
  EXPECT_EQ(labels, (std::set<std::string>{"II", "IZ", "ZI", "ZZ", "XX"}));
  Eigen::MatrixXcd m = to_matrix(red.op);
  EXPECT_NEAR(m.trace().real() / 4.0, red.op.identity_coefficient(), 1e-14);
}

TEST(Parity, ReducedGroundMatchesFullJw) {
  for (double d : {0.3, 0.74, 1.5, 2.5}) {
    auto h = hamiltonian(chem::H2Spec{d});
    auto red = parity_map_reduce_h2(h);
    double full = oracle::power_iteration_min(oracle::fock_matrix(h));
    EXPECT_NEAR(exact_ground(red.op).energy, full, 1e-9) << d;
    EXPECT_NEAR(red.full_ground_energy, full, 1e-9) << d;
  }
}

TEST(Parity, TransformPreservesSpectrum) {
  auto jw = jordan_wigner(hamiltonian(chem::H2Spec{1.1}));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> a(to_matrix(jw)), b(to_matrix(parity_transform(jw)));
  EXPECT_LT((a.eigenvalues() - b.eigenvalues()).norm(), 1e-12);
}

TEST(Grouping, SmallCases) {
  PauliSum xyz(2);
  xyz.add("XX", 1.0);
  xyz.add("YY", 1.0);
  xyz.add("ZZ", 1.0);
  EXPECT_EQ(group_qubitwise(xyz).size(), 3u);

  PauliSum zs(3);
  zs.add("III", 2.0);
  zs.add("ZII", 1.0);
  zs.add("IZZ", -0.5);
  zs.add("ZZZ", 0.25);
  auto g = group_qubitwise(zs);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].members.size(), 3u);
  EXPECT_EQ(g[0].basis.label(), "ZZZ");
  EXPECT_THROW(group_qubitwise(PauliSum(2)), ConfigError);
}

TEST(Grouping, CoversEveryTermOnceAndCommutes) {
  for (auto spec : {chem::SystemSpec{chem::H3Spec{60.0, 1.43}}, chem::SystemSpec{chem::H4Spec{40.0, 1.8}}}) {
    auto op = jordan_wigner(hamiltonian(spec));
    auto groups = group_qubitwise(op);
    std::multiset<std::string> seen;
    for (const auto& g : groups) {
      for (const auto& m : g.members) {
        seen.insert(m.label());
        for (int q = 0; q < op.n_qubits(); ++q)
          if (m.at(q) != 'I') {
            EXPECT_EQ(m.at(q), g.basis.at(q));
          }
        for (const auto& other : g.members) {
          for (int q = 0; q < op.n_qubits(); ++q) {
            char a = m.at(q), b = other.at(q);
            EXPECT_TRUE(a == 'I' || b == 'I' || a == b);
          }
        }
      }
    }
    std::multiset<std::string> expected;
    for (const auto& [p, c] : op.terms())
      if (!p.is_identity()) expected.insert(p.label());
    EXPECT_EQ(seen, expected);
  }
}

TEST(Grouping, Deterministic) {
  auto op = jordan_wigner(hamiltonian(chem::H4Spec{40.0, 1.8}));
  auto a = group_qubitwise(op), b = group_qubitwise(op);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].members, b[i].members);
}

TEST(Dense, PauliMatrixMatchesKronecker) {
  for (const char* l : {"X", "ZIY", "XYZI", "IIZ"})
    EXPECT_LT((pauli_matrix(l) - oracle::label_matrix(l)).norm(), 1e-15) << l;
}

TEST(Dense, SimpleExpectations) {
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(8);
  zero(0) = 1.0;
  EXPECT_DOUBLE_EQ(pauli_expectation(zero, PauliString::from_label("ZII")), 1.0);
  Eigen::VectorXcd plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(pauli_expectation(plus, PauliString::from_label("X")), 1.0, 1e-15);
  EXPECT_THROW(pauli_expectation(plus, PauliString::from_label("XX")), ConfigError);
}

TEST(Dense, ExpectationMatchesBruteForce) {
  std::mt19937 rng(7);
  std::normal_distribution<double> nd;
  const char* letters = "IXYZ";
  PauliSum op(3);
  for (int t = 0; t < 20; ++t) {
    std::string l;
    for (int q = 0; q < 3; ++q) l += letters[rng() % 4];
    op.add(l, nd(rng));
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
  for (const auto& [p, c] : op.terms()) m += c * oracle::label_matrix(p.label());
  Eigen::VectorXcd psi(8);
  for (int i = 0; i < 8; ++i) psi(i) = cplx(nd(rng), nd(rng));
  psi.normalize();
  EXPECT_NEAR(pauli_expectation(psi, op), (psi.adjoint() * m * psi)(0).real(), 1e-12);
  for (const auto& [p, c] : op.terms())
    EXPECT_LT((apply_pauli(p, psi) - oracle::label_matrix(p.label()) * psi).norm(), 1e-14);
}

TEST(Dense, ExactGround) {
  PauliSum zz(2);
  zz.add("ZZ", 1.0);
  auto gs = exact_ground(zz);
  EXPECT_NEAR(gs.energy, -1.0, 1e-14);
  EXPECT_NEAR(std::norm(gs.vector(1)) + std::norm(gs.vector(2)), 1.0, 1e-12);

  auto jw = jordan_wigner(hamiltonian(chem::H2Spec{0.74}));
  double e = exact_ground(jw).energy;
  EXPECT_NEAR(e, oracle::power_iteration_min(to_matrix(jw)), 1e-9);
  EXPECT_NEAR(e, -1.137, 0.005);

  auto shifted = jw;
  shifted += 0.75;
  EXPECT_NEAR(exact_ground(shifted).energy, e + 0.75, 1e-12);
}

TEST(PauliIo, RoundTrip) {
  auto op = jordan_wigner(hamiltonian(chem::H3Spec{40.0, 1.43}));
  auto back = from_text(to_text(op));
  ASSERT_EQ(back.n_qubits(), op.n_qubits());
  EXPECT_EQ(back.terms(), op.terms());
  EXPECT_EQ(to_text(op).rfind("n_qubits = 6\n", 0), 0u);
  EXPECT_THROW(from_text("XX 1.0\n"), ConfigError);
  EXPECT_THROW(from_text("n_qubits = 2\nXXX 1.0\n"), ConfigError);
}
