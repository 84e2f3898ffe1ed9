#include "vvmf/existence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "vvmf/errors.hpp"

namespace vvmf {

std::size_t FiniteQuotient::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < mult.size(); ++j)
    if (mult[i][j] == 0) return j;
  throw NotHomomorphism("element without inverse in quotient table");
}

FiniteQuotient finite_quotient(const CongruenceSubgroup& h, const CongruenceSubgroup& g) {
  FiniteQuotient q{coset_table(h, g), {}};
  check_normal(q.table);
  const auto& reps = q.table.reps();
  q.mult.assign(reps.size(), std::vector<std::size_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) q.mult[i][j] = q.table.coset_index(reps[i] * reps[j]);
  return q;
}

mpq_class CharacterTable::value(std::size_t irrep, std::size_t k) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t x : classes[c])
      if (x == k) return values[irrep][c];
  throw DomainMismatch("element " + std::to_string(k) + " is in no conjugacy class");
}

namespace {

bool is_s3_quotient(const FiniteQuotient& q) {
  return q.table.ambient() == CongruenceSubgroup::full() &&
         q.table.subgroup() == CongruenceSubgroup::gamma(2);
}

bool is_c2_quotient(const FiniteQuotient& q) {
  return q.table.ambient() == CongruenceSubgroup::gamma0(2) &&
         q.table.subgroup() == CongruenceSubgroup::gamma(2);
}

std::vector<Representation> build_s3_irreps(const FiniteQuotient& q) {
  // K acts on the three cosets of Gamma0(2); identify them with Z/3, where
  // every permutation is x -> e x + c.
  const CosetTable three = coset_table(CongruenceSubgroup::gamma0(2));
  const auto& reps = q.table.reps();
  std::vector<RepMatrix> sign, standard;
  for (const auto& g : reps) {
    std::array<Int, 3> pi{};
    for (std::size_t i = 0; i < 3; ++i)
      pi[i] = static_cast<Int>(three.coset_index(g * three.reps()[i]));
    const Int c = pi[0];
    const Int e = mod_floor(pi[1] - c, 3);
    if (mod_floor(2 * e + c, 3) != pi[2] || e == 0)
      throw NotHomomorphism("coset permutation is not affine on Z/3");
    const bool odd = (e == 2);
    sign.push_back(RepMatrix::scalar(odd ? Phase(1, 2) : Phase::one()));
    // Basis f_a(x) = w^(a x), a = 1, 2; (pi f_a)(y) = w^(-a e c) f_(a e)(y).
    RepMatrix m = RepMatrix::zero(2);
    for (Int a = 1; a <= 2; ++a) {
      const Int row = mod_floor(a * e, 3) - 1;
      m.set(static_cast<std::size_t>(row), static_cast<std::size_t>(a - 1), Phase(-a * e * c, 3));
    }
    standard.push_back(m);
  }
  std::vector<RepMatrix> ones(reps.size(), RepMatrix::identity(1));
  return {finite_quotient_rep(q.table, ones, "trivial"), finite_quotient_rep(q.table, sign, "sign"),
          finite_quotient_rep(q.table, standard, "standard")};
}

}  // namespace

std::vector<Representation> quotient_irreps(const FiniteQuotient& q) {
  if (is_s3_quotient(q)) return build_s3_irreps(q);
  if (is_c2_quotient(q)) {
    std::vector<RepMatrix> ones(2, RepMatrix::identity(1));
    std::vector<RepMatrix> sign{RepMatrix::identity(1), RepMatrix::scalar(Phase(1, 2))};
    return {finite_quotient_rep(q.table, ones, "trivial"),
            finite_quotient_rep(q.table, sign, "sign")};
  }
  throw KernelOutOfScope("irreducible representations of " + q.table.ambient().name() + "/" +
                         q.table.subgroup().name() + " are not available");
}

std::vector<Representation> s3_irreps() {
  return quotient_irreps(finite_quotient(CongruenceSubgroup::gamma(2), CongruenceSubgroup::full()));
}

CharacterTable character_table(const FiniteQuotient& q, const std::vector<Representation>& irreps) {
  CharacterTable t;
  const std::size_t n = q.order();
  std::vector<bool> seen(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t y = q.mult[q.mult[g][x]][q.inverse(g)];
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    t.classes.push_back(cls);
  }
  for (const auto& rho : irreps) {
    t.labels.push_back(rho.name());
    t.dims.push_back(rho.rank());
    std::vector<mpq_class> row;
    for (const auto& cls : t.classes) {
      const Complex tr = rho(q.table.reps()[cls.front()]).trace();
      const double r = std::round(tr.real());
      if (std::abs(tr - Complex(r, 0.0)) > 1e-9)
        throw DomainMismatch("character of " + rho.name() + " is not integer valued");
      row.emplace_back(static_cast<long>(r));
    }
    t.values.push_back(row);
  }
  return t;
}

Representation regular_rep(const FiniteQuotient& q) {
  check_normal(q.table);
  Representation r =
      induce(trivial_rep(q.table.subgroup()), q.table).as_representation();
  return {r.domain(), r.rank(), [r](const GroupElement& g) { return r(g); }, true, "regular"};
}

RationalMatrix regular_matrix(const FiniteQuotient& q, std::size_t k) {
  const std::size_t n = q.order();
  RationalMatrix m(n, std::vector<mpq_class>(n));
  for (std::size_t j = 0; j < n; ++j) m[q.mult[k][j]][j] = 1;
  return m;
}

RationalMatrix irrep_projection(const FiniteQuotient& q, const CharacterTable& chars,
                                std::size_t irrep) {
  const std::size_t n = q.order();
  RationalMatrix p(n, std::vector<mpq_class>(n));
  mpq_class scale(static_cast<long>(chars.dims[irrep]), static_cast<unsigned long>(n));
  scale.canonicalize();
  for (std::size_t k = 0; k < n; ++k) {
    const mpq_class chi = chars.value(irrep, k);  // real, so equal to its conjugate
    if (chi == 0) continue;
    for (std::size_t j = 0; j < n; ++j) p[q.mult[k][j]][j] += scale * chi;
  }
  return p;
}

RationalMatrix rational_product(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), m = b.front().size(), inner = b.size();
  RationalMatrix c(n, std::vector<mpq_class>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::size_t rational_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const mpq_class factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

SeparatingFunction separating_function(const CosetTable& table,
                                       const std::function<Complex(Complex)>& f, Complex tau0) {
  std::vector<GroupElement> reps;
  for (const auto& g : table.reps()) reps.push_back(g.inverse());
  std::vector<Complex> vals;
  double scale = 1.0;
  for (const auto& g : reps) {
    vals.push_back(f(act(g, tau0)));
    scale = std::max(scale, std::abs(vals.back()));
  }
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = i + 1; j < vals.size(); ++j)
      if (std::abs(vals[i] - vals[j]) <= 1e-8 * scale)
        throw NotSeparating("f takes equal values at cosets " + std::to_string(i) + " and " +
                            std::to_string(j));
  SeparatingFunction out;
  out.tau0 = tau0;
  out.eval = [reps, vals, f](Complex tau) {
    Complex acc = 1.0;
    for (std::size_t i = 0; i < reps.size(); ++i)
      acc *= std::pow(f(act(reps[i], tau)) - vals[i], static_cast<int>(i + 1));
    return acc;
  };
  std::vector<ComplexVector> cols;
  for (const auto& tau : sample_points(reps.size(), 7)) {
    ComplexVector v(static_cast<Eigen::Index>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i) v(static_cast<Eigen::Index>(i)) = out.eval(act(reps[i], tau));
    cols.push_back(v);
  }
  out.independence = independence_ratio(cols);
  if (!(out.independence > 1e-8))
    throw NotSeparating("translates of the separating function are dependent (ratio " +
                        std::to_string(out.independence) + ")");
  return out;
}

Construction construct_vvmf(const Representation& rho, std::uint64_t seed) {
  const CongruenceSubgroup g = rho.domain();
  const CongruenceSubgroup h = CongruenceSubgroup::gamma(2);
  if (!(g == CongruenceSubgroup::full()) && !(g == CongruenceSubgroup::gamma0(2)))
    throw KernelOutOfScope("representations of " + g.name() + " are not supported");
  if (!rho.finite_image()) throw KernelOutOfScope("representation must have finite image");
  const std::size_t d = rho.rank();
  for (const auto& x : generators(h))
    if (!rho(x).equals(RepMatrix::identity(d), 1e-10))
      throw KernelOutOfScope("kernel does not contain " + h.name());

  for (const auto& c : cusp_orbits(g)) {
    const GroupElement sigma = scaling_matrix(c);
    exponent_of(rho, sigma * GroupElement::t().pow(cusp_width(g, c)) * sigma.inverse());
  }

  const FiniteQuotient q = finite_quotient(h, g);
  const auto irreps = quotient_irreps(q);
  const CharacterTable chars = character_table(q, irreps);
  const auto& reps = q.table.reps();
  const double order = static_cast<double>(q.order());

  std::vector<std::size_t> multiplicities;
  std::size_t total = 0;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    Complex ip = 0.0;
    for (std::size_t k = 0; k < q.order(); ++k) ip += rho(reps[k]).trace() * chars.value(i, k).get_d();
    ip /= order;
    const double n = std::round(ip.real());
    if (std::abs(ip - Complex(n, 0.0)) > 1e-8) throw NotHomomorphism("non-integral multiplicity");
    multiplicities.push_back(static_cast<std::size_t>(n));
    total += static_cast<std::size_t>(n) * chars.dims[i];
  }
  if (total != d) throw NotHomomorphism("multiplicities do not add up to the rank");

  // Separating function built from the hauptmodul of Gamma(2).
  std::optional<SeparatingFunction> sep;
  std::string last_error;
  for (int attempt = 0; attempt < 20 && !sep; ++attempt) {
    try {
      sep = separating_function(q.table, hauptmodul_gamma2_value,
                                Complex(0.31 + 0.07 * attempt, 1.62));
    } catch (const NotSeparating& ex) {
      last_error = ex.what();
    }
  }
  if (!sep) throw NotSeparating("no separating base point found: " + last_error);

  const VVMF xg = lift(scalar_form(h, 0, {"g", sep->eval, std::nullopt}), q.table);

  // Rows of M_i = L_i P_i map the regular-rep vector to the irrep.
  std::vector<ComplexMatrix> maps;
  std::vector<std::size_t> owner;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < irreps.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    const std::size_t di = chars.dims[i];
    ComplexMatrix l(static_cast<Eigen::Index>(di), static_cast<Eigen::Index>(q.order()));
    for (std::size_t k = 0; k < q.order(); ++k)
      l.col(static_cast<Eigen::Index>(k)) = irreps[i](reps[k]).to_complex().col(0);
    const RationalMatrix p = irrep_projection(q, chars, i);
    ComplexMatrix pc(static_cast<Eigen::Index>(q.order()), static_cast<Eigen::Index>(q.order()));
    for (std::size_t a = 0; a < q.order(); ++a)
      for (std::size_t b = 0; b < q.order(); ++b)
        pc(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = p[a][b].get_d();
    const ComplexMatrix m = l * pc;
    for (std::size_t r = 1; r <= multiplicities[i]; ++r) {
      maps.push_back(m);
      owner.push_back(i);
      for (std::size_t k = 0; k < di; ++k)
        labels.push_back("j^" + std::to_string(r) + " * (L P)_" + chars.labels[i] + "[" +
                         std::to_string(k) + "] X_g");
    }
  }

  auto rho_block = [&](const GroupElement& x) {
    std::vector<RepMatrix> parts;
    for (std::size_t b = 0; b < maps.size(); ++b) parts.push_back(irreps[owner[b]](x));
    return direct_sum(parts).to_complex();
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix basis;
  for (int attempt = 0; attempt < 10; ++attempt) {
    ComplexMatrix e(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (Eigen::Index a = 0; a < e.rows(); ++a)
      for (Eigen::Index b = 0; b < e.cols(); ++b) e(a, b) = Complex(normal(rng), normal(rng));
    ComplexMatrix sum = ComplexMatrix::Zero(e.rows(), e.cols());
    for (const auto& x : reps) sum += rho(x).to_complex() * e * rho_block(x).inverse();
    sum /= order;
    Eigen::JacobiSVD<ComplexMatrix> svd(sum);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) > 1e-8 * sv(0)) {
      basis = sum;
      break;
    }
  }
  if (basis.size() == 0) throw NotSeparating("no invertible intertwiner found");

  std::vector<std::size_t> powers;
  for (std::size_t b = 0, prev = SIZE_MAX, r = 0; b < maps.size(); ++b) {
    r = (owner[b] == prev) ? r + 1 : 1;
    prev = owner[b];
    powers.push_back(r);
  }
  VVMF::Evaluator eval = [xg, maps, powers, basis, d](Complex tau) -> ComplexVector {
    const ComplexVector x = xg(tau);
    const Complex j = klein_j_value(tau);
    ComplexVector y(static_cast<Eigen::Index>(d));
    Eigen::Index off = 0;
    for (std::size_t b = 0; b < maps.size(); ++b) {
      const ComplexVector part = maps[b] * x * std::pow(j, static_cast<int>(powers[b]));
      y.segment(off, part.size()) = part;
      off += part.size();
    }
    return basis * y;
  };
  std::vector<std::string> desc;
  for (std::size_t c = 0; c < d; ++c) desc.push_back("(B y)[" + std::to_string(c) + "]");
  return {VVMF(0, rho, eval, desc), RepMatrix::numeric(basis), multiplicities, chars.labels,
          labels, sep->tau0, "zK", sep->independence};
}

}  // namespace vvmf
