#include "flagbkk/flag_model.hpp"

#include <algorithm>

namespace flagbkk {

FlagParams FlagParams::make(int n1, int n2, int n3) {
  if (n1 < 2 || n2 < 2 || n3 < 2) {
    throw InvalidParams("parameters must satisfy n1, n2, n3 >= 2; got " +
                        to_string(FlagParams{n1, n2, n3}));
  }
  return {n1, n2, n3};
}

std::string to_string(const FlagParams& p) {
  return "(" + std::to_string(p.n1) + "," + std::to_string(p.n2) + "," + std::to_string(p.n3) + ")";
}

long IsotropyDimensions::total() const {
  long s = 0;
  for (long x : N) s += x;
  return s;
}

IsotropyDimensions dimensions(const FlagParams& p) {
  const long n1 = p.n1, n2 = p.n2, n3 = p.n3;
  return {{n1 * (n1 - 1), n2 * (n2 - 1), 2 * n1 * n2, 2 * n1 * n2, 2 * n1 * (2 * n3 + 1),
           2 * n2 * (2 * n3 + 1)}};
}

long isotropy_dimension_from_groups(const FlagParams& p) {
  const long m = p.rank_sum();
  const long dim_g = m * (2 * m + 1);
  const long dim_h = static_cast<long>(p.n1) * p.n1 + static_cast<long>(p.n2) * p.n2 +
                     static_cast<long>(p.n3) * (2 * p.n3 + 1);
  return dim_g - dim_h;
}

StructureConstants structure_constants(const FlagParams& p) {
  const Rational d = p.denominator();
  const BigInt n1 = p.n1, n2 = p.n2, n3 = p.n3;
  StructureConstants sc;
  sc.b134 = Rational(n1 * n2 * (n1 - 1)) / d;
  sc.b234 = Rational(n1 * n2 * (n2 - 1)) / d;
  sc.b356 = Rational(n1 * n2 * (2 * n3 + 1)) / d;
  sc.b456 = sc.b356;
  sc.b155 = Rational(n1 * (n1 - 1) * (2 * n3 + 1)) / d;
  sc.b266 = Rational(n2 * (n2 - 1) * (2 * n3 + 1)) / d;
  return sc;
}

Rational bracket(const StructureConstants& sc, int i, int j, int k) {
  std::array<int, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  if (t == std::array{1, 3, 4}) return sc.b134;
  if (t == std::array{2, 3, 4}) return sc.b234;
  if (t == std::array{3, 5, 6}) return sc.b356;
  if (t == std::array{4, 5, 6}) return sc.b456;
  if (t == std::array{1, 5, 5}) return sc.b155;
  if (t == std::array{2, 6, 6}) return sc.b266;
  return 0;
}

CurvatureCoefficients curvature_coefficients(const FlagParams& p) {
  const BigInt n1 = p.n1, n2 = p.n2, n3 = p.n3;
  const BigInt d = p.denominator();
  CurvatureCoefficients c;
  c.a[0] = 4 * n1 * (n1 - 1) * (n1 + n2 - 1);
  c.a[1] = 4 * n2 * (n2 - 1) * (n1 + n2 - 1);
  c.a[2] = 4 * n1 * n2 * d;
  c.a[3] = 4 * n1 * (2 * n3 + 1) * d;
  c.a[4] = 4 * n2 * (2 * n3 + 1) * d;
  c.b[0] = 2 * n1 * n2 * (n1 - 1);
  c.b[1] = 2 * n1 * n2 * (n2 - 1);
  c.b[2] = 2 * n1 * n2 * (2 * n3 + 1);
  c.b[3] = n1 * (n1 - 1) * (2 * n3 + 1);
  c.b[4] = n2 * (n2 - 1) * (2 * n3 + 1);
  return c;
}

std::array<BigInt, kSummands> inverse_coefficients(const CurvatureCoefficients& c) {
  return {c.a[0], c.a[1], c.a[2], c.a[2], c.a[3], c.a[4]};
}

TRootSystem TRootSystem::bc2() {
  return {{Root2{2, 2}, Root2{0, 2}, Root2{1, 0}, Root2{1, 2}, Root2{1, 1}, Root2{0, 1}}};
}

std::vector<IndexTriple> siebenthal_triples(const TRootSystem& roots) {
  std::vector<IndexTriple> out;
  const int n = static_cast<int>(roots.positive_roots.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        bool found = false;
        for (int sj : {1, -1}) {
          for (int sk : {1, -1}) {
            const auto& wi = roots.positive_roots[i];
            const auto& wj = roots.positive_roots[j];
            const auto& wk = roots.positive_roots[k];
            if (wi[0] + sj * wj[0] + sk * wk[0] == 0 && wi[1] + sj * wj[1] + sk * wk[1] == 0) {
              found = true;
            }
          }
        }
        if (found) out.push_back({i + 1, j + 1, k + 1});
      }
    }
  }
  return out;
}

std::vector<IndexTriple> bc2_siebenthal_triples() {
  return {{1, 3, 4}, {1, 5, 5}, {2, 3, 4}, {2, 6, 6}, {3, 5, 6}, {4, 5, 6}};
}

BigInt gamma11_certificate(const CurvatureCoefficients& c) {
  const BigInt k = c.a1() * c.b2() - c.a2() * c.b1();
  const BigInt inner = c.a5() * c.a5() * c.b1() + 4 * c.b5() * k -
                       4 * c.b3() * c.b3() * (c.a1() + 2 * c.b1());
  return 16 * c.a5() * c.a5() * c.b1() * c.b5() * k - inner * inner;
}

namespace {

BigInt rank_condition(const BigInt& ni, const BigInt& nj, const BigInt& n3) {
  return 8 * ni * (2 * n3 + 1) - (nj - 1) * (nj - 1);
}

BigInt closed_quartic(const BigInt& ni, const BigInt& nj, const BigInt& n1, const BigInt& n2,
                    const BigInt& n3) {
  const BigInt d = 2 * (n1 + n2 + n3) - 1;
  const BigInt e = 2 * (2 * n1 + 2 * n2 + n3) - 3;
  const BigInt lhs = 16 * nj * (nj - 1) * (nj - 1) * (ni - nj) * (2 * n3 + 1) * d * d * e;
  const BigInt inner = 4 * nj * (2 * n3 + 1) * d * d + (nj - 1) * (nj - 1) * e * (ni - nj) -
                       8 * ni * ni * (2 * n3 + 1) * (4 * ni + 5 * nj + 2 * n3 - 3);
  return lhs - inner * inner;
}

}  // namespace

std::map<std::string, Rational> degeneracy_equations(const FlagParams& p) {
  const auto c = curvature_coefficients(p);
  const auto m = curvature_coefficients(p.swapped());
  const BigInt n1 = p.n1, n2 = p.n2, n3 = p.n3;
  std::map<std::string, Rational> out;
  out["rank_difference"] = Rational(n1 - n2);
  out["determinant_12"] = Rational(c.b2() * c.b5() - c.b3() * c.b3());
  out["determinant_21"] = Rational(c.b1() * c.b4() - c.b3() * c.b3());
  out["rank_condition_12"] = Rational(rank_condition(n1, n2, n3));
  out["rank_condition_21"] = Rational(rank_condition(n2, n1, n3));
  out["quartic_12"] = Rational(gamma11_certificate(c));
  out["quartic_21"] = Rational(gamma11_certificate(m));
  out["quartic_closed_12"] = Rational(closed_quartic(n1, n2, n1, n2, n3));
  out["quartic_closed_21"] = Rational(closed_quartic(n2, n1, n1, n2, n3));
  out["branch_balance"] = Rational(c.b1() * (c.a1() + 2 * c.b1()) - c.b2() * (c.a2() + 2 * c.b2()));
  return out;
}

}  // namespace flagbkk
