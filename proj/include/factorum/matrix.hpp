#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factorum/handle.hpp"

namespace factorum {

using Int = std::int64_t;

struct IntMatrix {
  int n = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  explicit IntMatrix(int n) : n(n), a(static_cast<std::size_t>(n * n), 0) {}
  static IntMatrix identity(int n);
  static IntMatrix diagonal(const std::vector<Int>& d);
  // Rows separated by ';', entries by spaces or commas.
  static IntMatrix parse(const std::string& text);

  Int& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  Int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
  bool operator==(const IntMatrix& o) const { return n == o.n && a == o.a; }
  bool operator<(const IntMatrix& o) const { return n != o.n ? n < o.n : a < o.a; }

  Int det() const;
  IntMatrix adjugate() const;
  bool upper_triangular() const;
  bool diagonal_only() const;
  std::string str() const;  // "[[2,5],[0,3]]"
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

bool is_prime(Int n);
// Prime factors with multiplicity, ascending.
std::vector<Int> prime_factors(Int n);

struct AtomProfile {
  int m = 0;  // 1-based position
  Int p = 0;
  bool operator==(const AtomProfile& o) const { return m == o.m && p == o.p; }
};

std::optional<AtomProfile> tri_is_atom(const IntMatrix& a);

struct NormalForm {
  IntMatrix form;
  IntMatrix left;   // E
  IntMatrix right;  // F, with E * A * F = form
  AtomProfile profile;
};

// Throws NotAtom.
NormalForm tri_associate_normal_form(const IntMatrix& a);
AtomProfile annihilator_profile(const IntMatrix& a);
bool atoms_associated(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> delta_map(const IntMatrix& a);
bool is_unimodular(const IntMatrix& u);

inline constexpr Int kDefaultDetCap = 1'000'000;

// Shared base for the two matrix semigroups: interned exact matrices.
class MatrixSemigroup : public SemigroupHandle {
 public:
  explicit MatrixSemigroup(int n, Int det_cap = kDefaultDetCap);

  int dim() const { return n_; }
  ElemId element(const IntMatrix& m);
  const IntMatrix& matrix(ElemId x) const { return mats_.at(x); }

  ElemId identity() const override { return 0; }
  ElemId multiply(ElemId x, ElemId y) override;
  bool is_unit(ElemId x) override;
  bool certified(ElemId) override { return true; }
  std::string show(ElemId x) override { return mats_.at(x).str(); }
  bool atom_less(ElemId a, ElemId b) override;
  std::size_t max_factorization_length() const override { return 64; }

 protected:
  virtual void validate(const IntMatrix& m) const = 0;
  // Canonical representatives of the right-associate classes of atoms with
  // determinant p.
  virtual std::vector<IntMatrix> atom_candidates(Int p) = 0;
  DivisorList divisors_from_candidates(ElemId x);

  int n_;
  Int det_cap_;
  std::vector<IntMatrix> mats_;
  std::map<IntMatrix, ElemId> index_;
};

// T_n(Z)^\bullet. Atom classes are keyed by profile (m, p).
class TriangularSemigroup final : public MatrixSemigroup {
 public:
  explicit TriangularSemigroup(int n, Int det_cap = kDefaultDetCap) : MatrixSemigroup(n, det_cap) {}
  DivisorList left_divisors(ElemId x) override { return divisors_from_candidates(x); }
  std::uint64_t atom_class(ElemId atom) override;
  std::string show_class(std::uint64_t key) override;
  static std::uint64_t profile_key(const AtomProfile& p);
  static AtomProfile key_profile(std::uint64_t key);

 protected:
  void validate(const IntMatrix& m) const override;
  std::vector<IntMatrix> atom_candidates(Int p) override;
};

// M_n(Z)^\bullet. All atoms of determinant +-p are associated; key = p.
class FullMatrixSemigroup final : public MatrixSemigroup {
 public:
  explicit FullMatrixSemigroup(int n, Int det_cap = kDefaultDetCap) : MatrixSemigroup(n, det_cap) {}
  DivisorList left_divisors(ElemId x) override { return divisors_from_candidates(x); }
  std::uint64_t atom_class(ElemId atom) override;
  std::string show_class(std::uint64_t key) override { return "det " + std::to_string(key); }

 protected:
  void validate(const IntMatrix& m) const override;
  std::vector<IntMatrix> atom_candidates(Int p) override;
};

struct SnfResult {
  IntMatrix u;
  IntMatrix c;  // diagonal, c(i+1,i+1) | c(i,i)
  IntMatrix v;  // a = u * c * v
};

// Smith normal form with descending divisibility.
SnfResult snf(const IntMatrix& a);
// Reverses the diagonal order, converting between the descending and the
// ascending convention.
SnfResult reverse_snf(const SnfResult& s);
Int det_transfer(const IntMatrix& a);
bool full_is_atom(const IntMatrix& a);

// Map into a free commutative monoid, as a sparse exponent vector keyed by
// prime index.
using FreeImage = std::map<std::uint64_t, int>;
using FreeMap = std::function<FreeImage(ElemId)>;

struct TransferReport {
  bool t1 = true;          // images of non-units are non-units, units map to units, targets covered
  bool wt2 = true;         // every factorization of phi(a) lifts up to permutation
  bool isoatomic = true;   // phi(u) = phi(v) implies u ~ v for explored atoms
  bool lengths_agree = true;
  std::string counterexample;
  std::size_t elements_checked = 0;
  std::size_t factorizations_checked = 0;
  bool ok() const { return t1 && wt2 && isoatomic && lengths_agree; }
};

// Verifies the transfer properties on the given elements. `targets` lists
// target elements that must be hit by the image of the sample.
TransferReport verify_transfer(SemigroupHandle& h, const std::vector<ElemId>& elements, const FreeMap& phi,
                               const std::vector<FreeImage>& targets = {});

// delta on T_n and det on M_n as free-monoid maps.
FreeImage delta_image(const IntMatrix& a);
FreeImage det_image(const IntMatrix& a);

}  // namespace factorum
