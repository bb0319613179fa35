#include "factorum/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "factorum/core.hpp"
#include "factorum/factorizations.hpp"

namespace factorum {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
  IntMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

IntMatrix IntMatrix::parse(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::string row;
  std::istringstream in(text);
  while (std::getline(in, row, ';')) {
    std::replace(row.begin(), row.end(), ',', ' ');
    std::istringstream r(row);
    std::vector<Int> entries;
    std::string tok;
    while (r >> tok) {
      try {
        std::size_t used = 0;
        entries.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::Syntax, "bad matrix entry '" + tok + "'");
      }
    }
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw Error(ErrorKind::Syntax, "empty matrix");
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw Error(ErrorKind::Syntax, "matrix is not square");
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

namespace {

IntMatrix minor_of(const IntMatrix& m, int r, int c) {
  IntMatrix out(m.n - 1);
  for (int i = 0, oi = 0; i < m.n; ++i) {
    if (i == r) continue;
    for (int j = 0, oj = 0; j < m.n; ++j) {
      if (j == c) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

Int IntMatrix::det() const {
  if (n == 0) return 1;
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  Int d = 0;
  for (int j = 0; j < n; ++j) {
    if ((*this)(0, j) == 0) continue;
    Int term = (*this)(0, j) * minor_of(*this, 0, j).det();
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

IntMatrix IntMatrix::adjugate() const {
  IntMatrix out(n);
  if (n == 1) {
    out(0, 0) = 1;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Int c = minor_of(*this, i, j).det();
      out(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  }
  return out;
}

bool IntMatrix::upper_triangular() const {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if ((*this)(i, j) != 0) return false;
    }
  }
  return true;
}

bool IntMatrix::diagonal_only() const {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

std::string IntMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < n; ++j) {
      if (j) s += ",";
      s += std::to_string((*this)(i, j));
    }
    s += "]";
  }
  return s + "]";
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.n != y.n) throw Error(ErrorKind::InvalidArgument, "dimension mismatch");
  IntMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < x.n; ++j) out(i, j) += x(i, k) * y(k, j);
    }
  }
  return out;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  n = std::llabs(n);
  for (Int d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<AtomProfile> tri_is_atom(const IntMatrix& a) {
  if (!a.upper_triangular() || a.det() == 0) return std::nullopt;
  std::optional<AtomProfile> out;
  for (int i = 0; i < a.n; ++i) {
    Int d = std::llabs(a(i, i));
    if (d == 1) continue;
    if (out || !is_prime(d)) return std::nullopt;
    out = AtomProfile{i + 1, d};
  }
  return out;
}

NormalForm tri_associate_normal_form(const IntMatrix& a) {
  auto prof = tri_is_atom(a);
  if (!prof) throw Error(ErrorKind::NotAtom, a.str() + " is not an atom of T_n");
  const int n = a.n;
  const int m = prof->m - 1;
  NormalForm nf;
  nf.profile = *prof;
  nf.left = IntMatrix::identity(n);
  nf.right = IntMatrix::identity(n);
  IntMatrix b = a;
  for (int i = 0; i < n; ++i) {
    if (b(i, i) < 0) {
      for (int j = 0; j < n; ++j) b(i, j) = -b(i, j);
      nf.left(i, i) = -1;
    }
  }
  // Bottom-up: rows with unit diagonal are cleared by column operations,
  // row m by row operations against the already cleared rows below it.
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) {
      Int c = b(i, j);
      if (c == 0) continue;
      if (i != m) {
        for (int r = 0; r < n; ++r) {
          b(r, j) -= c * b(r, i);
          nf.right(r, j) -= c * nf.right(r, i);
        }
      } else {
        for (int k = 0; k < n; ++k) {
          b(i, k) -= c * b(j, k);
          nf.left(i, k) -= c * nf.left(j, k);
        }
      }
    }
  }
  nf.form = b;
  return nf;
}

AtomProfile annihilator_profile(const IntMatrix& a) { return tri_associate_normal_form(a).profile; }

bool atoms_associated(const IntMatrix& a, const IntMatrix& b) { return annihilator_profile(a) == annihilator_profile(b); }

std::vector<Int> delta_map(const IntMatrix& a) {
  std::vector<Int> d;
  for (int i = 0; i < a.n; ++i) d.push_back(std::llabs(a(i, i)));
  return d;
}

bool is_unimodular(const IntMatrix& u) { return std::llabs(u.det()) == 1; }

MatrixSemigroup::MatrixSemigroup(int n, Int det_cap) : n_(n), det_cap_(det_cap) {
  if (n < 1 || n > 3) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be 1, 2 or 3");
  IntMatrix id = IntMatrix::identity(n);
  index_.emplace(id, 0);
  mats_.push_back(id);
}

ElemId MatrixSemigroup::element(const IntMatrix& m) {
  if (auto it = index_.find(m); it != index_.end()) return it->second;
  if (m.n != n_) throw Error(ErrorKind::InvalidArgument, "expected a " + std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
  validate(m);
  ElemId id = static_cast<ElemId>(mats_.size());
  index_.emplace(m, id);
  mats_.push_back(m);
  return id;
}

ElemId MatrixSemigroup::multiply(ElemId x, ElemId y) { return element(mats_.at(x) * mats_.at(y)); }

bool MatrixSemigroup::is_unit(ElemId x) { return std::llabs(mats_.at(x).det()) == 1; }

bool MatrixSemigroup::atom_less(ElemId a, ElemId b) {
  std::uint64_t ka = atom_class(a), kb = atom_class(b);
  if (ka != kb) return ka < kb;
  return mats_.at(a) < mats_.at(b);
}

DivisorList MatrixSemigroup::divisors_from_candidates(ElemId x) {
  const IntMatrix a = mats_.at(x);
  const Int d = std::llabs(a.det());
  if (d > det_cap_) throw Error(ErrorKind::DetTooLarge, "|det| = " + std::to_string(d) + " exceeds the cap " + std::to_string(det_cap_));
  DivisorList out;
  std::vector<Int> primes = prime_factors(d);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (Int p : primes) {
    for (const IntMatrix& u : atom_candidates(p)) {
      IntMatrix q = u.adjugate() * a;
      const Int du = u.det();
      bool integral = std::all_of(q.a.begin(), q.a.end(), [&](Int v) { return v % du == 0; });
      if (!integral) continue;
      for (Int& v : q.a) v /= du;
      out.items.push_back({element(u), element(q)});
    }
  }
  return out;
}

namespace {

void for_each_residue_tuple(int len, Int p, const std::function<void(const std::vector<Int>&)>& fn) {
  double count = 1;
  for (int i = 0; i < len; ++i) count *= static_cast<double>(p);
  if (count > 1e6) throw Error(ErrorKind::DetTooLarge, "too many candidate atoms for p = " + std::to_string(p));
  std::vector<Int> t(static_cast<std::size_t>(len), 0);
  while (true) {
    fn(t);
    int i = len - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == p - 1) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
}

}  // namespace

void TriangularSemigroup::validate(const IntMatrix& m) const {
  if (!m.upper_triangular()) throw Error(ErrorKind::InvalidArgument, m.str() + " is not upper triangular");
  if (m.det() == 0) throw Error(ErrorKind::InvalidArgument, m.str() + " is singular");
}

std::vector<IntMatrix> TriangularSemigroup::atom_candidates(Int p) {
  std::vector<IntMatrix> out;
  for (int m = 0; m < n_; ++m) {
    for_each_residue_tuple(n_ - 1 - m, p, [&](const std::vector<Int>& t) {
      IntMatrix u = IntMatrix::identity(n_);
      u(m, m) = p;
      for (int j = m + 1; j < n_; ++j) u(m, j) = t[static_cast<std::size_t>(j - m - 1)];
      out.push_back(u);
    });
  }
  return out;
}

std::uint64_t TriangularSemigroup::profile_key(const AtomProfile& p) {
  return (static_cast<std::uint64_t>(p.m) << 40) | static_cast<std::uint64_t>(p.p);
}

AtomProfile TriangularSemigroup::key_profile(std::uint64_t key) {
  return AtomProfile{static_cast<int>(key >> 40), static_cast<Int>(key & ((std::uint64_t{1} << 40) - 1))};
}

std::uint64_t TriangularSemigroup::atom_class(ElemId atom) {
  auto prof = tri_is_atom(mats_.at(atom));
  if (!prof) throw Error(ErrorKind::NotAtom, mats_.at(atom).str() + " is not an atom");
  return profile_key(*prof);
}

std::string TriangularSemigroup::show_class(std::uint64_t key) {
  AtomProfile p = key_profile(key);
  return "(" + std::to_string(p.m) + "," + std::to_string(p.p) + ")";
}

void FullMatrixSemigroup::validate(const IntMatrix& m) const {
  if (m.det() == 0) throw Error(ErrorKind::InvalidArgument, m.str() + " is singular");
}

std::vector<IntMatrix> FullMatrixSemigroup::atom_candidates(Int p) {
  std::vector<IntMatrix> out;
  for (int m = 0; m < n_; ++m) {
    for_each_residue_tuple(m, p, [&](const std::vector<Int>& t) {
      IntMatrix u = IntMatrix::identity(n_);
      u(m, m) = p;
      for (int j = 0; j < m; ++j) u(m, j) = t[static_cast<std::size_t>(j)];
      out.push_back(u);
    });
  }
  return out;
}

std::uint64_t FullMatrixSemigroup::atom_class(ElemId atom) {
  Int d = std::llabs(mats_.at(atom).det());
  if (!is_prime(d)) throw Error(ErrorKind::NotAtom, mats_.at(atom).str() + " is not an atom");
  return static_cast<std::uint64_t>(d);
}

bool full_is_atom(const IntMatrix& a) { return is_prime(std::llabs(a.det())); }

Int det_transfer(const IntMatrix& a) { return std::llabs(a.det()); }

namespace {

// a = l * m * r is kept invariant while m is reduced.
struct SnfState {
  IntMatrix l, m, r;
  int n;

  void row_add(int i, int j, Int c) {  // row_i += c row_j
    for (int k = 0; k < n; ++k) m(i, k) += c * m(j, k);
    for (int k = 0; k < n; ++k) l(k, j) -= c * l(k, i);
  }
  void col_add(int i, int j, Int c) {  // col_i += c col_j
    for (int k = 0; k < n; ++k) m(k, i) += c * m(k, j);
    for (int k = 0; k < n; ++k) r(j, k) -= c * r(i, k);
  }
  void row_swap(int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
    for (int k = 0; k < n; ++k) std::swap(l(k, i), l(k, j));
  }
  void col_swap(int i, int j) {
    for (int k = 0; k < n; ++k) std::swap(m(k, i), m(k, j));
    for (int k = 0; k < n; ++k) std::swap(r(i, k), r(j, k));
  }
  void row_neg(int i) {
    for (int k = 0; k < n; ++k) m(i, k) = -m(i, k);
    for (int k = 0; k < n; ++k) l(k, i) = -l(k, i);
  }
};

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SnfResult snf(const IntMatrix& a) {
  const int n = a.n;
  SnfState s{IntMatrix::identity(n), a, IntMatrix::identity(n), n};
  for (int t = 0; t < n; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < n; ++i) {
        for (int j = t; j < n; ++j) {
          if (s.m(i, j) != 0 && (pi < 0 || std::llabs(s.m(i, j)) < std::llabs(s.m(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      if (pi != t) s.row_swap(pi, t);
      if (pj != t) s.col_swap(pj, t);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        Int q = floor_div(s.m(i, t), s.m(t, t));
        if (q != 0) s.row_add(i, t, -q);
        if (s.m(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        Int q = floor_div(s.m(t, j), s.m(t, t));
        if (q != 0) s.col_add(j, t, -q);
        if (s.m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i) {
        for (int j = t + 1; j < n; ++j) {
          if (s.m(i, j) % s.m(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      s.row_add(t, bad, 1);
    }
    if (s.m(t, t) < 0) s.row_neg(t);
  }
  // Ascending chain in s.m; reverse it.
  SnfResult asc{s.l, s.m, s.r};
  return reverse_snf(asc);
}

SnfResult reverse_snf(const SnfResult& x) {
  const int n = x.c.n;
  IntMatrix rev(n);
  for (int i = 0; i < n; ++i) rev(i, n - 1 - i) = 1;
  return SnfResult{x.u * rev, rev * x.c * rev, rev * x.v};
}

FreeImage delta_image(const IntMatrix& a) {
  FreeImage out;
  for (int i = 0; i < a.n; ++i) {
    for (Int p : prime_factors(a(i, i))) {
      ++out[(static_cast<std::uint64_t>(i + 1) << 40) | static_cast<std::uint64_t>(p)];
    }
  }
  return out;
}

FreeImage det_image(const IntMatrix& a) {
  FreeImage out;
  for (Int p : prime_factors(a.det())) ++out[static_cast<std::uint64_t>(p)];
  return out;
}

TransferReport verify_transfer(SemigroupHandle& h, const std::vector<ElemId>& elements, const FreeMap& phi,
                               const std::vector<FreeImage>& targets) {
  TransferReport rep;
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (rep.counterexample.empty()) rep.counterexample = why;
  };
  std::set<FreeImage> hit;
  std::map<FreeImage, std::uint64_t> atom_classes;
  for (ElemId a : elements) {
    ++rep.elements_checked;
    const FreeImage img = phi(a);
    hit.insert(img);
    if (h.is_unit(a) != img.empty()) {
      fail(rep.t1, h.show(a) + ": unit status differs from its image");
      continue;
    }
    if (h.is_unit(a)) continue;
    int omega = 0;
    for (const auto& [k, e] : img) omega += e;
    const FactorizationSet& fs = rigid_factorizations(h, a);
    if (fs.items.empty()) fail(rep.wt2, h.show(a) + " has no factorization to lift");
    for (const Factorization& z : fs.items) {
      ++rep.factorizations_checked;
      FreeImage sum;
      for (ElemId u : z) {
        FreeImage iu = phi(u);
        int size = 0;
        for (const auto& [k, e] : iu) {
          size += e;
          sum[k] += e;
        }
        if (size != 1) {
          fail(rep.wt2, "atom " + h.show(u) + " does not map to an atom");
          continue;
        }
        auto [it, fresh] = atom_classes.emplace(iu, h.atom_class(u));
        if (!fresh && it->second != h.atom_class(u)) {
          fail(rep.isoatomic, "atoms with equal image lie in different classes (" + h.show(u) + ")");
        }
      }
      if (sum != img) fail(rep.wt2, show_factorization(h, z) + " does not map onto the factorization of the image of " + h.show(a));
      if (static_cast<int>(z.size()) != omega) fail(rep.lengths_agree, h.show(a) + ": length differs from its image");
    }
  }
  for (const FreeImage& t : targets) {
    if (!hit.count(t)) {
      fail(rep.t1, "a target element is not in the image of the sample");
      break;
    }
  }
  return rep;
}

}  // namespace factorum
