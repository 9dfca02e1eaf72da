#include "weilden/gsp_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "weilden/error.hpp"

namespace weilden {

namespace {

std::uint64_t neg_mod(std::uint64_t a, std::uint64_t m) { return a == 0 ? 0 : m - a; }

// Alternating n x n matrices with a single +1 at (i, j), i < j.
std::vector<MatrixFF> alternating_basis(std::size_t n, std::uint64_t ell) {
  std::vector<MatrixFF> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MatrixFF e(n, ell);
      e(i, j) = 1 % ell;
      e(j, i) = neg_mod(1 % ell, ell);
      out.push_back(std::move(e));
    }
  return out;
}

MatrixFF combine(const std::vector<MatrixFF>& basis, const std::vector<std::uint64_t>& coeffs) {
  MatrixFF x(basis[0].size(), basis[0].modulus());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k]) x = x + basis[k].scaled(coeffs[k]);
  return x;
}

// Alternating A with C A C^T = m A.
std::vector<MatrixFF> invariant_forms(const MatrixFF& c, std::uint64_t m) {
  const std::size_t n = c.size();
  const std::uint64_t ell = c.modulus();
  const auto basis = alternating_basis(n, ell);
  const MatrixFF ct = c.transpose();
  std::vector<MatrixFF> images;
  for (const auto& e : basis) images.push_back(c * e * ct - e.scaled(m));
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::uint64_t> row;
      for (const auto& im : images) row.push_back(im(i, j));
      rows.push_back(std::move(row));
    }
  std::vector<MatrixFF> forms;
  for (const auto& v : nullspace(std::move(rows), basis.size(), ell)) forms.push_back(combine(basis, v));
  return forms;
}

}  // namespace

BigInt gsp_order(unsigned g, std::uint64_t ell) {
  const BigInt l(static_cast<unsigned long>(ell));
  BigInt order = pow(l, static_cast<unsigned long>(g) * g) * (l - 1);
  for (unsigned i = 1; i <= g; ++i) order *= pow(l, 2UL * i) - 1;
  return order;
}

MatrixFF standard_form(unsigned g, std::uint64_t ell) {
  MatrixFF j(2 * g, ell);
  for (unsigned i = 0; i < g; ++i) {
    j(i, g + i) = 1 % ell;
    j(g + i, i) = neg_mod(1 % ell, ell);
  }
  return j;
}

std::optional<std::uint64_t> similitude_multiplier(const MatrixFF& m, const MatrixFF& form) {
  const std::size_t n = m.size();
  if (n == 0 || n % 2 != 0) raise(ErrorCode::DimensionMismatch, "similitude check needs even dimension");
  if (form.size() != n || form.modulus() != m.modulus()) raise(ErrorCode::DimensionMismatch, "form size");
  const MatrixFF image = m * form * m.transpose();
  // Find the scalar from any nonzero entry of the form.
  std::uint64_t mult = 0;
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    for (std::size_t j = 0; j < n && !found; ++j)
      if (form(i, j)) {
        mult = mulmod(image(i, j), invmod(form(i, j), m.modulus()), m.modulus());
        found = true;
      }
  if (!found || mult == 0) return std::nullopt;
  if (!(image == form.scaled(mult))) return std::nullopt;
  return mult;
}

std::optional<std::uint64_t> similitude_multiplier(const MatrixFF& m) {
  if (m.size() % 2 != 0 || m.size() == 0) raise(ErrorCode::DimensionMismatch, "similitude check needs even dimension");
  return similitude_multiplier(m, standard_form(static_cast<unsigned>(m.size() / 2), m.modulus()));
}

MatrixFF darboux(const MatrixFF& a) {
  const std::size_t n = a.size();
  const std::uint64_t ell = a.modulus();
  if (n % 2 != 0) raise(ErrorCode::DimensionMismatch, "alternating form of odd dimension");
  const std::size_t g = n / 2;
  auto omega = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y[j] && a(i, j)) s = (s + mulmod(mulmod(x[i], a(i, j), ell), y[j], ell)) % ell;
    }
    return s;
  };
  std::vector<std::vector<std::uint64_t>> pool;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> v(n, 0);
    v[i] = 1 % ell;
    pool.push_back(std::move(v));
  }
  MatrixFF q(n, ell);
  for (std::size_t k = 0; k < g; ++k) {
    auto is_zero = [](const std::vector<std::uint64_t>& v) {
      return std::all_of(v.begin(), v.end(), [](std::uint64_t c) { return c == 0; });
    };
    std::size_t ei = 0;
    std::size_t fi = pool.size();
    for (; ei < pool.size(); ++ei) {
      if (is_zero(pool[ei])) continue;
      for (fi = 0; fi < pool.size(); ++fi)
        if (omega(pool[ei], pool[fi]) != 0) break;
      if (fi < pool.size()) break;
    }
    if (ei == pool.size()) raise(ErrorCode::InvalidArgument, "alternating form is degenerate");
    const auto e = pool[ei];
    auto f = pool[fi];
    const std::uint64_t inv = invmod(omega(e, f), ell);
    for (auto& c : f) c = mulmod(c, inv, ell);
    std::vector<std::vector<std::uint64_t>> rest;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (i == ei || i == fi) continue;
      auto w = pool[i];
      const std::uint64_t wf = omega(w, f);
      const std::uint64_t we = omega(w, e);
      for (std::size_t j = 0; j < n; ++j) {
        w[j] = (w[j] + neg_mod(mulmod(wf, e[j], ell), ell)) % ell;
        w[j] = (w[j] + mulmod(we, f[j], ell)) % ell;
      }
      rest.push_back(std::move(w));
    }
    pool = std::move(rest);
    for (std::size_t j = 0; j < n; ++j) {
      q(k, j) = e[j];
      q(g + k, j) = f[j];
    }
  }
  const MatrixFF p = q.inverse();
  if (!(p * standard_form(static_cast<unsigned>(g), ell) * p.transpose() == a))
    raise(ErrorCode::InvalidArgument, "Darboux basis check failed");
  return p;
}

Representative representative(const FFPoly& fbar, std::uint64_t m) {
  const std::uint64_t ell = fbar.modulus();
  m %= ell;
  if (fbar.degree() < 2 || fbar.degree() % 2 != 0) raise(ErrorCode::DimensionMismatch, "charpoly degree must be even");
  if (fbar.lc() != 1) raise(ErrorCode::InvalidArgument, "charpoly must be monic");
  const unsigned g = static_cast<unsigned>(fbar.degree() / 2);
  if (m == 0) raise(ErrorCode::NoInvariantForm, "multiplier is zero");
  if (fbar.coeff(0) != powmod(m, g, ell))
    raise(ErrorCode::NoInvariantForm, "constant term " + std::to_string(fbar.coeff(0)) + " != m^g");

  Representative rep;
  rep.companion = MatrixFF::companion(fbar);
  const auto forms = invariant_forms(rep.companion, m);
  if (forms.empty()) raise(ErrorCode::NoInvariantForm, "no invariant alternating form");

  const std::size_t d = forms.size();
  std::optional<MatrixFF> chosen;
  const double space = std::pow(static_cast<double>(ell), static_cast<double>(d));
  if (space <= static_cast<double>(1 << 20)) {
    std::vector<std::uint64_t> digits(d, 0);
    MatrixFF a(fbar.degree(), ell);
    for (;;) {
      std::size_t k = 0;
      while (k < d) {
        a = a + forms[k];
        if (++digits[k] == ell) {
          digits[k] = 0;
          ++k;
        } else {
          break;
        }
      }
      if (k == d) break;
      if (a.det() != 0) {
        chosen = a;
        break;
      }
    }
  } else {
    std::mt19937_64 rng(0x5eedULL ^ ell);
    std::uniform_int_distribution<std::uint64_t> dist(0, ell - 1);
    for (int attempt = 0; attempt < 4096 && !chosen; ++attempt) {
      std::vector<std::uint64_t> c(d);
      for (auto& v : c) v = dist(rng);
      MatrixFF a = combine(forms, c);
      if (a.det() != 0) chosen = a;
    }
  }
  if (!chosen) raise(ErrorCode::NoInvariantForm, "every invariant alternating form is degenerate");
  rep.form = *chosen;
  rep.basis = darboux(rep.form);
  rep.gamma = rep.basis.inverse() * rep.companion * rep.basis;

  if (similitude_multiplier(rep.gamma) != std::optional<std::uint64_t>(m) || !(rep.gamma.charpoly() == fbar) ||
      !rep.gamma.is_cyclic())
    raise(ErrorCode::InvalidArgument, "representative failed verification");
  return rep;
}

MatrixFF explicit_pair_representative(std::uint64_t a, std::uint64_t b, std::uint64_t ell) {
  const long long la = static_cast<long long>(a % ell);
  const long long lb = static_cast<long long>(b % ell);
  return MatrixFF::from_rows({{la, -la, 0, 0, 0, 0},
                              {0, la, -la, 0, 0, 0},
                              {0, 0, la, 0, 0, 0},
                              {0, 0, 0, lb, lb, lb},
                              {0, 0, 0, 0, lb, lb},
                              {0, 0, 0, 0, 0, lb}},
                             ell);
}

MatrixFF antidiagonal_form(unsigned g, std::uint64_t ell) {
  MatrixFF a(2 * g, ell);
  for (unsigned i = 0; i < g; ++i) {
    a(i, 2 * g - 1 - i) = 1 % ell;
    a(2 * g - 1 - i, i) = neg_mod(1 % ell, ell);
  }
  return a;
}

std::vector<MatrixFF> commutant_basis(const MatrixFF& gamma) {
  const std::size_t n = gamma.size();
  const std::uint64_t ell = gamma.modulus();
  // Unknown x_{ij} at column i*n + j; equation (X gamma - gamma X)_{rc} = 0.
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::uint64_t> row(n * n, 0);
      for (std::size_t k = 0; k < n; ++k) {
        row[r * n + k] = (row[r * n + k] + gamma(k, c)) % ell;
        row[k * n + c] = (row[k * n + c] + neg_mod(gamma(r, k), ell)) % ell;
      }
      rows.push_back(std::move(row));
    }
  std::vector<MatrixFF> basis;
  for (auto& v : nullspace(std::move(rows), n * n, ell)) basis.emplace_back(n, ell, std::move(v));
  return basis;
}

BigInt centralizer_count(const MatrixFF& gamma) {
  const auto basis = commutant_basis(gamma);
  const std::size_t d = basis.size();
  const std::uint64_t ell = gamma.modulus();
  const std::size_t n = gamma.size();
  if (n % 2 != 0) raise(ErrorCode::DimensionMismatch, "similitude check needs even dimension");
  if (std::pow(static_cast<double>(ell), static_cast<double>(d)) > static_cast<double>(kCentralizerLimit))
    raise(ErrorCode::TooLarge, std::to_string(ell) + "^" + std::to_string(d) + " commutant elements");
  const MatrixFF j = standard_form(static_cast<unsigned>(n / 2), ell);
  std::vector<std::uint64_t> digits(d, 0);
  MatrixFF x(n, ell);
  std::uint64_t count = 0;
  for (;;) {
    std::size_t k = 0;
    while (k < d) {
      x = x + basis[k];
      if (++digits[k] == ell) {
        digits[k] = 0;
        ++k;
      } else {
        break;
      }
    }
    if (k == d) break;
    if (similitude_multiplier(x, j)) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

std::vector<FFPoly> symmetric_charpolys(std::uint64_t m, std::uint64_t ell, unsigned g) {
  std::vector<FFPoly> out;
  std::vector<std::uint64_t> c(g + 1, 0);
  c[0] = 1;
  for (;;) {
    std::vector<std::uint64_t> asc(2 * g + 1, 0);
    for (unsigned i = 0; i <= g; ++i) {
      asc[2 * g - i] = c[i];
      if (i < g) asc[i] = mulmod(powmod(m, g - i, ell), c[i], ell);
    }
    out.emplace_back(std::move(asc), ell);
    unsigned k = g;
    while (k >= 1) {
      if (++c[k] < ell) break;
      c[k] = 0;
      --k;
    }
    if (k == 0) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<ShapeSample> find_shape_sample(ShapeKind kind, std::uint64_t ell, unsigned g) {
  for (std::uint64_t m = 1; m < ell; ++m) {
    for (const auto& f : symmetric_charpolys(m, ell, g)) {
      const Factorization fs = factor(f);
      ClassShape shape;
      try {
        shape = classify_shape(fs, g, m);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotRelevant) continue;
        throw;
      }
      if (shape.kind != kind) continue;
      try {
        return ShapeSample{f, m, representative(f, m)};
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoInvariantForm) throw;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// GSp_6(F_2) census on 36-bit packed matrices: row i occupies bits 6i..6i+5,
// bit j of a row is column j.

namespace {

using Packed = std::uint64_t;

Packed pack(const MatrixFF& m) {
  Packed p = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (m(i, j)) p |= Packed{1} << (6 * i + j);
  return p;
}

inline Packed row(Packed p, unsigned i) { return (p >> (6 * i)) & 0x3f; }

inline Packed mul(Packed a, Packed b) {
  Packed c = 0;
  for (unsigned i = 0; i < 6; ++i) {
    const Packed ra = row(a, i);
    Packed r = 0;
    for (unsigned j = 0; j < 6; ++j)
      if (ra >> j & 1) r ^= row(b, j);
    c |= r << (6 * i);
  }
  return c;
}

// Characteristic polynomial over F_2 as a bitmask (bit k = coefficient of T^k).
std::uint32_t charpoly_f2(Packed p) {
  std::uint8_t h[6][6];
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j < 6; ++j) h[i][j] = (p >> (6 * i + j)) & 1;
  for (unsigned c = 0; c + 2 <= 6; ++c) {
    unsigned piv = c + 1;
    while (piv < 6 && !h[piv][c]) ++piv;
    if (piv == 6) continue;
    if (piv != c + 1) {
      for (unsigned j = 0; j < 6; ++j) std::swap(h[piv][j], h[c + 1][j]);
      for (unsigned i = 0; i < 6; ++i) std::swap(h[i][piv], h[i][c + 1]);
    }
    for (unsigned i = c + 2; i < 6; ++i) {
      if (!h[i][c]) continue;
      for (unsigned j = 0; j < 6; ++j) h[i][j] ^= h[c + 1][j];
      for (unsigned r = 0; r < 6; ++r) h[r][c + 1] ^= h[r][i];
    }
  }
  std::uint32_t poly[7];
  poly[0] = 1;
  for (unsigned m = 1; m <= 6; ++m) {
    poly[m] = (poly[m - 1] << 1) ^ (h[m - 1][m - 1] ? poly[m - 1] : 0);
    std::uint8_t t = 1;
    for (unsigned i = 1; i < m; ++i) {
      t &= h[m - i][m - i - 1];
      if (t && h[m - i - 1][m - 1]) poly[m] ^= poly[m - i - 1];
    }
  }
  return poly[6];
}

bool cyclic_f2(Packed p) {
  Packed basis[36] = {};
  Packed pw = 0;
  for (unsigned i = 0; i < 6; ++i) pw |= Packed{1} << (7 * i);
  unsigned rank = 0;
  for (unsigned k = 0; k < 6; ++k) {
    Packed v = pw;
    for (int b = 35; b >= 0 && v; --b) {
      if (!(v >> b & 1)) continue;
      if (basis[b]) {
        v ^= basis[b];
      } else {
        basis[b] = v;
        ++rank;
        v = 0;
      }
    }
    pw = mul(pw, p);
  }
  return rank == 6;
}

// Open-addressing set of nonzero 36-bit keys.
class PackedSet {
 public:
  explicit PackedSet(std::size_t log2_slots) : mask_((std::size_t{1} << log2_slots) - 1), slots_(mask_ + 1, 0) {}
  bool insert(Packed key) {
    std::size_t i = hash(key) & mask_;
    while (slots_[i]) {
      if (slots_[i] == key) return false;
      i = (i + 1) & mask_;
    }
    slots_[i] = key;
    return true;
  }

 private:
  static std::size_t hash(Packed k) {
    k ^= k >> 31;
    k *= 0x9e3779b97f4a7c15ULL;
    k ^= k >> 29;
    return static_cast<std::size_t>(k);
  }
  std::size_t mask_;
  std::vector<Packed> slots_;
};

MatrixFF random_transvection_product(std::mt19937_64& rng, unsigned g, unsigned length) {
  const std::uint64_t ell = 2;
  const MatrixFF j = standard_form(g, ell);
  MatrixFF acc = MatrixFF::identity(2 * g, ell);
  for (unsigned t = 0; t < length; ++t) {
    std::uint64_t bits = 0;
    while (bits == 0) bits = rng() & ((1ULL << (2 * g)) - 1);
    std::vector<std::uint64_t> v(2 * g);
    for (unsigned i = 0; i < 2 * g; ++i) v[i] = bits >> i & 1;
    std::vector<std::uint64_t> jv(2 * g, 0);
    for (unsigned i = 0; i < 2 * g; ++i)
      for (unsigned k = 0; k < 2 * g; ++k) jv[i] ^= j(i, k) & v[k];
    MatrixFF tv = MatrixFF::identity(2 * g, ell);
    for (unsigned r = 0; r < 2 * g; ++r)
      for (unsigned c = 0; c < 2 * g; ++c) tv(r, c) ^= v[r] & jv[c];
    acc = acc * tv;
  }
  return acc;
}

}  // namespace

std::uint64_t CharPolyCensus::total() const {
  std::uint64_t t = 0;
  for (const auto& [key, c] : counts) t += c;
  return t;
}

std::uint64_t CharPolyCensus::count(const FFPoly& f, std::uint64_t m) const {
  std::vector<std::uint64_t> asc = f.ascending();
  asc.resize(2 * g + 1, 0);
  const auto it = counts.find({asc, m});
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t CharPolyCensus::cyclic_count(const FFPoly& f, std::uint64_t m) const {
  std::vector<std::uint64_t> asc = f.ascending();
  asc.resize(2 * g + 1, 0);
  const auto it = cyclic_counts.find({asc, m});
  return it == cyclic_counts.end() ? 0 : it->second;
}

std::string CharPolyCensus::export_lines() const {
  std::ostringstream os;
  for (const auto& [key, c] : counts) {
    for (std::size_t i = 0; i < key.first.size(); ++i) os << (i ? "," : "") << key.first[i];
    const auto cyc = cyclic_counts.find(key);
    os << ' ' << key.second << ' ' << c << ' ' << (cyc == cyclic_counts.end() ? 0 : cyc->second) << '\n';
  }
  return os.str();
}

CharPolyCensus enumerate_group(unsigned g, std::uint64_t ell, std::uint64_t seed, unsigned threads) {
  if (g != 3 || ell != 2)
    raise(ErrorCode::TooLarge, "census supports only g = 3, ell = 2 (got g = " + std::to_string(g) +
                                   ", ell = " + std::to_string(ell) + ")");
  CharPolyCensus census;
  census.g = g;
  census.ell = ell;
  census.group_order = gsp_order(g, ell);
  const std::uint64_t order = census.group_order.get_ui();

  std::mt19937_64 rng(seed);
  std::vector<Packed> gens;
  std::vector<Packed> elements;
  constexpr int kMaxGenerators = 8;
  for (;;) {
    const MatrixFF gen = random_transvection_product(rng, g, 16);
    if (similitude_multiplier(gen) != std::optional<std::uint64_t>(1))
      raise(ErrorCode::InvalidArgument, "transvection product left the group");
    gens.push_back(pack(gen));
    if (gens.size() < 2) continue;
    PackedSet seen(22);
    elements.clear();
    elements.reserve(order);
    const Packed id = pack(MatrixFF::identity(6, 2));
    seen.insert(id);
    elements.push_back(id);
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
      for (Packed s : gens) {
        const Packed y = mul(elements[idx], s);
        if (seen.insert(y)) elements.push_back(y);
      }
      if (elements.size() > order) raise(ErrorCode::InvalidArgument, "closure exceeded the group order");
    }
    if (elements.size() == order) break;
    if (static_cast<int>(gens.size()) >= kMaxGenerators)
      raise(ErrorCode::GenerationStalled, "closure stuck at " + std::to_string(elements.size()) + " elements");
  }
  census.generators = gens.size();

  threads = std::max(1u, threads);
  // Slot 128 + mask counts the cyclic elements.
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(256, 0));
  auto work = [&](unsigned t) {
    const std::size_t lo = elements.size() * t / threads;
    const std::size_t hi = elements.size() * (t + 1) / threads;
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint32_t mask = charpoly_f2(elements[i]) & 0x7f;
      ++partial[t][mask];
      if (cyclic_f2(elements[i])) ++partial[t][128 + mask];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (std::uint32_t mask = 0; mask < 128; ++mask) {
    std::uint64_t c = 0;
    std::uint64_t cyc = 0;
    for (const auto& p : partial) {
      c += p[mask];
      cyc += p[128 + mask];
    }
    if (!c) continue;
    std::vector<std::uint64_t> asc(7);
    for (unsigned k = 0; k < 7; ++k) asc[k] = mask >> k & 1;
    census.counts[{asc, 1}] = c;
    census.cyclic_counts[{asc, 1}] = cyc;
  }
  return census;
}

}  // namespace weilden
