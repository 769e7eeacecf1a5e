#pragma once

// Exact matrices over E = Q(sqrt u): membership in the Lie algebras, groups
// and compact open subsets used by the transfer statements, Cayley maps,
// transfer factors and matching invariants.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "nfp/numerics.hpp"

namespace nfp::hermitian {

/// Residue characteristic p (uniformizer varpi = p) and the nonsquare u.
struct FieldCtx {
  long p = 3;
  Rat u{-1};

  /// Uses default_nonsquare(p).
  explicit FieldCtx(long p_);
  FieldCtx(long p_, Rat u_);

  QuadExt elem(Rat a, Rat b = Rat(0)) const { return QuadExt(std::move(a), std::move(b), u); }
  QuadExt sqrt_u() const { return QuadExt::sqrt_u(u); }
  /// varpi^k
  QuadExt pi_pow(long k) const { return elem(Rat(p).pow(k)); }
  Valuation val(const QuadExt& x) const { return qe_valuation(x, p); }
};

class EMat {
 public:
  EMat(std::size_t rows, std::size_t cols, Rat u);
  static EMat identity(std::size_t n, const Rat& u);
  static EMat from_rows(const std::vector<std::vector<QuadExt>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const Rat& u() const { return u_; }

  QuadExt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QuadExt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  EMat conj() const;
  EMat transpose() const;
  /// Conjugate transpose.
  EMat star() const { return conj().transpose(); }
  EMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  QuadExt trace() const;
  QuadExt det() const;
  /// Throws std::domain_error when singular.
  EMat inverse() const;
  std::size_t rank() const;
  EMat pow(unsigned e) const;

  EMat& operator+=(const EMat& o);
  EMat& operator-=(const EMat& o);
  friend EMat operator+(EMat a, const EMat& b) { return a += b; }
  friend EMat operator-(EMat a, const EMat& b) { return a -= b; }
  friend EMat operator*(const EMat& a, const EMat& b);
  friend EMat operator*(const QuadExt& s, EMat a);
  friend bool operator==(const EMat& a, const EMat& b);
  friend bool operator!=(const EMat& a, const EMat& b) { return !(a == b); }

  bool is_zero() const;
  std::string str() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Rat u_;
  std::vector<QuadExt> data_;
};

/// J = diag(I_n, varpi^c), of size n + 1.
EMat herm_form(std::size_t n, long c, const FieldCtx& ctx);

enum class Kind {
  lie_u,          ///< u(V): J X + X^* J = 0
  group_u,        ///< U(V): g^* J g = J
  lie_s,          ///< s_m: s + conj(s) = 0
  group_s,        ///< S_m: s conj(s) = 1
  bmK,            ///< integral, top-right = 0 and corner = 1 mod varpi^c
  bmK_tilde,      ///< integral, top-right = 0 mod varpi^c
  K_prime,        ///< bmK cap GL_{n+1}(O_E)
  K_tilde_prime,  ///< bmK_tilde cap GL_{n+1}(O_E)
  K_S,            ///< bmK cap S_{n+1}
  K_tilde,        ///< bmK_tilde cap U(V)
  k_tilde,        ///< bmK_tilde cap u(V)
  k_tilde_prime,  ///< bmK_tilde cap s_{n+1}
};

std::string to_string(Kind k);

/// Exact membership predicate; the block split is n = size - 1 and J is
/// herm_form(n, c).  Throws std::invalid_argument for a non-square matrix.
bool is_member(const EMat& m, Kind kind, long c, const FieldCtx& ctx);

/// True iff every entry has nonnegative valuation.
bool is_integral(const EMat& m, const FieldCtx& ctx);

/// xi (1 + X)(1 - X)^{-1}; requires Nm(xi) = 1.  Throws std::domain_error
/// when 1 - X is singular and std::invalid_argument when Nm(xi) != 1.
EMat cayley(const EMat& x, const QuadExt& xi);
/// (g - xi)(g + xi)^{-1}
EMat cayley_inv(const EMat& g, const QuadExt& xi);

/// 1, -1, then (s + sqrt u)/(s - sqrt u) for s = 1, 2, ...; all of norm 1.
std::vector<QuadExt> norm_one_candidates(const FieldCtx& ctx, std::size_t count);
/// First candidate with det(g + xi) a unit, if any among `count` candidates.
std::optional<QuadExt> choose_xi(const EMat& g, const FieldCtx& ctx, std::size_t count = 32);

enum class TransferKind { omega, omega_s };

/// (-1)^{nu(det(e0^*, e0^* Y, ..., e0^* Y^n))}.  For S_{n+1} the extra
/// det(s) power has norm one, so both kinds use the same stack.  Throws
/// std::domain_error when the determinant vanishes.
int transfer_factor(const EMat& y, TransferKind kind, const FieldCtx& ctx);

/// Cyclicity criterion: {b, Ab, ..., A^{n-1} b} spans E^n and
/// {z, zA, ..., z A^{n-1}} spans E_n for X = [[A, b], [z, w]].
bool is_regular_semisimple(const EMat& x);

struct MatchingInvariants {
  std::vector<QuadExt> charpoly_x;  ///< det(t - X), constant term first
  std::vector<QuadExt> charpoly_a;
  QuadExt w;
  std::vector<QuadExt> z_a_b;  ///< z A^i b for i < n
  friend bool operator==(const MatchingInvariants&, const MatchingInvariants&) = default;
};

/// Coefficients of det(t - M), constant term first, leading 1 last.
std::vector<QuadExt> charpoly(const EMat& m);

/// Throws std::invalid_argument for non-regular-semisimple input.
MatchingInvariants matching_invariants(const EMat& x);
bool matches(const EMat& x, const EMat& y);

/// Scales the top-right n x 1 block by varpi^{-c}.
EMat iota_c(const EMat& x, long c, const FieldCtx& ctx);

/// g conj(g)^{-1}
EMat r_map(const EMat& g);

/// det(X^i e0 : 0 <= i <= m) and (-1)^m det(A^i b : 0 <= i < m).
std::pair<QuadExt, QuadExt> det_stack_sides(const EMat& x);
bool det_stack_identity_check(const EMat& x);

/// Entry encoding [a_num, a_den, b_num, b_den] for a + b sqrt u.
nlohmann::json to_json(const EMat& m);
EMat emat_from_json(const nlohmann::json& j, const Rat& u);

/// Random generators for property checks.  Entries are integers in
/// [-bound, bound] unless stated otherwise.
namespace sample {

QuadExt integer(std::mt19937_64& rng, const FieldCtx& ctx, long bound);
EMat integral(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long bound);
/// Element of k_tilde_c: integral, anti-hermitian for herm_form(size-1, c).
EMat lie_u_integral(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long c, long bound);
/// Element of bmK_tilde^c (no unitarity).
EMat bmK_tilde(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long c, long bound);
/// Element of K'^c_{n+1} (retries until det is a unit).
EMat K_prime(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long c, long bound);
/// Element of s_m with integer coordinates.
EMat lie_s(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long bound);

}  // namespace sample

}  // namespace nfp::hermitian
