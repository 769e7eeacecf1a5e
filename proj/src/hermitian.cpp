#include "nfp/hermitian.hpp"

#include <sstream>
#include <stdexcept>

#include "nfp/random.hpp"

namespace nfp::hermitian {

FieldCtx::FieldCtx(long p_) : p(p_), u(default_nonsquare(p_)) {}

FieldCtx::FieldCtx(long p_, Rat u_) : p(p_), u(std::move(u_)) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("FieldCtx: p must be an odd prime");
  if (!u.is_integer() || legendre(u.num(), p) != -1)
    throw std::invalid_argument("FieldCtx: u must be an integer nonsquare mod p");
}

EMat::EMat(std::size_t rows, std::size_t cols, Rat u)
    : rows_(rows), cols_(cols), u_(std::move(u)), data_(rows * cols, QuadExt(Rat(0), Rat(0), u_)) {}

EMat EMat::identity(std::size_t n, const Rat& u) {
  EMat m(n, n, u);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = QuadExt::from_rat(Rat(1), u);
  return m;
}

EMat EMat::from_rows(const std::vector<std::vector<QuadExt>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("EMat: empty matrix");
  const Rat u = rows.front().front().u();
  EMat m(rows.size(), rows.front().size(), u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("EMat: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j].u() != u) throw std::invalid_argument("EMat: mixed field parameters");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

EMat EMat::conj() const {
  EMat m = *this;
  for (auto& x : m.data_) x = x.conj();
  return m;
}

EMat EMat::transpose() const {
  EMat m(cols_, rows_, u_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

EMat EMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("EMat::block: out of range");
  EMat m(nr, nc, u_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

QuadExt EMat::trace() const {
  if (!square()) throw std::invalid_argument("EMat::trace: non-square");
  QuadExt t = QuadExt::from_rat(Rat(0), u_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

namespace {

// Row echelon form in place; returns (rank, sign of the row permutation, product of pivots).
struct Elim {
  std::size_t rank;
  int sign;
};

Elim eliminate(EMat& a, EMat* rhs) {
  Elim e{0, 1};
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < a.cols() && e.rank < n; ++col) {
    std::size_t piv = e.rank;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != e.rank) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(e.rank, j));
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(piv, j), (*rhs)(e.rank, j));
      e.sign = -e.sign;
    }
    const QuadExt inv = a(e.rank, col).inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == e.rank || a(i, col).is_zero()) continue;
      if (!rhs && i < e.rank) continue;
      const QuadExt f = a(i, col) * inv;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(e.rank, j);
      if (rhs)
        for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(e.rank, j);
    }
    ++e.rank;
  }
  return e;
}

}  // namespace

QuadExt EMat::det() const {
  if (!square()) throw std::invalid_argument("EMat::det: non-square");
  EMat a = *this;
  Elim e = eliminate(a, nullptr);
  if (e.rank < rows_) return QuadExt::from_rat(Rat(0), u_);
  QuadExt d = QuadExt::from_rat(Rat(e.sign), u_);
  for (std::size_t i = 0; i < rows_; ++i) d *= a(i, i);
  return d;
}

EMat EMat::inverse() const {
  if (!square()) throw std::invalid_argument("EMat::inverse: non-square");
  EMat a = *this;
  EMat inv = identity(rows_, u_);
  Elim e = eliminate(a, &inv);
  if (e.rank < rows_) throw std::domain_error("EMat::inverse: singular matrix");
  for (std::size_t i = 0; i < rows_; ++i) {
    const QuadExt d = a(i, i).inverse();
    for (std::size_t j = 0; j < rows_; ++j) inv(i, j) *= d;
  }
  return inv;
}

std::size_t EMat::rank() const {
  EMat a = *this;
  return eliminate(a, nullptr).rank;
}

EMat EMat::pow(unsigned e) const {
  if (!square()) throw std::invalid_argument("EMat::pow: non-square");
  EMat r = identity(rows_, u_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

EMat& EMat::operator+=(const EMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("EMat: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

EMat& EMat::operator-=(const EMat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("EMat: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

EMat operator*(const EMat& a, const EMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("EMat: shape mismatch in product");
  EMat m(a.rows_, b.cols_, a.u_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

EMat operator*(const QuadExt& s, EMat a) {
  for (auto& x : a.data_) x = s * x;
  return a;
}

bool operator==(const EMat& a, const EMat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool EMat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::string EMat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

EMat herm_form(std::size_t n, long c, const FieldCtx& ctx) {
  EMat j = EMat::identity(n + 1, ctx.u);
  j(n, n) = ctx.pi_pow(c);
  return j;
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::lie_u: return "u(V)";
    case Kind::group_u: return "U(V)";
    case Kind::lie_s: return "s";
    case Kind::group_s: return "S";
    case Kind::bmK: return "bmK";
    case Kind::bmK_tilde: return "bmK~";
    case Kind::K_prime: return "K'";
    case Kind::K_tilde_prime: return "K~'";
    case Kind::K_S: return "K_S";
    case Kind::K_tilde: return "K~";
    case Kind::k_tilde: return "k~";
    case Kind::k_tilde_prime: return "k~'";
  }
  return "?";
}

bool is_integral(const EMat& m, const FieldCtx& ctx) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!ctx.val(m(i, j)).at_least(0)) return false;
  return true;
}

namespace {

bool in_bmK_tilde(const EMat& m, long c, const FieldCtx& ctx) {
  if (!is_integral(m, ctx)) return false;
  const std::size_t n = m.rows() - 1;
  for (std::size_t i = 0; i < n; ++i)
    if (!ctx.val(m(i, n)).at_least(c)) return false;
  return true;
}

bool in_bmK(const EMat& m, long c, const FieldCtx& ctx) {
  const std::size_t n = m.rows() - 1;
  return in_bmK_tilde(m, c, ctx) && ctx.val(m(n, n) - ctx.elem(Rat(1))).at_least(c);
}

bool det_unit(const EMat& m, const FieldCtx& ctx) {
  Valuation v = ctx.val(m.det());
  return !v.is_infinite() && v.value() == 0;
}

}  // namespace

bool is_member(const EMat& m, Kind kind, long c, const FieldCtx& ctx) {
  if (!m.square() || m.rows() < 1) throw std::invalid_argument("is_member: square matrix required");
  const std::size_t n = m.rows() - 1;
  const EMat one = EMat::identity(m.rows(), ctx.u);
  switch (kind) {
    case Kind::lie_u: {
      const EMat j = herm_form(n, c, ctx);
      return (j * m + m.star() * j).is_zero();
    }
    case Kind::group_u: {
      const EMat j = herm_form(n, c, ctx);
      return m.star() * j * m == j;
    }
    case Kind::lie_s: return (m + m.conj()).is_zero();
    case Kind::group_s: return m * m.conj() == one;
    case Kind::bmK: return in_bmK(m, c, ctx);
    case Kind::bmK_tilde: return in_bmK_tilde(m, c, ctx);
    case Kind::K_prime: return in_bmK(m, c, ctx) && det_unit(m, ctx);
    case Kind::K_tilde_prime: return in_bmK_tilde(m, c, ctx) && det_unit(m, ctx);
    case Kind::K_S: return in_bmK(m, c, ctx) && m * m.conj() == one;
    case Kind::K_tilde: return in_bmK_tilde(m, c, ctx) && is_member(m, Kind::group_u, c, ctx);
    case Kind::k_tilde: return in_bmK_tilde(m, c, ctx) && is_member(m, Kind::lie_u, c, ctx);
    case Kind::k_tilde_prime: return in_bmK_tilde(m, c, ctx) && (m + m.conj()).is_zero();
  }
  return false;
}

EMat cayley(const EMat& x, const QuadExt& xi) {
  if (xi.norm() != Rat(1)) throw std::invalid_argument("cayley: xi must have norm 1");
  const EMat one = EMat::identity(x.rows(), x.u());
  const EMat den = one - x;
  if (den.det().is_zero()) throw std::domain_error("cayley: 1 - X is singular");
  return xi * ((one + x) * den.inverse());
}

EMat cayley_inv(const EMat& g, const QuadExt& xi) {
  if (xi.norm() != Rat(1)) throw std::invalid_argument("cayley_inv: xi must have norm 1");
  const EMat s = xi * EMat::identity(g.rows(), g.u());
  const EMat den = g + s;
  if (den.det().is_zero()) throw std::domain_error("cayley_inv: g + xi is singular");
  return (g - s) * den.inverse();
}

std::vector<QuadExt> norm_one_candidates(const FieldCtx& ctx, std::size_t count) {
  std::vector<QuadExt> out;
  out.push_back(ctx.elem(Rat(1)));
  out.push_back(ctx.elem(Rat(-1)));
  for (long s = 1; out.size() < count; ++s) {
    out.push_back((ctx.elem(Rat(s)) + ctx.sqrt_u()) / (ctx.elem(Rat(s)) - ctx.sqrt_u()));
    if (out.size() < count)
      out.push_back((ctx.elem(Rat(-s)) + ctx.sqrt_u()) / (ctx.elem(Rat(-s)) - ctx.sqrt_u()));
  }
  out.resize(count);
  return out;
}

std::optional<QuadExt> choose_xi(const EMat& g, const FieldCtx& ctx, std::size_t count) {
  const EMat one = EMat::identity(g.rows(), ctx.u);
  for (const QuadExt& xi : norm_one_candidates(ctx, count)) {
    Valuation v = ctx.val((g + xi * one).det());
    if (!v.is_infinite() && v.value() == 0) return xi;
  }
  return std::nullopt;
}

int transfer_factor(const EMat& y, TransferKind /*kind*/, const FieldCtx& ctx) {
  if (!y.square()) throw std::invalid_argument("transfer_factor: square matrix required");
  const std::size_t m = y.rows();
  EMat stack(m, m, ctx.u);
  EMat row = y.block(m - 1, 0, 1, m);
  for (std::size_t j = 0; j < m; ++j) row(0, j) = ctx.elem(Rat(j + 1 == m ? 1 : 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) stack(i, j) = row(0, j);
    row = row * y;
  }
  QuadExt d = stack.det();
  if (d.is_zero()) throw std::domain_error("transfer_factor: element is not regular");
  return ctx.val(d).value() % 2 == 0 ? 1 : -1;
}

namespace {

struct Blocks {
  EMat a, b, z;
  QuadExt w;
};

Blocks split(const EMat& x) {
  if (!x.square() || x.rows() < 2) throw std::invalid_argument("block split needs a square matrix of size >= 2");
  const std::size_t n = x.rows() - 1;
  return {x.block(0, 0, n, n), x.block(0, n, n, 1), x.block(n, 0, 1, n), x(n, n)};
}

}  // namespace

bool is_regular_semisimple(const EMat& x) {
  const Blocks bl = split(x);
  const std::size_t n = bl.a.rows();
  EMat cols(n, n, x.u());
  EMat rows(n, n, x.u());
  EMat v = bl.b;
  EMat r = bl.z;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      cols(k, i) = v(k, 0);
      rows(i, k) = r(0, k);
    }
    v = bl.a * v;
    r = r * bl.a;
  }
  return cols.rank() == n && rows.rank() == n;
}

std::vector<QuadExt> charpoly(const EMat& m) {
  if (!m.square()) throw std::invalid_argument("charpoly: non-square");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: coefficient c_{n-k} = -tr(M M_k) / k.
  std::vector<QuadExt> coef(n + 1, QuadExt::from_rat(Rat(0), m.u()));
  coef[n] = QuadExt::from_rat(Rat(1), m.u());
  const EMat one = EMat::identity(n, m.u());
  EMat mk(n, n, m.u());
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + coef[n - k + 1] * one;
    coef[n - k] = (m * mk).trace() * Rat(-1, static_cast<long>(k));
  }
  return coef;
}

MatchingInvariants matching_invariants(const EMat& x) {
  if (!is_regular_semisimple(x))
    throw std::invalid_argument("matching_invariants: element is not regular semisimple");
  const Blocks bl = split(x);
  MatchingInvariants inv;
  inv.charpoly_x = charpoly(x);
  inv.charpoly_a = charpoly(bl.a);
  inv.w = bl.w;
  EMat r = bl.z;
  for (std::size_t i = 0; i < bl.a.rows(); ++i) {
    inv.z_a_b.push_back((r * bl.b)(0, 0));
    r = r * bl.a;
  }
  return inv;
}

bool matches(const EMat& x, const EMat& y) {
  if (x.rows() != y.rows()) return false;
  return matching_invariants(x) == matching_invariants(y);
}

EMat iota_c(const EMat& x, long c, const FieldCtx& ctx) {
  split(x);
  EMat out = x;
  const std::size_t n = x.rows() - 1;
  const QuadExt s = ctx.pi_pow(-c);
  for (std::size_t i = 0; i < n; ++i) out(i, n) = s * out(i, n);
  return out;
}

EMat r_map(const EMat& g) {
  if (!g.square()) throw std::invalid_argument("r_map: non-square");
  return g * g.conj().inverse();
}

std::pair<QuadExt, QuadExt> det_stack_sides(const EMat& x) {
  const Blocks bl = split(x);
  const std::size_t m = bl.a.rows();
  EMat left(m + 1, m + 1, x.u());
  EMat v(m + 1, 1, x.u());
  v(m, 0) = QuadExt::from_rat(Rat(1), x.u());
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t k = 0; k <= m; ++k) left(k, i) = v(k, 0);
    v = x * v;
  }
  EMat right(m, m, x.u());
  EMat w = bl.b;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) right(k, i) = w(k, 0);
    w = bl.a * w;
  }
  QuadExt rhs = right.det();
  if (m % 2 == 1) rhs = -rhs;
  return {left.det(), rhs};
}

bool det_stack_identity_check(const EMat& x) {
  auto [l, r] = det_stack_sides(x);
  return l == r;
}

nlohmann::json to_json(const EMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const QuadExt& x = m(i, j);
      row.push_back({x.a().num().get_str(), x.a().den().get_str(), x.b().num().get_str(),
                     x.b().den().get_str()});
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"u", m.u().str()}, {"rows", rows}};
}

EMat emat_from_json(const nlohmann::json& j, const Rat& u) {
  const auto& rows = j.is_object() ? j.at("rows") : j;
  auto part = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
  };
  std::vector<std::vector<QuadExt>> out;
  for (const auto& row : rows) {
    std::vector<QuadExt> r;
    for (const auto& e : row) {
      if (!e.is_array() || e.size() != 4)
        throw std::invalid_argument("EMat JSON: entry must be [a_num, a_den, b_num, b_den]");
      Rat a = Rat::parse(part(e[0]) + "/" + part(e[1]));
      Rat b = Rat::parse(part(e[2]) + "/" + part(e[3]));
      r.emplace_back(a, b, u);
    }
    out.push_back(std::move(r));
  }
  return EMat::from_rows(out);
}

namespace sample {

QuadExt integer(std::mt19937_64& rng, const FieldCtx& ctx, long bound) {
  return ctx.elem(Rat(rnd::integer(rng, -bound, bound)), Rat(rnd::integer(rng, -bound, bound)));
}

EMat integral(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long bound) {
  EMat m(size, size, ctx.u);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = integer(rng, ctx, bound);
  return m;
}

EMat lie_u_integral(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long c, long bound) {
  const std::size_t n = size - 1;
  EMat m(size, size, ctx.u);
  for (std::size_t i = 0; i < size; ++i)
    m(i, i) = ctx.sqrt_u() * Rat(rnd::integer(rng, -bound, bound));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = integer(rng, ctx, bound);
      m(j, i) = -m(i, j).conj();
    }
  // y = -varpi^c z^*
  for (std::size_t j = 0; j < n; ++j) {
    m(n, j) = integer(rng, ctx, bound);
    m(j, n) = -(ctx.pi_pow(c) * m(n, j).conj());
  }
  return m;
}

EMat bmK_tilde(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long c, long bound) {
  EMat m = integral(rng, ctx, size, bound);
  const std::size_t n = size - 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n) = ctx.pi_pow(c) * m(i, n);
  return m;
}

EMat K_prime(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long c, long bound) {
  const std::size_t n = size - 1;
  for (;;) {
    EMat m = bmK_tilde(rng, ctx, size, c, bound);
    m(n, n) = ctx.elem(Rat(1)) + ctx.pi_pow(c) * integer(rng, ctx, bound);
    Valuation v = ctx.val(m.det());
    if (!v.is_infinite() && v.value() == 0) return m;
  }
}

EMat lie_s(std::mt19937_64& rng, const FieldCtx& ctx, std::size_t size, long bound) {
  EMat m(size, size, ctx.u);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m(i, j) = ctx.sqrt_u() * Rat(rnd::integer(rng, -bound, bound));
  return m;
}

}  // namespace sample

}  // namespace nfp::hermitian
