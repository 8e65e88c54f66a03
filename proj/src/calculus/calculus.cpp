#include "ncgeom/calculus.hpp"

#include <stdexcept>

#include "ncgeom/errors.hpp"

namespace ncgeom {

namespace {

template <class Vec>
void add_into(Vec& lhs, const Vec& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("form shape mismatch");
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += rhs[i];
}

template <class Vec>
void sub_into(Vec& lhs, const Vec& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("form shape mismatch");
  for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs[i];
}

bool all_zero(const std::vector<GroupFunction>& fs) {
  for (const auto& f : fs)
    if (!f.is_zero()) return false;
  return true;
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

GroupFunction GroupFunction::delta(std::size_t order, int g) {
  GroupFunction f(order);
  f[idx(g)] = 1;
  return f;
}

bool GroupFunction::is_constant() const {
  for (const auto& v : values_)
    if (!(v == values_.front())) return false;
  return true;
}

GroupFunction& GroupFunction::operator+=(const GroupFunction& rhs) {
  add_into(values_, rhs.values_);
  return *this;
}

GroupFunction& GroupFunction::operator-=(const GroupFunction& rhs) {
  sub_into(values_, rhs.values_);
  return *this;
}

GroupFunction& GroupFunction::operator*=(const GroupFunction& rhs) {
  if (size() != rhs.size()) throw std::invalid_argument("function size mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (!values_[i].is_zero()) values_[i] *= rhs.values_[i];
  }
  return *this;
}

GroupFunction& GroupFunction::operator*=(const Cyclotomic& rhs) {
  for (auto& v : values_)
    if (!v.is_zero()) v *= rhs;
  return *this;
}

GroupFunction GroupFunction::operator-() const {
  GroupFunction out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

bool OneForm::is_zero() const { return all_zero(coeffs); }
OneForm& OneForm::operator+=(const OneForm& rhs) { return add_into(coeffs, rhs.coeffs), *this; }
OneForm& OneForm::operator-=(const OneForm& rhs) { return sub_into(coeffs, rhs.coeffs), *this; }

bool TensorForm::is_zero() const { return all_zero(coeffs); }
TensorForm& TensorForm::operator+=(const TensorForm& rhs) { return add_into(coeffs, rhs.coeffs), *this; }
TensorForm& TensorForm::operator-=(const TensorForm& rhs) { return sub_into(coeffs, rhs.coeffs), *this; }

bool TwoForm::is_zero() const { return all_zero(coeffs); }
TwoForm& TwoForm::operator+=(const TwoForm& rhs) { return add_into(coeffs, rhs.coeffs), *this; }
TwoForm& TwoForm::operator-=(const TwoForm& rhs) { return sub_into(coeffs, rhs.coeffs), *this; }

Monomial braiding(const ConjClass& c, Monomial ab) {
  const int a = c.member(ab.first);
  const int b = c.member(ab.second);
  return {c.position(c.group().conj(a, b)), ab.first};
}

TwoFormSpace::TwoFormSpace(const ConjClass& c) : k_(c.size()) {
  if (c.size() < 2 || !is_cyclic_class(c).cyclic) throw NonCyclicClassError("conjugacy class is not cyclic");
  const auto kk = idx(k_ * k_);
  psi_ = ExactMatrix(kk, kk);
  for (int a = 0; a < k_; ++a)
    for (int b = 0; b < k_; ++b) {
      const auto [p, q] = braiding(c, {a, b});
      psi_(idx(p * k_ + q), idx(a * k_ + b)) = 1;
    }
  relations_ = kernel(ExactMatrix::identity(kk) - psi_);

  if (k_ == 3 && matches_product_pattern(c)) {
    quotient_basis_ = {{1, 0}, {2, 1}, {2, 0}, {1, 2}};
    standard_basis_ = true;
  } else {
    std::vector<ExactVector> spanning = relations_;
    std::size_t current = relations_.size();
    for (int m = 0; m < k_ * k_ && current < kk; ++m) {
      ExactVector unit(kk);
      unit[idx(m)] = 1;
      spanning.push_back(unit);
      const std::size_t r = rank(ExactMatrix::from_columns(spanning, kk));
      if (r > current) {
        quotient_basis_.emplace_back(m / k_, m % k_);
        current = r;
      } else {
        spanning.pop_back();
      }
    }
  }

  std::vector<ExactVector> columns;
  for (const auto& [a, b] : quotient_basis_) {
    ExactVector unit(kk);
    unit[idx(a * k_ + b)] = 1;
    columns.push_back(unit);
  }
  columns.insert(columns.end(), relations_.begin(), relations_.end());
  if (columns.size() != kk) throw InternalError("quotient basis and relations do not span the tensor square");
  const ExactMatrix inv = inverse(ExactMatrix::from_columns(columns, kk));
  reduction_ = inv.block(0, 0, quotient_basis_.size(), kk);
}

ExactVector TwoFormSpace::reduce(Monomial ab) const { return reduction_.column(idx(ab.first * k_ + ab.second)); }

ExactVector TwoFormSpace::reduce(const ExactVector& monomial_coords) const { return reduction_ * monomial_coords; }

Calculus::Calculus(ConjClass c) : class_(std::move(c)), space_(class_) {
  const FiniteGroup& g = class_.group();
  for (int a = 0; a < k(); ++a) {
    std::vector<int> row;
    for (int x = 0; x < g.order(); ++x) row.push_back(g.mul(x, class_.member(a)));
    right_mul_.push_back(std::move(row));
  }
  adjoint_ = ad_table(class_);
  for (int a = 0; a < k(); ++a) de_.push_back(wedge(theta(), e(a)) + wedge(e(a), theta()));
}

int Calculus::adjoint(int a, int b) const { return adjoint_[idx(a)][idx(b)]; }

int Calculus::adjoint_inverse(int a, int b) const {
  const FiniteGroup& g = group();
  const int bm = class_.member(b);
  return class_.position(g.mul(g.mul(g.inv(bm), class_.member(a)), bm));
}

GroupFunction Calculus::translate(int a, const GroupFunction& f) const {
  GroupFunction out(order());
  const auto& rm = right_mul_[idx(a)];
  for (std::size_t x = 0; x < order(); ++x) out[x] = f[idx(rm[x])];
  return out;
}

GroupFunction Calculus::partial(int a, const GroupFunction& f) const { return translate(a, f) - f; }

OneForm Calculus::zero_one_form() const { return {std::vector<GroupFunction>(idx(k()), zero_function())}; }
TwoForm Calculus::zero_two_form() const {
  return {std::vector<GroupFunction>(idx(space_.dimension()), zero_function())};
}
TensorForm Calculus::zero_tensor() const { return {std::vector<GroupFunction>(idx(k() * k()), zero_function())}; }

OneForm Calculus::e(int a) const {
  OneForm out = zero_one_form();
  out.coeffs[idx(a)] = constant(1);
  return out;
}

OneForm Calculus::theta() const {
  OneForm out = zero_one_form();
  for (auto& c : out.coeffs) c = constant(1);
  return out;
}

OneForm Calculus::scale(const GroupFunction& f, const OneForm& alpha) const {
  OneForm out = alpha;
  for (auto& c : out.coeffs) c = f * c;
  return out;
}

OneForm Calculus::scale_right(const OneForm& alpha, const GroupFunction& f) const {
  OneForm out = alpha;
  for (int a = 0; a < k(); ++a) out.coeffs[idx(a)] *= translate(a, f);
  return out;
}

TwoForm Calculus::scale(const GroupFunction& f, const TwoForm& omega) const {
  TwoForm out = omega;
  for (auto& c : out.coeffs) c = f * c;
  return out;
}

TensorForm Calculus::scale(const GroupFunction& f, const TensorForm& t) const {
  TensorForm out = t;
  for (auto& c : out.coeffs) c = f * c;
  return out;
}

OneForm Calculus::d(const GroupFunction& f) const {
  OneForm out;
  for (int a = 0; a < k(); ++a) out.coeffs.push_back(partial(a, f));
  return out;
}

TwoForm Calculus::d(const OneForm& alpha) const {
  TwoForm out = zero_two_form();
  for (int a = 0; a < k(); ++a) {
    const GroupFunction& f = alpha.coeffs[idx(a)];
    if (f.is_zero()) continue;
    out += wedge(d(f), e(a));
    out += scale(f, de_[idx(a)]);
  }
  return out;
}

TensorForm Calculus::tensor(const OneForm& alpha, const OneForm& beta) const {
  TensorForm out = zero_tensor();
  for (int a = 0; a < k(); ++a) {
    const GroupFunction& fa = alpha.coeffs[idx(a)];
    if (fa.is_zero()) continue;
    for (int b = 0; b < k(); ++b) {
      const GroupFunction& fb = beta.coeffs[idx(b)];
      if (fb.is_zero()) continue;
      out.coeffs[idx(a * k() + b)] = fa * translate(a, fb);
    }
  }
  return out;
}

TwoForm Calculus::project(const TensorForm& t) const {
  TwoForm out = zero_two_form();
  const ExactMatrix& w = space_.reduction();
  for (std::size_t q = 0; q < w.rows(); ++q)
    for (std::size_t m = 0; m < w.cols(); ++m) {
      if (w(q, m).is_zero() || t.coeffs[m].is_zero()) continue;
      out.coeffs[q] += w(q, m) * t.coeffs[m];
    }
  return out;
}

TwoForm Calculus::wedge(const OneForm& alpha, const OneForm& beta) const { return project(tensor(alpha, beta)); }

}  // namespace ncgeom
