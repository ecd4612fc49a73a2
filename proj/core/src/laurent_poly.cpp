#include "fibideal/laurent_poly.hpp"

#include <algorithm>
#include <ostream>

namespace fibideal {

namespace {

using Term = LaurentPoly::Term;

// Dense accumulator over [lo, hi] compacted back into canonical terms.
std::vector<Term> compact(std::vector<BigInt>& dense, std::int64_t lo) {
  std::vector<Term> out;
  for (std::size_t j = 0; j < dense.size(); ++j) {
    if (!dense[j].is_zero()) out.push_back({lo + static_cast<std::int64_t>(j), std::move(dense[j])});
  }
  return out;
}

template <class Combine>
std::vector<Term> merge(std::span<const Term> x, std::span<const Term> y, Combine combine) {
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exp < y[j].exp)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].exp < x[i].exp) {
      out.push_back({y[j].exp, combine(BigInt{}, y[j].coeff)});
      ++j;
    } else {
      BigInt c = combine(x[i].coeff, y[j].coeff);
      if (!c.is_zero()) out.push_back({x[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(BigInt c) {
  if (!c.is_zero()) terms_.push_back({0, std::move(c)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::span<const BigInt> coeffs, std::int64_t lowest_exp) {
  LaurentPoly p;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) p.terms_.push_back({lowest_exp + static_cast<std::int64_t>(j), coeffs[j]});
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::initializer_list<std::int64_t> coeffs, std::int64_t lowest_exp) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return from_coeffs(big, lowest_exp);
}

LaurentPoly LaurentPoly::monomial(BigInt c, std::int64_t exp) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.push_back({exp, std::move(c)});
  return p;
}

BigInt LaurentPoly::coeff(std::int64_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::int64_t e) { return t.exp < e; });
  if (it == terms_.end() || it->exp != exp) return BigInt{};
  return it->coeff;
}

std::optional<std::int64_t> LaurentPoly::min_exp() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exp;
}

std::optional<std::int64_t> LaurentPoly::max_exp() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exp;
}

bool LaurentPoly::is_polynomial() const { return terms_.empty() || terms_.front().exp >= 0; }

std::vector<BigInt> LaurentPoly::dense_coeffs() const {
  if (!is_polynomial()) throw std::domain_error("dense_coeffs on a polynomial with negative exponents");
  if (terms_.empty()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(terms_.back().exp) + 1);
  for (const auto& t : terms_) out[static_cast<std::size_t>(t.exp)] = t.coeff;
  return out;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly p;
  p.terms_ = merge(x.terms_, y.terms_, [](const BigInt& a, const BigInt& b) { return a + b; });
  return p;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly p;
  p.terms_ = merge(x.terms_, y.terms_, [](const BigInt& a, const BigInt& b) { return a - b; });
  return p;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const std::int64_t lo = x.terms_.front().exp + y.terms_.front().exp;
  const std::int64_t hi = x.terms_.back().exp + y.terms_.back().exp;
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& s : x.terms_) {
    for (const auto& t : y.terms_) {
      dense[static_cast<std::size_t>(s.exp + t.exp - lo)].addmul(s.coeff, t.coeff);
    }
  }
  LaurentPoly p;
  p.terms_ = compact(dense, lo);
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += k;
  return p;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly p;
  for (const auto& t : terms_) {
    if (t.exp != 0) p.terms_.push_back({t.exp - 1, t.coeff * BigInt{t.exp}});
  }
  return p;
}

std::optional<LaurentPoly> LaurentPoly::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const Term& t = terms_.front();
  if (t.coeff != BigInt{1} && t.coeff != BigInt{-1}) return std::nullopt;
  return monomial(t.coeff, -t.exp);
}

bool is_self_reciprocal(const LaurentPoly& p, std::int64_t degree) {
  for (const auto& t : p.terms()) {
    if (p.coeff(degree - t.exp) != t.coeff) return false;
  }
  return true;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& num, const LaurentPoly& den) {
  if (!num.is_polynomial() || !den.is_polynomial())
    throw std::domain_error("poly_divmod requires ordinary polynomials");
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::int64_t dd = *den.max_exp();
  const BigInt lead = den.coeff(dd);
  if (lead != BigInt{1} && lead != BigInt{-1})
    throw std::domain_error("poly_divmod requires a divisor with leading coefficient +-1");

  std::vector<BigInt> rem = num.dense_coeffs();
  const std::vector<BigInt> d = den.dense_coeffs();
  const std::int64_t nd = static_cast<std::int64_t>(rem.size()) - 1;
  if (nd < dd) return {LaurentPoly{}, num};

  std::vector<BigInt> quo(static_cast<std::size_t>(nd - dd + 1));
  for (std::int64_t k = nd - dd; k >= 0; --k) {
    // lead is +-1, so dividing by it is multiplying by it.
    BigInt c = rem[static_cast<std::size_t>(k + dd)] * lead;
    if (c.is_zero()) continue;
    for (std::int64_t j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * d[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k)] = std::move(c);
  }
  return {LaurentPoly::from_coeffs(quo), LaurentPoly::from_coeffs(rem)};
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->coeff.sign() < 0;
    const BigInt mag = it->coeff.abs();
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const bool unit = mag == BigInt{1};
    if (it->exp == 0) {
      s += mag.to_string();
      continue;
    }
    if (!unit) s += mag.to_string() + "*";
    s += "q";
    if (it->exp != 1) s += "^" + std::to_string(it->exp);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace fibideal
