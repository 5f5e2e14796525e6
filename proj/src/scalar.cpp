#include "ncpart/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncpart {

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
  };
  if (text.empty()) throw bad();
  // GMP tolerates whitespace and a leading '+'; the accepted syntax is stricter.
  std::size_t i = 0;
  if (text[0] == '-') i = 1;
  bool digits = false;
  bool slash = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      digits = true;
    } else if (c == '/' && digits && !slash) {
      slash = true;
      digits = false;
    } else {
      throw bad();
    }
  }
  if (!digits) throw bad();

  Rational q;
  if (q.set_str(std::string(text), 10) != 0) throw bad();
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& rhs) {
  if (sgn(rhs) == 0) throw std::domain_error("polynomial division by zero");
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool is_unit(const Polynomial& p) { return p.degree() == 0; }

Polynomial unit_inverse(const Polynomial& p) {
  if (!is_unit(p)) throw std::invalid_argument("polynomial is not a unit: " + to_string(p));
  return Polynomial(Rational(1) / p.coeffs().front());
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) {
      if (mag.get_den() == 1) {
        out += to_string(mag);
      } else {
        out += "(" + to_string(mag) + ")";
      }
    }
    out += "λ";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ncpart
