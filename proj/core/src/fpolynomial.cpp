#include "cosmoface/fpolynomial.hpp"

#include <algorithm>

#include "cosmoface/errors.hpp"

namespace cosmoface {

FPolynomial::FPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  normalize();
}

FPolynomial FPolynomial::of(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> c;
  for (long long x : coeffs) c.emplace_back(x);
  return FPolynomial(std::move(c));
}

void FPolynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

int FPolynomial::degree() const {
  if (coeffs_.size() == 1 && coeffs_[0] == 0) return -1;
  return static_cast<int>(coeffs_.size()) - 1;
}

const BigInt& FPolynomial::coeff(int k) const {
  static const BigInt kZero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[k];
}

FPolynomial FPolynomial::operator+(const FPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return FPolynomial(std::move(out));
}

FPolynomial FPolynomial::operator-(const FPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return FPolynomial(std::move(out));
}

FPolynomial FPolynomial::operator*(const FPolynomial& o) const {
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return FPolynomial(std::move(out));
}

FPolynomial FPolynomial::scale_shift(const BigInt& c, int power) const {
  if (power < 0) throw InternalError("negative shift power");
  std::vector<BigInt> out(coeffs_.size() + power, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + power] = coeffs_[i] * c;
  return FPolynomial(std::move(out));
}

BigInt FPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool FPolynomial::has_negative_coefficient() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c < 0; });
}

bool FPolynomial::is_valid_f_polynomial() const {
  return !has_negative_coefficient() && coeffs_.front() == 1 && coeffs_.back() == 1 &&
         evaluate(-1) == 0;
}

std::vector<std::string> FPolynomial::coeff_strings() const {
  std::vector<std::string> out;
  for (const BigInt& c : coeffs_) out.push_back(c.str());
  return out;
}

std::string FPolynomial::to_string() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0 && coeffs_.size() > 1) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs_[i] != 1) out += coeffs_[i].str();
    if (i == 1) out += out.empty() || coeffs_[i] == 1 ? "t" : "*t";
    if (i > 1) out += (coeffs_[i] == 1 ? std::string("t^") : std::string("*t^")) + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cosmoface
