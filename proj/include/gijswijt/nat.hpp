/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gijswijt {

using Nat = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Nat pow_nat(std::uint64_t base, std::uint64_t exp);
Nat parse_nat(std::string_view text);
std::string to_string(const Nat& n);
std::string to_string(const Rational& q);

// Number of base-b digits of n (0 has one digit).
std::uint64_t digit_count(std::uint64_t base, const Nat& n);

Nat floor_of(const Rational& q);
Nat ceil_of(const Rational& q);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, Nat length) : Error(what), length_(std::move(length)) {}
  const Nat& length() const { return length_; }

 private:
  Nat length_;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class InsufficientSetBound : public Error {
 public:
  InsufficientSetBound(const std::string& what, std::uint64_t required)
      : Error(what), required_(required) {}
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace gijswijt
