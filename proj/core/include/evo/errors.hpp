/*
   Copyright 2026 the evo project contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EVO_ERRORS_HPP
#define EVO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evo {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class RejectedModulus : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

class InvalidInput : public Error {
  public:
    using Error::Error;
};

class MonomialInput : public Error {
  public:
    using Error::Error;
};

class IncompatibleField : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class FieldMismatch : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class InvariantViolation : public Error {
  public:
    using Error::Error;
};

class ShapeError : public Error {
  public:
    using Error::Error;
};

class FieldIncompatible : public Error {
  public:
    using Error::Error;
};

class NotNilpotent : public Error {
  public:
    using Error::Error;
};

class NotPeriodic : public Error {
  public:
    using Error::Error;
};

class UnexpectedFactorShape : public Error {
  public:
    using Error::Error;
};

class NotAMorphism : public Error {
  public:
    NotAMorphism(const std::string& what, int i, int j) : Error(what), witness_i(i), witness_j(j) {}
    int witness_i;
    int witness_j;
};

class ZeroWeight : public Error {
  public:
    using Error::Error;
};

class KernelNotNilplenary : public Error {
  public:
    using Error::Error;
};

class NotEvolutionAlgebra : public Error {
  public:
    using Error::Error;
};

class SizeTooSmall : public Error {
  public:
    using Error::Error;
};

}  // namespace evo

#endif
