// Copyright 2026 The newtb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NEWTB_ERROR_HPP
#define NEWTB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace newtb {

// Error taxonomy shared by the whole library.
//
//  - ArgumentError:  the caller violated a documented precondition
//                    (bad input text, out-of-domain evaluation, ...).
//  - ResourceError:  an enumeration would exceed the configured cap.
//  - InvariantError: an internal cross-check failed.  These are the
//    "must not happen" assertions (triple-path formulas disagreeing,
//    singular barycentric systems, ...) and map to exit code 3 in the
//    CLI rather than 2.
class Error : public std::runtime_error {
public:
  enum class Kind { Argument, Resource, Invariant };

  Error(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

[[noreturn]] inline void throw_argument(const std::string& what) {
  throw Error(Error::Kind::Argument, what);
}
[[noreturn]] inline void throw_resource(const std::string& what) {
  throw Error(Error::Kind::Resource, what);
}
[[noreturn]] inline void throw_invariant(const std::string& what) {
  throw Error(Error::Kind::Invariant, what);
}

#define NEWTB_REQUIRE(cond, what) \
  do {                            \
    if (!(cond)) ::newtb::throw_argument(what); \
  } while (0)

#define NEWTB_CHECK(cond, what) \
  do {                          \
    if (!(cond)) ::newtb::throw_invariant(what); \
  } while (0)

}  // namespace newtb

#endif  // NEWTB_ERROR_HPP
