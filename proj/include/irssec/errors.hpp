// SPDX-License-Identifier: Apache-2.0
//
// irssec  IRS-assisted downlink secrecy-outage simulator and analytics
// Copyright (C) 2026 irssec contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSSEC_ERRORS_HPP
#define IRSSEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irssec
{

// A numerical routine failed to meet its accuracy contract (quadrature that
// will not converge, contour integration on a hostile parameter set). Maps to
// process exit code 3 in the command-line tool.
class numerical_error : public std::runtime_error
{
  public:
    explicit numerical_error(const std::string &what) : std::runtime_error(what) {}
};

// Reading or writing a result/metadata file failed. Maps to process exit
// code 4 in the command-line tool.
class io_error : public std::runtime_error
{
  public:
    explicit io_error(const std::string &what) : std::runtime_error(what) {}
};

} // namespace irssec

#endif
