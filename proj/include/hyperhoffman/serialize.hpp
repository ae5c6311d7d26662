// Copyright 2026 The hyperhoffman Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "hyperhoffman/bounds.hpp"
#include "hyperhoffman/fourier.hpp"
#include "hyperhoffman/measure.hpp"
#include "hyperhoffman/oracle.hpp"
#include "hyperhoffman/spectral.hpp"
#include "hyperhoffman/stability.hpp"

namespace hyperhoffman {

using Json = nlohmann::ordered_json;

/// Doubles are emitted as JSON numbers (shortest round-trip form);
/// rationals as "a/b" strings.
Json json_value(double x);
Json json_value(const Rational& x);

Json report_json(const BiasVector& p);
Json report_json(const RationalBiasVector& p);
/// {"n": n, "hex": ...}.
Json report_json(const SubsetFamily& family);
SubsetFamily family_from_json(const Json& j);
Json report_json(const BaseTensor& base);
/// Metadata only: n, arity, kind, eps, and the distinct base tensors.
Json report_json(const ProductMeasure& m);
Json report_json(const SpectrumReport& s);
Json report_json(const BoundReport& b);
Json report_json(const OracleResult<double>& o);
Json report_json(const OracleResult<Rational>& o);
Json report_json(const CrossResult<double>& c);
Json report_json(const CrossResult<Rational>& c);
Json report_json(const StabilityReport& s);
Json report_json(const CaseAnalysis& c);
Json report_json(const OneCoordinateFit& f);

/// Header "family,eps,tau,tau_bound,star_distance,cp_eps"; floats use 17
/// significant digits, absent values are empty fields.
std::string census_csv(std::span<const CensusRecord> records);

/// Header "set,coefficient,lambda".
std::string fourier_csv(const FourierExpansion& e, const SpectrumReport& spectrum);

}  // namespace hyperhoffman
