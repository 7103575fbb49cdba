// Copyright 2026 The parsub Authors
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

#include "parsub/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "parsub/errors.hpp"

namespace parsub {
namespace {

Rational CurvatureUpper(int alpha, const Rational& lambda) {
  return (Rational(alpha) - Rational(alpha - 1) * lambda) / alpha;
}

Rational CurvatureLower(int theta, const Rational& lambda) {
  return (Rational(theta) - Rational(theta - 1) * lambda) / (Rational(theta) + lambda);
}

void RequireLambda(const Rational& lambda) {
  if (lambda < 0 || lambda > 1) {
    throw InputError("lambda: must lie in [0, 1], got " + ToString(lambda));
  }
}

void RequireAgents(const InformationGraph& g) {
  if (g.n() < 1) throw InputError("graph: needs at least one agent");
}

ReportRow Evaluate(const CertifyCase& c, const CertifyOptions& options) {
  ReportRow row;
  row.id = c.id;
  row.graph_id = c.graph_id;
  row.predicted = c.predicted;
  try {
    Rational lambda(1);
    if (c.f.size() <= options.exhaustive_cap) {
      const PropertyReport props = CheckProperties(c.f, options.exhaustive_cap);
      if (!props.ok()) {
        row.verdict = Verdict::kFail;
        row.note = "objective is not normalized, monotone and submodular";
        return row;
      }
      lambda = *props.curvature;
      row.curvature = lambda;
    } else {
      row.note = "ground set above exhaustive cap; using lambda = 1";
    }
    const RatioBounds bounds = CurvatureGraphBounds(c.g, lambda, options.graph_cap);
    row.lower = bounds.lower;
    row.upper = bounds.upper;
    if (lambda == 1) {
      if (FindSibling(c.g, options.graph_cap)) {
        row.refined_upper = Rational(1, IndependenceNumber(c.g, options.graph_cap).value + 1);
      }
    }
    row.empirical = EmpiricalRatio(c.f, c.x, c.g, options.tie_node_cap, options.profile_cap);

    const Rational& e = *row.empirical;
    if (e < *row.lower) {
      row.verdict = Verdict::kFail;
      row.note = "empirical ratio below the lower bound";
    } else if (e > 1) {
      row.verdict = Verdict::kFail;
      row.note = "empirical ratio above 1";
    } else if (row.predicted && e != *row.predicted) {
      row.verdict = Verdict::kFail;
      row.note = "witness ratio differs from the predicted ratio";
    }
  } catch (const CapacityError& err) {
    row.verdict = Verdict::kError;
    row.note = std::string("capacity: ") + err.what();
  } catch (const UndefinedRatioError& err) {
    row.verdict = Verdict::kError;
    row.note = err.what();
  } catch (const InputError& err) {
    row.verdict = Verdict::kError;
    row.note = std::string("input: ") + err.what();
  }
  return row;
}

}  // namespace

Rational Rho(int n, int q) {
  const int r = BlockSize(n, q);
  return IsOneModQ(n, q) ? Rational(1, r) : Rational(1, r + 1);
}

RatioBounds GraphRatioBounds(const InformationGraph& g, int cap) {
  RequireAgents(g);
  const int alpha = IndependenceNumber(g, cap).value;
  const int theta = CliqueCoverNumber(g, cap).value;
  RatioBounds out{Rational(1, alpha), Rational(1, theta + 1), std::nullopt,
                  "1/alpha >= gamma >= 1/(theta + 1)"};
  if (FindSibling(g, cap)) {
    out.refined_upper = Rational(1, alpha + 1);
    out.source += "; sibling condition: gamma <= 1/(alpha + 1)";
  }
  return out;
}

RatioBounds CurvatureGraphBounds(const InformationGraph& g, const Rational& lambda,
                                 int cap) {
  RequireLambda(lambda);
  RequireAgents(g);
  const int alpha = IndependenceNumber(g, cap).value;
  const int theta = CliqueCoverNumber(g, cap).value;
  return {CurvatureUpper(alpha, lambda), CurvatureLower(theta, lambda), std::nullopt,
          "(alpha - (alpha-1) lambda)/alpha >= gamma_lambda >= "
          "(theta - (theta-1) lambda)/(theta + lambda)"};
}

RatioBounds CurvatureEtaBounds(int n, int q, const Rational& lambda) {
  RequireLambda(lambda);
  const int r = BlockSize(n, q);
  return {CurvatureUpper(r, lambda), CurvatureLower(r, lambda), std::nullopt,
          "(r - (r-1) lambda)/r >= eta_lambda >= (r - (r-1) lambda)/(r + lambda)"};
}

std::int64_t MinEdgesBound(int n, int k) {
  if (n < 1) throw InputError("n: must be at least 1, got " + std::to_string(n));
  if (k < 2) throw InputError("k: must be at least 2, got " + std::to_string(k));
  const std::int64_t big = (n + k - 1) / k;
  const std::int64_t small = n / k;
  const std::int64_t big_classes = n % k;
  // Classes of size ⌊n/k⌋: k − (n mod k). This is (−n mod k) except when k
  // divides n, where all k classes have that size.
  const std::int64_t small_classes = k - big_classes;
  return (big_classes * big * (big - 1) + small_classes * small * (small - 1)) / 2;
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kError:
      return "ERROR";
  }
  return "UNKNOWN";
}

BoundsReport Certify(const std::vector<CertifyCase>& suite,
                     const CertifyOptions& options) {
  BoundsReport report;
  report.rows.resize(suite.size());
  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, suite.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t k = next++; k < suite.size(); k = next++) {
      try {
        report.rows[k] = Evaluate(suite[k], options);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  for (const ReportRow& row : report.rows) {
    if (row.verdict == Verdict::kFail) ++report.failures;
    if (row.verdict == Verdict::kError) ++report.errors;
    if (row.predicted && row.empirical && row.upper && *row.empirical == *row.upper) {
      ++report.witnesses_at_upper;
    }
  }
  return report;
}

}  // namespace parsub
