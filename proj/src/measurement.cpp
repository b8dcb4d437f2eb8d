// Copyright 2026 The Graphent Authors
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

#include "graphent/measurement.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "graphent/graph_io.hpp"
#include "json.hpp"

namespace graphent {

Probability Probability::operator*(Probability o) const {
  Probability p{numerator * o.numerator, denominator * o.denominator};
  const auto g = std::gcd(p.numerator, p.denominator);
  if (g > 1) {
    p.numerator /= g;
    p.denominator /= g;
  }
  if (p.numerator == 0) p.denominator = 1;
  return p;
}

std::string Probability::to_string() const {
  if (denominator == 1) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

Probability MeasurementOutcome::probability(Sign s) const {
  if (prob_plus == Probability::one()) return s == Sign::plus ? Probability::one() : Probability::zero();
  return Probability::half();
}

namespace {

Vertex resolve_b0(const Graph& g, Vertex a, std::optional<Vertex> b0) {
  const VertexSet na = g.neighbors(a);
  if (!b0) return na.min();
  if (*b0 >= g.order() || !na.contains(*b0)) throw std::invalid_argument("b0 must be a neighbor of the measured vertex");
  return *b0;
}

void check_vertex(const Graph& g, Vertex a) {
  if (a >= g.order()) throw std::out_of_range("measured vertex out of range");
}

}  // namespace

void apply_measurement_rule(Graph& g, Vertex a, Axis basis, std::optional<Vertex> b0) {
  check_vertex(g, a);
  const VertexSet na = g.neighbors(a);
  switch (basis) {
    case Axis::z:
      break;
    case Axis::y:
      g.toggle_pairs(na, na);
      break;
    case Axis::x: {
      if (na.empty()) {
        if (b0) throw std::invalid_argument("b0 given for an isolated vertex");
        break;
      }
      const Vertex b = resolve_b0(g, a, b0);
      const VertexSet nb = g.neighbors(b);
      const VertexSet both = nb & na;
      g.toggle_pairs(nb, na);
      g.toggle_pairs(both, both);
      g.toggle_pairs(VertexSet{b}, na - VertexSet{b});
      break;
    }
  }
  g.isolate(a);
}

MeasurementOutcome measure_pauli(const Graph& g, Vertex a, Axis basis, std::optional<Vertex> b0) {
  check_vertex(g, a);
  const std::size_t n = g.order();
  const VertexSet na = g.neighbors(a);

  MeasurementOutcome out;
  out.vertex = a;
  out.basis = basis;
  LocalClifford plus(n);
  LocalClifford minus(n);

  switch (basis) {
    case Axis::z:
      na.for_each([&](Vertex b) { minus.set(b, Clifford1::pauli(Axis::z)); });
      break;
    case Axis::y:
      na.for_each([&](Vertex b) {
        plus.set(b, Clifford1::sqrt_minus_i(Axis::z));
        minus.set(b, Clifford1::sqrt_plus_i(Axis::z));
      });
      break;
    case Axis::x:
      if (na.empty()) {
        if (b0) throw std::invalid_argument("b0 given for an isolated vertex");
        out.prob_plus = Probability::one();
        break;
      }
      {
        const Vertex b = resolve_b0(g, a, b0);
        const VertexSet nb = g.neighbors(b);
        out.chosen_b0 = b;
        plus.set(b, Clifford1::sqrt_plus_i(Axis::y));
        minus.set(b, Clifford1::sqrt_minus_i(Axis::y));
        (na - nb - VertexSet{b}).for_each([&](Vertex v) { plus.set(v, Clifford1::pauli(Axis::z)); });
        (nb - na - VertexSet{a}).for_each([&](Vertex v) { minus.set(v, Clifford1::pauli(Axis::z)); });
      }
      break;
  }

  Graph work = g;
  apply_measurement_rule(work, a, basis, out.chosen_b0);
  out.graph_after = delete_vertex(work, a);
  out.byproduct_plus = plus.without_site(a);
  out.byproduct_minus = minus.without_site(a);
  return out;
}

Graph measure_via_lc(const Graph& g, Vertex a, Axis basis, std::optional<Vertex> b0) {
  check_vertex(g, a);
  switch (basis) {
    case Axis::z:
      return delete_vertex(g, a);
    case Axis::y:
      return delete_vertex(local_complement(g, a), a);
    case Axis::x: {
      if (g.neighbors(a).empty()) {
        if (b0) throw std::invalid_argument("b0 given for an isolated vertex");
        return delete_vertex(g, a);
      }
      const Vertex b = resolve_b0(g, a, b0);
      const Graph inner = delete_vertex(local_complement(local_complement(g, b), a), a);
      return local_complement(inner, b > a ? b - 1 : b);
    }
  }
  throw std::logic_error("unreachable");
}

SequenceResult apply_sequence(const Graph& g, const std::vector<MeasurementStep>& steps) {
  SequenceResult result;
  result.graph = g;
  result.byproduct = LocalClifford::identity(g.order());
  result.survivors.resize(g.order());
  std::iota(result.survivors.begin(), result.survivors.end(), Vertex{0});

  for (const auto& step : steps) {
    const auto it = std::find(result.survivors.begin(), result.survivors.end(), step.vertex);
    if (it == result.survivors.end()) {
      throw std::invalid_argument("measurement step on vertex " + std::to_string(step.vertex) +
                                  " which is out of range or already measured");
    }
    const Vertex idx = static_cast<Vertex>(it - result.survivors.begin());

    // P_{b,s} U = U P_{b',s'}: measure the pulled-back projector on |G>.
    const SignedAxis effective = conjugate_basis(result.byproduct[idx], step.basis, step.outcome);
    const MeasurementOutcome outcome = measure_pauli(result.graph, idx, effective.axis);
    const Probability p = outcome.probability(effective.sign);
    if (p.numerator == 0) {
      throw std::invalid_argument("measurement step on vertex " + std::to_string(step.vertex) +
                                  " requests an outcome of probability zero");
    }

    result.byproduct = clifford_compose(result.byproduct.without_site(idx), outcome.byproduct(effective.sign));
    result.graph = outcome.graph_after;
    result.survivors.erase(it);
    result.probability = result.probability * p;
    result.transcript.push_back(
        StepRecord{step, effective.axis, effective.sign, result.graph, result.byproduct, result.survivors});
  }
  return result;
}

std::string transcript_json(const SequenceResult& result) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& rec : result.transcript) {
    steps.push_back({
        {"vertex", rec.step.vertex},
        {"basis", std::string(1, axis_char(rec.step.basis))},
        {"outcome", rec.step.outcome == Sign::plus ? 1 : -1},
        {"effective_basis", std::string(1, axis_char(rec.effective_basis))},
        {"effective_outcome", rec.effective_sign == Sign::plus ? 1 : -1},
        {"graph6_after", to_graph6(rec.graph_after)},
        {"survivors", rec.survivors_after},
        {"byproduct", rec.byproduct_after.to_string()},
    });
  }
  return nlohmann::json{{"steps", steps}, {"probability", result.probability.to_string()}}.dump(2);
}

}  // namespace graphent
