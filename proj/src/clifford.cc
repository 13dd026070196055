// Copyright 2026 The qembench Authors
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

#include "qembench/clifford.h"

#include <array>
#include <deque>
#include <stdexcept>
#include <string>

#include "qembench/errors.h"

namespace qembench {
namespace {

constexpr std::array<GateKind, 8> kOneQubitGenerators = {
    GateKind::kH, GateKind::kS,     GateKind::kSdg,   GateKind::kX,
    GateKind::kY, GateKind::kZ,     GateKind::kSqrtX, GateKind::kSqrtXdg,
};

std::vector<Gate> on_qubit(const std::vector<Gate>& fragment, Qubit q) {
  std::vector<Gate> out = fragment;
  for (auto& g : out) g.q0 = q;
  return out;
}

void extend(std::vector<Gate>& out, const std::vector<Gate>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

Tableau fragment_tableau(std::size_t n_qubits, const std::vector<Gate>& fragment) {
  Tableau t(n_qubits);
  for (const auto& g : fragment) t.apply(g);
  return t;
}

std::vector<Gate> relabel(const std::vector<Gate>& fragment, const std::vector<Qubit>& map) {
  std::vector<Gate> out = fragment;
  for (auto& g : out) {
    g.q0 = map.at(g.q0);
    if (g.arity() == 2) g.q1 = map.at(g.q1);
  }
  return out;
}

CliffordGroup::CliffordGroup(std::size_t n_qubits) : n_(n_qubits) {
  if (n_qubits == 1) {
    // Breadth-first search gives a shortest word for each element.
    std::deque<std::vector<Gate>> frontier{{}};
    while (!frontier.empty()) {
      std::vector<Gate> word = std::move(frontier.front());
      frontier.pop_front();
      const std::uint64_t key = fragment_tableau(1, word).key();
      if (by_key_.count(key)) continue;
      add(word);
      for (GateKind kind : kOneQubitGenerators) {
        auto next = word;
        next.push_back(Gate::one(kind, 0));
        frontier.push_back(std::move(next));
      }
    }
  } else {
    const CliffordGroup& c1 = one_qubit();
    // V: the order-3 element cycling X -> Y -> Z -> X.
    std::size_t v = c1.size();
    for (std::size_t i = 0; i < c1.size(); ++i) {
      const Tableau t = fragment_tableau(1, c1.element(i).fragment);
      // Row 0 is the image of X, row 1 the image of Z.
      if (t.row_x(0) == 1 && t.row_z(0) == 1 && !t.row_sign(0) && t.row_x(1) == 1 &&
          t.row_z(1) == 0 && !t.row_sign(1)) {
        v = i;
        break;
      }
    }
    if (v == c1.size()) throw std::logic_error("no order-3 one-qubit Clifford found");
    const std::vector<Gate>& vw = c1.element(v).fragment;
    std::vector<Gate> v2 = vw;
    extend(v2, vw);
    const std::array<std::vector<Gate>, 3> s_words = {std::vector<Gate>{}, vw, v2};

    const Gate cx = Gate::two(GateKind::kCNOT, 0, 1);
    const Gate xc = Gate::two(GateKind::kCNOT, 1, 0);
    const std::array<std::vector<Gate>, 4> cores = {
        std::vector<Gate>{}, std::vector<Gate>{cx}, std::vector<Gate>{cx, xc},
        std::vector<Gate>{cx, xc, cx}};

    for (std::size_t core = 0; core < cores.size(); ++core) {
      const bool with_s = (core == 1 || core == 2);
      const std::size_t s_count = with_s ? 3 : 1;
      for (std::size_t s1 = 0; s1 < s_count; ++s1) {
        for (std::size_t s2 = 0; s2 < s_count; ++s2) {
          for (std::size_t a = 0; a < c1.size(); ++a) {
            for (std::size_t b = 0; b < c1.size(); ++b) {
              std::vector<Gate> word;
              extend(word, on_qubit(s_words[s1], 0));
              extend(word, on_qubit(s_words[s2], 1));
              extend(word, cores[core]);
              extend(word, on_qubit(c1.element(a).fragment, 0));
              extend(word, on_qubit(c1.element(b).fragment, 1));
              const std::uint64_t key = fragment_tableau(2, word).key();
              if (by_key_.count(key)) {
                throw std::logic_error("two-qubit Clifford decomposition is not injective");
              }
              add(std::move(word));
            }
          }
        }
      }
    }
    if (elements_.size() != 11520) throw std::logic_error("two-qubit Clifford table incomplete");
  }
  finish();
}

void CliffordGroup::add(std::vector<Gate> fragment) {
  const std::uint64_t key = fragment_tableau(n_, fragment).key();
  const std::size_t index = elements_.size();
  by_key_.emplace(key, index);
  elements_.push_back(CliffordElement{n_, index, std::move(fragment)});
}

void CliffordGroup::finish() {
  inverses_.resize(elements_.size());
  for (const auto& e : elements_) {
    std::vector<Gate> inv;
    for (auto it = e.fragment.rbegin(); it != e.fragment.rend(); ++it) inv.push_back(inverse(*it));
    inverses_[e.index] = index_of(fragment_tableau(n_, inv));
  }
}

std::size_t CliffordGroup::index_of(const Tableau& t) const {
  auto it = by_key_.find(t.key());
  if (it == by_key_.end()) throw std::logic_error("tableau is not in the Clifford table");
  return it->second;
}

CliffordElement CliffordGroup::sample(Rng& rng) const {
  return elements_[rng.below(elements_.size())];
}

const CliffordGroup& CliffordGroup::one_qubit() {
  static const CliffordGroup group(1);
  return group;
}

const CliffordGroup& CliffordGroup::two_qubit() {
  static const CliffordGroup group(2);
  return group;
}

const CliffordGroup& CliffordGroup::of_width(std::size_t n_qubits) {
  if (n_qubits == 1) return one_qubit();
  if (n_qubits == 2) return two_qubit();
  throw Error(ErrorCode::kUnsupportedWidth,
              "Clifford sampling supports 1 or 2 qubits, got " + std::to_string(n_qubits));
}

CliffordElement sample_clifford(std::size_t n_qubits, Rng& rng) {
  return CliffordGroup::of_width(n_qubits).sample(rng);
}

}  // namespace qembench
