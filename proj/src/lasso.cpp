#include "logion/lasso.hpp"

#include <stdexcept>
#include <unordered_map>

namespace logion {

std::size_t LassoTrace::fold(std::size_t position) const noexcept {
  if (position < length()) return position;
  return prefix.size() + (position - prefix.size()) % loop.size();
}

const State& LassoTrace::state(std::size_t position) const {
  auto p = fold(position);
  return p < prefix.size() ? prefix[p] : loop.at(p - prefix.size());
}

namespace {

// Evaluates every subformula at every distinct lasso position. Fixpoint
// operators are solved by sweeping backwards from the pessimistic (least
// fixpoint) or optimistic (greatest fixpoint) initial assignment.
class LassoEvaluator {
public:
  explicit LassoEvaluator(const LassoTrace& trace) : trace_(trace), n_(trace.length()) {}

  const std::vector<char>& values(const Formula& f) {
    if (auto it = memo_.find(f.identity()); it != memo_.end()) return it->second;
    std::vector<char> out(n_);
    switch (f.op()) {
    case Op::True:
    case Op::False:
      std::fill(out.begin(), out.end(), f.op() == Op::True);
      break;
    case Op::Var:
      for (std::size_t i = 0; i < n_; ++i) out[i] = trace_.state(i).contains(f.name());
      break;
    case Op::Not: {
      const auto& a = values(f.lhs());
      for (std::size_t i = 0; i < n_; ++i) out[i] = !a[i];
      break;
    }
    case Op::Next: {
      const auto& a = values(f.lhs());
      for (std::size_t i = 0; i < n_; ++i) out[i] = a[succ(i)];
      break;
    }
    case Op::And:
    case Op::Or:
    case Op::Implies: {
      const auto& a = values(f.lhs());
      const auto& b = values(f.rhs());
      for (std::size_t i = 0; i < n_; ++i) {
        if (f.op() == Op::And) out[i] = a[i] && b[i];
        else if (f.op() == Op::Or) out[i] = a[i] || b[i];
        else out[i] = !a[i] || b[i];
      }
      break;
    }
    case Op::Eventually: {
      const auto& a = values(f.lhs());
      solve(out, false, [&](std::size_t i, bool later) { return a[i] || later; });
      break;
    }
    case Op::Always: {
      const auto& a = values(f.lhs());
      solve(out, true, [&](std::size_t i, bool later) { return a[i] && later; });
      break;
    }
    case Op::Until: {
      const auto& a = values(f.lhs());
      const auto& b = values(f.rhs());
      solve(out, false, [&](std::size_t i, bool later) { return b[i] || (a[i] && later); });
      break;
    }
    case Op::WeakUntil: {
      const auto& a = values(f.lhs());
      const auto& b = values(f.rhs());
      solve(out, true, [&](std::size_t i, bool later) { return b[i] || (a[i] && later); });
      break;
    }
    case Op::Release: {
      const auto& a = values(f.lhs());
      const auto& b = values(f.rhs());
      solve(out, true, [&](std::size_t i, bool later) { return b[i] && (a[i] || later); });
      break;
    }
    }
    return memo_.emplace(f.identity(), std::move(out)).first->second;
  }

private:
  std::size_t succ(std::size_t i) const { return i + 1 < n_ ? i + 1 : trace_.period_start(); }

  template <typename Step>
  void solve(std::vector<char>& out, bool initial, Step step) {
    std::fill(out.begin(), out.end(), initial);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = n_; i-- > trace_.period_start();) {
        char v = step(i, out[succ(i)]);
        if (v != out[i]) {
          out[i] = v;
          changed = true;
        }
      }
    }
    for (std::size_t i = trace_.period_start(); i-- > 0;) out[i] = step(i, out[i + 1]);
  }

  const LassoTrace& trace_;
  std::size_t n_;
  std::unordered_map<const void*, std::vector<char>> memo_;
};

}  // namespace

bool eval_on_lasso(const Formula& f, const LassoTrace& trace, std::size_t position) {
  if (trace.loop.empty()) throw std::invalid_argument("lasso loop must not be empty");
  LassoEvaluator evaluator(trace);
  return evaluator.values(f)[trace.fold(position)];
}

}  // namespace logion
