#include "propcon/bounds.hpp"

#include <sstream>

#include "propcon/errors.hpp"

namespace propcon {

long long binomial2(long long a) { return a < 2 ? 0 : a * (a - 1) / 2; }

namespace {

std::string c2(long long a) {
  return "C(" + std::to_string(a) + ",2)";
}

// Shared body of the refined bridge bound and the two pc-size thresholds that
// instantiate it: C(n - m - reps*(delta+1), 2) + reps*C(delta+1,2) + tail.
BoundResult assemble(long long n, long long m, long long reps, long long delta, long long tail) {
  const long long head = n - m - reps * (delta + 1);
  BoundResult r;
  r.m_used = m;
  r.value = binomial2(head) + reps * binomial2(delta + 1) + tail;
  std::ostringstream f;
  f << c2(head);
  if (reps > 0) f << " + " << reps << "*" << c2(delta + 1);
  f << " + " << tail << " = " << r.value;
  r.formula = f.str();
  return r;
}

}  // namespace

BoundResult bridge_edge_bound_simple(int n, int t) {
  if (n < 1) throw ContractError("bridge_edge_bound_simple needs n >= 1");
  if (t < 0) throw ContractError("bridge_edge_bound_simple needs t >= 0");
  BoundResult r;
  r.m_used = t;
  r.value = binomial2(n - t) + t;
  r.formula = c2(n - t) + " + " + std::to_string(t) + " = " + std::to_string(r.value);
  return r;
}

BoundResult bridge_edge_bound(int n, int t, int delta) {
  if (n < 1) throw ContractError("bridge_edge_bound needs n >= 1");
  if (t < 0) throw ContractError("bridge_edge_bound needs t >= 0");
  if (delta < 1) throw ContractError("bridge_edge_bound needs delta >= 1");
  long long m;
  if (t == 0)
    m = 0;
  else if (delta == 1)
    m = t;
  else
    m = (t - 1) / (delta - 1);
  if (t > 0 && delta >= 2) {
    const long long head = n - m - (t - m) * (static_cast<long long>(delta) + 1);
    if (head < 0)
      throw InfeasibleError("bridge_edge_bound: n - m - (t-m)(delta+1) = " + std::to_string(head) +
                            " < 0 (n too small for t=" + std::to_string(t) +
                            ", delta=" + std::to_string(delta) + ")");
  }
  return assemble(n, m, t - m, delta, t);
}

BoundResult pc_size_threshold(const BoundQuery& q) {
  switch (q.variant) {
    case ThresholdVariant::g_nk: {
      if (q.k < 2) throw ContractError("g-nk threshold needs k >= 2");
      BoundResult r;
      r.m_used = 0;
      r.value = binomial2(q.n - q.k - 1) + q.k + 2;
      r.formula = c2(q.n - q.k - 1) + " + " + std::to_string(q.k + 2) + " = " + std::to_string(r.value);
      return r;
    }
    case ThresholdVariant::main_thm: {
      if (q.k < 3) throw ContractError("main threshold needs k >= 3");
      if (q.delta < 1) throw ContractError("main threshold needs delta >= 1");
      const long long m = q.delta == 1 ? q.k + 1 : q.k / (q.delta - 1);
      return assemble(q.n, m, q.k + 1 - m, q.delta, q.k + 2);
    }
    case ThresholdVariant::main_thm_abstract: {
      if (q.k < 3) throw ContractError("main threshold needs k >= 3");
      if (q.delta < 1) throw ContractError("main threshold needs delta >= 1");
      const long long m = q.delta == 1 ? q.t : q.k / (q.delta - 1);
      if (m > q.k + 1)
        throw InfeasibleError("abstract reading infeasible: m = t = " + std::to_string(m) + " exceeds k+1");
      if (m < 0) throw ContractError("abstract reading needs t >= 0");
      return assemble(q.n, m, q.k + 1 - m, q.delta, q.k + 2);
    }
    case ThresholdVariant::thm34: {
      if (q.n < 6) throw ContractError("thm34 threshold needs n >= 6");
      BoundResult r;
      r.m_used = 2;
      r.value = binomial2(q.n - 5) + 7;
      r.formula = c2(q.n - 5) + " + 7 = " + std::to_string(r.value);
      return r;
    }
    case ThresholdVariant::conjecture: {
      if (q.delta < 3) throw ContractError("conjecture threshold needs delta >= 3");
      const long long m = q.delta == 3 ? 1 : 0;
      return assemble(q.n, m, 3 - m, q.delta, 4);
    }
  }
  throw ContractError("unknown threshold variant");
}

long long erdos_gallai_min_edges(int c, int n) {
  if (c < 2) throw ContractError("erdos_gallai_min_edges needs c >= 2");
  if (n < 3) throw ContractError("erdos_gallai_min_edges needs n >= 3");
  return static_cast<long long>(c) * (n - 1) / 2 + 1;
}

WoodallBound woodall_min_edges(int n, int m) {
  if (n < 1) throw ContractError("woodall_min_edges needs n >= 1");
  if (m < 1) throw ContractError("woodall_min_edges needs m >= 1");
  WoodallBound w;
  w.t = (n - 1) / m;
  w.r = n - w.t * m;
  w.threshold = w.t * binomial2(m + 1) + binomial2(w.r);
  return w;
}

}  // namespace propcon
