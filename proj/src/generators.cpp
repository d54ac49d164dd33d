#include "tempoflow/generators.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "tempoflow/errors.hpp"

namespace tempoflow {

void require_valid(const CnfFormula& formula) {
  if (formula.variables < 1) throw PreconditionError("formula needs at least one variable");
  if (formula.clauses.empty()) throw PreconditionError("formula needs at least one clause");
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    for (const Literal& lit : formula.clauses[c]) {
      if (lit.variable < 1 || lit.variable > formula.variables) {
        throw PreconditionError("clause " + std::to_string(c + 1) + ": variable " + std::to_string(lit.variable) +
                                " out of range");
      }
    }
  }
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  std::optional<long> declared_clauses;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      long k = 0;
      long l = 0;
      if (declared_clauses || !(ls >> kind >> k >> l) || kind != "cnf" || k < 1 || l < 1) {
        throw PreconditionError("bad DIMACS header: " + line);
      }
      f.variables = static_cast<int>(k);
      declared_clauses = l;
      continue;
    }
    if (!declared_clauses) throw PreconditionError("DIMACS clause before header");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw PreconditionError("bad DIMACS literal: " + tok);
      }
      if (v != 0) {
        pending.push_back(v);
        continue;
      }
      if (pending.size() != 3) {
        throw PreconditionError("clause with " + std::to_string(pending.size()) + " literals (exactly 3 required)");
      }
      Clause c;
      for (int i = 0; i < 3; ++i) c[i] = Literal{std::abs(pending[i]), pending[i] < 0};
      f.clauses.push_back(c);
      pending.clear();
    }
  }
  if (!declared_clauses) throw PreconditionError("missing DIMACS header");
  if (!pending.empty()) throw PreconditionError("unterminated DIMACS clause");
  if (static_cast<long>(f.clauses.size()) != *declared_clauses) {
    throw PreconditionError("header declares " + std::to_string(*declared_clauses) + " clauses, found " +
                            std::to_string(f.clauses.size()));
  }
  require_valid(f);
  return f;
}

std::string to_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variables << ' ' << formula.clauses.size() << '\n';
  for (const Clause& c : formula.clauses) {
    for (const Literal& lit : c) out << (lit.negated ? -lit.variable : lit.variable) << ' ';
    out << "0\n";
  }
  return out.str();
}

bool satisfies(const CnfFormula& formula, std::uint64_t assignment) {
  for (const Clause& c : formula.clauses) {
    bool sat = false;
    for (const Literal& lit : c) {
      const bool value = (assignment >> (lit.variable - 1)) & 1U;
      if (value != lit.negated) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

// value: -1 unassigned, 0, 1.
bool dpll(const CnfFormula& f, std::vector<int>& value) {
  // unit propagation until fixpoint
  std::vector<int> trail;
  auto undo = [&] {
    for (int v : trail) value[v] = -1;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const Clause& c : f.clauses) {
      int unassigned = 0;
      const Literal* last = nullptr;
      bool sat = false;
      for (const Literal& lit : c) {
        const int v = value[lit.variable];
        if (v < 0) {
          ++unassigned;
          last = &lit;
        } else if ((v == 1) != lit.negated) {
          sat = true;
        }
      }
      if (sat) continue;
      if (unassigned == 0) {
        undo();
        return false;
      }
      if (unassigned == 1 || std::all_of(c.begin(), c.end(), [&](const Literal& l) {
            return value[l.variable] >= 0 || (l.variable == last->variable && l.negated == last->negated);
          })) {
        value[last->variable] = last->negated ? 0 : 1;
        trail.push_back(last->variable);
        changed = true;
      }
    }
  }
  const auto it = std::find(value.begin() + 1, value.end(), -1);
  if (it == value.end()) return true;
  const int v = static_cast<int>(it - value.begin());
  for (int choice : {0, 1}) {
    value[v] = choice;
    if (dpll(f, value)) return true;
  }
  value[v] = -1;
  undo();
  return false;
}

}  // namespace

std::optional<std::uint64_t> satisfying_assignment(const CnfFormula& formula) {
  require_valid(formula);
  if (formula.variables > 20) throw CapExceededError("satisfiability check limited to 20 variables");
  std::vector<int> value(formula.variables + 1, -1);
  if (!dpll(formula, value)) return std::nullopt;
  std::uint64_t a = 0;
  for (int v = 1; v <= formula.variables; ++v) {
    if (value[v] == 1) a |= std::uint64_t{1} << (v - 1);
  }
  return a;
}

PartitionInstance make_partition(std::vector<std::int64_t> a) {
  if (a.empty()) throw PreconditionError("partition instance needs at least one integer");
  std::int64_t sum = 0;
  for (auto x : a) {
    if (x < 1) throw PreconditionError("partition integers must be >= 1");
    sum += x;
  }
  if (sum % 2 != 0) throw PreconditionError("partition sum " + std::to_string(sum) + " is odd");
  return {std::move(a), sum / 2};
}

PartitionInstance parse_partition(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::int64_t> a;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      a.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw PreconditionError("bad partition integer: " + tok);
    }
  }
  return make_partition(std::move(a));
}

bool has_partition(const PartitionInstance& p) {
  std::vector<char> reach(p.L + 1, 0);
  reach[0] = 1;
  for (auto x : p.a) {
    for (std::int64_t s = p.L; s >= x; --s) reach[s] = reach[s] || reach[s - x];
  }
  return reach[p.L];
}

// ---------------------------------------------------------------------------

namespace {

const Capacity kInf = Capacity::infinite();

Time require_integral(const Rational& q, const std::string& what) {
  if (q.get_den() != 1 || q <= 0) throw PreconditionError(what + " must be a positive integer (is " + to_string(q) + ")");
  if (!q.get_num().fits_slong_p()) throw PreconditionError(what + " too large");
  return q.get_num().get_si();
}

BigInt power(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void require_delta(const Rational& delta) {
  if (delta <= 0 || delta >= 1) throw PreconditionError("delta must lie in (0, 1)");
}

}  // namespace

UndirectedNetwork gen_fig1(Time T) {
  if (T < 2) throw PreconditionError("fig1 needs T >= 2");
  UndirectedBuilder b;
  const NodeId s1 = b.add_node("s1", 1);
  const NodeId s2 = b.add_node("s2", 1);
  const NodeId i = b.add_node("i");
  const NodeId j = b.add_node("j");
  const NodeId t = b.add_node("t", -2);
  const Capacity slow(Rational(1, T));
  b.add_edge(s1, i, Capacity(1), 0);
  b.add_edge(s2, j, slow, 0);
  b.add_edge(j, i, Capacity(1), 0);
  b.add_edge(j, t, Capacity(1), T - 1);
  b.add_edge(t, i, slow, 0);
  b.set_horizon(T);
  return b.build();
}

UndirectedNetwork gen_flow_price_lb(Time T, const Rational& delta, Time eps) {
  require_delta(delta);
  if (T < 1) throw PreconditionError("T must be >= 1");
  const Time dT = require_integral(delta * T, "delta*T");
  const Time rT = require_integral((1 - delta) * T, "(1-delta)*T");
  if (eps < 1 || eps > dT) throw PreconditionError("eps must be an integer in [1, delta*T]");
  UndirectedBuilder b;
  const NodeId s1 = b.add_node("s1", 1);
  const NodeId s2 = b.add_node("s2", 1);
  const NodeId s3 = b.add_node("s3", 1);
  const NodeId t1 = b.add_node("t1", -1);
  const NodeId t2 = b.add_node("t2", -1);
  const NodeId t3 = b.add_node("t3", -1);
  const NodeId v1 = b.add_node("v1");
  const NodeId v2 = b.add_node("v2");
  const NodeId v3 = b.add_node("v3");
  const NodeId v4 = b.add_node("v4");
  const Capacity slow(Rational(1, T));
  b.add_edge(s3, v2, slow, 0);
  b.add_edge(s2, v1, kInf, 0);
  b.add_edge(v1, v2, kInf, 0);
  b.add_edge(v2, v4, kInf, rT);
  b.add_edge(v1, v4, slow, 0);
  b.add_edge(s1, v3, kInf, T);
  b.add_edge(v3, v4, kInf, 0);
  b.add_edge(v4, t3, kInf, 0);
  b.add_edge(v3, t2, kInf, dT);
  b.add_edge(v3, t1, slow, 0);
  b.set_horizon(T + eps);
  return b.build();
}

UndirectedNetwork gen_single_sink_lb(Time T, const Rational& delta) {
  require_delta(delta);
  if (T < 1) throw PreconditionError("T must be >= 1");
  require_integral(delta * T, "delta*T");
  const Time rT = require_integral((1 - delta) * T, "(1-delta)*T");
  UndirectedBuilder b;
  const NodeId s2 = b.add_node("s2", 1);
  const NodeId s3 = b.add_node("s3", 1);
  const NodeId v1 = b.add_node("v1");
  const NodeId v2 = b.add_node("v2");
  const NodeId v4 = b.add_node("v4", -2);
  const Capacity slow(Rational(1, T));
  b.add_edge(s3, v2, slow, 0);
  b.add_edge(s2, v1, kInf, 0);
  b.add_edge(v1, v2, kInf, 0);
  b.add_edge(v2, v4, kInf, rT);
  b.add_edge(v1, v4, slow, 0);
  b.set_horizon(T);
  return b.build();
}

UndirectedNetwork gen_single_source_lb(Time T, const Rational& delta) {
  require_delta(delta);
  if (T < 1) throw PreconditionError("T must be >= 1");
  require_integral(delta * T, "delta*T");
  const Time rT = require_integral((1 - delta) * T, "(1-delta)*T");
  UndirectedBuilder b;
  // Supply 2 so that the two unit demands balance.
  const NodeId s = b.add_node("s", 2);
  const NodeId v1 = b.add_node("v1");
  const NodeId v2 = b.add_node("v2");
  const NodeId v3 = b.add_node("v3", -1);
  const NodeId v4 = b.add_node("v4", -1);
  const Capacity slow(Rational(1, T));
  b.add_edge(s, v2, slow, 0);
  b.add_edge(s, v1, kInf, 0);
  b.add_edge(v1, v2, kInf, 0);
  b.add_edge(v2, v4, kInf, rT);
  b.add_edge(v1, v3, slow, 0);
  b.set_horizon(T);
  return b.build();
}

namespace {

void require_kT(int k, Time T) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (T < 1) throw PreconditionError("T must be >= 1");
}

// Chain v_0..v_k with blocks i = 1..k-1 hanging off v_i via w_i.
// tree: no super sink, demand sits at t_i.
UndirectedNetwork time_price_sinks(int k, Time T, bool tree) {
  require_kT(k, T);
  const BigInt nT = BigInt(4 * k + 1) * T;
  UndirectedBuilder b;
  std::vector<NodeId> v(k + 1), w(k + 1), s(k), t(k + 1);
  s[0] = b.add_node("s0", Rational(1));
  for (int i = 0; i <= k; ++i) v[i] = b.add_node("v" + std::to_string(i));
  for (int i = 1; i < k; ++i) {
    w[i] = b.add_node("w" + std::to_string(i));
    s[i] = b.add_node("s" + std::to_string(i), Rational(power(nT, i)));
  }
  for (int i = 1; i <= k; ++i) {
    t[i] = b.add_node("t" + std::to_string(i), tree ? Rational(-power(nT, i - 1)) : Rational(0));
  }
  std::optional<NodeId> sink;
  if (!tree) {
    BigInt total = 0;
    for (int i = 0; i < k; ++i) total += power(nT, i);
    sink = b.add_node("t", Rational(-total));
  }
  b.add_edge(s[0], v[0], kInf, 0);
  for (int i = 1; i <= k; ++i) b.add_edge(v[i - 1], v[i], kInf, T);
  for (int i = 1; i < k; ++i) {
    b.add_edge(s[i], w[i], kInf, 0);
    b.add_edge(w[i], v[i], kInf, 0);
    b.add_edge(w[i], t[i], Capacity(Rational(power(nT, i - 1))), 0);
  }
  b.add_edge(v[k], t[k], Capacity(Rational(power(nT, k - 1))), 0);
  if (sink) {
    for (int i = 1; i <= k; ++i) b.add_edge(t[i], *sink, kInf, 0);
  }
  return b.build();
}

}  // namespace

UndirectedNetwork gen_time_price_single_sink(int k, Time T) { return time_price_sinks(k, T, false); }

UndirectedNetwork gen_time_price_tree(int k, Time T) { return time_price_sinks(k, T, true); }

UndirectedNetwork gen_time_price_single_source(int k, Time T) {
  require_kT(k, T);
  const BigInt nT = BigInt(4 * k + 1) * T;
  UndirectedBuilder b;
  BigInt total = 0;
  for (int i = 0; i < k; ++i) total += power(nT, i);
  const NodeId src = b.add_node("s", Rational(total));
  std::vector<NodeId> v(k + 1), w(k + 1), s(k), t(k + 1);
  s[0] = b.add_node("s0");
  for (int i = 0; i <= k; ++i) v[i] = b.add_node("v" + std::to_string(i));
  for (int j = 1; j < k; ++j) {
    w[j] = b.add_node("w" + std::to_string(j));
    s[j] = b.add_node("s" + std::to_string(j));
  }
  for (int j = 1; j <= k; ++j) t[j] = b.add_node("t" + std::to_string(j), Rational(-power(nT, k - j)));
  b.add_edge(src, s[0], kInf, 0);
  b.add_edge(s[0], v[0], Capacity(Rational(power(nT, k - 1))), 0);
  for (int i = 1; i <= k; ++i) b.add_edge(v[i - 1], v[i], kInf, T);
  for (int j = 1; j < k; ++j) {
    b.add_edge(src, s[j], kInf, 0);
    b.add_edge(s[j], w[j], Capacity(Rational(power(nT, k - 1 - j))), 0);
    b.add_edge(w[j], v[j], kInf, 0);
    b.add_edge(w[j], t[j], kInf, 0);
  }
  b.add_edge(v[k], t[k], kInf, 0);
  return b.build();
}

UndirectedNetwork gen_unit_capacity_tree(int k, Time T) {
  require_kT(k, T);
  UndirectedBuilder b;
  const Capacity one(1);
  std::vector<NodeId> chain(k + 1);
  chain[0] = b.add_node("s1", 1);
  for (int i = 1; i < k; ++i) {
    chain[i] = b.add_node("a" + std::to_string(i));
    const NodeId bi = b.add_node("b" + std::to_string(i));
    const NodeId ti = b.add_node("t" + std::to_string(i), -1);
    const NodeId si = b.add_node("s" + std::to_string(i + 1), 1);
    b.add_edge(chain[i], bi, one, 0);
    b.add_edge(bi, ti, one, 0);
    b.add_edge(si, bi, one, 0);
  }
  chain[k] = b.add_node("t" + std::to_string(k), -1);
  for (int i = 1; i <= k; ++i) b.add_edge(chain[i - 1], chain[i], one, T);
  return b.build();
}

UndirectedNetwork gen_eaf(const Rational& U, Time T) {
  if (U < 1) throw PreconditionError("U must be >= 1");
  if (T < 2 || T % 2 != 0) throw PreconditionError("T must be even and >= 2");
  UndirectedBuilder b;
  const NodeId s = b.add_node("s", U);
  const NodeId v1 = b.add_node("v1");
  const NodeId v2 = b.add_node("v2");
  const NodeId t = b.add_node("t", Rational(-U));
  const Capacity big(U);
  b.add_edge(s, v2, big, T / 2);
  b.add_edge(s, v1, Capacity(1), 1);
  b.add_edge(v1, v2, big, 0);
  b.add_edge(v2, t, Capacity(1), 1);
  b.add_edge(v1, t, big, T / 2);
  return b.build();
}

}  // namespace tempoflow
