#include "arrange/symplectic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace arrange {

namespace {

using Fn = std::function<double(double, double)>;

// Recursive-descent parser for the closed-form strand language:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-') factor | power
//   power  := atom ('^' factor)?
//   atom   := number | 'r' | 't' | '(' expr ')' | name '(' expr ')'
struct Parser {
  const std::string& s;
  size_t p = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ExpressionError(msg + " at position " + std::to_string(p) + " of \"" +
                          s + "\"");
  }
  void skip() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    skip();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }

  Fn parse() {
    Fn e = expr();
    skip();
    if (p != s.size()) fail("unexpected trailing text");
    return e;
  }

  Fn expr() {
    Fn a = term();
    for (;;) {
      if (eat('+')) {
        Fn b = term();
        a = [a, b](double r, double t) { return a(r, t) + b(r, t); };
      } else if (eat('-')) {
        Fn b = term();
        a = [a, b](double r, double t) { return a(r, t) - b(r, t); };
      } else {
        return a;
      }
    }
  }

  Fn term() {
    Fn a = factor();
    for (;;) {
      if (eat('*')) {
        Fn b = factor();
        a = [a, b](double r, double t) { return a(r, t) * b(r, t); };
      } else if (eat('/')) {
        Fn b = factor();
        a = [a, b](double r, double t) { return a(r, t) / b(r, t); };
      } else {
        return a;
      }
    }
  }

  Fn factor() {
    if (eat('-')) {
      Fn a = factor();
      return [a](double r, double t) { return -a(r, t); };
    }
    if (eat('+')) return factor();
    return power();
  }

  Fn power() {
    Fn a = atom();
    if (eat('^')) {
      Fn b = factor();
      return [a, b](double r, double t) { return std::pow(a(r, t), b(r, t)); };
    }
    return a;
  }

  Fn atom() {
    skip();
    if (p >= s.size()) fail("unexpected end of expression");
    char c = s[p];
    if (c == '(') {
      ++p;
      Fn e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const char* begin = s.c_str() + p;
      char* end = nullptr;
      double v = std::strtod(begin, &end);
      if (end == begin) fail("bad number");
      p += static_cast<size_t>(end - begin);
      return [v](double, double) { return v; };
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = p;
      while (p < s.size() && std::isalpha(static_cast<unsigned char>(s[p])))
        ++p;
      std::string name = s.substr(start, p - start);
      if (name == "r") return [](double r, double) { return r; };
      if (name == "t") return [](double, double t) { return t; };
      if (!eat('(')) fail("expected '(' after \"" + name + "\"");
      Fn e = expr();
      if (!eat(')')) fail("missing ')'");
      double (*f)(double) = nullptr;
      if (name == "tanh") f = std::tanh;
      else if (name == "sin") f = std::sin;
      else if (name == "cos") f = std::cos;
      else if (name == "exp") f = std::exp;
      else if (name == "abs") f = std::fabs;
      else if (name == "sqrt") f = std::sqrt;
      else fail("unknown function \"" + name + "\"");
      return [f, e](double r, double t) { return f(e(r, t)); };
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

// 4th-order central difference weights on offsets -2..2.
double stencil1(const std::function<double(int)>& f, double h) {
  return (-f(2) + 8 * f(1) - 8 * f(-1) + f(-2)) / (12 * h);
}
double stencil2(const std::function<double(int)>& f, double h) {
  return (-f(2) + 16 * f(1) - 30 * f(0) + 16 * f(-1) - f(-2)) / (12 * h * h);
}

}  // namespace

StrandFunction StrandFunction::closed_form(
    std::function<double(double, double)> q, double t_lo, double t_hi) {
  if (!q) throw DomainError("strand function must be callable");
  if (!(t_lo < t_hi)) throw DomainError("empty t interval");
  StrandFunction s;
  s.q_ = std::move(q);
  s.tlo_ = t_lo;
  s.thi_ = t_hi;
  s.ht_ = 1.0 / 512;
  return s;
}

StrandFunction StrandFunction::from_expression(const std::string& text,
                                               double t_lo, double t_hi) {
  Parser parser{text};
  Fn f = parser.parse();
  return closed_form([f](double r, double t) { return f(r, t); }, t_lo, t_hi);
}

StrandFunction StrandFunction::from_samples(
    const std::vector<double>& r_nodes, const std::vector<double>& t_nodes,
    const std::vector<std::vector<double>>& q) {
  const int nr = static_cast<int>(r_nodes.size());
  const int nt = static_cast<int>(t_nodes.size());
  if (nr < 2 || nt < 2)
    throw DomainError("need at least two sample nodes in each direction");
  auto check_axis = [](const std::vector<double>& nodes, const char* name) {
    double h = nodes[1] - nodes[0];
    if (!(h > 0)) throw DomainError(std::string(name) + " nodes must ascend");
    for (size_t i = 1; i + 1 < nodes.size(); ++i)
      if (std::fabs(nodes[i + 1] - nodes[i] - h) >
          1e-9 * std::max(1.0, std::fabs(h)))
        throw DomainError(std::string(name) + " nodes must be evenly spaced");
    return h;
  };
  double hr = check_axis(r_nodes, "r");
  double ht = check_axis(t_nodes, "t");
  if (r_nodes.front() < 0 || r_nodes.back() > 1 + 1e-12)
    throw DomainError(
        "r nodes must lie in [0, 1]; the even extension covers r < 0");
  if (static_cast<int>(q.size()) != nr)
    throw DomainError("sample matrix must have one row per r node");
  for (const auto& row : q)
    if (static_cast<int>(row.size()) != nt)
      throw DomainError("sample matrix must have one column per t node");
  for (const auto& row : q)
    for (double v : row)
      if (!std::isfinite(v)) throw DomainError("samples must be finite");

  StrandFunction s;
  s.rn_ = r_nodes;
  s.tn_ = t_nodes;
  s.val_ = q;
  s.tlo_ = t_nodes.front();
  s.thi_ = t_nodes.back();
  s.hr_ = hr;
  s.ht_ = ht;

  // Index maps for the lattice stencils: reflect across r = 0 when the
  // lattice starts there (the strand is even), clamp at every other edge.
  const bool reflect = std::fabs(r_nodes.front()) < 1e-12;
  auto ri = [&](int i) {
    if (i < 0) i = reflect ? -i : 0;
    return std::min(i, nr - 1);
  };
  auto ti = [&](int j) { return std::clamp(j, 0, nt - 1); };

  auto grid = [&](auto&& get) {
    std::vector<std::vector<double>> out(nr, std::vector<double>(nt));
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nt; ++j) out[i][j] = get(i, j);
    return out;
  };
  s.fdt_ = grid([&](int i, int j) {
    return stencil1([&](int o) { return s.val_[i][ti(j + o)]; }, ht);
  });
  s.fdtt_ = grid([&](int i, int j) {
    return stencil2([&](int o) { return s.val_[i][ti(j + o)]; }, ht);
  });
  s.fdr_ = grid([&](int i, int j) {
    return stencil1([&](int o) { return s.val_[ri(i + o)][j]; }, hr);
  });
  s.fdtr_ = grid([&](int i, int j) {
    return stencil1([&](int o) { return s.fdt_[ri(i + o)][j]; }, hr);
  });
  return s;
}

StrandFunction StrandFunction::from_csv(const std::string& csv) {
  std::map<double, std::map<double, double>> rows;  // r -> t -> q
  std::istringstream in(csv);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    double r, t, q;
    int used = 0;
    if (std::sscanf(line.c_str(), " %lf , %lf , %lf %n", &r, &t, &q, &used) !=
            3 ||
        line.find_first_not_of(" \t\r", used) != std::string::npos)
      throw DomainError("bad CSV line " + std::to_string(lineno) + ": \"" +
                        line + "\"");
    if (!rows[r].emplace(t, q).second)
      throw DomainError("duplicate sample at line " + std::to_string(lineno));
  }
  if (rows.empty()) throw DomainError("CSV contains no samples");
  std::vector<double> r_nodes, t_nodes;
  for (const auto& [r, row] : rows) r_nodes.push_back(r);
  for (const auto& [t, q] : rows.begin()->second) t_nodes.push_back(t);
  std::vector<std::vector<double>> q(r_nodes.size());
  size_t i = 0;
  for (const auto& [r, row] : rows) {
    if (row.size() != t_nodes.size())
      throw DomainError("CSV rows do not form a full lattice");
    for (const auto& [t, v] : row) {
      if (t != t_nodes[q[i].size()])
        throw DomainError("CSV rows do not share the same t nodes");
      q[i].push_back(v);
    }
    ++i;
  }
  return from_samples(r_nodes, t_nodes, q);
}

void StrandFunction::set_steps(double hr, double ht) {
  if (!(hr > 0) || !(ht > 0)) throw DomainError("difference steps must be positive");
  if (!q_) return;  // sampled strands stay tied to their lattice
  hr_ = hr;
  ht_ = ht;
}

void StrandFunction::check_domain(double r, double t) const {
  if (!(std::fabs(r) <= 1 + 1e-12))
    throw DomainError("r = " + std::to_string(r) + " outside [-1, 1]");
  if (!(t >= tlo_ - 1e-12 && t <= thi_ + 1e-12))
    throw DomainError("t = " + std::to_string(t) + " outside [" +
                      std::to_string(tlo_) + ", " + std::to_string(thi_) + "]");
}

double StrandFunction::raw(double r, double t) const {
  return q_(std::fabs(r), t);
}

double StrandFunction::interp(const std::vector<std::vector<double>>& f,
                              double r, double t) const {
  r = std::fabs(r);
  const int nr = static_cast<int>(rn_.size());
  const int nt = static_cast<int>(tn_.size());
  double x = std::clamp((r - rn_.front()) / hr_, 0.0, nr - 1.0);
  double y = std::clamp((t - tn_.front()) / ht_, 0.0, nt - 1.0);
  int i = std::min(static_cast<int>(x), nr - 2);
  int j = std::min(static_cast<int>(y), nt - 2);
  double a = x - i, b = y - j;
  return (1 - a) * ((1 - b) * f[i][j] + b * f[i][j + 1]) +
         a * ((1 - b) * f[i + 1][j] + b * f[i + 1][j + 1]);
}

double StrandFunction::value(double r, double t) const {
  check_domain(r, t);
  return q_ ? raw(r, t) : interp(val_, r, t);
}

double StrandFunction::dt(double r, double t) const {
  check_domain(r, t);
  if (!q_) return interp(fdt_, r, t);
  return stencil1([&](int o) { return raw(r, t + o * ht_); }, ht_);
}

double StrandFunction::dr(double r, double t) const {
  check_domain(r, t);
  if (!q_) return interp(fdr_, r, t);
  // Partial in the first argument of q at |r| (not the signed derivative of
  // the even extension), matching the sampled-lattice fields.
  const double rho = std::fabs(r);
  return stencil1([&](int o) { return raw(rho + o * hr_, t); }, hr_);
}

double StrandFunction::dtt(double r, double t) const {
  check_domain(r, t);
  if (!q_) return interp(fdtt_, r, t);
  return stencil2([&](int o) { return raw(r, t + o * ht_); }, ht_);
}

double StrandFunction::dtr(double r, double t) const {
  check_domain(r, t);
  if (!q_) return interp(fdtr_, r, t);
  const double rho = std::fabs(r);
  return stencil1(
      [&](int o) {
        double rr = rho + o * hr_;
        return stencil1([&](int u) { return raw(rr, t + u * ht_); }, ht_);
      },
      hr_);
}

double area_form_value(const StrandFunction& s, double r, double t,
                       double epsilon) {
  if (!(epsilon > 0)) throw DomainError("stretch factor must be positive");
  const double qt = s.dt(r, t);
  const double qr = s.dr(r, t);
  const double qtt = s.dtt(r, t);
  const double qtr = s.dtr(r, t);
  const double u = epsilon * qt;
  const double base = 1 + u * u;
  const double bracket =
      base * base +
      r * (-epsilon * epsilon * qr * qtt + epsilon * qtr * u * u * (u - 1));
  const double v = std::pow(base, -1.5) * bracket;
  if (!std::isfinite(v))
    throw DomainError("area form is not finite at r = " + std::to_string(r) +
                      ", t = " + std::to_string(t));
  return v;
}

namespace {

struct GridMin {
  double value = std::numeric_limits<double>::infinity();
  long long index = -1;
};

// Minimum of the area form over the grid, with the arg-min at the smallest
// linear index; identical for every worker count.
GridMin grid_minimum(const StrandFunction& s, const GridSpec& grid,
                     double epsilon, int threads) {
  const int nr = grid.nr, nt = grid.nt;
  auto sample = [&](int i, int j) {
    double r = -1 + 2.0 * i / (nr - 1);
    double t = s.t_lo() + (s.t_hi() - s.t_lo()) * j / (nt - 1);
    return area_form_value(s, r, t, epsilon);
  };
  auto scan_rows = [&](int i0, int i1, GridMin& out,
                       std::exception_ptr& error) {
    try {
      for (int i = i0; i < i1; ++i)
        for (int j = 0; j < nt; ++j) {
          double v = sample(i, j);
          if (v < out.value) {
            out.value = v;
            out.index = static_cast<long long>(i) * nt + j;
          }
        }
    } catch (...) {
      error = std::current_exception();
    }
  };

  const int workers = std::max(1, std::min(threads, nr));
  std::vector<GridMin> part(workers);
  std::vector<std::exception_ptr> errors(workers);
  if (workers == 1) {
    scan_rows(0, nr, part[0], errors[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(scan_rows, w * nr / workers, (w + 1) * nr / workers,
                        std::ref(part[w]), std::ref(errors[w]));
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  GridMin best;
  for (const GridMin& g : part)
    if (g.index >= 0 && g.value < best.value) best = g;
  return best;
}

}  // namespace

EpsilonReport find_epsilon_report(const std::vector<StrandFunction>& strands,
                                  const GridSpec& grid, double delta,
                                  int threads) {
  if (strands.empty()) throw DomainError("need at least one strand");
  if (grid.nr < 2 || grid.nt < 2)
    throw DomainError("grid needs at least two samples per direction");
  if (!(delta > 0)) throw DomainError("positivity margin must be positive");
  const double floor = std::ldexp(1.0, -40);
  EpsilonReport report;
  report.epsilon = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < strands.size(); ++k) {
    const StrandFunction& s = strands[k];
    bool accepted = false;
    for (double eps = 1.0; eps >= floor; eps *= 0.5) {
      GridMin m = grid_minimum(s, grid, eps, threads);
      if (m.value > delta) {
        StrandEpsilon se;
        se.epsilon = eps;
        se.min_value = m.value;
        se.argmin_r = -1 + 2.0 * (m.index / grid.nt) / (grid.nr - 1);
        se.argmin_t = s.t_lo() +
                      (s.t_hi() - s.t_lo()) * (m.index % grid.nt) / (grid.nt - 1);
        report.strands.push_back(se);
        report.epsilon = std::min(report.epsilon, eps);
        accepted = true;
        break;
      }
    }
    if (!accepted)
      throw NoEpsilonFound("strand " + std::to_string(k) +
                           ": the stretch schedule reached 2^-40 without grid "
                           "positivity; the sampled data looks pathological");
  }
  return report;
}

double find_epsilon(const std::vector<StrandFunction>& strands,
                    const GridSpec& grid, double delta, int threads) {
  return find_epsilon_report(strands, grid, delta, threads).epsilon;
}

}  // namespace arrange
