#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrange {

// A query outside the strand's domain, a non-positive stretch factor, or
// strand data that fails to evaluate to finite values.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed closed-form expression text.
class ExpressionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The stretch schedule 1, 1/2, 1/4, ... dropped below the floor without the
// area form becoming positive on the whole grid; indicates pathological
// sampled data.
class NoEpsilonFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strand height function q(r, t), even in r (callers always see q(|r|, t)),
// defined for r in [-1, 1] and t in [t_lo, t_hi].  First and second partial
// derivatives come from 4th-order central differences: at the query point
// for closed forms, and precomputed on the sample lattice (then bilinearly
// interpolated) for sampled data.  The r-partials dr and dtr are taken in
// the first argument of q and evaluated at |r| — they do not flip sign on
// the r < 0 half.
class StrandFunction {
 public:
  // q evaluated as q(|r|, t); the callable must accept arguments slightly
  // outside the domain (difference stencils reach at most two steps out).
  static StrandFunction closed_form(std::function<double(double, double)> q,
                                    double t_lo, double t_hi);

  // Closed form given by an expression in r and t: numbers, + - * / ^,
  // parentheses, and tanh/sin/cos/exp/abs/sqrt.  Example: "4*r*tanh(4*t)".
  static StrandFunction from_expression(const std::string& text, double t_lo,
                                        double t_hi);

  // Regular sample lattice: r_nodes in [0, 1] ascending (the even extension
  // supplies r < 0), t_nodes ascending, q[i][j] = q(r_nodes[i], t_nodes[j]).
  // Both node lists must be uniformly spaced.
  static StrandFunction from_samples(const std::vector<double>& r_nodes,
                                     const std::vector<double>& t_nodes,
                                     const std::vector<std::vector<double>>& q);

  // CSV lines "r,t,q" (blank lines and #-comments ignored) forming a full
  // regular lattice; passed on to from_samples.
  static StrandFunction from_csv(const std::string& csv);

  double t_lo() const { return tlo_; }
  double t_hi() const { return thi_; }

  // Difference steps for closed forms (defaults 1/512); sampled strands are
  // tied to their lattice spacing and ignore this.
  void set_steps(double hr, double ht);

  double value(double r, double t) const;  // q(|r|, t)
  double dt(double r, double t) const;
  double dr(double r, double t) const;
  double dtt(double r, double t) const;
  double dtr(double r, double t) const;

 private:
  StrandFunction() = default;
  void check_domain(double r, double t) const;
  double raw(double r, double t) const;  // no domain check, r already folded

  std::function<double(double, double)> q_;  // closed form; null for sampled
  double tlo_ = 0, thi_ = 1;
  double hr_ = 1.0 / 512, ht_ = 1.0 / 512;

  // Sampled representation: node lists plus q and its four derivative
  // fields on the lattice.
  std::vector<double> rn_, tn_;
  std::vector<std::vector<double>> val_, fdt_, fdr_, fdtt_, fdtr_;
  double interp(const std::vector<std::vector<double>>& f, double r,
                double t) const;
};

// The stretched area form evaluated from q's partial derivatives at (r, t):
//   (1+(e qt)^2)^(-3/2) * [ (1+(e qt)^2)^2
//                           + r(-e^2 qr qtt + e qtr (e qt)^2 (e qt - 1)) ]
// Positive on every strand of a configuration means the stretched surfaces
// stay symplectic.  Throws DomainError for epsilon <= 0, (r, t) outside the
// domain, or non-finite results.
double area_form_value(const StrandFunction& s, double r, double t,
                       double epsilon);

// Uniform evaluation grid: nr samples of r in [-1, 1] and nt samples of t
// in [t_lo, t_hi], both at least 2.
struct GridSpec {
  int nr = 41;
  int nt = 81;
};

struct StrandEpsilon {
  double epsilon = 0;    // largest accepted stretch for this strand
  double min_value = 0;  // grid minimum of the area form at that stretch
  double argmin_r = 0, argmin_t = 0;
  bool operator==(const StrandEpsilon&) const = default;
};

struct EpsilonReport {
  double epsilon = 0;  // minimum over strands
  std::vector<StrandEpsilon> strands;
  bool operator==(const EpsilonReport&) const = default;
};

// For each strand, the largest epsilon in the schedule 1, 1/2, 1/4, ...
// whose area form exceeds delta at every grid sample; the overall result is
// the minimum over strands.  Workers split the grid by rows and the
// reduction follows a fixed traversal order, so the result does not depend
// on the thread count.  Throws DomainError for empty input or a degenerate
// grid and NoEpsilonFound when the schedule reaches 2^-40 without success.
EpsilonReport find_epsilon_report(const std::vector<StrandFunction>& strands,
                                  const GridSpec& grid, double delta = 1e-6,
                                  int threads = 1);

// Shorthand for find_epsilon_report(...).epsilon.
double find_epsilon(const std::vector<StrandFunction>& strands,
                    const GridSpec& grid, double delta = 1e-6,
                    int threads = 1);

}  // namespace arrange
