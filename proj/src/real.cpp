#include "akz/real.hpp"

#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>

namespace akz {

namespace {

struct State {
  NumericSettings settings;
  unsigned bits = 0;
  Real roundoff;
};

State& state() {
  static State s;
  return s;
}

std::once_flag default_once;

void apply(const NumericSettings& s) {
  State& st = state();
  st.settings = s;
  const double tol_bits = std::ceil(-std::log2(std::min(s.mzv_tol, s.t_tol)));
  st.bits = std::max<unsigned>(s.prec_bits, static_cast<unsigned>(2 * tol_bits + 32));
  const unsigned digits10 = static_cast<unsigned>(std::ceil(st.bits * 0.30102999566398120)) + 1;
  Real::default_precision(digits10);
  st.roundoff = boost::multiprecision::ldexp(Real(1), -static_cast<int>(st.bits));
}

void ensure_default() {
  std::call_once(default_once, [] {
    if (state().bits == 0) apply(NumericSettings{});
  });
}

}  // namespace

void configure(const NumericSettings& s) {
  std::call_once(default_once, [] {});
  apply(s);
}

const NumericSettings& settings() {
  ensure_default();
  return state().settings;
}

unsigned working_bits() {
  ensure_default();
  return state().bits;
}

const Real& unit_roundoff() {
  ensure_default();
  return state().roundoff;
}

Real to_real(const Rational& q) {
  ensure_default();
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(double x) {
  ensure_default();
  return Real(x);
}

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string to_sci(const Real& x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << static_cast<double>(x);
  return os.str();
}

EvalResult EvalResult::exact(const Rational& q, std::string method) {
  return EvalResult{to_real(q), Real(0), std::move(method)};
}

namespace {

Real rounding(const Real& v) { return abs(v) * unit_roundoff() * 4; }

std::string join_method(const EvalResult& a, const EvalResult& b) {
  if (a.method == b.method) return a.method;
  if (a.method.empty()) return b.method;
  if (b.method.empty()) return a.method;
  return "combined";
}

}  // namespace

EvalResult operator+(const EvalResult& a, const EvalResult& b) {
  Real v = a.value + b.value;
  Real e = a.error + b.error + rounding(v);
  return EvalResult{std::move(v), std::move(e), join_method(a, b)};
}

EvalResult operator-(const EvalResult& a, const EvalResult& b) {
  Real v = a.value - b.value;
  Real e = a.error + b.error + rounding(v);
  return EvalResult{std::move(v), std::move(e), join_method(a, b)};
}

EvalResult operator-(const EvalResult& a) { return EvalResult{-a.value, a.error, a.method}; }

EvalResult operator*(const EvalResult& a, const EvalResult& b) {
  Real v = a.value * b.value;
  Real e = abs(a.value) * b.error + abs(b.value) * a.error + a.error * b.error + rounding(v);
  return EvalResult{std::move(v), std::move(e), join_method(a, b)};
}

EvalResult operator*(const EvalResult& a, const Rational& s) {
  const Real rs = to_real(s);
  Real v = a.value * rs;
  Real e = a.error * abs(rs) + rounding(v);
  return EvalResult{std::move(v), std::move(e), a.method};
}

bool agrees(const EvalResult& a, const EvalResult& b, double tol) {
  return abs(a.value - b.value) <= Real(tol) + a.error + b.error;
}

}  // namespace akz
