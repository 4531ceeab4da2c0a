#pragma once

#include <map>
#include <variant>

#include "mpga/decompose.hpp"
#include "mpga/measures.hpp"
#include "mpga/motion.hpp"
#include "mpga/script/parser.hpp"
#include "mpga/spinor.hpp"

namespace mpga::script {

/// Evaluation-time failure with a source position; maps to exit code 3.
class EvalError : public std::runtime_error {
 public:
  EvalError(int line, int col, const std::string& what)
      : std::runtime_error(what), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Small fixed-shape tuple for kinematics results and parametrizations.
struct Tuple {
  std::vector<double> values;
  std::string tag;  // e.g. "future"
};

struct OrbitTable {
  std::vector<OrbitSample> samples;
};

struct Value {
  std::variant<double, Multivector, Spinor, Measure, Classification,
               BivectorDecomposition, Tuple, OrbitTable>
      data;
};

std::string render(const Value& value);

/// Streaming evaluator: bindings populate the environment, print
/// statements append one rendered line to the output.
class Evaluator {
 public:
  Evaluator(Space space, Tolerance tol) : space_(space), tol_(tol) {}

  void run(const Script& script);

  const std::string& output() const { return output_; }
  const Value* lookup(const std::string& name) const;
  Space space() const { return space_; }
  const Tolerance& tolerance() const { return tol_; }

 private:
  Value eval(const Expr& e);
  Value eval_call(const Expr& e);

  Space space_;
  Tolerance tol_;
  std::map<std::string, Value> env_;
  std::string output_;
};

/// Coordinate columns of the orbit CSV for a space ("x,t", "x,y,t", ...).
std::vector<std::string> point_coord_names(Space space);
/// Normalized standard-form coordinates of a finite point.
std::vector<double> point_coords(const Multivector& point);

/// Writes header theta,<coords...> plus one row per sample with 17
/// significant digits.
std::string orbit_csv(const OrbitTable& table);

/// Runs orbit on two bound names (a bivector generator and a point) and
/// returns the CSV text. Unknown names and type mismatches raise.
std::string emit_orbit(const Evaluator& env, const std::string& generator,
                       const std::string& entity, double theta_from,
                       double theta_to, int steps);

}  // namespace mpga::script
