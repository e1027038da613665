#include "lerch/batch.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lerch::batch {

Outcome evaluate_one(const LerchQuery& q, Method method, double tol) {
  Outcome out;
  try {
    out.result = lerch::evaluate(q, method, tol);
  } catch (const LerchError& e) {
    out.error = e.kind();
    out.message = e.what();
  } catch (const std::exception& e) {
    out.error = ErrorKind::Domain;
    out.message = e.what();
  }
  return out;
}

std::vector<Outcome> evaluate(std::span<const LerchQuery> queries, double tol,
                              Method method) {
  return parallel_map(queries.size(), [&](std::size_t i) {
    return evaluate_one(queries[i], method, tol);
  });
}

std::vector<Outcome> evaluate_serial(std::span<const LerchQuery> queries,
                                     double tol, Method method) {
  return serial_map(queries.size(), [&](std::size_t i) {
    return evaluate_one(queries[i], method, tol);
  });
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lerch::batch
