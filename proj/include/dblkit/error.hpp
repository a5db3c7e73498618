#ifndef DBLKIT_ERROR_HPP
#define DBLKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dblkit {

// Failure kinds surfaced by the library. Everything that is a *law violation*
// goes through law_report instead; exceptions are for inputs or requests the
// operation cannot act on at all.
enum class errc {
  malformed_table,      // a table references unknown ids or is not total where required
  closure_exceeded,     // an operation would leave the declared finite carrier
  middle_mismatch,      // profunctor composition with src(Q) != tgt(P)
  missing_pullback,     // span composition needs a pullback the base lacks
  missing_pushout,      // cospan composition needs a pushout the base lacks
  budget_exceeded,      // a search exceeded its configured budget
  not_strict,           // a strict-only extraction was requested on a non-strict value
  boundary_mismatch,    // cells passed to a composition do not share the required boundary
  precondition_failed,  // a named hypothesis was checked and does not hold
  construction_failed,  // a derived witness could not be built or verified
  parse_error,          // DSL text could not be parsed
  elaboration_error,    // DSL ast refers to missing names or inconsistent data
  internal,             // invariant breach inside the library itself
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace dblkit

#endif
