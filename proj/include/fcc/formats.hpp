#ifndef FCC_FORMATS_HPP
#define FCC_FORMATS_HPP

#include <iosfwd>
#include <string>

#include "fcc/analysis.hpp"
#include "fcc/code_search.hpp"
#include "fcc/distance_matrix.hpp"
#include "fcc/encoder.hpp"
#include "fcc/function.hpp"

namespace fcc {

// All formats are plain text; vectors appear as '0'/'1' strings.

/// Function-table document: schema header, k, the ordered label list, and
/// 2^k label names in lexicographic message order.
void write_function_table(std::ostream& out, const FiniteFunction& f);
FiniteFunction read_function_table(std::istream& in);
FiniteFunction load_function_table(const std::string& path);

/// Matrix: first line M, then M whitespace-separated integer rows.
void write_matrix(std::ostream& out, const DistanceMatrix& matrix);
DistanceMatrix read_matrix(std::istream& in, MatrixKind kind = MatrixKind::custom);
DistanceMatrix load_matrix(const std::string& path);

/// Search certificate: target, found length, witness words, infeasibility tag.
void write_certificate(std::ostream& out, const SearchCertificate& certificate);

/// Encoder descriptor: strategy, function reference (builtin parameters or a
/// table file path), t, and the parity payload.
void write_encoder_descriptor(std::ostream& out, const FccEncoder& encoder,
                              const std::string& table_path = "");
FccEncoder read_encoder_descriptor(std::istream& in, const std::string& base_dir = "");
FccEncoder load_encoder_descriptor(const std::string& path);

/// Verification report as `key: value` lines (schema-versioned).
void write_verification_report(std::ostream& out, const VerificationReport& report);

} // namespace fcc

#endif
