#pragma once

#include "beukers/ball.hpp"
#include "beukers/forms.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace beukers::cli {

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& s);

/// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

inline constexpr unsigned long kDefaultOracleTerms = 20000;

int cmd_forms(ZetaKind kind, unsigned n_max, Format format, std::ostream& out);
int cmd_verify(ZetaKind kind, unsigned n_max, Precision prec, Format format, std::ostream& out, std::ostream& err);
int cmd_dn(std::uint64_t limit, Precision prec, Format format, std::ostream& out);
int cmd_maxima(Precision prec, unsigned grid_points, unsigned refinements, Format format, std::ostream& out);
int cmd_oracle_check(unsigned n_max, unsigned long terms, Precision prec, Format format, std::ostream& out);
int cmd_contradict(ZetaKind kind, const BigInt& p, const BigInt& q, Precision prec, Format format, std::ostream& out);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beukers::cli
