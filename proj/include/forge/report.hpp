#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "forge/deformation.hpp"
#include "forge/verification.hpp"

namespace forge {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };
Format parse_format(const std::string& name);

// "Z[x,y]" or "F7[a,b]"; whitespace around names is ignored.
RingPtr parse_ring(const std::string& text, MonomialOrder order = MonomialOrder::grevlex());

Json to_json(const AffinePresentation& x);
Json to_json(const QuasiAffinePresentation& x);
Json to_json(const VerificationReport& report);
Json to_json(const CheckResult& check);

// Text is the to_text form; json is a two-space indented object.
std::string print_presentation(const AffinePresentation& x, Format format);
std::string print_presentation(const QuasiAffinePresentation& x, Format format);

// Inverse of the text form: "ring R; ideal (...)[; point (...)]". Throws ParseError.
AffinePresentation parse_presentation(const std::string& text);
QuasiAffinePresentation parse_quasi_affine(const std::string& text);

enum class Verdict { EqualAsStrings, EqualAsIdeals, Different };
std::string to_string(Verdict v);

struct Comparison {
  Verdict verdict = Verdict::Different;
  std::string witness;  // empty unless different
};

// A's ideal is renamed into B's ring and compared: identical generator lists
// are equal-as-strings, equal reduced bases are equal-as-ideals. Without a
// renaming variables match by name. Throws DomainError unless the renaming is
// a bijection from A's variables onto B's, or if the coefficient rings differ.
Comparison diff_presentations(const AffinePresentation& a, const AffinePresentation& b,
                              const std::optional<Renaming>& renaming = std::nullopt);

// Generic renderer used for the text report: nested keys become indented lines.
std::string json_to_text(const Json& value);

}  // namespace forge
