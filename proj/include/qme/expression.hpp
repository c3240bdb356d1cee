#pragma once

#include "qme/chain.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qme {

// element := ['+'|'-'] term (('+'|'-') term)*
// term    := rational ('*' factor)*      ('*' may be omitted between factors)
// factor  := 'g^'INT | 'v^'INT | 'w[' NAME (',' NAME)* ']'
// Factors multiply in the graded-commutative algebra in the order written.
// Throws a parse error with the character offset on malformed input.
TensorSum parse_expression(const Space& space, std::string_view text);
// Also rejects terms outside the variant (usage error).
TensorSum parse_element(const Space& space, std::string_view text, std::optional<Variant> variant);

// A term may additionally contain blocks '(' word ('*' word)* ')', each an
// element of Lambda; "1" is the unit chain.
ChainSum parse_chain(const Space& space, std::string_view text);

std::string render(const Space& space, const TensorSum& x);
std::string render(const Space& space, const ChainSum& c);
std::string render(const Space& space, const Hamiltonian& h);

}  // namespace qme
