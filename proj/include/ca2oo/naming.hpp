#pragma once

#include <string>
#include <string_view>
#include <vector>

/// Name normalization shared by the parser and the derivation passes.
namespace ca2oo::naming {

/// Splits on every non-alphanumeric ASCII byte; UTF-8 continuation bytes
/// count as letters.
std::vector<std::string> words(std::string_view text);

/// Words of 2-4 uppercase ASCII letters (VAT, ID) are kept verbatim.
bool is_acronym(std::string_view word);

/// "VAT number" -> "VAT_number", "Planned delivery date" -> "planned_delivery_date".
std::string attribute_name(std::string_view field_name);

/// "Client order" -> "ClientOrder".
std::string class_name(std::string_view object_name);

/// "ClientAddress" -> {"Client", "Address"}.
std::vector<std::string> camel_words(std::string_view name);

/// "ClientAddress" -> "client_address".
std::string snake_case(std::string_view class_name);

/// "ClientOrder" -> "clientorder".
std::string lower(std::string_view text);
std::string upper(std::string_view text);

/// Naive English plural: "+es" after s/x/z/ch/sh, otherwise "+s".
std::string pluralize(std::string_view noun);

/// Last CamelCase word, lowercased: "ClientOrder" -> "order".
std::string service_noun(std::string_view class_name);

/// "SALE1" -> "Sale1".
std::string event_prefix(std::string_view event_id);

/// "assign supplier" -> "assign_supplier".
std::string snake_words(std::string_view text);

/// Case-folded, whitespace-collapsed key used for name lookups.
std::string key(std::string_view text);

/// Case-insensitive comparison treating digit runs as numbers
/// ("SALE2" < "SALE10"); strings equal up to case fall back to byte order.
bool natural_less(std::string_view a, std::string_view b);
int natural_compare(std::string_view a, std::string_view b);

std::size_t utf8_length(std::string_view text);

}  // namespace ca2oo::naming
