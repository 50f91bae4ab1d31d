#include "lblk/types.hpp"

namespace lblk {

const char* scheme_name(SchemeId id) {
    switch (id) {
    case SchemeId::bear: return "bear";
    case SchemeId::lion: return "lion";
    case SchemeId::lioness: return "lioness";
    case SchemeId::bear2: return "bear2";
    case SchemeId::lion2: return "lion2";
    }
    throw dimension_error("unknown scheme id");
}

SchemeId scheme_from_name(const std::string& name) {
    if (name == "bear") return SchemeId::bear;
    if (name == "lion") return SchemeId::lion;
    if (name == "lioness") return SchemeId::lioness;
    if (name == "bear2") return SchemeId::bear2;
    if (name == "lion2") return SchemeId::lion2;
    throw dimension_error("unknown scheme '" + name + "'");
}

std::vector<std::size_t> subkey_widths(SchemeId id, const Params& p) {
    switch (id) {
    case SchemeId::bear: return {p.k, p.k};
    case SchemeId::lion: return {p.l, p.l};
    case SchemeId::lioness: return {p.l, p.k, p.l, p.k};
    case SchemeId::bear2: return {p.k, p.l, p.k};
    case SchemeId::lion2: return {p.l, p.k, p.l};
    }
    throw dimension_error("unknown scheme id");
}

void validate_params(SchemeId id, const Params& p) {
    if (p.l == 0 || p.r <= p.l)
        throw dimension_error(std::string(scheme_name(id)) + ": requires r > l > 0, got l=" +
                              std::to_string(p.l) + " r=" + std::to_string(p.r));
    const bool uses_k = id != SchemeId::lion;
    if (uses_k && p.k == 0)
        throw dimension_error(std::string(scheme_name(id)) + ": requires k > 0");
    if ((id == SchemeId::bear || id == SchemeId::bear2) && p.k <= p.l)
        throw dimension_error(std::string(scheme_name(id)) + ": requires k > l, got k=" +
                              std::to_string(p.k) + " l=" + std::to_string(p.l));
}

void validate_key(const KeyMaterial& key, SchemeId id, const Params& p) {
    if (key.scheme != id)
        throw dimension_error("key is tagged for a different scheme");
    const auto widths = subkey_widths(id, p);
    if (key.subkeys.size() != widths.size())
        throw dimension_error(std::string(scheme_name(id)) + ": expected " +
                              std::to_string(widths.size()) + " subkeys, got " +
                              std::to_string(key.subkeys.size()));
    for (std::size_t i = 0; i < widths.size(); ++i)
        if (key.subkeys[i].size() != widths[i])
            throw dimension_error(std::string(scheme_name(id)) + ": subkey " + std::to_string(i + 1) +
                                  " must be " + std::to_string(widths[i]) + " bits, got " +
                                  std::to_string(key.subkeys[i].size()));
}

void validate_block(const Block& b, const Params& p, const char* what) {
    if (b.left.size() != p.l || b.right.size() != p.r)
        throw dimension_error(std::string(what) + ": block is (" + std::to_string(b.left.size()) +
                              "," + std::to_string(b.right.size()) + ") bits, params need (" +
                              std::to_string(p.l) + "," + std::to_string(p.r) + ")");
}

} // namespace lblk
