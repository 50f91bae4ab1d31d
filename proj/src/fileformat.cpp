#include "lblk/fileformat.hpp"

#include <algorithm>

namespace lblk {

std::array<std::uint8_t, FileHeader::kBytes> FileHeader::encode() const {
    std::array<std::uint8_t, kBytes> out{};
    std::copy(kMagic.begin(), kMagic.end(), out.begin());
    out[4] = version;
    out[5] = static_cast<std::uint8_t>(scheme);
    out[6] = static_cast<std::uint8_t>(l_bits >> 24);
    out[7] = static_cast<std::uint8_t>(l_bits >> 16);
    out[8] = static_cast<std::uint8_t>(l_bits >> 8);
    out[9] = static_cast<std::uint8_t>(l_bits);
    return out;
}

FileHeader FileHeader::decode(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kBytes)
        throw format_error("truncated header: need " + std::to_string(kBytes) + " bytes, have " +
                           std::to_string(bytes.size()));
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin()))
        throw format_error("bad magic: not an LBLK container");
    FileHeader h;
    h.version = bytes[4];
    if (h.version != 1)
        throw format_error("unsupported container version " + std::to_string(h.version));
    if (bytes[5] < 1 || bytes[5] > 5)
        throw format_error("unknown scheme id " + std::to_string(bytes[5]));
    h.scheme = static_cast<SchemeId>(bytes[5]);
    h.l_bits = (std::uint32_t{bytes[6]} << 24) | (std::uint32_t{bytes[7]} << 16) |
               (std::uint32_t{bytes[8]} << 8) | std::uint32_t{bytes[9]};
    if (h.l_bits != kProdLeftBits)
        throw format_error("unsupported left-half width " + std::to_string(h.l_bits));
    return h;
}

std::size_t prod_key_bytes(SchemeId id) {
    std::size_t bits = 0;
    const Params p{kProdLeftBits, kProdLeftBits + 1, kProdKeyHalfBits};
    for (std::size_t w : subkey_widths(id, p))
        bits += w;
    return bits / 8;
}

Scheme production_scheme(SchemeId id, std::size_t message_bits) {
    if (message_bits <= 2 * kProdLeftBits)
        throw dimension_error("message must be longer than " +
                              std::to_string(2 * kProdLeftBits / 8) +
                              " bytes so the right half exceeds the left half");
    const Params p{kProdLeftBits, message_bits - kProdLeftBits, kProdKeyHalfBits};
    switch (id) {
    case SchemeId::bear: return Scheme::bear(p, prod_stream(), prod_keyed_hash(p.k));
    case SchemeId::lion: return Scheme::lion(p, prod_stream(), prod_hash());
    case SchemeId::lioness: return Scheme::lioness(p, prod_stream(), prod_keyed_hash(p.k));
    case SchemeId::bear2: return Scheme::bear2(p, prod_stream(), prod_keyed_hash(p.k));
    case SchemeId::lion2: return Scheme::lion2(p, prod_stream(), prod_keyed_hash(p.k));
    }
    throw dimension_error("unknown scheme id");
}

namespace {

KeyMaterial load_key(const Scheme& scheme, std::span<const std::uint8_t> key) {
    const std::size_t want = prod_key_bytes(scheme.id());
    if (key.size() != want)
        throw dimension_error(std::string(scheme_name(scheme.id())) + ": key file must be exactly " +
                              std::to_string(want) + " bytes, got " + std::to_string(key.size()));
    return scheme.key_from_bits(BitStr::from_bytes(key, key.size() * 8));
}

} // namespace

std::vector<std::uint8_t> encrypt_file_bytes(SchemeId id, std::span<const std::uint8_t> key,
                                             std::span<const std::uint8_t> plain) {
    const Scheme scheme = production_scheme(id, plain.size() * 8);
    const KeyMaterial km = load_key(scheme, key);
    const BitStr msg = BitStr::from_bytes(plain, plain.size() * 8);
    const auto [left, right] = split(msg, kProdLeftBits);
    const Block ct = scheme.encrypt(km, {left, right});

    const FileHeader header{1, id, kProdLeftBits};
    const auto head = header.encode();
    std::vector<std::uint8_t> out(head.begin(), head.end());
    const auto body = concat(ct.left, ct.right).to_bytes();
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

std::vector<std::uint8_t> decrypt_file_bytes(SchemeId id, std::span<const std::uint8_t> key,
                                             std::span<const std::uint8_t> file) {
    const FileHeader header = FileHeader::decode(file);
    if (header.scheme != id)
        throw format_error(std::string("container was written with ") +
                           scheme_name(header.scheme) + ", not " + scheme_name(id));
    const auto body = file.subspan(FileHeader::kBytes);
    if (body.size() * 8 <= 2 * kProdLeftBits)
        throw format_error("ciphertext body is truncated");

    const Scheme scheme = production_scheme(id, body.size() * 8);
    const KeyMaterial km = load_key(scheme, key);
    const BitStr ct = BitStr::from_bytes(body, body.size() * 8);
    const auto [left, right] = split(ct, kProdLeftBits);
    const Block pt = scheme.decrypt(km, {left, right});
    return concat(pt.left, pt.right).to_bytes();
}

} // namespace lblk
