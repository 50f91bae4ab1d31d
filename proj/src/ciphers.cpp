#include "lblk/ciphers.hpp"

namespace lblk {

namespace {

class XorAction final : public KeyAction {
public:
    BitStr apply(const BitStr& key, const BitStr& half) const override { return key ^ half; }
    BitStr solve_key(const BitStr& from, const BitStr& to) const override { return from ^ to; }
    std::string name() const override { return "xor"; }
};

class ModAddAction final : public KeyAction {
public:
    BitStr apply(const BitStr& key, const BitStr& half) const override {
        const std::size_t w = width(key, half);
        return BitStr::from_uint(key.to_uint() + half.to_uint(), w);
    }
    BitStr solve_key(const BitStr& from, const BitStr& to) const override {
        const std::size_t w = width(from, to);
        return BitStr::from_uint(to.to_uint() - from.to_uint(), w);
    }
    std::string name() const override { return "modadd"; }

private:
    static std::size_t width(const BitStr& a, const BitStr& b) {
        if (a.size() != b.size() || a.size() > 64)
            throw dimension_error("modadd action: operands must be equal width <= 64 bits");
        return a.size();
    }
};

} // namespace

std::shared_ptr<const KeyAction> xor_action() {
    static const auto instance = std::make_shared<XorAction>();
    return instance;
}

std::shared_ptr<const KeyAction> modadd_action() {
    static const auto instance = std::make_shared<ModAddAction>();
    return instance;
}

Scheme::Scheme(SchemeId id, const Params& p, std::shared_ptr<const StreamCipher> s,
               std::shared_ptr<const KeyedHash> kh, std::shared_ptr<const UnkeyedHash> uh,
               std::shared_ptr<const KeyAction> action)
    : id_(id), params_(p), stream_(std::move(s)), keyed_(std::move(kh)), unkeyed_(std::move(uh)),
      action_(action ? std::move(action) : xor_action()) {
    validate_params(id_, params_);
    if (stream_ == nullptr || stream_->seed_bits() != params_.l)
        throw dimension_error(std::string(scheme_name(id_)) + ": stream seed width must equal l");
    if (keyed_ != nullptr) {
        if (keyed_->out_bits() != params_.l)
            throw dimension_error(std::string(scheme_name(id_)) + ": keyed hash must output l bits");
        if (keyed_->key_bits() != params_.k)
            throw dimension_error(std::string(scheme_name(id_)) + ": keyed hash key width must equal k");
    }
    if (unkeyed_ != nullptr && unkeyed_->out_bits() != params_.l)
        throw dimension_error(std::string(scheme_name(id_)) + ": hash must output l bits");
}

Scheme Scheme::bear(const Params& p, std::shared_ptr<const StreamCipher> s,
                    std::shared_ptr<const KeyedHash> h) {
    return Scheme(SchemeId::bear, p, std::move(s), std::move(h), nullptr, nullptr);
}

Scheme Scheme::lion(const Params& p, std::shared_ptr<const StreamCipher> s,
                    std::shared_ptr<const UnkeyedHash> h, std::shared_ptr<const KeyAction> action) {
    return Scheme(SchemeId::lion, p, std::move(s), nullptr, std::move(h), std::move(action));
}

Scheme Scheme::lioness(const Params& p, std::shared_ptr<const StreamCipher> s,
                       std::shared_ptr<const KeyedHash> h, std::shared_ptr<const KeyAction> action) {
    return Scheme(SchemeId::lioness, p, std::move(s), std::move(h), nullptr, std::move(action));
}

Scheme Scheme::bear2(const Params& p, std::shared_ptr<const StreamCipher> s,
                     std::shared_ptr<const KeyedHash> h) {
    return Scheme(SchemeId::bear2, p, std::move(s), std::move(h), nullptr, nullptr);
}

Scheme Scheme::lion2(const Params& p, std::shared_ptr<const StreamCipher> s,
                     std::shared_ptr<const KeyedHash> h, std::shared_ptr<const KeyAction> action) {
    return Scheme(SchemeId::lion2, p, std::move(s), std::move(h), nullptr, std::move(action));
}

const KeyedHash& Scheme::keyed_hash() const {
    if (keyed_ == nullptr)
        throw dimension_error(std::string(scheme_name(id_)) + " has no keyed hash");
    return *keyed_;
}

const UnkeyedHash& Scheme::unkeyed_hash() const {
    if (unkeyed_ == nullptr)
        throw dimension_error(std::string(scheme_name(id_)) + " has no unkeyed hash");
    return *unkeyed_;
}

std::size_t Scheme::key_bits() const {
    std::size_t total = 0;
    for (std::size_t w : subkey_widths())
        total += w;
    return total;
}

KeyMaterial Scheme::key_from_bits(const BitStr& bits) const {
    KeyMaterial key;
    key.scheme = id_;
    key.subkeys.resize(subkey_widths().size());
    key_from_bits_into(bits, key);
    return key;
}

void Scheme::key_from_bits_into(const BitStr& bits, KeyMaterial& key) const {
    const auto widths = subkey_widths();
    if (bits.size() != key_bits())
        throw dimension_error("key_from_bits: need " + std::to_string(key_bits()) + " bits, got " +
                              std::to_string(bits.size()));
    key.scheme = id_;
    key.subkeys.resize(widths.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        key.subkeys[i] = bits.slice(pos, widths[i]);
        pos += widths[i];
    }
}

KeyMaterial Scheme::random_key(Rng& rng) const {
    KeyMaterial key;
    key.scheme = id_;
    for (std::size_t w : subkey_widths())
        key.subkeys.push_back(random_bits(w, rng));
    return key;
}

Block Scheme::encrypt(const KeyMaterial& key, const Block& pt) const {
    validate_key(key, id_, params_);
    validate_block(pt, params_, "encrypt");
    const auto& ks = key.subkeys;
    const std::size_t r = params_.r;
    switch (id_) {
    case SchemeId::bear: {
        const BitStr lbar = pt.left ^ keyed_->digest(ks[0], pt.right);
        const BitStr rp = pt.right ^ stream_->keystream(lbar, r);
        return {lbar ^ keyed_->digest(ks[1], rp), rp};
    }
    case SchemeId::lion: {
        const BitStr rbar = pt.right ^ stream_->keystream(action_->apply(ks[0], pt.left), r);
        const BitStr lp = pt.left ^ unkeyed_->digest(rbar);
        return {lp, rbar ^ stream_->keystream(action_->apply(ks[1], lp), r)};
    }
    case SchemeId::lioness: {
        const BitStr rbar = pt.right ^ stream_->keystream(action_->apply(ks[0], pt.left), r);
        const BitStr lbar = pt.left ^ keyed_->digest(ks[1], rbar);
        const BitStr rp = rbar ^ stream_->keystream(action_->apply(ks[2], lbar), r);
        return {lbar ^ keyed_->digest(ks[3], rp), rp};
    }
    case SchemeId::bear2: {
        const BitStr lbar = pt.left ^ keyed_->digest(ks[0], pt.right);
        const BitStr rp = pt.right ^ stream_->keystream(lbar ^ ks[1], r);
        return {lbar ^ keyed_->digest(ks[2], rp), rp};
    }
    case SchemeId::lion2: {
        const BitStr rbar = pt.right ^ stream_->keystream(action_->apply(ks[0], pt.left), r);
        const BitStr lp = pt.left ^ keyed_->digest(ks[1], rbar);
        return {lp, rbar ^ stream_->keystream(action_->apply(ks[2], lp), r)};
    }
    }
    throw dimension_error("unknown scheme id");
}

Block Scheme::decrypt(const KeyMaterial& key, const Block& ct) const {
    validate_key(key, id_, params_);
    validate_block(ct, params_, "decrypt");
    const auto& ks = key.subkeys;
    const std::size_t r = params_.r;
    switch (id_) {
    case SchemeId::bear: {
        const BitStr lbar = ct.left ^ keyed_->digest(ks[1], ct.right);
        const BitStr pr = ct.right ^ stream_->keystream(lbar, r);
        return {lbar ^ keyed_->digest(ks[0], pr), pr};
    }
    case SchemeId::lion: {
        const BitStr rbar = ct.right ^ stream_->keystream(action_->apply(ks[1], ct.left), r);
        const BitStr pl = ct.left ^ unkeyed_->digest(rbar);
        return {pl, rbar ^ stream_->keystream(action_->apply(ks[0], pl), r)};
    }
    case SchemeId::lioness: {
        const BitStr lbar = ct.left ^ keyed_->digest(ks[3], ct.right);
        const BitStr rbar = ct.right ^ stream_->keystream(action_->apply(ks[2], lbar), r);
        const BitStr pl = lbar ^ keyed_->digest(ks[1], rbar);
        return {pl, rbar ^ stream_->keystream(action_->apply(ks[0], pl), r)};
    }
    case SchemeId::bear2: {
        const BitStr lbar = ct.left ^ keyed_->digest(ks[2], ct.right);
        const BitStr pr = ct.right ^ stream_->keystream(lbar ^ ks[1], r);
        return {lbar ^ keyed_->digest(ks[0], pr), pr};
    }
    case SchemeId::lion2: {
        const BitStr rbar = ct.right ^ stream_->keystream(action_->apply(ks[2], ct.left), r);
        const BitStr pl = ct.left ^ keyed_->digest(ks[1], rbar);
        return {pl, rbar ^ stream_->keystream(action_->apply(ks[0], pl), r)};
    }
    }
    throw dimension_error("unknown scheme id");
}

} // namespace lblk
