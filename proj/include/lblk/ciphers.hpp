#pragma once
#include <memory>
#include <string>

#include "lblk/primitives.hpp"
#include "lblk/types.hpp"

namespace lblk {

// Family {tau_K} of permutations of the left-half space, used by the LION
// family to mix subkeys into stream-round seeds. A regular action has, for
// every (from, to), exactly one K with tau_K(from) = to; solve_key returns
// it. The default is translation (XOR), which matches the published round
// equations.
class KeyAction {
public:
    virtual ~KeyAction() = default;
    virtual BitStr apply(const BitStr& key, const BitStr& half) const = 0;
    virtual BitStr solve_key(const BitStr& from, const BitStr& to) const = 0;
    virtual std::string name() const = 0;
};

std::shared_ptr<const KeyAction> xor_action();
// tau_K(x) = (x + K) mod 2^width over integer encodings; width <= 64.
std::shared_ptr<const KeyAction> modadd_action();

// One of the five wide-block constructions, bound to its primitives.
//
//   BEAR     Lb = L ^ H_K1(R)        LION     Rb = R ^ S(L ^ K1)
//            R' = R ^ S(Lb)                   L' = L ^ H(Rb)
//            L' = Lb ^ H_K2(R')               R' = Rb ^ S(L' ^ K2)
//
//   BEAR2    Lb = L ^ H_K1(R)        LION2    Rb = R ^ S(L ^ K1)
//            R' = R ^ S(Lb ^ K2)              L' = L ^ H_K2(Rb)
//            L' = Lb ^ H_K3(R')               R' = Rb ^ S(L' ^ K3)
//
//   LIONESS  Rb = R ^ S(L ^ K1)
//            Lb = L ^ H_K2(Rb)
//            R' = Rb ^ S(Lb ^ K3)
//            L' = Lb ^ H_K4(R')
//
// Note the LIONESS third round chains Rb, not R; that is the only reading
// its own decryption column inverts (see tests for the failing variant).
// For the LION family, "^ K" in stream-round seeds is the installed key
// action applied to the half.
class Scheme {
public:
    static Scheme bear(const Params& p, std::shared_ptr<const StreamCipher> s,
                       std::shared_ptr<const KeyedHash> h);
    static Scheme lion(const Params& p, std::shared_ptr<const StreamCipher> s,
                       std::shared_ptr<const UnkeyedHash> h,
                       std::shared_ptr<const KeyAction> action = nullptr);
    static Scheme lioness(const Params& p, std::shared_ptr<const StreamCipher> s,
                          std::shared_ptr<const KeyedHash> h,
                          std::shared_ptr<const KeyAction> action = nullptr);
    static Scheme bear2(const Params& p, std::shared_ptr<const StreamCipher> s,
                        std::shared_ptr<const KeyedHash> h);
    static Scheme lion2(const Params& p, std::shared_ptr<const StreamCipher> s,
                        std::shared_ptr<const KeyedHash> h,
                        std::shared_ptr<const KeyAction> action = nullptr);

    SchemeId id() const { return id_; }
    const Params& params() const { return params_; }

    std::vector<std::size_t> subkey_widths() const { return lblk::subkey_widths(id_, params_); }
    std::size_t key_bits() const;

    // Splits a key_bits()-wide string into the subkey tuple, in order.
    KeyMaterial key_from_bits(const BitStr& bits) const;
    // Same, writing into an existing tuple without reallocation.
    void key_from_bits_into(const BitStr& bits, KeyMaterial& key) const;
    KeyMaterial random_key(Rng& rng) const;

    Block encrypt(const KeyMaterial& key, const Block& pt) const;
    Block decrypt(const KeyMaterial& key, const Block& ct) const;

    const StreamCipher& stream() const { return *stream_; }
    const KeyedHash& keyed_hash() const;
    const UnkeyedHash& unkeyed_hash() const;
    const KeyAction& action() const { return *action_; }

private:
    Scheme(SchemeId id, const Params& p, std::shared_ptr<const StreamCipher> s,
           std::shared_ptr<const KeyedHash> kh, std::shared_ptr<const UnkeyedHash> uh,
           std::shared_ptr<const KeyAction> action);

    SchemeId id_;
    Params params_;
    std::shared_ptr<const StreamCipher> stream_;
    std::shared_ptr<const KeyedHash> keyed_;
    std::shared_ptr<const UnkeyedHash> unkeyed_;
    std::shared_ptr<const KeyAction> action_;
};

} // namespace lblk
