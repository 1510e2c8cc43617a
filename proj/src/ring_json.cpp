#include <json.hpp>

#include "cayring/ring.hpp"

namespace cayring {

using nlohmann::json;

std::string bitset_to_hex(const std::vector<uint64_t>& bits, uint32_t n) {
    static const char* digits = "0123456789abcdef";
    const uint32_t bytes = (n + 7) / 8;
    std::string out;
    out.reserve(bytes * 2);
    for (uint32_t j = 0; j < bytes; ++j) {
        uint8_t b = 0;
        for (uint32_t k = 0; k < 8; ++k) {
            uint32_t i = 8 * j + k;
            if (i < n && bits::test(bits.data(), i)) b |= uint8_t(1) << k;
        }
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

std::vector<uint64_t> hex_to_bitset(const std::string& hex, uint32_t n) {
    auto nibble = [](char c) -> uint32_t {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw Error("bad hex digit in bitmap");
    };
    if (hex.size() != uint64_t((n + 7) / 8) * 2) throw Error("bitmap length mismatch");
    auto out = bits::make(n);
    for (uint32_t j = 0; j * 2 < hex.size(); ++j) {
        uint8_t b = static_cast<uint8_t>((nibble(hex[j * 2]) << 4) | nibble(hex[j * 2 + 1]));
        for (uint32_t k = 0; k < 8; ++k) {
            uint32_t i = 8 * j + k;
            if (b & (uint8_t(1) << k)) {
                if (i >= n) throw Error("bitmap sets an element outside the ring");
                bits::set(out.data(), i);
            }
        }
    }
    return out;
}

std::string ring_to_json(const FiniteRing& R, const RingStrata* strata) {
    json doc;
    doc["order"] = R.order();
    json factors = json::array();
    for (size_t i = 0; i < R.factor_count(); ++i) {
        const LocalRingDesc& d = R.factor(i).desc();
        json f;
        switch (d.kind) {
            case LocalKind::zpk:
                f = {{"kind", "zpk"}, {"p", d.p}, {"k", d.k}};
                break;
            case LocalKind::gf:
                f = {{"kind", "gf"}, {"p", d.p}, {"k", d.k}, {"modulus", d.modulus}};
                break;
            case LocalKind::trunc:
                f = {{"kind", "trunc"}, {"q", d.q}, {"m", d.m}};
                break;
            case LocalKind::table:
                f = {{"kind", "table"}, {"n", d.n}, {"zero", d.zero}, {"one", d.one},
                     {"add", d.add},    {"mul", d.mul}};
                break;
        }
        factors.push_back(std::move(f));
    }
    doc["factors"] = std::move(factors);
    if (strata) {
        doc["strata"] = {{"units", bitset_to_hex(strata->units, strata->n)},
                         {"zero_divisors", bitset_to_hex(strata->zero_divisors, strata->n)},
                         {"nilradical", bitset_to_hex(strata->nilradical, strata->n)},
                         {"jacobson", bitset_to_hex(strata->jacobson, strata->n)},
                         {"regular", bitset_to_hex(strata->regular, strata->n)}};
    }
    return doc.dump(2) + "\n";
}

FiniteRing ring_from_json(const std::string& text, uint64_t order_cap) {
    json doc = json::parse(text);
    std::vector<LocalRingDesc> descs;
    for (const json& f : doc.at("factors")) {
        const std::string kind = f.at("kind").get<std::string>();
        if (kind == "zpk") {
            descs.push_back(LocalRingDesc::zpk_desc(f.at("p").get<uint32_t>(), f.at("k").get<uint32_t>()));
        } else if (kind == "gf") {
            std::vector<uint32_t> modulus;
            if (f.contains("modulus")) modulus = f.at("modulus").get<std::vector<uint32_t>>();
            descs.push_back(LocalRingDesc::gf_desc(f.at("p").get<uint32_t>(), f.at("k").get<uint32_t>(),
                                                   std::move(modulus)));
        } else if (kind == "trunc") {
            descs.push_back(LocalRingDesc::trunc_desc(f.at("q").get<uint32_t>(), f.at("m").get<uint32_t>()));
        } else if (kind == "table") {
            descs.push_back(LocalRingDesc::table_desc(
                f.at("n").get<uint32_t>(), f.at("add").get<std::vector<uint16_t>>(),
                f.at("mul").get<std::vector<uint16_t>>(), f.at("zero").get<uint32_t>(),
                f.at("one").get<uint32_t>()));
        } else {
            throw Error("unknown factor kind '" + kind + "'");
        }
    }
    return make_ring(std::move(descs), order_cap);
}

}  // namespace cayring
