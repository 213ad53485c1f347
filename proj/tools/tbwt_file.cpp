#include "tbwt_file.hpp"

#include <cstring>
#include <fstream>

#include "tbwt/errors.hpp"

namespace tbwt::cli {

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    for (int b = 0; b < 2; ++b) out.push_back(static_cast<uint8_t>(v >> (8 * b)));
}
void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<uint8_t>(v >> (8 * b)));
}
void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<uint8_t>(v >> (8 * b)));
}

struct Reader {
    std::span<const uint8_t> data;
    size_t pos = 0;

    void need(size_t bytes) const {
        if (pos + bytes > data.size()) throw CorruptFileError("tbwt file truncated");
    }
    uint8_t u8() {
        need(1);
        return data[pos++];
    }
    uint16_t u16() {
        need(2);
        uint16_t v = 0;
        for (int b = 0; b < 2; ++b) v |= static_cast<uint16_t>(data[pos++]) << (8 * b);
        return v;
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int b = 0; b < 4; ++b) v |= static_cast<uint32_t>(data[pos++]) << (8 * b);
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int b = 0; b < 8; ++b) v |= static_cast<uint64_t>(data[pos++]) << (8 * b);
        return v;
    }
    std::span<const uint8_t> bytes(size_t count) {
        need(count);
        auto s = data.subspan(pos, count);
        pos += count;
        return s;
    }
};

// file bit b (LSB-first) holds logical position b+1
void pack_bits(std::vector<uint8_t>& out, const BitVector& bits, uint64_t logical_count) {
    uint64_t words = (logical_count + 63) / 64;
    for (uint64_t w = 0; w < words; ++w) {
        uint64_t word = 0;
        for (uint64_t b = 0; b < 64; ++b) {
            uint64_t logical = w * 64 + b + 1;
            if (logical > logical_count) break;
            if (bits.get(logical)) word |= uint64_t{1} << b;
        }
        put_u64(out, word);
    }
}

BitVector unpack_bits(Reader& r, uint64_t logical_count) {
    BitVector bits(logical_count + 1); // logical 1..count, index 0 unused
    uint64_t words = (logical_count + 63) / 64;
    for (uint64_t w = 0; w < words; ++w) {
        uint64_t word = r.u64();
        for (uint64_t b = 0; b < 64; ++b) {
            uint64_t logical = w * 64 + b + 1;
            if (logical > logical_count) {
                if (word >> b) throw CorruptFileError("nonzero padding in packed bitvector");
                break;
            }
            if ((word >> b) & 1) bits.set(logical);
        }
    }
    return bits;
}

} // namespace

std::vector<uint8_t> serialize_tbwt(const TunneledBWT& t) {
    std::vector<uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 5);
    out.push_back(kVersion);
    out.push_back(0); // flags
    put_u64(out, t.n_original);
    put_u64(out, t.p());
    put_u16(out, static_cast<uint16_t>(t.sigma));
    put_u32(out, t.k_used);
    out.insert(out.end(), t.alphabet.begin(), t.alphabet.end());
    for (uint8_t c : t.reduced_bwt) out.push_back(t.alphabet[c]);
    pack_bits(out, t.d_out.raw(), t.p() + 1);
    put_u64(out, t.q());
    pack_bits(out, t.d_in.raw(), t.q() + 1);
    return out;
}

TunneledBWT parse_tbwt(std::span<const uint8_t> data) {
    Reader r{data};
    auto magic = r.bytes(5);
    if (std::memcmp(magic.data(), kMagic, 5) != 0)
        throw CorruptFileError("bad magic, not a tbwt file");
    if (r.u8() != kVersion) throw CorruptFileError("unsupported tbwt version");
    if (r.u8() != 0) throw CorruptFileError("unknown flags");

    uint64_t n_original = r.u64();
    uint64_t p = r.u64();
    uint16_t sigma = r.u16();
    uint32_t k_used = r.u32();
    if (sigma == 0 || sigma > 256) throw CorruptFileError("sigma out of range");

    auto alphabet_bytes = r.bytes(sigma);
    std::vector<uint8_t> alphabet(alphabet_bytes.begin(), alphabet_bytes.end());
    std::array<int16_t, 256> to_dense;
    to_dense.fill(-1);
    for (size_t c = 0; c < alphabet.size(); ++c) to_dense[alphabet[c]] = static_cast<int16_t>(c);

    auto l_bytes = r.bytes(p);
    std::vector<uint8_t> reduced(p);
    for (uint64_t i = 0; i < p; ++i) {
        int16_t dense = to_dense[l_bytes[i]];
        if (dense < 0) throw CorruptFileError("BWT symbol missing from the alphabet map");
        reduced[i] = static_cast<uint8_t>(dense);
    }

    BitVector d_out = unpack_bits(r, p + 1);
    uint64_t q = r.u64();
    BitVector d_in = unpack_bits(r, q + 1);
    if (r.pos != data.size()) throw CorruptFileError("trailing bytes after payload");

    // logical size p+2: index 0 plus positions 1..p+1
    if (d_out.size() != p + 2 || d_in.size() != q + 2)
        throw CorruptFileError("bit counts do not match declared lengths");

    return assemble_tunneled(std::move(reduced), std::move(d_out), std::move(d_in), sigma,
                             std::move(alphabet), n_original, k_used);
}

void write_tbwt_file(const TunneledBWT& t, const std::string& path) {
    std::vector<uint8_t> data = serialize_tbwt(t);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("write failed: " + path);
}

TunneledBWT read_tbwt_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot open: " + path);
    auto size = in.tellg();
    in.seekg(0);
    std::vector<uint8_t> data(static_cast<size_t>(size));
    in.read(reinterpret_cast<char*>(data.data()), size);
    if (!in) throw IoError("read failed: " + path);
    return parse_tbwt(data);
}

} // namespace tbwt::cli
