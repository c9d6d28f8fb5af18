#include "sumprod/sets.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "sumprod/rng.hpp"

namespace sumprod {

std::size_t Bitset::count() const noexcept {
  std::size_t n = 0;
  for (u64 w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

std::vector<u32> Bitset::to_vector() const {
  std::vector<u32> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    u64 bits = words_[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<u32>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

FpSet::FpSet(Prime p, std::vector<u32> elements)
    : prime_(std::move(p)), elems_(std::move(elements)), bits_(prime_.value()) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.back() >= prime_.value()) {
    throw Error(ErrorKind::InvalidArgument,
                "element " + std::to_string(elems_.back()) +
                    " is not a residue mod " + std::to_string(prime_.value()));
  }
  for (u32 x : elems_) bits_.set(x);
}

FpSet::FpSet(Prime p, const Bitset& bits)
    : prime_(std::move(p)), elems_(bits.to_vector()), bits_(bits) {
  if (bits.size() != prime_.value()) {
    throw Error(ErrorKind::InvalidArgument, "bitset length must equal p");
  }
}

FpSet FpSet::whole_field(const Prime& p) {
  std::vector<u32> all(p.value());
  for (u32 i = 0; i < p.value(); ++i) all[i] = i;
  return FpSet(p, std::move(all));
}

FpSet FpSet::nonzero() const {
  std::vector<u32> out;
  out.reserve(elems_.size());
  for (u32 x : elems_) {
    if (x != 0) out.push_back(x);
  }
  return FpSet(prime_, std::move(out));
}

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::random: return "random";
    case FamilyKind::ap: return "ap";
    case FamilyKind::geometric: return "geometric";
    case FamilyKind::subgroup: return "subgroup";
    case FamilyKind::interval: return "interval";
    case FamilyKind::explicit_set: return "explicit";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "random") return FamilyKind::random;
  if (name == "ap") return FamilyKind::ap;
  if (name == "geometric") return FamilyKind::geometric;
  if (name == "subgroup") return FamilyKind::subgroup;
  if (name == "interval") return FamilyKind::interval;
  if (name == "explicit") return FamilyKind::explicit_set;
  throw Error(ErrorKind::InvalidArgument,
              "unknown family kind '" + std::string(name) + "'");
}

namespace {

void require_size(u64 size, u32 p) {
  if (size > p) {
    throw Error(ErrorKind::SizeTooLarge,
                "size " + std::to_string(size) + " exceeds p = " +
                    std::to_string(p));
  }
}

std::vector<u32> random_elements(u64 size, const Prime& p, u64 seed) {
  // Partial Fisher-Yates over the virtual array [0, p); only touched slots
  // are materialised.
  SplitMix64 rng(seed);
  std::unordered_map<u32, u32> moved;
  auto slot = [&](u32 i) {
    auto it = moved.find(i);
    return it == moved.end() ? i : it->second;
  };
  std::vector<u32> out;
  out.reserve(size);
  for (u32 i = 0; i < size; ++i) {
    const u32 j = i + static_cast<u32>(rng.below(p.value() - i));
    const u32 vi = slot(i);
    const u32 vj = slot(j);
    moved[j] = vi;
    moved[i] = vj;
    out.push_back(vj);
  }
  return out;
}

}  // namespace

FpSet make_family(const FamilySpec& spec, const Prime& p) {
  const u32 mod = p.value();
  switch (spec.kind) {
    case FamilyKind::random:
      require_size(spec.size, mod);
      return FpSet(p, random_elements(spec.size, p, spec.seed));
    case FamilyKind::ap:
    case FamilyKind::interval: {
      require_size(spec.size, mod);
      const u32 start = p.reduce(spec.start);
      const u32 step = spec.kind == FamilyKind::interval ? 1 : p.reduce(spec.step);
      if (step == 0 && spec.size > 1) {
        throw Error(ErrorKind::InvalidArgument, "progression step is 0 mod p");
      }
      std::vector<u32> out;
      out.reserve(spec.size);
      u32 x = start;
      for (u64 k = 0; k < spec.size; ++k) {
        out.push_back(x);
        x = p.add(x, step);
      }
      return FpSet(p, std::move(out));
    }
    case FamilyKind::geometric: {
      require_size(spec.size, mod);
      const u32 start = p.reduce(spec.start);
      const u32 ratio = p.reduce(spec.step);
      if (start == 0 || ratio == 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "geometric progression needs nonzero start and ratio");
      }
      std::vector<u32> out;
      out.reserve(spec.size);
      u32 x = start;
      for (u64 k = 0; k < spec.size; ++k) {
        out.push_back(x);
        x = p.mul(x, ratio);
      }
      FpSet set(p, std::move(out));
      if (set.size() != spec.size) {
        throw Error(ErrorKind::SizeTooLarge,
                    "geometric progression wraps before reaching size " +
                        std::to_string(spec.size));
      }
      return set;
    }
    case FamilyKind::subgroup: {
      const u64 d = spec.order;
      if (d == 0 || (mod - 1) % d != 0) {
        throw Error(ErrorKind::BadOrder,
                    "subgroup order " + std::to_string(d) +
                        " does not divide p-1 = " + std::to_string(mod - 1));
      }
      const u32 gen = p.pow(p.primitive_root(), (mod - 1) / d);
      std::vector<u32> out;
      out.reserve(d);
      u32 x = 1;
      for (u64 k = 0; k < d; ++k) {
        out.push_back(x);
        x = p.mul(x, gen);
      }
      return FpSet(p, std::move(out));
    }
    case FamilyKind::explicit_set:
      return FpSet(p, spec.elements);
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled family kind");
}

std::string_view to_string(SetOp op) noexcept {
  switch (op) {
    case SetOp::sum: return "sum";
    case SetOp::diff: return "diff";
    case SetOp::prod: return "prod";
    case SetOp::ratio: return "ratio";
  }
  return "unknown";
}

SetOp parse_set_op(std::string_view name) {
  if (name == "sum" || name == "+") return SetOp::sum;
  if (name == "diff" || name == "-") return SetOp::diff;
  if (name == "prod" || name == "*") return SetOp::prod;
  if (name == "ratio" || name == "/") return SetOp::ratio;
  throw Error(ErrorKind::InvalidArgument,
              "unknown set operation '" + std::string(name) + "'");
}

FpSet combine(const FpSet& a, const FpSet& b, SetOp op) {
  if (!(a.prime() == b.prime())) {
    throw Error(ErrorKind::InvalidArgument, "sets live over different primes");
  }
  const Prime& p = a.prime();
  Bitset out(p.value());
  switch (op) {
    case SetOp::sum:
      for (u32 x : a.elements())
        for (u32 y : b.elements()) out.set(p.add(x, y));
      break;
    case SetOp::diff:
      for (u32 x : a.elements())
        for (u32 y : b.elements()) out.set(p.sub(x, y));
      break;
    case SetOp::prod:
      for (u32 x : a.elements())
        for (u32 y : b.elements()) out.set(p.mul(x, y));
      break;
    case SetOp::ratio: {
      bool any = false;
      for (u32 y : b.elements()) {
        if (y == 0) continue;
        any = true;
        const u32 yi = p.inv(y);
        for (u32 x : a.elements()) out.set(p.mul(x, yi));
      }
      if (!any && !a.empty()) {
        throw Error(ErrorKind::EmptyResult, "ratio set with B = {0}");
      }
      break;
    }
  }
  return FpSet(p, out);
}

FpSet dilate_translate(const FpSet& a, Elem lambda, Elem mu) {
  const Prime& p = a.prime();
  if (p.reduce(lambda.value) == 0) {
    throw Error(ErrorKind::ZeroDilation, "dilation by 0");
  }
  std::vector<u32> out;
  out.reserve(a.size());
  for (u32 x : a.elements()) out.push_back(p.add(p.mul(lambda.value, x), mu.value));
  return FpSet(p, std::move(out));
}

FpSet invert_elements(const FpSet& a) {
  const Prime& p = a.prime();
  std::vector<u32> out;
  out.reserve(a.size());
  for (u32 x : a.elements()) {
    if (x != 0) out.push_back(p.inv(x));
  }
  return FpSet(p, std::move(out));
}

std::string set_to_json(const FpSet& set) {
  nlohmann::json j;
  j["p"] = set.modulus();
  j["elements"] = std::vector<u32>(set.elements().begin(), set.elements().end());
  return j.dump() + "\n";
}

FpSet set_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return FpSet(Prime(j.at("p").get<u64>()),
                 j.at("elements").get<std::vector<u32>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("set file: ") + e.what());
  }
}

void save_set(const FpSet& set, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << set_to_json(set);
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path.string());
}

FpSet load_set(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return set_from_json(buf.str());
}

}  // namespace sumprod
