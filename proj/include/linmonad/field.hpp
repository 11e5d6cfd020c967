#pragma once

#include <concepts>
#include <random>
#include <string>
#include <string_view>

namespace linmonad {

/// Per-field customization point. Specializations provide:
///   Info                         runtime field descriptor (modulus etc.)
///   static Info info(const K&);
///   static K zero(Info), one(Info), from_int(Info, long long);
///   static K parse(Info, std::string_view);   // coefficient syntax of the JSON format
///   static std::string to_string(const K&);
///   static K random(Info, std::mt19937_64&);  // uniform draw used by samplers
///   static std::string name(Info);
///   static constexpr bool fraction_free;      // use Bareiss-style elimination
template <class K>
struct FieldTraits;

template <class K>
using FieldInfo = typename FieldTraits<K>::Info;

template <class K>
concept Field = requires(const K a, const K b, FieldInfo<K> fi, std::mt19937_64 rng) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { FieldTraits<K>::zero(fi) } -> std::convertible_to<K>;
  { FieldTraits<K>::one(fi) } -> std::convertible_to<K>;
  { FieldTraits<K>::info(a) } -> std::convertible_to<FieldInfo<K>>;
};

}  // namespace linmonad
