#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "toposbench/category.hpp"
#include "toposbench/presheaf.hpp"

namespace toposbench::io {

// A model file: an optional category, named monoids, and presheaves over
// either ("base": "category" or a monoid name), plus named morphisms and
// subobjects between them.
struct Model {
  CategoryRef category;
  std::map<std::string, FinMonoid> monoids;
  std::map<std::string, CategoryRef> monoid_bases;
  std::map<std::string, PresheafRef> presheaves;
  std::map<std::string, std::string> presheaf_bases;
  std::map<std::string, NatTrans> morphisms;
  std::map<std::string, std::string> morphism_ends;  // name -> "source->target"
  std::map<std::string, Subfunctor> subobjects;
  std::map<std::string, std::string> subobject_hosts;

  // "category" or a monoid name. Throws UnknownObject.
  CategoryRef base(const std::string& key) const;
  PresheafRef presheaf(const std::string& name) const;
  const NatTrans& morphism(const std::string& name) const;
  const Subfunctor& subobject(const std::string& name) const;
};

// Throws MalformedInput for bad JSON, unknown keys or dangling references;
// law violations raise their own codes.
Model parse_model(std::string_view text);
Model load_model(const std::filesystem::path& path);

// Canonical form: sorted keys, every table spelled out, two-space indent.
std::string serialize_model(const Model& model);

std::string read_file(const std::filesystem::path& path);

}  // namespace toposbench::io
