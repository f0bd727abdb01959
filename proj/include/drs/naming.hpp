#pragma once

// Variable naming schemes for sequence models.
//
// Absolute: boxes become $k (main box $0, others $1.. by first occurrence),
// entities @k by first occurrence.
//
// Relative: every variable occurrence is written relative to the sequence of
// introductions of its class. A box is introduced at its first mention, an
// entity at the referent position of its first REF clause. An introduction is
// written bNEW / eNEW; any other occurrence is b<k> / e<k> with
// k = (introduction index of the variable) - (index of the latest introduction
// so far). 0 is the latest introduction, negative earlier, positive forward.

#include <charconv>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "drs/checker.hpp"
#include "drs/clause.hpp"
#include "drs/errors.hpp"

namespace drs {

enum class NamingScheme : std::uint8_t { Standard, Absolute, Relative };

namespace detail {

/// Calls f(name) for every variable occurrence in clause order, box label first.
template <typename F>
void for_each_var(const Clause& c, F&& f) {
  f(c.box);
  for (const Term& t : c.args)
    if (t.is_var()) f(t.text);
}

template <typename F>
ClausalForm rename_vars(const ClausalForm& form, F&& f) {
  ClausalForm out = form;
  for (Clause& c : out.clauses) {
    c.box = f(c.box);
    for (Term& t : c.args)
      if (t.is_var()) t.text = f(t.text);
  }
  return out;
}

}  // namespace detail

inline ClausalForm rename_absolute(const ClausalForm& form) {
  const CheckReport report = check(form);
  if (!report.valid()) {
    throw RequiresValidForm("absolute naming needs a valid form: " + std::string(reason_name(*report.reason)));
  }
  std::map<std::string, std::string, std::less<>> names;
  names.emplace(*report.main_box, "$0");
  int boxes = 0, entities = 0;
  for (const Clause& c : form.clauses) {
    detail::for_each_var(c, [&](const std::string& v) {
      if (names.contains(v)) return;
      names.emplace(v, report.typing.is_box(v) ? "$" + std::to_string(++boxes) : "@" + std::to_string(++entities));
    });
  }
  return detail::rename_vars(form, [&](const std::string& v) { return names.at(v); });
}

/// `$k` -> `bk`, `@k` -> `xk`.
inline ClausalForm restore_absolute(const ClausalForm& encoded) {
  return detail::rename_vars(encoded, [](const std::string& v) {
    const bool digits = v.size() > 1 && std::all_of(v.begin() + 1, v.end(), detail::is_digit);
    if (digits && v.front() == '$') return "b" + v.substr(1);
    if (digits && v.front() == '@') return "x" + v.substr(1);
    throw MalformedRelativeToken("not an absolute variable: '" + v + "'");
  });
}

inline ClausalForm rename_relative(const ClausalForm& form) {
  const TypingTable typing = induce_types(form);
  // Entity introductions: referent of the first REF clause for that entity.
  std::map<std::string, std::size_t, std::less<>> entity_intro_clause;
  for (std::size_t i = 0; i < form.clauses.size(); ++i) {
    const Clause& c = form.clauses[i];
    if (c.kind == ClauseKind::Ref) entity_intro_clause.try_emplace(c.args[0].text, i);
  }

  // Introduction order per class, needed up front for forward references.
  std::map<std::string, long, std::less<>> order;
  long box_count = 0, entity_count = 0;
  // A REF-less entity (invalid form) is introduced at its first mention.
  auto introduces = [&](std::size_t clause, std::size_t field, const std::string& v, bool known) {
    if (known) return false;
    auto it = entity_intro_clause.find(v);
    if (typing.is_box(v) || it == entity_intro_clause.end()) return true;
    return it->second == clause && field == 1;
  };
  for (std::size_t i = 0; i < form.clauses.size(); ++i) {
    std::size_t field = 0;
    detail::for_each_var(form.clauses[i], [&](const std::string& v) {
      if (introduces(i, field++, v, order.contains(v))) order.emplace(v, typing.is_box(v) ? box_count++ : entity_count++);
    });
  }

  std::set<std::string, std::less<>> seen;
  long boxes_so_far = 0, entities_so_far = 0;
  ClausalForm out = form;
  for (std::size_t i = 0; i < out.clauses.size(); ++i) {
    std::size_t field = 0;
    auto encode = [&](std::string& v) {
      const bool box = typing.is_box(v);
      const char prefix = box ? 'b' : 'e';
      long& so_far = box ? boxes_so_far : entities_so_far;
      if (introduces(i, field, v, seen.contains(v))) {
        seen.insert(v);
        ++so_far;
        v = std::string(1, prefix) + "NEW";
      } else {
        v = prefix + std::to_string(order.at(v) - (so_far - 1));
      }
      ++field;
    };
    Clause& c = out.clauses[i];
    encode(c.box);
    for (Term& t : c.args)
      if (t.is_var()) encode(t.text);
  }
  return out;
}

struct RelativeToken {
  VarType var_class = VarType::Entity;
  bool is_new = false;
  long offset = 0;
};

inline RelativeToken parse_relative_token(std::string_view token) {
  auto bad = [&] { return MalformedRelativeToken("malformed relative variable '" + std::string(token) + "'"); };
  if (token.size() < 2 || (token.front() != 'b' && token.front() != 'e')) throw bad();
  RelativeToken out;
  out.var_class = token.front() == 'b' ? VarType::Box : VarType::Entity;
  const std::string_view rest = token.substr(1);
  if (rest == "NEW") {
    out.is_new = true;
    return out;
  }
  const char* first = rest.data();
  const char* last = rest.data() + rest.size();
  auto [ptr, ec] = std::from_chars(first, last, out.offset);
  if (ec != std::errc() || ptr != last || rest.front() == '+') throw bad();
  return out;
}

/// Inverse of rename_relative. Introductions are named b0, b1, ... and
/// x0, x1, ... in order.
inline ClausalForm restore_relative(const ClausalForm& encoded) {
  long box_total = 0, entity_total = 0;
  for (const Clause& c : encoded.clauses) {
    detail::for_each_var(c, [&](const std::string& v) {
      const RelativeToken t = parse_relative_token(v);
      if (t.is_new) ++(t.var_class == VarType::Box ? box_total : entity_total);
    });
  }
  long boxes = 0, entities = 0;
  auto decode = [&](const std::string& v) {
    const RelativeToken t = parse_relative_token(v);
    const bool box = t.var_class == VarType::Box;
    long& so_far = box ? boxes : entities;
    const long total = box ? box_total : entity_total;
    long index;
    if (t.is_new) {
      index = so_far++;
    } else {
      index = so_far - 1 + t.offset;
      if (index < 0 || index >= total) {
        throw UnresolvableOffset("UnresolvableOffset: '" + v + "' points outside the " + std::to_string(total) +
                                 " introductions");
      }
    }
    return (box ? "b" : "x") + std::to_string(index);
  };
  return detail::rename_vars(encoded, decode);
}

inline ClausalForm rename(const ClausalForm& form, NamingScheme scheme) {
  switch (scheme) {
    case NamingScheme::Absolute: return rename_absolute(form);
    case NamingScheme::Relative: return rename_relative(form);
    default: return form;
  }
}

inline ClausalForm restore(const ClausalForm& encoded, NamingScheme scheme) {
  switch (scheme) {
    case NamingScheme::Absolute: return restore_absolute(encoded);
    case NamingScheme::Relative: return restore_relative(encoded);
    default: return encoded;
  }
}

}  // namespace drs
