#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nuore/maps.hpp"
#include "nuore/ore.hpp"
#include "nuore/ring.hpp"

namespace nuore {

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline I64 parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    I64 v = std::stoll(trim(s), &pos);
    if (pos != trim(s).size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + trim(s) + "'");
  }
}

inline Rat parse_rat(const std::string& s, int line) {
  std::string t = trim(s);
  try {
    if (t.empty()) throw std::invalid_argument("empty");
    return Rat(t);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a rational, got '" + t + "'");
  }
}

}  // namespace detail

// Element syntax by backend:
//   finite table:  comma-separated generator coordinates      "1,0"
//   Z/n:           one integer                                 "5"
//   rationals:     p or p/q                                    "-3/4"
//   M_inf:         '+'-joined units "E i j" or "E i j=q"       "E 1 2=1/2+E 3 3"
//   matrix:        row-major comma-separated base elements     "0,1,0,0"
//   polynomial:    comma-separated base coefficients, low-to-high
//   unitalized:    "(base | n)"
inline Element parse_element(const RingPtr& ring, const std::string& text,
                             int line = 0) {
  const std::string t = detail::trim(text);
  switch (ring->backend()) {
    case Ring::Backend::FiniteTable: {
      std::vector<I64> coords;
      for (const auto& part : detail::split(t, ','))
        coords.push_back(detail::parse_int(part, line));
      if (coords.size() != ring->addgroup_moduli().size())
        throw ParseError(line, "expected " +
                                   std::to_string(ring->addgroup_moduli().size()) +
                                   " coordinates");
      return ring->element_from_coords(coords);
    }
    case Ring::Backend::ZMod:
      return ring->element_from_coords({detail::parse_int(t, line)});
    case Ring::Backend::Rationals:
      return el_rat(ring, detail::parse_rat(t, line));
    case Ring::Backend::MInf: {
      std::vector<std::tuple<I64, I64, Rat>> terms;
      if (t == "0") return ring->zero();
      for (const auto& term : detail::split(t, '+')) {
        std::string u = detail::trim(term);
        if (u.empty() || u[0] != 'E')
          throw ParseError(line, "expected a unit term 'E i j[=q]', got '" + u + "'");
        std::string rest = u.substr(1);
        Rat val(1);
        if (auto eq = rest.find('='); eq != std::string::npos) {
          val = detail::parse_rat(rest.substr(eq + 1), line);
          rest = rest.substr(0, eq);
        }
        std::istringstream is(rest);
        I64 i = 0, j = 0;
        if (!(is >> i >> j)) throw ParseError(line, "unit term needs two indices");
        terms.emplace_back(i, j, val);
      }
      return el_minf(ring, terms);
    }
    case Ring::Backend::Matrix: {
      const auto& d = ring->matrix();
      std::vector<Element> entries;
      for (const auto& part : detail::split(t, ','))
        entries.push_back(parse_element(d.base, part, line));
      if (entries.size() != static_cast<std::size_t>(d.size) * d.size)
        throw ParseError(line, "expected " + std::to_string(d.size * d.size) +
                                   " matrix entries");
      return el_matrix(ring, std::move(entries));
    }
    case Ring::Backend::Poly: {
      const auto& base = ring->poly().base;
      if (base->backend() == Ring::Backend::FiniteTable ||
          base->backend() == Ring::Backend::Matrix)
        throw ParseError(line,
                         "polynomial coefficients whose own syntax uses commas are "
                         "not supported in files");
      std::vector<Element> coeffs;
      for (const auto& part : detail::split(t, ','))
        coeffs.push_back(parse_element(base, part, line));
      return el_poly(ring, std::move(coeffs));
    }
    case Ring::Backend::Unitalized: {
      if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError(line, "expected '(base | n)'");
      auto parts = detail::split(t.substr(1, t.size() - 2), '|');
      if (parts.size() != 2) throw ParseError(line, "expected '(base | n)'");
      Element r = parse_element(ring->unitalized().base, parts[0], line);
      return el_pair(ring, r, Int(detail::parse_int(parts[1], line)));
    }
    default:
      throw ParseError(line, "no element syntax for this backend");
  }
}

// ';'-separated x-coefficients, low-to-high, each in the ring element syntax
inline OrePoly parse_ore_poly(const OrePtr& ctx, const std::string& text,
                              int line = 0) {
  std::vector<Element> coeffs;
  for (const auto& part : detail::split(text, ';'))
    coeffs.push_back(parse_element(ctx->ring, part, line));
  return ore_from_coeffs(ctx, std::move(coeffs));
}

struct ParsedContext {
  std::map<std::string, RingPtr> named;
  RingPtr ring;  // last declared ring
  MapPtr sigma;  // defaults to identity
  MapPtr delta;  // defaults to zero
};

// One declaration per line, '#' starts a comment.
//   ring finite orders=2,2 [name=<id>]   followed by "mul gi gj = coords" lines
//   ring zmod n=<N> [name=<id>]
//   ring matrix base=<name|prev> size=<k> [name=<id>]
//   ring minf base=Q | base=Fp p=<prime> [name=<id>]
//   ring poly base=<name|prev> var=<symbol> [name=<id>]
//   ring rationals [name=<id>]
//   map sigma identity | map sigma table 1-><el> 2-><el> ...
//   map delta zero | map delta dpoly | map delta inner a=<el> | map delta table ...
inline ParsedContext parse_description_text(const std::string& text) {
  ParsedContext out;

  struct PendingFinite {
    std::vector<I64> orders;
    std::vector<std::vector<std::vector<I64>>> table;
    std::vector<std::vector<bool>> seen;
    std::string name;
    int line = 0;
  };
  std::optional<PendingFinite> pending;
  int ring_count = 0;

  auto finish_pending = [&]() {
    if (!pending) return;
    for (std::size_t i = 0; i < pending->orders.size(); ++i)
      for (std::size_t j = 0; j < pending->orders.size(); ++j)
        if (!pending->seen[i][j])
          throw ParseError(pending->line, "missing product g" + std::to_string(i + 1) +
                                              " g" + std::to_string(j + 1));
    RingPtr r = make_finite_table(pending->orders, pending->table);
    if (!pending->name.empty()) out.named[pending->name] = r;
    out.ring = r;
    pending.reset();
  };

  auto attr = [](const std::vector<std::string>& toks, const std::string& key)
      -> std::optional<std::string> {
    for (const auto& t : toks)
      if (t.rfind(key + "=", 0) == 0) return t.substr(key.size() + 1);
    return std::nullopt;
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string word;
    ls >> word;

    if (word == "mul") {
      if (!pending) throw ParseError(lineno, "'mul' outside a finite ring block");
      std::string gi, gj, eq;
      ls >> gi >> gj >> eq;
      std::string rhs;
      std::getline(ls, rhs);
      if (gi.size() < 2 || gi[0] != 'g' || gj.size() < 2 || gj[0] != 'g' || eq != "=")
        throw ParseError(lineno, "expected 'mul gi gj = coords'");
      std::size_t i = static_cast<std::size_t>(detail::parse_int(gi.substr(1), lineno));
      std::size_t j = static_cast<std::size_t>(detail::parse_int(gj.substr(1), lineno));
      if (i < 1 || j < 1 || i > pending->orders.size() || j > pending->orders.size())
        throw ParseError(lineno, "generator index out of range");
      std::vector<I64> coords;
      for (const auto& part : detail::split(detail::trim(rhs), ','))
        coords.push_back(detail::parse_int(part, lineno));
      if (coords.size() != pending->orders.size())
        throw ParseError(lineno, "product needs " +
                                     std::to_string(pending->orders.size()) +
                                     " coordinates");
      pending->table[i - 1][j - 1] = coords;
      pending->seen[i - 1][j - 1] = true;
      continue;
    }

    if (word == "ring") {
      finish_pending();
      std::string kind;
      ls >> kind;
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      auto name = attr(toks, "name").value_or("");
      ++ring_count;

      auto lookup_base = [&](const std::string& ref) -> RingPtr {
        if (ref == "prev") {
          if (!out.ring) throw ParseError(lineno, "base=prev before any ring");
          return out.ring;
        }
        auto it = out.named.find(ref);
        if (it == out.named.end())
          throw ParseError(lineno, "unknown ring reference '" + ref + "'");
        return it->second;
      };

      RingPtr r;
      if (kind == "finite") {
        auto orders = attr(toks, "orders");
        if (!orders) throw ParseError(lineno, "ring finite needs orders=");
        PendingFinite p;
        for (const auto& part : detail::split(*orders, ','))
          p.orders.push_back(detail::parse_int(part, lineno));
        const std::size_t k = p.orders.size();
        p.table.assign(k, std::vector<std::vector<I64>>(k, std::vector<I64>(k, 0)));
        p.seen.assign(k, std::vector<bool>(k, false));
        p.name = name;
        p.line = lineno;
        pending = std::move(p);
        continue;
      } else if (kind == "zmod") {
        auto n = attr(toks, "n");
        if (!n) throw ParseError(lineno, "ring zmod needs n=");
        r = make_zmod(detail::parse_int(*n, lineno));
      } else if (kind == "rationals") {
        r = make_rationals();
      } else if (kind == "matrix") {
        auto base = attr(toks, "base");
        auto size = attr(toks, "size");
        if (!base || !size) throw ParseError(lineno, "ring matrix needs base= and size=");
        r = make_matrix(lookup_base(*base),
                        static_cast<int>(detail::parse_int(*size, lineno)));
      } else if (kind == "minf") {
        auto base = attr(toks, "base");
        if (!base) throw ParseError(lineno, "ring minf needs base=Q or base=Fp");
        if (*base == "Q") {
          r = make_minf_q();
        } else if (*base == "Fp") {
          auto p = attr(toks, "p");
          if (!p) throw ParseError(lineno, "ring minf base=Fp needs p=");
          r = make_minf_fp(detail::parse_int(*p, lineno));
        } else {
          throw ParseError(lineno, "minf base must be Q or Fp");
        }
      } else if (kind == "poly") {
        auto base = attr(toks, "base");
        auto var = attr(toks, "var");
        if (!base || !var) throw ParseError(lineno, "ring poly needs base= and var=");
        r = make_poly(lookup_base(*base), *var);
      } else {
        throw ParseError(lineno, "unknown ring kind '" + kind + "'");
      }
      if (!name.empty()) out.named[name] = r;
      out.ring = r;
      continue;
    }

    if (word == "map") {
      finish_pending();
      if (!out.ring) throw ParseError(lineno, "map before any ring");
      std::string which, kind;
      ls >> which >> kind;
      if (which != "sigma" && which != "delta")
        throw ParseError(lineno, "map must be sigma or delta");
      MapPtr m;
      if (kind == "identity") {
        m = map_identity(out.ring);
      } else if (kind == "zero") {
        m = map_zero(out.ring);
      } else if (kind == "dpoly") {
        m = map_formal_derivative(out.ring);
      } else if (kind == "inner") {
        std::string rest;
        std::getline(ls, rest);
        rest = detail::trim(rest);
        if (rest.rfind("a=", 0) != 0) throw ParseError(lineno, "map inner needs a=");
        m = map_inner(out.ring, parse_element(out.ring, rest.substr(2), lineno));
      } else if (kind == "table") {
        const std::size_t k = out.ring->addgroup_moduli().size();
        std::vector<Element> images(k, out.ring->zero());
        std::vector<bool> seen(k, false);
        std::string tok;
        while (ls >> tok) {
          auto arrow = tok.find("->");
          if (arrow == std::string::npos)
            throw ParseError(lineno, "table map entries look like i-><element>");
          std::size_t i = static_cast<std::size_t>(
              detail::parse_int(tok.substr(0, arrow), lineno));
          if (i < 1 || i > k) throw ParseError(lineno, "generator index out of range");
          images[i - 1] = parse_element(out.ring, tok.substr(arrow + 2), lineno);
          seen[i - 1] = true;
        }
        for (std::size_t i = 0; i < k; ++i)
          if (!seen[i])
            throw ParseError(lineno, "table map missing image of generator " +
                                         std::to_string(i + 1));
        m = map_table(out.ring, std::move(images));
      } else {
        throw ParseError(lineno, "unknown map kind '" + kind + "'");
      }
      (which == "sigma" ? out.sigma : out.delta) = m;
      continue;
    }

    throw ParseError(lineno, "unknown declaration '" + word + "'");
  }
  finish_pending();
  if (!out.ring) throw ParseError(lineno, "no ring declared");
  if (!out.sigma) out.sigma = map_identity(out.ring);
  if (!out.delta) out.delta = map_zero(out.ring);
  if (out.sigma->ring() != out.ring || out.delta->ring() != out.ring)
    throw ParseError(lineno, "maps must be declared after the main (last) ring");
  return out;
}

inline ParsedContext parse_description_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_description_text(ss.str());
}

}  // namespace nuore
