#include "limbforge/caps.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

#include "limbforge/errors.hpp"

namespace limbforge {

namespace {

std::size_t parse_value(const std::string& key, const std::string& text) {
  if (text.empty()) throw InvalidArgument("caps: empty value for " + key);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("caps: bad value for " + key + ": " + text);
  }
  if (used != text.size()) throw InvalidArgument("caps: bad value for " + key + ": " + text);
  return static_cast<std::size_t>(v);
}

std::mutex g_mu;
Caps* g_caps = nullptr;

}  // namespace

Caps parse_caps(const std::string& spec) {
  Caps c;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("caps: expected key=value, got " + item);
    std::string key = item.substr(0, eq);
    std::size_t v = parse_value(key, item.substr(eq + 1));
    if (key == "oracle") c.oracle_n = v;
    else if (key == "orbit") c.orbit_n = v;
    else if (key == "orbit_size") c.orbit_size = v;
    else if (key == "vm_states") c.vm_states = v;
    else if (key == "extension") c.extension_n = v;
    else if (key == "pw_brute") c.pw_brute_n = v;
    else if (key == "bag_orbit") c.bag_orbit_states = v;
    else if (key == "catalog") c.catalog_members = v;
    else throw InvalidArgument("caps: unknown key " + key);
  }
  return c;
}

const Caps& caps() {
  std::lock_guard<std::mutex> lock(g_mu);
  if (!g_caps) {
    const char* env = std::getenv("LIMBFORGE_CAPS");
    g_caps = new Caps(env ? parse_caps(env) : Caps{});
  }
  return *g_caps;
}

void set_caps(const Caps& c) {
  std::lock_guard<std::mutex> lock(g_mu);
  // Old values are leaked on purpose: references handed out stay valid.
  g_caps = new Caps(c);
}

}  // namespace limbforge
