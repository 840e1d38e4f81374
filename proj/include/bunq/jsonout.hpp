#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bunq/bigint.hpp"

namespace bunq {

/// Append-only JSON writer producing one compact, byte-stable document.
/// Keys are written in call order; integers of any size are written as bare
/// decimal numbers, never in scientific notation.
class JsonOut {
  public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(std::string_view k);
    void value(std::string_view s);
    void value(const char* s) { value(std::string_view(s)); }
    void value(const Int& n);
    void value(long long n);
    void value(int n) { value(static_cast<long long>(n)); }
    void value(bool b);
    void value_null();

    const std::string& str() const { return out_; }

  private:
    void comma();
    void raw(std::string_view s);
    void quoted(std::string_view s);

    std::string out_;
    // one frame per open container: true after the first element
    std::vector<bool> has_elem_;
    bool pending_key_ = false;
};

} // namespace bunq
