#include "bunq/jsonout.hpp"

#include <fmt/format.h>

#include "bunq/errors.hpp"

namespace bunq {

void JsonOut::comma()
{
    if (pending_key_)
        return;
    if (!has_elem_.empty()) {
        if (has_elem_.back())
            out_ += ',';
        has_elem_.back() = true;
    }
}

void JsonOut::raw(std::string_view s)
{
    out_ += s;
}

void JsonOut::quoted(std::string_view s)
{
    out_ += '"';
    for (const char c : s) {
        switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\r': out_ += "\\r"; break;
        case '\t': out_ += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20)
                out_ += fmt::format("\\u{:04x}", static_cast<unsigned char>(c));
            else
                out_ += c;
        }
    }
    out_ += '"';
}

void JsonOut::begin_object()
{
    comma();
    pending_key_ = false;
    raw("{");
    has_elem_.push_back(false);
}

void JsonOut::end_object()
{
    if (has_elem_.empty())
        throw InternalError("json: end_object without begin_object");
    has_elem_.pop_back();
    raw("}");
}

void JsonOut::begin_array()
{
    comma();
    pending_key_ = false;
    raw("[");
    has_elem_.push_back(false);
}

void JsonOut::end_array()
{
    if (has_elem_.empty())
        throw InternalError("json: end_array without begin_array");
    has_elem_.pop_back();
    raw("]");
}

void JsonOut::key(std::string_view k)
{
    comma();
    quoted(k);
    raw(":");
    pending_key_ = true;
}

void JsonOut::value(std::string_view s)
{
    comma();
    pending_key_ = false;
    quoted(s);
}

void JsonOut::value(const Int& n)
{
    comma();
    pending_key_ = false;
    raw(n.str());
}

void JsonOut::value(long long n)
{
    comma();
    pending_key_ = false;
    raw(fmt::format("{}", n));
}

void JsonOut::value(bool b)
{
    comma();
    pending_key_ = false;
    raw(b ? "true" : "false");
}

void JsonOut::value_null()
{
    comma();
    pending_key_ = false;
    raw("null");
}

} // namespace bunq
