#include "argus/evidence/evidence.hpp"

#include <cstdio>

namespace argus::evidence {

namespace {

int digits(std::string_view text, std::size_t pos, std::size_t count, std::string_view original) {
    if (pos + count > text.size()) {
        throw Error("invalid timestamp (truncated): " + std::string(original));
    }
    int value = 0;
    for (std::size_t i = pos; i < pos + count; ++i) {
        char c = text[i];
        if (c < '0' || c > '9') {
            throw Error("invalid timestamp: " + std::string(original));
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

void expect(std::string_view text, std::size_t pos, char c, std::string_view original) {
    if (pos >= text.size() || text[pos] != c) {
        throw Error("invalid timestamp: " + std::string(original));
    }
}

}  // namespace

Timestamp Timestamp::parse(std::string_view text) {
    using namespace std::chrono;
    int y = digits(text, 0, 4, text);
    expect(text, 4, '-', text);
    int mo = digits(text, 5, 2, text);
    expect(text, 7, '-', text);
    int d = digits(text, 8, 2, text);
    if (text.size() <= 10 || (text[10] != 'T' && text[10] != 't')) {
        throw Error("invalid timestamp (expected date-time): " + std::string(text));
    }
    int h = digits(text, 11, 2, text);
    expect(text, 13, ':', text);
    int mi = digits(text, 14, 2, text);
    expect(text, 16, ':', text);
    int s = digits(text, 17, 2, text);
    std::size_t pos = 19;

    long nanos = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        long scale = 100000000;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            if (scale > 0) {
                nanos += (text[pos] - '0') * scale;
                scale /= 10;
            }
            ++pos;
        }
        if (pos == start) {
            throw Error("invalid timestamp fraction: " + std::string(text));
        }
    }

    int offset_minutes = 0;
    if (pos < text.size() && (text[pos] == 'Z' || text[pos] == 'z')) {
        ++pos;
    } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        int sign = text[pos] == '-' ? -1 : 1;
        int oh = digits(text, pos + 1, 2, text);
        expect(text, pos + 3, ':', text);
        int om = digits(text, pos + 4, 2, text);
        if (oh > 23 || om > 59) {
            throw Error("invalid timestamp offset: " + std::string(text));
        }
        offset_minutes = sign * (oh * 60 + om);
        pos += 6;
    } else {
        throw Error("timestamp needs a 'Z' or numeric offset: " + std::string(text));
    }
    if (pos != text.size()) {
        throw Error("trailing characters in timestamp: " + std::string(text));
    }

    year_month_day date{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
    if (!date.ok() || h > 23 || mi > 59 || s > 59) {
        throw Error("timestamp out of range: " + std::string(text));
    }
    Timestamp out;
    out.seconds_ = sys_days{date} + hours{h} + minutes{mi} + std::chrono::seconds{s} - minutes{offset_minutes};
    out.nanos_ = nanos;
    return out;
}

Timestamp Timestamp::now() {
    using namespace std::chrono;
    auto t = system_clock::now();
    Timestamp out;
    out.seconds_ = floor<std::chrono::seconds>(t);
    return out;
}

std::string Timestamp::to_string() const {
    using namespace std::chrono;
    auto days = floor<std::chrono::days>(seconds_);
    year_month_day date{days};
    hh_mm_ss time{seconds_ - days};
    char buf[64];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ld", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()),
                  static_cast<long>(time.hours().count()), static_cast<long>(time.minutes().count()),
                  static_cast<long>(time.seconds().count()));
    std::string out = buf;
    if (nanos_ != 0) {
        std::snprintf(buf, sizeof buf, ".%09ld", nanos_);
        std::string frac = buf;
        while (frac.back() == '0') {
            frac.pop_back();
        }
        out += frac;
    }
    return out + "Z";
}

}  // namespace argus::evidence
