#include "techtrend/ingest.hpp"

#include <fcntl.h>
#include <unistd.h>
#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "techtrend/errors.hpp"

namespace techtrend {

namespace {

// ---------------------------------------------------------------------
// buffered scanner over an istream with absolute offset tracking
// ---------------------------------------------------------------------
class StreamScanner {
public:
    explicit StreamScanner(std::istream& in) : in_(in) { buf_.reserve(kChunk * 2); }

    // absolute offset of buf_[pos_]
    std::uint64_t offset() const { return base_ + pos_; }
    std::size_t buffered() const { return buf_.size() - pos_; }

    bool ensure(std::size_t n) {
        while (buffered() < n) {
            if (!fill()) return false;
        }
        return true;
    }

    char peek_at(std::size_t i) const { return buf_[pos_ + i]; }
    void advance(std::size_t n) { pos_ += n; }

    // discards consumed bytes; keeps memory bounded between records
    void compact() {
        if (pos_ == 0) return;
        buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(pos_));
        base_ += pos_;
        pos_ = 0;
    }

    bool fill() {
        if (eof_) return false;
        if (buf_.size() > kMaxRecord)
            throw ParseError("record exceeds maximum size", base_ + pos_);
        std::size_t old = buf_.size();
        buf_.resize(old + kChunk);
        in_.read(buf_.data() + old, kChunk);
        std::size_t got = static_cast<std::size_t>(in_.gcount());
        buf_.resize(old + got);
        if (got == 0) eof_ = true;
        return got > 0;
    }

    std::size_t buffer_capacity() const { return buf_.capacity(); }

    static constexpr std::size_t kChunk = 64 * 1024;
    static constexpr std::size_t kMaxRecord = 64 * 1024 * 1024;

private:
    std::istream& in_;
    std::string buf_;
    std::size_t pos_ = 0;
    std::uint64_t base_ = 0;
    bool eof_ = false;
};

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == ':' || c == '.';
}

}  // namespace

std::int64_t xml_entity_decode(std::string_view in, std::string& out) {
    out.clear();
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        char c = in[i];
        if (c != '&') {
            out += c;
            ++i;
            continue;
        }
        std::size_t semi = in.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) return static_cast<std::int64_t>(i);
        std::string_view ent = in.substr(i + 1, semi - i - 1);
        if (ent == "lt") out += '<';
        else if (ent == "gt") out += '>';
        else if (ent == "amp") out += '&';
        else if (ent == "quot") out += '"';
        else if (ent == "apos") out += '\'';
        else if (!ent.empty() && ent[0] == '#') {
            std::uint32_t code = 0;
            bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
            std::string_view digits = ent.substr(hex ? 2 : 1);
            if (digits.empty()) return static_cast<std::int64_t>(i);
            auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), code,
                                           hex ? 16 : 10);
            if (ec != std::errc() || p != digits.data() + digits.size())
                return static_cast<std::int64_t>(i);
            // encode as UTF-8
            if (code < 0x80) out += static_cast<char>(code);
            else if (code < 0x800) {
                out += static_cast<char>(0xC0 | (code >> 6));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else if (code < 0x10000) {
                out += static_cast<char>(0xE0 | (code >> 12));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else {
                out += static_cast<char>(0xF0 | (code >> 18));
                out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            }
        } else {
            return static_cast<std::int64_t>(i);
        }
        i = semi + 1;
    }
    return -1;
}

std::vector<std::string> split_tags(std::string_view decoded) {
    std::vector<std::string> tags;
    std::size_t i = 0;
    while (i < decoded.size()) {
        if (decoded[i] != '<') {  // tolerate stray separators
            ++i;
            continue;
        }
        std::size_t close = decoded.find('>', i + 1);
        if (close == std::string_view::npos) break;
        std::string tag(decoded.substr(i + 1, close - i - 1));
        for (char& c : tag) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (!tag.empty()) tags.push_back(std::move(tag));
        i = close + 1;
    }
    return tags;
}

namespace {

struct RawAttr {
    std::string name;
    std::string value;
};

// Scans one element starting at '<'. Returns:
//   1  row element parsed, attrs filled
//   0  non-row element skipped
// Throws ParseError on EOF inside the element.
int scan_element(StreamScanner& sc, std::vector<RawAttr>& attrs, bool& attr_syntax_ok) {
    const std::uint64_t elem_off = sc.offset();
    std::size_t i = 1;  // past '<'
    auto need = [&](std::size_t n) {
        if (!sc.ensure(n))
            throw ParseError("unexpected end of input inside element", elem_off);
    };
    need(2);

    // element name
    std::string name;
    if (sc.peek_at(i) == '/' || sc.peek_at(i) == '?' || sc.peek_at(i) == '!') {
        // closing tag, declaration or comment: skip to '>' ("-->" for comments)
        bool comment = false;
        if (sc.peek_at(i) == '!') {
            need(4);
            comment = sc.peek_at(2) == '-' && sc.peek_at(3) == '-';
        }
        std::size_t dashes = 0;
        while (true) {
            need(i + 1);
            char c = sc.peek_at(i);
            if (c == '>' && (!comment || dashes >= 2)) {
                sc.advance(i + 1);
                return 0;
            }
            dashes = (c == '-') ? dashes + 1 : 0;
            ++i;
        }
    }
    while (true) {
        need(i + 1);
        char c = sc.peek_at(i);
        if (!is_name_char(c)) break;
        name += c;
        ++i;
    }

    bool is_row = (name == "row");
    attrs.clear();
    attr_syntax_ok = true;

    // attributes until '/>' or '>'
    while (true) {
        need(i + 1);
        while (is_ws(sc.peek_at(i))) {
            ++i;
            need(i + 1);
        }
        char c = sc.peek_at(i);
        if (c == '>') {
            sc.advance(i + 1);
            return is_row ? 1 : 0;
        }
        if (c == '/') {
            need(i + 2);
            if (sc.peek_at(i + 1) == '>') {
                sc.advance(i + 2);
                return is_row ? 1 : 0;
            }
            attr_syntax_ok = false;
            ++i;
            continue;
        }
        // attribute name
        std::string aname;
        while (is_name_char(sc.peek_at(i))) {
            aname += sc.peek_at(i);
            ++i;
            need(i + 1);
        }
        if (aname.empty() || sc.peek_at(i) != '=') {
            // bad attribute syntax: resynchronize at the next '>' outside quotes
            attr_syntax_ok = false;
            while (sc.peek_at(i) != '>') {
                if (sc.peek_at(i) == '"' || sc.peek_at(i) == '\'') {
                    char q = sc.peek_at(i);
                    ++i;
                    need(i + 1);
                    while (sc.peek_at(i) != q) {
                        ++i;
                        need(i + 1);
                    }
                }
                ++i;
                need(i + 1);
            }
            sc.advance(i + 1);
            return is_row ? 1 : 0;
        }
        ++i;  // '='
        need(i + 1);
        char q = sc.peek_at(i);
        if (q != '"' && q != '\'') {
            attr_syntax_ok = false;
            continue;
        }
        ++i;
        std::size_t vstart = i;
        while (true) {
            need(i + 1);
            if (sc.peek_at(i) == q) break;
            ++i;
        }
        std::string value;
        value.reserve(i - vstart);
        for (std::size_t k = vstart; k < i; ++k) value += sc.peek_at(k);
        ++i;
        attrs.push_back(RawAttr{std::move(aname), std::move(value)});
    }
}

const std::string* find_attr(const std::vector<RawAttr>& attrs, std::string_view name) {
    for (const RawAttr& a : attrs)
        if (a.name == name) return &a.value;
    return nullptr;
}

}  // namespace

ParseStats parse_posts_stream(std::istream& xml, const std::function<void(Post&&)>& sink) {
    StreamScanner sc(xml);
    ParseStats stats;
    std::vector<RawAttr> attrs;
    bool seen_markup = false;
    std::string decoded;

    while (true) {
        // find next '<'
        std::size_t i = 0;
        bool found = false;
        while (!found) {
            if (!sc.ensure(i + 1)) break;
            char c = sc.peek_at(i);
            if (c == '<') {
                found = true;
                break;
            }
            if (!seen_markup && !is_ws(c))
                throw ParseError("input does not look like XML", sc.offset() + i);
            ++i;
        }
        sc.advance(i);
        sc.compact();
        if (!found) break;
        seen_markup = true;

        bool syntax_ok = true;
        if (scan_element(sc, attrs, syntax_ok) != 1) continue;

        ++stats.rows_total;
        if (!syntax_ok) {
            ++stats.rows_skipped;
            ++stats.rows_skipped_malformed;
            continue;
        }

        Post post;
        const std::string* id = find_attr(attrs, "Id");
        const std::string* created = find_attr(attrs, "CreationDate");
        bool ok = id && created;
        if (ok) {
            auto [p, ec] = std::from_chars(id->data(), id->data() + id->size(), post.id);
            ok = ec == std::errc() && p == id->data() + id->size() && post.id > 0;
        }
        if (ok) {
            auto ts = parse_timestamp(*created);
            ok = ts.has_value();
            if (ok) post.creation_date = *ts;
        }
        if (!ok) {
            ++stats.rows_skipped;
            ++stats.rows_skipped_malformed;
            continue;
        }

        post.post_type = 0;
        if (const std::string* pt = find_attr(attrs, "PostTypeId")) {
            std::from_chars(pt->data(), pt->data() + pt->size(), post.post_type);
        }
        if (post.post_type != 1 && post.post_type != 2) {
            ++stats.rows_skipped;
            ++stats.rows_dropped_type;
            continue;
        }

        if (const std::string* body = find_attr(attrs, "Body")) {
            if (xml_entity_decode(*body, decoded) >= 0) {
                ++stats.rows_skipped;
                ++stats.rows_skipped_malformed;
                continue;
            }
            post.body = decoded;
        }
        if (const std::string* title = find_attr(attrs, "Title")) {
            if (xml_entity_decode(*title, decoded) >= 0) {
                ++stats.rows_skipped;
                ++stats.rows_skipped_malformed;
                continue;
            }
            post.title = decoded;
        }
        if (const std::string* tags = find_attr(attrs, "Tags")) {
            if (xml_entity_decode(*tags, decoded) >= 0) {
                ++stats.rows_skipped;
                ++stats.rows_skipped_malformed;
                continue;
            }
            post.tags = split_tags(decoded);
        }

        ++stats.rows_emitted;
        sink(std::move(post));
    }
    return stats;
}

// ---------------------------------------------------------------------
// NDJSON events, with streaming gzip support
// ---------------------------------------------------------------------
namespace {

class GzipLineSource {
public:
    GzipLineSource(std::istream& in, std::string_view name) : in_(in), name_(name) {
        std::memset(&strm_, 0, sizeof strm_);
        if (inflateInit2(&strm_, 15 + 32) != Z_OK)  // auto gzip header detection
            throw std::runtime_error("inflateInit failed");
    }
    ~GzipLineSource() { inflateEnd(&strm_); }

    bool next_line(std::string& line) {
        while (true) {
            std::size_t nl = pending_.find('\n');
            if (nl != std::string::npos) {
                line.assign(pending_, 0, nl);
                pending_.erase(0, nl + 1);
                return true;
            }
            if (finished_) {
                if (pending_.empty()) return false;
                line = std::move(pending_);
                pending_.clear();
                return true;
            }
            decompress_more();
        }
    }

private:
    void decompress_more() {
        if (strm_.avail_in == 0) {
            in_.read(inbuf_, sizeof inbuf_);
            std::size_t got = static_cast<std::size_t>(in_.gcount());
            if (got == 0) {
                if (!stream_complete_)
                    throw ParseError("truncated gzip stream in " + name_, total_in_);
                finished_ = true;
                return;
            }
            total_in_ += got;
            strm_.next_in = reinterpret_cast<Bytef*>(inbuf_);
            strm_.avail_in = static_cast<uInt>(got);
        }
        char out[64 * 1024];
        strm_.next_out = reinterpret_cast<Bytef*>(out);
        strm_.avail_out = sizeof out;
        int rc = inflate(&strm_, Z_NO_FLUSH);
        if (rc == Z_STREAM_END) {
            stream_complete_ = true;
            // gharchive files may concatenate gzip members
            if (strm_.avail_in > 0) {
                Bytef* next = strm_.next_in;
                uInt avail = strm_.avail_in;
                inflateReset2(&strm_, 15 + 32);
                strm_.next_in = next;
                strm_.avail_in = avail;
                stream_complete_ = false;
            }
        } else if (rc != Z_OK && rc != Z_BUF_ERROR) {
            throw ParseError("corrupt gzip stream in " + name_ + ": "
                                 + (strm_.msg ? strm_.msg : "inflate error"),
                             total_in_);
        } else {
            stream_complete_ = false;
        }
        pending_.append(out, sizeof out - strm_.avail_out);
    }

    std::istream& in_;
    std::string name_;
    z_stream strm_;
    char inbuf_[64 * 1024];
    std::string pending_;
    std::uint64_t total_in_ = 0;
    bool finished_ = false;
    bool stream_complete_ = true;  // empty input counts as complete
};

const nlohmann::json* probe_path(const nlohmann::json& doc,
                                 std::initializer_list<std::string_view> path) {
    const nlohmann::json* cur = &doc;
    for (std::string_view key : path) {
        if (!cur->is_object()) return nullptr;
        auto it = cur->find(key);
        if (it == cur->end()) return nullptr;
        cur = &*it;
    }
    return cur;
}

bool parse_event_line(const std::string& line, Event& ev) {
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return false;

    auto type_it = doc.find("type");
    if (type_it == doc.end() || !type_it->is_string()) return false;
    ev.event_type = type_it->get<std::string>();
    if (ev.event_type.empty()) return false;

    auto created_it = doc.find("created_at");
    if (created_it == doc.end() || !created_it->is_string()) return false;
    auto ts = parse_timestamp(created_it->get<std::string>());
    if (!ts) return false;
    ev.created_at = *ts;

    ev.id.clear();
    if (auto it = doc.find("id"); it != doc.end()) {
        if (it->is_string()) ev.id = it->get<std::string>();
        else if (it->is_number_integer()) ev.id = std::to_string(it->get<std::int64_t>());
    }

    ev.repository_language.reset();
    for (auto path : {std::initializer_list<std::string_view>{"repository", "language"},
                      {"repo", "language"},
                      {"payload", "repository", "language"}}) {
        const nlohmann::json* v = probe_path(doc, path);
        if (v && v->is_string()) {
            std::string lang = v->get<std::string>();
            if (!lang.empty()) {
                ev.repository_language = std::move(lang);
                break;
            }
        }
    }
    return true;
}

}  // namespace

ParseStats parse_events_stream(std::istream& in, bool decompress,
                               const std::function<void(Event&&)>& sink,
                               std::string_view source_name) {
    ParseStats stats;
    std::string line;
    Event ev;

    auto handle = [&](const std::string& l) {
        if (l.empty() || (l.size() == 1 && l[0] == '\r')) return;
        ++stats.rows_total;
        if (parse_event_line(l, ev)) {
            ++stats.rows_emitted;
            sink(std::move(ev));
            ev = Event{};
        } else {
            ++stats.rows_skipped;
            ++stats.rows_skipped_malformed;
        }
    };

    if (decompress) {
        GzipLineSource src(in, source_name);
        while (src.next_line(line)) handle(line);
    } else {
        while (std::getline(in, line)) handle(line);
    }
    return stats;
}

// ---------------------------------------------------------------------
// record store
// ---------------------------------------------------------------------
namespace {

constexpr std::string_view kRecordsFile = "records.ndjson";
constexpr std::string_view kManifestFile = "manifest.json";
constexpr std::string_view kLockFile = ".lock";

std::string kind_name(RecordStore::Kind k) {
    return k == RecordStore::Kind::posts ? "posts" : "events";
}

nlohmann::json post_to_json(const Post& p) {
    nlohmann::json j{{"id", p.id},
                     {"post_type", p.post_type},
                     {"creation_date", format_timestamp(p.creation_date)},
                     {"tags", p.tags},
                     {"body", p.body}};
    if (p.title) j["title"] = *p.title;
    return j;
}

Post post_from_json(const nlohmann::json& j) {
    Post p;
    p.id = j.at("id").get<std::int64_t>();
    p.post_type = j.at("post_type").get<int>();
    p.creation_date = *parse_timestamp(j.at("creation_date").get<std::string>());
    p.tags = j.at("tags").get<std::vector<std::string>>();
    p.body = j.value("body", "");
    if (j.contains("title")) p.title = j["title"].get<std::string>();
    return p;
}

nlohmann::json event_to_json(const Event& e) {
    nlohmann::json j{{"id", e.id},
                     {"event_type", e.event_type},
                     {"created_at", format_timestamp(e.created_at)}};
    if (e.repository_language) j["repository_language"] = *e.repository_language;
    return j;
}

Event event_from_json(const nlohmann::json& j) {
    Event e;
    e.id = j.value("id", "");
    e.event_type = j.at("event_type").get<std::string>();
    e.created_at = *parse_timestamp(j.at("created_at").get<std::string>());
    if (j.contains("repository_language"))
        e.repository_language = j["repository_language"].get<std::string>();
    return e;
}

// drop a partial trailing line left by an interrupted writer
void truncate_partial_tail(const std::filesystem::path& file) {
    std::error_code ec;
    auto size = std::filesystem::file_size(file, ec);
    if (ec || size == 0) return;
    std::ifstream in(file, std::ios::binary);
    in.seekg(-1, std::ios::end);
    char last = 0;
    in.get(last);
    if (last == '\n') return;
    // scan backwards in blocks for the final newline
    std::uint64_t pos = size;
    constexpr std::uint64_t kBlock = 64 * 1024;
    char buf[kBlock];
    while (pos > 0) {
        std::uint64_t n = std::min<std::uint64_t>(kBlock, pos);
        in.seekg(static_cast<std::streamoff>(pos - n));
        in.read(buf, static_cast<std::streamsize>(n));
        for (std::uint64_t i = n; i > 0; --i) {
            if (buf[i - 1] == '\n') {
                std::filesystem::resize_file(file, pos - n + i);
                return;
            }
        }
        pos -= n;
    }
    std::filesystem::resize_file(file, 0);
}

template <typename Fn>
std::uint64_t for_each_line(const std::filesystem::path& file, Fn&& fn) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return 0;
    std::string line;
    std::uint64_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        fn(line);
        ++n;
    }
    return n;
}

}  // namespace

RecordStore RecordStore::open(const std::filesystem::path& root, Kind kind) {
    std::filesystem::create_directories(root);
    RecordStore store;
    store.root_ = root;
    store.kind_ = kind;

    std::filesystem::path lock = root / kLockFile;
    store.lock_fd_ = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (store.lock_fd_ < 0)
        throw StoreLockError("record store at " + root.string()
                             + " is locked by another writer (remove " + lock.string()
                             + " if that writer is gone)");

    std::filesystem::path manifest = root / kManifestFile;
    if (std::filesystem::exists(manifest)) {
        std::ifstream in(manifest);
        nlohmann::json doc;
        in >> doc;
        std::string k = doc.value("kind", kind_name(kind));
        if (k != kind_name(kind)) {
            ::close(store.lock_fd_);
            store.lock_fd_ = -1;
            std::filesystem::remove(lock);
            throw std::runtime_error("store at " + root.string() + " holds " + k + ", not "
                                     + kind_name(kind));
        }
        store.record_count_ = doc.value("record_count", 0ULL);
        if (doc.contains("sources")) {
            for (const auto& s : doc["sources"]) {
                SourceEntry e;
                e.name = s.value("name", "");
                e.crc32 = s.value("crc32", 0u);
                e.records = s.value("records", 0ULL);
                store.sources_.push_back(std::move(e));
            }
        }
    }
    truncate_partial_tail(root / kRecordsFile);
    return store;
}

RecordStore::RecordStore(RecordStore&& other) noexcept { *this = std::move(other); }

RecordStore& RecordStore::operator=(RecordStore&& other) noexcept {
    if (this != &other) {
        this->~RecordStore();
        root_ = std::move(other.root_);
        kind_ = other.kind_;
        record_count_ = other.record_count_;
        sources_ = std::move(other.sources_);
        lock_fd_ = other.lock_fd_;
        other.lock_fd_ = -1;
        other.root_.clear();
    }
    return *this;
}

RecordStore::~RecordStore() {
    if (lock_fd_ >= 0) {
        ::close(lock_fd_);
        std::error_code ec;
        std::filesystem::remove(root_ / kLockFile, ec);
        lock_fd_ = -1;
    }
}

void RecordStore::commit_manifest() {
    nlohmann::json doc;
    doc["kind"] = kind_name(kind_);
    doc["record_count"] = record_count_;
    auto& srcs = doc["sources"] = nlohmann::json::array();
    for (const SourceEntry& s : sources_)
        srcs.push_back({{"name", s.name}, {"crc32", s.crc32}, {"records", s.records}});

    std::filesystem::path tmp = root_ / (std::string(kManifestFile) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << doc.dump(1) << "\n";
        if (!out) throw std::runtime_error("cannot write manifest at " + tmp.string());
    }
    std::filesystem::rename(tmp, root_ / kManifestFile);
}

namespace {

template <typename Rec, typename ToJson>
std::uint64_t append_records(const std::filesystem::path& root, const std::vector<Rec>& records,
                             ToJson&& to_json) {
    std::ofstream out(root / kRecordsFile, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot open records file under " + root.string());
    for (const Rec& r : records) out << to_json(r).dump() << "\n";
    out.flush();
    if (!out) throw std::runtime_error("write failed under " + root.string());
    return records.size();
}

}  // namespace

std::uint64_t RecordStore::append_posts(const std::vector<Post>& posts,
                                        std::string_view source_name, std::uint32_t source_crc) {
    if (kind_ != Kind::posts) throw std::runtime_error("cannot append posts to an events store");
    std::uint64_t n = append_records(root_, posts, post_to_json);
    record_count_ += n;
    if (!source_name.empty()) sources_.push_back({std::string(source_name), source_crc, n});
    commit_manifest();
    return n;
}

std::uint64_t RecordStore::append_events(const std::vector<Event>& events,
                                         std::string_view source_name, std::uint32_t source_crc) {
    if (kind_ != Kind::events) throw std::runtime_error("cannot append events to a posts store");
    std::uint64_t n = append_records(root_, events, event_to_json);
    record_count_ += n;
    if (!source_name.empty()) sources_.push_back({std::string(source_name), source_crc, n});
    commit_manifest();
    return n;
}

std::uint64_t RecordStore::for_each_post(const std::filesystem::path& root,
                                         const std::function<void(Post&&)>& cb) {
    return for_each_line(root / kRecordsFile, [&](const std::string& line) {
        cb(post_from_json(nlohmann::json::parse(line)));
    });
}

std::uint64_t RecordStore::for_each_event(const std::filesystem::path& root,
                                          const std::function<void(Event&&)>& cb) {
    return for_each_line(root / kRecordsFile, [&](const std::string& line) {
        cb(event_from_json(nlohmann::json::parse(line)));
    });
}

std::uint32_t crc32_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    char buf[64 * 1024];
    uLong crc = ::crc32(0L, Z_NULL, 0);
    while (in) {
        in.read(buf, sizeof buf);
        std::streamsize got = in.gcount();
        if (got > 0) crc = ::crc32(crc, reinterpret_cast<const Bytef*>(buf), static_cast<uInt>(got));
    }
    return static_cast<std::uint32_t>(crc);
}

}  // namespace techtrend
