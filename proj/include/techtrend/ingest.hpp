#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "techtrend/records.hpp"

namespace techtrend {

/// Per-source parse accounting. Conservation: rows_emitted + rows_skipped
/// == rows_total, where rows_skipped covers malformed rows and posts of
/// non-question/answer types.
struct ParseStats {
    std::uint64_t rows_total = 0;
    std::uint64_t rows_emitted = 0;
    std::uint64_t rows_skipped = 0;
    std::uint64_t rows_skipped_malformed = 0;
    std::uint64_t rows_dropped_type = 0;
};

/// Streams a StackExchange Posts.xml dump: one Post per well-formed <row>
/// element, in document order, O(1) memory in the number of rows.
/// Rows missing Id or CreationDate, or with broken attribute syntax, are
/// skipped and counted; container-level corruption (EOF inside an element,
/// input that is not XML) throws ParseError with a byte offset.
ParseStats parse_posts_stream(std::istream& xml, const std::function<void(Post&&)>& sink);

/// Streams newline-delimited JSON events, optionally gzip-compressed
/// (multi-member gzip files are handled). Undecodable lines are skipped
/// and counted; a truncated gzip stream throws ParseError naming the
/// source.
ParseStats parse_events_stream(std::istream& in, bool decompress,
                               const std::function<void(Event&&)>& sink,
                               std::string_view source_name = "<stream>");

/// repository_language extraction order: repository.language, repo.language,
/// payload.repository.language; first non-null non-empty string wins.
std::int64_t xml_entity_decode(std::string_view in, std::string& out);  // returns -1 ok, else error pos

/// Splits a decoded "<t1><t2>" tag attribute into lowercase tags.
std::vector<std::string> split_tags(std::string_view decoded);

/// Append-only newline-delimited record store with a JSON manifest that
/// tracks record counts and source-file checksums. One writer at a time
/// (lock file); a partial trailing line left by a crashed writer is
/// truncated on the next open.
class RecordStore {
public:
    enum class Kind { posts, events };

    /// Opens (creating if needed) a store for writing. Throws
    /// StoreLockError when another writer holds the lock.
    static RecordStore open(const std::filesystem::path& root, Kind kind);

    RecordStore(RecordStore&&) noexcept;
    RecordStore& operator=(RecordStore&&) noexcept;
    RecordStore(const RecordStore&) = delete;
    RecordStore& operator=(const RecordStore&) = delete;
    ~RecordStore();

    Kind kind() const { return kind_; }
    std::uint64_t record_count() const { return record_count_; }
    const std::filesystem::path& root() const { return root_; }

    /// Appends a batch and commits the manifest (write-temp-then-rename).
    /// Returns the number of records appended.
    std::uint64_t append_posts(const std::vector<Post>& posts,
                               std::string_view source_name = "", std::uint32_t source_crc = 0);
    std::uint64_t append_events(const std::vector<Event>& events,
                                std::string_view source_name = "", std::uint32_t source_crc = 0);

    /// Reader side; usable without the writer lock.
    static std::uint64_t for_each_post(const std::filesystem::path& root,
                                       const std::function<void(Post&&)>& cb);
    static std::uint64_t for_each_event(const std::filesystem::path& root,
                                        const std::function<void(Event&&)>& cb);

private:
    RecordStore() = default;

    void commit_manifest();

    std::filesystem::path root_;
    Kind kind_ = Kind::posts;
    std::uint64_t record_count_ = 0;
    struct SourceEntry {
        std::string name;
        std::uint32_t crc32 = 0;
        std::uint64_t records = 0;
    };
    std::vector<SourceEntry> sources_;
    int lock_fd_ = -1;
};

/// CRC-32 (zlib polynomial) of a whole file, streamed.
std::uint32_t crc32_file(const std::filesystem::path& path);

}  // namespace techtrend
