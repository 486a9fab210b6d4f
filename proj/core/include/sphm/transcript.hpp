#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphm/types.hpp"

// Bit-exact accounting of the communication between the protocol and the
// agents. Each query names one agent and one question kind; the answer is
// charged the kind's fixed encoding width:
//
//   crawler-screen  pass 1 bit; designate ceil(log2 n) bits (naming one of
//                   n resources)
//   diver-main      2 bits: pass / pick-current / designate. The designated
//                   resource is recorded but not charged: it terminates the
//                   protocol and the center can reconstruct it.
//   backtrack       yes / no, 1 bit
//
// Designation width is bit_width(n - 1), zero when n == 1.

namespace sphm {

enum class QueryKind : std::uint8_t { CrawlerScreen, DiverMain, Backtrack };

enum class Answer : std::uint8_t { Pass, PickCurrent, Designate, Yes, No };

struct QueryEvent {
    QueryKind kind = QueryKind::CrawlerScreen;
    Agent agent = 0;
    Answer answer = Answer::Pass;
    Resource designated = -1;  // only meaningful when answer == Designate
    std::int64_t bits = 0;     // cost charged for the answer

    bool operator==(const QueryEvent&) const = default;
};

// Bits needed to name one of n resources.
int designation_bits(int n);

// Encoding width of `answer` to a query of `kind` in a market of size n.
std::int64_t answer_cost(QueryKind kind, Answer answer, int n);

// True when `answer` is a possible reply to a query of `kind`.
bool answer_legal(QueryKind kind, Answer answer);

class Transcript {
public:
    explicit Transcript(int n) : n_(n) {}

    int n() const { return n_; }
    const std::vector<QueryEvent>& events() const { return events_; }
    std::int64_t total_bits() const { return total_bits_; }

    // Records the event and charges its width; `designated` is required
    // exactly for Designate answers.
    void record(QueryKind kind, Agent agent, Answer answer, Resource designated = -1);

    bool operator==(const Transcript&) const = default;

private:
    int n_ = 0;
    std::vector<QueryEvent> events_;
    std::int64_t total_bits_ = 0;
};

// Worst-case bit totals, exact (not asymptotic).
std::int64_t crawler_bound(int n);  // n(n+1)/2 + n * ceil(log2 n)
std::int64_t diver_bound(int n);    // 4n

struct TranscriptCheck {
    bool ok = true;
    std::string problem;  // first violation, empty when ok
};

// Replays the accounting: every answer must be legal for its kind and
// charged exactly its width, agents and designated resources must be in
// range, and the running total must add up.
TranscriptCheck check_transcript(const Transcript& transcript);

// Text form, one query/answer pair per event:
//   Q <agent> <kind>
//   A <agent> <answer> <bits>
// terminated by `TOTAL <bits>`. Agents are 1-based; a designation prints as
// `designate=<resource>`.
std::string to_text(const Transcript& transcript);
void write_text(std::ostream& out, const Transcript& transcript);

}  // namespace sphm
