#include "sphm/transcript.hpp"

#include <bit>
#include <ostream>
#include <sstream>

namespace sphm {

int designation_bits(int n) {
    return n <= 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
}

std::int64_t answer_cost(QueryKind kind, Answer answer, int n) {
    switch (kind) {
        case QueryKind::CrawlerScreen:
            return answer == Answer::Designate ? designation_bits(n) : 1;
        case QueryKind::DiverMain: return 2;
        case QueryKind::Backtrack: return 1;
    }
    return 0;
}

bool answer_legal(QueryKind kind, Answer answer) {
    switch (kind) {
        case QueryKind::CrawlerScreen:
            return answer == Answer::Pass || answer == Answer::Designate;
        case QueryKind::DiverMain:
            return answer == Answer::Pass || answer == Answer::PickCurrent ||
                   answer == Answer::Designate;
        case QueryKind::Backtrack:
            return answer == Answer::Yes || answer == Answer::No;
    }
    return false;
}

namespace {

const char* kind_name(QueryKind kind) {
    switch (kind) {
        case QueryKind::CrawlerScreen: return "crawler-screen";
        case QueryKind::DiverMain: return "diver-main";
        case QueryKind::Backtrack: return "backtrack";
    }
    return "?";
}

std::string answer_text(const QueryEvent& event) {
    switch (event.answer) {
        case Answer::Pass: return "pass";
        case Answer::PickCurrent: return "pick-current";
        case Answer::Designate: return "designate=" + resource_label(event.designated);
        case Answer::Yes: return "yes";
        case Answer::No: return "no";
    }
    return "?";
}

}  // namespace

void Transcript::record(QueryKind kind, Agent agent, Answer answer, Resource designated) {
    QueryEvent event;
    event.kind = kind;
    event.agent = agent;
    event.answer = answer;
    event.designated = designated;
    event.bits = answer_cost(kind, answer, n_);
    total_bits_ += event.bits;
    events_.push_back(event);
}

std::int64_t crawler_bound(int n) {
    const std::int64_t m = n;
    return m * (m + 1) / 2 + m * designation_bits(n);
}

std::int64_t diver_bound(int n) {
    return std::int64_t{4} * n;
}

TranscriptCheck check_transcript(const Transcript& transcript) {
    const int n = transcript.n();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < transcript.events().size(); ++i) {
        const QueryEvent& event = transcript.events()[i];
        const std::string where = "event " + std::to_string(i + 1) + ": ";
        if (event.agent < 0 || event.agent >= n)
            return {false, where + "agent out of range"};
        if (!answer_legal(event.kind, event.answer))
            return {false, where + "answer '" + answer_text(event) + "' is illegal for a " +
                               kind_name(event.kind) + " query"};
        if (event.answer == Answer::Designate &&
            (event.designated < 0 || event.designated >= n))
            return {false, where + "designated resource out of range"};
        const std::int64_t expected = answer_cost(event.kind, event.answer, n);
        if (event.bits != expected)
            return {false, where + "charged " + std::to_string(event.bits) +
                               " bits, expected " + std::to_string(expected)};
        total += event.bits;
    }
    if (total != transcript.total_bits())
        return {false, "total is " + std::to_string(transcript.total_bits()) +
                           " but events sum to " + std::to_string(total)};
    return {};
}

void write_text(std::ostream& out, const Transcript& transcript) {
    for (const QueryEvent& event : transcript.events()) {
        out << "Q " << agent_label(event.agent) << ' ' << kind_name(event.kind) << '\n';
        out << "A " << agent_label(event.agent) << ' ' << answer_text(event) << ' '
            << event.bits << '\n';
    }
    out << "TOTAL " << transcript.total_bits() << '\n';
}

std::string to_text(const Transcript& transcript) {
    std::ostringstream out;
    write_text(out, transcript);
    return out.str();
}

}  // namespace sphm
